#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matrix.hpp"
#include "partition.hpp"
#include "permutation.hpp"
#include "polynomial.hpp"
#include "schur.hpp"
#include "series.hpp"

namespace schurpp {

/// Parameters an identity check was run at. Unused ones stay empty.
struct IdentityParams {
    std::optional<int> n;
    std::optional<int> m;
    std::optional<int> degree;
    std::string variant;

    friend bool operator==(const IdentityParams&, const IdentityParams&) = default;
};

/// Outcome of one identity check. `witness` is left - right, so the identity
/// holds exactly when the witness is the zero polynomial.
struct IdentityResult {
    std::string name;
    IdentityParams params;
    bool holds = false;
    Polynomial witness;
    double wall_time_ms = 0;

    /// Smallest monomial (in monomial order) where the two sides differ.
    std::optional<Monomial> witness_monomial() const
    {
        if (witness.is_zero()) {
            return std::nullopt;
        }
        return witness.terms().front().first;
    }
};

namespace detail {

class Stopwatch {
public:
    double elapsed_ms() const
    {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline IdentityResult compare(std::string name, IdentityParams params, const Polynomial& left,
                              const Polynomial& right, const Stopwatch& clock)
{
    IdentityResult r{std::move(name), std::move(params), false, left - right, 0};
    r.holds = r.witness.is_zero();
    r.wall_time_ms = clock.elapsed_ms();
    return r;
}

/// Combines sub-checks of one identity: holds iff all hold; the witness is the
/// first failing one.
inline IdentityResult combine(std::string name, IdentityParams params, const std::vector<IdentityResult>& parts,
                              const Stopwatch& clock)
{
    IdentityResult r{std::move(name), std::move(params), true, {}, 0};
    for (const auto& p : parts) {
        if (!p.holds) {
            r.holds = false;
            r.witness = p.witness;
            break;
        }
    }
    r.wall_time_ms = clock.elapsed_ms();
    return r;
}

inline Polynomial x_product(int n, unsigned exponent = 1)
{
    Monomial m;
    for (int i = 1; i <= n; ++i) {
        m.set(Var::x(i), exponent);
    }
    return Polynomial::term(m);
}

/// prod_{i<j} (x_i x_j - 1)
inline Polynomial pair_product_minus_one(int n)
{
    Polynomial p(1);
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            p *= vars::x(i) * vars::x(j) - 1;
        }
    }
    return p;
}

/// prod_{i<j} (x_i x_j - 1)(x_i - x_j)
inline Polynomial cleared_denominator(int n)
{
    return pair_product_minus_one(n) * vandermonde(n);
}

/// V / prod (x_a - x_b) over the given oriented pairs, where V is the
/// Vandermonde in x1..xn. Each pair must be distinct as an unordered pair.
/// Computed as a sign times the product of the untouched Vandermonde factors.
inline Polynomial vandermonde_cofactor(int n, const std::vector<std::pair<int, int>>& oriented)
{
    std::vector<std::vector<bool>> used(n + 1, std::vector<bool>(n + 1, false));
    int sign = 1;
    for (auto [a, b] : oriented) {
        const int lo = std::min(a, b);
        const int hi = std::max(a, b);
        if (used[lo][hi]) {
            throw Error("vandermonde_cofactor: repeated pair");
        }
        used[lo][hi] = true;
        if (a > b) {
            sign = -sign;
        }
    }
    Polynomial p(sign);
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            if (!used[i][j]) {
                p *= vars::x(i) - vars::x(j);
            }
        }
    }
    return p;
}

} // namespace detail

/// One term of a signed sum over S_n x subsets of {1..n}.
struct SignedSubsetTerm {
    Permutation sigma;
    SubsetMask subset;

    /// -1 if i is in the subset, +1 otherwise.
    int epsilon(int i) const { return contains(subset, i) ? -1 : 1; }
    int subset_size() const { return cardinality(subset); }
};

/// sum over sigma in S_n and subsets S accepted by `keep` of
/// sign(term) * prod_i x_{var(i)}^{exponent(term, i)}, where var(i) is i or
/// sigma(i) depending on `index_by_sigma`.
template <typename Keep, typename Sign, typename Exponent>
Polynomial signed_subset_sum(int n, Keep&& keep, Sign&& sign, Exponent&& exponent, bool index_by_sigma = false)
{
    std::vector<Polynomial::Term> raw;
    for_each_permutation(n, [&](const Permutation& sigma) {
        for_each_subset(n, [&](SubsetMask s) {
            SignedSubsetTerm term{sigma, s};
            if (!keep(term)) {
                return;
            }
            Monomial m;
            for (int i = 1; i <= n; ++i) {
                Var var = Var::x(index_by_sigma ? sigma(i) : i);
                m.set(var, m[var] + unsigned(exponent(term, i)));
            }
            raw.emplace_back(m, sign(term));
        });
    });
    return Polynomial::from_terms(std::move(raw));
}

/// Lemma: x1...xn sum_k x_k^{-1}(1-tx_k)(1-vx_k) prod_{i!=k}(1-x_i x_k)/(x_i-x_k)
/// equals (1-t X)(1-v X) for odd n and (1-X)(1-tv X) for even n, X = x1...xn.
/// Both sides are multiplied by the Vandermonde and compared as polynomials.
inline IdentityResult check_lemma1(int n)
{
    if (n < 1) {
        throw Error("lemma1 requires n >= 1");
    }
    detail::Stopwatch clock;
    using namespace vars;
    Polynomial left;
    for (int k = 1; k <= n; ++k) {
        std::vector<std::pair<int, int>> pairs;
        Polynomial term = (1 - t() * x(k)) * (1 - v() * x(k));
        for (int i = 1; i <= n; ++i) {
            if (i != k) {
                pairs.emplace_back(i, k);
                term *= x(i) * (1 - x(i) * x(k));
            }
        }
        left += detail::vandermonde_cofactor(n, pairs) * term;
    }
    const Polynomial all = detail::x_product(n);
    const Polynomial right = n % 2 == 1 ? (1 - t() * all) * (1 - v() * all) : (1 - all) * (1 - t() * v() * all);
    return detail::compare("lemma1", {.n = n}, left, right * vandermonde(n), clock);
}

/// Lemma: for even n, (x1...xn)^2 sum_{k != l} x_k^{-2} x_l^{-1}
/// prod_{i!=k}(1-x_i x_k)/(x_i-x_k) prod_{i!=k,l}(1-x_i x_l)/(x_i-x_l) = 1 - x1...xn.
inline IdentityResult check_lemma2(int n)
{
    if (n < 2) {
        throw Error("lemma2 requires n >= 2");
    }
    if (n % 2 != 0) {
        throw OddN("lemma2 requires even n, got " + std::to_string(n));
    }
    detail::Stopwatch clock;
    using namespace vars;
    Polynomial left;
    for (int k = 1; k <= n; ++k) {
        for (int l = 1; l <= n; ++l) {
            if (l == k) {
                continue;
            }
            std::vector<std::pair<int, int>> pairs;
            Polynomial term = x(l);
            for (int i = 1; i <= n; ++i) {
                if (i == k) {
                    continue;
                }
                pairs.emplace_back(i, k);
                term *= 1 - x(i) * x(k);
                if (i != l) {
                    pairs.emplace_back(i, l);
                    term *= x(i, 2) * (1 - x(i) * x(l));
                }
            }
            left += detail::vandermonde_cofactor(n, pairs) * term;
        }
    }
    const Polynomial right = (1 - detail::x_product(n)) * vandermonde(n);
    return detail::compare("lemma2", {.n = n}, left, right, clock);
}

/// Sum of s_lambda over lambda in {m^n} times prod(1 - x_i) prod_{i<j}(x_i x_j - 1)(x_i - x_j)
/// equals det(x_i^{j-1} - x_i^{m+2n-j}).
inline IdentityResult check_theorem1(int m, int n)
{
    if (m < 0 || n < 1) {
        throw Error("theorem1 requires m >= 0 and n >= 1");
    }
    detail::Stopwatch clock;
    using namespace vars;
    Polynomial left = schur_sum(m, n, PartitionFilter::All) * detail::cleared_denominator(n);
    for (int i = 1; i <= n; ++i) {
        left *= 1 - x(i);
    }
    const Polynomial right = determinant(PolyMatrix::generate(n, [&](int i, int j) {
        return x(i, unsigned(j - 1)) - x(i, unsigned(m + 2 * n - j));
    }));
    return detail::compare("thm1", {.n = n, .m = m}, left, right, clock);
}

namespace detail {

inline void require_theorem2_params(int m, int n)
{
    if (n < 1 || m < 0) {
        throw Error("theorem2 requires m >= 2 and n >= 1");
    }
    if (m % 2 != 0) {
        throw OddM("theorem2 requires even m, got " + std::to_string(m));
    }
    if (m < 2) {
        throw Error("theorem2 requires m >= 2");
    }
}

inline void require_theorem3_params(int m, int n)
{
    if (m < 0 || n < 1) {
        throw Error("theorem3 requires m >= 0 and n >= 2");
    }
    if (n % 2 != 0) {
        throw OddN("theorem3 requires even n, got " + std::to_string(n));
    }
}

inline std::vector<int> shifted_exponents(const Partition& lambda, int n)
{
    std::vector<int> e(n);
    for (int j = 1; j <= n; ++j) {
        e[j - 1] = lambda.part(j) + n - j;
    }
    return e;
}

} // namespace detail

/// Cleared form: sum over even lambda of det(x_i^{lambda_j+n-j}) prod(1-x_i^2)
/// prod_{i<j}(x_i x_j - 1) against the signed sum over (sigma, S).
inline IdentityResult check_theorem2_cleared(int m, int n)
{
    detail::require_theorem2_params(m, n);
    detail::Stopwatch clock;
    using namespace vars;
    Polynomial alternants;
    for (const auto& lambda : partitions_in_box(m, n, PartitionFilter::EvenParts)) {
        alternants += alternant(detail::shifted_exponents(lambda, n));
    }
    Polynomial left = alternants * detail::pair_product_minus_one(n);
    for (int i = 1; i <= n; ++i) {
        left *= 1 - x(i, 2);
    }
    const Polynomial right = signed_subset_sum(
        n, [](const SignedSubsetTerm&) { return true; },
        [](const SignedSubsetTerm& s) { return (s.sigma.inversions() + s.subset_size()) % 2 == 0 ? 1 : -1; },
        [&](const SignedSubsetTerm& s, int i) {
            return contains(s.subset, i) ? m + 2 * n + 1 - s.sigma(i) : s.sigma(i) - 1;
        });
    return detail::compare("thm2-cleared", {.n = n, .m = m}, left, right, clock);
}

/// Quotient form, cross-multiplied: sum over even lambda of s_lambda times
/// prod(1-x_i^2) prod_{i<j}(x_i x_j - 1)(x_i - x_j) = det(x_i^{j-1} - x_i^{m+2n+1-j}).
inline IdentityResult check_theorem2_quotient(int m, int n)
{
    detail::require_theorem2_params(m, n);
    detail::Stopwatch clock;
    using namespace vars;
    Polynomial left = schur_sum(m, n, PartitionFilter::EvenParts) * detail::cleared_denominator(n);
    for (int i = 1; i <= n; ++i) {
        left *= 1 - x(i, 2);
    }
    const Polynomial right = determinant(PolyMatrix::generate(n, [&](int i, int j) {
        return x(i, unsigned(j - 1)) - x(i, unsigned(m + 2 * n + 1 - j));
    }));
    return detail::compare("thm2-quotient", {.n = n, .m = m}, left, right, clock);
}

inline IdentityResult check_theorem2(int m, int n)
{
    detail::require_theorem2_params(m, n);
    detail::Stopwatch clock;
    return detail::combine("thm2", {.n = n, .m = m}, {check_theorem2_cleared(m, n), check_theorem2_quotient(m, n)},
                           clock);
}

/// Cleared form: sum over lambda with even columns of the alternant times
/// prod_{i<j}(x_i x_j - 1) against the signed sum over sigma and even-sized S.
inline IdentityResult check_theorem3_cleared(int m, int n)
{
    detail::require_theorem3_params(m, n);
    detail::Stopwatch clock;
    Polynomial alternants;
    for (const auto& lambda : partitions_in_box(m, n, PartitionFilter::EvenConjugate)) {
        alternants += alternant(detail::shifted_exponents(lambda, n));
    }
    const Polynomial left = alternants * detail::pair_product_minus_one(n);
    const Polynomial right = signed_subset_sum(
        n, [](const SignedSubsetTerm& s) { return s.subset_size() % 2 == 0; },
        [](const SignedSubsetTerm& s) { return s.sigma.sign(); },
        [&](const SignedSubsetTerm& s, int i) {
            return contains(s.subset, i) ? m + 2 * n - 1 - s.sigma(i) : s.sigma(i) - 1;
        });
    return detail::compare("thm3-cleared", {.n = n, .m = m}, left, right, clock);
}

/// Quotient form with the factor 1/2 cleared: 2 * (sum over even-column lambda
/// of s_lambda) * prod_{i<j}(x_i x_j - 1)(x_i - x_j) = det_minus + det_plus.
inline IdentityResult check_theorem3_quotient(int m, int n)
{
    detail::require_theorem3_params(m, n);
    detail::Stopwatch clock;
    using namespace vars;
    const Polynomial left = 2 * schur_sum(m, n, PartitionFilter::EvenConjugate) * detail::cleared_denominator(n);
    const auto entry = [&](int sign) {
        return PolyMatrix::generate(n, [&, sign](int i, int j) {
            return x(i, unsigned(j - 1)) + sign * x(i, unsigned(m + 2 * n - 1 - j));
        });
    };
    const Polynomial right = determinant(entry(-1)) + determinant(entry(+1));
    return detail::compare("thm3-quotient", {.n = n, .m = m}, left, right, clock);
}

inline IdentityResult check_theorem3(int m, int n)
{
    detail::require_theorem3_params(m, n);
    detail::Stopwatch clock;
    return detail::combine("thm3", {.n = n, .m = m}, {check_theorem3_cleared(m, n), check_theorem3_quotient(m, n)},
                           clock);
}

/// Left side of the t,v-weighted Schur sum identity: sum of f_lambda(t,v)
/// s_lambda(x1..xn) over |lambda| <= degree, as a series truncated at that degree.
inline TruncatedSeries weighted_schur_series(int n, int degree)
{
    Polynomial total;
    for (const auto& lambda : partitions_up_to_size(degree, n)) {
        total += f_poly(lambda) * schur_bialternant(lambda, n);
    }
    return {total, unsigned(degree)};
}

/// prod_i 1/((1 - t x_i)(1 - v x_i)) prod_{i<j} 1/(1 - x_i x_j) up to x-degree `degree`.
inline TruncatedSeries weighted_schur_product(int n, int degree)
{
    using namespace vars;
    const auto bound = unsigned(degree);
    TruncatedSeries rhs(Polynomial(1), bound);
    for (int i = 1; i <= n; ++i) {
        rhs *= geometric_expand(t() * x(i), bound);
        rhs *= geometric_expand(v() * x(i), bound);
    }
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            rhs *= geometric_expand(x(i) * x(j), bound);
        }
    }
    return rhs;
}

inline IdentityResult check_theorem4(int n, int degree)
{
    if (n < 1 || degree < 0) {
        throw Error("theorem4 requires n >= 1 and D >= 0");
    }
    detail::Stopwatch clock;
    return detail::compare("thm4", {.n = n, .degree = degree}, weighted_schur_series(n, degree).body(),
                           weighted_schur_product(n, degree).body(), clock);
}

enum class Littlewood { Unrestricted, EvenParts, EvenConjugate };

inline std::string to_string(Littlewood which)
{
    switch (which) {
    case Littlewood::Unrestricted:
        return "1.5";
    case Littlewood::EvenParts:
        return "1.6";
    case Littlewood::EvenConjugate:
        return "1.7";
    }
    return "?";
}

/// Filtered Schur sums against their products: all lambda, even lambda and
/// lambda with even conjugate, each up to x-degree `degree`.
inline IdentityResult check_littlewood(int n, int degree, Littlewood which)
{
    if (n < 1 || degree < 0) {
        throw Error("littlewood requires n >= 1 and D >= 0");
    }
    detail::Stopwatch clock;
    using namespace vars;
    const auto bound = unsigned(degree);
    PartitionFilter filter = PartitionFilter::All;
    TruncatedSeries rhs(Polynomial(1), bound);
    for (int i = 1; i <= n; ++i) {
        if (which == Littlewood::Unrestricted) {
            rhs *= geometric_expand(x(i), bound);
        } else if (which == Littlewood::EvenParts) {
            rhs *= geometric_expand(x(i, 2), bound);
        }
        for (int j = i + 1; j <= n; ++j) {
            rhs *= geometric_expand(x(i) * x(j), bound);
        }
    }
    if (which == Littlewood::EvenParts) {
        filter = PartitionFilter::EvenParts;
    } else if (which == Littlewood::EvenConjugate) {
        filter = PartitionFilter::EvenConjugate;
    }
    Polynomial lhs;
    for (const auto& lambda : partitions_up_to_size(degree, n, filter)) {
        lhs += schur_bialternant(lambda, n);
    }
    return detail::compare("littlewood", {.n = n, .degree = degree, .variant = to_string(which)},
                           TruncatedSeries(lhs, bound).body(), rhs.body(), clock);
}

enum class Vanishing { Theorem2, Theorem3 };

/// The two alternating sums that vanish identically:
///   Theorem2: sum_{S, sigma} (-1)^{inv+|S|} prod_{S} x_i^{m+2n+1-sigma(i)} prod_{not S} x_i^{m+sigma(i)+1},
///             which is also det(x_i^{m+j+1} - x_i^{m+2n+1-j});
///   Theorem3: sum_{|S| even, sigma} (-1)^{inv} prod_{S} x_i^{m+2n-1-sigma(i)} prod_{not S} x_i^{m+sigma(i)}.
inline IdentityResult check_det_vanishing(int m, int n, Vanishing which)
{
    if (n < 2 || m < 0) {
        throw Error("determinant vanishing requires n >= 2 and m >= 0");
    }
    detail::Stopwatch clock;
    using namespace vars;
    if (which == Vanishing::Theorem2) {
        const Polynomial sum = signed_subset_sum(
            n, [](const SignedSubsetTerm&) { return true; },
            [](const SignedSubsetTerm& s) { return (s.sigma.inversions() + s.subset_size()) % 2 == 0 ? 1 : -1; },
            [&](const SignedSubsetTerm& s, int i) {
                return contains(s.subset, i) ? m + 2 * n + 1 - s.sigma(i) : m + s.sigma(i) + 1;
            });
        const Polynomial det = determinant(PolyMatrix::generate(n, [&](int i, int j) {
            return x(i, unsigned(m + j + 1)) - x(i, unsigned(m + 2 * n + 1 - j));
        }));
        auto r = detail::combine("detvanish", {.n = n, .m = m, .variant = "thm2"},
                                 {detail::compare("", {}, sum, 0, clock), detail::compare("", {}, det, 0, clock)},
                                 clock);
        return r;
    }
    const Polynomial sum = signed_subset_sum(
        n, [](const SignedSubsetTerm& s) { return s.subset_size() % 2 == 0; },
        [](const SignedSubsetTerm& s) { return s.sigma.sign(); },
        [&](const SignedSubsetTerm& s, int i) {
            return contains(s.subset, i) ? m + 2 * n - 1 - s.sigma(i) : m + s.sigma(i);
        });
    return detail::compare("detvanish", {.n = n, .m = m, .variant = "thm3"}, sum, 0, clock);
}

enum class WeylVariant { Minus, Plus, EvenSubsets };

inline std::string to_string(WeylVariant w)
{
    switch (w) {
    case WeylVariant::Minus:
        return "minus";
    case WeylVariant::Plus:
        return "plus";
    case WeylVariant::EvenSubsets:
        return "even_subsets";
    }
    return "?";
}

/// Left side of the B_n denominator identities multiplied by prod x_i^{(2n-1)/2}:
/// the exponent eps_i(2i-2n-1)/2 shifts to i-1 for i outside S and 2n-i for i in S.
inline Polynomial weyl_bn_sum(int n, WeylVariant variant)
{
    return signed_subset_sum(
        n,
        [&](const SignedSubsetTerm& s) { return variant != WeylVariant::EvenSubsets || s.subset_size() % 2 == 0; },
        [&](const SignedSubsetTerm& s) {
            const int exponent = s.sigma.inversions() + (variant == WeylVariant::Minus ? s.subset_size() : 0);
            return exponent % 2 == 0 ? 1 : -1;
        },
        [&](const SignedSubsetTerm& s, int i) { return contains(s.subset, i) ? 2 * n - i : i - 1; },
        /*index_by_sigma=*/true);
}

inline IdentityResult check_weyl_bn(int n, WeylVariant variant)
{
    if (n < 1) {
        throw Error("weyl requires n >= 1");
    }
    detail::Stopwatch clock;
    using namespace vars;
    const Polynomial w = detail::cleared_denominator(n);
    Polynomial minus(1);
    Polynomial plus(1);
    for (int i = 1; i <= n; ++i) {
        minus *= 1 - x(i);
        plus *= 1 + x(i);
    }
    Polynomial left = weyl_bn_sum(n, variant);
    Polynomial right;
    switch (variant) {
    case WeylVariant::Minus:
        right = minus * w;
        break;
    case WeylVariant::Plus:
        right = plus * w;
        break;
    case WeylVariant::EvenSubsets:
        left = 2 * left;
        right = (minus + plus) * w;
        break;
    }
    return detail::compare("weyl", {.n = n, .variant = to_string(variant)}, left, right, clock);
}

/// sum over lambda in {m^n} of f_lambda(t,v) s_lambda(x1..xn). No closed form
/// is known; this is an exploration aid.
inline Polynomial bounded_f_sum(int m, int n)
{
    if (m < 0 || n < 1) {
        throw Error("bounded_f_sum requires m >= 0 and n >= 1");
    }
    Polynomial total;
    for (const auto& lambda : partitions_in_box(m, n)) {
        total += f_poly(lambda) * schur_bialternant(lambda, n);
    }
    return total;
}

/// Tableau sum against the bialternant for one shape.
inline IdentityResult check_schur_oracle(const Partition& lambda, int n)
{
    detail::Stopwatch clock;
    IdentityParams params{.n = n, .variant = lambda.to_string()};
    return detail::compare("schur-oracle", params, schur_ssyt(lambda, n), schur_bialternant(lambda, n), clock);
}

} // namespace schurpp
