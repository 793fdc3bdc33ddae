#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "monomial.hpp"

namespace schurpp {

/// Exact rational scalar, always canonicalized (lowest terms, positive denominator).
using Coefficient = mpq_class;

inline std::string to_string(const Coefficient& c)
{
    return c.get_str();
}

/// Sparse multivariate polynomial over the rationals.
///
/// Terms are kept sorted ascending in graded lexicographic order and no stored
/// coefficient is zero, so structural equality is mathematical equality.
class Polynomial {
public:
    using Term = std::pair<Monomial, Coefficient>;

    Polynomial() = default;

    Polynomial(long c)  // NOLINT(google-explicit-constructor)
    {
        if (c != 0) {
            terms_.emplace_back(Monomial{}, Coefficient(c));
        }
    }

    Polynomial(const Coefficient& c)  // NOLINT(google-explicit-constructor)
    {
        if (c != 0) {
            terms_.emplace_back(Monomial{}, c);
        }
    }

    static Polynomial term(const Monomial& m, const Coefficient& c = 1)
    {
        Polynomial p;
        if (c != 0) {
            p.terms_.emplace_back(m, c);
        }
        return p;
    }

    static Polynomial variable(Var var, unsigned exponent = 1)
    {
        return term(Monomial::of(var, exponent));
    }

    /// Builds a polynomial from arbitrary (possibly repeated, possibly zero) terms.
    static Polynomial from_terms(std::vector<Term> raw)
    {
        std::sort(raw.begin(), raw.end(),
                  [](const Term& a, const Term& b) { return a.first < b.first; });
        Polynomial p;
        for (auto& [m, c] : raw) {
            if (!p.terms_.empty() && p.terms_.back().first == m) {
                p.terms_.back().second += c;
            } else {
                p.terms_.emplace_back(m, std::move(c));
            }
            if (p.terms_.back().second == 0) {
                p.terms_.pop_back();
            }
        }
        return p;
    }

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    /// Leading term in monomial order; requires a nonzero polynomial.
    const Term& leading() const { return terms_.back(); }

    Coefficient coefficient(const Monomial& m) const
    {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                   [](const Term& t, const Monomial& key) { return t.first < key; });
        if (it != terms_.end() && it->first == m) {
            return it->second;
        }
        return 0;
    }

    Coefficient constant_term() const { return coefficient(Monomial{}); }

    unsigned degree() const { return terms_.empty() ? 0 : terms_.back().first.degree(); }

    unsigned x_degree() const
    {
        unsigned d = 0;
        for (const auto& t : terms_) {
            d = std::max(d, t.first.x_degree());
        }
        return d;
    }

    bool uses(Var var) const
    {
        return std::any_of(terms_.begin(), terms_.end(),
                           [var](const Term& t) { return t.first[var] > 0; });
    }

    /// Keeps the terms whose x-degree is at most `bound`.
    Polynomial truncate_x(unsigned bound) const
    {
        Polynomial p;
        for (const auto& t : terms_) {
            if (t.first.x_degree() <= bound) {
                p.terms_.push_back(t);
            }
        }
        return p;
    }

    Polynomial operator-() const
    {
        Polynomial p = *this;
        for (auto& t : p.terms_) {
            t.second = -t.second;
        }
        return p;
    }

    Polynomial& operator+=(const Polynomial& o) { return *this = merge(*this, o, false); }
    Polynomial& operator-=(const Polynomial& o) { return *this = merge(*this, o, true); }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, false); }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, true); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        if (a.size() == 1 || b.size() == 1) {
            const Polynomial& single = a.size() == 1 ? a : b;
            const Polynomial& other = a.size() == 1 ? b : a;
            const auto& [sm, sc] = single.terms_.front();
            Polynomial p;
            p.terms_.reserve(other.size());
            for (const auto& [m, c] : other.terms_) {
                p.terms_.emplace_back(m * sm, c * sc);  // monomial order is multiplicative
            }
            return p;
        }
        std::unordered_map<Monomial, Coefficient, MonomialHash> acc;
        acc.reserve(a.size() * b.size());
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                acc[ma * mb] += ca * cb;
            }
        }
        Polynomial p;
        p.terms_.reserve(acc.size());
        for (auto& [m, c] : acc) {
            if (c != 0) {
                p.terms_.emplace_back(m, std::move(c));
            }
        }
        std::sort(p.terms_.begin(), p.terms_.end(),
                  [](const Term& x, const Term& y) { return x.first < y.first; });
        return p;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

    std::string to_string() const;

private:
    static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract)
    {
        Polynomial p;
        p.terms_.reserve(a.size() + b.size());
        auto ia = a.terms_.begin();
        auto ib = b.terms_.begin();
        while (ia != a.terms_.end() || ib != b.terms_.end()) {
            if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
                p.terms_.push_back(*ia++);
            } else if (ia == a.terms_.end() || ib->first < ia->first) {
                p.terms_.emplace_back(ib->first, subtract ? Coefficient(-ib->second) : ib->second);
                ++ib;
            } else {
                Coefficient c = subtract ? Coefficient(ia->second - ib->second)
                                         : Coefficient(ia->second + ib->second);
                if (c != 0) {
                    p.terms_.emplace_back(ia->first, std::move(c));
                }
                ++ia;
                ++ib;
            }
        }
        return p;
    }

    std::vector<Term> terms_;
};

namespace vars {
inline Polynomial x(int i) { return Polynomial::variable(Var::x(i)); }
inline Polynomial t() { return Polynomial::variable(Var::t()); }
inline Polynomial v() { return Polynomial::variable(Var::v()); }
inline Polynomial q() { return Polynomial::variable(Var::q()); }
/// x_i^e
inline Polynomial x(int i, unsigned e) { return Polynomial::variable(Var::x(i), e); }
inline Polynomial q(unsigned e) { return Polynomial::variable(Var::q(), e); }
} // namespace vars

inline Polynomial pow(Polynomial base, unsigned exponent)
{
    Polynomial result(1);
    while (exponent > 0) {
        if (exponent & 1u) {
            result *= base;
        }
        exponent >>= 1u;
        if (exponent > 0) {
            base *= base;
        }
    }
    return result;
}

/// Product of a sequence of polynomials; the empty product is 1.
template <typename Range>
Polynomial product(const Range& factors)
{
    Polynomial p(1);
    for (const auto& f : factors) {
        p *= f;
    }
    return p;
}

/// Sum of a sequence of polynomials; the empty sum is 0.
template <typename Range>
Polynomial sum(const Range& summands)
{
    Polynomial p;
    for (const auto& s : summands) {
        p += s;
    }
    return p;
}

namespace detail {

inline void append_coefficient(std::string& out, const Coefficient& c, bool is_unit_monomial, bool first)
{
    const bool negative = c < 0;
    Coefficient mag = abs(c);
    if (first) {
        if (negative) {
            out += '-';
        }
    } else {
        out += negative ? " - " : " + ";
    }
    if (mag != 1 || is_unit_monomial) {
        out += mag.get_str();
        if (!is_unit_monomial) {
            out += '*';
        }
    }
}

} // namespace detail

/// Canonical text form: terms ascending in monomial order, e.g. "1 - 3/2*x1*q^2".
inline std::string Polynomial::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        detail::append_coefficient(out, c, m.is_one(), first);
        if (!m.is_one()) {
            out += m.to_string();
        }
        first = false;
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p)
{
    return os << p.to_string();
}

/// Groups terms by their x-monomial, rendering the remaining (t, v, q)
/// coefficient in parentheses when it has several terms: "1 + (t + v)*x1".
inline std::string to_string_by_x(const Polynomial& p)
{
    if (p.is_zero()) {
        return "0";
    }
    std::map<Monomial, std::vector<Polynomial::Term>> groups;
    for (const auto& [m, c] : p.terms()) {
        groups[m.x_part()].emplace_back(m.without_x(), c);
    }
    std::string out;
    bool first = true;
    for (auto& [xm, raw] : groups) {
        Polynomial coeff = Polynomial::from_terms(std::move(raw));
        if (coeff.size() == 1) {
            const auto& [cm, cc] = coeff.terms().front();
            Monomial whole = cm * xm;
            detail::append_coefficient(out, cc, whole.is_one(), first);
            if (!whole.is_one()) {
                out += whole.to_string();
            }
        } else {
            out += first ? "(" : " + (";
            out += coeff.to_string();
            out += ')';
            if (!xm.is_one()) {
                out += '*' + xm.to_string();
            }
        }
        first = false;
    }
    return out;
}

/// Raised when an exact division leaves a remainder. `remainder()` is the
/// partially reduced dividend whose leading term the divisor could not cancel.
class NotDivisible : public Error {
public:
    explicit NotDivisible(Polynomial remainder)
        : Error("polynomial is not divisible; remainder witness: " + remainder.leading().first.to_string()),
          remainder_(std::move(remainder))
    {
    }

    const Polynomial& remainder() const { return remainder_; }

private:
    Polynomial remainder_;
};

/// Returns s with s * divisor == dividend, or throws NotDivisible.
///
/// Repeatedly cancels the leading term of the running dividend. Graded order
/// is a well-order with finite initial segments, so the loop terminates.
inline Polynomial exact_div(const Polynomial& dividend, const Polynomial& divisor)
{
    if (divisor.is_zero()) {
        throw Error("division by the zero polynomial");
    }
    const auto& [lead_m, lead_c] = divisor.leading();
    if (divisor.size() == 1) {
        std::vector<Polynomial::Term> out;
        out.reserve(dividend.size());
        for (const auto& [m, c] : dividend.terms()) {
            if (!lead_m.divides(m)) {
                throw NotDivisible(dividend);
            }
            out.emplace_back(m / lead_m, c / lead_c);
        }
        return Polynomial::from_terms(std::move(out));
    }

    std::map<Monomial, Coefficient> rest;
    for (const auto& [m, c] : dividend.terms()) {
        rest.emplace(m, c);
    }
    std::vector<Polynomial::Term> quotient;
    while (!rest.empty()) {
        auto top = std::prev(rest.end());
        if (!lead_m.divides(top->first)) {
            std::vector<Polynomial::Term> remaining(rest.begin(), rest.end());
            throw NotDivisible(Polynomial::from_terms(std::move(remaining)));
        }
        Monomial qm = top->first / lead_m;
        Coefficient qc = top->second / lead_c;
        for (const auto& [dm, dc] : divisor.terms()) {
            Monomial m = dm * qm;
            auto [it, inserted] = rest.try_emplace(m, 0);
            it->second -= dc * qc;
            if (it->second == 0) {
                rest.erase(it);
            }
        }
        quotient.emplace_back(qm, std::move(qc));
    }
    return Polynomial::from_terms(std::move(quotient));
}

/// Image of `p` under the ring homomorphism sending each variable to its
/// assigned polynomial. Throws UnassignedVariable if `p` uses a variable the
/// assignment does not cover.
inline Polynomial substitute(const Polynomial& p, const std::map<Var, Polynomial>& assignment)
{
    std::map<std::pair<Var, unsigned>, Polynomial> power_cache;
    auto power = [&](Var var, unsigned e) -> const Polynomial& {
        auto key = std::make_pair(var, e);
        auto it = power_cache.find(key);
        if (it == power_cache.end()) {
            it = power_cache.emplace(key, pow(assignment.at(var), e)).first;
        }
        return it->second;
    };

    Polynomial result;
    for (const auto& [m, c] : p.terms()) {
        Polynomial image(c);
        for (int i = 0; i < Var::kCount; ++i) {
            Var var = Var::at(i);
            unsigned e = m[var];
            if (e == 0) {
                continue;
            }
            if (!assignment.contains(var)) {
                throw UnassignedVariable("no value assigned to variable " + var.name());
            }
            image *= power(var, e);
        }
        result += image;
    }
    return result;
}

/// Like substitute, but variables missing from the assignment map to themselves.
inline Polynomial substitute_partial(const Polynomial& p, std::map<Var, Polynomial> assignment)
{
    for (int i = 0; i < Var::kCount; ++i) {
        Var var = Var::at(i);
        if (!assignment.contains(var)) {
            assignment.emplace(var, Polynomial::variable(var));
        }
    }
    return substitute(p, assignment);
}

/// Smallest monomial (in monomial order) where a and b differ, if any.
inline std::optional<Monomial> first_difference(const Polynomial& a, const Polynomial& b)
{
    Polynomial d = a - b;
    if (d.is_zero()) {
        return std::nullopt;
    }
    return d.terms().front().first;
}

} // namespace schurpp
