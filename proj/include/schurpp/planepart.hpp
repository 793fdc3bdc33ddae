#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "identities.hpp"
#include "partition.hpp"
#include "polynomial.hpp"
#include "schur.hpp"

namespace schurpp {

/// Plane partition stored as its stack heights h(i, j), weakly decreasing
/// along every row and every column.
class PlanePartition {
public:
    PlanePartition(int rows, int cols) : rows_(rows), cols_(cols), heights_(std::size_t(rows) * cols, 0) {}

    PlanePartition(int rows, int cols, std::vector<int> heights)
        : rows_(rows), cols_(cols), heights_(std::move(heights))
    {
        if (heights_.size() != std::size_t(rows) * cols) {
            throw Error("plane partition: wrong number of heights");
        }
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    int operator()(int i, int j) const { return heights_[std::size_t(i - 1) * cols_ + (j - 1)]; }
    int& operator()(int i, int j) { return heights_[std::size_t(i - 1) * cols_ + (j - 1)]; }

    /// Number of lattice points, i.e. the sum of all stack heights.
    int size() const
    {
        int total = 0;
        for (int h : heights_) {
            total += h;
        }
        return total;
    }

    bool is_monotone() const
    {
        for (int i = 1; i <= rows_; ++i) {
            for (int j = 1; j <= cols_; ++j) {
                if ((*this)(i, j) < 0 || (i > 1 && (*this)(i, j) > (*this)(i - 1, j)) ||
                    (j > 1 && (*this)(i, j) > (*this)(i, j - 1))) {
                    return false;
                }
            }
        }
        return true;
    }

    bool is_symmetric() const
    {
        if (rows_ != cols_) {
            return false;
        }
        for (int i = 1; i <= rows_; ++i) {
            for (int j = i + 1; j <= cols_; ++j) {
                if ((*this)(i, j) != (*this)(j, i)) {
                    return false;
                }
            }
        }
        return true;
    }

    /// Points (i, i, k) on the diagonal.
    int diagonal_points() const
    {
        int total = 0;
        for (int i = 1; i <= std::min(rows_, cols_); ++i) {
            total += (*this)(i, i);
        }
        return total;
    }

    /// Orbits {(i,j,k), (j,i,k)} that are occupied; meaningful for symmetric partitions.
    int occupied_orbits() const
    {
        int total = 0;
        for (int i = 1; i <= rows_; ++i) {
            for (int j = i; j <= cols_; ++j) {
                total += (*this)(i, j);
            }
        }
        return total;
    }

    /// Heights as a JSON-style array of row arrays, e.g. "[[2,1],[1,0]]".
    std::string to_json() const
    {
        std::string out = "[";
        for (int i = 1; i <= rows_; ++i) {
            out += i > 1 ? ",[" : "[";
            for (int j = 1; j <= cols_; ++j) {
                out += (j > 1 ? "," : "") + std::to_string((*this)(i, j));
            }
            out += "]";
        }
        return out + "]";
    }

    friend bool operator==(const PlanePartition&, const PlanePartition&) = default;

private:
    int rows_;
    int cols_;
    std::vector<int> heights_;
};

enum class PPConstraint {
    Symmetric,
    ColumnStrict,
    AllRowsEvenLength,
    DiagonalPartsEven,
    DiagonalLevelsEven,
    AllHeightsEven,
};

/// A box of plane partitions (rows x cols, heights at most max_height) with
/// constraints.
struct PPClass {
    int rows = 0;
    int cols = 0;
    int max_height = 0;
    std::set<PPConstraint> constraints;

    bool has(PPConstraint c) const { return constraints.contains(c); }

    /// Symmetric plane partitions in B(n, n, m) with extra constraints.
    static PPClass symmetric(int n, int m, std::set<PPConstraint> extra = {})
    {
        extra.insert(PPConstraint::Symmetric);
        return {n, n, m, std::move(extra)};
    }

    /// Column strict plane partitions with at most n rows, m columns, heights at most n.
    static PPClass column_strict(int n, int m, std::set<PPConstraint> extra = {})
    {
        extra.insert(PPConstraint::ColumnStrict);
        return {n, m, n, std::move(extra)};
    }
};

struct EnumerationCaps {
    int max_rows = 4;
    int max_cols = 4;
    int max_height = 6;
};

/// Checks every constraint of the class, including box bounds and monotonicity.
inline bool satisfies(const PlanePartition& pp, const PPClass& cls)
{
    if (pp.rows() != cls.rows || pp.cols() != cls.cols || !pp.is_monotone()) {
        return false;
    }
    for (int i = 1; i <= pp.rows(); ++i) {
        for (int j = 1; j <= pp.cols(); ++j) {
            if (pp(i, j) > cls.max_height) {
                return false;
            }
        }
    }
    if (cls.has(PPConstraint::Symmetric) && !pp.is_symmetric()) {
        return false;
    }
    if (cls.has(PPConstraint::ColumnStrict)) {
        for (int i = 2; i <= pp.rows(); ++i) {
            for (int j = 1; j <= pp.cols(); ++j) {
                if (pp(i, j) >= 1 && pp(i, j) >= pp(i - 1, j)) {
                    return false;
                }
            }
        }
    }
    if (cls.has(PPConstraint::AllRowsEvenLength)) {
        for (int i = 1; i <= pp.rows(); ++i) {
            int length = 0;
            for (int j = 1; j <= pp.cols(); ++j) {
                length += pp(i, j) > 0;
            }
            if (length % 2 != 0) {
                return false;
            }
        }
    }
    const int diag = std::min(pp.rows(), pp.cols());
    if (cls.has(PPConstraint::DiagonalPartsEven)) {
        for (int i = 1; i <= diag; ++i) {
            if (pp(i, i) % 2 != 0) {
                return false;
            }
        }
    }
    if (cls.has(PPConstraint::DiagonalLevelsEven)) {
        for (int k = 1; k <= cls.max_height; ++k) {
            int count = 0;
            for (int i = 1; i <= diag; ++i) {
                count += pp(i, i) >= k;
            }
            if (count % 2 != 0) {
                return false;
            }
        }
    }
    if (cls.has(PPConstraint::AllHeightsEven)) {
        for (int i = 1; i <= pp.rows(); ++i) {
            for (int j = 1; j <= pp.cols(); ++j) {
                if (pp(i, j) % 2 != 0) {
                    return false;
                }
            }
        }
    }
    return true;
}

inline void check_caps(const PPClass& cls, const EnumerationCaps& caps)
{
    if (cls.rows < 0 || cls.cols < 0 || cls.max_height < 0) {
        throw Error("plane partition box dimensions must be nonnegative");
    }
    if (cls.rows > caps.max_rows || cls.cols > caps.max_cols || cls.max_height > caps.max_height) {
        throw BoxTooLarge("box " + std::to_string(cls.rows) + "x" + std::to_string(cls.cols) + "x" +
                          std::to_string(cls.max_height) + " exceeds caps " + std::to_string(caps.max_rows) + "x" +
                          std::to_string(caps.max_cols) + "x" + std::to_string(caps.max_height));
    }
}

/// Calls fn(pp) for every plane partition of the class, in lexicographic order
/// of the row-major height sequence. Cells are filled row by row; each cell is
/// bounded by its upper and left neighbours, mirrored cells are forced for
/// symmetric classes, and the remaining constraints are checked on completion.
template <typename Fn>
void for_each_plane_partition(const PPClass& cls, Fn&& fn, const EnumerationCaps& caps = {})
{
    check_caps(cls, caps);
    const bool symmetric = cls.has(PPConstraint::Symmetric);
    if (symmetric && cls.rows != cls.cols) {
        return;
    }
    const bool strict = cls.has(PPConstraint::ColumnStrict);
    const bool even_heights = cls.has(PPConstraint::AllHeightsEven);
    const bool even_diagonal = cls.has(PPConstraint::DiagonalPartsEven);
    PlanePartition pp(cls.rows, cls.cols);
    const int cells = cls.rows * cls.cols;

    auto fill = [&](auto&& self, int cell) -> void {
        if (cell == cells) {
            if (satisfies(pp, cls)) {
                fn(static_cast<const PlanePartition&>(pp));
            }
            return;
        }
        const int i = cell / cls.cols + 1;
        const int j = cell % cls.cols + 1;
        int hi = cls.max_height;
        if (i > 1) {
            hi = std::min(hi, pp(i - 1, j));
        }
        if (j > 1) {
            hi = std::min(hi, pp(i, j - 1));
        }
        auto allowed = [&](int h) {
            if (strict && i > 1 && h >= 1 && h >= pp(i - 1, j)) {
                return false;
            }
            if (even_heights && h % 2 != 0) {
                return false;
            }
            if (even_diagonal && i == j && h % 2 != 0) {
                return false;
            }
            return true;
        };
        if (symmetric && j < i) {
            const int h = pp(j, i);
            if (h <= hi && allowed(h)) {
                pp(i, j) = h;
                self(self, cell + 1);
            }
            pp(i, j) = 0;
            return;
        }
        for (int h = 0; h <= hi; ++h) {
            if (allowed(h)) {
                pp(i, j) = h;
                self(self, cell + 1);
            }
        }
        pp(i, j) = 0;
    };
    fill(fill, 0);
}

inline std::vector<PlanePartition> enumerate_pp(const PPClass& cls, const EnumerationCaps& caps = {})
{
    std::vector<PlanePartition> out;
    for_each_plane_partition(cls, [&](const PlanePartition& pp) { out.push_back(pp); }, caps);
    return out;
}

enum class WeightRule { Size, OrbitCount };

inline std::string to_string(WeightRule w)
{
    return w == WeightRule::Size ? "size" : "orbits";
}

/// sum over the class of q^{weight}. OrbitCount requires a symmetric class.
inline Polynomial gf_enumerate(const PPClass& cls, WeightRule weight, const EnumerationCaps& caps = {})
{
    if (weight == WeightRule::OrbitCount && !cls.has(PPConstraint::Symmetric)) {
        throw Error("orbit counting weight requires a symmetric class");
    }
    std::map<int, long> counts;
    for_each_plane_partition(
        cls,
        [&](const PlanePartition& pp) {
            ++counts[weight == WeightRule::Size ? pp.size() : pp.occupied_orbits()];
        },
        caps);
    std::vector<Polynomial::Term> raw;
    for (auto [degree, count] : counts) {
        raw.emplace_back(Monomial::of(Var::q(), unsigned(degree)), Coefficient(count));
    }
    return Polynomial::from_terms(std::move(raw));
}

/// One orbit of B(n,n,m) under swapping the first two coordinates, represented
/// by its point with i <= j.
struct Orbit {
    int i = 0;
    int j = 0;
    int k = 0;

    int size() const { return i == j ? 1 : 2; }
    int height() const { return i + j + k - 2; }

    friend bool operator==(const Orbit&, const Orbit&) = default;
};

/// All orbits of B(n,n,m)/S_2, ordered by height statistic, then level k, then i.
inline std::vector<Orbit> orbits(int n, int m)
{
    if (n < 0 || m < 0) {
        throw Error("orbits requires nonnegative n and m");
    }
    std::vector<Orbit> out;
    for (int k = 1; k <= m; ++k) {
        for (int i = 1; i <= n; ++i) {
            for (int j = i; j <= n; ++j) {
                out.push_back({i, j, k});
            }
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const Orbit& a, const Orbit& b) {
        if (a.height() != b.height()) {
            return a.height() < b.height();
        }
        if (a.k != b.k) {
            return a.k < b.k;
        }
        return a.i < b.i;
    });
    return out;
}

enum class ProductKind {
    MacMahonSym,
    BenderKnuth,
    SymSize,
    OrbitSym,
    SizeEven,
    OrbitEven,
    EvenStacksThm2Cor,
    EvenColumnsThm2Cor,
    Thm3Cor,
    Thm3SSum,
};

inline std::string to_string(ProductKind kind)
{
    switch (kind) {
    case ProductKind::MacMahonSym:
        return "macmahon-sym";
    case ProductKind::BenderKnuth:
        return "bender-knuth";
    case ProductKind::SymSize:
        return "sym-size";
    case ProductKind::OrbitSym:
        return "orbit-sym";
    case ProductKind::SizeEven:
        return "size-even";
    case ProductKind::OrbitEven:
        return "orbit-even";
    case ProductKind::EvenStacksThm2Cor:
        return "even-stacks";
    case ProductKind::EvenColumnsThm2Cor:
        return "even-columns";
    case ProductKind::Thm3Cor:
        return "thm3-cor";
    case ProductKind::Thm3SSum:
        return "thm3-ssum";
    }
    return "?";
}

inline ProductKind parse_product_kind(const std::string& name)
{
    for (auto kind : {ProductKind::MacMahonSym, ProductKind::BenderKnuth, ProductKind::SymSize, ProductKind::OrbitSym,
                      ProductKind::SizeEven, ProductKind::OrbitEven, ProductKind::EvenStacksThm2Cor,
                      ProductKind::EvenColumnsThm2Cor, ProductKind::Thm3Cor, ProductKind::Thm3SSum}) {
        if (to_string(kind) == name) {
            return kind;
        }
    }
    throw ParseError("unknown product kind: " + name);
}

namespace detail {

/// Accumulates prod (1 - q^a) / (1 - q^b) and expands it by one exact division.
class QuotientProduct {
public:
    void factor(int numerator_exponent, int denominator_exponent)
    {
        numerator_ *= one_minus_q(numerator_exponent);
        denominator_ *= one_minus_q(denominator_exponent);
    }

    void multiply(const Polynomial& p) { numerator_ *= p; }

    Polynomial expand() const { return exact_div(numerator_, denominator_); }

private:
    static Polynomial one_minus_q(int e)
    {
        if (e <= 0) {
            throw Error("product factor exponent must be positive");
        }
        return 1 - vars::q(unsigned(e));
    }

    Polynomial numerator_{1};
    Polynomial denominator_{1};
};

} // namespace detail

/// Expands one of the product generating functions exactly. A NotDivisible
/// error means the formula does not produce a polynomial at these parameters.
inline Polynomial product_gf(ProductKind kind, int n, int m)
{
    if (n < 1 || m < 0) {
        throw Error("product_gf requires n >= 1 and m >= 0");
    }
    switch (kind) {
    case ProductKind::SizeEven:
    case ProductKind::OrbitEven:
    case ProductKind::EvenStacksThm2Cor:
    case ProductKind::EvenColumnsThm2Cor:
        if (m % 2 != 0) {
            throw ParityViolation(to_string(kind) + " requires even m, got " + std::to_string(m));
        }
        break;
    case ProductKind::Thm3Cor:
    case ProductKind::Thm3SSum:
        if (n % 2 != 0) {
            throw ParityViolation(to_string(kind) + " requires even n, got " + std::to_string(n));
        }
        if (m < 1) {
            throw Error(to_string(kind) + " requires m >= 1");
        }
        break;
    default:
        break;
    }

    detail::QuotientProduct gf;
    switch (kind) {
    case ProductKind::MacMahonSym:
        for (int i = 1; i <= n; ++i) {
            gf.factor(m + 2 * i - 1, 2 * i - 1);
            for (int j = i + 1; j <= n; ++j) {
                gf.factor(2 * (m + i + j - 1), 2 * (i + j - 1));
            }
        }
        break;
    case ProductKind::BenderKnuth:
        for (int i = 1; i <= n; ++i) {
            for (int j = i; j <= n; ++j) {
                gf.factor(m + i + j - 1, i + j - 1);
            }
        }
        break;
    case ProductKind::SymSize:
        for (const auto& eta : orbits(n, m)) {
            gf.factor(eta.size() * (1 + eta.height()), eta.size() * eta.height());
        }
        break;
    case ProductKind::OrbitSym:
        for (const auto& eta : orbits(n, m)) {
            gf.factor(1 + eta.height(), eta.height());
        }
        break;
    case ProductKind::SizeEven:
        for (const auto& eta : orbits(n, m)) {
            gf.factor(eta.size() * (2 + eta.height()), eta.size() * (1 + eta.height()));
        }
        break;
    case ProductKind::OrbitEven:
        for (const auto& eta : orbits(n, m)) {
            gf.factor(2 + eta.height(), 1 + eta.height());
        }
        break;
    case ProductKind::EvenStacksThm2Cor:
        for (int i = 1; i <= n; ++i) {
            gf.factor(m + 2 * i, 2 * i);
            for (int j = i + 1; j <= n; ++j) {
                gf.factor(2 * (m + i + j), 2 * (i + j));
            }
        }
        break;
    case ProductKind::EvenColumnsThm2Cor:
        for (int i = 1; i <= n; ++i) {
            gf.factor(m + 2 * i, 2 * i);
            for (int j = i + 1; j <= n; ++j) {
                gf.factor(m + i + j, i + j);
            }
        }
        break;
    case ProductKind::Thm3Cor: {
        Polynomial minus(1);
        Polynomial plus(1);
        for (int i = 0; i < n; ++i) {
            minus *= 1 - vars::q(unsigned(m + 2 * i));
            plus *= 1 + vars::q(unsigned(m + 2 * i));
        }
        gf.multiply((minus + plus) * Polynomial(Coefficient(1, 2)));
        for (int i = 1; i <= n; ++i) {
            for (int j = i + 1; j <= n; ++j) {
                gf.factor(2 * (m + i + j - 2), 2 * (i + j - 1));
            }
        }
        break;
    }
    case ProductKind::Thm3SSum: {
        for (const auto& eta : orbits(n, m - 1)) {
            gf.factor(eta.size() * (1 + eta.height()), eta.size() * eta.height());
        }
        // Even-sized subsets S of the top diagonal points (i, i, m), weighted by q^{sum Ht}.
        Polynomial subsets;
        for_each_subset(n, [&](SubsetMask s) {
            if (cardinality(s) % 2 != 0) {
                return;
            }
            unsigned exponent = 0;
            for (int i = 1; i <= n; ++i) {
                if (contains(s, i)) {
                    exponent += unsigned(Orbit{i, i, m}.height());
                }
            }
            subsets += vars::q(exponent);
        });
        gf.multiply(subsets);
        break;
    }
    }
    return gf.expand();
}

enum class Specialization { SymWeight, OrbitWeight };

inline std::string to_string(Specialization s)
{
    return s == Specialization::SymWeight ? "sym-weight" : "orbit-weight";
}

/// x_i -> q^{2n-2i+1} (SymWeight) or x_i -> q^{n+1-i} (OrbitWeight).
inline std::map<Var, Polynomial> specialization_map(int n, Specialization rule)
{
    std::map<Var, Polynomial> assignment;
    for (int i = 1; i <= n; ++i) {
        const int e = rule == Specialization::SymWeight ? 2 * n - 2 * i + 1 : n + 1 - i;
        assignment.emplace(Var::x(i), vars::q(unsigned(e)));
    }
    return assignment;
}

inline Polynomial specialize_schur_sum(int m, int n, PartitionFilter filter, Specialization rule)
{
    return substitute(schur_sum(m, n, filter), specialization_map(n, rule));
}

/// A generating polynomial in q with a label naming where it came from.
struct GfSource {
    std::string label;
    Polynomial gf;
};

/// Equality verdict between two generating polynomials.
inline IdentityResult cross_check(const GfSource& a, const GfSource& b, IdentityParams params = {})
{
    detail::Stopwatch clock;
    if (params.variant.empty()) {
        params.variant = a.label + " = " + b.label;
    }
    return detail::compare("gf-cross", std::move(params), a.gf, b.gf, clock);
}

/// Named plane partition classes used by the command line and the equality chains.
enum class NamedClass {
    Plain,
    Sym,
    SymDiagEven,
    SymDiagLevelsEven,
    SymAllHeightsEven,
    ColumnStrict,
    ColumnStrictEvenRows,
};

inline std::string to_string(NamedClass c)
{
    switch (c) {
    case NamedClass::Plain:
        return "plain";
    case NamedClass::Sym:
        return "sym";
    case NamedClass::SymDiagEven:
        return "sym-diag-even";
    case NamedClass::SymDiagLevelsEven:
        return "sym-diag-levels-even";
    case NamedClass::SymAllHeightsEven:
        return "sym-all-heights-even";
    case NamedClass::ColumnStrict:
        return "column-strict";
    case NamedClass::ColumnStrictEvenRows:
        return "column-strict-even-rows";
    }
    return "?";
}

inline const std::vector<NamedClass>& all_named_classes()
{
    static const std::vector<NamedClass> all = {
        NamedClass::Plain,        NamedClass::Sym,           NamedClass::SymDiagEven,
        NamedClass::SymDiagLevelsEven, NamedClass::SymAllHeightsEven, NamedClass::ColumnStrict,
        NamedClass::ColumnStrictEvenRows,
    };
    return all;
}

inline NamedClass parse_named_class(const std::string& name)
{
    for (auto c : all_named_classes()) {
        if (to_string(c) == name) {
            return c;
        }
    }
    throw ParseError("unknown plane partition class: " + name);
}

inline PPClass make_class(NamedClass c, int n, int m)
{
    switch (c) {
    case NamedClass::Plain:
        return {n, n, m, {}};
    case NamedClass::Sym:
        return PPClass::symmetric(n, m);
    case NamedClass::SymDiagEven:
        return PPClass::symmetric(n, m, {PPConstraint::DiagonalPartsEven});
    case NamedClass::SymDiagLevelsEven:
        return PPClass::symmetric(n, m, {PPConstraint::DiagonalLevelsEven});
    case NamedClass::SymAllHeightsEven:
        return PPClass::symmetric(n, m, {PPConstraint::AllHeightsEven});
    case NamedClass::ColumnStrict:
        return PPClass::column_strict(n, m);
    case NamedClass::ColumnStrictEvenRows:
        return PPClass::column_strict(n, m, {PPConstraint::AllRowsEvenLength});
    }
    throw Error("unknown class");
}

/// The independent routes to the generating function of a named class: the
/// enumeration first, then Schur sum specializations and product formulas.
/// Routes whose parity preconditions fail at (n, m) are omitted.
inline std::vector<GfSource> class_chain(NamedClass c, int n, int m, WeightRule weight,
                                         const EnumerationCaps& caps = {})
{
    std::vector<GfSource> chain;
    chain.push_back({"enumeration", gf_enumerate(make_class(c, n, m), weight, caps)});
    auto add_product = [&](ProductKind kind) { chain.push_back({to_string(kind), product_gf(kind, n, m)}); };
    auto add_specialization = [&](PartitionFilter filter, Specialization rule) {
        chain.push_back({"schur-sum[" + to_string(filter) + "," + to_string(rule) + "]",
                         specialize_schur_sum(m, n, filter, rule)});
    };
    const bool m_even = m % 2 == 0;
    const bool n_even = n % 2 == 0;
    switch (c) {
    case NamedClass::Plain:
        break;
    case NamedClass::Sym:
        if (weight == WeightRule::Size) {
            add_specialization(PartitionFilter::All, Specialization::SymWeight);
            add_product(ProductKind::MacMahonSym);
            add_product(ProductKind::SymSize);
        } else {
            add_specialization(PartitionFilter::All, Specialization::OrbitWeight);
            add_product(ProductKind::OrbitSym);
        }
        break;
    case NamedClass::SymDiagEven:
    case NamedClass::SymAllHeightsEven:
        if (m_even && weight == WeightRule::Size) {
            add_specialization(PartitionFilter::EvenParts, Specialization::SymWeight);
            add_product(ProductKind::SizeEven);
            add_product(ProductKind::EvenStacksThm2Cor);
        } else if (m_even) {
            add_specialization(PartitionFilter::EvenParts, Specialization::OrbitWeight);
            add_product(ProductKind::OrbitEven);
        }
        break;
    case NamedClass::SymDiagLevelsEven:
        if (n_even && m >= 1 && weight == WeightRule::Size) {
            add_specialization(PartitionFilter::EvenConjugate, Specialization::SymWeight);
            add_product(ProductKind::Thm3Cor);
            add_product(ProductKind::Thm3SSum);
        }
        break;
    case NamedClass::ColumnStrict:
        if (weight == WeightRule::Size) {
            add_specialization(PartitionFilter::All, Specialization::OrbitWeight);
            add_product(ProductKind::BenderKnuth);
            add_product(ProductKind::OrbitSym);
        }
        break;
    case NamedClass::ColumnStrictEvenRows:
        if (m_even && weight == WeightRule::Size) {
            add_specialization(PartitionFilter::EvenParts, Specialization::OrbitWeight);
            add_product(ProductKind::EvenColumnsThm2Cor);
            add_product(ProductKind::OrbitEven);
        }
        break;
    }
    return chain;
}

/// Cross-checks every route of a class chain against the enumeration.
inline IdentityResult check_class_chain(NamedClass c, int n, int m, WeightRule weight,
                                        const EnumerationCaps& caps = {})
{
    detail::Stopwatch clock;
    const auto chain = class_chain(c, n, m, weight, caps);
    std::vector<IdentityResult> parts;
    for (std::size_t k = 1; k < chain.size(); ++k) {
        parts.push_back(cross_check(chain.front(), chain[k]));
    }
    return detail::combine("gf-cross", {.n = n, .m = m, .variant = to_string(c) + "/" + to_string(weight)}, parts,
                           clock);
}

} // namespace schurpp
