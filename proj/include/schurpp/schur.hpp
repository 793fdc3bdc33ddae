#pragma once

#include <vector>

#include "matrix.hpp"
#include "partition.hpp"
#include "polynomial.hpp"

namespace schurpp {

/// Semistandard filling of a Young diagram with entries in 1..n.
struct Tableau {
    Partition shape;
    std::vector<std::vector<int>> rows;

    bool is_semistandard(int n) const
    {
        if (int(rows.size()) != shape.length()) {
            return false;
        }
        for (int r = 0; r < shape.length(); ++r) {
            if (int(rows[r].size()) != shape.part(r + 1)) {
                return false;
            }
            for (int c = 0; c < int(rows[r].size()); ++c) {
                const int e = rows[r][c];
                if (e < 1 || e > n || (c > 0 && rows[r][c - 1] > e) || (r > 0 && rows[r - 1][c] >= e)) {
                    return false;
                }
            }
        }
        return true;
    }

    /// x^T = prod_i x_i^(number of entries equal to i).
    Monomial weight() const
    {
        Monomial m;
        for (const auto& row : rows) {
            for (int e : row) {
                m.set(Var::x(e), m[Var::x(e)] + 1);
            }
        }
        return m;
    }
};

/// Calls fn(tableau) for every semistandard tableau of the given shape with
/// entries at most n. Cells are filled row by row; each entry is bounded below
/// by its left neighbour and strictly by the entry above.
template <typename Fn>
void for_each_tableau(const Partition& shape, int n, Fn&& fn)
{
    Tableau t{shape, {}};
    for (int len : shape.parts()) {
        t.rows.emplace_back(len, 0);
    }
    const int rows = shape.length();
    const std::vector<int> column_length = conjugate(shape).parts();
    auto fill = [&](auto&& self, int r, int c) -> void {
        if (r == rows) {
            fn(static_cast<const Tableau&>(t));
            return;
        }
        if (c == shape.part(r + 1)) {
            self(self, r + 1, 0);
            return;
        }
        int lo = 1;
        if (c > 0) {
            lo = t.rows[r][c - 1];
        }
        if (r > 0) {
            lo = std::max(lo, t.rows[r - 1][c] + 1);
        }
        // Column c needs room for the strictly larger entries below row r.
        const int hi = n - (column_length[c] - 1 - r);
        for (int e = lo; e <= hi; ++e) {
            t.rows[r][c] = e;
            self(self, r, c + 1);
        }
    };
    if (rows <= n) {
        fill(fill, 0, 0);
    }
}

/// s_lambda(x1..xn) as the generating sum over semistandard tableaux.
/// Zero when lambda has more than n parts.
inline Polynomial schur_ssyt(const Partition& lambda, int n)
{
    std::vector<Polynomial::Term> raw;
    for_each_tableau(lambda, n, [&](const Tableau& t) { raw.emplace_back(t.weight(), 1); });
    return Polynomial::from_terms(std::move(raw));
}

/// det(x_i^{exponents[j-1]}) for i, j = 1..n, expanded directly as a signed
/// sum of monomials.
inline Polynomial alternant(const std::vector<int>& exponents)
{
    const int n = int(exponents.size());
    std::vector<Polynomial::Term> raw;
    for_each_permutation(n, [&](const Permutation& sigma) {
        Monomial m;
        for (int i = 1; i <= n; ++i) {
            m.set(Var::x(i), unsigned(exponents[sigma(i) - 1]));
        }
        raw.emplace_back(m, sigma.sign());
    });
    return Polynomial::from_terms(std::move(raw));
}

/// s_lambda(x1..xn) = det(x_i^{lambda_j + n - j}) / prod_{i<j}(x_i - x_j).
inline Polynomial schur_bialternant(const Partition& lambda, int n)
{
    if (lambda.length() > n) {
        return {};
    }
    auto numerator = determinant(PolyMatrix::generate(n, [&](int i, int j) {
        return vars::x(i, unsigned(lambda.part(j) + n - j));
    }), n);
    return exact_div(numerator, vandermonde(n));
}

/// Sum of s_lambda(x1..xn) over the filtered partitions in the box {m^n}.
inline Polynomial schur_sum(int m, int n, PartitionFilter filter = PartitionFilter::All)
{
    Polynomial total;
    for (const auto& lambda : partitions_in_box(m, n, filter)) {
        total += schur_bialternant(lambda, n);
    }
    return total;
}

/// The weight f_lambda(t, v): for each column length j with multiplicity a_j,
/// a complete homogeneous sum h_{a_j}(t, v) when j is odd and a geometric sum
/// 1 + tv + ... + (tv)^{a_j} when j is even.
inline Polynomial f_poly(const Partition& lambda)
{
    Polynomial f(1);
    const ColumnCounts counts = column_counts(lambda);
    for (auto [j, a] : counts.nonzero()) {
        std::vector<Polynomial::Term> raw;
        for (int i = 0; i <= a; ++i) {
            Monomial m;
            if (j % 2 == 1) {
                m.set(Var::t(), unsigned(i));
                m.set(Var::v(), unsigned(a - i));
            } else {
                m.set(Var::t(), unsigned(i));
                m.set(Var::v(), unsigned(i));
            }
            raw.emplace_back(m, 1);
        }
        f *= Polynomial::from_terms(std::move(raw));
    }
    return f;
}

} // namespace schurpp
