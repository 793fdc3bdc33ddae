#pragma once

#include <string>
#include <utility>
#include <vector>

#include "permutation.hpp"
#include "polynomial.hpp"

namespace schurpp {

/// Square matrix of polynomials.
class PolyMatrix {
public:
    explicit PolyMatrix(int dimension) : dim_(dimension), entries_(std::size_t(dimension) * dimension)
    {
        if (dimension < 1) {
            throw Error("matrix dimension must be positive");
        }
    }

    /// Builds M[i][j] = fn(i, j) with 1-based indices.
    template <typename Fn>
    static PolyMatrix generate(int dimension, Fn&& fn)
    {
        PolyMatrix m(dimension);
        for (int i = 1; i <= dimension; ++i) {
            for (int j = 1; j <= dimension; ++j) {
                m(i, j) = fn(i, j);
            }
        }
        return m;
    }

    int dimension() const { return dim_; }

    Polynomial& operator()(int i, int j) { return entries_[std::size_t(i - 1) * dim_ + (j - 1)]; }
    const Polynomial& operator()(int i, int j) const { return entries_[std::size_t(i - 1) * dim_ + (j - 1)]; }

    void swap_rows(int a, int b)
    {
        for (int j = 1; j <= dim_; ++j) {
            std::swap((*this)(a, j), (*this)(b, j));
        }
    }

private:
    int dim_;
    std::vector<Polynomial> entries_;
};

inline constexpr int kDefaultDeterminantCap = 6;

/// Exact determinant by signed permutation expansion
/// sum_sigma (-1)^inv(sigma) prod_i M[i][sigma(i)].
inline Polynomial determinant(const PolyMatrix& m, int cap = kDefaultDeterminantCap)
{
    if (m.dimension() > cap) {
        throw DimensionTooLarge("determinant of dimension " + std::to_string(m.dimension()) +
                                " exceeds cap " + std::to_string(cap));
    }
    Polynomial det;
    for_each_permutation(m.dimension(), [&](const Permutation& sigma) {
        Polynomial term(sigma.sign());
        for (int i = 1; i <= m.dimension() && !term.is_zero(); ++i) {
            term *= m(i, sigma(i));
        }
        det += term;
    });
    return det;
}

/// prod_{1 <= i < j <= n} (x_i - x_j) over the given variable indices, in order.
inline Polynomial vandermonde(const std::vector<int>& indices)
{
    Polynomial p(1);
    for (std::size_t a = 0; a < indices.size(); ++a) {
        for (std::size_t b = a + 1; b < indices.size(); ++b) {
            p *= vars::x(indices[a]) - vars::x(indices[b]);
        }
    }
    return p;
}

/// prod_{1 <= i < j <= n} (x_i - x_j).
inline Polynomial vandermonde(int n)
{
    std::vector<int> indices;
    for (int i = 1; i <= n; ++i) {
        indices.push_back(i);
    }
    return vandermonde(indices);
}

} // namespace schurpp
