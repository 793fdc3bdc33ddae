#pragma once

#include <algorithm>

#include "polynomial.hpp"

namespace schurpp {

/// Power series in x1..xn truncated at total x-degree `bound`. The variables
/// t, v and q are not graded, so their degrees are unbounded.
class TruncatedSeries {
public:
    TruncatedSeries(const Polynomial& body, unsigned bound) : body_(body.truncate_x(bound)), bound_(bound) {}

    const Polynomial& body() const { return body_; }
    unsigned bound() const { return bound_; }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        return {a.body_ + b.body_, std::min(a.bound_, b.bound_)};
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        unsigned bound = std::min(a.bound_, b.bound_);
        return {truncated_product(a.body_.truncate_x(bound), b.body_.truncate_x(bound), bound), bound};
    }

    TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        return a.bound_ == b.bound_ && a.body_ == b.body_;
    }

private:
    // Skips pairs whose combined x-degree exceeds the bound.
    static Polynomial truncated_product(const Polynomial& a, const Polynomial& b, unsigned bound)
    {
        std::vector<Polynomial::Term> raw;
        for (const auto& [ma, ca] : a.terms()) {
            const unsigned da = ma.x_degree();
            for (const auto& [mb, cb] : b.terms()) {
                if (da + mb.x_degree() <= bound) {
                    raw.emplace_back(ma * mb, ca * cb);
                }
            }
        }
        return Polynomial::from_terms(std::move(raw));
    }

    Polynomial body_;
    unsigned bound_;
};

/// Expands 1/(1 - u) = sum_k u^k up to x-degree `bound`. Every term of `u`
/// must have positive x-degree, otherwise the sum does not terminate.
inline TruncatedSeries geometric_expand(const Polynomial& u, unsigned bound)
{
    for (const auto& [m, c] : u.terms()) {
        if (m.x_degree() == 0) {
            throw NonNilpotentArgument("geometric_expand: term " + m.to_string() + " has x-degree 0");
        }
    }
    TruncatedSeries power(Polynomial(1), bound);
    TruncatedSeries step(u, bound);
    Polynomial total(1);
    for (unsigned k = 1; k <= bound; ++k) {
        power *= step;
        if (power.body().is_zero()) {
            break;
        }
        total += power.body();
    }
    return {total, bound};
}

} // namespace schurpp
