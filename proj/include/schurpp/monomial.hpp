#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>

#include "errors.hpp"

namespace schurpp {

/// Maximum number of x-variables a monomial can carry.
inline constexpr int kMaxX = 8;

/// A variable of the fixed universe {x_1..x_8, t, v, q}, ordered x1 < ... < x8 < t < v < q.
class Var {
public:
    static constexpr int kCount = kMaxX + 3;

    static constexpr Var x(int i)
    {
        if (i < 1 || i > kMaxX) {
            throw Error("variable index x" + std::to_string(i) + " out of range");
        }
        return Var(i - 1);
    }
    static constexpr Var t() { return Var(kMaxX); }
    /// Variable by position in the universe order (0 = x1, ..., kCount-1 = q).
    static constexpr Var at(int index) { return Var(index); }
    static constexpr Var v() { return Var(kMaxX + 1); }
    static constexpr Var q() { return Var(kMaxX + 2); }

    constexpr int index() const { return index_; }
    constexpr bool is_x() const { return index_ < kMaxX; }

    std::string name() const
    {
        if (is_x()) {
            return "x" + std::to_string(index_ + 1);
        }
        static constexpr const char* names[] = {"t", "v", "q"};
        return names[index_ - kMaxX];
    }

    friend constexpr auto operator<=>(Var, Var) = default;

private:
    constexpr explicit Var(int index) : index_(index) {}
    int index_;
};

/// Exponent vector over the variable universe. Absent variables have exponent 0,
/// so two monomials are equal iff their exponent arrays are identical.
class Monomial {
public:
    using exponent_type = std::uint16_t;

    Monomial() { exps_.fill(0); }

    static Monomial of(Var var, unsigned exponent = 1)
    {
        Monomial m;
        m.set(var, exponent);
        return m;
    }

    unsigned operator[](Var var) const { return exps_[var.index()]; }

    void set(Var var, unsigned exponent)
    {
        if (exponent > std::numeric_limits<exponent_type>::max()) {
            throw Error("exponent overflow");
        }
        exps_[var.index()] = static_cast<exponent_type>(exponent);
    }

    unsigned degree() const
    {
        unsigned d = 0;
        for (auto e : exps_) {
            d += e;
        }
        return d;
    }

    /// Total degree in the x-variables only.
    unsigned x_degree() const
    {
        unsigned d = 0;
        for (int i = 0; i < kMaxX; ++i) {
            d += exps_[i];
        }
        return d;
    }

    bool is_one() const { return degree() == 0; }

    /// The monomial with all x-exponents cleared.
    Monomial without_x() const
    {
        Monomial m = *this;
        for (int i = 0; i < kMaxX; ++i) {
            m.exps_[i] = 0;
        }
        return m;
    }

    /// The monomial keeping only x-exponents.
    Monomial x_part() const
    {
        Monomial m;
        for (int i = 0; i < kMaxX; ++i) {
            m.exps_[i] = exps_[i];
        }
        return m;
    }

    bool divides(const Monomial& other) const
    {
        for (int i = 0; i < Var::kCount; ++i) {
            if (exps_[i] > other.exps_[i]) {
                return false;
            }
        }
        return true;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b)
    {
        Monomial m;
        for (int i = 0; i < Var::kCount; ++i) {
            unsigned e = unsigned(a.exps_[i]) + b.exps_[i];
            if (e > std::numeric_limits<exponent_type>::max()) {
                throw Error("exponent overflow");
            }
            m.exps_[i] = static_cast<exponent_type>(e);
        }
        return m;
    }

    /// Quotient a / b; requires b.divides(a).
    friend Monomial operator/(const Monomial& a, const Monomial& b)
    {
        Monomial m;
        for (int i = 0; i < Var::kCount; ++i) {
            m.exps_[i] = static_cast<exponent_type>(a.exps_[i] - b.exps_[i]);
        }
        return m;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

    /// Graded lexicographic order: total degree first, then the exponent of the
    /// largest variable (q, v, t, x8, ..., x1) decides.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b)
    {
        if (auto c = a.degree() <=> b.degree(); c != 0) {
            return c;
        }
        for (int i = Var::kCount - 1; i >= 0; --i) {
            if (auto c = a.exps_[i] <=> b.exps_[i]; c != 0) {
                return c;
            }
        }
        return std::strong_ordering::equal;
    }

    std::size_t hash() const
    {
        std::size_t h = 1469598103934665603ull;
        for (auto e : exps_) {
            h = (h ^ e) * 1099511628211ull;
        }
        return h;
    }

    /// Renders e.g. "x1^2*x2*t"; the unit monomial renders as "1".
    std::string to_string() const
    {
        std::string out;
        for (int i = 0; i < Var::kCount; ++i) {
            if (exps_[i] == 0) {
                continue;
            }
            if (!out.empty()) {
                out += '*';
            }
            out += Var::at(i).name();
            if (exps_[i] > 1) {
                out += '^' + std::to_string(exps_[i]);
            }
        }
        return out.empty() ? "1" : out;
    }

private:
    std::array<exponent_type, Var::kCount> exps_;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

} // namespace schurpp
