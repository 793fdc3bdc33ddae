#pragma once

#include <atomic>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "identities.hpp"
#include "planepart.hpp"

namespace schurpp {

/// A check bound to its parameters, ready to run.
struct Check {
    std::string target;
    IdentityParams params;
    std::function<IdentityResult()> run;
};

/// Parameter grid for one verification target. Empty lists fall back to the
/// target's default grid.
struct Grid {
    std::vector<int> n;
    std::vector<int> m;
    std::vector<int> degree;
    std::vector<std::string> variants;
    std::string cls;
    WeightRule weight = WeightRule::Size;
    EnumerationCaps caps;
};

inline const std::vector<std::string>& verify_targets()
{
    static const std::vector<std::string> targets = {"thm1",   "thm2",  "thm3",      "thm4",    "littlewood",
                                                     "lemma1", "lemma2", "weyl",     "detvanish", "gf-cross",
                                                     "schur-oracle"};
    return targets;
}

inline std::vector<int> range(int lo, int hi)
{
    std::vector<int> out;
    for (int k = lo; k <= hi; ++k) {
        out.push_back(k);
    }
    return out;
}

namespace detail {

inline std::vector<int> or_default(const std::vector<int>& given, std::vector<int> fallback)
{
    return given.empty() ? std::move(fallback) : given;
}

inline Littlewood parse_littlewood(const std::string& s)
{
    if (s == "1.5") {
        return Littlewood::Unrestricted;
    }
    if (s == "1.6") {
        return Littlewood::EvenParts;
    }
    if (s == "1.7") {
        return Littlewood::EvenConjugate;
    }
    throw ParseError("unknown littlewood formula: " + s + " (expected 1.5, 1.6 or 1.7)");
}

inline WeylVariant parse_weyl(const std::string& s)
{
    for (auto w : {WeylVariant::Minus, WeylVariant::Plus, WeylVariant::EvenSubsets}) {
        if (to_string(w) == s) {
            return w;
        }
    }
    throw ParseError("unknown weyl variant: " + s + " (expected minus, plus or even_subsets)");
}

inline Vanishing parse_vanishing(const std::string& s)
{
    if (s == "thm2") {
        return Vanishing::Theorem2;
    }
    if (s == "thm3") {
        return Vanishing::Theorem3;
    }
    throw ParseError("unknown vanishing variant: " + s + " (expected thm2 or thm3)");
}

inline void require(bool ok, const std::string& message)
{
    if (!ok) {
        throw Error(message);
    }
}

/// The equality chains run by default: (class, n, m, weight).
struct ChainPoint {
    NamedClass cls;
    int n;
    int m;
    WeightRule weight;
};

inline std::vector<ChainPoint> default_chain_points()
{
    std::vector<ChainPoint> points;
    for (int n = 1; n <= 3; ++n) {
        for (int m = 1; m <= 3; ++m) {
            points.push_back({NamedClass::Sym, n, m, WeightRule::Size});
        }
    }
    for (int n = 1; n <= 3; ++n) {
        for (int m = 1; m <= 3; ++m) {
            points.push_back({NamedClass::Sym, n, m, WeightRule::OrbitCount});
        }
    }
    for (int n = 1; n <= 3; ++n) {
        for (int m = 1; m <= 3; ++m) {
            points.push_back({NamedClass::ColumnStrict, n, m, WeightRule::Size});
        }
        points.push_back({NamedClass::ColumnStrictEvenRows, n, 2, WeightRule::Size});
    }
    for (int m = 1; m <= 3; ++m) {
        points.push_back({NamedClass::SymDiagLevelsEven, 2, m, WeightRule::Size});
    }
    points.push_back({NamedClass::SymDiagLevelsEven, 4, 1, WeightRule::Size});
    for (int n = 1; n <= 3; ++n) {
        for (int m : {2, 4}) {
            points.push_back({NamedClass::SymDiagEven, n, m, WeightRule::Size});
        }
    }
    return points;
}

} // namespace detail

/// Expands a target and grid into concrete checks. Parameter errors (parity,
/// ranges, unknown variants) are raised here, before anything runs.
inline std::vector<Check> build_checks(const std::string& target, const Grid& grid)
{
    using detail::or_default;
    using detail::require;
    std::vector<Check> checks;
    auto add = [&](IdentityParams params, std::function<IdentityResult()> fn) {
        checks.push_back({target, std::move(params), std::move(fn)});
    };

    if (target == "thm1") {
        for (int n : or_default(grid.n, range(1, 3))) {
            for (int m : or_default(grid.m, range(0, 4))) {
                require(n >= 1 && m >= 0, "thm1 requires n >= 1 and m >= 0");
                add({.n = n, .m = m}, [=] { return check_theorem1(m, n); });
            }
        }
    } else if (target == "thm2") {
        for (int n : or_default(grid.n, range(1, 3))) {
            for (int m : or_default(grid.m, {2, 4})) {
                require(n >= 1, "thm2 requires n >= 1");
                if (m % 2 != 0) {
                    throw OddM("thm2 requires even m, got " + std::to_string(m));
                }
                require(m >= 2, "thm2 requires m >= 2");
                add({.n = n, .m = m}, [=] { return check_theorem2(m, n); });
            }
        }
    } else if (target == "thm3") {
        std::vector<std::pair<int, int>> points;
        if (grid.n.empty() && grid.m.empty()) {
            for (int m = 0; m <= 3; ++m) {
                points.emplace_back(2, m);
            }
            points.emplace_back(4, 1);
            points.emplace_back(4, 2);
        } else {
            for (int n : or_default(grid.n, {2})) {
                for (int m : or_default(grid.m, range(0, 3))) {
                    points.emplace_back(n, m);
                }
            }
        }
        for (auto [n, m] : points) {
            if (n % 2 != 0) {
                throw OddN("thm3 requires even n, got " + std::to_string(n));
            }
            require(n >= 2 && m >= 0, "thm3 requires n >= 2 and m >= 0");
            add({.n = n, .m = m}, [=] { return check_theorem3(m, n); });
        }
    } else if (target == "thm4") {
        for (int n : or_default(grid.n, range(1, 3))) {
            for (int d : or_default(grid.degree, {6})) {
                require(n >= 1 && n <= kMaxX && d >= 0, "thm4 requires 1 <= n <= 8 and D >= 0");
                add({.n = n, .degree = d}, [=] { return check_theorem4(n, d); });
            }
        }
    } else if (target == "littlewood") {
        auto variants = grid.variants.empty() ? std::vector<std::string>{"1.5", "1.6", "1.7"} : grid.variants;
        for (const auto& name : variants) {
            const Littlewood which = detail::parse_littlewood(name);
            for (int n : or_default(grid.n, range(1, 3))) {
                for (int d : or_default(grid.degree, {6})) {
                    require(n >= 1 && n <= kMaxX && d >= 0, "littlewood requires 1 <= n <= 8 and D >= 0");
                    add({.n = n, .degree = d, .variant = name}, [=] { return check_littlewood(n, d, which); });
                }
            }
        }
    } else if (target == "lemma1") {
        for (int n : or_default(grid.n, range(1, 5))) {
            require(n >= 1 && n <= kMaxX, "lemma1 requires 1 <= n <= 8");
            add({.n = n}, [=] { return check_lemma1(n); });
        }
    } else if (target == "lemma2") {
        for (int n : or_default(grid.n, {2, 4, 6})) {
            if (n % 2 != 0) {
                throw OddN("lemma2 requires even n, got " + std::to_string(n));
            }
            require(n >= 2 && n <= kMaxX, "lemma2 requires 2 <= n <= 8");
            add({.n = n}, [=] { return check_lemma2(n); });
        }
    } else if (target == "weyl") {
        auto variants =
            grid.variants.empty() ? std::vector<std::string>{"minus", "plus", "even_subsets"} : grid.variants;
        for (const auto& name : variants) {
            const WeylVariant which = detail::parse_weyl(name);
            for (int n : or_default(grid.n, range(1, 3))) {
                require(n >= 1 && n <= 6, "weyl requires 1 <= n <= 6");
                add({.n = n, .variant = name}, [=] { return check_weyl_bn(n, which); });
            }
        }
    } else if (target == "detvanish") {
        auto variants = grid.variants.empty() ? std::vector<std::string>{"thm2", "thm3"} : grid.variants;
        for (const auto& name : variants) {
            const Vanishing which = detail::parse_vanishing(name);
            for (int n : or_default(grid.n, {2, 3})) {
                for (int m : or_default(grid.m, {1, 2, 4})) {
                    require(n >= 2 && n <= 6 && m >= 0, "detvanish requires 2 <= n <= 6 and m >= 0");
                    add({.n = n, .m = m, .variant = name}, [=] { return check_det_vanishing(m, n, which); });
                }
            }
        }
    } else if (target == "schur-oracle") {
        const int n = grid.n.empty() ? 3 : grid.n.front();
        const int m = grid.m.empty() ? 4 : grid.m.front();
        require(n >= 1 && n <= kMaxX && m >= 0, "schur-oracle requires 1 <= n <= 8 and m >= 0");
        for (const auto& lambda : partitions_in_box(m, n)) {
            add({.n = n, .m = m, .variant = lambda.to_string()}, [=] { return check_schur_oracle(lambda, n); });
        }
    } else if (target == "gf-cross") {
        const EnumerationCaps caps = grid.caps;
        auto add_point = [&](NamedClass cls, int n, int m, WeightRule weight) {
            require(n >= 1 && m >= 0, "gf-cross requires n >= 1 and m >= 0");
            check_caps(make_class(cls, n, m), caps);
            if (weight == WeightRule::OrbitCount) {
                require(make_class(cls, n, m).has(PPConstraint::Symmetric),
                        "orbit weight requires a symmetric class");
            }
            add({.n = n, .m = m, .variant = to_string(cls) + "/" + to_string(weight)},
                [=] { return check_class_chain(cls, n, m, weight, caps); });
        };
        if (grid.cls.empty()) {
            require(grid.n.empty() && grid.m.empty(), "gf-cross with --n/--m requires --class");
            for (const auto& p : detail::default_chain_points()) {
                add_point(p.cls, p.n, p.m, p.weight);
            }
        } else {
            const NamedClass cls = parse_named_class(grid.cls);
            for (int n : or_default(grid.n, range(1, 3))) {
                for (int m : or_default(grid.m, range(1, 3))) {
                    add_point(cls, n, m, grid.weight);
                }
            }
        }
    } else {
        throw ParseError("unknown verify target: " + target);
    }
    return checks;
}

/// Every check of the default grid, in declaration order.
inline std::vector<Check> build_all_checks()
{
    std::vector<Check> all;
    for (const auto& target : verify_targets()) {
        auto checks = build_checks(target, {});
        all.insert(all.end(), std::make_move_iterator(checks.begin()), std::make_move_iterator(checks.end()));
    }
    return all;
}

/// Runs one check; a NotDivisible escaping a checker is reported as a failed
/// identity with the remainder as witness.
inline IdentityResult run_check(const Check& check)
{
    try {
        IdentityResult r = check.run();
        r.name = check.target;
        r.params = check.params;
        return r;
    } catch (const NotDivisible& e) {
        return {check.target, check.params, false, e.remainder(), 0};
    }
}

/// Runs checks on up to `workers` threads; results keep declaration order.
inline std::vector<IdentityResult> run_checks(const std::vector<Check>& checks, int workers = 1)
{
    std::vector<IdentityResult> results(checks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < checks.size(); k = next++) {
            results[k] = run_check(checks[k]);
        }
    };
    const int count = std::max(1, std::min<int>(workers, int(checks.size())));
    if (count == 1) {
        worker();
        return results;
    }
    std::vector<std::thread> pool;
    for (int w = 0; w < count; ++w) {
        pool.emplace_back(worker);
    }
    for (auto& t : pool) {
        t.join();
    }
    return results;
}

} // namespace schurpp
