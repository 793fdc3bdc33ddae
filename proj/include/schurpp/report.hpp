#pragma once

#include <cstdio>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "identities.hpp"
#include "planepart.hpp"

namespace schurpp {

struct EngineConfig {
    EnumerationCaps caps;
    int determinant_cap = kDefaultDeterminantCap;
    int workers = 1;
};

struct ReportSummary {
    int total = 0;
    int passed = 0;
    int failed = 0;
};

/// Pass/fail record of a verification run.
class VerificationReport {
public:
    VerificationReport(std::vector<IdentityResult> runs, EngineConfig config)
        : runs_(std::move(runs)), config_(config)
    {
        for (const auto& r : runs_) {
            ++summary_.total;
            ++(r.holds ? summary_.passed : summary_.failed);
        }
    }

    const std::vector<IdentityResult>& runs() const { return runs_; }
    const ReportSummary& summary() const { return summary_; }
    const EngineConfig& config() const { return config_; }
    bool all_pass() const { return summary_.failed == 0; }

    /// JSON document; `with_timing = false` drops wall_time_ms so that the
    /// output is byte-identical across runs.
    std::string to_json(bool with_timing = true) const
    {
        using nlohmann::ordered_json;
        ordered_json runs = ordered_json::array();
        for (const auto& r : runs_) {
            ordered_json params = ordered_json::object();
            params["n"] = r.params.n ? ordered_json(*r.params.n) : ordered_json(nullptr);
            params["m"] = r.params.m ? ordered_json(*r.params.m) : ordered_json(nullptr);
            params["D"] = r.params.degree ? ordered_json(*r.params.degree) : ordered_json(nullptr);
            if (!r.params.variant.empty()) {
                params["variant"] = r.params.variant;
            }
            ordered_json rec;
            rec["identity"] = r.name;
            rec["params"] = params;
            rec["holds"] = r.holds;
            auto w = r.witness_monomial();
            rec["witness_monomial"] = w ? ordered_json(w->to_string()) : ordered_json(nullptr);
            if (with_timing) {
                rec["wall_time_ms"] = r.wall_time_ms;
            }
            runs.push_back(std::move(rec));
        }
        ordered_json doc;
        doc["runs"] = std::move(runs);
        doc["summary"] = {{"total", summary_.total}, {"passed", summary_.passed}, {"failed", summary_.failed}};
        doc["engine_config"] = {
            {"max_box", {config_.caps.max_rows, config_.caps.max_cols, config_.caps.max_height}},
            {"determinant_cap", config_.determinant_cap},
            {"workers", config_.workers},
        };
        return doc.dump(2) + "\n";
    }

    std::string to_csv(bool with_timing = true) const
    {
        std::ostringstream out;
        out << "identity,n,m,D,variant,holds,witness_monomial";
        if (with_timing) {
            out << ",wall_time_ms";
        }
        out << '\n';
        auto opt = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); };
        for (const auto& r : runs_) {
            auto w = r.witness_monomial();
            out << r.name << ',' << opt(r.params.n) << ',' << opt(r.params.m) << ',' << opt(r.params.degree) << ','
                << quote(r.params.variant) << ',' << (r.holds ? "true" : "false") << ','
                << (w ? w->to_string() : "");
            if (with_timing) {
                out << ',' << format_ms(r.wall_time_ms);
            }
            out << '\n';
        }
        return out.str();
    }

    std::string to_pretty(bool with_timing = true) const
    {
        std::ostringstream out;
        for (const auto& r : runs_) {
            out << (r.holds ? "PASS " : "FAIL ") << r.name;
            if (r.params.n) {
                out << " n=" << *r.params.n;
            }
            if (r.params.m) {
                out << " m=" << *r.params.m;
            }
            if (r.params.degree) {
                out << " D=" << *r.params.degree;
            }
            if (!r.params.variant.empty()) {
                out << " [" << r.params.variant << "]";
            }
            if (auto w = r.witness_monomial()) {
                out << "  witness " << w->to_string() << " (coefficient " << r.witness.terms().front().second
                    << ")";
            }
            if (with_timing) {
                out << "  " << format_ms(r.wall_time_ms) << " ms";
            }
            out << '\n';
        }
        out << summary_.passed << "/" << summary_.total << " passed";
        if (summary_.failed > 0) {
            out << ", " << summary_.failed << " FAILED";
        }
        out << '\n';
        return out.str();
    }

private:
    static std::string format_ms(double ms)
    {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3f", ms);
        return buf;
    }

    static std::string quote(const std::string& s)
    {
        if (s.find_first_of(",\"") == std::string::npos) {
            return s;
        }
        std::string out = "\"";
        for (char c : s) {
            out += c == '"' ? std::string("\"\"") : std::string(1, c);
        }
        return out + "\"";
    }

    std::vector<IdentityResult> runs_;
    ReportSummary summary_;
    EngineConfig config_;
};

/// Coefficients of q^0 .. q^deg as "c0,c1,...". Requires a polynomial in q alone.
inline std::string q_coefficients(const Polynomial& gf)
{
    const unsigned top = gf.degree();
    std::string out;
    for (unsigned d = 0; d <= top; ++d) {
        if (d > 0) {
            out += ',';
        }
        out += gf.coefficient(Monomial::of(Var::q(), d)).get_str();
    }
    return out;
}

/// GF table as CSV with header "degree,coefficient", one row per degree.
inline std::string q_coefficients_csv(const Polynomial& gf)
{
    std::string out = "degree,coefficient\n";
    for (unsigned d = 0; d <= gf.degree(); ++d) {
        out += std::to_string(d) + "," + gf.coefficient(Monomial::of(Var::q(), d)).get_str() + "\n";
    }
    return out;
}

} // namespace schurpp
