// schurcheck: runs Schur function identity checks, plane partition generating
// function comparisons and the bounded f-weighted Schur sum explorer.
//
// Exit codes: 0 all checks pass, 1 an identity was falsified, 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <schurpp/schurpp.hpp>

namespace {

constexpr int kExitFalsified = 1;
constexpr int kExitUsage = 2;

constexpr int kExploreMaxN = 6;
constexpr int kExploreMaxM = 8;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int parse_int(const std::string& s)
{
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(s, &used);
    } catch (const std::logic_error&) {
        throw UsageError("not an integer: '" + s + "'");
    }
    if (used != s.size()) {
        throw UsageError("not an integer: '" + s + "'");
    }
    return value;
}

/// "3", "1..4" or "2,4,6" (items may themselves be ranges).
std::vector<int> parse_range_list(const std::string& text)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto dots = item.find("..");
        if (dots == std::string::npos) {
            out.push_back(parse_int(item));
            continue;
        }
        int lo = parse_int(item.substr(0, dots));
        int hi = parse_int(item.substr(dots + 2));
        if (lo > hi) {
            throw UsageError("empty range: " + item);
        }
        for (int k = lo; k <= hi; ++k) {
            out.push_back(k);
        }
    }
    if (out.empty()) {
        throw UsageError("empty parameter list");
    }
    return out;
}

schurpp::EnumerationCaps parse_max_box(const std::string& text)
{
    auto values = parse_range_list(text);
    if (values.size() != 3) {
        throw UsageError("--max-box expects R,C,M");
    }
    return {values[0], values[1], values[2]};
}

schurpp::WeightRule parse_weight(const std::string& s)
{
    if (s == "size") {
        return schurpp::WeightRule::Size;
    }
    if (s == "orbits") {
        return schurpp::WeightRule::OrbitCount;
    }
    throw UsageError("--weight must be size or orbits");
}

schurpp::Coefficient parse_rational(const std::string& s)
{
    schurpp::Coefficient c;
    if (c.set_str(s, 10) != 0) {
        throw UsageError("not a rational number: '" + s + "'");
    }
    if (c.get_den() == 0) {
        throw UsageError("zero denominator: '" + s + "'");
    }
    c.canonicalize();
    return c;
}

void emit(const std::string& text, const std::string& out_path)
{
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
        throw UsageError("cannot open output file " + out_path);
    }
    file << text;
}

struct CommonOptions {
    std::string format = "pretty";
    std::string out;
    int workers = 1;
    std::string max_box;
    bool no_timing = false;
};

void add_common(CLI::App* cmd, CommonOptions& opts)
{
    cmd->add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"pretty", "json", "csv"}));
    cmd->add_option("--out", opts.out, "Write the report to FILE instead of standard output");
    cmd->add_option("--max-box", opts.max_box, "Enumeration caps R,C,M (default 4,4,6)");
}

struct VerifyOptions {
    std::string target;
    std::string n;
    std::string m;
    std::string degree;
    std::vector<std::string> variants;
    std::string cls;
    std::string weight = "size";
};

int run_verify(const VerifyOptions& v, const CommonOptions& common)
{
    schurpp::Grid grid;
    if (!v.n.empty()) {
        grid.n = parse_range_list(v.n);
    }
    if (!v.m.empty()) {
        grid.m = parse_range_list(v.m);
    }
    if (!v.degree.empty()) {
        grid.degree = parse_range_list(v.degree);
    }
    grid.variants = v.variants;
    grid.cls = v.cls;
    grid.weight = parse_weight(v.weight);
    if (!common.max_box.empty()) {
        grid.caps = parse_max_box(common.max_box);
    }

    std::vector<schurpp::Check> checks;
    try {
        if (v.target == "all") {
            if (!v.n.empty() || !v.m.empty() || !v.degree.empty() || !v.cls.empty() || !v.variants.empty()) {
                throw UsageError("verify all runs the default grid and takes no parameters");
            }
            checks = schurpp::build_all_checks();
        } else {
            checks = schurpp::build_checks(v.target, grid);
        }
    } catch (const schurpp::NotDivisible&) {
        throw;
    } catch (const schurpp::Error& e) {
        throw UsageError(e.what());
    }

    schurpp::EngineConfig config{grid.caps, schurpp::kDefaultDeterminantCap, common.workers};
    schurpp::VerificationReport report(schurpp::run_checks(checks, common.workers), config);
    const bool timing = !common.no_timing;
    if (common.format == "json") {
        emit(report.to_json(timing), common.out);
    } else if (common.format == "csv") {
        emit(report.to_csv(timing), common.out);
    } else {
        emit(report.to_pretty(timing), common.out);
    }
    return report.all_pass() ? 0 : kExitFalsified;
}

struct GfOptions {
    std::string cls;
    int n = 0;
    int m = 0;
    std::string weight = "size";
    std::string compare;
    bool list = false;
};

int run_gf(const GfOptions& g, const CommonOptions& common)
{
    const auto weight = parse_weight(g.weight);
    schurpp::EnumerationCaps caps;
    if (!common.max_box.empty()) {
        caps = parse_max_box(common.max_box);
    }
    schurpp::Polynomial gf;
    std::optional<schurpp::Polynomial> product;
    std::string listing;
    try {
        const auto cls = schurpp::make_class(schurpp::parse_named_class(g.cls), g.n, g.m);
        if (g.list) {
            schurpp::for_each_plane_partition(
                cls, [&](const schurpp::PlanePartition& pp) { listing += pp.to_json() + "\n"; }, caps);
        }
        gf = schurpp::gf_enumerate(cls, weight, caps);
        if (!g.compare.empty()) {
            product = schurpp::product_gf(schurpp::parse_product_kind(g.compare), g.n, g.m);
        }
    } catch (const schurpp::NotDivisible&) {
        throw;
    } catch (const schurpp::Error& e) {
        throw UsageError(e.what());
    }

    const bool equal = !product || *product == gf;
    std::string text = listing;
    if (common.format == "json") {
        nlohmann::ordered_json doc;
        doc["class"] = g.cls;
        doc["params"] = {{"n", g.n}, {"m", g.m}};
        doc["weight"] = g.weight;
        auto coeffs = nlohmann::ordered_json::array();
        for (unsigned d = 0; d <= gf.degree(); ++d) {
            coeffs.push_back(gf.coefficient(schurpp::Monomial::of(schurpp::Var::q(), d)).get_str());
        }
        doc["coefficients"] = coeffs;
        if (product) {
            doc["compare"] = {{"kind", g.compare}, {"product", product->to_string()}, {"equal", equal}};
        }
        text += doc.dump(2) + "\n";
    } else if (common.format == "csv") {
        text += schurpp::q_coefficients_csv(gf);
    } else {
        text += schurpp::q_coefficients(gf) + "\n";
    }
    if (product && common.format != "json") {
        text += "compare " + g.compare + ": " + (equal ? "equal" : "not equal (product " + product->to_string() + ")") +
                "\n";
    }
    emit(text, common.out);
    return equal ? 0 : kExitFalsified;
}

struct ExploreOptions {
    int m = 0;
    int n = 1;
    std::string t;
    std::string v;
};

int run_explore(const ExploreOptions& e, const CommonOptions& common)
{
    if (e.n < 1 || e.n > kExploreMaxN || e.m < 0 || e.m > kExploreMaxM) {
        throw UsageError("explore requires 1 <= n <= " + std::to_string(kExploreMaxN) + " and 0 <= m <= " +
                         std::to_string(kExploreMaxM));
    }
    std::map<schurpp::Var, schurpp::Polynomial> values;
    if (!e.t.empty()) {
        values.emplace(schurpp::Var::t(), schurpp::Polynomial(parse_rational(e.t)));
    }
    if (!e.v.empty()) {
        values.emplace(schurpp::Var::v(), schurpp::Polynomial(parse_rational(e.v)));
    }
    schurpp::Polynomial sum = schurpp::bounded_f_sum(e.m, e.n);
    if (!values.empty()) {
        sum = schurpp::substitute_partial(sum, values);
    }
    std::string text;
    if (common.format == "json") {
        nlohmann::ordered_json doc;
        doc["params"] = {{"n", e.n}, {"m", e.m}};
        doc["t"] = e.t.empty() ? nlohmann::ordered_json("t") : nlohmann::ordered_json(e.t);
        doc["v"] = e.v.empty() ? nlohmann::ordered_json("v") : nlohmann::ordered_json(e.v);
        doc["polynomial"] = sum.to_string();
        text = doc.dump(2) + "\n";
    } else {
        text = schurpp::to_string_by_x(sum) + "\n";
    }
    emit(text, common.out);
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact verification of Schur function identities and plane partition generating functions"};
    app.require_subcommand(1);

    CommonOptions common;
    app.add_option("--workers", common.workers, "Run up to K independent checks concurrently")
        ->check(CLI::PositiveNumber);
    app.add_flag("--no-timing", common.no_timing, "Omit wall times so reports are byte-stable");

    VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "Check identities over a parameter grid");
    verify_cmd->add_option("target", verify.target, "all, thm1, thm2, thm3, thm4, littlewood, lemma1, lemma2, weyl, "
                                                    "detvanish, gf-cross or schur-oracle")
        ->required();
    verify_cmd->add_option("--n", verify.n, "n values: 3, 1..3 or 2,4");
    verify_cmd->add_option("--m", verify.m, "m values");
    verify_cmd->add_option("--degree,-D", verify.degree, "Truncation degrees D");
    verify_cmd->add_option("--variant", verify.variants,
                           "littlewood: 1.5/1.6/1.7; weyl: minus/plus/even_subsets; detvanish: thm2/thm3");
    verify_cmd->add_option("--class", verify.cls, "Plane partition class for gf-cross");
    verify_cmd->add_option("--weight", verify.weight, "size or orbits");
    add_common(verify_cmd, common);
    verify_cmd->add_option("--workers", common.workers, "Run up to K independent checks concurrently")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_flag("--no-timing", common.no_timing, "Omit wall times so reports are byte-stable");

    GfOptions gf;
    auto* gf_cmd = app.add_subcommand("gf", "Print a plane partition generating function");
    gf_cmd->add_option("--class", gf.cls, "plain, sym, sym-diag-even, sym-diag-levels-even, sym-all-heights-even, "
                                          "column-strict, column-strict-even-rows")
        ->required();
    gf_cmd->add_option("--n", gf.n)->required();
    gf_cmd->add_option("--m", gf.m)->required();
    gf_cmd->add_option("--weight", gf.weight, "size or orbits");
    gf_cmd->add_option("--compare", gf.compare, "Product formula to compare against");
    gf_cmd->add_flag("--list", gf.list, "Stream every plane partition as a JSON array of rows");
    add_common(gf_cmd, common);

    ExploreOptions explore;
    auto* explore_cmd = app.add_subcommand("explore", "Print sum of f_lambda(t,v) s_lambda over lambda in {m^n}");
    explore_cmd->add_option("--m", explore.m)->required();
    explore_cmd->add_option("--n", explore.n)->required();
    explore_cmd->add_option("--t", explore.t, "Rational value for t");
    explore_cmd->add_option("--v", explore.v, "Rational value for v");
    add_common(explore_cmd, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*verify_cmd) {
            return run_verify(verify, common);
        }
        if (*gf_cmd) {
            return run_gf(gf, common);
        }
        return run_explore(explore, common);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const schurpp::NotDivisible& e) {
        std::cerr << "falsified: " << e.what() << "\n";
        return kExitFalsified;
    }
}
