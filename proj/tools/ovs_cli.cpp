// Command-line surface: curve ingestion (CSV), cone queries, Jordan
// decomposition runs and seeded verification suites with JSON reports.
//
// Exit codes: 0 pass, 1 verification failure, 2 input error, 3 domain error.

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ovs/jordan.hpp"
#include "ovs/suites.hpp"
#include "ovs/weakrel.hpp"

using nlohmann::json;
using namespace ovs;

namespace {

constexpr const char* kVersion = "1.0.0";

constexpr int kExitPass = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitDomainError = 3;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double default_eps() {
    if (const char* env = std::getenv("OVS_TOL")) {
        char* end = nullptr;
        double v = std::strtod(env, &end);
        if (end != env && v > 0.0) return v;
    }
    return 1e-9;
}

Vec parse_vector(const std::string& s) {
    std::vector<double> coords;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            double v = std::stod(item, &pos);
            while (pos < item.size() && std::isspace((unsigned char)item[pos])) ++pos;
            if (pos != item.size()) throw std::invalid_argument(item);
            coords.push_back(v);
        } catch (const std::exception&) {
            throw InputError("cannot parse vector component '" + item + "'");
        }
    }
    if (coords.empty()) throw InputError("empty vector");
    return Vec(coords);
}

NormIndex parse_norm(const std::string& s) {
    if (s == "p1") return NormIndex::one();
    if (s == "p2") return NormIndex::two();
    if (s == "p3") return NormIndex(3.0);
    if (s == "pinf") return NormIndex::inf();
    if (s.rfind("p:", 0) == 0) {
        std::string body = s.substr(2);
        try {
            double v;
            auto slash = body.find('/');
            if (slash != std::string::npos) {
                double num = std::stod(body.substr(0, slash));
                double den = std::stod(body.substr(slash + 1));
                v = num / den;
            } else {
                v = std::stod(body);
            }
            if (!(v >= 1.0)) throw std::invalid_argument(body);
            return NormIndex(v);
        } catch (const std::exception&) {
            throw InputError("cannot parse norm index '" + s + "'");
        }
    }
    throw InputError("unknown norm '" + s + "' (expected p1, p2, p3, pinf or p:<rational>)");
}

// CSV curve format: header "t,v1,...,vn", rows strictly increasing in t.
SampledCurve load_curve_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open input file: " + path);
    std::string line;
    if (!std::getline(in, line)) throw InputError(path + ": missing header");
    std::vector<std::string> headers;
    {
        std::stringstream ss(line);
        std::string col;
        while (std::getline(ss, col, ',')) headers.push_back(col);
    }
    if (headers.size() < 2 || headers[0] != "t")
        throw InputError(path + ": header must be t,v1,...,vn");

    std::vector<double> grid;
    std::vector<Vec> values;
    int row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string cell;
        std::vector<double> cells;
        int col = 0;
        while (std::getline(ss, cell, ',')) {
            ++col;
            try {
                std::size_t pos = 0;
                cells.push_back(std::stod(cell, &pos));
                if (pos != cell.size()) throw std::invalid_argument(cell);
            } catch (const std::exception&) {
                throw InputError(path + ": row " + std::to_string(row) + " column " +
                                 std::to_string(col) + ": cannot parse '" + cell + "'");
            }
        }
        if (cells.size() != headers.size())
            throw InputError(path + ": row " + std::to_string(row) + ": expected " +
                             std::to_string(headers.size()) + " columns, got " +
                             std::to_string(cells.size()));
        if (!grid.empty() && !(cells[0] > grid.back()))
            throw InputError(path + ": row " + std::to_string(row) +
                             ": t column not strictly increasing at node " +
                             std::to_string(grid.size()));
        grid.push_back(cells[0]);
        values.emplace_back(std::vector<double>(cells.begin() + 1, cells.end()));
    }
    if (grid.size() < 2) throw InputError(path + ": need at least two data rows");
    return SampledCurve(std::move(grid), std::move(values));
}

json vec_json(const Vec& v) {
    json a = json::array();
    for (std::size_t i = 0; i < v.dim(); ++i) a.push_back(v[i]);
    return a;
}

json curve_json(const SampledCurve& c) {
    json a = json::array();
    for (std::size_t i = 0; i < c.nodes(); ++i)
        a.push_back({{"t", c.grid[i]}, {"value", vec_json(c.values[i])}});
    return a;
}

json cone_json(const ExtensibleCone& cone) {
    return {{"x0", vec_json(cone.base)},
            {"functional", vec_json(cone.functional.coeffs)},
            {"dual_norm_index",
             cone.functional.dual_norm_index.is_inf()
                 ? json("inf")
                 : json(cone.functional.dual_norm_index.p)},
            {"alpha", cone.alpha},
            {"norm_index", cone.norm_index.is_inf() ? json("inf") : json(cone.norm_index.p)}};
}

json suite_json(const suites::SuiteResult& s) {
    json fails = json::array();
    for (const auto& f : s.failure_list)
        fails.push_back({{"seed", f.seed},
                         {"case", f.case_index},
                         {"law", f.law},
                         {"residual", f.residual},
                         {"inputs", f.detail}});
    return {{"name", s.name},
            {"cases", s.cases},
            {"failures", s.failures},
            {"pass_counts", s.pass_counts},
            {"max_residual", s.max_residual},
            {"failure_list", fails}};
}

void write_report(const std::string& path, const json& report) {
    if (path.empty()) {
        std::cout << report.dump(2) << "\n";
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot open output file: " + path);
    out << report.dump(2) << "\n";
}

json config_json(double eps, const std::string& norm, const std::string& alpha,
                 std::uint64_t seed, int cases) {
    return {{"tolerance", eps}, {"norm", norm}, {"alpha", alpha},
            {"seed", seed},     {"cases", cases}};
}

int cmd_decompose(const std::string& input, const std::string& x0_str,
                  const std::string& norm_str, const std::string& alpha_str, double eps,
                  const std::string& output) {
    SampledCurve f = load_curve_csv(input);
    Vec x0 = parse_vector(x0_str);
    NormIndex n = parse_norm(norm_str);
    if (sup_norm(x0) == 0.0) {
        std::cerr << "error: x0 must be non-zero\n";
        return kExitDomainError;
    }
    std::optional<double> alpha;
    if (alpha_str != "auto") {
        try {
            alpha = std::stod(alpha_str);
        } catch (const std::exception&) {
            throw InputError("cannot parse alpha '" + alpha_str + "'");
        }
    }
    Tol tol{eps};
    DecompositionResult dec = decompose(f, x0, n, alpha, tol);

    double max_g = 0.0;
    for (double gi : dec.scalar_trace.values) max_g = std::max(max_g, std::abs(gi));
    bool residual_ok = dec.residual <= eps * (1.0 + max_g);
    bool relation_ok = weakly_related(f, dec.f1 - dec.f2, dec.cone.functional, tol);
    bool ok = residual_ok && relation_ok && dec.f1_increasing && dec.f2_increasing &&
              dec.wbv_bounds_hold;

    json bounds = json::array();
    for (const auto& b : dec.wbv_bounds)
        bounds.push_back({{"probe", b.coord},
                          {"component", b.component},
                          {"partition_sum", b.partition_sum},
                          {"bound", b.bound},
                          {"holds", b.holds}});
    json report = {
        {"config", config_json(eps, norm_str, alpha_str, 0, 1)},
        {"suite_or_run", "decompose"},
        {"results",
         {{"f1", curve_json(dec.f1)},
          {"f2", curve_json(dec.f2)},
          {"cone", cone_json(dec.cone)},
          {"scalar_trace", dec.scalar_trace.values},
          {"variation", dec.variation.values},
          {"offset", dec.offset},
          {"beta", dec.beta},
          {"f1_increasing", dec.f1_increasing},
          {"f2_increasing", dec.f2_increasing},
          {"wbv_bounds", bounds},
          {"weak_relation_holds", relation_ok}}},
        {"residuals", {{"decomposition", dec.residual}}},
        {"failures", ok ? 0 : 1},
        {"version", kVersion}};
    write_report(output, report);
    return ok ? kExitPass : kExitVerificationFailure;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, int cases, double eps,
               bool inject_fault, const std::string& output) {
    suites::SuiteConfig cfg;
    cfg.seed = seed;
    cfg.cases = cases;
    cfg.eps = eps;
    cfg.inject_fault = inject_fault;
    std::vector<suites::SuiteResult> results;
    try {
        results = suites::run_named(suite, cfg);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    int failures = 0;
    json arr = json::array();
    json residuals = json::object();
    for (const auto& s : results) {
        failures += s.failures;
        arr.push_back(suite_json(s));
        double worst = 0.0;
        for (const auto& [law, res] : s.max_residual) worst = std::max(worst, res);
        residuals[s.name] = worst;
    }
    json report = {{"config",
                    {{"tolerance", eps},
                     {"suite", suite},
                     {"seed", seed},
                     {"cases", cases},
                     {"inject_fault", inject_fault}}},
                   {"suite_or_run", "verify:" + suite},
                   {"results", arr},
                   {"residuals", residuals},
                   {"failures", failures},
                   {"version", kVersion}};
    write_report(output, report);
    return failures == 0 ? kExitPass : kExitVerificationFailure;
}

int cmd_cone(const std::string& x0_str, const std::string& norm_str,
             const std::string& alpha_str, double eps,
             const std::vector<std::string>& members,
             const std::vector<std::string>& pairs, const std::string& output) {
    Vec x0 = parse_vector(x0_str);
    NormIndex n = parse_norm(norm_str);
    if (sup_norm(x0) == 0.0) {
        std::cerr << "error: x0 must be non-zero\n";
        return kExitDomainError;
    }
    std::optional<double> alpha;
    if (alpha_str != "auto") {
        try {
            alpha = std::stod(alpha_str);
        } catch (const std::exception&) {
            throw InputError("cannot parse alpha '" + alpha_str + "'");
        }
    }
    Tol tol{eps};
    ExtensibleCone cone = build_cone(x0, n, alpha);

    json queries = json::array();
    for (const std::string& m : members) {
        Vec v = parse_vector(m);
        bool in = contains(cone, v, tol);
        queries.push_back({{"member", vec_json(v)}, {"contained", in}});
        std::cout << "member " << m << ": " << (in ? "yes" : "no") << "\n";
    }
    for (const std::string& pr : pairs) {
        auto sep = pr.find(';');
        if (sep == std::string::npos)
            throw InputError("pair query must be 'x;y', got '" + pr + "'");
        Vec a = parse_vector(pr.substr(0, sep));
        Vec b = parse_vector(pr.substr(sep + 1));
        bool le = leq(cone, a, b, tol);
        queries.push_back({{"x", vec_json(a)}, {"y", vec_json(b)}, {"leq", le}});
        std::cout << "leq " << pr << ": " << (le ? "yes" : "no") << "\n";
    }
    std::cout << "functional: ";
    for (std::size_t i = 0; i < cone.functional.coeffs.dim(); ++i)
        std::cout << (i ? "," : "") << cone.functional.coeffs[i];
    std::cout << "\nalpha: " << cone.alpha << "\n";

    if (!output.empty()) {
        json report = {{"config", config_json(eps, norm_str, alpha_str, 0, 1)},
                       {"suite_or_run", "cone"},
                       {"results", {{"cone", cone_json(cone)}, {"queries", queries}}},
                       {"residuals", json::object()},
                       {"failures", 0},
                       {"version", kVersion}};
        write_report(output, report);
    }
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Vector-lattice, extensible-cone and weak Jordan decomposition toolkit"};
    app.require_subcommand(1);

    double eps = default_eps();

    // decompose
    auto* dec = app.add_subcommand("decompose", "decompose a sampled curve relative to x0");
    std::string dec_input, dec_x0, dec_norm = "p2", dec_alpha = "auto", dec_out;
    dec->add_option("--input", dec_input, "curve CSV (header t,v1,...,vn)")->required();
    dec->add_option("--x0", dec_x0, "base vector, comma-separated")->required();
    dec->add_option("--norm", dec_norm, "norm index: p1|p2|p3|pinf|p:<rational>");
    dec->add_option("--alpha", dec_alpha, "cone alpha: auto|<real>");
    dec->add_option("--tol", eps, "tolerance eps");
    dec->add_option("--output", dec_out, "report JSON path (stdout if omitted)");

    // verify
    auto* ver = app.add_subcommand("verify", "run a seeded verification suite");
    std::string ver_suite = "all", ver_out;
    std::uint64_t ver_seed = 42;
    int ver_cases = 0;
    bool ver_fault = false;
    ver->add_option("--suite", ver_suite,
                    "lattice|relations|weakrel|cone|bv|jordan|all");
    ver->add_option("--seed", ver_seed, "rng seed");
    ver->add_option("--cases", ver_cases, "case count override (0 = suite default)");
    ver->add_option("--tol", eps, "tolerance eps");
    ver->add_flag("--inject-fault", ver_fault, "harness self-test: force failures");
    ver->add_option("--output", ver_out, "report JSON path (stdout if omitted)");

    // cone
    auto* con = app.add_subcommand("cone", "cone construction and membership queries");
    std::string con_x0, con_norm = "p2", con_alpha = "auto", con_out;
    std::vector<std::string> con_members, con_pairs;
    con->add_option("--x0", con_x0, "base vector, comma-separated")->required();
    con->add_option("--norm", con_norm, "norm index: p1|p2|p3|pinf|p:<rational>");
    con->add_option("--alpha", con_alpha, "cone alpha: auto|<real>");
    con->add_option("--tol", eps, "tolerance eps");
    con->add_option("--query", con_members, "membership query vector (repeatable)");
    con->add_option("--query-pair", con_pairs, "order query 'x;y' (repeatable)");
    con->add_option("--output", con_out, "report JSON path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*dec) return cmd_decompose(dec_input, dec_x0, dec_norm, dec_alpha, eps, dec_out);
        if (*ver) return cmd_verify(ver_suite, ver_seed, ver_cases, eps, ver_fault, ver_out);
        if (*con) return cmd_cone(con_x0, con_norm, con_alpha, eps, con_members, con_pairs,
                                  con_out);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomainError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomainError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
