#include "regbound/cli.hpp"

#include "regbound/certify.hpp"
#include "regbound/errors.hpp"
#include "regbound/families.hpp"
#include "regbound/graph6.hpp"
#include "regbound/report.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <regex>
#include <sstream>

namespace regbound {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CommonFlags {
    std::string format = "json";
    double tol_cluster = 0.0;  // 0: module default
    double tol_slack = kDefaultSlackTol;

    std::optional<double> cluster() const {
        return tol_cluster > 0 ? std::optional<double>(tol_cluster) : std::nullopt;
    }
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--format", flags.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--tol-cluster", flags.tol_cluster, "Eigenvalue clustering tolerance (default 1e-8*max(1,k))")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--tol-slack", flags.tol_slack, "Slack tolerance for certificate conditions")
        ->check(CLI::NonNegativeNumber);
}

std::string read_graph_text(const std::string& path, std::istream& in) {
    std::string content;
    if (path == "-") {
        std::ostringstream ss;
        ss << in.rdbuf();
        content = ss.str();
    } else {
        std::ifstream file(path, std::ios::binary);
        if (!file) throw InputError("cannot open '" + path + "'");
        std::ostringstream ss;
        ss << file.rdbuf();
        content = ss.str();
    }
    std::istringstream lines(content);
    std::string line;
    while (std::getline(lines, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
        if (!line.empty()) return line;
    }
    return {};
}

// Exact rational for integers, decimals and fractions; nullopt otherwise.
std::optional<Rational> parse_exact(const std::string& token) {
    static const std::regex decimal(R"(([+-]?)(\d+)(?:\.(\d*))?)");
    static const std::regex fraction(R"(([+-]?\d+)/(\d+))");
    std::smatch m;
    if (std::regex_match(token, m, fraction)) {
        const BigInt den(m[2].str());
        if (den == 0) throw UsageError("zero denominator in '" + token + "'");
        return Rational(BigInt(m[1].str()), den);
    }
    if (std::regex_match(token, m, decimal)) {
        const std::string frac = m[3].matched ? m[3].str() : "";
        BigInt scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        Rational value(BigInt(m[2].str() + frac), scale);
        return m[1].str() == "-" ? Rational(-value) : value;
    }
    return std::nullopt;
}

double parse_float(const std::string& token) {
    static const std::regex root(R"(([+-]?)sqrt\(([^)]+)\))");
    std::smatch m;
    if (std::regex_match(token, m, root)) {
        const double inner = parse_float(m[2].str());
        if (inner < 0) throw InputError("negative argument to sqrt in '" + token + "'");
        return (m[1].str() == "-" ? -1.0 : 1.0) * std::sqrt(inner);
    }
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(token, &used);
    } catch (const std::exception&) {
        throw InputError("cannot parse eigenvalue '" + token + "'");
    }
    if (used != token.size()) throw InputError("cannot parse eigenvalue '" + token + "'");
    return value;
}

struct EigenvalueInput {
    std::optional<std::vector<Rational>> exact;
    std::vector<double> values;
};

EigenvalueInput parse_eigenvalues(const std::string& csv) {
    std::vector<std::string> tokens;
    std::stringstream ss(csv);
    std::string token;
    while (std::getline(ss, token, ',')) {
        token.erase(std::remove_if(token.begin(), token.end(), ::isspace), token.end());
        if (token.empty()) throw InputError("empty eigenvalue in list");
        tokens.push_back(token);
    }
    if (tokens.empty()) throw InputError("no eigenvalues given");
    EigenvalueInput out;
    std::vector<Rational> exact;
    bool all_exact = true;
    for (const auto& t : tokens) {
        if (auto r = parse_exact(t)) {
            exact.push_back(*r);
            out.values.push_back(to_double(*r));
        } else {
            all_exact = false;
            out.values.push_back(parse_float(t));
        }
    }
    if (all_exact) {
        std::sort(exact.begin(), exact.end(), std::greater<>());
        out.exact = exact;
    }
    std::sort(out.values.begin(), out.values.end(), std::greater<>());
    return out;
}

template <Scalar T>
nlohmann::json lp_json(const LPSolution<T>& s, const char* var_name) {
    nlohmann::json j{{"status", to_string(s.status)}};
    if (s.status == LPStatus::Optimal) {
        j["objective"] = round_for_report(to_double(s.objective));
        if constexpr (std::same_as<T, Rational>) j["objective_exact"] = to_string(s.objective);
        auto vars = nlohmann::json::array();
        for (const T& x : s.variables) vars.push_back(round_for_report(to_double(x)));
        j[var_name] = vars;
    } else {
        j["objective"] = nullptr;
    }
    return j;
}

struct BoundArgs {
    int k = 0;
    std::string eigenvalues;
    int degree = 0;
    std::string method = "both";
};

template <Scalar T>
int run_bound(const BoundArgs& args, const CommonFlags& flags, std::span<const T> taus, std::ostream& out) {
    for (std::size_t i = 1; i < taus.size(); ++i)
        if (!(taus[i] < taus[i - 1])) throw UsageError("eigenvalues must be distinct");
    for (const T& t : taus)
        if (!(t < T(args.k))) throw UsageError("eigenvalues must be < k");
    const int u = args.degree > 0 ? args.degree : default_lp_degree(taus.size());

    nlohmann::json j{{"k", args.k}, {"degree", u}, {"method", args.method}, {"exact", std::same_as<T, Rational>}};
    auto eig = nlohmann::json::array();
    for (const T& t : taus) eig.push_back(round_for_report(to_double(t)));
    j["eigenvalues"] = eig;

    std::optional<CertificateSummary> cert;
    if (args.method != "lp") {
        cert = summarize(certificate_from_spectrum<T>(args.k, taus, flags.tol_slack));
        j["certificate"] = certificate_json(*cert);
    }
    std::optional<LPSolution<T>> dual, primal;
    if (args.method != "certificate") {
        dual = lp_bound_dual<T>(args.k, taus, u);
        primal = lp_bound_primal<T>(args.k, taus, u);
        nlohmann::json lp{{"dual", lp_json(*dual, "f")}, {"primal", lp_json(*primal, "m")}};
        if (dual->status == LPStatus::Optimal && primal->status == LPStatus::Optimal)
            lp["gap"] = round_for_report(to_double(T(dual->objective - primal->objective)));
        j["lp"] = lp;
    }

    if (flags.format == "json") {
        out << j.dump(2) << "\n";
    } else {
        out << "k = " << args.k << ", degree u = " << u << (std::same_as<T, Rational> ? " (exact)" : " (floating)")
            << "\n";
        if (cert) {
            out << "certificate bound: "
                << (cert->bound ? (cert->bound_text.empty() ? std::to_string(*cert->bound) : cert->bound_text)
                                : std::string("invalid"))
                << "\n";
            const auto& c = cert->conditions;
            auto line = [&](const char* name, const ConditionCheck& chk) {
                out << "  " << std::left << std::setw(16) << name << (chk.holds ? "ok  " : "FAIL")
                    << "  worst = " << round_for_report(chk.worst);
                if (chk.worst_index) out << " (index " << *chk.worst_index << ")";
                out << "\n";
            };
            line("f(k) > 0", c.f_at_k_positive);
            line("f(tau_i) <= 0", c.f_at_taus_nonpositive);
            line("f_0 > 0", c.f0_positive);
            line("f_i >= 0", c.coeffs_nonnegative);
        }
        if (dual) {
            auto show = [&](const char* name, const LPSolution<T>& s) {
                out << name << ": " << to_string(s.status);
                if (s.status == LPStatus::Optimal) out << ", objective " << round_for_report(to_double(s.objective));
                out << "\n";
            };
            show("lp dual", *dual);
            show("lp primal", *primal);
        }
    }
    if (args.method == "certificate" && !cert->valid) return kExitInvalidCertificate;
    return kExitOk;
}

int cmd_analyze(const std::string& path, const CommonFlags& flags, std::istream& in, std::ostream& out) {
    const Graph g = parse_graph6(read_graph_text(path, in));
    if (g.vertex_count() > kMaxSpectralVertices)
        throw SizeLimitError("analyze is capped at 512 vertices, got " + std::to_string(g.vertex_count()));
    if (g.vertex_count() == 0) throw UsageError("analyze needs at least one vertex");

    const auto k = regularity(g);
    const bool connected = is_connected(g);
    const auto girth = girth_bfs(g);
    std::optional<int> girth_traces;
    std::optional<double> gap;
    std::optional<IntersectionArray> drg;
    std::optional<int> diam;
    if (connected) diam = diameter(g);
    if (k && connected) {
        if (*k >= 2) girth_traces = girth_via_traces(g);
        if (g.vertex_count() > 1) gap = spectral_gap(g, flags.cluster());
        drg = is_distance_regular(g);
    }
    const Spectrum s = spectrum(g, flags.cluster());

    if (flags.format == "json") {
        nlohmann::json j{
            {"v", g.vertex_count()},
            {"edges", g.edge_count()},
            {"k", k ? nlohmann::json(*k) : nlohmann::json(nullptr)},
            {"connected", connected},
            {"girth", girth ? nlohmann::json(*girth) : nlohmann::json(nullptr)},
            {"girth_traces", girth_traces ? nlohmann::json(*girth_traces) : nlohmann::json(nullptr)},
            {"diameter", diam ? nlohmann::json(*diam) : nlohmann::json(nullptr)},
            {"spectrum", spectrum_json(s)},
            {"spectral_gap", gap ? nlohmann::json(round_for_report(*gap)) : nlohmann::json(nullptr)},
            {"distance_regular", drg ? intersection_array_json(*drg) : nlohmann::json(nullptr)},
        };
        out << j.dump(2) << "\n";
    } else {
        auto opt = [](const auto& x) { return x ? std::to_string(*x) : std::string("-"); };
        out << "vertices:      " << g.vertex_count() << "\n";
        out << "edges:         " << g.edge_count() << "\n";
        out << "regular:       " << (k ? "yes, k = " + std::to_string(*k) : std::string("no")) << "\n";
        out << "connected:     " << (connected ? "yes" : "no") << "\n";
        out << "girth (bfs):   " << (girth ? std::to_string(*girth) : std::string("infinite")) << "\n";
        out << "girth (trace): " << opt(girth_traces) << "\n";
        out << "diameter:      " << opt(diam) << "\n";
        out << "spectrum:      " << spectrum_text(s) << "\n";
        out << "spectral gap:  " << (gap ? std::to_string(round_for_report(*gap)) : std::string("-")) << "\n";
        out << "dist-regular:  " << (drg ? "yes" : "no") << "\n";
    }
    return kExitOk;
}

int cmd_certify(const std::string& path, const CommonFlags& flags, std::istream& in, std::ostream& out) {
    const Graph g = parse_graph6(read_graph_text(path, in));
    if (g.vertex_count() > kMaxSpectralVertices)
        throw SizeLimitError("certify is capped at 512 vertices, got " + std::to_string(g.vertex_count()));
    const auto report = certify(g, {flags.cluster(), flags.tol_slack});
    if (flags.format == "json")
        out << report_json(report).dump(2) << "\n";
    else
        out << report_text(report);
    return kExitOk;
}

int cmd_generate(const std::string& family, std::ostream& out) {
    out << write_graph6(build(parse_family_spec(family))) << "\n";
    return kExitOk;
}

nlohmann::json table2_row(const FamilySpec& spec, const CommonFlags& flags) {
    const Graph g = build(spec);
    const auto rep = certify(g, {flags.cluster(), flags.tol_slack});
    nlohmann::json row{
        {"name", to_string(spec)},
        {"v", rep.v},
        {"k", rep.k ? nlohmann::json(*rep.k) : nlohmann::json(nullptr)},
        {"girth", rep.girth ? nlohmann::json(*rep.girth) : nlohmann::json(nullptr)},
        {"d", rep.d ? nlohmann::json(*rep.d) : nlohmann::json(nullptr)},
        {"spectrum", rep.spectrum ? spectrum_json(*rep.spectrum) : nlohmann::json(nullptr)},
        {"tight", rep.tight},
        {"verdict", to_string(rep.verdict)},
    };
    nlohmann::json bound = nullptr;
    if (rep.spectrum && rep.k) {
        const auto taus = rep.spectrum->nontrivial();
        const int u = default_lp_degree(taus.size());
        if (const auto exact = exact_integers(taus)) {
            const auto s = lp_bound_dual<Rational>(*rep.k, *exact, u);
            if (s.status == LPStatus::Optimal) bound = round_for_report(to_double(s.objective));
        } else {
            const auto s = lp_bound_dual<double>(*rep.k, taus, u);
            if (s.status == LPStatus::Optimal) bound = round_for_report(s.objective);
        }
    }
    row["lp_bound"] = bound;
    return row;
}

int cmd_table2(const CommonFlags& flags, std::ostream& out) {
    auto rows = nlohmann::json::array();
    for (const auto& spec : table2_specs()) rows.push_back(table2_row(spec, flags));
    if (flags.format == "json") {
        out << rows.dump(2) << "\n";
        return kExitOk;
    }
    out << std::left << std::setw(22) << "name" << std::setw(6) << "v" << std::setw(4) << "k" << std::setw(4) << "g"
        << std::setw(12) << "lp bound" << std::setw(7) << "tight"
        << "spectrum\n";
    for (const auto& row : rows) {
        std::ostringstream spec;
        bool first = true;
        for (const auto& e : row["spectrum"]) {
            if (!first) spec << ", ";
            first = false;
            spec << e[0].get<double>() << "^" << e[1].get<int>();
        }
        std::ostringstream bound;
        if (row["lp_bound"].is_null()) bound << "-";
        else bound << row["lp_bound"].get<double>();
        out << std::left << std::setw(22) << row["name"].get<std::string>() << std::setw(6) << row["v"].get<int>()
            << std::setw(4) << row["k"].get<int>() << std::setw(4) << row["girth"].get<int>() << std::setw(12)
            << bound.str() << std::setw(7) << (row["tight"].get<bool>() ? "yes" : "no") << spec.str() << "\n";
    }
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Linear programming bounds and extremal expander certification for regular graphs", "regbound"};
    app.require_subcommand(1);

    CommonFlags analyze_flags, certify_flags, bound_flags, table_flags;
    std::string analyze_input, certify_input, family;
    BoundArgs bound_args;
    bool table_json = false;

    auto* analyze = app.add_subcommand("analyze", "Combinatorial and spectral invariants of a graph6 graph");
    analyze->add_option("input", analyze_input, "graph6 file, or - for stdin")->required();
    add_common(analyze, analyze_flags);

    auto* bound = app.add_subcommand("bound", "LP bound on v from a degree and nontrivial eigenvalues");
    bound->add_option("--k", bound_args.k, "Degree k >= 2")->required()->check(CLI::Range(2, 1000000));
    bound->add_option("--eigenvalues", bound_args.eigenvalues, "Comma-separated nontrivial eigenvalues")->required();
    bound->add_option("--degree", bound_args.degree, "LP degree u (default 2d-1)")->check(CLI::Range(1, 64));
    bound->add_option("--method", bound_args.method, "certificate, lp or both")
        ->check(CLI::IsMember({"certificate", "lp", "both"}));
    add_common(bound, bound_flags);

    auto* cert = app.add_subcommand("certify", "Extremal expander certification report");
    cert->add_option("input", certify_input, "graph6 file, or - for stdin")->required();
    add_common(cert, certify_flags);

    auto* generate = app.add_subcommand("generate", "Emit a family member as graph6");
    generate->add_option("family", family, "e.g. cycle:5, pg2:3, gq:2, kneser:7,3, petersen")->required();

    auto* table = app.add_subcommand("table2", "Reproduce the extremal expander table for the generated families");
    table->add_flag("--json", table_json, "Machine-readable rows");
    add_common(table, table_flags);
    table_flags.format = "text";

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitOther;
    }

    try {
        if (*analyze) return cmd_analyze(analyze_input, analyze_flags, in, out);
        if (*cert) return cmd_certify(certify_input, certify_flags, in, out);
        if (*generate) return cmd_generate(family, out);
        if (*table) {
            if (table_json) table_flags.format = "json";
            return cmd_table2(table_flags, out);
        }
        if (*bound) {
            const auto eig = parse_eigenvalues(bound_args.eigenvalues);
            if (eig.exact) return run_bound<Rational>(bound_args, bound_flags, *eig.exact, out);
            return run_bound<double>(bound_args, bound_flags, eig.values, out);
        }
    } catch (const Graph6Error& e) {
        err << "error: graph6 parse failure: " << e.what() << "\n";
        return kExitParse;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const SizeLimitError& e) {
        err << "error: " << e.what() << "\n";
        return kExitSizeCap;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitOther;
    }
    return kExitOther;
}

}  // namespace regbound
