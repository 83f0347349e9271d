#include "amix/cli.hpp"

#include <cstdlib>
#include <functional>
#include <sstream>

#include "amix/cartesian.hpp"
#include "amix/distribution_json.hpp"
#include "amix/errors.hpp"
#include "amix/io.hpp"
#include "amix/spectral.hpp"
#include "amix/states.hpp"
#include "amix/suite.hpp"
#include "amix/uniform.hpp"
#include "amix/walk.hpp"

namespace amix::cli {

using ojson = nlohmann::ordered_json;

namespace {

ojson graph_json(const Graph& g)
{
    return {{"n", g.order()}, {"edges", g.edge_count()}, {"hash", g.hash()}};
}

Graph require_graph(const std::string& spec, const char* flag)
{
    if (spec.empty()) throw InvalidParameter(std::string("missing ") + flag);
    return parse_graph_spec(spec);
}

Distribution require_dist(const std::optional<std::string>& text, const char* flag)
{
    if (!text) throw InvalidParameter(std::string("missing ") + flag);
    return parse_distribution(*text);
}

ojson verdict_json(const FeasibilityVerdict& v)
{
    return {{"necessary_ok", v.necessary_ok},
            {"trace_value", v.trace_value},
            {"trace_upper_bound", v.trace_upper_bound},
            {"multiplicity_lower_bound", v.multiplicity_lower_bound},
            {"reason", v.reason}};
}

ojson targets_json(const GapTargetMap& t)
{
    ojson list = ojson::array();
    for (const auto& g : t.targets) {
        ojson pairs = ojson::array();
        for (auto [r, s] : g.pairs) pairs.push_back(ojson::array({r, s}));
        list.push_back({{"gap", g.gap}, {"coefficient", g.coefficient}, {"pairs", pairs}});
    }
    return {{"feasible", t.feasible}, {"box_ok", t.box_ok}, {"residual", t.residual}, {"targets", list},
            {"diagnostic", t.diagnostic}};
}

ojson realization_json(const Realization& r)
{
    ojson params = ojson::object();
    for (const auto& [k, v] : r.parameters) params[k] = v;
    ojson out = {{"recipe", r.recipe}, {"solved", r.distribution.has_value()}, {"parameters", params}};
    out["distribution"] = r.distribution ? to_json(*r.distribution) : ojson(nullptr);
    if (!r.pair_times.empty()) out["pair_times"] = r.pair_times;
    out["reason"] = r.reason;
    return out;
}

FamilyHint parse_family(const std::string& s)
{
    if (s == "dirac_instantaneous" || s == "dirac") return FamilyHint::dirac_instantaneous;
    if (s == "gaussian") return FamilyHint::gaussian;
    if (s == "bernoulli") return FamilyHint::bernoulli;
    if (s == "cosine_product") return FamilyHint::cosine_product;
    throw InvalidParameter("unknown family hint '" + s + "'");
}

struct Outcome {
    int exit_code = kExitOk;
    ojson report;
};

Outcome cmd_spectrum(const RunConfig& c)
{
    const Graph g = require_graph(c.graph, "--graph");
    const auto sd = decompose(g);
    ojson traces = ojson::array();
    for (const auto& e : sd.idempotents) traces.push_back(e.trace());
    ojson gaps = ojson::array();
    for (const auto& b : gap_table(sd).distinct_gaps) {
        ojson pairs = ojson::array();
        for (auto [r, s] : b.pairs) pairs.push_back(ojson::array({r, s}));
        gaps.push_back({{"value", b.value}, {"pairs", pairs}});
    }
    return {kExitOk,
            {{"command", "spectrum"}, {"graph", graph_json(g)}, {"thetas", sd.thetas},
             {"multiplicities", sd.multiplicities}, {"idempotent_traces", traces}, {"gaps", gaps}}};
}

Outcome cmd_amm(const RunConfig& c)
{
    const Graph g = require_graph(c.graph, "--graph");
    const auto sd = decompose(g);
    const Distribution d = c.dist ? parse_distribution(*c.dist) : Distribution::uniform_real_line();
    const AmmResult res = amm_under(sd, d);
    ojson coeffs = ojson::array();
    for (const auto& [rs, v] : res.coefficients) coeffs.push_back({{"r", rs.first}, {"s", rs.second}, {"value", v}});
    return {kExitOk,
            {{"command", "amm"}, {"graph", graph_json(g)}, {"distribution", to_json(d)},
             {"graph_hash", res.graph_hash}, {"matrix", matrix_json(res.matrix)}, {"coefficients", coeffs}}};
}

Outcome cmd_mixing(const RunConfig& c)
{
    const Graph g = require_graph(c.graph, "--graph");
    const auto sd = decompose(g);
    return {kExitOk,
            {{"command", "mixing"}, {"graph", graph_json(g)}, {"time", c.time},
             {"matrix", matrix_json(mixing_at(sd, c.time))}}};
}

Outcome cmd_check_feasible(const RunConfig& c)
{
    const Graph g = require_graph(c.graph, "--graph");
    const auto v = necessary_check(decompose(g));
    return {v.necessary_ok ? kExitOk : kExitFailed,
            {{"command", "check-feasible"}, {"graph", graph_json(g)}, {"verdict", verdict_json(v)}}};
}

Outcome cmd_solve_uniform(const RunConfig& c)
{
    const Graph g = require_graph(c.graph, "--graph");
    const auto sd = decompose(g);
    const auto verdict = necessary_check(sd);
    const auto targets = coefficient_solve(sd);
    ojson report = {{"command", "solve-uniform"}, {"graph", graph_json(g)}, {"feasibility", verdict_json(verdict)},
                    {"coefficients", targets_json(targets)}};

    if (!verdict.necessary_ok) {
        report["solution"] = nullptr;
        report["reason"] = verdict.reason;
        return {kExitFailed, report};
    }
    std::vector<FamilyHint> hints;
    if (c.family) {
        hints.push_back(parse_family(*c.family));
    } else {
        hints = {FamilyHint::dirac_instantaneous, FamilyHint::gaussian, FamilyHint::bernoulli,
                 FamilyHint::cosine_product};
    }
    ojson attempts = ojson::array();
    for (auto hint : hints) {
        const auto r = solve_known_family(sd, hint);
        attempts.push_back(realization_json(r));
        if (r) {
            report["solution"] = realization_json(r);
            report["attempts"] = attempts;
            report["reason"] = "solved by the " + r.recipe + " recipe";
            return {kExitOk, report};
        }
    }
    report["solution"] = nullptr;
    report["attempts"] = attempts;
    report["reason"] = targets.feasible ? "no recipe realized the coefficient targets" : targets.diagnostic;
    return {kExitFailed, report};
}

Outcome cmd_verify_uniform(const RunConfig& c)
{
    const Graph g = require_graph(c.graph, "--graph");
    const Distribution d = require_dist(c.dist, "--dist");
    const double tol = verification_tolerance(c);
    const auto check = verify_uniform(decompose(g), d, tol);
    return {check.uniform ? kExitOk : kExitFailed,
            {{"command", "verify-uniform"}, {"graph", graph_json(g)}, {"distribution", to_json(d)},
             {"uniform", check.uniform}, {"deviation", check.deviation}, {"tolerance", tol}}};
}

Outcome cmd_monte_carlo(const RunConfig& c)
{
    const Graph g = require_graph(c.graph, "--graph");
    const Distribution d = require_dist(c.dist, "--dist");
    const auto sd = decompose(g);
    const Eigen::MatrixXd mc = amm_monte_carlo(sd, d, c.count, c.seed);
    const double dev = (mc - amm_under(sd, d).matrix).cwiseAbs().maxCoeff();
    return {kExitOk,
            {{"command", "monte-carlo"}, {"graph", graph_json(g)}, {"distribution", to_json(d)},
             {"count", c.count}, {"seed", c.seed}, {"matrix", matrix_json(mc)}, {"closed_form_deviation", dev}}};
}

Outcome cmd_cartesian(const RunConfig& c)
{
    const Graph g = require_graph(c.graph, "--graph");
    const Graph h = require_graph(c.graph2, "--graph2");
    const Distribution d = require_dist(c.dist, "--dist");
    TraceIdentityOptions opts;
    opts.seed = c.seed;
    opts.samples = c.count;
    const auto rep = trace_identity_check(g, h, d, opts);
    const auto sq = square_bound_check(g, d);
    const bool exact = rep.method == CovarianceMethod::exact_atoms;
    const bool ok = exact ? rep.residual < 1e-9 : rep.residual <= 3.0 * rep.standard_error + 1e-12;
    return {ok && sq.square_bound_ok ? kExitOk : kExitFailed,
            {{"command", "cartesian-check"},
             {"graph", graph_json(g)},
             {"graph2", graph_json(h)},
             {"distribution", to_json(d)},
             {"trace_identity",
              {{"lhs", rep.lhs},
               {"cov_term", rep.cov_term},
               {"product_term", rep.product_term},
               {"residual", rep.residual},
               {"method", exact ? "exact-atoms" : "monte-carlo"},
               {"sample_count", rep.sample_count},
               {"standard_error", rep.standard_error},
               {"ok", ok}}},
             {"square_bound",
              {{"product_trace", sq.product_trace},
               {"factor_trace", sq.factor_trace},
               {"slack", sq.square_slack},
               {"ok", sq.square_bound_ok},
               {"classical_trace", sq.classical_trace},
               {"classical_bound", sq.classical_bound},
               {"product_uniform_possible", sq.product_uniform_possible}}}}};
}

Outcome cmd_avg_state(const RunConfig& c)
{
    const Graph g = require_graph(c.graph, "--graph");
    const Distribution d = c.dist ? parse_distribution(*c.dist) : Distribution::uniform_real_line();
    const auto sd = decompose(g);
    const auto state = average_state(sd, vertex_state(c.vertex, g.order()), d);
    return {kExitOk,
            {{"command", "avg-state"}, {"graph", graph_json(g)}, {"distribution", to_json(d)}, {"vertex", c.vertex},
             {"matrix", matrix_json(state.matrix())}}};
}

Outcome cmd_gram(const RunConfig& c)
{
    const Graph g = require_graph(c.graph, "--graph");
    const Distribution d1 = require_dist(c.dist1, "--dist1");
    const Distribution d2 = require_dist(c.dist2, "--dist2");
    const auto sd = decompose(g);
    const Eigen::MatrixXcd gram = gram_of_vertex_states(sd, d1, d2);
    const Eigen::MatrixXd amm = amm_under(sd, difference_independent(d2, d1)).matrix;
    const double dev = std::max((gram.real() - amm).cwiseAbs().maxCoeff(), gram.imag().cwiseAbs().maxCoeff());
    const double tol = c.tol.value_or(1e-10);
    return {dev <= tol ? kExitOk : kExitFailed,
            {{"command", "gram"}, {"graph", graph_json(g)}, {"dist1", to_json(d1)}, {"dist2", to_json(d2)},
             {"matrix", matrix_json(gram)}, {"amm_difference", matrix_json(amm)}, {"max_deviation", dev},
             {"tolerance", tol}}};
}

Outcome cmd_choi(const RunConfig& c)
{
    const Graph g = require_graph(c.graph, "--graph");
    const Distribution d = c.dist ? parse_distribution(*c.dist) : Distribution::uniform_real_line();
    const auto check = choi_psd_check(decompose(g), d);
    return {check.psd ? kExitOk : kExitFailed,
            {{"command", "choi-check"}, {"graph", graph_json(g)}, {"distribution", to_json(d)}, {"psd", check.psd},
             {"min_eigenvalue", check.min_eigenvalue}}};
}

Outcome cmd_suite(const RunConfig&)
{
    ojson list = ojson::array();
    bool all = true;
    for (const auto& r : suite::run_all()) {
        all = all && r.passed;
        list.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
    }
    return {all ? kExitOk : kExitFailed, {{"command", "paper-suite"}, {"passed", all}, {"criteria", list}}};
}

// Quote a CSV field when it holds a separator, quote or line break.
std::string csv_field(const std::string& v)
{
    if (v.find_first_of(",\"\n\r") == std::string::npos) return v;
    std::string out = "\"";
    for (char ch : v) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

std::string render_csv(const ojson& report)
{
    if (report.contains("matrix")) {
        const auto& m = report.at("matrix");
        std::ostringstream os;
        const bool complex = m.contains("re");
        os << (complex ? "i,j,re,im\n" : "i,j,value\n");
        const auto rows = m.at("rows").get<int>();
        const auto cols = m.at("cols").get<int>();
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) {
                os << i << ',' << j << ',';
                if (complex)
                    os << format_double(m.at("re")[i][j].get<double>()) << ','
                       << format_double(m.at("im")[i][j].get<double>());
                else
                    os << format_double(m.at("data")[i][j].get<double>());
                os << '\n';
            }
        return os.str();
    }
    if (report.contains("criteria")) {
        std::ostringstream os;
        os << "id,passed,title\n";
        for (const auto& c : report.at("criteria"))
            os << c.at("id").get<int>() << ',' << (c.at("passed").get<bool>() ? "pass" : "fail") << ','
               << csv_field(c.at("title").get<std::string>()) << '\n';
        return os.str();
    }
    std::ostringstream os;
    os << "key,value\n";
    std::function<void(const std::string&, const ojson&)> walk = [&](const std::string& prefix, const ojson& j) {
        if (j.is_object()) {
            for (auto it = j.begin(); it != j.end(); ++it)
                walk(prefix.empty() ? it.key() : prefix + "." + it.key(), it.value());
        } else if (!j.is_array()) {
            os << prefix << ','
               << (j.is_number_float() ? format_double(j.get<double>()) : j.is_string() ? csv_field(j.get<std::string>()) : j.dump())
               << '\n';
        }
    };
    walk("", report);
    return os.str();
}

std::string render_table(const ojson& report)
{
    if (!report.contains("criteria")) return dump_json(report) + "\n";
    std::ostringstream os;
    for (const auto& c : report.at("criteria")) {
        os << (c.at("passed").get<bool>() ? "[PASS] " : "[FAIL] ") << "criterion " << c.at("id").get<int>() << ": "
           << c.at("title").get<std::string>() << " -- " << c.at("detail").get<std::string>() << '\n';
    }
    os << (report.at("passed").get<bool>() ? "all criteria passed\n" : "some criteria FAILED\n");
    return os.str();
}

}  // namespace

double verification_tolerance(const RunConfig& config)
{
    if (config.tol) return *config.tol;
    if (const char* env = std::getenv("AMIX_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end == env || *end != '\0' || !(v > 0.0)) throw InvalidParameter("AMIX_TOL must be a positive number");
        return v;
    }
    return kDefaultVerifyTol;
}

RunResult run(const RunConfig& config)
{
    using Handler = Outcome (*)(const RunConfig&);
    static const std::vector<std::pair<std::string, Handler>> handlers = {
        {"spectrum", cmd_spectrum},
        {"amm", cmd_amm},
        {"mixing", cmd_mixing},
        {"check-feasible", cmd_check_feasible},
        {"solve-uniform", cmd_solve_uniform},
        {"verify-uniform", cmd_verify_uniform},
        {"monte-carlo", cmd_monte_carlo},
        {"cartesian-check", cmd_cartesian},
        {"avg-state", cmd_avg_state},
        {"gram", cmd_gram},
        {"choi-check", cmd_choi},
        {"paper-suite", cmd_suite},
    };

    RunResult out;
    try {
        Handler handler = nullptr;
        for (const auto& [name, h] : handlers)
            if (name == config.command) handler = h;
        if (!handler) throw InvalidParameter("unknown command '" + config.command + "'");
        Outcome o = handler(config);
        out.exit_code = o.exit_code;
        out.report = std::move(o.report);
    } catch (const Error& e) {
        out.exit_code = kExitInputError;
        out.error = e.what();
        return out;
    }

    const Format fmt = config.format.value_or(config.command == "paper-suite" ? Format::table : Format::json);
    switch (fmt) {
    case Format::json: out.text = dump_json(out.report) + "\n"; break;
    case Format::csv: out.text = render_csv(out.report); break;
    case Format::table: out.text = render_table(out.report); break;
    }
    return out;
}

}  // namespace amix::cli
