#include "amix/suite.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "amix/cartesian.hpp"
#include "amix/spectral.hpp"
#include "amix/states.hpp"
#include "amix/uniform.hpp"
#include "amix/walk.hpp"

namespace amix::suite {

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt2 = std::sqrt(2.0);

std::string sci(double x)
{
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << x;
    return os.str();
}

double uniform_deviation(const Graph& g, const Distribution& d)
{
    return verify_uniform(decompose(g), d, 0.0).deviation;
}

// Tracks the worst value of a metric and the case that produced it.
struct Worst {
    double value = 0.0;
    std::string where;
    int failures = 0;
    int cases = 0;

    void record(double v, bool ok, const std::string& label)
    {
        ++cases;
        if (!ok) ++failures;
        if (v > value || where.empty()) {
            value = v;
            where = label;
        }
    }
};

CriterionResult c1()
{
    const double theta = std::acos(-1.0 / 3.0) / (2.0 * kSqrt2);
    const auto d = Distribution::atoms({{theta, 0.5}, {kPi / kSqrt2 - theta, 0.5}});
    const double dev = uniform_deviation(path_graph(3), d);
    return {1, "P3 uniform mixing under the two-atom distribution", dev < 1e-10, "max |M_R - J/3| = " + sci(dev)};
}

CriterionResult c2()
{
    Worst w;
    for (int k : {-1, 0, 1, 2}) {
        const double mu = kPi / (2.0 * kSqrt2) + k * kPi / kSqrt2;
        const double dev = uniform_deviation(path_graph(3), Distribution::gaussian(mu, 0.25 * std::log(3.0)));
        w.record(dev, dev < 1e-10, "k=" + std::to_string(k));
    }
    return {2, "P3 Gaussian family (k = -1..2)", w.failures == 0,
            "worst deviation " + sci(w.value) + " at " + w.where};
}

CriterionResult c3()
{
    const Graph k3 = complete_graph(3);
    const auto sd = decompose(k3);
    Worst w;
    auto check = [&](const Distribution& d, const std::string& label) {
        const double dev = verify_uniform(sd, d, 0.0).deviation;
        w.record(dev, dev < 1e-10, label);
    };
    check(Distribution::dirac(2.0 * kPi / 9.0), "Dirac(2pi/9)");
    for (int k : {-1, 0, 1, 2})
        check(Distribution::gaussian(kPi / 3.0 + 2.0 * k * kPi / 3.0, 2.0 / 9.0 * std::log(2.0)),
              "Gaussian k=" + std::to_string(k));
    const double p = 3.0 / (2.0 * (1.0 - std::cos(3.0)));
    check(Distribution::bernoulli(p), "Bernoulli");
    const bool p_ok = std::abs(p - 0.753) <= 0.001;

    const auto bern = solve_known_family(sd, FamilyHint::bernoulli);
    const bool solver_p = bern && std::abs(bern.parameters.at("p") - p) < 1e-12;
    const auto gauss = solve_known_family(sd, FamilyHint::gaussian);
    const bool solver_g = gauss && std::abs(gauss.parameters.at("mu") - kPi / 3.0) < 1e-12 &&
                          std::abs(gauss.parameters.at("sigma2") - 2.0 / 9.0 * std::log(2.0)) < 1e-12;
    std::ostringstream detail;
    detail << "worst deviation " << sci(w.value) << " (" << w.where << "), p = " << p
           << ", solver recovers p: " << (solver_p ? "yes" : "no") << ", Gaussian: " << (solver_g ? "yes" : "no");
    return {3, "K3 Dirac, Gaussian and Bernoulli sampling", w.failures == 0 && p_ok && solver_p && solver_g,
            detail.str()};
}

CriterionResult c4()
{
    Worst w;
    const std::vector<std::pair<std::string, std::pair<Graph, double>>> cases = {
        {"K2", {complete_graph(2), kPi / 4.0}},
        {"K4", {complete_graph(4), kPi / 4.0}},
        {"K1,3", {complete_bipartite_graph(1, 3), 2.0 * kPi / (3.0 * std::sqrt(3.0))}},
        {"C4", {cycle_graph(4), kPi / 4.0}},
    };
    for (const auto& [name, gt] : cases) {
        const double dev = uniform_deviation(gt.first, Distribution::dirac(gt.second));
        w.record(dev, dev < 1e-10, name);
    }
    return {4, "Instantaneous uniform mixing times", w.failures == 0, "worst deviation " + sci(w.value) + " at " + w.where};
}

CriterionResult c5()
{
    const auto sd = decompose(path_graph(4));
    const double alpha = (1.0 + std::sqrt(5.0)) / 2.0;
    const double beta = (1.0 - std::sqrt(5.0)) / 2.0;
    const std::vector<std::pair<double, double>> expected = {
        {2.0 * alpha, 0.0}, {-2.0 * beta, 0.0}, {alpha + beta, 0.0}, {alpha - beta, -0.25}};

    const auto targets = coefficient_solve(sd);
    bool targets_ok = targets.feasible && targets.residual < 1e-10 && targets.targets.size() == expected.size();
    double worst_coeff = 0.0;
    for (const auto& [gap, coeff] : expected) {
        auto it = std::find_if(targets.targets.begin(), targets.targets.end(),
                               [gap = gap](const GapTarget& t) { return std::abs(t.gap - gap) < 1e-9; });
        if (it == targets.targets.end()) {
            targets_ok = false;
            continue;
        }
        worst_coeff = std::max(worst_coeff, std::abs(it->coefficient - coeff));
    }
    targets_ok = targets_ok && worst_coeff < 1e-10;

    const auto real = realize_cosine_product(targets);
    const std::vector<double> reference_times = {0.485, 1.27, 1.57, 0.9912};
    bool times_ok = real && real.pair_times.size() == reference_times.size();
    double worst_time = 0.0;
    for (std::size_t i = 0; times_ok && i < reference_times.size(); ++i)
        worst_time = std::max(worst_time, std::abs(real.pair_times[i] - reference_times[i]));
    times_ok = times_ok && worst_time <= 1e-3;
    const double cos4 = times_ok ? std::cos((alpha - beta) * real.pair_times[3]) : 0.0;
    const bool cos_ok = std::abs(cos4 + 0.601) <= 0.002;
    const auto check = real ? verify_uniform(sd, *real.distribution, 1e-8) : UniformCheck{};

    std::ostringstream detail;
    detail << "residual " << sci(targets.residual) << ", worst coefficient error " << sci(worst_coeff)
           << ", worst pair-time error " << sci(worst_time) << ", cos((a-b)mu4) = " << cos4 << ", deviation "
           << sci(check.deviation);
    return {5, "P4 cosine-product construction", targets_ok && times_ok && cos_ok && check.uniform, detail.str()};
}

CriterionResult c6()
{
    int failures = 0, cases = 0;
    std::string first_failure;
    auto expect_nogo = [&](const Graph& g, const std::string& name) {
        ++cases;
        const auto sd = decompose(g);
        const auto verdict = necessary_check(sd);
        const auto solve = coefficient_solve(sd);
        if (verdict.necessary_ok || solve.feasible) {
            ++failures;
            if (first_failure.empty()) first_failure = name;
        }
    };
    for (int n = 5; n <= 10; ++n) {
        const auto sd = decompose(complete_graph(n));
        const double tr = necessary_check(sd).trace_value;
        if (std::abs(tr - (n - 2.0 + 2.0 / n)) > 1e-12) ++failures;
        expect_nogo(complete_graph(n), "K" + std::to_string(n));
    }
    for (int v = 8; v <= 12; ++v)
        for (int m = 1; m <= v / 2; ++m)
            expect_nogo(complete_bipartite_graph(m, v - m), "K" + std::to_string(m) + "," + std::to_string(v - m));
    return {6, "No-go catalog (K_n, n >= 5; K_{m,n}, m+n >= 8)", failures == 0,
            std::to_string(cases) + " graphs, " + std::to_string(failures) + " failures" +
                (first_failure.empty() ? "" : " (first: " + first_failure + ")")};
}

CriterionResult c7()
{
    Eigen::MatrixXd p3(3, 3);
    p3 << 3, 2, 3, 2, 4, 2, 3, 2, 3;
    p3 /= 8.0;
    const double e_p3 = (standard_amm(decompose(path_graph(3))).matrix - p3).cwiseAbs().maxCoeff();
    const Eigen::MatrixXd p4 = standard_amm(decompose(path_graph(4))).matrix;
    const double e_p4 = (p4.diagonal().array() - 0.3).abs().maxCoeff();
    double e_kn = 0.0;
    for (int n = 1; n <= 10; ++n) {
        const double tr = standard_amm(decompose(complete_graph(n))).matrix.trace();
        e_kn = std::max(e_kn, std::abs(tr - (n - 2.0 + 2.0 / n)));
    }
    std::ostringstream detail;
    detail << "P3 error " << sci(e_p3) << ", P4 diagonal error " << sci(e_p4) << ", K_n trace error " << sci(e_kn);
    return {7, "Classical average mixing matrices", e_p3 < 1e-12 && e_p4 < 1e-12 && e_kn < 1e-12, detail.str()};
}

std::vector<NamedDistribution> property_distributions()
{
    std::vector<NamedDistribution> out;
    for (const auto& nd : distribution_catalog())
        if (nd.name == "atoms3" || nd.name == "bernoulli" || nd.name == "gaussian" || nd.name == "uniform" ||
            nd.name == "difference" || nd.name == "real_line")
            out.push_back(nd);
    return out;
}

CriterionResult c8()
{
    const auto dists = property_distributions();
    std::mt19937_64 rng(2023);
    std::uniform_int_distribution<int> order(2, 8);
    int failures = 0, cases = 0;
    std::string first;
    for (int i = 0; i < 100; ++i) {
        const int n = order(rng);
        const Graph g = random_graph(n, 0.5, rng());
        const auto sd = decompose(g);
        for (const auto& nd : dists) {
            ++cases;
            if (!property_report(sd, nd.dist).all_ok()) {
                ++failures;
                if (first.empty()) first = "graph " + std::to_string(i) + " / " + nd.name;
            }
        }
    }
    return {8, "Average mixing matrix property suite", failures == 0 && dists.size() == 6,
            std::to_string(cases) + " cases, " + std::to_string(failures) + " failures" +
                (first.empty() ? "" : " (first: " + first + ")")};
}

CriterionResult c9()
{
    const auto graphs = small_graph_catalog();
    const std::vector<std::pair<int, int>> pairs = {{0, 0}, {0, 1}, {1, 2}, {1, 1}, {2, 3},
                                                    {3, 4}, {4, 5}, {5, 6}, {6, 7}, {8, 9}};
    Worst exact;
    for (auto [i, j] : pairs)
        for (const auto& nd : atom_catalog()) {
            const auto rep = trace_identity_check(graphs[i].second, graphs[j].second, nd.dist);
            exact.record(rep.residual,
                         rep.method == CovarianceMethod::exact_atoms && rep.residual < 1e-9,
                         graphs[i].first + "x" + graphs[j].first + "/" + nd.name);
        }

    Worst mc;
    const std::vector<std::tuple<int, int, double, double>> gaussian_cases = {
        {0, 1, 1.0, 0.3}, {1, 2, 0.5, 1.0}, {2, 3, 2.0, 0.2}, {3, 5, 0.0, 1.0}, {1, 1, 1.3, 0.7}};
    int mc_index = 0;
    for (auto [i, j, mu, s2] : gaussian_cases) {
        TraceIdentityOptions opts;
        opts.samples = 100000;
        opts.seed = 1000 + static_cast<std::uint64_t>(mc_index++);
        const auto rep = trace_identity_check(graphs[i].second, graphs[j].second, Distribution::gaussian(mu, s2), opts);
        const double bound = 3.0 * rep.standard_error;
        mc.record(rep.residual / std::max(rep.standard_error, 1e-300),
                  rep.method == CovarianceMethod::monte_carlo && rep.residual <= bound + 1e-12,
                  graphs[i].first + "x" + graphs[j].first);
    }

    Worst square;
    const auto dists = distribution_catalog();
    for (int c = 0; c < 50; ++c) {
        const auto& g = graphs[static_cast<std::size_t>(c) % graphs.size()];
        const auto& nd = dists[static_cast<std::size_t>(c * 7 + c / 10) % dists.size()];
        const auto rep = square_bound_check(g.second, nd.dist);
        square.record(-rep.square_slack, rep.square_bound_ok, g.first + "/" + nd.name);
    }
    const auto k5 = square_bound_check(complete_graph(5), Distribution::gaussian(1.0, 0.5));

    std::ostringstream detail;
    detail << "exact worst residual " << sci(exact.value) << " (" << exact.where << "), MC worst residual/SE "
           << mc.value << " (" << mc.where << "), Cor 5.3 failures " << square.failures << "/" << square.cases
           << ", K5xK5 gate " << (k5.product_uniform_possible ? "open" : "closed");
    return {9, "Cartesian product trace identity", exact.failures == 0 && exact.cases == 40 && mc.failures == 0 &&
                                                       square.failures == 0 && !k5.product_uniform_possible,
            detail.str()};
}

Eigen::MatrixXcd random_density(int n, std::mt19937_64& rng)
{
    std::normal_distribution<double> normal;
    Eigen::MatrixXcd w(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) w(i, j) = {normal(rng), normal(rng)};
    Eigen::MatrixXcd rho = w * w.adjoint();
    rho /= rho.trace().real();
    return 0.5 * (rho + rho.adjoint());
}

CriterionResult c10()
{
    const auto dists = distribution_catalog();
    std::mt19937_64 rng(606);
    std::uniform_int_distribution<int> order(2, 7);
    std::uniform_int_distribution<std::size_t> pick(0, dists.size() - 1);

    Worst gram;
    for (int c = 0; c < 20; ++c) {
        const Graph g = random_graph(order(rng), 0.5, rng());
        const auto sd = decompose(g);
        const auto& d1 = dists[pick(rng)].dist;
        const auto& d2 = c % 2 == 0 ? d1 : dists[pick(rng)].dist;  // every other case is iid
        const Eigen::MatrixXcd gm = gram_of_vertex_states(sd, d1, d2);
        const Eigen::MatrixXd amm = amm_under(sd, difference_independent(d2, d1)).matrix;
        const double err = std::max((gm.real() - amm).cwiseAbs().maxCoeff(), gm.imag().cwiseAbs().maxCoeff());
        gram.record(err, err < 1e-10, "case " + std::to_string(c));
    }

    int state_failures = 0;
    Worst choi;
    for (int c = 0; c < 50; ++c) {
        const int n = order(rng);
        const auto sd = decompose(random_graph(n, 0.5, rng()));
        const auto& d = dists[pick(rng)].dist;
        const Eigen::MatrixXcd rho = random_density(n, rng);
        const Eigen::MatrixXcd out = average_map(sd, rho, d);
        const Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(n, n);
        const bool trace_ok = std::abs(out.trace() - rho.trace()) < 1e-12;
        const bool herm_ok = (out - out.adjoint()).cwiseAbs().maxCoeff() < 1e-12;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (out + out.adjoint()), Eigen::EigenvaluesOnly);
        const bool psd_ok = es.eigenvalues()(0) >= -1e-9;
        const bool unital_ok = (average_map(sd, eye, d) - eye).cwiseAbs().maxCoeff() < 1e-12;
        if (!(trace_ok && herm_ok && psd_ok && unital_ok)) ++state_failures;
        const auto cc = choi_psd_check(sd, d);
        choi.record(-cc.min_eigenvalue, cc.psd, "case " + std::to_string(c));
    }

    std::ostringstream detail;
    detail << "Gram worst error " << sci(gram.value) << ", average-state failures " << state_failures
           << "/50, Choi failures " << choi.failures << "/50 (most negative eigenvalue " << sci(-choi.value) << ")";
    return {10, "Average states, Gram identity and Choi positivity",
            gram.failures == 0 && state_failures == 0 && choi.failures == 0, detail.str()};
}

CriterionResult c11()
{
    bool ok = true;
    std::ostringstream detail;
    const std::vector<std::pair<std::string, Graph>> graphs = {
        {"P3", path_graph(3)}, {"P4", path_graph(4)}, {"K5", complete_graph(5)}};
    for (const auto& [name, g] : graphs) {
        const auto sd = decompose(g);
        const Eigen::MatrixXd classical = standard_amm(sd).matrix;
        double prev = INFINITY;
        detail << name << ":";
        for (double t : {1e2, 1e3, 1e4}) {
            const double dist = (amm_under(sd, Distribution::uniform(0.0, t)).matrix - classical).cwiseAbs().maxCoeff();
            if (!(dist < prev)) ok = false;
            prev = dist;
            detail << ' ' << sci(dist);
        }
        if (!(prev < 1e-3)) ok = false;
        detail << "; ";
    }
    return {11, "Uniform(0,T) converges to the classical average", ok, detail.str()};
}

CriterionResult c12()
{
    Worst w;
    const std::vector<std::pair<std::string, Graph>> graphs = {
        {"P3", path_graph(3)}, {"K3", complete_graph(3)}, {"C4", cycle_graph(4)}};
    std::uint64_t seed = 77;
    for (const auto& [name, g] : graphs) {
        const auto sd = decompose(g);
        for (const auto& nd : distribution_catalog()) {
            if (!nd.dist.is_proper()) continue;
            const Eigen::MatrixXd mc = amm_monte_carlo(sd, nd.dist, 200000, seed++);
            const double err = (mc - amm_under(sd, nd.dist).matrix).cwiseAbs().maxCoeff();
            w.record(err, err < 0.02, name + "/" + nd.name);
        }
    }
    return {12, "Monte Carlo agrees with the closed form", w.failures == 0,
            std::to_string(w.cases) + " cases, worst max-entry error " + sci(w.value) + " (" + w.where + ")"};
}

}  // namespace

std::vector<NamedDistribution> distribution_catalog()
{
    return {
        {"dirac", Distribution::dirac(0.7)},
        {"atoms3", Distribution::atoms({{0.2, 0.3}, {1.1, 0.5}, {2.5, 0.2}})},
        {"bernoulli", Distribution::bernoulli(0.3)},
        {"gaussian", Distribution::gaussian(1.0, 0.5)},
        {"uniform", Distribution::uniform(0.0, 5.0)},
        {"pair_sum", sum_independent({Distribution::symmetric_pair(0.4), Distribution::symmetric_pair(0.9)})},
        {"difference", difference_independent(Distribution::gaussian(0.5, 0.2), Distribution::bernoulli(0.6))},
        {"scale_shift", scale_shift(2.0, 0.3, Distribution::bernoulli(0.4))},
        {"real_line", Distribution::uniform_real_line()},
    };
}

std::vector<NamedDistribution> atom_catalog()
{
    return {
        {"dirac", Distribution::dirac(0.7)},
        {"atoms3", Distribution::atoms({{0.2, 0.3}, {1.1, 0.5}, {2.5, 0.2}})},
        {"bernoulli", Distribution::bernoulli(0.4)},
        {"pair_sum", sum_independent({Distribution::symmetric_pair(0.4), Distribution::symmetric_pair(0.9)})},
    };
}

std::vector<std::pair<std::string, Graph>> small_graph_catalog()
{
    return {
        {"K2", complete_graph(2)},
        {"P3", path_graph(3)},
        {"K3", complete_graph(3)},
        {"P4", path_graph(4)},
        {"C4", cycle_graph(4)},
        {"K1,3", complete_bipartite_graph(1, 3)},
        {"K4", complete_graph(4)},
        {"C5", cycle_graph(5)},
        {"P5", path_graph(5)},
        {"K2,3", complete_bipartite_graph(2, 3)},
    };
}

CriterionResult run_criterion(int id)
{
    static const std::vector<std::function<CriterionResult()>> table = {c1, c2, c3, c4, c5, c6,
                                                                         c7, c8, c9, c10, c11, c12};
    if (id < 1 || id > kCriterionCount) return {id, "unknown criterion", false, ""};
    return table[static_cast<std::size_t>(id - 1)]();
}

std::vector<CriterionResult> run_all()
{
    std::vector<CriterionResult> out;
    for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id));
    return out;
}

}  // namespace amix::suite
