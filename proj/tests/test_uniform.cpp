#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "amix/uniform.hpp"
#include "amix/walk.hpp"

using namespace amix;
using std::numbers::pi;

namespace {

std::vector<Graph> small_graphs()
{
    std::vector<Graph> out;
    for (int n = 2; n <= 6; ++n) {
        out.push_back(path_graph(n));
        out.push_back(complete_graph(n));
    }
    for (int n = 3; n <= 6; ++n) out.push_back(cycle_graph(n));
    out.push_back(complete_bipartite_graph(1, 3));
    out.push_back(complete_bipartite_graph(2, 3));
    out.push_back(complete_bipartite_graph(2, 6));
    out.push_back(cartesian_product(complete_graph(2), path_graph(3)));
    for (std::uint64_t s = 0; s < 10; ++s) out.push_back(random_graph(5, 0.6, s));
    return out;
}

}  // namespace

TEST_CASE("necessary trace check")
{
    SUBCASE("K5 fails the upper bound")
    {
        const auto v = necessary_check(decompose(complete_graph(5)));
        CHECK_FALSE(v.necessary_ok);
        CHECK(v.trace_value == doctest::Approx(3.4).epsilon(1e-13));
        CHECK(v.trace_upper_bound == 3.0);
        CHECK(v.reason.find("3.4") != std::string::npos);
        CHECK(v.reason.find("(n+1)/2 = 3") != std::string::npos);
    }
    SUBCASE("K_{2,6}")
    {
        const auto v = necessary_check(decompose(complete_bipartite_graph(2, 6)));
        CHECK_FALSE(v.necessary_ok);
        CHECK(v.trace_value > v.trace_upper_bound);
    }
    SUBCASE("P3 passes")
    {
        const auto v = necessary_check(decompose(path_graph(3)));
        CHECK(v.necessary_ok);
        CHECK(v.trace_value == doctest::Approx(1.25).epsilon(1e-13));
        CHECK(v.multiplicity_lower_bound == doctest::Approx(1.0));
    }
    SUBCASE("K_n trace formula")
    {
        for (int n = 2; n <= 9; ++n) {
            const double expected = 1.0 / n + n * (1.0 - 1.0 / n) * (1.0 - 1.0 / n);
            const auto v = necessary_check(decompose(complete_graph(n)));
            CHECK(v.trace_value == doctest::Approx(expected).epsilon(1e-13));
            CHECK(v.necessary_ok == (n <= 4));
        }
    }
}

TEST_CASE("coefficient_solve")
{
    SUBCASE("P3")
    {
        const auto m = coefficient_solve(decompose(path_graph(3)));
        CHECK(m.feasible);
        CHECK(m.box_ok);
        REQUIRE(m.targets.size() == 2);
        CHECK(std::abs(m.targets[0].coefficient) < 1e-12);
        CHECK(m.targets[1].coefficient == doctest::Approx(-1.0 / 3.0).epsilon(1e-12));
    }
    SUBCASE("P4")
    {
        const auto m = coefficient_solve(decompose(path_graph(4)));
        CHECK(m.feasible);
        REQUIRE(m.targets.size() == 4);
        const std::vector<double> expected = {0.0, 0.0, -0.25, 0.0};
        for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(m.targets[i].coefficient - expected[i]) < 1e-10);
        CHECK(m.targets[2].gap == doctest::Approx(std::sqrt(5.0)).epsilon(1e-12));
    }
    SUBCASE("K_n needs Re phi(n) = 1 - n/2")
    {
        for (int n = 2; n <= 7; ++n) {
            const auto m = coefficient_solve(decompose(complete_graph(n)));
            REQUIRE(m.targets.size() == 1);
            CHECK(m.unconstrained[0] == doctest::Approx(1.0 - n / 2.0).epsilon(1e-12));
            CHECK(m.feasible == (n <= 4));
            CHECK(m.box_ok == (n <= 4));
            if (n > 4) {
                CHECK(m.targets[0].coefficient == -1.0);
                CHECK(m.residual > 1e-3);
                CHECK(m.diagnostic.find("leave [-1, 1]") != std::string::npos);
            }
        }
    }
    SUBCASE("K1 has nothing to solve")
    {
        const auto m = coefficient_solve(decompose(complete_graph(1)));
        CHECK(m.feasible);
        CHECK(m.targets.empty());
    }
}

TEST_CASE("realize_cosine_product")
{
    SUBCASE("P4 uses three quarter-period pairs and one fitting pair")
    {
        const auto sd = decompose(path_graph(4));
        const auto r = realize_cosine_product(coefficient_solve(sd));
        REQUIRE(r);
        REQUIRE(r.pair_times.size() == 4);
        const auto gaps = gap_table(sd).distinct_gaps;
        // zero gaps are 1, sqrt5 - 1 ... sorted largest first
        CHECK(r.pair_times[0] == doctest::Approx(pi / (2.0 * gaps[3].value)));
        CHECK(r.pair_times[1] == doctest::Approx(pi / (2.0 * gaps[1].value)));
        CHECK(r.pair_times[2] == doctest::Approx(pi / (2.0 * gaps[0].value)));
        CHECK(verify_uniform(sd, *r.distribution).uniform);
    }
    SUBCASE("P3")
    {
        const auto sd = decompose(path_graph(3));
        const auto r = realize_cosine_product(coefficient_solve(sd));
        REQUIRE(r);
        CHECK(r.pair_times.size() == 2);
        CHECK(r.pair_times[0] == doctest::Approx(pi / (2.0 * std::sqrt(2.0))));
        CHECK(verify_uniform(sd, *r.distribution).uniform);
    }
    SUBCASE("single zero gap gives one pair")
    {
        const auto sd = decompose(complete_graph(2));
        const auto r = realize_cosine_product(coefficient_solve(sd));
        REQUIRE(r);
        REQUIRE(r.pair_times.size() == 1);
        CHECK(r.pair_times[0] == doctest::Approx(pi / 4.0));
        CHECK(r.parameters.at("mu1") == r.pair_times[0]);
    }
    SUBCASE("two nonzero targets are refused")
    {
        GapTargetMap m;
        m.targets = {{1.0, 0.3, {}}, {2.0, -0.2, {}}};
        const auto r = realize_cosine_product(m);
        CHECK_FALSE(r);
        CHECK(r.reason.find("more than one") != std::string::npos);
    }
    SUBCASE("out-of-range target is refused")
    {
        GapTargetMap m;
        m.targets = {{1.0, -1.5, {}}};
        CHECK_FALSE(realize_cosine_product(m));
    }
}

TEST_CASE("solve_known_family")
{
    SUBCASE("K3 Bernoulli")
    {
        const auto sd = decompose(complete_graph(3));
        const auto r = solve_known_family(sd, FamilyHint::bernoulli);
        REQUIRE(r);
        CHECK(r.parameters.at("p") == doctest::Approx(1.5 / (1.0 - std::cos(3.0))).epsilon(1e-12));
        CHECK(verify_uniform(sd, *r.distribution).uniform);
    }
    SUBCASE("K3 Gaussian")
    {
        const auto sd = decompose(complete_graph(3));
        const auto r = solve_known_family(sd, FamilyHint::gaussian);
        REQUIRE(r);
        CHECK(r.parameters.at("mu") == doctest::Approx(pi / 3.0));
        CHECK(r.parameters.at("sigma2") == doctest::Approx(2.0 * std::log(2.0) / 9.0));
    }
    SUBCASE("P3 Gaussian")
    {
        const auto sd = decompose(path_graph(3));
        const auto r = solve_known_family(sd, FamilyHint::gaussian);
        REQUIRE(r);
        CHECK(r.parameters.at("sigma2") == doctest::Approx(std::log(3.0) / 4.0).epsilon(1e-12));
        CHECK(verify_uniform(sd, *r.distribution).uniform);
    }
    SUBCASE("Dirac catalog")
    {
        CHECK(solve_known_family(decompose(cycle_graph(4)), FamilyHint::dirac_instantaneous));
        CHECK(solve_known_family(decompose(complete_bipartite_graph(1, 3)), FamilyHint::dirac_instantaneous));
        const auto r = solve_known_family(decompose(path_graph(3)), FamilyHint::dirac_instantaneous);
        CHECK_FALSE(r);
        CHECK_FALSE(r.reason.empty());
    }
    SUBCASE("K5 is infeasible for every recipe")
    {
        const auto sd = decompose(complete_graph(5));
        for (auto hint : {FamilyHint::gaussian, FamilyHint::bernoulli, FamilyHint::cosine_product,
                          FamilyHint::dirac_instantaneous})
            CHECK_FALSE(solve_known_family(sd, hint));
    }
    SUBCASE("Bernoulli needs a single gap")
    {
        CHECK_FALSE(solve_known_family(decompose(path_graph(3)), FamilyHint::bernoulli));
    }
}

TEST_CASE("verify_uniform")
{
    CHECK(verify_uniform(decompose(cycle_graph(4)), Distribution::dirac(pi / 4)).uniform);
    const auto bad = verify_uniform(decompose(path_graph(3)), Distribution::dirac(0.0));
    CHECK_FALSE(bad.uniform);
    CHECK(bad.deviation == doctest::Approx(2.0 / 3.0));
    CHECK(verify_uniform(decompose(path_graph(3)), Distribution::dirac(0.0), 0.7).uniform);
}

TEST_CASE("solver soundness over a graph catalog")
{
    for (const Graph& g : small_graphs()) {
        const auto sd = decompose(g);
        const auto verdict = necessary_check(sd);
        const auto targets = coefficient_solve(sd);
        // A failed necessary condition rules out every distribution.
        if (!verdict.necessary_ok) CHECK_FALSE(targets.feasible);

        for (auto hint : {FamilyHint::gaussian, FamilyHint::bernoulli, FamilyHint::cosine_product,
                          FamilyHint::dirac_instantaneous}) {
            const auto r = solve_known_family(sd, hint);
            if (!r) {
                CHECK_FALSE(r.reason.empty());
                continue;
            }
            CHECK((targets.feasible || hint == FamilyHint::dirac_instantaneous));
            CHECK(verify_uniform(sd, *r.distribution, 1e-8).uniform);
            // Round trip: the realized coefficients reproduce the targets.
            if (targets.feasible)
                for (const auto& t : targets.targets)
                    CHECK(std::abs(expected_cos(*r.distribution, t.gap) - t.coefficient) < 1e-8);
        }

        if (targets.feasible) {
            Eigen::MatrixXd m = standard_amm(sd).matrix;
            for (const auto& t : targets.targets)
                for (auto [r, s] : t.pairs) m += 2.0 * t.coefficient * sd.idempotents[r].cwiseProduct(sd.idempotents[s]);
            CHECK((m.array() - 1.0 / g.order()).abs().maxCoeff() < 1e-10);
        }
    }
}

TEST_CASE("worked recipe parameters")
{
    SUBCASE("P4 pair times")
    {
        const auto r = realize_cosine_product(coefficient_solve(decompose(path_graph(4))));
        REQUIRE(r.pair_times.size() == 4);
        CHECK(r.pair_times[0] == doctest::Approx(0.485).epsilon(1e-3));
        CHECK(r.pair_times[1] == doctest::Approx(1.27).epsilon(2e-3));
        CHECK(r.pair_times[2] == doctest::Approx(pi / 2).epsilon(1e-12));
        CHECK(r.pair_times[3] == doctest::Approx(0.9912).epsilon(1e-3));
        CHECK(r.parameters.at("required_cos") == doctest::Approx(-0.601).epsilon(2e-3));
    }
    SUBCASE("P3 pair times")
    {
        const auto r = realize_cosine_product(coefficient_solve(decompose(path_graph(3))));
        REQUIRE(r.pair_times.size() == 2);
        CHECK(r.pair_times[1] == doctest::Approx(std::acos(1.0 / 3.0) / (2.0 * std::sqrt(2.0))).epsilon(1e-12));
    }
    SUBCASE("P3 Gaussian mean is the first quarter period")
    {
        const auto r = solve_known_family(decompose(path_graph(3)), FamilyHint::gaussian);
        REQUIRE(r);
        CHECK(r.parameters.at("mu") == doctest::Approx(pi / (2.0 * std::sqrt(2.0))).epsilon(1e-14));
        CHECK(r.parameters.at("k") == 0.0);
    }
    SUBCASE("K3 Bernoulli p is about 0.753")
    {
        CHECK(solve_known_family(decompose(complete_graph(3)), FamilyHint::bernoulli).parameters.at("p") ==
              doctest::Approx(0.753).epsilon(1e-3));
    }
}
