#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "amix/errors.hpp"
#include "amix/spectral.hpp"

using namespace amix;

TEST_CASE("P3 eigenvalues and idempotents")
{
    const auto sd = decompose(path_graph(3));
    const double r2 = std::sqrt(2.0);
    REQUIRE(sd.eigenvalue_count() == 3);
    CHECK(sd.thetas[0] == doctest::Approx(r2).epsilon(1e-14));
    CHECK(std::abs(sd.thetas[1]) < 1e-14);
    CHECK(sd.thetas[2] == doctest::Approx(-r2).epsilon(1e-14));

    Eigen::MatrixXd e0(3, 3), e1(3, 3), e2(3, 3);
    e0 << 1, r2, 1, r2, 2, r2, 1, r2, 1;
    e0 /= 4.0;
    e1 << 1, 0, -1, 0, 0, 0, -1, 0, 1;
    e1 /= 2.0;
    e2 << 1, -r2, 1, -r2, 2, -r2, 1, -r2, 1;
    e2 /= 4.0;
    CHECK((sd.idempotents[0] - e0).cwiseAbs().maxCoeff() < 1e-14);
    CHECK((sd.idempotents[1] - e1).cwiseAbs().maxCoeff() < 1e-14);
    CHECK((sd.idempotents[2] - e2).cwiseAbs().maxCoeff() < 1e-14);
    CHECK(sd.multiplicities == std::vector<int>{1, 1, 1});
}

TEST_CASE("K_n splits into J/n and I - J/n")
{
    for (int n = 2; n <= 9; ++n) {
        const auto sd = decompose(complete_graph(n));
        REQUIRE(sd.eigenvalue_count() == 2);
        CHECK(sd.thetas[0] == doctest::Approx(n - 1.0).epsilon(1e-13));
        CHECK(sd.thetas[1] == doctest::Approx(-1.0).epsilon(1e-13));
        CHECK(sd.multiplicities == std::vector<int>{1, n - 1});
        const Eigen::MatrixXd j = Eigen::MatrixXd::Constant(n, n, 1.0 / n);
        CHECK((sd.idempotents[0] - j).cwiseAbs().maxCoeff() < 1e-13);
        CHECK((sd.idempotents[1] - (Eigen::MatrixXd::Identity(n, n) - j)).cwiseAbs().maxCoeff() < 1e-13);
    }
}

TEST_CASE("K_{m,n} spectrum")
{
    for (int m = 1; m <= 4; ++m)
        for (int n = m; n <= 5; ++n) {
            if (m + n < 3) continue;
            const auto sd = decompose(complete_bipartite_graph(m, n));
            REQUIRE(sd.eigenvalue_count() == 3);
            CHECK(sd.thetas[0] == doctest::Approx(std::sqrt(m * n)).epsilon(1e-13));
            CHECK(std::abs(sd.thetas[1]) < 1e-12);
            CHECK(sd.multiplicities == std::vector<int>{1, m + n - 2, 1});
        }
}

TEST_CASE("decomposition invariants on 100 random graphs")
{
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const int n = 1 + static_cast<int>(seed % 8);
        const Graph g = random_graph(n, 0.5, seed);
        const auto sd = decompose(g);
        const auto res = check_decomposition(sd, g.adjacency());
        CHECK(res.resolution < 1e-9);
        CHECK(res.orthogonality < 1e-8);
        CHECK(res.idempotency < 1e-8);
        CHECK(res.reconstruction < 1e-8);
        CHECK(res.trace_integrality < 1e-8);
        int total = 0;
        for (int m : sd.multiplicities) total += m;
        CHECK(total == n);
        for (int r = 0; r + 1 < sd.eigenvalue_count(); ++r) CHECK(sd.thetas[r] > sd.thetas[r + 1]);
        for (const auto& e : sd.idempotents) CHECK(e == e.transpose());
    }
}

TEST_CASE("decompose is deterministic")
{
    const Graph g = random_graph(8, 0.5, 31);
    const auto a = decompose(g);
    const auto b = decompose(g);
    REQUIRE(a.eigenvalue_count() == b.eigenvalue_count());
    for (int r = 0; r < a.eigenvalue_count(); ++r)
        CHECK((a.idempotents[r] - b.idempotents[r]).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("degenerate product spectra group correctly")
{
    // C4 x C4 has eigenvalues 4, 2, 0, -2, -4 with multiplicities 1, 4, 6, 4, 1.
    const auto sd = decompose(cartesian_product(cycle_graph(4), cycle_graph(4)));
    CHECK(sd.multiplicities == std::vector<int>{1, 4, 6, 4, 1});
}

TEST_CASE("gap tables")
{
    SUBCASE("P3")
    {
        const auto t = gap_table(decompose(path_graph(3)));
        CHECK(t.entries.size() == 3);
        REQUIRE(t.distinct_gaps.size() == 2);
        CHECK(t.distinct_gaps[0].value == doctest::Approx(std::sqrt(2.0)));
        CHECK(t.distinct_gaps[0].pairs == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
        CHECK(t.distinct_gaps[1].value == doctest::Approx(2.0 * std::sqrt(2.0)));
        CHECK(t.distinct_gaps[1].pairs == std::vector<std::pair<int, int>>{{0, 2}});
    }
    SUBCASE("K2")
    {
        const auto t = gap_table(decompose(complete_graph(2)));
        REQUIRE(t.distinct_gaps.size() == 1);
        CHECK(t.distinct_gaps[0].value == doctest::Approx(2.0));
    }
    SUBCASE("P4")
    {
        const double a = (1.0 + std::sqrt(5.0)) / 2.0, b = (1.0 - std::sqrt(5.0)) / 2.0;
        const auto t = gap_table(decompose(path_graph(4)));
        REQUIRE(t.distinct_gaps.size() == 4);
        const std::vector<double> expected = {a + b, -2.0 * b, a - b, 2.0 * a};  // ascending
        for (std::size_t i = 0; i < 4; ++i) CHECK(t.distinct_gaps[i].value == doctest::Approx(expected[i]).epsilon(1e-12));
        CHECK(t.distinct_gaps[0].pairs.size() == 2);  // α+β is shared by two pairs
        for (const auto& e : t.entries) CHECK(e.delta > 0.0);
    }
}

TEST_CASE("decompose rejects bad input")
{
    CHECK_THROWS_AS(decompose(path_graph(3), 0.0), InvalidParameter);
    CHECK_THROWS_AS(decompose(Graph(Eigen::MatrixXd::Zero(1025, 1025))), SizeError);
}
