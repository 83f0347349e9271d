#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "amix/errors.hpp"
#include "amix/graph.hpp"
#include "amix/spectral.hpp"

using namespace amix;

namespace {

void check_invariants(const Graph& g)
{
    const auto& a = g.adjacency();
    CHECK(a == a.transpose());
    CHECK(a.diagonal().isZero(0.0));
    CHECK(((a.array() == 0.0) || (a.array() == 1.0)).all());
}

}  // namespace

TEST_CASE("path P3 has the expected adjacency")
{
    Eigen::MatrixXd expected(3, 3);
    expected << 0, 1, 0, 1, 0, 1, 0, 1, 0;
    CHECK(make_family(Family::path, {3}).adjacency() == expected);
}

TEST_CASE("K1 is a single isolated vertex")
{
    const Graph g = make_family(Family::complete, {1});
    CHECK(g.order() == 1);
    CHECK(g.adjacency()(0, 0) == 0.0);
}

TEST_CASE("K2,2 joins each of {0,1} to each of {2,3}")
{
    const Graph g = make_family(Family::complete_bipartite, {2, 2});
    const auto& a = g.adjacency();
    for (int i : {0, 1})
        for (int j : {2, 3}) CHECK(a(i, j) == 1.0);
    CHECK(a(0, 1) == 0.0);
    CHECK(a(2, 3) == 0.0);
    CHECK(g.degrees() == std::vector<int>{2, 2, 2, 2});
}

TEST_CASE("family constructors keep the adjacency invariants")
{
    for (int n = 1; n <= 7; ++n) {
        check_invariants(path_graph(n));
        check_invariants(complete_graph(n));
        if (n >= 3) check_invariants(cycle_graph(n));
        for (int m = 1; m <= 4; ++m) check_invariants(complete_bipartite_graph(m, n));
        const Eigen::VectorXd rows = complete_graph(n).adjacency().rowwise().sum();
        CHECK((rows.array() == n - 1.0).all());
    }
}

TEST_CASE("family parameter validation")
{
    CHECK_THROWS_AS(make_family(Family::path, {}), InvalidParameter);
    CHECK_THROWS_AS(make_family(Family::path, {3, 4}), InvalidParameter);
    CHECK_THROWS_AS(make_family(Family::complete, {0}), InvalidParameter);
    CHECK_THROWS_AS(make_family(Family::cycle, {2}), InvalidParameter);
    CHECK_THROWS_AS(make_family(Family::complete_bipartite, {2}), InvalidParameter);
    CHECK_THROWS_AS(make_family(Family::complete_bipartite, {0, 2}), InvalidParameter);
}

TEST_CASE("weighted, asymmetric or looped adjacency is rejected")
{
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(2, 2);
    w(0, 1) = w(1, 0) = 0.5;
    CHECK_THROWS_AS(Graph{w}, InvalidParameter);
    Eigen::MatrixXd asym = Eigen::MatrixXd::Zero(2, 2);
    asym(0, 1) = 1.0;
    CHECK_THROWS_AS(Graph{asym}, InvalidParameter);
    Eigen::MatrixXd loop = Eigen::MatrixXd::Zero(2, 2);
    loop(1, 1) = 1.0;
    CHECK_THROWS_AS(Graph{loop}, InvalidParameter);
}

TEST_CASE("K2 x K2 is the 4-cycle")
{
    const Graph g = cartesian_product(complete_graph(2), complete_graph(2));
    CHECK(g.degrees() == std::vector<int>{2, 2, 2, 2});
    const Eigen::MatrixXd a = g.adjacency();
    CHECK((a * a * a).trace() == 0.0);  // no triangles
    CHECK(g.labels() == std::vector<std::string>{"0,0", "0,1", "1,0", "1,1"});
}

TEST_CASE("P2 x P3 matches the vertex-pair definition of the product")
{
    const Graph g = path_graph(2), h = path_graph(3);
    const Graph p = cartesian_product(g, h);
    // (a,b) ~ (c,d) iff a = c and b ~ d, or b = d and a ~ c.
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 3; ++d) {
                    const bool adj = (a == c && h.adjacency()(b, d) == 1.0) || (b == d && g.adjacency()(a, c) == 1.0);
                    CHECK(p.adjacency()(a * 3 + b, c * 3 + d) == (adj ? 1.0 : 0.0));
                }
    auto deg = p.degrees();
    std::sort(deg.begin(), deg.end());
    CHECK(deg == std::vector<int>{2, 2, 2, 2, 3, 3});
    check_invariants(p);
}

TEST_CASE("K1 x H reproduces H")
{
    for (const Graph& h : {path_graph(4), cycle_graph(5), complete_bipartite_graph(2, 3)})
        CHECK(cartesian_product(complete_graph(1), h).adjacency() == h.adjacency());
}

TEST_CASE("G x H and H x G are cospectral")
{
    const Graph g = path_graph(3), h = cycle_graph(4);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> a(cartesian_product(g, h).adjacency());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> b(cartesian_product(h, g).adjacency());
    CHECK((a.eigenvalues() - b.eigenvalues()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("edge-list parsing")
{
    CHECK(parse_edge_list("3\n0 1\n1 2").adjacency() == path_graph(3).adjacency());
    CHECK(parse_edge_list("2\n0 1\n").adjacency() == complete_graph(2).adjacency());
    CHECK(parse_edge_list("# a comment\n3\n\n0 1  # trailing\n  1\t2\n").adjacency() == path_graph(3).adjacency());

    CHECK_THROWS_AS(parse_edge_list("3\n0 3"), RangeError);
    CHECK_THROWS_AS(parse_edge_list("3\n-1 2"), RangeError);
    CHECK_THROWS_AS(parse_edge_list("3\n1 1"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3\n0 1\n1 0"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3\n0 x"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3\n0 1 2"), ParseError);
    CHECK_THROWS_AS(parse_edge_list(""), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 4\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("0\n"), RangeError);
}

TEST_CASE("graph hash is stable and content-sensitive")
{
    CHECK(path_graph(3).hash() == path_graph(3).hash());
    CHECK(path_graph(3).hash() != complete_graph(3).hash());
    CHECK(path_graph(3).hash().size() == 16);
}

TEST_CASE("random graphs are reproducible")
{
    CHECK(random_graph(8, 0.5, 9).adjacency() == random_graph(8, 0.5, 9).adjacency());
    check_invariants(random_graph(8, 0.5, 9));
    CHECK(random_graph(6, 1.0, 1).adjacency() == complete_graph(6).adjacency());
}
