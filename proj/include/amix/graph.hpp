#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace amix {

enum class Family { path, complete, complete_bipartite, cycle };

/// Simple undirected graph stored as a dense 0/1 adjacency matrix.
///
/// Instances are immutable once built; every constructor path validates
/// symmetry, a zero diagonal and 0/1 entries.
class Graph {
public:
    Graph(Eigen::MatrixXd adjacency, std::vector<std::string> labels = {});

    int order() const { return static_cast<int>(adjacency_.rows()); }
    const Eigen::MatrixXd& adjacency() const { return adjacency_; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::vector<int> degrees() const;
    int edge_count() const;

    /// Stable 64-bit FNV-1a digest of (n, adjacency), printed as hex.
    std::string hash() const;

private:
    Eigen::MatrixXd adjacency_;
    std::vector<std::string> labels_;
};

Graph make_family(Family kind, const std::vector<int>& params);
Graph path_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int m, int n);
Graph cycle_graph(int n);

/// A(G□H) = A(G)⊗I_m + I_n⊗A(H); vertex (a,b) sits at index a·m + b.
Graph cartesian_product(const Graph& g, const Graph& h);

/// Edge-list text: first line n, then "u v" lines with u < v; '#' comments.
Graph parse_edge_list(std::string_view text);

/// G(n, p) random graph, reproducible from the seed.
Graph random_graph(int n, double edge_probability, std::uint64_t seed);

}  // namespace amix
