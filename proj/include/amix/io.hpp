#pragma once

#include <string>
#include <string_view>

#include <Eigen/Dense>
#include <json.hpp>

#include "amix/graph.hpp"

namespace amix {

/// %.17g, the shortest fixed width that round-trips every double.
std::string format_double(double x);

/// Serialize with every floating value at 17 significant digits.
/// indent < 0 gives a single line.
std::string dump_json(const nlohmann::ordered_json& j, int indent = 2);

nlohmann::ordered_json matrix_json(const Eigen::MatrixXd& m);
nlohmann::ordered_json matrix_json(const Eigen::MatrixXcd& m);

/// "i,j,value" header followed by one row per entry.
std::string matrix_csv(const Eigen::MatrixXd& m);
std::string matrix_csv(const Eigen::MatrixXcd& m);

/// path:n | complete:n | bipartite:m,n | cycle:n | file:PATH | product:(SPEC)x(SPEC)
Graph parse_graph_spec(std::string_view spec);

}  // namespace amix
