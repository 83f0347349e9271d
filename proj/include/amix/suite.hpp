#pragma once

#include <string>
#include <utility>
#include <vector>

#include "amix/distribution.hpp"
#include "amix/graph.hpp"

namespace amix::suite {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;
};

struct NamedDistribution {
    std::string name;
    Distribution dist;
};

/// Mixed catalog: atoms, Bernoulli, Gaussian, uniform interval, sums,
/// differences, affine transforms and the uniform-real-line limit.
std::vector<NamedDistribution> distribution_catalog();

/// Catalog members that flatten to finitely many atoms.
std::vector<NamedDistribution> atom_catalog();

std::vector<std::pair<std::string, Graph>> small_graph_catalog();

inline constexpr int kCriterionCount = 12;

CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_all();

}  // namespace amix::suite
