#pragma once

#include "ultranear/metric_trees.hpp"

namespace ultranear {

/// Maximum off-diagonal entry: the weight of the root of the tree encoding.
Rat root_weight(const Ultrametric& delta);

struct ExtensionResult {
    DissimilarityMap d_ext; // agrees with d on [n], new entries r + q + epsilon
    Ultrametric delta_ext;  // agrees with delta on [n], new entries r + epsilon
    Rat epsilon;
    Rat r;
};

/// One-node extension that preserves extremality status: the new item sits at
/// distance r + q + epsilon from everything, and the extended ultrametric
/// joins it at r + epsilon. Requires delta to be at distance exactly q from d.
ExtensionResult extend_instance(const DissimilarityMap& d, const Ultrametric& delta,
                                const Rat& epsilon);

struct Counterexample {
    DissimilarityMap d;
    Ultrametric witness; // passes the candidate filter yet is not extreme
};

/// Grows the bundled n=4 instance one item at a time (default epsilon 1)
/// until n_target, carrying along a witness that stays in the candidate set
/// but never becomes extreme.
Counterexample build_counterexample(int n_target, const Rat& epsilon = Rat(1));

} // namespace ultranear
