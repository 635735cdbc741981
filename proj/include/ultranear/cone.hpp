#pragma once

#include "ultranear/metric_trees.hpp"
#include "ultranear/tropical.hpp"

namespace ultranear {

/// Coordinate convention for the homogenized cone: coordinate 0 is the
/// auxiliary variable, coordinate 1 + pair_rank(i, j) holds pair (i, j) in
/// lexicographic order.
class PairIndexer {
public:
    explicit PairIndexer(int n);

    int items() const { return n_; }
    int pairs() const { return n_ * (n_ - 1) / 2; }
    int dim() const { return pairs() + 1; }

    int position(int i, int j) const { return 1 + pair_rank(n_, i, j); }
    std::pair<int, int> pair_at(int pos) const; // pos >= 1

    /// "xi" for coordinate 0, otherwise "d_ij" with 1-based item labels.
    std::string coordinate_name(int pos) const;

private:
    int n_;
};

/// Homogenized exterior description {x : Ax <= Bx} of the cone of nearest
/// ultrametrics. Row layout: all triangle-inequality rows in lexicographic
/// triple order (three rows per triple, targets (i,j), (i,k), (j,k)), then the
/// upper-bound rows xi + d_ij <= x_ij + q, then the lower-bound rows
/// x_ij - q <= xi + d_ij, both in pair order.
struct TropicalSystem {
    TropMatrix a;
    TropMatrix b;
    PairIndexer indexer;
    Rat q;
    DissimilarityMap d; // kept so hypergraph construction and reports can label rows
    int triple_rows = 0;

    int rows() const { return static_cast<int>(a.rows()); }
    int cols() const { return static_cast<int>(a.cols()); }
    std::string row_description(int row) const;
};

/// Builds the n^2(n-1)/2 x (n(n-1)/2 + 1) system. For n = 2 the triple block
/// is empty and only the distance rows are emitted (triple_rows == 0).
TropicalSystem build_exterior(const DissimilarityMap& d, const Rat& q);

/// (0, delta_12, delta_13, ..., delta_{n-1,n}).
TropVector homogenize(const Ultrametric& delta);

/// Subtracts coordinate 0 from every entry, drops it, and reshapes into a
/// symmetric map. Throws if coordinate 0 is bottom or the result is not an
/// ultrametric (the vector was not in the cone).
Ultrametric normalize(const TropVector& v, const PairIndexer& indexer,
                      std::vector<std::string> labels = {});

struct Membership {
    bool member = false;
    int violated_row = -1; // first violated row, 0-based; -1 when member
};

Membership check_membership(const TropVector& v, const TropicalSystem& sys);

} // namespace ultranear
