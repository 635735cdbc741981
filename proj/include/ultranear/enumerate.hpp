#pragma once

#include "ultranear/hypergraph.hpp"
#include "ultranear/sliding.hpp"

namespace ultranear {

struct CandidateVerdict {
    CandidateState state;
    TropVector homogenized;
    ExtremalityCertificate certificate;
    std::vector<std::vector<int>> mobile_clusters;
    int max_mobile_per_resolution = 0;
    bool nonpositive_entries = false;
    bool oracle_checked = false;
    bool oracle_extreme = false;
};

struct ExtremeReport {
    NearestResult nearest;
    int cone_rows = 0;
    int cone_cols = 0;
    MobilityQuantifier quantifier = MobilityQuantifier::AllResolutions;
    int candidates_total = 0;             // size of the full sliding closure
    int bernstein_all_resolutions = 0;    // counts under both quantifier readings
    int bernstein_per_resolution = 0;
    std::vector<CandidateVerdict> candidates = {}; // filtered set, lexicographic by vector
    std::vector<int> extremes = {};           // indices into `candidates`
    std::vector<int> satisfying_nonextremes = {}; // certificate lacks a greatest component
    bool oracle_agreement = true;
    std::vector<int> oracle_disagreements = {};
    bool multi_node_tails = false;
    double seconds = 0.0; // diagnostics only, never serialized
};

/// Full pipeline: nearest ultrametric, exterior system, sliding closure,
/// tangent-hypergraph certificate per filtered candidate, and (optionally)
/// the residuation cross-check.
ExtremeReport enumerate_extremes(const DissimilarityMap& d,
                                 MobilityQuantifier quantifier = MobilityQuantifier::AllResolutions,
                                 bool run_oracle = true);

struct OracleSummary {
    bool agreement = true;
    std::vector<int> disagreeing; // candidate indices
};

/// Residuation oracle: a candidate is extreme iff it is not in the span of
/// the other candidates. Disagreements with the certificate are reported,
/// not thrown.
OracleSummary cross_validate(ExtremeReport& report);

/// Random tropical combinations of the extremes must land inside the
/// polytope (ultrametric, distance at most q). Deterministic given the seed.
bool polytope_probe(const DissimilarityMap& d, const ExtremeReport& report,
                    int trials, unsigned long long seed);

} // namespace ultranear
