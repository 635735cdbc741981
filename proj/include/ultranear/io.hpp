#pragma once

#include "ultranear/enumerate.hpp"
#include "ultranear/extend.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>

namespace ultranear {

using Json = nlohmann::ordered_json;

/// Plain-text matrix: one row per line, entries comma- or whitespace-
/// separated; integers, decimals and "p/q" rationals accepted. Blank lines
/// and "#" comments are skipped.
RatMatrix parse_matrix(std::istream& in);
RatMatrix parse_matrix_text(const std::string& text);

std::string matrix_csv(const RatMatrix& m);
Json matrix_json(const DissimilarityMap& d);

Json mst_json(const std::vector<MstEdge>& edges);
Json nearest_json(const NearestResult& nr, const DissimilarityMap& d);

/// One CSV line per inequality: the A row followed by the B row, "-inf" for
/// bottom entries.
std::string system_csv(const TropicalSystem& sys);
Json system_json(const TropicalSystem& sys);

Json candidates_json(const DissimilarityMap& d, const CandidateSet& set);

Json report_json(const ExtremeReport& report, const DissimilarityMap& d,
                 const std::vector<std::vector<Rat>>* reference_columns = nullptr);
/// Columns are rays (normalized, lexicographic order), rows are pairs.
std::string rays_csv(const ExtremeReport& report);
std::string newick_batch(const ExtremeReport& report, const DissimilarityMap& d);

Json certificate_json(const ExtremalityCertificate& cert, const PairIndexer& indexer);
/// Hyperarcs with multi-node tails are rendered through a synthetic
/// AND-junction point; components become clusters.
std::string hypergraph_dot(const DirectedHypergraph& h, const PairIndexer& indexer,
                           const SccDecomposition* scc = nullptr);

Json extension_json(const ExtensionResult& ext);

} // namespace ultranear
