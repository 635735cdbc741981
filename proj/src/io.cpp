#include "ultranear/io.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace ultranear {

RatMatrix parse_matrix(std::istream& in) {
    RatMatrix rows;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream fields(line);
        std::vector<Rat> row;
        std::string token;
        while (fields >> token) row.push_back(parse_rational(token));
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ValidationError("no matrix rows found in input");
    return rows;
}

RatMatrix parse_matrix_text(const std::string& text) {
    std::istringstream in(text);
    return parse_matrix(in);
}

std::string matrix_csv(const RatMatrix& m) {
    std::ostringstream out;
    for (const auto& row : m) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out << ',';
            out << rat_str(row[c]);
        }
        out << '\n';
    }
    return out.str();
}

namespace {

Json matrix_rows_json(const RatMatrix& m) {
    Json rows = Json::array();
    for (const auto& row : m) {
        Json cells = Json::array();
        for (const Rat& cell : row) cells.push_back(rat_str(cell));
        rows.push_back(std::move(cells));
    }
    return rows;
}

Json vector_json(const std::vector<Rat>& values) {
    Json out = Json::array();
    for (const Rat& v : values) out.push_back(rat_str(v));
    return out;
}

Json cluster_json(const std::vector<int>& cluster) {
    Json out = Json::array();
    for (int item : cluster) out.push_back(item + 1);
    return out;
}

Json clusters_json(const std::vector<std::vector<int>>& clusters) {
    Json out = Json::array();
    for (const auto& cluster : clusters) out.push_back(cluster_json(cluster));
    return out;
}

Json pair_names_json(const PairIndexer& indexer) {
    Json out = Json::array();
    for (int pos = 1; pos < indexer.dim(); ++pos) out.push_back(indexer.coordinate_name(pos));
    return out;
}

Json scc_json(const SccDecomposition& scc, const PairIndexer& indexer) {
    Json components = Json::array();
    for (const auto& component : scc.components) {
        Json names = Json::array();
        for (int node : component) names.push_back(indexer.coordinate_name(node));
        components.push_back(std::move(names));
    }
    Json out;
    out["components"] = std::move(components);
    if (scc.greatest) {
        Json names = Json::array();
        for (int node : scc.components[static_cast<std::size_t>(*scc.greatest)])
            names.push_back(indexer.coordinate_name(node));
        out["greatest"] = std::move(names);
    } else {
        out["greatest"] = nullptr;
    }
    return out;
}

Json provenance_json(const std::vector<SlideStep>& steps) {
    Json out = Json::array();
    for (const SlideStep& step : steps) {
        Json entry;
        entry["resolution"] = step.resolution;
        entry["slid_cluster"] = cluster_json(step.cluster);
        entry["from_weight"] = rat_str(step.from_weight);
        entry["to_weight"] = rat_str(step.to_weight);
        out.push_back(std::move(entry));
    }
    return out;
}

std::string quantifier_name(MobilityQuantifier q) {
    return q == MobilityQuantifier::AllResolutions ? "all-resolutions" : "per-resolution";
}

} // namespace

Json matrix_json(const DissimilarityMap& d) {
    return matrix_rows_json(d.square());
}

Json mst_json(const std::vector<MstEdge>& edges) {
    Json out = Json::array();
    for (const MstEdge& e : edges) {
        Json entry;
        entry["i"] = e.i + 1;
        entry["j"] = e.j + 1;
        entry["weight"] = rat_str(e.weight);
        out.push_back(std::move(entry));
    }
    return out;
}

Json nearest_json(const NearestResult& nr, const DissimilarityMap& d) {
    Json out;
    out["n"] = d.size();
    out["q"] = rat_str(nr.q);
    out["delta_star"] = matrix_json(nr.delta_star.map());
    out["delta_star_newick"] =
        to_newick(tree_from_ultrametric(nr.delta_star), NewickStyle::NodeWeights, d.labels());
    out["d_star"] = matrix_json(nr.d_star);
    out["mst_edges"] = mst_json(nr.mst_edges);
    return out;
}

std::string system_csv(const TropicalSystem& sys) {
    std::ostringstream out;
    for (int r = 0; r < sys.rows(); ++r) {
        for (int c = 0; c < sys.cols(); ++c) {
            if (c) out << ',';
            out << trop_str(sys.a.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)));
        }
        for (int c = 0; c < sys.cols(); ++c)
            out << ','
                << trop_str(sys.b.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)));
        out << '\n';
    }
    return out.str();
}

Json system_json(const TropicalSystem& sys) {
    auto matrix = [&](const TropMatrix& m) {
        Json rows = Json::array();
        for (std::size_t r = 0; r < m.rows(); ++r) {
            Json cells = Json::array();
            for (std::size_t c = 0; c < m.cols(); ++c) cells.push_back(trop_str(m.at(r, c)));
            rows.push_back(std::move(cells));
        }
        return rows;
    };
    Json out;
    out["n"] = sys.indexer.items();
    out["rows"] = sys.rows();
    out["cols"] = sys.cols();
    out["q"] = rat_str(sys.q);
    out["coordinates"] = [&] {
        Json names = Json::array();
        for (int pos = 0; pos < sys.indexer.dim(); ++pos)
            names.push_back(sys.indexer.coordinate_name(pos));
        return names;
    }();
    out["A"] = matrix(sys.a);
    out["B"] = matrix(sys.b);
    return out;
}

Json candidates_json(const DissimilarityMap& d, const CandidateSet& set) {
    Json out;
    out["n"] = d.size();
    out["q"] = rat_str(set.q);
    out["total"] = set.all.size();
    out["quantifier"] = quantifier_name(set.quantifier);
    out["filtered_count_all_resolutions"] =
        set.bernstein_count(MobilityQuantifier::AllResolutions);
    out["filtered_count_per_resolution"] = set.bernstein_count(MobilityQuantifier::PerResolution);
    out["pair_order"] = pair_names_json(PairIndexer(d.size()));
    Json list = Json::array();
    for (std::size_t idx = 0; idx < set.all.size(); ++idx) {
        const CandidateInfo& info = set.all[idx];
        Json entry;
        entry["vector"] = vector_json(info.state.metric.upper());
        entry["newick"] =
            to_newick(info.state.tree, NewickStyle::NodeWeights, d.labels());
        entry["mobile_clusters"] = clusters_json(info.mobile_clusters);
        entry["max_mobile_per_resolution"] = info.max_mobile_per_resolution;
        entry["in_filtered_set"] =
            std::find(set.bernstein.begin(), set.bernstein.end(), static_cast<int>(idx)) !=
            set.bernstein.end();
        if (info.nonpositive_entries) entry["nonpositive_entries"] = true;
        entry["provenance"] = provenance_json(info.state.provenance);
        list.push_back(std::move(entry));
    }
    out["candidates"] = std::move(list);
    return out;
}

Json report_json(const ExtremeReport& report, const DissimilarityMap& d,
                 const std::vector<std::vector<Rat>>* reference_columns) {
    const PairIndexer indexer(d.size());

    auto verdict_json = [&](const CandidateVerdict& verdict) {
        Json entry;
        entry["vector"] = vector_json(verdict.state.metric.upper());
        entry["newick"] = to_newick(verdict.state.tree, NewickStyle::NodeWeights, d.labels());
        entry["extreme"] = verdict.certificate.extreme;
        entry["scc"] = scc_json(verdict.certificate.scc, indexer);
        entry["mobile_clusters"] = clusters_json(verdict.mobile_clusters);
        if (verdict.nonpositive_entries) entry["nonpositive_entries"] = true;
        if (verdict.oracle_checked) entry["oracle_extreme"] = verdict.oracle_extreme;
        if (reference_columns) {
            const auto& columns = *reference_columns;
            auto match = std::find(columns.begin(), columns.end(), verdict.state.metric.upper());
            if (match != columns.end())
                entry["reference_column"] = static_cast<int>(match - columns.begin()) + 1;
        }
        return entry;
    };

    Json out;
    out["n"] = d.size();
    out["q"] = rat_str(report.nearest.q);
    out["delta_star"] = matrix_json(report.nearest.delta_star.map());
    out["d_star"] = matrix_json(report.nearest.d_star);
    out["mst_edges"] = mst_json(report.nearest.mst_edges);
    out["cone"] = Json{{"rows", report.cone_rows}, {"cols", report.cone_cols}};
    out["quantifier"] = quantifier_name(report.quantifier);
    out["candidates_total"] = report.candidates_total;
    out["filtered_count_all_resolutions"] = report.bernstein_all_resolutions;
    out["filtered_count_per_resolution"] = report.bernstein_per_resolution;
    out["pair_order"] = pair_names_json(indexer);
    out["extreme_count"] = report.extremes.size();
    out["satisfying_nonextreme_count"] = report.satisfying_nonextremes.size();

    Json extremes = Json::array();
    for (int idx : report.extremes)
        extremes.push_back(verdict_json(report.candidates[static_cast<std::size_t>(idx)]));
    out["extremes"] = std::move(extremes);

    Json nonextremes = Json::array();
    for (int idx : report.satisfying_nonextremes)
        nonextremes.push_back(verdict_json(report.candidates[static_cast<std::size_t>(idx)]));
    out["satisfying_nonextremes"] = std::move(nonextremes);

    bool any_nonpositive = false;
    for (const CandidateVerdict& verdict : report.candidates)
        any_nonpositive |= verdict.nonpositive_entries;
    Json warnings = Json::array();
    if (any_nonpositive)
        warnings.push_back("some candidates carry nonpositive entries; they are reported, not dropped");
    if (report.multi_node_tails)
        warnings.push_back("a tangent hypergraph produced a hyperarc with a multi-node tail");
    out["warnings"] = std::move(warnings);

    out["oracle_agreement"] = report.oracle_agreement;
    if (!report.oracle_disagreements.empty()) {
        Json bad = Json::array();
        for (int idx : report.oracle_disagreements) bad.push_back(idx);
        out["oracle_disagreements"] = std::move(bad);
    }
    return out;
}

std::string rays_csv(const ExtremeReport& report) {
    std::ostringstream out;
    const std::size_t pairs =
        report.candidates.empty() ? 0 : report.candidates.front().state.metric.upper().size();
    for (std::size_t row = 0; row < pairs; ++row) {
        bool first = true;
        for (int idx : report.extremes) {
            if (!first) out << ',';
            first = false;
            out << rat_str(
                report.candidates[static_cast<std::size_t>(idx)].state.metric.upper()[row]);
        }
        out << '\n';
    }
    return out.str();
}

std::string newick_batch(const ExtremeReport& report, const DissimilarityMap& d) {
    std::ostringstream out;
    for (int idx : report.extremes)
        out << to_newick(report.candidates[static_cast<std::size_t>(idx)].state.tree,
                         NewickStyle::NodeWeights, d.labels())
            << '\n';
    return out.str();
}

Json certificate_json(const ExtremalityCertificate& cert, const PairIndexer& indexer) {
    Json out;
    out["extreme"] = cert.extreme;
    out["active_constraints"] = cert.hypergraph.arcs.size();
    Json arcs = Json::array();
    for (const Hyperarc& arc : cert.hypergraph.arcs) {
        Json entry;
        Json tail = Json::array();
        for (int node : arc.tail) tail.push_back(indexer.coordinate_name(node));
        Json head = Json::array();
        for (int node : arc.head) head.push_back(indexer.coordinate_name(node));
        entry["tail"] = std::move(tail);
        entry["head"] = std::move(head);
        entry["row"] = arc.row;
        arcs.push_back(std::move(entry));
    }
    out["hyperarcs"] = std::move(arcs);
    out["scc"] = scc_json(cert.scc, indexer);
    return out;
}

std::string hypergraph_dot(const DirectedHypergraph& h, const PairIndexer& indexer,
                           const SccDecomposition* scc) {
    std::ostringstream out;
    out << "digraph tangent {\n  rankdir=LR;\n  node [shape=ellipse];\n";
    if (scc) {
        for (std::size_t c = 0; c < scc->components.size(); ++c) {
            out << "  subgraph cluster_" << c << " {\n    label=\"scc " << c + 1 << "\";\n";
            for (int node : scc->components[c])
                out << "    " << indexer.coordinate_name(node) << ";\n";
            out << "  }\n";
        }
    } else {
        for (int node = 0; node < h.node_count; ++node)
            out << "  " << indexer.coordinate_name(node) << ";\n";
    }
    for (const Hyperarc& arc : h.arcs) {
        if (arc.tail.size() == 1 && arc.head.size() == 1) {
            out << "  " << indexer.coordinate_name(arc.tail.front()) << " -> "
                << indexer.coordinate_name(arc.head.front()) << ";\n";
        } else {
            // AND-junction for hyperarcs that are not plain edges.
            const std::string junction = "and_" + std::to_string(arc.row);
            out << "  " << junction << " [shape=point];\n";
            for (int node : arc.tail)
                out << "  " << indexer.coordinate_name(node) << " -> " << junction << ";\n";
            for (int node : arc.head)
                out << "  " << junction << " -> " << indexer.coordinate_name(node) << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

Json extension_json(const ExtensionResult& ext) {
    Json out;
    out["n"] = ext.d_ext.size();
    out["epsilon"] = rat_str(ext.epsilon);
    out["root_weight"] = rat_str(ext.r);
    out["d_ext"] = matrix_json(ext.d_ext);
    out["delta_ext"] = matrix_json(ext.delta_ext.map());
    out["delta_ext_newick"] =
        to_newick(tree_from_ultrametric(ext.delta_ext), NewickStyle::NodeWeights, ext.d_ext.labels());
    return out;
}

} // namespace ultranear
