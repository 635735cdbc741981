#include "ultranear/datasets.hpp"
#include "ultranear/enumerate.hpp"
#include "ultranear/extend.hpp"
#include "ultranear/io.hpp"

#include <pybind11/pybind11.h>

namespace py = pybind11;
using namespace ultranear;

namespace {

py::object fraction_type() {
    return py::module_::import("fractions").attr("Fraction");
}

py::object to_fraction(const Rat& value) {
    return fraction_type()(rat_str(value));
}

Rat rat_from_py(const py::handle& value) {
    if (py::isinstance<py::int_>(value) ||
        py::isinstance(value, fraction_type())) {
        return parse_rational(py::str(value).cast<std::string>());
    }
    if (py::isinstance<py::str>(value)) return parse_rational(value.cast<std::string>());
    if (py::isinstance<py::float_>(value)) {
        // Doubles are dyadic rationals; convert exactly through the integer
        // ratio to keep the core float-free.
        const py::tuple ratio = value.attr("as_integer_ratio")();
        return parse_rational(py::str(ratio[0]).cast<std::string>()) /
               parse_rational(py::str(ratio[1]).cast<std::string>());
    }
    throw py::type_error("matrix entries must be int, float, str or Fraction");
}

RatMatrix matrix_from_py(const py::sequence& rows) {
    RatMatrix out;
    for (const py::handle& row : rows) {
        out.emplace_back();
        for (const py::handle& cell : py::cast<py::sequence>(row))
            out.back().push_back(rat_from_py(cell));
    }
    return out;
}

py::list matrix_to_py(const DissimilarityMap& d) {
    py::list rows;
    for (int i = 0; i < d.size(); ++i) {
        py::list row;
        for (int j = 0; j < d.size(); ++j) row.append(to_fraction(d.at(i, j)));
        rows.append(std::move(row));
    }
    return rows;
}

py::list vector_to_py(const std::vector<Rat>& values) {
    py::list out;
    for (const Rat& v : values) out.append(to_fraction(v));
    return out;
}

DissimilarityMap input_map(const py::object& matrix_or_name) {
    if (py::isinstance<py::str>(matrix_or_name)) {
        const auto name = matrix_or_name.cast<std::string>();
        if (auto builtin = builtin_dataset(name)) return *builtin;
        throw py::value_error("unknown dataset '" + name + "'");
    }
    return validate_dissimilarity(matrix_from_py(py::cast<py::sequence>(matrix_or_name)));
}

Ultrametric candidate_map(const py::sequence& rows) {
    return Ultrametric(DissimilarityMap::from_square(matrix_from_py(rows)));
}

MobilityQuantifier quantifier_of(const std::string& name) {
    if (name == "all-resolutions") return MobilityQuantifier::AllResolutions;
    if (name == "per-resolution") return MobilityQuantifier::PerResolution;
    throw py::value_error("quantifier must be 'all-resolutions' or 'per-resolution'");
}

py::dict nearest_to_py(const NearestResult& nr) {
    py::dict out;
    out["q"] = to_fraction(nr.q);
    out["delta_star"] = matrix_to_py(nr.delta_star.map());
    out["d_star"] = matrix_to_py(nr.d_star);
    py::list mst;
    for (const MstEdge& e : nr.mst_edges)
        mst.append(py::make_tuple(e.i + 1, e.j + 1, to_fraction(e.weight)));
    out["mst_edges"] = std::move(mst);
    return out;
}

py::dict verdict_to_py(const CandidateVerdict& verdict, const DissimilarityMap& d) {
    py::dict out;
    out["vector"] = vector_to_py(verdict.state.metric.upper());
    out["matrix"] = matrix_to_py(verdict.state.metric.map());
    out["newick"] = to_newick(verdict.state.tree, NewickStyle::NodeWeights, d.labels());
    out["extreme"] = verdict.certificate.extreme;
    if (verdict.oracle_checked) out["oracle_extreme"] = verdict.oracle_extreme;
    py::list clusters;
    for (const auto& cluster : verdict.mobile_clusters) {
        py::list members;
        for (int item : cluster) members.append(item + 1);
        clusters.append(std::move(members));
    }
    out["mobile_clusters"] = std::move(clusters);
    return out;
}

py::dict report_to_py(const ExtremeReport& report, const DissimilarityMap& d) {
    py::dict out;
    out["n"] = d.size();
    out["q"] = to_fraction(report.nearest.q);
    out["delta_star"] = matrix_to_py(report.nearest.delta_star.map());
    out["cone_rows"] = report.cone_rows;
    out["cone_cols"] = report.cone_cols;
    out["candidates_total"] = report.candidates_total;
    out["filtered_count_all_resolutions"] = report.bernstein_all_resolutions;
    out["filtered_count_per_resolution"] = report.bernstein_per_resolution;
    py::list extremes, nonextremes;
    for (int idx : report.extremes)
        extremes.append(verdict_to_py(report.candidates[static_cast<std::size_t>(idx)], d));
    for (int idx : report.satisfying_nonextremes)
        nonextremes.append(verdict_to_py(report.candidates[static_cast<std::size_t>(idx)], d));
    out["extremes"] = std::move(extremes);
    out["satisfying_nonextremes"] = std::move(nonextremes);
    out["oracle_agreement"] = report.oracle_agreement;
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Tropical polytope of nearest ultrametrics: exact construction, "
              "extremality certificates and extreme-ray enumeration.";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ValidationError& err) {
            PyErr_SetString(PyExc_ValueError, err.what());
        }
    });

    m.def("dataset", [](const std::string& name) {
        if (auto builtin = builtin_dataset(name)) return matrix_to_py(*builtin);
        throw py::value_error("unknown dataset '" + name + "'");
    }, py::arg("name"), "Bundled example matrix ('paper-n3', 'paper-n4' or 'paper-n8').");

    m.def("validate", [](const py::sequence& rows) {
        return validate_dissimilarity(matrix_from_py(rows)).size();
    }, py::arg("matrix"), "Validate a dissimilarity matrix; returns the item count.");

    m.def("is_ultrametric", [](const py::sequence& rows) {
        return is_ultrametric(DissimilarityMap::from_square(matrix_from_py(rows)));
    }, py::arg("matrix"));

    m.def("nearest", [](const py::object& matrix) {
        const DissimilarityMap d = input_map(matrix);
        return nearest_to_py(nearest_ultrametric(d));
    }, py::arg("matrix"), "Nearest ultrametric, optimal distance, subdominant map and MST.");

    m.def("newick", [](const py::sequence& rows) {
        const Ultrametric delta = candidate_map(rows);
        return to_newick(tree_from_ultrametric(delta));
    }, py::arg("matrix"), "Tree serialization of an ultrametric matrix.");

    m.def("extremes", [](const py::object& matrix, const std::string& quantifier, bool oracle) {
        const DissimilarityMap d = input_map(matrix);
        return report_to_py(enumerate_extremes(d, quantifier_of(quantifier), oracle), d);
    }, py::arg("matrix"), py::arg("quantifier") = "all-resolutions", py::arg("oracle") = true,
       "Full enumeration report with certificates.");

    m.def("check", [](const py::object& matrix, const py::sequence& candidate) {
        const DissimilarityMap d = input_map(matrix);
        const Ultrametric delta = candidate_map(candidate);
        const NearestResult nr = nearest_ultrametric(d);
        if (linf_distance(delta.map(), d) != nr.q)
            throw py::value_error("candidate is not nearest to the input map");
        const TropicalSystem sys = build_exterior(d, nr.q);
        const ExtremalityCertificate cert = is_extreme(sys, homogenize(delta));
        py::dict out;
        out["extreme"] = cert.extreme;
        py::list components;
        for (const auto& component : cert.scc.components) {
            py::list names;
            for (int node : component) names.append(sys.indexer.coordinate_name(node));
            components.append(std::move(names));
        }
        out["sccs"] = std::move(components);
        out["q"] = to_fraction(nr.q);
        return out;
    }, py::arg("matrix"), py::arg("candidate"), "Certify one candidate ultrametric.");

    m.def("extend", [](const py::object& matrix, const py::sequence& candidate,
                       const py::object& epsilon) {
        const DissimilarityMap d = input_map(matrix);
        const ExtensionResult ext = extend_instance(d, candidate_map(candidate),
                                                    rat_from_py(epsilon));
        py::dict out;
        out["d_ext"] = matrix_to_py(ext.d_ext);
        out["delta_ext"] = matrix_to_py(ext.delta_ext.map());
        out["epsilon"] = to_fraction(ext.epsilon);
        out["root_weight"] = to_fraction(ext.r);
        return out;
    }, py::arg("matrix"), py::arg("candidate"), py::arg("epsilon") = 1,
       "Grow an instance by one item, preserving extremality status.");

    m.def("counterexample", [](int n, const py::object& epsilon) {
        const Counterexample built = build_counterexample(n, rat_from_py(epsilon));
        py::dict out;
        out["d"] = matrix_to_py(built.d);
        out["witness"] = matrix_to_py(built.witness.map());
        out["witness_root_weight"] = to_fraction(root_weight(built.witness));
        return out;
    }, py::arg("n"), py::arg("epsilon") = 1,
       "Instance whose filtered candidate set strictly contains its extreme set.");
}
