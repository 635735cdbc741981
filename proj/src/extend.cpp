#include "ultranear/extend.hpp"

#include "ultranear/datasets.hpp"
#include "ultranear/enumerate.hpp"
#include "ultranear/nearest.hpp"

#include <algorithm>

namespace ultranear {

Rat root_weight(const Ultrametric& delta) {
    if (delta.size() < 2) throw ValidationError("root weight needs at least two items");
    return *std::max_element(delta.upper().begin(), delta.upper().end());
}

namespace {

DissimilarityMap append_item(const DissimilarityMap& base, const Rat& new_entry) {
    const int n = base.size();
    std::vector<Rat> upper;
    upper.reserve(static_cast<std::size_t>((n + 1) * n / 2));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) upper.push_back(base.at(i, j));
        upper.push_back(new_entry);
    }
    std::vector<std::string> labels = base.labels();
    if (!labels.empty()) labels.push_back(std::to_string(n + 1));
    return DissimilarityMap(n + 1, std::move(upper), std::move(labels));
}

} // namespace

ExtensionResult extend_instance(const DissimilarityMap& d, const Ultrametric& delta,
                                const Rat& epsilon) {
    if (epsilon <= 0) throw ValidationError("extension needs a positive epsilon");
    if (delta.size() != d.size()) throw ValidationError("size mismatch between map and ultrametric");

    const Rat q = nearest_ultrametric(d).q;
    if (linf_distance(delta.map(), d) != q)
        throw ValidationError("ultrametric is not nearest to the map (distance " +
                              rat_str(linf_distance(delta.map(), d)) + ", optimum " + rat_str(q) +
                              ")");

    const Rat r = root_weight(delta);
    DissimilarityMap d_ext = append_item(d, r + q + epsilon);
    Ultrametric delta_ext(append_item(delta.map(), r + epsilon));
    return ExtensionResult{std::move(d_ext), std::move(delta_ext), epsilon, r};
}

Counterexample build_counterexample(int n_target, const Rat& epsilon) {
    if (n_target < 4) throw ValidationError("counterexamples exist for four or more items only");

    DissimilarityMap d = paper_n4();
    ExtremeReport report = enumerate_extremes(d, MobilityQuantifier::AllResolutions, false);
    if (report.satisfying_nonextremes.empty())
        throw std::logic_error("seed instance lost its non-extreme candidates");
    // Candidates are sorted, so the first non-extreme is the lexicographically
    // smallest witness.
    const int first = report.satisfying_nonextremes.front();
    Ultrametric witness = report.candidates[static_cast<std::size_t>(first)].state.metric;

    for (int size = 4; size < n_target; ++size) {
        ExtensionResult ext = extend_instance(d, witness, epsilon);
        d = std::move(ext.d_ext);
        witness = std::move(ext.delta_ext);
    }
    return Counterexample{std::move(d), std::move(witness)};
}

} // namespace ultranear
