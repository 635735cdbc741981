#include "ultranear/enumerate.hpp"

#include <chrono>
#include <random>

namespace ultranear {

ExtremeReport enumerate_extremes(const DissimilarityMap& d, MobilityQuantifier quantifier,
                                 bool run_oracle) {
    const auto started = std::chrono::steady_clock::now();

    NearestResult nearest = nearest_ultrametric(d);
    TropicalSystem system = build_exterior(d, nearest.q);
    CandidateSet candidates = bernstein_candidates(d, nearest, quantifier);

    ExtremeReport report{std::move(nearest)};
    report.cone_rows = system.rows();
    report.cone_cols = system.cols();
    report.quantifier = quantifier;
    report.candidates_total = static_cast<int>(candidates.all.size());
    report.bernstein_all_resolutions = candidates.bernstein_count(MobilityQuantifier::AllResolutions);
    report.bernstein_per_resolution = candidates.bernstein_count(MobilityQuantifier::PerResolution);

    for (int idx : candidates.bernstein) {
        CandidateInfo& info = candidates.all[static_cast<std::size_t>(idx)];
        TropVector homogenized = homogenize(info.state.metric);
        ExtremalityCertificate certificate = is_extreme(system, homogenized);
        report.multi_node_tails |= certificate.hypergraph.has_multi_node_tail();
        report.candidates.push_back(CandidateVerdict{
            std::move(info.state), std::move(homogenized), std::move(certificate),
            std::move(info.mobile_clusters), info.max_mobile_per_resolution,
            info.nonpositive_entries, false, false});
    }
    // Candidates arrive lexicographically sorted from the sliding closure.
    for (std::size_t i = 0; i < report.candidates.size(); ++i) {
        if (report.candidates[i].certificate.extreme)
            report.extremes.push_back(static_cast<int>(i));
        else
            report.satisfying_nonextremes.push_back(static_cast<int>(i));
    }

    if (run_oracle) {
        const OracleSummary summary = cross_validate(report);
        report.oracle_agreement = summary.agreement;
        report.oracle_disagreements = summary.disagreeing;
    }

    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return report;
}

OracleSummary cross_validate(ExtremeReport& report) {
    OracleSummary summary;
    const std::size_t count = report.candidates.size();
    for (std::size_t i = 0; i < count; ++i) {
        std::vector<TropVector> others;
        others.reserve(count - 1);
        for (std::size_t j = 0; j < count; ++j)
            if (j != i) others.push_back(report.candidates[j].homogenized);

        CandidateVerdict& verdict = report.candidates[i];
        verdict.oracle_checked = true;
        // Nothing else to combine from: trivially outside the span.
        verdict.oracle_extreme =
            others.empty() || !span_membership(verdict.homogenized, others).member;
        if (verdict.oracle_extreme != verdict.certificate.extreme) {
            summary.agreement = false;
            summary.disagreeing.push_back(static_cast<int>(i));
        }
    }
    return summary;
}

bool polytope_probe(const DissimilarityMap& d, const ExtremeReport& report, int trials,
                    unsigned long long seed) {
    if (report.extremes.empty())
        throw ValidationError("polytope probe needs at least one extreme ray");

    std::vector<TropVector> generators;
    generators.reserve(report.extremes.size());
    for (int idx : report.extremes)
        generators.push_back(report.candidates[static_cast<std::size_t>(idx)].homogenized);

    const PairIndexer indexer(d.size());
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> numerator(-40, 40);
    std::uniform_int_distribution<int> denominator(1, 2);

    for (int t = 0; t < trials; ++t) {
        std::vector<TropScalar> coeffs;
        coeffs.reserve(generators.size());
        for (std::size_t g = 0; g < generators.size(); ++g)
            coeffs.push_back(TropScalar(Rat(numerator(rng), denominator(rng))));
        const TropVector combined = trop_combine(generators, coeffs);
        try {
            const Ultrametric back = normalize(combined, indexer);
            if (linf_distance(back.map(), d) > report.nearest.q) return false;
        } catch (const ValidationError&) {
            return false; // combination left the cone
        }
    }
    return true;
}

} // namespace ultranear
