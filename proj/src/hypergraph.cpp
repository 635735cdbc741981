#include "ultranear/hypergraph.hpp"

#include <algorithm>

namespace ultranear {

DirectedHypergraph tangent_hypergraph(const TropicalSystem& sys, const TropVector& v) {
    const Membership membership = check_membership(v, sys);
    if (!membership.member)
        throw ValidationError("vector is outside the cone; first violated constraint: " +
                              sys.row_description(membership.violated_row));

    DirectedHypergraph h;
    h.node_count = sys.cols();
    for (int r = 0; r < sys.rows(); ++r) {
        const TropDot lhs = trop_dot(sys.a.row(static_cast<std::size_t>(r)), v);
        const TropDot rhs = trop_dot(sys.b.row(static_cast<std::size_t>(r)), v);
        if (lhs.value.is_bottom() || rhs.value.is_bottom()) continue;
        if (lhs.value != rhs.value) continue;
        h.arcs.push_back(Hyperarc{rhs.argmax, lhs.argmax, r});
    }
    return h;
}

namespace {

// Fixed point of the arc rule starting from an already-marked set.
void close_reachable(const DirectedHypergraph& h, std::vector<char>& reached) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Hyperarc& arc : h.arcs) {
            bool tail_in = true;
            for (int t : arc.tail) tail_in &= static_cast<bool>(reached[static_cast<std::size_t>(t)]);
            if (!tail_in) continue;
            for (int head : arc.head)
                if (!reached[static_cast<std::size_t>(head)]) {
                    reached[static_cast<std::size_t>(head)] = 1;
                    changed = true;
                }
        }
    }
}

std::vector<std::vector<char>> all_pairs_reachability(const DirectedHypergraph& h) {
    std::vector<std::vector<char>> reach(static_cast<std::size_t>(h.node_count));
    for (int u = 0; u < h.node_count; ++u) {
        auto& row = reach[static_cast<std::size_t>(u)];
        row.assign(static_cast<std::size_t>(h.node_count), 0);
        row[static_cast<std::size_t>(u)] = 1;
        close_reachable(h, row);
    }
    return reach;
}

} // namespace

std::vector<int> reachable_from(const DirectedHypergraph& h, int source) {
    if (source < 0 || source >= h.node_count)
        throw std::out_of_range("reachable_from: node out of range");
    std::vector<char> reached(static_cast<std::size_t>(h.node_count), 0);
    reached[static_cast<std::size_t>(source)] = 1;
    close_reachable(h, reached);
    std::vector<int> out;
    for (int v = 0; v < h.node_count; ++v)
        if (reached[static_cast<std::size_t>(v)]) out.push_back(v);
    return out;
}

SccDecomposition scc_decomposition(const DirectedHypergraph& h) {
    const auto reach = all_pairs_reachability(h);

    SccDecomposition out;
    out.component_of.assign(static_cast<std::size_t>(h.node_count), -1);
    for (int u = 0; u < h.node_count; ++u) {
        if (out.component_of[static_cast<std::size_t>(u)] >= 0) continue;
        const int id = static_cast<int>(out.components.size());
        std::vector<int> members;
        for (int v = u; v < h.node_count; ++v)
            if (reach[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] &&
                reach[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)]) {
                members.push_back(v);
                out.component_of[static_cast<std::size_t>(v)] = id;
            }
        out.components.push_back(std::move(members));
    }

    const std::size_t count = out.components.size();
    out.reaches.assign(count, std::vector<bool>(count, false));
    for (std::size_t a = 0; a < count; ++a)
        for (std::size_t b = 0; b < count; ++b) {
            const int ra = out.components[a].front();
            const int rb = out.components[b].front();
            out.reaches[a][b] = reach[static_cast<std::size_t>(ra)][static_cast<std::size_t>(rb)];
        }

    for (std::size_t candidate = 0; candidate < count; ++candidate) {
        bool top = true;
        for (std::size_t other = 0; other < count && top; ++other)
            top = out.reaches[other][candidate];
        if (top) {
            out.greatest = static_cast<int>(candidate);
            break;
        }
    }
    return out;
}

ExtremalityCertificate is_extreme(const TropicalSystem& sys, const TropVector& v) {
    ExtremalityCertificate cert;
    cert.hypergraph = tangent_hypergraph(sys, v);
    cert.scc = scc_decomposition(cert.hypergraph);
    cert.extreme = cert.scc.greatest.has_value();
    return cert;
}

} // namespace ultranear
