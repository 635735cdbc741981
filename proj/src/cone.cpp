#include "ultranear/cone.hpp"

namespace ultranear {

PairIndexer::PairIndexer(int n) : n_(n) {
    if (n < 1) throw ValidationError("pair indexer needs at least one item");
}

std::pair<int, int> PairIndexer::pair_at(int pos) const {
    if (pos < 1 || pos > pairs()) throw std::out_of_range("pair position out of range");
    return pair_from_rank(n_, pos - 1);
}

std::string PairIndexer::coordinate_name(int pos) const {
    if (pos == 0) return "xi";
    const auto [i, j] = pair_at(pos);
    return "d_" + std::to_string(i + 1) + std::to_string(j + 1);
}

std::string TropicalSystem::row_description(int row) const {
    const int pairs = indexer.pairs();
    if (row < triple_rows) {
        // Three rows per triple: targets (i,j), (i,k), (j,k).
        int triple = row / 3;
        const int n = indexer.items();
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k) {
                    if (triple-- > 0) continue;
                    const int which = row % 3;
                    const auto name = [&](int a, int b) { return indexer.coordinate_name(indexer.position(a, b)); };
                    if (which == 0) return name(i, j) + " <= max(" + name(i, k) + ", " + name(j, k) + ")";
                    if (which == 1) return name(i, k) + " <= max(" + name(i, j) + ", " + name(j, k) + ")";
                    return name(j, k) + " <= max(" + name(i, j) + ", " + name(i, k) + ")";
                }
    } else if (row < triple_rows + pairs) {
        const auto [i, j] = indexer.pair_at(row - triple_rows + 1);
        return "xi + " + rat_str(d.at(i, j)) + " <= " + indexer.coordinate_name(row - triple_rows + 1) +
               " + " + rat_str(q);
    } else if (row < triple_rows + 2 * pairs) {
        const auto [i, j] = indexer.pair_at(row - triple_rows - pairs + 1);
        return indexer.coordinate_name(row - triple_rows - pairs + 1) + " - " + rat_str(q) +
               " <= xi + " + rat_str(d.at(i, j));
    }
    throw std::out_of_range("row out of range");
}

TropicalSystem build_exterior(const DissimilarityMap& d, const Rat& q) {
    const int n = d.size();
    if (n < 2) throw ValidationError("exterior description needs at least two items");
    if (q < 0) throw ValidationError("nearest distance must be nonnegative");

    PairIndexer indexer(n);
    const int pairs = indexer.pairs();
    const int triple_rows = n * (n - 1) * (n - 2) / 2;
    const int rows = triple_rows + 2 * pairs;

    TropMatrix a(static_cast<std::size_t>(rows), static_cast<std::size_t>(indexer.dim()));
    TropMatrix b(static_cast<std::size_t>(rows), static_cast<std::size_t>(indexer.dim()));

    int row = 0;
    const Rat zero(0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                const int ij = indexer.position(i, j);
                const int ik = indexer.position(i, k);
                const int jk = indexer.position(j, k);
                a.at(row, ij) = zero;
                b.at(row, ik) = zero;
                b.at(row, jk) = zero;
                ++row;
                a.at(row, ik) = zero;
                b.at(row, ij) = zero;
                b.at(row, jk) = zero;
                ++row;
                a.at(row, jk) = zero;
                b.at(row, ij) = zero;
                b.at(row, ik) = zero;
                ++row;
            }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            a.at(row, 0) = d.at(i, j);
            b.at(row, indexer.position(i, j)) = q;
            ++row;
        }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            a.at(row, indexer.position(i, j)) = -q;
            b.at(row, 0) = d.at(i, j);
            ++row;
        }

    return TropicalSystem{std::move(a), std::move(b), indexer, q, d, triple_rows};
}

TropVector homogenize(const Ultrametric& delta) {
    const int n = delta.size();
    PairIndexer indexer(n);
    TropVector v(static_cast<std::size_t>(indexer.dim()));
    v[0] = TropScalar(Rat(0));
    for (std::size_t k = 0; k < delta.upper().size(); ++k)
        v[k + 1] = TropScalar(delta.upper()[k]);
    return v;
}

Ultrametric normalize(const TropVector& v, const PairIndexer& indexer,
                      std::vector<std::string> labels) {
    if (static_cast<int>(v.dim()) != indexer.dim())
        throw ValidationError("vector dimension does not match the indexer");
    if (v[0].is_bottom())
        throw ValidationError("cannot normalize: auxiliary coordinate is bottom");
    const Rat shift = v[0].value();
    std::vector<Rat> upper(static_cast<std::size_t>(indexer.pairs()));
    for (int pos = 1; pos < indexer.dim(); ++pos) {
        if (v[static_cast<std::size_t>(pos)].is_bottom())
            throw ValidationError("cannot normalize: bottom entry at " +
                                  indexer.coordinate_name(pos));
        upper[static_cast<std::size_t>(pos - 1)] =
            v[static_cast<std::size_t>(pos)].value() - shift;
    }
    return Ultrametric(DissimilarityMap(indexer.items(), std::move(upper), std::move(labels)));
}

Membership check_membership(const TropVector& v, const TropicalSystem& sys) {
    const TropVector lhs = trop_mat_vec(sys.a, v);
    const TropVector rhs = trop_mat_vec(sys.b, v);
    for (std::size_t r = 0; r < lhs.dim(); ++r)
        if (!(lhs[r] <= rhs[r])) return Membership{false, static_cast<int>(r)};
    return Membership{true, -1};
}

} // namespace ultranear
