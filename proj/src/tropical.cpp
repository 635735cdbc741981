#include "ultranear/tropical.hpp"

namespace ultranear {

std::string trop_str(const TropScalar& s) {
    return s.is_bottom() ? "-inf" : rat_str(s.value());
}

TropDot trop_dot(const TropVector& x, const TropVector& y) {
    if (x.dim() != y.dim())
        throw std::invalid_argument("trop_dot: dimension mismatch");
    TropDot out;
    for (std::size_t i = 0; i < x.dim(); ++i) {
        const TropScalar term = x[i] * y[i];
        if (term.is_bottom()) continue;
        if (out.value.is_bottom() || out.value < term) {
            out.value = term;
            out.argmax.assign(1, static_cast<int>(i));
        } else if (term == out.value) {
            out.argmax.push_back(static_cast<int>(i));
        }
    }
    return out;
}

TropVector trop_mat_vec(const TropMatrix& a, const TropVector& x) {
    if (a.cols() != x.dim())
        throw std::invalid_argument("trop_mat_vec: dimension mismatch");
    TropVector out(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        TropScalar best;
        for (std::size_t c = 0; c < a.cols(); ++c) best = best + a.at(r, c) * x[c];
        out[r] = best;
    }
    return out;
}

TropVector trop_combine(std::span<const TropVector> generators,
                        std::span<const TropScalar> coeffs) {
    if (generators.empty())
        throw std::invalid_argument("trop_combine: empty generator list");
    if (generators.size() != coeffs.size())
        throw std::invalid_argument("trop_combine: generator/coefficient count mismatch");
    const std::size_t dim = generators.front().dim();
    TropVector out(dim);
    for (std::size_t g = 0; g < generators.size(); ++g) {
        if (generators[g].dim() != dim)
            throw std::invalid_argument("trop_combine: dimension mismatch");
        for (std::size_t i = 0; i < dim; ++i) out[i] = out[i] + coeffs[g] * generators[g][i];
    }
    return out;
}

SpanMembership span_membership(const TropVector& v, std::span<const TropVector> generators) {
    if (generators.empty())
        throw std::invalid_argument("span_membership: empty generator list");
    bool any_finite = false;
    for (std::size_t i = 0; i < v.dim(); ++i) any_finite |= v[i].is_finite();
    if (!any_finite)
        throw std::invalid_argument("span_membership: vector has no finite entry");

    SpanMembership out;
    out.witness.reserve(generators.size());
    for (const TropVector& u : generators) {
        if (u.dim() != v.dim())
            throw std::invalid_argument("span_membership: dimension mismatch");
        // Greatest lambda with lambda * u <= v: min over the support of u of
        // v_j - u_j, forced to bottom when u is finite where v is not.
        TropScalar lambda;
        bool constrained = false, forced_bottom = false;
        for (std::size_t j = 0; j < v.dim() && !forced_bottom; ++j) {
            if (u[j].is_bottom()) continue;
            if (v[j].is_bottom()) {
                forced_bottom = true;
                continue;
            }
            const Rat slack = v[j].value() - u[j].value();
            if (!constrained || slack < lambda.value()) lambda = TropScalar(slack);
            constrained = true;
        }
        if (forced_bottom)
            lambda = TropScalar::bottom();
        else if (!constrained)
            lambda = TropScalar(Rat(0)); // all-bottom generator: any coefficient acts the same
        out.witness.push_back(lambda);
    }
    out.member = trop_combine(generators, out.witness) == v;
    return out;
}

} // namespace ultranear
