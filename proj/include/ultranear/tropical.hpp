#pragma once

#include "ultranear/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace ultranear {

/// Scalar of the max-plus semiring: an exact rational or the bottom element.
/// Tropical addition (operator+) is max, tropical multiplication (operator*)
/// is ordinary addition. Bottom is a distinct variant, neutral for + and
/// absorbing for *.
class TropScalar {
public:
    TropScalar() = default; // bottom
    TropScalar(Rat v) : finite_(true), value_(std::move(v)) {}
    TropScalar(int v) : finite_(true), value_(v) {}

    static TropScalar bottom() { return TropScalar(); }

    bool is_bottom() const { return !finite_; }
    bool is_finite() const { return finite_; }

    const Rat& value() const {
        if (!finite_) throw std::logic_error("TropScalar: value() on bottom");
        return value_;
    }

    friend TropScalar operator+(const TropScalar& a, const TropScalar& b) {
        if (a.is_bottom()) return b;
        if (b.is_bottom()) return a;
        return a.value_ >= b.value_ ? a : b;
    }

    friend TropScalar operator*(const TropScalar& a, const TropScalar& b) {
        if (a.is_bottom() || b.is_bottom()) return bottom();
        return TropScalar(a.value_ + b.value_);
    }

    friend bool operator==(const TropScalar& a, const TropScalar& b) {
        if (a.finite_ != b.finite_) return false;
        return !a.finite_ || a.value_ == b.value_;
    }
    friend bool operator!=(const TropScalar& a, const TropScalar& b) { return !(a == b); }

    // Total order with bottom below every finite value.
    friend bool operator<(const TropScalar& a, const TropScalar& b) {
        if (a.is_bottom()) return b.is_finite();
        if (b.is_bottom()) return false;
        return a.value_ < b.value_;
    }
    friend bool operator<=(const TropScalar& a, const TropScalar& b) { return !(b < a); }
    friend bool operator>(const TropScalar& a, const TropScalar& b) { return b < a; }
    friend bool operator>=(const TropScalar& a, const TropScalar& b) { return !(a < b); }

private:
    bool finite_ = false;
    Rat value_ = 0;
};

/// Text form: canonical rational or "-inf".
std::string trop_str(const TropScalar& s);

class TropVector {
public:
    explicit TropVector(std::size_t dim) : entries_(dim) {
        if (dim == 0) throw std::invalid_argument("TropVector: dimension must be positive");
    }
    TropVector(std::initializer_list<TropScalar> entries) : entries_(entries) {
        if (entries_.empty()) throw std::invalid_argument("TropVector: dimension must be positive");
    }
    explicit TropVector(std::vector<TropScalar> entries) : entries_(std::move(entries)) {
        if (entries_.empty()) throw std::invalid_argument("TropVector: dimension must be positive");
    }

    std::size_t dim() const { return entries_.size(); }
    TropScalar& operator[](std::size_t i) { return entries_[i]; }
    const TropScalar& operator[](std::size_t i) const { return entries_[i]; }

    friend bool operator==(const TropVector& a, const TropVector& b) {
        return a.entries_ == b.entries_;
    }

private:
    std::vector<TropScalar> entries_;
};

/// Dense row-major max-plus matrix; fresh entries are bottom.
class TropMatrix {
public:
    TropMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    TropScalar& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const TropScalar& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    TropVector row(std::size_t r) const {
        std::vector<TropScalar> out(entries_.begin() + static_cast<long>(r * cols_),
                                    entries_.begin() + static_cast<long>((r + 1) * cols_));
        return TropVector(std::move(out));
    }

    friend bool operator==(const TropMatrix& a, const TropMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<TropScalar> entries_;
};

struct TropDot {
    TropScalar value;
    std::vector<int> argmax; // 0-based positions attaining a finite maximum; empty iff bottom
};

TropDot trop_dot(const TropVector& x, const TropVector& y);
TropVector trop_mat_vec(const TropMatrix& a, const TropVector& x);

/// Entrywise max over i of coeffs[i] * generators[i].
TropVector trop_combine(std::span<const TropVector> generators,
                        std::span<const TropScalar> coeffs);

struct SpanMembership {
    bool member = false;
    std::vector<TropScalar> witness; // residuated coefficients, entrywise maximal
};

/// Residuation test: computes the greatest coefficients whose combination
/// stays below v, then checks whether it reproduces v exactly. If not, no
/// coefficients exist at all.
SpanMembership span_membership(const TropVector& v, std::span<const TropVector> generators);

} // namespace ultranear
