#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace ultranear {

// Exact rational scalar used throughout. The argmax sets and active-constraint
// detection this library relies on are discontinuous in the inputs, so all
// arithmetic is exact; floating point is never used in the core.
using Rat = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

using RatMatrix = std::vector<std::vector<Rat>>;

/// Input or structural violation, carrying the offending cell (1-based) when known.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg, int row = 0, int col = 0)
        : std::runtime_error(msg), row_(row), col_(col) {}

    int row() const { return row_; }
    int col() const { return col_; }

private:
    int row_;
    int col_;
};

/// Parses "3", "-4", "3/4", "1.5" style tokens into an exact rational.
Rat parse_rational(const std::string& token);

/// Canonical text form: "p" or "p/q" with q > 1.
std::string rat_str(const Rat& value);

} // namespace ultranear
