#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ncgb/error.hpp"
#include "ncgb/poly.hpp"

namespace ncgb {

/// Parse failure with a 1-based source position and the tokens that
/// would have been accepted there.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, std::string message, std::set<std::string> expected = {});

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::set<std::string>& expected() const { return expected_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::set<std::string> expected_;
};

struct ProblemFile {
    RingPtr ring;
    std::vector<Poly> generators;
};

/// Problem file grammar (whitespace and `#` comments are ignored):
///
///     field Q;            | field GF 7;
///     vars x:1, y:2;      (weight defaults to 1)
///     order deglex x > y; (defaults to declaration order)
///     gens: x^2 - y, 3/2*x*y*x - y^2*x;
///
/// `vars` is required and must precede `order` and `gens`; `field` must
/// precede `gens`. Each statement may appear at most once.
ProblemFile parse_problem(std::string_view text);

/// A single polynomial expression over `ring`.
Poly parse_poly(const RingPtr& ring, std::string_view text);

/// Canonical text: terms in descending order, `0` for zero. Inverse of
/// parse_poly.
std::string print_canonical(const Poly& f);

} // namespace ncgb
