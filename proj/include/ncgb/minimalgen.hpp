#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "ncgb/completion.hpp"

namespace ncgb {

using DegreeProfile = std::map<int, std::size_t>;

struct MinGenOutput {
    /// Indices into the caller's generator list, in processing order.
    std::vector<std::size_t> kept;
    /// Truncated at the largest generator degree.
    TruncatedBasis basis;
    /// degree -> number of kept generators of that degree.
    DegreeProfile degree_profile;
};

/// Selects a minimal homogeneous generating subset of `generators` while
/// building the truncated Groebner basis of the ideal they generate.
/// Inputs are stably sorted by degree; an empty input yields an empty
/// output.
MinGenOutput min_gen_set(std::span<const Poly> generators);

/// Independent minimality check of `claimed` (indices into `generators`).
/// Each claimed element must lie outside the ideal of the claimed
/// elements processed before it, and every unclaimed element must lie in
/// the ideal of the claimed ones.
bool verify_minimal(std::span<const Poly> generators, std::span<const std::size_t> claimed);

DegreeProfile degree_profile(std::span<const Poly> polys);

} // namespace ncgb
