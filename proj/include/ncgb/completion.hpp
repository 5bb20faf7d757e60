#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ncgb/division.hpp"
#include "ncgb/poly.hpp"

namespace ncgb {

/// A pending overlap o(basis[left_index], u; v, basis[right_index]).
/// `degree` is the weighted degree of LM(left) * u, known without
/// building the overlap element.
struct ObstructionTask {
    std::size_t left_index;
    std::size_t right_index;
    OverlapShape shape;
    int degree;
};

/// o(f, u; v, g) = f*u / LC(f) - v*g / LC(g). Throws ncgb::Error if the
/// shape does not satisfy LM(f) u = v LM(g), LM(f) !| v, LM(g) !| u.
Poly overlap_element(const Poly& f, const Poly& g, const OverlapShape& shape);

/// Obstructions created when basis[fresh] joins basis[0..fresh): for each
/// older i the shapes of (i, fresh) then (fresh, i), and finally the
/// self-overlaps of basis[fresh].
std::vector<ObstructionTask> new_obstructions(std::span<const Poly> basis, std::size_t fresh);

struct GroebnerCheck {
    bool ok = true;
    /// Nonzero remainder of the first failing overlap element.
    std::optional<Poly> witness;
    std::optional<ObstructionTask> obstruction;
};

/// For homogeneous, LM-reduced G: every overlap element of degree <= n
/// (self-pairs included) reduces to zero on division by G restricted to
/// degree <= n.
GroebnerCheck is_groebner_up_to(std::span<const Poly> basis, int n);

/// Mandatory stopping rule for the unbounded completion.
struct CompletionGuard {
    /// Obstructions of larger degree are left pending.
    std::optional<int> max_degree;
    /// Completion adds no element that would take the basis past this
    /// size. The interreduced input is always kept, even when larger.
    std::optional<std::size_t> max_elements;
};

enum class CompletionStatus { Complete, GuardHit };

struct CompletionResult {
    /// Sorted by non-decreasing degree of the leading word.
    std::vector<Poly> basis;
    CompletionStatus status = CompletionStatus::Complete;
    std::size_t pending = 0;
};

/// Buchberger-style completion in the free algebra. The input is
/// interreduced first; obstructions are processed lowest degree first,
/// FIFO within a degree. On GuardHit the returned partial basis still
/// generates the ideal.
CompletionResult buchberger(std::span<const Poly> generators, const CompletionGuard& guard);

/// A degree-truncated Groebner basis: homogeneous monic elements in
/// non-decreasing degree order.
struct TruncatedBasis {
    std::vector<Poly> elements;
    int truncation_degree = 0;

    /// Elements of degree <= n.
    std::vector<Poly> up_to(int n) const;
};

/// Result of the shared degree-by-degree engine. `kept` lists input
/// indices whose remainder was nonzero when processed.
struct GradedRun {
    TruncatedBasis basis;
    std::vector<std::size_t> kept;
};

/// Degree-by-degree completion of homogeneous generators up to degree
/// n0. For the current least degree n, all overlap elements of degree n
/// are reduced first (FIFO by creation), then the generators of degree n
/// (input order). Nonzero remainders join the basis monic; their new
/// obstructions are recorded only up to degree n0. Inputs are stably
/// sorted by degree; generators of degree > n0 are not processed.
GradedRun graded_completion(std::span<const Poly> generators, int n0);

/// Degree-n0 truncated Groebner basis of the graded ideal <F>.
TruncatedBasis truncated_gb(std::span<const Poly> generators, int n0);

/// Throws ncgb::Error unless every element is nonzero and homogeneous.
void require_homogeneous(std::span<const Poly> polys, const char* what);

} // namespace ncgb
