#pragma once

#include <span>
#include <vector>

#include "ncgb/poly.hpp"

namespace ncgb {

/// One step of a division: coeff * left * G[divisor] * right.
struct Summand {
    Scalar coeff;
    Word left;
    std::size_t divisor;
    Word right;
};

/// f = sum of summands + remainder, with every summand's leading word
/// at most LM(f) and no remainder word divisible by any LM(G[j]).
struct Representation {
    std::vector<Summand> summands;
    Poly remainder;
};

/// Full division of `f` by `divisors`. At each step the largest
/// remaining word is reduced by the lowest-index divisor whose leading
/// word divides it, at its leftmost occurrence. With `track` off the
/// summand list stays empty; the remainder is identical either way.
Representation divide(const Poly& f, std::span<const Poly> divisors, bool track = true);

Poly remainder(const Poly& f, std::span<const Poly> divisors);

/// True iff no word of `f` is divisible by a leading word of `divisors`.
bool is_normal(const Poly& f, std::span<const Poly> divisors);

/// Sum of the summands plus the remainder.
Poly expand(const Representation& rep, std::span<const Poly> divisors);

/// True iff no leading word divides another element's leading word.
bool is_lm_reduced(std::span<const Poly> polys);

/// Monic, LM-reduced generating set of the same ideal. Any element whose
/// leading word is divisible by another's is replaced by its remainder
/// against the others (and dropped when that is zero), until no such
/// pair is left. Surviving elements keep their relative order.
std::vector<Poly> interreduce(std::span<const Poly> polys);

} // namespace ncgb
