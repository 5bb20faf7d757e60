#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ncgb/division.hpp"
#include "ncgb/minimalgen.hpp"

namespace ncgb {

struct StdBasisOutput {
    /// Indices into the input Groebner basis.
    std::vector<std::size_t> kept;
    /// The selected elements themselves.
    std::vector<Poly> basis;
    /// Their leading homogeneous parts: a minimal homogeneous generating
    /// set of the associated graded ideal.
    std::vector<Poly> lh_min;
    DegreeProfile lh_profile;
};

/// Minimal standard basis from a finite Groebner basis under a graded
/// ordering: run the minimal-generator selection on the leading
/// homogeneous parts and keep the matching originals. Whether the input
/// really is a Groebner basis is the caller's responsibility; see
/// certify_groebner.
StdBasisOutput min_standard_basis(std::span<const Poly> groebner_basis);

/// True iff <LH(G)> and <LH(reference)> agree in every degree up to
/// `check_degree` and every element of G lies in the ideal of
/// `reference`. `reference` must be a Groebner basis of the ideal.
bool is_standard_basis(std::span<const Poly> candidate, std::span<const Poly> reference, int check_degree);

/// True iff rep reconstructs f exactly with zero remainder and every
/// summand u*g*v has top degree at most the top degree of f.
bool check_representation_bound(const Poly& f, std::span<const Poly> divisors, const Representation& rep);

struct GroebnerCertificate {
    bool ok = true;
    /// Overlaps up to this degree were checked.
    int certified_degree = 0;
    /// No overlap of the interreduced set exceeded the bound, so the
    /// certificate covers every degree.
    bool exhaustive = true;
    std::string detail;
};

/// Checks the Groebner property of `polys` through overlap elements of
/// degree <= `degree`. The set is interreduced first; every new leading
/// word must be a multiple of an original one.
GroebnerCertificate certify_groebner(std::span<const Poly> polys, int degree);

} // namespace ncgb
