#include "ncgb/standardbasis.hpp"

#include <algorithm>

#include "ncgb/completion.hpp"
#include "ncgb/error.hpp"

namespace ncgb {

namespace {

void require_nonzero(std::span<const Poly> polys, const char* what)
{
    for (std::size_t i = 0; i < polys.size(); ++i)
        if (polys[i].is_zero())
            throw Error(std::string(what) + ": element " + std::to_string(i) + " is zero");
    check_same_ring(polys);
}

std::vector<Poly> leading_homogeneous(std::span<const Poly> polys, int max_degree)
{
    std::vector<Poly> out;
    for (const auto& p : polys)
        if (p.degree() <= max_degree)
            out.push_back(p.lh());
    return out;
}

// Does every element of `gens` reduce to zero against the `degree`-truncated
// basis of <basis_gens>?
bool contained_up_to(std::span<const Poly> gens, std::span<const Poly> basis_gens, int degree)
{
    if (gens.empty())
        return true;
    if (basis_gens.empty())
        return false;
    TruncatedBasis tb = truncated_gb(basis_gens, degree);
    return std::all_of(gens.begin(), gens.end(), [&](const Poly& f) { return remainder(f, tb.elements).is_zero(); });
}

} // namespace

StdBasisOutput min_standard_basis(std::span<const Poly> groebner_basis)
{
    require_nonzero(groebner_basis, "min_standard_basis");
    std::vector<Poly> lhs;
    lhs.reserve(groebner_basis.size());
    for (const auto& g : groebner_basis)
        lhs.push_back(g.lh());
    MinGenOutput mg = min_gen_set(lhs);
    StdBasisOutput out;
    out.kept = mg.kept;
    for (auto i : out.kept) {
        out.basis.push_back(groebner_basis[i]);
        out.lh_min.push_back(lhs[i]);
    }
    out.lh_profile = mg.degree_profile;
    return out;
}

bool is_standard_basis(std::span<const Poly> candidate, std::span<const Poly> reference, int check_degree)
{
    require_nonzero(candidate, "is_standard_basis");
    require_nonzero(reference, "is_standard_basis");
    for (const auto& g : candidate)
        if (!remainder(g, reference).is_zero())
            return false;
    auto a = leading_homogeneous(candidate, check_degree);
    auto b = leading_homogeneous(reference, check_degree);
    return contained_up_to(a, b, check_degree) && contained_up_to(b, a, check_degree);
}

bool check_representation_bound(const Poly& f, std::span<const Poly> divisors, const Representation& rep)
{
    if (!rep.remainder.is_zero())
        return false;
    if (!(expand(rep, divisors) == f))
        return false;
    if (f.is_zero())
        return true;
    int top = f.degree();
    const Ring& ring = f.ring();
    for (const auto& s : rep.summands) {
        if (s.coeff.is_zero())
            continue;
        int d = ring.degree(s.left) + divisors[s.divisor].degree() + ring.degree(s.right);
        if (d > top)
            return false;
    }
    return true;
}

GroebnerCertificate certify_groebner(std::span<const Poly> polys, int degree)
{
    require_nonzero(polys, "certify_groebner");
    GroebnerCertificate cert;
    cert.certified_degree = degree;
    std::vector<Poly> reduced = interreduce(polys);
    for (const auto& h : reduced) {
        bool covered = std::any_of(polys.begin(), polys.end(), [&](const Poly& g) { return divides(g.lm(), h.lm()); });
        if (!covered) {
            cert.ok = false;
            cert.detail = "interreduction produced leading word " + to_string(h.lm(), h.ring().sig) +
                          " outside the leading-word ideal of the input";
            return cert;
        }
    }
    for (std::size_t j = 0; j < reduced.size(); ++j) {
        for (const auto& task : new_obstructions(reduced, j)) {
            if (task.degree > degree) {
                cert.exhaustive = false;
                continue;
            }
            Poly r = remainder(overlap_element(reduced[task.left_index], reduced[task.right_index], task.shape), reduced);
            if (!r.is_zero()) {
                cert.ok = false;
                cert.detail = "overlap of degree " + std::to_string(task.degree) + " leaves remainder " + r.to_string();
                return cert;
            }
        }
    }
    return cert;
}

} // namespace ncgb
