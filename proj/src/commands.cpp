#include "ncgb/commands.hpp"

#include <iomanip>

#include <json.hpp>

#include "ncgb/division.hpp"
#include "ncgb/minimalgen.hpp"
#include "ncgb/standardbasis.hpp"

namespace ncgb {

namespace {

void print_lines(std::ostream& out, std::span<const Poly> polys, const char* indent = "")
{
    for (const auto& p : polys)
        out << indent << print_canonical(p) << '\n';
}

void print_profile(std::ostream& out, const DegreeProfile& profile)
{
    for (const auto& [d, count] : profile)
        out << "  degree " << d << ": " << count << '\n';
}

} // namespace

int run_gb(const ProblemFile& problem, const CompletionGuard& guard, std::ostream& out, std::ostream& err)
{
    CompletionResult res = buchberger(problem.generators, guard);
    print_lines(out, res.basis);
    if (res.status == CompletionStatus::GuardHit) {
        err << "guard hit: " << res.pending << " obstruction(s) pending; basis is partial\n";
        return kExitGuardHit;
    }
    return kExitOk;
}

int run_truncate(const ProblemFile& problem, int degree, std::ostream& out, std::ostream&)
{
    TruncatedBasis tb = truncated_gb(problem.generators, degree);
    print_lines(out, tb.elements);
    return kExitOk;
}

int run_mingen(const ProblemFile& problem, bool with_basis, std::ostream& out, std::ostream&)
{
    MinGenOutput mg = min_gen_set(problem.generators);
    out << "kept:\n";
    for (auto i : mg.kept)
        out << "  [" << i << "] " << print_canonical(problem.generators[i]) << '\n';
    out << "profile:\n";
    print_profile(out, mg.degree_profile);
    if (with_basis) {
        out << "basis (truncated at degree " << mg.basis.truncation_degree << "):\n";
        print_lines(out, mg.basis.elements, "  ");
    }
    return kExitOk;
}

int run_stdbasis(const ProblemFile& problem, std::optional<int> certify_degree, std::ostream& out,
                 std::ostream& err)
{
    const auto& gb = problem.generators;
    std::optional<GroebnerCertificate> cert;
    if (certify_degree) {
        cert = certify_groebner(gb, *certify_degree);
        if (!cert->ok) {
            err << "input is not a Groebner basis: " << cert->detail << '\n';
            return kExitInputError;
        }
    }
    StdBasisOutput sb = min_standard_basis(gb);
    out << "kept:";
    for (auto i : sb.kept)
        out << ' ' << i;
    out << "\nbasis:\n";
    for (std::size_t k = 0; k < sb.kept.size(); ++k)
        out << "  [" << sb.kept[k] << "] " << print_canonical(sb.basis[k]) << '\n';
    out << "lh profile:\n";
    print_profile(out, sb.lh_profile);
    if (cert) {
        bool same = is_standard_basis(sb.basis, gb, *certify_degree);
        out << "certified: groebner overlaps up to degree " << *certify_degree
            << (cert->exhaustive ? " (all overlaps)" : " (partial)") << "; <LH> equality up to degree "
            << *certify_degree << ": " << (same ? "yes" : "no") << '\n';
        if (!same)
            return kExitInternalError;
    }
    return kExitOk;
}

int run_reduce(const ProblemFile& problem, std::string_view poly, bool certificate, std::ostream& out,
               std::ostream&)
{
    Poly f = parse_poly(problem.ring, poly);
    Representation rep = divide(f, problem.generators, certificate);
    if (!certificate) {
        out << print_canonical(rep.remainder) << '\n';
        return kExitOk;
    }
    const Signature& sig = problem.ring->sig;
    out << "remainder: " << print_canonical(rep.remainder) << '\n';
    out << "summands:\n";
    for (const auto& s : rep.summands)
        out << "  " << s.coeff.to_string() << " * " << to_string(s.left, sig) << " * g[" << s.divisor << "] * "
            << to_string(s.right, sig) << '\n';
    return kExitOk;
}

int run_dims(const ProblemFile& problem, int degree, bool json, const OracleLimits& limits, std::ostream& out,
             std::ostream&)
{
    OracleReport rep = oracle_report(*problem.ring, problem.generators, degree, limits);
    std::vector<std::size_t> quotient;
    for (std::size_t q = 0; q < rep.ambient_dims.size(); ++q)
        quotient.push_back(rep.ambient_dims[q] - rep.ideal_dims[q]);
    if (json) {
        nlohmann::json doc = {
            {"max_degree", rep.max_degree},   {"ambient_dims", rep.ambient_dims},
            {"ideal_dims", rep.ideal_dims},   {"quotient_dims", quotient},
            {"betti", rep.betti},
        };
        out << doc.dump(2) << '\n';
        return kExitOk;
    }
    out << std::setw(6) << "deg" << std::setw(10) << "ambient" << std::setw(10) << "ideal" << std::setw(10)
        << "quotient" << std::setw(8) << "betti" << '\n';
    for (std::size_t q = 0; q < rep.ambient_dims.size(); ++q)
        out << std::setw(6) << q << std::setw(10) << rep.ambient_dims[q] << std::setw(10) << rep.ideal_dims[q]
            << std::setw(10) << quotient[q] << std::setw(8) << rep.betti[q] << '\n';
    return kExitOk;
}

} // namespace ncgb
