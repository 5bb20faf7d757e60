#include "ncgb/minimalgen.hpp"

#include <algorithm>
#include <set>

namespace ncgb {

DegreeProfile degree_profile(std::span<const Poly> polys)
{
    DegreeProfile profile;
    for (const auto& p : polys)
        ++profile[p.degree()];
    return profile;
}

MinGenOutput min_gen_set(std::span<const Poly> generators)
{
    require_homogeneous(generators, "min_gen_set");
    MinGenOutput out;
    if (generators.empty())
        return out;
    int n0 = 0;
    for (const auto& f : generators)
        n0 = std::max(n0, f.degree());
    GradedRun run = graded_completion(generators, n0);
    out.kept = std::move(run.kept);
    out.basis = std::move(run.basis);
    for (auto i : out.kept)
        ++out.degree_profile[generators[i].degree()];
    return out;
}

bool verify_minimal(std::span<const Poly> generators, std::span<const std::size_t> claimed)
{
    require_homogeneous(generators, "verify_minimal");
    std::set<std::size_t> chosen;
    for (auto i : claimed) {
        if (i >= generators.size() || !chosen.insert(i).second)
            return false;
    }

    std::vector<std::size_t> order(claimed.begin(), claimed.end());
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return generators[a].degree() < generators[b].degree();
    });

    // f_i must not lie in the ideal of its predecessors
    std::vector<Poly> prefix;
    for (auto i : order) {
        const Poly& f = generators[i];
        if (!prefix.empty()) {
            int d = f.degree();
            TruncatedBasis tb = truncated_gb(prefix, d);
            if (remainder(f, tb.elements).is_zero())
                return false;
        }
        prefix.push_back(f);
    }

    // and every dropped generator must lie in the ideal of the chosen ones
    std::vector<Poly> dropped;
    int n0 = 0;
    for (std::size_t i = 0; i < generators.size(); ++i) {
        n0 = std::max(n0, generators[i].degree());
        if (!chosen.count(i))
            dropped.push_back(generators[i]);
    }
    if (dropped.empty())
        return true;
    if (prefix.empty())
        return false;
    TruncatedBasis full = truncated_gb(prefix, n0);
    return std::all_of(dropped.begin(), dropped.end(),
                       [&](const Poly& f) { return remainder(f, full.elements).is_zero(); });
}

} // namespace ncgb
