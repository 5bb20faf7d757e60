#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "ncgb/division.hpp"
#include "ncgb/error.hpp"
#include "ncgb/minimalgen.hpp"
#include "ncgb/oracle.hpp"
#include "support.hpp"

using namespace ncgb;
using namespace ncgb::testing;

namespace {

using Indices = std::vector<std::size_t>;

int top_degree(const std::vector<Poly>& F)
{
    int d = 0;
    for (const auto& f : F)
        d = std::max(d, f.degree());
    return d;
}

// Calls `visit` with every reordering of F that keeps degrees
// non-decreasing, i.e. all permutations inside each degree block.
template <class Fn>
void for_each_degree_permutation(std::vector<Poly> F, Fn visit)
{
    std::stable_sort(F.begin(), F.end(), [](const Poly& a, const Poly& b) { return a.degree() < b.degree(); });
    std::vector<std::pair<std::size_t, std::size_t>> blocks;
    for (std::size_t i = 0; i < F.size();) {
        std::size_t j = i;
        while (j < F.size() && F[j].degree() == F[i].degree())
            ++j;
        blocks.emplace_back(i, j);
        i = j;
    }
    std::vector<std::size_t> perm(F.size());
    for (std::size_t i = 0; i < perm.size(); ++i)
        perm[i] = i;
    auto rec = [&](auto&& self, std::size_t b) -> void {
        if (b == blocks.size()) {
            std::vector<Poly> G;
            for (auto i : perm)
                G.push_back(F[i]);
            visit(G);
            return;
        }
        auto first = perm.begin() + blocks[b].first, last = perm.begin() + blocks[b].second;
        std::sort(first, last);
        do {
            self(self, b + 1);
        } while (std::next_permutation(first, last));
    };
    rec(rec, 0);
}

} // namespace

TEST(MinGen, Examples)
{
    auto r = xy_ring();
    auto a = min_gen_set(Ps(r, {"x^2", "x*y", "x*y*x"}));
    EXPECT_EQ(a.kept, (Indices{0, 1}));
    EXPECT_EQ(a.degree_profile, (DegreeProfile{{2, 2}}));

    auto b = min_gen_set(Ps(r, {"x^2 - y*x", "x*y*x - y^2*x"}));
    EXPECT_EQ(b.kept, (Indices{0}));

    auto c = min_gen_set(Ps(r, {"x^2", "x*y"}));
    EXPECT_EQ(c.kept, (Indices{0, 1}));
    EXPECT_EQ(c.basis.elements, Ps(r, {"x^2", "x*y"}));
    EXPECT_EQ(c.basis.truncation_degree, 2);

    auto empty = min_gen_set(std::vector<Poly>{});
    EXPECT_TRUE(empty.kept.empty());
    EXPECT_TRUE(empty.basis.elements.empty());
    EXPECT_THROW(min_gen_set(Ps(r, {"x^2 - y"})), Error);
}

TEST(MinGen, UnsortedInputIsStablySorted)
{
    auto r = xy_ring();
    auto out = min_gen_set(Ps(r, {"x*y*x", "x^2", "x*y"}));
    EXPECT_EQ(out.kept, (Indices{1, 2}));
}

TEST(MinGen, VerifyMinimal)
{
    auto r = xy_ring();
    auto F = Ps(r, {"x^2", "x*y", "x*y*x"});
    EXPECT_TRUE(verify_minimal(F, Indices{0, 1}));
    EXPECT_FALSE(verify_minimal(F, Indices{0, 1, 2}));
    EXPECT_FALSE(verify_minimal(F, Indices{0}));
    EXPECT_TRUE(verify_minimal(Ps(r, {"x*y"}), Indices{0}));
    EXPECT_FALSE(verify_minimal(F, Indices{0, 0, 1}));
    EXPECT_FALSE(verify_minimal(F, Indices{0, 7}));
}

TEST(MinGen, RandomInstances)
{
    std::mt19937 rng(99);
    for (int i = 0; i < 20; ++i) {
        auto inst = random_graded_instance(rng, 250);
        auto out = min_gen_set(inst.gens);
        int n0 = top_degree(inst.gens);
        EXPECT_TRUE(verify_minimal(inst.gens, out.kept));

        std::vector<Poly> kept;
        for (auto k : out.kept)
            kept.push_back(inst.gens[k]);
        for (std::size_t j = 0; j < inst.gens.size(); ++j)
            EXPECT_TRUE(remainder(inst.gens[j], out.basis.elements).is_zero());
        EXPECT_EQ(oracle_report(*inst.ring, kept, n0).ideal_dims,
                  oracle_report(*inst.ring, inst.gens, n0).ideal_dims);

        auto betti = minimal_betti(*inst.ring, inst.gens, n0);
        for (int q = 0; q <= n0; ++q) {
            auto it = out.degree_profile.find(q);
            EXPECT_EQ(it == out.degree_profile.end() ? 0u : it->second, betti[q]);
        }
    }
}

TEST(MinGen, ProfileInvariantUnderSameDegreePermutations)
{
    std::mt19937 rng(123);
    int checked = 0;
    for (int i = 0; i < 15; ++i) {
        auto inst = random_graded_instance(rng, 250);
        if (inst.gens.size() > 6)
            continue;
        auto ref = min_gen_set(inst.gens).degree_profile;
        for_each_degree_permutation(inst.gens, [&](const std::vector<Poly>& G) {
            EXPECT_EQ(min_gen_set(G).degree_profile, ref);
            ++checked;
        });
    }
    EXPECT_GT(checked, 15);
}

TEST(MinGen, AppendingOutsideElementRaisesProfileByOne)
{
    std::mt19937 rng(55);
    int checked = 0;
    for (int i = 0; i < 15; ++i) {
        auto inst = random_graded_instance(rng, 250);
        auto out = min_gen_set(inst.gens);
        int n0 = top_degree(inst.gens);
        std::vector<Poly> Fmin;
        for (auto k : out.kept)
            Fmin.push_back(inst.gens[k]);
        for (int d = n0; d <= n0 + 1; ++d) {
            auto tb = truncated_gb(Fmin, d);
            // a normal word of degree d is outside the ideal
            for (const auto& w : words_of_degree(inst.ring->sig, d)) {
                Poly f = Poly::word(inst.ring, w);
                if (!remainder(f, tb.elements).is_zero()) {
                    auto G = Fmin;
                    G.push_back(f);
                    auto expect = out.degree_profile;
                    expect[d] += 1;
                    EXPECT_EQ(min_gen_set(G).degree_profile, expect);
                    ++checked;
                    break;
                }
            }
        }
    }
    EXPECT_GT(checked, 10);
}

TEST(MinGen, DegreeProfile)
{
    auto r = xy_ring();
    EXPECT_EQ(degree_profile(Ps(r, {"x^2", "x*y", "x^3"})), (DegreeProfile{{2, 2}, {3, 1}}));
}
