#include <random>

#include <gtest/gtest.h>

#include "ncgb/completion.hpp"
#include "ncgb/division.hpp"
#include "ncgb/error.hpp"
#include "ncgb/oracle.hpp"
#include "support.hpp"

using namespace ncgb;
using namespace ncgb::testing;

using Dims = std::vector<std::size_t>;

namespace {

// Dimension of span{u*f*v} in degree q by plain Gaussian elimination on
// dense rows, without the degree recursion used by span_ideal.
std::size_t dense_dim(const RingPtr& r, const std::vector<Poly>& F, int q)
{
    auto words = words_of_degree(r->sig, q);
    std::map<Word, std::size_t> col;
    for (std::size_t i = 0; i < words.size(); ++i)
        col[words[i]] = i;
    std::vector<std::vector<Scalar>> rows;
    for (const auto& f : F) {
        int rest = q - f.degree();
        for (int a = 0; a <= rest; ++a)
            for (const auto& u : words_of_degree(r->sig, a))
                for (const auto& v : words_of_degree(r->sig, rest - a)) {
                    std::vector<Scalar> row(words.size(), Scalar::zero(r->field));
                    Poly s = sandwich(u, f, v);
                    for (const auto& t : s.terms())
                        row[col.at(t.word)] = t.coeff;
                    rows.push_back(std::move(row));
                }
    }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < words.size() && rank < rows.size(); ++c) {
        std::size_t p = rank;
        while (p < rows.size() && rows[p][c].is_zero())
            ++p;
        if (p == rows.size())
            continue;
        std::swap(rows[p], rows[rank]);
        Scalar inv = rows[rank][c].inverse();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][c].is_zero())
                continue;
            Scalar k = rows[i][c] * inv;
            for (std::size_t j = c; j < words.size(); ++j)
                rows[i][j] -= k * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

} // namespace

TEST(Oracle, SpanExamples)
{
    auto r = xy_ring();
    EXPECT_EQ(oracle_report(*r, Ps(r, {"x*y - y*x"}), 3).ideal_dims, (Dims{0, 0, 1, 4}));
    EXPECT_EQ(oracle_report(*r, std::vector<Poly>{}, 4).ideal_dims, (Dims{0, 0, 0, 0, 0}));
    // x*x^2 and x^2*x coincide: span {x^3, x^2*y, y*x^2}
    EXPECT_EQ(oracle_report(*r, Ps(r, {"x^2"}), 3).ideal_dims, (Dims{0, 0, 1, 3}));
    EXPECT_THROW(span_ideal(*r, Ps(r, {"x^2 - y"}), 3), Error);
}

TEST(Oracle, DimsMatchDenseElimination)
{
    std::mt19937 rng(41);
    for (int i = 0; i < 8; ++i) {
        auto inst = random_graded_instance(rng, 100);
        int D = std::min(inst.oracle_degree, 5);
        auto rep = oracle_report(*inst.ring, inst.gens, D);
        for (int q = 0; q <= D; ++q)
            EXPECT_EQ(rep.ideal_dims[q], dense_dim(inst.ring, inst.gens, q)) << "instance " << i << " degree " << q;
    }
}

TEST(Oracle, Member)
{
    auto r = xy_ring();
    EXPECT_TRUE(member(P(r, "x*y*x"), Ps(r, {"x*y"}), 3));
    EXPECT_TRUE(member(P(r, "x*y*x - y^2*x"), Ps(r, {"x^2 - y*x"}), 3));
    EXPECT_FALSE(member(P(r, "y^3"), Ps(r, {"x^2 - y*x"}), 3));
    EXPECT_THROW(member(P(r, "x^4"), Ps(r, {"x^2"}), 3), Error);
    // inhomogeneous generators
    EXPECT_TRUE(member(P(r, "x*y - y*x"), Ps(r, {"x^2 - y"}), 3));
    EXPECT_FALSE(member(P(r, "x"), Ps(r, {"x^2 - y"}), 4));
}

TEST(Oracle, Betti)
{
    auto r = xy_ring();
    EXPECT_EQ(minimal_betti(*r, Ps(r, {"x^2", "x*y", "x*y*x"}), 3), (Dims{0, 0, 2, 0}));
    EXPECT_EQ(minimal_betti(*r, Ps(r, {"x*y - y*x"}), 5), (Dims{0, 0, 1, 0, 0, 0}));
    auto r12 = make_test_ring({1, 2});
    EXPECT_EQ(minimal_betti(*r12, Ps(r12, {"x^2 - y"}), 3), (Dims{0, 0, 1, 0}));
}

TEST(Oracle, Limits)
{
    auto r = xy_ring();
    EXPECT_THROW(oracle_report(*r, Ps(r, {"x^2"}), 10, OracleLimits{100}), Error);
    EXPECT_EQ(ambient_dims(r->sig, 4), (Dims{1, 2, 4, 8, 16}));
}

TEST(Oracle, NormalWordDuality)
{
    std::mt19937 rng(13);
    for (int i = 0; i < 10; ++i) {
        auto inst = random_graded_instance(rng, 250);
        int n0 = inst.oracle_degree;
        auto tb = truncated_gb(inst.gens, n0);
        ASSERT_TRUE(is_groebner_up_to(tb.elements, n0).ok);
        auto rep = oracle_report(*inst.ring, inst.gens, n0);
        for (int q = 0; q <= n0; ++q) {
            std::size_t normal = 0;
            for (const auto& w : words_of_degree(inst.ring->sig, q))
                normal += std::none_of(tb.elements.begin(), tb.elements.end(),
                                       [&](const Poly& g) { return divides(g.lm(), w); });
            EXPECT_EQ(rep.ambient_dims[q] - rep.ideal_dims[q], normal);
        }
    }
}

TEST(Oracle, MemberAgreesWithRemainder)
{
    std::mt19937 rng(17);
    for (int i = 0; i < 10; ++i) {
        auto inst = random_graded_instance(rng, 250);
        int D = inst.oracle_degree;
        auto tb = truncated_gb(inst.gens, D);
        for (int k = 0; k < 6; ++k) {
            std::uniform_int_distribution<int> dd(1, D);
            int d = dd(rng);
            if (words_of_degree(inst.ring->sig, d).empty())
                continue;
            Poly f = k % 2 ? random_ideal_element(rng, inst.gens, d, 2) : random_homogeneous(rng, inst.ring, d, 3);
            EXPECT_EQ(member(f, inst.gens, D), remainder(f, tb.elements).is_zero());
        }
    }
}
