#include <sstream>

#include <gtest/gtest.h>

#include "ncgb/commands.hpp"

using namespace ncgb;

namespace {

struct Run {
    int rc;
    std::string out;
    std::string err;
};

template <class Fn>
Run capture(Fn fn)
{
    std::ostringstream out, err;
    int rc = fn(out, err);
    return {rc, out.str(), err.str()};
}

const char* kCommutator = "field Q; vars x, y; order deglex x > y; gens: x*y - y*x;";

} // namespace

TEST(Commands, DimsTable)
{
    auto p = parse_problem(kCommutator);
    auto r = capture([&](auto& o, auto& e) { return run_dims(p, 8, false, {}, o, e); });
    EXPECT_EQ(r.rc, kExitOk);
    std::istringstream in(r.out);
    std::string header;
    std::getline(in, header);
    for (int q = 0; q <= 8; ++q) {
        std::size_t deg, amb, ideal, quot, betti;
        in >> deg >> amb >> ideal >> quot >> betti;
        EXPECT_EQ(deg, static_cast<std::size_t>(q));
        EXPECT_EQ(quot, static_cast<std::size_t>(q + 1));
        EXPECT_EQ(amb - ideal, quot);
        EXPECT_EQ(betti, q == 2 ? 1u : 0u);
    }
}

TEST(Commands, DimsJson)
{
    auto p = parse_problem(kCommutator);
    auto r = capture([&](auto& o, auto& e) { return run_dims(p, 2, true, {}, o, e); });
    EXPECT_NE(r.out.find("\"quotient_dims\""), std::string::npos);
    EXPECT_NE(r.out.find("\"max_degree\": 2"), std::string::npos);
}

TEST(Commands, GbAndGuard)
{
    auto p = parse_problem(kCommutator);
    auto ok = capture([&](auto& o, auto& e) { return run_gb(p, {8, std::nullopt}, o, e); });
    EXPECT_EQ(ok.rc, kExitOk);
    EXPECT_EQ(ok.out, "x*y - y*x\n");

    auto q = parse_problem("vars x, y; gens: x^2 - y;");
    auto hit = capture([&](auto& o, auto& e) { return run_gb(q, {std::nullopt, 1}, o, e); });
    EXPECT_EQ(hit.rc, kExitGuardHit);
    EXPECT_NE(hit.err.find("guard hit"), std::string::npos);
    EXPECT_FALSE(hit.out.empty());
}

TEST(Commands, Deterministic)
{
    auto p = parse_problem("vars x, y, z; gens: x*y*x - z*y*z, y*z - z*x + x*x, z*z*x;");
    auto a = capture([&](auto& o, auto& e) { return run_mingen(p, true, o, e); });
    auto b = capture([&](auto& o, auto& e) { return run_mingen(p, true, o, e); });
    EXPECT_EQ(a.out, b.out);
    auto c = capture([&](auto& o, auto& e) { return run_gb(p, {5, std::nullopt}, o, e); });
    auto d = capture([&](auto& o, auto& e) { return run_gb(p, {5, std::nullopt}, o, e); });
    EXPECT_EQ(c.out, d.out);
    EXPECT_EQ(c.rc, d.rc);
}

TEST(Commands, StdBasisCertification)
{
    auto p = parse_problem("vars x, y; gens: x^2 - y, x*y - y*x, x^3 - x*y;");
    auto r = capture([&](auto& o, auto& e) { return run_stdbasis(p, 6, o, e); });
    EXPECT_EQ(r.rc, kExitOk);
    EXPECT_EQ(r.out.rfind("kept: 0 1\n", 0), 0u);
    EXPECT_NE(r.out.find("equality up to degree 6: yes"), std::string::npos);

    auto bad = parse_problem("vars x, y; gens: x^2 - y*x;");
    auto rb = capture([&](auto& o, auto& e) { return run_stdbasis(bad, 4, o, e); });
    EXPECT_EQ(rb.rc, kExitInputError);
}

TEST(Commands, Reduce)
{
    auto p = parse_problem("vars x, y; gens: x^2 - y*x;");
    auto r = capture([&](auto& o, auto& e) { return run_reduce(p, "x*y*x - y*x^2", false, o, e); });
    EXPECT_EQ(r.out, "x*y*x - y^2*x\n");
}
