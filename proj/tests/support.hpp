#pragma once

// Shared helpers for the unit and acceptance suites: ring builders,
// shorthand parsing, and seeded random instance generators.

#include <algorithm>
#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "ncgb/parser.hpp"
#include "ncgb/poly.hpp"

namespace ncgb::testing {

inline RingPtr make_test_ring(std::vector<int> weights, FieldSpec field = FieldSpec::rationals())
{
    static const char* names[] = {"x", "y", "z", "w"};
    std::vector<std::string> ns;
    for (std::size_t i = 0; i < weights.size(); ++i)
        ns.emplace_back(names[i]);
    std::size_t n = weights.size();
    return make_ring(field, Signature(std::move(ns), std::move(weights)), OrderSpec::deglex(n));
}

/// x > y, weights (1,1), over Q.
inline RingPtr xy_ring()
{
    static RingPtr r = make_test_ring({1, 1});
    return r;
}

inline Poly P(const RingPtr& ring, std::string_view text)
{
    return parse_poly(ring, text);
}

inline std::vector<Poly> Ps(const RingPtr& ring, std::initializer_list<std::string_view> texts)
{
    std::vector<Poly> out;
    for (auto t : texts)
        out.push_back(parse_poly(ring, t));
    return out;
}

/// Word from a string of variable names, e.g. W("xyx") with x=0, y=1.
inline Word W(std::string_view letters)
{
    std::vector<Letter> ls;
    for (char c : letters)
        ls.push_back(static_cast<Letter>(c == 'x' ? 0 : c == 'y' ? 1 : c == 'z' ? 2 : 3));
    return Word(std::move(ls));
}

inline Word random_word(std::mt19937& rng, std::size_t nvars, std::size_t len)
{
    std::uniform_int_distribution<int> pick(0, static_cast<int>(nvars) - 1);
    std::vector<Letter> ls(len);
    for (auto& l : ls)
        l = static_cast<Letter>(pick(rng));
    return Word(std::move(ls));
}

inline Scalar random_nonzero_scalar(std::mt19937& rng, const FieldSpec& field, int bound)
{
    std::uniform_int_distribution<int> num(-bound, bound);
    std::uniform_int_distribution<int> den(1, bound);
    for (;;) {
        int n = num(rng);
        if (n == 0)
            continue;
        Scalar s = Scalar::rational(field, n, den(rng));
        if (!s.is_zero())
            return s;
    }
}

/// Random homogeneous polynomial of weighted degree `degree` with up to
/// `max_terms` terms; nonzero whenever degree-`degree` words exist.
inline Poly random_homogeneous(std::mt19937& rng, const RingPtr& ring, int degree, int max_terms, int bound = 5)
{
    auto words = words_of_degree(ring->sig, degree);
    std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
    std::uniform_int_distribution<int> count(1, max_terms);
    std::vector<Term> raw;
    int k = count(rng);
    for (int i = 0; i < k; ++i)
        raw.push_back({random_nonzero_scalar(rng, ring->field, bound), words[pick(rng)]});
    Poly p = Poly::normalize(ring, std::move(raw));
    if (p.is_zero())
        return Poly::word(ring, words[pick(rng)]);
    return p;
}

/// Random (generally inhomogeneous) polynomial with terms of weighted
/// degree <= max_degree.
inline Poly random_poly(std::mt19937& rng, const RingPtr& ring, int max_degree, int max_terms, int bound = 5)
{
    std::vector<Word> words;
    for (int q = 0; q <= max_degree; ++q) {
        auto ws = words_of_degree(ring->sig, q);
        words.insert(words.end(), ws.begin(), ws.end());
    }
    std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
    std::uniform_int_distribution<int> count(1, max_terms);
    std::vector<Term> raw;
    int k = count(rng);
    for (int i = 0; i < k; ++i)
        raw.push_back({random_nonzero_scalar(rng, ring->field, bound), words[pick(rng)]});
    return Poly::normalize(ring, std::move(raw));
}

/// A random combination sum c * u * f_j * v of homogeneous generators,
/// homogeneous of degree `degree`.
inline Poly random_ideal_element(std::mt19937& rng, std::span<const Poly> gens, int degree, int summands)
{
    const RingPtr& ring = gens.front().ring_ptr();
    Poly acc(ring);
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    for (int s = 0; s < summands; ++s) {
        const Poly& f = gens[pick(rng)];
        int rest = degree - f.degree();
        if (rest < 0)
            continue;
        std::uniform_int_distribution<int> split(0, rest);
        int a = split(rng);
        auto lefts = words_of_degree(ring->sig, a);
        auto rights = words_of_degree(ring->sig, rest - a);
        if (lefts.empty() || rights.empty())
            continue;
        std::uniform_int_distribution<std::size_t> pl(0, lefts.size() - 1), pr(0, rights.size() - 1);
        acc = acc + random_nonzero_scalar(rng, ring->field, 5) * sandwich(lefts[pl(rng)], f, rights[pr(rng)]);
    }
    return acc;
}

/// Randomized homogeneous instance in the shape used by the Betti
/// cross-validation: 2-3 variables, weights in {1,2}, generator degrees
/// <= 4, and an oracle degree bound D <= 7 chosen to stay at desk scale.
struct GradedInstance {
    RingPtr ring;
    std::vector<Poly> gens;
    int oracle_degree;
};

inline GradedInstance random_graded_instance(std::mt19937& rng, std::size_t max_degree_words = 400)
{
    std::uniform_int_distribution<int> nv(2, 3), wt(1, 2), ng(2, 4), coin(0, 3);
    int n = nv(rng);
    std::vector<int> weights;
    for (int i = 0; i < n; ++i)
        weights.push_back(wt(rng));
    FieldSpec field = coin(rng) == 0 ? FieldSpec::prime(101) : FieldSpec::rationals();
    RingPtr ring = make_test_ring(weights, field);

    int low = *std::min_element(weights.begin(), weights.end());
    std::uniform_int_distribution<int> deg(std::max(2, low), 4);
    std::vector<Poly> gens;
    int k = ng(rng);
    int n0 = 0;
    while (static_cast<int>(gens.size()) < k) {
        int d = deg(rng);
        if (words_of_degree(ring->sig, d).empty())
            continue;
        gens.push_back(random_homogeneous(rng, ring, d, 3));
        n0 = std::max(n0, d);
    }
    // sometimes plant a redundant generator
    if (coin(rng) == 0) {
        int d = std::min(4, n0 + 1);
        Poly e = random_ideal_element(rng, gens, d, 2);
        if (!e.is_zero())
            gens.push_back(e);
    }
    n0 = 0;
    for (const auto& g : gens)
        n0 = std::max(n0, g.degree());

    int D = 7;
    while (D > n0 && (words_of_degree(ring->sig, D).size() > max_degree_words ||
                      words_of_degree(ring->sig, D).empty()))
        --D;
    return {ring, std::move(gens), D};
}

} // namespace ncgb::testing
