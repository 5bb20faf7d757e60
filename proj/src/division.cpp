#include "ncgb/division.hpp"

#include <map>

#include "ncgb/error.hpp"

namespace ncgb {

namespace {

struct Descending {
    const Ring* ring;
    bool operator()(const Word& a, const Word& b) const { return ring->compare(a, b) > 0; }
};

using WorkPoly = std::map<Word, Scalar, Descending>;

void check_divisors(const Poly& f, std::span<const Poly> divisors)
{
    for (const auto& g : divisors) {
        if (g.is_zero())
            throw Error("division by the zero polynomial");
        check_same_ring(f.ring(), g.ring());
    }
}

// Index of the first divisor whose leading word occurs in w, with the
// leftmost position of that occurrence.
std::optional<std::pair<std::size_t, std::size_t>> find_reducer(const Word& w, std::span<const Poly> divisors)
{
    for (std::size_t i = 0; i < divisors.size(); ++i) {
        const Word& lm = divisors[i].lm();
        if (lm.size() > w.size())
            continue;
        if (lm.empty())
            return std::pair{i, std::size_t{0}};
        if (auto pos = find_leftmost(lm, w))
            return std::pair{i, *pos};
    }
    return std::nullopt;
}

} // namespace

Representation divide(const Poly& f, std::span<const Poly> divisors, bool track)
{
    check_divisors(f, divisors);
    const Ring& ring = f.ring();
    WorkPoly work(Descending{&ring});
    for (const auto& t : f.terms())
        work.emplace(t.word, t.coeff);

    Representation rep{{}, Poly(f.ring_ptr())};
    std::vector<Term> rem;
    while (!work.empty()) {
        auto top = work.begin();
        auto hit = find_reducer(top->first, divisors);
        if (!hit) {
            rem.push_back({top->second, top->first});
            work.erase(top);
            continue;
        }
        const Poly& g = divisors[hit->first];
        const Word& w = top->first;
        Word left = w.prefix(hit->second);
        Word right = w.suffix(w.size() - hit->second - g.lm().size());
        Scalar q = top->second / g.lc();
        work.erase(top);
        // the leading term cancels by construction
        for (std::size_t k = 1; k < g.size(); ++k) {
            const Term& t = g.terms()[k];
            Word word = concat(left, t.word, right);
            Scalar delta = q * t.coeff;
            auto [it, inserted] = work.try_emplace(std::move(word), -delta);
            if (!inserted) {
                it->second -= delta;
                if (it->second.is_zero())
                    work.erase(it);
            }
        }
        if (track)
            rep.summands.push_back({std::move(q), std::move(left), hit->first, std::move(right)});
    }
    rep.remainder = Poly::from_sorted(f.ring_ptr(), std::move(rem));
    return rep;
}

Poly remainder(const Poly& f, std::span<const Poly> divisors)
{
    return divide(f, divisors, false).remainder;
}

bool is_normal(const Poly& f, std::span<const Poly> divisors)
{
    check_divisors(f, divisors);
    for (const auto& t : f.terms())
        if (find_reducer(t.word, divisors))
            return false;
    return true;
}

Poly expand(const Representation& rep, std::span<const Poly> divisors)
{
    Poly acc = rep.remainder;
    for (const auto& s : rep.summands) {
        if (s.divisor >= divisors.size())
            throw Error("representation refers to a missing divisor");
        acc = acc + s.coeff * sandwich(s.left, divisors[s.divisor], s.right);
    }
    return acc;
}

bool is_lm_reduced(std::span<const Poly> polys)
{
    for (std::size_t i = 0; i < polys.size(); ++i)
        for (std::size_t j = 0; j < polys.size(); ++j)
            if (i != j && divides(polys[j].lm(), polys[i].lm()))
                return false;
    return true;
}

std::vector<Poly> interreduce(std::span<const Poly> polys)
{
    check_same_ring(polys);
    std::vector<Poly> cur;
    for (const auto& p : polys) {
        if (p.is_zero())
            throw Error("interreduce: zero polynomial in input");
        cur.push_back(p.monic());
    }
    for (;;) {
        std::optional<std::size_t> victim;
        for (std::size_t i = 0; i < cur.size() && !victim; ++i)
            for (std::size_t j = 0; j < cur.size(); ++j)
                if (i != j && divides(cur[j].lm(), cur[i].lm())) {
                    victim = i;
                    break;
                }
        if (!victim)
            return cur;
        std::vector<Poly> others;
        for (std::size_t j = 0; j < cur.size(); ++j)
            if (j != *victim)
                others.push_back(cur[j]);
        Poly r = remainder(cur[*victim], others);
        if (r.is_zero())
            cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(*victim));
        else
            cur[*victim] = r.monic();
    }
}

} // namespace ncgb
