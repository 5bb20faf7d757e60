#include "ncgb/ordering.hpp"

#include <algorithm>

#include "ncgb/error.hpp"

namespace ncgb {

OrderSpec OrderSpec::deglex(std::vector<Letter> precedence)
{
    OrderSpec ord;
    ord.rank_.assign(precedence.size(), precedence.size());
    for (std::size_t i = 0; i < precedence.size(); ++i) {
        Letter x = precedence[i];
        if (x >= precedence.size() || ord.rank_[x] != precedence.size())
            throw Error("order precedence is not a permutation of the variables");
        ord.rank_[x] = i;
    }
    ord.precedence_ = std::move(precedence);
    return ord;
}

OrderSpec OrderSpec::deglex(std::size_t nvars)
{
    std::vector<Letter> prec(nvars);
    for (std::size_t i = 0; i < nvars; ++i)
        prec[i] = static_cast<Letter>(i);
    return deglex(std::move(prec));
}

std::strong_ordering OrderSpec::compare(const Word& a, const Word& b, const Signature& sig) const
{
    switch (kind_) {
    case Kind::WeightedDegLex: {
        if (auto c = wdegree(a, sig) <=> wdegree(b, sig); c != 0)
            return c;
        std::size_t n = std::min(a.size(), b.size());
        for (std::size_t i = 0; i < n; ++i) {
            if (a[i] != b[i])
                // lower rank = higher precedence = greater word
                return rank_[b[i]] <=> rank_[a[i]];
        }
        return a.size() <=> b.size();
    }
    }
    throw InvariantError("unknown ordering kind");
}

namespace {

std::string show(const Word& w, const Signature& sig)
{
    return to_string(w, sig);
}

} // namespace

OrderingReport check_monomial_ordering(const OrderSpec& ord, const Signature& sig, std::size_t maxlen)
{
    OrderingReport report;
    auto fail = [&](std::string msg) {
        report.ok = false;
        report.violation = std::move(msg);
        return report;
    };
    auto words = words_up_to_length(sig.nvars(), maxlen);

    // Strict total order: sort, then every pair must compare as positioned.
    std::vector<Word> sorted = words;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [&](const Word& a, const Word& b) { return ord.compare(a, b, sig) < 0; });
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        for (std::size_t j = 0; j < sorted.size(); ++j) {
            auto c = ord.compare(sorted[i], sorted[j], sig);
            auto expect = i <=> j;
            if (c != expect)
                return fail("not a strict total order at (" + show(sorted[i], sig) + ", " + show(sorted[j], sig) + ")");
        }
    }

    // Multiplicativity u < v => x u < x v and u x < v x; single letters
    // generate all two-sided multiples by transitivity.
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
        const Word& u = sorted[i];
        for (std::size_t j = i + 1; j < sorted.size(); ++j) {
            const Word& v = sorted[j];
            if (wdegree(u, sig) > wdegree(v, sig))
                return fail("not graded: " + show(u, sig) + " < " + show(v, sig));
            for (std::size_t x = 0; x < sig.nvars(); ++x) {
                Word letter{static_cast<Letter>(x)};
                if (ord.compare(letter * u, letter * v, sig) >= 0)
                    return fail("left multiplication breaks " + show(u, sig) + " < " + show(v, sig));
                if (ord.compare(u * letter, v * letter, sig) >= 0)
                    return fail("right multiplication breaks " + show(u, sig) + " < " + show(v, sig));
            }
        }
    }

    // Subword property: u < x u and u < u x.
    for (const auto& u : words) {
        for (std::size_t x = 0; x < sig.nvars(); ++x) {
            Word letter{static_cast<Letter>(x)};
            if (ord.compare(u, letter * u, sig) >= 0 || ord.compare(u, u * letter, sig) >= 0)
                return fail("subword property fails at " + show(u, sig));
        }
    }
    return report;
}

} // namespace ncgb
