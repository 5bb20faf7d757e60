#include "ncgb/word.hpp"

#include <algorithm>
#include <set>

#include "ncgb/error.hpp"

namespace ncgb {

Signature::Signature(std::vector<std::string> names_, std::vector<int> weights_)
    : names(std::move(names_)), weights(std::move(weights_))
{
    if (names.size() != weights.size())
        throw Error("signature: names and weights differ in length");
    if (names.empty())
        throw Error("signature: at least one variable is required");
    std::set<std::string> seen;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (!seen.insert(names[i]).second)
            throw Error("duplicate variable name '" + names[i] + "'");
        if (weights[i] < 1)
            throw Error("weight must be positive (variable '" + names[i] + "')");
    }
}

std::optional<Letter> Signature::find(std::string_view name) const
{
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name)
            return static_cast<Letter>(i);
    return std::nullopt;
}

Word Word::sub(std::size_t pos, std::size_t len) const
{
    return Word(std::vector<Letter>(letters_.begin() + pos, letters_.begin() + pos + len));
}

Word operator*(const Word& a, const Word& b)
{
    std::vector<Letter> out;
    out.reserve(a.size() + b.size());
    out.insert(out.end(), a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return Word(std::move(out));
}

Word concat(const Word& a, const Word& b, const Word& c)
{
    std::vector<Letter> out;
    out.reserve(a.size() + b.size() + c.size());
    out.insert(out.end(), a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    out.insert(out.end(), c.begin(), c.end());
    return Word(std::move(out));
}

int wdegree(const Word& w, const Signature& sig)
{
    int d = 0;
    for (auto x : w)
        d += sig.weight(x);
    return d;
}

std::vector<Occurrence> occurrences(const Word& u, const Word& v)
{
    if (u.empty())
        throw Error("occurrences: empty pattern");
    std::vector<Occurrence> out;
    if (u.size() > v.size())
        return out;
    for (std::size_t pos = 0; pos + u.size() <= v.size(); ++pos) {
        if (std::equal(u.begin(), u.end(), v.begin() + pos))
            out.push_back({v.prefix(pos), v.suffix(v.size() - pos - u.size())});
    }
    return out;
}

std::optional<std::size_t> find_leftmost(const Word& u, const Word& v)
{
    if (u.empty())
        throw Error("find_leftmost: empty pattern");
    auto it = std::search(v.begin(), v.end(), u.begin(), u.end());
    if (it == v.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - v.begin());
}

bool divides(const Word& u, const Word& v)
{
    if (u.empty())
        return true;
    return std::search(v.begin(), v.end(), u.begin(), u.end()) != v.end();
}

std::vector<OverlapShape> proper_overlaps(const Word& a, const Word& b)
{
    if (a.empty() || b.empty())
        throw Error("proper_overlaps: empty word");
    std::vector<OverlapShape> out;
    std::size_t limit = std::min(a.size(), b.size());
    for (std::size_t len = 1; len < limit; ++len) {
        if (std::equal(a.end() - len, a.end(), b.begin()))
            out.push_back({b.suffix(b.size() - len), a.prefix(a.size() - len)});
    }
    return out;
}

namespace {

void extend_words(const Signature& sig, int remaining, std::vector<Letter>& cur, std::vector<Word>& out)
{
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (std::size_t x = 0; x < sig.nvars(); ++x) {
        int w = sig.weights[x];
        if (w <= remaining) {
            cur.push_back(static_cast<Letter>(x));
            extend_words(sig, remaining - w, cur, out);
            cur.pop_back();
        }
    }
}

} // namespace

std::vector<Word> words_of_degree(const Signature& sig, int q)
{
    std::vector<Word> out;
    if (q < 0)
        return out;
    std::vector<Letter> cur;
    extend_words(sig, q, cur, out);
    return out;
}

std::vector<Word> words_up_to_length(std::size_t nvars, std::size_t maxlen)
{
    std::vector<Word> out{Word{}};
    std::size_t begin = 0;
    for (std::size_t len = 1; len <= maxlen; ++len) {
        std::size_t end = out.size();
        for (std::size_t i = begin; i < end; ++i) {
            for (std::size_t x = 0; x < nvars; ++x) {
                std::vector<Letter> letters = out[i].letters();
                letters.push_back(static_cast<Letter>(x));
                out.emplace_back(std::move(letters));
            }
        }
        begin = end;
    }
    return out;
}

std::string to_string(const Word& w, const Signature& sig)
{
    if (w.empty())
        return "1";
    std::string out;
    std::size_t i = 0;
    while (i < w.size()) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i])
            ++j;
        if (!out.empty())
            out += '*';
        out += sig.names[w[i]];
        if (j - i > 1)
            out += '^' + std::to_string(j - i);
        i = j;
    }
    return out;
}

} // namespace ncgb
