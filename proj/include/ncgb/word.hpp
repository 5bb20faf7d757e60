#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ncgb {

using Letter = std::uint16_t;

/// Generators X_1..X_n with their names and positive weights d_gr(X_i).
struct Signature {
    std::vector<std::string> names;
    std::vector<int> weights;

    Signature() = default;
    /// Validates: distinct names, all weights >= 1, equal lengths.
    Signature(std::vector<std::string> names, std::vector<int> weights);

    std::size_t nvars() const { return names.size(); }
    int weight(Letter x) const { return weights[x]; }
    std::optional<Letter> find(std::string_view name) const;

    friend bool operator==(const Signature&, const Signature&) = default;
};

/// A monomial of the free monoid: a sequence of generator indices. The
/// empty word is the identity 1.
class Word {
public:
    Word() = default;
    Word(std::initializer_list<Letter> letters) : letters_(letters) {}
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    auto begin() const { return letters_.begin(); }
    auto end() const { return letters_.end(); }
    const std::vector<Letter>& letters() const { return letters_; }

    /// Letters [pos, pos + len).
    Word sub(std::size_t pos, std::size_t len) const;
    Word prefix(std::size_t len) const { return sub(0, len); }
    Word suffix(std::size_t len) const { return sub(size() - len, len); }

    friend Word operator*(const Word& a, const Word& b);

    /// Raw letter-wise ordering for use as a container key. This is not a
    /// monomial ordering; see OrderSpec for that.
    friend auto operator<=>(const Word&, const Word&) = default;
    friend bool operator==(const Word&, const Word&) = default;

private:
    std::vector<Letter> letters_;
};

Word concat(const Word& a, const Word& b, const Word& c);

/// Weighted degree: sum of the letter weights, 0 for the empty word.
int wdegree(const Word& w, const Signature& sig);

/// A splitting v = left * u * right.
struct Occurrence {
    Word left;
    Word right;
    friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

/// All occurrences of the nonempty word `u` in `v`, leftmost first.
std::vector<Occurrence> occurrences(const Word& u, const Word& v);
/// Position of the leftmost occurrence of nonempty `u` in `v`.
std::optional<std::size_t> find_leftmost(const Word& u, const Word& v);
bool divides(const Word& u, const Word& v);

/// Cofactors of an overlap a*u = v*b, where a proper suffix of `a`
/// equals a proper prefix of `b`.
struct OverlapShape {
    Word u;
    Word v;
    friend bool operator==(const OverlapShape&, const OverlapShape&) = default;
};

/// One shape per shared word w with 1 <= |w| < min(|a|, |b|), ordered by
/// increasing |w|. Inclusions (one word inside the other) are not listed.
std::vector<OverlapShape> proper_overlaps(const Word& a, const Word& b);

/// All words of weighted degree exactly `q`, in raw lexicographic order
/// of letter indices.
std::vector<Word> words_of_degree(const Signature& sig, int q);
/// All words of length <= maxlen.
std::vector<Word> words_up_to_length(std::size_t nvars, std::size_t maxlen);

/// `x^2*y`, or `1` for the empty word.
std::string to_string(const Word& w, const Signature& sig);

} // namespace ncgb

template <>
struct std::hash<ncgb::Word> {
    std::size_t operator()(const ncgb::Word& w) const noexcept
    {
        std::size_t h = 1469598103934665603ULL;
        for (auto x : w)
            h = (h ^ x) * 1099511628211ULL;
        return h;
    }
};
