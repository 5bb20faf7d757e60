#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "ncgb/word.hpp"

namespace ncgb {

/// A graded monomial ordering on words. Only weighted degree-lexicographic
/// is shipped; `compare` dispatches on `kind`, so further graded orderings
/// slot in there.
class OrderSpec {
public:
    enum class Kind { WeightedDegLex };

    OrderSpec() = default;

    /// `precedence` lists variable indices from highest to lowest and must
    /// be a permutation of 0..nvars-1.
    static OrderSpec deglex(std::vector<Letter> precedence);
    /// x_0 > x_1 > ... > x_{n-1}.
    static OrderSpec deglex(std::size_t nvars);

    Kind kind() const { return kind_; }
    const std::vector<Letter>& precedence() const { return precedence_; }
    /// Every shipped ordering refines the weighted degree.
    bool is_graded() const { return true; }

    /// Weighted degree first, then left-to-right comparison of letters by
    /// precedence.
    std::strong_ordering compare(const Word& a, const Word& b, const Signature& sig) const;

    friend bool operator==(const OrderSpec&, const OrderSpec&) = default;

private:
    Kind kind_ = Kind::WeightedDegLex;
    std::vector<Letter> precedence_;
    std::vector<std::size_t> rank_; // rank_[x] = position of x in precedence_
};

struct OrderingReport {
    bool ok = true;
    std::string violation;
};

/// Exhaustive check of the monomial-ordering axioms over all words of
/// length <= maxlen: strict total order, compatibility with left and right
/// multiplication, subword property, and gradedness.
OrderingReport check_monomial_ordering(const OrderSpec& ord, const Signature& sig, std::size_t maxlen);

} // namespace ncgb
