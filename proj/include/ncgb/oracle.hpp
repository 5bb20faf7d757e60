#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ncgb/poly.hpp"

namespace ncgb {

// Brute-force linear algebra over the word basis. Nothing here calls
// division or completion; it exists to check them.

struct OracleLimits {
    /// Refuse degrees whose word count exceeds this.
    std::size_t max_words = 100000;
};

/// (column, coefficient) pairs, strictly increasing columns.
using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;

/// Row-echelon basis of a subspace. Each stored row has leading
/// coefficient 1 at its pivot column.
class EchelonSpan {
public:
    /// Adds `row` to the span; true iff the rank grew.
    bool insert(SparseRow row);
    bool contains(SparseRow row) const;
    std::size_t rank() const { return pivots_.size(); }
    const std::map<std::size_t, SparseRow>& rows() const { return pivots_; }

private:
    SparseRow reduce(SparseRow row) const;
    std::map<std::size_t, SparseRow> pivots_;
};

/// Words of one degree, indexed in descending monomial order.
struct WordBasis {
    std::vector<Word> words;
    std::unordered_map<Word, std::size_t> column;

    WordBasis() = default;
    WordBasis(const Ring& ring, std::vector<Word> ws);
    /// Row of `f`; every word of `f` must be in the basis.
    SparseRow row(const Poly& f) const;
    /// Row of `word_left * w * word_right` for each (w, c) in `row` of `from`.
    SparseRow shifted(const WordBasis& from, const SparseRow& row, const Word& left, const Word& right) const;
};

/// Degree-q homogeneous component of a graded ideal.
struct DegreeSpan {
    int degree = 0;
    WordBasis basis;
    EchelonSpan span;
    /// dim of the degree-q part of the ideal generated by lower degrees.
    std::size_t lower_rank = 0;
};

/// Echelonized degree components I_0..I_D of <F> for homogeneous F.
std::vector<DegreeSpan> span_ideal(const Ring& ring, std::span<const Poly> generators, int max_degree,
                                   const OracleLimits& limits = {});

struct OracleReport {
    int max_degree = 0;
    std::vector<std::size_t> ideal_dims;
    std::vector<std::size_t> ambient_dims;
    /// Minimal homogeneous generator count per degree.
    std::vector<std::size_t> betti;
};

OracleReport oracle_report(const Ring& ring, std::span<const Poly> generators, int max_degree,
                           const OracleLimits& limits = {});

std::vector<std::size_t> minimal_betti(const Ring& ring, std::span<const Poly> generators, int max_degree,
                                       const OracleLimits& limits = {});

std::vector<std::size_t> ambient_dims(const Signature& sig, int max_degree);

/// Membership of f in <F>, decided inside degree <= max_degree. For
/// homogeneous F this is exact for every f of degree <= max_degree. For
/// inhomogeneous F it solves the linear system over all products u*g*v
/// of degree <= max_degree, a certificate of membership (f may still lie
/// in <F> through higher-degree cancellation).
bool member(const Poly& f, std::span<const Poly> generators, int max_degree, const OracleLimits& limits = {});

} // namespace ncgb
