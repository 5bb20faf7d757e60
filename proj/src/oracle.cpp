#include "ncgb/oracle.hpp"

#include <algorithm>

#include "ncgb/error.hpp"

namespace ncgb {

namespace {

// a - c * b
SparseRow axpy(const SparseRow& a, const Scalar& c, const SparseRow& b)
{
    SparseRow out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, -(c * b[j].second));
            ++j;
        } else {
            Scalar s = a[i].second - c * b[j].second;
            if (!s.is_zero())
                out.emplace_back(a[i].first, std::move(s));
            ++i;
            ++j;
        }
    }
    return out;
}

std::vector<Word> sorted_descending(const Ring& ring, std::vector<Word> ws)
{
    std::sort(ws.begin(), ws.end(), [&](const Word& a, const Word& b) { return ring.compare(a, b) > 0; });
    return ws;
}

void check_cap(std::size_t count, int degree, const OracleLimits& limits)
{
    if (count > limits.max_words)
        throw Error("oracle: " + std::to_string(count) + " words at degree " + std::to_string(degree) +
                    " exceed the limit of " + std::to_string(limits.max_words));
}

} // namespace

SparseRow EchelonSpan::reduce(SparseRow row) const
{
    while (!row.empty()) {
        auto it = pivots_.find(row.front().first);
        if (it == pivots_.end())
            break;
        Scalar c = row.front().second;
        row = axpy(row, c, it->second);
    }
    return row;
}

bool EchelonSpan::insert(SparseRow row)
{
    row = reduce(std::move(row));
    if (row.empty())
        return false;
    Scalar inv = row.front().second.inverse();
    for (auto& e : row)
        e.second *= inv;
    std::size_t pivot = row.front().first;
    pivots_.emplace(pivot, std::move(row));
    return true;
}

bool EchelonSpan::contains(SparseRow row) const
{
    return reduce(std::move(row)).empty();
}

WordBasis::WordBasis(const Ring& ring, std::vector<Word> ws) : words(sorted_descending(ring, std::move(ws)))
{
    column.reserve(words.size());
    for (std::size_t i = 0; i < words.size(); ++i)
        column.emplace(words[i], i);
}

SparseRow WordBasis::row(const Poly& f) const
{
    SparseRow out;
    out.reserve(f.size());
    for (const auto& t : f.terms()) {
        auto it = column.find(t.word);
        if (it == column.end())
            throw Error("oracle: word outside the degree range");
        out.emplace_back(it->second, t.coeff);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

SparseRow WordBasis::shifted(const WordBasis& from, const SparseRow& r, const Word& left, const Word& right) const
{
    SparseRow out;
    out.reserve(r.size());
    for (const auto& [col, c] : r) {
        auto it = column.find(concat(left, from.words[col], right));
        if (it == column.end())
            throw Error("oracle: shifted word outside the degree range");
        out.emplace_back(it->second, c);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

std::vector<DegreeSpan> span_ideal(const Ring& ring, std::span<const Poly> generators, int max_degree,
                                   const OracleLimits& limits)
{
    for (const auto& f : generators) {
        if (f.is_zero() || !f.homogeneous_degree())
            throw Error("span_ideal: generators must be nonzero and homogeneous");
        check_same_ring(ring, f.ring());
    }
    const Signature& sig = ring.sig;
    std::vector<DegreeSpan> spans(static_cast<std::size_t>(std::max(max_degree, -1) + 1));
    for (int q = 0; q <= max_degree; ++q) {
        DegreeSpan& cur = spans[q];
        cur.degree = q;
        auto ws = words_of_degree(sig, q);
        check_cap(ws.size(), q, limits);
        cur.basis = WordBasis(ring, std::move(ws));
        // <I_{<q}>_q = sum over letters x of x*I_{q-m} + I_{q-m}*x
        for (std::size_t x = 0; x < sig.nvars(); ++x) {
            int m = sig.weights[x];
            if (m > q)
                continue;
            const DegreeSpan& low = spans[q - m];
            Word letter{static_cast<Letter>(x)};
            for (const auto& [pivot, r] : low.span.rows()) {
                cur.span.insert(cur.basis.shifted(low.basis, r, letter, Word{}));
                cur.span.insert(cur.basis.shifted(low.basis, r, Word{}, letter));
            }
        }
        cur.lower_rank = cur.span.rank();
        for (const auto& f : generators)
            if (f.degree() == q)
                cur.span.insert(cur.basis.row(f));
    }
    return spans;
}

std::vector<std::size_t> ambient_dims(const Signature& sig, int max_degree)
{
    // count words by weighted degree: c[q] = sum_x c[q - m_x]
    std::vector<std::size_t> c(static_cast<std::size_t>(std::max(max_degree, -1) + 1), 0);
    if (!c.empty())
        c[0] = 1;
    for (int q = 1; q <= max_degree; ++q)
        for (int m : sig.weights)
            if (m <= q)
                c[q] += c[q - m];
    return c;
}

OracleReport oracle_report(const Ring& ring, std::span<const Poly> generators, int max_degree,
                           const OracleLimits& limits)
{
    OracleReport report;
    report.max_degree = max_degree;
    report.ambient_dims = ambient_dims(ring.sig, max_degree);
    for (const auto& s : span_ideal(ring, generators, max_degree, limits)) {
        report.ideal_dims.push_back(s.span.rank());
        report.betti.push_back(s.span.rank() - s.lower_rank);
    }
    return report;
}

std::vector<std::size_t> minimal_betti(const Ring& ring, std::span<const Poly> generators, int max_degree,
                                       const OracleLimits& limits)
{
    return oracle_report(ring, generators, max_degree, limits).betti;
}

namespace {

bool member_filtered(const Poly& f, std::span<const Poly> generators, int max_degree, const OracleLimits& limits)
{
    const Ring& ring = f.ring();
    const Signature& sig = ring.sig;
    std::vector<Word> all;
    for (int q = 0; q <= max_degree; ++q) {
        auto ws = words_of_degree(sig, q);
        all.insert(all.end(), ws.begin(), ws.end());
    }
    check_cap(all.size(), max_degree, limits);
    WordBasis basis(ring, std::move(all));

    // spans[k] = span of u*g*v with d(u) + deg(g) + d(v) <= k
    std::vector<EchelonSpan> spans(static_cast<std::size_t>(max_degree + 1));
    for (int k = 0; k <= max_degree; ++k) {
        EchelonSpan& cur = spans[k];
        for (const auto& g : generators)
            if (g.degree() <= k)
                cur.insert(basis.row(g));
        for (std::size_t x = 0; x < sig.nvars(); ++x) {
            int m = sig.weights[x];
            if (m > k)
                continue;
            Word letter{static_cast<Letter>(x)};
            for (const auto& [pivot, r] : spans[k - m].rows()) {
                cur.insert(basis.shifted(basis, r, letter, Word{}));
                cur.insert(basis.shifted(basis, r, Word{}, letter));
            }
        }
    }
    return spans[max_degree].contains(basis.row(f));
}

} // namespace

bool member(const Poly& f, std::span<const Poly> generators, int max_degree, const OracleLimits& limits)
{
    for (const auto& g : generators) {
        if (g.is_zero())
            throw Error("member: zero generator");
        check_same_ring(f.ring(), g.ring());
    }
    if (f.is_zero())
        return true;
    if (f.degree() > max_degree)
        throw Error("member: degree " + std::to_string(f.degree()) + " exceeds the bound " + std::to_string(max_degree));

    bool graded = std::all_of(generators.begin(), generators.end(),
                              [](const Poly& g) { return g.homogeneous_degree().has_value(); });
    if (!graded)
        return member_filtered(f, generators, max_degree, limits);

    auto spans = span_ideal(f.ring(), generators, f.degree(), limits);
    for (int q = 0; q <= f.degree(); ++q) {
        Poly part = homogeneous_component(f, q);
        if (!part.is_zero() && !spans[q].span.contains(spans[q].basis.row(part)))
            return false;
    }
    return true;
}

} // namespace ncgb
