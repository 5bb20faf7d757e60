#include "ncgb/poly.hpp"

#include <algorithm>

#include "ncgb/error.hpp"

namespace ncgb {

RingPtr make_ring(FieldSpec field, Signature sig, OrderSpec order)
{
    if (order.precedence().size() != sig.nvars())
        throw Error("ordering and signature disagree on the number of variables");
    return std::make_shared<const Ring>(Ring{field, std::move(sig), std::move(order)});
}

void check_same_ring(const Ring& a, const Ring& b)
{
    if (&a != &b && !(a == b))
        throw Error("polynomials from different rings");
}

void check_same_ring(std::span<const Poly> polys)
{
    for (std::size_t i = 1; i < polys.size(); ++i)
        check_same_ring(polys[0].ring(), polys[i].ring());
}

Poly Poly::normalize(RingPtr ring, std::vector<Term> raw)
{
    const Ring& r = *ring;
    for (const auto& t : raw)
        if (!(t.coeff.field() == r.field))
            throw Error("coefficient field does not match the ring");
    std::stable_sort(raw.begin(), raw.end(),
                     [&](const Term& a, const Term& b) { return r.compare(a.word, b.word) > 0; });
    std::vector<Term> out;
    out.reserve(raw.size());
    for (auto& t : raw) {
        if (!out.empty() && out.back().word == t.word)
            out.back().coeff += t.coeff;
        else {
            if (!out.empty() && out.back().coeff.is_zero())
                out.pop_back();
            out.push_back(std::move(t));
        }
    }
    if (!out.empty() && out.back().coeff.is_zero())
        out.pop_back();
    return Poly(std::move(ring), std::move(out));
}

Poly Poly::monomial(RingPtr ring, Scalar coeff, Word word)
{
    std::vector<Term> t;
    t.push_back({std::move(coeff), std::move(word)});
    return normalize(std::move(ring), std::move(t));
}

Poly Poly::word(RingPtr ring, Word w)
{
    Scalar one = Scalar::one(ring->field);
    return monomial(std::move(ring), one, std::move(w));
}

const Term& Poly::leading() const
{
    if (terms_.empty())
        throw Error("leading term of the zero polynomial");
    return terms_.front();
}

int Poly::degree() const
{
    if (terms_.empty())
        throw Error("degree of the zero polynomial");
    int d = 0;
    for (const auto& t : terms_)
        d = std::max(d, ring_->degree(t.word));
    return d;
}

Poly Poly::lh() const
{
    if (terms_.empty())
        throw Error("leading homogeneous part of the zero polynomial");
    return homogeneous_component(*this, degree());
}

Poly homogeneous_component(const Poly& f, int q)
{
    std::vector<Term> out;
    for (const auto& t : f.terms())
        if (f.ring().degree(t.word) == q)
            out.push_back(t);
    return Poly::from_sorted(f.ring_ptr(), std::move(out));
}

std::optional<int> Poly::homogeneous_degree() const
{
    if (terms_.empty())
        return std::nullopt;
    int d = ring_->degree(terms_.front().word);
    for (const auto& t : terms_)
        if (ring_->degree(t.word) != d)
            return std::nullopt;
    return d;
}

Poly Poly::monic() const
{
    if (terms_.empty())
        return *this;
    if (lc().is_one())
        return *this;
    return lc().inverse() * *this;
}

Poly Poly::operator-() const
{
    std::vector<Term> out = terms_;
    for (auto& t : out)
        t.coeff = -t.coeff;
    return Poly(ring_, std::move(out));
}

namespace {

// Merge two descending term lists, scaling the second by `scale`.
Poly merge(const Poly& f, const Poly& g, const Scalar* scale)
{
    check_same_ring(f.ring(), g.ring());
    const Ring& r = f.ring();
    const auto& a = f.terms();
    const auto& b = g.terms();
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    auto take_b = [&](const Term& t) { return scale ? Term{*scale * t.coeff, t.word} : t; };
    while (i < a.size() && j < b.size()) {
        auto c = r.compare(a[i].word, b[j].word);
        if (c > 0)
            out.push_back(a[i++]);
        else if (c < 0)
            out.push_back(take_b(b[j++]));
        else {
            Scalar s = a[i].coeff + (scale ? *scale * b[j].coeff : b[j].coeff);
            if (!s.is_zero())
                out.push_back({std::move(s), a[i].word});
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i)
        out.push_back(a[i]);
    for (; j < b.size(); ++j)
        out.push_back(take_b(b[j]));
    return Poly::from_sorted(f.ring_ptr(), std::move(out));
}

} // namespace

Poly operator+(const Poly& f, const Poly& g)
{
    return merge(f, g, nullptr);
}

Poly operator-(const Poly& f, const Poly& g)
{
    Scalar minus_one = -Scalar::one(f.ring().field);
    return merge(f, g, &minus_one);
}

Poly operator*(const Scalar& c, const Poly& f)
{
    std::vector<Term> out;
    if (!c.is_zero()) {
        out.reserve(f.size());
        for (const auto& t : f.terms())
            out.push_back({c * t.coeff, t.word});
    }
    return Poly::from_sorted(f.ring_ptr(), std::move(out));
}

Poly operator*(const Poly& f, const Poly& g)
{
    check_same_ring(f.ring(), g.ring());
    Poly acc(f.ring_ptr());
    for (const auto& t : f.terms())
        acc = acc + t.coeff * sandwich(t.word, g, Word{});
    return acc;
}

bool operator==(const Poly& f, const Poly& g)
{
    return f.terms_ == g.terms_ && (f.ring_ == g.ring_ || *f.ring_ == *g.ring_);
}

Poly sandwich(const Word& u, const Poly& f, const Word& v)
{
    std::vector<Term> out;
    out.reserve(f.size());
    for (const auto& t : f.terms())
        out.push_back({t.coeff, concat(u, t.word, v)});
    return Poly(f.ring_ptr(), std::move(out));
}

std::string Poly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        Scalar c = t.coeff;
        if (c.is_negative()) {
            out += first ? "-" : " - ";
            c = -c;
        } else if (!first) {
            out += " + ";
        }
        first = false;
        if (t.word.empty()) {
            out += c.to_string();
        } else {
            if (!c.is_one())
                out += c.to_string() + "*";
            out += ncgb::to_string(t.word, ring_->sig);
        }
    }
    return out;
}

} // namespace ncgb
