#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ncgb/ordering.hpp"
#include "ncgb/scalar.hpp"
#include "ncgb/word.hpp"

namespace ncgb {

/// The ambient free algebra K<X> together with its monomial ordering.
/// Every polynomial refers to exactly one Ring.
struct Ring {
    FieldSpec field;
    Signature sig;
    OrderSpec order;

    std::strong_ordering compare(const Word& a, const Word& b) const { return order.compare(a, b, sig); }
    int degree(const Word& w) const { return wdegree(w, sig); }

    friend bool operator==(const Ring&, const Ring&) = default;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(FieldSpec field, Signature sig, OrderSpec order);

struct Term {
    Scalar coeff;
    Word word;
    friend bool operator==(const Term&, const Term&) = default;
};

/// A noncommutative polynomial. Terms are kept strictly descending under
/// the ring's ordering with nonzero coefficients; every constructor
/// normalizes, so leading data is always the first term.
class Poly {
public:
    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

    /// Merges equal words, drops zeros, sorts descending.
    static Poly normalize(RingPtr ring, std::vector<Term> raw);
    static Poly monomial(RingPtr ring, Scalar coeff, Word word);
    static Poly word(RingPtr ring, Word word);
    /// Adopts terms that are already strictly descending with nonzero
    /// coefficients.
    static Poly from_sorted(RingPtr ring, std::vector<Term> sorted) { return Poly(std::move(ring), std::move(sorted)); }

    const Ring& ring() const { return *ring_; }
    const RingPtr& ring_ptr() const { return ring_; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    /// Leading term; throws ncgb::Error on the zero polynomial.
    const Term& leading() const;
    const Word& lm() const { return leading().word; }
    const Scalar& lc() const { return leading().coeff; }

    /// Largest weighted degree among the terms; throws on zero.
    int degree() const;
    /// Leading homogeneous part: the terms of top weighted degree.
    Poly lh() const;
    /// Common degree when all terms share one; nullopt otherwise, and for zero.
    std::optional<int> homogeneous_degree() const;
    bool is_homogeneous() const { return is_zero() || homogeneous_degree().has_value(); }

    Poly monic() const;
    Poly operator-() const;

    friend Poly operator+(const Poly& f, const Poly& g);
    friend Poly operator-(const Poly& f, const Poly& g);
    friend Poly operator*(const Scalar& c, const Poly& f);
    /// Convenience product built from sandwiches and sums.
    friend Poly operator*(const Poly& f, const Poly& g);
    friend bool operator==(const Poly& f, const Poly& g);

    /// `3/2*x^2*y - y*x`, `0` for zero.
    std::string to_string() const;

private:
    Poly(RingPtr ring, std::vector<Term> sorted) : ring_(std::move(ring)), terms_(std::move(sorted)) {}

    RingPtr ring_;
    std::vector<Term> terms_;

    friend Poly sandwich(const Word& u, const Poly& f, const Word& v);
};

/// u * f * v. The ordering is multiplicative, so no re-sorting happens.
Poly sandwich(const Word& u, const Poly& f, const Word& v);

/// Throws ncgb::Error unless both refer to the same ring.
void check_same_ring(const Ring& a, const Ring& b);
void check_same_ring(std::span<const Poly> polys);

/// Sum of all terms of `f` of weighted degree `q`.
Poly homogeneous_component(const Poly& f, int q);

} // namespace ncgb
