#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace ncgb {

/// The coefficient field K: either the rationals or a prime field GF(p)
/// with p < 2^32.
struct FieldSpec {
    enum class Kind { Rationals, PrimeField };

    Kind kind = Kind::Rationals;
    std::uint32_t modulus = 0;

    static FieldSpec rationals() { return {}; }
    /// Throws ncgb::Error unless `p` is a prime that fits in 32 bits.
    static FieldSpec prime(std::uint64_t p);

    bool is_prime_field() const { return kind == Kind::PrimeField; }
    std::string to_string() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime(std::uint64_t n);

/// An exact element of a FieldSpec. Rationals are kept as reduced
/// fractions with positive denominator, residues in 0..p-1.
class Scalar {
public:
    static Scalar zero(const FieldSpec& field);
    static Scalar one(const FieldSpec& field);
    static Scalar integer(const FieldSpec& field, long value);
    static Scalar integer(const FieldSpec& field, const mpz_class& value);
    /// num/den mapped into the field; den must be nonzero in K.
    static Scalar rational(const FieldSpec& field, const mpz_class& num, const mpz_class& den);

    FieldSpec field() const;
    bool is_zero() const;
    bool is_one() const;
    /// True for a negative rational. Residues are never negative.
    bool is_negative() const;

    Scalar operator-() const;
    Scalar inverse() const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    friend bool operator==(const Scalar& a, const Scalar& b);

    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

    /// `a/b`, `a` when b = 1; plain residue for GF(p).
    std::string to_string() const;

    /// Rational value; only valid over Q.
    const mpq_class& rational_value() const;
    /// Residue value; only valid over GF(p).
    std::uint32_t residue() const;

private:
    struct Residue {
        std::uint32_t value;
        std::uint32_t modulus;
    };
    explicit Scalar(mpq_class q) : value_(std::move(q)) {}
    explicit Scalar(Residue r) : value_(r) {}

    std::variant<mpq_class, Residue> value_;
};

enum class ArithOp { Add, Sub, Mul, Div };

/// Field operation dispatcher; throws ncgb::Error on division by zero or
/// when the operands live in different fields.
Scalar arith(const Scalar& a, const Scalar& b, ArithOp op);

} // namespace ncgb
