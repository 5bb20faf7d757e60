#include "ncgb/scalar.hpp"

#include <limits>

#include "ncgb/error.hpp"

namespace ncgb {

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p)
{
    if (p > std::numeric_limits<std::uint32_t>::max())
        throw Error("modulus " + std::to_string(p) + " does not fit in 32 bits");
    if (!is_prime(p))
        throw Error("modulus " + std::to_string(p) + " is not prime");
    return {Kind::PrimeField, static_cast<std::uint32_t>(p)};
}

std::string FieldSpec::to_string() const
{
    if (kind == Kind::Rationals)
        return "Q";
    return "GF " + std::to_string(modulus);
}

namespace {

std::uint32_t reduce_mpz(const mpz_class& v, std::uint32_t p)
{
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
    return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint32_t p)
{
    std::uint64_t result = 1;
    base %= p;
    while (exp > 0) {
        if (exp & 1)
            result = result * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return static_cast<std::uint32_t>(result);
}

void check_same_field(const Scalar& a, const Scalar& b)
{
    if (!(a.field() == b.field()))
        throw Error("scalar field mismatch: " + a.field().to_string() + " vs " + b.field().to_string());
}

} // namespace

Scalar Scalar::zero(const FieldSpec& field)
{
    return integer(field, 0L);
}

Scalar Scalar::one(const FieldSpec& field)
{
    return integer(field, 1L);
}

Scalar Scalar::integer(const FieldSpec& field, long value)
{
    return integer(field, mpz_class(value));
}

Scalar Scalar::integer(const FieldSpec& field, const mpz_class& value)
{
    if (field.is_prime_field())
        return Scalar(Residue{reduce_mpz(value, field.modulus), field.modulus});
    return Scalar(mpq_class(value));
}

Scalar Scalar::rational(const FieldSpec& field, const mpz_class& num, const mpz_class& den)
{
    if (field.is_prime_field()) {
        std::uint32_t d = reduce_mpz(den, field.modulus);
        if (d == 0)
            throw Error("denominator vanishes modulo " + std::to_string(field.modulus));
        return integer(field, num) * Scalar(Residue{d, field.modulus}).inverse();
    }
    if (den == 0)
        throw Error("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(std::move(q));
}

FieldSpec Scalar::field() const
{
    if (const auto* r = std::get_if<Residue>(&value_))
        return {FieldSpec::Kind::PrimeField, r->modulus};
    return FieldSpec::rationals();
}

bool Scalar::is_zero() const
{
    if (const auto* r = std::get_if<Residue>(&value_))
        return r->value == 0;
    return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const
{
    if (const auto* r = std::get_if<Residue>(&value_))
        return r->value == 1;
    return std::get<mpq_class>(value_) == 1;
}

bool Scalar::is_negative() const
{
    if (const auto* q = std::get_if<mpq_class>(&value_))
        return sgn(*q) < 0;
    return false;
}

Scalar Scalar::operator-() const
{
    if (const auto* r = std::get_if<Residue>(&value_))
        return Scalar(Residue{r->value == 0 ? 0 : r->modulus - r->value, r->modulus});
    return Scalar(mpq_class(-std::get<mpq_class>(value_)));
}

Scalar Scalar::inverse() const
{
    if (is_zero())
        throw Error("inverse of zero");
    if (const auto* r = std::get_if<Residue>(&value_))
        return Scalar(Residue{mod_pow(r->value, r->modulus - 2, r->modulus), r->modulus});
    mpq_class inv = 1 / std::get<mpq_class>(value_);
    inv.canonicalize();
    return Scalar(std::move(inv));
}

Scalar operator+(const Scalar& a, const Scalar& b)
{
    check_same_field(a, b);
    if (const auto* r = std::get_if<Scalar::Residue>(&a.value_)) {
        const auto& s = std::get<Scalar::Residue>(b.value_);
        std::uint64_t v = (std::uint64_t{r->value} + s.value) % r->modulus;
        return Scalar(Scalar::Residue{static_cast<std::uint32_t>(v), r->modulus});
    }
    return Scalar(mpq_class(std::get<mpq_class>(a.value_) + std::get<mpq_class>(b.value_)));
}

Scalar operator-(const Scalar& a, const Scalar& b)
{
    check_same_field(a, b);
    if (const auto* r = std::get_if<Scalar::Residue>(&a.value_)) {
        const auto& s = std::get<Scalar::Residue>(b.value_);
        std::uint64_t v = (std::uint64_t{r->value} + r->modulus - s.value) % r->modulus;
        return Scalar(Scalar::Residue{static_cast<std::uint32_t>(v), r->modulus});
    }
    return Scalar(mpq_class(std::get<mpq_class>(a.value_) - std::get<mpq_class>(b.value_)));
}

Scalar operator*(const Scalar& a, const Scalar& b)
{
    check_same_field(a, b);
    if (const auto* r = std::get_if<Scalar::Residue>(&a.value_)) {
        const auto& s = std::get<Scalar::Residue>(b.value_);
        std::uint64_t v = std::uint64_t{r->value} * s.value % r->modulus;
        return Scalar(Scalar::Residue{static_cast<std::uint32_t>(v), r->modulus});
    }
    return Scalar(mpq_class(std::get<mpq_class>(a.value_) * std::get<mpq_class>(b.value_)));
}

Scalar operator/(const Scalar& a, const Scalar& b)
{
    check_same_field(a, b);
    if (b.is_zero())
        throw Error("division by zero");
    return a * b.inverse();
}

bool operator==(const Scalar& a, const Scalar& b)
{
    if (a.value_.index() != b.value_.index())
        return false;
    if (const auto* r = std::get_if<Scalar::Residue>(&a.value_)) {
        const auto& s = std::get<Scalar::Residue>(b.value_);
        return r->value == s.value && r->modulus == s.modulus;
    }
    return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
}

std::string Scalar::to_string() const
{
    if (const auto* r = std::get_if<Residue>(&value_))
        return std::to_string(r->value);
    const auto& q = std::get<mpq_class>(value_);
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

const mpq_class& Scalar::rational_value() const
{
    if (const auto* q = std::get_if<mpq_class>(&value_))
        return *q;
    throw Error("rational_value() on a prime-field scalar");
}

std::uint32_t Scalar::residue() const
{
    if (const auto* r = std::get_if<Residue>(&value_))
        return r->value;
    throw Error("residue() on a rational scalar");
}

Scalar arith(const Scalar& a, const Scalar& b, ArithOp op)
{
    switch (op) {
    case ArithOp::Add:
        return a + b;
    case ArithOp::Sub:
        return a - b;
    case ArithOp::Mul:
        return a * b;
    case ArithOp::Div:
        return a / b;
    }
    throw InvariantError("unknown arithmetic op");
}

} // namespace ncgb
