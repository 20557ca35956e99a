#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qhl {

struct CyclotomicContext;

/// The ground field. Three kinds are supported: the rationals, a prime
/// field F_p (p < 2^31), and the cyclotomic field Q(z) with z a primitive
/// n-th root of unity, realized as Q[x] / Phi_n(x).
class FieldSpec
{
public:
    enum class Kind : std::uint8_t { Rationals, PrimeField, Cyclotomic };

    FieldSpec() = default; // rationals

    static FieldSpec rationals() { return FieldSpec(); }
    static FieldSpec prime(std::uint32_t p);
    static FieldSpec cyclotomic(std::uint32_t n);

    Kind kind() const noexcept { return kind_; }
    /// p for a prime field, n for a cyclotomic field, 0 for Q.
    std::uint32_t parameter() const noexcept { return param_; }
    std::uint32_t characteristic() const noexcept
    {
        return kind_ == Kind::PrimeField ? param_ : 0;
    }
    /// Dimension over the prime field (phi(n) for cyclotomic, 1 otherwise).
    std::size_t degree() const noexcept;
    const CyclotomicContext& cyclotomic_context() const;

    std::string to_string() const;

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) noexcept
    {
        return a.kind_ == b.kind_ && a.param_ == b.param_;
    }
    friend bool operator!=(const FieldSpec& a, const FieldSpec& b) noexcept
    {
        return !(a == b);
    }

private:
    Kind kind_ = Kind::Rationals;
    std::uint32_t param_ = 0;
    const CyclotomicContext* cyclo_ = nullptr;
};

/// Phi_n with integer coefficients, lowest degree first; monic.
struct CyclotomicContext
{
    std::uint32_t n = 1;
    std::vector<mpz_class> phi;
    std::size_t degree() const { return phi.size() - 1; }
};

bool is_prime(std::uint64_t p);
std::vector<mpz_class> cyclotomic_polynomial(std::uint32_t n);

/// An exact field element in canonical form. Equality is representational:
/// reduced fractions, residues in [0, p), reduced polynomial representatives
/// of fixed length phi(n).
class Scalar
{
public:
    Scalar() = default; // rational zero
    explicit Scalar(const FieldSpec& field);
    Scalar(const FieldSpec& field, long value);
    Scalar(const FieldSpec& field, const mpq_class& value);

    static Scalar zero(const FieldSpec& f) { return Scalar(f); }
    static Scalar one(const FieldSpec& f) { return Scalar(f, 1L); }
    /// The generator z of a cyclotomic field.
    static Scalar root_of_unity(const FieldSpec& f);
    static Scalar from_coefficients(const FieldSpec& f,
                                    std::vector<mpq_class> coeffs);
    /// Parses "a/b" or "a" (rationals, cyclotomic constants) and decimal
    /// residues (prime fields).
    static Scalar parse(const FieldSpec& f, const std::string& text);

    const FieldSpec& field() const noexcept { return field_; }
    bool is_zero() const noexcept;
    bool is_one() const noexcept;

    /// Rational value; only meaningful for Q (and degree-1 cyclotomic).
    const mpq_class& rational() const { return q_; }
    std::uint64_t residue() const noexcept { return r_; }
    const std::vector<mpq_class>& coefficients() const noexcept { return c_; }

    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }
    /// this += a * b without a temporary.
    void add_product(const Scalar& a, const Scalar& b);

    Scalar operator-() const;
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Canonical string: "a/b" or "a" for Q, decimal residue for F_p,
    /// "[c0,c1,...]" for cyclotomic (the JSON layer emits arrays).
    std::string to_string() const;

private:
    void check_field(const Scalar& o) const;
    void reduce_poly(std::vector<mpq_class>& poly) const;

    FieldSpec field_;
    mpq_class q_;
    std::uint64_t r_ = 0;
    std::vector<mpq_class> c_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

} // namespace qhl
