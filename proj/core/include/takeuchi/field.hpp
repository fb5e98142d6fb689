#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace takeuchi {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

class FieldError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact field element: either a rational number (characteristic 0) or a
/// residue modulo a prime below 2^31.
///
/// A rational scalar is "field-agnostic": combining it with a residue maps it
/// into the prime field first, so integer constants such as Scalar(-1) can be
/// used with any field. Mixing residues of two different primes throws.
class Scalar {
public:
    Scalar() = default;
    Scalar(std::int64_t v) : q_(v) {}  // NOLINT: implicit by design of the literal constants
    Scalar(const Rational& q) : q_(q) {}  // NOLINT

    static Scalar residue(std::int64_t v, std::uint32_t p);

    [[nodiscard]] bool is_zero() const noexcept { return p_ ? r_ == 0 : q_ == 0; }
    [[nodiscard]] bool is_one() const noexcept { return p_ ? r_ == 1 : q_ == 1; }
    [[nodiscard]] std::uint32_t characteristic() const noexcept { return p_; }
    [[nodiscard]] std::int64_t residue_value() const noexcept { return r_; }
    [[nodiscard]] const Rational& rational_value() const noexcept { return q_; }

    /// Image of this scalar in F_p (p = 0 leaves it unchanged).
    [[nodiscard]] Scalar in_characteristic(std::uint32_t p) const;

    [[nodiscard]] Scalar inverse() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar operator-() const;

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    [[nodiscard]] std::string to_string() const;

private:
    void unify(Scalar& o);

    std::uint32_t p_ = 0;
    std::int64_t r_ = 0;
    Rational q_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// The base field k: Q or F_p.
class Field {
public:
    enum class Kind { rationals, prime };

    Field() = default;
    static Field rationals() { return Field{}; }
    /// Throws FieldError unless p is a prime below 2^31.
    static Field prime(std::uint64_t p);
    /// Accepts "Q" / "QQ" or "F<p>" / "GF(<p>)".
    static Field parse(const std::string& text);

    [[nodiscard]] Kind kind() const noexcept { return p_ ? Kind::prime : Kind::rationals; }
    [[nodiscard]] std::uint32_t characteristic() const noexcept { return p_; }

    [[nodiscard]] Scalar zero() const { return make(0); }
    [[nodiscard]] Scalar one() const { return make(1); }
    [[nodiscard]] Scalar make(std::int64_t v) const;
    [[nodiscard]] Scalar make(std::int64_t num, std::int64_t den) const;
    /// Coerces a field-agnostic scalar into this field.
    [[nodiscard]] Scalar coerce(const Scalar& s) const { return s.in_characteristic(p_); }
    /// Parses "3", "-2/5"; the result lives in this field.
    [[nodiscard]] Scalar parse_scalar(const std::string& text) const;

    [[nodiscard]] std::string name() const;

    friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }
    friend bool operator!=(const Field& a, const Field& b) { return a.p_ != b.p_; }

private:
    explicit Field(std::uint32_t p) : p_(p) {}
    std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n);

}  // namespace takeuchi
