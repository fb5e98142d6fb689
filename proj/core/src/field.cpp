#include "takeuchi/field.hpp"

#include <limits>
#include <ostream>
#include <sstream>

namespace takeuchi {

namespace {

std::int64_t mod_reduce(std::int64_t v, std::uint32_t p) {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    return r < 0 ? r + p : r;
}

std::int64_t mod_pow(std::int64_t base, std::uint64_t e, std::uint32_t p) {
    std::uint64_t result = 1;
    auto b = static_cast<std::uint64_t>(mod_reduce(base, p));
    while (e) {
        if (e & 1u) result = result * b % p;
        b = b * b % p;
        e >>= 1u;
    }
    return static_cast<std::int64_t>(result);
}

std::int64_t big_mod(const BigInt& v, std::uint32_t p) {
    BigInt r = v % p;
    if (r < 0) r += p;
    return r.convert_to<std::int64_t>();
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Scalar Scalar::residue(std::int64_t v, std::uint32_t p) {
    Scalar s;
    s.p_ = p;
    s.r_ = mod_reduce(v, p);
    return s;
}

Scalar Scalar::in_characteristic(std::uint32_t p) const {
    if (p == 0 || p_ == p) {
        if (p == 0 && p_ != 0)
            throw FieldError("cannot lift a residue mod " + std::to_string(p_) + " to the rationals");
        return *this;
    }
    if (p_ != 0)
        throw FieldError("characteristic mismatch: " + std::to_string(p_) + " vs " + std::to_string(p));
    std::int64_t num = big_mod(boost::multiprecision::numerator(q_), p);
    std::int64_t den = big_mod(boost::multiprecision::denominator(q_), p);
    if (den == 0)
        throw FieldError("denominator of " + to_string() + " vanishes in characteristic " + std::to_string(p));
    return residue(num * mod_pow(den, p - 2, p) % p, p);
}

void Scalar::unify(Scalar& o) {
    if (p_ == o.p_) return;
    if (p_ == 0) {
        *this = in_characteristic(o.p_);
    } else {
        o = o.in_characteristic(p_);
    }
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw FieldError("division by zero");
    if (p_) return residue(mod_pow(r_, p_ - 2, p_), p_);
    return Scalar(Rational(1) / q_);
}

Scalar& Scalar::operator+=(const Scalar& o) {
    Scalar other = o;
    unify(other);
    if (p_) {
        r_ += other.r_;
        if (r_ >= p_) r_ -= p_;
    } else {
        q_ += other.q_;
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    Scalar other = o;
    unify(other);
    if (p_) {
        r_ -= other.r_;
        if (r_ < 0) r_ += p_;
    } else {
        q_ -= other.q_;
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    Scalar other = o;
    unify(other);
    if (p_) {
        r_ = r_ * other.r_ % p_;
    } else {
        q_ *= other.q_;
    }
    return *this;
}

Scalar Scalar::operator-() const {
    if (p_) return residue(-r_, p_);
    return Scalar(Rational(-q_));
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.p_ == b.p_) return a.p_ ? a.r_ == b.r_ : a.q_ == b.q_;
    Scalar x = a, y = b;
    x.unify(y);
    return x.r_ == y.r_;
}

std::string Scalar::to_string() const {
    if (p_) return std::to_string(r_);
    std::ostringstream os;
    os << q_;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Field Field::prime(std::uint64_t p) {
    if (p >= (1ull << 31u) || !is_prime(p))
        throw FieldError("characteristic " + std::to_string(p) + " is not a prime below 2^31");
    return Field(static_cast<std::uint32_t>(p));
}

Field Field::parse(const std::string& text) {
    if (text == "Q" || text == "QQ" || text == "rationals") return rationals();
    std::string digits;
    if (text.size() > 1 && (text[0] == 'F' || text[0] == 'p')) {
        digits = text.substr(1);
    } else if (text.rfind("GF(", 0) == 0 && text.back() == ')') {
        digits = text.substr(3, text.size() - 4);
    } else {
        throw FieldError("unknown field '" + text + "'");
    }
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw FieldError("unknown field '" + text + "'");
    return prime(std::stoull(digits));
}

Scalar Field::make(std::int64_t v) const {
    return p_ ? Scalar::residue(v, p_) : Scalar(v);
}

Scalar Field::make(std::int64_t num, std::int64_t den) const {
    if (den == 0) throw FieldError("zero denominator");
    return coerce(Scalar(Rational(num, den)));
}

Scalar Field::parse_scalar(const std::string& text) const {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return coerce(Scalar(Rational(BigInt(text))));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw FieldError("zero denominator in '" + text + "'");
        return coerce(Scalar(Rational(num, den)));
    } catch (const std::runtime_error& e) {
        if (dynamic_cast<const FieldError*>(&e)) throw;
        throw FieldError("cannot parse scalar '" + text + "'");
    }
}

std::string Field::name() const { return p_ ? "F" + std::to_string(p_) : "Q"; }

}  // namespace takeuchi
