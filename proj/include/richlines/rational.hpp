#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace richlines {

// Exact rational scalar. Always stored reduced with positive denominator;
// equality and hashing are structural on the reduced form.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(n) {}
    Rational(long long n);
    Rational(long long num, long long den);
    explicit Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& num, const mpz_class& den);

    // Accepts "p", "p/q" and plain decimals ("0.15" becomes 3/20 exactly).
    static Rational parse(std::string_view text);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    int sign() const { return mpq_sgn(v_.get_mpq_t()); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational reciprocal() const;
    Rational abs() const { return Rational(mpq_class(::abs(v_)), raw_tag{}); }
    double to_double() const { return v_.get_d(); }

    // "p/q", or just "p" when the denominator is 1.
    std::string str() const;

    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_), raw_tag{}); }
    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_), raw_tag{}); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_), raw_tag{}); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_), raw_tag{}); }
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& b) { v_ += b.v_; return *this; }
    Rational& operator-=(const Rational& b) { v_ -= b.v_; return *this; }
    Rational& operator*=(const Rational& b) { v_ *= b.v_; return *this; }
    Rational& operator/=(const Rational& b);

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) < 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

private:
    struct raw_tag {};
    Rational(mpq_class v, raw_tag) : v_(std::move(v)) {}  // v must already be canonical
    mpq_class v_;
};

std::size_t hash_value(const mpz_class& z);
std::size_t hash_value(const Rational& r);

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Exact rational power of an integer, K^e with e >= 0.
Rational pow_rational(const Rational& base, unsigned long e);

}  // namespace richlines

template <>
struct std::hash<richlines::Rational> {
    std::size_t operator()(const richlines::Rational& r) const noexcept { return richlines::hash_value(r); }
};
