#ifndef REPCA_RATIONAL_HPP
#define REPCA_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace repca {

// Arbitrary-precision rational, always kept canonical: gcd(|num|, den) = 1,
// den > 0, zero is 0/1. Thin wrapper over GMP's mpq_class so that every
// construction path canonicalizes (mpq_class(n, d) alone does not).
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long n, long d);
    explicit Rational(const mpz_class& z) : v_(z) {}

    // Accepts "p/q" or "p" in base 10; canonicalizes. Throws ValidationError.
    static Rational parse(const std::string& s);

    // "p/q" in lowest terms, or "p" when the denominator is 1.
    std::string str() const { return v_.get_str(); }

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

} // namespace repca

#endif
