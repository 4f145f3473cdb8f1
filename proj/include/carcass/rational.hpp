#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace carcass {

// Exact rational number, always in lowest terms with a positive
// denominator. Every coordinate, slope and ratio in the library is one of
// these; nothing is ever rounded.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n); // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den);
    explicit Rational(mpq_class q);

    // Accepts "n", "-n", "p/q", "-p/q" (unreduced forms are normalized).
    static Rational parse(std::string_view text);
    static Rational pow2(int exponent);

    const mpz_class& numerator() const { return value_.get_num(); }
    const mpz_class& denominator() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return denominator() == 1; }
    std::size_t denominator_bits() const;

    std::string str() const;
    double approx() const { return value_.get_d(); }

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.value_ == b.value_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    void check_cap() const;

    mpq_class value_{0};
};

Rational abs(const Rational& r);
std::ostream& operator<<(std::ostream& os, const Rational& r);

// Process-wide cap on the bit length of any denominator produced by
// arithmetic. Zero disables the cap (the default). Exceeding it raises
// ResourceError.
void set_max_denominator_bits(std::size_t bits);
std::size_t max_denominator_bits();

} // namespace carcass
