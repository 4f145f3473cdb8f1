#include "carcass/rational.hpp"

#include <atomic>
#include <cctype>
#include <ostream>

#include "carcass/errors.hpp"

namespace carcass {

namespace {

std::atomic<std::size_t> g_max_den_bits{0};

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
    bool neg = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s))
        throw ValidationError("malformed rational \"" + std::string(whole) +
                              "\": expected \"n\" or \"p/q\"");
    mpz_class z(std::string(s), 10);
    return neg ? mpz_class(-z) : z;
}

} // namespace

Rational::Rational(std::int64_t n) : value_(static_cast<long>(n)) {}

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    value_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    value_.canonicalize();
}

Rational::Rational(mpq_class q) : value_(std::move(q)) {
    value_.canonicalize();
    check_cap();
}

Rational Rational::parse(std::string_view text) {
    std::string_view t = text;
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
    const auto slash = t.find('/');
    if (slash == std::string_view::npos) return Rational(mpq_class(parse_integer(t, text)));
    mpz_class num = parse_integer(t.substr(0, slash), text);
    std::string_view den_text = t.substr(slash + 1);
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
        throw ValidationError("malformed rational \"" + std::string(text) +
                              "\": sign belongs on the numerator");
    mpz_class den = parse_integer(den_text, text);
    if (den == 0)
        throw ValidationError("malformed rational \"" + std::string(text) + "\": zero denominator");
    return Rational(mpq_class(num, den));
}

Rational Rational::pow2(int exponent) {
    mpz_class p = 1;
    if (exponent >= 0) {
        mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(exponent));
        return Rational(mpq_class(p));
    }
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(-exponent));
    return Rational(mpq_class(mpz_class(1), p));
}

std::size_t Rational::denominator_bits() const {
    return mpz_sizeinbase(denominator().get_mpz_t(), 2);
}

std::string Rational::str() const {
    if (is_integer()) return numerator().get_str();
    return numerator().get_str() + "/" + denominator().get_str();
}

void Rational::check_cap() const {
    const std::size_t cap = g_max_den_bits.load(std::memory_order_relaxed);
    if (cap != 0 && denominator_bits() > cap)
        throw ResourceError("denominator exceeds " + std::to_string(cap) + " bits");
}

Rational& Rational::operator+=(const Rational& o) {
    value_ += o.value_;
    check_cap();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    value_ -= o.value_;
    check_cap();
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    value_ *= o.value_;
    check_cap();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    value_ /= o.value_;
    check_cap();
    return *this;
}

Rational Rational::operator-() const {
    Rational r;
    r.value_ = -value_;
    return r;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

void set_max_denominator_bits(std::size_t bits) { g_max_den_bits.store(bits); }
std::size_t max_denominator_bits() { return g_max_den_bits.load(); }

} // namespace carcass
