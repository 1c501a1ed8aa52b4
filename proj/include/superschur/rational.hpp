#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace superschur {

/* Exact rational scalar backed by GMP. Canonical form is maintained at all
 * times: denominator > 0 and gcd(|numerator|, denominator) = 1. Every
 * operation is exact; there is no rounding anywhere in this library.
 */
class Rational {
  public:
    Rational() : q_(0) {}
    Rational(int v) : q_(v) {}
    Rational(long v) : q_(static_cast<signed long>(v)) {}
    Rational(long long v) : q_(static_cast<signed long>(v)) {}
    Rational(long long num, long long den) {
        if (den == 0)
            throw std::invalid_argument("Rational: zero denominator");
        q_ = mpq_class(static_cast<signed long>(num), static_cast<signed long>(den));
        q_.canonicalize();
    }
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
    explicit Rational(const mpz_class& num) : q_(num) {}

    /* Accepts "p" or "p/q" with an optional leading '-', digits only.
     * Returns nullopt on any malformed input (including q = 0).
     */
    static std::optional<Rational> parse(std::string_view text);

    const mpz_class& numerator() const { return q_.get_num(); }
    const mpz_class& denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    /* "p" when integral, "p/q" otherwise. */
    std::string str() const {
        if (is_integer())
            return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero())
            throw std::invalid_argument("Rational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { Rational r; r.q_ = -a.q_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    Rational reciprocal() const {
        if (is_zero())
            throw std::invalid_argument("Rational: reciprocal of zero");
        Rational r;
        r.q_ = 1 / q_;
        return r;
    }

  private:
    mpq_class q_;
};

inline std::optional<Rational> Rational::parse(std::string_view text) {
    auto digits = [](std::string_view s) {
        if (s.empty())
            return false;
        for (char c : s)
            if (c < '0' || c > '9')
                return false;
        return true;
    };
    std::string_view num = text, den;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        if (!digits(den))
            return std::nullopt;
    }
    bool neg = !num.empty() && num.front() == '-';
    if (neg)
        num.remove_prefix(1);
    if (!digits(num))
        return std::nullopt;
    mpz_class n(std::string(num), 10);
    if (neg)
        n = -n;
    if (den.empty())
        return Rational(n);
    mpz_class d(std::string(den), 10);
    if (d == 0)
        return std::nullopt;
    mpq_class q(n);
    q /= mpq_class(d);
    return Rational(q);
}

} // namespace superschur
