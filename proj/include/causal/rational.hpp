#ifndef CAUSAL_RATIONAL_HPP
#define CAUSAL_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

#include "causal/errors.hpp"

namespace causal {

// Arbitrary-precision rational, always in lowest terms with positive
// denominator. Backed by GMP; every operation is exact.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {} // NOLINT(google-explicit-constructor)
    Rational(long num, long den) : q_(make(mpz_class(num), mpz_class(den))) {}
    Rational(mpz_class num, mpz_class den) : q_(make(std::move(num), std::move(den))) {}
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    const mpz_class& numerator() const { return q_.get_num(); }
    const mpz_class& denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(static_cast<mpq_class>(-q_)); }

    Rational operator+(const Rational& o) const { return Rational(static_cast<mpq_class>(q_ + o.q_)); }
    Rational operator-(const Rational& o) const { return Rational(static_cast<mpq_class>(q_ - o.q_)); }
    Rational operator*(const Rational& o) const { return Rational(static_cast<mpq_class>(q_ * o.q_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(static_cast<mpq_class>(q_ / o.q_));
    }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    Rational reciprocal() const {
        if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
        return Rational(q_.get_den(), q_.get_num());
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    bool operator==(const Rational& o) const { return mpq_cmp(q_.get_mpq_t(), o.q_.get_mpq_t()) == 0; }
    std::strong_ordering operator<=>(const Rational& o) const {
        const int c = mpq_cmp(q_.get_mpq_t(), o.q_.get_mpq_t());
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    // "p" for integers, "p/q" otherwise.
    std::string str() const {
        if (is_integer()) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    // Accepts an optionally signed decimal integer or "p/q" with q > 0 after
    // sign normalization; "1/0" and empty parts are ParseErrors.
    static Rational parse(std::string_view text);

    const mpq_class& raw() const { return q_; }

private:
    static mpq_class make(mpz_class num, mpz_class den) {
        if (sgn(den) == 0) throw std::domain_error("Rational: zero denominator");
        mpq_class q(std::move(num), std::move(den));
        q.canonicalize();
        return q;
    }

    mpq_class q_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

inline Rational Rational::parse(std::string_view text) {
    const auto bad = [&](const char* why) {
        throw ParseError(std::string("bad rational \"") + std::string(text) + "\": " + why);
    };
    if (text.empty()) bad("empty");
    const auto slash = text.find('/');
    const std::string_view num_part = text.substr(0, slash);
    const auto is_int = [](std::string_view s, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    if (!is_int(num_part, true)) bad("numerator is not a decimal integer");
    // mpz_set_str takes an optional minus but not an explicit plus.
    const std::string_view digits = num_part.front() == '+' ? num_part.substr(1) : num_part;
    mpz_class num(std::string(digits), 10);
    if (slash == std::string_view::npos) return Rational(std::move(num), mpz_class(1));
    const std::string_view den_part = text.substr(slash + 1);
    if (!is_int(den_part, false)) bad("denominator is not an unsigned decimal integer");
    mpz_class den(std::string(den_part), 10);
    if (sgn(den) == 0) bad("zero denominator");
    return Rational(std::move(num), std::move(den));
}

} // namespace causal

#endif
