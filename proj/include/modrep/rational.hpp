#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace modrep {

/// Exact rational number with arbitrary-precision numerator and denominator.
///
/// Invariants: gcd(|num|, den) = 1 and den > 0, maintained through every
/// operation. Arithmetic never rounds. Serialized as "p/q" with the sign on
/// the numerator and the denominator always written, so output is canonical.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long n, long d) { assign(mpz_class(n), mpz_class(d)); }
    Rational(const mpz_class& n, const mpz_class& d) { assign(n, d); }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    [[nodiscard]] mpz_class numerator() const { return v_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return v_.get_den(); }

    [[nodiscard]] bool is_zero() const { return sgn(v_) == 0; }
    [[nodiscard]] bool is_integer() const { return v_.get_den() == 1; }
    [[nodiscard]] int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_), already_canonical{}); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    [[nodiscard]] Rational inverse() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        return Rational(mpq_class(1) / v_, already_canonical{});
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    /// Canonical "p/q" form, e.g. "-3/4", "5/1".
    [[nodiscard]] std::string to_string() const {
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    /// Accepts "p", "p/q" and an optional leading '+'; q must be nonzero.
    static Rational parse(std::string_view text) {
        if (!text.empty() && text.front() == '+') text.remove_prefix(1);
        const auto slash = text.find('/');
        const std::string num_str(text.substr(0, slash));
        mpz_class num, den = 1;
        if (num_str.empty() || mpz_set_str(num.get_mpz_t(), num_str.c_str(), 10) != 0)
            throw std::invalid_argument("Rational: malformed numerator '" + num_str + "'");
        if (slash != std::string_view::npos) {
            const std::string den_str(text.substr(slash + 1));
            if (den_str.empty() || mpz_set_str(den.get_mpz_t(), den_str.c_str(), 10) != 0)
                throw std::invalid_argument("Rational: malformed denominator '" + den_str + "'");
        }
        return Rational(num, den);
    }

private:
    struct already_canonical {};
    Rational(mpq_class q, already_canonical) : v_(std::move(q)) {}

    void assign(const mpz_class& n, const mpz_class& d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }

    mpq_class v_;
};

}  // namespace modrep
