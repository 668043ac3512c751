#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "modrep/rational.hpp"

namespace modrep {

/// Element of the cyclotomic field Q(w), w a primitive cube root of unity,
/// stored as a + b*w on the basis {1, w} with the reduction w^2 = -1 - w.
///
/// Consequences used throughout: w^3 = 1, 1 + w + w^2 = 0, and the norm
/// a^2 - ab + b^2 vanishes only at 0, so every nonzero element is invertible.
class Cyclotomic {
public:
    Cyclotomic() = default;
    Cyclotomic(long n) : a_(n) {}
    Cyclotomic(Rational a) : a_(std::move(a)) {}
    Cyclotomic(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    static Cyclotomic omega() { return {Rational(0), Rational(1)}; }

    /// w^k for any integer k (period 3); w^-1 = w^2 = -1 - w.
    static Cyclotomic omega_pow(long k) {
        switch (((k % 3) + 3) % 3) {
            case 0: return Cyclotomic(1);
            case 1: return omega();
            default: return {Rational(-1), Rational(-1)};
        }
    }

    [[nodiscard]] const Rational& rational_part() const { return a_; }
    [[nodiscard]] const Rational& omega_part() const { return b_; }

    [[nodiscard]] bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    [[nodiscard]] bool is_rational() const { return b_.is_zero(); }

    Cyclotomic operator-() const { return {-a_, -b_}; }

    Cyclotomic& operator+=(const Cyclotomic& o) { a_ += o.a_; b_ += o.b_; return *this; }
    Cyclotomic& operator-=(const Cyclotomic& o) { a_ -= o.a_; b_ -= o.b_; return *this; }

    // (a+bw)(c+dw) = ac + (ad+bc)w + bd(-1-w)
    Cyclotomic& operator*=(const Cyclotomic& o) {
        const Rational ac = a_ * o.a_;
        const Rational bd = b_ * o.b_;
        b_ = a_ * o.b_ + b_ * o.a_ - bd;
        a_ = ac - bd;
        return *this;
    }

    Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

    friend Cyclotomic operator+(Cyclotomic x, const Cyclotomic& y) { return x += y; }
    friend Cyclotomic operator-(Cyclotomic x, const Cyclotomic& y) { return x -= y; }
    friend Cyclotomic operator*(Cyclotomic x, const Cyclotomic& y) { return x *= y; }
    friend Cyclotomic operator/(Cyclotomic x, const Cyclotomic& y) { return x /= y; }

    friend bool operator==(const Cyclotomic& x, const Cyclotomic& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }

    /// Image under the nontrivial field automorphism w -> w^2.
    [[nodiscard]] Cyclotomic conjugate() const { return {a_ - b_, -b_}; }

    /// Field norm N(a+bw) = (a+bw)(a+bw^2) = a^2 - ab + b^2, a rational.
    [[nodiscard]] Rational norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }

    [[nodiscard]] Cyclotomic inverse() const {
        if (is_zero()) throw std::domain_error("Cyclotomic: division by zero");
        const Rational n = norm();
        return {(a_ - b_) / n, -b_ / n};
    }

    [[nodiscard]] Cyclotomic pow(unsigned long e) const {
        Cyclotomic result(1), base = *this;
        for (; e > 0; e >>= 1) {
            if (e & 1) result *= base;
            base *= base;
        }
        return result;
    }

    /// Canonical "p/q+p/q*w" form, e.g. "-1/1+-1/1*w" for w^2.
    [[nodiscard]] std::string to_string() const {
        return a_.to_string() + "+" + b_.to_string() + "*w";
    }

    /// Accepts the canonical form plus the shorthands "p/q", "p", "b*w",
    /// "a-b*w" and bare "w"/"-w". Whitespace is ignored.
    static Cyclotomic parse(std::string_view text) {
        std::string s;
        s.reserve(text.size());
        for (char c : text)
            if (c != ' ' && c != '\t') s.push_back(c);
        if (s.empty()) throw std::invalid_argument("Cyclotomic: empty string");

        const auto star_w = s.rfind("*w");
        if (star_w == std::string::npos) {
            if (s == "w" || s == "+w") return omega();
            if (s == "-w") return -omega();
            return {Rational::parse(s)};
        }
        if (star_w + 2 != s.size())
            throw std::invalid_argument("Cyclotomic: trailing characters after '*w' in '" + s + "'");

        // Split "<a><sep><b>*w" at the last top-level sign that is not part
        // of a number already begun (i.e. not at position 0 and not preceded
        // by '/', '+' or '-').
        std::size_t split = std::string::npos;
        for (std::size_t i = 1; i < star_w; ++i) {
            if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '/' && s[i - 1] != '+' && s[i - 1] != '-')
                split = i;
        }
        std::string a_part = "0", b_part;
        if (split == std::string::npos) {
            b_part = s.substr(0, star_w);
        } else {
            a_part = s.substr(0, split);
            b_part = s.substr(split, star_w - split);
            if (b_part.size() >= 2 && b_part[0] == '+' && (b_part[1] == '+' || b_part[1] == '-'))
                b_part.erase(0, 1);  // "a+-b*w" canonical emission
        }
        return {Rational::parse(a_part), Rational::parse(b_part)};
    }

private:
    Rational a_, b_;
};

}  // namespace modrep
