#pragma once

#include "qc/rational.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace qc {

/// Element a + b*w of Q(w), where w is a primitive cube root of unity:
/// w^2 = -1 - w, w^3 = 1, 1 + w + w^2 = 0. This is the coefficient field
/// for the node coordinates; it is the only extension of Q in the toolkit.
class Cyc {
public:
    Cyc() = default;
    Cyc(int n) : a_(n) {}
    Cyc(Rat a) : a_(std::move(a)) {}
    Cyc(Rat a, Rat b) : a_(std::move(a)), b_(std::move(b)) {}

    static Cyc zero() { return Cyc(); }
    static Cyc one() { return Cyc(1); }
    static Cyc omega() { return Cyc(Rat(0), Rat(1)); }

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_one() const { return a_.is_one() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    /// Rational part of a rational element; throws if b != 0.
    Rat to_rat() const {
        if (!is_rational()) throw std::domain_error("Cyc: not rational: " + to_string());
        return a_;
    }

    /// Galois conjugate a + b*w^2 = (a - b) - b*w.
    Cyc conj() const { return Cyc(a_ - b_, -b_); }

    /// Field norm a^2 - a*b + b^2; zero iff the element is zero.
    Rat norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }

    Cyc inverse() const {
        if (is_zero()) throw std::domain_error("Cyc: inverse of zero");
        Rat n = norm();
        return Cyc((a_ - b_) / n, -b_ / n);
    }

    friend Cyc operator+(const Cyc& x, const Cyc& y) { return Cyc(x.a_ + y.a_, x.b_ + y.b_); }
    friend Cyc operator-(const Cyc& x, const Cyc& y) { return Cyc(x.a_ - y.a_, x.b_ - y.b_); }
    Cyc operator-() const { return Cyc(-a_, -b_); }

    // (a + bw)(c + dw) = ac + (ad + bc)w + bd(-1 - w)
    friend Cyc operator*(const Cyc& x, const Cyc& y) {
        Rat bd = x.b_ * y.b_;
        return Cyc(x.a_ * y.a_ - bd, x.a_ * y.b_ + x.b_ * y.a_ - bd);
    }
    friend Cyc operator/(const Cyc& x, const Cyc& y) { return x * y.inverse(); }

    Cyc& operator+=(const Cyc& y) { a_ += y.a_; b_ += y.b_; return *this; }
    Cyc& operator-=(const Cyc& y) { a_ -= y.a_; b_ -= y.b_; return *this; }
    Cyc& operator*=(const Cyc& y) { *this = *this * y; return *this; }
    Cyc& operator/=(const Cyc& y) { *this = *this / y; return *this; }

    friend bool operator==(const Cyc& x, const Cyc& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
    friend bool operator!=(const Cyc& x, const Cyc& y) { return !(x == y); }

    // Lexicographic on (a, b); used only for canonical ordering and dedup.
    friend bool operator<(const Cyc& x, const Cyc& y) {
        if (x.a_ != y.a_) return x.a_ < y.a_;
        return x.b_ < y.b_;
    }

    /// Renders "a + b*w" in the field grammar: "1 + w", "-2", "3/2*w", "1 - 2*w".
    std::string to_string() const {
        if (b_.is_zero()) return a_.to_string();
        std::string wpart;
        Rat ab = qc::abs(b_);
        if (ab.is_one())
            wpart = "w";
        else
            wpart = ab.to_string() + "*w";
        if (a_.is_zero()) return (b_.sign() < 0 ? "-" : "") + wpart;
        return a_.to_string() + (b_.sign() < 0 ? " - " : " + ") + wpart;
    }

    /// Parses the to_string grammar (sums of rational terms and w-terms).
    static Cyc parse(std::string_view text) {
        Cyc result;
        size_t i = 0;
        auto skip_ws = [&] { while (i < text.size() && text[i] == ' ') ++i; };
        skip_ws();
        if (i == text.size()) throw std::invalid_argument("Cyc: empty input");
        bool first = true;
        while (i < text.size()) {
            int sign = 1;
            skip_ws();
            if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
                sign = text[i] == '-' ? -1 : 1;
                ++i;
                skip_ws();
            } else if (!first) {
                throw std::invalid_argument("Cyc: expected '+' or '-' in '" + std::string(text) + "'");
            }
            first = false;
            // term: rational, 'w', or rational '*' 'w'
            Rat coeff = Rat(1);
            bool have_coeff = false;
            size_t start = i;
            while (i < text.size() && (std::isdigit((unsigned char)text[i]) || text[i] == '/')) ++i;
            if (i > start) {
                coeff = Rat::parse(text.substr(start, i - start));
                have_coeff = true;
            }
            skip_ws();
            bool have_w = false;
            if (i < text.size() && text[i] == '*') {
                ++i;
                skip_ws();
                if (i >= text.size() || text[i] != 'w')
                    throw std::invalid_argument("Cyc: expected 'w' after '*'");
                ++i;
                have_w = true;
            } else if (i < text.size() && text[i] == 'w') {
                if (have_coeff)
                    throw std::invalid_argument("Cyc: expected '*' before 'w'");
                ++i;
                have_w = true;
            }
            if (!have_coeff && !have_w)
                throw std::invalid_argument("Cyc: cannot parse '" + std::string(text) + "'");
            Rat signed_coeff = sign < 0 ? -coeff : coeff;
            if (have_w)
                result += Cyc(Rat(0), signed_coeff);
            else
                result += Cyc(signed_coeff);
            skip_ws();
        }
        return result;
    }

private:
    Rat a_, b_;
};

inline Cyc to_cyc(const Rat& x) { return Cyc(x); }

}  // namespace qc
