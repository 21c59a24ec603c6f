#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qc {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always stored reduced: gcd(|num|, den) = 1,
/// den >= 1, zero is 0/1. Equality is structural.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(int n) : v_(n) {}
    Rat(long long n) : v_(n) {}
    explicit Rat(const BigInt& n) : v_(n) {}
    Rat(const BigInt& num, const BigInt& den) {
        if (den == 0) throw std::domain_error("Rat: zero denominator");
        v_ = den < 0 ? Q(-num, -den) : Q(num, den);
    }
    Rat(long long num, long long den) : Rat(BigInt(num), BigInt(den)) {}

    static Rat zero() { return Rat(0); }
    static Rat one() { return Rat(1); }

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_.is_zero(); }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return v_.sign(); }

    Rat inverse() const {
        if (is_zero()) throw std::domain_error("Rat: inverse of zero");
        Rat r;
        r.v_ = 1 / v_;
        return r;
    }

    friend Rat operator+(const Rat& x, const Rat& y) { return Rat(x.v_ + y.v_); }
    friend Rat operator-(const Rat& x, const Rat& y) { return Rat(x.v_ - y.v_); }
    friend Rat operator*(const Rat& x, const Rat& y) { return Rat(x.v_ * y.v_); }
    friend Rat operator/(const Rat& x, const Rat& y) { return x * y.inverse(); }
    Rat operator-() const { return Rat(-v_); }

    Rat& operator+=(const Rat& y) { v_ += y.v_; return *this; }
    Rat& operator-=(const Rat& y) { v_ -= y.v_; return *this; }
    Rat& operator*=(const Rat& y) { v_ *= y.v_; return *this; }
    Rat& operator/=(const Rat& y) { *this = *this / y; return *this; }

    friend bool operator==(const Rat& x, const Rat& y) { return x.v_ == y.v_; }
    friend bool operator!=(const Rat& x, const Rat& y) { return x.v_ != y.v_; }
    friend bool operator<(const Rat& x, const Rat& y) { return x.v_ < y.v_; }
    friend bool operator<=(const Rat& x, const Rat& y) { return x.v_ <= y.v_; }
    friend bool operator>(const Rat& x, const Rat& y) { return x.v_ > y.v_; }
    friend bool operator>=(const Rat& x, const Rat& y) { return x.v_ >= y.v_; }

    /// Renders "p/q", with "/1" omitted: "3/2", "-7", "0".
    std::string to_string() const {
        std::string s = numerator().str();
        if (!is_integer()) s += "/" + denominator().str();
        return s;
    }

    /// Parses the to_string grammar. Throws std::invalid_argument on anything else.
    static Rat parse(std::string_view text) {
        auto trim = [](std::string_view s) {
            while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
            while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
            return s;
        };
        std::string_view s = trim(text);
        auto slash = s.find('/');
        std::string_view num = trim(s.substr(0, slash));
        std::string_view den = slash == std::string_view::npos
                                   ? std::string_view("1")
                                   : trim(s.substr(slash + 1));
        auto is_int = [](std::string_view p, bool allow_sign) {
            if (allow_sign && !p.empty() && (p.front() == '-' || p.front() == '+'))
                p.remove_prefix(1);
            if (p.empty()) return false;
            for (char c : p)
                if (c < '0' || c > '9') return false;
            return true;
        };
        if (!is_int(num, true) || !is_int(den, false))
            throw std::invalid_argument("Rat: cannot parse '" + std::string(text) + "'");
        return Rat(BigInt(std::string(num)), BigInt(std::string(den)));
    }

    double to_double() const { return v_.convert_to<double>(); }

private:
    using Q = boost::multiprecision::cpp_rational;
    explicit Rat(Q v) : v_(std::move(v)) {}
    Q v_;
};

inline Rat abs(const Rat& x) { return x.sign() < 0 ? -x : x; }

}  // namespace qc
