#pragma once

#include <array>
#include <cassert>
#include <cstdint>
#include <string>
#include <vector>

namespace qc {

/// Exponent vector of a monomial in nvars variables (nvars is 5 or 6 here,
/// anything up to 8 is supported). Total order is graded reverse
/// lexicographic throughout.
class Mono {
public:
    static constexpr int kMaxVars = 8;

    Mono() = default;
    explicit Mono(int nvars) : n_(static_cast<uint8_t>(nvars)) { assert(nvars <= kMaxVars); }
    Mono(int nvars, std::initializer_list<int> exps) : Mono(nvars) {
        int i = 0;
        for (int e : exps) set_exp(i++, e);
    }

    int nvars() const { return n_; }
    int exp(int i) const { return e_[static_cast<size_t>(i)]; }
    void set_exp(int i, int v) {
        assert(i < n_ && v >= 0 && v < 256);
        e_[static_cast<size_t>(i)] = static_cast<uint8_t>(v);
    }

    int degree() const {
        int d = 0;
        for (int i = 0; i < n_; ++i) d += e_[static_cast<size_t>(i)];
        return d;
    }

    bool is_constant() const { return degree() == 0; }

    friend bool operator==(const Mono& a, const Mono& b) { return a.n_ == b.n_ && a.e_ == b.e_; }
    friend bool operator!=(const Mono& a, const Mono& b) { return !(a == b); }

    /// -1, 0, +1 for a < b, a == b, a > b in grevlex: higher degree wins;
    /// on equal degree the last differing exponent decides, smaller is greater.
    friend int grevlex_cmp(const Mono& a, const Mono& b) {
        assert(a.n_ == b.n_);
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db ? -1 : 1;
        for (int i = a.n_ - 1; i >= 0; --i) {
            int d = a.exp(i) - b.exp(i);
            if (d != 0) return d > 0 ? -1 : 1;
        }
        return 0;
    }

    std::string render(char letter) const {
        std::string s;
        for (int i = 0; i < n_; ++i) {
            if (exp(i) == 0) continue;
            if (!s.empty()) s += "*";
            s += letter;
            s += std::to_string(i);
            if (exp(i) > 1) s += "^" + std::to_string(exp(i));
        }
        return s;
    }

private:
    std::array<uint8_t, kMaxVars> e_{};
    uint8_t n_ = 0;
};

struct MonoGrevlexGreater {
    bool operator()(const Mono& a, const Mono& b) const { return grevlex_cmp(a, b) > 0; }
};

inline Mono mono_mul(const Mono& a, const Mono& b) {
    assert(a.nvars() == b.nvars());
    Mono r(a.nvars());
    for (int i = 0; i < a.nvars(); ++i) r.set_exp(i, a.exp(i) + b.exp(i));
    return r;
}

inline bool mono_divides(const Mono& a, const Mono& b) {
    assert(a.nvars() == b.nvars());
    for (int i = 0; i < a.nvars(); ++i)
        if (a.exp(i) > b.exp(i)) return false;
    return true;
}

/// b / a; requires mono_divides(a, b).
inline Mono mono_div(const Mono& b, const Mono& a) {
    assert(mono_divides(a, b));
    Mono r(a.nvars());
    for (int i = 0; i < a.nvars(); ++i) r.set_exp(i, b.exp(i) - a.exp(i));
    return r;
}

inline Mono mono_lcm(const Mono& a, const Mono& b) {
    assert(a.nvars() == b.nvars());
    Mono r(a.nvars());
    for (int i = 0; i < a.nvars(); ++i) r.set_exp(i, std::max(a.exp(i), b.exp(i)));
    return r;
}

inline bool mono_coprime(const Mono& a, const Mono& b) {
    assert(a.nvars() == b.nvars());
    for (int i = 0; i < a.nvars(); ++i)
        if (a.exp(i) > 0 && b.exp(i) > 0) return false;
    return true;
}

/// All monomials of degree d in nvars variables, grevlex-descending.
/// Count is C(d + nvars - 1, nvars - 1).
inline std::vector<Mono> graded_monomials(int nvars, int d) {
    std::vector<Mono> out;
    Mono m(nvars);
    auto rec = [&](auto&& self, int var, int rem) -> void {
        if (var == nvars - 1) {
            m.set_exp(var, rem);
            out.push_back(m);
            return;
        }
        for (int e = rem; e >= 0; --e) {
            m.set_exp(var, e);
            self(self, var + 1, rem - e);
        }
        m.set_exp(var, 0);
    };
    rec(rec, 0, d);
    std::sort(out.begin(), out.end(), MonoGrevlexGreater{});
    return out;
}

}  // namespace qc
