#pragma once

#include "qc/cyclotomic.hpp"
#include "qc/field.hpp"
#include "qc/monomial.hpp"
#include "qc/rational.hpp"

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qc {

// Coefficient rendering hooks for the polynomial grammar: a coefficient is
// split into (leading-minus?, magnitude text). Mixed cyclotomics get parens.
inline std::pair<bool, std::string> coeff_sign_split(const Rat& c) {
    return {c.sign() < 0, qc::abs(c).to_string()};
}
inline std::pair<bool, std::string> coeff_sign_split(const Cyc& c) {
    if (c.b().is_zero()) return coeff_sign_split(c.a());
    if (c.a().is_zero()) {
        Rat ab = qc::abs(c.b());
        return {c.b().sign() < 0, ab.is_one() ? "w" : ab.to_string() + "*w"};
    }
    return {false, "(" + c.to_string() + ")"};
}

/// Sparse multivariate polynomial over an exact field. Terms are kept in a
/// grevlex-descending map with no zero coefficients, so representation,
/// rendering and iteration order are canonical.
template <Field F>
class MPoly {
public:
    using Terms = std::map<Mono, F, MonoGrevlexGreater>;

    MPoly() = default;
    explicit MPoly(int nvars) : nvars_(nvars) {}
    MPoly(int nvars, const F& c) : nvars_(nvars) {
        if (!c.is_zero()) terms_.emplace(Mono(nvars), c);
    }
    MPoly(const Mono& m, const F& c) : nvars_(m.nvars()) {
        if (!c.is_zero()) terms_.emplace(m, c);
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    int degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

    /// The common degree of all terms, or nullopt (zero polynomial included).
    std::optional<int> homogeneous_degree() const {
        if (terms_.empty()) return std::nullopt;
        int d = terms_.begin()->first.degree();
        for (const auto& [m, c] : terms_)
            if (m.degree() != d) return std::nullopt;
        return d;
    }

    const Mono& leading_monomial() const {
        if (is_zero()) throw std::domain_error("MPoly: leading term of zero");
        return terms_.begin()->first;
    }
    const F& leading_coeff() const {
        if (is_zero()) throw std::domain_error("MPoly: leading term of zero");
        return terms_.begin()->second;
    }

    void add_term(const Mono& m, const F& c) {
        assert(m.nvars() == nvars_);
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    MPoly& operator+=(const MPoly& g) {
        for (const auto& [m, c] : g.terms_) add_term(m, c);
        return *this;
    }
    MPoly& operator-=(const MPoly& g) {
        for (const auto& [m, c] : g.terms_) add_term(m, -c);
        return *this;
    }
    friend MPoly operator+(MPoly f, const MPoly& g) { f += g; return f; }
    friend MPoly operator-(MPoly f, const MPoly& g) { f -= g; return f; }
    MPoly operator-() const {
        MPoly r(nvars_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    friend MPoly operator*(const MPoly& f, const MPoly& g) {
        assert(f.nvars_ == g.nvars_);
        MPoly r(f.nvars_);
        for (const auto& [mf, cf] : f.terms_)
            for (const auto& [mg, cg] : g.terms_) r.add_term(mono_mul(mf, mg), cf * cg);
        return r;
    }

    MPoly& operator*=(const F& c) {
        if (c.is_zero()) { terms_.clear(); return *this; }
        for (auto& [m, v] : terms_) v *= c;
        return *this;
    }
    friend MPoly operator*(const F& c, MPoly f) { f *= c; return f; }

    /// f -= c * m * g; the workhorse of polynomial division.
    void sub_scaled(const F& c, const Mono& m, const MPoly& g) {
        for (const auto& [mg, cg] : g.terms_) add_term(mono_mul(m, mg), -(c * cg));
    }

    /// Divides every coefficient by the leading one.
    MPoly monic() const {
        if (is_zero()) return *this;
        MPoly r = *this;
        F inv = leading_coeff().inverse();
        for (auto& [m, c] : r.terms_) c *= inv;
        return r;
    }

    friend bool operator==(const MPoly& f, const MPoly& g) {
        return f.nvars_ == g.nvars_ && f.terms_ == g.terms_;
    }
    friend bool operator!=(const MPoly& f, const MPoly& g) { return !(f == g); }

    std::string to_string() const {
        if (is_zero()) return "0";
        char letter = nvars_ == 6 ? 'x' : 'y';
        std::string s;
        for (const auto& [m, c] : terms_) {
            auto [neg, mag] = coeff_sign_split(c);
            if (s.empty())
                s += neg ? "-" : "";
            else
                s += neg ? " - " : " + ";
            std::string ms = m.render(letter);
            if (ms.empty())
                s += mag;
            else if (mag == "1")
                s += ms;
            else
                s += mag + "*" + ms;
        }
        return s;
    }

private:
    int nvars_ = 0;
    Terms terms_;
};

/// Formal partial derivative with respect to variable i.
template <Field F>
MPoly<F> partial(const MPoly<F>& f, int i) {
    if (i < 0 || i >= f.nvars()) throw std::invalid_argument("partial: bad variable index");
    MPoly<F> r(f.nvars());
    for (const auto& [m, c] : f.terms()) {
        int e = m.exp(i);
        if (e == 0) continue;
        Mono d = m;
        d.set_exp(i, e - 1);
        r.add_term(d, c * F(e));
    }
    return r;
}

/// Exact evaluation at a point with coordinates in the coefficient field.
template <Field F>
F evaluate(const MPoly<F>& f, std::span<const F> p) {
    if (static_cast<int>(p.size()) != f.nvars())
        throw std::invalid_argument("evaluate: point length != nvars");
    F total = F::zero();
    for (const auto& [m, c] : f.terms()) {
        F v = c;
        for (int i = 0; i < f.nvars(); ++i)
            for (int k = 0; k < m.exp(i); ++k) v *= p[static_cast<size_t>(i)];
        total += v;
    }
    return total;
}

template <Field F>
F evaluate(const MPoly<F>& f, const std::vector<F>& p) {
    return evaluate(f, std::span<const F>(p));
}

inline MPoly<Cyc> to_cyc(const MPoly<Rat>& f) {
    MPoly<Cyc> r(f.nvars());
    for (const auto& [m, c] : f.terms()) r.add_term(m, Cyc(c));
    return r;
}

/// Evaluation of a rational polynomial at a cyclotomic point.
inline Cyc evaluate(const MPoly<Rat>& f, std::span<const Cyc> p) {
    return evaluate(to_cyc(f), p);
}

/// Variable-permutation action on 6-variable polynomials: variable i is
/// renamed to variable g[i]. This is a left action: (g o h) . f = g . (h . f)
/// for composition (g o h)(i) = g(h(i)).
template <Field F>
MPoly<F> permute_vars(std::span<const int> g, const MPoly<F>& f) {
    if (f.nvars() != 6 || g.size() != 6)
        throw std::invalid_argument("permute_vars: expects 6 variables");
    MPoly<F> r(6);
    for (const auto& [m, c] : f.terms()) {
        Mono pm(6);
        for (int i = 0; i < 6; ++i) pm.set_exp(g[static_cast<size_t>(i)], m.exp(i));
        r.add_term(pm, c);
    }
    return r;
}

/// Restriction of a 6-variable polynomial to the hyperplane sum(x_i) = 0,
/// realized by eliminating x_drop: the remaining variables become y_0..y_4 in
/// ascending index order and x_drop is replaced by -(y_0 + ... + y_4).
template <Field F>
MPoly<F> restrict_to_hyperplane(const MPoly<F>& f, int drop = 5) {
    if (f.nvars() != 6) throw std::invalid_argument("restrict_to_hyperplane: expects 6 variables");
    if (drop < 0 || drop >= 6) throw std::invalid_argument("restrict_to_hyperplane: bad chart");

    MPoly<F> minus_sum(5);
    for (int i = 0; i < 5; ++i) {
        Mono m(5);
        m.set_exp(i, 1);
        minus_sum.add_term(m, -F::one());
    }
    std::vector<MPoly<F>> pow{MPoly<F>(5, F::one())};

    MPoly<F> r(5);
    for (const auto& [m, c] : f.terms()) {
        Mono base(5);
        int j = 0;
        for (int i = 0; i < 6; ++i) {
            if (i == drop) continue;
            base.set_exp(j++, m.exp(i));
        }
        int k = m.exp(drop);
        while (static_cast<int>(pow.size()) <= k) pow.push_back(pow.back() * minus_sum);
        for (const auto& [ms, cs] : pow[static_cast<size_t>(k)].terms())
            r.add_term(mono_mul(base, ms), c * cs);
    }
    return r;
}

namespace detail {

template <Field F>
F parse_coeff_atom(std::string_view atom) {
    if constexpr (std::same_as<F, Cyc>) {
        return Cyc::parse(atom);
    } else {
        return F(Rat::parse(atom));  // rational fields only
    }
}

}  // namespace detail

/// Parses the polynomial literal grammar, e.g. "3/2*y0^2*y3 - w*y4^3" or
/// "(1 - 2*w)*y1*y2 + 2". Variables are x0..x5 (nvars 6) or y0..y4 (nvars 5).
template <Field F>
MPoly<F> parse_poly(std::string_view text, int nvars) {
    char letter = nvars == 6 ? 'x' : 'y';
    MPoly<F> result(nvars);
    size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && text[i] == ' ') ++i; };
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("parse_poly: " + why + " in '" + std::string(text) + "'");
    };
    skip_ws();
    if (i == text.size()) fail("empty input");
    bool first = true;
    while (i < text.size()) {
        skip_ws();
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            fail("expected '+' or '-'");
        }
        first = false;
        F coeff = sign < 0 ? -F::one() : F::one();
        Mono mono(nvars);
        bool any_atom = false;
        while (true) {
            skip_ws();
            if (i >= text.size()) break;
            char c = text[i];
            if (c == '(') {
                size_t close = text.find(')', i);
                if (close == std::string_view::npos) fail("unbalanced '('");
                coeff *= detail::parse_coeff_atom<F>(text.substr(i + 1, close - i - 1));
                i = close + 1;
            } else if (c == letter) {
                ++i;
                if (i >= text.size() || !std::isdigit((unsigned char)text[i])) fail("expected variable index");
                int var = text[i] - '0';
                if (var >= nvars) fail("variable index out of range");
                ++i;
                int e = 1;
                if (i < text.size() && text[i] == '^') {
                    ++i;
                    if (i >= text.size() || !std::isdigit((unsigned char)text[i])) fail("expected exponent");
                    e = 0;
                    while (i < text.size() && std::isdigit((unsigned char)text[i])) e = e * 10 + (text[i++] - '0');
                }
                mono.set_exp(var, mono.exp(var) + e);
            } else if (c == 'w') {
                ++i;
                coeff *= detail::parse_coeff_atom<F>("w");
            } else if (std::isdigit((unsigned char)c)) {
                size_t start = i;
                while (i < text.size() && (std::isdigit((unsigned char)text[i]) || text[i] == '/')) ++i;
                coeff *= detail::parse_coeff_atom<F>(text.substr(start, i - start));
            } else {
                fail("unexpected character");
            }
            any_atom = true;
            skip_ws();
            if (i < text.size() && text[i] == '*') {
                ++i;
                continue;
            }
            break;
        }
        if (!any_atom) fail("empty term");
        result.add_term(mono, coeff);
        skip_ws();
    }
    return result;
}

}  // namespace qc
