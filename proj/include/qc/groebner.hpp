#pragma once

#include "qc/field.hpp"
#include "qc/monomial.hpp"
#include "qc/polynomial.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace qc {

/// Reduced Groebner basis in grevlex: generators monic, auto-reduced,
/// sorted by ascending leading monomial. The reduced basis of an ideal is
/// unique, so equal ideals yield byte-identical dumps.
template <Field F>
struct GroebnerBasis {
    int nvars = 0;
    std::vector<MPoly<F>> gens;

    bool empty() const { return gens.empty(); }

    std::string to_string() const {
        std::string s = "{";
        for (size_t i = 0; i < gens.size(); ++i) {
            if (i) s += ", ";
            s += gens[i].to_string();
        }
        return s + "}";
    }
};

struct BuchbergerStats {
    size_t pairs_formed = 0;
    size_t pairs_skipped_coprime = 0;
    size_t pairs_skipped_chain = 0;
    size_t reductions_to_zero = 0;
    size_t basis_size = 0;
    double millis = 0.0;
};

/// Remainder of f under full division by gens: no term of the result is
/// divisible by any leading monomial. For a Groebner basis this is the
/// canonical normal form (zero iff f lies in the ideal).
template <Field F>
MPoly<F> normal_form(const MPoly<F>& f, const std::vector<MPoly<F>>& gens) {
    MPoly<F> p = f;
    MPoly<F> r(f.nvars());
    while (!p.is_zero()) {
        const Mono& lm = p.leading_monomial();
        const MPoly<F>* reducer = nullptr;
        for (const MPoly<F>& g : gens) {
            if (!g.is_zero() && mono_divides(g.leading_monomial(), lm)) {
                reducer = &g;
                break;
            }
        }
        if (reducer) {
            F c = p.leading_coeff() / reducer->leading_coeff();
            p.sub_scaled(c, mono_div(lm, reducer->leading_monomial()), *reducer);
        } else {
            F c = p.leading_coeff();
            r.add_term(lm, c);
            p.add_term(lm, -c);
        }
    }
    return r;
}

template <Field F>
MPoly<F> normal_form(const MPoly<F>& f, const GroebnerBasis<F>& gb) {
    return normal_form(f, gb.gens);
}

/// S-polynomial of two monic polynomials.
template <Field F>
MPoly<F> s_polynomial(const MPoly<F>& f, const MPoly<F>& g) {
    Mono l = mono_lcm(f.leading_monomial(), g.leading_monomial());
    MPoly<F> s(f.nvars());
    s.sub_scaled(-f.leading_coeff().inverse(), mono_div(l, f.leading_monomial()), f);
    s.sub_scaled(g.leading_coeff().inverse(), mono_div(l, g.leading_monomial()), g);
    return s;
}

namespace detail {

// Minimalize (drop generators whose leading monomial is divisible by
// another's), then tail-reduce each against the rest.
template <Field F>
std::vector<MPoly<F>> reduce_basis(std::vector<MPoly<F>> basis) {
    std::sort(basis.begin(), basis.end(), [](const MPoly<F>& a, const MPoly<F>& b) {
        return grevlex_cmp(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    std::vector<MPoly<F>> minimal;
    for (const MPoly<F>& g : basis) {
        bool redundant = false;
        for (const MPoly<F>& h : minimal)
            if (mono_divides(h.leading_monomial(), g.leading_monomial())) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(g);
    }
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<MPoly<F>> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        minimal[i] = normal_form(minimal[i], others).monic();
    }
    std::sort(minimal.begin(), minimal.end(), [](const MPoly<F>& a, const MPoly<F>& b) {
        return grevlex_cmp(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    return minimal;
}

}  // namespace detail

/// Buchberger's algorithm: normal selection strategy (smallest lcm first)
/// with the coprime and chain criteria. Returns the reduced basis.
template <Field F>
GroebnerBasis<F> buchberger(const std::vector<MPoly<F>>& input, BuchbergerStats* stats = nullptr) {
    auto t0 = std::chrono::steady_clock::now();
    BuchbergerStats local;
    int nvars = 0;
    for (const auto& f : input)
        if (!f.is_zero()) nvars = f.nvars();

    std::vector<MPoly<F>> basis;

    struct Pair {
        int deg;
        Mono lcm;
        size_t i, j;
    };
    struct PairLess {
        bool operator()(const Pair& a, const Pair& b) const {
            if (a.deg != b.deg) return a.deg < b.deg;
            int c = grevlex_cmp(a.lcm, b.lcm);
            if (c != 0) return c < 0;
            if (a.i != b.i) return a.i < b.i;
            return a.j < b.j;
        }
    };
    std::set<Pair, PairLess> queue;
    std::set<std::pair<size_t, size_t>> pending;

    auto push_pairs_for = [&](size_t j) {
        for (size_t i = 0; i < j; ++i) {
            Mono l = mono_lcm(basis[i].leading_monomial(), basis[j].leading_monomial());
            queue.insert(Pair{l.degree(), l, i, j});
            pending.insert({i, j});
            ++local.pairs_formed;
        }
    };
    auto add_generator = [&](const MPoly<F>& g) {
        basis.push_back(g.monic());
        push_pairs_for(basis.size() - 1);
    };

    for (const MPoly<F>& f : input) {
        MPoly<F> r = normal_form(f, basis);
        if (!r.is_zero()) add_generator(r);
    }

    while (!queue.empty()) {
        Pair p = *queue.begin();
        queue.erase(queue.begin());
        pending.erase({p.i, p.j});

        const Mono& lmi = basis[p.i].leading_monomial();
        const Mono& lmj = basis[p.j].leading_monomial();
        if (mono_coprime(lmi, lmj)) {
            ++local.pairs_skipped_coprime;
            continue;
        }
        bool chain = false;
        for (size_t k = 0; k < basis.size() && !chain; ++k) {
            if (k == p.i || k == p.j) continue;
            if (!mono_divides(basis[k].leading_monomial(), p.lcm)) continue;
            auto key = [&](size_t a, size_t b) {
                return std::make_pair(std::min(a, b), std::max(a, b));
            };
            if (!pending.count(key(p.i, k)) && !pending.count(key(p.j, k))) chain = true;
        }
        if (chain) {
            ++local.pairs_skipped_chain;
            continue;
        }

        MPoly<F> r = normal_form(s_polynomial(basis[p.i], basis[p.j]), basis);
        if (r.is_zero())
            ++local.reductions_to_zero;
        else
            add_generator(r);
    }

    GroebnerBasis<F> gb;
    gb.nvars = nvars;
    gb.gens = detail::reduce_basis(std::move(basis));
    local.basis_size = gb.gens.size();
    local.millis =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (stats) *stats = local;
    return gb;
}

/// Dimension of degree d in the quotient by a homogeneous ideal: the count
/// of degree-d monomials outside the leading-term ideal.
template <Field F>
int quotient_graded_dim(const GroebnerBasis<F>& gb, int d) {
    for (const MPoly<F>& g : gb.gens)
        if (!g.homogeneous_degree().has_value())
            throw std::invalid_argument("quotient_graded_dim: ideal is not homogeneous");
    if (gb.gens.empty() && gb.nvars == 0)
        return d == 0 ? 1 : 0;
    int count = 0;
    for (const Mono& m : graded_monomials(gb.nvars, d)) {
        bool in_lt = false;
        for (const MPoly<F>& g : gb.gens)
            if (mono_divides(g.leading_monomial(), m)) {
                in_lt = true;
                break;
            }
        if (!in_lt) ++count;
    }
    return count;
}

/// The constant value of quotient_graded_dim on [d_from, d_from + span],
/// or nullopt if the window is not constant.
template <Field F>
std::optional<int> stable_hilbert_value(const GroebnerBasis<F>& gb, int d_from, int span) {
    int v = quotient_graded_dim(gb, d_from);
    for (int d = d_from + 1; d <= d_from + span; ++d)
        if (quotient_graded_dim(gb, d) != v) return std::nullopt;
    return v;
}

}  // namespace qc
