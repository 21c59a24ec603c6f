#pragma once

#include "qc/cyclotomic.hpp"
#include "qc/groebner.hpp"
#include "qc/linalg.hpp"
#include "qc/polynomial.hpp"
#include "qc/rational.hpp"
#include "qc/s6.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

namespace qc {

struct decomposition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when the Jacobian scheme degree stabilizes away from 30: either a
/// special parameter or an implementation fault.
struct singular_count_mismatch : std::runtime_error {
    int stable_value;
    explicit singular_count_mismatch(int v)
        : std::runtime_error("singular scheme degree stabilized at " + std::to_string(v) +
                             ", expected 30"),
          stable_value(v) {}
};

/// F_t = t * sum(x_i^4) - (sum(x_i^2))^2, the S6-invariant quartic pencil
/// in x_0..x_5, homogeneous of degree 4.
inline MPoly<Rat> build_pencil_quartic(const Rat& t) {
    MPoly<Rat> quartics(6), squares(6);
    for (int i = 0; i < 6; ++i) {
        Mono m4(6), m2(6);
        m4.set_exp(i, 4);
        m2.set_exp(i, 2);
        quartics.add_term(m4, Rat(1));
        squares.add_term(m2, Rat(1));
    }
    return t * quartics - squares * squares;
}

/// sum(y_i^4), a smooth quartic threefold in P^4; its Jacobian ring is the
/// smooth reference for the defect formula.
inline MPoly<Rat> fermat_quartic() {
    MPoly<Rat> f(5);
    for (int i = 0; i < 5; ++i) {
        Mono m(5);
        m.set_exp(i, 4);
        f.add_term(m, Rat(1));
    }
    return f;
}

/// One member X_t of the pencil: the 6-variable form F and its restriction
/// G to the hyperplane sum(x_i) = 0 (chart dropping x_5).
struct PencilMember {
    Rat t;
    MPoly<Rat> F;  // 6 variables
    MPoly<Rat> G;  // 5 variables

    explicit PencilMember(const Rat& t_) : t(t_), F(build_pencil_quartic(t_)), G(restrict_to_hyperplane(F)) {}
};

inline ProjPoint node_seed() {
    Cyc w = Cyc::omega();
    return ProjPoint({Cyc(1), Cyc(1), w, w, w * w, w * w});
}

/// The 30 nodes: the S6-orbit of (1, 1, w, w, w^2, w^2).
inline const std::vector<ProjPoint>& node_orbit() {
    static const std::vector<ProjPoint> nodes = orbit(node_seed());
    return nodes;
}

/// Chart coordinates of a point on the hyperplane: the first five
/// homogeneous coordinates (x_5 is determined by the sum-zero relation).
inline std::vector<Cyc> chart_coords(const ProjPoint& p) {
    return std::vector<Cyc>(p.coords().begin(), p.coords().begin() + 5);
}

/// True iff all five partials of G vanish at p (a singular point of X_t in
/// P(V)). Also insists on G(p) = 0, which Euler's identity forces.
inline bool verify_node_singular(const PencilMember& member, const ProjPoint& p) {
    if (!p.coord_sum().is_zero())
        throw std::invalid_argument("verify_node_singular: point is not on the hyperplane");
    std::vector<Cyc> y = chart_coords(p);
    for (int i = 0; i < 5; ++i)
        if (!evaluate(partial(member.G, i), std::span<const Cyc>(y)).is_zero()) return false;
    return evaluate(member.G, std::span<const Cyc>(y)).is_zero();
}

/// Determinant of the 4x4 Hessian of the dehomogenized equation at p, in the
/// chart of the first nonzero chart coordinate. Nonzero iff the singularity
/// is an ordinary double point.
inline Cyc odp_hessian_det(const PencilMember& member, const ProjPoint& p) {
    std::vector<Cyc> y = chart_coords(p);
    int chart = -1;
    for (int i = 0; i < 5 && chart < 0; ++i)
        if (!y[static_cast<size_t>(i)].is_zero()) chart = i;
    if (chart < 0) throw std::domain_error("odp_hessian_det: point vanishes in every chart");

    Cyc scale = y[static_cast<size_t>(chart)].inverse();
    for (auto& c : y) c *= scale;

    MPoly<Cyc> g = to_cyc(member.G);
    std::vector<int> local;
    for (int i = 0; i < 5; ++i)
        if (i != chart) local.push_back(i);

    Mat<Cyc> hess(4, 4);
    for (size_t a = 0; a < 4; ++a)
        for (size_t b = a; b < 4; ++b) {
            Cyc v = evaluate(partial(partial(g, local[a]), local[b]), std::span<const Cyc>(y));
            hess.at(a, b) = v;
            hess.at(b, a) = v;
        }
    return determinant(hess);
}

inline bool verify_odp(const PencilMember& member, const ProjPoint& p) {
    if (!verify_node_singular(member, p))
        throw std::invalid_argument("verify_odp: point is not singular on this member");
    return !odp_hessian_det(member, p).is_zero();
}

inline std::vector<MPoly<Rat>> jacobian_gens(const MPoly<Rat>& g) {
    std::vector<MPoly<Rat>> gens;
    for (int i = 0; i < g.nvars(); ++i) gens.push_back(partial(g, i));
    return gens;
}

// Stabilization window for the Hilbert function of the Jacobian quotient:
// values confirmed constant from degree 10 for every sampled generic t.
inline constexpr int kHilbertStableFrom = 10;
inline constexpr int kHilbertStableSpan = 3;

/// Stable degree of the Jacobian scheme of a member, whatever it is.
inline int singular_scheme_degree(const PencilMember& member, BuchbergerStats* stats = nullptr) {
    GroebnerBasis<Rat> gb = buchberger(jacobian_gens(member.G), stats);
    std::optional<int> v = stable_hilbert_value(gb, kHilbertStableFrom, kHilbertStableSpan);
    if (!v) throw std::runtime_error("singular scheme degree: Hilbert function not stable");
    return *v;
}

/// Degree of the singular scheme of X_t, certified by Hilbert-function
/// stabilization of the Jacobian ideal. Throws singular_count_mismatch when
/// the stable value is not 30 (special parameter or bug).
inline int singular_count_certificate(const PencilMember& member, BuchbergerStats* stats = nullptr) {
    int v = singular_scheme_degree(member, stats);
    if (v != 30) throw singular_count_mismatch(v);
    return v;
}

/// The space of cubic forms on P(V) vanishing at a set of points, as the
/// right kernel of the evaluation matrix in the degree-3 monomial frame.
struct CubicSpace {
    std::vector<Mono> frame;                  // graded_monomials(5, 3)
    std::vector<std::vector<Cyc>> basis;      // kernel vectors, RREF-normalized

    int dim() const { return static_cast<int>(basis.size()); }
};

inline Mat<Cyc> node_evaluation_matrix(const std::vector<ProjPoint>& points,
                                       const std::vector<Mono>& frame) {
    Mat<Cyc> m(points.size(), frame.size());
    for (size_t r = 0; r < points.size(); ++r) {
        std::vector<Cyc> y = chart_coords(points[r]);
        for (size_t c = 0; c < frame.size(); ++c) {
            Cyc v = Cyc::one();
            for (int i = 0; i < 5; ++i)
                for (int k = 0; k < frame[c].exp(i); ++k) v *= y[static_cast<size_t>(i)];
            m.at(r, c) = v;
        }
    }
    return m;
}

inline CubicSpace cubic_space(const std::vector<ProjPoint>& points) {
    if (points.empty()) throw std::invalid_argument("cubic_space: empty point set");
    CubicSpace cs;
    cs.frame = graded_monomials(5, 3);
    cs.basis = kernel_basis(node_evaluation_matrix(points, cs.frame));
    return cs;
}

/// Coefficient vector of a homogeneous cubic in the monomial frame.
inline std::vector<Cyc> coeff_vector(const MPoly<Cyc>& f, const std::vector<Mono>& frame) {
    std::vector<Cyc> v(frame.size(), Cyc::zero());
    size_t placed = 0;
    for (size_t i = 0; i < frame.size(); ++i) {
        auto it = f.terms().find(frame[i]);
        if (it != f.terms().end()) {
            v[i] = it->second;
            ++placed;
        }
    }
    if (placed != f.term_count())
        throw std::invalid_argument("coeff_vector: polynomial has terms outside the frame");
    return v;
}

namespace detail {

inline void require_sum_zero(const std::array<Cyc, 6>& v) {
    Cyc s;
    for (const Cyc& x : v) s += x;
    if (!s.is_zero()) throw std::invalid_argument("map into cubics: vector must have zero sum");
}

inline std::vector<Cyc> restricted_cubic_coeffs(const MPoly<Cyc>& cubic6,
                                                const std::vector<Mono>& frame) {
    return coeff_vector(restrict_to_hyperplane(cubic6), frame);
}

}  // namespace detail

/// a: V -> cubics, e_i -> x_i^3, restricted to the chart.
inline std::vector<Cyc> map_a(const std::array<Cyc, 6>& v, const std::vector<Mono>& frame) {
    detail::require_sum_zero(v);
    MPoly<Cyc> f(6);
    for (int i = 0; i < 6; ++i) {
        Mono m(6);
        m.set_exp(i, 3);
        f.add_term(m, v[static_cast<size_t>(i)]);
    }
    return detail::restricted_cubic_coeffs(f, frame);
}

/// b: V -> cubics, e_i -> x_i * sum(x_j^2), restricted to the chart.
inline std::vector<Cyc> map_b(const std::array<Cyc, 6>& v, const std::vector<Mono>& frame) {
    detail::require_sum_zero(v);
    MPoly<Cyc> linear(6), squares(6);
    for (int i = 0; i < 6; ++i) {
        Mono m1(6), m2(6);
        m1.set_exp(i, 1);
        m2.set_exp(i, 2);
        linear.add_term(m1, v[static_cast<size_t>(i)]);
        squares.add_term(m2, Cyc::one());
    }
    return detail::restricted_cubic_coeffs(linear * squares, frame);
}

/// Matrix of g acting on the 35-dimensional space of chart cubics: column j
/// holds the coefficients of g applied to the j-th frame monomial.
inline Mat<Cyc> cubic_action_matrix(const Perm& g, const std::vector<Mono>& frame) {
    Mat<Cyc> op(frame.size(), frame.size());
    for (size_t j = 0; j < frame.size(); ++j) {
        Mono lift(6);
        for (int i = 0; i < 5; ++i) lift.set_exp(i, frame[j].exp(i));
        MPoly<Cyc> moved = permute_vars(std::span<const int>(g.img.data(), 6), MPoly<Cyc>(lift, Cyc::one()));
        std::vector<Cyc> col = detail::restricted_cubic_coeffs(moved, frame);
        for (size_t i = 0; i < frame.size(); ++i) op.at(i, j) = col[i];
    }
    return op;
}

/// Character of S6 on the span of a cubic space, one value per conjugacy
/// class. Traces are rational integers; a non-invariant subspace throws.
inline std::vector<Rat> cubic_space_character(const CubicSpace& space) {
    std::vector<Rat> chi;
    for (const ClassData& c : conjugacy_classes()) {
        Cyc tr = operator_trace_on_subspace(cubic_action_matrix(c.representative, space.frame),
                                            space.basis);
        chi.push_back(tr.to_rat());
    }
    return chi;
}

struct DecompositionReport {
    int dim_a = 0;
    int dim_b = 0;
    int dim_sum = 0;
    bool images_in_space = false;
    std::vector<Rat> chi;   // character of the cubic space, per class
    Rat mult_standard;      // <chi, chi_V>
    Rat mult_self;          // <chi, chi>
    Rat mult_trivial;       // <chi, 1>
};

/// Verifies C = a(V) + b(V) with both images 5-dimensional and independent,
/// then computes the character data of C. Throws decomposition_error when a
/// rank deviates (special t or an implementation fault).
inline DecompositionReport decompose_C(const CubicSpace& space) {
    if (space.dim() != 10)
        throw decomposition_error("decompose_C: expected a 10-dimensional cubic space, got " +
                                  std::to_string(space.dim()));

    // basis of V: e_i - e_{i+1}
    std::vector<std::vector<Cyc>> a_img, b_img, stacked;
    for (int i = 0; i < 5; ++i) {
        std::array<Cyc, 6> v{};
        v[static_cast<size_t>(i)] = Cyc::one();
        v[static_cast<size_t>(i + 1)] = -Cyc::one();
        a_img.push_back(map_a(v, space.frame));
        b_img.push_back(map_b(v, space.frame));
    }
    stacked = a_img;
    stacked.insert(stacked.end(), b_img.begin(), b_img.end());

    DecompositionReport rep;
    rep.dim_a = static_cast<int>(rank(Mat<Cyc>::from_rows(a_img)));
    rep.dim_b = static_cast<int>(rank(Mat<Cyc>::from_rows(b_img)));
    rep.dim_sum = static_cast<int>(rank(Mat<Cyc>::from_rows(stacked)));
    rep.images_in_space = true;
    for (const auto& v : stacked)
        if (!in_span(v, space.basis)) rep.images_in_space = false;

    if (rep.dim_a != 5 || rep.dim_b != 5 || rep.dim_sum != 10 || !rep.images_in_space)
        throw decomposition_error("decompose_C: a(V)/b(V) ranks deviate from 5, 5, 10");

    rep.chi = cubic_space_character(space);
    std::vector<Rat> chi_v = standard_character_values();
    rep.mult_standard = char_inner_product(rep.chi, chi_v);
    rep.mult_self = char_inner_product(rep.chi, rep.chi);
    rep.mult_trivial = char_inner_product(rep.chi, trivial_character_values());
    return rep;
}

/// Seeds of the extra singular orbits at the special parameters, as written
/// (unscaled; ProjPoint construction canonicalizes).
inline std::array<Cyc, 6> special_seed_raw(const Rat& t) {
    if (t == Rat(2)) return {Cyc(1), Cyc(-1), Cyc(0), Cyc(0), Cyc(0), Cyc(0)};
    if (t == Rat(6)) return {Cyc(-1), Cyc(-1), Cyc(-1), Cyc(1), Cyc(1), Cyc(1)};
    if (t == Rat(10, 7)) return {Cyc(-5), Cyc(1), Cyc(1), Cyc(1), Cyc(1), Cyc(1)};
    throw std::invalid_argument("special_seed: no extra orbit for t = " + t.to_string());
}

inline ProjPoint special_seed(const Rat& t) { return ProjPoint(special_seed_raw(t)); }

/// The S6-orbit N' of the special seed; every member is verified singular on
/// the member.
inline std::vector<ProjPoint> special_orbit(const PencilMember& member) {
    std::vector<ProjPoint> pts = orbit(special_seed(member.t));
    for (const ProjPoint& p : pts)
        if (!verify_node_singular(member, p))
            throw std::runtime_error("special_orbit: orbit point is not singular at t = " +
                                     member.t.to_string());
    return pts;
}

/// The parameter at which the pencil vanishes on a given coordinate vector:
/// t * sum(x^4) = (sum(x^2))^2, solved for t when sum(x^4) != 0.
struct SeedParameter {
    Cyc sum_sq;
    Cyc sum_quartic;
    std::optional<Rat> t;  // empty when sum(x^4) = 0 (every t works or none)
};

inline SeedParameter vanishing_parameter(const std::array<Cyc, 6>& coords) {
    SeedParameter sp{Cyc::zero(), Cyc::zero(), std::nullopt};
    for (const Cyc& c : coords) {
        sp.sum_sq += c * c;
        sp.sum_quartic += c * c * c * c;
    }
    if (!sp.sum_quartic.is_zero()) {
        Cyc t = sp.sum_sq * sp.sum_sq / sp.sum_quartic;
        sp.t = t.to_rat();
    }
    return sp;
}

/// def(X_t) computed directly: dim C - (35 - #nodes).
inline int defect_direct(const PencilMember&, const std::vector<ProjPoint>& nodes) {
    CubicSpace cs = cubic_space(nodes);
    return cs.dim() - (35 - static_cast<int>(nodes.size()));
}

struct JacobianDefect {
    int dim_r7 = 0;
    int dim_rsm7 = 0;
    int defect = 0;
};

/// def(X_t) via the Jacobian-ring formula: dim R_7 - dim R^sm_7, with the
/// Fermat quartic as the smooth reference.
inline JacobianDefect defect_jacobian_detail(const PencilMember& member) {
    JacobianDefect d;
    GroebnerBasis<Rat> gb = buchberger(jacobian_gens(member.G));
    d.dim_r7 = quotient_graded_dim(gb, 7);
    GroebnerBasis<Rat> sm = buchberger(jacobian_gens(fermat_quartic()));
    d.dim_rsm7 = quotient_graded_dim(sm, 7);
    d.defect = d.dim_r7 - d.dim_rsm7;
    return d;
}

inline int defect_jacobian(const PencilMember& member) {
    return defect_jacobian_detail(member).defect;
}

}  // namespace qc
