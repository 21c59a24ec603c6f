#include "qc/pencil.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace qc;

namespace {

std::mt19937_64 rng(314159);

Perm random_perm() {
    Perm g;
    std::shuffle(g.img.begin(), g.img.end(), rng);
    return g;
}

std::array<Cyc, 6> standard_vector(int i, int j) {
    std::array<Cyc, 6> v{};
    v[static_cast<size_t>(i)] = Cyc(1);
    v[static_cast<size_t>(j)] = Cyc(-1);
    return v;
}

std::array<Cyc, 6> act_on_vector(const Perm& g, const std::array<Cyc, 6>& v) {
    std::array<Cyc, 6> out{};
    for (int i = 0; i < 6; ++i) out[static_cast<size_t>(g(i))] = v[static_cast<size_t>(i)];
    return out;
}

ProjPoint random_hyperplane_point() {
    std::uniform_int_distribution<int> num(-7, 7);
    std::uniform_int_distribution<int> den(1, 4);
    std::array<Cyc, 6> c{};
    Cyc s;
    for (int i = 0; i < 5; ++i) {
        c[static_cast<size_t>(i)] = Cyc(Rat(num(rng), den(rng)), Rat(num(rng), den(rng)));
        s += c[static_cast<size_t>(i)];
    }
    c[5] = -s;
    bool all_zero = true;
    for (const auto& x : c) all_zero = all_zero && x.is_zero();
    return all_zero ? random_hyperplane_point() : ProjPoint(c);
}

}  // namespace

TEST_CASE("every node is singular on every member") {
    for (Rat t : {Rat(1), Rat(3), Rat(2), Rat(10, 7), Rat(-11, 5)}) {
        PencilMember m(t);
        for (const ProjPoint& p : node_orbit()) CHECK(verify_node_singular(m, p));
    }
}

TEST_CASE("the t=2 extra point is singular only at t=2") {
    ProjPoint p = special_seed(Rat(2));
    CHECK(!verify_node_singular(PencilMember(Rat(1)), p));
    CHECK(verify_node_singular(PencilMember(Rat(2)), p));
    ProjPoint off({Cyc(1), Cyc(1), Cyc(1), Cyc(1), Cyc(1), Cyc(1)});
    CHECK_THROWS_AS(verify_node_singular(PencilMember(Rat(1)), off), std::invalid_argument);
}

TEST_CASE("nodes are ordinary double points") {
    for (Rat t : {Rat(1), Rat(3)}) {
        PencilMember m(t);
        for (const ProjPoint& p : node_orbit()) {
            CHECK(verify_odp(m, p));
            CHECK(!odp_hessian_det(m, p).is_zero());
        }
    }
    // a smooth point fails the precondition, not the Hessian test
    PencilMember m(Rat(1));
    ProjPoint smooth = random_hyperplane_point();
    while (verify_node_singular(m, smooth)) smooth = random_hyperplane_point();
    CHECK_THROWS_AS(verify_odp(m, smooth), std::invalid_argument);
}

TEST_CASE("singular scheme degree is exactly 30 at generic parameters") {
    CHECK(singular_count_certificate(PencilMember(Rat(1))) == 30);
    CHECK(singular_count_certificate(PencilMember(Rat(7, 3))) == 30);
}

TEST_CASE("special parameters report an excess singular scheme") {
    try {
        singular_count_certificate(PencilMember(Rat(2)));
        FAIL("expected singular_count_mismatch");
    } catch (const singular_count_mismatch& e) {
        CHECK(e.stable_value == 45);  // 30 nodes + 15 extra
        CHECK(e.stable_value > 30);
    }
    CHECK(singular_scheme_degree(PencilMember(Rat(6))) == 40);
    CHECK(singular_scheme_degree(PencilMember(Rat(10, 7))) == 36);
}

TEST_CASE("cubic space through the nodes has dimension 10") {
    CubicSpace cs = cubic_space(node_orbit());
    CHECK(cs.dim() == 10);
    CHECK(cs.frame.size() == 35);
    // every basis cubic vanishes at every node
    Mat<Cyc> ev = node_evaluation_matrix(node_orbit(), cs.frame);
    for (const auto& v : cs.basis)
        for (const Cyc& x : ev.apply(v)) CHECK(x.is_zero());
}

TEST_CASE("cubic space edge cases") {
    std::vector<ProjPoint> one{node_seed()};
    CHECK(cubic_space(one).dim() == 34);
    CHECK_THROWS_AS(cubic_space({}), std::invalid_argument);
}

TEST_CASE("cubics through nodes plus extra orbit form a 5-dimensional space") {
    for (Rat t : {Rat(2), Rat(6), Rat(10, 7)}) {
        PencilMember m(t);
        std::vector<ProjPoint> pts = node_orbit();
        std::vector<ProjPoint> extra = special_orbit(m);
        pts.insert(pts.end(), extra.begin(), extra.end());
        CubicSpace cs = cubic_space(pts);
        CHECK(cs.dim() == 5);
        std::vector<Rat> chi = cubic_space_character(cs);
        CHECK(char_inner_product(chi, standard_character_values()) == Rat(1));
        CHECK(char_inner_product(chi, chi) == Rat(1));  // irreducible, a copy of V
    }
}

TEST_CASE("special orbits are singular and sized as enumerated") {
    CHECK(special_orbit(PencilMember(Rat(2))).size() == 15);
    CHECK(special_orbit(PencilMember(Rat(6))).size() == 10);
    CHECK(special_orbit(PencilMember(Rat(10, 7))).size() == 6);
    CHECK_THROWS_AS(special_seed(Rat(4)), std::invalid_argument);
    CHECK_THROWS_AS(special_orbit(PencilMember(Rat(1))), std::invalid_argument);
}

TEST_CASE("x1^3 - x0^3 separates the extra orbits from the cubic space") {
    // evaluated at the t=2 seed (1,-1,0,0,0,0) it gives -2, so the space of
    // cubics through N union N' is strictly smaller than C
    MPoly<Cyc> sep = parse_poly<Cyc>("x1^3 - x0^3", 6);
    std::array<Cyc, 6> seed2 = special_seed_raw(Rat(2));
    std::vector<Cyc> pt(seed2.begin(), seed2.end());
    CHECK(evaluate(sep, std::span<const Cyc>(pt)) == Cyc(-2));

    // it does not vanish identically on any of the three extra orbits
    for (Rat t : {Rat(2), Rat(6), Rat(10, 7)}) {
        bool nonvanishing = false;
        for (const ProjPoint& p : special_orbit(PencilMember(t))) {
            std::vector<Cyc> c(p.coords().begin(), p.coords().end());
            if (!evaluate(sep, std::span<const Cyc>(c)).is_zero()) nonvanishing = true;
        }
        CHECK(nonvanishing);
    }
}

TEST_CASE("the 10/7 seed pins down the right special parameter") {
    SeedParameter sp = vanishing_parameter(special_seed_raw(Rat(10, 7)));
    CHECK(sp.sum_sq == Cyc(30));
    CHECK(sp.sum_quartic == Cyc(630));
    REQUIRE(sp.t.has_value());
    CHECK(*sp.t == Rat(10, 7));  // 630 t = 900, so t = 10/7 (not 10/17)
    CHECK(*sp.t != Rat(10, 17));

    CHECK(*vanishing_parameter(special_seed_raw(Rat(2))).t == Rat(2));
    CHECK(*vanishing_parameter(special_seed_raw(Rat(6))).t == Rat(6));
    // node coordinates satisfy both sums = 0: every t vanishes there
    SeedParameter node_sp = vanishing_parameter(node_seed().coords());
    CHECK(node_sp.sum_sq.is_zero());
    CHECK(node_sp.sum_quartic.is_zero());
    CHECK(!node_sp.t.has_value());
}

TEST_CASE("map_a and map_b land inside the cubic space") {
    CubicSpace cs = cubic_space(node_orbit());
    for (int i = 0; i < 5; ++i) {
        std::array<Cyc, 6> v = standard_vector(i, i + 1);
        CHECK(in_span(map_a(v, cs.frame), cs.basis));
        CHECK(in_span(map_b(v, cs.frame), cs.basis));
    }
    std::array<Cyc, 6> bad{Cyc(1), Cyc(0), Cyc(0), Cyc(0), Cyc(0), Cyc(0)};
    CHECK_THROWS_AS(map_a(bad, cs.frame), std::invalid_argument);
    CHECK_THROWS_AS(map_b(bad, cs.frame), std::invalid_argument);
}

TEST_CASE("map_a definition: e0 - e1 goes to the restriction of x0^3 - x1^3") {
    CubicSpace cs = cubic_space(node_orbit());
    std::array<Cyc, 6> v = standard_vector(0, 1);
    MPoly<Cyc> expected6 = parse_poly<Cyc>("x0^3 - x1^3", 6);
    std::vector<Cyc> expected = coeff_vector(restrict_to_hyperplane(expected6), cs.frame);
    CHECK(map_a(v, cs.frame) == expected);
}

TEST_CASE("map_b is injective on V") {
    CubicSpace cs = cubic_space(node_orbit());
    std::vector<std::vector<Cyc>> rows;
    for (int i = 0; i < 5; ++i) rows.push_back(map_b(standard_vector(i, i + 1), cs.frame));
    CHECK(rank(Mat<Cyc>::from_rows(rows)) == 5);
}

TEST_CASE("map_a and map_b are equivariant") {
    CubicSpace cs = cubic_space(node_orbit());
    for (int trial = 0; trial < 12; ++trial) {
        Perm g = random_perm();
        std::array<Cyc, 6> v = standard_vector(std::uniform_int_distribution<int>(0, 4)(rng), 5);
        Mat<Cyc> op = cubic_action_matrix(g, cs.frame);
        CHECK(op.apply(map_a(v, cs.frame)) == map_a(act_on_vector(g, v), cs.frame));
        CHECK(op.apply(map_b(v, cs.frame)) == map_b(act_on_vector(g, v), cs.frame));
    }
}

TEST_CASE("decomposition of the cubic space") {
    CubicSpace cs = cubic_space(node_orbit());
    DecompositionReport rep = decompose_C(cs);
    CHECK(rep.dim_a == 5);
    CHECK(rep.dim_b == 5);
    CHECK(rep.dim_sum == 10);
    CHECK(rep.images_in_space);
    CHECK(rep.mult_standard == Rat(2));  // C = V + V
    CHECK(rep.mult_self == Rat(4));
    CHECK(rep.mult_trivial == Rat(0));
    CHECK(rep.chi[0] == Rat(10));  // identity trace = dim

    // a special-parameter space fails the generic precondition
    PencilMember m2(Rat(2));
    std::vector<ProjPoint> pts = node_orbit();
    std::vector<ProjPoint> extra = special_orbit(m2);
    pts.insert(pts.end(), extra.begin(), extra.end());
    CHECK_THROWS_AS(decompose_C(cubic_space(pts)), decomposition_error);
}

TEST_CASE("defect computed two independent ways") {
    PencilMember m1(Rat(1));
    CHECK(defect_direct(m1, node_orbit()) == 5);
    JacobianDefect jd = defect_jacobian_detail(m1);
    CHECK(jd.dim_r7 == 35);
    CHECK(jd.dim_rsm7 == 30);
    CHECK(jd.defect == 5);
    CHECK(defect_jacobian(PencilMember(Rat(5))) == 5);
    CHECK(defect_direct(PencilMember(Rat(3)), node_orbit()) == 5);
}

TEST_CASE("thirty random points in general position have defect zero") {
    std::vector<ProjPoint> pts;
    while (pts.size() < 30) pts.push_back(random_hyperplane_point());
    CubicSpace cs = cubic_space(pts);
    CHECK(cs.dim() == 5);  // 35 - 30 independent conditions
    CHECK(defect_direct(PencilMember(Rat(1)), pts) == 0);
}
