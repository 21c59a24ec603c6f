#include "qc/linalg.hpp"
#include "qc/pencil.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace qc;

namespace {

std::mt19937_64 rng(424242);

Rat random_rat() {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 4);
    return Rat(num(rng), den(rng));
}

Mat<Rat> random_mat(size_t r, size_t c) {
    Mat<Rat> m(r, c);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < c; ++j) m.at(i, j) = random_rat();
    return m;
}

}  // namespace

TEST_CASE("rank basics") {
    CHECK(rank(Mat<Rat>::identity(5)) == 5);
    CHECK(rank(Mat<Rat>(4, 7)) == 0);
    Mat<Rat> m(2, 2);
    m.at(0, 0) = Rat(1);
    m.at(0, 1) = Rat(2);
    m.at(1, 0) = Rat(2);
    m.at(1, 1) = Rat(4);
    CHECK(rank(m) == 1);
}

TEST_CASE("node evaluation matrix has rank 25 and a 10-dimensional kernel") {
    Mat<Cyc> m = node_evaluation_matrix(node_orbit(), graded_monomials(5, 3));
    CHECK(m.rows() == 30);
    CHECK(m.cols() == 35);
    CHECK(rank(m) == 25);
    auto kb = kernel_basis(m);
    CHECK(kb.size() == 10);
    for (const auto& v : kb) {
        std::vector<Cyc> img = m.apply(v);
        for (const Cyc& x : img) CHECK(x.is_zero());
    }
}

TEST_CASE("kernel basics") {
    CHECK(kernel_basis(Mat<Rat>::identity(4)).empty());

    Mat<Rat> row(1, 2);
    row.at(0, 0) = Rat(1);
    row.at(0, 1) = Rat(1);
    auto kb = kernel_basis(row);
    REQUIRE(kb.size() == 1);
    CHECK(kb[0] == std::vector<Rat>{Rat(1), Rat(-1)});
}

TEST_CASE("rank-nullity holds on random matrices") {
    for (int i = 0; i < 60; ++i) {
        size_t r = std::uniform_int_distribution<size_t>(1, 8)(rng);
        size_t c = std::uniform_int_distribution<size_t>(1, 8)(rng);
        Mat<Rat> m = random_mat(r, c);
        auto kb = kernel_basis(m);
        CHECK(rank(m) + kb.size() == c);
        for (const auto& v : kb)
            for (const Rat& x : m.apply(v)) CHECK(x.is_zero());
    }
}

TEST_CASE("rank is invariant under row permutation and scaling") {
    for (int i = 0; i < 40; ++i) {
        Mat<Rat> m = random_mat(5, 6);
        size_t base = rank(m);
        Mat<Rat> shuffled = m;
        std::vector<size_t> order{0, 1, 2, 3, 4};
        std::shuffle(order.begin(), order.end(), rng);
        for (size_t r = 0; r < 5; ++r) {
            Rat scale = random_rat();
            if (scale.is_zero()) scale = Rat(3);
            for (size_t c = 0; c < 6; ++c) shuffled.at(r, c) = scale * m.at(order[r], c);
        }
        CHECK(rank(shuffled) == base);
    }
}

TEST_CASE("span membership") {
    std::vector<Rat> v{Rat(1), Rat(2), Rat(3)};
    std::vector<std::vector<Rat>> single{v};
    std::vector<std::vector<Rat>> empty;
    CHECK(in_span(v, single));
    CHECK(in_span(std::vector<Rat>{Rat(0), Rat(0), Rat(0)}, empty));
    CHECK(!in_span(v, empty));
    CHECK(in_span(std::vector<Rat>{Rat(2), Rat(4), Rat(6)}, single));
    CHECK(!in_span(std::vector<Rat>{Rat(1), Rat(2), Rat(4)}, single));

    // a(e0 - e1) lies in the cubic space through the nodes
    CubicSpace cs = cubic_space(node_orbit());
    std::array<Cyc, 6> e01{Cyc(1), Cyc(-1), Cyc(0), Cyc(0), Cyc(0), Cyc(0)};
    CHECK(in_span(map_a(e01, cs.frame), cs.basis));

    // a perturbed vector falls outside
    std::vector<Cyc> off = map_a(e01, cs.frame);
    off[7] += Cyc(1);
    CHECK(!in_span(off, cs.basis));
}

TEST_CASE("solve returns an exact witness or reports inconsistency") {
    for (int i = 0; i < 40; ++i) {
        Mat<Rat> m = random_mat(5, 4);
        std::vector<Rat> x0(4);
        for (auto& x : x0) x = random_rat();
        std::vector<Rat> b = m.apply(x0);
        auto sol = solve(m, b);
        REQUIRE(sol.has_value());
        CHECK(m.apply(*sol) == b);
    }
    Mat<Rat> m(2, 1);
    m.at(0, 0) = Rat(1);
    m.at(1, 0) = Rat(1);
    CHECK(!solve(m, {Rat(1), Rat(2)}).has_value());
}

TEST_CASE("operator trace on a subspace") {
    // identity on any 10-dimensional basis gives 10
    CubicSpace cs = cubic_space(node_orbit());
    Mat<Cyc> id = Mat<Cyc>::identity(35);
    CHECK(operator_trace_on_subspace(id, cs.basis) == Cyc(10));

    // transposition acts with trace 6 = 2 * chi_V, a 6-cycle with trace -2
    Mat<Cyc> op_t = cubic_action_matrix(Perm::transposition(0, 1), cs.frame);
    CHECK(operator_trace_on_subspace(op_t, cs.basis) == Cyc(6));

    Perm six;
    six.img = {1, 2, 3, 4, 5, 0};
    Mat<Cyc> op_6 = cubic_action_matrix(six, cs.frame);
    CHECK(operator_trace_on_subspace(op_6, cs.basis) == Cyc(-2));

    // an operator that moves the subspace off itself is rejected
    Mat<Cyc> shift(35, 35);
    for (size_t i = 0; i < 35; ++i) shift.at(i, (i + 1) % 35) = Cyc(1);
    CHECK_THROWS_AS(operator_trace_on_subspace(shift, cs.basis), subspace_stability_error);
}

TEST_CASE("determinants") {
    CHECK(determinant(Mat<Rat>::identity(4)) == Rat(1));
    Mat<Rat> m(2, 2);
    m.at(0, 0) = Rat(1);
    m.at(0, 1) = Rat(2);
    m.at(1, 0) = Rat(3);
    m.at(1, 1) = Rat(4);
    CHECK(determinant(m) == Rat(-2));
    Mat<Rat> sing(2, 2);
    sing.at(0, 0) = Rat(1);
    sing.at(1, 0) = Rat(2);
    CHECK(determinant(sing) == Rat(0));

    // multiplicativity on random 4x4 pairs
    for (int i = 0; i < 20; ++i) {
        Mat<Rat> a = random_mat(4, 4), b = random_mat(4, 4);
        Mat<Rat> ab(4, 4);
        for (size_t r = 0; r < 4; ++r)
            for (size_t c = 0; c < 4; ++c)
                for (size_t k = 0; k < 4; ++k) ab.at(r, c) += a.at(r, k) * b.at(k, c);
        CHECK(determinant(ab) == determinant(a) * determinant(b));
    }
}
