#include "qc/cyclotomic.hpp"
#include "qc/field.hpp"
#include "qc/rational.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <random>

using qc::Cyc;
using qc::Rat;

static_assert(qc::Field<Rat>);
static_assert(qc::Field<Cyc>);

namespace {

std::mt19937_64 rng(20240611);

Rat random_rat() {
    std::uniform_int_distribution<int> num(-20, 20);
    std::uniform_int_distribution<int> den(1, 20);
    return Rat(num(rng), den(rng));
}

Cyc random_cyc() { return Cyc(random_rat(), random_rat()); }

std::complex<double> to_complex(const Cyc& x) {
    const std::complex<double> rho(-0.5, std::sqrt(3.0) / 2.0);
    return x.a().to_double() + x.b().to_double() * rho;
}

}  // namespace

TEST_CASE("rationals are always reduced and canonical") {
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(-2, -4) == Rat(1, 2));
    CHECK(Rat(2, -4) == Rat(-1, 2));
    CHECK(Rat(0, 7) == Rat(0));
    CHECK(Rat(6, 3).numerator() == 2);
    CHECK(Rat(6, 3).denominator() == 1);
    CHECK(Rat(-9, 6).denominator() == 2);
    CHECK_THROWS_AS(Rat(qc::BigInt(1), qc::BigInt(0)), std::domain_error);
    CHECK_THROWS_AS(Rat(0).inverse(), std::domain_error);
}

TEST_CASE("rational rendering and parsing") {
    CHECK(Rat(3, 2).to_string() == "3/2");
    CHECK(Rat(-7).to_string() == "-7");
    CHECK(Rat(0).to_string() == "0");
    CHECK(Rat::parse("10/7") == Rat(10, 7));
    CHECK(Rat::parse("-4/6") == Rat(-2, 3));
    CHECK(Rat::parse(" 5 ") == Rat(5));
    CHECK(Rat::parse("0/1") == Rat(0));
    CHECK_THROWS_AS(Rat::parse("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse(""), std::invalid_argument);
    for (int i = 0; i < 200; ++i) {
        Rat x = random_rat();
        CHECK(Rat::parse(x.to_string()) == x);
    }
}

TEST_CASE("cyclotomic defining relations") {
    Cyc w = Cyc::omega();
    CHECK(w * w == Cyc(Rat(-1), Rat(-1)));              // w^2 = -1 - w
    CHECK(w * (w * w) == Cyc::one());                    // w^3 = 1
    CHECK(Cyc::one() + w + w * w == Cyc::zero());        // 1 + w + w^2 = 0
}

TEST_CASE("cyclotomic multiplication examples") {
    Cyc w = Cyc::omega();
    Cyc one_plus_w = Cyc::one() + w;
    // (1 + w)^2 = 1 + 2w + w^2 = w
    CHECK(one_plus_w * one_plus_w == w);

    // independent floating check of the same product
    auto lhs = to_complex(one_plus_w) * to_complex(one_plus_w);
    auto rhs = to_complex(w);
    CHECK(std::abs(lhs - rhs) < 1e-12);

    for (int i = 0; i < 100; ++i) {
        Cyc x = random_cyc(), y = random_cyc();
        CHECK(std::abs(to_complex(x * y) - to_complex(x) * to_complex(y)) < 1e-9);
    }
}

TEST_CASE("cyclotomic inverses") {
    Cyc w = Cyc::omega();
    CHECK(w.inverse() == w * w);
    CHECK(w.inverse() == Cyc(Rat(-1), Rat(-1)));
    CHECK(Cyc(2).inverse() == Cyc(Rat(1, 2)));
    Cyc one_plus_w = Cyc::one() + w;
    CHECK(one_plus_w.inverse() == -w);
    CHECK(one_plus_w * one_plus_w.inverse() == Cyc::one());
    CHECK_THROWS_AS(Cyc::zero().inverse(), std::domain_error);
}

TEST_CASE("field axioms on random triples") {
    auto run = [](auto gen) {
        using F = decltype(gen());
        for (int i = 0; i < 1000; ++i) {
            F x = gen(), y = gen(), z = gen();
            CHECK((x + y) + z == x + (y + z));
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * (y + z) == x * y + x * z);
            CHECK(x + y == y + x);
            CHECK(x * y == y * x);
            CHECK(x + F::zero() == x);
            CHECK(x * F::one() == x);
            CHECK(x + (-x) == F::zero());
            if (!x.is_zero()) CHECK(x * x.inverse() == F::one());
        }
    };
    run(random_rat);
    run(random_cyc);
}

TEST_CASE("norm is multiplicative and detects zero") {
    for (int i = 0; i < 300; ++i) {
        Cyc x = random_cyc(), y = random_cyc();
        CHECK((x * y).norm() == x.norm() * y.norm());
        CHECK(x.norm().is_zero() == x.is_zero());
    }
}

TEST_CASE("rational embedding into Q(w) is a field homomorphism") {
    for (int i = 0; i < 300; ++i) {
        Rat x = random_rat(), y = random_rat();
        CHECK(qc::to_cyc(x + y) == qc::to_cyc(x) + qc::to_cyc(y));
        CHECK(qc::to_cyc(x * y) == qc::to_cyc(x) * qc::to_cyc(y));
        if (!x.is_zero()) CHECK(qc::to_cyc(x.inverse()) == qc::to_cyc(x).inverse());
    }
    CHECK(qc::to_cyc(Rat(1)) == Cyc::one());
}

TEST_CASE("cyclotomic rendering and parsing") {
    Cyc w = Cyc::omega();
    CHECK((Cyc(1) + w).to_string() == "1 + w");
    CHECK((Cyc(1) - w).to_string() == "1 - w");
    CHECK(w.to_string() == "w");
    CHECK((-w).to_string() == "-w");
    CHECK(Cyc(Rat(0), Rat(3, 2)).to_string() == "3/2*w");
    CHECK(Cyc(Rat(-2)).to_string() == "-2");
    CHECK(Cyc::parse("1 + w") == Cyc(1) + w);
    CHECK(Cyc::parse("-1 - 2*w") == Cyc(Rat(-1), Rat(-2)));
    CHECK(Cyc::parse("3/2*w") == Cyc(Rat(0), Rat(3, 2)));
    CHECK(Cyc::parse("7") == Cyc(7));
    CHECK_THROWS_AS(Cyc::parse("q"), std::invalid_argument);
    for (int i = 0; i < 200; ++i) {
        Cyc x = random_cyc();
        CHECK(Cyc::parse(x.to_string()) == x);
    }
}

TEST_CASE("galois conjugation") {
    Cyc w = Cyc::omega();
    CHECK(w.conj() == w * w);
    for (int i = 0; i < 100; ++i) {
        Cyc x = random_cyc(), y = random_cyc();
        CHECK((x * y).conj() == x.conj() * y.conj());
        CHECK((x + y).conj() == x.conj() + y.conj());
        CHECK(x.conj().conj() == x);
        CHECK((x * x.conj()).b().is_zero());
    }
}
