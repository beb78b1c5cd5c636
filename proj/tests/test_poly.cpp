#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "hecke/poly.hpp"

using hecke::Int;
using hecke::QPoly;
using hecke::SPoly;

namespace {

QPoly qp(std::vector<Int> c) { return QPoly(std::move(c)); }

QPoly random_poly(std::mt19937& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::vector<Int> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (Int& x : c) x = coeff(rng);
    return QPoly(std::move(c));
}

}  // namespace

TEST_CASE("zero polynomial behaves as additive identity") {
    QPoly zero;
    CHECK(zero.is_zero());
    CHECK(zero.degree() == -1);
    CHECK(zero.coeffs().empty());
    QPoly p = qp({1, -1, 1});
    CHECK(zero + p == p);
    CHECK(p + zero == p);
    CHECK(p - p == zero);
    CHECK(p * zero == zero);
    CHECK(QPoly(std::vector<Int>{0, 0, 0}) == zero);
}

TEST_CASE("products expand and normalize") {
    QPoly one_minus_q = qp({1, -1});
    QPoly one_plus_q = qp({1, 1});
    CHECK(one_minus_q * one_plus_q == qp({1, 0, -1}));
    CHECK(one_minus_q * one_minus_q == qp({1, -2, 1}));
    CHECK((one_minus_q * one_plus_q).degree() == 2);
    CHECK(-one_minus_q == qp({-1, 1}));
    CHECK(QPoly::monomial(1, 3) == qp({0, 0, 0, 1}));
    CHECK(QPoly::monomial(0, 5).is_zero());
}

TEST_CASE("exact division recovers known quotients") {
    CHECK(hecke::exact_divide(qp({1, 0, -1}), qp({1, 1})) == qp({1, -1}));
    CHECK(hecke::exact_divide(qp({5, 6, -3, -4}), qp({1, 2, 1})) == qp({5, -4}));
    CHECK(hecke::exact_divide(QPoly(), qp({1, 1})).is_zero());
    CHECK(hecke::exact_divide(qp({0, -4}), QPoly(4)) == qp({0, -1}));
}

TEST_CASE("exact division rejects non-multiples") {
    CHECK_THROWS_AS(hecke::exact_divide(qp({1, -1}), qp({1, 1})), hecke::NotDivisible);
    CHECK_THROWS_AS(hecke::exact_divide(qp({1}), QPoly()), hecke::NotDivisible);
    CHECK_THROWS_AS(hecke::exact_divide(qp({0, 1}), QPoly(2)), hecke::NotDivisible);
    CHECK_THROWS_AS(hecke::exact_divide(qp({1, 0, 1}), qp({0, 1})), hecke::NotDivisible);
}

TEST_CASE("exact division inverts multiplication") {
    std::mt19937 rng(20260816);
    int checked = 0;
    for (int iter = 0; iter < 300; ++iter) {
        QPoly a = random_poly(rng, 6);
        QPoly b = random_poly(rng, 4);
        if (b.is_zero()) continue;
        CHECK(hecke::exact_divide(a * b, b) == a);
        ++checked;
    }
    CHECK(checked > 250);
}

TEST_CASE("alternating q-integers") {
    CHECK(hecke::neg_q_integer(0).is_zero());
    CHECK(hecke::neg_q_integer(1) == qp({1}));
    CHECK(hecke::neg_q_integer(2) == qp({1, -1}));
    CHECK(hecke::neg_q_integer(3) == qp({1, -1, 1}));
    CHECK_THROWS_AS(hecke::neg_q_integer(-1), hecke::IndexOutOfRange);

    // (1 + q) [k]_{-q} telescopes to 1 - (-q)^k.
    QPoly one_plus_q = qp({1, 1});
    for (int k = 0; k <= 50; ++k) {
        CHECK(hecke::neg_q_integer(k) * one_plus_q == QPoly(1) - hecke::neg_q_power(k));
    }
}

TEST_CASE("evaluation at one sums coefficients") {
    CHECK(qp({1, -1, 1}).eval_at_one() == 1);
    CHECK(QPoly().eval_at_one() == 0);

    QPoly p = QPoly(1);
    QPoly one_plus_q = qp({1, 1});
    for (int i = 0; i < 80; ++i) p *= one_plus_q;
    CHECK(p.eval_at_one() == Int(1) << 80);
    CHECK(p.coeff(0) == 1);
    CHECK(p.degree() == 80);
}

TEST_CASE("lifting q to s squares powers") {
    QPoly q = QPoly::variable();
    CHECK(hecke::lift_to_s(q) == SPoly::monomial(1, 2));
    CHECK(hecke::lift_to_s(qp({1, -1})) == SPoly(std::vector<Int>{1, 0, -1}));
    CHECK(hecke::lift_to_s(QPoly()).is_zero());
}

TEST_CASE("lowering s to q halves even powers and rejects odd ones") {
    CHECK(hecke::lower_from_s(SPoly::monomial(1, 2)) == QPoly::variable());
    CHECK(hecke::lower_from_s(SPoly(std::vector<Int>{2, 0, 0, 0, 3})) == qp({2, 0, 3}));
    CHECK_THROWS_AS(hecke::lower_from_s(SPoly::variable()), hecke::OddPowerPresent);
    CHECK_THROWS_AS(hecke::lower_from_s(SPoly(std::vector<Int>{1, 1})), hecke::OddPowerPresent);

    std::mt19937 rng(7);
    for (int iter = 0; iter < 200; ++iter) {
        QPoly p = random_poly(rng, 8);
        CHECK(hecke::lower_from_s(hecke::lift_to_s(p)) == p);
    }
}

TEST_CASE("rendering ascending powers with explicit signs") {
    CHECK(QPoly().str() == "0");
    CHECK(qp({1, -1, 1}).str() == "1 - q + q^2");
    CHECK(qp({2, -2}).str() == "2 - 2q");
    CHECK(qp({0, -1}).str() == "-q");
    CHECK(qp({0, 0, 3}).str() == "3q^2");
    CHECK(qp({-1, 0, 1}).str() == "-1 + q^2");
    CHECK(qp({1, -1, 1}).latex() == "1 - q + q^{2}");
    CHECK(qp({0, 0, -12}).latex() == "-12q^{2}");
    CHECK(SPoly(std::vector<Int>{0, 1}).str() == "s");
}
