#include "support.hpp"

#include <borel/errors.hpp>

#include <doctest.h>

using namespace borel;
using borel::test::ideal;
using borel::test::str;

TEST_SUITE("monomial") {
  TEST_CASE("basic accessors") {
    const Monomial m{2, 0, 1};
    CHECK(m.size() == 3);
    CHECK(m.degree() == 3);
    CHECK(m.nu() == 3);
    CHECK(m.support() == std::vector<VarIndex>{1, 3});
    CHECK_FALSE(m.is_squarefree());
    CHECK(Monomial::one(3).is_one());
    CHECK(Monomial::one(3).nu() == 0);
    CHECK(Monomial::variable(3, 2) == Monomial{0, 1, 0});
  }

  TEST_CASE("divisibility, lcm, gcd") {
    const Monomial a{2, 1, 0}, b{1, 2, 1};
    CHECK(lcm(a, b) == Monomial{2, 2, 1});
    CHECK(gcd(a, b) == Monomial{1, 1, 0});
    CHECK(Monomial({1, 1, 0}).divides(a));
    CHECK_FALSE(a.divides(b));
    CHECK(a / Monomial{1, 0, 0} == Monomial{1, 1, 0});
    CHECK_THROWS_AS(a / b, Error);
  }

  TEST_CASE("shifts") {
    const Monomial m{0, 1, 1};
    CHECK(m.shift(3, 1) == Monomial{1, 1, 0});
    CHECK(m.times_variable(1) == Monomial{1, 1, 1});
    CHECK(m.divide_variable(2) == Monomial{0, 0, 1});
    CHECK(m.extended(5) == Monomial{0, 1, 1, 0, 0});
  }

  TEST_CASE("canonical order is degree then lex") {
    CHECK(canonical_less(Monomial{0, 1}, Monomial{2, 0}));
    CHECK(canonical_less(Monomial{2, 0}, Monomial{1, 1}));
    CHECK(canonical_less(Monomial{1, 1}, Monomial{0, 2}));
  }
}

TEST_SUITE("ideal") {
  TEST_CASE("minimalize") {
    CHECK(str(minimalize(std::vector<Monomial>{{1, 0}, {2, 0}}, 2)) == "x1");
    CHECK(minimalize(std::vector<Monomial>{}, 2).is_zero());
    CHECK(str(minimalize(std::vector<Monomial>{{1, 1}, {0, 2}, {1, 2}}, 2)) == "x1*x2, x2^2");
    CHECK_THROWS_AS(MonomialIdeal(2, {Monomial{1, 0, 0}}), DimensionMismatch);
  }

  TEST_CASE("minimalize is idempotent and yields an antichain") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
      const auto I = test::random_monomial_ideal(rng, 3, 4, 6);
      CHECK(minimalize(I.generators(), 3) == I);
      for (const auto& g : I.generators())
        for (const auto& h : I.generators()) CHECK((g == h || !g.divides(h)));
    }
  }

  TEST_CASE("contains") {
    CHECK(contains(ideal("x1^2, x1*x2", 3), Monomial{2, 0, 1}));
    CHECK_FALSE(contains(ideal("x1", 2), Monomial{0, 1}));
    CHECK_FALSE(contains(MonomialIdeal::zero(2), Monomial::one(2)));
    CHECK(contains(MonomialIdeal::unit(2), Monomial::one(2)));
  }

  TEST_CASE("strong stability") {
    CHECK(is_strongly_stable(ideal(test::quadric_ideal())));
    CHECK(is_strongly_stable(ideal("x1")));
    CHECK_FALSE(is_strongly_stable(ideal("x1^3, x1^2*x2, x1*x2^2, x2^3, x1*x3")));
  }

  TEST_CASE("Borel closure") {
    CHECK(str(borel_closure(std::vector<Monomial>{{1}}, 1)) == "x1");
    CHECK(str(borel_closure(std::vector<Monomial>{{0, 1}}, 2)) == "x1, x2");
    CHECK(str(borel_closure(std::vector<Monomial>{{1, 0, 1}}, 3)) == "x1^2, x1*x2, x1*x3");
  }

  TEST_CASE("strongly stable iff closed under Borel closure") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 80; ++trial) {
      const auto I = test::random_monomial_ideal(rng, 3, 3, 4);
      CHECK(is_strongly_stable(I) == (borel_closure(I.generators(), 3) == I));
      CHECK(is_strongly_stable(borel_closure(I.generators(), 3)));
    }
  }

  TEST_CASE("colon by a variable") {
    CHECK(str(colon_variable(ideal("x1^2, x1*x2"), 2)) == "x1");
    CHECK(str(colon_variable(ideal("x1", 2), 2)) == "x1");
    CHECK(str(colon_variable(ideal(test::mixed_ideal()), 3)) == "x1, x2^2, x2*x3");
    CHECK(str(colon_monomial(ideal("x1^2, x1*x2"), Monomial{1, 0})) == "x1, x2");
  }

  TEST_CASE("colon membership: m in I:x_l iff m*x_l in I") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
      const auto I = test::random_monomial_ideal(rng, 3, 3, 4);
      for (VarIndex l = 1; l <= 3; ++l) {
        const auto J = colon_variable(I, l);
        for (const auto& m : test::monomials_up_to(3, 4))
          CHECK(contains(J, m) == contains(I, m.times_variable(l)));
      }
    }
  }

  TEST_CASE("saturation") {
    CHECK(str(saturate_variable(ideal(test::quartic_ideal()), 3)) == "x1^2, x1*x2");
    CHECK(str(saturate_variable(ideal("x1^2, x1*x2"), 2)) == "x1");
    CHECK(str(saturate_variable(ideal("x1", 2), 2)) == "x1");
  }

  TEST_CASE("restriction away from the last variable") {
    CHECK(str(restrict_away_last(ideal(test::quadric_ideal()))) == "x1^2, x1*x2, x2^2");
    CHECK(restrict_away_last(ideal("x3")).is_zero());
    CHECK(restrict_away_last(ideal("x1")).is_zero());
    CHECK(str(restrict_away_last(ideal("x1", 2))) == "x1");
  }

  TEST_CASE("height, projective dimension, Cohen-Macaulay") {
    const auto I = ideal(test::quadric_ideal());
    CHECK(height(I) == 2);
    CHECK(proj_dim_quotient(I) == 3);
    CHECK_FALSE(is_cohen_macaulay(I));
    const auto J = ideal("x1^2, x1*x2, x2^2");
    CHECK(height(J) == 2);
    CHECK(proj_dim_quotient(J) == 2);
    CHECK(is_cohen_macaulay(J));
    CHECK(height(ideal("x1^4")) == 1);
    CHECK(is_cohen_macaulay(ideal("x1^4")));
    CHECK_THROWS_AS(height(ideal("x2")), NotStronglyStable);
    CHECK_THROWS_AS(height(MonomialIdeal::unit(2)), DegenerateIdeal);
  }

  TEST_CASE("Hilbert series examples") {
    CHECK(to_string(hilbert_series_quotient(ideal("x1"))) == "1");
    CHECK(to_string(hilbert_series_quotient(MonomialIdeal::zero(1))) == "1 / (1-λ)");
    CHECK(to_string(hilbert_series_quotient(ideal(test::quadric_ideal()))) ==
          "(1 + 2λ - 2λ^2) / (1-λ)");
    CHECK(hilbert_series_quotient(MonomialIdeal::unit(3)).is_zero());
  }

  TEST_CASE("Hilbert series agrees with both oracles") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t n = 1 + rng() % 4;
      const auto I = test::random_monomial_ideal(rng, n, 4, 1 + rng() % 6);
      const auto H = hilbert_series_quotient(I);
      CHECK(H == test::hilbert_by_inclusion_exclusion(I));
      const auto bound = 2 * I.max_degree();
      CHECK(H.expand(static_cast<int>(bound)) == test::standard_monomial_counts(I, bound));
    }
  }
}

TEST_SUITE("series") {
  TEST_CASE("canonical form divides out (1-λ)") {
    Laurent num;
    laurent::add_term(num, 0, 1);
    laurent::add_term(num, 1, -1);
    const RationalSeries s(num, 2);
    CHECK(s.denominator_power() == 1);
    CHECK(s.numerator() == Laurent{{0, 1}});
    CHECK(RationalSeries(Laurent{}, 4).denominator_power() == 0);
  }

  TEST_CASE("terms with negative denominator power") {
    const auto s = RationalSeries::term(1, 2, -1);
    CHECK(to_string(s) == "λ^2 - λ^3");
    CHECK(RationalSeries::term(3, -1, 0).numerator() == Laurent{{-1, 3}});
  }

  TEST_CASE("arithmetic") {
    const auto a = RationalSeries::term(1, 0, 1);
    const auto b = RationalSeries::term(1, 1, 1);
    CHECK(a - b == RationalSeries::term(1, 0, 0));
    CHECK((a + (-a)).is_zero());
    CHECK(a.scaled(2).times_one_minus_lambda(1) == RationalSeries::term(2, 0, 0));
    CHECK(b.shifted(-1) == a);
  }

  TEST_CASE("λ -> 1/λ") {
    // 1/(1-1/λ) = -λ/(1-λ)
    const auto s = RationalSeries::term(1, 0, 1).inverted();
    CHECK(s == RationalSeries::term(-1, 1, 1));
    CHECK(s.inverted() == RationalSeries::term(1, 0, 1));
  }

  TEST_CASE("expansion and printing") {
    const auto s = RationalSeries::term(1, 0, 2);
    CHECK(s.expand(3) == Laurent{{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    CHECK(to_string(s) == "1 / (1-λ)^2");
    CHECK(to_string(RationalSeries()) == "0");
    CHECK(to_string(Laurent{{-2, 1}, {-1, 2}}) == "λ^-2 + 2λ^-1");
    CHECK(s.numerator_at_one() == 1);
  }
}
