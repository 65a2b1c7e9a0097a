#include "support.hpp"

#include <borel/errors.hpp>

#include <doctest.h>

using namespace borel;
using borel::test::ideal;
using borel::test::str;

namespace {

std::string str(const std::vector<IrreducibleComponent>& e) { return to_string(std::span(e)); }
std::string str(const std::vector<GridComponent>& e) { return to_string(std::span(e)); }
std::string str(const std::vector<GeneralComponent>& e) { return to_string(std::span(e)); }

}  // namespace

TEST_CASE("component accessors") {
  const IrreducibleComponent a{3, 2, 1, 2};
  CHECK(a.t() == 4);
  CHECK(a.e() == 2);
  CHECK(a.w(5) == -3);
  CHECK(str(a.ideal(4)) == "x3, x2^2, x4^2, x1^3");
  CHECK_THROWS_AS(IrreducibleComponent({1, 0}), InputError);
  CHECK_THROWS_AS(GridComponent({2, 1}), ConditionStarViolation);
}

TEST_CASE("psi") {
  CHECK(str(psi(IrreducibleComponent{3, 2, 1, 2})) == "(3,4,4,4); (3,4,4,5)");
  CHECK(str(psi(IrreducibleComponent{1, 1})) == "(1,1)");
  CHECK(str(psi(IrreducibleComponent{2})) == "(1); (2)");
}

TEST_CASE("decomposition of strongly stable ideals") {
  CHECK(str(decompose_strongly_stable(ideal(test::quartic_ideal()))) ==
        "(1); (2,1); (2,2,2); (3,1,2)");
  CHECK(str(decompose_strongly_stable(ideal(test::cubic_ideal()))) == "(1,2); (1,3,1); (2,1,1)");
  CHECK(str(decompose_strongly_stable(ideal("x1^5"))) == "(5)");
  CHECK(str(decompose_strongly_stable(ideal(test::quadric_ideal()))) == "(1,1); (1,2,1); (2,1,1)");
  CHECK_THROWS_AS(decompose_strongly_stable(ideal("x2")), NotStronglyStable);
  CHECK_THROWS_AS(decompose_strongly_stable(MonomialIdeal::zero(2)), DegenerateIdeal);
}

TEST_CASE("top components") {
  CHECK(str(top_components(ideal(test::quartic_ideal()))) == "(2,2,2); (3,1,2)");
  CHECK(str(top_components(ideal("x1^2, x1*x2"))) == "(2,1)");
  CHECK(str(top_components(ideal("x1^3"))) == "(3)");
}

TEST_CASE("decomposition of b-pol") {
  const auto e_mixed = decompose_strongly_stable(ideal(test::mixed_ideal()));
  CHECK(str(bpol_decomposition(e_mixed)) == "(1,1); (1,2,2); (1,2,3); (2,2,2)");
  const auto e_quadric = decompose_strongly_stable(ideal(test::quadric_ideal()));
  CHECK(str(bpol_decomposition(e_quadric)) == "(1,1); (1,2,2); (2,2,2)");
  const std::vector<IrreducibleComponent> e{{3}};
  CHECK(str(bpol_decomposition(e)) == "(1); (2); (3)");
}

TEST_CASE("splitting oracle") {
  CHECK(str(decompose_oracle(ideal("x1*x2"))) == "(x1); (x2)");
  CHECK(str(decompose_oracle(ideal(test::cubic_ideal()))) ==
        "(x1, x2^2); (x1, x2^3, x3); (x1^2, x2, x3)");
  const auto J = bpol_ideal(ideal(test::quadric_ideal()), 2);
  CHECK(str(grid_decomposition(J)) == "(1,1); (1,2,2); (2,2,2)");
  CHECK_THROWS_AS(decompose_oracle(MonomialIdeal::unit(2)), DegenerateIdeal);
}

TEST_CASE("oracle decomposition intersects back, on arbitrary monomial ideals") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const auto I = test::random_monomial_ideal(rng, n, 4, 1 + rng() % 5);
    const auto comps = decompose_oracle(I);
    CHECK(intersect_components(comps, n) == I);
    CHECK(irredundant(comps) == comps);
  }
}

TEST_CASE("intersections") {
  const std::vector<IrreducibleComponent> e_cubic{{1, 2}, {2, 1, 1}, {1, 3, 1}};
  CHECK(str(intersect_components(e_cubic, 3)) == "x1^2, x1*x2, x1*x3, x2^3, x2^2*x3");
  CHECK(str(intersect_components(std::vector<IrreducibleComponent>{{4}}, 1)) == "x1^4");
  const std::vector<IrreducibleComponent> e_quadric{{1, 1}, {1, 2, 1}, {2, 1, 1}};
  CHECK(str(intersect_components(e_quadric, 3)) == test::quadric_ideal());
}

TEST_CASE("right-shift characterization") {
  const std::vector<IrreducibleComponent> good{{1, 2}, {2, 1, 1}, {1, 3, 1}};
  const std::vector<IrreducibleComponent> bad{{1, 3}, {2, 2, 1}, {3, 1, 1}};
  CHECK(right_shift_check(good, 3));
  CHECK_FALSE(right_shift_check(bad, 3));
  CHECK(right_shift_check(std::vector<IrreducibleComponent>{{1}}, 1));
  CHECK_FALSE(is_strongly_stable(intersect_components(bad, 3)));
}

TEST_CASE("right-shift check agrees with strong stability in both directions") {
  std::mt19937_64 rng(31);
  int initial_segment_cases = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto I = test::random_monomial_ideal(rng, 3, 3, 1 + rng() % 4);
    std::vector<IrreducibleComponent> e;
    bool ok = true;
    for (const auto& c : decompose_oracle(I)) {
      auto a = to_initial_segment(c);
      if (!a) {
        ok = false;
        break;
      }
      e.push_back(*a);
    }
    if (!ok) continue;
    ++initial_segment_cases;
    CHECK(right_shift_check(e, 3) == is_strongly_stable(I));
  }
  CHECK(initial_segment_cases > 20);
}

TEST_CASE("Borel decomposition matches the oracle and Psi matches the oracle on b-pol") {
  for (const auto& s : test::stress_corpus(37, 80)) {
    const auto e = decompose_strongly_stable(s.ideal);
    std::vector<GeneralComponent> encoded;
    for (const auto& a : e) encoded.push_back(to_general(a));
    std::sort(encoded.begin(), encoded.end());
    CHECK(encoded == decompose_oracle(s.ideal));
    CHECK(intersect_components(e, s.ideal.ambient()) == s.ideal);
    CHECK(grid_decomposition(bpol_ideal(s.ideal, s.cols)) == bpol_decomposition(e));
    std::size_t total = 0;
    for (const auto& a : e) total += a.e();
    CHECK(bpol_decomposition(e).size() == total);
    std::size_t min_t = s.ideal.ambient();
    for (const auto& a : e) min_t = std::min(min_t, a.t());
    CHECK(height(s.ideal) == min_t);
  }
}

TEST_CASE("condition (*) holds exactly for strongly stable ideals") {
  std::mt19937_64 rng(41);
  int unstable = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const auto I = test::random_monomial_ideal(rng, 3, 3, 1 + rng() % 4);
    bool star = true;
    try {
      grid_decomposition(bpol_ideal(I));
    } catch (const ConditionStarViolation&) {
      star = false;
    }
    CHECK(star == is_strongly_stable(I));
    unstable += star ? 0 : 1;
  }
  CHECK(unstable > 20);
}

TEST_CASE("colon by the last variable drops one from each full-length component") {
  for (const auto& s : test::stress_corpus(43, 80)) {
    const std::size_t n = s.ideal.ambient();
    std::vector<IrreducibleComponent> expected;
    for (const auto& a : decompose_strongly_stable(s.ideal)) {
      if (a.t() < n) {
        expected.push_back(a);
      } else if (a.e() >= 2) {
        std::vector<Exponent> lowered(a.exponents().begin(), a.exponents().end());
        --lowered.back();
        expected.emplace_back(std::move(lowered));
      }
    }
    expected = irredundant(std::move(expected));
    const auto colon = colon_variable(s.ideal, n);
    if (colon.is_unit())
      CHECK(expected.empty());
    else
      CHECK(decompose_strongly_stable(colon) == expected);
  }
}

TEST_CASE("restriction stays strongly stable; saturation keeps the components with t < n") {
  for (const auto& s : test::stress_corpus(47, 60)) {
    const std::size_t n = s.ideal.ambient();
    CHECK(is_strongly_stable(restrict_away_last(s.ideal)));
    const auto sat = saturate_variable(s.ideal, n);
    if (sat.is_unit()) continue;
    std::vector<IrreducibleComponent> low;
    for (const auto& a : decompose_strongly_stable(s.ideal))
      if (a.t() < n) low.push_back(a);
    CHECK(decompose_strongly_stable(sat) == irredundant(low));
  }
}
