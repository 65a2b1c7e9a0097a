#include "support.hpp"

#include <borel/errors.hpp>

#include <doctest.h>

using namespace borel;
using borel::test::ideal;
using borel::test::str;

TEST_CASE("grid monomials") {
  const GridMonomial m(3, 2, {{2, 1}, {1, 2}});
  CHECK(m.cells() == std::vector<Cell>{{1, 2}, {2, 1}});
  CHECK(m.to_flat() == Monomial{0, 1, 1, 0, 0, 0});
  CHECK(GridMonomial::from_flat(m.to_flat(), 3, 2) == m);
  CHECK_THROWS_AS(GridMonomial(2, 2, {{1, 1}, {1, 1}}), NotSquarefree);
  CHECK_THROWS_AS(GridMonomial(2, 2, {{3, 1}}), DimensionMismatch);
}

TEST_CASE("b-pol of monomials") {
  CHECK(to_string(bpol_monomial(Monomial{1, 1, 0}, 2)) == "x1_1*x2_2");
  CHECK(to_string(bpol_monomial(Monomial{2, 0, 0}, 2)) == "x1_1*x1_2");
  CHECK(to_string(bpol_monomial(Monomial{0, 1, 2}, 3)) == "x2_1*x3_2*x3_3");
  CHECK_THROWS_AS(bpol_monomial(Monomial{3}, 2), DegreeBoundExceeded);
}

TEST_CASE("b-pol of ideals") {
  CHECK(str(bpol_ideal(ideal(test::quadric_ideal()), 2)) ==
        "x1_1*x1_2, x1_1*x2_2, x1_1*x3_2, x2_1*x2_2, x2_1*x3_2");
  CHECK(bpol_ideal(MonomialIdeal::zero(2), 2).is_zero());
  CHECK(str(bpol_ideal(ideal("x1^3"), 3)) == "x1_1*x1_2*x1_3");
  CHECK(bpol_ideal(ideal("x1^3")).cols() == 3);
}

TEST_CASE("standard polarization") {
  CHECK(to_string(stdpol_monomial(Monomial{1, 1, 0}, 2)) == "x1_1*x2_1");
  CHECK(to_string(stdpol_monomial(Monomial{0, 2, 0}, 2)) == "x2_1*x2_2");
  CHECK(stdpol_monomial(Monomial::one(2), 2).cells().empty());
}

TEST_CASE("depolarize") {
  const auto I = ideal(test::quadric_ideal());
  CHECK(depolarize(bpol_ideal(I, 2)) == I);
  CHECK(str(depolarize(test::grid("x1_1, x1_2", 1, 2))) == "x1");
  CHECK(depolarize(stdpol_ideal(I)) == I);
}

TEST_CASE("transpose") {
  const auto J = test::grid("x1_1*x2_1, x1_1*x2_2*x3_2, x1_2*x2_2*x3_2", 3, 2);
  const auto T = transpose(J);
  CHECK(T.rows() == 2);
  CHECK(T.cols() == 3);
  CHECK(str(T, 'y') == "y1_1*y1_2, y1_1*y2_2*y2_3, y2_1*y2_2*y2_3");
  CHECK(transpose(T) == J);
  CHECK(transpose(GridIdeal(2, 3)).is_zero());
}

TEST_CASE("membership through b-pol") {
  const auto I = ideal(test::quadric_ideal());
  CHECK(bpol_membership(I, Monomial{1, 1, 0}, 2));
  CHECK_FALSE(bpol_membership(I, Monomial{0, 0, 2}, 2));
  CHECK_FALSE(bpol_membership(I, Monomial::one(3), 2));
}

TEST_CASE("membership through b-pol agrees with membership (both directions)") {
  for (const auto& s : test::stress_corpus(19, 60)) {
    const std::size_t d = s.cols;
    for (const auto& m : test::monomials_up_to(s.ideal.ambient(), d))
      CHECK(contains(s.ideal, m) == bpol_membership(s.ideal, m, d));
  }
}

TEST_CASE("polarization check") {
  const auto I = ideal(test::quadric_ideal());
  CHECK(verify_polarization(I, bpol_ideal(I, 2)));
  CHECK(verify_polarization(I, stdpol_ideal(I)));
  CHECK_FALSE(verify_polarization(ideal("x1^2"), test::grid("x1_1", 1, 2)));
  for (const auto& s : test::stress_corpus(23, 60)) {
    CHECK(verify_polarization(s.ideal, bpol_ideal(s.ideal, s.cols)));
    CHECK(verify_polarization(s.ideal, stdpol_ideal(s.ideal)));
  }
}
