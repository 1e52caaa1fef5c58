#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "opineq/rng.hpp"
#include "opineq/sequence.hpp"
#include "opineq/spectral.hpp"

using opineq::OperatorSequence;
using opineq::SymMatrix;

TEST_CASE("construction enforces shape invariants only") {
  CHECK_THROWS_AS(OperatorSequence({}), std::invalid_argument);
  CHECK_THROWS_AS(OperatorSequence({SymMatrix(2), SymMatrix(3)}),
                  std::invalid_argument);
  // Non-PSD terms are allowed structurally; positivity is a separate check.
  const OperatorSequence a({SymMatrix::diagonal({-1.0, 1.0})});
  CHECK(a.size() == 1);
}

TEST_CASE("scalar embedding and 1-based access") {
  const std::vector<double> values = {3.0, 0.0, 2.0};
  const OperatorSequence a = OperatorSequence::from_scalars(values);
  CHECK(a.dim() == 1);
  CHECK(a.size() == 3);
  CHECK(a[1](0, 0) == 3.0);
  CHECK(a[3](0, 0) == 2.0);
}

TEST_CASE("first_non_psd finds the earliest offender") {
  const OperatorSequence good({SymMatrix::identity(2), SymMatrix(2)});
  CHECK_FALSE(good.first_non_psd().has_value());

  const OperatorSequence bad({SymMatrix::identity(2),
                              SymMatrix::diagonal({1.0, -0.5}),
                              SymMatrix::diagonal({-2.0, 0.0})});
  CHECK(bad.first_non_psd().value() == 2);

  // A violation inside the tolerance band is not flagged.
  const OperatorSequence borderline({SymMatrix::diagonal({-1e-12, 1.0})});
  CHECK_FALSE(borderline.first_non_psd().has_value());
}

TEST_CASE("averaging transform on a hand example") {
  const OperatorSequence a = OperatorSequence::from_scalars(std::vector<double>{
      3.0, 1.0, 2.0});
  const OperatorSequence h = opineq::hardy_transform(a);
  CHECK(h[1](0, 0) == doctest::Approx(3.0));
  CHECK(h[2](0, 0) == doctest::Approx(2.0));
  CHECK(h[3](0, 0) == doctest::Approx(2.0));
}

TEST_CASE("averaging transform preserves matrix structure") {
  const SymMatrix m1(2, {4.0, 2.0, 2.0, 4.0});
  const SymMatrix m2(2, {0.0, 0.0, 0.0, 2.0});
  const OperatorSequence h = opineq::hardy_transform(OperatorSequence({m1, m2}));
  CHECK(h[2](0, 0) == doctest::Approx(2.0));
  CHECK(h[2](0, 1) == doctest::Approx(1.0));
  CHECK(h[2](1, 1) == doctest::Approx(3.0));
}

TEST_CASE("power_sum on a duplicated term") {
  // A = [[2,1],[1,2]], A^2 = [[5,4],[4,5]], so the sum over two copies is
  // [[10,8],[8,10]].
  const SymMatrix a(2, {2.0, 1.0, 1.0, 2.0});
  const SymMatrix s = opineq::power_sum(OperatorSequence({a, a}), 2.0);
  CHECK(s(0, 0) == doctest::Approx(10.0).epsilon(1e-13));
  CHECK(s(0, 1) == doctest::Approx(8.0).epsilon(1e-13));
  CHECK_THROWS_AS(opineq::power_sum(OperatorSequence({a}), 0.0), std::invalid_argument);
}

TEST_CASE("truncate_extend pads with zeros and truncates") {
  const OperatorSequence a = OperatorSequence::from_scalars(std::vector<double>{
      1.0, 2.0});
  const OperatorSequence longer = opineq::truncate_extend(a, 4);
  CHECK(longer.size() == 4);
  CHECK(longer[2](0, 0) == 2.0);
  CHECK(longer[3](0, 0) == 0.0);
  CHECK(longer[4](0, 0) == 0.0);

  const OperatorSequence shorter = opineq::truncate_extend(a, 1);
  CHECK(shorter.size() == 1);
  CHECK(shorter[1](0, 0) == 1.0);

  CHECK_THROWS_AS(opineq::truncate_extend(a, 0), std::invalid_argument);
}

TEST_CASE("scaling multiplies every term") {
  const OperatorSequence a({SymMatrix::identity(2)});
  const OperatorSequence s = opineq::scaled(a, 2.5);
  CHECK(s[1](0, 0) == 2.5);
  CHECK(s[1](1, 1) == 2.5);
}

TEST_CASE("prefix averages stay PSD for PSD input") {
  opineq::Rng rng(44);
  std::vector<SymMatrix> terms;
  for (int i = 0; i < 12; ++i) {
    terms.push_back(opineq::random_psd(3, rng.uniform_int(1, 3), rng));
  }
  const OperatorSequence h = opineq::hardy_transform(OperatorSequence(terms));
  for (int n = 1; n <= h.size(); ++n) {
    CHECK(opineq::min_eigenvalue(h[n]) >= -1e-12);
  }
}
