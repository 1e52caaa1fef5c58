#include <atomic>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "opineq/parallel.hpp"
#include "opineq/quadrature.hpp"
#include "opineq/rng.hpp"
#include "opineq/sym_matrix.hpp"

using namespace opineq;

TEST_CASE("gauss-legendre rules are symmetric and normalized") {
  for (int n : {1, 2, 5, 16, 32, 64}) {
    const QuadratureRule rule = gauss_legendre(n);
    REQUIRE(rule.nodes.size() == static_cast<std::size_t>(n));
    REQUIRE(rule.weights.size() == static_cast<std::size_t>(n));
    double wsum = 0.0;
    for (int i = 0; i < n; ++i) {
      CHECK(rule.nodes[static_cast<std::size_t>(i)] > -1.0);
      CHECK(rule.nodes[static_cast<std::size_t>(i)] < 1.0);
      CHECK(rule.weights[static_cast<std::size_t>(i)] > 0.0);
      // Node/weight symmetry about zero.
      CHECK(rule.nodes[static_cast<std::size_t>(i)] ==
            doctest::Approx(-rule.nodes[static_cast<std::size_t>(n - 1 - i)])
                .epsilon(1e-14));
      CHECK(rule.weights[static_cast<std::size_t>(i)] ==
            doctest::Approx(rule.weights[static_cast<std::size_t>(n - 1 - i)])
                .epsilon(1e-13));
      wsum += rule.weights[static_cast<std::size_t>(i)];
      if (i > 0) {
        CHECK(rule.nodes[static_cast<std::size_t>(i)] >
              rule.nodes[static_cast<std::size_t>(i - 1)]);
      }
    }
    CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
  }
}

TEST_CASE("gauss-legendre integrates polynomials of degree 2n-1 exactly") {
  for (int n : {2, 4, 8}) {
    const QuadratureRule rule = gauss_legendre(n);
    const int degree = 2 * n - 1;
    for (int d = 0; d <= degree; ++d) {
      double got = 0.0;
      for (int i = 0; i < n; ++i) {
        got += rule.weights[static_cast<std::size_t>(i)] *
               std::pow(rule.nodes[static_cast<std::size_t>(i)], d);
      }
      const double want = d % 2 == 1 ? 0.0 : 2.0 / (d + 1);
      CHECK(std::abs(got - want) < 1e-13);
    }
    // Degree 2n breaks exactness, so the rule is not accidentally wider.
    double got = 0.0;
    for (int i = 0; i < n; ++i) {
      got += rule.weights[static_cast<std::size_t>(i)] *
             std::pow(rule.nodes[static_cast<std::size_t>(i)], 2 * n);
    }
    CHECK(std::abs(got - 2.0 / (2 * n + 1)) > 1e-10);
  }
  CHECK_THROWS_AS(gauss_legendre(0), std::invalid_argument);
}

TEST_CASE("pairwise sums depend only on the element count") {
  Rng rng(601);
  std::vector<double> xs;
  for (int i = 0; i < 1000; ++i) xs.push_back(rng.uniform(-1.0, 1.0) * 1e6);
  const double total = pairwise_sum(xs);
  CHECK(total == pairwise_sum(xs));  // bit-stable on repeat
  double naive = std::accumulate(xs.begin(), xs.end(), 0.0);
  CHECK(total == doctest::Approx(naive).epsilon(1e-12));

  CHECK(pairwise_sum(std::span<const double>{}) == 0.0);
  std::vector<double> one{3.5};
  CHECK(pairwise_sum(one) == 3.5);

  std::vector<SymMatrix> ms;
  for (int i = 0; i < 37; ++i) ms.push_back(random_psd(3, 3, rng));
  const SymMatrix m_total = pairwise_sum(ms);
  SymMatrix m_naive(3);
  for (const SymMatrix& m : ms) m_naive += m;
  CHECK(max_abs_diff(m_total, m_naive) < 1e-9);
  CHECK(max_abs_diff(m_total, pairwise_sum(ms)) == 0.0);
}

TEST_CASE("quadrature spec validation") {
  QuadratureSpec spec;
  CHECK_NOTHROW(spec.validate());
  spec.nodes_per_segment = 0;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec = QuadratureSpec{};
  spec.refinement = 0;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
}

TEST_CASE("parallel_for covers every index exactly once") {
  for (int threads : {1, 2, 7}) {
    std::vector<std::atomic<int>> hits(257);
    for (auto& h : hits) h.store(0);
    parallel_for(257, threads, [&](int i) {
      hits[static_cast<std::size_t>(i)].fetch_add(1);
    });
    for (const auto& h : hits) CHECK(h.load() == 1);
  }
  // Zero iterations is a no-op.
  parallel_for(0, 4, [&](int) { CHECK(false); });
}

TEST_CASE("parallel_for propagates the worker exception") {
  CHECK_THROWS_AS(
      parallel_for(64, 4,
                   [](int i) {
                     if (i == 13) throw std::runtime_error("boom");
                   }),
      std::runtime_error);
}

TEST_CASE("worker_count is positive and honors explicit requests") {
  CHECK(worker_count(0) >= 1);
  CHECK(worker_count(3) >= 1);
  CHECK(worker_count(-5) >= 1);
}
