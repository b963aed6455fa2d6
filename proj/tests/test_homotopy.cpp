#include <cmath>
#include <vector>

#include "doctest.h"
#include "hamvf/calculus.hpp"
#include "hamvf/error.hpp"
#include "hamvf/homotopy.hpp"
#include "support.hpp"

using namespace hamvf;
using hamvf::testing::example1;
using hamvf::testing::example2;
using hamvf::testing::method;
using hamvf::testing::one_plus_t;

namespace {

ExpPoly t3(const Rational& c) { return ExpPoly::term(c, 3); }

void check_zero_initial_data(const SeriesSolution& sol) {
  for (std::size_t m = 1; m < sol.iterates.size(); ++m) {
    const auto data = taylor_data(sol.iterates[m], sol.problem.order, sol.problem.origin());
    for (const auto& v : data) CHECK(v.is_zero());
  }
}

ExpPoly example2_series() {
  return -ExpPoly::t() + ExpPoly::term(Rational(1, 12), 4) - ExpPoly::term(Rational(1, 252), 7) +
         ExpPoly::term(Rational(1, 6048), 10) - ExpPoly::term(Rational(1, 157248), 13) +
         ExpPoly::term(Rational(37, 158505984), 16);
}

}  // namespace

TEST_SUITE("homotopy") {
  TEST_CASE("variant names") {
    CHECK(parse_variant("NDHAM") == Variant::nd_ham);
    CHECK(parse_variant("ND-HAM") == Variant::nd_ham);
    CHECK(parse_variant("mHAM") == Variant::staged_ham);
    CHECK(parse_variant("MHAM") == Variant::mham);
    CHECK(parse_variant("q-HAM") == Variant::q_ham);
    CHECK_FALSE(parse_variant("ham").has_value());
    CHECK(to_string(Variant::q_ham) == "QHAM");
  }

  TEST_CASE("chi") {
    CHECK(chi(1, Variant::ham, 1) == Rational(0));
    CHECK(chi(4, Variant::q_ham, 2) == Rational(2));
    CHECK(chi(2, Variant::nd_ham, 1) == Rational(1));
    CHECK(chi(1, Variant::q_ham, 3) == Rational(0));
  }

  TEST_CASE("config validation") {
    CHECK_THROWS_AS(run(example2(), method(Variant::ham, 0, 3)), InvalidArgument);
    CHECK_THROWS_AS(run(example2(), method(Variant::ham, -1, 0)), InvalidArgument);
    CHECK_THROWS_AS(run(example2(), method(Variant::q_ham, -1, 2, 0)), InvalidArgument);
  }

  TEST_CASE("residual_term") {
    const std::vector<ExpPoly> exact = {ExpPoly::exp()};
    CHECK(residual_term(example1(), method(Variant::nd_ham, -1, 1), exact, 1).is_zero());

    const VfideProblem mham = example1({ExpPoly::exp() - ExpPoly::term(Rational(4, 5), 1), ExpPoly::term(Rational(-1, 5), 1)});
    CHECK(residual_term(mham, method(Variant::mham, -1, 1), exact, 1) == ExpPoly::term(Rational(-1, 5), 1));

    const std::vector<ExpPoly> u0 = {-ExpPoly::t()};
    for (Variant v : {Variant::ham, Variant::mham, Variant::q_ham, Variant::nd_ham}) {
      CHECK(residual_term(example2(), method(v, -1, 1, 2), u0, 1) == t3(Rational(-1, 3)));
    }
    CHECK_THROWS_AS(residual_term(example2(), method(Variant::ham, -1, 1), u0, 2), ArityMismatch);
  }

  TEST_CASE("step: worked first iterates") {
    // mHAM, L[u1 - u0] = hbar (R1 - x1)
    for (long h : {-1L, -2L, 3L}) {
      const Rational hbar(h);
      const std::vector<ExpPoly> u0 = {ExpPoly::exp()};
      const ExpPoly y1 = step(example1(), method(Variant::staged_ham, hbar, 1), u0, 1);
      CHECK(y1 == (Rational(1) + hbar) * (ExpPoly::exp() - one_plus_t()));

      const VfideProblem mham = example1({ExpPoly::exp() - ExpPoly::term(Rational(4, 5), 1), ExpPoly::term(Rational(-1, 5), 1)});
      CHECK(step(mham, method(Variant::mham, hbar, 1), u0, 1) == t3(-hbar / Rational(30)));
    }
  }

  TEST_CASE("step: Example 2 second iterate for several hbar") {
    for (const Rational& hbar : {Rational(-1), Rational(1, 2), Rational(-3, 2)}) {
      const SeriesSolution sol = run(example2(), method(Variant::ham, hbar, 2));
      const ExpPoly& u1 = sol.iterates[1];
      CHECK(u1 == ExpPoly::term(-hbar / Rational(12), 4));
      const ExpPoly expected =
          u1 - (hbar * hbar / Rational(252)) * ExpPoly::term(1, 4) * (ExpPoly(21) + ExpPoly::term(1, 3));
      CHECK(sol.iterates[2] == expected);
    }
  }

  TEST_CASE("run: exact recovery for Example 1") {
    const SeriesSolution sol = run(example1(), method(Variant::nd_ham, -1, 5));
    REQUIRE(sol.iterates.size() == 6);
    CHECK(sol.iterates[0] == ExpPoly::exp());
    for (std::size_t m = 1; m <= 5; ++m) CHECK(sol.iterates[m].is_zero());
    for (unsigned m = 0; m <= 5; ++m) CHECK(partial_sum(sol, m) == ExpPoly::exp());
  }

  TEST_CASE("run: Example 2 series") {
    const SeriesSolution nd = run(example2(), method(Variant::nd_ham, -1, 5));
    const SeriesSolution ham = run(example2(), method(Variant::ham, -1, 5));
    CHECK(partial_sum(nd) == example2_series());
    CHECK(nd.iterates == ham.iterates);
    CHECK(partial_sum(nd, 0) == nd.iterates[0]);
    CHECK_THROWS_AS(partial_sum(nd, 6), InvalidArgument);
  }

  TEST_CASE("run: MHAM three-term sum") {
    MethodConfig cfg = method(Variant::mham, -1, 2);
    cfg.initial_guess = ExpPoly::exp();
    const VfideProblem prob = example1({ExpPoly::exp() - ExpPoly::term(Rational(4, 5), 1), ExpPoly::term(Rational(-1, 5), 1)});
    const SeriesSolution sol = run(prob, cfg);
    CHECK(sol.iterates[2] == t3(Rational(-29, 900)));
    CHECK(partial_sum(sol) == ExpPoly::exp() + t3(Rational(1, 900)));
  }

  TEST_CASE("q-HAM weights") {
    const SeriesSolution sol = run(example2(), method(Variant::q_ham, -1, 4, 3));
    REQUIRE(sol.weights.size() == 5);
    CHECK(sol.weights[0] == Rational(1));
    CHECK(sol.weights[4] == Rational(1, 81));
    ExpPoly manual;
    for (std::size_t m = 0; m < 5; ++m) manual += sol.iterates[m] * Rational(1, 3).pow(static_cast<unsigned>(m));
    CHECK(partial_sum(sol) == manual);
  }

  TEST_CASE("q-HAM(hbar, n) sums equal HAM(hbar / n) sums") {
    for (unsigned n : {2u, 3u}) {
      const Rational hbar(-2);
      const SeriesSolution q = run(example2(), method(Variant::q_ham, hbar, 4, n));
      const SeriesSolution h = run(example2(), method(Variant::ham, hbar / Rational(static_cast<long>(n)), 4));
      CHECK(partial_sum(q) == partial_sum(h));
    }
  }

  TEST_CASE("invariant: zero initial data of every correction") {
    const VfideProblem three_way =
        example1({ExpPoly{}, ExpPoly::exp() - ExpPoly::term(Rational(3, 4), 1), ExpPoly::term(Rational(-1, 4), 1)});
    for (Variant v : {Variant::ham, Variant::mham, Variant::staged_ham, Variant::q_ham, Variant::nd_ham}) {
      MethodConfig cfg = method(v, Rational(-3, 4), 4, 2);
      check_zero_initial_data(run(three_way, cfg));
      check_zero_initial_data(run(example2(), cfg));
      cfg.initial_guess = one_plus_t() + ExpPoly::term(2, 2);
      check_zero_initial_data(run(three_way, cfg));
    }
  }

  TEST_CASE("invariant: an exact initial guess is a fixed point") {
    const std::vector<ExpPoly> f_only = {ExpPoly::exp() - ExpPoly::t()};
    const std::vector<ExpPoly> two_way = {ExpPoly::exp(), -ExpPoly::t()};
    for (const Rational& hbar : {Rational(-1), Rational(-1, 2), Rational(2)}) {
      for (Variant v : {Variant::ham, Variant::mham, Variant::q_ham, Variant::nd_ham}) {
        const VfideProblem prob = example1(v == Variant::mham ? f_only : two_way);
        MethodConfig cfg = method(v, hbar, 4, 2);
        cfg.initial_guess = ExpPoly::exp();
        const std::vector<ExpPoly> u0 = {ExpPoly::exp()};
        REQUIRE(residual_term(prob, cfg, u0, 1).is_zero());
        const SeriesSolution sol = run(prob, cfg);
        for (std::size_t m = 1; m < sol.iterates.size(); ++m) CHECK(sol.iterates[m].is_zero());
      }
    }
    // mHAM couples u_1 to u_0 itself; the fixed point only appears at hbar = -1.
    const SeriesSolution staged = run(example1(two_way), method(Variant::staged_ham, -1, 4));
    for (std::size_t m = 1; m < staged.iterates.size(); ++m) CHECK(staged.iterates[m].is_zero());
  }

  TEST_CASE("invariant: q-HAM with n = 1 is HAM on random problems") {
    hamvf::testing::ExpPolyGen gen(909, /*polynomial_only=*/true);
    for (int i = 0; i < 200; ++i) {
      const VfideProblem prob = hamvf::testing::random_problem(gen);
      const Rational hbar = gen.coeff();
      if (hbar.is_zero()) continue;
      const SeriesSolution ham = run(prob, method(Variant::ham, hbar, 3));
      const SeriesSolution q = run(prob, method(Variant::q_ham, hbar, 3, 1));
      CHECK(ham.iterates == q.iterates);
      CHECK(ham.weights == q.weights);
    }
  }

  TEST_CASE("invariant: iterates are polynomial in hbar of degree <= m") {
    const unsigned big_m = 4;
    std::vector<Rational> nodes;
    std::vector<SeriesSolution> runs;
    for (long k = 1; k <= static_cast<long>(big_m) + 1; ++k) {
      nodes.push_back(Rational(-k, 2));
      runs.push_back(run(example2(), method(Variant::ham, nodes.back(), big_m)));
    }
    const Rational probe(7, 3);
    const SeriesSolution direct = run(example2(), method(Variant::ham, probe, big_m));
    for (unsigned m = 0; m <= big_m; ++m) {
      std::vector<Rational> xs(nodes.begin(), nodes.begin() + m + 1);
      std::vector<ExpPoly> ys;
      for (unsigned i = 0; i <= m; ++i) ys.push_back(runs[i].iterates[m]);
      CHECK(hamvf::testing::lagrange(xs, ys, probe) == direct.iterates[m]);
    }
  }

  TEST_CASE("divergence is flagged, not fatal") {
    MethodConfig cfg = method(Variant::ham, 1000, 4);
    cfg.divergence_bound = 1e6;
    const SeriesSolution sol = run(example2(), cfg);
    REQUIRE(sol.divergence.has_value());
    CHECK(sol.divergence->iterate >= 1);
    CHECK(sol.divergence->log2_magnitude > std::log2(1e6));
    CHECK(sol.iterates.size() == 5);
    CHECK_FALSE(run(example2(), method(Variant::ham, -1, 4)).divergence.has_value());
  }
}
