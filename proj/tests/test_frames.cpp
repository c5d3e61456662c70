#include <doctest.h>

#include <cmath>
#include <random>

#include "etfkit/correspondence.hpp"
#include "etfkit/frames.hpp"
#include "etfkit/generators.hpp"
#include "oracles.hpp"

using namespace etfkit;

namespace {

SymMatrixd simplex_gram() {
  RectMatrixd g = RectMatrixd::Constant(3, 3, -0.5);
  g.diagonal().setOnes();
  return SymMatrixd(g);
}

RectMatrixd paley13_frame() { return synthesize_from_gram(srg_to_etf_gram(paley(13)).first); }

}  // namespace

TEST_CASE("welch_bound") {
  CHECK(welch_bound(7, 28) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(welch_bound(6, 16) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(welch_bound(5, 5) == 0.0);
  CHECK(welch_bound(1, 1) == 0.0);
  CHECK(welch_bound(2, 3) == doctest::Approx(0.5));
  CHECK_THROWS_AS(welch_bound(8, 7), Error);
  CHECK_THROWS_AS(welch_bound(0, 7), Error);
}

TEST_CASE("coherence") {
  CHECK(coherence(RectMatrixd::Identity(4, 4)) == 0.0);
  CHECK(coherence(fixture_6x16()) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

  const RectMatrixd phi = paley13_frame();
  CHECK(phi.rows() == 7);
  CHECK(phi.cols() == 14);
  CHECK(coherence(phi) == doctest::Approx(0.2773501).epsilon(1e-7));
  CHECK(std::abs(coherence(phi) - welch_bound(7, 14)) < 1e-9);
  CHECK(std::abs(coherence(phi) - 1.0 / std::sqrt(13.0)) < 1e-9);

  RectMatrixd bad = RectMatrixd::Identity(3, 3);
  bad(0, 0) = 1.1;
  CHECK_THROWS_WITH_AS(coherence(bad), doctest::Contains("NonUnitColumns"), Error);
}

TEST_CASE("tightness_defect") {
  CHECK(tightness_defect(fixture_6x16()) < 1e-12);
  CHECK(tightness_defect(RectMatrixd::Identity(3, 3)) == 0.0);
  RectMatrixd doubled = RectMatrixd::Zero(2, 2);
  doubled(0, 0) = doubled(0, 1) = 1.0;
  CHECK(tightness_defect(doubled) == doctest::Approx(std::sqrt(2.0)));
  CHECK_THROWS_AS(tightness_defect(2.0 * RectMatrixd::Identity(2, 2)), Error);
}

TEST_CASE("verify_etf_gram accepts ETF Gram matrices") {
  SUBCASE("orthonormal basis") {
    const auto s = verify_etf_gram(SymMatrixd::identity(5));
    CHECK(s.n == 5);
    CHECK(s.m == 5);
    CHECK(s.alpha == 1.0);
    CHECK(s.beta == 0.0);
  }
  SUBCASE("fixture") {
    const auto s = verify_etf_gram(gram(fixture_6x16()));
    CHECK(s.n == 16);
    CHECK(s.m == 6);
    CHECK(s.alpha == doctest::Approx(8.0 / 3.0).epsilon(1e-12));
    CHECK(s.beta == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(std::abs(static_cast<double>(s.m) * s.alpha - 16.0) < 1e-9);
  }
  SUBCASE("single vector") {
    const auto s = verify_etf_gram(SymMatrixd::identity(1));
    CHECK(s.m == 1);
  }
}

TEST_CASE("verify_etf_gram names the violated condition") {
  RectMatrixd g = RectMatrixd::Identity(4, 4);
  g(1, 2) = g(2, 1) = 0.5;
  try {
    verify_etf_gram(SymMatrixd(g));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::OffDiagonalNotEquimodular);
    REQUIRE(e.witness().has_value());
  }

  RectMatrixd h = RectMatrixd::Identity(3, 3);
  h(2, 2) = 1.5;
  CHECK_THROWS_WITH_AS(verify_etf_gram(SymMatrixd(h)), doctest::Contains("DiagonalNotUnit"), Error);

  // Equiangular but not tight: three vectors at 0.3 overlap.
  RectMatrixd loose = RectMatrixd::Constant(3, 3, 0.3);
  loose.diagonal().setOnes();
  CHECK_THROWS_WITH_AS(verify_etf_gram(SymMatrixd(loose)), doctest::Contains("NotIdempotentScaled"), Error);

  // A 1e-4 perturbation of one symmetric pair is caught at default tolerance.
  RectMatrixd p = gram(fixture_6x16()).dense();
  p(3, 7) += 1e-4;
  p(7, 3) += 1e-4;
  CHECK_THROWS_AS(verify_etf_gram(SymMatrixd(p)), Error);
}

TEST_CASE("synthesize_from_gram") {
  SUBCASE("identity") {
    const RectMatrixd phi = synthesize_from_gram(SymMatrixd::identity(3));
    CHECK(phi.rows() == 3);
    CHECK(max_abs_difference(phi.transpose() * phi, RectMatrixd::Identity(3, 3)) < 1e-12);
  }
  SUBCASE("simplex") {
    const RectMatrixd phi = synthesize_from_gram(simplex_gram());
    CHECK(phi.rows() == 2);
    CHECK(phi.cols() == 3);
    CHECK(coherence(phi) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(max_abs_difference(phi.transpose() * phi, simplex_gram().dense()) < 1e-8);
    CHECK(max_abs_difference(phi * phi.transpose(), 1.5 * RectMatrixd::Identity(2, 2)) < 1e-8);
  }
  SUBCASE("fixture") {
    const SymMatrixd g = gram(fixture_6x16());
    const RectMatrixd phi = synthesize_from_gram(g);
    CHECK(phi.rows() == 6);
    CHECK(phi.cols() == 16);
    CHECK(max_abs_difference(phi.transpose() * phi, g.dense()) < 1e-8);
    CHECK(max_abs_difference(phi * phi.transpose(), 8.0 / 3.0 * RectMatrixd::Identity(6, 6)) < 1e-8);
  }
  RectMatrixd bad = RectMatrixd::Identity(3, 3);
  bad(0, 1) = bad(1, 0) = 0.2;
  CHECK_THROWS_AS(synthesize_from_gram(SymMatrixd(bad)), Error);
}

TEST_CASE("naimark_complement_gram") {
  SUBCASE("fixture") {
    const SymMatrixd g = gram(fixture_6x16());
    const auto s = verify_etf_gram(g);
    const SymMatrixd c = naimark_complement_gram(g, s);
    for (Eigen::Index i = 0; i < 16; ++i) {
      CHECK(c(i, i) == doctest::Approx(1.0).epsilon(1e-14));
      for (Eigen::Index j = 0; j < 16; ++j) {
        if (i != j) {
          CHECK(std::abs(std::abs(c(i, j)) - 0.2) < 1e-12);
          CHECK(c(i, j) * g(i, j) < 0.0);
        }
      }
    }
    const auto cs = verify_etf_gram(c);
    CHECK(cs.m == 10);
    CHECK(cs.n == 16);
    CHECK(cs.beta == doctest::Approx(6.0 * s.beta / 10.0).epsilon(1e-12));
    CHECK(std::abs(cs.beta - welch_bound(10, 16)) < 1e-9);

    const RectMatrixd identity = 6.0 / 16.0 * g.dense() + 10.0 / 16.0 * c.dense();
    CHECK(max_abs_difference(identity, RectMatrixd::Identity(16, 16)) < 1e-12);

    const SymMatrixd back = naimark_complement_gram(c, cs);
    CHECK(max_abs_difference(back.dense(), g.dense()) < 1e-12);
  }
  SUBCASE("simplex goes to a rank-one frame") {
    const SymMatrixd g = simplex_gram();
    const SymMatrixd c = naimark_complement_gram(g, verify_etf_gram(g));
    CHECK(max_abs_difference(c.dense(), RectMatrixd::Ones(3, 3)) < 1e-15);
    const auto cs = verify_etf_gram(c);
    CHECK(cs.m == 1);
    CHECK(cs.beta == doctest::Approx(1.0));
  }
  SUBCASE("orthonormal basis has no complement") {
    const SymMatrixd g = SymMatrixd::identity(4);
    CHECK_THROWS_WITH_AS(naimark_complement_gram(g, verify_etf_gram(g)), doctest::Contains("NoComplement"), Error);
  }
}

TEST_CASE("switch_frame") {
  const RectMatrixd phi = fixture_6x16();
  CHECK(switch_frame(phi, SignPattern::all_positive(16)) == phi);

  const RectMatrixd negated = switch_frame(phi, SignPattern(std::vector<int>(16, -1)));
  CHECK(coherence(negated) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(tightness_defect(negated) < 1e-12);

  std::vector<int> flips(16, 1);
  for (Eigen::Index i = 1; i < 16; ++i)
    if (phi.col(0).dot(phi.col(i)) < 0.0) flips[static_cast<std::size_t>(i)] = -1;
  const SymMatrixd g = gram(switch_frame(phi, SignPattern(flips)));
  for (Eigen::Index i = 1; i < 16; ++i) CHECK(g(0, i) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));

  CHECK_THROWS_WITH_AS(switch_frame(phi, SignPattern::all_positive(15)), doctest::Contains("LengthMismatch"), Error);
  CHECK_THROWS_AS(SignPattern({1, 0, -1}), Error);
}

TEST_CASE("sign_normalize") {
  const SymMatrixd g = gram(fixture_6x16());
  const auto s = verify_etf_gram(g);
  auto [normalized, pattern] = sign_normalize(g, s);
  // Signs of <phi_1, phi_i> read off the printed matrix.
  const std::vector<int> expected{1, -1, -1, -1, 1, -1, 1, -1, 1, 1, -1, -1, 1, -1, -1, 1};
  CHECK(pattern.signs() == expected);
  CHECK(pattern[1] == -1);
  for (Eigen::Index i = 1; i < 16; ++i) CHECK(normalized(0, i) > 0.0);

  auto [twice, pattern2] = sign_normalize(normalized, verify_etf_gram(normalized));
  CHECK(twice == normalized);
  CHECK(pattern2 == SignPattern::all_positive(16));

  const SymMatrixd identity = SymMatrixd::identity(3);
  CHECK_THROWS_WITH_AS(sign_normalize(identity, verify_etf_gram(identity)), doctest::Contains("BetaZero"), Error);
}

TEST_CASE("Welch bound attained by every verified Gram matrix") {
  std::vector<RectMatrixd> frames{fixture_6x16(), steiner_etf(fano_plane()), steiner_etf(pairs_design(4)),
                                  paley13_frame()};
  for (const auto& phi : frames) {
    const auto s = verify_etf_gram(gram(phi));
    CAPTURE(s.m);
    CAPTURE(s.n);
    CHECK(std::abs(s.beta - welch_bound(s.m, s.n)) < 1e-9);
    CHECK(std::abs(static_cast<double>(s.m) * s.alpha - static_cast<double>(s.n)) < 1e-9);
    CHECK(max_abs_difference(gram(synthesize_from_gram(gram(phi))).dense(), gram(phi).dense()) < 1e-8);

    const SymMatrixd g = gram(phi);
    const SymMatrixd c = naimark_complement_gram(g, s);
    const double m = static_cast<double>(s.m);
    const double n = static_cast<double>(s.n);
    CHECK(max_abs_difference(m / n * g.dense() + (n - m) / n * c.dense(),
                             RectMatrixd::Identity(g.size(), g.size())) < 1e-12);
  }
}

TEST_CASE("switching preserves the verdict and the summary") {
  std::mt19937_64 rng(5);
  std::bernoulli_distribution coin;
  const RectMatrixd phi = steiner_etf(fano_plane());
  const auto base = verify_etf_gram(gram(phi));
  for (int rep = 0; rep < 25; ++rep) {
    std::vector<int> signs(28);
    for (auto& s : signs) s = coin(rng) ? 1 : -1;
    const auto switched = verify_etf_gram(gram(switch_frame(phi, SignPattern(signs))));
    CHECK(switched.m == base.m);
    CHECK(switched.alpha == base.alpha);
    CHECK(switched.beta == base.beta);
  }

  RectMatrixd not_etf = RectMatrixd::Identity(3, 3);
  not_etf(0, 1) = not_etf(1, 0) = 0.4;
  for (const auto& signs : {std::vector<int>{1, -1, 1}, std::vector<int>{-1, 1, 1}}) {
    CHECK_THROWS_AS(verify_etf_gram(switch_gram(SymMatrixd(not_etf), SignPattern(signs))), Error);
  }
}

TEST_CASE("random unit-norm frames never beat the Welch bound") {
  std::mt19937_64 rng(1234);
  for (int rep = 0; rep < 200; ++rep) {
    const Eigen::Index m = 1 + rep % 6;
    const Eigen::Index n = m + 1 + rep % 9;
    const RectMatrixd phi = oracle::random_unit_columns(rng, m, n);
    CHECK(coherence(phi) >= welch_bound(static_cast<std::size_t>(m), static_cast<std::size_t>(n)) - 1e-9);
  }
}
