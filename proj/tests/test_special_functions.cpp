#include <doctest.h>

#include <cmath>

#include "c2qhr/modular_action.hpp"

using namespace c2qhr;

namespace {

// Independent series oracle: sum_n e^{2 pi i m x z} q^{m x^2}, x = n + j/2m, |n| <= 40.
cplx theta_series(long j, long m, cplx tau, cplx z) {
  cplx sum = 0.0;
  for (long n = -40; n <= 40; ++n) {
    const double x = static_cast<double>(n) + static_cast<double>(j) / (2.0 * static_cast<double>(m));
    sum += std::exp(2.0 * kPi * kI * (static_cast<double>(m) * x * z + static_cast<double>(m) * x * x * tau));
  }
  return sum;
}

// vartheta_ab(tau, z) = sum_n e^{pi i (n + a/2)^2 tau + 2 pi i (n + a/2)(z + b/2)}.
cplx vartheta_series(int a, int b, cplx tau, cplx z) {
  cplx sum = 0.0;
  for (long n = -40; n <= 40; ++n) {
    const double x = static_cast<double>(n) + a / 2.0;
    sum += std::exp(kPi * kI * (x * x * tau + 2.0 * x * (z + b / 2.0)));
  }
  return sum;
}

const cplx kTau{0.23, 1.1};

}  // namespace

TEST_CASE("theta values agree with a direct series") {
  CHECK(std::abs(theta_classical(ThetaIndex(1, 2), kI, 0.0) - theta_series(1, 2, kI, 0.0)) < 1e-14);
  CHECK(std::abs(theta_classical(ThetaIndex(1, 2), kI, 0.0) - 0.45679) < 1e-5);
  for (long m : {1, 2, 3, 8})
    for (long j = 0; j < 2 * m; ++j) {
      const cplx z{0.17, -0.21};
      CHECK(std::abs(theta_classical(ThetaIndex(j, m), kTau, z) - theta_series(j, m, kTau, z)) < 1e-12);
    }
}

TEST_CASE("theta index periodicity and reflection") {
  const EvalPoint p(kTau, {{0.3, 0.1}}, {0.2, 0.0});
  CHECK(std::abs(eval_theta_tilde(ThetaIndex(1, 2), p) - eval_theta_tilde(ThetaIndex(5, 2), p)) < 1e-15);
  for (long j = 0; j < 8; ++j)
    CHECK(std::abs(eval_theta_tilde(ThetaIndex(j, 4), p.with_z({-p.z()})) - eval_theta_tilde(ThetaIndex(-j, 4), p)) <
          1e-14);
}

TEST_CASE("eta at i matches the Gamma-function closed form") {
  const double closed = std::tgamma(0.25) / (2.0 * std::pow(kPi, 0.75));
  const cplx v = eval_eta_tilde(EvalPoint(kI, {}, 0.0));
  CHECK(std::abs(v - closed) < 1e-14);
  CHECK(std::abs(v - 0.7682254) < 1e-7);
}

TEST_CASE("eta~ is 2-periodic in t and picks up e^{pi i/12} under tau -> tau+1") {
  const EvalPoint p(kTau, {}, 0.0);
  CHECK(std::abs(eval_eta_tilde(p.with_t(2.0)) - eval_eta_tilde(p)) < 1e-14);
  CHECK(std::abs(eval_eta_tilde(p.with_tau(kTau + 1.0)) - root_of_unity(1, 12) * eval_eta_tilde(p)) < 1e-12);
}

TEST_CASE("vartheta triple products agree with theta series") {
  CHECK(std::abs(eval_vartheta_tilde(1, 1, EvalPoint(kTau, {0.0}, 0.3))) < 1e-14);
  const cplx v00 = eval_vartheta_tilde(0, 0, EvalPoint(kI, {0.0}, 0.0));
  CHECK(std::abs(v00 - std::pow(kPi, 0.25) / std::tgamma(0.75)) < 1e-14);
  CHECK(std::abs(v00 - 1.0864348) < 1e-7);
  for (int a : {0, 1})
    for (int b : {0, 1}) {
      const cplx z{0.31, 0.12};
      CHECK(std::abs(vartheta_classical(a, b, kTau, z) - vartheta_series(a, b, kTau, z)) < 1e-12);
    }
  const EvalPoint p(kTau, {{0.31, 0.12}}, 0.1);
  CHECK(std::abs(eval_vartheta_tilde(0, 1, p.with_z({-p.z()})) - eval_vartheta_tilde(0, 1, p)) < 1e-14);
}

TEST_CASE("elliptic shifts agree with direct evaluation") {
  const EvalPoint p(kI, {0.17}, 0.0);
  const ThetaIndex idx(1, 4);
  const cplx direct_half = eval_theta_tilde(idx, p.with_z({0.17 - kI / 2.0}));
  CHECK(std::abs(elliptic_shift_theta(idx, ShiftKind::HalfTau, p) - direct_half) < 1e-10);
  const cplx direct_both = eval_theta_tilde(idx, p.with_z({0.17 + 0.5 - kI / 2.0}));
  CHECK(std::abs(elliptic_shift_theta(idx, ShiftKind::HalfPlusHalfTau, p) - direct_both) < 1e-10);
  CHECK(std::abs(theta_real_shift(idx, 0, p) - eval_theta_tilde(idx, p)) < 1e-15);
  CHECK(std::abs(theta_tau_shift(idx, 2, p) - eval_theta_tilde(idx, p.with_z({0.17 + 0.5 * kI}))) < 1e-10);
}

TEST_CASE("domain and argument errors") {
  CHECK_THROWS_AS(EvalPoint({0.0, 0.0}, {}, 0.0), Error);
  try {
    EvalPoint({0.1, -1.0}, {}, 0.0);
    FAIL("expected BadDomain");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BadDomain);
  }
  try {
    ThetaIndex(0, 0);
    FAIL("expected BadArgument");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BadArgument);
  }
  TruncationPolicy bad;
  bad.tail_tolerance = 0.0;
  CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("tight term cap reports non-convergence") {
  TruncationPolicy tight;
  tight.max_terms = 8;
  try {
    theta_classical(ThetaIndex(0, 1), {0.0, 0.01}, 0.0, tight);
    FAIL("expected NonConvergent");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonConvergent);
  }
}

TEST_CASE("theta S-law singles out Q = z^2") {
  const EvalPoint p({0.1, 1.3}, {{0.21, 0.05}}, 0.3);
  const long m = 2;
  double best_residual = 1e300;
  double best_c = 0.0;
  for (double c : {0.25, 0.5, 1.0, 2.0}) {
    const AnomalyProfile profile{static_cast<double>(m), 1, scalar_form(1, c)};
    const auto f = [](const EvalPoint& q) { return eval_theta_tilde(ThetaIndex(1, 2), q); };
    cplx rhs = 0.0;
    for (long k = 0; k < 2 * m; ++k)
      rhs += root_of_unity(-k, m) * eval_theta_tilde(ThetaIndex(k, m), p);
    rhs *= root_of_unity(-1, 4) / std::sqrt(2.0 * m);
    const double r = std::abs(slash_action(MobiusMap::S(), profile, f, p) - rhs);
    if (r < best_residual) {
      best_residual = r;
      best_c = c;
    }
  }
  CHECK(best_c == 1.0);
  CHECK(best_residual < 1e-9);
  CHECK(theta_profile(m).quad_form == scalar_form(1, best_c));
}
