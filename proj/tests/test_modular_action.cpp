#include <doctest.h>

#include <cmath>

#include "c2qhr/modular_action.hpp"

using namespace c2qhr;

namespace {

cplx direct_gauss(long m) {
  cplx sum = 0.0;
  for (long k = 0; k < 2 * m; ++k) sum += std::exp(kPi * kI * static_cast<double>(k * k) / static_cast<double>(m));
  return sum;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::BadArgument;
}

Evaluator theta_f(long j, long m) {
  return [j, m](const EvalPoint& q) { return eval_theta_tilde(ThetaIndex(j, m), q); };
}

const EvalPoint kP({-0.2, 1.15}, {{0.12, -0.07}}, 0.4);

}  // namespace

TEST_CASE("gauss sums") {
  CHECK(std::abs(gauss_sum(2) - cplx(2.0, 2.0)) < 1e-14);
  CHECK(std::abs(gauss_sum(4) - cplx(2.0 * std::sqrt(2.0), 2.0 * std::sqrt(2.0))) < 1e-13);
  for (long m = 2; m <= 40; m += 2) {
    CHECK(std::abs(gauss_sum(m) - direct_gauss(m)) < 1e-12);
    CHECK(std::abs(gauss_sum(m) - cplx(1.0, 1.0) * std::sqrt(2.0 * m)) < 1e-12);
  }
  CHECK(kind_of([] { gauss_sum(3); }) == ErrorKind::BadArgument);
  CHECK(kind_of([] { gauss_sum(0); }) == ErrorKind::BadArgument);
}

TEST_CASE("vanishing sums") {
  CHECK(std::abs(vanishing_sum_check(2, 1)) < 1e-12);
  CHECK(std::abs(vanishing_sum_check(4, 0) - gauss_sum(4)) < 1e-12);
  CHECK(std::abs(vanishing_sum_check(4, 2) - root_of_unity(-1, 4) * gauss_sum(4)) < 1e-12);
}

TEST_CASE("slash action basics") {
  CHECK(std::abs(slash_action(MobiusMap::identity(), theta_profile(2), theta_f(1, 2), kP) -
                 eval_theta_tilde(ThetaIndex(1, 2), kP)) < 1e-15);
  const EvalPoint q({0.1, 0.9}, {}, 0.3);
  const auto eta = [](const EvalPoint& x) { return eval_eta_tilde(x); };
  CHECK(std::abs(slash_action(MobiusMap::S(), eta_profile(), eta, q) - root_of_unity(-1, 4) * eta(q)) < 1e-10);

  cplx rhs = 0.0;
  for (long k = 0; k < 4; ++k) rhs += root_of_unity(-k, 2) * eval_theta_tilde(ThetaIndex(k, 2), kP);
  rhs *= root_of_unity(-1, 4) / 2.0;
  CHECK(std::abs(slash_action(MobiusMap::S(), theta_profile(2), theta_f(1, 2), kP) - rhs) < 1e-9);
}

TEST_CASE("slash cocycle") {
  const MobiusMap maps[] = {MobiusMap::S(), MobiusMap::T(), MobiusMap::W(), MobiusMap(2, 1, 1, 1),
                            MobiusMap(1, 0, -2, 1)};
  for (const auto& A : maps)
    for (const auto& B : maps) {
      const MobiusMap AB = A * B;
      if (AB.c() == 0 && AB.d() < 0) continue;
      const double sigma = slash_cocycle_sign(A, B, kP.tau(), 1);
      CHECK(std::abs(sigma) == 1.0);
      const cplx lhs = slash_action(B, theta_profile(2), slashed(A, theta_profile(2), theta_f(1, 2)), kP);
      const cplx rhs = sigma * slash_action(AB, theta_profile(2), theta_f(1, 2), kP);
      CHECK(std::abs(lhs - rhs) < 1e-9);
      CHECK(slash_cocycle_sign(A, B, kP.tau(), 2) == 1.0);
    }
}

TEST_CASE("negative automorphy factor is a branch ambiguity for odd ell") {
  CHECK(kind_of([] { slash_action(MobiusMap::minus_identity(), theta_profile(2), theta_f(1, 2), kP); }) ==
        ErrorKind::BranchAmbiguity);
}

TEST_CASE("theta transform matrices") {
  for (long m : {1, 2, 5}) {
    const auto T = theta_transform_matrix(m, Generator::T);
    for (long j = 0; j < 2 * m; ++j)
      for (long k = 0; k < 2 * m; ++k) {
        const cplx expected = j == k ? root_of_unity(j * j, 2 * m) : 0.0;
        CHECK(std::abs(T.at(j, k) - expected) < 1e-15);
      }
  }
  const auto S2 = theta_transform_matrix(2, Generator::S);
  CHECK(std::abs(S2.at(0, 0) - root_of_unity(-1, 4) / 2.0) < 1e-15);

  for (long m : {2, 4, 6, 8}) {
    const auto W = theta_transform_matrix(m, Generator::ST2S);
    const auto D = theta_st2s_matrix_double_sum(m);
    std::vector<cplx> basis;
    for (long k = 0; k < 2 * m; ++k) basis.push_back(eval_theta_tilde(ThetaIndex(k, m), kP));
    for (long j = 0; j < 2 * m; ++j) {
      for (long k = 0; k < 2 * m; ++k) {
        CHECK(std::abs(W.at(j, k) - D.at(j, k)) < 1e-12);
        if ((j - k) % 2 != 0) CHECK(W.at(j, k) == cplx(0.0));
      }
      const cplx slashed_value = slash_action(MobiusMap::W(), theta_profile(m), theta_f(j, m), kP);
      CHECK(std::abs(slashed_value - W.apply_row(j, basis)) < 1e-9);
    }
  }
  CHECK(kind_of([] { theta_transform_matrix(3, Generator::ST2S); }) == ErrorKind::BadArgument);
}

TEST_CASE("Gamma0(2) decomposition") {
  CHECK(gamma0_decompose(MobiusMap::T()) == Word{{Syllable::Letter::T, 1}});
  CHECK(gamma0_decompose(MobiusMap(-1, 0, 2, -1)) == Word{{Syllable::Letter::W, 1}});
  const MobiusMap g(1, 0, 2, 1);
  CHECK(recompose(gamma0_decompose(g)) == g);
  CHECK(to_string(Word{{Syllable::Letter::MinusI, 1}, {Syllable::Letter::W, -1}}) == "[-I, W^-1]");
  CHECK(recompose({{Syllable::Letter::MinusI, 1}, {Syllable::Letter::W, -1}}) == g);

  long checked = 0;
  for (long a = -9; a <= 9; ++a)
    for (long c = -8; c <= 8; c += 2)
      for (long b = -9; b <= 9; ++b) {
        if (a == 0) continue;
        if ((1 + b * c) % a != 0) continue;
        const MobiusMap h(a, b, c, (1 + b * c) / a);
        const Word w = gamma0_decompose(h);
        CHECK(recompose(w) == h);
        CHECK(w.size() <= gamma0_word_bound(h));
        ++checked;
      }
  CHECK(checked > 100);

  CHECK(kind_of([] { gamma0_decompose(MobiusMap::S()); }) == ErrorKind::NotInGamma0);
  CHECK(kind_of([] { MobiusMap(1, 1, 1, 1); }) == ErrorKind::BadArgument);
}
