#include <doctest.h>

#include <cmath>

#include "c2qhr/qhr.hpp"

using namespace c2qhr;

namespace {

const EvalPoint kP({0.12, 1.05}, {{0.13, 0.06}}, 0.25);

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::BadArgument;
}

}  // namespace

TEST_CASE("f functions") {
  const EvalPoint p(kI, {0.2}, 0.0);
  const cplx direct = theta_classical(ThetaIndex(0, 4), kI, 0.2) + theta_classical(ThetaIndex(4, 4), kI, 0.2);
  CHECK(std::abs(f_pm(FIndex(0, 4, FSign::Plus), p) - direct) < 1e-14);
  CHECK(FIndex(-1, 4, FSign::Minus).j() == 7);
  CHECK(kind_of([] { FIndex(1, 3, FSign::Plus); }) == ErrorKind::BadArgument);
  for (long m : {2, 4, 6, 8})
    for (long j = 0; j < 2 * m; ++j)
      for (FSign s : {FSign::Plus, FSign::Minus}) {
        CHECK(f_transform_check(FIndex(j, m, s), Generator::T, kP) < 1e-10);
        CHECK(f_transform_check(FIndex(j, m, s), Generator::ST2S, kP) < 1e-10);
      }
  for (const auto& r : f_note_residuals(8, kP)) CHECK_MESSAGE(r.residual < 1e-10, r.label);
  for (const auto& r : f_odd_level_residuals(1, kP)) CHECK_MESSAGE(r.residual < 1e-10, r.label);
  CHECK(kind_of([] { f_odd_level_residuals(0, kP); }) == ErrorKind::BadArgument);
}

TEST_CASE("C2 denominators") {
  const QHRShape shape = c2_minimal_shape();
  CHECK(shape.eta_exponent() == 0.0);
  CHECK(shape.t_weight() == 4.0);
  const cplx z = kP.z();
  const cplx expected = eval_vartheta_tilde(1, 1, kP.with_z({2.0 * z})) * eval_vartheta_tilde(0, 1, kP);
  CHECK(std::abs(qhr_denominator(DenominatorKind::Plus, shape, kP) - expected) < 1e-12);
  for (DenominatorKind k : {DenominatorKind::Plus, DenominatorKind::Minus, DenominatorKind::Star}) {
    CHECK(std::abs(qhr_denominator(k, shape, kP) - qhr_denominator_c2(k, kP)) < 1e-12);
    const auto forms = qhr_denominator_forms(k, shape, kP);
    CHECK(std::abs(forms.classical - forms.tilde) < 1e-12);
  }

  const DenominatorLaw t_law = denominator_law(DenominatorKind::Plus, Generator::T, LawSource::C2ClosedForm);
  CHECK(t_law.target == DenominatorKind::Minus);
  CHECK(std::abs(t_law.phase - root_of_unity(1, 4)) < 1e-15);
  const DenominatorLaw w_law = denominator_law(DenominatorKind::Plus, Generator::ST2S, LawSource::C2ClosedForm);
  CHECK(w_law.target == DenominatorKind::Plus);
  CHECK(std::abs(w_law.phase + 1.0) < 1e-15);
  CHECK(qhr_denominator_transform_check(DenominatorKind::Plus, Generator::ST2S, kP) < 1e-10);
  CHECK(qhr_denominator_transform_check(DenominatorKind::Star, Generator::S, kP) < 1e-10);
}

TEST_CASE("denominator ST^2S law singles out the shape quadratic form") {
  const auto f = [](const EvalPoint& q) { return qhr_denominator_c2(DenominatorKind::Plus, q); };
  double best_c = 0.0, best_r = 1e300;
  for (double c : {0.5, 1.0, 1.5, 2.0, 2.5, 3.0}) {
    const AnomalyProfile profile{4.0, 2, scalar_form(1, c)};
    const double r = std::abs(slash_action(MobiusMap::W(), profile, f, kP) + f(kP));
    if (r < best_r) {
      best_r = r;
      best_c = c;
    }
  }
  CHECK(best_c == 2.5);
  CHECK(best_r < 1e-10);
  CHECK(c2_minimal_shape().anomaly_profile().quad_form == scalar_form(1, best_c));
}

TEST_CASE("unpaired half-forms are a branch ambiguity") {
  QHRShape s = c2_minimal_shape();
  s.delta_half = {{1.0}, {1.0}};
  CHECK(kind_of([&] { qhr_denominator_forms(DenominatorKind::Plus, s, kP); }) == ErrorKind::BranchAmbiguity);
}

TEST_CASE("sl2 triple") {
  const auto tr = c2_minimal_triple();
  CHECK(tr.norm2_x == Rational(1, 2));
  const auto zs = tr.shifted(kI, 0.3);
  CHECK(std::abs(zs[0] - (-0.3 - kI / 2.0)) < 1e-15);
  CHECK(std::abs(zs[1] - (0.3 - kI / 2.0)) < 1e-15);
}

TEST_CASE("QHR numerators by the two methods") {
  for (long K : {-1, 1})
    for (const auto& w : qhr_weights(K)) {
      const auto minus = qhr_numerator(FSign::Minus, w, kP);
      CHECK(std::abs(minus.shifted - minus.closed) < 1e-10);
      CHECK(std::abs(qhr_numerator_minus_alternative(w, kP) - minus.shifted) < 1e-10);
      // The plus closed form carries the opposite overall sign of the shifted evaluation.
      const auto plus = qhr_numerator(FSign::Plus, w, kP);
      CHECK(std::abs(plus.shifted + plus.closed) < 1e-10);
      CHECK(std::abs(plus.shifted) > 1e-6);
    }
}

TEST_CASE("fourfold displays") {
  const AdmissibleWeight w(-1, 1, 2);
  CHECK(qhr_fourfold_check(FSign::Plus, w, kP) < 1e-9);
  // Every display equals -4 times the shifted-argument numerator of its member.
  for (FSign s : {FSign::Plus, FSign::Minus})
    for (OrbitMember o : {OrbitMember::I, OrbitMember::II, OrbitMember::III, OrbitMember::IV}) {
      const cplx display = qhr_fourfold(s, o, w, kP);
      const cplx shifted = qhr_numerator_shifted(s, orbit_member(w, o), kP);
      CHECK(std::abs(display + 4.0 * shifted) < 1e-9);
    }
  CHECK(kind_of([] { qhr_fourfold(FSign::Plus, OrbitMember::I, AdmissibleWeight(-1, 2, 1), kP); }) ==
        ErrorKind::BadArgument);
}

TEST_CASE("QHR transform matrices") {
  CHECK(kind_of([] { qhr_transform_matrix(0, Generator::T); }) == ErrorKind::BadArgument);
  CHECK(kind_of([] { qhr_character_transform_matrix(2, Generator::ST2S); }) == ErrorKind::BadArgument);
  CHECK(kind_of([] { qhr_transform_matrix(-3, Generator::T); }) == ErrorKind::BadArgument);
  const auto M = qhr_transform_matrix(1, Generator::ST2S);
  CHECK(M.rows() == 2 * qhr_weights(1).size());
  for (std::size_t r = 0; r < M.rows(); ++r)
    for (std::size_t c = 0; c < M.cols(); ++c)
      if (M.row_labels()[r][0] != M.col_labels()[c][0]) CHECK(M.at(r, c) == cplx(0.0));
}

TEST_CASE("QHR character guard") {
  CHECK(kind_of([] { qhr_character(FSign::Plus, AdmissibleWeight(-1, 1, 2), kP.with_z({0.51 + 0.0 * kI})); }) ==
        ErrorKind::NearSingularity);
}
