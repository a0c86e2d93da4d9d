#include <doctest.h>

#include <cmath>

#include "c2qhr/characters.hpp"

using namespace c2qhr;

namespace {

const EvalPoint kP({0.15, 1.2}, {{0.11, 0.04}, {-0.07, 0.19}}, 0.3);

double best_scalar_form(const Evaluator& f, double t_weight, const std::function<cplx(const EvalPoint&)>& rhs,
                        double* residual) {
  double best = 0.0;
  *residual = 1e300;
  for (double c : {0.25, 0.5, 1.0, 2.0}) {
    const AnomalyProfile profile{t_weight, 2, scalar_form(2, c)};
    const double r = std::abs(slash_action(MobiusMap::W(), profile, f, kP) - rhs(kP));
    if (r < *residual) {
      *residual = r;
      best = c;
    }
  }
  return best;
}

}  // namespace

TEST_CASE("lattice numerator agrees with the theta product") {
  const AdmissibleWeight w(-1, 1, 2);
  const EvalPoint p(kI, {0.1, 0.23}, 0.05);
  CHECK(std::abs(numerator_lattice(w, p, 6) - numerator_theta(w, p)) < 1e-12);
  for (long K : {0, 1})
    for (const auto& v : enumerate_admissible(K))
      CHECK(std::abs(numerator_lattice(v, kP) - numerator_theta(v, kP)) < 1e-12);
}

TEST_CASE("numerator symmetries") {
  const AdmissibleWeight w(0, 3, 4);
  CHECK(std::abs(numerator_lattice(w, kP.with_z({0.0, kP.z(1)}))) < 1e-12);
  CHECK(std::abs(numerator_lattice(w, kP.with_z({-kP.z(0), kP.z(1)})) + numerator_lattice(w, kP)) < 1e-12);
  CHECK(std::abs(numerator_theta(w, kP.with_z({kP.z(0), 0.0}))) < 1e-14);
}

TEST_CASE("denominator forms and zeros") {
  const auto forms = denominator_R_forms(kP);
  CHECK(std::abs(forms.classical - forms.tilde) < 1e-12 * std::abs(forms.tilde) + 1e-14);
  CHECK(std::abs(denominator_R(kP.with_z({kP.z(0), kP.z(0)}))) < 1e-14);
}

TEST_CASE("character parity and guard") {
  const AdmissibleWeight w(1, 2, 5);
  const cplx a = character(w, kP);
  const cplx b = character(w, kP.with_z({-kP.z(0), -kP.z(1)}));
  CHECK(std::abs(a - b) < 1e-12 * std::abs(a));
  try {
    character(w, kP.with_z({0.01, 0.2}));
    FAIL("expected NearSingularity");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NearSingularity);
  }
  CHECK(lattice_distance({1.02, 0.0}, kI) == doctest::Approx(0.02));
}

TEST_CASE("ST^2S law singles out the quadratic forms of A' and R") {
  const AdmissibleWeight w(-1, 2, 3);
  const auto M = aprime_st2s_matrix(-1);
  const auto ws = enumerate_admissible(-1);
  std::size_t row = 0;
  while (!(ws[row] == w)) ++row;
  double residual = 0.0;
  const double c_num = best_scalar_form(
      [&](const EvalPoint& q) { return numerator_theta(w, q); }, 8.0,
      [&](const EvalPoint& q) {
        std::vector<cplx> v;
        for (const auto& x : ws) v.push_back(numerator_theta(x, q));
        return M.apply_row(row, v);
      },
      &residual);
  CHECK(c_num == 0.5);
  CHECK(residual < 1e-9);
  CHECK(aprime_profile(-1).quad_form == scalar_form(2, c_num));

  const double c_den = best_scalar_form([](const EvalPoint& q) { return denominator_R(q); }, 6.0,
                                        [](const EvalPoint& q) { return root_of_unity(2, 3) * denominator_R(q); },
                                        &residual);
  CHECK(c_den == 1.0);
  CHECK(residual < 1e-9);
  CHECK(r_profile().quad_form == scalar_form(2, c_den));
}

TEST_CASE("character matrices") {
  const auto M = ch_st2s_matrix(-1);
  REQUIRE(M.rows() == 4);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      const bool same_parity = (M.row_labels()[r][0] - M.col_labels()[c][0]) % 2 == 0;
      if (!same_parity) CHECK(M.at(r, c) == cplx(0.0));
    }
  const auto T = ch_t_matrix(0);
  const auto ws = enumerate_admissible(0);
  for (std::size_t r = 0; r < ws.size(); ++r) {
    const long n1 = ws[r].n1(), n2 = ws[r].n2();
    const cplx expected = -root_of_unity(1, 6) * std::exp(kPi * kI * static_cast<double>(n1 * n1 + n2 * n2) / 12.0);
    CHECK(std::abs(T.at(r, r) - expected) < 1e-13);
  }
  for (long K : {-1, 0, 1}) {
    const auto W = ch_st2s_matrix(K);
    const auto ks = enumerate_admissible(K);
    std::vector<cplx> values;
    for (const auto& x : ks) values.push_back(character(x, kP));
    for (std::size_t r = 0; r < ks.size(); ++r)
      CHECK(std::abs(character_slash(MobiusMap::W(), ks[r], kP) - W.apply_row(r, values)) < 1e-8);
  }
  CHECK_THROWS_AS(ch_st2s_matrix(-2), Error);
}
