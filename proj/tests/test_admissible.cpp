#include <doctest.h>

#include "c2qhr/admissible.hpp"

using namespace c2qhr;

namespace {

std::vector<std::pair<long, long>> pairs_of(const std::vector<AdmissibleWeight>& ws) {
  std::vector<std::pair<long, long>> out;
  for (const auto& w : ws) out.emplace_back(w.n1(), w.n2());
  return out;
}

}  // namespace

TEST_CASE("enumeration at small levels") {
  CHECK(enumerate_admissible(-2).empty());
  const std::vector<std::pair<long, long>> expected{{1, 2}, {2, 1}, {2, 3}, {3, 2}};
  CHECK(pairs_of(enumerate_admissible(-1)) == expected);
  CHECK(enumerate_admissible(0).size() == 12);
}

TEST_CASE("enumeration matches a brute-force count of the admissibility clauses") {
  for (long K = -1; K <= 6; ++K) {
    std::size_t brute = 0;
    for (long n1 = -3; n1 <= 4 * (K + 3); ++n1)
      for (long n2 = -3; n2 <= 4 * (K + 3); ++n2)
        if (check_admissibility_constraints(1, Rational(K), n1, n2).pass) ++brute;
    CHECK(enumerate_admissible(K).size() == brute);
    CHECK(brute == static_cast<std::size_t>(2 * (K + 2) * (K + 3)));
  }
}

TEST_CASE("admissibility verdicts") {
  const Verdict even_u = check_admissibility_constraints(2, Rational(1), 1, 2);
  CHECK_FALSE(even_u.pass);
  CHECK_FALSE(even_u.reasons.empty());
  CHECK_FALSE(check_admissibility_constraints(1, Rational(-2), 1, 2).pass);
  CHECK(check_admissibility_constraints(1, Rational(0), 1, 2).pass);
  CHECK_FALSE(check_admissibility_constraints(1, Rational(0), 1, 3).pass);
  CHECK_THROWS_AS(AdmissibleWeight(-1, 1, 3), Error);
  CHECK_THROWS_AS(AdmissibleWeight(-1, 0, 1), Error);
  CHECK_THROWS_AS(AdmissibleWeight(-2, 1, 2), Error);
}

TEST_CASE("symmetry orbit") {
  const auto orbit = weight_symmetry_orbit(AdmissibleWeight(-1, 1, 2));
  const std::vector<std::pair<long, long>> expected{{1, 2}, {3, 2}};
  CHECK(pairs_of(orbit) == expected);
  CHECK(weight_symmetry_orbit(AdmissibleWeight(1, 3, 2)).size() == 4);
}

TEST_CASE("Lambda + rho data") {
  const auto d = lambda_rho_data(AdmissibleWeight(-1, 1, 2));
  CHECK(d.norm2 == Rational(5, 4));
  CHECK(d.coefficients[0] == Rational(2));
  CHECK(d.coefficients[1] == Rational(1, 2));
  CHECK(d.coefficients[2] == Rational(1));
  CHECK(lambda_rho_data(AdmissibleWeight(-1, 3, 2)).norm2 == Rational(13, 4));

  const RootDatum& R = RootDatum::c2();
  const AdmissibleWeight w(2, 5, 8);
  const HVector lr = w.lambda() + R.rho();
  CHECK(lr == lambda_rho_data(w).vector);
  CHECK(R.inner(lr, lr) == lambda_rho_data(w).norm2);
}

TEST_CASE("root datum") {
  const RootDatum& R = RootDatum::c2();
  CHECK(R.dual_coxeter() == Rational(3));
  CHECK(R.inner(R.rho(), R.rho()) == Rational(5, 2));
  CHECK(R.inner(R.alpha(1), R.alpha(1)) == Rational(1));
  CHECK(R.inner(R.alpha(2), R.alpha(2)) == Rational(2));
  CHECK(R.inner(R.alpha(1), R.alpha(2)) == Rational(-1));
  const HVector theta = Rational(2) * R.alpha(1) + R.alpha(2);
  CHECK(R.inner(R.delta(), R.delta()) == Rational(0));
  CHECK(R.alpha(0) == R.delta() - theta);
  CHECK(R.coroot(R.alpha(1) + R.alpha(2)) == R.coroot(R.alpha(1)) + Rational(2) * R.coroot(R.alpha(2)));
  CHECK(R.positive_finite_roots().size() == 4);
}
