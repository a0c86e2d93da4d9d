#include "c2qhr/admissible.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace c2qhr {

HVector operator+(const HVector& x, const HVector& y) {
  HVector r;
  for (std::size_t i = 0; i < 4; ++i) r[i] = x[i] + y[i];
  return r;
}

HVector operator-(const HVector& x, const HVector& y) {
  HVector r;
  for (std::size_t i = 0; i < 4; ++i) r[i] = x[i] - y[i];
  return r;
}

HVector operator*(const Rational& s, const HVector& x) {
  HVector r;
  for (std::size_t i = 0; i < 4; ++i) r[i] = s * x[i];
  return r;
}

RootDatum::RootDatum() {
  // Basis (Lambda_0, alpha_1, alpha_2, delta).
  form_ = {{{0, 0, 0, 1}, {0, 1, -1, 0}, {0, -1, 2, 0}, {1, 0, 0, 0}}};

  const std::array<std::array<Rational, 3>, 3> roots{{{2, -1, 0}, {-1, 1, -1}, {0, -1, 2}}};
  const std::array<std::array<Rational, 3>, 3> coroots{{{2, -2, 0}, {-2, 4, -2}, {0, -2, 2}}};
  if (root_gram() != roots) throw std::logic_error("C2 root Gram matrix mismatch");
  if (coroot_gram() != coroots) throw std::logic_error("C2 coroot Gram matrix mismatch");
  const HVector a1 = alpha(1), a12 = alpha(1) + alpha(2);
  if (inner(a1, a12) != Rational(0) || inner(a1, a1) != Rational(1) || inner(a12, a12) != Rational(1))
    throw std::logic_error("C2 short-root relations fail");
  if (dual_coxeter() != Rational(3) || inner(rho(), rho()) != Rational(5, 2))
    throw std::logic_error("C2 rho data mismatch");
  for (int i = 0; i < 3; ++i)
    if (inner(rho(), coroot(alpha(i))) != Rational(1)) throw std::logic_error("rho is not the Weyl vector");
}

const RootDatum& RootDatum::c2() {
  static const RootDatum datum;
  return datum;
}

Rational RootDatum::inner(const HVector& x, const HVector& y) const {
  Rational s = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (x[i] != Rational(0) && y[j] != Rational(0)) s += x[i] * form_[i][j] * y[j];
  return s;
}

HVector RootDatum::alpha(int i) const {
  switch (i) {
    case 0: return {0, -2, -1, 1};
    case 1: return {0, 1, 0, 0};
    case 2: return {0, 0, 1, 0};
  }
  throw Error(ErrorKind::BadArgument, "simple root index must be 0, 1 or 2");
}

HVector RootDatum::coroot(const HVector& root) const {
  const Rational n = inner(root, root);
  if (n == Rational(0)) throw Error(ErrorKind::BadArgument, "coroot of an isotropic vector");
  return Rational(2) / n * root;
}

HVector RootDatum::rho() const { return {3, 2, Rational(3, 2), 0}; }

std::vector<HVector> RootDatum::positive_finite_roots() const {
  return {alpha(1), alpha(2), alpha(1) + alpha(2), Rational(2) * alpha(1) + alpha(2)};
}

std::array<std::array<Rational, 3>, 3> RootDatum::root_gram() const {
  std::array<std::array<Rational, 3>, 3> g;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) g[i][j] = inner(alpha(i), alpha(j));
  return g;
}

std::array<std::array<Rational, 3>, 3> RootDatum::coroot_gram() const {
  std::array<std::array<Rational, 3>, 3> g;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) g[i][j] = inner(coroot(alpha(i)), coroot(alpha(j)));
  return g;
}

AdmissibleWeight::AdmissibleWeight(long K, long n1, long n2) : K_(K), n1_(n1), n2_(n2) {
  const long m = 2 * (K + 3);
  if (K < -1) throw Error(ErrorKind::BadArgument, "level K must be at least -1");
  if (n1 < 1 || n1 >= m || n2 < 1 || n2 >= m)
    throw Error(ErrorKind::BadArgument, "n1, n2 must lie in [1, " + std::to_string(m - 1) + "]");
  if ((n1 - n2) % 2 == 0) throw Error(ErrorKind::BadArgument, "n1 - n2 must be odd (parity)");
}

HVector AdmissibleWeight::lambda() const {
  const Rational c1(n1_ - 1, 2), c2(n2_ - 3, 2);
  return {Rational(K_), c1 + c2, c2, 0};
}

std::vector<AdmissibleWeight> enumerate_admissible(long K) {
  std::vector<AdmissibleWeight> out;
  if (K < -1) return out;
  const long m = 2 * (K + 3);
  for (long n1 = 1; n1 < m; ++n1)
    for (long n2 = 1; n2 < m; ++n2)
      if ((n1 - n2) % 2 != 0) out.emplace_back(K, n1, n2);
  return out;
}

Verdict check_admissibility_constraints(long u, const Rational& K, long n1, long n2) {
  Verdict v;
  auto fail = [&v](std::string reason) {
    v.pass = false;
    v.reasons.push_back(std::move(reason));
  };
  if (u <= 0 || u % 2 == 0) fail("u must be a positive odd integer");
  const Rational p = Rational(u) * (K + 3);
  if (p.denominator() != 1) {
    fail("u(K+3) must be an integer");
  } else {
    const long long pn = p.numerator();
    if (pn < 2) fail("u(K+3) must be at least 2");
    if (u > 0 && pn > 0 && std::gcd(static_cast<long long>(u), pn) != 1) fail("gcd(u, u(K+3)) must be 1");
    if (n1 < 1 || n1 >= 2 * pn) fail("n1 must satisfy 1 <= n1 < 2u(K+3)");
    if (n2 < 1 || n2 >= 2 * pn) fail("n2 must satisfy 1 <= n2 < 2u(K+3)");
  }
  if ((n1 - n2) % 2 == 0) fail("n1 - n2 must be odd (parity)");
  return v;
}

std::vector<AdmissibleWeight> weight_symmetry_orbit(const AdmissibleWeight& w) {
  const long m = w.level_m();
  std::vector<AdmissibleWeight> out{w, {w.K(), m - w.n1(), w.n2()}, {w.K(), w.n1(), m - w.n2()},
                                    {w.K(), m - w.n1(), m - w.n2()}};
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

LambdaRhoData lambda_rho_data(const AdmissibleWeight& w) {
  const RootDatum& R = RootDatum::c2();
  LambdaRhoData d;
  d.coefficients = {Rational(w.K() + 3), Rational(w.n1(), 2), Rational(w.n2(), 2)};
  d.vector = w.lambda() + R.rho();
  const HVector expected = d.coefficients[0] * R.lambda0() + d.coefficients[1] * R.alpha(1) +
                           d.coefficients[2] * (R.alpha(1) + R.alpha(2));
  if (d.vector != expected) throw std::logic_error("Lambda + rho coefficient mismatch");
  d.norm2 = R.inner(d.vector, d.vector);
  return d;
}

}  // namespace c2qhr
