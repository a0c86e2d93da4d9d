#pragma once

#include <array>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "c2qhr/errors.hpp"

namespace c2qhr {

using Rational = boost::rational<long long>;

/// Coefficients over the basis (Lambda_0, alpha_1, alpha_2, delta).
using HVector = std::array<Rational, 4>;

HVector operator+(const HVector& x, const HVector& y);
HVector operator-(const HVector& x, const HVector& y);
HVector operator*(const Rational& s, const HVector& x);

/// Root datum of C_2^{(1)} with exact inner products.
class RootDatum {
 public:
  /// The unique instance; its invariants are asserted on first use.
  static const RootDatum& c2();

  /// Invariant form (x|y) on the basis (Lambda_0, alpha_1, alpha_2, delta).
  Rational inner(const HVector& x, const HVector& y) const;

  HVector lambda0() const { return {1, 0, 0, 0}; }
  HVector delta() const { return {0, 0, 0, 1}; }
  /// alpha_i for i = 0, 1, 2; alpha_0 = delta - 2 alpha_1 - alpha_2.
  HVector alpha(int i) const;
  /// alpha^vee = 2 alpha/(alpha|alpha).
  HVector coroot(const HVector& root) const;
  /// rho = 3 Lambda_0 + 2 alpha_1 + (3/2) alpha_2.
  HVector rho() const;
  /// (rho|delta) = 3.
  Rational dual_coxeter() const { return inner(rho(), delta()); }
  /// alpha_1, alpha_2, alpha_1+alpha_2, 2alpha_1+alpha_2.
  std::vector<HVector> positive_finite_roots() const;

  /// ((alpha_i|alpha_j)) for i, j = 0..2.
  std::array<std::array<Rational, 3>, 3> root_gram() const;
  /// ((alpha_i^vee|alpha_j^vee)).
  std::array<std::array<Rational, 3>, 3> coroot_gram() const;

 private:
  RootDatum();
  std::array<std::array<Rational, 4>, 4> form_;
};

/// u = 1 admissible weight Lambda^{[K]}_{n1,n2}.
class AdmissibleWeight {
 public:
  /// Throws BadArgument unless K >= -1, 1 <= n_i < 2(K+3) and n1 - n2 is odd.
  AdmissibleWeight(long K, long n1, long n2);

  long K() const { return K_; }
  long n1() const { return n1_; }
  long n2() const { return n2_; }
  /// m = 2(K+3).
  long level_m() const { return 2 * (K_ + 3); }
  /// K Lambda_0 + ((n1-1)/2) alpha_1 + ((n2-3)/2)(alpha_1+alpha_2).
  HVector lambda() const;

  bool operator==(const AdmissibleWeight&) const = default;
  auto operator<=>(const AdmissibleWeight& o) const = default;

 private:
  long K_, n1_, n2_;
};

/// All (n1, n2) with 1 <= n_i < 2(K+3), n1 - n2 odd, lexicographic; empty for K < -1.
std::vector<AdmissibleWeight> enumerate_admissible(long K);

struct Verdict {
  bool pass = true;
  std::vector<std::string> reasons;
};

/// Clauses: u odd, p = u(K+3) integral, p >= 2, gcd(u, p) = 1, 1 <= n_i < 2p, n1 - n2 odd.
Verdict check_admissibility_constraints(long u, const Rational& K, long n1, long n2);

/// Distinct members of {(n1,n2), (m-n1,n2), (n1,m-n2), (m-n1,m-n2)}, sorted.
std::vector<AdmissibleWeight> weight_symmetry_orbit(const AdmissibleWeight& w);

struct LambdaRhoData {
  /// (K+3, n1/2, n2/2) over (Lambda_0, alpha_1, alpha_1+alpha_2).
  std::array<Rational, 3> coefficients;
  /// Lambda + rho over (Lambda_0, alpha_1, alpha_2, delta).
  HVector vector;
  /// |Lambda+rho|^2 = (n1^2+n2^2)/4.
  Rational norm2;
};

LambdaRhoData lambda_rho_data(const AdmissibleWeight& w);

}  // namespace c2qhr
