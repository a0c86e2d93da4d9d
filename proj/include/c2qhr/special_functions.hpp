#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "c2qhr/errors.hpp"

namespace c2qhr {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr cplx kI{0.0, 1.0};

/// exp(2 pi i x); used for every q-power so that tau -> tau+1 is exact.
inline cplx e2pi(cplx x) { return std::exp(2.0 * kPi * kI * x); }

/// e^{pi i num/den} with num reduced mod 2 den before the division.
inline cplx root_of_unity(long long num, long long den) {
  long long r = num % (2 * den);
  if (r < 0) r += 2 * den;
  const double angle = kPi * static_cast<double>(r) / static_cast<double>(den);
  return {std::cos(angle), std::sin(angle)};
}

/// Point (tau, z-vector, t) with Im(tau) > 0.
class EvalPoint {
 public:
  /// Throws BadDomain unless Im(tau) > 0 and all coordinates are finite.
  EvalPoint(cplx tau, std::vector<cplx> zs, cplx t);

  cplx tau() const { return tau_; }
  const std::vector<cplx>& zs() const { return zs_; }
  cplx z(std::size_t i = 0) const { return zs_.at(i); }
  cplx t() const { return t_; }
  std::size_t dim() const { return zs_.size(); }

  EvalPoint with_z(std::vector<cplx> zs) const { return EvalPoint(tau_, std::move(zs), t_); }
  EvalPoint with_t(cplx t) const { return EvalPoint(tau_, zs_, t); }
  EvalPoint with_tau(cplx tau) const { return EvalPoint(tau, zs_, t_); }

 private:
  cplx tau_;
  std::vector<cplx> zs_;
  cplx t_;
};

/// Theta index (j mod 2m, m) stored with 0 <= j < 2m.
class ThetaIndex {
 public:
  /// Throws BadArgument if m < 1.
  ThetaIndex(long j, long m);

  long j() const { return j_; }
  long m() const { return m_; }
  /// Throws BadArgument if m is odd.
  void require_even_level() const;

 private:
  long j_;
  long m_;
};

/// Truncation control for every infinite sum or product.
struct TruncationPolicy {
  /// Absolute bound on the omitted tail.
  double tail_tolerance = 1e-17;
  /// Hard cap on retained terms (or product factors).
  int max_terms = 20000;

  /// Throws BadArgument unless tail_tolerance > 0 and max_terms >= 8.
  void validate() const;
};

/// Classical theta_{j,m}(tau, z) = sum_n e^{2 pi i m x z} q^{m x^2}, x = n + j/2m.
cplx theta_classical(const ThetaIndex& idx, cplx tau, cplx z, const TruncationPolicy& policy = {});

/// theta~_{j,m}(tau, z, t) = e^{pi i m t} theta_{j,m}(tau, z).
cplx eval_theta_tilde(const ThetaIndex& idx, const EvalPoint& p, const TruncationPolicy& policy = {});

/// Dedekind eta(tau) = q^{1/24} prod (1 - q^n).
cplx eta_classical(cplx tau, const TruncationPolicy& policy = {});

/// eta~(tau, t) = e^{pi i t} eta(tau); p carries no z-coordinates.
cplx eval_eta_tilde(const EvalPoint& p, const TruncationPolicy& policy = {});

/// Mumford vartheta_ab(tau, z) by the triple product, a, b in {0, 1}.
cplx vartheta_classical(int a, int b, cplx tau, cplx z, const TruncationPolicy& policy = {});

/// vartheta~_ab(tau, z, t) = e^{2 pi i t} vartheta_ab(tau, z).
cplx eval_vartheta_tilde(int a, int b, const EvalPoint& p, const TruncationPolicy& policy = {});

/// theta~_{j,m}(tau, z + a, t) = e^{pi i j a} theta~_{j,m}(tau, z, t), a = am/m.
cplx theta_real_shift(const ThetaIndex& idx, long am, const EvalPoint& p,
                      const TruncationPolicy& policy = {});

/// theta~_{j,m}(tau, z + a tau, t) = q^{-m a^2/4} e^{-pi i m a z} theta~_{j+am,m}(tau, z, t), a = am/m.
cplx theta_tau_shift(const ThetaIndex& idx, long am, const EvalPoint& p,
                     const TruncationPolicy& policy = {});

enum class ShiftKind { HalfTau, HalfPlusHalfTau };

/// theta~_{j,m} at z - tau/2 (HalfTau) or z + 1/2 - tau/2, computed by the shift identities.
/// Requires even m.
cplx elliptic_shift_theta(const ThetaIndex& idx, ShiftKind kind, const EvalPoint& p,
                          const TruncationPolicy& policy = {});

}  // namespace c2qhr
