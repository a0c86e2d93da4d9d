#include "c2qhr/special_functions.hpp"

#include <cmath>
#include <string>

namespace c2qhr {

namespace {

bool finite(cplx v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

void require_upper_half_plane(cplx tau) {
  if (!(tau.imag() > 0.0) || !finite(tau))
    throw Error(ErrorKind::BadDomain, "Im(tau) must be positive");
}

long floor_mod(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

// Sum over n of exp(2 pi i m x z + 2 pi i tau m x^2), x = n + j/2m, walking
// outward from the dominant term. Each side stops once the geometric bound on
// its remaining terms is below tol/2.
cplx theta_sum(long j, long m, cplx tau, cplx z, double tol, int max_terms) {
  const double md = static_cast<double>(m);
  const double shift = static_cast<double>(j) / (2.0 * md);
  const double a = 2.0 * kPi * md * tau.imag();
  const double x0 = -z.imag() / (2.0 * tau.imag());
  const long nc = std::lround(x0 - shift);

  auto term = [&](long n) {
    const double x = static_cast<double>(n) + shift;
    return std::exp(2.0 * kPi * kI * md * x * z + 2.0 * kPi * kI * tau * md * x * x);
  };

  cplx sum = term(nc);
  int count = 1;
  for (int dir : {1, -1}) {
    for (long n = nc + dir;; n += dir) {
      const cplx v = term(n);
      sum += v;
      if (++count > max_terms)
        throw Error(ErrorKind::NonConvergent, "theta sum exceeded max_terms");
      const double d = dir * (static_cast<double>(n) + shift - x0);
      if (d <= 0.0) continue;
      const double r = std::exp(-a * (2.0 * d + 1.0));
      if (std::abs(v) * r / (1.0 - r) < 0.5 * tol) break;
    }
  }
  return sum;
}

// Product prod_{n>=1} (1 - q^n)(1 + u q^n)(1 + v q^n); u = v = 0 gives the
// eta product. Stops when |partial| * (exp(S) - 1) < tol, S bounding the sum
// of all omitted factor deviations.
cplx triple_product(cplx tau, cplx u, cplx v, double tol, int max_terms) {
  const cplx q = e2pi(tau);
  const double aq = std::abs(q);
  const double weight = 1.0 + std::abs(u) + std::abs(v);
  cplx prod = 1.0;
  cplx qn = 1.0;
  double aqn = 1.0;
  for (int n = 1;; ++n) {
    qn *= q;
    aqn *= aq;
    prod *= (1.0 - qn) * (1.0 + u * qn) * (1.0 + v * qn);
    const double tail = weight * aqn * aq / (1.0 - aq);
    if (std::abs(prod) * std::expm1(tail) < tol) break;
    if (n >= max_terms) throw Error(ErrorKind::NonConvergent, "product exceeded max_terms");
  }
  return prod;
}

}  // namespace

EvalPoint::EvalPoint(cplx tau, std::vector<cplx> zs, cplx t) : tau_(tau), zs_(std::move(zs)), t_(t) {
  require_upper_half_plane(tau_);
  for (const cplx& z : zs_)
    if (!finite(z)) throw Error(ErrorKind::BadDomain, "non-finite z coordinate");
  if (!finite(t_)) throw Error(ErrorKind::BadDomain, "non-finite t");
}

ThetaIndex::ThetaIndex(long j, long m) : j_(0), m_(m) {
  if (m < 1) throw Error(ErrorKind::BadArgument, "theta level m must be positive");
  j_ = floor_mod(j, 2 * m);
}

void ThetaIndex::require_even_level() const {
  if (m_ % 2 != 0) throw Error(ErrorKind::BadArgument, "level m must be even, got " + std::to_string(m_));
}

void TruncationPolicy::validate() const {
  if (!(tail_tolerance > 0.0)) throw Error(ErrorKind::BadArgument, "tail_tolerance must be positive");
  if (max_terms < 8) throw Error(ErrorKind::BadArgument, "max_terms must be at least 8");
}

cplx theta_classical(const ThetaIndex& idx, cplx tau, cplx z, const TruncationPolicy& policy) {
  policy.validate();
  require_upper_half_plane(tau);
  return theta_sum(idx.j(), idx.m(), tau, z, policy.tail_tolerance, policy.max_terms);
}

cplx eval_theta_tilde(const ThetaIndex& idx, const EvalPoint& p, const TruncationPolicy& policy) {
  policy.validate();
  if (p.dim() != 1) throw Error(ErrorKind::BadArgument, "theta needs exactly one z-coordinate");
  const cplx pref = std::exp(kPi * kI * static_cast<double>(idx.m()) * p.t());
  const double tol = policy.tail_tolerance / std::max(std::abs(pref), 1e-300);
  return pref * theta_sum(idx.j(), idx.m(), p.tau(), p.z(), tol, policy.max_terms);
}

cplx eta_classical(cplx tau, const TruncationPolicy& policy) {
  policy.validate();
  require_upper_half_plane(tau);
  const cplx pref = e2pi(tau / 24.0);
  const double tol = policy.tail_tolerance / std::abs(pref);
  return pref * triple_product(tau, 0.0, 0.0, tol, policy.max_terms);
}

cplx eval_eta_tilde(const EvalPoint& p, const TruncationPolicy& policy) {
  const cplx pref = std::exp(kPi * kI * p.t());
  TruncationPolicy inner = policy;
  inner.tail_tolerance = policy.tail_tolerance / std::max(std::abs(pref), 1e-300);
  return pref * eta_classical(p.tau(), inner);
}

cplx vartheta_classical(int a, int b, cplx tau, cplx z, const TruncationPolicy& policy) {
  policy.validate();
  require_upper_half_plane(tau);
  if ((a != 0 && a != 1) || (b != 0 && b != 1))
    throw Error(ErrorKind::BadArgument, "vartheta characteristics must be bits");
  const double sign = b == 0 ? 1.0 : -1.0;
  // Factors (1 + s e^{2 pi i z} q^{n-(a+1)/2}) and (1 + s e^{-2 pi i z} q^{n+(a-1)/2}).
  const cplx u = sign * e2pi(z) * e2pi(-tau * static_cast<double>(a + 1) / 2.0);
  const cplx v = sign * e2pi(-z) * e2pi(tau * static_cast<double>(a - 1) / 2.0);
  const cplx pref = e2pi(tau * static_cast<double>(a) / 8.0) * std::exp(-kPi * kI * static_cast<double>(a) * (z + b / 2.0));
  const double tol = policy.tail_tolerance / std::max(std::abs(pref), 1e-300);
  return pref * triple_product(tau, u, v, tol, policy.max_terms);
}

cplx eval_vartheta_tilde(int a, int b, const EvalPoint& p, const TruncationPolicy& policy) {
  if (p.dim() != 1) throw Error(ErrorKind::BadArgument, "vartheta needs exactly one z-coordinate");
  const cplx pref = e2pi(p.t());
  TruncationPolicy inner = policy;
  inner.tail_tolerance = policy.tail_tolerance / std::max(std::abs(pref), 1e-300);
  return pref * vartheta_classical(a, b, p.tau(), p.z(), inner);
}

cplx theta_real_shift(const ThetaIndex& idx, long am, const EvalPoint& p, const TruncationPolicy& policy) {
  const double a = static_cast<double>(am) / static_cast<double>(idx.m());
  return std::exp(kPi * kI * static_cast<double>(idx.j()) * a) * eval_theta_tilde(idx, p, policy);
}

cplx theta_tau_shift(const ThetaIndex& idx, long am, const EvalPoint& p, const TruncationPolicy& policy) {
  const double md = static_cast<double>(idx.m());
  const double a = static_cast<double>(am) / md;
  const cplx pref = e2pi(-p.tau() * md * a * a / 4.0) * std::exp(-kPi * kI * md * a * p.z());
  return pref * eval_theta_tilde(ThetaIndex(idx.j() + am, idx.m()), p, policy);
}

cplx elliptic_shift_theta(const ThetaIndex& idx, ShiftKind kind, const EvalPoint& p,
                          const TruncationPolicy& policy) {
  idx.require_even_level();
  const long half = idx.m() / 2;
  const double hd = static_cast<double>(half);
  // theta~_{j,2M}(z - tau/2) = q^{-M/8} e^{pi i M z} theta~_{j-M,2M}(z), M = m/2.
  cplx value = e2pi(-p.tau() * hd / 8.0) * std::exp(kPi * kI * hd * p.z()) *
               eval_theta_tilde(ThetaIndex(idx.j() - half, idx.m()), p, policy);
  if (kind == ShiftKind::HalfPlusHalfTau) value *= std::exp(kPi * kI * static_cast<double>(idx.j()) / 2.0);
  return value;
}

}  // namespace c2qhr
