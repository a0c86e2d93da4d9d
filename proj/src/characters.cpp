#include "c2qhr/characters.hpp"

#include <algorithm>
#include <cmath>

namespace c2qhr {

namespace {

EvalPoint single(const EvalPoint& p, cplx z) { return EvalPoint(p.tau(), {z}, p.t()); }

void require_two_z(const EvalPoint& p) {
  if (p.dim() != 2) throw Error(ErrorKind::BadArgument, "C2 functions need exactly two z-coordinates");
}

cplx theta_difference(long n, long m, const EvalPoint& p1, const TruncationPolicy& policy) {
  return eval_theta_tilde(ThetaIndex(n, m), p1, policy) - eval_theta_tilde(ThetaIndex(-n, m), p1, policy);
}

std::vector<TransformMatrix::Label> weight_labels(long K) {
  std::vector<TransformMatrix::Label> labels;
  for (const AdmissibleWeight& w : enumerate_admissible(K)) labels.push_back(weight_label(w));
  return labels;
}

// Kernel e^{-pi i(n1^2+n2^2+k1^2+k2^2)/8M} sin(pi n1 k1/4M) sin(pi n2 k2/4M) on matching parities.
TransformMatrix sine_kernel_matrix(long K, cplx prefactor) {
  const auto labels = weight_labels(K);
  if (labels.empty()) throw Error(ErrorKind::BadArgument, "level K must be at least -1");
  const long long M = K + 3;
  TransformMatrix out(labels, labels);
  for (std::size_t r = 0; r < labels.size(); ++r)
    for (std::size_t c = 0; c < labels.size(); ++c) {
      const long long n1 = labels[r][0], n2 = labels[r][1], k1 = labels[c][0], k2 = labels[c][1];
      if ((n1 - k1) % 2 != 0 || (n2 - k2) % 2 != 0) continue;
      const cplx phase = root_of_unity(-(n1 * n1 + n2 * n2 + k1 * k1 + k2 * k2), 8 * M);
      const double s = std::sin(kPi * static_cast<double>(n1 * k1) / static_cast<double>(4 * M)) *
                       std::sin(kPi * static_cast<double>(n2 * k2) / static_cast<double>(4 * M));
      out.at(r, c) = prefactor * phase * s;
    }
  return out;
}

TransformMatrix diagonal_phase_matrix(long K, cplx prefactor) {
  const auto labels = weight_labels(K);
  if (labels.empty()) throw Error(ErrorKind::BadArgument, "level K must be at least -1");
  const long long M = K + 3;
  TransformMatrix out(labels, labels);
  for (std::size_t r = 0; r < labels.size(); ++r) {
    const long long n1 = labels[r][0], n2 = labels[r][1];
    out.at(r, r) = prefactor * root_of_unity(n1 * n1 + n2 * n2, 4 * M);
  }
  return out;
}

}  // namespace

AnomalyProfile aprime_profile(long K) {
  return {4.0 * static_cast<double>(K + 3), 2, scalar_form(2, 0.5)};
}

AnomalyProfile r_profile() { return {6.0, 2, scalar_form(2, 1.0)}; }

TransformMatrix::Label weight_label(const AdmissibleWeight& w) { return {w.n1(), w.n2()}; }

cplx numerator_lattice(const AdmissibleWeight& w, const EvalPoint& p, long window, const TruncationPolicy& policy) {
  policy.validate();
  require_two_z(p);
  if (window < 1) throw Error(ErrorKind::BadArgument, "lattice window must be positive");
  const RootDatum& R = RootDatum::c2();
  const long long M = w.K() + 3;

  // Gram matrix of the basis and the coordinates of h/(2 pi i):
  // -tau Lambda_0 + z1 alpha_1 + z2 (alpha_1 + alpha_2) + 2t delta.
  const HVector basis[4] = {R.lambda0(), R.alpha(1), R.alpha(2), R.delta()};
  double gram[4][4];
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) gram[i][j] = boost::rational_cast<double>(R.inner(basis[i], basis[j]));
  const cplx h[4] = {-p.tau(), p.z(0) + p.z(1), p.z(1), 2.0 * p.t()};
  cplx gh[4];
  for (int i = 0; i < 4; ++i) {
    gh[i] = 0.0;
    for (int j = 0; j < 4; ++j) gh[i] += gram[i][j] * h[j];
  }

  // lambda = M Lambda_0 + beta - (|beta|^2/2M) delta, beta = 2M(x alpha_1 + y (alpha_1+alpha_2)).
  const HVector a1 = R.alpha(1), a12 = R.alpha(1) + R.alpha(2);
  auto term = [&](const Rational& x, const Rational& y) {
    const HVector beta = Rational(2 * M) * x * a1 + Rational(2 * M) * y * a12;
    const HVector lambda = Rational(M) * R.lambda0() + beta - (R.inner(beta, beta) / Rational(2 * M)) * R.delta();
    cplx exponent = 0.0;
    for (int i = 0; i < 4; ++i) exponent += boost::rational_cast<double>(lambda[i]) * gh[i];
    return e2pi(exponent);
  };

  cplx sum = 0.0;
  double shell = 0.0;
  for (long j = -window; j <= window; ++j)
    for (long k = -window; k <= window; ++k) {
      const Rational x = Rational(j) + Rational(w.n1(), 4 * M);
      const Rational y = Rational(k) + Rational(w.n2(), 4 * M);
      const cplx v = term(x, y) - term(-x, y) - term(x, -y) + term(-x, -y);
      sum += v;
      if (std::labs(j) == window || std::labs(k) == window) shell = std::max(shell, std::abs(v));
    }
  if (shell > policy.tail_tolerance)
    throw Error(ErrorKind::NonConvergent, "lattice window too small: outer shell term " + std::to_string(shell));
  return sum;
}

cplx numerator_theta(const AdmissibleWeight& w, const EvalPoint& p, const TruncationPolicy& policy) {
  require_two_z(p);
  const long m = w.level_m();
  return theta_difference(w.n1(), m, single(p, p.z(0)), policy) *
         theta_difference(w.n2(), m, single(p, p.z(1)), policy);
}

DenominatorForms denominator_R_forms(const EvalPoint& p, const TruncationPolicy& policy) {
  require_two_z(p);
  const cplx z1 = p.z(0), z2 = p.z(1), tau = p.tau();
  const cplx args[4] = {z1, z2, z1 - z2, z1 + z2};

  DenominatorForms out;
  const cplx eta = eta_classical(tau, policy);
  const cplx eta_t = eval_eta_tilde(EvalPoint(tau, {}, p.t()), policy);
  if (eta == 0.0 || eta_t == 0.0) throw Error(ErrorKind::DivideByZero, "eta vanished numerically");
  cplx classical = std::exp(6.0 * kPi * kI * p.t()) / (eta * eta);
  cplx tilde = 1.0 / (eta_t * eta_t);
  for (const cplx& a : args) {
    classical *= vartheta_classical(1, 1, tau, a, policy);
    tilde *= eval_vartheta_tilde(1, 1, single(p, a), policy);
  }
  out.classical = classical;
  out.tilde = tilde;
  return out;
}

cplx denominator_R(const EvalPoint& p, const TruncationPolicy& policy) { return denominator_R_forms(p, policy).tilde; }

double lattice_distance(cplx z, cplx tau) {
  const double b0 = std::round(z.imag() / tau.imag());
  double best = std::abs(z);
  for (double b = b0 - 1; b <= b0 + 1; b += 1.0) {
    const cplx u = z - b * tau;
    const double a0 = std::round(u.real());
    for (double a = a0 - 1; a <= a0 + 1; a += 1.0) best = std::min(best, std::abs(u - a));
  }
  return best;
}

void require_character_guard(const EvalPoint& p) {
  require_two_z(p);
  const cplx z1 = p.z(0), z2 = p.z(1);
  const cplx args[4] = {z1, z2, z1 - z2, z1 + z2};
  const char* names[4] = {"z1", "z2", "z1-z2", "z1+z2"};
  for (int i = 0; i < 4; ++i)
    if (lattice_distance(args[i], p.tau()) < kSingularityGuard)
      throw Error(ErrorKind::NearSingularity, std::string(names[i]) + " is within the guard of Z + Z tau");
}

cplx character(const AdmissibleWeight& w, const EvalPoint& p, const TruncationPolicy& policy) {
  require_character_guard(p);
  const cplx den = denominator_R(p, policy);
  if (den == 0.0) throw Error(ErrorKind::DivideByZero, "denominator R vanished");
  return numerator_theta(w, p, policy) / den;
}

cplx character_slash(const MobiusMap& g, const AdmissibleWeight& w, const EvalPoint& p,
                     const TruncationPolicy& policy) {
  require_character_guard(p);
  const cplx num = slash_action(g, aprime_profile(w.K()), [&](const EvalPoint& q) { return numerator_theta(w, q, policy); }, p);
  const cplx den = slash_action(g, r_profile(), [&](const EvalPoint& q) { return denominator_R(q, policy); }, p);
  if (den == 0.0) throw Error(ErrorKind::DivideByZero, "transformed denominator vanished");
  return num / den;
}

TransformMatrix aprime_t_matrix(long K) { return diagonal_phase_matrix(K, 1.0); }

TransformMatrix aprime_st2s_matrix(long K) {
  const double M = static_cast<double>(K + 3);
  const cplx g = gauss_sum(2 * (K + 3));
  return sine_kernel_matrix(K, g * g / (4.0 * M * M));
}

TransformMatrix ch_t_matrix(long K) { return diagonal_phase_matrix(K, -root_of_unity(1, 6)); }

TransformMatrix ch_st2s_matrix(long K) {
  const double M = static_cast<double>(K + 3);
  const cplx g = gauss_sum(2 * (K + 3));
  return sine_kernel_matrix(K, -g * g / (4.0 * M * M) * root_of_unity(1, 3));
}

}  // namespace c2qhr
