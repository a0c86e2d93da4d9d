#include "c2qhr/qhr.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>

namespace c2qhr {

namespace {

long long floor_mod(long long a, long long n) {
  long long r = a % n;
  return r < 0 ? r + n : r;
}

cplx exp_pi_i(double x) { return std::exp(kPi * kI * x); }

// (-1)^n for an integer n.
double parity_sign(long long n) { return floor_mod(n, 2) == 0 ? 1.0 : -1.0; }

void require_odd_level(long K) {
  if (K < -1 || floor_mod(K, 2) == 0)
    throw Error(ErrorKind::BadArgument, "QHR transforms need odd K >= -1, got " + std::to_string(K));
}

void require_one_z(const EvalPoint& p) {
  if (p.dim() != 1) throw Error(ErrorKind::BadArgument, "QHR functions need exactly one z-coordinate");
}

// Values of f^{(+)} and f^{(-)} for every j mod 2m, at p or slashed.
struct FTable {
  long m;
  std::array<std::vector<cplx>, 2> v;

  cplx at(int s, long long j) const { return v[s > 0 ? 0 : 1][floor_mod(j, 2 * m)]; }
};

FTable f_table(long m, const EvalPoint& p, const TruncationPolicy& policy, const MobiusMap* g = nullptr) {
  FTable t{m, {}};
  const AnomalyProfile prof = theta_profile(m);
  std::vector<cplx> th(2 * m);
  for (long j = 0; j < 2 * m; ++j) {
    const ThetaIndex idx(j, m);
    auto f = [&](const EvalPoint& q) { return eval_theta_tilde(idx, q, policy); };
    th[j] = g ? slash_action(*g, prof, f, p) : f(p);
  }
  for (int s : {1, -1}) {
    auto& out = t.v[s > 0 ? 0 : 1];
    out.resize(2 * m);
    for (long j = 0; j < 2 * m; ++j) out[j] = th[j] + static_cast<double>(s) * th[(j + m) % (2 * m)];
  }
  return t;
}

// Running maximum per label, preserving first-seen order.
class ResidualSink {
 public:
  void add(const std::string& label, double r) {
    auto it = index_.find(label);
    if (it == index_.end()) {
      index_.emplace(label, out_.size());
      out_.push_back({label, r});
    } else {
      out_[it->second].residual = std::max(out_[it->second].residual, r);
    }
  }
  std::vector<LabelledResidual> take() { return std::move(out_); }

 private:
  std::map<std::string, std::size_t> index_;
  std::vector<LabelledResidual> out_;
};

int vartheta_b_of(DenominatorKind kind, int& a) {
  switch (kind) {
    case DenominatorKind::Plus: a = 0; return 1;
    case DenominatorKind::Minus: a = 0; return 0;
    case DenominatorKind::Star: a = 1; return 0;
  }
  a = 0;
  return 0;
}

cplx dot(const std::vector<double>& a, const std::vector<cplx>& zs) {
  cplx s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * zs[i];
  return s;
}

cplx int_power(cplx x, long e) {
  cplx out = 1.0;
  for (long i = 0; i < std::labs(e); ++i) out *= x;
  return e < 0 ? 1.0 / out : out;
}

// Indices into delta_half grouped as (a, -a) pairs; throws BranchAmbiguity otherwise.
std::vector<std::size_t> half_pair_representatives(const QHRShape& shape) {
  std::vector<bool> used(shape.delta_half.size(), false);
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < shape.delta_half.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    bool found = false;
    for (std::size_t j = i + 1; j < shape.delta_half.size() && !found; ++j) {
      if (used[j]) continue;
      bool negated = true;
      for (std::size_t c = 0; c < shape.delta_half[i].size(); ++c)
        if (shape.delta_half[i][c] != -shape.delta_half[j][c]) negated = false;
      if (negated) {
        used[j] = true;
        found = true;
      }
    }
    if (!found)
      throw Error(ErrorKind::BranchAmbiguity, "Delta_1/2 forms do not pair as (a, -a); square root is ambiguous");
    reps.push_back(i);
  }
  return reps;
}

long integral_eta_exponent(const QHRShape& shape) {
  const double e = shape.eta_exponent();
  if (e != std::round(e)) throw Error(ErrorKind::BranchAmbiguity, "eta exponent is not an integer");
  return std::lround(e);
}

// Display ingredients of the fourfold expansions at level 2M.
struct FourfoldParts {
  cplx X1, Y1, X2, Y2, U1, V1, ph;
};

FourfoldParts fourfold_parts(const AdmissibleWeight& w, const EvalPoint& p, const TruncationPolicy& policy) {
  const long M = w.K() + 3;
  const long n1 = w.n1(), n2 = w.n2();
  auto g = [&](FSign s, long j) { return f_pm(FIndex(j, 2 * M, s), p, policy); };
  FourfoldParts r;
  r.X1 = g(FSign::Minus, -n1 + M) + g(FSign::Minus, n1 - M);
  r.Y1 = g(FSign::Plus, -n1 + M) - g(FSign::Plus, n1 - M);
  r.X2 = g(FSign::Minus, -n2 + M) + g(FSign::Minus, n2 - M);
  r.Y2 = g(FSign::Plus, -n2 + M) - g(FSign::Plus, n2 - M);
  r.U1 = g(FSign::Minus, -n1 + M) - g(FSign::Minus, n1 - M);
  r.V1 = g(FSign::Plus, -n1 + M) + g(FSign::Plus, n1 - M);
  r.ph = root_of_unity(n1 - n2, 2);
  return r;
}

void require_odd_even(const AdmissibleWeight& w) {
  if (floor_mod(w.n1(), 2) != 1 || floor_mod(w.n2(), 2) != 0)
    throw Error(ErrorKind::BadArgument, "fourfold expansions need n1 odd and n2 even");
}

std::vector<TransformMatrix::Label> signed_labels(long K) {
  std::vector<TransformMatrix::Label> labels;
  for (int s : {1, -1})
    for (const AdmissibleWeight& w : qhr_weights(K)) labels.push_back({s, w.n1(), w.n2()});
  return labels;
}

// ST2S kernel entry for row n and column k of the sign-s family, without the prefactor.
cplx st2s_kernel(int s, long long M, long long n1, long long n2, long long k1, long long k2, KernelReading reading) {
  auto e = [M](long long a) { return root_of_unity(-a * a, 8 * M); };
  const cplx second = e(n2 + k2) - e(n2 - k2);
  if (s > 0) return parity_sign((n1 + n2 + k1 + k2) / 2) * (e(n1 + k1) + e(n1 - k1)) * second;
  if (reading == KernelReading::Corrected) return (e(n1 + k1) - e(n1 - k1)) * second;
  return (e(n1 + k1) + e(n1 - k1)) * second;
}

TransformMatrix signed_matrix(long K, Generator gen, KernelReading reading, bool character) {
  require_odd_level(K);
  const long long M = K + 3;
  const auto labels = signed_labels(K);
  TransformMatrix out(labels, labels);
  const cplx g = gauss_sum(2 * M);
  const cplx base = (g / static_cast<double>(4 * M)) * (g / static_cast<double>(4 * M));
  const double half_m_sign = parity_sign(M / 2);
  for (std::size_t r = 0; r < labels.size(); ++r) {
    const int s = static_cast<int>(labels[r][0]);
    const long long n1 = labels[r][1], n2 = labels[r][2];
    if (gen == Generator::ST2S) {
      cplx pref;
      if (character) pref = s > 0 ? base : -kI * base;
      else pref = s > 0 ? -base : base;
      for (std::size_t c = 0; c < labels.size(); ++c) {
        if (labels[c][0] != s) continue;
        out.at(r, c) = pref * st2s_kernel(s, M, n1, n2, labels[c][1], labels[c][2], reading);
      }
    } else if (gen == Generator::T) {
      cplx phase = half_m_sign * root_of_unity(n1 * n1 + n2 * n2, 4 * M);
      if (character) phase *= root_of_unity(-1, 4);
      if (s > 0) phase = -phase;
      for (std::size_t c = 0; c < labels.size(); ++c)
        if (labels[c][0] == -s && labels[c][1] == n1 && labels[c][2] == n2) out.at(r, c) = phase;
    } else {
      throw Error(ErrorKind::BadArgument, "QHR transform matrices exist for T and ST2S only");
    }
  }
  return out;
}

}  // namespace

const char* to_string(FSign s) { return s == FSign::Plus ? "+" : "-"; }

FIndex::FIndex(long j, long m, FSign sign) : j_(0), m_(m), sign_(sign) {
  if (m <= 0 || m % 2 != 0) throw Error(ErrorKind::BadArgument, "f-level m must be positive and even");
  j_ = static_cast<long>(floor_mod(j, 2 * m));
}

cplx f_pm(const FIndex& idx, const EvalPoint& p, const TruncationPolicy& policy) {
  require_one_z(p);
  const cplx a = eval_theta_tilde(ThetaIndex(idx.j(), idx.m()), p, policy);
  const cplx b = eval_theta_tilde(ThetaIndex(idx.j() + idx.m(), idx.m()), p, policy);
  return idx.sign() == FSign::Plus ? a + b : a - b;
}

double f_transform_check(const FIndex& idx, Generator gen, const EvalPoint& p, FForm form,
                         const TruncationPolicy& policy) {
  require_one_z(p);
  const long m = idx.m();
  const long long j = idx.j();
  const int s = sign_value(idx.sign());
  if (gen == Generator::S) throw Error(ErrorKind::BadArgument, "no f-law is stated for S");
  const bool reduced = form == FForm::SumReduced || form == FForm::DifferenceReduced;
  if (reduced && gen != Generator::ST2S) throw Error(ErrorKind::BadArgument, "reduced-window forms are ST2S laws");

  const MobiusMap g = generator_map(gen);
  const FTable val = f_table(m, p, policy);
  const FTable img = f_table(m, p, policy, &g);
  const double comb = (form == FForm::Sum || form == FForm::SumReduced) ? 1.0 : -1.0;
  auto combo = [&](const FTable& t, int sg, long long k) {
    return form == FForm::Single ? t.at(sg, k) : t.at(sg, k) + comb * t.at(sg, -k);
  };
  const cplx lhs = combo(img, s, j);

  cplx rhs = 0.0;
  if (gen == Generator::T) {
    const int target = floor_mod(j + m / 2, 2) == 0 ? s : -s;
    rhs = root_of_unity(j * j, 2LL * m) * combo(val, target, j);
  } else {
    const cplx c = -kI * gauss_sum(m) / static_cast<double>(2 * m);
    if (!reduced) {
      for (long long k = 0; k < 2 * m; ++k)
        if ((k - j) % 2 == 0) rhs += root_of_unity(-(j + k) * (j + k), 4LL * m) * combo(val, s, k);
    } else {
      for (long long k = -m / 2 + 1; k <= m / 2; ++k) {
        if (floor_mod(k - j, 2) != 0) continue;
        const cplx brace = 1.0 + static_cast<double>(s) * parity_sign((j + k) / 2) * root_of_unity(-m, 4);
        rhs += root_of_unity(-(j + k) * (j + k), 4LL * m) * brace * combo(val, s, k);
      }
    }
    rhs *= c;
  }
  return std::abs(lhs - rhs);
}

std::vector<LabelledResidual> f_note_residuals(long m, const EvalPoint& p, const TruncationPolicy& policy) {
  require_one_z(p);
  if (m <= 0 || m % 2 != 0) throw Error(ErrorKind::BadArgument, "f-level m must be positive and even");
  const FTable f = f_table(m, p, policy);
  ResidualSink sink;
  for (int s : {1, -1}) {
    const double sd = s;
    for (long long j = -m; j < 2 * m; ++j) {
      // Direct two-theta evaluation at the raw index, independent of the table.
      const cplx direct = f_pm(FIndex(j + m, m, s > 0 ? FSign::Plus : FSign::Minus), p, policy);
      sink.add("f_{j+m,m} = +-f_{j,m}", std::abs(direct - sd * f.at(s, j)));
      if (m / 2 < j && j <= m / 2 + m) {
        const long long jp = j - m;
        sink.add("j' = j-m satisfies -m/2 < j' <= m/2", (-m / 2 < jp && jp <= m / 2) ? 0.0 : 1.0);
        sink.add("f_{j,m} = +-f_{j',m}", std::abs(f.at(s, j) - sd * f.at(s, jp)));
        sink.add("f_j + f_{-j} = +-(f_{j'} + f_{-j'})",
                 std::abs(f.at(s, j) + f.at(s, -j) - sd * (f.at(s, jp) + f.at(s, -jp))));
        sink.add("f_j - f_{-j} = +-(f_{j'} - f_{-j'})",
                 std::abs(f.at(s, j) - f.at(s, -j) - sd * (f.at(s, jp) - f.at(s, -jp))));
      }
    }
    sink.add("f_{m/2,m} -+ f_{-m/2,m} = 0", std::abs(f.at(s, m / 2) - sd * f.at(s, -m / 2)));
  }
  return sink.take();
}

std::vector<LabelledResidual> f_odd_level_residuals(long K, const EvalPoint& p, const TruncationPolicy& policy) {
  require_odd_level(K);
  require_one_z(p);
  const long long M = K + 3;
  const long m = 2 * M;
  const MobiusMap W = MobiusMap::W();
  const FTable f = f_table(m, p, policy);
  const FTable fw = f_table(m, p, policy, &W);
  const cplx c = -kI * gauss_sum(m) / static_cast<double>(4 * M);
  const double eps_m = parity_sign(M / 2);
  auto e = [M](long long a) { return root_of_unity(-a * a, 8 * M); };
  auto eps = [&](long long j, long long k) { return parity_sign((j + k) / 2) * eps_m; };

  // (f^s_j + comb f^s_{-j})
  auto C = [](const FTable& t, int s, double comb, long long j) { return t.at(s, j) + comb * t.at(s, -j); };
  // X^s_j = (f+_j - f+_{-j}) + s (f-_j + f-_{-j}); Y^s_j = (f+_j + f+_{-j}) + s (f-_j - f-_{-j}).
  auto X = [&](const FTable& t, int s, long long j) { return C(t, 1, -1, j) + static_cast<double>(s) * C(t, -1, 1, j); };
  auto Y = [&](const FTable& t, int s, long long j) { return C(t, 1, 1, j) + static_cast<double>(s) * C(t, -1, -1, j); };

  ResidualSink sink;
  for (long long j = 0; j < m; ++j) {
    const bool j_odd = floor_mod(j, 2) == 1;
    for (int s : {1, -1}) {
      const double sd = s;
      cplx r1 = 0.0, r2 = 0.0, r3 = 0.0;
      for (long long k = -M + 1; k <= M; ++k) {
        if (floor_mod(k - j, 2) != 0) continue;
        const cplx brace = 1.0 + sd * eps(j, k);
        r1 += e(j + k) * brace * C(f, s, sd, k);
        if (k < M) {
          r2 += e(j + k) * brace * C(f, s, -sd, k);
          r3 += e(j + k) * brace * C(f, s, sd, k);
        }
      }
      sink.add("(f_j +- f_{-j})|ST2S, window -(K+3) < k <= K+3", std::abs(C(fw, s, sd, j) - c * r1));
      sink.add("(f_j -+ f_{-j})|ST2S, window -(K+3) < k < K+3", std::abs(C(fw, s, -sd, j) - c * r2));
      if (j_odd) sink.add("(f_j +- f_{-j})|ST2S, j odd, strict window", std::abs(C(fw, s, sd, j) - c * r3));

      cplx x = 0.0, y = 0.0, xr = 0.0, yr = 0.0;
      for (long long k = -M + 1; k < M; ++k) {
        if (floor_mod(k - j, 2) != 0) continue;
        x += e(j + k) * (X(f, s, k) + eps(j, k) * X(f, -s, k));
        y += e(j + k) * (Y(f, s, k) + eps(j, k) * Y(f, -s, k));
      }
      for (long long k = 1; k < m; ++k) {
        if (floor_mod(k - j, 2) != 0) continue;
        xr += e(j + k) * (eps(j, k) * X(f, s, M - k) + X(f, -s, M - k));
        yr += e(j + k) * (eps(j, k) * Y(f, s, M - k) + Y(f, -s, M - k));
      }
      const std::string tag = s > 0 ? "(i)" : "(ii)";
      sink.add("mixed [(f+_j - f+_{-j}) +- (f-_j + f-_{-j})]|ST2S " + tag, std::abs(X(fw, s, j) - c * x));
      sink.add("reflected j -> -j+(K+3), [(f+ - f+) +- (f- + f-)]|ST2S " + tag,
               std::abs(X(fw, s, M - j) - c * xr));
      if (j_odd) {
        sink.add("mixed [(f+_j + f+_{-j}) +- (f-_j - f-_{-j})]|ST2S, j odd " + tag, std::abs(Y(fw, s, j) - c * y));
        sink.add("reflected j -> -j+(K+3), [(f+ + f+) +- (f- - f-)]|ST2S, j odd " + tag,
                 std::abs(Y(fw, s, M - j) - c * yr));
      }
    }
  }
  return sink.take();
}

void QHRShape::validate() const {
  if (ell < 0 || dim_g0 < 0 || dim_g_half < 0 || dim_gf < 0)
    throw Error(ErrorKind::BadArgument, "shape dimensions must be non-negative");
  const std::size_t n = z_dim();
  if (n == 0) throw Error(ErrorKind::BadArgument, "shape needs at least one linear form");
  for (const auto* set : {&delta0_plus, &delta_half})
    for (const auto& a : *set)
      if (a.size() != n) throw Error(ErrorKind::BadArgument, "linear forms must share one z-dimension");
}

std::size_t QHRShape::z_dim() const {
  if (!delta0_plus.empty()) return delta0_plus.front().size();
  if (!delta_half.empty()) return delta_half.front().size();
  return 0;
}

double QHRShape::eta_exponent() const { return 1.5 * ell - 0.5 * dim_gf; }

double QHRShape::t_weight() const {
  return eta_exponent() + 2.0 * static_cast<double>(delta0_plus.size()) + static_cast<double>(delta_half.size());
}

AnomalyProfile QHRShape::anomaly_profile() const {
  validate();
  const double twice_weight =
      eta_exponent() + static_cast<double>(delta0_plus.size()) + 0.5 * static_cast<double>(delta_half.size());
  if (twice_weight != std::round(twice_weight) || twice_weight < 0)
    throw Error(ErrorKind::BadArgument, "slash weight of the shape is not a non-negative half-integer");
  const double w = t_weight();
  if (w == 0.0) throw Error(ErrorKind::BadArgument, "shape has zero t-weight");
  const std::size_t n = z_dim();
  QuadForm q(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (const auto& a : delta0_plus) s += 2.0 * a[i] * a[j];
      for (const auto& a : delta_half) s += a[i] * a[j];
      q[i][j] = s / w;
    }
  return {w, static_cast<int>(std::lround(twice_weight)), q};
}

QHRShape c2_minimal_shape() {
  QHRShape s;
  s.ell = 2;
  s.dim_g0 = 4;
  s.dim_g_half = 2;
  s.dim_gf = 6;
  s.delta0_plus = {{2.0}};
  s.delta_half = {{-1.0}, {1.0}};
  if (s.eta_exponent() != 0.0) throw std::logic_error("C2 minimal shape must have eta exponent 0");
  return s;
}

const char* to_string(DenominatorKind k) {
  switch (k) {
    case DenominatorKind::Plus: return "+";
    case DenominatorKind::Minus: return "-";
    case DenominatorKind::Star: return "*";
  }
  return "?";
}

QHRDenominatorForms qhr_denominator_forms(DenominatorKind kind, const QHRShape& shape, const EvalPoint& p,
                                          const TruncationPolicy& policy) {
  shape.validate();
  if (p.dim() != shape.z_dim()) throw Error(ErrorKind::BadArgument, "point dimension does not match the shape");
  const long e = integral_eta_exponent(shape);
  const auto reps = half_pair_representatives(shape);
  int a = 0;
  const int b = vartheta_b_of(kind, a);
  const cplx tau = p.tau();

  QHRDenominatorForms out;
  out.classical = exp_pi_i(0.0) * std::exp(kPi * kI * p.t() * (0.5 * (shape.ell + shape.dim_gf)));
  out.tilde = 1.0;
  if (e != 0) {
    out.classical *= int_power(eta_classical(tau, policy), e);
    out.tilde *= int_power(eval_eta_tilde(EvalPoint(tau, {}, p.t()), policy), e);
  }
  for (const auto& form : shape.delta0_plus) {
    const cplx u = dot(form, p.zs());
    out.classical *= vartheta_classical(1, 1, tau, u, policy);
    out.tilde *= eval_vartheta_tilde(1, 1, EvalPoint(tau, {u}, p.t()), policy);
  }
  for (std::size_t i : reps) {
    const cplx u = dot(shape.delta_half[i], p.zs());
    out.classical *= vartheta_classical(a, b, tau, u, policy);
    out.tilde *= eval_vartheta_tilde(a, b, EvalPoint(tau, {u}, p.t()), policy);
  }
  return out;
}

cplx qhr_denominator(DenominatorKind kind, const QHRShape& shape, const EvalPoint& p, const TruncationPolicy& policy) {
  return qhr_denominator_forms(kind, shape, p, policy).tilde;
}

cplx qhr_denominator_c2(DenominatorKind kind, const EvalPoint& p, const TruncationPolicy& policy) {
  require_one_z(p);
  int a = 0;
  const int b = vartheta_b_of(kind, a);
  const EvalPoint twice(p.tau(), {2.0 * p.z()}, p.t());
  return eval_vartheta_tilde(1, 1, twice, policy) * eval_vartheta_tilde(a, b, p, policy);
}

DenominatorLaw denominator_law(DenominatorKind kind, Generator gen, LawSource source, const QHRShape& shape) {
  using K = DenominatorKind;
  if (source == LawSource::C2ClosedForm) {
    if (kind == K::Star || gen == Generator::S)
      throw Error(ErrorKind::BadArgument, "C2 closed-form laws cover T and ST2S for plus and minus only");
    if (gen == Generator::T) return {kind == K::Plus ? K::Minus : K::Plus, root_of_unity(1, 4)};
    return kind == K::Plus ? DenominatorLaw{K::Plus, -1.0} : DenominatorLaw{K::Minus, kI};
  }
  const double g0 = shape.dim_g0, gf = shape.dim_gf;
  switch (gen) {
    case Generator::S: {
      const cplx phase = exp_pi_i(-g0 / 4.0);
      if (kind == K::Plus) return {K::Star, phase};
      if (kind == K::Minus) return {K::Minus, phase};
      return {K::Plus, phase};
    }
    case Generator::T:
      if (kind == K::Star) return {K::Star, exp_pi_i(gf / 12.0)};
      return {kind == K::Plus ? K::Minus : K::Plus, exp_pi_i((3.0 * g0 - gf) / 24.0)};
    case Generator::ST2S:
      if (kind == K::Plus) return {K::Plus, exp_pi_i((gf - 3.0 * g0) / 6.0)};
      if (kind == K::Minus) return {K::Minus, exp_pi_i(-(gf + 3.0 * g0) / 12.0)};
      break;
  }
  throw Error(ErrorKind::BadArgument, "no ST2S law is stated for the star denominator");
}

double qhr_denominator_transform_check(DenominatorKind kind, Generator gen, const EvalPoint& p, LawSource source,
                                       const TruncationPolicy& policy) {
  const QHRShape shape = c2_minimal_shape();
  const DenominatorLaw law = denominator_law(kind, gen, source, shape);
  Evaluator f;
  cplx target;
  if (source == LawSource::GeneralShape) {
    f = [&](const EvalPoint& q) { return qhr_denominator(kind, shape, q, policy); };
    target = qhr_denominator(law.target, shape, p, policy);
  } else {
    f = [&](const EvalPoint& q) { return qhr_denominator_c2(kind, q, policy); };
    target = qhr_denominator_c2(law.target, p, policy);
  }
  const cplx lhs = slash_action(generator_map(gen), shape.anomaly_profile(), f, p);
  return std::abs(lhs - law.phase * target);
}

std::vector<cplx> SL2TripleData::shifted(cplx tau, cplx z) const { return {-z - tau / 2.0, z - tau / 2.0}; }

std::vector<cplx> SL2TripleData::shifted_plus_x(cplx tau, cplx z) const {
  return {-z + 0.5 - tau / 2.0, z + 0.5 - tau / 2.0};
}

std::vector<cplx> SL2TripleData::shifted_minus_x(cplx tau, cplx z) const {
  return {-z - 0.5 - tau / 2.0, z - 0.5 - tau / 2.0};
}

SL2TripleData c2_minimal_triple() {
  const RootDatum& R = RootDatum::c2();
  SL2TripleData d;
  d.x = Rational(1, 2) * (Rational(2) * R.alpha(1) + R.alpha(2));
  d.norm2_x = R.inner(d.x, d.x);
  // x in (z1, z2) coordinates is (1/2, 1/2): (alpha_1|x) = (alpha_1+alpha_2|x) = 1/2.
  if (R.inner(R.alpha(1), d.x) != Rational(1, 2) || R.inner(R.alpha(1) + R.alpha(2), d.x) != Rational(1, 2))
    throw std::logic_error("sl2-triple coordinates mismatch");
  return d;
}

namespace {

// A(tau, zs, s) = A'(tau, zs, s/2) at s = 2t + (tau/2)|x|^2.
cplx numerator_at(const AdmissibleWeight& w, const EvalPoint& p, std::vector<cplx> zs,
                  const TruncationPolicy& policy) {
  static const SL2TripleData triple = c2_minimal_triple();
  const cplx s = 2.0 * p.t() + p.tau() / 2.0 * boost::rational_cast<double>(triple.norm2_x);
  return numerator_theta(w, EvalPoint(p.tau(), std::move(zs), s / 2.0), policy);
}

}  // namespace

cplx qhr_numerator_shifted(FSign sign, const AdmissibleWeight& w, const EvalPoint& p, const TruncationPolicy& policy) {
  require_one_z(p);
  const SL2TripleData triple = c2_minimal_triple();
  const auto zs = sign == FSign::Plus ? triple.shifted(p.tau(), p.z()) : triple.shifted_plus_x(p.tau(), p.z());
  return numerator_at(w, p, zs, policy);
}

cplx qhr_numerator_minus_alternative(const AdmissibleWeight& w, const EvalPoint& p, const TruncationPolicy& policy) {
  require_one_z(p);
  const SL2TripleData triple = c2_minimal_triple();
  const Rational r = RootDatum::c2().inner(lambda_rho_data(w).vector, triple.x);
  const Rational four_r = Rational(4) * r;
  return root_of_unity(four_r.numerator(), four_r.denominator()) *
         numerator_at(w, p, triple.shifted_minus_x(p.tau(), p.z()), policy);
}

cplx qhr_numerator_closed(FSign sign, const AdmissibleWeight& w, const EvalPoint& p, const TruncationPolicy& policy) {
  require_one_z(p);
  const long M = w.K() + 3, m = 2 * M;
  const long n1 = w.n1(), n2 = w.n2();
  auto th = [&](long j) { return eval_theta_tilde(ThetaIndex(j, m), p, policy); };
  if (sign == FSign::Plus) return (th(n1 + M) - th(-n1 + M)) * (th(n2 - M) - th(-n2 - M));
  return -root_of_unity(n2 - n1, 2) * (th(n1 + M) - root_of_unity(n1, 1) * th(-n1 + M)) *
         (th(n2 - M) - root_of_unity(-n2, 1) * th(-n2 - M));
}

QHRNumerator qhr_numerator(FSign sign, const AdmissibleWeight& w, const EvalPoint& p, const TruncationPolicy& policy) {
  return {qhr_numerator_shifted(sign, w, p, policy), qhr_numerator_closed(sign, w, p, policy)};
}

AnomalyProfile qhr_numerator_profile(long K) { return {4.0 * static_cast<double>(K + 3), 2, scalar_form(1, 1.0)}; }

const char* to_string(OrbitMember o) {
  switch (o) {
    case OrbitMember::I: return "i";
    case OrbitMember::II: return "ii";
    case OrbitMember::III: return "iii";
    case OrbitMember::IV: return "iv";
  }
  return "?";
}

AdmissibleWeight orbit_member(const AdmissibleWeight& w, OrbitMember o) {
  const long m = w.level_m();
  switch (o) {
    case OrbitMember::I: return w;
    case OrbitMember::II: return {w.K(), m - w.n1(), w.n2()};
    case OrbitMember::III: return {w.K(), w.n1(), m - w.n2()};
    case OrbitMember::IV: return {w.K(), m - w.n1(), m - w.n2()};
  }
  return w;
}

cplx qhr_fourfold(FSign sign, OrbitMember member, const AdmissibleWeight& w, const EvalPoint& p,
                  const TruncationPolicy& policy) {
  require_one_z(p);
  require_odd_even(w);
  const FourfoldParts f = fourfold_parts(w, p, policy);
  if (sign == FSign::Plus) {
    switch (member) {
      case OrbitMember::I: return (f.X1 + f.Y1) * (-f.X2 + f.Y2);
      case OrbitMember::II: return (f.X1 - f.Y1) * (-f.X2 + f.Y2);
      case OrbitMember::III: return -(f.X1 + f.Y1) * (f.X2 + f.Y2);
      case OrbitMember::IV: return (-f.X1 + f.Y1) * (f.X2 + f.Y2);
    }
  }
  switch (member) {
    case OrbitMember::I: return f.ph * (f.U1 + f.V1) * (-f.X2 + f.Y2);
    case OrbitMember::II: return f.ph * (f.U1 - f.V1) * (-f.X2 + f.Y2);
    case OrbitMember::III: return -f.ph * (f.U1 + f.V1) * (f.X2 + f.Y2);
    case OrbitMember::IV: return f.ph * (-f.U1 + f.V1) * (f.X2 + f.Y2);
  }
  return 0.0;
}

double qhr_fourfold_check(FSign sign, const AdmissibleWeight& w, const EvalPoint& p, const TruncationPolicy& policy) {
  double worst = 0.0;
  for (OrbitMember o : {OrbitMember::I, OrbitMember::II, OrbitMember::III, OrbitMember::IV}) {
    const cplx display = qhr_fourfold(sign, o, w, p, policy);
    const cplx closed = qhr_numerator_closed(sign, orbit_member(w, o), p, policy);
    worst = std::max(worst, std::abs(display - 4.0 * closed));
  }
  return worst;
}

void require_qhr_guard(const EvalPoint& p) {
  require_one_z(p);
  if (lattice_distance(p.z(), p.tau()) < kSingularityGuard)
    throw Error(ErrorKind::NearSingularity, "z is within the guard of Z + Z tau");
  if (lattice_distance(2.0 * p.z(), p.tau()) < kSingularityGuard)
    throw Error(ErrorKind::NearSingularity, "2z is within the guard of Z + Z tau");
}

cplx qhr_character(FSign sign, const AdmissibleWeight& w, const EvalPoint& p, const TruncationPolicy& policy) {
  require_qhr_guard(p);
  const DenominatorKind kind = sign == FSign::Plus ? DenominatorKind::Plus : DenominatorKind::Minus;
  const cplx den = 4.0 * qhr_denominator_c2(kind, p, policy);
  if (den == 0.0) throw Error(ErrorKind::DivideByZero, "QHR denominator vanished");
  return qhr_fourfold(sign, OrbitMember::I, w, p, policy) / den;
}

std::vector<AdmissibleWeight> qhr_weights(long K) {
  std::vector<AdmissibleWeight> out;
  if (K < -1) return out;
  const long m = 2 * (K + 3);
  for (long n1 = 1; n1 < m; n1 += 2)
    for (long n2 = 2; n2 < m; n2 += 2) out.emplace_back(K, n1, n2);
  return out;
}

TransformMatrix qhr_transform_matrix(long K, Generator gen, KernelReading reading) {
  return signed_matrix(K, gen, reading, false);
}

TransformMatrix qhr_transform_matrix(FSign sign, long K, Generator gen, KernelReading reading) {
  const TransformMatrix full = qhr_transform_matrix(K, gen, reading);
  const long s = sign_value(sign);
  std::vector<TransformMatrix::Label> rows;
  std::vector<std::size_t> idx;
  for (std::size_t r = 0; r < full.rows(); ++r)
    if (full.row_labels()[r][0] == s) {
      rows.push_back(full.row_labels()[r]);
      idx.push_back(r);
    }
  TransformMatrix out(rows, full.col_labels());
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t c = 0; c < full.cols(); ++c) out.at(r, c) = full.at(idx[r], c);
  return out;
}

TransformMatrix qhr_character_transform_matrix(long K, Generator gen, KernelReading reading) {
  return signed_matrix(K, gen, reading, true);
}

cplx qhr_numerator_slash(const MobiusMap& g, FSign sign, const AdmissibleWeight& w, const EvalPoint& p,
                         const TruncationPolicy& policy) {
  return slash_action(g, qhr_numerator_profile(w.K()),
                      [&](const EvalPoint& q) { return qhr_numerator_shifted(sign, w, q, policy); }, p);
}

cplx qhr_character_slash(const MobiusMap& g, FSign sign, const AdmissibleWeight& w, const EvalPoint& p,
                         const TruncationPolicy& policy) {
  require_qhr_guard(p);
  const DenominatorKind kind = sign == FSign::Plus ? DenominatorKind::Plus : DenominatorKind::Minus;
  const cplx num = slash_action(g, qhr_numerator_profile(w.K()),
                                [&](const EvalPoint& q) { return qhr_fourfold(sign, OrbitMember::I, w, q, policy); }, p);
  const cplx den = 4.0 * slash_action(g, c2_minimal_shape().anomaly_profile(),
                                      [&](const EvalPoint& q) { return qhr_denominator_c2(kind, q, policy); }, p);
  if (den == 0.0) throw Error(ErrorKind::DivideByZero, "transformed QHR denominator vanished");
  return num / den;
}

}  // namespace c2qhr
