#include "c2qhr/suites.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <numeric>

#include <Eigen/Dense>
#include <json.hpp>

namespace c2qhr {

std::uint64_t Lcg64::next() {
  state_ = 6364136223846793005ULL * state_ + 1442695040888963407ULL;
  return state_;
}

double Lcg64::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

EvalPoint sample_point(Lcg64& rng, std::size_t z_dim) {
  const double re = rng.uniform(-0.5, 0.5);
  const double im = rng.uniform(0.8, 2.0);
  std::vector<cplx> zs;
  for (std::size_t i = 0; i < z_dim; ++i) {
    const double r = 0.4 * std::sqrt(rng.uniform());
    const double phi = 2.0 * kPi * rng.uniform();
    zs.push_back(std::polar(r, phi));
  }
  const double t = rng.uniform(-1.0, 1.0);
  return EvalPoint({re, im}, std::move(zs), t);
}

const IdentityResult& SuiteReport::identity(const std::string& label) const {
  for (const auto& r : identities)
    if (r.label == label) return r;
  throw Error(ErrorKind::BadArgument, "suite " + suite_name + " has no identity '" + label + "'");
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

const char* gen_name(Generator g) { return to_string(g); }

std::string kind_name(DenominatorKind k) { return to_string(k); }

std::string sign_name(int s) { return s > 0 ? "+" : "-"; }

std::string k_suffix(long K) { return ", K=" + std::to_string(K); }

// Per-label maxima in first-seen order; evaluation errors mark the label failed.
class Collector {
 public:
  void record(const std::string& label, double residual, const std::optional<EvalPoint>& p = std::nullopt) {
    IdentityResult& e = slot(label);
    if (!e.error.empty()) return;
    if (std::isnan(residual)) residual = kInf;
    if (residual > e.residual || (!e.worst_point && p && residual == e.residual)) {
      e.residual = residual;
      e.worst_point = p;
    }
  }

  void fail(const std::string& label, const std::string& message, const std::optional<EvalPoint>& p) {
    IdentityResult& e = slot(label);
    if (!e.error.empty()) return;
    e.residual = kInf;
    e.error = message;
    e.worst_point = p;
  }

  /// Records f() under label, or a failure if f throws.
  void check(const std::string& label, const std::optional<EvalPoint>& p, const std::function<double()>& f) {
    try {
      record(label, f(), p);
    } catch (const std::exception& ex) {
      fail(label, ex.what(), p);
    }
  }

  /// Runs f, which records several labels; a throw fails every label in the list.
  void check_group(const std::vector<std::string>& labels, const std::optional<EvalPoint>& p,
                   const std::function<void()>& f) {
    try {
      f();
    } catch (const std::exception& ex) {
      for (const auto& l : labels) fail(l, ex.what(), p);
    }
  }

  std::vector<IdentityResult> take() { return std::move(out_); }

 private:
  IdentityResult& slot(const std::string& label) {
    auto it = index_.find(label);
    if (it != index_.end()) return out_[it->second];
    index_.emplace(label, out_.size());
    out_.push_back({label, 0.0, std::nullopt, {}});
    return out_.back();
  }

  std::map<std::string, std::size_t> index_;
  std::vector<IdentityResult> out_;
};

EvalPoint sample_guarded(Lcg64& rng, std::size_t z_dim, const std::function<void(const EvalPoint&)>& guard) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    EvalPoint p = sample_point(rng, z_dim);
    try {
      guard(p);
      return p;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NearSingularity) throw;
    }
  }
  throw Error(ErrorKind::SearchExhausted, "no sample point satisfied the singularity guard");
}

// Independent oracle for gamma_m.
cplx direct_gauss(long m) {
  cplx s = 0.0;
  for (long long k = 0; k < 2 * m; ++k) s += std::polar(1.0, kPi * static_cast<double>((k * k) % (2 * m)) / m);
  return s;
}

// ---------------------------------------------------------------- theta-transforms

const std::vector<std::string> kThetaLaws = {
    "eta|S = e^{-pi i/4} eta",
    "eta|T = e^{pi i/12} eta",
    "eta|T^2 = e^{pi i/6} eta",
    "eta|ST^2S = e^{-pi i/3} eta",
    "theta_{j,m}|S = e^{-pi i/4}/sqrt(2m) sum_k e^{-pi i jk/m} theta_{k,m}",
    "theta_{j,m}|T = e^{pi i j^2/2m} theta_{j,m}",
    "theta_{j,m}|T^2 = e^{pi i j^2/m} theta_{j,m}",
    "theta_{j,m}|ST^2S = (-i/2m) sum_k (sum_l e^{pi i l(l-j-k)/m}) theta_{k,m}",
    "vartheta_ab|S = e^{-pi i/4} (-i)^{ab} vartheta_ba",
    "vartheta_0b|T = vartheta_{0,1-b}",
    "vartheta_1b|T = e^{pi i/4} vartheta_1b",
    "vartheta_0b|T^2 = vartheta_0b",
    "vartheta_1b|T^2 = i vartheta_1b",
    "vartheta_ab|ST^2S = -i^{b+1} (-1)^{ab} vartheta_ab",
};
const std::string kThetaReduced = "theta_{j,m}|ST^2S = (-i gamma_m/2m) sum_{k = j mod 2} e^{-pi i (j+k)^2/4m} theta_{k,m}";
const std::string kThetaMatrices = "theta transform matrices (S, T, ST^2S) reproduce the slash action";
const std::string kThetaParity = "theta_{j,m}(-z) = theta_{-j,m}(z)";
const std::string kVarthetaSeries = "vartheta_ab product = theta series";
const std::string kVarthetaZeros = "vartheta_11 vanishes at z = 0, 1, tau, 1+tau";

void theta_suite(Collector& c, std::uint64_t seed, std::size_t samples) {
  Lcg64 rng(seed);
  const MobiusMap S = MobiusMap::S(), T = MobiusMap::T(), T2 = T * T, W = MobiusMap::W();
  for (std::size_t i = 0; i < samples; ++i) {
    const EvalPoint p = sample_point(rng, 1);
    const EvalPoint p0(p.tau(), {}, p.t());

    c.check_group({kThetaLaws[0], kThetaLaws[1], kThetaLaws[2], kThetaLaws[3]}, p, [&] {
      const Evaluator eta = [](const EvalPoint& q) { return eval_eta_tilde(q); };
      const cplx v = eta(p0);
      auto res = [&](const MobiusMap& g, cplx phase) {
        return std::abs(slash_action(g, eta_profile(), eta, p0) - phase * v);
      };
      c.record(kThetaLaws[0], res(S, root_of_unity(-1, 4)), p);
      c.record(kThetaLaws[1], res(T, root_of_unity(1, 12)), p);
      c.record(kThetaLaws[2], res(T2, root_of_unity(1, 6)), p);
      c.record(kThetaLaws[3], res(W, root_of_unity(-1, 3)), p);
    });

    for (long m : {2L, 4L, 6L, 8L}) {
      c.check_group({kThetaLaws[4], kThetaLaws[5], kThetaLaws[6], kThetaLaws[7], kThetaReduced, kThetaMatrices,
                     kThetaParity},
                    p, [&] {
                      const long long mm = m;
                      const AnomalyProfile prof = theta_profile(m);
                      std::vector<cplx> th(2 * m), tS(2 * m), tT(2 * m), tT2(2 * m), tW(2 * m);
                      for (long j = 0; j < 2 * m; ++j) {
                        const Evaluator f = [j, m](const EvalPoint& q) {
                          return eval_theta_tilde(ThetaIndex(j, m), q);
                        };
                        th[j] = f(p);
                        tS[j] = slash_action(S, prof, f, p);
                        tT[j] = slash_action(T, prof, f, p);
                        tT2[j] = slash_action(T2, prof, f, p);
                        tW[j] = slash_action(W, prof, f, p);
                      }
                      const cplx gamma = direct_gauss(m);
                      const TransformMatrix MS = theta_transform_matrix(m, Generator::S);
                      const TransformMatrix MT = theta_transform_matrix(m, Generator::T);
                      const TransformMatrix MW = theta_transform_matrix(m, Generator::ST2S);
                      const EvalPoint pneg = p.with_z({-p.z()});
                      for (long long j = 0; j < 2 * mm; ++j) {
                        cplx rs = 0.0, rw = 0.0, rl = 0.0;
                        for (long long k = 0; k < 2 * mm; ++k) {
                          rs += root_of_unity(-j * k, mm) * th[k];
                          cplx inner = 0.0;
                          for (long long l = 0; l < 2 * mm; ++l) inner += root_of_unity(l * (l - j - k), mm);
                          rw += inner * th[k];
                          if ((j - k) % 2 == 0) rl += root_of_unity(-(j + k) * (j + k), 4 * mm) * th[k];
                        }
                        rs *= root_of_unity(-1, 4) / std::sqrt(2.0 * m);
                        rw *= -kI / (2.0 * m);
                        rl *= -kI * gamma / (2.0 * m);
                        c.record(kThetaLaws[4], std::abs(tS[j] - rs), p);
                        c.record(kThetaLaws[5], std::abs(tT[j] - root_of_unity(j * j, 2 * mm) * th[j]), p);
                        c.record(kThetaLaws[6], std::abs(tT2[j] - root_of_unity(j * j, mm) * th[j]), p);
                        c.record(kThetaLaws[7], std::abs(tW[j] - rw), p);
                        c.record(kThetaReduced, std::abs(tW[j] - rl), p);
                        const double mat = std::max({std::abs(tS[j] - MS.apply_row(j, th)),
                                                     std::abs(tT[j] - MT.apply_row(j, th)),
                                                     std::abs(tW[j] - MW.apply_row(j, th))});
                        c.record(kThetaMatrices, mat, p);
                        c.record(kThetaParity,
                                 std::abs(eval_theta_tilde(ThetaIndex(j, m), pneg) - th[(2 * mm - j) % (2 * mm)]), p);
                      }
                    });
    }

    c.check_group(std::vector<std::string>(kThetaLaws.begin() + 8, kThetaLaws.end()), p, [&] {
      const AnomalyProfile prof = vartheta_profile();
      cplx v[2][2], vS[2][2], vT[2][2], vT2[2][2], vW[2][2];
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          const Evaluator f = [a, b](const EvalPoint& q) { return eval_vartheta_tilde(a, b, q); };
          v[a][b] = f(p);
          vS[a][b] = slash_action(S, prof, f, p);
          vT[a][b] = slash_action(T, prof, f, p);
          vT2[a][b] = slash_action(T2, prof, f, p);
          vW[a][b] = slash_action(W, prof, f, p);
        }
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          const cplx minus_i_ab = a * b == 1 ? -kI : cplx(1.0);
          c.record(kThetaLaws[8], std::abs(vS[a][b] - root_of_unity(-1, 4) * minus_i_ab * v[b][a]), p);
          if (a == 0) {
            c.record(kThetaLaws[9], std::abs(vT[a][b] - v[0][1 - b]), p);
            c.record(kThetaLaws[11], std::abs(vT2[a][b] - v[a][b]), p);
          } else {
            c.record(kThetaLaws[10], std::abs(vT[a][b] - root_of_unity(1, 4) * v[a][b]), p);
            c.record(kThetaLaws[12], std::abs(vT2[a][b] - kI * v[a][b]), p);
          }
          const cplx ib1 = b == 0 ? kI : cplx(-1.0);
          const double sab = a * b == 1 ? -1.0 : 1.0;
          c.record(kThetaLaws[13], std::abs(vW[a][b] + ib1 * sab * v[a][b]), p);
        }
    });

    c.check(kVarthetaSeries, p, [&] {
      double worst = 0.0;
      const cplx tau = p.tau(), z = p.z();
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          cplx series = 0.0;
          for (int n = -40; n <= 40; ++n) {
            const double x = n + a / 2.0;
            series += std::exp(kPi * kI * tau * x * x + 2.0 * kPi * kI * x * (z + b / 2.0));
          }
          series *= e2pi(p.t());
          worst = std::max(worst, std::abs(eval_vartheta_tilde(a, b, p) - series));
        }
      return worst;
    });

    c.check(kVarthetaZeros, p, [&] {
      double worst = 0.0;
      for (cplx z : {cplx(0.0), cplx(1.0), p.tau(), 1.0 + p.tau()})
        worst = std::max(worst, std::abs(eval_vartheta_tilde(1, 1, p.with_z({z}))));
      return worst;
    });
  }
}

// ---------------------------------------------------------------- gauss

void gauss_suite(Collector& c) {
  for (long m = 2; m <= 40; m += 2) {
    const std::string label = "gamma_m = direct sum = (1+i) sqrt(2m); vanishing sums, m=" + std::to_string(m);
    c.check(label, std::nullopt, [m] {
      const long long mm = m;
      const cplx gamma = gauss_sum(m);
      double r = std::abs(gamma - direct_gauss(m));
      r = std::max(r, std::abs(gamma - cplx(1.0, 1.0) * std::sqrt(2.0 * m)));
      cplx half = 0.0;
      for (long long k = 0; k < 2 * mm; ++k) half += root_of_unity((2 * k + 1) * (2 * k + 1), 4 * mm);
      r = std::max(r, std::abs(half));
      for (long long n = -2 * mm; n <= 2 * mm; ++n) {
        const cplx v = vanishing_sum_check(m, static_cast<long>(n));
        const cplx expected = n % 2 != 0 ? cplx(0.0) : root_of_unity(-n * n, 4 * mm) * gamma;
        r = std::max(r, std::abs(v - expected));
      }
      return r;
    });
  }
}

// ---------------------------------------------------------------- admissible

void admissible_suite(Collector& c) {
  c.check("K=-1 weights = {(1,2),(2,1),(2,3),(3,2)}", std::nullopt, [] {
    std::vector<std::pair<long, long>> got;
    for (const auto& w : enumerate_admissible(-1)) got.emplace_back(w.n1(), w.n2());
    const std::vector<std::pair<long, long>> want{{1, 2}, {2, 1}, {2, 3}, {3, 2}};
    return got == want ? 0.0 : 1.0;
  });
  for (long K = -1; K <= 6; ++K) {
    c.check("|P_K| = 2(K+2)(K+3) = brute force" + k_suffix(K), std::nullopt, [K] {
      const long m = 2 * (K + 3);
      long brute = 0;
      for (long n1 = 1; n1 < m; ++n1)
        for (long n2 = 1; n2 < m; ++n2)
          if ((n1 + n2) % 2 == 1) ++brute;
      const auto ws = enumerate_admissible(K);
      const long formula = 2 * (K + 2) * (K + 3);
      double r = 0.0;
      if (static_cast<long>(ws.size()) != formula) r += 1.0;
      if (brute != formula) r += 1.0;
      for (const auto& w : ws)
        if (!check_admissibility_constraints(1, Rational(K), w.n1(), w.n2()).pass) r += 1.0;
      return r;
    });
    c.check("Lambda + rho = (K+3) Lambda_0 + (n1/2) alpha_1 + (n2/2)(alpha_1+alpha_2)" + k_suffix(K), std::nullopt,
            [K] {
              double r = 0.0;
              const RootDatum& R = RootDatum::c2();
              for (const auto& w : enumerate_admissible(K)) {
                const LambdaRhoData d = lambda_rho_data(w);
                const HVector expected = Rational(K + 3) * R.lambda0() + Rational(w.n1(), 2) * R.alpha(1) +
                                         Rational(w.n2(), 2) * (R.alpha(1) + R.alpha(2));
                if (d.vector != expected) r += 1.0;
              }
              return r;
            });
  }
  c.check("root and coroot Gram matrices, h^v = 3, |rho|^2 = 5/2", std::nullopt, [] {
    const RootDatum& R = RootDatum::c2();
    const std::array<std::array<Rational, 3>, 3> roots{{{2, -1, 0}, {-1, 1, -1}, {0, -1, 2}}};
    const std::array<std::array<Rational, 3>, 3> coroots{{{2, -2, 0}, {-2, 4, -2}, {0, -2, 2}}};
    double r = 0.0;
    if (R.root_gram() != roots) r += 1.0;
    if (R.coroot_gram() != coroots) r += 1.0;
    if (R.dual_coxeter() != Rational(3)) r += 1.0;
    if (R.inner(R.rho(), R.rho()) != Rational(5, 2)) r += 1.0;
    return r;
  });
  c.check("(alpha_1+alpha_2)^v = alpha_1^v + 2 alpha_2^v, (2alpha_1+alpha_2)^v = alpha_1^v + alpha_2^v",
          std::nullopt, [] {
            const RootDatum& R = RootDatum::c2();
            const HVector a1 = R.alpha(1), a2 = R.alpha(2);
            const HVector c1 = R.coroot(a1), c2 = R.coroot(a2);
            double r = 0.0;
            if (R.coroot(a1 + a2) != c1 + Rational(2) * c2) r += 1.0;
            if (R.coroot(Rational(2) * a1 + a2) != c1 + c2) r += 1.0;
            return r;
          });
  c.check("inadmissible inputs are rejected", std::nullopt, [] {
    double r = 0.0;
    if (check_admissibility_constraints(1, Rational(-1), 1, 3).pass) r += 1.0;
    if (check_admissibility_constraints(2, Rational(-1), 1, 2).pass) r += 1.0;
    if (check_admissibility_constraints(1, Rational(-1), 6, 1).pass) r += 1.0;
    try {
      AdmissibleWeight(-1, 1, 3);
      r += 1.0;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::BadArgument) r += 1.0;
    }
    return r;
  });
}

// ---------------------------------------------------------------- characters

void character_numerator_suite(Collector& c, std::uint64_t seed, std::size_t samples) {
  Lcg64 rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    const EvalPoint p = sample_point(rng, 2);
    for (long K : {-1L, 0L, 1L}) {
      c.check("A' lattice sum = theta product" + k_suffix(K), p, [&] {
        double worst = 0.0;
        for (const auto& w : enumerate_admissible(K))
          worst = std::max(worst, std::abs(numerator_lattice(w, p) - numerator_theta(w, p)));
        return worst;
      });
    }
    c.check("R classical form = tilde form", p, [&] {
      const DenominatorForms f = denominator_R_forms(p);
      return std::abs(f.classical - f.tilde);
    });
  }
}

std::vector<cplx> character_values(long K, const EvalPoint& p) {
  std::vector<cplx> out;
  for (const auto& w : enumerate_admissible(K)) out.push_back(character(w, p));
  return out;
}

std::vector<cplx> numerator_values(long K, const EvalPoint& p) {
  std::vector<cplx> out;
  for (const auto& w : enumerate_admissible(K)) out.push_back(numerator_theta(w, p));
  return out;
}

void character_gamma0_suite(Collector& c, std::uint64_t seed, std::size_t samples) {
  Lcg64 rng(seed);
  const std::string rS = "R|S = -i R", rT = "R|T = e^{5 pi i/6} R", rW = "R|ST^2S = e^{2 pi i/3} R";
  for (std::size_t i = 0; i < samples; ++i) {
    const EvalPoint p = sample_guarded(rng, 2, require_character_guard);
    c.check_group({rS, rT, rW}, p, [&] {
      const Evaluator R = [](const EvalPoint& q) { return denominator_R(q); };
      const cplx v = R(p);
      c.record(rS, std::abs(slash_action(MobiusMap::S(), r_profile(), R, p) + kI * v), p);
      c.record(rT, std::abs(slash_action(MobiusMap::T(), r_profile(), R, p) - root_of_unity(5, 6) * v), p);
      c.record(rW, std::abs(slash_action(MobiusMap::W(), r_profile(), R, p) - root_of_unity(2, 3) * v), p);
    });
    for (long K : {-1L, 0L, 1L}) {
      const std::string aT = "A'|T = e^{pi i(n1^2+n2^2)/4(K+3)} A'" + k_suffix(K);
      const std::string aW = "A'|ST^2S = sine kernel" + k_suffix(K);
      const std::string cT = "ch|T = -e^{pi i/6} e^{pi i(n1^2+n2^2)/4(K+3)} ch" + k_suffix(K);
      const std::string cW = "ch|ST^2S = -e^{pi i/3} sine kernel" + k_suffix(K);
      c.check_group({aT, aW, cT, cW}, p, [&] {
        const auto ws = enumerate_admissible(K);
        const std::vector<cplx> a = numerator_values(K, p), ch = character_values(K, p);
        const TransformMatrix MaT = aprime_t_matrix(K), MaW = aprime_st2s_matrix(K);
        const TransformMatrix McT = ch_t_matrix(K), McW = ch_st2s_matrix(K);
        const AnomalyProfile prof = aprime_profile(K);
        for (std::size_t r = 0; r < ws.size(); ++r) {
          const Evaluator A = [&, r](const EvalPoint& q) { return numerator_theta(ws[r], q); };
          c.record(aT, std::abs(slash_action(MobiusMap::T(), prof, A, p) - MaT.apply_row(r, a)), p);
          c.record(aW, std::abs(slash_action(MobiusMap::W(), prof, A, p) - MaW.apply_row(r, a)), p);
          c.record(cT, std::abs(character_slash(MobiusMap::T(), ws[r], p) - McT.apply_row(r, ch)), p);
          c.record(cW, std::abs(character_slash(MobiusMap::W(), ws[r], p) - McW.apply_row(r, ch)), p);
        }
      });
    }
  }
  for (long K : {-1L, 0L, 1L}) {
    c.check("ST^2S parity blocks are structural zeros" + k_suffix(K), std::nullopt, [K] {
      double r = 0.0;
      for (const TransformMatrix& M : {aprime_st2s_matrix(K), ch_st2s_matrix(K)})
        for (std::size_t i = 0; i < M.rows(); ++i)
          for (std::size_t j = 0; j < M.cols(); ++j) {
            const bool same = (M.row_labels()[i][0] - M.col_labels()[j][0]) % 2 == 0;
            if (!same && M.at(i, j) != 0.0) r += 1.0;
          }
      return r;
    });
  }
}

// ---------------------------------------------------------------- qhr-f

void qhr_f_suite(Collector& c, std::uint64_t seed, std::size_t samples) {
  Lcg64 rng(seed);
  struct FLaw {
    Generator gen;
    FForm form;
    std::string label;
  };
  const std::vector<FLaw> laws = {
      {Generator::T, FForm::Single, "f^(+-)_{j,m}|T = e^{pi i j^2/2m} f^(+-or-+)_{j,m}"},
      {Generator::ST2S, FForm::Single, "f^(+-)_{j,m}|ST^2S = (-i gamma_m/2m) sum_{k = j mod 2} e^{-pi i(j+k)^2/4m} f^(+-)_{k,m}"},
      {Generator::T, FForm::Sum, "(f_j + f_{-j})|T"},
      {Generator::T, FForm::Difference, "(f_j - f_{-j})|T"},
      {Generator::ST2S, FForm::Sum, "(f_j + f_{-j})|ST^2S"},
      {Generator::ST2S, FForm::Difference, "(f_j - f_{-j})|ST^2S"},
      {Generator::ST2S, FForm::SumReduced, "(f_j + f_{-j})|ST^2S, window -m/2 < k <= m/2"},
      {Generator::ST2S, FForm::DifferenceReduced, "(f_j - f_{-j})|ST^2S, window -m/2 < k <= m/2"},
  };
  for (std::size_t i = 0; i < samples; ++i) {
    const EvalPoint p = sample_point(rng, 1);
    for (long m : {2L, 4L, 6L, 8L}) {
      for (const FLaw& law : laws)
        c.check(law.label, p, [&] {
          double worst = 0.0;
          for (long j = 0; j < 2 * m; ++j)
            for (FSign s : {FSign::Plus, FSign::Minus})
              worst = std::max(worst, f_transform_check(FIndex(j, m, s), law.gen, p, law.form));
          return worst;
        });
      const std::string note_group = "f-function Notes, m=" + std::to_string(m);
      c.check_group({note_group}, p, [&] {
        for (const auto& r : f_note_residuals(m, p)) c.record(r.label, r.residual, p);
      });
    }
    for (long K : {-1L, 1L}) {
      c.check_group({"odd-level f identities" + k_suffix(K)}, p, [&] {
        for (const auto& r : f_odd_level_residuals(K, p)) c.record(r.label + k_suffix(K), r.residual, p);
      });
    }
  }
}

// ---------------------------------------------------------------- qhr-numerators

std::string member_label(OrbitMember o) { return to_string(o); }

void qhr_numerator_suite(Collector& c, std::uint64_t seed, std::size_t samples) {
  Lcg64 rng(seed);
  const SL2TripleData triple = c2_minimal_triple();
  for (std::size_t i = 0; i < samples; ++i) {
    const EvalPoint p = sample_point(rng, 1);
    for (long K : {-1L, 1L}) {
      const long M = K + 3;
      for (const auto& w : qhr_weights(K)) {
        for (FSign s : {FSign::Plus, FSign::Minus}) {
          c.check("shifted-argument numerator = closed theta form (" + std::string(to_string(s)) + ")" + k_suffix(K),
                  p, [&] {
                    const QHRNumerator n = qhr_numerator(s, w, p);
                    return std::abs(n.shifted - n.closed);
                  });
          for (OrbitMember o : {OrbitMember::I, OrbitMember::II, OrbitMember::III, OrbitMember::IV})
            c.check("fourfold f-basis display (" + std::string(to_string(s)) + ", " + member_label(o) + ") = closed form" +
                        k_suffix(K),
                    p, [&] {
                      return std::abs(qhr_fourfold(s, o, w, p) - 4.0 * qhr_numerator_closed(s, orbit_member(w, o), p));
                    });
        }
        c.check("minus numerator second form e^{4 pi i(Lambda+rho|x)} A(H - tau x - x)" + k_suffix(K), p, [&] {
          return std::abs(qhr_numerator_minus_alternative(w, p) - qhr_numerator_shifted(FSign::Minus, w, p));
        });
        c.check("A(tau, H - tau x, 2t + tau/4) = e^{pi i(K+3)tau/2} A(tau, H - tau x, 2t)" + k_suffix(K), p, [&] {
          const std::vector<cplx> zs = triple.shifted(p.tau(), p.z());
          const cplx lhs = numerator_theta(w, EvalPoint(p.tau(), zs, p.t() + p.tau() / 8.0));
          const cplx rhs = std::exp(kPi * kI * static_cast<double>(M) * p.tau() / 2.0) *
                           numerator_theta(w, EvalPoint(p.tau(), zs, p.t()));
          return std::abs(lhs - rhs);
        });
      }
      for (FSign s : {FSign::Plus, FSign::Minus}) {
        const double sg = sign_value(s);
        c.check("symmetry [R-check ch](2(K+3)-n2, 2(K+3)-n1) = " + std::string(s == FSign::Plus ? "+" : "-") +
                    "[R-check ch](n1, n2) (" + to_string(s) + ")" + k_suffix(K),
                p, [&] {
                  double worst = 0.0;
                  const long m = 2 * M;
                  for (const auto& w : enumerate_admissible(K)) {
                    const AdmissibleWeight v(K, m - w.n2(), m - w.n1());
                    worst = std::max(worst,
                                     std::abs(qhr_numerator_shifted(s, v, p) - sg * qhr_numerator_shifted(s, w, p)));
                  }
                  return worst;
                });
      }
    }
  }
}

// ---------------------------------------------------------------- qhr-transforms

std::string law_label(DenominatorKind kind, Generator gen, LawSource source) {
  return "R-check^(" + kind_name(kind) + ")|" + gen_name(gen) +
         (source == LawSource::GeneralShape ? " (general shape)" : " (C2 closed form)");
}

// Exponent r of the phase e^{pi i r} of each law, by substitution of the shape data.
std::optional<Rational> general_exponent(DenominatorKind kind, Generator gen, const QHRShape& s) {
  const Rational g0(s.dim_g0), gf(s.dim_gf);
  if (gen == Generator::T) {
    if (kind == DenominatorKind::Star) return gf / Rational(12);
    return (Rational(3) * g0 - gf) / Rational(24);
  }
  if (gen == Generator::ST2S) {
    if (kind == DenominatorKind::Plus) return (gf - Rational(3) * g0) / Rational(6);
    if (kind == DenominatorKind::Minus) return -(gf + Rational(3) * g0) / Rational(12);
  }
  return std::nullopt;
}

Rational c2_exponent(DenominatorKind kind, Generator gen) {
  if (gen == Generator::T) return Rational(1, 4);
  return kind == DenominatorKind::Plus ? Rational(1) : Rational(1, 2);
}

bool same_mod_two(const Rational& a, const Rational& b) {
  const Rational d = (a - b) / Rational(2);
  return d.denominator() == 1;
}

void qhr_transform_suite(Collector& c, std::uint64_t seed, std::size_t samples) {
  const QHRShape shape = c2_minimal_shape();
  c.check("general-shape phases = C2 closed-form phases (exact substitution)", std::nullopt, [&] {
    double r = 0.0;
    for (DenominatorKind k : {DenominatorKind::Plus, DenominatorKind::Minus})
      for (Generator g : {Generator::T, Generator::ST2S}) {
        const auto e = general_exponent(k, g, shape);
        if (!e || !same_mod_two(*e, c2_exponent(k, g))) r += 1.0;
        const DenominatorLaw a = denominator_law(k, g, LawSource::GeneralShape, shape);
        const DenominatorLaw b = denominator_law(k, g, LawSource::C2ClosedForm, shape);
        if (a.target != b.target) r += 1.0;
      }
    return r;
  });
  c.check("QHR transforms reject even K", std::nullopt, [] {
    double r = 0.0;
    for (long K : {0L, 2L})
      for (Generator g : {Generator::T, Generator::ST2S}) {
        for (int which = 0; which < 2; ++which) {
          try {
            if (which == 0) qhr_transform_matrix(K, g);
            else qhr_character_transform_matrix(K, g);
            r += 1.0;
          } catch (const Error& e) {
            if (e.kind() != ErrorKind::BadArgument) r += 1.0;
          }
        }
      }
    return r;
  });

  Lcg64 rng(seed);
  const std::string same = "C2 denominators = general-shape formula (+, -, *)";
  const std::string forms = "R-check classical form = tilde form (+, -, *)";
  for (std::size_t i = 0; i < samples; ++i) {
    const EvalPoint p = sample_guarded(rng, 1, require_qhr_guard);
    c.check_group({same, forms}, p, [&] {
      for (DenominatorKind k : {DenominatorKind::Plus, DenominatorKind::Minus, DenominatorKind::Star}) {
        const QHRDenominatorForms f = qhr_denominator_forms(k, shape, p);
        c.record(same, std::abs(qhr_denominator_c2(k, p) - f.tilde), p);
        c.record(forms, std::abs(f.classical - f.tilde), p);
      }
    });
    for (LawSource src : {LawSource::GeneralShape, LawSource::C2ClosedForm})
      for (DenominatorKind k : {DenominatorKind::Plus, DenominatorKind::Minus, DenominatorKind::Star})
        for (Generator g : {Generator::S, Generator::T, Generator::ST2S}) {
          try {
            denominator_law(k, g, src, shape);
          } catch (const Error&) {
            continue;
          }
          c.check(law_label(k, g, src), p, [&] { return qhr_denominator_transform_check(k, g, p, src); });
        }

    for (long K : {-1L, 1L}) {
      std::vector<std::string> labels;
      for (const char* fam : {"numerator", "character"})
        for (int s : {1, -1})
          for (Generator g : {Generator::T, Generator::ST2S})
            labels.push_back(std::string(fam) + " (" + sign_name(s) + ")|" + gen_name(g) + k_suffix(K));
      c.check_group(labels, p, [&] {
        const TransformMatrix NT = qhr_transform_matrix(K, Generator::T);
        const TransformMatrix NW = qhr_transform_matrix(K, Generator::ST2S);
        const TransformMatrix CT = qhr_character_transform_matrix(K, Generator::T);
        const TransformMatrix CW = qhr_character_transform_matrix(K, Generator::ST2S);
        std::vector<cplx> nv, cv;
        std::vector<std::pair<FSign, AdmissibleWeight>> cols;
        for (const auto& l : NT.col_labels()) {
          const FSign s = l[0] > 0 ? FSign::Plus : FSign::Minus;
          const AdmissibleWeight w(K, l[1], l[2]);
          cols.emplace_back(s, w);
          nv.push_back(qhr_numerator_shifted(s, w, p));
          cv.push_back(qhr_character(s, w, p));
        }
        for (std::size_t r = 0; r < cols.size(); ++r) {
          const auto& [s, w] = cols[r];
          const std::string sn = std::string(" (") + sign_name(sign_value(s)) + ")|";
          for (Generator g : {Generator::T, Generator::ST2S}) {
            const MobiusMap map = generator_map(g);
            const TransformMatrix& Mn = g == Generator::T ? NT : NW;
            const TransformMatrix& Mc = g == Generator::T ? CT : CW;
            c.record("numerator" + sn + gen_name(g) + k_suffix(K),
                     std::abs(qhr_numerator_slash(map, s, w, p) - Mn.apply_row(r, nv)), p);
            c.record("character" + sn + gen_name(g) + k_suffix(K),
                     std::abs(qhr_character_slash(map, s, w, p) - Mc.apply_row(r, cv)), p);
          }
        }
      });
    }
  }
}

// ---------------------------------------------------------------- group-closure

TransformMatrix inverse(const TransformMatrix& m) {
  const Eigen::Index n = static_cast<Eigen::Index>(m.rows());
  Eigen::MatrixXcd a(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = m.at(i, j);
  const Eigen::MatrixXcd inv = a.partialPivLu().inverse();
  TransformMatrix out(m.col_labels(), m.row_labels());
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) out.at(i, j) = inv(i, j);
  return out;
}

TransformMatrix identity_matrix(const std::vector<TransformMatrix::Label>& labels) {
  TransformMatrix out(labels, labels);
  for (std::size_t i = 0; i < labels.size(); ++i) out.at(i, i) = 1.0;
  return out;
}

enum class Letter { T, TInv, W, WInv, MinusI };

MobiusMap letter_map(Letter l) {
  switch (l) {
    case Letter::T: return MobiusMap::T();
    case Letter::TInv: return MobiusMap::T().inverse();
    case Letter::W: return MobiusMap::W();
    case Letter::WInv: return MobiusMap::W().inverse();
    case Letter::MinusI: return MobiusMap::minus_identity();
  }
  return MobiusMap::identity();
}

std::vector<Letter> random_word(Lcg64& rng, bool allow_minus_identity) {
  const int letters = allow_minus_identity ? 5 : 4;
  const int length = 1 + static_cast<int>(rng.uniform() * 4.0);
  std::vector<Letter> word;
  for (int i = 0; i < length; ++i) word.push_back(static_cast<Letter>(static_cast<int>(rng.uniform() * letters)));
  return word;
}

// Product of generator matrices along the word; the slash action is a right action.
TransformMatrix word_matrix(const std::vector<Letter>& word, const TransformMatrix& mt, const TransformMatrix& mw) {
  TransformMatrix out = identity_matrix(mt.row_labels());
  const TransformMatrix mt_inv = inverse(mt), mw_inv = inverse(mw);
  for (Letter l : word) {
    switch (l) {
      case Letter::T: out = out * mt; break;
      case Letter::TInv: out = out * mt_inv; break;
      case Letter::W: out = out * mw; break;
      case Letter::WInv: out = out * mw_inv; break;
      case Letter::MinusI: break;
    }
  }
  return out;
}

MobiusMap word_map(const std::vector<Letter>& word) {
  MobiusMap out = MobiusMap::identity();
  for (Letter l : word) out = out * letter_map(l);
  return out;
}

long long ext_gcd(long long a, long long b, long long& x, long long& y) {
  if (b == 0) {
    x = a >= 0 ? 1 : -1;
    y = 0;
    return std::llabs(a);
  }
  long long x1 = 0, y1 = 0;
  const long long g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

// Random element of Gamma0(2) with entries bounded by 50 in absolute value.
MobiusMap random_gamma0(Lcg64& rng) {
  for (;;) {
    const long long c = 2 * static_cast<long long>(rng.uniform() * 51.0) - 50;
    const long long d = static_cast<long long>(rng.uniform() * 101.0) - 50;
    if (std::gcd(c, d) != 1) continue;
    long long x = 0, y = 0;
    ext_gcd(d, c, x, y);  // d x + c y = 1
    long long a = x, b = -y;
    if (c != 0) {
      const long long k = -static_cast<long long>(std::llround(static_cast<double>(a) / static_cast<double>(c)));
      a += k * c;
      b += k * d;
    }
    if (std::llabs(a) <= 50 && std::llabs(b) <= 50) return {a, b, c, d};
  }
}

void group_closure_suite(Collector& c, std::uint64_t seed, std::size_t samples) {
  Lcg64 rng(seed);
  c.check("Gamma0(2) decomposition round trip (exact)", std::nullopt, [&] {
    double r = 0.0;
    for (std::size_t i = 0; i < samples; ++i) {
      const MobiusMap g = random_gamma0(rng);
      if (recompose(gamma0_decompose(g)) != g) r += 1.0;
    }
    return r;
  });
  c.check("odd lower-left entry is rejected", std::nullopt, [] {
    try {
      gamma0_decompose(MobiusMap::S());
      return 1.0;
    } catch (const Error& e) {
      return e.kind() == ErrorKind::NotInGamma0 ? 0.0 : 1.0;
    }
  });

  const std::size_t points = std::max<std::size_t>(1, samples / 10);
  const std::vector<MobiusMap> gens{MobiusMap::T(), MobiusMap::W()};
  for (std::size_t i = 0; i < points; ++i) {
    const EvalPoint p = sample_point(rng, 1);
    const EvalPoint p0(p.tau(), {}, p.t());
    c.check("right action (F|A)|B = sigma F|AB, eta, A, B in {T, W}", p, [&] {
      double worst = 0.0;
      const Evaluator eta = [](const EvalPoint& q) { return eval_eta_tilde(q); };
      for (const auto& A : gens)
        for (const auto& B : gens) {
          const cplx lhs = slash_action(B, eta_profile(), slashed(A, eta_profile(), eta), p0);
          const cplx rhs = slash_cocycle_sign(A, B, p.tau(), 1) * slash_action(A * B, eta_profile(), eta, p0);
          worst = std::max(worst, std::abs(lhs - rhs));
        }
      return worst;
    });
    c.check("right action (F|A)|B = sigma F|AB, theta_{j,m}, A, B in {T, W}", p, [&] {
      double worst = 0.0;
      for (long m : {2L, 4L}) {
        const AnomalyProfile prof = theta_profile(m);
        for (long j = 0; j < 2 * m; ++j) {
          const Evaluator f = [j, m](const EvalPoint& q) { return eval_theta_tilde(ThetaIndex(j, m), q); };
          for (const auto& A : gens)
            for (const auto& B : gens) {
              const cplx lhs = slash_action(B, prof, slashed(A, prof, f), p);
              const cplx rhs = slash_cocycle_sign(A, B, p.tau(), 1) * slash_action(A * B, prof, f, p);
              worst = std::max(worst, std::abs(lhs - rhs));
            }
        }
      }
      return worst;
    });
  }

  for (long K : {-1L, 0L, 1L}) {
    const std::string label = "ch word action = matrix product, words of length <= 4" + k_suffix(K);
    for (std::size_t i = 0; i < points; ++i) {
      const EvalPoint p = sample_guarded(rng, 2, require_character_guard);
      const auto word = random_word(rng, true);
      c.check(label, p, [&] {
        const auto ws = enumerate_admissible(K);
        const TransformMatrix M = word_matrix(word, ch_t_matrix(K), ch_st2s_matrix(K));
        const MobiusMap g = word_map(word);
        const std::vector<cplx> v = character_values(K, p);
        double worst = 0.0;
        for (std::size_t r = 0; r < ws.size(); ++r)
          worst = std::max(worst, std::abs(character_slash(g, ws[r], p) - M.apply_row(r, v)));
        return worst;
      });
    }
  }
  for (long K : {-1L, 1L}) {
    const std::string label =
        "QHR character word action = matrix product (corrected minus kernel), words of length <= 4" + k_suffix(K);
    for (std::size_t i = 0; i < points; ++i) {
      const EvalPoint p = sample_guarded(rng, 1, require_qhr_guard);
      const auto word = random_word(rng, false);
      c.check(label, p, [&] {
        const TransformMatrix mt = qhr_character_transform_matrix(K, Generator::T, KernelReading::Corrected);
        const TransformMatrix mw = qhr_character_transform_matrix(K, Generator::ST2S, KernelReading::Corrected);
        const TransformMatrix M = word_matrix(word, mt, mw);
        const MobiusMap g = word_map(word);
        std::vector<cplx> v;
        std::vector<std::pair<FSign, AdmissibleWeight>> cols;
        for (const auto& l : mt.col_labels()) {
          const FSign s = l[0] > 0 ? FSign::Plus : FSign::Minus;
          cols.emplace_back(s, AdmissibleWeight(K, l[1], l[2]));
          v.push_back(qhr_character(s, cols.back().second, p));
        }
        double worst = 0.0;
        for (std::size_t r = 0; r < cols.size(); ++r)
          worst = std::max(worst, std::abs(qhr_character_slash(g, cols[r].first, cols[r].second, p) - M.apply_row(r, v)));
        return worst;
      });
    }
  }
}

struct SuiteSpec {
  std::size_t samples;
  double tolerance;
};

const std::map<std::string, SuiteSpec>& suite_specs() {
  static const std::map<std::string, SuiteSpec> specs{
      {"theta-transforms", {50, 1e-9}},    {"gauss", {1, 1e-12}},          {"admissible", {1, 1e-12}},
      {"character-numerators", {20, 1e-12}}, {"character-gamma0", {20, 1e-8}}, {"qhr-f", {20, 1e-10}},
      {"qhr-numerators", {20, 1e-10}},     {"qhr-transforms", {20, 1e-8}}, {"group-closure", {200, 1e-8}},
  };
  return specs;
}

const SuiteSpec& spec_of(const std::string& name) {
  const auto& specs = suite_specs();
  auto it = specs.find(name);
  if (it == specs.end()) throw Error(ErrorKind::UnknownSuite, "unknown suite '" + name + "'");
  return it->second;
}

nlohmann::ordered_json point_json(const std::optional<EvalPoint>& p) {
  if (!p) return nullptr;
  auto pair = [](cplx v) { return nlohmann::ordered_json::array({v.real(), v.imag()}); };
  nlohmann::ordered_json zs = nlohmann::ordered_json::array();
  for (const cplx& z : p->zs()) zs.push_back(pair(z));
  return {{"tau", pair(p->tau())}, {"z", zs}, {"t", pair(p->t())}};
}

nlohmann::ordered_json residual_json(double r) {
  if (!std::isfinite(r)) return nullptr;
  return r;
}

std::string format15(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string label_text(const TransformMatrix::Label& l) {
  std::string out;
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (i) out += ':';
    out += std::to_string(l[i]);
  }
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"theta-transforms", "gauss",          "admissible",
                                              "character-numerators", "character-gamma0", "qhr-f",
                                              "qhr-numerators", "qhr-transforms", "group-closure"};
  return names;
}

std::size_t default_samples(const std::string& name) { return spec_of(name).samples; }

double default_tolerance(const std::string& name) { return spec_of(name).tolerance; }

SuiteReport run_suite(const std::string& name, std::uint64_t seed, std::size_t samples, double tolerance) {
  spec_of(name);
  Collector c;
  if (name == "theta-transforms") theta_suite(c, seed, samples);
  else if (name == "gauss") gauss_suite(c);
  else if (name == "admissible") admissible_suite(c);
  else if (name == "character-numerators") character_numerator_suite(c, seed, samples);
  else if (name == "character-gamma0") character_gamma0_suite(c, seed, samples);
  else if (name == "qhr-f") qhr_f_suite(c, seed, samples);
  else if (name == "qhr-numerators") qhr_numerator_suite(c, seed, samples);
  else if (name == "qhr-transforms") qhr_transform_suite(c, seed, samples);
  else group_closure_suite(c, seed, samples);

  SuiteReport r;
  r.suite_name = name;
  r.seed = seed;
  r.samples = samples;
  r.tolerance = tolerance;
  r.identities = c.take();
  r.max_abs_residual = 0.0;
  for (const auto& id : r.identities)
    if (id.residual > r.max_abs_residual || (!r.worst_point && id.residual == r.max_abs_residual)) {
      r.max_abs_residual = id.residual;
      r.worst_point = id.worst_point;
    }
  r.pass = !r.identities.empty() && r.max_abs_residual < tolerance;
  return r;
}

SuiteReport run_suite(const std::string& name, std::uint64_t seed) {
  const SuiteSpec& s = spec_of(name);
  return run_suite(name, seed, s.samples, s.tolerance);
}

std::string to_json(const SuiteReport& report) {
  nlohmann::ordered_json ids = nlohmann::ordered_json::array();
  for (const auto& id : report.identities) {
    nlohmann::ordered_json e{{"label", id.label}, {"residual", residual_json(id.residual)}};
    if (!id.error.empty()) e["error"] = id.error;
    ids.push_back(std::move(e));
  }
  const nlohmann::ordered_json j{{"suite_name", report.suite_name},
                         {"seed", report.seed},
                         {"samples", report.samples},
                         {"tolerance", report.tolerance},
                         {"max_abs_residual", residual_json(report.max_abs_residual)},
                         {"worst_point", point_json(report.worst_point)},
                         {"pass", report.pass},
                         {"identities", ids}};
  return j.dump(2) + "\n";
}

std::string emit_matrix(const std::string& which, long param, MatrixFormat format) {
  std::optional<TransformMatrix> m;
  if (which == "theta_S") {
    if (param < 1) throw Error(ErrorKind::BadArgument, "theta_S needs m >= 1");
    m = theta_transform_matrix(param, Generator::S);
  } else if (which == "theta_ST2S") {
    m = theta_transform_matrix(param, Generator::ST2S);
  } else if (which == "ch_ST2S") {
    m = ch_st2s_matrix(param);
  } else if (which == "qhr_ST2S") {
    m = qhr_character_transform_matrix(param, Generator::ST2S);
  } else {
    throw Error(ErrorKind::BadArgument, "unknown matrix '" + which + "'");
  }
  m->validate();
  if (format == MatrixFormat::Csv) {
    std::string out = "row_label,col_label,re,im\n";
    for (std::size_t r = 0; r < m->rows(); ++r)
      for (std::size_t c = 0; c < m->cols(); ++c) {
        const cplx v = m->at(r, c);
        out += label_text(m->row_labels()[r]) + "," + label_text(m->col_labels()[c]) + "," + format15(v.real()) + "," +
               format15(v.imag()) + "\n";
      }
    return out;
  }
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < m->rows(); ++r)
    for (std::size_t c = 0; c < m->cols(); ++c) {
      const cplx v = m->at(r, c);
      entries.push_back({{"row_label", label_text(m->row_labels()[r])},
                         {"col_label", label_text(m->col_labels()[c])},
                         {"re", std::stod(format15(v.real()))},
                         {"im", std::stod(format15(v.imag()))}});
    }
  const nlohmann::ordered_json j{{"which", which}, {"param", param}, {"rows", m->rows()}, {"cols", m->cols()},
                         {"entries", entries}};
  return j.dump(2) + "\n";
}

}  // namespace c2qhr
