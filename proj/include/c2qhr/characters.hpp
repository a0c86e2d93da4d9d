#pragma once

#include "c2qhr/admissible.hpp"
#include "c2qhr/modular_action.hpp"

namespace c2qhr {

/// A'-family profile: t-weight 4(K+3), ell = 2, Q = (z1^2 + z2^2)/2.
AnomalyProfile aprime_profile(long K);

/// R-family profile: t-weight 6, ell = 2, Q = z1^2 + z2^2.
AnomalyProfile r_profile();

/// Matrix label (n1, n2) of a weight.
TransformMatrix::Label weight_label(const AdmissibleWeight& w);

/// Numerator A' as the double lattice sum over (j, k) in [-window, window]^2 of
/// signed exponentials e^{lambda(h)}, lambda built from exact inner products in the
/// root datum. Throws NonConvergent if the outer shell exceeds the tail tolerance.
cplx numerator_lattice(const AdmissibleWeight& w, const EvalPoint& p, long window = 8,
                       const TruncationPolicy& policy = {});

/// A'(tau, z1, z2, t) = [theta~_{n1,m} - theta~_{-n1,m}](z1) [theta~_{n2,m} - theta~_{-n2,m}](z2), m = 2(K+3).
cplx numerator_theta(const AdmissibleWeight& w, const EvalPoint& p, const TruncationPolicy& policy = {});

/// Both displayed forms of the denominator R.
struct DenominatorForms {
  /// e^{6 pi i t} eta^{-2} prod vartheta_11.
  cplx classical;
  /// eta~^{-2} prod vartheta~_11.
  cplx tilde;
};

DenominatorForms denominator_R_forms(const EvalPoint& p, const TruncationPolicy& policy = {});

/// R(tau, z1, z2, t) in the tilde form. Throws DivideByZero if eta~ vanishes numerically.
cplx denominator_R(const EvalPoint& p, const TruncationPolicy& policy = {});

/// Distance from z to the lattice Z + Z tau.
double lattice_distance(cplx z, cplx tau);

/// Minimum distance used by every character guard.
inline constexpr double kSingularityGuard = 0.05;

/// Throws NearSingularity if any of z1, z2, z1 - z2, z1 + z2 lies within the guard of Z + Z tau.
void require_character_guard(const EvalPoint& p);

/// ch = A'/R. Throws NearSingularity if the guard fails.
cplx character(const AdmissibleWeight& w, const EvalPoint& p, const TruncationPolicy& policy = {});

/// Composite action (A'|_g)/(R|_g) at p, each factor under its own profile.
cplx character_slash(const MobiusMap& g, const AdmissibleWeight& w, const EvalPoint& p,
                     const TruncationPolicy& policy = {});

/// A'|_T: diagonal e^{pi i (n1^2+n2^2)/4(K+3)} over enumerate_admissible(K).
TransformMatrix aprime_t_matrix(long K);

/// A'|_{ST^2S}: (gamma_{2(K+3)}^2/4(K+3)^2) e^{-pi i(n1^2+n2^2)/8(K+3)} e^{-pi i(k1^2+k2^2)/8(K+3)}
/// sin(pi n1 k1/4(K+3)) sin(pi n2 k2/4(K+3)) for k_i = n_i mod 2, else 0.
TransformMatrix aprime_st2s_matrix(long K);

/// ch|_T: diagonal -e^{pi i/6} e^{pi i (n1^2+n2^2)/4(K+3)}.
TransformMatrix ch_t_matrix(long K);

/// ch|_{ST^2S}: -e^{pi i/3} times the A' kernel.
TransformMatrix ch_st2s_matrix(long K);

}  // namespace c2qhr
