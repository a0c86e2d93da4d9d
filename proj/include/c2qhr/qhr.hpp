#pragma once

#include <string>
#include <vector>

#include "c2qhr/characters.hpp"

namespace c2qhr {

/// Residual of one named identity.
struct LabelledResidual {
  std::string label;
  double residual;
};

enum class FSign { Plus, Minus };

inline int sign_value(FSign s) { return s == FSign::Plus ? 1 : -1; }
inline FSign flip(FSign s) { return s == FSign::Plus ? FSign::Minus : FSign::Plus; }
const char* to_string(FSign s);

/// Index of f^{(+-)}_{j,m} with j stored mod 2m.
class FIndex {
 public:
  /// Throws BadArgument unless m is positive and even.
  FIndex(long j, long m, FSign sign);

  long j() const { return j_; }
  long m() const { return m_; }
  FSign sign() const { return sign_; }

 private:
  long j_;
  long m_;
  FSign sign_;
};

/// f^{(+-)}_{j,m} = theta~_{j,m} +- theta~_{j+m,m}.
cplx f_pm(const FIndex& idx, const EvalPoint& p, const TruncationPolicy& policy = {});

/// Which f-combination a transform check applies to.
enum class FForm {
  Single,             ///< f_j
  Sum,                ///< f_j + f_{-j}, full window k mod 2m
  Difference,         ///< f_j - f_{-j}, full window
  SumReduced,         ///< f_j + f_{-j}, window -m/2 < k <= m/2 with {1 +- (-1)^{(j+k)/2} e^{-pi i m/4}}
  DifferenceReduced,  ///< f_j - f_{-j}, reduced window
};

/// |LHS - RHS| of the f transform law for (idx, gen, form) at p, using the theta profile.
/// T and ST2S are supported; reduced forms need ST2S. Throws BadArgument otherwise.
double f_transform_check(const FIndex& idx, Generator gen, const EvalPoint& p, FForm form = FForm::Single,
                         const TruncationPolicy& policy = {});

/// Periodicity, m/2-vanishing and j' = j - m reindexing identities over all j, as maxima per identity.
std::vector<LabelledResidual> f_note_residuals(long m, const EvalPoint& p, const TruncationPolicy& policy = {});

/// Odd-K identities at level 2(K+3): the reduced ST2S laws with sign (-1)^{(K+3)/2}, the mixed
/// (+)/(-) combinations and their reflected forms j -> -j + (K+3). Throws BadArgument for even K.
std::vector<LabelledResidual> f_odd_level_residuals(long K, const EvalPoint& p,
                                                    const TruncationPolicy& policy = {});

/// Root-data shape of a W-algebra denominator. Linear forms are coefficient vectors over zs.
struct QHRShape {
  int ell = 0;
  int dim_g0 = 0;
  int dim_g_half = 0;
  int dim_gf = 0;
  std::vector<std::vector<double>> delta0_plus;
  std::vector<std::vector<double>> delta_half;

  /// Throws BadArgument on negative counts, mismatched form lengths or an empty z-dimension.
  void validate() const;
  std::size_t z_dim() const;
  /// (3/2) ell - (1/2) dim g^f.
  double eta_exponent() const;
  /// w in e^{pi i w t}: eta exponent + 2|Delta0+| + |Delta_1/2|.
  double t_weight() const;
  /// Slash weight 2 x (eta exponent/2 + |Delta0+|/2 + |Delta_1/2|/4) and
  /// Q = (2 sum_{Delta0+} a a^T + sum_{Delta_1/2} a a^T)/w. Throws BadArgument for a non-integral weight.
  AnomalyProfile anomaly_profile() const;
};

/// C2, minimal nilpotent, H = z alpha_2: ell 2, dims (4, 2, 6), Delta0+ = {2z}, Delta_1/2 = {-z, z}.
QHRShape c2_minimal_shape();

enum class DenominatorKind { Plus, Minus, Star };
const char* to_string(DenominatorKind k);

struct QHRDenominatorForms {
  /// e^{pi i t (ell + dim g^f)/2} eta^{e} prod vartheta.
  cplx classical;
  /// eta~^{e} prod vartheta~.
  cplx tilde;
};

/// General-shape denominator in both forms. The square root over Delta_1/2 is resolved by pairing
/// a with -a; throws BranchAmbiguity if the forms do not pair or the eta exponent is not integral.
QHRDenominatorForms qhr_denominator_forms(DenominatorKind kind, const QHRShape& shape, const EvalPoint& p,
                                          const TruncationPolicy& policy = {});

/// Tilde form of the general-shape denominator.
cplx qhr_denominator(DenominatorKind kind, const QHRShape& shape, const EvalPoint& p,
                     const TruncationPolicy& policy = {});

/// vartheta~_11(2z) vartheta~_ab(z) with ab = 01, 00, 10 for plus, minus, star.
cplx qhr_denominator_c2(DenominatorKind kind, const EvalPoint& p, const TruncationPolicy& policy = {});

/// Target and phase of a denominator transform law: R^{(kind)}|_gen = phase R^{(target)}.
struct DenominatorLaw {
  DenominatorKind target;
  cplx phase;
};

enum class LawSource { GeneralShape, C2ClosedForm };

/// Law from the general-shape phase formula (S, T for every kind; ST2S for plus and minus) or from
/// the C2 closed forms (T and ST2S for plus and minus). Throws BadArgument when no law is stated.
DenominatorLaw denominator_law(DenominatorKind kind, Generator gen, LawSource source,
                               const QHRShape& shape = c2_minimal_shape());

/// |R^{(kind)}|_gen(p) - phase R^{(target)}(p)| for the C2 shape.
double qhr_denominator_transform_check(DenominatorKind kind, Generator gen, const EvalPoint& p,
                                       LawSource source = LawSource::GeneralShape,
                                       const TruncationPolicy& policy = {});

/// sl2-triple of the minimal nilpotent of C2: x = theta/2 with |x|^2 = 1/2.
struct SL2TripleData {
  HVector x;
  Rational norm2_x;
  /// H - tau x in (z1, z2) coordinates for H = z alpha_2.
  std::vector<cplx> shifted(cplx tau, cplx z) const;
  /// H - tau x + x.
  std::vector<cplx> shifted_plus_x(cplx tau, cplx z) const;
  /// H - tau x - x.
  std::vector<cplx> shifted_minus_x(cplx tau, cplx z) const;
};

SL2TripleData c2_minimal_triple();

/// Numerator by evaluating A at the shifted argument with t-argument 2t + (tau/2)|x|^2 (method A).
cplx qhr_numerator_shifted(FSign sign, const AdmissibleWeight& w, const EvalPoint& p,
                           const TruncationPolicy& policy = {});

/// Minus numerator in its second displayed form e^{4 pi i (Lambda+rho|x)} A(H - tau x - x, ...).
cplx qhr_numerator_minus_alternative(const AdmissibleWeight& w, const EvalPoint& p,
                                     const TruncationPolicy& policy = {});

/// Closed theta form of the numerator (method B).
cplx qhr_numerator_closed(FSign sign, const AdmissibleWeight& w, const EvalPoint& p,
                          const TruncationPolicy& policy = {});

struct QHRNumerator {
  cplx shifted;
  cplx closed;
};

QHRNumerator qhr_numerator(FSign sign, const AdmissibleWeight& w, const EvalPoint& p,
                           const TruncationPolicy& policy = {});

/// Numerator profile: t-weight 4(K+3), ell = 2, Q = z^2.
AnomalyProfile qhr_numerator_profile(long K);

/// Orbit member of the fourfold expansion: (n1,n2), (m-n1,n2), (n1,m-n2), (m-n1,m-n2).
enum class OrbitMember { I, II, III, IV };
const char* to_string(OrbitMember o);
AdmissibleWeight orbit_member(const AdmissibleWeight& w, OrbitMember o);

/// Value of the displayed f-basis expansion for (sign, member), built from (n1, n2) of w.
/// Requires n1 odd and n2 even.
cplx qhr_fourfold(FSign sign, OrbitMember member, const AdmissibleWeight& w, const EvalPoint& p,
                  const TruncationPolicy& policy = {});

/// Max over the four members of |display - 4 x closed numerator of the member|.
double qhr_fourfold_check(FSign sign, const AdmissibleWeight& w, const EvalPoint& p,
                          const TruncationPolicy& policy = {});

/// Throws NearSingularity unless z and 2z keep the guard distance from Z + Z tau.
void require_qhr_guard(const EvalPoint& p);

/// Displayed character: member-I expansion divided by 4 R-check^{(sign)}.
cplx qhr_character(FSign sign, const AdmissibleWeight& w, const EvalPoint& p, const TruncationPolicy& policy = {});

/// Weights with n1 odd, n2 even, lexicographic.
std::vector<AdmissibleWeight> qhr_weights(long K);

/// Which kernel of the minus-family ST2S law to use.
enum class KernelReading {
  AsPrinted,  ///< (e1+ + e1-)(e2+ - e2-)
  Corrected,  ///< (e1+ - e1-)(e2+ - e2-)
};

/// Numerator transform matrix over labels (s, n1, n2), s = +1/-1, for qhr_weights(K).
/// ST2S is block-diagonal in s; T swaps the blocks. Throws BadArgument for even K or K < -1.
TransformMatrix qhr_transform_matrix(long K, Generator gen, KernelReading reading = KernelReading::AsPrinted);

/// Rows of qhr_transform_matrix belonging to one sign.
TransformMatrix qhr_transform_matrix(FSign sign, long K, Generator gen,
                                     KernelReading reading = KernelReading::AsPrinted);

/// Character transform matrix, same labelling.
TransformMatrix qhr_character_transform_matrix(long K, Generator gen,
                                               KernelReading reading = KernelReading::AsPrinted);

/// N|_g for the defining numerator (method A).
cplx qhr_numerator_slash(const MobiusMap& g, FSign sign, const AdmissibleWeight& w, const EvalPoint& p,
                         const TruncationPolicy& policy = {});

/// Composite (N|_g)/(4 R-check|_g) for the displayed character.
cplx qhr_character_slash(const MobiusMap& g, FSign sign, const AdmissibleWeight& w, const EvalPoint& p,
                         const TruncationPolicy& policy = {});

}  // namespace c2qhr
