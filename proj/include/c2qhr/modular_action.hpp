#pragma once

#include <functional>
#include <string>
#include <vector>

#include "c2qhr/special_functions.hpp"

namespace c2qhr {

/// Integer matrix (a b; c d) with ad - bc = 1.
class MobiusMap {
 public:
  /// Throws BadArgument unless ad - bc = 1.
  MobiusMap(long long a, long long b, long long c, long long d);

  static MobiusMap identity() { return {1, 0, 0, 1}; }
  static MobiusMap T() { return {1, 1, 0, 1}; }
  static MobiusMap S() { return {0, -1, 1, 0}; }
  /// ST^2S = (-1 0; 2 -1).
  static MobiusMap W() { return {-1, 0, 2, -1}; }
  static MobiusMap minus_identity() { return {-1, 0, 0, -1}; }

  long long a() const { return a_; }
  long long b() const { return b_; }
  long long c() const { return c_; }
  long long d() const { return d_; }

  MobiusMap operator*(const MobiusMap& o) const;
  bool operator==(const MobiusMap& o) const = default;
  MobiusMap inverse() const { return {d_, -b_, -c_, a_}; }
  MobiusMap power(long k) const;
  bool in_gamma0_2() const { return c_ % 2 == 0; }

  /// c tau + d.
  cplx automorphy(cplx tau) const { return static_cast<double>(c_) * tau + static_cast<double>(d_); }
  /// (a tau + b)/(c tau + d).
  cplx act(cplx tau) const;
  std::string to_string() const;

 private:
  long long a_, b_, c_, d_;
};

/// Symmetric quadratic form over the z-coordinates, entries rational-valued doubles.
using QuadForm = std::vector<std::vector<double>>;

/// Data needed by the slash action for one function family.
struct AnomalyProfile {
  /// w in the prefactor e^{pi i w t}.
  double t_weight = 0.0;
  /// ell in (c tau + d)^{-ell/2}.
  int ell = 0;
  /// Q, used as (z|z) = z^T Q z.
  QuadForm quad_form;

  /// Throws BadArgument if ell < 0 or Q is not square and symmetric.
  void validate() const;
  /// z^T Q z; throws BadArgument on a dimension mismatch.
  cplx norm2(const std::vector<cplx>& zs) const;
};

/// Diagonal quadratic form c * I_dim.
QuadForm scalar_form(std::size_t dim, double c);

/// theta~_{j,m}: t-weight m, ell = 1, Q = z^2.
AnomalyProfile theta_profile(long m);
/// eta~: t-weight 1, ell = 1, no z.
AnomalyProfile eta_profile();
/// vartheta~_ab: t-weight 2, ell = 1, Q = z^2.
AnomalyProfile vartheta_profile();

using Evaluator = std::function<cplx(const EvalPoint&)>;

/// F|_A(p) = (c tau+d)^{-ell/2} F(A tau, z/(c tau+d), t - c (z|z)/(2(c tau+d))),
/// principal square root. Throws BranchAmbiguity for odd ell when c tau + d is a
/// negative real number.
cplx slash_action(const MobiusMap& map, const AnomalyProfile& profile, const Evaluator& f,
                  const EvalPoint& p);

/// The evaluator p -> F|_A(p).
Evaluator slashed(const MobiusMap& map, const AnomalyProfile& profile, Evaluator f);

/// Sign sigma with (F|_A)|_B = sigma F|_{AB} at tau. Always 1 for even ell;
/// for odd ell it compares principal square roots.
double slash_cocycle_sign(const MobiusMap& A, const MobiusMap& B, cplx tau, int ell);

/// gamma_m = sum_{k mod 2m} e^{pi i k^2/m}; throws BadArgument unless m is positive and even.
cplx gauss_sum(long m);

/// sum_{k mod 2m} e^{pi i k(k+n)/m}; throws BadArgument unless m is positive and even.
cplx vanishing_sum_check(long m, long n);

/// Finite linear map between labelled function families:
/// f_row|_g = sum_col M[row, col] f_col.
class TransformMatrix {
 public:
  using Label = std::vector<long>;

  TransformMatrix(std::vector<Label> rows, std::vector<Label> cols);

  std::size_t rows() const { return row_labels_.size(); }
  std::size_t cols() const { return col_labels_.size(); }
  const std::vector<Label>& row_labels() const { return row_labels_; }
  const std::vector<Label>& col_labels() const { return col_labels_; }
  cplx& at(std::size_t r, std::size_t c) { return entries_.at(r * cols() + c); }
  cplx at(std::size_t r, std::size_t c) const { return entries_.at(r * cols() + c); }

  /// Row r applied to column-family values.
  cplx apply_row(std::size_t r, const std::vector<cplx>& values) const;
  /// Product (this then other); requires matching labels.
  TransformMatrix operator*(const TransformMatrix& other) const;
  /// Throws BadArgument on a non-finite entry.
  void validate() const;

 private:
  std::vector<Label> row_labels_;
  std::vector<Label> col_labels_;
  std::vector<cplx> entries_;
};

enum class Generator { S, T, ST2S };
const char* to_string(Generator g);
MobiusMap generator_map(Generator g);

/// Matrices of theta~_{j,m}|_gen over j = 0..2m-1. ST2S uses the parity-reduced
/// Gauss-sum form and needs even m.
TransformMatrix theta_transform_matrix(long m, Generator gen);

/// theta~|_{ST^2S} by the inner double sum sum_l e^{pi i l(l-j-k)/m}, valid for every m.
TransformMatrix theta_st2s_matrix_double_sum(long m);

/// One syllable g^power of a Gamma0(2) word; MinusI has power 1.
struct Syllable {
  enum class Letter { T, W, MinusI };
  Letter letter;
  long power;
  bool operator==(const Syllable&) const = default;
};
using Word = std::vector<Syllable>;

/// Maximum syllable count 4 * bitlen(max |entry|) + 4.
std::size_t gamma0_word_bound(const MobiusMap& map);

/// Word in T^{+-1}, W^{+-1}, -I whose product equals map. Throws NotInGamma0
/// for odd c and SearchExhausted if the reduction overruns the bound.
Word gamma0_decompose(const MobiusMap& map);

/// Exact product of a word.
MobiusMap recompose(const Word& word);

/// E.g. "[-I, W^-1]".
std::string to_string(const Word& word);

}  // namespace c2qhr
