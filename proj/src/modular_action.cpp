#include "c2qhr/modular_action.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <sstream>

namespace c2qhr {

namespace {

void require_even_positive(long m) {
  if (m <= 0 || m % 2 != 0)
    throw Error(ErrorKind::BadArgument, "m must be a positive even integer, got " + std::to_string(m));
}

// Nearest integer to num/den, ties toward zero.
long long nearest_quotient(long long num, long long den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long q = num / den;
  long long r = num % den;
  if (2 * std::llabs(r) > den) q += (r > 0) ? 1 : -1;
  return q;
}

MobiusMap syllable_matrix(const Syllable& s) {
  switch (s.letter) {
    case Syllable::Letter::T:
      return {1, s.power, 0, 1};
    case Syllable::Letter::W: {
      // W^k = (-1)^k (1 0; -2k 1).
      const long long sign = (s.power % 2 == 0) ? 1 : -1;
      return {sign, 0, -2 * sign * s.power, sign};
    }
    case Syllable::Letter::MinusI:
      return MobiusMap::minus_identity();
  }
  return MobiusMap::identity();
}

}  // namespace

MobiusMap::MobiusMap(long long a, long long b, long long c, long long d) : a_(a), b_(b), c_(c), d_(d) {
  if (a * d - b * c != 1) throw Error(ErrorKind::BadArgument, "determinant must be 1");
}

MobiusMap MobiusMap::operator*(const MobiusMap& o) const {
  return {a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_, c_ * o.a_ + d_ * o.c_, c_ * o.b_ + d_ * o.d_};
}

MobiusMap MobiusMap::power(long k) const {
  MobiusMap base = k < 0 ? inverse() : *this;
  MobiusMap out = identity();
  for (long i = 0; i < std::labs(k); ++i) out = out * base;
  return out;
}

cplx MobiusMap::act(cplx tau) const {
  return (static_cast<double>(a_) * tau + static_cast<double>(b_)) / automorphy(tau);
}

std::string MobiusMap::to_string() const {
  std::ostringstream os;
  os << "(" << a_ << "," << b_ << ";" << c_ << "," << d_ << ")";
  return os.str();
}

QuadForm scalar_form(std::size_t dim, double c) {
  QuadForm q(dim, std::vector<double>(dim, 0.0));
  for (std::size_t i = 0; i < dim; ++i) q[i][i] = c;
  return q;
}

AnomalyProfile theta_profile(long m) { return {static_cast<double>(m), 1, scalar_form(1, 1.0)}; }

AnomalyProfile eta_profile() { return {1.0, 1, {}}; }

AnomalyProfile vartheta_profile() { return {2.0, 1, scalar_form(1, 1.0)}; }

void AnomalyProfile::validate() const {
  if (ell < 0) throw Error(ErrorKind::BadArgument, "ell must be non-negative");
  for (std::size_t i = 0; i < quad_form.size(); ++i) {
    if (quad_form[i].size() != quad_form.size()) throw Error(ErrorKind::BadArgument, "quad_form must be square");
    for (std::size_t j = 0; j < i; ++j)
      if (quad_form[i][j] != quad_form[j][i]) throw Error(ErrorKind::BadArgument, "quad_form must be symmetric");
  }
}

cplx AnomalyProfile::norm2(const std::vector<cplx>& zs) const {
  if (zs.size() != quad_form.size())
    throw Error(ErrorKind::BadArgument, "quad_form dimension does not match the point");
  cplx s = 0.0;
  for (std::size_t i = 0; i < zs.size(); ++i)
    for (std::size_t j = 0; j < zs.size(); ++j) s += zs[i] * quad_form[i][j] * zs[j];
  return s;
}

cplx slash_action(const MobiusMap& map, const AnomalyProfile& profile, const Evaluator& f, const EvalPoint& p) {
  profile.validate();
  const cplx j = map.automorphy(p.tau());
  if (j == 0.0) throw Error(ErrorKind::BadDomain, "c tau + d vanishes");
  if (profile.ell % 2 != 0 && j.imag() == 0.0 && j.real() < 0.0)
    throw Error(ErrorKind::BranchAmbiguity, "c tau + d is a negative real number");
  const cplx tau2 = map.act(p.tau());
  if (!(tau2.imag() > 0.0)) throw Error(ErrorKind::BadDomain, "transformed tau left the upper half-plane");

  std::vector<cplx> zs2(p.zs());
  for (cplx& z : zs2) z /= j;
  const cplx t2 = p.t() - static_cast<double>(map.c()) * profile.norm2(p.zs()) / (2.0 * j);

  const cplx root = std::sqrt(j);
  cplx weight = 1.0;
  for (int i = 0; i < profile.ell; ++i) weight /= root;
  return weight * f(EvalPoint(tau2, std::move(zs2), t2));
}

Evaluator slashed(const MobiusMap& map, const AnomalyProfile& profile, Evaluator f) {
  return [map, profile, f = std::move(f)](const EvalPoint& p) { return slash_action(map, profile, f, p); };
}

double slash_cocycle_sign(const MobiusMap& A, const MobiusMap& B, cplx tau, int ell) {
  if (ell % 2 == 0) return 1.0;
  const cplx jb = B.automorphy(tau);
  const cplx ja = A.automorphy(B.act(tau));
  const cplx jab = (A * B).automorphy(tau);
  const cplx s = std::sqrt(ja) * std::sqrt(jb) / std::sqrt(jab);
  return s.real() > 0.0 ? 1.0 : -1.0;
}

cplx gauss_sum(long m) {
  require_even_positive(m);
  const long long n = 2LL * m;
  cplx s = 0.0;
  for (long long k = 0; k < n; ++k) s += root_of_unity(k * k, m);
  return s;
}

cplx vanishing_sum_check(long m, long n) {
  require_even_positive(m);
  const long long period = 2LL * m;
  cplx s = 0.0;
  for (long long k = 0; k < period; ++k) s += root_of_unity(k * (k + n), m);
  return s;
}

TransformMatrix::TransformMatrix(std::vector<Label> rows, std::vector<Label> cols)
    : row_labels_(std::move(rows)), col_labels_(std::move(cols)), entries_(row_labels_.size() * col_labels_.size()) {}

cplx TransformMatrix::apply_row(std::size_t r, const std::vector<cplx>& values) const {
  if (values.size() != cols()) throw Error(ErrorKind::BadArgument, "value count does not match columns");
  cplx s = 0.0;
  for (std::size_t c = 0; c < cols(); ++c) s += at(r, c) * values[c];
  return s;
}

TransformMatrix TransformMatrix::operator*(const TransformMatrix& other) const {
  if (col_labels_ != other.row_labels_) throw Error(ErrorKind::BadArgument, "label mismatch in product");
  TransformMatrix out(row_labels_, other.col_labels_);
  for (std::size_t r = 0; r < rows(); ++r)
    for (std::size_t k = 0; k < cols(); ++k) {
      const cplx v = at(r, k);
      if (v == 0.0) continue;
      for (std::size_t c = 0; c < other.cols(); ++c) out.at(r, c) += v * other.at(k, c);
    }
  return out;
}

void TransformMatrix::validate() const {
  for (const cplx& v : entries_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw Error(ErrorKind::BadArgument, "non-finite matrix entry");
}

const char* to_string(Generator g) {
  switch (g) {
    case Generator::S: return "S";
    case Generator::T: return "T";
    case Generator::ST2S: return "ST2S";
  }
  return "?";
}

MobiusMap generator_map(Generator g) {
  switch (g) {
    case Generator::S: return MobiusMap::S();
    case Generator::T: return MobiusMap::T();
    case Generator::ST2S: return MobiusMap::W();
  }
  return MobiusMap::identity();
}

TransformMatrix theta_transform_matrix(long m, Generator gen) {
  if (m < 1) throw Error(ErrorKind::BadArgument, "m must be positive");
  const long long n = 2LL * m;
  std::vector<TransformMatrix::Label> labels;
  for (long long j = 0; j < n; ++j) labels.push_back({static_cast<long>(j)});
  TransformMatrix M(labels, labels);
  switch (gen) {
    case Generator::S: {
      const cplx pref = root_of_unity(-1, 4) / std::sqrt(static_cast<double>(n));
      for (long long j = 0; j < n; ++j)
        for (long long k = 0; k < n; ++k) M.at(j, k) = pref * root_of_unity(-j * k, m);
      break;
    }
    case Generator::T:
      for (long long j = 0; j < n; ++j) M.at(j, j) = root_of_unity(j * j, 2LL * m);
      break;
    case Generator::ST2S: {
      require_even_positive(m);
      const cplx pref = -kI * gauss_sum(m) / static_cast<double>(n);
      for (long long j = 0; j < n; ++j)
        for (long long k = 0; k < n; ++k)
          if ((j - k) % 2 == 0) M.at(j, k) = pref * root_of_unity(-(j + k) * (j + k), 4LL * m);
      break;
    }
  }
  return M;
}

TransformMatrix theta_st2s_matrix_double_sum(long m) {
  if (m < 1) throw Error(ErrorKind::BadArgument, "m must be positive");
  const long long n = 2LL * m;
  std::vector<TransformMatrix::Label> labels;
  for (long long j = 0; j < n; ++j) labels.push_back({static_cast<long>(j)});
  TransformMatrix M(labels, labels);
  for (long long j = 0; j < n; ++j)
    for (long long k = 0; k < n; ++k) {
      cplx inner = 0.0;
      for (long long l = 0; l < n; ++l) inner += root_of_unity(l * (l - j - k), m);
      M.at(j, k) = -kI * inner / static_cast<double>(n);
    }
  return M;
}

std::size_t gamma0_word_bound(const MobiusMap& map) {
  const unsigned long long big = std::max({std::llabs(map.a()), std::llabs(map.b()), std::llabs(map.c()),
                                           std::llabs(map.d())});
  return 4 * static_cast<std::size_t>(std::bit_width(big)) + 4;
}

Word gamma0_decompose(const MobiusMap& map) {
  if (!map.in_gamma0_2()) throw Error(ErrorKind::NotInGamma0, "lower-left entry is odd: " + map.to_string());
  const std::size_t bound = gamma0_word_bound(map);

  // Right-multiply by T^k and U^k, U = (1 0; 2 1) = -W^{-1}, until c = 0;
  // every round at least halves |c|.
  long long a = map.a(), b = map.b(), c = map.c(), d = map.d();
  std::vector<Syllable> reductions;  // letters T or W standing for T^k, U^k
  while (c != 0) {
    const long long kt = -nearest_quotient(d, c);
    if (kt != 0) {
      b += kt * a;
      d += kt * c;
      reductions.push_back({Syllable::Letter::T, static_cast<long>(kt)});
    }
    const long long ku = -nearest_quotient(c, 2 * d);
    if (ku != 0) {
      a += 2 * ku * b;
      c += 2 * ku * d;
      reductions.push_back({Syllable::Letter::W, static_cast<long>(ku)});
    }
    if (reductions.size() > bound) throw Error(ErrorKind::SearchExhausted, "word bound exceeded for " + map.to_string());
  }

  // Now map * prod = (a b; 0 d) with a = d = +-1, so map = (a b; 0 d) prod^{-1}.
  bool negative = a < 0;
  const long long t_power = a < 0 ? -b : b;
  Word word;
  std::vector<Syllable> tail;
  for (auto it = reductions.rbegin(); it != reductions.rend(); ++it) {
    if (it->letter == Syllable::Letter::T) {
      tail.push_back({Syllable::Letter::T, -it->power});
    } else {
      // U^{-k} = (-1)^k W^{k}.
      if (it->power % 2 != 0) negative = !negative;
      tail.push_back({Syllable::Letter::W, it->power});
    }
  }
  if (negative) word.push_back({Syllable::Letter::MinusI, 1});
  if (t_power != 0) word.push_back({Syllable::Letter::T, static_cast<long>(t_power)});
  word.insert(word.end(), tail.begin(), tail.end());
  if (word.size() > bound) throw Error(ErrorKind::SearchExhausted, "word bound exceeded for " + map.to_string());
  return word;
}

MobiusMap recompose(const Word& word) {
  MobiusMap out = MobiusMap::identity();
  for (const Syllable& s : word) out = out * syllable_matrix(s);
  return out;
}

std::string to_string(const Word& word) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) os << ", ";
    const Syllable& s = word[i];
    if (s.letter == Syllable::Letter::MinusI) {
      os << "-I";
      continue;
    }
    os << (s.letter == Syllable::Letter::T ? "T" : "W");
    if (s.power != 1) os << "^" << s.power;
  }
  os << "]";
  return os.str();
}

}  // namespace c2qhr
