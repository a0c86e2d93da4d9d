#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "c2qhr/qhr.hpp"

namespace c2qhr {

/// 64-bit linear congruential generator:
/// state <- 6364136223846793005 state + 1442695040888963407 (mod 2^64), initial state = seed.
class Lcg64 {
 public:
  explicit Lcg64(std::uint64_t seed) : state_(seed) {}

  /// Advances the state and returns it.
  std::uint64_t next();
  /// (next() >> 11) * 2^-53, in [0, 1).
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::uint64_t state_;
};

/// Draws a point of the verification domain: Re tau in [-0.5, 0.5], Im tau in [0.8, 2],
/// each z_i uniform on the disc |z| <= 0.4 and t real, uniform on [-1, 1].
/// Draw order: Re tau, Im tau, then (radius, angle) for each z_i, then t.
EvalPoint sample_point(Lcg64& rng, std::size_t z_dim);

/// Residual of one identity with the point that realised it, if any.
struct IdentityResult {
  std::string label;
  double residual = 0.0;
  std::optional<EvalPoint> worst_point;
  /// Non-empty when evaluation raised; the residual is then +infinity.
  std::string error;
};

struct SuiteReport {
  std::string suite_name;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  double tolerance = 0.0;
  double max_abs_residual = 0.0;
  std::optional<EvalPoint> worst_point;
  bool pass = false;
  std::vector<IdentityResult> identities;

  /// Residual of the identity with this label; throws BadArgument if absent.
  const IdentityResult& identity(const std::string& label) const;
};

/// Registered suite names in documentation order.
const std::vector<std::string>& suite_names();

/// Default sample count and tolerance of a suite. Throws UnknownSuite.
std::size_t default_samples(const std::string& name);
double default_tolerance(const std::string& name);

/// Runs a suite. Deterministic in (name, seed, samples); evaluation errors become failed
/// identities. Throws UnknownSuite for names outside suite_names().
SuiteReport run_suite(const std::string& name, std::uint64_t seed, std::size_t samples, double tolerance);

/// Runs a suite with its default sample count and tolerance.
SuiteReport run_suite(const std::string& name, std::uint64_t seed);

/// Pretty-printed JSON with the fields of SuiteReport; non-finite residuals become null.
std::string to_json(const SuiteReport& report);

enum class MatrixFormat { Json, Csv };

/// Serialises theta_S, theta_ST2S (parameter m), ch_ST2S or qhr_ST2S (parameter K).
/// CSV has a header and rows "row_label,col_label,re,im" with 15 significant digits; labels
/// join their integers with ':'. JSON carries the same entries. Throws BadArgument.
std::string emit_matrix(const std::string& which, long param, MatrixFormat format);

}  // namespace c2qhr
