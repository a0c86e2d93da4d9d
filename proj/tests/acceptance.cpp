// Acceptance gate: one PASS/FAIL line per criterion, evaluated on the default suites at seed 42.
// Exit status is 0 only if every criterion passes.

#include <algorithm>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "c2qhr/suites.hpp"

using namespace c2qhr;

namespace {

constexpr std::uint64_t kSeed = 42;

// Selection of suite identities judged against one tolerance. exact = residual must be 0.
struct Requirement {
  std::string suite;
  std::function<bool(const std::string&)> select;
  double tolerance;
  std::size_t min_count;
  bool exact = false;
};

struct Criterion {
  int number;
  std::string title;
  std::vector<Requirement> requirements;
};

std::function<bool(const std::string&)> prefix(std::string p) {
  return [p](const std::string& l) { return l.rfind(p, 0) == 0; };
}

std::function<bool(const std::string&)> one_of(std::vector<std::string> labels) {
  return [labels](const std::string& l) { return std::find(labels.begin(), labels.end(), l) != labels.end(); };
}

std::function<bool(const std::string&)> everything() {
  return [](const std::string&) { return true; };
}

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

std::vector<Criterion> criteria() {
  return {
      {1, "theta/eta/vartheta S, T, T^2, ST^2S laws (14)", {{"theta-transforms", one_of(kThetaLaws), 1e-9, 14}}},
      {2, "Gauss sums and vanishing sums, even m <= 40", {{"gauss", everything(), 1e-12, 20}}},
      {3,
       "theta ST^2S matrix (parity-reduced Gauss form) vs slash action",
       {{"theta-transforms",
         one_of({"theta_{j,m}|ST^2S = (-i gamma_m/2m) sum_{k = j mod 2} e^{-pi i (j+k)^2/4m} theta_{k,m}",
                 "theta transform matrices (S, T, ST^2S) reproduce the slash action"}),
         1e-9, 2}}},
      {4,
       "admissible enumeration at K = -1 and counts for -1 <= K <= 6",
       {{"admissible", prefix("K=-1 weights"), 0.0, 1, true},
        {"admissible", prefix("|P_K| = 2(K+2)(K+3) = brute force"), 0.0, 8, true}}},
      {5, "numerator lattice sum = theta product, K in {-1,0,1}",
       {{"character-numerators", prefix("A' lattice sum = theta product"), 1e-12, 3}}},
      {6,
       "denominator R forms and S, T, ST^2S phases",
       {{"character-numerators", prefix("R classical form = tilde form"), 1e-12, 1},
        {"character-gamma0", one_of({"R|S = -i R", "R|T = e^{5 pi i/6} R", "R|ST^2S = e^{2 pi i/3} R"}), 1e-9, 3}}},
      {7,
       "character Gamma0(2) closure, K in {-1,0,1}",
       {{"character-gamma0", prefix("A'|"), 1e-8, 6},
        {"character-gamma0", prefix("ch|"), 1e-8, 6},
        {"character-gamma0", prefix("ST^2S parity blocks are structural zeros"), 0.0, 3, true}}},
      {8,
       "QHR numerators: shifted argument = closed form, fourfold displays, K in {-1,1}",
       {{"qhr-numerators", prefix("shifted-argument numerator = closed theta form"), 1e-10, 4},
        {"qhr-numerators", prefix("fourfold f-basis display"), 1e-9, 16}}},
      {9,
       "QHR denominators: C2 forms = general shape, all transform phases",
       {{"qhr-transforms", prefix("C2 denominators = general-shape formula"), 1e-12, 1},
        {"qhr-transforms", prefix("R-check classical form = tilde form"), 1e-12, 1},
        {"qhr-transforms", prefix("R-check^("), 1e-10, 10},
        {"qhr-transforms", prefix("general-shape phases = C2 closed-form phases"), 0.0, 1, true}}},
      {10,
       "QHR character T and ST^2S laws for K in {-1,1}; even K rejected",
       {{"qhr-transforms", prefix("character ("), 1e-8, 8},
        {"qhr-transforms", prefix("QHR transforms reject even K"), 0.0, 1, true}}},
      {11,
       "Gamma0(2) decomposition round trip and character word action",
       {{"group-closure", prefix("Gamma0(2) decomposition round trip"), 0.0, 1, true},
        {"group-closure", prefix("ch word action = matrix product"), 1e-8, 3}}},
  };
}

double max_residual(const std::vector<IdentityResult>& ids) {
  double m = 0.0;
  for (const auto& id : ids) m = std::max(m, id.residual);
  return m;
}

}  // namespace

int main() {
  std::map<std::string, SuiteReport> reports;
  for (const auto& name : suite_names()) reports.emplace(name, run_suite(name, kSeed));

  bool all_pass = true;
  for (const Criterion& c : criteria()) {
    bool pass = true;
    std::vector<std::string> notes;
    for (const Requirement& req : c.requirements) {
      std::vector<IdentityResult> picked;
      for (const auto& id : reports.at(req.suite).identities)
        if (req.select(id.label)) picked.push_back(id);
      if (picked.size() < req.min_count) {
        pass = false;
        notes.push_back(req.suite + ": expected at least " + std::to_string(req.min_count) + " identities, found " +
                        std::to_string(picked.size()));
      }
      for (const auto& id : picked) {
        const bool ok = req.exact ? id.residual == 0.0 : id.residual < req.tolerance;
        if (!ok) {
          pass = false;
          char buf[64];
          std::snprintf(buf, sizeof buf, " residual=%.3e", id.residual);
          notes.push_back(req.suite + ": " + id.label + buf + (id.error.empty() ? "" : " error=" + id.error));
        }
      }
      char tol[32] = "exact";
      if (!req.exact) std::snprintf(tol, sizeof tol, "%.0e", req.tolerance);
      std::printf("  [%s] %zu identities, max residual %.3e, tolerance %s\n", req.suite.c_str(), picked.size(),
                  max_residual(picked), tol);
    }
    std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", c.number, c.title.c_str());
    for (const auto& n : notes) std::printf("    %s\n", n.c_str());
    all_pass = all_pass && pass;
  }

  // Readings that the criteria above expose, measured directly.
  Lcg64 rng(kSeed);
  double plus_negated = 0.0, fourfold_minus_four_a = 0.0;
  for (int i = 0; i < 10; ++i) {
    const EvalPoint p = sample_point(rng, 1);
    for (long K : {-1, 1})
      for (const auto& w : qhr_weights(K)) {
        const QHRNumerator plus = qhr_numerator(FSign::Plus, w, p);
        plus_negated = std::max(plus_negated, std::abs(plus.shifted + plus.closed));
        for (FSign s : {FSign::Plus, FSign::Minus})
          for (OrbitMember o : {OrbitMember::I, OrbitMember::II, OrbitMember::III, OrbitMember::IV})
            fourfold_minus_four_a =
                std::max(fourfold_minus_four_a, std::abs(qhr_fourfold(s, o, w, p) +
                                                         4.0 * qhr_numerator_shifted(s, orbit_member(w, o), p)));
      }
  }
  double corrected = 0.0;
  for (long K : {-1, 1})
    corrected = std::max(corrected,
                         reports.at("group-closure")
                             .identity("QHR character word action = matrix product (corrected minus kernel), words of "
                                       "length <= 4, K=" +
                                       std::to_string(K))
                             .residual);
  std::printf("FINDING plus numerator: closed form = -(shifted-argument form), max |sum| %.3e\n", plus_negated);
  std::printf("FINDING fourfold displays: each equals -4 x shifted-argument numerator, max residual %.3e\n",
              fourfold_minus_four_a);
  std::printf("FINDING minus ST^2S kernel (e1+ - e1-)(e2+ - e2-): character word action max residual %.3e\n",
              corrected);

  std::printf("%s\n", all_pass ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
  return all_pass ? 0 : 1;
}
