#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "braidlens/braid_word.hpp"
#include "braidlens/two_bridge.hpp"

namespace braidlens {

/// A documented precondition was violated (e.g. even k).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// (p,q) such that standard_form(p,q), or its conjugate, is the braid in
/// question; `mirrored` means the match was against mirror(word).
struct Witness {
  std::int64_t p;
  std::int64_t q;
  bool mirrored;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct TwoBridgeClosure {
  TwoBridgeForm form;
  Witness witness;
};

/// Every (p,q) meeting the exponent-sum and homology-order constraints
/// p+q+1 = e, |2pq+p+q| = d of w. Both orders, no duplicates, descending.
std::vector<std::pair<std::int64_t, std::int64_t>> candidate_pq(const BraidWord& w);

/// Decides whether the closure of w is a two-bridge link: w or mirror(w)
/// must be conjugate to some standard_form(p,q) among the candidates.
/// Closures with infinite H1 are decided the same way; the only two-bridge
/// one is the unlink b(0,1).
std::optional<TwoBridgeClosure> is_two_bridge_closure(const BraidWord& w);

enum class LabelKind { HopfPlumbing, ExceptionL72, NotLensSpace };

struct Label {
  LabelKind kind = LabelKind::NotLensSpace;
  std::int64_t r = 0;  // HopfPlumbing: signed r, r < 0 is the mirror class
  int sign = 0;        // Hopf band sign, or +1 / -1 for the L(7,2) exception and its mirror

  friend bool operator==(const Label&, const Label&) = default;

  /// "HopfPlumbing(5,+1)", "ExceptionL72(-1)", "NotLensSpace"
  std::string to_string() const;
};

struct ClassificationResult {
  std::int64_t k;
  std::int64_t n;
  BraidWord word;
  bool is_two_bridge;
  std::optional<TwoBridgeForm> two_bridge;
  std::optional<LensSpace> lens_space;
  std::optional<Witness> witness;
  Label label;
  std::string description;
};

/// Classifies the lift of the braid axis of beta(k,n). k must be odd.
ClassificationResult classify_gof(std::int64_t k, std::int64_t n);

/// classify_gof over k_values x [n_lo, n_hi], ordered by k then n.
/// An empty interval (n_lo > n_hi) gives an empty table.
std::vector<ClassificationResult> scan_table(std::vector<std::int64_t> k_values, std::int64_t n_lo,
                                             std::int64_t n_hi);

struct CheckRow {
  std::string name;
  bool expected;
  bool computed;

  bool passed() const { return expected == computed; }
};

/// The eight conjugacy checks of the k = 5 and k = -3 cases. A row is
/// conjugate if beta(k,n) is conjugate to standard_form in either order.
std::vector<CheckRow> verify_case_analysis();

/// verify_case_analysis() plus the remaining named conjugacy claims: the
/// beta(-3,3) ~ beta(-1,-3) pairs, and beta(+-(-3,5)) not conjugate to any
/// beta(+-1, n).
std::vector<CheckRow> verify_paper_claims();

/// JSON record with fields k, n, word, is_two_bridge, alpha, beta, lens_p,
/// lens_q, witness_p, witness_q, mirrored, label, description in that order.
nlohmann::ordered_json to_json(const ClassificationResult& r);

/// Header and row for the TSV table format.
std::string tsv_header();
std::string to_tsv(const ClassificationResult& r);

}  // namespace braidlens
