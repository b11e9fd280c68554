#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "braidlens/sl2.hpp"

namespace braidlens {

/// A Conway tuple whose continued fraction hits a zero denominator.
class DegenerateNotation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// (alpha, beta) that does not describe a two-bridge link or lens space.
class NotTwoBridge : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

using ConwayTuple = std::vector<std::int64_t>;

/// Exact fraction in lowest terms with positive denominator.
struct Fraction {
  Integer numerator;
  Integer denominator;

  friend bool operator==(const Fraction&, const Fraction&) = default;
};

/// a1 + 1/(a2 + 1/(... + 1/am)), innermost term rightmost.
/// Throws DegenerateNotation on an empty tuple or a zero denominator.
Fraction fraction_from_conway(const ConwayTuple& c);

/// Comma separated integers, e.g. "-2,2,-3".
ConwayTuple parse_conway(const std::string& text);
std::string format_conway(const ConwayTuple& c);

/// Unoriented two-bridge link b(alpha, beta) with beta stored as
/// min(beta mod alpha, beta^-1 mod alpha). b(1,0) is the unknot and b(0,1)
/// the two-component unlink.
class TwoBridgeForm {
 public:
  const Integer& alpha() const { return alpha_; }
  const Integer& beta() const { return beta_; }

  friend bool operator==(const TwoBridgeForm&, const TwoBridgeForm&) = default;

  std::string to_string() const;

 private:
  friend TwoBridgeForm normalize_two_bridge(const Integer&, const Integer&);
  TwoBridgeForm(Integer alpha, Integer beta) : alpha_(std::move(alpha)), beta_(std::move(beta)) {}

  Integer alpha_;
  Integer beta_;
};

/// Requires gcd(alpha, beta) = 1. Negative alpha is read as the mirror
/// convention (alpha, beta) -> (-alpha, -beta). alpha = 0 is admitted only
/// as b(0, +-1), the unlink; anything else with alpha = 0 throws NotTwoBridge.
TwoBridgeForm normalize_two_bridge(const Integer& alpha, const Integer& beta);

bool two_bridge_equiv(const TwoBridgeForm& a, const TwoBridgeForm& b);
TwoBridgeForm mirror_two_bridge(const TwoBridgeForm& a);

/// L(p, q) with q stored as min(q mod p, q^-1 mod p). p = 1 is S^3 (q = 0);
/// p = 0 is S^1 x S^2 (q = 1).
class LensSpace {
 public:
  const Integer& p() const { return p_; }
  const Integer& q() const { return q_; }

  friend bool operator==(const LensSpace&, const LensSpace&) = default;

  std::string to_string() const;

 private:
  friend LensSpace make_lens_space(const Integer&, const Integer&);
  LensSpace(Integer p, Integer q) : p_(std::move(p)), q_(std::move(q)) {}

  Integer p_;
  Integer q_;
};

/// Negative p reads as L(-p, -q). Throws NotTwoBridge unless gcd(p, q) = 1.
LensSpace make_lens_space(const Integer& p, const Integer& q);

/// Double branched cover L(alpha, beta) of b(alpha, beta).
LensSpace lens_space_of(const TwoBridgeForm& a);

/// Oriented: q' = q^{+-1} mod p. Unoriented also allows q' = -q^{+-1}.
bool lens_equiv(const LensSpace& a, const LensSpace& b, bool oriented);

enum class Strictness {
  AsQuoted,  // (2a) needs p, q > 1; (2b) needs q > 0
  Relaxed,   // (2a) and (2b) with p, q >= 1
};

enum class BraidIndexClass { Two, Three, Other };

std::string to_string(BraidIndexClass c);
std::string to_string(Strictness s);
Strictness parse_strictness(const std::string& text);

/// How a braid index 3 verdict was certified.
struct MurasugiWitness {
  char criterion;              // 'a': alpha = 2pq+p+q, 'b': alpha = 2pq+p+q+1
  Integer representative;      // odd beta' in (0, alpha), beta' = 2q+1
  Integer p;
  Integer q;
};

struct MurasugiResult {
  BraidIndexClass braid_index;
  std::optional<MurasugiWitness> witness;  // set only for Three
};

/// Murasugi's braid index criteria applied to every odd representative of
/// {beta, beta^-1, alpha-beta, alpha-beta^-1} mod alpha.
MurasugiResult murasugi_braid_index(const TwoBridgeForm& a, Strictness strictness = Strictness::Relaxed);

/// Least (p,q), p,q >= 1, with (p,2,q) naming a or its mirror; failing that
/// the least (p,1,1,q).
std::optional<ConwayTuple> stoimenow_form(const TwoBridgeForm& a);

}  // namespace braidlens
