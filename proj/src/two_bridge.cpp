#include "braidlens/two_bridge.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <sstream>

#include "braidlens/braid_word.hpp"

namespace braidlens {

namespace {

Integer mod_pos(const Integer& x, const Integer& m) {
  Integer r = x % m;
  if (r < 0) r += m;
  return r;
}

// Inverse of x modulo m; requires gcd(x, m) = 1 and m >= 2.
Integer mod_inverse(const Integer& x, const Integer& m) {
  Integer old_r = mod_pos(x, m), r = m;
  Integer old_s = 1, s = 0;
  while (r != 0) {
    const Integer quotient = old_r / r;
    Integer tmp = old_r - quotient * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quotient * s;
    old_s = s;
    s = tmp;
  }
  return mod_pos(old_s, m);
}

// min(x mod m, x^-1 mod m) for m >= 2.
Integer canonical_residue(const Integer& x, const Integer& m) {
  const Integer r = mod_pos(x, m);
  const Integer inv = mod_inverse(r, m);
  return r < inv ? r : inv;
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

}  // namespace

Fraction fraction_from_conway(const ConwayTuple& c) {
  if (c.empty()) throw DegenerateNotation("empty Conway notation");
  Integer num = c.back();
  Integer den = 1;
  for (auto it = c.rbegin() + 1; it != c.rend(); ++it) {
    if (num == 0) {
      throw DegenerateNotation("Conway notation " + format_conway(c) +
                               " divides by zero during evaluation");
    }
    // a + den/num
    Integer next_num = Integer(*it) * num + den;
    den = num;
    num = std::move(next_num);
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const Integer g = gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {num, den};
}

ConwayTuple parse_conway(const std::string& text) {
  ConwayTuple out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::string token = trim(item);
    if (!token.empty() && token.front() == '+') token.erase(0, 1);
    std::int64_t value = 0;
    const char* first = token.data();
    const char* last = first + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (token.empty() || ec != std::errc() || ptr != last) {
      throw ParseError("malformed Conway entry '" + trim(item) + "'");
    }
    out.push_back(value);
  }
  if (out.empty() || (!text.empty() && text.back() == ',')) {
    throw ParseError("malformed Conway notation '" + text + "'");
  }
  return out;
}

std::string format_conway(const ConwayTuple& c) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += std::to_string(c[i]);
  }
  return "(" + out + ")";
}

std::string TwoBridgeForm::to_string() const {
  return "b(" + alpha_.str() + "," + beta_.str() + ")";
}

TwoBridgeForm normalize_two_bridge(const Integer& alpha, const Integer& beta) {
  Integer a = alpha, b = beta;
  if (a < 0) {
    a = -a;
    b = -b;
  }
  if (gcd(a, b) != 1) {
    throw NotTwoBridge("b(" + alpha.str() + "," + beta.str() + ") requires coprime parameters");
  }
  if (a == 0) return {0, 1};
  if (a == 1) return {1, 0};
  return {a, canonical_residue(b, a)};
}

bool two_bridge_equiv(const TwoBridgeForm& a, const TwoBridgeForm& b) { return a == b; }

TwoBridgeForm mirror_two_bridge(const TwoBridgeForm& a) {
  return normalize_two_bridge(a.alpha(), -a.beta());
}

std::string LensSpace::to_string() const {
  if (p_ == 0) return "S1xS2";
  if (p_ == 1) return "S3";
  return "L(" + p_.str() + "," + q_.str() + ")";
}

LensSpace make_lens_space(const Integer& p, const Integer& q) {
  Integer pp = p, qq = q;
  if (pp < 0) {
    pp = -pp;
    qq = -qq;
  }
  if (gcd(pp, qq) != 1) {
    throw NotTwoBridge("L(" + p.str() + "," + q.str() + ") requires coprime parameters");
  }
  if (pp == 0) return {0, 1};
  if (pp == 1) return {1, 0};
  return {pp, canonical_residue(qq, pp)};
}

LensSpace lens_space_of(const TwoBridgeForm& a) { return make_lens_space(a.alpha(), a.beta()); }

bool lens_equiv(const LensSpace& a, const LensSpace& b, bool oriented) {
  if (a == b) return true;
  if (oriented) return false;
  return make_lens_space(a.p(), -a.q()) == b;
}

std::string to_string(BraidIndexClass c) {
  switch (c) {
    case BraidIndexClass::Two: return "2";
    case BraidIndexClass::Three: return "3";
    case BraidIndexClass::Other: return "other";
  }
  return "other";
}

std::string to_string(Strictness s) { return s == Strictness::AsQuoted ? "as-quoted" : "relaxed"; }

Strictness parse_strictness(const std::string& text) {
  if (text == "as-quoted") return Strictness::AsQuoted;
  if (text == "relaxed") return Strictness::Relaxed;
  throw ParseError("unknown strictness '" + text + "' (expected as-quoted or relaxed)");
}

MurasugiResult murasugi_braid_index(const TwoBridgeForm& a, Strictness strictness) {
  const Integer& alpha = a.alpha();
  if (alpha < 2) return {BraidIndexClass::Other, std::nullopt};

  const Integer b = a.beta();
  const Integer b_inv = mod_inverse(b, alpha);
  const std::array<Integer, 4> reps{b, b_inv, alpha - b, alpha - b_inv};

  std::vector<Integer> odd;
  for (const auto& r : reps) {
    if (r > 0 && r < alpha && r % 2 != 0) odd.push_back(r);
  }
  std::sort(odd.begin(), odd.end());
  for (const auto& r : odd) {
    if (r == 1) return {BraidIndexClass::Two, std::nullopt};
  }

  const bool relaxed = strictness == Strictness::Relaxed;
  for (const char criterion : {'a', 'b'}) {
    for (const auto& r : odd) {
      const Integer q = (r - 1) / 2;
      const Integer rest = alpha - q - (criterion == 'b' ? 1 : 0);
      if (rest % r != 0) continue;
      const Integer p = rest / r;
      bool ok = false;
      if (criterion == 'a') {
        ok = relaxed ? (p >= 1 && q >= 1) : (p > 1 && q > 1);
      } else {
        ok = relaxed ? (p >= 1 && q >= 1) : (q > 0);
      }
      if (ok) return {BraidIndexClass::Three, MurasugiWitness{criterion, r, p, q}};
    }
  }
  return {BraidIndexClass::Other, std::nullopt};
}

std::optional<ConwayTuple> stoimenow_form(const TwoBridgeForm& a) {
  const Integer& alpha = a.alpha();
  if (alpha < 2) return std::nullopt;
  const TwoBridgeForm mirrored = mirror_two_bridge(a);

  // (p,2,q) evaluates to (2pq+p+q)/(2q+1) and (p,1,1,q) to
  // (2pq+p+q+1)/(2q+1), so for each p at most one q in [1, alpha] can match.
  for (const int offset : {0, 1}) {
    for (Integer p = 1; p <= alpha; ++p) {
      const Integer rest = alpha - p - offset;
      if (rest < 2 * p + 1 || rest % (2 * p + 1) != 0) continue;
      const Integer q = rest / (2 * p + 1);
      const auto pi = static_cast<std::int64_t>(p);
      const auto qi = static_cast<std::int64_t>(q);
      ConwayTuple tuple = offset == 0 ? ConwayTuple{pi, 2, qi} : ConwayTuple{pi, 1, 1, qi};
      const Fraction f = fraction_from_conway(tuple);
      const TwoBridgeForm form = normalize_two_bridge(f.numerator, f.denominator);
      if (two_bridge_equiv(form, a) || two_bridge_equiv(form, mirrored)) return tuple;
    }
  }
  return std::nullopt;
}

}  // namespace braidlens
