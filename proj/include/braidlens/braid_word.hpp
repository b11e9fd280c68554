#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace braidlens {

/// Thrown when a braid word, Conway tuple or CLI argument fails to parse.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One letter of a word in B3: sigma_1 or sigma_2, to the power +1 or -1.
struct Letter {
  int generator;  // 1 or 2
  int sign;       // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;

  Letter inverted() const { return {generator, -sign}; }
};

/// A word in sigma_1^{+-1}, sigma_2^{+-1}. Stored exactly as written: no
/// operation reduces implicitly.
class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(std::vector<Letter> letters);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Grammar: whitespace separated tokens `a` `A` `b` `B` or `s1^e` / `s2^e`
/// (`s1` alone means exponent 1), e a nonzero integer.
BraidWord parse_braid(std::string_view text);

/// Letterwise rendering with `a A b B`; the empty word renders as "".
std::string format_braid(const BraidWord& w);

BraidWord concat(const BraidWord& u, const BraidWord& v);
BraidWord inverse(const BraidWord& w);

/// Negates every sign; generator indices stay put.
BraidWord mirror(const BraidWord& w);

/// g w g^-1, unreduced.
BraidWord conjugate_by(const BraidWord& w, const BraidWord& g);

BraidWord free_reduce(const BraidWord& w);

std::int64_t exponent_sum(const BraidWord& w);

/// generator^exponent expanded letterwise.
BraidWord power(int generator, std::int64_t exponent);

/// (s2 s1 s2)^k s1^n.
BraidWord beta(std::int64_t k, std::int64_t n);

/// s2^-1 s1^p s2^2 s1^q.
BraidWord standard_form(std::int64_t p, std::int64_t q);

/// (s2 s1 s2)^{4 l} w: l pairs of right-handed full twists (left-handed for
/// l < 0). Delta^4 generates the kernel of the SL(2,Z) representation.
BraidWord insert_full_twists(const BraidWord& w, std::int64_t l);

/// Returns a word equal to w in B3 after `steps` random insertions of a
/// cancelling pair or of the braid relator (or its inverse). Deterministic in
/// (w, seed, steps) on every platform: the generator is std::mt19937_64 and
/// draws are reduced by plain modulo.
BraidWord scramble(const BraidWord& w, std::uint64_t seed, std::size_t steps);

}  // namespace braidlens
