#pragma once

#include <optional>
#include <string>
#include <vector>

#include "braidlens/braid_word.hpp"
#include "braidlens/sl2.hpp"

namespace braidlens {

/// Syllables of Z/2 * Z/3 = <X | X^2> * <Y | Y^3>, ordered X < Y < Y^2.
enum class Syllable : int { X = 0, Y = 1, Y2 = 2 };

/// A reduced word in Z/2 * Z/3 = PSL(2,Z): X syllables and Y-type syllables
/// alternate.
class FreeProductWord {
 public:
  FreeProductWord() = default;

  /// Reduces an arbitrary syllable sequence with X^2 = 1, Y^3 = 1.
  static FreeProductWord reduce(const std::vector<Syllable>& syllables);

  const std::vector<Syllable>& syllables() const { return syllables_; }
  std::size_t size() const { return syllables_.size(); }
  bool empty() const { return syllables_.empty(); }

  /// Whitespace separated "X", "Y", "Y^2"; the identity is "".
  std::string to_string() const;

  friend bool operator==(const FreeProductWord&, const FreeProductWord&) = default;
  friend auto operator<=>(const FreeProductWord&, const FreeProductWord&) = default;

 private:
  explicit FreeProductWord(std::vector<Syllable> reduced) : syllables_(std::move(reduced)) {}

  std::vector<Syllable> syllables_;
};

/// Image in B3 / <(s1 s2 s1)^2> under s1 -> XY, s1^-1 -> Y^2 X, s2 -> YX,
/// s2^-1 -> X Y^2.
FreeProductWord project(const BraidWord& w);

/// X -> [[0,-1],[1,0]], Y -> [[0,-1],[1,1]]. Agrees with represent() up to
/// a global sign.
SL2Matrix psl_matrix(const FreeProductWord& fw);

/// Cyclically reduces, then picks the lexicographically least rotation.
/// Two elements are conjugate in Z/2 * Z/3 iff their forms coincide.
FreeProductWord cyclic_normal_form(const FreeProductWord& fw);

/// Conjugacy in B3: equal exponent sums and equal cyclic normal forms of the
/// projections. The projection kills the centre; the exponent sum detects it.
bool are_conjugate(const BraidWord& u, const BraidWord& v);

/// First g in shortlex order (letter order a < A < b < B, |g| <= max_len)
/// with g u g^-1 = v in B3. Test oracle; exponential in max_len.
std::optional<BraidWord> find_conjugator_brute(const BraidWord& u, const BraidWord& v,
                                               std::size_t max_len);

}  // namespace braidlens
