#include "braidlens/conjugacy.hpp"

#include <algorithm>
#include <array>
#include <deque>

namespace braidlens {

namespace {

bool is_y(Syllable s) { return s != Syllable::X; }
int y_power(Syllable s) { return static_cast<int>(s); }
Syllable y_of(int power) { return power == 1 ? Syllable::Y : Syllable::Y2; }

void push_reduced(std::vector<Syllable>& stack, Syllable s) {
  if (!stack.empty()) {
    const Syllable top = stack.back();
    if (top == Syllable::X && s == Syllable::X) {
      stack.pop_back();
      return;
    }
    if (is_y(top) && is_y(s)) {
      stack.pop_back();
      const int power = (y_power(top) + y_power(s)) % 3;
      if (power != 0) stack.push_back(y_of(power));
      return;
    }
  }
  stack.push_back(s);
}

}  // namespace

FreeProductWord FreeProductWord::reduce(const std::vector<Syllable>& syllables) {
  std::vector<Syllable> stack;
  stack.reserve(syllables.size());
  for (Syllable s : syllables) push_reduced(stack, s);
  return FreeProductWord(std::move(stack));
}

std::string FreeProductWord::to_string() const {
  std::string out;
  for (Syllable s : syllables_) {
    if (!out.empty()) out.push_back(' ');
    out += s == Syllable::X ? "X" : s == Syllable::Y ? "Y" : "Y^2";
  }
  return out;
}

FreeProductWord project(const BraidWord& w) {
  std::vector<Syllable> syllables;
  syllables.reserve(2 * w.size());
  for (const auto& l : w.letters()) {
    if (l.generator == 1) {
      if (l.sign > 0) {
        syllables.insert(syllables.end(), {Syllable::X, Syllable::Y});
      } else {
        syllables.insert(syllables.end(), {Syllable::Y2, Syllable::X});
      }
    } else {
      if (l.sign > 0) {
        syllables.insert(syllables.end(), {Syllable::Y, Syllable::X});
      } else {
        syllables.insert(syllables.end(), {Syllable::X, Syllable::Y2});
      }
    }
  }
  return FreeProductWord::reduce(syllables);
}

SL2Matrix psl_matrix(const FreeProductWord& fw) {
  static const SL2Matrix x(0, -1, 1, 0);
  static const SL2Matrix y(0, -1, 1, 1);
  static const SL2Matrix y2 = y * y;
  SL2Matrix m;
  for (Syllable s : fw.syllables()) {
    m *= s == Syllable::X ? x : s == Syllable::Y ? y : y2;
  }
  return m;
}

FreeProductWord cyclic_normal_form(const FreeProductWord& fw) {
  std::deque<Syllable> word(fw.syllables().begin(), fw.syllables().end());
  while (word.size() >= 2 && is_y(word.front()) == is_y(word.back())) {
    if (word.front() == Syllable::X) {
      word.pop_front();
      word.pop_back();
      continue;
    }
    const int power = (y_power(word.front()) + y_power(word.back())) % 3;
    word.pop_back();
    if (power == 0) {
      word.pop_front();
    } else {
      word.front() = y_of(power);
    }
  }

  std::vector<Syllable> best(word.begin(), word.end());
  std::vector<Syllable> candidate = best;
  for (std::size_t shift = 1; shift < best.size(); ++shift) {
    std::rotate(candidate.begin(), candidate.begin() + 1, candidate.end());
    if (candidate < best) best = candidate;
  }
  // A cyclically reduced word is reduced, so reduce() leaves it unchanged.
  return FreeProductWord::reduce(best);
}

bool are_conjugate(const BraidWord& u, const BraidWord& v) {
  return exponent_sum(u) == exponent_sum(v) &&
         cyclic_normal_form(project(u)) == cyclic_normal_form(project(v));
}

namespace {

struct ConjugatorSearch {
  const SL2Matrix& mu;
  const SL2Matrix& mv;
  std::vector<Letter> prefix;

  static constexpr std::array<Letter, 4> kOrder{{{1, 1}, {1, -1}, {2, 1}, {2, -1}}};

  static const SL2Matrix& letter_matrix(std::size_t i) {
    static const std::array<SL2Matrix, 4> images{represent(BraidWord({kOrder[0]})),
                                                 represent(BraidWord({kOrder[1]})),
                                                 represent(BraidWord({kOrder[2]})),
                                                 represent(BraidWord({kOrder[3]}))};
    return images[i];
  }

  // Extends prefix to exactly `remaining` more letters. Only freely reduced
  // words are visited: an unreduced g has a shorter reduced equivalent
  // that shortlex order reaches first.
  bool search(const SL2Matrix& mg, std::size_t remaining) {
    if (remaining == 0) return mg * mu == mv * mg;
    for (std::size_t i = 0; i < kOrder.size(); ++i) {
      const Letter& l = kOrder[i];
      if (!prefix.empty() && prefix.back() == l.inverted()) continue;
      prefix.push_back(l);
      if (search(mg * letter_matrix(i), remaining - 1)) return true;
      prefix.pop_back();
    }
    return false;
  }
};

}  // namespace

std::optional<BraidWord> find_conjugator_brute(const BraidWord& u, const BraidWord& v,
                                               std::size_t max_len) {
  // Conjugation preserves exponent sums, so matching matrices then suffice.
  if (exponent_sum(u) != exponent_sum(v)) return std::nullopt;
  const SL2Matrix mu = represent(u);
  const SL2Matrix mv = represent(v);
  for (std::size_t len = 0; len <= max_len; ++len) {
    ConjugatorSearch s{mu, mv, {}};
    if (s.search(SL2Matrix::identity(), len)) return BraidWord(std::move(s.prefix));
  }
  return std::nullopt;
}

}  // namespace braidlens
