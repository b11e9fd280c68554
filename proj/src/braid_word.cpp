#include "braidlens/braid_word.hpp"

#include <charconv>
#include <cstdlib>
#include <random>

namespace braidlens {

namespace {

// Exponents are expanded letterwise, so an absurd exponent would be an
// allocation bomb rather than a word.
constexpr std::int64_t kMaxTokenExponent = 1'000'000;

void validate(const Letter& l) {
  if ((l.generator != 1 && l.generator != 2) || (l.sign != 1 && l.sign != -1)) {
    throw std::invalid_argument("braid letter must be sigma_1 or sigma_2 to the power +-1");
  }
}

void append_power(std::vector<Letter>& out, int generator, std::int64_t exponent) {
  const int sign = exponent < 0 ? -1 : 1;
  const std::uint64_t count = exponent < 0 ? 0 - static_cast<std::uint64_t>(exponent)
                                           : static_cast<std::uint64_t>(exponent);
  out.insert(out.end(), count, Letter{generator, sign});
}

void parse_token(std::string_view token, std::vector<Letter>& out) {
  if (token.size() == 1) {
    switch (token[0]) {
      case 'a': out.push_back({1, 1}); return;
      case 'A': out.push_back({1, -1}); return;
      case 'b': out.push_back({2, 1}); return;
      case 'B': out.push_back({2, -1}); return;
      default: break;
    }
    throw ParseError("unknown braid token '" + std::string(token) + "'");
  }
  if (token.size() < 2 || token[0] != 's') {
    throw ParseError("unknown braid token '" + std::string(token) + "'");
  }
  const char gen_char = token[1];
  if (gen_char < '0' || gen_char > '9') {
    throw ParseError("unknown braid token '" + std::string(token) + "'");
  }
  // Read the full generator index so that "s3" and "s12" report the index.
  std::size_t pos = 1;
  while (pos < token.size() && token[pos] >= '0' && token[pos] <= '9') ++pos;
  const std::string_view index_text = token.substr(1, pos - 1);
  if (index_text != "1" && index_text != "2") {
    throw ParseError("generator index out of range in token '" + std::string(token) +
                     "' (B3 has generators s1, s2)");
  }
  const int generator = index_text == "1" ? 1 : 2;
  std::int64_t exponent = 1;
  if (pos < token.size()) {
    if (token[pos] != '^' || pos + 1 == token.size()) {
      throw ParseError("malformed braid token '" + std::string(token) + "'");
    }
    std::string_view exp_text = token.substr(pos + 1);
    if (exp_text.front() == '+') exp_text.remove_prefix(1);
    const char* first = exp_text.data();
    const char* last = first + exp_text.size();
    auto [ptr, ec] = std::from_chars(first, last, exponent);
    if (ec != std::errc() || ptr != last || exp_text.empty()) {
      throw ParseError("malformed exponent in braid token '" + std::string(token) + "'");
    }
    if (exponent == 0) {
      throw ParseError("zero exponent in braid token '" + std::string(token) + "'");
    }
    if (exponent > kMaxTokenExponent || exponent < -kMaxTokenExponent) {
      throw ParseError("exponent too large in braid token '" + std::string(token) + "'");
    }
  }
  append_power(out, generator, exponent);
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }

}  // namespace

BraidWord::BraidWord(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (const auto& l : letters_) validate(l);
}

BraidWord parse_braid(std::string_view text) {
  std::vector<Letter> letters;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !is_space(text[j])) ++j;
    if (j > i) parse_token(text.substr(i, j - i), letters);
    i = j;
  }
  return BraidWord(std::move(letters));
}

std::string format_braid(const BraidWord& w) {
  std::string out;
  out.reserve(2 * w.size());
  for (const auto& l : w.letters()) {
    if (!out.empty()) out.push_back(' ');
    const char base = l.generator == 1 ? 'a' : 'b';
    out.push_back(l.sign > 0 ? base : static_cast<char>(base - 'a' + 'A'));
  }
  return out;
}

BraidWord concat(const BraidWord& u, const BraidWord& v) {
  std::vector<Letter> letters = u.letters();
  letters.insert(letters.end(), v.letters().begin(), v.letters().end());
  return BraidWord(std::move(letters));
}

BraidWord inverse(const BraidWord& w) {
  std::vector<Letter> letters;
  letters.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    letters.push_back(it->inverted());
  }
  return BraidWord(std::move(letters));
}

BraidWord mirror(const BraidWord& w) {
  std::vector<Letter> letters;
  letters.reserve(w.size());
  for (const auto& l : w.letters()) letters.push_back(l.inverted());
  return BraidWord(std::move(letters));
}

BraidWord conjugate_by(const BraidWord& w, const BraidWord& g) {
  return concat(concat(g, w), inverse(g));
}

BraidWord free_reduce(const BraidWord& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (const auto& l : w.letters()) {
    if (!stack.empty() && stack.back() == l.inverted()) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return BraidWord(std::move(stack));
}

std::int64_t exponent_sum(const BraidWord& w) {
  std::int64_t total = 0;
  for (const auto& l : w.letters()) total += l.sign;
  return total;
}

BraidWord power(int generator, std::int64_t exponent) {
  validate({generator, 1});
  std::vector<Letter> letters;
  append_power(letters, generator, exponent);
  return BraidWord(std::move(letters));
}

BraidWord beta(std::int64_t k, std::int64_t n) {
  std::vector<Letter> letters;
  const std::vector<Letter> delta = k >= 0 ? std::vector<Letter>{{2, 1}, {1, 1}, {2, 1}}
                                           : std::vector<Letter>{{2, -1}, {1, -1}, {2, -1}};
  const std::uint64_t reps = k < 0 ? 0 - static_cast<std::uint64_t>(k) : static_cast<std::uint64_t>(k);
  letters.reserve(3 * reps + static_cast<std::size_t>(std::llabs(n)));
  for (std::uint64_t i = 0; i < reps; ++i) letters.insert(letters.end(), delta.begin(), delta.end());
  append_power(letters, 1, n);
  return BraidWord(std::move(letters));
}

BraidWord standard_form(std::int64_t p, std::int64_t q) {
  std::vector<Letter> letters{{2, -1}};
  append_power(letters, 1, p);
  append_power(letters, 2, 2);
  append_power(letters, 1, q);
  return BraidWord(std::move(letters));
}

BraidWord insert_full_twists(const BraidWord& w, std::int64_t l) {
  return concat(beta(4 * l, 0), w);
}

BraidWord scramble(const BraidWord& w, std::uint64_t seed, std::size_t steps) {
  static const std::vector<Letter> relator{{1, 1}, {2, 1}, {1, 1}, {2, -1}, {1, -1}, {2, -1}};
  static const std::vector<Letter> relator_inv = inverse(BraidWord(relator)).letters();

  std::mt19937_64 rng(seed);
  std::vector<Letter> letters = w.letters();
  for (std::size_t step = 0; step < steps; ++step) {
    const std::size_t position = static_cast<std::size_t>(rng() % (letters.size() + 1));
    const auto kind = rng() % 3;
    std::vector<Letter> piece;
    if (kind == 0) {
      const Letter g{static_cast<int>(rng() % 2) + 1, rng() % 2 == 0 ? 1 : -1};
      piece = {g, g.inverted()};
    } else if (kind == 1) {
      piece = relator;
    } else {
      piece = relator_inv;
    }
    letters.insert(letters.begin() + static_cast<std::ptrdiff_t>(position), piece.begin(), piece.end());
  }
  return BraidWord(std::move(letters));
}

}  // namespace braidlens
