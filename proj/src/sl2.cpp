#include "braidlens/sl2.hpp"

#include <ostream>
#include <sstream>

namespace braidlens {

SL2Matrix::SL2Matrix(Integer a, Integer b, Integer c, Integer d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (determinant() != 1) {
    throw std::invalid_argument("SL2Matrix requires determinant 1");
  }
}

SL2Matrix SL2Matrix::inverse() const { return {Unchecked{}, d_, -b_, -c_, a_}; }

SL2Matrix SL2Matrix::negated() const { return {Unchecked{}, -a_, -b_, -c_, -d_}; }

SL2Matrix operator*(const SL2Matrix& x, const SL2Matrix& y) {
  return {SL2Matrix::Unchecked{}, x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_,
          x.c_ * y.a_ + x.d_ * y.c_, x.c_ * y.b_ + x.d_ * y.d_};
}

SL2Matrix& SL2Matrix::operator*=(const SL2Matrix& y) { return *this = *this * y; }

std::string SL2Matrix::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const SL2Matrix& m) {
  return os << "[[" << m.a() << ',' << m.b() << "],[" << m.c() << ',' << m.d() << "]]";
}

std::string to_string(MonodromyType t) {
  switch (t) {
    case MonodromyType::Periodic: return "periodic";
    case MonodromyType::Reducible: return "reducible";
    case MonodromyType::PseudoAnosov: return "pseudo-Anosov";
  }
  return "unknown";
}

SL2Matrix represent(const BraidWord& w) {
  Integer a = 1, b = 0, c = 0, d = 1;
  // Right multiplication by a generator touches one column.
  for (const auto& l : w.letters()) {
    if (l.generator == 1) {
      // [[1,s],[0,1]]
      if (l.sign > 0) { b += a; d += c; } else { b -= a; d -= c; }
    } else {
      // [[1,0],[-s,1]]
      if (l.sign > 0) { a -= b; c -= d; } else { a += b; c += d; }
    }
  }
  return {std::move(a), std::move(b), std::move(c), std::move(d)};
}

Integer trace(const BraidWord& w) { return represent(w).trace(); }

Integer homology_order(const BraidWord& w) { return abs(2 - trace(w)); }

MonodromyType classify_monodromy(const BraidWord& w) {
  const Integer t = abs(trace(w));
  if (t > 2) return MonodromyType::PseudoAnosov;
  if (t == 2) return MonodromyType::Reducible;
  return MonodromyType::Periodic;
}

bool equal_in_b3(const BraidWord& u, const BraidWord& v) {
  return exponent_sum(u) == exponent_sum(v) && represent(u) == represent(v);
}

}  // namespace braidlens
