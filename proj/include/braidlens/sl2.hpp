#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>

#include "braidlens/braid_word.hpp"

namespace braidlens {

using Integer = boost::multiprecision::cpp_int;

/// 2x2 integer matrix of determinant one.
class SL2Matrix {
 public:
  /// Identity.
  SL2Matrix() : a_(1), b_(0), c_(0), d_(1) {}

  /// Throws std::invalid_argument unless ad - bc = 1.
  SL2Matrix(Integer a, Integer b, Integer c, Integer d);

  static SL2Matrix identity() { return {}; }

  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }
  const Integer& c() const { return c_; }
  const Integer& d() const { return d_; }

  Integer trace() const { return a_ + d_; }
  Integer determinant() const { return a_ * d_ - b_ * c_; }
  SL2Matrix inverse() const;
  SL2Matrix negated() const;

  friend SL2Matrix operator*(const SL2Matrix& x, const SL2Matrix& y);
  SL2Matrix& operator*=(const SL2Matrix& y);
  friend bool operator==(const SL2Matrix&, const SL2Matrix&) = default;

  /// "[[a,b],[c,d]]"
  std::string to_string() const;

 private:
  struct Unchecked {};
  SL2Matrix(Unchecked, Integer a, Integer b, Integer c, Integer d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

  Integer a_, b_, c_, d_;
};

std::ostream& operator<<(std::ostream& os, const SL2Matrix& m);

enum class MonodromyType { Periodic, Reducible, PseudoAnosov };

std::string to_string(MonodromyType t);

/// Reduced Burau representation at t = -1:
///   s1 -> [[1,1],[0,1]],  s2 -> [[1,0],[-1,1]].
/// Its kernel is generated by (s2 s1 s2)^4.
SL2Matrix represent(const BraidWord& w);

Integer trace(const BraidWord& w);

/// |det(represent(w) - I)| = |2 - trace|, the order of H1 of the double
/// branched cover of the closed braid. 0 stands for infinite homology.
Integer homology_order(const BraidWord& w);

/// Nielsen-Thurston type from |trace|: > 2 pseudo-Anosov, = 2 reducible,
/// < 2 periodic.
MonodromyType classify_monodromy(const BraidWord& w);

/// Word problem in B3: the matrix together with the exponent sum is a
/// complete invariant.
bool equal_in_b3(const BraidWord& u, const BraidWord& v);

}  // namespace braidlens
