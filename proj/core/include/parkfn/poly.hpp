#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "parkfn/bigint.hpp"

namespace parkfn {

// Graded lexicographic term order: total degree first, then lexicographic on
// the exponent vector. Canonical for serialization and equality.
struct GradedLexLess {
  bool operator()(const std::vector<int>& u, const std::vector<int>& v) const;
};

// Sparse multivariate polynomial over the integers. No zero coefficients are
// ever stored; all arithmetic is exact.
class MultiPoly {
 public:
  using Terms = std::map<std::vector<int>, BigInt, GradedLexLess>;

  explicit MultiPoly(int arity);
  static MultiPoly constant(int arity, BigInt value);
  static MultiPoly variable(int arity, int index);  // x_index, 0-based

  int arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  int term_count() const { return static_cast<int>(terms_.size()); }

  void add_term(std::vector<int> exps, BigInt coef);
  BigInt coefficient(std::span<const int> exps) const;

  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
  friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs -= rhs; }
  friend MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs);
  friend MultiPoly operator*(const BigInt& scalar, MultiPoly p);
  MultiPoly pow(int exponent) const;  // exponent >= 0

  BigInt eval(std::span<const BigInt> point) const;
  // Fold one variable at a fixed value; arity is preserved, the slot unused.
  MultiPoly substitute(int var, const BigInt& value) const;
  // Reindex variables: exponent of new slot perm[i] = old exponent of slot i.
  MultiPoly permute_vars(std::span<const int> perm) const;

  friend bool operator==(const MultiPoly& lhs, const MultiPoly& rhs) {
    return lhs.arity_ == rhs.arity_ && lhs.terms_ == rhs.terms_;
  }

  std::string to_string(std::span<const std::string> names = {}) const;

 private:
  int arity_ = 0;
  Terms terms_;
};

}  // namespace parkfn
