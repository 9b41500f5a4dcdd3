#include "parkfn/poly.hpp"

#include <numeric>
#include <sstream>

namespace parkfn {

bool GradedLexLess::operator()(const std::vector<int>& u, const std::vector<int>& v) const {
  int du = std::accumulate(u.begin(), u.end(), 0);
  int dv = std::accumulate(v.begin(), v.end(), 0);
  if (du != dv) return du < dv;
  return std::lexicographical_compare(u.begin(), u.end(), v.begin(), v.end());
}

MultiPoly::MultiPoly(int arity) : arity_(arity) {
  if (arity < 0) throw ParameterOutOfRange("polynomial arity must be >= 0");
}

MultiPoly MultiPoly::constant(int arity, BigInt value) {
  MultiPoly p(arity);
  p.add_term(std::vector<int>(static_cast<std::size_t>(arity), 0), std::move(value));
  return p;
}

MultiPoly MultiPoly::variable(int arity, int index) {
  if (index < 0 || index >= arity) throw ParameterOutOfRange("variable index out of range");
  MultiPoly p(arity);
  std::vector<int> e(static_cast<std::size_t>(arity), 0);
  e[static_cast<std::size_t>(index)] = 1;
  p.add_term(std::move(e), 1);
  return p;
}

void MultiPoly::add_term(std::vector<int> exps, BigInt coef) {
  if (static_cast<int>(exps.size()) != arity_) {
    throw ArityMismatch("exponent vector length != arity");
  }
  for (int e : exps) {
    if (e < 0) throw ParameterOutOfRange("negative exponent");
  }
  if (coef == 0) return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(std::move(exps), std::move(coef));
  } else {
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt MultiPoly::coefficient(std::span<const int> exps) const {
  auto it = terms_.find(std::vector<int>(exps.begin(), exps.end()));
  return it == terms_.end() ? BigInt(0) : it->second;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  if (arity_ != rhs.arity_) throw ArityMismatch("polynomial arities differ");
  for (const auto& [e, c] : rhs.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  if (arity_ != rhs.arity_) throw ArityMismatch("polynomial arities differ");
  for (const auto& [e, c] : rhs.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, -c);
    } else {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs) {
  if (lhs.arity_ != rhs.arity_) throw ArityMismatch("polynomial arities differ");
  MultiPoly out(lhs.arity_);
  std::vector<int> e(static_cast<std::size_t>(lhs.arity_));
  for (const auto& [eu, cu] : lhs.terms_) {
    for (const auto& [ev, cv] : rhs.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = eu[i] + ev[i];
      auto it = out.terms_.find(e);
      if (it == out.terms_.end()) {
        out.terms_.emplace(e, cu * cv);
      } else {
        it->second += cu * cv;
        if (it->second == 0) out.terms_.erase(it);
      }
    }
  }
  return out;
}

MultiPoly operator*(const BigInt& scalar, MultiPoly p) {
  if (scalar == 0) return MultiPoly(p.arity_);
  for (auto& [e, c] : p.terms_) c *= scalar;
  return p;
}

MultiPoly MultiPoly::pow(int exponent) const {
  if (exponent < 0) throw ParameterOutOfRange("pow: negative exponent");
  MultiPoly result = constant(arity_, 1);
  MultiPoly base = *this;
  int e = exponent;
  while (e > 0) {
    if (e & 1) result = result * base;
    if (e > 1) base = base * base;
    e >>= 1;
  }
  return result;
}

BigInt MultiPoly::eval(std::span<const BigInt> point) const {
  if (static_cast<int>(point.size()) != arity_) throw ArityMismatch("point length != arity");
  BigInt total = 0;
  for (const auto& [e, c] : terms_) {
    BigInt term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      term *= int_pow(point[i], e[i]);
    }
    total += term;
  }
  return total;
}

MultiPoly MultiPoly::substitute(int var, const BigInt& value) const {
  if (var < 0 || var >= arity_) throw ParameterOutOfRange("substitute: variable out of range");
  MultiPoly out(arity_);
  for (const auto& [e, c] : terms_) {
    std::vector<int> f = e;
    BigInt coef = c * int_pow(value, f[static_cast<std::size_t>(var)]);
    f[static_cast<std::size_t>(var)] = 0;
    out.add_term(std::move(f), std::move(coef));
  }
  return out;
}

MultiPoly MultiPoly::permute_vars(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != arity_) throw ArityMismatch("permutation length != arity");
  MultiPoly out(arity_);
  for (const auto& [e, c] : terms_) {
    std::vector<int> f(static_cast<std::size_t>(arity_), 0);
    for (int i = 0; i < arity_; ++i) {
      f[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] =
          e[static_cast<std::size_t>(i)];
    }
    out.add_term(std::move(f), c);
  }
  return out;
}

std::string MultiPoly::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    BigInt mag = abs(c);
    int degree = std::accumulate(e.begin(), e.end(), 0);
    if (mag != 1 || degree == 0) os << mag.str();
    bool printed = mag != 1 || degree == 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (printed) os << "*";
      if (i < names.size()) {
        os << names[i];
      } else {
        os << "x" << i + 1;
      }
      if (e[i] > 1) os << "^" << e[i];
      printed = true;
    }
  }
  return os.str();
}

}  // namespace parkfn
