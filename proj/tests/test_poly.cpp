#include "doctest.h"
#include "parkfn/identities.hpp"
#include "parkfn/poly.hpp"
#include "parkfn/rng.hpp"

using namespace parkfn;

namespace {

MultiPoly random_poly(SplitMix64& rng, int arity, int max_terms, int max_exp) {
  MultiPoly p(arity);
  int terms = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(max_terms)));
  for (int t = 0; t < terms; ++t) {
    std::vector<int> e(static_cast<std::size_t>(arity));
    for (int& x : e) x = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(max_exp + 1)));
    p.add_term(std::move(e), BigInt(static_cast<std::int64_t>(rng.next_below(21)) - 10));
  }
  return p;
}

}  // namespace

TEST_CASE("basic arithmetic") {
  MultiPoly x = MultiPoly::variable(2, 0);
  MultiPoly y = MultiPoly::variable(2, 1);
  MultiPoly square = (x + y).pow(2);
  MultiPoly expected(2);
  expected.add_term({2, 0}, 1);
  expected.add_term({1, 1}, 2);
  expected.add_term({0, 2}, 1);
  CHECK(square == expected);
  CHECK(square.to_string() == "x2^2 + 2*x1*x2 + x1^2");

  CHECK((x * y - y * x).is_zero());
  SplitMix64 rng(1);
  CHECK(random_poly(rng, 2, 5, 3).pow(0) == MultiPoly::constant(2, 1));
  CHECK(MultiPoly(3).pow(0) == MultiPoly::constant(3, 1));
  CHECK((BigInt(0) * x).is_zero());
}

TEST_CASE("zero coefficients are never stored") {
  MultiPoly p(1);
  p.add_term({1}, 5);
  p.add_term({1}, -5);
  CHECK(p.is_zero());
  CHECK(p.term_count() == 0);
}

TEST_CASE("graded lexicographic canonical ordering") {
  MultiPoly p(2);
  p.add_term({0, 2}, 1);
  p.add_term({3, 0}, 1);
  p.add_term({1, 0}, 1);
  p.add_term({0, 0}, 1);
  p.add_term({1, 1}, 1);
  std::vector<std::vector<int>> order;
  for (const auto& [e, c] : p.terms()) order.push_back(e);
  CHECK(order ==
        std::vector<std::vector<int>>{{0, 0}, {1, 0}, {0, 2}, {1, 1}, {3, 0}});
}

TEST_CASE("ring laws on random polynomials") {
  SplitMix64 rng(33);
  for (int trial = 0; trial < 60; ++trial) {
    int arity = 1 + static_cast<int>(rng.next_below(3));
    MultiPoly p = random_poly(rng, arity, 6, 3);
    MultiPoly q = random_poly(rng, arity, 6, 3);
    MultiPoly r = random_poly(rng, arity, 6, 3);
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK((p + q) + r == p + (q + r));
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK((p - p).is_zero());
    // evaluation is a ring homomorphism
    std::vector<BigInt> point;
    for (int i = 0; i < arity; ++i) {
      point.push_back(BigInt(static_cast<std::int64_t>(rng.next_below(7)) - 3));
    }
    CHECK((p * q).eval(point) == p.eval(point) * q.eval(point));
    CHECK((p + q).eval(point) == p.eval(point) + q.eval(point));
  }
}

TEST_CASE("arity mismatches are rejected") {
  MultiPoly p(2), q(3);
  CHECK_THROWS_AS(p + q, ArityMismatch);
  CHECK_THROWS_AS(p * q, ArityMismatch);
  CHECK_THROWS_AS(p.add_term({1}, 1), ArityMismatch);
  CHECK_THROWS_AS(p.eval(std::vector<BigInt>{1}), ArityMismatch);
  CHECK_THROWS_AS(p.pow(-1), ParameterOutOfRange);
}

TEST_CASE("substitution and variable permutation") {
  MultiPoly x = MultiPoly::variable(2, 0);
  MultiPoly y = MultiPoly::variable(2, 1);
  MultiPoly p = x * x * y + BigInt(3) * (x * y) + MultiPoly::constant(2, 7);
  MultiPoly at1 = p.substitute(0, 1);
  MultiPoly expected = y + BigInt(3) * y + MultiPoly::constant(2, 7);
  CHECK(at1 == expected);

  std::vector<int> swap{1, 0};
  MultiPoly swapped = p.permute_vars(swap);
  MultiPoly manual = y * y * x + BigInt(3) * (x * y) + MultiPoly::constant(2, 7);
  CHECK(swapped == manual);
}

TEST_CASE("evaluating the joint closed form recovers the count") {
  MultiPoly gf = closed_form(IdentityId::MasterPf1, {.m = 3, .n = 3});
  std::vector<BigInt> ones{1, 1};
  CHECK(gf.eval(ones) == 16);
  CHECK(gf.eval(ones) == pf_count_formula(3, 3));
}
