#include "doctest.h"
#include "parkfn/identities.hpp"

using namespace parkfn;

TEST_CASE("joint closed form at m = n = 2") {
  MultiPoly gf = closed_form(IdentityId::MasterPf1, {.m = 2, .n = 2});
  MultiPoly expected(2);
  expected.add_term({2, 2}, 1);
  expected.add_term({1, 1}, 2);
  CHECK(gf == expected);
}

TEST_CASE("empirical generating functions") {
  Statistic joint[] = {Statistic::Slev, Statistic::Lel};
  MultiPoly pf22 = empirical_gf(PFParams{2, 2}, joint);
  MultiPoly expected(2);
  expected.add_term({2, 2}, 1);
  expected.add_term({1, 1}, 2);
  CHECK(pf22 == expected);

  Statistic degs[] = {Statistic::Deg0, Statistic::DegP};
  CHECK(empirical_gf(ForestParams{2, 2}, degs) == pf22);

  MultiPoly tiny = empirical_gf(PFParams{1, 1}, joint);
  CHECK(tiny.term_count() == 1);
  CHECK(tiny.coefficient(std::vector<int>{1, 1}) == 1);
}

TEST_CASE("two-term count formula") {
  CHECK(expl_formula_count(2, 2, 1, 1) == 2);
  CHECK(expl_formula_count(2, 2, 2, 2) == 1);
  CHECK(expl_formula_count(2, 2, 1, 2) == 0);
  CHECK(expl_formula_count(1, 4, 1, 1) == 4);
  CHECK(expl_formula_count(3, 3, 0, 1) == 0);
  CHECK(expl_formula_count(3, 3, 4, 1) == 0);
}

TEST_CASE("identity checks on spot parameters") {
  CHECK(check_identity(IdentityId::MasterPf1, {.m = 4, .n = 6}).equal);
  CHECK(check_identity(IdentityId::Pf1, {.m = 3, .n = 5}).equal);
  CHECK(check_identity(IdentityId::Pf2, {.m = 4, .n = 4}).equal);
  CHECK(check_identity(IdentityId::Master3, {.m = 3, .n = 5}).equal);
  CHECK(check_identity(IdentityId::Last1, {.m = 3, .a = 2, .b = 2}).equal);
  CHECK(check_identity(IdentityId::Last2, {.m = 3, .a = 2, .b = 2}).equal);
  CHECK(check_identity(IdentityId::AbLel, {.m = 3, .b = 2}).equal);
  CHECK(check_identity(IdentityId::AbOnes, {.m = 3, .b = 2}).equal);
  CHECK(check_identity(IdentityId::ExplFormula, {.m = 4, .n = 5}).equal);
  IdentityParams st{.m = 3, .n = 4};
  st.s = 2;
  st.t = 1;
  CHECK(check_identity(IdentityId::ExplFormula, st).equal);
}

TEST_CASE("abgen1 equality and x<->y symmetry") {
  IdentityReport report = check_identity(IdentityId::AbGen1, {.m = 3, .b = 2});
  CHECK(report.equal);
  std::vector<int> swap{1, 0};
  CHECK(report.closed.permute_vars(swap) == report.closed);
}

TEST_CASE("prop-ab equality and (x_i <-> y_i) symmetry") {
  IdentityReport report = check_identity(IdentityId::PropAb, {.m = 3, .k = 2});
  CHECK(report.equal);
  std::vector<int> swap{2, 3, 0, 1};
  CHECK(report.closed.permute_vars(swap) == report.closed);
  CHECK(report.empirical.permute_vars(swap) == report.empirical);
}

TEST_CASE("marginal specialization coherence") {
  // closed(i) at x = 1 equals closed(ii); at y = 1 equals closed(iii)
  for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 2}, {3, 5}, {4, 6}}) {
    MultiPoly joint = closed_form(IdentityId::MasterPf1, {.m = m, .n = n});
    MultiPoly lel1 = closed_form(IdentityId::Pf1, {.m = m, .n = n});
    MultiPoly slev1 = closed_form(IdentityId::Pf2, {.m = m, .n = n});
    // embed the 1-variable marginals into the (x, y) layout
    MultiPoly lel2(2), slev2(2);
    for (const auto& [e, c] : lel1.terms()) lel2.add_term({0, e[0]}, c);
    for (const auto& [e, c] : slev1.terms()) slev2.add_term({e[0], 0}, c);
    CHECK(joint.substitute(0, 1) == lel2);
    CHECK(joint.substitute(1, 1) == slev2);
  }
}

TEST_CASE("last1 at a = b = 1 specializes to the slev marginal at n = m") {
  for (int m = 1; m <= 5; ++m) {
    MultiPoly general = closed_form(IdentityId::Last1, {.m = m, .a = 1, .b = 1});
    MultiPoly classical = closed_form(IdentityId::Pf2, {.m = m, .n = m});
    CHECK(general == classical);
  }
}

TEST_CASE("parameters outside the stated ranges are rejected") {
  CHECK_THROWS_AS(closed_form(IdentityId::MasterPf1, {.m = 1, .n = 3}), ParameterOutOfRange);
  CHECK_THROWS_AS(closed_form(IdentityId::AbGen1, {.m = 1, .b = 2}), ParameterOutOfRange);
  CHECK_THROWS_AS(closed_form(IdentityId::PropAb, {.m = 1, .k = 2}), ParameterOutOfRange);
  CHECK_THROWS_AS(closed_form(IdentityId::Last2, {.m = 1, .a = 1, .b = 1}), ParameterOutOfRange);
  CHECK_THROWS_AS(closed_form(IdentityId::MasterPf1, {.m = 4, .n = 3}), ParameterOutOfRange);
  CHECK_NOTHROW(closed_form(IdentityId::Pf1, {.m = 1, .n = 3}));
}

TEST_CASE("identity names round trip") {
  for (IdentityId id : all_identities()) {
    CHECK(identity_from_name(identity_name(id)) == id);
  }
  CHECK_THROWS_AS(identity_from_name("nope"), BadParameter);
}
