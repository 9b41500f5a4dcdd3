#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>

#include "parkfn/parking.hpp"
#include "parkfn/poly.hpp"

namespace parkfn {

struct ForestParams {
  int m = 0;
  int n = 0;

  friend bool operator==(const ForestParams&, const ForestParams&) = default;
};

// Enumerable families: classical pfs, (a,b) pfs, rooted forests.
using FamilyParams = std::variant<PFParams, ABParams, ForestParams>;

// Monomial statistics: every member contributes one exponent slot, except the
// vector statistics which expand to a (low counts) or k (leading-block counts)
// slots.
enum class Statistic {
  Slev,        // # prefs in 1..n-m+1 (classical)
  Lel,         // # prefs equal to the first
  Ones,        // # prefs equal to 1
  Deg0,        // total child count of the roots (forest)
  DegP,        // child count of the parent of vertex 1 (forest)
  LowCounts,   // (#1, ..., #a)
  LeadCounts,  // (#(lk-k+1), ..., #(lk)), l the leading block ((k,k) only)
};

int statistic_width(Statistic s, const FamilyParams& family);

// Exact sum of x^stats over the exhaustively enumerated family.
MultiPoly empirical_gf(const FamilyParams& family, std::span<const Statistic> stats,
                       std::uint64_t cap = kDefaultEnumerationCap);

// The verified identities.
enum class IdentityId {
  MasterPf1,    // joint (slev, lel) generating function
  Pf1,          // lel marginal (n-m+1) y (y+n)^{m-1}
  Pf2,          // slev marginal (n-m+1) x ((n-m+1)x+m)^{m-1}
  Master3,      // joint (deg(0), deg(p)) over forests, same right-hand side
  Last1,        // (#1..#a) gf (x1+..+xa)(x1+..+xa+mb)^{m-1}
  Last2,        // (#1..#a, lel) gf, two-case sum
  AbGen1,       // (1,b): xy[(m-1)b(x+y+mb-1)^{m-2} + (xy+b)(xy+mb)^{m-2}]
  AbLel,        // (1,b) lel marginal y(y+mb)^{m-1}
  AbOnes,       // (1,b) ones marginal x(x+mb)^{m-1}
  PropAb,       // (k,k) block-vector gf
  ExplFormula,  // two-term count of {slev = s, lel = t}
};

struct IdentityParams {
  int m = 0;
  int n = 0;
  int a = 0;
  int b = 0;
  int k = 0;
  std::optional<int> s;
  std::optional<int> t;
};

// Fully expanded closed form; ParameterOutOfRange when outside the identity's
// stated range (e.g. m = 1 where an exponent m-2 appears).
MultiPoly closed_form(IdentityId id, const IdentityParams& p);

// The two-term count: #{pi in PF(m,n) : slev = s, lel = t}.
BigInt expl_formula_count(int m, int n, int s, int t);

struct IdentityReport {
  IdentityId id;
  bool equal = false;
  MultiPoly closed;
  MultiPoly empirical;
  MultiPoly diff;
};

// Build both sides and compare coefficient-exactly. For ExplFormula without
// (s,t) the whole grid is compared at once through the joint polynomial.
IdentityReport check_identity(IdentityId id, const IdentityParams& p,
                              std::uint64_t cap = kDefaultEnumerationCap);

IdentityId identity_from_name(std::string_view name);  // BadParameter on unknown
std::string identity_name(IdentityId id);
std::vector<IdentityId> all_identities();

}  // namespace parkfn
