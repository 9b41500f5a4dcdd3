#include "parkfn/identities.hpp"

#include <algorithm>

#include "parkfn/forest.hpp"

namespace parkfn {

int statistic_width(Statistic s, const FamilyParams& family) {
  switch (s) {
    case Statistic::Slev:
    case Statistic::Lel:
    case Statistic::Ones:
    case Statistic::Deg0:
    case Statistic::DegP:
      return 1;
    case Statistic::LowCounts:
      if (const auto* ab = std::get_if<ABParams>(&family)) return ab->a;
      if (const auto* pf = std::get_if<PFParams>(&family)) return pf->low_range();
      throw BadParameter("LowCounts needs a parking-function family");
    case Statistic::LeadCounts: {
      const auto* ab = std::get_if<ABParams>(&family);
      if (!ab || ab->a != ab->b) throw BadParameter("LeadCounts needs a (k,k) family");
      return ab->a;
    }
  }
  throw BadParameter("unknown statistic");
}

namespace {

void append_pf_stats(const ParkingFunction& pf, std::span<const Statistic> stats,
                     std::vector<int>& exps) {
  for (Statistic s : stats) {
    switch (s) {
      case Statistic::Slev:
        exps.push_back(stat_slev(pf));
        break;
      case Statistic::Lel:
        exps.push_back(stat_lel(pf));
        break;
      case Statistic::Ones:
        exps.push_back(stat_ones(pf));
        break;
      case Statistic::LowCounts: {
        int low = params_low_range(pf.params());
        for (int j = 1; j <= low; ++j) exps.push_back(stat_count(pf, j));
        break;
      }
      case Statistic::LeadCounts: {
        int k = pf.ab_params().a;
        int lead = leading_block(pf, k);
        for (int j = 1; j <= k; ++j) exps.push_back(stat_count(pf, (lead - 1) * k + j));
        break;
      }
      default:
        throw BadParameter("statistic not defined on parking functions");
    }
  }
}

void append_forest_stats(const RootedForest& f, std::span<const Statistic> stats,
                         std::vector<int>& exps) {
  for (Statistic s : stats) {
    switch (s) {
      case Statistic::Deg0:
        exps.push_back(deg_root_total(f));
        break;
      case Statistic::DegP:
        exps.push_back(deg_parent_of_1(f));
        break;
      default:
        throw BadParameter("statistic not defined on forests");
    }
  }
}

}  // namespace

MultiPoly empirical_gf(const FamilyParams& family, std::span<const Statistic> stats,
                       std::uint64_t cap) {
  int arity = 0;
  for (Statistic s : stats) arity += statistic_width(s, family);
  MultiPoly sum(arity);
  std::vector<int> exps;
  exps.reserve(static_cast<std::size_t>(arity));
  if (const auto* forest = std::get_if<ForestParams>(&family)) {
    for_each_forest(forest->m, forest->n, [&](const RootedForest& f) {
      exps.clear();
      append_forest_stats(f, stats, exps);
      sum.add_term(exps, 1);
    }, cap);
    return sum;
  }
  Params params = std::holds_alternative<PFParams>(family)
                      ? Params(std::get<PFParams>(family))
                      : Params(std::get<ABParams>(family));
  for_each_valid(params, [&](std::span<const int> prefs) {
    ParkingFunction pf(params, std::vector<int>(prefs.begin(), prefs.end()));
    exps.clear();
    append_pf_stats(pf, stats, exps);
    sum.add_term(exps, 1);
  }, cap);
  return sum;
}

namespace {

void require(bool ok, const char* message) {
  if (!ok) throw ParameterOutOfRange(message);
}

// (n-m+1) x y [ (m-1)((n-m+1)x + y + m-1)^{m-2}
//              + (xy + (n-m)x + 1)(xy + (n-m)x + m)^{m-2} ],  m >= 2.
MultiPoly master_pf1_closed(int m, int n) {
  require(m >= 2 && n >= m, "identity needs 2 <= m <= n");
  const MultiPoly x = MultiPoly::variable(2, 0);
  const MultiPoly y = MultiPoly::variable(2, 1);
  auto c = [](BigInt v) { return MultiPoly::constant(2, std::move(v)); };
  MultiPoly first = BigInt(m - 1) * (BigInt(n - m + 1) * x + y + c(m - 1)).pow(m - 2);
  MultiPoly xy = x * y;
  MultiPoly base = xy + BigInt(n - m) * x;
  MultiPoly second = (base + c(1)) * (base + c(m)).pow(m - 2);
  return BigInt(n - m + 1) * (x * y * (first + second));
}

MultiPoly pf1_closed(int m, int n) {
  require(m >= 1 && n >= m, "identity needs 1 <= m <= n");
  const MultiPoly y = MultiPoly::variable(1, 0);
  return BigInt(n - m + 1) * (y * (y + MultiPoly::constant(1, n)).pow(m - 1));
}

MultiPoly pf2_closed(int m, int n) {
  require(m >= 1 && n >= m, "identity needs 1 <= m <= n");
  const MultiPoly x = MultiPoly::variable(1, 0);
  return BigInt(n - m + 1) *
         (x * (BigInt(n - m + 1) * x + MultiPoly::constant(1, m)).pow(m - 1));
}

// (x1+...+xa)(x1+...+xa+mb)^{m-1}
MultiPoly last1_closed(int a, int b, int m) {
  require(a >= 1 && b >= 1 && m >= 1, "identity needs a, b, m >= 1");
  MultiPoly total(a);
  for (int j = 0; j < a; ++j) total += MultiPoly::variable(a, j);
  return total * (total + MultiPoly::constant(a, m * b)).pow(m - 1);
}

// sum_j xj y (Xj + b)(Xj + mb)^{m-2} + b(m-1) X y (X + y + mb - 1)^{m-2}
// where X = x1+...+xa and Xj = X with xj replaced by xj y. Variables x1..xa, y.
MultiPoly last2_closed(int a, int b, int m) {
  require(a >= 1 && b >= 1 && m >= 2, "identity needs a, b >= 1 and m >= 2");
  const int arity = a + 1;
  const MultiPoly y = MultiPoly::variable(arity, a);
  MultiPoly total(arity);
  for (int j = 0; j < a; ++j) total += MultiPoly::variable(arity, j);
  MultiPoly sum(arity);
  for (int j = 0; j < a; ++j) {
    MultiPoly xj = MultiPoly::variable(arity, j);
    MultiPoly xj_y = xj * y;
    MultiPoly with_y = total - xj + xj_y;
    sum += xj_y * (with_y + MultiPoly::constant(arity, b)) *
           (with_y + MultiPoly::constant(arity, m * b)).pow(m - 2);
  }
  sum += BigInt(b) * BigInt(m - 1) *
         (total * y * (total + y + MultiPoly::constant(arity, m * b - 1)).pow(m - 2));
  return sum;
}

// xy[(m-1)b(x+y+mb-1)^{m-2} + (xy+b)(xy+mb)^{m-2}]
MultiPoly abgen1_closed(int b, int m) {
  require(b >= 1 && m >= 2, "identity needs b >= 1 and m >= 2");
  const MultiPoly x = MultiPoly::variable(2, 0);
  const MultiPoly y = MultiPoly::variable(2, 1);
  auto c = [](BigInt v) { return MultiPoly::constant(2, std::move(v)); };
  MultiPoly first = BigInt(m - 1) * BigInt(b) * (x + y + c(m * b - 1)).pow(m - 2);
  MultiPoly xy = x * y;
  MultiPoly second = (xy + c(b)) * (xy + c(m * b)).pow(m - 2);
  return x * y * (first + second);
}

MultiPoly ab_marginal_closed(int b, int m) {
  require(b >= 1 && m >= 1, "identity needs b, m >= 1");
  const MultiPoly v = MultiPoly::variable(1, 0);
  return v * (v + MultiPoly::constant(1, m * b)).pow(m - 1);
}

// (m-1) X Y (X+Y+(m-1)k)^{m-2} + XY (XY+k)(XY+mk)^{m-2}
// with X = x1+..+xk, Y = y1+..+yk, XY = x1 y1 + ... + xk yk.
MultiPoly prop_ab_closed(int k, int m) {
  require(k >= 1 && m >= 2, "identity needs k >= 1 and m >= 2");
  const int arity = 2 * k;
  MultiPoly xs(arity), ys(arity), xy(arity);
  for (int j = 0; j < k; ++j) {
    MultiPoly xj = MultiPoly::variable(arity, j);
    MultiPoly yj = MultiPoly::variable(arity, k + j);
    xs += xj;
    ys += yj;
    xy += xj * yj;
  }
  MultiPoly first = BigInt(m - 1) * (xs * ys * (xs + ys + MultiPoly::constant(arity, (m - 1) * k)).pow(m - 2));
  MultiPoly second = xy * (xy + MultiPoly::constant(arity, k)) *
                     (xy + MultiPoly::constant(arity, m * k)).pow(m - 2);
  return first + second;
}

}  // namespace

BigInt expl_formula_count(int m, int n, int s, int t) {
  if (m < 1 || n < m) throw ParameterOutOfRange("count needs 1 <= m <= n");
  BigInt first = 0;
  if (s >= 1 && t >= 1 && m - s - t >= 0) {
    first = multinomial(m - 2, {s - 1, t - 1, m - s - t}) * int_pow(n - m + 1, s) *
            int_pow(m - 1, m - s - t + 1);
  }
  BigInt second = 0;
  if (t >= 1 && s >= t && m >= s) {
    // s (n-m+1) (n-m)^{s-t} m^{m-s-1} with s m^{m-s-1} read as |PF(m-s, m-1)|
    second = multinomial(m - 1, {t - 1, s - t, m - s}) * BigInt(n - m + 1) *
             int_pow(n - m, s - t) * pf_count_formula(m - s, m - 1);
  }
  return first + second;
}

MultiPoly closed_form(IdentityId id, const IdentityParams& p) {
  switch (id) {
    case IdentityId::MasterPf1:
    case IdentityId::Master3:
      return master_pf1_closed(p.m, p.n);
    case IdentityId::Pf1:
      return pf1_closed(p.m, p.n);
    case IdentityId::Pf2:
      return pf2_closed(p.m, p.n);
    case IdentityId::Last1:
      return last1_closed(p.a, p.b, p.m);
    case IdentityId::Last2:
      return last2_closed(p.a, p.b, p.m);
    case IdentityId::AbGen1:
      return abgen1_closed(p.b, p.m);
    case IdentityId::AbLel:
    case IdentityId::AbOnes:
      return ab_marginal_closed(p.b, p.m);
    case IdentityId::ExplFormula: {
      if (p.s && p.t) {
        return MultiPoly::constant(0, expl_formula_count(p.m, p.n, *p.s, *p.t));
      }
      // Whole grid at once: sum over (s,t) of count * x^s y^t.
      if (p.m < 1 || p.n < p.m) throw ParameterOutOfRange("count needs 1 <= m <= n");
      MultiPoly sum(2);
      for (int s = 1; s <= p.m; ++s) {
        for (int t = 1; t <= p.m; ++t) {
          sum.add_term({s, t}, expl_formula_count(p.m, p.n, s, t));
        }
      }
      return sum;
    }
    case IdentityId::PropAb:
      return prop_ab_closed(p.k, p.m);
  }
  throw BadParameter("unknown identity");
}

IdentityReport check_identity(IdentityId id, const IdentityParams& p, std::uint64_t cap) {
  IdentityReport report{id, false, MultiPoly(0), MultiPoly(0), MultiPoly(0)};
  report.closed = closed_form(id, p);
  switch (id) {
    case IdentityId::MasterPf1: {
      Statistic st[] = {Statistic::Slev, Statistic::Lel};
      report.empirical = empirical_gf(PFParams{p.m, p.n}, st, cap);
      break;
    }
    case IdentityId::Pf1: {
      Statistic st[] = {Statistic::Lel};
      report.empirical = empirical_gf(PFParams{p.m, p.n}, st, cap);
      break;
    }
    case IdentityId::Pf2: {
      Statistic st[] = {Statistic::Slev};
      report.empirical = empirical_gf(PFParams{p.m, p.n}, st, cap);
      break;
    }
    case IdentityId::Master3: {
      Statistic st[] = {Statistic::Deg0, Statistic::DegP};
      report.empirical = empirical_gf(ForestParams{p.m, p.n}, st, cap);
      break;
    }
    case IdentityId::Last1: {
      Statistic st[] = {Statistic::LowCounts};
      report.empirical = empirical_gf(ABParams{p.a, p.b, p.m}, st, cap);
      break;
    }
    case IdentityId::Last2: {
      Statistic st[] = {Statistic::LowCounts, Statistic::Lel};
      report.empirical = empirical_gf(ABParams{p.a, p.b, p.m}, st, cap);
      break;
    }
    case IdentityId::AbGen1: {
      Statistic st[] = {Statistic::Ones, Statistic::Lel};
      report.empirical = empirical_gf(ABParams{1, p.b, p.m}, st, cap);
      break;
    }
    case IdentityId::AbLel: {
      Statistic st[] = {Statistic::Lel};
      report.empirical = empirical_gf(ABParams{1, p.b, p.m}, st, cap);
      break;
    }
    case IdentityId::AbOnes: {
      Statistic st[] = {Statistic::Ones};
      report.empirical = empirical_gf(ABParams{1, p.b, p.m}, st, cap);
      break;
    }
    case IdentityId::PropAb: {
      Statistic st[] = {Statistic::LowCounts, Statistic::LeadCounts};
      report.empirical = empirical_gf(ABParams{p.k, p.k, p.m}, st, cap);
      break;
    }
    case IdentityId::ExplFormula: {
      if (p.s && p.t) {
        BigInt observed = 0;
        PFParams params{p.m, p.n};
        for_each_pf(params, [&](std::span<const int> prefs) {
          ParkingFunction pf(params, std::vector<int>(prefs.begin(), prefs.end()));
          if (stat_slev(pf) == *p.s && stat_lel(pf) == *p.t) ++observed;
        }, cap);
        report.empirical = MultiPoly::constant(0, observed);
      } else {
        Statistic st[] = {Statistic::Slev, Statistic::Lel};
        report.empirical = empirical_gf(PFParams{p.m, p.n}, st, cap);
      }
      break;
    }
  }
  report.diff = report.closed - report.empirical;
  report.equal = report.diff.is_zero();
  return report;
}

namespace {

constexpr std::pair<IdentityId, const char*> kIdentityNames[] = {
    {IdentityId::MasterPf1, "master-pf1"}, {IdentityId::Pf1, "pf1"},
    {IdentityId::Pf2, "pf2"},              {IdentityId::Master3, "master3"},
    {IdentityId::Last1, "last1"},          {IdentityId::Last2, "last2"},
    {IdentityId::AbGen1, "abgen1"},        {IdentityId::AbLel, "ab-lel"},
    {IdentityId::AbOnes, "ab-ones"},       {IdentityId::PropAb, "prop-ab"},
    {IdentityId::ExplFormula, "expl-formula"},
};

}  // namespace

IdentityId identity_from_name(std::string_view name) {
  for (const auto& [id, n] : kIdentityNames) {
    if (name == n) return id;
  }
  throw BadParameter("unknown identity name: " + std::string(name));
}

std::string identity_name(IdentityId id) {
  for (const auto& [i, n] : kIdentityNames) {
    if (i == id) return n;
  }
  return "?";
}

std::vector<IdentityId> all_identities() {
  std::vector<IdentityId> out;
  for (const auto& [id, n] : kIdentityNames) out.push_back(id);
  return out;
}

}  // namespace parkfn
