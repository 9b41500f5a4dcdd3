#include "parkfn/parking.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

namespace parkfn {

void PFParams::validate() const {
  if (m < 1) throw BadParameter("PFParams: m must be >= 1");
  if (n < m) throw BadParameter("PFParams: n must be >= m");
}

void ABParams::validate() const {
  if (a < 1) throw BadParameter("ABParams: a must be >= 1");
  if (b < 1) throw BadParameter("ABParams: b must be >= 1");
  if (m < 1) throw BadParameter("ABParams: m must be >= 1");
}

int params_length(const Params& p) {
  return std::visit([](const auto& q) { return q.m; }, p);
}

int params_max_pref(const Params& p) {
  return std::visit([](const auto& q) { return q.max_pref(); }, p);
}

int params_circle_size(const Params& p) {
  return std::visit([](const auto& q) { return q.circle_size(); }, p);
}

int params_low_range(const Params& p) {
  return std::visit([](const auto& q) { return q.low_range(); }, p);
}

void params_validate(const Params& p) {
  std::visit([](const auto& q) { q.validate(); }, p);
}

std::string params_describe(const Params& p) {
  if (const auto* c = std::get_if<PFParams>(&p)) {
    return "pf(m=" + std::to_string(c->m) + ",n=" + std::to_string(c->n) + ")";
  }
  const auto& ab = std::get<ABParams>(p);
  return "abpf(a=" + std::to_string(ab.a) + ",b=" + std::to_string(ab.b) +
         ",m=" + std::to_string(ab.m) + ")";
}

namespace {

// Shared kernel: sorted rearrangement lambda must satisfy lambda_i <= bounds(i)
// with bounds(i) = low + (i-1)*step. Counting sort keeps this O(max + m).
bool sorted_bound_check(std::span<const int> prefs, int m, int max_value, int low, int step) {
  if (static_cast<int>(prefs.size()) != m) return false;
  if (m == 0) return true;
  if (max_value < 1) return false;
  std::vector<int> counts(static_cast<std::size_t>(max_value) + 1, 0);
  for (int v : prefs) {
    if (v < 1 || v > max_value) return false;
    ++counts[static_cast<std::size_t>(v)];
  }
  int seen = 0;
  int i = 1;  // next bound to hit: lambda_i <= low + (i-1)*step
  for (int value = 1; value <= max_value && i <= m; ++value) {
    seen += counts[static_cast<std::size_t>(value)];
    while (i <= m && low + (i - 1) * step == value) {
      if (seen < i) return false;
      ++i;
    }
  }
  return i > m;
}

}  // namespace

bool is_parking_function(std::span<const int> prefs, const PFParams& p) {
  // #{k : pi_k <= i} >= m-n+i for i = n-m+1..n, i.e. lambda_i <= n-m+i.
  if (p.m < 0 || p.n < p.m) return false;
  return sorted_bound_check(prefs, p.m, p.n, p.n - p.m + 1, 1);
}

bool is_ab_parking_function(std::span<const int> prefs, const ABParams& p) {
  if (p.a < 1 || p.b < 1 || p.m < 0) return false;
  return sorted_bound_check(prefs, p.m, p.max_pref(), p.a, p.b);
}

bool is_valid_parking(std::span<const int> prefs, const Params& p) {
  if (const auto* c = std::get_if<PFParams>(&p)) return is_parking_function(prefs, *c);
  return is_ab_parking_function(prefs, std::get<ABParams>(p));
}

ParkingFunction::ParkingFunction(PFParams params, std::vector<int> prefs)
    : ParkingFunction(Params(params), std::move(prefs)) {}

ParkingFunction::ParkingFunction(ABParams params, std::vector<int> prefs)
    : ParkingFunction(Params(params), std::move(prefs)) {}

ParkingFunction::ParkingFunction(Params params, std::vector<int> prefs)
    : params_(params), prefs_(std::move(prefs)) {
  params_validate(params_);
  if (!is_valid_parking(prefs_, params_)) {
    throw NotAParkingFunction("preference list is not a parking function for " +
                              params_describe(params_));
  }
}

const PFParams& ParkingFunction::pf_params() const {
  const auto* c = std::get_if<PFParams>(&params_);
  if (!c) throw BadParameter("expected classical parameters");
  return *c;
}

const ABParams& ParkingFunction::ab_params() const {
  const auto* c = std::get_if<ABParams>(&params_);
  if (!c) throw BadParameter("expected (a,b) parameters");
  return *c;
}

int stat_lel(const ParkingFunction& pf) { return stat_lel(pf, 1); }

int stat_lel(const ParkingFunction& pf, int anchor_car) {
  if (anchor_car < 1 || anchor_car > pf.length()) {
    throw BadParameter("anchor car out of range");
  }
  return stat_count(pf, pf.pref(anchor_car));
}

int stat_count(const ParkingFunction& pf, int value) {
  return static_cast<int>(std::count(pf.prefs().begin(), pf.prefs().end(), value));
}

int stat_ones(const ParkingFunction& pf) { return stat_count(pf, 1); }

int stat_slev(const ParkingFunction& pf) {
  int low = pf.pf_params().low_range();
  return static_cast<int>(
      std::count_if(pf.prefs().begin(), pf.prefs().end(), [low](int v) { return v <= low; }));
}

std::vector<int> OrderPermutation::inverse() const {
  std::vector<int> inv(perm.size(), 0);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    inv[static_cast<std::size_t>(perm[i]) - 1] = static_cast<int>(i) + 1;
  }
  return inv;
}

bool OrderPermutation::is_permutation() const {
  std::vector<char> seen(perm.size(), 0);
  for (int v : perm) {
    if (v < 1 || v > static_cast<int>(perm.size()) || seen[static_cast<std::size_t>(v) - 1]) {
      return false;
    }
    seen[static_cast<std::size_t>(v) - 1] = 1;
  }
  return true;
}

OrderPermutation order_permutation(std::span<const int> prefs) {
  const int m = static_cast<int>(prefs.size());
  std::vector<int> idx(static_cast<std::size_t>(m));
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int i, int j) { return prefs[static_cast<std::size_t>(i)] <
                                              prefs[static_cast<std::size_t>(j)]; });
  OrderPermutation tau;
  tau.perm.assign(static_cast<std::size_t>(m), 0);
  for (int rank = 0; rank < m; ++rank) {
    tau.perm[static_cast<std::size_t>(idx[static_cast<std::size_t>(rank)])] = rank + 1;
  }
  return tau;
}

OrderPermutation order_permutation(const ParkingFunction& pf) {
  return order_permutation(pf.prefs());
}

int Specification::total() const {
  return std::accumulate(counts.begin(), counts.end(), 0);
}

Specification specification(const ParkingFunction& pf) {
  Specification s;
  s.counts.assign(static_cast<std::size_t>(params_max_pref(pf.params())), 0);
  for (int v : pf.prefs()) ++s.counts[static_cast<std::size_t>(v) - 1];
  return s;
}

std::vector<int> prefs_from_spec_tau(std::span<const int> counts, std::span<const int> tau) {
  std::vector<int> sorted;
  for (std::size_t v = 0; v < counts.size(); ++v) {
    for (int r = 0; r < counts[v]; ++r) sorted.push_back(static_cast<int>(v) + 1);
  }
  if (sorted.size() != tau.size()) {
    throw InconsistentPair("specification total does not match permutation length");
  }
  std::vector<int> prefs(tau.size());
  for (std::size_t i = 0; i < tau.size(); ++i) {
    int rank = tau[i];
    if (rank < 1 || rank > static_cast<int>(sorted.size())) {
      throw InconsistentPair("order permutation entry out of range");
    }
    prefs[i] = sorted[static_cast<std::size_t>(rank) - 1];
  }
  return prefs;
}

ParkingFunction rebuild_from(const Specification& spec, const OrderPermutation& tau,
                             const Params& params) {
  if (spec.total() != params_length(params)) {
    throw InconsistentPair("specification total != m");
  }
  if (!tau.is_permutation()) throw InconsistentPair("order permutation is not a permutation");
  return ParkingFunction(params, prefs_from_spec_tau(spec.counts, tau.perm));
}

PFDecomposition decompose(const ParkingFunction& pf) {
  const PFParams& p = pf.pf_params();
  const int low = p.low_range();
  PFDecomposition d;
  d.params = p;
  for (int i = 1; i <= p.m; ++i) {
    int v = pf.pref(i);
    if (v <= low) {
      d.level_positions.push_back(i);
      d.low_values.push_back(v);
    } else {
      d.inner_prefs.push_back(v - low);
    }
  }
  return d;
}

ParkingFunction recompose(const PFDecomposition& d) {
  d.params.validate();
  const int m = d.params.m;
  const int low = d.params.low_range();
  std::vector<int> prefs(static_cast<std::size_t>(m), 0);
  if (d.low_values.size() != d.level_positions.size()) {
    throw InconsistentPair("level set and low map sizes differ");
  }
  for (std::size_t i = 0; i < d.level_positions.size(); ++i) {
    int pos = d.level_positions[i];
    if (pos < 1 || pos > m || prefs[static_cast<std::size_t>(pos) - 1] != 0) {
      throw InconsistentPair("bad level-set position");
    }
    if (d.low_values[i] < 1 || d.low_values[i] > low) {
      throw InconsistentPair("low map value outside 1..n-m+1");
    }
    prefs[static_cast<std::size_t>(pos) - 1] = d.low_values[i];
  }
  std::size_t next = 0;
  for (int i = 0; i < m; ++i) {
    if (prefs[static_cast<std::size_t>(i)] == 0) {
      if (next >= d.inner_prefs.size()) throw InconsistentPair("inner function too short");
      prefs[static_cast<std::size_t>(i)] = d.inner_prefs[next++] + low;
    }
  }
  if (next != d.inner_prefs.size()) throw InconsistentPair("inner function too long");
  return ParkingFunction(d.params, std::move(prefs));
}

ABDecomposition ab_decompose(const ParkingFunction& pf) {
  const ABParams& p = pf.ab_params();
  ABDecomposition d;
  d.params = p;
  std::vector<int> rest;
  for (int i = 1; i <= p.m; ++i) {
    int v = pf.pref(i);
    if (v <= p.a) {
      d.low_positions.push_back(i);
      d.low_values.push_back(v);
    } else {
      rest.push_back(i);
    }
  }
  // pi_{j_1} < pi_{j_2} < ...; ties resolved by original position.
  std::sort(rest.begin(), rest.end(),
            [&](int i, int j) { return std::pair(pf.pref(i), i) < std::pair(pf.pref(j), j); });
  d.rest_positions = rest;
  for (int j : rest) {
    int v = pf.pref(j) - p.a;
    d.inner_prefs.push_back((v + p.b - 1) / p.b);
    d.residues.push_back((pf.pref(j) - 1) % p.b + 1);
  }
  return d;
}

ParkingFunction ab_recompose(const ABDecomposition& d) {
  d.params.validate();
  const int m = d.params.m;
  std::vector<int> prefs(static_cast<std::size_t>(m), 0);
  if (d.low_values.size() != d.low_positions.size() ||
      d.inner_prefs.size() != d.rest_positions.size() ||
      d.residues.size() != d.rest_positions.size()) {
    throw InconsistentPair("decomposition field sizes differ");
  }
  for (std::size_t i = 0; i < d.low_positions.size(); ++i) {
    int pos = d.low_positions[i];
    if (pos < 1 || pos > m || prefs[static_cast<std::size_t>(pos) - 1] != 0) {
      throw InconsistentPair("bad low-set position");
    }
    if (d.low_values[i] < 1 || d.low_values[i] > d.params.a) {
      throw InconsistentPair("low map value outside 1..a");
    }
    prefs[static_cast<std::size_t>(pos) - 1] = d.low_values[i];
  }
  for (std::size_t i = 0; i < d.rest_positions.size(); ++i) {
    int pos = d.rest_positions[i];
    if (pos < 1 || pos > m || prefs[static_cast<std::size_t>(pos) - 1] != 0) {
      throw InconsistentPair("bad rest position");
    }
    int alpha = d.residues[i];
    if (alpha < 1 || alpha > d.params.b) throw InconsistentPair("residue outside 1..b");
    // alpha is the residue of pi itself mod b; the offset inside the block is
    // congruent to alpha - a
    int offset = ((alpha - d.params.a - 1) % d.params.b + d.params.b) % d.params.b + 1;
    prefs[static_cast<std::size_t>(pos) - 1] =
        d.params.a + d.params.b * (d.inner_prefs[i] - 1) + offset;
  }
  return ParkingFunction(d.params, std::move(prefs));
}

KKDecomposition kk_decompose(const ParkingFunction& pf, int k) {
  const ABParams& p = pf.ab_params();
  if (p.a != k || p.b != k) {
    throw BadParameter("kk_decompose: parking function is not in PF(k,k,m)");
  }
  KKDecomposition d;
  d.params = p;
  for (int v : pf.prefs()) {
    d.inner_prefs.push_back((v + k - 1) / k);
    d.residues.push_back((v - 1) % k + 1);
  }
  return d;
}

ParkingFunction kk_recompose(const KKDecomposition& d) {
  d.params.validate();
  if (d.params.a != d.params.b) throw BadParameter("kk_recompose: requires a == b");
  const int k = d.params.a;
  if (d.inner_prefs.size() != d.residues.size() ||
      static_cast<int>(d.inner_prefs.size()) != d.params.m) {
    throw InconsistentPair("decomposition field sizes differ");
  }
  std::vector<int> prefs;
  prefs.reserve(d.inner_prefs.size());
  for (std::size_t i = 0; i < d.inner_prefs.size(); ++i) {
    int alpha = d.residues[i];
    if (alpha < 1 || alpha > k) throw InconsistentPair("residue outside 1..k");
    prefs.push_back(k * (d.inner_prefs[i] - 1) + alpha);
  }
  return ParkingFunction(d.params, std::move(prefs));
}

int leading_block(const ParkingFunction& pf, int k) {
  const ABParams& p = pf.ab_params();
  if (p.a != k || p.b != k) {
    throw BadParameter("leading_block: parking function is not in PF(k,k,m)");
  }
  return (pf.pref(1) + k - 1) / k;
}

namespace {

std::uint64_t checked_tuple_space(int domain, int m, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (int i = 0; i < m; ++i) {
    if (total > cap / static_cast<std::uint64_t>(domain)) {
      throw SizeCapExceeded("enumeration domain exceeds the configured cap");
    }
    total *= static_cast<std::uint64_t>(domain);
  }
  if (total > cap) throw SizeCapExceeded("enumeration domain exceeds the configured cap");
  return total;
}

// Odometer over [1, domain]^m with `filter` deciding which tuples to emit.
// first_fixed >= 1 pins the first coordinate (used for worker partitioning).
template <typename Filter>
void enumerate_tuples(int domain, int m, int first_fixed,
                      const std::function<void(std::span<const int>)>& visit,
                      const Filter& filter) {
  if (m == 0) return;
  std::vector<int> t(static_cast<std::size_t>(m), 1);
  int lo_first = first_fixed > 0 ? first_fixed : 1;
  int hi_first = first_fixed > 0 ? first_fixed : domain;
  t[0] = lo_first;
  for (;;) {
    if (filter(t)) visit(t);
    int pos = m - 1;
    while (pos >= 0) {
      int limit = (pos == 0) ? hi_first : domain;
      if (t[static_cast<std::size_t>(pos)] < limit) {
        ++t[static_cast<std::size_t>(pos)];
        break;
      }
      t[static_cast<std::size_t>(pos)] = (pos == 0) ? lo_first : 1;
      --pos;
    }
    if (pos < 0) break;
  }
}

struct ValidityFilter {
  int low;   // lambda_i <= low + (i-1)*step
  int step;
  int max_value;
  mutable std::vector<int> counts;

  bool operator()(const std::vector<int>& t) const {
    counts.assign(static_cast<std::size_t>(max_value) + 1, 0);
    for (int v : t) ++counts[static_cast<std::size_t>(v)];
    int seen = 0;
    int i = 1;
    const int m = static_cast<int>(t.size());
    for (int value = 1; value <= max_value && i <= m; ++value) {
      seen += counts[static_cast<std::size_t>(value)];
      while (i <= m && low + (i - 1) * step == value) {
        if (seen < i) return false;
        ++i;
      }
    }
    return i > m;
  }
};

void enumerate_family(int max_value, int m, int low, int step, std::uint64_t cap,
                      const std::function<void(std::span<const int>)>& visit) {
  checked_tuple_space(max_value, m, cap);
  ValidityFilter filter{low, step, max_value, {}};
  enumerate_tuples(max_value, m, 0, visit, filter);
}

BigInt count_family(int max_value, int m, int low, int step, std::uint64_t cap, int workers) {
  checked_tuple_space(max_value, m, cap);
  workers = std::clamp(workers, 1, max_value);
  if (workers <= 1 || m < 2) {
    BigInt total = 0;
    ValidityFilter filter{low, step, max_value, {}};
    enumerate_tuples(max_value, m, 0, [&](std::span<const int>) { ++total; }, filter);
    return total;
  }
  std::vector<BigInt> partial(static_cast<std::size_t>(workers), 0);
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      ValidityFilter filter{low, step, max_value, {}};
      BigInt local = 0;
      for (int first = w + 1; first <= max_value; first += workers) {
        enumerate_tuples(max_value, m, first, [&](std::span<const int>) { ++local; }, filter);
      }
      partial[static_cast<std::size_t>(w)] = std::move(local);
    });
  }
  for (auto& th : pool) th.join();
  BigInt total = 0;
  for (const auto& x : partial) total += x;
  return total;
}

}  // namespace

void for_each_pf(const PFParams& p, const std::function<void(std::span<const int>)>& visit,
                 std::uint64_t cap) {
  p.validate();
  enumerate_family(p.n, p.m, p.low_range(), 1, cap, visit);
}

void for_each_ab_pf(const ABParams& p, const std::function<void(std::span<const int>)>& visit,
                    std::uint64_t cap) {
  p.validate();
  enumerate_family(p.max_pref(), p.m, p.a, p.b, cap, visit);
}

void for_each_valid(const Params& p, const std::function<void(std::span<const int>)>& visit,
                    std::uint64_t cap) {
  if (const auto* c = std::get_if<PFParams>(&p)) return for_each_pf(*c, visit, cap);
  return for_each_ab_pf(std::get<ABParams>(p), visit, cap);
}

BigInt count_pf(const PFParams& p, std::uint64_t cap, int workers) {
  p.validate();
  return count_family(p.n, p.m, p.low_range(), 1, cap, workers);
}

BigInt count_pf(const ABParams& p, std::uint64_t cap, int workers) {
  p.validate();
  return count_family(p.max_pref(), p.m, p.a, p.b, cap, workers);
}

BigInt count_valid(const Params& p, std::uint64_t cap, int workers) {
  if (const auto* c = std::get_if<PFParams>(&p)) return count_pf(*c, cap, workers);
  return count_pf(std::get<ABParams>(p), cap, workers);
}

BigInt pf_count_formula(int m, int n) {
  if (m == 0) return 1;
  if (m < 0 || n < m) return 0;
  return BigInt(n - m + 1) * int_pow(n + 1, m - 1);
}

BigInt ab_count_formula(int a, int b, int m) {
  if (m == 0) return 1;
  if (a < 1 || b < 1 || m < 0) return 0;
  return BigInt(a) * int_pow(a + m * b, m - 1);
}

}  // namespace parkfn
