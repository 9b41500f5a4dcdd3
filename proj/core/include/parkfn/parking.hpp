#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "parkfn/bigint.hpp"
#include "parkfn/errors.hpp"

namespace parkfn {

// Default guard on exhaustive enumeration: at most this many candidate tuples.
inline constexpr std::uint64_t kDefaultEnumerationCap = 100'000'000;

// Classical parameters: m cars on n spots, 1 <= m <= n.
struct PFParams {
  int m = 0;
  int n = 0;

  void validate() const;
  // Spots 1..n-m+1; a preference there always parks.
  int low_range() const { return n - m + 1; }
  int max_pref() const { return n; }
  int circle_size() const { return n + 1; }

  friend bool operator==(const PFParams&, const PFParams&) = default;
};

// (a,b) parameters: length m, sorted prefs bounded by a+(i-1)b.
struct ABParams {
  int a = 0;
  int b = 0;
  int m = 0;

  void validate() const;
  int low_range() const { return a; }
  int max_pref() const { return a + (m - 1) * b; }
  int circle_size() const { return a + m * b; }

  friend bool operator==(const ABParams&, const ABParams&) = default;
};

using Params = std::variant<PFParams, ABParams>;

int params_length(const Params& p);
int params_max_pref(const Params& p);
int params_circle_size(const Params& p);
int params_low_range(const Params& p);
void params_validate(const Params& p);
std::string params_describe(const Params& p);

// Total predicates: out-of-range entries are legal input and yield false.
bool is_parking_function(std::span<const int> prefs, const PFParams& p);
bool is_ab_parking_function(std::span<const int> prefs, const ABParams& p);
bool is_valid_parking(std::span<const int> prefs, const Params& p);

// A validated preference list. Construction rejects anything that fails the
// predicate for its parameters.
class ParkingFunction {
 public:
  ParkingFunction(PFParams params, std::vector<int> prefs);
  ParkingFunction(ABParams params, std::vector<int> prefs);
  ParkingFunction(Params params, std::vector<int> prefs);

  const std::vector<int>& prefs() const { return prefs_; }
  int pref(int car) const { return prefs_[static_cast<std::size_t>(car) - 1]; }
  int length() const { return static_cast<int>(prefs_.size()); }
  const Params& params() const { return params_; }
  bool classical() const { return std::holds_alternative<PFParams>(params_); }
  const PFParams& pf_params() const;  // BadParameter when not classical
  const ABParams& ab_params() const;  // BadParameter when classical

  friend bool operator==(const ParkingFunction&, const ParkingFunction&) = default;

 private:
  Params params_;
  std::vector<int> prefs_;
};

// ---------------------------------------------------------------- statistics

// Number of cars preferring the same spot as car 1 (>= 1 by definition).
int stat_lel(const ParkingFunction& pf);
// Same, anchored at an arbitrary car.
int stat_lel(const ParkingFunction& pf, int anchor_car);
// Number of cars preferring spot `value`.
int stat_count(const ParkingFunction& pf, int value);
// Number of cars preferring spot 1.
int stat_ones(const ParkingFunction& pf);
// Number of cars preferring a spot in 1..n-m+1 (classical only).
int stat_slev(const ParkingFunction& pf);

// ------------------------------------------- order permutation, specification

// tau(i) = #{j : pi_j < pi_i, or pi_j = pi_i and j <= i}: the position of
// entry i in the tie-stable non-decreasing rearrangement.
struct OrderPermutation {
  std::vector<int> perm;  // 1-based values, perm[i-1] = tau(i)

  std::vector<int> inverse() const;
  bool is_permutation() const;

  friend bool operator==(const OrderPermutation&, const OrderPermutation&) = default;
};

OrderPermutation order_permutation(std::span<const int> prefs);
OrderPermutation order_permutation(const ParkingFunction& pf);

// Multiplicity vector (#1, ..., #max_pref).
struct Specification {
  std::vector<int> counts;

  int total() const;

  friend bool operator==(const Specification&, const Specification&) = default;
};

Specification specification(const ParkingFunction& pf);

// Inverse of (specification, order_permutation): place the tau(i)-th smallest
// member of the multiset at position i.
ParkingFunction rebuild_from(const Specification& spec, const OrderPermutation& tau,
                             const Params& params);
std::vector<int> prefs_from_spec_tau(std::span<const int> counts, std::span<const int> tau);

// ------------------------------------------------------------ decompositions

// Split a classical pf into the cars parked on the low range 1..n-m+1 and an
// inner pf in PF(m-s, m-1). Inner entries stay in original position order, so
// the triple (positions, low values, inner) is exactly invertible.
struct PFDecomposition {
  PFParams params;                   // parameters of the original function
  std::vector<int> level_positions;  // A, ascending 1-based car indices
  std::vector<int> low_values;       // pi restricted to A, in position order
  std::vector<int> inner_prefs;      // pi_j - (n-m+1) over the complement, in position order

  int level_size() const { return static_cast<int>(level_positions.size()); }
  PFParams inner_params() const { return {params.m - level_size(), params.m - 1}; }

  friend bool operator==(const PFDecomposition&, const PFDecomposition&) = default;
};

PFDecomposition decompose(const ParkingFunction& pf);
ParkingFunction recompose(const PFDecomposition& d);

// (a,b) analog. The non-low positions are listed sorted by (value, position)
// and kept explicit, so the round trip is exact even with repeated values.
struct ABDecomposition {
  ABParams params;
  std::vector<int> low_positions;   // S, ascending
  std::vector<int> low_values;      // pi restricted to S, in position order, values in [a]
  std::vector<int> rest_positions;  // j_1..j_{m-s}, sorted by (value, position)
  std::vector<int> inner_prefs;     // ceil((pi_{j_i} - a)/b), aligned with rest_positions
  std::vector<int> residues;        // alpha_i in [b], alpha_i = ((pi_{j_i}-1) mod b) + 1

  int low_size() const { return static_cast<int>(low_positions.size()); }
  PFParams inner_params() const { return {params.m - low_size(), params.m - 1}; }

  friend bool operator==(const ABDecomposition&, const ABDecomposition&) = default;
};

ABDecomposition ab_decompose(const ParkingFunction& pf);
ParkingFunction ab_recompose(const ABDecomposition& d);

// (k,k) block decomposition: index-wise, pi_i = k(inner_i - 1) + alpha_i.
struct KKDecomposition {
  ABParams params;               // a = b = k
  std::vector<int> inner_prefs;  // ceil(pi_i / k), a classical pf in PF(m,m)
  std::vector<int> residues;     // alpha_i in [k]

  friend bool operator==(const KKDecomposition&, const KKDecomposition&) = default;
};

KKDecomposition kk_decompose(const ParkingFunction& pf, int k);
ParkingFunction kk_recompose(const KKDecomposition& d);

// Index of the block containing the leading element: ceil(pi_1 / k).
int leading_block(const ParkingFunction& pf, int k);

// ---------------------------------------------------------------- enumeration

// Visit every valid preference vector, in lexicographic order of prefs.
// Throws SizeCapExceeded when the candidate tuple space exceeds `cap`.
void for_each_pf(const PFParams& p, const std::function<void(std::span<const int>)>& visit,
                 std::uint64_t cap = kDefaultEnumerationCap);
void for_each_ab_pf(const ABParams& p, const std::function<void(std::span<const int>)>& visit,
                    std::uint64_t cap = kDefaultEnumerationCap);
void for_each_valid(const Params& p, const std::function<void(std::span<const int>)>& visit,
                    std::uint64_t cap = kDefaultEnumerationCap);

// Counting by exhaustive enumeration (the brute-force side of the identities).
// Partitioning over the first preference is a commutative-monoid merge, so the
// worker count never changes the result.
BigInt count_pf(const PFParams& p, std::uint64_t cap = kDefaultEnumerationCap, int workers = 1);
BigInt count_pf(const ABParams& p, std::uint64_t cap = kDefaultEnumerationCap, int workers = 1);
BigInt count_valid(const Params& p, std::uint64_t cap = kDefaultEnumerationCap, int workers = 1);

// Closed-form counts; |PF(0, n)| = 1 by convention (the empty function).
BigInt pf_count_formula(int m, int n);
BigInt ab_count_formula(int a, int b, int m);

}  // namespace parkfn
