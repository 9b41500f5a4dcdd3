#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "parkfn/identities.hpp"
#include "parkfn/rng.hpp"

namespace parkfn {

// Frequency table over statistic tuples, with enough metadata to reproduce it.
struct DistTable {
  std::map<std::vector<int>, BigInt> counts;
  BigInt total = 0;
  std::string family;
  std::string statistic;
  std::uint64_t sample_size = 0;  // 0 means exhaustive enumeration
  std::uint64_t seed = 0;
  std::string rng_algorithm;

  void tally(std::vector<int> key);
  double frequency(const std::vector<int>& key) const;
  friend bool operator==(const DistTable&, const DistTable&) = default;
};

// Named integer statistic of a parking function.
struct ScalarStatistic {
  std::string name;
  std::function<int(const ParkingFunction&)> eval;
};

ScalarStatistic lel_statistic(int anchor = 1);
ScalarStatistic slev_statistic();
ScalarStatistic ones_statistic();
ScalarStatistic make_statistic(std::string_view name, int anchor = 1);

// Exact table by exhaustive enumeration.
DistTable exact_distribution(const Params& params, const ScalarStatistic& stat,
                             std::uint64_t cap = kDefaultEnumerationCap);
// Sampled table from the exact-uniform sampler; deterministic given the rng.
DistTable empirical_distribution(const Params& params, const ScalarStatistic& stat,
                                 std::uint64_t samples, SplitMix64& rng);

// Shift every scalar key by delta (e.g. lel -> lel - 1).
DistTable shifted(const DistTable& table, int delta);

// Poisson or binomial reference distribution.
class ReferencePmf {
 public:
  static ReferencePmf poisson(double lambda);      // BadParameter unless lambda > 0
  static ReferencePmf binomial(int trials, double p);

  double pmf(int j) const;
  double cdf(int j) const;
  // Smallest J with P(X > J) < tail_bound.
  int support_end(double tail_bound) const;

 private:
  enum class Kind { Poisson, Binomial };
  Kind kind_;
  double lambda_ = 0;
  int trials_ = 0;
  double p_ = 0;
};

double normal_cdf(double z);

// Total variation distance between a table over non-negative scalar keys and a
// reference pmf. The support is truncated where the reference tail mass drops
// below 1e-10 and the bound is added to the result.
double tv_distance(const DistTable& table, const ReferencePmf& reference);

// Kolmogorov-Smirnov statistic of a sample against a reference cdf.
double ks_statistic(std::span<const double> sample, const std::function<double(double)>& cdf);

// CSV per the interface: '#'-prefixed metadata, then statistic_value,count,frequency.
void write_csv(std::ostream& os, const DistTable& table);

}  // namespace parkfn
