#include "parkfn/dist.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "parkfn/sampler.hpp"

namespace parkfn {

void DistTable::tally(std::vector<int> key) {
  ++counts[std::move(key)];
  ++total;
}

double DistTable::frequency(const std::vector<int>& key) const {
  if (total == 0) throw EmptySample("frequency of an empty table");
  auto it = counts.find(key);
  if (it == counts.end()) return 0.0;
  return static_cast<double>(it->second) / static_cast<double>(total);
}

ScalarStatistic lel_statistic(int anchor) {
  std::string name = anchor == 1 ? "lel" : "lel@" + std::to_string(anchor);
  return {name, [anchor](const ParkingFunction& pf) { return stat_lel(pf, anchor); }};
}

ScalarStatistic slev_statistic() {
  return {"slev", [](const ParkingFunction& pf) { return stat_slev(pf); }};
}

ScalarStatistic ones_statistic() {
  return {"ones", [](const ParkingFunction& pf) { return stat_ones(pf); }};
}

ScalarStatistic make_statistic(std::string_view name, int anchor) {
  if (name == "lel") return lel_statistic(anchor);
  if (name == "slev") return slev_statistic();
  if (name == "ones") return ones_statistic();
  throw BadParameter("unknown statistic: " + std::string(name));
}

DistTable exact_distribution(const Params& params, const ScalarStatistic& stat,
                             std::uint64_t cap) {
  DistTable table;
  table.family = params_describe(params);
  table.statistic = stat.name;
  for_each_valid(params, [&](std::span<const int> prefs) {
    ParkingFunction pf(params, std::vector<int>(prefs.begin(), prefs.end()));
    table.tally({stat.eval(pf)});
  }, cap);
  return table;
}

DistTable empirical_distribution(const Params& params, const ScalarStatistic& stat,
                                 std::uint64_t samples, SplitMix64& rng) {
  if (samples == 0) throw EmptySample("empirical distribution needs samples > 0");
  DistTable table;
  table.family = params_describe(params);
  table.statistic = stat.name;
  table.sample_size = samples;
  table.seed = rng.seed();
  table.rng_algorithm = std::string(SplitMix64::algorithm());
  for (std::uint64_t i = 0; i < samples; ++i) {
    table.tally({stat.eval(sample_uniform(params, rng))});
  }
  return table;
}

DistTable shifted(const DistTable& table, int delta) {
  DistTable out = table;
  out.counts.clear();
  for (const auto& [key, count] : table.counts) {
    std::vector<int> k = key;
    for (int& v : k) v += delta;
    out.counts.emplace(std::move(k), count);
  }
  return out;
}

ReferencePmf ReferencePmf::poisson(double lambda) {
  if (!(lambda > 0)) throw BadParameter("poisson rate must be positive");
  ReferencePmf r;
  r.kind_ = Kind::Poisson;
  r.lambda_ = lambda;
  return r;
}

ReferencePmf ReferencePmf::binomial(int trials, double p) {
  if (trials < 0 || !(p >= 0.0) || !(p <= 1.0)) {
    throw BadParameter("binomial needs trials >= 0 and p in [0,1]");
  }
  ReferencePmf r;
  r.kind_ = Kind::Binomial;
  r.trials_ = trials;
  r.p_ = p;
  return r;
}

double ReferencePmf::pmf(int j) const {
  if (j < 0) return 0.0;
  if (kind_ == Kind::Poisson) {
    return std::exp(-lambda_ + j * std::log(lambda_) - std::lgamma(j + 1.0));
  }
  if (j > trials_) return 0.0;
  if (p_ == 0.0) return j == 0 ? 1.0 : 0.0;
  if (p_ == 1.0) return j == trials_ ? 1.0 : 0.0;
  double lg = std::lgamma(trials_ + 1.0) - std::lgamma(j + 1.0) - std::lgamma(trials_ - j + 1.0);
  return std::exp(lg + j * std::log(p_) + (trials_ - j) * std::log1p(-p_));
}

double ReferencePmf::cdf(int j) const {
  double c = 0;
  for (int i = 0; i <= j; ++i) c += pmf(i);
  return std::min(c, 1.0);
}

int ReferencePmf::support_end(double tail_bound) const {
  if (kind_ == Kind::Binomial) return trials_;
  double mass = 0;
  int j = 0;
  for (;;) {
    mass += pmf(j);
    if (1.0 - mass < tail_bound) return j;
    ++j;
  }
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

double tv_distance(const DistTable& table, const ReferencePmf& reference) {
  if (table.total == 0) throw EmptySample("tv_distance of an empty table");
  constexpr double kTailBound = 1e-10;
  int end = reference.support_end(kTailBound);
  for (const auto& [key, count] : table.counts) {
    if (key.size() != 1) throw BadParameter("tv_distance needs scalar statistic keys");
    if (key[0] < 0) throw BadParameter("tv_distance needs non-negative keys");
    end = std::max(end, key[0]);
  }
  const double total = static_cast<double>(table.total);
  double sum = 0;
  double reference_mass = 0;
  for (int j = 0; j <= end; ++j) {
    auto it = table.counts.find({j});
    double empirical = it == table.counts.end() ? 0.0 : static_cast<double>(it->second) / total;
    double ref = reference.pmf(j);
    reference_mass += ref;
    sum += std::abs(empirical - ref);
  }
  double tail = std::max(0.0, 1.0 - reference_mass);
  return 0.5 * (sum + tail);
}

double ks_statistic(std::span<const double> sample, const std::function<double(double)>& cdf) {
  if (sample.empty()) throw EmptySample("ks_statistic of an empty sample");
  std::vector<double> sorted(sample.begin(), sample.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double ks = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    double ref = cdf(sorted[i]);
    double above = (static_cast<double>(i) + 1.0) / n - ref;
    double below = ref - static_cast<double>(i) / n;
    ks = std::max({ks, above, below});
  }
  return ks;
}

void write_csv(std::ostream& os, const DistTable& table) {
  os << "# family: " << table.family << "\n";
  os << "# statistic: " << table.statistic << "\n";
  if (table.sample_size > 0) {
    os << "# samples: " << table.sample_size << "\n";
    os << "# rng: " << table.rng_algorithm << "\n";
    os << "# seed: " << table.seed << "\n";
  } else {
    os << "# samples: exhaustive\n";
  }
  os << "statistic_value,count,frequency\n";
  for (const auto& [key, count] : table.counts) {
    for (std::size_t i = 0; i < key.size(); ++i) {
      if (i > 0) os << ';';
      os << key[i];
    }
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g",
                  static_cast<double>(count) / static_cast<double>(table.total));
    os << ',' << count.str() << ',' << buffer << "\n";
  }
}

}  // namespace parkfn
