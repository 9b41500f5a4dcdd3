#include <cmath>
#include <sstream>

#include "doctest.h"
#include "parkfn/dist.hpp"
#include "parkfn/forest.hpp"
#include "parkfn/sampler.hpp"

using namespace parkfn;

TEST_CASE("exact distribution tables") {
  DistTable lel34 = exact_distribution(Params(PFParams{3, 4}), lel_statistic());
  CHECK(lel34.total == pf_count_formula(3, 4));
  // lel - 1 ~ Binomial(m-1, 1/(n+1)) exactly:
  // count(lel = 1+j) = (n-m+1) C(m-1,j) n^{m-1-j}
  CHECK(lel34.counts.at({1}) == BigInt(2) * binomial(2, 0) * int_pow(4, 2));
  CHECK(lel34.counts.at({2}) == BigInt(2) * binomial(2, 1) * int_pow(4, 1));
  CHECK(lel34.counts.at({3}) == BigInt(2) * binomial(2, 2) * int_pow(4, 0));

  // frequencies are a probability vector
  double sum = 0;
  for (const auto& [key, count] : lel34.counts) sum += lel34.frequency(key);
  CHECK(std::abs(sum - 1.0) < 1e-12);
}

TEST_CASE("exact finite-size binomial laws") {
  for (int m = 1; m <= 4; ++m) {
    for (int n = m; n <= 6; ++n) {
      DistTable lel = exact_distribution(Params(PFParams{m, n}), lel_statistic());
      DistTable slev = exact_distribution(Params(PFParams{m, n}), slev_statistic());
      for (int j = 0; j <= m - 1; ++j) {
        BigInt expected_lel = BigInt(n - m + 1) * binomial(m - 1, j) * int_pow(n, m - 1 - j);
        BigInt expected_slev = BigInt(n - m + 1) * binomial(m - 1, j) *
                               int_pow(n - m + 1, j) * int_pow(m, m - 1 - j);
        auto it = lel.counts.find({1 + j});
        CHECK((it == lel.counts.end() ? BigInt(0) : it->second) == expected_lel);
        auto it2 = slev.counts.find({1 + j});
        CHECK((it2 == slev.counts.end() ? BigInt(0) : it2->second) == expected_slev);
      }
    }
  }
}

TEST_CASE("anchored lel has the anchor-free distribution") {
  for (int m = 2; m <= 5; ++m) {
    for (int n = m; n <= 7; ++n) {
      DistTable first = exact_distribution(Params(PFParams{m, n}), lel_statistic(1));
      DistTable second = exact_distribution(Params(PFParams{m, n}), lel_statistic(2));
      CHECK(first.counts == second.counts);
    }
  }
}

TEST_CASE("constant statistic gives a point mass") {
  DistTable t = exact_distribution(Params(PFParams{1, 5}), lel_statistic());
  CHECK(t.counts.size() == 1);
  CHECK(t.counts.at({1}) == 5);
}

TEST_CASE("reference pmfs") {
  ReferencePmf poisson = ReferencePmf::poisson(1.0);
  CHECK(poisson.pmf(0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
  ReferencePmf half = ReferencePmf::poisson(0.5);
  CHECK(half.pmf(1) == doctest::Approx(0.5 * std::exp(-0.5)).epsilon(1e-12));
  ReferencePmf bin = ReferencePmf::binomial(4, 0.25);
  double total = 0;
  for (int j = 0; j <= 4; ++j) total += bin.pmf(j);
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(bin.support_end(1e-10) == 4);
  CHECK_THROWS_AS(ReferencePmf::poisson(0.0), BadParameter);
  CHECK_THROWS_AS(ReferencePmf::binomial(3, 1.5), BadParameter);
}

TEST_CASE("total variation distance") {
  // identical distributions -> 0
  DistTable exact;
  ReferencePmf bin = ReferencePmf::binomial(3, 0.5);
  for (int j = 0; j <= 3; ++j) {
    exact.counts[{j}] = binomial(3, j);
    exact.total += binomial(3, j);
  }
  CHECK(tv_distance(exact, bin) == doctest::Approx(0.0).epsilon(1e-9));

  // Bernoulli(0) against Bernoulli(1) -> 1
  DistTable zero;
  zero.counts[{0}] = 10;
  zero.total = 10;
  CHECK(tv_distance(zero, ReferencePmf::binomial(1, 1.0)) == doctest::Approx(1.0));

  DistTable empty;
  CHECK_THROWS_AS(tv_distance(empty, bin), EmptySample);
}

TEST_CASE("Kolmogorov-Smirnov statistic") {
  CHECK_THROWS_AS(ks_statistic({}, normal_cdf), EmptySample);
  // uniform grid against the uniform cdf: KS = 1/(2n) at the midpoints
  std::vector<double> grid;
  const int n = 100;
  for (int i = 0; i < n; ++i) grid.push_back((i + 0.5) / n);
  double ks = ks_statistic(grid, [](double x) { return std::clamp(x, 0.0, 1.0); });
  CHECK(ks == doctest::Approx(0.005).epsilon(1e-9));
  CHECK(normal_cdf(0.0) == doctest::Approx(0.5));
  CHECK(normal_cdf(1.6448536269514722) == doctest::Approx(0.95).epsilon(1e-9));
}

TEST_CASE("empirical distribution is deterministic and close to exact") {
  Params params(PFParams{3, 4});
  SplitMix64 r1(5150), r2(5150);
  DistTable a = empirical_distribution(params, lel_statistic(), 20000, r1);
  DistTable b = empirical_distribution(params, lel_statistic(), 20000, r2);
  CHECK(a.counts == b.counts);
  CHECK(a.total == 20000);
  CHECK(a.rng_algorithm == "splitmix64");
  DistTable exact = exact_distribution(params, lel_statistic());
  for (const auto& [key, count] : exact.counts) {
    CHECK(std::abs(a.frequency(key) - exact.frequency(key)) < 0.02);
  }
  CHECK_THROWS_AS(empirical_distribution(params, lel_statistic(), 0, r1), EmptySample);
}

TEST_CASE("sampled forests carry the transported statistics") {
  Params params(PFParams{30, 60});
  SplitMix64 rng(99);
  for (int i = 0; i < 50; ++i) {
    ParkingFunction pf = sample_uniform(params, rng);
    RootedForest f = phi_inv(pf);
    CHECK(deg_root_total(f) == stat_slev(pf));
    CHECK(deg_parent_of_1(f) == stat_lel(pf));
  }
}

TEST_CASE("csv serialization") {
  DistTable t = exact_distribution(Params(PFParams{2, 2}), ones_statistic());
  t.statistic = "ones";
  std::ostringstream os;
  write_csv(os, t);
  std::string text = os.str();
  CHECK(text.find("# family: pf(m=2,n=2)") != std::string::npos);
  CHECK(text.find("# samples: exhaustive") != std::string::npos);
  CHECK(text.find("statistic_value,count,frequency") != std::string::npos);
  CHECK(text.find("1,2,0.666666666667") != std::string::npos);
  CHECK(text.find("2,1,0.333333333333") != std::string::npos);
}

TEST_CASE("table shifting") {
  DistTable t;
  t.counts[{3}] = 4;
  t.counts[{5}] = 1;
  t.total = 5;
  DistTable s = shifted(t, -1);
  CHECK(s.counts.at({2}) == 4);
  CHECK(s.counts.at({4}) == 1);
}
