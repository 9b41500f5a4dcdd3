#include <map>
#include <set>

#include "doctest.h"
#include "parkfn/rotation.hpp"
#include "parkfn/sampler.hpp"

using namespace parkfn;

namespace {

// Independent oracle: try every shift and run the validity predicate.
std::vector<int> naive_rotations(std::span<const int> entries, const Params& params) {
  const int L = params_circle_size(params);
  std::vector<int> out;
  for (int k = 0; k < L; ++k) {
    if (is_valid_parking(rotate_tuple(entries, k, L), params)) out.push_back(k);
  }
  return out;
}

void exhaust_tuples(int L, int m, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> t(static_cast<std::size_t>(m), 1);
  for (;;) {
    f(t);
    int pos = m - 1;
    while (pos >= 0 && t[static_cast<std::size_t>(pos)] == L) {
      t[static_cast<std::size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++t[static_cast<std::size_t>(pos)];
  }
}

}  // namespace

TEST_CASE("valid rotations, worked examples") {
  CHECK(valid_rotations(std::vector<int>{1, 1}, Params(PFParams{2, 2})) == std::vector<int>{0});
  CHECK(valid_rotations(std::vector<int>{2}, Params(PFParams{1, 2})) == std::vector<int>{0, 2});
}

TEST_CASE("rotation census matches the oracle on classical grids") {
  for (int m = 1; m <= 3; ++m) {
    for (int n = m; n <= 5; ++n) {
      Params params(PFParams{m, n});
      exhaust_tuples(n + 1, m, [&](const std::vector<int>& t) {
        auto fast = valid_rotations(t, params);
        CHECK(fast == naive_rotations(t, params));
        CHECK(static_cast<int>(fast.size()) == n - m + 1);
      });
    }
  }
}

TEST_CASE("rotation census matches the oracle on (a,b) grids") {
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) {
      for (int m = 1; m <= 2; ++m) {
        Params params(ABParams{a, b, m});
        exhaust_tuples(a + m * b, m, [&](const std::vector<int>& t) {
          auto fast = valid_rotations(t, params);
          CHECK(fast == naive_rotations(t, params));
          CHECK(static_cast<int>(fast.size()) == a);
        });
      }
    }
  }
  // a few larger random tuples
  SplitMix64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    int a = 1 + static_cast<int>(rng.next_below(4));
    int b = 1 + static_cast<int>(rng.next_below(4));
    int m = 1 + static_cast<int>(rng.next_below(30));
    Params params(ABParams{a, b, m});
    std::vector<int> t(static_cast<std::size_t>(m));
    for (int& v : t) v = rng.next_in_range(a + m * b);
    auto fast = valid_rotations(t, params);
    CHECK(fast == naive_rotations(t, params));
    CHECK(static_cast<int>(fast.size()) == a);
  }
}

TEST_CASE("single-spot sampler is constant") {
  SplitMix64 rng(1);
  for (int i = 0; i < 20; ++i) {
    CHECK(sample_uniform(Params(PFParams{1, 1}), rng).prefs() == std::vector<int>{1});
  }
}

TEST_CASE("identical seed, identical stream; substreams differ") {
  Params params(PFParams{4, 6});
  SplitMix64 r1(42), r2(42);
  for (int i = 0; i < 200; ++i) {
    CHECK(sample_uniform(params, r1) == sample_uniform(params, r2));
  }
  SplitMix64 base(42);
  SplitMix64 s0 = base.substream(0);
  SplitMix64 s1 = base.substream(1);
  bool differ = false;
  for (int i = 0; i < 50 && !differ; ++i) {
    differ = !(sample_uniform(params, s0) == sample_uniform(params, s1));
  }
  CHECK(differ);
}

TEST_CASE("uniformity over PF(2,3) at 5 sigma") {
  Params params(PFParams{2, 3});
  std::map<std::vector<int>, int> freq;
  for_each_pf(PFParams{2, 3}, [&](std::span<const int> t) {
    freq.emplace(std::vector<int>(t.begin(), t.end()), 0);
  });
  REQUIRE(freq.size() == 8);
  const int samples = 1'000'000;
  SplitMix64 rng(987654321);  // fixed seed, tolerance is 5 binomial sigmas
  for (int i = 0; i < samples; ++i) {
    auto it = freq.find(sample_uniform(params, rng).prefs());
    REQUIRE(it != freq.end());
    ++it->second;
  }
  for (const auto& [pf, count] : freq) {
    double f = static_cast<double>(count) / samples;
    CHECK(std::abs(f - 0.125) < 0.002);
  }
}

TEST_CASE("sample support equals the enumerated set on PF(1,2,2)") {
  Params params(ABParams{1, 2, 2});
  std::set<std::vector<int>> enumerated;
  for_each_ab_pf(ABParams{1, 2, 2}, [&](std::span<const int> t) {
    enumerated.insert(std::vector<int>(t.begin(), t.end()));
  });
  CHECK(enumerated.size() == 5);
  std::set<std::vector<int>> seen;
  SplitMix64 rng(2024);
  for (int i = 0; i < 100'000; ++i) {
    auto pf = sample_uniform(params, rng);
    CHECK(enumerated.count(pf.prefs()) == 1);
    seen.insert(pf.prefs());
  }
  CHECK(seen == enumerated);
}

TEST_CASE("chi-square goodness of fit on PF(3,4)") {
  Params params(PFParams{3, 4});
  std::map<std::vector<int>, int> freq;
  for_each_pf(PFParams{3, 4}, [&](std::span<const int> t) {
    freq.emplace(std::vector<int>(t.begin(), t.end()), 0);
  });
  REQUIRE(freq.size() == 50);
  const int samples = 1'000'000;
  SplitMix64 rng(424242);  // fixed seed
  for (int i = 0; i < samples; ++i) ++freq.at(sample_uniform(params, rng).prefs());
  double expected = static_cast<double>(samples) / 50.0;
  double chi2 = 0;
  for (const auto& [pf, count] : freq) {
    double d = count - expected;
    chi2 += d * d / expected;
  }
  // chi-square critical value, 49 degrees of freedom, significance 1e-6
  CHECK(chi2 < 111.136);
}

TEST_CASE("bad circle tuples are rejected") {
  CHECK_THROWS_AS(valid_rotations(std::vector<int>{0, 1}, Params(PFParams{2, 2})), BadParameter);
  CHECK_THROWS_AS(valid_rotations(std::vector<int>{1}, Params(PFParams{2, 2})), BadParameter);
  CHECK_THROWS_AS(valid_rotations(std::vector<int>{4, 1}, Params(PFParams{2, 2})), BadParameter);
}
