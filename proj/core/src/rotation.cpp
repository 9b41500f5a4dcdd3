#include "parkfn/rotation.hpp"

#include <algorithm>
#include <deque>

namespace parkfn {

std::vector<int> rotate_tuple(std::span<const int> entries, int shift, int circle) {
  std::vector<int> out;
  out.reserve(entries.size());
  for (int v : entries) out.push_back((v - 1 + shift) % circle + 1);
  return out;
}

// The validity of a rotation reduces to a balance walk. Writing the sorted
// bounds as checkpoints a, a+b, ..., a+(m-1)b on the circle of size L = a+mb,
// a shift k is valid iff, reading the circle from position 1-k, the number of
// cars seen by the i-th checkpoint is at least i. All m prefix windows share
// the same start, so with CP the (doubled) prefix count of cars the condition
// for y = (-k mod L) becomes
//     min_{d=0..m-1} ( CP[y+a+d*b] - d )  >=  CP[y] + 1 .
// Grouping the inner indices by residue mod b turns the minimum into a width-m
// sliding-window minimum per residue class, O(L) overall.
std::vector<int> valid_rotations(std::span<const int> entries, const Params& params) {
  params_validate(params);
  const int m = params_length(params);
  const int L = params_circle_size(params);
  const int a = params_low_range(params);
  const int b = std::holds_alternative<ABParams>(params) ? std::get<ABParams>(params).b : 1;
  if (static_cast<int>(entries.size()) != m) {
    throw BadParameter("circle tuple has the wrong length");
  }

  std::vector<int> counts(static_cast<std::size_t>(L) + 1, 0);
  for (int v : entries) {
    if (v < 1 || v > L) throw BadParameter("circle tuple entry outside [1, L]");
    ++counts[static_cast<std::size_t>(v)];
  }
  std::vector<int> cp(static_cast<std::size_t>(2 * L) + 1, 0);
  for (int x = 1; x <= 2 * L; ++x) {
    cp[static_cast<std::size_t>(x)] =
        cp[static_cast<std::size_t>(x) - 1] + counts[static_cast<std::size_t>((x - 1) % L) + 1];
  }

  // Per residue class r: Z_r[t] = CP[r + t*b] - t, window minima of width m.
  // window_min[r][t0] = min over t in [t0, t0+m-1].
  std::vector<std::vector<int>> window_min(static_cast<std::size_t>(b));
  for (int r = 0; r < b; ++r) {
    std::vector<int> z;
    for (int t = 0; r + t * b <= 2 * L; ++t) {
      z.push_back(cp[static_cast<std::size_t>(r + t * b)] - t);
    }
    std::vector<int>& mins = window_min[static_cast<std::size_t>(r)];
    if (static_cast<int>(z.size()) >= m) {
      mins.assign(z.size() - static_cast<std::size_t>(m) + 1, 0);
      std::deque<std::size_t> dq;
      for (std::size_t i = 0; i < z.size(); ++i) {
        while (!dq.empty() && z[dq.back()] >= z[i]) dq.pop_back();
        dq.push_back(i);
        if (dq.front() + static_cast<std::size_t>(m) <= i) dq.pop_front();
        if (i + 1 >= static_cast<std::size_t>(m)) {
          mins[i + 1 - static_cast<std::size_t>(m)] = z[dq.front()];
        }
      }
    }
  }

  std::vector<int> shifts;
  for (int y = 0; y < L; ++y) {
    int base = y + a;
    int r = base % b;
    int t0 = base / b;
    if (window_min[static_cast<std::size_t>(r)][static_cast<std::size_t>(t0)] + t0 >=
        cp[static_cast<std::size_t>(y)] + 1) {
      shifts.push_back((L - y) % L);
    }
  }
  std::sort(shifts.begin(), shifts.end());
  return shifts;
}

}  // namespace parkfn
