#include "parkfn/sampler.hpp"

namespace parkfn {

CircleTuple sample_circle_tuple(const Params& params, SplitMix64& rng) {
  params_validate(params);
  const int m = params_length(params);
  const int L = params_circle_size(params);
  CircleTuple t;
  t.entries.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) t.entries.push_back(rng.next_in_range(L));
  return t;
}

ParkingFunction sample_uniform(const Params& params, SplitMix64& rng) {
  CircleTuple t = sample_circle_tuple(params, rng);
  std::vector<int> shifts = valid_rotations(t.entries, params);
  int k = shifts[rng.next_below(shifts.size())];
  return ParkingFunction(params, rotate_tuple(t.entries, k, params_circle_size(params)));
}

}  // namespace parkfn
