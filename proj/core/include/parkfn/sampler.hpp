#pragma once

#include "parkfn/parking.hpp"
#include "parkfn/rng.hpp"
#include "parkfn/rotation.hpp"

namespace parkfn {

// Exactly uniform draw: a uniform circle tuple followed by a uniform choice
// among its valid rotations. Every target function receives the same mass
// L / L^m * 1/(n-m+1), resp. 1/a.
ParkingFunction sample_uniform(const Params& params, SplitMix64& rng);

// Uniform circle tuple in [1, L]^m.
CircleTuple sample_circle_tuple(const Params& params, SplitMix64& rng);

}  // namespace parkfn
