#pragma once

#include <span>
#include <vector>

#include "parkfn/parking.hpp"

namespace parkfn {

// One element of [L]^m under componentwise addition mod L, representatives
// taken in 1..L. L = n+1 classically, a+mb in the (a,b) case.
struct CircleTuple {
  std::vector<int> entries;

  friend bool operator==(const CircleTuple&, const CircleTuple&) = default;
};

// entries + shift*(1,...,1) mod circle, representatives in [1, circle].
std::vector<int> rotate_tuple(std::span<const int> entries, int shift, int circle);

// Every shift k in [0, L) whose rotation of `entries` is a valid parking
// function, ascending. There are always exactly n-m+1 (resp. a) of them.
std::vector<int> valid_rotations(std::span<const int> entries, const Params& params);

}  // namespace parkfn
