#pragma once

#include <vector>

#include "parkfn/forest.hpp"

namespace parkfn {

// theta on rooted trees T(n): cut the edge (p, 1), attach 1 to the root, then
// interchange the labels 0 and p. Swaps deg(0) and deg(p); every other label
// keeps its child count. Identity when 1 is already a root child.
RootedTree theta(const RootedTree& t);

// rho on rooted trees: with 0 - q - ... - p - anchor the root-to-anchor path,
// move the other children of 0 to p and the other children of p to 0. Swaps
// deg(0) and deg(p) while preserving the child set of every other vertex.
// The anchor defaults to vertex 1.
RootedTree rho(const RootedTree& t, int anchor = 1);

// Conjugates through the BFS bijection: phi o map o phi^{-1} on PF(n,n).
ParkingFunction theta_hat(const ParkingFunction& pf);
ParkingFunction rho_hat(const ParkingFunction& pf, int anchor = 1);

// K(pi) = { j : pi_j = 1 or pi_j = pi_1 }, ascending.
std::vector<int> k_set(const ParkingFunction& pf);

// Canonical set partition: blocks sorted internally, then by least element.
struct SetPartition {
  std::vector<std::vector<int>> blocks;

  friend bool operator==(const SetPartition&, const SetPartition&) = default;
  friend auto operator<=>(const SetPartition&, const SetPartition&) = default;
};

SetPartition make_partition(std::vector<std::vector<int>> blocks);

// Non-empty preference fibers B_pi(i) = { j : pi_j = i }.
SetPartition preference_partition(const ParkingFunction& pf);
// Same with B_pi(1) and B_pi(pi_1) merged.
SetPartition reduced_preference_partition(const ParkingFunction& pf);

}  // namespace parkfn
