#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "parkfn/forest.hpp"
#include "parkfn/parking.hpp"

namespace parkfn {

// Rooted tree on [n]_0 whose root edges carry colors 1..a and all other edges
// colors 1..b.
class ColoredTree {
 public:
  // parent[v-1] in [0..n] (0 = root), color[v-1] in [a] or [b] accordingly.
  ColoredTree(int a, int b, std::vector<int> parent, std::vector<int> color);

  int size() const { return n_; }  // non-root vertex count
  int color_a() const { return a_; }
  int color_b() const { return b_; }
  int parent(int v) const { return parent_[static_cast<std::size_t>(v) - 1]; }
  int color(int v) const { return color_[static_cast<std::size_t>(v) - 1]; }
  const std::vector<int>& parents() const { return parent_; }
  const std::vector<int>& colors() const { return color_; }

  // Per-color child counts: length a for the root, length b otherwise.
  std::vector<int> degree_vector(int vertex_or_root) const;

  friend bool operator==(const ColoredTree&, const ColoredTree&) = default;

 private:
  int n_ = 0;
  int a_ = 0;
  int b_ = 0;
  std::vector<int> parent_;
  std::vector<int> color_;
};

// BFS with same-parent children ordered by (edge color, label). The root 0 is
// encoded as reference -1 in `vertices`.
BfsOrder colored_bfs(const ColoredTree& t);

// The colored BFS bijection onto PF(a,b,n): car i prefers j <= a iff i is a
// child of the root with color j, and a+(k-1)b < j <= a+kb iff i is a child of
// the (k+1)-th BFS vertex with color ((j-a-1) mod b) + 1.
ParkingFunction colored_phi(const ColoredTree& t);
ColoredTree colored_phi_inv(const ParkingFunction& pf);

// Involution for a = 1: swaps the scalar deg(0) with the j-th component of
// deg(p), j the color of the edge into vertex 1. Identity when p = 0.
ColoredTree rho_1b(const ColoredTree& t);

// Involution for a = b = k: swaps the degree vectors of 0 and p, moved sibling
// edges keep their colors, and the colors of (0,q) and (p,1) are exchanged.
ColoredTree rho_kk(const ColoredTree& t);

// S_pi(i) = (B_pi(ik-k+1), ..., B_pi(ik)): the preference fibers of block i.
struct BlockVector {
  std::vector<std::vector<int>> parts;  // k car sets, each ascending

  bool trivial() const;

  friend bool operator==(const BlockVector&, const BlockVector&) = default;
  friend auto operator<=>(const BlockVector&, const BlockVector&) = default;
};

// All block vectors of a (k,k)-parking function, indexed by block.
std::map<int, BlockVector> block_vectors(const ParkingFunction& pf, int k);

// O(pi) = { S_pi(i) : i != 1, l(pi), S_pi(i) nontrivial }, canonically sorted.
struct OSet {
  std::vector<BlockVector> members;

  friend bool operator==(const OSet&, const OSet&) = default;
  friend auto operator<=>(const OSet&, const OSet&) = default;
};

OSet o_set(const ParkingFunction& pf, int k);

// All (a,b)-colored trees on [n]_0: acyclic parent maps crossed with the
// admissible colorings.
void for_each_colored_tree(int a, int b, int n,
                           const std::function<void(const ColoredTree&)>& visit,
                           std::uint64_t cap = kDefaultEnumerationCap);
BigInt count_colored_trees(int a, int b, int n, std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace parkfn
