#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "parkfn/parking.hpp"

namespace parkfn {

// A rooted forest with n+1 vertices and m edges: roots 0_1..0_{n-m+1}, non-root
// vertices labeled 1..m. Vertex references encode root j as -j and a non-root
// label as itself; roots are never conflated with label integers.
class RootedForest {
 public:
  static constexpr int root_ref(int j) { return -j; }
  static constexpr bool is_root_ref(int v) { return v < 0; }
  static constexpr int root_index(int v) { return -v; }

  // parent[i-1] is the parent reference of vertex i. Throws MalformedForest
  // unless every vertex reaches a root.
  RootedForest(int m, int n, std::vector<int> parent);

  int edge_count() const { return m_; }  // m = number of non-root vertices
  int spot_count() const { return n_; }  // n; the forest has n+1 vertices
  int root_count() const { return n_ - m_ + 1; }
  bool is_tree() const { return m_ == n_; }

  int parent(int vertex) const { return parent_[static_cast<std::size_t>(vertex) - 1]; }
  const std::vector<int>& parents() const { return parent_; }

  // Children of a vertex reference (root ref or label), ascending by label.
  std::vector<int> children(int ref) const;

  friend bool operator==(const RootedForest&, const RootedForest&) = default;

 private:
  int m_ = 0;
  int n_ = 0;
  std::vector<int> parent_;
};

// Trees are the m = n special case (single root, encoded -1).
using RootedTree = RootedForest;

// Breadth first search order: roots first in index order, then level by level,
// vertices within a level by (BFS position of their predecessor, label).
struct BfsOrder {
  std::vector<int> vertices;  // all n+1 vertex references in visit order
  std::vector<int> stripped;  // non-root labels only (sigma^{-1})
  std::vector<int> rank;      // rank[v-1] = 1-based position of v in stripped (sigma)
};

BfsOrder bfs_order(const RootedForest& f);

// Degree vector t(f) = (r_1, ..., r_n): child counts along the BFS order, the
// final vertex omitted.
Specification forest_spec(const RootedForest& f);

// sigma_f: label -> its position in the root-stripped BFS order.
OrderPermutation sigma(const RootedForest& f);

// The BFS bijection and its inverse: pi_i = j when the parent of i is root
// 0_j, and (n-m+1) + sigma_f(parent) otherwise.
ParkingFunction phi(const RootedForest& f);
RootedForest phi_inv(const ParkingFunction& pf);

// Total number of children over all roots.
int deg_root_total(const RootedForest& f);
// Number of children of the parent of vertex 1 (a single root if 1 is a
// root child).
int deg_parent_of_1(const RootedForest& f);
int child_count(const RootedForest& f, int ref);

// Every acyclic parent map, by filtering all (n+1)^m assignments; this is an
// enumeration route independent of phi_inv.
void for_each_forest(int m, int n, const std::function<void(const RootedForest&)>& visit,
                     std::uint64_t cap = kDefaultEnumerationCap);
BigInt count_forests(int m, int n, std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace parkfn
