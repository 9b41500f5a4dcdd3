#include "parkfn/forest.hpp"

#include <algorithm>

namespace parkfn {

namespace {

// Every vertex must reach a root; memoized chain walk.
bool reaches_roots(std::span<const int> parent, int m) {
  std::vector<int> state(static_cast<std::size_t>(m), 0);  // 0 new, 1 on path, 2 done
  std::vector<int> path;
  for (int v0 = 1; v0 <= m; ++v0) {
    int v = v0;
    path.clear();
    while (!RootedForest::is_root_ref(v) && state[static_cast<std::size_t>(v) - 1] == 0) {
      state[static_cast<std::size_t>(v) - 1] = 1;
      path.push_back(v);
      v = parent[static_cast<std::size_t>(v) - 1];
    }
    if (!RootedForest::is_root_ref(v) && state[static_cast<std::size_t>(v) - 1] == 1) {
      return false;
    }
    for (int u : path) state[static_cast<std::size_t>(u) - 1] = 2;
  }
  return true;
}

}  // namespace

RootedForest::RootedForest(int m, int n, std::vector<int> parent)
    : m_(m), n_(n), parent_(std::move(parent)) {
  if (m_ < 1 || n_ < m_) throw MalformedForest("need 1 <= m <= n");
  if (static_cast<int>(parent_.size()) != m_) {
    throw MalformedForest("parent map must assign every vertex 1..m");
  }
  const int roots = root_count();
  for (int ref : parent_) {
    if (is_root_ref(ref)) {
      if (root_index(ref) < 1 || root_index(ref) > roots) {
        throw MalformedForest("root reference out of range");
      }
    } else if (ref < 1 || ref > m_) {
      throw MalformedForest("parent label out of range");
    }
  }
  if (!reaches_roots(parent_, m_)) throw MalformedForest("parent map contains a cycle");
}

std::vector<int> RootedForest::children(int ref) const {
  std::vector<int> out;
  for (int v = 1; v <= m_; ++v) {
    if (parent(v) == ref) out.push_back(v);
  }
  return out;
}

BfsOrder bfs_order(const RootedForest& f) {
  const int m = f.edge_count();
  const int roots = f.root_count();
  // child lists indexed 0..roots-1 for roots, roots..roots+m-1 for labels
  std::vector<std::vector<int>> kids(static_cast<std::size_t>(roots + m));
  for (int v = 1; v <= m; ++v) {
    int p = f.parent(v);
    int slot = RootedForest::is_root_ref(p) ? RootedForest::root_index(p) - 1
                                            : roots + p - 1;
    kids[static_cast<std::size_t>(slot)].push_back(v);
  }
  for (auto& k : kids) std::sort(k.begin(), k.end());

  BfsOrder order;
  order.vertices.reserve(static_cast<std::size_t>(roots + m));
  for (int j = 1; j <= roots; ++j) order.vertices.push_back(RootedForest::root_ref(j));
  // Queue discipline realizes "increasing predecessor" as increasing BFS
  // position of the predecessor; same-parent ties by increasing label.
  for (std::size_t head = 0; head < order.vertices.size(); ++head) {
    int ref = order.vertices[head];
    int slot = RootedForest::is_root_ref(ref) ? RootedForest::root_index(ref) - 1
                                              : roots + ref - 1;
    for (int c : kids[static_cast<std::size_t>(slot)]) order.vertices.push_back(c);
  }
  order.rank.assign(static_cast<std::size_t>(m), 0);
  for (int ref : order.vertices) {
    if (!RootedForest::is_root_ref(ref)) {
      order.stripped.push_back(ref);
      order.rank[static_cast<std::size_t>(ref) - 1] = static_cast<int>(order.stripped.size());
    }
  }
  return order;
}

Specification forest_spec(const RootedForest& f) {
  BfsOrder order = bfs_order(f);
  const int n = f.spot_count();
  std::vector<int> deg(order.vertices.size(), 0);
  std::vector<int> pos_of(order.vertices.size());
  const int roots = f.root_count();
  for (std::size_t pos = 0; pos < order.vertices.size(); ++pos) {
    int ref = order.vertices[pos];
    int slot = RootedForest::is_root_ref(ref) ? RootedForest::root_index(ref) - 1
                                              : roots + ref - 1;
    pos_of[static_cast<std::size_t>(slot)] = static_cast<int>(pos);
  }
  for (int v = 1; v <= f.edge_count(); ++v) {
    int p = f.parent(v);
    int slot = RootedForest::is_root_ref(p) ? RootedForest::root_index(p) - 1
                                            : roots + p - 1;
    ++deg[static_cast<std::size_t>(pos_of[static_cast<std::size_t>(slot)])];
  }
  Specification s;
  s.counts.assign(deg.begin(), deg.begin() + n);  // final vertex omitted
  return s;
}

OrderPermutation sigma(const RootedForest& f) {
  BfsOrder order = bfs_order(f);
  OrderPermutation s;
  s.perm = order.rank;
  return s;
}

ParkingFunction phi(const RootedForest& f) {
  BfsOrder order = bfs_order(f);
  const int low = f.root_count();  // n - m + 1
  std::vector<int> prefs;
  prefs.reserve(static_cast<std::size_t>(f.edge_count()));
  for (int i = 1; i <= f.edge_count(); ++i) {
    int p = f.parent(i);
    if (RootedForest::is_root_ref(p)) {
      prefs.push_back(RootedForest::root_index(p));
    } else {
      prefs.push_back(low + order.rank[static_cast<std::size_t>(p) - 1]);
    }
  }
  return ParkingFunction(PFParams{f.edge_count(), f.spot_count()}, std::move(prefs));
}

RootedForest phi_inv(const ParkingFunction& pf) {
  const PFParams& p = pf.pf_params();
  const int low = p.low_range();
  std::vector<int> tau_inv = order_permutation(pf).inverse();
  std::vector<int> parent(static_cast<std::size_t>(p.m));
  for (int i = 1; i <= p.m; ++i) {
    int v = pf.pref(i);
    parent[static_cast<std::size_t>(i) - 1] =
        v <= low ? RootedForest::root_ref(v) : tau_inv[static_cast<std::size_t>(v - low) - 1];
  }
  return RootedForest(p.m, p.n, std::move(parent));
}

int child_count(const RootedForest& f, int ref) {
  int c = 0;
  for (int v = 1; v <= f.edge_count(); ++v) {
    if (f.parent(v) == ref) ++c;
  }
  return c;
}

int deg_root_total(const RootedForest& f) {
  int c = 0;
  for (int v = 1; v <= f.edge_count(); ++v) {
    if (RootedForest::is_root_ref(f.parent(v))) ++c;
  }
  return c;
}

int deg_parent_of_1(const RootedForest& f) { return child_count(f, f.parent(1)); }

void for_each_forest(int m, int n, const std::function<void(const RootedForest&)>& visit,
                     std::uint64_t cap) {
  if (m < 1 || n < m) throw BadParameter("for_each_forest: need 1 <= m <= n");
  const int roots = n - m + 1;
  const int choices = roots + m;  // per-vertex parent candidates
  std::uint64_t total = 1;
  for (int i = 0; i < m; ++i) {
    if (total > cap / static_cast<std::uint64_t>(choices)) {
      throw SizeCapExceeded("forest enumeration exceeds the configured cap");
    }
    total *= static_cast<std::uint64_t>(choices);
  }
  // Odometer over parent assignments; candidate order 0_1..0_r, 1..m.
  std::vector<int> pick(static_cast<std::size_t>(m), 0);
  auto ref_of = [&](int c) { return c < roots ? RootedForest::root_ref(c + 1) : c - roots + 1; };
  std::vector<int> parent(static_cast<std::size_t>(m));
  for (;;) {
    for (int i = 0; i < m; ++i) {
      parent[static_cast<std::size_t>(i)] = ref_of(pick[static_cast<std::size_t>(i)]);
    }
    if (reaches_roots(parent, m)) visit(RootedForest(m, n, parent));
    int pos = m - 1;
    while (pos >= 0 && pick[static_cast<std::size_t>(pos)] == choices - 1) {
      pick[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++pick[static_cast<std::size_t>(pos)];
  }
}

BigInt count_forests(int m, int n, std::uint64_t cap) {
  BigInt total = 0;
  for_each_forest(m, n, [&](const RootedForest&) { ++total; }, cap);
  return total;
}

}  // namespace parkfn
