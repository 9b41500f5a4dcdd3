#include "parkfn/colored.hpp"

#include <algorithm>

namespace parkfn {

ColoredTree::ColoredTree(int a, int b, std::vector<int> parent, std::vector<int> color)
    : n_(static_cast<int>(parent.size())),
      a_(a),
      b_(b),
      parent_(std::move(parent)),
      color_(std::move(color)) {
  if (a_ < 1 || b_ < 1) throw MalformedTree("color ranges must be positive");
  if (n_ < 1) throw MalformedTree("tree needs at least one non-root vertex");
  if (color_.size() != parent_.size()) {
    throw MalformedTree("parent and color maps must have equal size");
  }
  for (int v = 1; v <= n_; ++v) {
    int p = parent_[static_cast<std::size_t>(v) - 1];
    int c = color_[static_cast<std::size_t>(v) - 1];
    if (p < 0 || p > n_) throw MalformedTree("parent entry out of range");
    int range = (p == 0) ? a_ : b_;
    if (c < 1 || c > range) throw MalformedTree("edge color out of range");
  }
  // acyclicity
  std::vector<int> state(static_cast<std::size_t>(n_) + 1, 0);
  state[0] = 2;
  std::vector<int> path;
  for (int v0 = 1; v0 <= n_; ++v0) {
    int v = v0;
    path.clear();
    while (state[static_cast<std::size_t>(v)] == 0) {
      state[static_cast<std::size_t>(v)] = 1;
      path.push_back(v);
      v = parent_[static_cast<std::size_t>(v) - 1];
    }
    if (state[static_cast<std::size_t>(v)] == 1) {
      throw MalformedTree("parent map contains a cycle");
    }
    for (int u : path) state[static_cast<std::size_t>(u)] = 2;
  }
}

std::vector<int> ColoredTree::degree_vector(int vertex_or_root) const {
  std::vector<int> deg(static_cast<std::size_t>(vertex_or_root == 0 ? a_ : b_), 0);
  for (int v = 1; v <= n_; ++v) {
    if (parent(v) == vertex_or_root) ++deg[static_cast<std::size_t>(color(v)) - 1];
  }
  return deg;
}

BfsOrder colored_bfs(const ColoredTree& t) {
  const int n = t.size();
  std::vector<std::vector<int>> kids(static_cast<std::size_t>(n) + 1);
  for (int v = 1; v <= n; ++v) kids[static_cast<std::size_t>(t.parent(v))].push_back(v);
  for (auto& k : kids) {
    std::sort(k.begin(), k.end(), [&](int u, int w) {
      return std::pair(t.color(u), u) < std::pair(t.color(w), w);
    });
  }
  BfsOrder order;
  order.vertices.push_back(RootedForest::root_ref(1));  // the root 0
  std::vector<int> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (int c : kids[static_cast<std::size_t>(queue[head])]) {
      queue.push_back(c);
      order.vertices.push_back(c);
    }
  }
  order.rank.assign(static_cast<std::size_t>(n), 0);
  for (int ref : order.vertices) {
    if (!RootedForest::is_root_ref(ref)) {
      order.stripped.push_back(ref);
      order.rank[static_cast<std::size_t>(ref) - 1] = static_cast<int>(order.stripped.size());
    }
  }
  return order;
}

ParkingFunction colored_phi(const ColoredTree& t) {
  const int n = t.size();
  const int a = t.color_a();
  const int b = t.color_b();
  BfsOrder order = colored_bfs(t);
  std::vector<int> prefs;
  prefs.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    int p = t.parent(i);
    int c = t.color(i);
    if (p == 0) {
      prefs.push_back(c);
    } else {
      int k = order.rank[static_cast<std::size_t>(p) - 1];  // parent is v_{k+1}
      prefs.push_back(a + (k - 1) * b + c);
    }
  }
  return ParkingFunction(ABParams{a, b, n}, std::move(prefs));
}

ColoredTree colored_phi_inv(const ParkingFunction& pf) {
  const ABParams& p = pf.ab_params();
  std::vector<int> tau_inv = order_permutation(pf).inverse();
  std::vector<int> parent(static_cast<std::size_t>(p.m));
  std::vector<int> color(static_cast<std::size_t>(p.m));
  for (int i = 1; i <= p.m; ++i) {
    int j = pf.pref(i);
    if (j <= p.a) {
      parent[static_cast<std::size_t>(i) - 1] = 0;
      color[static_cast<std::size_t>(i) - 1] = j;
    } else {
      int k = (j - p.a + p.b - 1) / p.b;  // block index of j - a
      parent[static_cast<std::size_t>(i) - 1] = tau_inv[static_cast<std::size_t>(k) - 1];
      color[static_cast<std::size_t>(i) - 1] = (j - p.a - 1) % p.b + 1;
    }
  }
  return ColoredTree(p.a, p.b, std::move(parent), std::move(color));
}

namespace {

// Root-to-anchor path: returns (q, p), the child of 0 on the path and the
// parent of the anchor. p == 0 means the anchor hangs off the root.
std::pair<int, int> path_ends(const ColoredTree& t, int anchor) {
  int p = t.parent(anchor);
  int q = anchor;
  while (t.parent(q) != 0) q = t.parent(q);
  return {q, p};
}

}  // namespace

ColoredTree rho_1b(const ColoredTree& t) {
  if (t.color_a() != 1) throw WrongColorParameters("rho_1b requires a = 1");
  auto [q, p] = path_ends(t, 1);
  if (p == 0) return t;
  const int j = t.color(1);  // color of (p, 1)
  std::vector<int> parent = t.parents();
  std::vector<int> color = t.colors();
  for (int v = 1; v <= t.size(); ++v) {
    if (v == 1 || v == q) continue;
    if (t.parent(v) == 0) {
      parent[static_cast<std::size_t>(v) - 1] = p;
      color[static_cast<std::size_t>(v) - 1] = j;
    } else if (t.parent(v) == p && t.color(v) == j) {
      parent[static_cast<std::size_t>(v) - 1] = 0;
      color[static_cast<std::size_t>(v) - 1] = 1;
    }
  }
  return ColoredTree(1, t.color_b(), std::move(parent), std::move(color));
}

ColoredTree rho_kk(const ColoredTree& t) {
  if (t.color_a() != t.color_b()) throw WrongColorParameters("rho_kk requires a = b");
  auto [q, p] = path_ends(t, 1);
  if (p == 0) return t;
  std::vector<int> parent = t.parents();
  std::vector<int> color = t.colors();
  for (int v = 1; v <= t.size(); ++v) {
    if (v == 1 || v == q) continue;
    if (t.parent(v) == 0) {
      parent[static_cast<std::size_t>(v) - 1] = p;
    } else if (t.parent(v) == p) {
      parent[static_cast<std::size_t>(v) - 1] = 0;
    }
  }
  std::swap(color[static_cast<std::size_t>(q) - 1], color[0]);  // edges (0,q) and (p,1)
  return ColoredTree(t.color_a(), t.color_b(), std::move(parent), std::move(color));
}

bool BlockVector::trivial() const {
  return std::all_of(parts.begin(), parts.end(), [](const auto& s) { return s.empty(); });
}

std::map<int, BlockVector> block_vectors(const ParkingFunction& pf, int k) {
  const ABParams& p = pf.ab_params();
  if (p.a != k || p.b != k) {
    throw BadParameter("block_vectors: parking function is not in PF(k,k,m)");
  }
  std::map<int, BlockVector> out;
  for (int i = 1; i <= p.m; ++i) {
    BlockVector s;
    s.parts.assign(static_cast<std::size_t>(k), {});
    for (int j = 1; j <= p.m; ++j) {
      int v = pf.pref(j);
      if (v > (i - 1) * k && v <= i * k) {
        s.parts[static_cast<std::size_t>(v - (i - 1) * k) - 1].push_back(j);
      }
    }
    out.emplace(i, std::move(s));
  }
  return out;
}

OSet o_set(const ParkingFunction& pf, int k) {
  const int lead = leading_block(pf, k);
  OSet o;
  for (auto& [i, s] : block_vectors(pf, k)) {
    if (i == 1 || i == lead || s.trivial()) continue;
    o.members.push_back(std::move(s));
  }
  std::sort(o.members.begin(), o.members.end());
  return o;
}

void for_each_colored_tree(int a, int b, int n,
                           const std::function<void(const ColoredTree&)>& visit,
                           std::uint64_t cap) {
  if (a < 1 || b < 1 || n < 1) throw BadParameter("for_each_colored_tree: bad parameters");
  BigInt expected = ab_count_formula(a, b, n);
  if (expected > BigInt(cap)) {
    throw SizeCapExceeded("colored tree enumeration exceeds the configured cap");
  }
  // Acyclic parent maps first, then all admissible colorings of each.
  std::vector<int> parent(static_cast<std::size_t>(n), 0);
  std::vector<int> color(static_cast<std::size_t>(n), 1);
  auto emit_colorings = [&](const std::vector<int>& par) {
    std::vector<int> limit(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v) {
      limit[static_cast<std::size_t>(v) - 1] = par[static_cast<std::size_t>(v) - 1] == 0 ? a : b;
    }
    std::fill(color.begin(), color.end(), 1);
    for (;;) {
      visit(ColoredTree(a, b, par, color));
      int pos = n - 1;
      while (pos >= 0 &&
             color[static_cast<std::size_t>(pos)] == limit[static_cast<std::size_t>(pos)]) {
        color[static_cast<std::size_t>(pos)] = 1;
        --pos;
      }
      if (pos < 0) break;
      ++color[static_cast<std::size_t>(pos)];
    }
  };
  auto acyclic = [&](const std::vector<int>& par) {
    std::vector<int> state(static_cast<std::size_t>(n) + 1, 0);
    state[0] = 2;
    std::vector<int> path;
    for (int v0 = 1; v0 <= n; ++v0) {
      int v = v0;
      path.clear();
      while (state[static_cast<std::size_t>(v)] == 0) {
        state[static_cast<std::size_t>(v)] = 1;
        path.push_back(v);
        v = par[static_cast<std::size_t>(v) - 1];
      }
      if (state[static_cast<std::size_t>(v)] == 1) return false;
      for (int u : path) state[static_cast<std::size_t>(u)] = 2;
    }
    return true;
  };
  for (;;) {
    if (acyclic(parent)) emit_colorings(parent);
    int pos = n - 1;
    while (pos >= 0 && parent[static_cast<std::size_t>(pos)] == n) {
      parent[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++parent[static_cast<std::size_t>(pos)];
  }
}

BigInt count_colored_trees(int a, int b, int n, std::uint64_t cap) {
  BigInt total = 0;
  for_each_colored_tree(a, b, n, [&](const ColoredTree&) { ++total; }, cap);
  return total;
}

}  // namespace parkfn
