#include "parkfn/involutions.hpp"

#include <algorithm>
#include <map>

namespace parkfn {

namespace {

void require_tree(const RootedForest& t, const char* who) {
  if (!t.is_tree()) throw BadParameter(std::string(who) + " requires a rooted tree (m == n)");
}

// Tree parent in [0..n] form; 0 is the root.
int tree_parent(const RootedTree& t, int v) {
  int p = t.parent(v);
  return RootedForest::is_root_ref(p) ? 0 : p;
}

RootedTree tree_from_parents0(int n, const std::vector<int>& par0) {
  std::vector<int> parent(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v) {
    parent[static_cast<std::size_t>(v) - 1] =
        par0[static_cast<std::size_t>(v)] == 0 ? RootedForest::root_ref(1)
                                               : par0[static_cast<std::size_t>(v)];
  }
  return RootedTree(n, n, std::move(parent));
}

}  // namespace

RootedTree theta(const RootedTree& t) {
  require_tree(t, "theta");
  const int n = t.spot_count();
  const int p = tree_parent(t, 1);
  if (p == 0) return t;

  // Undirected edges after the surgery (p,1) -> (0,1), labels 0 and p swapped.
  auto swap_label = [p](int v) { return v == 0 ? p : (v == p ? 0 : v); };
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n) + 1);
  for (int v = 1; v <= n; ++v) {
    int u = (v == 1) ? 0 : tree_parent(t, v);
    int a = swap_label(u), b = swap_label(v);
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  // Re-orient from the root; the swap can flip directions along the 0..p path.
  std::vector<int> par0(static_cast<std::size_t>(n) + 1, -1);
  std::vector<int> stack{0};
  par0[0] = 0;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : adj[static_cast<std::size_t>(u)]) {
      if (par0[static_cast<std::size_t>(w)] == -1) {
        par0[static_cast<std::size_t>(w)] = u;
        stack.push_back(w);
      }
    }
  }
  return tree_from_parents0(n, par0);
}

RootedTree rho(const RootedTree& t, int anchor) {
  require_tree(t, "rho");
  const int n = t.spot_count();
  if (anchor < 1 || anchor > n) throw BadParameter("rho: anchor vertex out of range");
  const int p = tree_parent(t, anchor);
  if (p == 0) return t;

  // q = the child of 0 on the path 0 - q - ... - p - anchor.
  int q = anchor;
  while (tree_parent(t, q) != 0) q = tree_parent(t, q);

  std::vector<int> par0(static_cast<std::size_t>(n) + 1, 0);
  for (int v = 1; v <= n; ++v) par0[static_cast<std::size_t>(v)] = tree_parent(t, v);
  for (int v = 1; v <= n; ++v) {
    if (v == anchor || v == q) continue;
    if (par0[static_cast<std::size_t>(v)] == 0) {
      par0[static_cast<std::size_t>(v)] = p;
    } else if (par0[static_cast<std::size_t>(v)] == p) {
      par0[static_cast<std::size_t>(v)] = 0;
    }
  }
  return tree_from_parents0(n, par0);
}

ParkingFunction theta_hat(const ParkingFunction& pf) {
  const PFParams& p = pf.pf_params();
  if (p.m != p.n) throw NotAParkingFunction("theta_hat is defined on PF(n,n)");
  return phi(theta(phi_inv(pf)));
}

ParkingFunction rho_hat(const ParkingFunction& pf, int anchor) {
  const PFParams& p = pf.pf_params();
  if (p.m != p.n) throw NotAParkingFunction("rho_hat is defined on PF(n,n)");
  return phi(rho(phi_inv(pf), anchor));
}

std::vector<int> k_set(const ParkingFunction& pf) {
  std::vector<int> out;
  const int lead = pf.pref(1);
  for (int j = 1; j <= pf.length(); ++j) {
    if (pf.pref(j) == 1 || pf.pref(j) == lead) out.push_back(j);
  }
  return out;
}

SetPartition make_partition(std::vector<std::vector<int>> blocks) {
  SetPartition p;
  for (auto& b : blocks) {
    if (b.empty()) continue;
    std::sort(b.begin(), b.end());
    p.blocks.push_back(std::move(b));
  }
  std::sort(p.blocks.begin(), p.blocks.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return p;
}

SetPartition preference_partition(const ParkingFunction& pf) {
  std::map<int, std::vector<int>> fibers;
  for (int j = 1; j <= pf.length(); ++j) fibers[pf.pref(j)].push_back(j);
  std::vector<std::vector<int>> blocks;
  for (auto& [value, block] : fibers) blocks.push_back(std::move(block));
  return make_partition(std::move(blocks));
}

SetPartition reduced_preference_partition(const ParkingFunction& pf) {
  std::map<int, std::vector<int>> fibers;
  for (int j = 1; j <= pf.length(); ++j) fibers[pf.pref(j)].push_back(j);
  const int lead = pf.pref(1);
  if (lead != 1 && fibers.count(1)) {
    auto& ones = fibers[1];
    auto& leads = fibers[lead];
    ones.insert(ones.end(), leads.begin(), leads.end());
    fibers.erase(lead);
  }
  std::vector<std::vector<int>> blocks;
  for (auto& [value, block] : fibers) blocks.push_back(std::move(block));
  return make_partition(std::move(blocks));
}

}  // namespace parkfn
