#pragma once

// Test-side referee for planarity: exhaustive search for a K5 or K3,3
// topological minor (subdivision) by backtracking over branch vertex
// choices and internally vertex-disjoint connecting paths. Written
// independently of the production decision procedure on purpose; keep it
// free of any include/starplan/planarity.hpp machinery.

#include "starplan/webgraph.hpp"

#include <array>
#include <set>
#include <vector>

namespace starplan_tests {

class subdivision_finder {
 public:
  explicit subdivision_finder(const starplan::OrdinaryGraph& g) : n_(g.n) {
    // loops can never join a vertex-simple path, and of parallel edges at
    // most one can be used, so both collapse away
    std::set<std::pair<int, int>> seen;
    for (const auto& e : g.edge) {
      if (e[0] == e[1]) continue;
      auto key = std::minmax(e[0], e[1]);
      if (!seen.insert({key.first, key.second}).second) continue;
      int id = static_cast<int>(edges_.size());
      edges_.push_back({key.first, key.second});
      adj_.resize(n_);
      adj_[key.first].push_back({key.second, id});
      adj_[key.second].push_back({key.first, id});
    }
    adj_.resize(n_);
    deg_.assign(n_, 0);
    for (int v = 0; v < n_; ++v) deg_[v] = static_cast<int>(adj_[v].size());
  }

  bool has_k5() {
    std::vector<int> cand;
    for (int v = 0; v < n_; ++v)
      if (deg_[v] >= 4) cand.push_back(v);
    std::vector<int> pick;
    return choose_branch(cand, 0, 5, pick, /*bipartite=*/false);
  }

  bool has_k33() {
    std::vector<int> cand;
    for (int v = 0; v < n_; ++v)
      if (deg_[v] >= 3) cand.push_back(v);
    std::vector<int> pick;
    return choose_branch(cand, 0, 6, pick, /*bipartite=*/true);
  }

 private:
  int n_;
  std::vector<std::array<int, 2>> edges_;
  std::vector<std::vector<std::pair<int, int>>> adj_;  // (neighbor, edge id)
  std::vector<int> deg_;
  std::vector<char> vertex_blocked_;
  std::vector<char> edge_used_;
  std::vector<std::array<int, 2>> pairs_;

  bool choose_branch(const std::vector<int>& cand, size_t from, int need,
                     std::vector<int>& pick, bool bipartite) {
    if (need == 0) return bipartite ? try_splits(pick) : try_pattern(pick, false, 0);
    for (size_t i = from; i + need <= cand.size(); ++i) {
      pick.push_back(cand[i]);
      if (choose_branch(cand, i + 1, need - 1, pick, bipartite)) return true;
      pick.pop_back();
    }
    return false;
  }

  bool try_splits(const std::vector<int>& six) {
    // fix six[0] on the left side; enumerate its two partners
    for (int a = 1; a < 6; ++a)
      for (int b = a + 1; b < 6; ++b) {
        std::vector<int> branch{six[0], six[a], six[b]};
        for (int k = 1; k < 6; ++k)
          if (k != a && k != b) branch.push_back(six[k]);
        if (try_pattern(branch, true, 0)) return true;
      }
    return false;
  }

  bool try_pattern(const std::vector<int>& branch, bool bipartite, int) {
    pairs_.clear();
    if (bipartite) {
      for (int i = 0; i < 3; ++i)
        for (int j = 3; j < 6; ++j) pairs_.push_back({branch[i], branch[j]});
    } else {
      for (size_t i = 0; i < branch.size(); ++i)
        for (size_t j = i + 1; j < branch.size(); ++j)
          pairs_.push_back({branch[i], branch[j]});
    }
    vertex_blocked_.assign(n_, 0);
    for (int v : branch) vertex_blocked_[v] = 1;
    edge_used_.assign(edges_.size(), 0);
    return connect(0);
  }

  bool connect(size_t pair_idx) {
    if (pair_idx == pairs_.size()) return true;
    return extend(pair_idx, pairs_[pair_idx][0], pairs_[pair_idx][1]);
  }

  bool extend(size_t pair_idx, int cur, int target) {
    for (auto [nb, e] : adj_[cur]) {
      if (edge_used_[e]) continue;
      if (nb == target) {
        edge_used_[e] = 1;
        if (connect(pair_idx + 1)) return true;
        edge_used_[e] = 0;
        continue;
      }
      if (vertex_blocked_[nb]) continue;
      vertex_blocked_[nb] = 1;
      edge_used_[e] = 1;
      if (extend(pair_idx, nb, target)) return true;
      edge_used_[e] = 0;
      vertex_blocked_[nb] = 0;
    }
    return false;
  }
};

inline bool oracle_has_k5(const starplan::OrdinaryGraph& g) {
  return subdivision_finder(g).has_k5();
}

inline bool oracle_has_k33(const starplan::OrdinaryGraph& g) {
  return subdivision_finder(g).has_k33();
}

// Kuratowski's theorem, applied in the contrapositive both ways: planar
// exactly when neither pattern embeds topologically.
inline bool oracle_is_planar(const starplan::OrdinaryGraph& g) {
  subdivision_finder f(g);
  return !f.has_k5() && !f.has_k33();
}

}  // namespace starplan_tests
