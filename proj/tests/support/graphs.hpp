#pragma once

// Shared graph builders and seeded sampling helpers for the test suites.

#include "starplan/webgraph.hpp"

#include <random>
#include <vector>

namespace starplan_tests {

inline starplan::OrdinaryGraph og(int n, std::vector<std::array<starplan::VertexId, 2>> edges) {
  starplan::OrdinaryGraph g;
  g.n = n;
  g.edge = std::move(edges);
  if (auto p = starplan::graph_problem(g)) throw std::invalid_argument("bad fixture: " + *p);
  return g;
}

inline starplan::OrdinaryGraph complete_graph(int n) {
  std::vector<std::array<starplan::VertexId, 2>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  return og(n, std::move(e));
}

inline starplan::OrdinaryGraph complete_bipartite(int a, int b) {
  std::vector<std::array<starplan::VertexId, 2>> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.push_back({i, a + j});
  return og(a + b, std::move(e));
}

inline starplan::OrdinaryGraph petersen_graph() {
  std::vector<std::array<starplan::VertexId, 2>> e;
  for (int i = 0; i < 5; ++i) e.push_back({i, (i + 1) % 5});          // outer cycle
  for (int i = 0; i < 5; ++i) e.push_back({5 + i, 5 + (i + 2) % 5});  // inner pentagram
  for (int i = 0; i < 5; ++i) e.push_back({i, 5 + i});                // spokes
  return og(10, std::move(e));
}

inline starplan::OrdinaryGraph cube_graph() {
  std::vector<std::array<starplan::VertexId, 2>> e;
  for (int v = 0; v < 8; ++v)
    for (int bit = 0; bit < 3; ++bit) {
      int u = v ^ (1 << bit);
      if (v < u) e.push_back({v, u});
    }
  return og(8, std::move(e));
}

inline starplan::OrdinaryGraph wheel_graph(int rim) {
  std::vector<std::array<starplan::VertexId, 2>> e;
  for (int i = 0; i < rim; ++i) {
    e.push_back({1 + i, 1 + (i + 1) % rim});
    e.push_back({0, 1 + i});
  }
  return og(1 + rim, std::move(e));
}

// Deterministic bounded sampling on top of mt19937_64 (no distribution
// objects, whose output differs across standard libraries).
inline int bounded(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

inline starplan::OrdinaryGraph random_multigraph(std::mt19937_64& rng, int max_n, int max_m) {
  int n = bounded(rng, 1, max_n);
  int m = bounded(rng, 0, max_m);
  std::vector<std::array<starplan::VertexId, 2>> e;
  for (int i = 0; i < m; ++i)
    e.push_back({bounded(rng, 0, n - 1), bounded(rng, 0, n - 1)});
  return og(n, std::move(e));
}

// every labeled simple graph on n vertices, one per edge-subset mask
inline std::vector<starplan::OrdinaryGraph> all_simple_graphs(int n) {
  std::vector<std::array<starplan::VertexId, 2>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.push_back({i, j});
  std::vector<starplan::OrdinaryGraph> out;
  for (unsigned long long mask = 0; mask < (1ull << slots.size()); ++mask) {
    std::vector<std::array<starplan::VertexId, 2>> e;
    for (size_t s = 0; s < slots.size(); ++s)
      if (mask >> s & 1) e.push_back(slots[s]);
    out.push_back(og(n, std::move(e)));
  }
  return out;
}

}  // namespace starplan_tests
