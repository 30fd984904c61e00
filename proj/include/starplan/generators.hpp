#pragma once

// Input generation: random even star-graphs (configuration pairing), random
// guaranteed-planar star-graphs (grown face by face), star-graphs of
// double-occurrence words, and edge doubling.
//
// All randomness flows through mt19937_64 with hand-rolled bounded sampling
// and an explicit element-swap shuffle, so identical seeds give identical
// graphs on every platform.

#include "starplan/webgraph.hpp"

#include <cstdint>
#include <random>
#include <string>

namespace starplan {

using Seed = std::uint64_t;

namespace detail {

inline int sample_below(std::mt19937_64& rng, int n) {
  return static_cast<int>(rng() % static_cast<std::uint64_t>(n));
}

template <typename T>
inline void shuffle_vector(std::mt19937_64& rng, std::vector<T>& v) {
  for (int i = static_cast<int>(v.size()) - 1; i > 0; --i)
    std::swap(v[i], v[sample_below(rng, i + 1)]);
}

}  // namespace detail

// Configuration model: each vertex draws a degree from the menu, the
// half-edges are paired by a random perfect matching, and every rotation is
// an independent random order. Resamples until the underlying graph is
// connected, giving up after 1000 attempts.
inline StarGraph random_even_star_graph(int n_vertices, const std::vector<int>& degree_menu,
                                        Seed seed) {
  if (n_vertices < 1) throw std::invalid_argument("random_even_star_graph: need n >= 1");
  if (degree_menu.empty())
    throw std::invalid_argument("random_even_star_graph: empty degree menu");
  for (int d : degree_menu)
    if (d < 2 || d % 2 != 0)
      throw std::invalid_argument("random_even_star_graph: degrees must be even and positive");

  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<int> degree(n_vertices);
    for (int v = 0; v < n_vertices; ++v)
      degree[v] = degree_menu[detail::sample_below(rng, static_cast<int>(degree_menu.size()))];

    std::vector<std::vector<HalfEdgeId>> rotations(n_vertices);
    std::vector<HalfEdgeId> all;
    HalfEdgeId next = 0;
    for (int v = 0; v < n_vertices; ++v)
      for (int k = 0; k < degree[v]; ++k) {
        rotations[v].push_back(next);
        all.push_back(next);
        ++next;
      }
    detail::shuffle_vector(rng, all);
    std::vector<std::array<HalfEdgeId, 2>> edges;
    for (size_t i = 0; i + 1 < all.size(); i += 2) edges.push_back({all[i], all[i + 1]});
    for (auto& rot : rotations) detail::shuffle_vector(rng, rot);

    StarGraph g = make_star_graph(rotations, edges);
    if (is_connected(underlying_graph(g))) return g;
  }
  throw capacity_error("random_even_star_graph: no connected sample within 1000 attempts");
}

// Grows a plane multigraph and reads the star structure off its rotation
// system, so the result is planar by construction. Starts from one embedded
// loop and repeatedly either splits a face with a new edge between two of
// its corners (corner pairs at one vertex make loops, corners flanking an
// existing edge make parallel copies) or hangs a pendant vertex inside a
// face. The budget counts face-splitting insertions, the initial loop
// included; budget 1 returns the plain one-loop circle.
inline StarGraph random_planar_star_graph(int n_faces_budget, Seed seed) {
  if (n_faces_budget < 1) throw std::invalid_argument("random_planar_star_graph: budget >= 1");
  std::mt19937_64 rng(seed);

  std::vector<std::vector<HalfEdgeId>> rotation{{0, 1}};
  std::vector<std::array<HalfEdgeId, 2>> edges{{0, 1}};
  std::vector<VertexId> half_vertex{0, 0};
  // faces as cyclic sequences of departing half-edges
  std::vector<std::vector<HalfEdgeId>> faces{{0}, {1}};
  auto partner_of = [&](HalfEdgeId h) {
    for (const auto& e : edges)
      if (e[0] == h || e[1] == h) return e[0] == h ? e[1] : e[0];
    throw internal_error("random_planar_star_graph: dangling half-edge");
  };
  // the corner after face position t lives at the vertex of the arriving
  // half; inserting there means right after that half in its rotation
  auto insert_at_corner = [&](HalfEdgeId arrival, HalfEdgeId fresh) {
    VertexId v = half_vertex[arrival];
    auto& rot = rotation[v];
    auto it = std::find(rot.begin(), rot.end(), arrival);
    rot.insert(it + 1, fresh);
    half_vertex.push_back(v);
  };

  for (int split = 1; split < n_faces_budget; ++split) {
    if (detail::sample_below(rng, 4) == 0) {
      // pendant vertex: face count stays, texture grows
      int f = detail::sample_below(rng, static_cast<int>(faces.size()));
      int i = detail::sample_below(rng, static_cast<int>(faces[f].size()));
      HalfEdgeId x = static_cast<HalfEdgeId>(half_vertex.size());
      HalfEdgeId y = x + 1;
      insert_at_corner(partner_of(faces[f][i]), x);
      rotation.push_back({y});
      half_vertex.push_back(static_cast<VertexId>(rotation.size()) - 1);
      edges.push_back({x, y});
      std::vector<HalfEdgeId> nf(faces[f].begin(), faces[f].begin() + i + 1);
      nf.push_back(x);
      nf.push_back(y);
      nf.insert(nf.end(), faces[f].begin() + i + 1, faces[f].end());
      faces[f] = std::move(nf);
    }
    // split a face between two corners (equal corners make a loop)
    int f = detail::sample_below(rng, static_cast<int>(faces.size()));
    const std::vector<HalfEdgeId> F = faces[f];
    const int k = static_cast<int>(F.size());
    int i = detail::sample_below(rng, k);
    int j = detail::sample_below(rng, k);
    HalfEdgeId x = static_cast<HalfEdgeId>(half_vertex.size());
    HalfEdgeId y = x + 1;
    if (i == j) {
      VertexId v = half_vertex[partner_of(F[i])];
      auto& rot = rotation[v];
      auto it = std::find(rot.begin(), rot.end(), partner_of(F[i]));
      rot.insert(it + 1, {x, y});
      half_vertex.push_back(v);
      half_vertex.push_back(v);
      edges.push_back({x, y});
      std::vector<HalfEdgeId> big{x};
      for (int t = 1; t <= k; ++t) big.push_back(F[(i + t) % k]);
      faces[f] = std::move(big);
      faces.push_back({y});
    } else {
      insert_at_corner(partner_of(F[i]), x);
      insert_at_corner(partner_of(F[j]), y);
      edges.push_back({x, y});
      std::vector<HalfEdgeId> fa{y}, fb{x};
      for (int t = (i + 1) % k; ; t = (t + 1) % k) {
        fa.push_back(F[t]);
        if (t == j) break;
      }
      for (int t = (j + 1) % k; ; t = (t + 1) % k) {
        fb.push_back(F[t]);
        if (t == i) break;
      }
      faces[f] = std::move(fa);
      faces.push_back(std::move(fb));
    }
  }
  return make_star_graph(rotation, edges);
}

// Star-graph of a closed curve given by a double-occurrence word: one
// 4-valent vertex per symbol. In the rotation [h1,h2,h3,h4] the first pass
// enters at h1 and leaves at h3, the second enters at h2 and leaves at h4,
// so the two strands occupy opposite positions. Edges join consecutive
// passes cyclically along the word.
inline StarGraph from_gauss_word(const std::string& word) {
  std::map<char, int> count;
  for (char c : word) ++count[c];
  for (auto& [c, k] : count)
    if (k != 2)
      throw std::invalid_argument(std::string("from_gauss_word: symbol '") + c +
                                  "' occurs " + std::to_string(k) + " times, need 2");

  std::map<char, VertexId> vertex_of;
  std::vector<std::string> names;
  for (char c : word)
    if (!vertex_of.count(c)) {
      vertex_of[c] = static_cast<VertexId>(names.size());
      names.push_back(std::string(1, c));
    }
  const int n = static_cast<int>(names.size());

  std::vector<std::vector<HalfEdgeId>> rotations(n);
  for (int v = 0; v < n; ++v) rotations[v] = {4 * v, 4 * v + 1, 4 * v + 2, 4 * v + 3};

  // pass i enters in_half(i) and leaves out_half(i)
  std::vector<HalfEdgeId> in_half(word.size()), out_half(word.size());
  std::map<char, int> seen;
  for (size_t i = 0; i < word.size(); ++i) {
    VertexId v = vertex_of[word[i]];
    int pass = seen[word[i]]++;
    in_half[i] = 4 * v + (pass == 0 ? 0 : 1);
    out_half[i] = 4 * v + (pass == 0 ? 2 : 3);
  }
  std::vector<std::array<HalfEdgeId, 2>> edges;
  for (size_t i = 0; i < word.size(); ++i)
    edges.push_back({out_half[i], in_half[(i + 1) % word.size()]});

  StarGraph g = make_star_graph(rotations, edges);
  g.vertex_name = names;
  return g;
}

// Parallel copy of every edge, hugging the original. In drawing terms the
// copy leaves just counterclockwise of the original at its first end and
// arrives just clockwise of it at the second, staying inside a ribbon
// around the edge. Because stored rotations are only defined up to a
// reflection per vertex, a drawing-coherent insertion must know which
// vertices an embedding reflects; reversed_at supplies those flags (from a
// planar star embedding). With wrong flags the copy can twist around its
// original and planarity may genuinely be lost; nonplanar graphs stay
// nonplanar under every insertion, since deleting the copies restores the
// input. Doubling always makes every degree even.
inline StarGraph double_all_edges(const StarGraph& g, const std::vector<bool>& reversed_at) {
  if (reversed_at.size() != static_cast<size_t>(g.vertex_count()))
    throw std::invalid_argument("double_all_edges: one reversal flag per vertex required");
  const int m = g.edge_count();
  std::vector<std::vector<HalfEdgeId>> rotations(g.vertex_count());
  std::vector<std::array<HalfEdgeId, 2>> edges = g.edge;
  for (EdgeId e = 0; e < m; ++e)
    edges.push_back({2 * m + 2 * e, 2 * m + 2 * e + 1});
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    for (HalfEdgeId h : g.rotation[v]) {
      EdgeId e = g.half_edge_id[h];
      bool first_side = g.edge[e][0] == h;
      HalfEdgeId copy = 2 * m + 2 * e + (first_side ? 0 : 1);
      // target in drawing coordinates: after the original at its first
      // side, before it at the second; a reflected vertex stores the
      // drawing order backwards, which swaps before and after
      bool copy_after = first_side != reversed_at[v];
      if (copy_after) {
        rotations[v].push_back(h);
        rotations[v].push_back(copy);
      } else {
        rotations[v].push_back(copy);
        rotations[v].push_back(h);
      }
    }
  StarGraph out = make_star_graph(rotations, edges);
  out.vertex_name = g.vertex_name;
  return out;
}

inline StarGraph double_all_edges(const StarGraph& g) {
  return double_all_edges(g, std::vector<bool>(g.vertex_count(), false));
}

}  // namespace starplan
