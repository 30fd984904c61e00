#pragma once

// Certified planarity for ordinary multigraphs.
//
// Planar verdicts carry an oriented rotation system whose face tracing
// satisfies Euler's formula on every component (genus 0); nonplanar verdicts
// carry a Kuratowski subdivision (K5 or K3,3). Both certificates are checked
// by validators that never consult the decision procedure.
//
// The decision itself is the classic incremental face-based method: work per
// biconnected block, start from a cycle, and repeatedly route a path of some
// unembedded fragment through an admissible face, preferring fragments with
// the fewest admissible faces (a fragment with none proves nonplanarity, one
// with a single face is forced). Block rotations merge at cut vertices by
// concatenation. Loops and parallel edges are removed up front and spliced
// back into the rotation afterwards (a loop nests as an adjacent dart pair,
// a parallel edge hugs its surviving twin as a bigon), which keeps the
// embedding genus 0; the final verify_embedding run asserts that.
//
// Kuratowski extraction deletes edges greedily while the graph stays
// nonplanar. One pass leaves an edge-minimal nonplanar graph, which is
// exactly a K5 or K3,3 subdivision once isolated vertices are dropped, so
// the certificate can be read off from the degree-3-or-more vertices.

#include "starplan/webgraph.hpp"

#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace starplan {

// Directed edge-ends ("darts"): edge e yields darts 2e (anchored at
// edge[e][0]) and 2e+1 (anchored at edge[e][1]).
inline VertexId dart_tail(const OrdinaryGraph& g, int d) { return g.edge[d >> 1][d & 1]; }
inline VertexId dart_head(const OrdinaryGraph& g, int d) { return g.edge[d >> 1][1 - (d & 1)]; }
inline int dart_twin(int d) { return d ^ 1; }
inline EdgeId dart_edge(int d) { return d >> 1; }

// Oriented cyclic order of outgoing darts at every vertex.
struct RotationSystem {
  std::vector<std::vector<int>> order;
};

inline std::optional<std::string> check_rotation_system(const OrdinaryGraph& g,
                                                        const RotationSystem& rs) {
  if (static_cast<int>(rs.order.size()) != g.n)
    return "rotation system covers " + std::to_string(rs.order.size()) + " vertices, graph has " +
           std::to_string(g.n);
  std::vector<char> seen(2 * g.edge_count(), 0);
  for (VertexId v = 0; v < g.n; ++v)
    for (int d : rs.order[v]) {
      if (d < 0 || d >= 2 * g.edge_count())
        return "dart " + std::to_string(d) + " out of range at vertex " + g.vname(v);
      if (seen[d]) return "dart " + std::to_string(d) + " listed twice";
      seen[d] = 1;
      if (dart_tail(g, d) != v)
        return "dart " + std::to_string(d) + " anchored at " + g.vname(dart_tail(g, d)) +
               " but listed at " + g.vname(v);
    }
  for (int d = 0; d < 2 * g.edge_count(); ++d)
    if (!seen[d]) return "dart " + std::to_string(d) + " missing";
  return std::nullopt;
}

// Face tracing: the successor of d is the rotation successor of its twin.
// Every dart lies on exactly one face.
inline std::vector<std::vector<int>> trace_faces(const OrdinaryGraph& g,
                                                 const RotationSystem& rs) {
  if (auto p = check_rotation_system(g, rs))
    throw std::invalid_argument("trace_faces: " + *p);
  const int darts = 2 * g.edge_count();
  std::vector<int> rot_next(darts, -1);
  for (VertexId v = 0; v < g.n; ++v) {
    const auto& ord = rs.order[v];
    for (size_t i = 0; i < ord.size(); ++i) rot_next[ord[i]] = ord[(i + 1) % ord.size()];
  }
  std::vector<std::vector<int>> faces;
  std::vector<char> done(darts, 0);
  for (int d0 = 0; d0 < darts; ++d0) {
    if (done[d0]) continue;
    std::vector<int> face;
    int d = d0;
    do {
      face.push_back(d);
      done[d] = 1;
      d = rot_next[dart_twin(d)];
    } while (d != d0);
    faces.push_back(std::move(face));
  }
  return faces;
}

// True exactly when every connected component satisfies V - E + F = 2, with
// F counted from face-tracing orbits (an edgeless component counts one
// face).
inline bool verify_embedding(const OrdinaryGraph& g, const RotationSystem& rs) {
  if (auto p = check_rotation_system(g, rs))
    throw std::invalid_argument("verify_embedding: " + *p);
  auto comp = component_labels(g);
  int ncomp = g.n == 0 ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<int> V(ncomp, 0), E(ncomp, 0), F(ncomp, 0);
  for (VertexId v = 0; v < g.n; ++v) ++V[comp[v]];
  for (const auto& e : g.edge) ++E[comp[e[0]]];
  for (const auto& face : trace_faces(g, rs)) ++F[comp[dart_tail(g, face[0])]];
  for (int c = 0; c < ncomp; ++c) {
    if (E[c] == 0) F[c] = 1;
    if (V[c] - E[c] + F[c] != 2) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Kuratowski certificates

enum class KuratowskiKind { K5, K33 };

// branch_pairs(kind, k) lists which branch vertices path k joins:
// K5 paths run over the 10 index pairs in lexicographic order; K3,3 path k
// joins branch[k/3] (left side) to branch[3 + k%3] (right side). Paths are
// stored oriented from the first listed branch vertex to the second.
inline std::vector<std::array<int, 2>> kuratowski_pattern(KuratowskiKind kind) {
  std::vector<std::array<int, 2>> out;
  if (kind == KuratowskiKind::K5) {
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) out.push_back({i, j});
  } else {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) out.push_back({i, 3 + j});
  }
  return out;
}

struct KuratowskiSubdivision {
  KuratowskiKind kind = KuratowskiKind::K5;
  std::vector<VertexId> branch;  // 5, or 6 with the two sides grouped
  std::vector<Walk> paths;       // open walks, one per pattern pair
};

// Independent validator: checks the subdivision shape against the host
// graph alone. Internal path vertices must be pairwise disjoint and disjoint
// from the branch set; that also forces pairwise edge-disjointness.
inline std::optional<std::string> check_kuratowski(const OrdinaryGraph& g,
                                                   const KuratowskiSubdivision& k) {
  const size_t want_branch = k.kind == KuratowskiKind::K5 ? 5 : 6;
  auto pattern = kuratowski_pattern(k.kind);
  if (k.branch.size() != want_branch) return "wrong branch vertex count";
  if (k.paths.size() != pattern.size()) return "wrong path count";
  std::set<VertexId> branch_set(k.branch.begin(), k.branch.end());
  if (branch_set.size() != want_branch) return "branch vertices repeat";
  for (VertexId v : k.branch)
    if (v < 0 || v >= g.n) return "branch vertex out of range";

  std::set<VertexId> interior_seen;
  std::set<EdgeId> edge_seen;
  for (size_t p = 0; p < k.paths.size(); ++p) {
    const Walk& w = k.paths[p];
    if (w.closed) return "path " + std::to_string(p) + " is closed";
    if (auto prob = walk_problem(g, w)) return "path " + std::to_string(p) + ": " + *prob;
    auto vs = walk_vertices(g, w);
    if (vs.front() != k.branch[pattern[p][0]] || vs.back() != k.branch[pattern[p][1]])
      return "path " + std::to_string(p) + " joins the wrong branch vertices";
    std::set<VertexId> mine(vs.begin(), vs.end());
    if (mine.size() != vs.size()) return "path " + std::to_string(p) + " repeats a vertex";
    for (size_t t = 1; t + 1 < vs.size(); ++t) {
      if (branch_set.count(vs[t]))
        return "path " + std::to_string(p) + " passes through a branch vertex";
      if (!interior_seen.insert(vs[t]).second)
        return "paths share the interior vertex " + g.vname(vs[t]);
    }
    for (const Step& s : w.steps)
      if (!edge_seen.insert(s.edge).second)
        return "paths share edge " + std::to_string(s.edge);
  }
  return std::nullopt;
}

struct PlanarityVerdict {
  bool planar = false;
  RotationSystem rotation;            // populated when planar
  KuratowskiSubdivision kuratowski;   // populated when nonplanar
};

// ---------------------------------------------------------------------------
// implementation details

namespace detail {

// Loop-free, parallel-free copy with maps back to the original edge ids.
struct Normalized {
  OrdinaryGraph simple;
  std::vector<EdgeId> orig_edge;               // simple edge -> representative original
  std::vector<std::vector<EdgeId>> parallels;  // simple edge -> the other class members
  std::vector<EdgeId> loops;                   // original loop edges
};

inline Normalized normalize(const OrdinaryGraph& g) {
  Normalized n;
  n.simple.n = g.n;
  n.simple.vertex_name = g.vertex_name;
  std::map<std::pair<VertexId, VertexId>, int> cls;  // endpoint pair -> simple edge
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (g.is_loop(e)) {
      n.loops.push_back(e);
      continue;
    }
    auto key = std::minmax(g.edge[e][0], g.edge[e][1]);
    auto it = cls.find({key.first, key.second});
    if (it == cls.end()) {
      cls[{key.first, key.second}] = n.simple.edge_count();
      n.simple.edge.push_back(g.edge[e]);  // keep the representative's endpoint order
      n.orig_edge.push_back(e);
      n.parallels.emplace_back();
    } else {
      n.parallels[it->second].push_back(e);
    }
  }
  return n;
}

// Biconnected blocks (bridges included) of a loop-free graph, as edge id
// lists in DFS discovery order.
inline std::vector<std::vector<EdgeId>> blocks(const OrdinaryGraph& g) {
  auto inc = incident_edges(g);
  std::vector<int> disc(g.n, -1), low(g.n, 0);
  std::vector<std::vector<EdgeId>> out;
  std::vector<EdgeId> stack;
  std::vector<char> edge_seen(g.edge_count(), 0);
  int timer = 0;
  std::function<void(VertexId, EdgeId)> dfs = [&](VertexId v, EdgeId from) {
    disc[v] = low[v] = timer++;
    for (EdgeId e : inc[v]) {
      if (e == from || edge_seen[e]) continue;
      edge_seen[e] = 1;
      stack.push_back(e);
      VertexId u = g.other(e, v);
      if (disc[u] < 0) {
        dfs(u, e);
        low[v] = std::min(low[v], low[u]);
        if (low[u] >= disc[v]) {
          // v separates: everything above e forms one block
          std::vector<EdgeId> blk;
          while (true) {
            EdgeId t = stack.back();
            stack.pop_back();
            blk.push_back(t);
            if (t == e) break;
          }
          std::sort(blk.begin(), blk.end());
          out.push_back(std::move(blk));
        }
      } else {
        low[v] = std::min(low[v], disc[u]);
      }
    }
  };
  for (VertexId v = 0; v < g.n; ++v)
    if (disc[v] < 0 && !inc[v].empty()) dfs(v, -1);
  return out;
}

// Incremental face-based embedding of one block (2-connected, or a single
// bridge edge). Returns the block's rotation as dart lists per vertex, or
// nothing when the block is nonplanar.
inline std::optional<std::map<VertexId, std::vector<int>>> embed_block(
    const OrdinaryGraph& g, const std::vector<EdgeId>& block) {
  std::map<VertexId, std::vector<int>> rotation;
  if (block.size() == 1) {
    EdgeId e = block[0];
    rotation[g.edge[e][0]].push_back(2 * e);
    rotation[g.edge[e][1]].push_back(2 * e + 1);
    return rotation;
  }

  std::set<VertexId> block_vertices;
  std::map<VertexId, std::vector<EdgeId>> inc;
  for (EdgeId e : block) {
    block_vertices.insert(g.edge[e][0]);
    block_vertices.insert(g.edge[e][1]);
    inc[g.edge[e][0]].push_back(e);
    inc[g.edge[e][1]].push_back(e);
  }

  // initial cycle by DFS from the smallest vertex
  std::vector<EdgeId> cycle_darts;  // darts along the cycle
  {
    VertexId start = *block_vertices.begin();
    std::map<VertexId, int> parent_dart;  // vertex -> dart that discovered it
    std::vector<VertexId> order{start};
    parent_dart[start] = -1;
    std::optional<std::pair<int, VertexId>> back;  // (dart u->w, w already on tree path)
    std::function<bool(VertexId)> dfs = [&](VertexId v) -> bool {
      for (EdgeId e : inc[v]) {
        VertexId u = g.other(e, v);
        int d = 2 * e + (g.edge[e][0] == v ? 0 : 1);  // dart v -> u
        if (parent_dart.count(u)) {
          if (parent_dart[v] >= 0 && dart_edge(parent_dart[v]) == e) continue;
          // walk the tree path from v back; if u is an ancestor we have a cycle
          std::vector<int> path;
          VertexId x = v;
          bool hit = (x == u);
          while (parent_dart[x] >= 0 && !hit) {
            path.push_back(parent_dart[x]);
            x = dart_tail(g, parent_dart[x]);
            if (x == u) hit = true;
          }
          if (!hit) continue;
          // cycle: u ->...-> v (tree darts reversed) then v -> u
          std::reverse(path.begin(), path.end());
          cycle_darts = path;
          cycle_darts.push_back(d);
          return true;
        }
        parent_dart[u] = d;
        if (dfs(u)) return true;
      }
      return false;
    };
    dfs(start);
    if (cycle_darts.empty())
      throw internal_error("embed_block: no cycle in a multi-edge block");
  }

  const int darts_total = 2 * g.edge_count();
  std::vector<char> embedded_edge(g.edge_count(), 0);
  std::set<VertexId> embedded_vertex;
  std::vector<std::vector<int>> faces;

  {
    std::vector<int> fwd = cycle_darts, bwd;
    for (auto it = cycle_darts.rbegin(); it != cycle_darts.rend(); ++it)
      bwd.push_back(dart_twin(*it));
    faces.push_back(fwd);
    faces.push_back(bwd);
    for (int d : cycle_darts) {
      embedded_edge[dart_edge(d)] = 1;
      embedded_vertex.insert(dart_tail(g, d));
    }
  }

  while (true) {
    std::vector<EdgeId> pending;
    for (EdgeId e : block)
      if (!embedded_edge[e]) pending.push_back(e);
    if (pending.empty()) break;

    // fragments: unembedded edges glued through unembedded vertices
    std::map<EdgeId, int> frag_of;
    std::vector<std::vector<EdgeId>> frags;
    {
      std::map<VertexId, std::vector<EdgeId>> by_free_vertex;
      for (EdgeId e : pending)
        for (VertexId v : g.edge[e])
          if (!embedded_vertex.count(v)) by_free_vertex[v].push_back(e);
      // union-find over pending edges
      std::map<EdgeId, EdgeId> up;
      for (EdgeId e : pending) up[e] = e;
      std::function<EdgeId(EdgeId)> find = [&](EdgeId x) {
        while (up[x] != x) x = up[x] = up[up[x]];
        return x;
      };
      for (auto& [v, es] : by_free_vertex)
        for (size_t i = 1; i < es.size(); ++i) up[find(es[i])] = find(es[0]);
      std::map<EdgeId, int> root_to_frag;
      for (EdgeId e : pending) {
        EdgeId r = find(e);
        if (!root_to_frag.count(r)) {
          root_to_frag[r] = static_cast<int>(frags.size());
          frags.emplace_back();
        }
        frag_of[e] = root_to_frag[r];
        frags[root_to_frag[r]].push_back(e);
      }
    }

    // attachments and admissible faces per fragment
    std::vector<std::vector<int>> face_vertexset(faces.size());
    for (size_t f = 0; f < faces.size(); ++f) {
      std::vector<int> vs;
      for (int d : faces[f]) vs.push_back(dart_tail(g, d));
      std::sort(vs.begin(), vs.end());
      face_vertexset[f] = vs;
    }
    int best_frag = -1, best_count = -1, best_face = -1;
    std::vector<std::vector<VertexId>> attach(frags.size());
    for (size_t fi = 0; fi < frags.size(); ++fi) {
      std::set<VertexId> att;
      for (EdgeId e : frags[fi])
        for (VertexId v : g.edge[e])
          if (embedded_vertex.count(v)) att.insert(v);
      attach[fi].assign(att.begin(), att.end());
      if (attach[fi].size() < 2)
        throw internal_error("embed_block: fragment with fewer than two attachments");
      int count = 0, first = -1;
      for (size_t f = 0; f < faces.size(); ++f) {
        bool ok = true;
        for (VertexId v : attach[fi])
          if (!std::binary_search(face_vertexset[f].begin(), face_vertexset[f].end(), v)) {
            ok = false;
            break;
          }
        if (ok) {
          ++count;
          if (first < 0) first = static_cast<int>(f);
        }
      }
      if (count == 0) return std::nullopt;  // stuck fragment: nonplanar
      if (best_frag < 0 || count < best_count) {
        best_frag = static_cast<int>(fi);
        best_count = count;
        best_face = first;
      }
    }

    // route a path through the chosen fragment between two attachments
    std::vector<int> path_darts;
    {
      const auto& fr = frags[best_frag];
      std::set<EdgeId> fr_edges(fr.begin(), fr.end());
      VertexId a = attach[best_frag].front();
      std::map<VertexId, int> via;  // vertex -> dart that reached it
      std::vector<VertexId> queue{a};
      via[a] = -1;
      VertexId goal = -1;
      for (size_t qi = 0; qi < queue.size() && goal < 0; ++qi) {
        VertexId v = queue[qi];
        if (v != a && embedded_vertex.count(v)) continue;  // attachments stop the walk
        for (EdgeId e : inc[v]) {
          if (!fr_edges.count(e)) continue;
          VertexId u = g.other(e, v);
          if (via.count(u)) continue;
          via[u] = 2 * e + (g.edge[e][0] == v ? 0 : 1);
          if (embedded_vertex.count(u)) {
            goal = u;
            break;
          }
          queue.push_back(u);
        }
      }
      if (goal < 0)
        throw internal_error("embed_block: fragment path search failed");
      for (VertexId x = goal; via[x] >= 0; x = dart_tail(g, via[x])) path_darts.push_back(via[x]);
      std::reverse(path_darts.begin(), path_darts.end());
    }

    // split the admissible face along the path
    {
      VertexId a = dart_tail(g, path_darts.front());
      VertexId b = dart_head(g, path_darts.back());
      const std::vector<int>& F = faces[best_face];
      int ia = -1, ib = -1;
      for (size_t i = 0; i < F.size(); ++i) {
        VertexId t = dart_tail(g, F[i]);
        if (t == a) {
          if (ia >= 0) throw internal_error("embed_block: face boundary repeats a vertex");
          ia = static_cast<int>(i);
        }
        if (t == b) {
          if (ib >= 0 && dart_tail(g, F[ib]) == b)
            throw internal_error("embed_block: face boundary repeats a vertex");
          ib = static_cast<int>(i);
        }
      }
      if (ia < 0 || ib < 0) throw internal_error("embed_block: attachments left the face");
      const int k = static_cast<int>(F.size());
      std::vector<int> arc_ab, arc_ba;
      for (int i = ia; i != ib; i = (i + 1) % k) arc_ab.push_back(F[i]);
      for (int i = ib; i != ia; i = (i + 1) % k) arc_ba.push_back(F[i]);
      std::vector<int> f1 = arc_ab;  // a..b then path reversed b->a
      for (auto it = path_darts.rbegin(); it != path_darts.rend(); ++it)
        f1.push_back(dart_twin(*it));
      std::vector<int> f2 = arc_ba;  // b..a then path a->b
      for (int d : path_darts) f2.push_back(d);
      faces[best_face] = std::move(f1);
      faces.push_back(std::move(f2));
    }
    for (int d : path_darts) {
      embedded_edge[dart_edge(d)] = 1;
      embedded_vertex.insert(dart_tail(g, d));
      embedded_vertex.insert(dart_head(g, d));
    }
  }

  // rotation from faces: the face successor of d is the rotation successor
  // of twin(d), so every consecutive face pair pins one rotation link
  std::vector<int> rot_next(darts_total, -1);
  for (const auto& F : faces)
    for (size_t i = 0; i < F.size(); ++i) rot_next[dart_twin(F[i])] = F[(i + 1) % F.size()];
  std::set<int> placed;
  for (const auto& F : faces)
    for (int d : F) {
      if (placed.count(d)) continue;
      VertexId v = dart_tail(g, d);
      int x = d;
      do {
        rotation[v].push_back(x);
        placed.insert(x);
        x = rot_next[x];
        if (x < 0) throw internal_error("embed_block: incomplete rotation links");
      } while (x != d);
    }
  return rotation;
}

// Planarity of an arbitrary multigraph, no certificates.
inline bool is_planar(const OrdinaryGraph& g) {
  Normalized n = normalize(g);
  for (const auto& blk : blocks(n.simple))
    if (!embed_block(n.simple, blk)) return false;
  return true;
}

inline OrdinaryGraph masked_graph(const OrdinaryGraph& g, const std::vector<char>& keep,
                                  std::vector<EdgeId>& back) {
  OrdinaryGraph out;
  out.n = g.n;
  back.clear();
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (keep[e]) {
      out.edge.push_back(g.edge[e]);
      back.push_back(e);
    }
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// public operations

inline bool is_planar_graph(const OrdinaryGraph& g) {
  if (auto p = graph_problem(g)) throw std::invalid_argument("is_planar_graph: " + *p);
  return detail::is_planar(g);
}

// Certificate of nonplanarity by greedy deletion: one pass over the edges,
// removing each whose loss keeps the graph nonplanar, leaves an edge-minimal
// nonplanar graph; that graph is a Kuratowski subdivision and its branch
// vertices are precisely the vertices of degree 3 or more.
inline KuratowskiSubdivision extract_kuratowski(const OrdinaryGraph& g) {
  if (auto p = graph_problem(g)) throw std::invalid_argument("extract_kuratowski: " + *p);
  detail::Normalized norm = detail::normalize(g);
  const OrdinaryGraph& S = norm.simple;
  if (detail::is_planar(S)) throw std::invalid_argument("extract_kuratowski: graph is planar");

  std::vector<char> keep(S.edge_count(), 1);
  std::vector<EdgeId> back;
  for (EdgeId e = 0; e < S.edge_count(); ++e) {
    keep[e] = 0;
    if (detail::is_planar(detail::masked_graph(S, keep, back))) keep[e] = 1;
  }
  std::vector<EdgeId> core;  // simple edge ids of the minimal graph
  for (EdgeId e = 0; e < S.edge_count(); ++e)
    if (keep[e]) core.push_back(e);

  std::vector<int> deg(S.n, 0);
  std::vector<std::vector<EdgeId>> inc(S.n);
  for (EdgeId e : core) {
    for (VertexId v : S.edge[e]) ++deg[v];
    inc[S.edge[e][0]].push_back(e);
    inc[S.edge[e][1]].push_back(e);
  }
  std::vector<VertexId> branch;
  for (VertexId v = 0; v < S.n; ++v)
    if (deg[v] >= 3) branch.push_back(v);

  KuratowskiSubdivision sub;
  if (branch.size() == 5) {
    sub.kind = KuratowskiKind::K5;
    for (VertexId v : branch)
      if (deg[v] != 4) throw internal_error("extract_kuratowski: degree-4 pattern violated");
  } else if (branch.size() == 6) {
    sub.kind = KuratowskiKind::K33;
    for (VertexId v : branch)
      if (deg[v] != 3) throw internal_error("extract_kuratowski: degree-3 pattern violated");
  } else {
    throw internal_error("extract_kuratowski: minimal graph has " +
                         std::to_string(branch.size()) + " branch vertices");
  }

  // walk the subdivision paths from each branch vertex through degree-2
  // chains; keep each path once, oriented by its discovery
  std::set<VertexId> branch_set(branch.begin(), branch.end());
  std::vector<std::pair<std::array<VertexId, 2>, Walk>> found;
  std::set<EdgeId> path_edge_used;
  for (VertexId b : branch)
    for (EdgeId e0 : inc[b]) {
      if (path_edge_used.count(e0)) continue;
      Walk w;
      w.closed = false;
      VertexId v = b;
      EdgeId e = e0;
      while (true) {
        w.steps.push_back({e, S.edge[e][0] != v});
        path_edge_used.insert(e);
        v = S.other(e, v);
        if (branch_set.count(v)) break;
        if (inc[v].size() != 2) throw internal_error("extract_kuratowski: broken chain");
        e = inc[v][0] == e ? inc[v][1] : inc[v][0];
      }
      found.push_back({{b, v}, std::move(w)});
    }
  if (found.size() != (sub.kind == KuratowskiKind::K5 ? 10u : 9u))
    throw internal_error("extract_kuratowski: wrong path count");

  // order the branch list: K3,3 needs its two sides grouped
  std::sort(branch.begin(), branch.end());
  if (sub.kind == KuratowskiKind::K33) {
    auto adjacent = [&](VertexId x, VertexId y) {
      for (auto& [ends, w] : found)
        if ((ends[0] == x && ends[1] == y) || (ends[0] == y && ends[1] == x)) return true;
      return false;
    };
    std::vector<VertexId> left{branch[0]}, right;
    for (size_t i = 1; i < branch.size(); ++i)
      (adjacent(branch[0], branch[i]) ? right : left).push_back(branch[i]);
    if (left.size() != 3 || right.size() != 3)
      throw internal_error("extract_kuratowski: sides of the bipartite pattern do not split 3+3");
    sub.branch = left;
    sub.branch.insert(sub.branch.end(), right.begin(), right.end());
  } else {
    sub.branch = branch;
  }

  // paths into pattern order, oriented first-to-second, edges mapped back to
  // the original multigraph
  auto pattern = kuratowski_pattern(sub.kind);
  for (auto& pair : pattern) {
    VertexId x = sub.branch[pair[0]], y = sub.branch[pair[1]];
    bool placed = false;
    for (auto& [ends, w] : found) {
      if (!((ends[0] == x && ends[1] == y) || (ends[0] == y && ends[1] == x))) continue;
      Walk path = ends[0] == x ? w : reverse_walk(w);
      for (Step& s : path.steps) s.edge = norm.orig_edge[s.edge];
      sub.paths.push_back(std::move(path));
      placed = true;
      break;
    }
    if (!placed) throw internal_error("extract_kuratowski: pattern pair without a path");
  }
  if (auto p = check_kuratowski(g, sub))
    throw internal_error("extract_kuratowski produced an invalid certificate: " + *p);
  return sub;
}

inline PlanarityVerdict decide_planarity(const OrdinaryGraph& g) {
  if (auto p = graph_problem(g)) throw std::invalid_argument("decide_planarity: " + *p);
  detail::Normalized norm = detail::normalize(g);
  const OrdinaryGraph& S = norm.simple;

  std::vector<std::vector<int>> simple_rotation(S.n);
  for (const auto& blk : detail::blocks(S)) {
    auto rot = detail::embed_block(S, blk);
    if (!rot) {
      PlanarityVerdict verdict;
      verdict.planar = false;
      verdict.kuratowski = extract_kuratowski(g);
      return verdict;
    }
    // cut vertices accumulate one contiguous run per block
    for (auto& [v, darts] : *rot)
      simple_rotation[v].insert(simple_rotation[v].end(), darts.begin(), darts.end());
  }

  PlanarityVerdict verdict;
  verdict.planar = true;
  RotationSystem& rs = verdict.rotation;
  rs.order.assign(g.n, {});
  std::map<EdgeId, int> simple_of_rep;
  for (size_t i = 0; i < norm.orig_edge.size(); ++i)
    simple_of_rep[norm.orig_edge[i]] = static_cast<int>(i);
  for (VertexId v = 0; v < g.n; ++v) {
    // translate simple-graph darts to original darts; endpoint order is
    // preserved by normalize, so the dart side carries over
    for (int d : simple_rotation[v]) rs.order[v].push_back(2 * norm.orig_edge[dart_edge(d)] + (d & 1));
    // splice every parallel copy next to its representative: the copies sit
    // after it on the side of endpoint 1 and before it on the side of
    // endpoint 0, forming a stack of bigons
    std::vector<int> with_parallels;
    for (int d : rs.order[v]) {
      EdgeId rep = dart_edge(d);
      const std::vector<EdgeId>& members = norm.parallels[simple_of_rep.at(rep)];
      auto dart_at_v = [&](EdgeId m) { return 2 * m + (g.edge[m][0] == v ? 0 : 1); };
      if ((d & 1) == 0) {
        // representative's endpoint-0 side: copies go in front, descending
        for (auto it = members.rbegin(); it != members.rend(); ++it)
          with_parallels.push_back(dart_at_v(*it));
        with_parallels.push_back(d);
      } else {
        with_parallels.push_back(d);
        for (EdgeId m : members) with_parallels.push_back(dart_at_v(m));
      }
    }
    rs.order[v] = std::move(with_parallels);
  }
  for (EdgeId l : norm.loops) {
    VertexId v = g.edge[l][0];
    rs.order[v].push_back(2 * l);
    rs.order[v].push_back(2 * l + 1);
  }
  if (!verify_embedding(g, rs))
    throw internal_error("decide_planarity produced a rotation that fails Euler verification");
  return verdict;
}

}  // namespace starplan
