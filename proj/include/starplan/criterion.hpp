#pragma once

// Planarity criterion for star-graphs with verifiable certificates in both
// directions.
//
// The decision rides on the web-graph blow-up: a star-graph is planar
// exactly when its web graph is. A planar answer carries the induced
// rotation system on the underlying multigraph plus per-vertex reversal
// flags relating it to the stored representative. A nonplanar answer is
// certified either by a Vassiliev obstruction (two edge-disjoint closed
// walks with exactly one transversal intersection) or by an embedded K3,3
// (six branch vertices joined by nine pairwise edge-disjoint, pairwise
// non-crossing walks). Every certificate is re-checked by the independent
// validators before being returned; when no construction rule applies the
// code throws internal_error instead of guessing.

#include <array>
#include <cstdint>
#include <functional>
#include <set>
#include <variant>

#include "core.hpp"
#include "planarity.hpp"
#include "webgraph.hpp"

namespace starplan {

// ---------------------------------------------------------------------------
// Certificate types

// Planarity witness. rotation is a rotation system on underlying_graph(g)
// realizing a genus-zero embedding; reversed_at[v] tells whether the
// embedding traverses the stored rotation representative of v backwards.
struct StarEmbedding {
  RotationSystem rotation;
  std::vector<bool> reversed_at;
};

// Nonplanarity witness, first kind: two edge-disjoint simple closed walks
// crossing transversally at exactly one point.
struct VassilievObstruction {
  Walk c1, c2;
  CrossingRecord crossing;
};

// Nonplanarity witness, second kind: branch[0..2] and branch[3..5] are the
// two sides; paths[k] joins branch[k/3] to branch[3 + k%3], oriented that
// way. The walks must be pairwise edge-disjoint and pairwise free of
// transversal intersections; they may touch at vertices.
struct EmbeddedK33 {
  std::array<VertexId, 6> branch{};
  std::array<Walk, 9> paths{};
};

using NonplanarityWitness = std::variant<VassilievObstruction, EmbeddedK33>;

// How a Kuratowski subdivision of the web graph sits inside one web:
// which branch vertices project into it, which subdivision paths run
// entirely inside it, and where the incident paths exit through the rim.
struct WebOccupancy {
  VertexId vertex = -1;                         // the original star-graph vertex
  std::vector<int> branch_inside;               // branch indices projecting here
  std::vector<int> paths_inside;                // path indices fully inside the web
  std::vector<std::pair<int, int>> directions;  // (path index, rim slot of its exit)
  bool separating_arc = false;  // some foreign path passes through the hub
  std::string shape;            // coarse diagnostic label
};

// ---------------------------------------------------------------------------
// Embedded K3,3 validator

inline std::optional<std::string> check_embedded_k33(const StarGraph& g, const EmbeddedK33& w) {
  for (VertexId v : w.branch)
    if (v < 0 || v >= g.vertex_count()) return "branch vertex out of range";
  for (int k = 0; k < 9; ++k) {
    const Walk& p = w.paths[k];
    if (p.closed) return "path " + std::to_string(k) + " is closed";
    if (auto prob = walk_problem(g, p)) return "path " + std::to_string(k) + ": " + *prob;
    if (walk_source(g, p) != w.branch[k / 3] || walk_target(g, p) != w.branch[3 + k % 3])
      return "path " + std::to_string(k) + " joins the wrong branch vertices";
  }
  for (int a = 0; a < 9; ++a)
    for (int b = a + 1; b < 9; ++b) {
      TransversalReport rep = transversal_crossings(g, w.paths[a], w.paths[b]);
      if (!rep.edge_disjoint)
        return "paths " + std::to_string(a) + " and " + std::to_string(b) + " share edge " +
               std::to_string(rep.shared_edge);
      if (rep.count() != 0)
        return "paths " + std::to_string(a) + " and " + std::to_string(b) +
               " intersect transversally";
    }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Decision with planar certificate

namespace detail {
inline bool is_cyclic_shift(const std::vector<int>& a, const std::vector<int>& b) {
  const size_t n = a.size();
  if (n != b.size()) return false;
  if (n == 0) return true;
  for (size_t s = 0; s < n; ++s) {
    bool ok = true;
    for (size_t i = 0; i < n && ok; ++i) ok = a[i] == b[(s + i) % n];
    if (ok) return true;
  }
  return false;
}
}  // namespace detail

// Decides planarity of a star-graph through its web graph. On success the
// web embedding is restricted back to the star-graph: the spoke order
// around each hub induces the cyclic order of that vertex's half-edges.
// Compatibility with the stored rotation (equal up to shift and reflection)
// and genus zero of the restriction are re-verified, not trusted.
inline std::optional<StarEmbedding> star_is_planar(const StarGraph& g) {
  {
    ValidationReport rep = validate(g);
    if (!rep.ok())
      throw std::invalid_argument("star_is_planar: invalid star-graph: " + rep.problems.front());
  }
  WebGraph web = build_web_graph(g);
  PlanarityVerdict verdict = decide_planarity(web.graph);
  if (!verdict.planar) return std::nullopt;

  StarEmbedding emb;
  emb.reversed_at.assign(g.vertex_count(), false);
  emb.rotation.order.assign(g.vertex_count(), {});
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::map<EdgeId, int> slot_of;  // spoke edge -> rotation slot
    for (int i = 0; i < g.degree(v); ++i) slot_of[web.spoke[v][i]] = i;
    std::vector<int> induced;  // half-edges of v in embedded order
    for (int d : verdict.rotation.order[web.center[v]]) {
      auto it = slot_of.find(dart_edge(d));
      if (it == slot_of.end())
        throw internal_error("star_is_planar: non-spoke edge embedded at a hub");
      induced.push_back(g.rotation[v][it->second]);
    }
    bool forward = detail::is_cyclic_shift(induced, g.rotation[v]);
    std::vector<int> reflected(g.rotation[v].rbegin(), g.rotation[v].rend());
    bool backward = detail::is_cyclic_shift(induced, reflected);
    if (!forward && !backward)
      throw internal_error(
          "star_is_planar: embedded spoke order at " + g.vname(v) +
          " is not the stored rotation up to shift and reflection");
    emb.reversed_at[v] = !forward;
    for (HalfEdgeId h : induced) {
      EdgeId e = g.half_edge_id[h];
      emb.rotation.order[v].push_back(2 * e + (g.edge[e][0] == h ? 0 : 1));
    }
  }
  OrdinaryGraph und = underlying_graph(g);
  if (auto prob = check_rotation_system(und, emb.rotation))
    throw internal_error("star_is_planar: restricted rotation is malformed: " + *prob);
  if (!verify_embedding(und, emb.rotation))
    throw internal_error("star_is_planar: restricted rotation system is not planar");
  return emb;
}

// ---------------------------------------------------------------------------
// Independent brute-force obstruction search
//
// Enumerates all vertex-simple cycles (loops count as one-step cycles) and
// scans pairs in enumeration order, returning the first edge-disjoint pair
// with transversal count exactly one. Cycle enumeration roots each cycle at
// its smallest edge id, traversed forward, so the order is deterministic.

inline std::optional<VassilievObstruction> find_obstruction_bruteforce(
    const StarGraph& g, long long cycle_cap = 100000) {
  {
    ValidationReport rep = validate(g);
    if (!rep.ok())
      throw std::invalid_argument("find_obstruction_bruteforce: invalid star-graph: " +
                                  rep.problems.front());
  }
  if (cycle_cap < 1) throw std::invalid_argument("find_obstruction_bruteforce: cap must be positive");

  std::vector<std::vector<Step>> out_steps(g.vertex_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    out_steps[g.endpoint(e, 0)].push_back({e, false});
    if (!g.is_loop(e)) out_steps[g.endpoint(e, 1)].push_back({e, true});
  }

  std::vector<Walk> cycles;
  auto record = [&](const std::vector<Step>& steps) {
    if (static_cast<long long>(cycles.size()) >= cycle_cap)
      throw capacity_error("find_obstruction_bruteforce: more than " +
                           std::to_string(cycle_cap) + " cycles");
    cycles.push_back(Walk{steps, true});
  };

  std::vector<char> on_path(g.vertex_count(), 0);
  std::vector<Step> path;
  for (EdgeId e0 = 0; e0 < g.edge_count(); ++e0) {
    if (g.is_loop(e0)) {
      record({Step{e0, false}});
      continue;
    }
    const VertexId s = g.endpoint(e0, 0);
    path.assign(1, Step{e0, false});
    on_path[s] = 1;
    on_path[g.endpoint(e0, 1)] = 1;
    std::function<void(VertexId)> grow = [&](VertexId cur) {
      for (const Step& st : out_steps[cur]) {
        if (st.edge <= e0 || g.is_loop(st.edge)) continue;
        bool used = false;
        for (const Step& ps : path)
          if (ps.edge == st.edge) {
            used = true;
            break;
          }
        if (used) continue;
        VertexId t = step_to(g, st);
        if (t == s) {
          path.push_back(st);
          record(path);
          path.pop_back();
        } else if (!on_path[t]) {
          path.push_back(st);
          on_path[t] = 1;
          grow(t);
          on_path[t] = 0;
          path.pop_back();
        }
      }
    };
    grow(g.endpoint(e0, 1));
    on_path[s] = 0;
    on_path[g.endpoint(e0, 1)] = 0;
  }

  // quick edge-set masks to skip obviously overlapping pairs
  const int words = (g.edge_count() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> mask(cycles.size(),
                                               std::vector<std::uint64_t>(words, 0));
  for (size_t i = 0; i < cycles.size(); ++i)
    for (const Step& st : cycles[i].steps) mask[i][st.edge / 64] |= 1ull << (st.edge % 64);

  for (size_t i = 0; i < cycles.size(); ++i)
    for (size_t j = i + 1; j < cycles.size(); ++j) {
      bool overlap = false;
      for (int w = 0; w < words && !overlap; ++w) overlap = (mask[i][w] & mask[j][w]) != 0;
      if (overlap) continue;
      ObstructionCheck chk = check_vassiliev_obstruction(g, cycles[i], cycles[j]);
      if (chk.ok) return VassilievObstruction{cycles[i], cycles[j], *chk.crossing};
    }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Web occupancies

// Describes how the branch vertices and paths of a web-graph Kuratowski
// subdivision distribute over the webs. Diagnostic companion of the
// certificate constructions below.
inline std::vector<WebOccupancy> web_occupancies(const WebGraph& web,
                                                 const KuratowskiSubdivision& sub) {
  const StarGraph& g = web.star;
  std::map<VertexId, WebOccupancy> per;
  for (size_t b = 0; b < sub.branch.size(); ++b) {
    VertexId orig = web.vertex_web[sub.branch[b]];
    auto& occ = per[orig];
    occ.vertex = orig;
    occ.branch_inside.push_back(static_cast<int>(b));
  }
  const EdgeId through_count = web.star.edge_count();
  for (size_t k = 0; k < sub.paths.size(); ++k) {
    const Walk& p = sub.paths[k];
    bool inside_one_web = true;
    for (const Step& st : p.steps)
      if (st.edge < through_count) inside_one_web = false;
    if (inside_one_web) {
      VertexId orig = web.vertex_web[ostep_from(web.graph, p.steps.front())];
      if (per.count(orig)) per[orig].paths_inside.push_back(static_cast<int>(k));
      continue;
    }
    // exit directions at the two ends
    auto exit_slot_forward = [&]() -> std::optional<std::pair<VertexId, int>> {
      for (const Step& st : p.steps)
        if (st.edge < through_count) {
          VertexId circle = ostep_from(web.graph, st);
          return std::make_pair(web.vertex_web[circle],
                                g.half_pos[web.vertex_half[circle]]);
        }
      return std::nullopt;
    };
    auto exit_slot_backward = [&]() -> std::optional<std::pair<VertexId, int>> {
      for (auto it = p.steps.rbegin(); it != p.steps.rend(); ++it)
        if (it->edge < through_count) {
          VertexId circle = ostep_to(web.graph, *it);
          return std::make_pair(web.vertex_web[circle],
                                g.half_pos[web.vertex_half[circle]]);
        }
      return std::nullopt;
    };
    if (auto fw = exit_slot_forward())
      if (per.count(fw->first)) per[fw->first].directions.push_back({static_cast<int>(k), fw->second});
    if (auto bw = exit_slot_backward())
      if (per.count(bw->first)) per[bw->first].directions.push_back({static_cast<int>(k), bw->second});
  }
  // foreign passages through a hub split the web's disk
  for (auto& [orig, occ] : per) {
    VertexId hub = web.center[orig];
    std::set<int> incident;
    auto pattern = kuratowski_pattern(sub.kind);
    for (size_t k = 0; k < sub.paths.size(); ++k)
      for (int b : occ.branch_inside)
        if (pattern[k][0] == b || pattern[k][1] == b) incident.insert(static_cast<int>(k));
    for (size_t k = 0; k < sub.paths.size() && !occ.separating_arc; ++k) {
      if (incident.count(static_cast<int>(k))) continue;
      auto vs = walk_vertices(web.graph, sub.paths[k]);
      for (size_t t = 1; t + 1 < vs.size(); ++t)
        if (vs[t] == hub) occ.separating_arc = true;
    }
  }
  std::vector<WebOccupancy> out;
  for (auto& [orig, occ] : per) {
    std::sort(occ.directions.begin(), occ.directions.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    const size_t n = occ.branch_inside.size(), m = occ.paths_inside.size();
    if (n == 1)
      occ.shape = "single";
    else if (n == 2)
      occ.shape = m ? "joined-pair" : "loose-pair";
    else if (m == n)
      occ.shape = "cycle";
    else if (m + 1 == n)
      occ.shape = "tree";
    else
      occ.shape = "sparse";
    out.push_back(occ);
  }
  std::sort(out.begin(), out.end(), [](const WebOccupancy& a, const WebOccupancy& b) {
    if (a.branch_inside.size() != b.branch_inside.size())
      return a.branch_inside.size() < b.branch_inside.size();
    return a.vertex < b.vertex;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Certificate construction machinery

namespace detail {

// Chains walk segments, reversing where flagged, and validates the result.
template <class Host>
inline std::optional<Walk> chained_walk(const Host& h,
                                        const std::vector<std::pair<const Walk*, bool>>& segs,
                                        bool closed) {
  Walk out;
  out.closed = closed;
  for (const auto& [w, rev] : segs) {
    if (!w || w->steps.empty()) return std::nullopt;
    Walk part = rev ? reverse_walk(*w) : *w;
    out.steps.insert(out.steps.end(), part.steps.begin(), part.steps.end());
  }
  if (out.steps.empty()) return std::nullopt;
  if (walk_problem(h, out)) return std::nullopt;
  return out;
}

// Pattern bookkeeping shared by all constructions. Pattern vertices 0..5:
// 0..2 one side, 3..5 the other. Pattern path k joins k/3 to 3 + k%3 and is
// stored oriented that way.
inline int pattern_path_index(int a, int b) {
  if (a > b) std::swap(a, b);
  return 3 * a + (b - 3);
}

inline const std::vector<std::array<int, 6>>& k33_labelings() {
  static const std::vector<std::array<int, 6>> all = [] {
    std::vector<std::array<int, 6>> out;
    for (int swap_sides = 0; swap_sides < 2; ++swap_sides) {
      std::array<int, 3> left = {0, 1, 2};
      do {
        std::array<int, 3> right = {0, 1, 2};
        do {
          std::array<int, 6> lam{};
          for (int i = 0; i < 3; ++i) {
            lam[i] = swap_sides ? 3 + left[i] : left[i];
            lam[3 + i] = swap_sides ? right[i] : 3 + right[i];
          }
          out.push_back(lam);
        } while (std::next_permutation(right.begin(), right.end()));
      } while (std::next_permutation(left.begin(), left.end()));
    }
    return out;
  }();
  return all;
}

inline const std::vector<std::array<int, 5>>& k5_labelings() {
  static const std::vector<std::array<int, 5>> all = [] {
    std::vector<std::array<int, 5>> out;
    std::array<int, 5> p = {0, 1, 2, 3, 4};
    do {
      out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }();
  return all;
}

inline int k5_path_index(int a, int b) {
  if (a > b) std::swap(a, b);
  static const int table[5][5] = {{-1, 0, 1, 2, 3},
                                  {0, -1, 4, 5, 6},
                                  {1, 4, -1, 7, 8},
                                  {2, 5, 7, -1, 9},
                                  {3, 6, 8, 9, -1}};
  return table[a][b];
}

// Builds the web-graph walk tracing the subdivision paths along a pattern
// vertex sequence; a sequence that returns to its first vertex becomes a
// closed walk.
inline std::optional<Walk> web_walk_k33(const KuratowskiSubdivision& sub, std::vector<int> seq,
                                        const std::array<int, 6>& lam, const OrdinaryGraph& host) {
  bool closed = seq.size() > 1 && seq.front() == seq.back();
  if (closed) seq.pop_back();
  std::vector<std::pair<const Walk*, bool>> segs;
  const size_t hops = closed ? seq.size() : seq.size() - 1;
  for (size_t t = 0; t < hops; ++t) {
    int a = lam[seq[t]], b = lam[seq[(t + 1) % seq.size()]];
    if ((a < 3) == (b < 3)) return std::nullopt;
    segs.push_back({&sub.paths[pattern_path_index(a, b)], !(a < 3)});
  }
  return chained_walk(host, segs, closed);
}

inline std::optional<Walk> web_walk_k5(const KuratowskiSubdivision& sub, std::vector<int> seq,
                                       const std::array<int, 5>& lam, const OrdinaryGraph& host) {
  bool closed = seq.size() > 1 && seq.front() == seq.back();
  if (closed) seq.pop_back();
  std::vector<std::pair<const Walk*, bool>> segs;
  const size_t hops = closed ? seq.size() : seq.size() - 1;
  for (size_t t = 0; t < hops; ++t) {
    int a = lam[seq[t]], b = lam[seq[(t + 1) % seq.size()]];
    if (a == b) return std::nullopt;
    segs.push_back({&sub.paths[k5_path_index(a, b)], !(a < b)});
  }
  return chained_walk(host, segs, closed);
}

inline std::optional<VassilievObstruction> verify_and_pack(const StarGraph& g, const Walk& c1,
                                                           const Walk& c2) {
  ObstructionCheck chk = check_vassiliev_obstruction(g, c1, c2);
  if (!chk.ok) return std::nullopt;
  auto [s1, s2] = simplify_obstruction(g, c1, c2);
  ObstructionCheck fin = check_vassiliev_obstruction(g, s1, s2);
  if (!fin.ok)
    throw internal_error("obstruction simplification broke the certificate: " + fin.reason);
  return VassilievObstruction{s1, s2, *fin.crossing};
}

// Fixed cycle-pair templates, written as pattern vertex sequences. Each
// template is tried under every side-respecting relabeling; a candidate
// survives only if both sequences chain into valid web walks whose
// projections are closed and pass the obstruction check. Templates are
// grouped by how many branch vertices the driving web must share, smallest
// group first.
struct CycleTemplate {
  std::vector<int> c1, c2;
};

inline const std::vector<CycleTemplate>& k5_templates() {
  static const std::vector<CycleTemplate> all = {
      {{0, 1, 3, 0}, {0, 2, 4, 0}},
      {{0, 2, 1}, {0, 4, 1}},
      {{0, 3, 1}, {0, 2, 4, 1}},
  };
  return all;
}

inline const std::vector<CycleTemplate>& k33_templates() {
  static const std::vector<CycleTemplate> all = {
      // two shared branch vertices
      {{0, 4, 2, 3}, {0, 5, 1, 3}},
      {{0, 3, 1}, {0, 4, 1}},
      {{0, 3, 1}, {0, 4, 2, 5, 1}},
      {{0, 3}, {1, 4, 2, 5, 1}},
      {{0, 3}, {0, 4, 1, 5, 0}},
      {{0, 3, 1, 4, 0}, {0, 5, 2, 3}},
      {{0, 3, 2, 4, 0}, {0, 5, 1}},
      // three
      {{0, 4, 2, 3}, {0, 5, 1}},
      // four
      {{3, 1, 4}, {3, 2, 4}},
      {{0, 5, 1}, {3, 2, 4}},
      {{0, 4}, {3, 2, 5, 1}},
      // five
      {{1, 5, 2}, {3, 2}},
      {{3, 2}, {1, 4}},
      {{0, 5, 2}, {3, 2}},
      {{0, 5, 1}, {3, 1}},
      {{0, 5, 1}, {4, 2}},
      // six
      {{0, 4}, {0, 5}},
      {{0, 4}, {3, 2}},
      {{0, 5, 1}, {3, 2}},
      {{0, 4}, {1, 5}},
      {{3, 1}, {3, 2}},
      {{3, 1}, {1, 5}},
      {{3, 1}, {4, 2}},
      {{1, 5}, {4, 2}},
  };
  return all;
}

inline std::optional<VassilievObstruction> obstruction_from_templates(
    const StarGraph& g, const WebGraph& web, const KuratowskiSubdivision& sub) {
  auto attempt = [&](std::optional<Walk> w1, std::optional<Walk> w2)
      -> std::optional<VassilievObstruction> {
    if (!w1 || !w2) return std::nullopt;
    ProjectedWalk p1 = project_walk(web, *w1);
    ProjectedWalk p2 = project_walk(web, *w2);
    if (p1.collapsed() || p2.collapsed()) return std::nullopt;
    if (!p1.walk.closed || !p2.walk.closed) return std::nullopt;
    return verify_and_pack(g, p1.walk, p2.walk);
  };
  if (sub.kind == KuratowskiKind::K5) {
    for (const CycleTemplate& t : k5_templates())
      for (const auto& lam : k5_labelings())
        if (auto hit = attempt(web_walk_k5(sub, t.c1, lam, web.graph),
                               web_walk_k5(sub, t.c2, lam, web.graph)))
          return hit;
  } else {
    for (const CycleTemplate& t : k33_templates())
      for (const auto& lam : k33_labelings())
        if (auto hit = attempt(web_walk_k33(sub, t.c1, lam, web.graph),
                               web_walk_k33(sub, t.c2, lam, web.graph)))
          return hit;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Projected K3,3 pattern state
//
// When every web holds at most one branch vertex, the nine subdivision
// paths project to open walks between six distinct star-graph vertices:
// a drawing of K3,3 whose strands may touch and pass through each other
// but, by the projection lemma, never cross transversally.

struct PatternState {
  std::array<VertexId, 6> vert{};
  std::array<Walk, 9> path{};
};

inline std::optional<std::string> state_problem(const StarGraph& g, const PatternState& st) {
  for (int k = 0; k < 9; ++k) {
    if (auto p = walk_problem(g, st.path[k])) return "path " + std::to_string(k) + ": " + *p;
    if (st.path[k].closed) return "path " + std::to_string(k) + " is closed";
    if (walk_source(g, st.path[k]) != st.vert[k / 3] ||
        walk_target(g, st.path[k]) != st.vert[3 + k % 3])
      return "path " + std::to_string(k) + " detached from its pattern vertices";
  }
  for (int a = 0; a < 9; ++a)
    for (int b = a + 1; b < 9; ++b) {
      TransversalReport rep = transversal_crossings(g, st.path[a], st.path[b]);
      if (!rep.edge_disjoint)
        return "paths " + std::to_string(a) + " and " + std::to_string(b) + " share an edge";
      if (rep.count() != 0)
        return "paths " + std::to_string(a) + " and " + std::to_string(b) + " cross";
    }
  return std::nullopt;
}

inline std::optional<PatternState> state_from_subdivision(const StarGraph& g, const WebGraph& web,
                                                          const KuratowskiSubdivision& sub) {
  if (sub.kind != KuratowskiKind::K33) return std::nullopt;
  PatternState st;
  for (int i = 0; i < 6; ++i) st.vert[i] = web.vertex_web[sub.branch[i]];
  for (int k = 0; k < 9; ++k) {
    ProjectedWalk pr = project_walk(web, sub.paths[k]);
    if (pr.collapsed() || pr.walk.closed) return std::nullopt;
    st.path[k] = pr.walk;
  }
  if (auto p = state_problem(g, st))
    throw internal_error("projected pattern violates the projection lemma: " + *p);
  return st;
}

// Open sub-walk through visit t (steps 0..t), and from visit t onward.
inline Walk walk_prefix(const Walk& w, int t) {
  Walk out;
  out.closed = false;
  out.steps.assign(w.steps.begin(), w.steps.begin() + t + 1);
  return out;
}
inline Walk walk_suffix(const Walk& w, int t) {
  Walk out;
  out.closed = false;
  out.steps.assign(w.steps.begin() + t + 1, w.steps.end());
  return out;
}
// Closed sub-walk between two visits of the same vertex.
inline Walk walk_infix_closed(const Walk& w, int t1, int t2) {
  Walk out;
  out.closed = true;
  out.steps.assign(w.steps.begin() + t1 + 1, w.steps.begin() + t2 + 1);
  return out;
}

// Simple paths in the K3,3 pattern between two pattern vertices, at most
// max_edges pattern edges long, avoiding forbidden path indices.
inline std::vector<std::vector<int>> pattern_chains(int from, int to, int max_edges,
                                                    unsigned forbidden) {
  std::vector<std::vector<int>> out;
  std::vector<int> seq = {from};
  unsigned used_vertices = 1u << from;
  unsigned used_paths = forbidden;
  std::function<void()> grow = [&]() {
    int cur = seq.back();
    if (cur == to && seq.size() > 1) {
      out.push_back(seq);
      return;
    }
    if (static_cast<int>(seq.size()) - 1 >= max_edges) return;
    int lo = cur < 3 ? 3 : 0, hi = cur < 3 ? 6 : 3;
    for (int nxt = lo; nxt < hi; ++nxt) {
      if (used_vertices & (1u << nxt)) continue;
      int k = pattern_path_index(cur, nxt);
      if (used_paths & (1u << k)) continue;
      seq.push_back(nxt);
      used_vertices |= 1u << nxt;
      used_paths |= 1u << k;
      grow();
      seq.pop_back();
      used_vertices &= ~(1u << nxt);
      used_paths &= ~(1u << k);
    }
  };
  if (from != to) grow();
  return out;
}

struct ChainWalk {
  Walk walk;
  unsigned paths_used = 0;
};

inline std::vector<ChainWalk> pattern_chain_walks(const StarGraph& g, const PatternState& st,
                                                  int from, int to, int max_edges,
                                                  unsigned forbidden) {
  std::vector<ChainWalk> out;
  for (const auto& seq : pattern_chains(from, to, max_edges, forbidden)) {
    std::vector<std::pair<const Walk*, bool>> segs;
    unsigned mask = 0;
    for (size_t t = 0; t + 1 < seq.size(); ++t) {
      int k = pattern_path_index(seq[t], seq[t + 1]);
      segs.push_back({&st.path[k], !(seq[t] < 3)});
      mask |= 1u << k;
    }
    if (auto w = chained_walk(g, segs, false)) out.push_back({*w, mask});
  }
  return out;
}

// All nine pattern four-cycles, as closed star-graph walks.
inline std::vector<ChainWalk> pattern_four_cycles(const StarGraph& g, const PatternState& st) {
  std::vector<ChainWalk> out;
  for (int o1 = 0; o1 < 3; ++o1)
    for (int o2 = o1 + 1; o2 < 3; ++o2)
      for (int e1 = 3; e1 < 6; ++e1)
        for (int e2 = e1 + 1; e2 < 6; ++e2) {
          std::vector<std::pair<const Walk*, bool>> segs = {
              {&st.path[pattern_path_index(o1, e1)], false},
              {&st.path[pattern_path_index(o2, e1)], true},
              {&st.path[pattern_path_index(o2, e2)], false},
              {&st.path[pattern_path_index(o1, e2)], true},
          };
          unsigned mask = (1u << pattern_path_index(o1, e1)) |
                          (1u << pattern_path_index(o2, e1)) |
                          (1u << pattern_path_index(o2, e2)) |
                          (1u << pattern_path_index(o1, e2));
          if (auto w = chained_walk(g, segs, true)) out.push_back({*w, mask});
        }
  return out;
}

// One mid-path passage of a strand through a vertex.
struct StrandChord {
  int path = -1;
  int visit = -1;
  VertexId vertex = -1;
  std::array<int, 2> pos = {-1, -1};
};

inline std::vector<StrandChord> chords_at(const StarGraph& g, const PatternState& st,
                                          VertexId v) {
  std::vector<StrandChord> out;
  for (int k = 0; k < 9; ++k) {
    auto visits = walk_visits(g, st.path[k]);
    for (size_t t = 0; t < visits.size(); ++t) {
      if (visits[t].vertex != v) continue;
      std::array<int, 2> pos = {g.half_pos[visits[t].in_half], g.half_pos[visits[t].out_half]};
      if (pos[0] > pos[1]) std::swap(pos[0], pos[1]);
      out.push_back({k, static_cast<int>(t), v, pos});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Obstruction through a connecting path (even graphs without a shared web)
//
// The strands of the projected pattern carry odd degree at the six pattern
// vertices and even degree elsewhere, so in an even graph the unused edges
// connect some pattern vertex of one side to one of the other side. That
// connector either crosses no strand, in which case closing it up yields
// the obstruction directly, or its first crossing can be traded away:
// crossings with strands at the connector's own source are absorbed by
// rerouting the strand (strictly reducing the crossing count), and a
// crossing with any other strand combines connector, strand pieces and
// pattern cycles into the two certified walks.

struct ConnectorCrossings {
  int total = 0;
  // first crossing along the connector, walking from its source
  int path = -1;
  int gamma_visit = -1;
  int path_visit = -1;
  VertexId vertex = -1;
};

inline bool chord_side(int n, const std::array<int, 2>& c, int x) {
  int span = (c[1] - c[0] + n) % n;
  int off = (x - c[0] + n) % n;
  return off > 0 && off < span;
}

inline ConnectorCrossings scan_connector(const StarGraph& g, const PatternState& st,
                                         const Walk& gamma) {
  ConnectorCrossings out;
  struct Hit {
    int path, gamma_visit, path_visit;
    VertexId vertex;
    std::array<int, 2> pos;  // crossing strand chord
    int gamma_in;            // connector arrival position
  };
  std::vector<Hit> hits;
  auto gvisits = walk_visits(g, gamma);
  for (int k = 0; k < 9; ++k) {
    TransversalReport rep = transversal_crossings(g, gamma, st.path[k]);
    if (!rep.edge_disjoint)
      throw internal_error("connector shares an edge with a strand");
    for (const CrossingRecord& cr : rep.crossings) {
      const Visit& gv = gvisits[cr.first.visit];
      hits.push_back(
          {k, cr.first.visit, cr.second.visit, cr.vertex, cr.second.pos,
           g.half_pos[gv.in_half]});
    }
  }
  out.total = static_cast<int>(hits.size());
  if (hits.empty()) return out;
  // earliest connector visit first; among chords met at the same visit the
  // one nearest the arrival side of the connector chord wins
  auto nearer = [&](const Hit& a, const Hit& b) {
    if (a.gamma_visit != b.gamma_visit) return a.gamma_visit < b.gamma_visit;
    const int n = g.degree(a.vertex);
    bool a_in_side_of_b = chord_side(n, b.pos, a.pos[0]) == chord_side(n, b.pos, a.gamma_in) &&
                          chord_side(n, b.pos, a.pos[1]) == chord_side(n, b.pos, a.gamma_in);
    bool b_in_side_of_a = chord_side(n, a.pos, b.pos[0]) == chord_side(n, a.pos, b.gamma_in) &&
                          chord_side(n, a.pos, b.pos[1]) == chord_side(n, a.pos, b.gamma_in);
    if (a_in_side_of_b != b_in_side_of_a) return a_in_side_of_b;
    if (a.path != b.path) return a.path < b.path;
    return a.path_visit < b.path_visit;
  };
  const Hit* best = &hits.front();
  for (const Hit& h : hits)
    if (nearer(h, *best)) best = &h;
  out.path = best->path;
  out.gamma_visit = best->gamma_visit;
  out.path_visit = best->path_visit;
  out.vertex = best->vertex;
  return out;
}

inline std::optional<Walk> find_connector(const StarGraph& g, const PatternState& st) {
  std::vector<char> used(g.edge_count(), 0);
  for (int k = 0; k < 9; ++k)
    for (const Step& s : st.path[k].steps) used[s.edge] = 1;
  std::vector<std::vector<Step>> out_steps(g.vertex_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (used[e] || g.is_loop(e)) continue;
    out_steps[g.endpoint(e, 0)].push_back({e, false});
    out_steps[g.endpoint(e, 1)].push_back({e, true});
  }
  for (int src = 0; src < 3; ++src) {
    std::vector<Step> parent(g.vertex_count(), Step{-1, false});
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<VertexId> queue = {st.vert[src]};
    seen[st.vert[src]] = 1;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      VertexId cur = queue[qi];
      for (const Step& sstep : out_steps[cur]) {
        VertexId t = step_to(g, sstep);
        if (seen[t]) continue;
        seen[t] = 1;
        parent[t] = sstep;
        queue.push_back(t);
      }
    }
    for (int dst = 3; dst < 6; ++dst) {
      if (!seen[st.vert[dst]] || st.vert[dst] == st.vert[src]) continue;
      std::vector<Step> rev;
      VertexId cur = st.vert[dst];
      while (cur != st.vert[src]) {
        Step p = parent[cur];
        rev.push_back(p);
        cur = step_from(g, p);
      }
      std::reverse(rev.begin(), rev.end());
      Walk gamma{rev, false};
      require_walk(g, gamma);
      return gamma;
    }
  }
  return std::nullopt;
}

inline VassilievObstruction obstruction_with_connector(const StarGraph& g, const WebGraph& web,
                                                       const KuratowskiSubdivision& sub) {
  auto st_opt = state_from_subdivision(g, web, sub);
  if (!st_opt)
    throw internal_error("connector route requires every web to hold at most one branch vertex");
  PatternState st = *st_opt;
  std::optional<Walk> gamma_opt = find_connector(g, st);
  if (!gamma_opt)
    throw internal_error("even graph without a connecting path between the pattern sides");
  Walk gamma = *gamma_opt;
  int src = -1, dst = -1;
  for (int i = 0; i < 3; ++i)
    if (st.vert[i] == walk_source(g, gamma)) src = i;
  for (int i = 3; i < 6; ++i)
    if (st.vert[i] == walk_target(g, gamma)) dst = i;
  if (src < 0 || dst < 0) throw internal_error("connector endpoints lost");

  for (int guard = 0; guard < 10000; ++guard) {
    ConnectorCrossings cc = scan_connector(g, st, gamma);
    if (cc.total == 0) {
      // close the connector through the pattern and pair it with a cycle
      for (const ChainWalk& back : pattern_chain_walks(g, st, dst, src, 3, 0)) {
        auto c1 = chained_walk(g, {{&gamma, false}, {&back.walk, false}}, true);
        if (!c1) continue;
        for (const ChainWalk& cyc : pattern_four_cycles(g, st)) {
          if (cyc.paths_used & back.paths_used) continue;
          if (auto hit = verify_and_pack(g, *c1, cyc.walk)) return *hit;
        }
      }
      throw internal_error("crossing-free connector produced no verified obstruction");
    }
    const Walk& strand = st.path[cc.path];
    if (cc.path / 3 == src) {
      // reroute the strand through the connector head, then retry with the
      // freed piece of the strand as the new connector head
      Walk pre = walk_prefix(strand, cc.path_visit);
      Walk post = walk_suffix(strand, cc.path_visit);
      Walk gamma0 = walk_prefix(gamma, cc.gamma_visit);
      auto new_strand = chained_walk(g, {{&gamma0, false}, {&post, false}}, false);
      if (!new_strand) throw internal_error("strand reroute failed to chain");
      int cut_pre = -1, cut_gamma = -1;
      {
        TransversalReport rep = transversal_crossings(g, gamma, pre);
        for (const CrossingRecord& cr : rep.crossings)
          if (cr.first.visit > cut_gamma ||
              (cr.first.visit == cut_gamma && cr.second.visit > cut_pre)) {
            cut_gamma = cr.first.visit;
            cut_pre = cr.second.visit;
          }
      }
      Walk new_gamma;
      if (cut_gamma < 0) {
        Walk tail = walk_suffix(gamma, cc.gamma_visit);
        auto ng = chained_walk(g, {{&pre, false}, {&tail, false}}, false);
        if (!ng) throw internal_error("connector reroute failed to chain");
        new_gamma = *ng;
      } else {
        Walk head = walk_prefix(pre, cut_pre);
        Walk tail = walk_suffix(gamma, cut_gamma);
        auto ng = chained_walk(g, {{&head, false}, {&tail, false}}, false);
        if (!ng) throw internal_error("connector reroute failed to chain");
        new_gamma = *ng;
      }
      int before = cc.total;
      st.path[cc.path] = *new_strand;
      gamma = new_gamma;
      if (auto p = state_problem(g, st))
        throw internal_error("strand reroute broke the pattern: " + *p);
      ConnectorCrossings after = scan_connector(g, st, gamma);
      if (after.total >= before)
        throw internal_error("connector reroute did not reduce the crossing count");
      continue;
    }
    // first crossing sits on a strand not incident to the connector source:
    // combine the connector head, one piece of that strand and short pattern
    // chains into the two cycles
    Walk gamma0 = walk_prefix(gamma, cc.gamma_visit);
    Walk pre = walk_prefix(strand, cc.path_visit);    // strand source -> crossing
    Walk post = walk_suffix(strand, cc.path_visit);   // crossing -> strand target
    const int o_end = cc.path / 3, e_end = 3 + cc.path % 3;
    struct Head {
      Walk piece;
      bool rev;
      int end;
    };
    std::vector<Head> heads = {{pre, true, o_end}, {post, false, e_end}};
    for (const Head& h : heads) {
      for (const ChainWalk& back : pattern_chain_walks(g, st, h.end, src, 3, 1u << cc.path)) {
        auto c1 = chained_walk(
            g, {{&gamma0, false}, {&h.piece, h.rev}, {&back.walk, false}}, true);
        if (!c1) continue;
        for (const ChainWalk& cyc : pattern_four_cycles(g, st)) {
          if (cyc.paths_used & (back.paths_used | (1u << cc.path))) continue;
          if (auto hit = verify_and_pack(g, *c1, cyc.walk)) return *hit;
        }
      }
    }
    throw internal_error("crossed connector produced no verified obstruction");
  }
  throw internal_error("connector routine did not terminate");
}

// ---------------------------------------------------------------------------
// Reduction to an embedded K3,3 (non-even graphs without a shared web)
//
// The projected pattern already satisfies the embedding checks: pairwise
// edge-disjoint strands with no transversal crossings. The loop untangles
// it one multiple point at a time, preferring the stronger certificate. A
// strand passing through its own pattern vertex is shortcut there. Two
// passages of one strand through a vertex are spliced if the splice keeps
// the pattern crossing-free, and two strands sharing a pattern vertex can
// move that vertex onto the meeting point; each repair strictly drops the
// total edge count. Where no crossing-free repair applies the local picture
// is recombined into candidate cycle pairs; a verified pair is returned as
// an obstruction. If nothing verifies either, the multiple point is merely
// a touching, and the current pattern itself is the witness.

inline std::array<int, 3> paths_at_pattern_vertex(int s) {
  if (s < 3) return {3 * s, 3 * s + 1, 3 * s + 2};
  return {s - 3, 3 + (s - 3), 6 + (s - 3)};
}

inline std::optional<VassilievObstruction> emit_through_vertex(
    const StarGraph& g, const PatternState& st, int a, const StrandChord& c) {
  // closed at the pattern vertex: chain from a to one strand end, then that
  // piece of the strand back to the meeting point
  const int o_end = c.path / 3, e_end = 3 + c.path % 3;
  Walk pre = walk_prefix(st.path[c.path], c.visit);
  Walk post = walk_suffix(st.path[c.path], c.visit);
  struct Head {
    const Walk* piece;
    bool rev;
    int end;
  };
  const std::array<Head, 2> heads = {Head{&pre, false, o_end}, Head{&post, true, e_end}};
  for (int first = 0; first < 2; ++first) {
    const Head& h1 = heads[first];
    const Head& h2 = heads[1 - first];
    for (const ChainWalk& ch1 : pattern_chain_walks(g, st, a, h1.end, 3, 1u << c.path)) {
      auto c1 = chained_walk(g, {{&ch1.walk, false}, {h1.piece, h1.rev}}, true);
      if (!c1) continue;
      for (const ChainWalk& ch2 :
           pattern_chain_walks(g, st, a, h2.end, 3, (1u << c.path) | ch1.paths_used)) {
        auto c2 = chained_walk(g, {{&ch2.walk, false}, {h2.piece, h2.rev}}, true);
        if (!c2) continue;
        if (auto hit = verify_and_pack(g, *c1, *c2)) return hit;
      }
    }
  }
  return std::nullopt;
}

inline std::optional<VassilievObstruction> emit_same_strand(const StarGraph& g,
                                                            const PatternState& st,
                                                            const StrandChord& c1,
                                                            const StrandChord& c2) {
  const int k = c1.path, o_end = k / 3, e_end = 3 + k % 3;
  int t1 = std::min(c1.visit, c2.visit), t2 = std::max(c1.visit, c2.visit);
  Walk mid = walk_infix_closed(st.path[k], t1, t2);
  Walk pre = walk_prefix(st.path[k], t1);
  Walk post = walk_suffix(st.path[k], t2);
  for (const ChainWalk& back : pattern_chain_walks(g, st, e_end, o_end, 3, 1u << k)) {
    auto cyc = chained_walk(g, {{&pre, false}, {&post, false}, {&back.walk, false}}, true);
    if (!cyc) continue;
    if (auto hit = verify_and_pack(g, mid, *cyc)) return hit;
  }
  return std::nullopt;
}

inline std::optional<VassilievObstruction> emit_shared_vertex(const StarGraph& g,
                                                              const PatternState& st, int s,
                                                              const StrandChord& c1,
                                                              const StrandChord& c2) {
  auto split_from = [&](const StrandChord& c, Walk& from_s, Walk& from_p, int& far_end) {
    Walk pre = walk_prefix(st.path[c.path], c.visit);
    Walk post = walk_suffix(st.path[c.path], c.visit);
    if (c.path / 3 == s) {  // stored orientation starts at s
      from_s = pre;
      from_p = post;
      far_end = 3 + c.path % 3;
    } else {
      from_s = reverse_walk(post);
      from_p = reverse_walk(pre);
      far_end = c.path / 3;
    }
  };
  Walk g1, f1, g2, f2;
  int end1 = -1, end2 = -1;
  split_from(c1, g1, f1, end1);
  split_from(c2, g2, f2, end2);
  auto loop = chained_walk(g, {{&g1, false}, {&g2, true}}, true);
  if (!loop) return std::nullopt;
  unsigned forbid = (1u << c1.path) | (1u << c2.path);
  for (const ChainWalk& mid : pattern_chain_walks(g, st, end1, end2, 3, forbid)) {
    auto cyc = chained_walk(g, {{&f1, false}, {&mid.walk, false}, {&f2, true}}, true);
    if (!cyc) continue;
    if (auto hit = verify_and_pack(g, *loop, *cyc)) return hit;
  }
  return std::nullopt;
}

inline std::optional<VassilievObstruction> emit_disjoint_strands(const StarGraph& g,
                                                                 const PatternState& st,
                                                                 const StrandChord& c1,
                                                                 const StrandChord& c2) {
  const int o1 = c1.path / 3, e1 = 3 + c1.path % 3;
  const int o2 = c2.path / 3, e2 = 3 + c2.path % 3;
  Walk pre1 = walk_prefix(st.path[c1.path], c1.visit);
  Walk post1 = walk_suffix(st.path[c1.path], c1.visit);
  Walk pre2 = walk_prefix(st.path[c2.path], c2.visit);
  Walk post2 = walk_suffix(st.path[c2.path], c2.visit);
  unsigned forbid = (1u << c1.path) | (1u << c2.path);
  // pairing that keeps the sides together
  for (const ChainWalk& cho : pattern_chain_walks(g, st, o2, o1, 3, forbid)) {
    auto ca = chained_walk(g, {{&pre1, false}, {&pre2, true}, {&cho.walk, false}}, true);
    if (!ca) continue;
    for (const ChainWalk& che :
         pattern_chain_walks(g, st, e2, e1, 3, forbid | cho.paths_used)) {
      auto cb = chained_walk(g, {{&post1, true}, {&post2, false}, {&che.walk, false}}, true);
      if (!cb) continue;
      if (auto hit = verify_and_pack(g, *ca, *cb)) return hit;
    }
  }
  // pairing that exchanges the sides
  for (const ChainWalk& cha : pattern_chain_walks(g, st, e2, o1, 3, forbid)) {
    auto ca = chained_walk(g, {{&pre1, false}, {&post2, false}, {&cha.walk, false}}, true);
    if (!ca) continue;
    for (const ChainWalk& chb :
         pattern_chain_walks(g, st, e1, o2, 3, forbid | cha.paths_used)) {
      auto cb = chained_walk(g, {{&pre2, false}, {&post1, false}, {&chb.walk, false}}, true);
      if (!cb) continue;
      if (auto hit = verify_and_pack(g, *ca, *cb)) return hit;
    }
  }
  return std::nullopt;
}

inline NonplanarityWitness reduce_to_embedding(const StarGraph& g, const WebGraph& web,
                                               const KuratowskiSubdivision& sub) {
  auto st_opt = state_from_subdivision(g, web, sub);
  if (!st_opt)
    throw internal_error("embedding route requires every web to hold at most one branch vertex");
  PatternState st = *st_opt;
  long long budget = 16;
  for (int k = 0; k < 9; ++k) budget += st.path[k].size();

  for (long long round = 0; round <= budget; ++round) {
    bool acted = false;
    for (VertexId v = 0; v < g.vertex_count() && !acted; ++v) {
      std::vector<int> bundle;
      for (int i = 0; i < 6; ++i)
        if (st.vert[i] == v) bundle.push_back(i);
      std::vector<StrandChord> chords = chords_at(g, st, v);
      if (chords.empty() || (bundle.empty() && chords.size() < 2)) continue;

      // shortcut strands running through their own pattern vertex
      for (int a : bundle) {
        auto inc = paths_at_pattern_vertex(a);
        for (const StrandChord& c : chords) {
          if (std::find(inc.begin(), inc.end(), c.path) == inc.end()) continue;
          st.path[c.path] =
              (c.path / 3 == a) ? walk_suffix(st.path[c.path], c.visit)
                                : walk_prefix(st.path[c.path], c.visit);
          if (auto p = state_problem(g, st))
            throw internal_error("strand shortcut broke the pattern: " + *p);
          acted = true;
          break;
        }
        if (acted) break;
      }
      if (acted) break;

      // splice two passages of one strand when that stays crossing-free
      for (size_t i = 0; i < chords.size() && !acted; ++i)
        for (size_t j = i + 1; j < chords.size() && !acted; ++j) {
          if (chords[i].path != chords[j].path) continue;
          int t1 = std::min(chords[i].visit, chords[j].visit);
          int t2 = std::max(chords[i].visit, chords[j].visit);
          Walk pre = walk_prefix(st.path[chords[i].path], t1);
          Walk post = walk_suffix(st.path[chords[i].path], t2);
          auto spliced = chained_walk(g, {{&pre, false}, {&post, false}}, false);
          if (!spliced) continue;
          PatternState trial = st;
          trial.path[chords[i].path] = *spliced;
          if (state_problem(g, trial)) continue;
          st = trial;
          acted = true;
        }
      if (acted) break;

      // move a pattern vertex onto the meeting point of two of its strands
      for (size_t i = 0; i < chords.size() && !acted; ++i)
        for (size_t j = i + 1; j < chords.size() && !acted; ++j) {
          const StrandChord &ca = chords[i], &cb = chords[j];
          if (ca.path == cb.path) continue;
          int shared = -1;
          for (int s = 0; s < 6; ++s) {
            auto inc = paths_at_pattern_vertex(s);
            if (std::find(inc.begin(), inc.end(), ca.path) != inc.end() &&
                std::find(inc.begin(), inc.end(), cb.path) != inc.end())
              shared = s;
          }
          if (shared < 0) continue;
          auto inc = paths_at_pattern_vertex(shared);
          int third = -1;
          for (int k : inc)
            if (k != ca.path && k != cb.path) third = k;
          for (int recycle = 0; recycle < 2 && !acted; ++recycle) {
            PatternState trial = st;
            auto cut = [&](const StrandChord& c, Walk& stub, Walk& rest) {
              Walk pre = walk_prefix(st.path[c.path], c.visit);
              Walk post = walk_suffix(st.path[c.path], c.visit);
              if (c.path / 3 == shared) {
                stub = pre;   // shared vertex -> meeting point
                rest = post;  // the kept piece, still in stored orientation
              } else {
                stub = reverse_walk(post);
                rest = pre;
              }
            };
            Walk stub_a, rest_a, stub_b, rest_b;
            cut(ca, stub_a, rest_a);
            cut(cb, stub_b, rest_b);
            trial.path[ca.path] = rest_a;
            trial.path[cb.path] = rest_b;
            const Walk& stub = recycle == 0 ? stub_a : stub_b;
            Walk stub_rev = reverse_walk(stub);
            const Walk& old_third = st.path[third];
            std::optional<Walk> extended;
            if (third / 3 == shared)
              extended = chained_walk(g, {{&stub_rev, false}, {&old_third, false}}, false);
            else
              extended = chained_walk(g, {{&old_third, false}, {&stub, false}}, false);
            if (!extended) continue;
            trial.path[third] = *extended;
            trial.vert[shared] = v;
            if (state_problem(g, trial)) continue;
            st = trial;
            acted = true;
          }
        }
      if (acted) break;

      // no crossing-free repair at this vertex: recombine into an obstruction
      for (int a : bundle) {
        auto inc = paths_at_pattern_vertex(a);
        for (const StrandChord& c : chords) {
          if (std::find(inc.begin(), inc.end(), c.path) != inc.end()) continue;
          if (auto hit = emit_through_vertex(g, st, a, c)) return *hit;
        }
      }
      for (size_t i = 0; i < chords.size(); ++i)
        for (size_t j = i + 1; j < chords.size(); ++j) {
          const StrandChord &ca = chords[i], &cb = chords[j];
          if (ca.path == cb.path) {
            if (auto hit = emit_same_strand(g, st, ca, cb)) return *hit;
            continue;
          }
          int shared = -1;
          for (int s = 0; s < 6; ++s) {
            auto inc = paths_at_pattern_vertex(s);
            if (std::find(inc.begin(), inc.end(), ca.path) != inc.end() &&
                std::find(inc.begin(), inc.end(), cb.path) != inc.end())
              shared = s;
          }
          if (shared >= 0) {
            if (auto hit = emit_shared_vertex(g, st, shared, ca, cb)) return *hit;
          } else {
            if (auto hit = emit_disjoint_strands(g, st, ca, cb)) return *hit;
          }
        }
    }
    if (acted) continue;
    // no repair applied and no recombination verified: remaining multiple
    // points are touchings, which the witness is allowed to keep
    EmbeddedK33 out;
    out.branch = st.vert;
    out.paths = st.path;
    if (auto p = check_embedded_k33(g, out))
      throw internal_error("untangled pattern fails the embedding check: " + *p);
    return NonplanarityWitness{out};
  }
  throw internal_error("pattern reduction did not terminate");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Certificate constructions

// Builds a Vassiliev obstruction for an even nonplanar star-graph. The
// web graph contains a Kuratowski subdivision; fixed cycle-pair templates
// over its pattern, tried under every relabeling, cover every way the
// branch vertices can share webs, and the connector route covers the
// remaining case where each web holds at most one branch vertex. Evenness
// enters exactly once: it guarantees the connector exists.
inline VassilievObstruction extract_obstruction(const StarGraph& g) {
  {
    ValidationReport rep = validate(g);
    if (!rep.ok())
      throw std::invalid_argument("extract_obstruction: invalid star-graph: " +
                                  rep.problems.front());
  }
  if (!is_even(g))
    throw std::invalid_argument("extract_obstruction: graph has a vertex of odd degree");
  WebGraph web = build_web_graph(g);
  if (decide_planarity(web.graph).planar)
    throw std::invalid_argument("extract_obstruction: graph is planar");
  KuratowskiSubdivision sub = extract_kuratowski(web.graph);
  if (auto hit = detail::obstruction_from_templates(g, web, sub)) return *hit;
  if (sub.kind == KuratowskiKind::K5)
    throw internal_error("extract_obstruction: no cycle template verified on a K5 pattern");
  for (const WebOccupancy& occ : web_occupancies(web, sub))
    if (occ.branch_inside.size() >= 2)
      throw internal_error("extract_obstruction: no cycle template verified for a shared web");
  return detail::obstruction_with_connector(g, web, sub);
}

// Produces a nonplanarity witness for any nonplanar star-graph: a Vassiliev
// obstruction whenever one is constructible (always, for even graphs), and
// an embedded K3,3 otherwise.
inline NonplanarityWitness classify_nonplanar(const StarGraph& g) {
  {
    ValidationReport rep = validate(g);
    if (!rep.ok())
      throw std::invalid_argument("classify_nonplanar: invalid star-graph: " +
                                  rep.problems.front());
  }
  WebGraph web = build_web_graph(g);
  if (decide_planarity(web.graph).planar)
    throw std::invalid_argument("classify_nonplanar: graph is planar");
  if (is_even(g)) return NonplanarityWitness{extract_obstruction(g)};
  KuratowskiSubdivision sub = extract_kuratowski(web.graph);
  if (auto hit = detail::obstruction_from_templates(g, web, sub)) return NonplanarityWitness{*hit};
  if (sub.kind == KuratowskiKind::K5)
    throw internal_error("classify_nonplanar: no cycle template verified on a K5 pattern");
  for (const WebOccupancy& occ : web_occupancies(web, sub))
    if (occ.branch_inside.size() >= 2)
      throw internal_error("classify_nonplanar: no cycle template verified for a shared web");
  return detail::reduce_to_embedding(g, web, sub);
}

}  // namespace starplan
