#pragma once

// Star-graph data model and the transversal-intersection calculus.
//
// A star-graph is a finite multigraph (loops and parallel edges allowed)
// together with an unoriented cyclic order of the half-edges around every
// vertex. One concrete sequence per vertex is stored as the representative;
// every operation in this header is invariant under cyclic shifts and under
// reversal of each representative independently.
//
// Walks are edge-based (an edge id plus a traversal direction per step)
// because loops make vertex sequences ambiguous. A closed walk induces one
// "visit" per junction of consecutive steps; the visit's arrival and
// departure half-edges span a chord in the vertex's circular order, and two
// closed walks intersect transversally at a vertex exactly when one of their
// chords crosses a chord of the other.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace starplan {

using VertexId = int;
using HalfEdgeId = int;
using EdgeId = int;

// Raised when a resource guard trips (cycle enumeration caps, generator
// retry budgets). Kept distinct from logic errors so harnesses can count
// capacity events separately from real disagreements.
class capacity_error : public std::runtime_error {
 public:
  explicit capacity_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when an internal invariant that the algorithms guarantee by
// construction fails anyway. Never caught inside the library: a throw here
// means a bug, and it must surface loudly instead of degrading the answer.
class internal_error : public std::logic_error {
 public:
  explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

struct ValidationReport {
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
};

// Vertices, half-edges and edges are dense integer ids (0..count-1).
// Names are carried only for serialization and diagnostics; the empty
// string means "unnamed", and helpers fall back to the numeric id.
struct StarGraph {
  std::vector<std::vector<HalfEdgeId>> rotation;  // per vertex, cyclic representative
  std::vector<std::array<HalfEdgeId, 2>> edge;    // per edge, its two half-edges
  std::vector<std::string> vertex_name;
  std::vector<std::string> half_name;

  // Derived lookups, filled by reindex(); valid only for structurally sound
  // graphs.
  std::vector<VertexId> half_vertex;  // half-edge -> vertex
  std::vector<int> half_pos;          // half-edge -> position in its rotation
  std::vector<EdgeId> half_edge_id;   // half-edge -> edge containing it

  int vertex_count() const { return static_cast<int>(rotation.size()); }
  int edge_count() const { return static_cast<int>(edge.size()); }
  int half_count() const { return 2 * edge_count(); }
  int degree(VertexId v) const { return static_cast<int>(rotation[v].size()); }

  HalfEdgeId other_end(EdgeId e, HalfEdgeId h) const {
    return edge[e][0] == h ? edge[e][1] : edge[e][0];
  }
  VertexId endpoint(EdgeId e, int side) const { return half_vertex[edge[e][side]]; }
  bool is_loop(EdgeId e) const { return endpoint(e, 0) == endpoint(e, 1); }

  std::string vname(VertexId v) const {
    if (v >= 0 && v < vertex_count() && static_cast<size_t>(v) < vertex_name.size() &&
        !vertex_name[v].empty())
      return vertex_name[v];
    return "v" + std::to_string(v);
  }
  std::string hname(HalfEdgeId h) const {
    if (h >= 0 && static_cast<size_t>(h) < half_name.size() && !half_name[h].empty())
      return half_name[h];
    return "h" + std::to_string(h);
  }

  void reindex();  // throws std::invalid_argument on structurally broken input
};

// Reports every invariant violation instead of stopping at the first one.
// An empty report means the graph is safe input for all other operations.
inline ValidationReport validate(const StarGraph& g) {
  ValidationReport rep;
  const int half_total = g.half_count();
  std::vector<int> in_rotation(half_total, 0), in_edges(half_total, 0);

  int rotation_entries = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.rotation[v].empty())
      rep.problems.push_back("vertex " + g.vname(v) + " has an empty rotation");
    for (HalfEdgeId h : g.rotation[v]) {
      ++rotation_entries;
      if (h < 0 || h >= half_total) {
        rep.problems.push_back("vertex " + g.vname(v) + " lists half-edge id " +
                               std::to_string(h) + " outside 0.." +
                               std::to_string(half_total - 1));
        continue;
      }
      if (++in_rotation[h] == 2)
        rep.problems.push_back("half-edge " + g.hname(h) + " occurs in more than one rotation slot");
    }
  }
  if (rotation_entries != half_total)
    rep.problems.push_back("rotations list " + std::to_string(rotation_entries) +
                           " half-edges but the edges define " + std::to_string(half_total));

  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto& pair = g.edge[e];
    if (pair[0] == pair[1]) {
      rep.problems.push_back("edge " + std::to_string(e) +
                             " repeats the half-edge " + std::to_string(pair[0]) +
                             "; an edge needs two distinct half-edges (loops use two ids at one vertex)");
      continue;
    }
    for (HalfEdgeId h : pair) {
      if (h < 0 || h >= half_total) {
        rep.problems.push_back("edge " + std::to_string(e) + " references half-edge id " +
                               std::to_string(h) + " outside 0.." + std::to_string(half_total - 1));
        continue;
      }
      if (++in_edges[h] == 2)
        rep.problems.push_back("half-edge " + g.hname(h) + " occurs in more than one edge");
    }
  }

  for (HalfEdgeId h = 0; h < half_total; ++h) {
    if (in_rotation[h] == 0)
      rep.problems.push_back("half-edge " + g.hname(h) + " appears in no rotation");
    if (in_edges[h] == 0)
      rep.problems.push_back("half-edge " + g.hname(h) + " appears in no edge");
  }
  return rep;
}

inline void StarGraph::reindex() {
  ValidationReport rep = validate(*this);
  if (!rep.ok())
    throw std::invalid_argument("invalid star-graph: " + rep.problems.front());
  const int half_total = half_count();
  half_vertex.assign(half_total, -1);
  half_pos.assign(half_total, -1);
  half_edge_id.assign(half_total, -1);
  for (VertexId v = 0; v < vertex_count(); ++v)
    for (int i = 0; i < degree(v); ++i) {
      half_vertex[rotation[v][i]] = v;
      half_pos[rotation[v][i]] = i;
    }
  for (EdgeId e = 0; e < edge_count(); ++e)
    for (HalfEdgeId h : edge[e]) half_edge_id[h] = e;
}

// Convenience constructor for tests and generators: default names, indexes
// built immediately, invalid input throws.
inline StarGraph make_star_graph(std::vector<std::vector<HalfEdgeId>> rotations,
                                 std::vector<std::array<HalfEdgeId, 2>> edges) {
  StarGraph g;
  g.rotation = std::move(rotations);
  g.edge = std::move(edges);
  g.reindex();
  return g;
}

inline bool is_even(const StarGraph& g) {
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) % 2 != 0) return false;
  return true;
}

namespace detail {
// Lexicographically smallest sequence among all cyclic shifts of both
// reading directions. Canonical form of an unoriented cyclic order.
inline std::vector<HalfEdgeId> canonical_cycle(const std::vector<HalfEdgeId>& seq) {
  const int n = static_cast<int>(seq.size());
  if (n == 0) return {};
  std::vector<HalfEdgeId> best;
  for (int dir = 0; dir < 2; ++dir) {
    std::vector<HalfEdgeId> base = seq;
    if (dir == 1) std::reverse(base.begin(), base.end());
    for (int s = 0; s < n; ++s) {
      std::vector<HalfEdgeId> cand(n);
      for (int i = 0; i < n; ++i) cand[i] = base[(s + i) % n];
      if (best.empty() || cand < best) best = std::move(cand);
    }
  }
  return best;
}
}  // namespace detail

// Structural equality: identical ids everywhere, rotations compared as
// unoriented cyclic sequences (each vertex independently).
inline bool star_graph_equal(const StarGraph& a, const StarGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  for (EdgeId e = 0; e < a.edge_count(); ++e) {
    auto pa = a.edge[e], pb = b.edge[e];
    if (pa[0] > pa[1]) std::swap(pa[0], pa[1]);
    if (pb[0] > pb[1]) std::swap(pb[0], pb[1]);
    if (pa != pb) return false;
  }
  for (VertexId v = 0; v < a.vertex_count(); ++v)
    if (detail::canonical_cycle(a.rotation[v]) != detail::canonical_cycle(b.rotation[v]))
      return false;
  return true;
}

// ---------------------------------------------------------------------------
// Walks

// One traversal step. reversed == false walks the edge from its first listed
// half-edge to its second.
struct Step {
  EdgeId edge = -1;
  bool reversed = false;
  bool operator==(const Step&) const = default;
};

struct Walk {
  std::vector<Step> steps;
  bool closed = true;
  int size() const { return static_cast<int>(steps.size()); }
  bool operator==(const Walk&) const = default;
};

inline HalfEdgeId step_from_half(const StarGraph& g, const Step& s) {
  return g.edge[s.edge][s.reversed ? 1 : 0];
}
inline HalfEdgeId step_to_half(const StarGraph& g, const Step& s) {
  return g.edge[s.edge][s.reversed ? 0 : 1];
}
inline VertexId step_from(const StarGraph& g, const Step& s) {
  return g.half_vertex[step_from_half(g, s)];
}
inline VertexId step_to(const StarGraph& g, const Step& s) {
  return g.half_vertex[step_to_half(g, s)];
}

// Structural soundness: edge ids in range, consecutive steps meet at a
// vertex (cyclically for closed walks), and no edge is traversed twice.
// Returns a description of the first problem, or nothing when the walk is
// fine.
inline std::optional<std::string> walk_problem(const StarGraph& g, const Walk& w) {
  if (w.steps.empty()) return "walk has no steps";
  std::vector<char> used(g.edge_count(), 0);
  for (const Step& s : w.steps) {
    if (s.edge < 0 || s.edge >= g.edge_count())
      return "walk references edge id " + std::to_string(s.edge) + " outside the graph";
    if (used[s.edge]) return "walk traverses edge " + std::to_string(s.edge) + " twice";
    used[s.edge] = 1;
  }
  const int k = w.size();
  const int junctions = w.closed ? k : k - 1;
  for (int i = 0; i < junctions; ++i) {
    const Step& a = w.steps[i];
    const Step& b = w.steps[(i + 1) % k];
    if (step_to(g, a) != step_from(g, b))
      return "steps " + std::to_string(i) + " and " + std::to_string((i + 1) % k) +
             " do not meet at a common vertex";
  }
  return std::nullopt;
}

inline void require_walk(const StarGraph& g, const Walk& w) {
  if (auto p = walk_problem(g, w))
    throw std::invalid_argument("malformed walk: " + *p);
}

inline VertexId walk_source(const StarGraph& g, const Walk& w) {
  return step_from(g, w.steps.front());
}
inline VertexId walk_target(const StarGraph& g, const Walk& w) {
  return step_to(g, w.steps.back());
}

// A visit pairs the half-edge the walk arrives on with the half-edge it
// departs on. Visit i sits at the junction between step i and step i+1; for
// closed walks the wrap-around junction comes last (visit size-1).
struct Visit {
  VertexId vertex = -1;
  HalfEdgeId in_half = -1;
  HalfEdgeId out_half = -1;
};

inline std::vector<Visit> walk_visits(const StarGraph& g, const Walk& w) {
  std::vector<Visit> out;
  const int k = w.size();
  const int junctions = w.closed ? k : k - 1;
  out.reserve(junctions);
  for (int i = 0; i < junctions; ++i) {
    const Step& a = w.steps[i];
    const Step& b = w.steps[(i + 1) % k];
    out.push_back({step_to(g, a), step_to_half(g, a), step_from_half(g, b)});
  }
  return out;
}

// Vertex sequence along the walk: one entry per visit for closed walks,
// endpoints included for open ones.
inline std::vector<VertexId> walk_vertices(const StarGraph& g, const Walk& w) {
  std::vector<VertexId> out;
  if (!w.closed) out.push_back(walk_source(g, w));
  for (const Visit& v : walk_visits(g, w)) out.push_back(v.vertex);
  if (!w.closed) out.push_back(walk_target(g, w));
  return out;
}

// Total number of repeated vertex hits: a simple walk scores 0.
inline int walk_revisits(const StarGraph& g, const Walk& w) {
  std::map<VertexId, int> cnt;
  for (VertexId v : walk_vertices(g, w)) ++cnt[v];
  int r = 0;
  for (auto& [v, c] : cnt) r += c - 1;
  return r;
}

inline bool walk_simple(const StarGraph& g, const Walk& w) {
  return walk_revisits(g, w) == 0;
}

inline Walk reverse_walk(Walk w) {
  std::reverse(w.steps.begin(), w.steps.end());
  for (Step& s : w.steps) s.reversed = !s.reversed;
  return w;
}

// ---------------------------------------------------------------------------
// Chord diagrams and transversal intersections

// Chord endpoints are positions in the vertex's rotation representative,
// stored sorted. walk/visit identify the owner.
struct Chord {
  std::array<int, 2> pos = {-1, -1};
  int walk = -1;
  int visit = -1;
  bool operator==(const Chord&) const = default;
};

struct VertexChordDiagram {
  VertexId vertex = -1;
  int circle_size = 0;
  std::vector<Chord> chords;
};

// Chords {a0,a1} and {b0,b1} on a circle of n positions cross exactly when
// one endpoint of b lies strictly inside the arc from a0 to a1 and the other
// strictly inside the complementary arc. All four positions must be
// distinct. The test is invariant under rotating or reflecting the circle,
// which makes every operation built on it independent of the stored rotation
// representative.
inline bool chords_cross(int n, std::array<int, 2> a, std::array<int, 2> b) {
  if (a[0] == a[1] || b[0] == b[1] || a[0] == b[0] || a[0] == b[1] || a[1] == b[0] ||
      a[1] == b[1])
    throw std::invalid_argument("chords_cross needs four distinct positions");
  auto inside = [&](int x) {
    // strictly between a[0] and a[1] walking forward from a[0]
    int span = (a[1] - a[0] + n) % n;
    int off = (x - a[0] + n) % n;
    return off > 0 && off < span;
  };
  return inside(b[0]) != inside(b[1]);
}

namespace detail {
inline void check_walk_list(const StarGraph& g, const std::vector<Walk>& walks) {
  std::vector<int> owner(g.edge_count(), -1);
  for (size_t i = 0; i < walks.size(); ++i) {
    if (auto p = walk_problem(g, walks[i]))
      throw std::invalid_argument("walk " + std::to_string(i) + ": " + *p);
    for (const Step& s : walks[i].steps) {
      if (owner[s.edge] >= 0 && owner[s.edge] != static_cast<int>(i))
        throw std::invalid_argument("walks " + std::to_string(owner[s.edge]) + " and " +
                                    std::to_string(i) + " share edge " + std::to_string(s.edge));
      owner[s.edge] = static_cast<int>(i);
    }
  }
}
}  // namespace detail

// One chord per visit of each walk at v. Requires the walks to be pairwise
// edge-disjoint, which guarantees all chord endpoints are distinct positions.
inline VertexChordDiagram chord_diagram(const StarGraph& g, VertexId v,
                                        const std::vector<Walk>& walks) {
  detail::check_walk_list(g, walks);
  VertexChordDiagram d;
  d.vertex = v;
  d.circle_size = g.degree(v);
  for (size_t wi = 0; wi < walks.size(); ++wi) {
    auto visits = walk_visits(g, walks[wi]);
    for (size_t vi = 0; vi < visits.size(); ++vi) {
      if (visits[vi].vertex != v) continue;
      std::array<int, 2> pos = {g.half_pos[visits[vi].in_half], g.half_pos[visits[vi].out_half]};
      if (pos[0] > pos[1]) std::swap(pos[0], pos[1]);
      d.chords.push_back({pos, static_cast<int>(wi), static_cast<int>(vi)});
    }
  }
  return d;
}

struct CrossingRecord {
  VertexId vertex = -1;
  Chord first;   // owned by the first walk argument
  Chord second;  // owned by the second walk argument
};

struct TransversalReport {
  bool edge_disjoint = true;
  EdgeId shared_edge = -1;
  std::vector<CrossingRecord> crossings;
  int count() const { return static_cast<int>(crossings.size()); }
};

// All transversal intersections of two edge-disjoint walks, open or closed:
// every pair (chord of a, chord of b) at a common vertex that crosses in the
// vertex chord diagram. Deterministic order: by vertex, then by visit
// indices.
inline TransversalReport transversal_crossings(const StarGraph& g, const Walk& a,
                                               const Walk& b) {
  require_walk(g, a);
  require_walk(g, b);
  TransversalReport rep;
  {
    std::vector<char> in_a(g.edge_count(), 0);
    for (const Step& s : a.steps) in_a[s.edge] = 1;
    for (const Step& s : b.steps)
      if (in_a[s.edge]) {
        rep.edge_disjoint = false;
        if (rep.shared_edge < 0 || s.edge < rep.shared_edge) rep.shared_edge = s.edge;
      }
  }
  if (!rep.edge_disjoint) return rep;

  std::map<VertexId, std::pair<std::vector<Chord>, std::vector<Chord>>> per_vertex;
  auto collect = [&](const Walk& w, int which) {
    auto visits = walk_visits(g, w);
    for (size_t vi = 0; vi < visits.size(); ++vi) {
      std::array<int, 2> pos = {g.half_pos[visits[vi].in_half], g.half_pos[visits[vi].out_half]};
      if (pos[0] > pos[1]) std::swap(pos[0], pos[1]);
      Chord c{pos, which, static_cast<int>(vi)};
      auto& slot = per_vertex[visits[vi].vertex];
      (which == 0 ? slot.first : slot.second).push_back(c);
    }
  };
  collect(a, 0);
  collect(b, 1);

  for (auto& [v, chords] : per_vertex) {
    const int n = g.degree(v);
    for (const Chord& ca : chords.first)
      for (const Chord& cb : chords.second)
        if (chords_cross(n, ca.pos, cb.pos)) rep.crossings.push_back({v, ca, cb});
  }
  return rep;
}

inline int transversal_count(const StarGraph& g, const Walk& a, const Walk& b) {
  TransversalReport rep = transversal_crossings(g, a, b);
  if (!rep.edge_disjoint)
    throw std::invalid_argument("transversal_count: walks share edge " +
                                std::to_string(rep.shared_edge));
  return rep.count();
}

struct ObstructionCheck {
  bool ok = false;
  std::string reason;  // populated when not ok
  int count = -1;      // transversal count, when defined
  std::optional<CrossingRecord> crossing;  // the unique crossing, when ok
};

// A Vassiliev obstruction is a pair of edge-disjoint closed walks with
// exactly one transversal intersection. Failures come back as a reason
// instead of an exception so callers can report them.
inline ObstructionCheck check_vassiliev_obstruction(const StarGraph& g, const Walk& c1,
                                                    const Walk& c2) {
  ObstructionCheck res;
  if (!c1.closed || !c2.closed) {
    res.reason = "both walks must be closed";
    return res;
  }
  if (auto p = walk_problem(g, c1)) {
    res.reason = "first cycle: " + *p;
    return res;
  }
  if (auto p = walk_problem(g, c2)) {
    res.reason = "second cycle: " + *p;
    return res;
  }
  TransversalReport rep = transversal_crossings(g, c1, c2);
  if (!rep.edge_disjoint) {
    res.reason = "cycles share edge " + std::to_string(rep.shared_edge);
    return res;
  }
  res.count = rep.count();
  if (res.count != 1) {
    res.reason = "transversal count is " + std::to_string(res.count) + ", need exactly 1";
    return res;
  }
  res.ok = true;
  res.crossing = rep.crossings.front();
  return res;
}

inline bool is_vassiliev_obstruction(const StarGraph& g, const Walk& c1, const Walk& c2) {
  return check_vassiliev_obstruction(g, c1, c2).ok;
}

namespace detail {
// Both closed sub-walks obtained by cutting a closed walk at two junctions.
// Cut position p means "between steps p-1 and p".
inline std::pair<Walk, Walk> split_closed_walk(const Walk& w, int p, int q) {
  const int k = w.size();
  if (p > q) std::swap(p, q);
  Walk w1, w2;
  w1.closed = w2.closed = true;
  for (int i = p; i < q; ++i) w1.steps.push_back(w.steps[i]);
  for (int i = q; i < k; ++i) w2.steps.push_back(w.steps[i]);
  for (int i = 0; i < p; ++i) w2.steps.push_back(w.steps[i]);
  return {w1, w2};
}
}  // namespace detail

// Reduces an obstruction whose cycles revisit vertices to one on simple
// cycles. Each round cuts one cycle at two visits of a revisited vertex and
// keeps the half that still forms an obstruction with the other cycle; the
// kept half uses a strict subset of the old edges, so the total revisit
// count drops every round and the loop terminates. Moves are scanned
// deterministically: first cycle first, vertices in ascending order, visit
// pairs lexicographically, and of the two halves the one starting at the
// earlier cut first.
inline std::pair<Walk, Walk> simplify_obstruction(const StarGraph& g, const Walk& c1,
                                                  const Walk& c2) {
  {
    ObstructionCheck chk = check_vassiliev_obstruction(g, c1, c2);
    if (!chk.ok)
      throw std::invalid_argument("simplify_obstruction: input is not an obstruction: " +
                                  chk.reason);
  }
  std::array<Walk, 2> cur = {c1, c2};
  int total = walk_revisits(g, cur[0]) + walk_revisits(g, cur[1]);
  while (total > 0) {
    bool moved = false;
    for (int wi = 0; wi < 2 && !moved; ++wi) {
      const Walk& w = cur[wi];
      auto visits = walk_visits(g, w);
      std::map<VertexId, std::vector<int>> at;  // vertex -> visit indices, ascending
      for (size_t i = 0; i < visits.size(); ++i) at[visits[i].vertex].push_back(static_cast<int>(i));
      for (auto& [v, idx] : at) {
        if (idx.size() < 2 || moved) continue;
        for (size_t a = 0; a < idx.size() && !moved; ++a)
          for (size_t b = a + 1; b < idx.size() && !moved; ++b) {
            // visit i sits between steps i and i+1, so the cut goes at i+1
            auto [h1, h2] = detail::split_closed_walk(w, (idx[a] + 1) % w.size(),
                                                      (idx[b] + 1) % w.size());
            for (const Walk& half : {h1, h2}) {
              if (half.steps.empty()) continue;
              std::array<Walk, 2> cand = cur;
              cand[wi] = half;
              if (!check_vassiliev_obstruction(g, cand[0], cand[1]).ok) continue;
              int t = walk_revisits(g, cand[0]) + walk_revisits(g, cand[1]);
              if (t >= total) continue;
              cur = cand;
              total = t;
              moved = true;
              break;
            }
          }
      }
    }
    if (!moved)
      throw internal_error(
          "simplify_obstruction: no revisit-reducing cut preserves the obstruction");
  }
  return {cur[0], cur[1]};
}

}  // namespace starplan
