#pragma once

// Ordinary (rotation-free) multigraphs, the web-graph blow-up of a
// star-graph, the projection back, and the transversal behaviour of
// projected path pairs.
//
// The web of a vertex v of degree d is a wheel: one center, d circle
// vertices in the rotation's cyclic order, d spokes, and a cycle through the
// circle vertices. Degenerate rims keep the edge count at exactly d: a
// degree-2 web gets two parallel circle edges, a degree-1 web one circle
// loop. Each original edge survives as a "through" edge joining the circle
// vertices that carry its two half-edges, so
//   |V(web)| = |V| + sum(deg),   |E(web)| = |E| + 2 * sum(deg).

#include "starplan/core.hpp"

namespace starplan {

struct OrdinaryGraph {
  int n = 0;  // vertices are 0..n-1
  std::vector<std::array<VertexId, 2>> edge;
  std::vector<std::string> vertex_name;

  int vertex_count() const { return n; }
  int edge_count() const { return static_cast<int>(edge.size()); }
  bool is_loop(EdgeId e) const { return edge[e][0] == edge[e][1]; }
  VertexId other(EdgeId e, VertexId v) const { return edge[e][0] == v ? edge[e][1] : edge[e][0]; }
  std::string vname(VertexId v) const {
    if (v >= 0 && static_cast<size_t>(v) < vertex_name.size() && !vertex_name[v].empty())
      return vertex_name[v];
    return "n" + std::to_string(v);
  }
};

inline std::optional<std::string> graph_problem(const OrdinaryGraph& g) {
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    for (VertexId v : g.edge[e])
      if (v < 0 || v >= g.n)
        return "edge " + std::to_string(e) + " references vertex " + std::to_string(v) +
               " outside 0.." + std::to_string(g.n - 1);
  return std::nullopt;
}

// Loops count twice, as usual.
inline std::vector<int> degrees(const OrdinaryGraph& g) {
  std::vector<int> d(g.n, 0);
  for (const auto& e : g.edge) {
    ++d[e[0]];
    ++d[e[1]];
  }
  return d;
}

// Per-vertex incident edge ids; loops appear twice at their vertex.
inline std::vector<std::vector<EdgeId>> incident_edges(const OrdinaryGraph& g) {
  std::vector<std::vector<EdgeId>> inc(g.n);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    inc[g.edge[e][0]].push_back(e);
    inc[g.edge[e][1]].push_back(e);
  }
  return inc;
}

inline std::vector<int> component_labels(const OrdinaryGraph& g) {
  std::vector<int> comp(g.n, -1);
  auto inc = incident_edges(g);
  int next = 0;
  for (VertexId s = 0; s < g.n; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = next;
    std::vector<VertexId> stack{s};
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (EdgeId e : inc[v]) {
        VertexId u = g.other(e, v);
        if (comp[u] < 0) {
          comp[u] = next;
          stack.push_back(u);
        }
      }
    }
    ++next;
  }
  return comp;
}

inline bool is_connected(const OrdinaryGraph& g) {
  if (g.n <= 1) return true;
  auto comp = component_labels(g);
  return *std::max_element(comp.begin(), comp.end()) == 0;
}

// Walks reuse the core Step/Walk types; only the endpoint semantics differ.
inline VertexId ostep_from(const OrdinaryGraph& g, const Step& s) {
  return g.edge[s.edge][s.reversed ? 1 : 0];
}
inline VertexId ostep_to(const OrdinaryGraph& g, const Step& s) {
  return g.edge[s.edge][s.reversed ? 0 : 1];
}

inline std::optional<std::string> walk_problem(const OrdinaryGraph& g, const Walk& w) {
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
  for (int i = 0; i < junctions; ++i)
    if (ostep_to(g, w.steps[i]) != ostep_from(g, w.steps[(i + 1) % k]))
      return "steps " + std::to_string(i) + " and " + std::to_string((i + 1) % k) +
             " do not meet at a common vertex";
  return std::nullopt;
}

inline std::vector<VertexId> walk_vertices(const OrdinaryGraph& g, const Walk& w) {
  std::vector<VertexId> out;
  if (!w.closed) out.push_back(ostep_from(g, w.steps.front()));
  const int k = w.size();
  const int junctions = w.closed ? k : k - 1;
  for (int i = 0; i < junctions; ++i) out.push_back(ostep_to(g, w.steps[i]));
  if (!w.closed) out.push_back(ostep_to(g, w.steps.back()));
  return out;
}

inline bool walk_simple(const OrdinaryGraph& g, const Walk& w) {
  auto vs = walk_vertices(g, w);
  std::sort(vs.begin(), vs.end());
  return std::adjacent_find(vs.begin(), vs.end()) == vs.end();
}

// The underlying multigraph of a star-graph. Edge ids and endpoint sides are
// preserved, so a Walk is valid on the star-graph exactly when it is valid
// here, with identical step endpoints.
inline OrdinaryGraph underlying_graph(const StarGraph& g) {
  OrdinaryGraph o;
  o.n = g.vertex_count();
  o.vertex_name = g.vertex_name;
  o.edge.reserve(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    o.edge.push_back({g.half_vertex[g.edge[e][0]], g.half_vertex[g.edge[e][1]]});
  return o;
}

// ---------------------------------------------------------------------------
// Web graphs

enum class WebEdgeKind { through, spoke, circle };

struct WebGraph {
  StarGraph star;       // the source star-graph
  OrdinaryGraph graph;  // the blow-up, treated as an ordinary graph

  // forward maps, indexed by original ids
  std::vector<VertexId> center;                     // original vertex -> center
  std::vector<std::vector<VertexId>> circle_vertex; // original vertex -> circle vertices by position
  std::vector<std::vector<EdgeId>> spoke;           // original vertex -> spokes by position
  std::vector<std::vector<EdgeId>> circle_edge;     // original vertex -> rim edges
  std::vector<EdgeId> through;                      // original edge -> through edge (same id)

  // reverse maps, indexed by web-graph ids
  std::vector<VertexId> vertex_web;   // web vertex -> original vertex
  std::vector<int> vertex_half;       // circle vertex -> carried half-edge, centers -1
  std::vector<WebEdgeKind> edge_kind;
  std::vector<int> edge_owner;        // through -> original edge, spoke/circle -> original vertex

  bool is_center(VertexId web_vertex) const { return vertex_half[web_vertex] < 0; }
};

// Blows every vertex up into its web. Through edges keep the original edge
// ids and their endpoint order follows the half-edge order, so projecting a
// through step back to the star-graph preserves the direction flag as-is.
inline WebGraph build_web_graph(const StarGraph& g) {
  {
    ValidationReport rep = validate(g);
    if (!rep.ok())
      throw std::invalid_argument("build_web_graph: invalid star-graph: " + rep.problems.front());
  }
  WebGraph w;
  w.star = g;
  OrdinaryGraph& o = w.graph;

  w.center.resize(g.vertex_count());
  w.circle_vertex.resize(g.vertex_count());
  w.spoke.resize(g.vertex_count());
  w.circle_edge.resize(g.vertex_count());
  w.through.resize(g.edge_count());

  std::vector<VertexId> half_circle(g.half_count(), -1);  // half-edge -> its circle vertex
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const int d = g.degree(v);
    w.center[v] = o.n;
    o.vertex_name.push_back(g.vname(v) + ".c");
    w.vertex_web.push_back(v);
    w.vertex_half.push_back(-1);
    ++o.n;
    for (int i = 0; i < d; ++i) {
      HalfEdgeId h = g.rotation[v][i];
      half_circle[h] = o.n;
      w.circle_vertex[v].push_back(o.n);
      o.vertex_name.push_back(g.vname(v) + "." + std::to_string(i));
      w.vertex_web.push_back(v);
      w.vertex_half.push_back(h);
      ++o.n;
    }
  }

  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    w.through[e] = static_cast<EdgeId>(o.edge.size());
    o.edge.push_back({half_circle[g.edge[e][0]], half_circle[g.edge[e][1]]});
    w.edge_kind.push_back(WebEdgeKind::through);
    w.edge_owner.push_back(e);
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const int d = g.degree(v);
    const auto& ring = w.circle_vertex[v];
    for (int i = 0; i < d; ++i) {
      w.spoke[v].push_back(static_cast<EdgeId>(o.edge.size()));
      o.edge.push_back({w.center[v], ring[i]});
      w.edge_kind.push_back(WebEdgeKind::spoke);
      w.edge_owner.push_back(v);
    }
    // rim: a cycle for d >= 3, two parallel edges for d == 2, a loop for
    // d == 1; in every case d edges
    for (int i = 0; i < d; ++i) {
      w.circle_edge[v].push_back(static_cast<EdgeId>(o.edge.size()));
      o.edge.push_back({ring[i], ring[(i + 1) % d]});
      w.edge_kind.push_back(WebEdgeKind::circle);
      w.edge_owner.push_back(v);
    }
  }
  return w;
}

// ---------------------------------------------------------------------------
// Projection

// Image of a web-graph walk in the star-graph: spoke and circle steps are
// erased, through steps keep their edge id and direction. A walk that starts
// and ends inside the same web projects to a closed walk; one that never
// leaves a web collapses to that vertex.
struct ProjectedWalk {
  Walk walk;                              // empty steps when collapsed
  std::optional<VertexId> collapsed_at;   // the vertex a web-internal walk shrinks to
  bool collapsed() const { return collapsed_at.has_value(); }
};

inline ProjectedWalk project_walk(const WebGraph& w, const Walk& walk_in_web) {
  if (auto p = walk_problem(w.graph, walk_in_web))
    throw std::invalid_argument("project_walk: " + *p);
  ProjectedWalk out;
  const EdgeId through_count = w.star.edge_count();  // through edges come first
  for (const Step& s : walk_in_web.steps)
    if (s.edge < through_count) out.walk.steps.push_back(s);
  if (out.walk.steps.empty()) {
    out.collapsed_at = w.vertex_web[ostep_from(w.graph, walk_in_web.steps.front())];
    out.walk.closed = true;
    return out;
  }
  if (walk_in_web.closed) {
    out.walk.closed = true;
  } else {
    VertexId a = w.vertex_web[ostep_from(w.graph, walk_in_web.steps.front())];
    VertexId b = w.vertex_web[ostep_to(w.graph, walk_in_web.steps.back())];
    out.walk.closed = (a == b);
  }
  if (auto p = walk_problem(w.star, out.walk))
    throw internal_error("project_walk produced a broken image: " + *p);
  return out;
}

// ---------------------------------------------------------------------------
// Transversal behaviour of projected internally disjoint paths
//
// Inside the disk of one web, the arcs of two vertex-disjoint paths cannot
// alternate around the rim, so chords coming from two mid-path passages
// never cross. The only transversal intersections the projections can pick
// up involve a closing chord: either one projection closes and the other
// passes between its ends (separated ends), or both close in the same web
// and their end pairs alternate.

enum class LemmaVerdict { no_transversal, closed_separated_ends, closed_alternating_ends };

struct LemmaReport {
  LemmaVerdict verdict = LemmaVerdict::no_transversal;
  int count = 0;               // transversal count of the two projections
  int closing_crossings = 0;   // crossings involving at least one closing chord
  ProjectedWalk proj1, proj2;
};

inline LemmaReport check_projection_lemma(const WebGraph& w, const Walk& p1, const Walk& p2) {
  for (const Walk* p : {&p1, &p2}) {
    if (p->closed) throw std::invalid_argument("check_projection_lemma expects open paths");
    if (auto prob = walk_problem(w.graph, *p))
      throw std::invalid_argument("check_projection_lemma: " + *prob);
    if (!walk_simple(w.graph, *p))
      throw std::invalid_argument("check_projection_lemma expects simple paths");
  }
  {
    // internal disjointness: neither path's interior meets the other's
    auto vs1 = walk_vertices(w.graph, p1);
    auto vs2 = walk_vertices(w.graph, p2);
    std::vector<VertexId> int1(vs1.begin() + 1, vs1.end() - 1);
    std::vector<VertexId> int2(vs2.begin() + 1, vs2.end() - 1);
    for (VertexId a : int1)
      for (VertexId b : int2)
        if (a == b)
          throw std::invalid_argument("paths intersect internally at web vertex " +
                                      w.graph.vname(a));
    std::vector<char> used(w.graph.edge_count(), 0);
    for (const Step& s : p1.steps) used[s.edge] = 1;
    for (const Step& s : p2.steps)
      if (used[s.edge])
        throw std::invalid_argument("paths share web edge " + std::to_string(s.edge));
  }

  LemmaReport rep;
  rep.proj1 = project_walk(w, p1);
  rep.proj2 = project_walk(w, p2);
  if (rep.proj1.collapsed() || rep.proj2.collapsed()) return rep;

  TransversalReport tv = transversal_crossings(w.star, rep.proj1.walk, rep.proj2.walk);
  if (!tv.edge_disjoint)
    throw internal_error("projections of edge-disjoint paths share an edge");
  rep.count = tv.count();

  // the closing chord, when a projection closes, is its wrap-around visit,
  // which core lists last
  const int close1 = rep.proj1.walk.closed ? rep.proj1.walk.size() - 1 : -1;
  const int close2 = rep.proj2.walk.closed ? rep.proj2.walk.size() - 1 : -1;
  bool both_ends_alternate = false;
  for (const CrossingRecord& c : tv.crossings) {
    bool c1_closing = c.first.visit == close1;
    bool c2_closing = c.second.visit == close2;
    if (c1_closing || c2_closing) ++rep.closing_crossings;
    if (c1_closing && c2_closing) both_ends_alternate = true;
  }
  if (rep.count == 0)
    rep.verdict = LemmaVerdict::no_transversal;
  else
    rep.verdict = both_ends_alternate ? LemmaVerdict::closed_alternating_ends
                                      : LemmaVerdict::closed_separated_ends;
  return rep;
}

}  // namespace starplan
