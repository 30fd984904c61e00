#pragma once

// JSON documents for star-graphs and certificates, the self-contained
// certificate verifier, and DOT export of web graphs.
//
// Documents carry names, not internal ids: a star-graph document lists each
// vertex with its rotation as half-edge id strings plus the edge list as
// pairs of those strings. Parsing assigns dense internal ids and keeps the
// strings as names, so reserializing a parsed document is byte-identical.
// When the half-edge ids are literally "h0".."h{2m-1}" the digits become
// the internal ids, which makes parse(serialize(g)) reproduce an unnamed
// graph id-for-id.
//
// Certificate verification never touches the decision procedures. Planar
// certificates are checked with the rotation-system validator, genus-zero
// face tracing, and the equal-or-reversed comparison against the stored
// rotations; nonplanar ones with the obstruction and embedded-K3,3
// validators. Outcomes use the CLI exit-code convention: 0 valid, 1 a
// well-formed certificate that fails validation, 2 malformed input or a
// name that does not resolve in the graph.

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "criterion.hpp"

#include "json.hpp"

namespace starplan {

using Json = nlohmann::ordered_json;

inline Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("not valid JSON: ") + e.what());
  }
}

inline std::string write_json(const Json& doc) { return doc.dump(2) + "\n"; }

namespace detail {

inline const Json& want_field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw std::invalid_argument(where + " must be a JSON object");
  auto it = obj.find(key);
  if (it == obj.end())
    throw std::invalid_argument(where + " is missing the field \"" + std::string(key) + "\"");
  return *it;
}

inline void reject_unknown_fields(const Json& obj, std::initializer_list<const char*> allowed,
                                  const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* key : allowed) known = known || it.key() == key;
    if (!known)
      throw std::invalid_argument("unknown field \"" + it.key() + "\" in " + where);
  }
}

inline std::string want_string(const Json& j, const std::string& where) {
  if (!j.is_string()) throw std::invalid_argument(where + " must be a string");
  return j.get<std::string>();
}

inline const Json& want_array(const Json& j, const std::string& where) {
  if (!j.is_array()) throw std::invalid_argument(where + " must be an array");
  return j;
}

inline int want_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw std::invalid_argument(where + " must be an integer");
  long long v = j.get<long long>();
  if (v < -1000000000 || v > 1000000000)
    throw std::invalid_argument(where + " is out of range");
  return static_cast<int>(v);
}

inline bool want_bool(const Json& j, const std::string& where) {
  if (!j.is_boolean()) throw std::invalid_argument(where + " must be a boolean");
  return j.get<bool>();
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Star-graph documents

inline Json star_graph_to_json(const StarGraph& g) {
  Json doc = Json::object();
  Json verts = Json::array();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    Json jv = Json::object();
    jv["id"] = g.vname(v);
    Json rot = Json::array();
    for (HalfEdgeId h : g.rotation[v]) rot.push_back(g.hname(h));
    jv["rotation"] = std::move(rot);
    verts.push_back(std::move(jv));
  }
  doc["vertices"] = std::move(verts);
  Json edges = Json::array();
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    edges.push_back(Json::array({g.hname(g.edge[e][0]), g.hname(g.edge[e][1])}));
  doc["edges"] = std::move(edges);
  return doc;
}

namespace detail {

// "h<digits>" with canonical digits and value below limit
inline std::optional<int> literal_half_id(const std::string& s, size_t limit) {
  if (s.size() < 2 || s.size() > 10 || s[0] != 'h') return std::nullopt;
  if (s[1] == '0' && s.size() > 2) return std::nullopt;
  long long v = 0;
  for (size_t i = 1; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return std::nullopt;
    v = v * 10 + (s[i] - '0');
  }
  if (v >= static_cast<long long>(limit)) return std::nullopt;
  return static_cast<int>(v);
}

}  // namespace detail

inline StarGraph star_graph_from_json(const Json& doc) {
  if (!doc.is_object())
    throw std::invalid_argument("star-graph document must be a JSON object");
  detail::reject_unknown_fields(doc, {"vertices", "edges"}, "star-graph document");
  const Json& jverts =
      detail::want_array(detail::want_field(doc, "vertices", "star-graph document"), "\"vertices\"");
  const Json& jedges =
      detail::want_array(detail::want_field(doc, "edges", "star-graph document"), "\"edges\"");

  std::vector<std::string> vertex_names;
  std::vector<std::vector<std::string>> rot_names;
  std::vector<std::string> half_order;  // first appearance across rotations
  std::map<std::string, int> half_seen;
  std::map<std::string, int> vertex_seen;
  for (size_t vi = 0; vi < jverts.size(); ++vi) {
    const std::string where = "vertices[" + std::to_string(vi) + "]";
    const Json& jv = jverts[vi];
    if (!jv.is_object()) throw std::invalid_argument(where + " must be an object");
    detail::reject_unknown_fields(jv, {"id", "rotation"}, where);
    std::string id = detail::want_string(detail::want_field(jv, "id", where), where + ".id");
    if (!vertex_seen.emplace(id, 1).second)
      throw std::invalid_argument("duplicate vertex id \"" + id + "\"");
    const Json& jrot =
        detail::want_array(detail::want_field(jv, "rotation", where), where + ".rotation");
    std::vector<std::string> names;
    for (size_t k = 0; k < jrot.size(); ++k) {
      std::string h =
          detail::want_string(jrot[k], where + ".rotation[" + std::to_string(k) + "]");
      if (!half_seen.emplace(h, 1).second)
        throw std::invalid_argument("half-edge id \"" + h +
                                    "\" appears in more than one rotation slot");
      half_order.push_back(h);
      names.push_back(std::move(h));
    }
    vertex_names.push_back(std::move(id));
    rot_names.push_back(std::move(names));
  }

  std::vector<std::array<std::string, 2>> edge_names;
  std::map<std::string, int> edge_use;
  for (size_t ei = 0; ei < jedges.size(); ++ei) {
    const std::string where = "edges[" + std::to_string(ei) + "]";
    const Json& je = detail::want_array(jedges[ei], where);
    if (je.size() != 2)
      throw std::invalid_argument(where + " must list exactly two half-edge ids");
    std::array<std::string, 2> pair;
    for (int s = 0; s < 2; ++s) {
      pair[s] = detail::want_string(je[s], where + "[" + std::to_string(s) + "]");
      if (!half_seen.count(pair[s]))
        throw std::invalid_argument(where + " references unknown half-edge id \"" + pair[s] +
                                    "\"");
    }
    if (pair[0] == pair[1])
      throw std::invalid_argument(where + " lists half-edge id \"" + pair[0] + "\" twice");
    for (const std::string& h : pair)
      if (++edge_use[h] > 1)
        throw std::invalid_argument("half-edge id \"" + h + "\" appears in more than one edge");
    edge_names.push_back(std::move(pair));
  }

  const size_t m = edge_names.size();
  if (half_order.size() != 2 * m)
    throw std::invalid_argument("rotations list " + std::to_string(half_order.size()) +
                                " half-edge ids but the edges define " + std::to_string(2 * m));
  for (const std::string& h : half_order)
    if (!edge_use.count(h))
      throw std::invalid_argument("half-edge id \"" + h + "\" appears in no edge");

  std::map<std::string, HalfEdgeId> id_of;
  bool literal = true;
  for (const std::string& h : half_order) {
    auto v = detail::literal_half_id(h, 2 * m);
    if (!v) {
      literal = false;
      break;
    }
    id_of[h] = *v;
  }
  if (!literal) {
    id_of.clear();
    for (size_t i = 0; i < half_order.size(); ++i) id_of[half_order[i]] = static_cast<int>(i);
  }

  StarGraph g;
  g.vertex_name = std::move(vertex_names);
  g.half_name.assign(2 * m, "");
  for (const auto& [name, id] : id_of) g.half_name[id] = name;
  for (const auto& names : rot_names) {
    std::vector<HalfEdgeId> rot;
    for (const std::string& h : names) rot.push_back(id_of[h]);
    g.rotation.push_back(std::move(rot));
  }
  for (const auto& pair : edge_names) g.edge.push_back({id_of[pair[0]], id_of[pair[1]]});
  g.reindex();
  return g;
}

// ---------------------------------------------------------------------------
// Certificate documents

namespace detail {

inline Json steps_to_json(const Walk& w) {
  Json arr = Json::array();
  for (const Step& s : w.steps) {
    Json js = Json::object();
    js["edge"] = s.edge;
    js["reversed"] = s.reversed;
    arr.push_back(std::move(js));
  }
  return arr;
}

inline Json chord_to_json(const Chord& c) {
  Json j = Json::object();
  j["visit"] = c.visit;
  j["positions"] = Json::array({c.pos[0], c.pos[1]});
  return j;
}

// dart 2e+side of the underlying graph sits at the star half g.edge[e][side]
inline std::string dart_label(const StarGraph& g, int dart) {
  return g.hname(g.edge[dart >> 1][dart & 1]);
}

}  // namespace detail

inline Json embedding_certificate(const StarGraph& g, const StarEmbedding& emb) {
  Json doc = Json::object();
  doc["verdict"] = "planar";
  Json jemb = Json::array();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    Json jv = Json::object();
    jv["id"] = g.vname(v);
    Json order = Json::array();
    for (int d : emb.rotation.order[v]) order.push_back(detail::dart_label(g, d));
    jv["order"] = std::move(order);
    jv["reversed"] = static_cast<bool>(emb.reversed_at[v]);
    jemb.push_back(std::move(jv));
  }
  doc["embedding"] = std::move(jemb);
  OrdinaryGraph und = underlying_graph(g);
  Json jfaces = Json::array();
  for (const auto& face : trace_faces(und, emb.rotation)) {
    Json jf = Json::array();
    for (int d : face) jf.push_back(detail::dart_label(g, d));
    jfaces.push_back(std::move(jf));
  }
  doc["faces"] = std::move(jfaces);
  return doc;
}

inline Json witness_certificate(const StarGraph& g, const NonplanarityWitness& w) {
  Json doc = Json::object();
  doc["verdict"] = "nonplanar";
  if (const auto* ob = std::get_if<VassilievObstruction>(&w)) {
    doc["witness"] = "vassiliev";
    doc["cycles"] = Json::array({detail::steps_to_json(ob->c1), detail::steps_to_json(ob->c2)});
    Json cr = Json::object();
    cr["vertex"] = g.vname(ob->crossing.vertex);
    cr["first"] = detail::chord_to_json(ob->crossing.first);
    cr["second"] = detail::chord_to_json(ob->crossing.second);
    doc["crossing"] = std::move(cr);
  } else {
    const auto& k = std::get<EmbeddedK33>(w);
    doc["witness"] = "k33";
    Json br = Json::array();
    for (VertexId v : k.branch) br.push_back(g.vname(v));
    doc["branch"] = std::move(br);
    Json pp = Json::array();
    for (const Walk& p : k.paths) pp.push_back(detail::steps_to_json(p));
    doc["paths"] = std::move(pp);
  }
  return doc;
}

inline Json witness_certificate(const StarGraph& g, const VassilievObstruction& ob) {
  return witness_certificate(g, NonplanarityWitness{ob});
}

// ---------------------------------------------------------------------------
// Certificate verification

struct CertificateOutcome {
  int exit_code = 2;  // 0 valid, 1 invalid, 2 malformed or unresolved names
  std::string message;
  bool valid() const { return exit_code == 0; }
};

namespace detail {

struct NameMaps {
  std::map<std::string, VertexId> vertex;
  std::map<std::string, HalfEdgeId> half;
};

inline NameMaps name_maps(const StarGraph& g) {
  NameMaps m;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!m.vertex.emplace(g.vname(v), v).second)
      throw std::invalid_argument("graph lists two vertices named \"" + g.vname(v) + "\"");
  for (HalfEdgeId h = 0; h < g.half_count(); ++h)
    if (!m.half.emplace(g.hname(h), h).second)
      throw std::invalid_argument("graph lists two half-edges named \"" + g.hname(h) + "\"");
  return m;
}

inline Walk walk_from_json(const StarGraph& g, const Json& arr, const std::string& where,
                           bool closed) {
  want_array(arr, where);
  if (arr.empty()) throw std::invalid_argument(where + " must be a non-empty array of steps");
  Walk w;
  w.closed = closed;
  for (size_t i = 0; i < arr.size(); ++i) {
    const std::string sw = where + "[" + std::to_string(i) + "]";
    const Json& js = arr[i];
    if (!js.is_object()) throw std::invalid_argument(sw + " must be an object");
    reject_unknown_fields(js, {"edge", "reversed"}, sw);
    int e = want_int(want_field(js, "edge", sw), sw + ".edge");
    if (e < 0 || e >= g.edge_count())
      throw std::invalid_argument(sw + " references unknown edge id " + std::to_string(e));
    bool rev = want_bool(want_field(js, "reversed", sw), sw + ".reversed");
    w.steps.push_back({e, rev});
  }
  return w;
}

// shape errors throw (exit 2); value disagreement comes back as a message
inline std::optional<std::string> chord_mismatch(const Json& jch, const Chord& actual,
                                                 const std::string& where) {
  if (!jch.is_object()) throw std::invalid_argument(where + " must be an object");
  reject_unknown_fields(jch, {"visit", "positions"}, where);
  int visit = want_int(want_field(jch, "visit", where), where + ".visit");
  const Json& jp = want_array(want_field(jch, "positions", where), where + ".positions");
  if (jp.size() != 2)
    throw std::invalid_argument(where + ".positions must list exactly two positions");
  std::array<int, 2> pos{want_int(jp[0], where + ".positions[0]"),
                         want_int(jp[1], where + ".positions[1]")};
  if (visit != actual.visit || pos != actual.pos)
    return where + " does not match the computed crossing";
  return std::nullopt;
}

inline CertificateOutcome verify_planar_certificate(const StarGraph& g, const Json& cert) {
  reject_unknown_fields(cert, {"verdict", "embedding", "faces"}, "planar certificate");
  NameMaps names = name_maps(g);
  const Json& jemb =
      want_array(want_field(cert, "embedding", "certificate"), "\"embedding\"");
  if (jemb.size() != static_cast<size_t>(g.vertex_count()))
    throw std::invalid_argument("embedding lists " + std::to_string(jemb.size()) +
                                " vertices but the graph has " +
                                std::to_string(g.vertex_count()));

  RotationSystem rs;
  rs.order.assign(g.vertex_count(), {});
  std::vector<std::vector<HalfEdgeId>> listed(g.vertex_count());
  std::vector<bool> reversed(g.vertex_count(), false);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const std::string where = "embedding[" + std::to_string(v) + "]";
    const Json& jv = jemb[v];
    if (!jv.is_object()) throw std::invalid_argument(where + " must be an object");
    reject_unknown_fields(jv, {"id", "order", "reversed"}, where);
    std::string id = want_string(want_field(jv, "id", where), where + ".id");
    if (id != g.vname(v))
      throw std::invalid_argument(where + " names vertex \"" + id + "\" but position " +
                                  std::to_string(v) + " of the graph is \"" + g.vname(v) +
                                  "\"");
    reversed[v] = want_bool(want_field(jv, "reversed", where), where + ".reversed");
    const Json& jord = want_array(want_field(jv, "order", where), where + ".order");
    for (size_t k = 0; k < jord.size(); ++k) {
      std::string hs = want_string(jord[k], where + ".order[" + std::to_string(k) + "]");
      auto it = names.half.find(hs);
      if (it == names.half.end())
        throw std::invalid_argument(where + ".order references unknown half-edge id \"" + hs +
                                    "\"");
      HalfEdgeId h = it->second;
      listed[v].push_back(h);
      EdgeId e = g.half_edge_id[h];
      rs.order[v].push_back(2 * e + (g.edge[e][0] == h ? 0 : 1));
    }
  }

  OrdinaryGraph und = underlying_graph(g);
  if (auto p = check_rotation_system(und, rs)) return {1, "embedding rejected: " + *p};
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::vector<int> expect = g.rotation[v];
    if (reversed[v]) std::reverse(expect.begin(), expect.end());
    if (!is_cyclic_shift(listed[v], expect))
      return {1, "embedding order at vertex \"" + g.vname(v) +
                     "\" is not the stored rotation read " +
                     (reversed[v] ? "backwards" : "forwards")};
  }
  if (!verify_embedding(und, rs)) return {1, "rotation system is not genus zero"};

  const Json& jfaces = want_array(want_field(cert, "faces", "certificate"), "\"faces\"");
  auto canon = [](std::vector<int> f) {
    auto it = std::min_element(f.begin(), f.end());
    std::rotate(f.begin(), it, f.end());
    return f;
  };
  std::vector<std::vector<int>> claimed;
  for (size_t fi = 0; fi < jfaces.size(); ++fi) {
    const std::string where = "faces[" + std::to_string(fi) + "]";
    const Json& jf = want_array(jfaces[fi], where);
    if (jf.empty()) throw std::invalid_argument(where + " must be a non-empty array");
    std::vector<int> darts;
    for (size_t k = 0; k < jf.size(); ++k) {
      std::string hs = want_string(jf[k], where + "[" + std::to_string(k) + "]");
      auto it = names.half.find(hs);
      if (it == names.half.end())
        throw std::invalid_argument(where + " references unknown half-edge id \"" + hs + "\"");
      HalfEdgeId h = it->second;
      EdgeId e = g.half_edge_id[h];
      darts.push_back(2 * e + (g.edge[e][0] == h ? 0 : 1));
    }
    claimed.push_back(canon(std::move(darts)));
  }
  std::vector<std::vector<int>> actual;
  for (auto& f : trace_faces(und, rs)) actual.push_back(canon(std::move(f)));
  std::sort(claimed.begin(), claimed.end());
  std::sort(actual.begin(), actual.end());
  if (claimed != actual) return {1, "face walks do not match the rotation system"};

  return {0, "planar certificate verified: " + std::to_string(g.vertex_count()) +
                 " vertices, " + std::to_string(g.edge_count()) + " edges, " +
                 std::to_string(actual.size()) + " faces"};
}

inline CertificateOutcome verify_vassiliev_certificate(const StarGraph& g, const Json& cert) {
  reject_unknown_fields(cert, {"verdict", "witness", "cycles", "crossing"},
                        "vassiliev certificate");
  NameMaps names = name_maps(g);
  const Json& jc = want_array(want_field(cert, "cycles", "certificate"), "\"cycles\"");
  if (jc.size() != 2)
    throw std::invalid_argument("\"cycles\" must list exactly two cycles");
  Walk c1 = walk_from_json(g, jc[0], "cycles[0]", true);
  Walk c2 = walk_from_json(g, jc[1], "cycles[1]", true);
  ObstructionCheck chk = check_vassiliev_obstruction(g, c1, c2);

  const Json& jcr = want_field(cert, "crossing", "certificate");
  if (!jcr.is_object()) throw std::invalid_argument("\"crossing\" must be an object");
  reject_unknown_fields(jcr, {"vertex", "first", "second"}, "\"crossing\"");
  std::string vs = want_string(want_field(jcr, "vertex", "\"crossing\""), "crossing.vertex");
  auto it = names.vertex.find(vs);
  if (it == names.vertex.end())
    throw std::invalid_argument("crossing references unknown vertex id \"" + vs + "\"");

  if (!chk.ok) return {1, "obstruction rejected: " + chk.reason};
  if (it->second != chk.crossing->vertex)
    return {1, "claimed crossing at vertex \"" + vs + "\" but the cycles cross at \"" +
                   g.vname(chk.crossing->vertex) + "\""};
  if (auto m = chord_mismatch(want_field(jcr, "first", "\"crossing\""), chk.crossing->first,
                              "crossing.first"))
    return {1, *m};
  if (auto m = chord_mismatch(want_field(jcr, "second", "\"crossing\""), chk.crossing->second,
                              "crossing.second"))
    return {1, *m};
  return {0, "vassiliev certificate verified: crossing at vertex \"" + vs + "\""};
}

inline CertificateOutcome verify_k33_certificate(const StarGraph& g, const Json& cert) {
  reject_unknown_fields(cert, {"verdict", "witness", "branch", "paths"}, "k33 certificate");
  NameMaps names = name_maps(g);
  const Json& jb = want_array(want_field(cert, "branch", "certificate"), "\"branch\"");
  if (jb.size() != 6)
    throw std::invalid_argument("\"branch\" must list exactly six vertex ids");
  EmbeddedK33 w;
  for (int i = 0; i < 6; ++i) {
    std::string vs = want_string(jb[i], "branch[" + std::to_string(i) + "]");
    auto it = names.vertex.find(vs);
    if (it == names.vertex.end())
      throw std::invalid_argument("branch[" + std::to_string(i) +
                                  "] references unknown vertex id \"" + vs + "\"");
    w.branch[i] = it->second;
  }
  const Json& jp = want_array(want_field(cert, "paths", "certificate"), "\"paths\"");
  if (jp.size() != 9) throw std::invalid_argument("\"paths\" must list exactly nine paths");
  for (int k = 0; k < 9; ++k)
    w.paths[k] = walk_from_json(g, jp[k], "paths[" + std::to_string(k) + "]", false);
  if (auto p = check_embedded_k33(g, w)) return {1, "witness rejected: " + *p};
  return {0, "embedded K3,3 certificate verified"};
}

inline CertificateOutcome verify_certificate_impl(const StarGraph& g, const Json& cert) {
  {
    ValidationReport rep = validate(g);
    if (!rep.ok())
      throw std::invalid_argument("invalid star-graph: " + rep.problems.front());
  }
  if (!cert.is_object())
    throw std::invalid_argument("certificate must be a JSON object");
  std::string verdict =
      want_string(want_field(cert, "verdict", "certificate"), "\"verdict\"");
  if (verdict == "planar") return verify_planar_certificate(g, cert);
  if (verdict == "nonplanar") {
    std::string kind =
        want_string(want_field(cert, "witness", "certificate"), "\"witness\"");
    if (kind == "vassiliev") return verify_vassiliev_certificate(g, cert);
    if (kind == "k33") return verify_k33_certificate(g, cert);
    throw std::invalid_argument("unknown witness kind \"" + kind + "\"");
  }
  throw std::invalid_argument("unknown verdict \"" + verdict + "\"");
}

}  // namespace detail

// Accept or reject a certificate for g using the validators only; the
// decision procedures are never consulted.
inline CertificateOutcome verify_certificate(const StarGraph& g, const Json& cert) {
  try {
    return detail::verify_certificate_impl(g, cert);
  } catch (const std::invalid_argument& e) {
    return {2, e.what()};
  } catch (const nlohmann::json::exception& e) {
    return {2, std::string("malformed certificate: ") + e.what()};
  }
}

// ---------------------------------------------------------------------------
// DOT export

// One node statement per web vertex (hubs doubled circles) and one edge
// statement per web edge; rim edges are dashed and spokes dotted so the
// wheels stand out from the through connections.
inline std::string web_graph_to_dot(const WebGraph& w) {
  auto quoted = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out.push_back('\\');
      out.push_back(c);
    }
    out.push_back('"');
    return out;
  };
  std::ostringstream out;
  out << "graph web {\n";
  for (VertexId v = 0; v < w.graph.n; ++v) {
    out << "  " << quoted(w.graph.vname(v));
    out << (w.is_center(v) ? " [shape=doublecircle]" : " [shape=circle]");
    out << ";\n";
  }
  for (EdgeId e = 0; e < w.graph.edge_count(); ++e) {
    out << "  " << quoted(w.graph.vname(w.graph.edge[e][0])) << " -- "
        << quoted(w.graph.vname(w.graph.edge[e][1]));
    switch (w.edge_kind[e]) {
      case WebEdgeKind::through:
        out << " [penwidth=2]";
        break;
      case WebEdgeKind::spoke:
        out << " [style=dotted]";
        break;
      case WebEdgeKind::circle:
        out << " [style=dashed]";
        break;
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace starplan
