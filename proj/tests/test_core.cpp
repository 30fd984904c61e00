#include <catch2/catch_amalgamated.hpp>

#include "starplan/core.hpp"

using namespace starplan;

namespace {

// One vertex, rotation [0,1,2,3], loops on opposite positions. The two loops
// alternate around the vertex, so they cross once.
StarGraph figure_eight() {
  return make_star_graph({{0, 1, 2, 3}}, {{0, 2}, {1, 3}});
}

// Same vertex, loops on adjacent positions: nested chords, no crossing.
StarGraph alpha_curve() {
  return make_star_graph({{0, 1, 2, 3}}, {{1, 2}, {3, 0}});
}

Walk loop_walk(EdgeId e) { return Walk{{{e, false}}, true}; }

// The 4-valent two-vertex graph of the doubly-crossing curve: vertex a gets
// halves 0..3, vertex b gets 4..7, edges chain the two strands. Cycle C1
// runs over edges 0,1 and C2 over edges 2,3; they cross at b and are nested
// at a.
StarGraph two_crossing_curve() {
  return make_star_graph({{0, 1, 2, 3}, {4, 5, 6, 7}},
                         {{2, 4}, {6, 1}, {3, 5}, {7, 0}});
}

// Applies a cyclic shift and optional reflection to one vertex's rotation
// representative. Walks are untouched: they refer to edges and half-edges,
// not to positions.
StarGraph with_rotated_vertex(StarGraph g, VertexId v, int shift, bool reflect) {
  auto& rot = g.rotation[v];
  std::rotate(rot.begin(), rot.begin() + (shift % rot.size()), rot.end());
  if (reflect) std::reverse(rot.begin(), rot.end());
  g.reindex();
  return g;
}

}  // namespace

TEST_CASE("validation accepts sound graphs and itemizes violations") {
  SECTION("one-loop circle is valid") {
    StarGraph g;
    g.rotation = {{0, 1}};
    g.edge = {{0, 1}};
    REQUIRE(validate(g).ok());
  }
  SECTION("empty graph is valid") {
    StarGraph g;
    REQUIRE(validate(g).ok());
    REQUIRE(is_even(g));
  }
  SECTION("half-edge used by two edges") {
    StarGraph g;
    g.rotation = {{0, 1}};
    g.edge = {{0, 1}, {1, 0}};
    auto rep = validate(g);
    REQUIRE_FALSE(rep.ok());
    bool mentions_double_use = false;
    for (const auto& p : rep.problems)
      if (p.find("more than one edge") != std::string::npos) mentions_double_use = true;
    REQUIRE(mentions_double_use);
  }
  SECTION("edge may not repeat one half-edge id") {
    StarGraph g;
    g.rotation = {{0, 1}};
    g.edge = {{0, 0}};
    auto rep = validate(g);
    REQUIRE_FALSE(rep.ok());
    REQUIRE_THAT(rep.problems.front(), Catch::Matchers::ContainsSubstring("distinct half-edges"));
  }
  SECTION("empty rotation is a violation") {
    StarGraph g;
    g.rotation = {{0, 1}, {}};
    g.edge = {{0, 1}};
    REQUIRE_FALSE(validate(g).ok());
  }
  SECTION("make_star_graph throws on invalid input") {
    REQUIRE_THROWS_AS(make_star_graph({{0, 0}}, {{0, 0}}), std::invalid_argument);
  }
}

TEST_CASE("is_even inspects every degree") {
  REQUIRE(is_even(figure_eight()));
  // all-degree-3 graph: one triangle of doubled... simplest: two vertices,
  // three parallel edges
  StarGraph theta = make_star_graph({{0, 2, 4}, {1, 3, 5}},
                                    {{0, 1}, {2, 3}, {4, 5}});
  REQUIRE_FALSE(is_even(theta));
}

TEST_CASE("chords_cross is the alternation test and ignores representatives") {
  REQUIRE(chords_cross(4, {0, 2}, {1, 3}));
  REQUIRE_FALSE(chords_cross(4, {1, 2}, {0, 3}));
  REQUIRE_THROWS_AS(chords_cross(4, {0, 1}, {1, 2}), std::invalid_argument);

  // invariance under every rotation and reflection of the circle, all
  // position quadruples up to n = 7
  for (int n = 4; n <= 7; ++n) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          for (int d = 0; d < n; ++d) {
            if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
            bool base = chords_cross(n, {a, b}, {c, d});
            REQUIRE(chords_cross(n, {b, a}, {d, c}) == base);
            REQUIRE(chords_cross(n, {c, d}, {a, b}) == base);
            for (int s = 1; s < n; ++s) {
              auto sh = [&](int x) { return (x + s) % n; };
              REQUIRE(chords_cross(n, {sh(a), sh(b)}, {sh(c), sh(d)}) == base);
              auto rf = [&](int x) { return (n - x) % n; };
              REQUIRE(chords_cross(n, {rf(a), rf(b)}, {rf(c), rf(d)}) == base);
            }
          }
  }
}

TEST_CASE("figure-eight loops cross once, nested loops do not") {
  StarGraph inf = figure_eight();
  Walk a = loop_walk(0), b = loop_walk(1);

  auto d = chord_diagram(inf, 0, {a, b});
  REQUIRE(d.circle_size == 4);
  REQUIRE(d.chords.size() == 2);
  CHECK(d.chords[0].pos == std::array<int, 2>{0, 2});
  CHECK(d.chords[0].walk == 0);
  CHECK(d.chords[1].pos == std::array<int, 2>{1, 3});
  CHECK(d.chords[1].walk == 1);

  REQUIRE(transversal_count(inf, a, b) == 1);
  REQUIRE(is_vassiliev_obstruction(inf, a, b));

  StarGraph alpha = alpha_curve();
  auto da = chord_diagram(alpha, 0, {a, b});
  CHECK(da.chords[0].pos == std::array<int, 2>{1, 2});
  CHECK(da.chords[1].pos == std::array<int, 2>{0, 3});
  REQUIRE(transversal_count(alpha, a, b) == 0);
  REQUIRE_FALSE(is_vassiliev_obstruction(alpha, a, b));
}

TEST_CASE("two-strand curve crosses at one vertex only") {
  StarGraph g = two_crossing_curve();
  Walk c1{{{0, false}, {1, false}}, true};
  Walk c2{{{2, false}, {3, false}}, true};
  REQUIRE_FALSE(walk_problem(g, c1).has_value());
  REQUIRE_FALSE(walk_problem(g, c2).has_value());

  auto rep = transversal_crossings(g, c1, c2);
  REQUIRE(rep.edge_disjoint);
  REQUIRE(rep.count() == 1);
  // the single crossing happens at vertex b; at vertex a the chords nest
  CHECK(rep.crossings.front().vertex == 1);
  CHECK(rep.crossings.front().first.pos == std::array<int, 2>{0, 2});
  CHECK(rep.crossings.front().second.pos == std::array<int, 2>{1, 3});
  REQUIRE(is_vassiliev_obstruction(g, c1, c2));
}

TEST_CASE("transversal count is representative independent and symmetric") {
  struct CasePair {
    StarGraph g;
    Walk c1, c2;
    int expect;
  };
  std::vector<CasePair> cases;
  cases.push_back({figure_eight(), loop_walk(0), loop_walk(1), 1});
  cases.push_back({alpha_curve(), loop_walk(0), loop_walk(1), 0});
  cases.push_back({two_crossing_curve(),
                   Walk{{{0, false}, {1, false}}, true},
                   Walk{{{2, false}, {3, false}}, true},
                   1});

  for (auto& c : cases) {
    REQUIRE(transversal_count(c.g, c.c1, c.c2) == c.expect);
    REQUIRE(transversal_count(c.g, c.c2, c.c1) == c.expect);
    for (VertexId v = 0; v < c.g.vertex_count(); ++v)
      for (int shift = 0; shift < c.g.degree(v); ++shift)
        for (bool reflect : {false, true}) {
          StarGraph h = with_rotated_vertex(c.g, v, shift, reflect);
          REQUIRE(transversal_count(h, c.c1, c.c2) == c.expect);
        }
  }
}

TEST_CASE("walk machinery") {
  StarGraph g = two_crossing_curve();
  SECTION("visits come in junction order, wrap junction last") {
    Walk c1{{{0, false}, {1, false}}, true};
    auto vs = walk_visits(g, c1);
    REQUIRE(vs.size() == 2);
    CHECK(vs[0].vertex == 1);  // after step 0 the walk sits at b
    CHECK(vs[1].vertex == 0);  // wrap-around junction at a
    CHECK(vs[1].in_half == 1);
    CHECK(vs[1].out_half == 2);
  }
  SECTION("open walks expose endpoints and skip end junctions") {
    Walk p{{{0, false}, {1, false}}, false};
    REQUIRE(walk_source(g, p) == 0);
    REQUIRE(walk_target(g, p) == 0);
    REQUIRE(walk_visits(g, p).size() == 1);
    REQUIRE(walk_vertices(g, p) == std::vector<VertexId>{0, 1, 0});
  }
  SECTION("reversal keeps walks valid") {
    Walk c1{{{0, false}, {1, false}}, true};
    Walk r = reverse_walk(c1);
    REQUIRE_FALSE(walk_problem(g, r).has_value());
    REQUIRE(walk_simple(g, r));
  }
  SECTION("edge reuse and broken junctions are rejected") {
    Walk bad{{{0, false}, {0, true}}, true};
    REQUIRE(walk_problem(g, bad).has_value());
    Walk disconnected{{{0, false}, {2, false}}, false};
    REQUIRE(walk_problem(g, disconnected).has_value());
  }
  SECTION("walk not passing a vertex yields no chords there") {
    StarGraph h = make_star_graph({{0, 1}, {2, 3}}, {{0, 2}, {1, 3}});
    Walk c{{{0, false}, {1, true}}, true};
    REQUIRE_FALSE(walk_problem(h, c).has_value());
    // diagram at a vertex the walk does visit has chords, elsewhere none
    REQUIRE(chord_diagram(h, 0, {c}).chords.size() == 1);
  }
}

TEST_CASE("obstruction check explains failures") {
  StarGraph g = figure_eight();
  SECTION("walk paired with itself shares edges") {
    auto res = check_vassiliev_obstruction(g, loop_walk(0), loop_walk(0));
    REQUIRE_FALSE(res.ok);
    REQUIRE_THAT(res.reason, Catch::Matchers::ContainsSubstring("share edge"));
  }
  SECTION("count zero is reported") {
    StarGraph alpha = alpha_curve();
    auto res = check_vassiliev_obstruction(alpha, loop_walk(0), loop_walk(1));
    REQUIRE_FALSE(res.ok);
    REQUIRE(res.count == 0);
  }
  SECTION("open walks are rejected") {
    Walk open{{{0, false}}, false};
    auto res = check_vassiliev_obstruction(g, open, loop_walk(1));
    REQUIRE_FALSE(res.ok);
    REQUIRE_THAT(res.reason, Catch::Matchers::ContainsSubstring("closed"));
  }
  SECTION("shared-edge count query throws") {
    REQUIRE_THROWS_AS(transversal_count(g, loop_walk(0), loop_walk(0)),
                      std::invalid_argument);
  }
}

TEST_CASE("simplify_obstruction") {
  SECTION("simple input is a fixed point") {
    StarGraph g = figure_eight();
    auto [s1, s2] = simplify_obstruction(g, loop_walk(0), loop_walk(1));
    REQUIRE(s1 == loop_walk(0));
    REQUIRE(s2 == loop_walk(1));
  }

  SECTION("self-crossing cycle gets cut down to a simple one") {
    // u carries a doubled strand through w plus one loop; the long cycle
    // visits both vertices twice, the loop crosses exactly one of its
    // chords at u.
    StarGraph g = make_star_graph({{0, 1, 8, 2, 9, 3}, {4, 5, 6, 7}},
                                  {{0, 4}, {5, 1}, {2, 6}, {7, 3}, {8, 9}});
    Walk big{{{0, false}, {1, false}, {2, false}, {3, false}}, true};
    Walk small = loop_walk(4);
    REQUIRE(walk_revisits(g, big) == 2);
    REQUIRE(is_vassiliev_obstruction(g, big, small));

    auto [s1, s2] = simplify_obstruction(g, big, small);
    REQUIRE(walk_simple(g, s1));
    REQUIRE(walk_simple(g, s2));
    REQUIRE(is_vassiliev_obstruction(g, s1, s2));
    // the kept half is the strand pair whose chord at u crosses the loop
    REQUIRE(s1 == Walk{{{2, false}, {3, false}}, true});
    REQUIRE(s2 == small);
  }

  SECTION("non-obstruction input is rejected") {
    StarGraph alpha = alpha_curve();
    REQUIRE_THROWS_AS(simplify_obstruction(alpha, loop_walk(0), loop_walk(1)),
                      std::invalid_argument);
  }
}

TEST_CASE("structural equality canonicalizes rotations") {
  StarGraph a = figure_eight();
  StarGraph b = with_rotated_vertex(a, 0, 2, false);
  StarGraph c = with_rotated_vertex(a, 0, 1, true);
  REQUIRE(star_graph_equal(a, b));
  REQUIRE(star_graph_equal(a, c));
  StarGraph d = alpha_curve();
  REQUIRE_FALSE(star_graph_equal(a, d));
}
