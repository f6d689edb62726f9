#include <catch2/catch.hpp>

#include <algorithm>
#include <map>
#include <set>

#include "crossmap/edges.hpp"
#include "crossmap/faces.hpp"
#include "crossmap/map.hpp"
#include "crossmap/validate.hpp"
#include "support/fixtures.hpp"

using namespace crossmap;
using testsupport::fixture_map;
using testsupport::load_fixture;

namespace {

std::multiset<int> face_sizes(const FaceSet& fs) {
  std::multiset<int> out;
  for (const auto& f : fs.faces) out.insert(f.size());
  return out;
}

}  // namespace

TEST_CASE("parse tri") {
  PlanarMap m = fixture_map("tri.map");
  CHECK(m.node_count() == 3);
  CHECK(m.segment_count() == 3);
  CHECK(m.original_count() == 3);
  for (int v = 0; v < 3; ++v) CHECK(m.degree(v) == 2);
}

TEST_CASE("parse x4") {
  PlanarMap m = fixture_map("x4.map");
  CHECK(m.node_count() == 5);
  CHECK(m.segment_count() == 8);
  CHECK(m.original_count() == 4);
  int x = m.node_by_name("x");
  CHECK(m.kind(x) == NodeKind::crossing);
  CHECK(m.degree(x) == 4);
}

TEST_CASE("parse errors") {
  SECTION("crossing degree must be 4") {
    std::string doc =
        "node A original\nnode B original\nnode C original\nnode x crossing\n"
        "seg A.0 x.0\nseg B.0 x.1\nseg C.0 x.2\n";
    CHECK_THROWS_WITH(PlanarMap::parse(doc),
                      Catch::Contains("crossing degree must be 4"));
  }
  SECTION("duplicate slot") {
    std::string doc =
        "node A original\nnode B original\nnode C original\n"
        "seg A.0 B.0\nseg A.0 C.0\n";
    CHECK_THROWS_WITH(PlanarMap::parse(doc), Catch::Contains("duplicate slot"));
  }
  SECTION("dangling dart") {
    std::string doc =
        "node A original\nnode B original\n"
        "seg A.0 B.2\n";
    CHECK_THROWS_WITH(PlanarMap::parse(doc), Catch::Contains("dangling dart"));
  }
  SECTION("loop segment") {
    std::string doc = "node A original\nseg A.0 A.1\n";
    CHECK_THROWS_WITH(PlanarMap::parse(doc), Catch::Contains("to itself"));
  }
  SECTION("undeclared node") {
    std::string doc = "node A original\nseg A.0 Z.0\n";
    CHECK_THROWS_WITH(PlanarMap::parse(doc), Catch::Contains("undeclared"));
  }
  SECTION("disconnected") {
    std::string doc =
        "node A original\nnode B original\nnode C original\nnode D original\n"
        "seg A.0 B.0\nseg C.0 D.0\n";
    CHECK_THROWS_WITH(PlanarMap::parse(doc), Catch::Contains("not connected"));
  }
  SECTION("syntax error carries line info") {
    try {
      PlanarMap::parse("node A original\nnode B frobnicate\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line == 2);
    }
  }
}

TEST_CASE("trace faces tri") {
  PlanarMap m = fixture_map("tri.map");
  FaceSet fs = trace_faces(m);
  REQUIRE(fs.count() == 2);
  CHECK(face_sizes(fs) == std::multiset<int>{3, 3});
  for (const auto& f : fs.faces) CHECK(f.originals == 3);
}

TEST_CASE("trace faces x4") {
  PlanarMap m = fixture_map("x4.map");
  FaceSet fs = trace_faces(m);
  REQUIRE(fs.count() == 5);
  CHECK(face_sizes(fs) == std::multiset<int>{3, 3, 3, 3, 4});
  for (const auto& f : fs.faces) {
    if (f.size() == 3) CHECK(f.originals == 2);
    if (f.size() == 4) CHECK(f.originals == 4);
  }
}

TEST_CASE("trace faces star") {
  PlanarMap m = fixture_map("star.map");
  FaceSet fs = trace_faces(m);
  REQUIRE(fs.count() == 8);
  CHECK(face_sizes(fs) == std::multiset<int>{3, 3, 3, 3, 4, 4, 4, 6});
  std::multiset<std::string> labels;
  for (const auto& f : fs.faces) labels.insert(f.label());
  CHECK(labels == std::multiset<std::string>{"0-triangle", "2-triangle",
                                             "2-triangle", "2-triangle",
                                             "2-quadrilateral", "2-quadrilateral",
                                             "2-quadrilateral", "6-hexagon"});
}

TEST_CASE("non-spherical rotation system is rejected") {
  // theta graph with both rotations in the same cyclic order embeds on the
  // torus: one face, V-E+F = 0
  std::string doc =
      "node u original\nnode v original\n"
      "seg u.0 v.0\nseg u.1 v.1\nseg u.2 v.2\n";
  PlanarMap m = PlanarMap::parse(doc);
  CHECK_THROWS_WITH(trace_faces(m), Catch::Contains("non-spherical"));
  CHECK(trace_faces_unchecked(m).count() == 1);
}

TEST_CASE("recover edges tri/x4/star") {
  {
    EdgeSet es = recover_edges(fixture_map("tri.map"));
    REQUIRE(es.count() == 3);
    for (const auto& e : es.edges) CHECK(e.crossings() == 0);
  }
  {
    EdgeSet es = recover_edges(fixture_map("x4.map"));
    REQUIRE(es.count() == 6);
    int crossed = 0;
    for (const auto& e : es.edges)
      if (e.crossings() == 1) ++crossed;
    CHECK(crossed == 2);
    CHECK(es.max_crossings() == 1);
  }
  {
    EdgeSet es = recover_edges(fixture_map("star.map"));
    REQUIRE(es.count() == 9);
    int twice = 0, zero = 0;
    for (const auto& e : es.edges) {
      if (e.crossings() == 2) ++twice;
      if (e.crossings() == 0) ++zero;
    }
    CHECK(twice == 3);
    CHECK(zero == 6);
  }
}

TEST_CASE("self-crossing edge is flagged but still reported") {
  // A-B drawn as a loop: passes twice through x and once through y, where it
  // crosses the straight edge C-D
  std::string doc =
      "node A original\nnode B original\nnode C original\nnode D original\n"
      "node x crossing\nnode y crossing\n"
      "seg A.0 x.0\nseg x.2 y.0\nseg y.2 x.1\nseg x.3 B.0\n"
      "seg C.0 y.1\nseg y.3 D.0\n";
  PlanarMap m = PlanarMap::parse(doc);
  EdgeSet es = recover_edges(m);
  REQUIRE(es.count() == 2);
  int loops = 0;
  for (const auto& e : es.edges)
    if (e.self_crossing) {
      ++loops;
      CHECK(e.crossings() == 3);  // x twice, y once
    }
  CHECK(loops == 1);
  ValidationReport r = validate(m, 4);
  CHECK(r.self_crossing);
  CHECK_FALSE(r.simple);
}

TEST_CASE("edge recovery partitions segments") {
  for (const char* name : {"tri.map", "x4.map", "star.map", "bowtie.map"}) {
    PlanarMap m = fixture_map(name);
    EdgeSet es = recover_edges(m);
    std::multiset<int> covered;
    for (const auto& e : es.edges)
      for (int s : e.segments) covered.insert(s);
    CHECK(covered.size() == static_cast<size_t>(m.segment_count()));
    std::set<int> unique(covered.begin(), covered.end());
    CHECK(unique.size() == covered.size());
  }
}

TEST_CASE("validate star") {
  PlanarMap m = fixture_map("star.map");
  ValidationReport r = validate(m, 4);
  CHECK(r.euler_ok);
  CHECK(r.two_connected);
  CHECK(r.simple);
  CHECK_FALSE(r.self_crossing);
  CHECK(r.max_crossings_per_edge == 2);
  CHECK(r.min_degree == 3);
  CHECK(r.assumption_flags == std::vector<std::string>{"min-degree<7"});
}

TEST_CASE("validate bowtie finds the cut vertex") {
  ValidationReport r = validate(fixture_map("bowtie.map"), 4);
  CHECK(r.euler_ok);
  CHECK_FALSE(r.two_connected);
  std::vector<std::string> expect{"min-degree<7", "not-2-connected"};
  CHECK(r.assumption_flags == expect);
}

TEST_CASE("validate flags non-simple drawings") {
  // two edges crossing twice: A-B straight, C-D arcs over it between u and v
  std::string doc =
      "node A original\nnode B original\nnode C original\nnode D original\n"
      "node u crossing\nnode v crossing\n"
      "seg A.0 u.2\nseg u.0 v.2\nseg v.0 B.0\n"
      "seg C.0 u.3\nseg u.1 v.1\nseg v.3 D.0\n";
  PlanarMap m = PlanarMap::parse(doc);
  ValidationReport r = validate(m, 4);
  CHECK_FALSE(r.simple);
  CHECK(std::count(r.assumption_flags.begin(), r.assumption_flags.end(),
                   "not-simple") == 1);
}

TEST_CASE("validate reports crossings above k_max") {
  PlanarMap m = testsupport::ladder(5);  // rays crossed five times
  ValidationReport r = validate(m, 4);
  CHECK(r.max_crossings_per_edge == 5);
  CHECK(std::count(r.assumption_flags.begin(), r.assumption_flags.end(),
                   "crossings>4") == 1);
  ValidationReport r5 = validate(m, 5);
  CHECK(r5.max_crossings_per_edge == 5);
  CHECK(std::count(r5.assumption_flags.begin(), r5.assumption_flags.end(),
                   "crossings>5") == 0);
}

TEST_CASE("face-size identities") {
  for (const char* name : {"tri.map", "x4.map", "star.map", "bowtie.map"}) {
    PlanarMap m = fixture_map(name);
    FaceSet fs = trace_faces_unchecked(m);
    long size_sum = 0, corner_sum = 0;
    for (const auto& f : fs.faces) {
      size_sum += f.size();
      corner_sum += f.original_corners;
    }
    CHECK(size_sum == 2 * m.segment_count());
    long deg_sum = 0;
    for (int v : m.originals()) deg_sum += m.degree(v);
    CHECK(corner_sum == deg_sum);
  }
}

TEST_CASE("serialize round-trips") {
  for (const char* name : {"tri.map", "x4.map", "star.map", "bowtie.map"}) {
    PlanarMap m = fixture_map(name);
    std::string canon = m.serialize();
    PlanarMap again = PlanarMap::parse(canon);
    CHECK(again.serialize() == canon);
    CHECK(again.node_count() == m.node_count());
    CHECK(again.segment_count() == m.segment_count());
  }
}
