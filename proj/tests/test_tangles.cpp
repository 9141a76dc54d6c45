#include <fstream>
#include <set>
#include <sstream>

#include "deltaknot/enumerate.hpp"
#include "deltaknot/tangles.hpp"
#include "doctest.h"

using namespace dk;

TEST_CASE("shipped pattern file matches the built-in templates") {
  std::ifstream in(DELTAKNOT_DATA_DIR "/tangle_patterns.json");
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  auto shipped = load_patterns(ss.str());
  auto builtin = default_patterns();
  REQUIRE(shipped.size() == 4);
  REQUIRE(builtin.size() == 4);
  const char* ids[] = {"T1", "T2", "T3", "T4"};
  for (int i = 0; i < 4; ++i) {
    CHECK(shipped[i].id == ids[i]);
    CHECK(shipped[i].kind == builtin[i].kind);
    CHECK(shipped[i].size == builtin[i].size);
    CHECK(shipped[i].sizes[0] == builtin[i].sizes[0]);
    CHECK(shipped[i].sizes[1] == builtin[i].sizes[1]);
    CHECK(shipped[i].attached_size == builtin[i].attached_size);
    CHECK(shipped[i].count == builtin[i].count);
    CHECK(shipped[i].host_min_size == builtin[i].host_min_size);
  }
}

TEST_CASE("monogon projections carry T1 and only maps with monogons do") {
  auto clover = ShadowProjection::parse("[[1,1,2,2,3,3]]");
  auto m = clover.planar_map();
  auto t1 = detect_pattern(m, default_patterns()[0]);
  CHECK(t1.size() == 1);  // three monogons, all at the single vertex
  CHECK(verify_existence(m).ok);
  for (int n = 2; n <= 3; ++n) {
    for (const auto& p : enumerate_projections(n)) {
      auto pm = p.planar_map();
      bool has_t1 = !detect_pattern(pm, default_patterns()[0]).empty();
      CHECK(has_t1 == (pm.face_vector()[1] > 0));
    }
  }
}

TEST_CASE("two-triple-point knot projection: exact tangle count") {
  auto knots = filter_knot_projections(enumerate_projections(2));
  REQUIRE(knots.size() == 1);
  auto m = knots[0].planar_map();
  auto tc = max_disjoint_counts(m);
  CHECK(tc.t1 == 2);
  CHECK(tc.t2 == 0);
  CHECK(tc.t3 == 0);
  CHECK(tc.t4 == 0);
  auto fv = m.face_vector();
  REQUIRE(fv.size() == 4);
  CHECK(fv[1] == 2);
  CHECK(fv[2] == 2);
  CHECK(fv[3] == 2);
}

TEST_CASE("vertex-overlapping T2 candidates collapse to one") {
  // Four parallel edges between two vertices (three stacked bigons) plus a
  // monogon at each vertex: the adjoining bigon pairs share both vertices.
  auto s = ShadowProjection::parse("[[1,2,3,4,5,5],[4,3,2,1,6,6]]");
  auto m = s.planar_map();
  auto pats = default_patterns();
  CHECK(detect_pattern(m, pats[0]).size() == 2);
  CHECK(detect_pattern(m, pats[1]).size() == 1);
  auto tc = max_disjoint_counts(m);
  CHECK(tc.t1 + tc.t2 == 2);  // both monogons win over the shared-vertex T2
}

TEST_CASE("theorem 2 and the face identity on the small knot tables") {
  std::multiset<int> t1s;
  for (int n = 1; n <= 3; ++n) {
    for (const auto& p : filter_knot_projections(enumerate_projections(n))) {
      auto m = p.planar_map();
      CHECK(verify_existence(m).ok);
      auto rep = face_identity_report(m);
      CHECK(rep.residual == 0);
      CHECK(m.num_edges() == 3 * n);
      CHECK(m.num_faces() == 2 * n + 2);
      if (n == 3) t1s.insert(max_disjoint_counts(m).t1);
    }
  }
  CHECK(t1s == std::multiset<int>({2, 2, 2, 3, 3}));
}

TEST_CASE("a 4-gon with three bigon-bordered edges flags and forces T4") {
  auto p = ShadowProjection::parse(
      "[[1,1,2,3,4,5],[2,6,7,8,4,3],[5,9,10,6,11,11],[7,12,12,10,9,8]]");
  auto m = p.planar_map();
  auto rep = face_identity_report(m);
  bool flagged = false;
  for (const auto& f : rep.flags) {
    if (f.over_limit) {
      flagged = true;
      CHECK(f.length == 4);
      CHECK(f.bigon_edges == 3);
      CHECK(f.limit == 2);
    }
  }
  CHECK(flagged);
  CHECK(detect_pattern(m, default_patterns()[3]).size() == 1);
}
