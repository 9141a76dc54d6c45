#include <doctest.h>

#include "deltaknot/classical.hpp"
#include "deltaknot/delta.hpp"
#include "deltaknot/errors.hpp"
#include "deltaknot/shadow.hpp"
#include "deltaknot/triple.hpp"

using namespace dk;

TEST_SUITE("classical") {
  TEST_CASE("trefoil parse, signs, writhe, components") {
    // Left-handed trefoil; signs omitted, inferred from orientation.
    auto d = ClassicalDiagram::parse("[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]");
    CHECK(d.size() == 3);
    CHECK(d.writhe() == -3);
    CHECK(d.components() == 1);
    for (const auto& x : d.crossings()) CHECK(x.sign == -1);
    auto m = d.mirror();
    CHECK(m.writhe() == 3);
    CHECK(m.components() == 1);
    CHECK(m.mirror().canonical_key() == d.canonical_key());
  }

  TEST_CASE("figure eight") {
    auto d = ClassicalDiagram::parse(
        "[X[4,1,5,2],X[2,8,3,7],X[8,5,1,6],X[6,4,7,3]]");
    CHECK(d.size() == 4);
    CHECK(d.writhe() == 0);
    CHECK(d.components() == 1);
    auto pm = d.planar_map();
    CHECK(pm.is_sphere());
    CHECK(pm.num_faces() == 6);  // c + 2
  }

  TEST_CASE("emit round trip and canonical key") {
    std::string code = "[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]";
    auto d = ClassicalDiagram::parse(code);
    auto d2 = ClassicalDiagram::parse(d.emit());
    CHECK(d2.emit() == d.emit());
    // Same knot, crossings listed in another order with other arc names.
    auto d3 = ClassicalDiagram::parse("[X[5,2,6,3],X[1,4,2,5],X[3,6,4,1]]");
    CHECK(d3.canonical_key() == d.canonical_key());
    auto d4 = ClassicalDiagram::parse("[X[11,14,12,15],X[13,16,14,11],X[15,12,16,13]]");
    CHECK(d4.canonical_key() == d.canonical_key());
  }

  TEST_CASE("validation rejects bad arc usage") {
    CHECK_THROWS_AS(ClassicalDiagram::parse("[X[1,2,3,4]]"), ValidationError);
    CHECK_THROWS_AS(ClassicalDiagram::parse("[X[1,2,"), ParseError);
  }

  TEST_CASE("hopf link has two components") {
    auto d = ClassicalDiagram::parse("[X[1,4,2,3],X[3,2,4,1]]");
    CHECK(d.components() == 2);
  }
}

TEST_SUITE("shadow") {
  TEST_CASE("one triple point, three loops") {
    auto p = ShadowProjection::parse("[[1,1,2,2,3,3]]");
    CHECK(p.size() == 1);
    CHECK(p.strand_components() == 1);
    auto m = p.planar_map();
    CHECK(m.nv == 1);
    CHECK(m.num_edges() == 3);
    CHECK(m.num_faces() == 4);  // 2n + 2
    CHECK(m.is_sphere());
    CHECK(natural_orientation(p).has_value());
  }

  TEST_CASE("emit is canonical and idempotent") {
    auto p = ShadowProjection::parse("[ [1, 1,2,2,3,3] ]");
    CHECK(p.emit() == "[[1, 1, 2, 2, 3, 3]]");
    CHECK(ShadowProjection::parse(p.emit()).emit() == p.emit());
  }

  TEST_CASE("canonical key ignores labels and rotation") {
    auto a = ShadowProjection::parse("[[1,1,2,2,3,3]]");
    auto b = ShadowProjection::parse("[[7,7,9,9,8,8]]");
    CHECK(a.canonical_key() == b.canonical_key());
  }

  TEST_CASE("validation") {
    CHECK_THROWS_AS(ShadowProjection::parse("[[1,1,2,2,3,4]]"), ValidationError);
    // Two vertices joined by all six arcs in a non-planar pattern.
    CHECK_THROWS_AS(ShadowProjection::parse("[[1,2,3,1,2,3]]"), ValidationError);
  }
}

TEST_SUITE("delta") {
  TEST_CASE("dPD round trip") {
    std::string code = "[W, [1, 3, 3, 2, 2, 1]]";
    auto d = DeltaDiagram::parse(code);
    CHECK(d.size() == 1);
    CHECK(d.emit() == code);
    CHECK(natural_orientation(d.base()).has_value());
  }

  TEST_CASE("two-delta code") {
    auto d = DeltaDiagram::parse("[S, [5,2,4,6,1,5], W, [2,1,3,3,6,4]]");
    CHECK(d.size() == 2);
    CHECK(d.base().strand_components() == 1);
    CHECK(natural_orientation(d.base()).has_value());
  }

  TEST_CASE("mirror is an involution that fixes the map") {
    auto d = DeltaDiagram::parse("[S, [5,2,4,6,1,5], W, [2,1,3,3,6,4]]");
    auto m = d.mirror();
    CHECK(m.base().verts() == d.base().verts());
    CHECK(m.mirror().emit() == d.emit());
    CHECK(m.letters() != d.letters());
  }

  TEST_CASE("canonical key is relabeling invariant") {
    auto a = DeltaDiagram::parse("[S, [5,2,4,6,1,5], W, [2,1,3,3,6,4]]");
    auto b = DeltaDiagram::parse("[W, [12,11,13,13,16,14], S, [15,12,14,16,11,15]]");
    CHECK(a.canonical_key() == b.canonical_key());
    // This two-delta witness is symmetric: its mirror is the same diagram
    // read with the reverse orientation.
    CHECK(a.canonical_key() == a.mirror().canonical_key());
    // A chiral one-delta diagram separates from its mirror.
    auto c = DeltaDiagram::parse("[W, [1,3,3,2,2,1]]");
    CHECK(c.canonical_key() != c.mirror().canonical_key());
  }

  TEST_CASE("letter validation") {
    CHECK_THROWS_AS(DeltaDiagram::parse("[Q, [1,3,3,2,2,1]]"), ParseError);
  }
}

TEST_SUITE("triple") {
  TEST_CASE("tPD round trip") {
    std::string code = "[TMB, [1, 1, 2, 2, 3, 3]]";
    auto t = TripleDiagram::parse(code);
    CHECK(t.size() == 1);
    CHECK(t.emit() == code);
    CHECK(t.role_at(0) == 'T');
    CHECK(t.role_at(3) == 'T');
    CHECK(t.role_at(4) == 'M');
  }

  TEST_CASE("role words must be permutations") {
    CHECK_THROWS(TripleDiagram::parse("[TMT, [1,1,2,2,3,3]]"));
  }
}
