#include <doctest.h>

#include "deltaknot/bracket.hpp"
#include "deltaknot/errors.hpp"
#include "deltaknot/fingerprint.hpp"
#include "deltaknot/homfly.hpp"

using namespace dk;

namespace {

ClassicalDiagram trefoil() {  // writhe -3
  return ClassicalDiagram::parse("[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]");
}

ClassicalDiagram fig8() {
  return ClassicalDiagram::parse("[X[4,1,5,2],X[2,8,3,7],X[8,5,1,6],X[6,4,7,3]]");
}

Laurent L(const std::string& s, const char* v1, const char* v2 = "") {
  return Laurent::parse(s, v1, v2);
}

}  // namespace

TEST_SUITE("invariants") {
  TEST_CASE("homfly of unknot and kink") {
    CHECK(homfly(ClassicalDiagram{}) == Laurent::one());
    CHECK(homfly(ClassicalDiagram::parse("[X+[1,1,2,2]]")) == Laurent::one());
  }

  TEST_CASE("homfly trefoil and figure eight") {
    // Writhe -3 trefoil: P = 2v^-2 - v^-4 + v^-2 z^2.
    CHECK(homfly(trefoil()) == L("-1*v^-4 + 2*v^-2 + 1*v^-2*z^2", "v", "z"));
    CHECK(homfly(trefoil().mirror()) == L("2*v^2 + -1*v^4 + 1*v^2*z^2", "v", "z"));
    CHECK(homfly(fig8()) == L("-1 + 1*v^-2 + 1*v^2 + -1*z^2", "v", "z"));
  }

  TEST_CASE("jones via bracket agrees with homfly specialization") {
    for (const auto& d : {trefoil(), trefoil().mirror(), fig8()}) {
      CHECK(jones_via_bracket(d) == jones_from_homfly(homfly(d)));
    }
    CHECK(jones_via_bracket(trefoil()) == L("-1*t^-4 + 1*t^-3 + 1*t^-1", "t"));
  }

  TEST_CASE("bracket mirror symmetry and budget") {
    Laurent b = kauffman_bracket(trefoil());
    Laurent bm = kauffman_bracket(trefoil().mirror());
    CHECK(b.map_exponents(-1, 1) == bm);
    CHECK_THROWS_AS(kauffman_bracket(fig8(), 3), BudgetError);
  }

  TEST_CASE("alexander") {
    CHECK(alexander_from_homfly(homfly(trefoil())) ==
          L("1*t^-1 + -1 + 1*t", "t"));
    CHECK(alexander_from_homfly(homfly(fig8())) ==
          L("-1*t^-1 + 3 + -1*t", "t"));
    // Mirror-insensitive.
    CHECK(alexander_from_homfly(homfly(trefoil().mirror())) ==
          alexander_from_homfly(homfly(trefoil())));
  }

  TEST_CASE("fingerprint and mirror coherence") {
    Fingerprint f = fingerprint(trefoil());
    CHECK(f.components == 1);
    CHECK(mirror_fingerprint(mirror_fingerprint(f)) == f);
    CHECK(mirror_fingerprint(f) == fingerprint(trefoil().mirror()));
    CHECK(mirror_fingerprint(f) != f);
    Fingerprint g = fingerprint(fig8());
    CHECK(mirror_fingerprint(g) == g);  // amphichiral
  }

  TEST_CASE("hopf link") {
    auto d = ClassicalDiagram::parse("[X[1,4,2,3],X[3,2,4,1]]");
    CHECK(d.components() == 2);
    Laurent p = homfly(d);
    CHECK(jones_from_homfly(p) == jones_via_bracket(d));
  }

  TEST_CASE("engine memo reuse is consistent") {
    HomflyEngine eng;
    Laurent a = eng.compute(trefoil());
    Laurent b = eng.compute(trefoil());
    CHECK(a == b);
    CHECK(eng.compute(fig8()) == homfly(fig8()));
    CHECK(eng.memo_size() > 0);
  }
}
