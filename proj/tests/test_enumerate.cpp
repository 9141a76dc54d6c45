#include <set>

#include "deltaknot/enumerate.hpp"
#include "doctest.h"

using namespace dk;

TEST_CASE("single triple point: the clover is the only knot projection") {
  auto all = enumerate_projections(1);
  auto knots = filter_knot_projections(all);
  REQUIRE(knots.size() == 1);
  CHECK(knots[0].canonical_key() ==
        ShadowProjection::parse("[[1,1,2,2,3,3]]").canonical_key());
}

TEST_CASE("knot projection counts are 1, 5, 65 for n = 2, 3, 4") {
  std::size_t expected[] = {1, 5, 65};
  long long diagrams = 0;
  for (int n = 2; n <= 4; ++n) {
    auto knots = filter_knot_projections(enumerate_projections(n));
    CHECK(knots.size() == expected[n - 2]);
    long long per = 1;
    for (int i = 0; i < n; ++i) per *= 4;
    diagrams += static_cast<long long>(knots.size()) * per;
    for (const auto& p : knots) {
      CHECK(p.size() == n);
      CHECK(p.strand_components() == 1);
      CHECK(natural_orientation(p).has_value());
    }
  }
  CHECK(diagrams == 16976);
}

TEST_CASE("enumeration output is deduplicated and sorted by canonical key") {
  auto all = enumerate_projections(3);
  std::set<std::string> keys;
  std::string prev;
  for (const auto& p : all) {
    auto k = p.canonical_key();
    CHECK(keys.insert(k).second);
    CHECK(prev < k);
    prev = k;
  }
}
