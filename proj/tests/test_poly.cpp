#include <doctest.h>

#include "deltaknot/poly.hpp"

using dk::Laurent;

TEST_SUITE("poly") {
  TEST_CASE("arithmetic basics") {
    Laurent a = Laurent::term(2, 1);          // 2v
    Laurent b = Laurent::term(-1, 0, 2);      // -z^2
    Laurent p = a * a + b;                    // 4v^2 - z^2
    CHECK(p.str("v", "z") == "-1*z^2 + 4*v^2");
    CHECK((p - p).is_zero());
    CHECK(p * Laurent::zero() == Laurent::zero());
    CHECK(Laurent::term(3, 0).pow(3) == Laurent::term(27, 0));
  }

  TEST_CASE("half exponents and spans") {
    Laurent r = Laurent::monomial(1, 1) - Laurent::monomial(1, -1);  // t^1/2 - t^-1/2
    CHECK(r.str("t") == "-1*t^-1/2 + 1*t^1/2");
    CHECK(r.span(1) == 2);
    CHECK(r.min_exp(1) == -1);
    CHECK(r.max_exp(1) == 1);
    CHECK(r * r == Laurent::term(1, 1) - Laurent::term(2, 0) + Laurent::term(1, -1));
  }

  TEST_CASE("text round trip") {
    Laurent p = Laurent::term(2, 2) - Laurent::term(1, 4) + Laurent::term(1, 2, 2);
    std::string s = p.str("v", "z");
    CHECK(Laurent::parse(s, "v", "z") == p);
    CHECK(Laurent::parse("0", "v", "z") == Laurent::zero());
    Laurent h = Laurent::monomial(-3, 5, -1);
    CHECK(Laurent::parse(h.str("v", "z"), "v", "z") == h);
  }

  TEST_CASE("substitution") {
    // P(v,z) with v -> t, z -> t^1/2 - t^-1/2 (the Jones specialization).
    Laurent p = Laurent::term(1, 0, 2);  // z^2
    Laurent t = Laurent::term(1, 1);
    Laurent zsub = Laurent::monomial(1, 1) - Laurent::monomial(1, -1);
    Laurent q = p.substitute(t, zsub);
    CHECK(q == Laurent::term(1, 1) - Laurent::term(2, 0) + Laurent::term(1, -1));
    // Monomial substitution supports negative powers: v -> v^-1.
    Laurent w = Laurent::term(1, 3).substitute(Laurent::term(1, -1), Laurent::zero());
    CHECK(w == Laurent::term(1, -3));
    // Half powers of sums are rejected.
    Laurent odd = Laurent::monomial(1, 1);
    CHECK_THROWS(odd.substitute(zsub, Laurent::zero()));
  }

  TEST_CASE("map_exponents inverts variables") {
    Laurent p = Laurent::term(2, 1, 3) + Laurent::term(5, -2, 0);
    Laurent q = p.map_exponents(-1, 1);
    CHECK(q == Laurent::term(2, -1, 3) + Laurent::term(5, 2, 0));
    CHECK(q.map_exponents(-1, 1) == p);
  }
}
