#include "deltaknot/fingerprint.hpp"

#include <algorithm>
#include <stdexcept>

namespace dk {

namespace {

Laurent z_sub() {
  // t^1/2 - t^-1/2 in half-step exponents
  return Laurent::monomial(1, 1) - Laurent::monomial(1, -1);
}

// Exact division in t, low-to-high; the specializations below only divide
// when the quotient is again a Laurent polynomial.
Laurent divide_exact(Laurent num, const Laurent& den) {
  auto lowest = [](const Laurent& p) { return *p.terms().begin(); };
  auto [dk, dc] = lowest(den);
  Laurent q;
  int guard = 4 * (num.span(1) + den.span(1) + 4);
  while (!num.is_zero()) {
    auto [nk, nc] = lowest(num);
    if (nc % dc != 0 || --guard < 0)
      throw std::domain_error("specialization: inexact division");
    Laurent t = Laurent::monomial(nc / dc, nk.first - dk.first,
                                  nk.second - dk.second);
    num -= t * den;
    q += t;
  }
  return q;
}

// Substitute v and z, clearing negative z powers (present for links: the
// split-unknot factor is (v^-1 - v)/z) by multiplying through and dividing
// at the end.
Laurent specialize(const Laurent& p, const Laurent& vsub) {
  int m = p.is_zero() ? 0 : std::min(0, p.min_exp(2));
  Laurent shifted = p * Laurent::monomial(1, 0, -m);
  Laurent s = shifted.substitute(vsub, z_sub());
  if (m == 0) return s;
  return divide_exact(std::move(s), z_sub().pow(-m / 2));
}

}  // namespace

Laurent jones_from_homfly(const Laurent& p) {
  return specialize(p, Laurent::term(1, 1));
}

Laurent alexander_from_homfly(const Laurent& p) {
  return specialize(p, Laurent::one());
}

Fingerprint fingerprint(const ClassicalDiagram& d, HomflyEngine* engine) {
  Fingerprint f;
  f.components = d.empty() ? 1 : d.components();
  f.homfly = engine ? engine->compute(d) : homfly(d);
  f.jones = jones_from_homfly(f.homfly);
  f.alexander = alexander_from_homfly(f.homfly);
  return f;
}

Fingerprint mirror_fingerprint(const Fingerprint& f) {
  Fingerprint m;
  m.components = f.components;
  // Swapping L+ and L- sends v to -v^-1.
  for (const auto& [k, c] : f.homfly.terms())
    m.homfly += Laurent::monomial(k.first % 4 == 0 ? c : -c, -k.first, k.second);
  m.jones = f.jones.map_exponents(-1, 0);
  m.alexander = f.alexander;
  return m;
}

bool Fingerprint::operator<(const Fingerprint& o) const {
  if (components != o.components) return components < o.components;
  if (homfly != o.homfly) return homfly < o.homfly;
  if (jones != o.jones) return jones < o.jones;
  return alexander < o.alexander;
}

std::string Fingerprint::str() const {
  return std::to_string(components) + " | " + homfly.str("v", "z") + " | " +
         jones.str("t") + " | " + alexander.str("t");
}

}  // namespace dk
