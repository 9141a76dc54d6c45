#include "deltaknot/bracket.hpp"

#include <numeric>

#include "deltaknot/errors.hpp"

namespace dk {

namespace {

int find_root(std::vector<int>& uf, int x) {
  while (uf[x] != x) x = uf[x] = uf[uf[x]];
  return x;
}

}  // namespace

Laurent kauffman_bracket(const ClassicalDiagram& d, int budget) {
  const int c = d.size();
  if (c > budget)
    throw BudgetError("bracket: " + std::to_string(c) + " crossings exceeds budget " +
                      std::to_string(budget));
  if (c == 0) return Laurent::one();
  const Laurent delta = Laurent::term(-1, 2) - Laurent::term(1, -2);  // -A^2-A^-2
  const int nd = 4 * c;
  Laurent result;
  std::vector<int> uf(nd);
  for (unsigned mask = 0; mask < (1u << c); ++mask) {
    std::iota(uf.begin(), uf.end(), 0);
    auto join = [&](int a, int b) { uf[find_root(uf, a)] = find_root(uf, b); };
    for (int i = 0; i < c; ++i) {
      if (mask >> i & 1) {
        join(4 * i + 0, 4 * i + 3);  // B-smoothing
        join(4 * i + 1, 4 * i + 2);
      } else {
        join(4 * i + 0, 4 * i + 1);  // A-smoothing
        join(4 * i + 2, 4 * i + 3);
      }
    }
    for (int dart = 0; dart < nd; ++dart) join(dart, d.theta(dart));
    int loops = 0;
    for (int dart = 0; dart < nd; ++dart)
      if (find_root(uf, dart) == dart) ++loops;
    int b = __builtin_popcount(mask);
    result += Laurent::term(1, c - 2 * b) * delta.pow(loops - 1);
  }
  return result;
}

Laurent jones_via_bracket(const ClassicalDiagram& d, int budget) {
  Laurent br = kauffman_bracket(d, budget);
  int w = d.writhe();
  // (-A)^(-3w) = (-1)^w * A^(-3w)
  br *= Laurent::term(w % 2 ? -1 : 1, -3 * w);
  // Rewrite A^k as t^(-k/4); valid normalized brackets only hit k = 0 mod 4
  // for knots and 2 mod 4 for even-component links.
  Laurent out;
  for (const auto& [k, coef] : br.terms()) {
    if (k.first % 4 != 0)
      throw std::logic_error("jones_via_bracket: unexpected bracket exponent");
    out += Laurent::monomial(coef, -k.first / 4);
  }
  return out;
}

}  // namespace dk
