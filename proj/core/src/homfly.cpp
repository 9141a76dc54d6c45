#include "deltaknot/homfly.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "deltaknot/errors.hpp"

namespace dk {

namespace {

Laurent delta_poly() {
  // (v^-1 - v) / z, the value of an extra split unknot.
  return Laurent::term(1, -1, -1) - Laurent::term(1, 1, -1);
}

struct Spliced {
  std::vector<Crossing> xs;
  int circles = 0;
};

// Remove the victim crossings, merging the given arc-label pairs (strand
// ends spliced together). A merge class left with no remaining crossing
// ends is a closed circle.
Spliced splice(const std::vector<Crossing>& xs, std::vector<int> victims,
               const std::vector<std::pair<int, int>>& merges) {
  std::map<int, int> parent;
  auto root = [&](int a) {
    if (!parent.count(a)) parent[a] = a;
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (auto [a, b] : merges) parent[root(a)] = root(b);

  Spliced out;
  std::vector<char> dead(xs.size(), 0);
  for (int v : victims) dead[v] = 1;
  std::map<int, int> remaining;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (dead[i]) continue;
    Crossing x = xs[i];
    for (int s = 0; s < 4; ++s) {
      x.arcs[s] = root(x.arcs[s]);
      ++remaining[x.arcs[s]];
    }
    out.xs.push_back(x);
  }
  std::map<int, char> seen_root;
  for (auto [a, b] : merges)
    for (int end : {a, b}) {
      int r = root(end);
      if (!seen_root[r] && !remaining.count(r)) {
        seen_root[r] = 1;
        ++out.circles;
      }
    }
  return out;
}

// Reducible kink: one arc spanning two rotation-adjacent slots bounds a
// monogon face.
bool find_r1(const std::vector<Crossing>& xs, Spliced& result) {
  for (size_t i = 0; i < xs.size(); ++i) {
    for (int s = 0; s < 4; ++s) {
      if (xs[i].arcs[s] == xs[i].arcs[(s + 1) % 4]) {
        result = splice(xs, {static_cast<int>(i)},
                        {{xs[i].arcs[(s + 2) % 4], xs[i].arcs[(s + 3) % 4]}});
        return true;
      }
    }
  }
  return false;
}

// Cancellable bigon: a 2-sided face between distinct crossings where each
// strand keeps its depth, i.e. each bigon arc lies at equal-parity slots
// (over at both ends or under at both ends).
bool find_r2(const ClassicalDiagram& d, Spliced& result) {
  const auto& xs = d.crossings();
  PlanarMap m = d.planar_map();
  for (const auto& face : m.faces) {
    if (face.size() != 2) continue;
    int a = face[0], b = face[1];
    int i = a >> 2, j = d.theta(a) >> 2;
    if (i == j) continue;
    if (((a ^ d.theta(a)) & 1) != 0) continue;
    if (((b ^ d.theta(b)) & 1) != 0) continue;
    auto outer = [&](int dart) {
      return xs[dart >> 2].arcs[(dart + 2) & 3];
    };
    result = splice(xs, {i, j},
                    {{outer(a), outer(d.theta(a))},
                     {outer(b), outer(d.theta(b))}});
    return true;
  }
  return false;
}

// First crossing met on its under-strand before its over-strand along a
// deterministic traversal, or -1 if the diagram is descending.
int first_bad(const ClassicalDiagram& d) {
  const int nd = 4 * d.size();
  const auto& xs = d.crossings();
  std::vector<char> dart_seen(nd, 0);
  std::vector<char> visited(d.size(), 0);
  // Start each strand at the inflow end of its smallest arc label: arc
  // labels survive crossing switches, so the traversal (and hence the
  // pivot order) is stable across the recursion.
  std::vector<int> in_darts;
  in_darts.reserve(nd / 2);
  for (int dd = 0; dd < nd; ++dd)
    if (d.is_in_dart(dd)) in_darts.push_back(dd);
  std::sort(in_darts.begin(), in_darts.end(), [&](int x, int y) {
    return xs[x >> 2].arcs[x & 3] < xs[y >> 2].arcs[y & 3];
  });
  for (int start : in_darts) {
    if (dart_seen[start]) continue;
    int dart = start;
    do {
      int c = dart >> 2;
      if (!visited[c]) {
        visited[c] = 1;
        if ((dart & 3) == 0) return c;
      }
      dart_seen[dart] = 1;
      int out = d.strand_out(dart);
      dart_seen[out] = 1;
      dart = d.theta(out);
    } while (dart != start);
  }
  return -1;
}

Crossing switched(const Crossing& x) {
  // Exchanging over and under is the single-crossing mirror.
  Crossing m;
  if (x.sign > 0) {
    m.arcs = {x.arcs[3], x.arcs[0], x.arcs[1], x.arcs[2]};
    m.sign = -1;
  } else {
    m.arcs = {x.arcs[1], x.arcs[2], x.arcs[3], x.arcs[0]};
    m.sign = +1;
  }
  return m;
}

Spliced smooth(const std::vector<Crossing>& xs, int b) {
  const auto& a = xs[b].arcs;
  if (xs[b].sign > 0)
    return splice(xs, {b}, {{a[0], a[1]}, {a[3], a[2]}});
  return splice(xs, {b}, {{a[0], a[3]}, {a[1], a[2]}});
}

}  // namespace

Laurent HomflyEngine::eval(std::vector<Crossing> xs, int circles) {
  if (xs.empty()) return delta_poly().pow(circles > 0 ? circles - 1 : 0);
  Laurent p = rec(std::move(xs));
  if (circles) p *= delta_poly().pow(circles);
  return p;
}

Laurent HomflyEngine::rec(std::vector<Crossing> xs) {
  int circles = 0;
  for (;;) {
    Spliced s;
    if (find_r1(xs, s)) {
      xs = std::move(s.xs);
      circles += s.circles;
      continue;
    }
    ClassicalDiagram probe(xs);
    if (!xs.empty() && find_r2(probe, s)) {
      xs = std::move(s.xs);
      circles += s.circles;
      continue;
    }
    break;
  }
  if (xs.empty()) return delta_poly().pow(circles > 0 ? circles - 1 : 0);

  ClassicalDiagram d(xs);
  std::string key = d.canonical_key();
  auto it = memo_.find(key);
  if (it != memo_.end())
    return circles ? it->second * delta_poly().pow(circles) : it->second;

  Laurent val;
  int b = first_bad(d);
  if (b < 0) {
    // Descending: the split unlink of its components.
    val = delta_poly().pow(d.components() - 1);
  } else {
    std::vector<Crossing> sw = xs;
    sw[b] = switched(sw[b]);
    Spliced sm = smooth(xs, b);
    if (xs[b].sign > 0) {
      // v^-1 P(this) - v P(switched) = z P(smoothed)
      val = Laurent::term(1, 2) * rec(std::move(sw)) +
            Laurent::term(1, 1, 1) * eval(std::move(sm.xs), sm.circles);
    } else {
      // v^-1 P(switched) - v P(this) = z P(smoothed)
      val = Laurent::term(1, -2) * rec(std::move(sw)) -
            Laurent::term(1, -1, 1) * eval(std::move(sm.xs), sm.circles);
    }
  }
  memo_.emplace(std::move(key), val);
  return circles ? val * delta_poly().pow(circles) : val;
}

Laurent HomflyEngine::compute(const ClassicalDiagram& d) {
  if (d.size() > budget_)
    throw BudgetError("homfly: " + std::to_string(d.size()) +
                      " crossings exceeds budget " + std::to_string(budget_));
  if (d.empty()) return Laurent::one();
  return rec(d.crossings());
}

Laurent homfly(const ClassicalDiagram& d, int budget) {
  return HomflyEngine(budget).compute(d);
}

}  // namespace dk
