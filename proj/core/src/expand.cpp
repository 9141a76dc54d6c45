#include "deltaknot/expand.hpp"

#include "deltaknot/errors.hpp"
#include "deltaknot/letters.hpp"

namespace dk {

namespace {

// A tangle of three pairwise-crossing oriented chords: A runs b0 -> b3,
// B runs b2 -> b5, C runs b4 -> b1 (boundary slots counterclockwise, the
// inflows at even slots). The chords meet in three crossings AB, BC, CA
// forming the central triangle; `chir` picks its rotational sense (which
// neighbor each chord meets first). Ports are (crossing, position) with
// positions counterclockwise.
//
// Port tables. crossing index: 0 = AB, 1 = BC, 2 = AC. Each port entry
// states the strand (0=A,1=B,2=C) and whether the strand runs in; the
// wiring lists, per chirality: boundary slot -> port, and the three
// internal arcs as port pairs.
struct Port {
  int strand;
  bool in;
};

constexpr Port kPorts[2][3][4] = {
    // chir 0
    {
        // AB: [B_out(->BC), A_in(<-AC), B_in(b2), A_out(b3)]
        {{1, false}, {0, true}, {1, true}, {0, false}},
        // BC: [B_out(b5), C_out(->AC), B_in(<-AB), C_in(b4)]
        {{1, false}, {2, false}, {1, true}, {2, true}},
        // AC: [A_in(b0), C_out(b1), A_out(->AB), C_in(<-BC)]
        {{0, true}, {2, false}, {0, false}, {2, true}},
    },
    // chir 1
    {
        // AB: [B_out(b5), A_in(b0), B_in(<-BC), A_out(->AC)]
        {{1, false}, {0, true}, {1, true}, {0, false}},
        // BC: [B_out(->AB), C_out(b1), B_in(b2), C_in(<-AC)]
        {{1, false}, {2, false}, {1, true}, {2, true}},
        // AC: [A_in(<-AB), C_out(->BC), A_out(b3), C_in(b4)]
        {{0, true}, {2, false}, {0, false}, {2, true}},
    },
};

// boundary slot b -> (crossing, position)
constexpr int kBoundary[2][6][2] = {
    {{2, 0}, {2, 1}, {0, 2}, {0, 3}, {1, 3}, {1, 0}},  // chir 0
    {{0, 1}, {1, 1}, {1, 2}, {2, 2}, {2, 3}, {0, 0}},  // chir 1
};

// internal arcs as ((crossing, pos), (crossing, pos))
constexpr int kInternal[2][3][4] = {
    {{2, 2, 0, 1}, {0, 0, 1, 2}, {1, 1, 2, 3}},  // chir 0: A, B, C legs
    {{0, 3, 2, 0}, {1, 0, 0, 2}, {2, 1, 1, 3}},  // chir 1
};

// Expands a diagram whose vertices are three-chord tangles. over_of(v)
// returns, per crossing kind {0=AB,1=BC,2=AC}, the strand on top; chir_of
// gives the tangle's chirality.
template <class ChirFn, class OverFn>
ClassicalDiagram expand_tangles(const ShadowProjection& base, ChirFn chir_of,
                                OverFn over_of) {
  auto orient = natural_orientation(base);
  if (!orient) throw ValidationError("diagram admits no natural orientation");
  const int n = base.size();
  // labels[3v + crossing][position]
  std::vector<std::array<int, 4>> labels(3 * n, {0, 0, 0, 0});
  int next_arc = 1;
  std::vector<int> rot(n);  // slot of the tangle's effective b0
  for (int v = 0; v < n; ++v) {
    rot[v] = (*orient)[6 * v] ? 0 : 1;
    int chir = chir_of(v);
    for (const auto& leg : kInternal[chir]) {
      labels[3 * v + leg[0]][leg[1]] = next_arc;
      labels[3 * v + leg[2]][leg[3]] = next_arc;
      ++next_arc;
    }
  }
  for (int d = 0; d < 6 * n; ++d) {
    if (base.theta(d) < d) continue;
    for (int end : {d, base.theta(d)}) {
      int v = end / 6;
      int b = (end % 6 - rot[v] + 6) % 6;
      const int* bp = kBoundary[chir_of(v)][b];
      labels[3 * v + bp[0]][bp[1]] = next_arc;
    }
    ++next_arc;
  }

  std::vector<Crossing> out;
  out.reserve(3 * n);
  for (int v = 0; v < n; ++v) {
    int chir = chir_of(v);
    for (int k = 0; k < 3; ++k) {
      int over = over_of(v, k);
      int under_in = -1, over_in = -1;
      for (int pos = 0; pos < 4; ++pos) {
        const Port& p = kPorts[chir][k][pos];
        if (!p.in) continue;
        (p.strand == over ? over_in : under_in) = pos;
      }
      Crossing x;
      for (int i = 0; i < 4; ++i)
        x.arcs[i] = labels[3 * v + k][(under_in + i) % 4];
      x.sign = ((over_in - under_in + 4) % 4 == 3) ? +1 : -1;
      out.push_back(x);
    }
  }
  return ClassicalDiagram(std::move(out));
}

}  // namespace

ClassicalDiagram delta_to_classical(const DeltaDiagram& d) {
  // Dominance around the triangle: pattern 0 has A over B, B over C,
  // C over A; pattern 1 is the reverse.
  std::vector<std::string> labels;
  labels.reserve(d.base().size());
  for (int v = 0; v < d.base().size(); ++v)
    labels.emplace_back(1, d.letter(v));
  return expand_labeled(d.base(), labels);
}

ClassicalDiagram triple_to_classical(const TripleDiagram& d) {
  std::vector<std::string> labels;
  labels.reserve(d.base().size());
  for (const auto& w : d.roles()) labels.emplace_back(w.begin(), w.end());
  return expand_labeled(d.base(), labels);
}

ClassicalDiagram expand_labeled(const ShadowProjection& base,
                                const std::vector<std::string>& labels) {
  if (static_cast<int>(labels.size()) != base.size()) {
    throw ValidationError("one label per vertex required");
  }
  auto orient = natural_orientation(base);
  if (!orient) throw ValidationError("diagram admits no natural orientation");
  auto depth = [](char r) { return r == 'T' ? 2 : r == 'M' ? 1 : 0; };
  static const int over_cyc[2][3] = {{0, 1, 2}, {1, 2, 0}};
  return expand_tangles(
      base,
      [&](int v) {
        return labels[v].size() == 1 ? letter_spec(labels[v][0]).chir : 0;
      },
      [&](int v, int k) {
        const std::string& lab = labels[v];
        if (lab.size() == 1) return over_cyc[letter_spec(lab[0]).pat][k];
        int r = (*orient)[6 * v] ? 0 : 1;
        // strands A, B, C occupy slots r, r+2, r+4
        int sa = depth(lab[r % 3]);
        int sb = depth(lab[(r + 2) % 3]);
        int sc = depth(lab[(r + 4) % 3]);
        if (k == 0) return sa > sb ? 0 : 1;  // AB
        if (k == 1) return sb > sc ? 1 : 2;  // BC
        return sa > sc ? 0 : 2;              // AC
      });
}

}  // namespace dk
