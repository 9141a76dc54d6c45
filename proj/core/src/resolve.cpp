#include "deltaknot/resolve.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "deltaknot/errors.hpp"
#include "deltaknot/tangles.hpp"

namespace dk {

std::vector<int> oriented_legs(const ShadowProjection& base, int v) {
  auto orient = natural_orientation(base);
  if (!orient) throw ValidationError("diagram admits no natural orientation");
  int rot = (*orient)[6 * v] ? 0 : 1;
  std::vector<int> legs(6);
  for (int k = 0; k < 6; ++k) legs[k] = 6 * v + (rot + k) % 6;
  return legs;
}

PatchedDiagram apply_patches(const ShadowProjection& base,
                             const std::vector<PatchSite>& sites) {
  const int nb = base.size();
  std::vector<int> site_of(nb, -1);
  for (size_t s = 0; s < sites.size(); ++s) {
    for (int v : sites[s].vertices) {
      if (site_of[v] != -1) throw ValidationError("vertex in two sites");
      site_of[v] = static_cast<int>(s);
    }
  }
  for (int v = 0; v < nb; ++v) {
    if (site_of[v] == -1) throw ValidationError("vertex not covered by sites");
  }

  // Where each site's new vertices land in the output numbering.
  std::vector<int> voff(sites.size() + 1, 0);
  for (size_t s = 0; s < sites.size(); ++s) {
    voff[s + 1] = voff[s] + static_cast<int>(sites[s].patch.labels.size());
  }
  const int nv = voff[sites.size()];

  // Classify base darts: leg k of some site, or consumed internal.
  std::vector<int> leg_site(6 * nb, -1), leg_idx(6 * nb, -1);
  for (size_t s = 0; s < sites.size(); ++s) {
    const auto& legs = sites[s].legs;
    if (legs.size() != sites[s].patch.legs.size()) {
      throw ValidationError("patch leg count mismatch");
    }
    for (size_t k = 0; k < legs.size(); ++k) {
      leg_site[legs[k]] = static_cast<int>(s);
      leg_idx[legs[k]] = static_cast<int>(k);
    }
  }

  std::vector<int> theta(6 * nv, -1);
  auto connect = [&](int d1, int d2) {
    if (theta[d1] != -1 || theta[d2] != -1 || d1 == d2) {
      throw ValidationError("conflicting patch wiring");
    }
    theta[d1] = d2;
    theta[d2] = d1;
  };
  auto port_dart = [&](size_t s, int k) {
    const auto& e = sites[s].patch.legs[k];
    return 6 * (voff[s] + e[0]) + e[1];
  };

  for (size_t s = 0; s < sites.size(); ++s) {
    for (const auto& e : sites[s].patch.internal) {
      connect(6 * (voff[s] + e[0]) + e[1], 6 * (voff[s] + e[2]) + e[3]);
    }
  }

  // Trace arcs through old edges and patch wires.
  std::vector<char> done(6 * nb, 0);
  int free_loops = 0;
  auto across = [&](int d) {
    // follow the old edge at leg d, then any wires, to the next leg whose
    // patch entry is a port (or back around a closed wire cycle).
    int e = base.theta(d);
    while (true) {
      done[e] = 1;
      const auto& entry = sites[leg_site[e]].patch.legs[leg_idx[e]];
      if (entry[0] >= 0) return e;
      int f = sites[leg_site[e]].legs[entry[1]];
      if (done[f]) return -1;  // closed crossing-free component
      done[f] = 1;
      e = base.theta(f);
    }
  };
  for (int d = 0; d < 6 * nb; ++d) {
    if (done[d] || leg_site[d] < 0) continue;
    const auto& entry = sites[leg_site[d]].patch.legs[leg_idx[d]];
    if (entry[0] < 0) continue;  // reached from a port side later, or a loop
    done[d] = 1;
    int e = across(d);
    if (e < 0) throw ValidationError("wire cycle hit a port path");
    connect(port_dart(leg_site[d], leg_idx[d]),
            port_dart(leg_site[e], leg_idx[e]));
  }
  // Remaining undone legs sit on closed wire cycles: count the loops.
  for (int d = 0; d < 6 * nb; ++d) {
    if (done[d] || leg_site[d] < 0) continue;
    ++free_loops;
    int cur = d;
    while (!done[cur]) {
      done[cur] = 1;
      const auto& entry = sites[leg_site[cur]].patch.legs[leg_idx[cur]];
      if (entry[0] >= 0) throw ValidationError("unreached port leg");
      int f = sites[leg_site[cur]].legs[entry[1]];
      done[f] = 1;
      cur = base.theta(f);
    }
  }

  PatchedDiagram out;
  out.free_loops = free_loops;
  for (size_t s = 0; s < sites.size(); ++s) {
    for (const auto& lab : sites[s].patch.labels) out.labels.push_back(lab);
  }
  if (nv == 0) return out;

  std::vector<std::array<int, 6>> verts(nv);
  int next_arc = 1;
  for (int d = 0; d < 6 * nv; ++d) {
    if (theta[d] == -1) throw ValidationError("dangling patch dart");
    if (theta[d] >= d) {
      verts[d / 6][d % 6] = next_arc;
      verts[theta[d] / 6][theta[d] % 6] = next_arc;
      ++next_arc;
    }
  }
  out.shadow = ShadowProjection(std::move(verts));
  return out;
}

int c3_upper_from_delta(int c_delta) { return 2 * c_delta; }

int delta_upper_bound(const TripleDiagram& d) {
  auto tc = max_disjoint_counts(d.base().planar_map());
  return 2 * d.size() - tc.t1 - tc.t2;
}

namespace {

// Rule tables. Shapes and label assignments were found by exhaustive
// search over planar disk tangles, accepting a candidate only when the
// expansion fingerprint is preserved on every host diagram in the search
// corpus (see tools/derive_rules.cpp, which regenerates this block).
#include "resolve_rules.inc"

std::string naive_key(const TripleDiagram& d, int v, int rot) {
  std::string w(3, '?');
  for (int i = 0; i < 3; ++i) w[i] = d.roles()[v][(rot + i) % 3];
  return w;
}

}  // namespace

TripleDiagram delta_to_triples(const DeltaDiagram& d) {
  if (d.size() == 0) return {};
  auto orient = natural_orientation(d.base());
  if (!orient) throw ValidationError("diagram admits no natural orientation");
  std::vector<PatchSite> sites;
  for (int v = 0; v < d.size(); ++v) {
    PatchSite site;
    site.vertices = {v};
    site.legs = oriented_legs(d.base(), v);
    site.patch = delta_rule(d.letter(v));
    sites.push_back(std::move(site));
  }
  auto res = apply_patches(d.base(), sites);
  if (res.free_loops != 0) throw ValidationError("unexpected free loop");
  std::vector<std::array<char, 3>> roles;
  for (const auto& w : res.labels) roles.push_back({w[0], w[1], w[2]});
  return TripleDiagram(std::move(res.shadow), std::move(roles));
}

namespace {

DeltaDiagram to_delta(PatchedDiagram&& res) {
  std::vector<char> letters;
  for (const auto& lab : res.labels) letters.push_back(lab[0]);
  if (letters.empty()) return {};
  return DeltaDiagram(std::move(letters), res.shadow.verts());
}

}  // namespace

DeltaDiagram triple_to_deltas_naive(const TripleDiagram& d) {
  if (d.size() == 0) return {};
  auto orient = natural_orientation(d.base());
  if (!orient) throw ValidationError("diagram admits no natural orientation");
  std::vector<PatchSite> sites;
  for (int v = 0; v < d.size(); ++v) {
    int rot = (*orient)[6 * v] ? 0 : 1;
    PatchSite site;
    site.vertices = {v};
    site.legs = oriented_legs(d.base(), v);
    site.patch = naive_rule(naive_key(d, v, rot));
    sites.push_back(std::move(site));
  }
  auto res = apply_patches(d.base(), sites);
  if (res.free_loops != 0) throw ValidationError("unexpected free loop");
  return to_delta(std::move(res));
}

std::vector<SiteSpec> resolution_sites(const TripleDiagram& d) {
  const auto& base = d.base();
  auto orient = natural_orientation(base);
  if (!orient) throw ValidationError("diagram admits no natural orientation");
  auto m = base.planar_map();
  auto tc = max_disjoint_counts(m);

  std::vector<char> used(base.size(), 0);
  std::vector<SiteSpec> out;

  for (const auto& emb : tc.selected) {
    if (emb.pattern == "T1") {
      int v = emb.vertices[0];
      // the monogon's single dart sits one slot counterclockwise of its
      // partner: loop at slots (s, s+1)
      int dart = m.faces[emb.faces[0]][0];
      int s = (dart % 6 + 5) % 6;
      int rot = (*orient)[6 * v] ? 0 : 1;
      char loop0 = d.role_at(6 * v + s);
      char loop1 = d.role_at(6 * v + (s + 1) % 6);
      char other = d.role_at(6 * v + (s + 2) % 6);
      SiteSpec spec;
      spec.site.vertices = {v};
      for (int k = 2; k <= 5; ++k)
        spec.site.legs.push_back(6 * v + (s + k) % 6);
      if (other == 'M') {
        int parity = ((s - rot) % 2 + 2) % 2;
        spec.key = std::string("T1:") + std::to_string(parity) + ":" + loop0 +
                   loop1;
      } else {
        spec.key = "T1:arcs";
      }
      used[v] = 1;
      out.push_back(std::move(spec));
    } else if (emb.pattern == "T2") {
      // recover the three parallel edges from the two bigons
      std::set<int> edge_darts;
      for (int f : emb.faces) {
        for (int dd : m.faces[f]) {
          edge_darts.insert(dd);
          edge_darts.insert(m.theta[dd]);
        }
      }
      int v1 = emb.vertices[0], v2 = emb.vertices[1];
      auto first_slot = [&](int v) {
        // the three internal ends occupy consecutive slots a, a+1, a+2
        std::set<int> slots;
        for (int dd : edge_darts)
          if (dd / 6 == v) slots.insert(dd % 6);
        for (int a = 0; a < 6; ++a) {
          if (slots.count(a) && slots.count((a + 1) % 6) &&
              slots.count((a + 2) % 6) && !slots.count((a + 5) % 6)) {
            return a;
          }
        }
        throw ValidationError("T2 edges not consecutive");
      };
      int a = first_slot(v1);
      int c = first_slot(v2);
      if (base.theta(6 * v1 + (a + 2) % 6) != 6 * v2 + c ||
          base.theta(6 * v1 + a) != 6 * v2 + (c + 2) % 6) {
        throw ValidationError("unexpected T2 edge pairing");
      }
      int rot1 = (*orient)[6 * v1] ? 0 : 1;
      int parity = ((a - rot1) % 2 + 2) % 2;
      std::string w1(3, '?'), w2(3, '?');
      for (int i = 0; i < 3; ++i) {
        w1[i] = d.role_at(6 * v1 + (a + i) % 6);
        w2[i] = d.role_at(6 * v2 + (c + i) % 6);
      }
      SiteSpec spec;
      spec.site.vertices = {v1, v2};
      for (int k = 3; k <= 5; ++k)
        spec.site.legs.push_back(6 * v1 + (a + k) % 6);
      for (int k = 3; k <= 5; ++k)
        spec.site.legs.push_back(6 * v2 + (c + k) % 6);
      spec.key = "T2:" + std::to_string(parity) + ":" + w1 + ":" + w2;
      used[v1] = used[v2] = 1;
      out.push_back(std::move(spec));
    }
    // T3/T4 embeddings yield no savings and fall through to naive rules.
  }

  for (int v = 0; v < base.size(); ++v) {
    if (used[v]) continue;
    int rot = (*orient)[6 * v] ? 0 : 1;
    SiteSpec spec;
    spec.site.vertices = {v};
    spec.site.legs = oriented_legs(base, v);
    spec.key = "naive:" + naive_key(d, v, rot);
    out.push_back(std::move(spec));
  }
  return out;
}

namespace {

TanglePatch rule_for_key(const std::string& key) {
  if (key == "T1:arcs") {
    // the free strand passes entirely above or below: both crossings
    // cancel and the loop untwists
    TanglePatch p;
    p.legs = {{-1, 3}, {-1, 2}, {-1, 1}, {-1, 0}};
    return p;
  }
  if (key.rfind("naive:", 0) == 0) return naive_rule(key.substr(6));
  if (key.rfind("T1:", 0) == 0) {
    return t1_rule(key[3] - '0', key[5], key[6]);
  }
  if (key.rfind("T2:", 0) == 0) {
    return t2_rule(key[3] - '0', key.substr(5, 3), key.substr(9, 3));
  }
  throw ValidationError("unknown rule key " + key);
}

}  // namespace

std::pair<DeltaDiagram, ResolutionReport> triple_to_deltas_optimized(
    const TripleDiagram& d) {
  ResolutionReport rep;
  rep.input_kind = "tpd";
  rep.input_crossings = d.size();
  rep.output_kind = "dpd";
  if (d.size() == 0) return {DeltaDiagram{}, rep};

  auto specs = resolution_sites(d);
  std::vector<PatchSite> sites;
  for (auto& spec : specs) {
    spec.site.patch = rule_for_key(spec.key);
    rep.rules.push_back(spec.key);
    sites.push_back(std::move(spec.site));
  }
  auto res = apply_patches(d.base(), sites);
  rep.free_loops = res.free_loops;
  rep.output_crossings = static_cast<int>(res.labels.size());
  return {to_delta(std::move(res)), rep};
}

}  // namespace dk
