#include "deltaknot/tangles.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "deltaknot/errors.hpp"
#include "json.hpp"

namespace dk {
namespace {

std::vector<int> face_vertices(const PlanarMap& m, int f) {
  std::set<int> vs;
  for (int d : m.faces[f]) vs.insert(m.vertex_of(d));
  return {vs.begin(), vs.end()};
}

int face_len(const PlanarMap& m, int f) {
  return static_cast<int>(m.faces[f].size());
}

void push_unique(std::vector<TangleEmbedding>* out,
                 std::set<std::vector<int>>* seen, TangleEmbedding e) {
  std::sort(e.vertices.begin(), e.vertices.end());
  e.vertices.erase(std::unique(e.vertices.begin(), e.vertices.end()),
                   e.vertices.end());
  std::sort(e.faces.begin(), e.faces.end());
  if (seen->insert(e.vertices).second) out->push_back(std::move(e));
}

}  // namespace

const std::string& default_patterns_json() {
  static const std::string text = R"([
  {"id": "T1", "kind": "face", "size": 1},
  {"id": "T2", "kind": "edge_pair", "sizes": [2, 2]},
  {"id": "T3", "kind": "edge_pair", "sizes": [2, 3]},
  {"id": "T4", "kind": "fan", "attached_size": 2, "count": 3,
   "host_min_size": 4}
])";
  return text;
}

std::vector<PatternSpec> load_patterns(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  std::vector<PatternSpec> out;
  for (const auto& item : j) {
    PatternSpec p;
    p.id = item.at("id").get<std::string>();
    p.kind = item.at("kind").get<std::string>();
    if (p.kind == "face") {
      p.size = item.at("size").get<int>();
    } else if (p.kind == "edge_pair") {
      p.sizes[0] = item.at("sizes")[0].get<int>();
      p.sizes[1] = item.at("sizes")[1].get<int>();
    } else if (p.kind == "fan") {
      p.attached_size = item.at("attached_size").get<int>();
      p.count = item.at("count").get<int>();
      p.host_min_size = item.at("host_min_size").get<int>();
    } else {
      throw ValidationError("unknown tangle pattern kind '" + p.kind + "'");
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<PatternSpec> default_patterns() {
  return load_patterns(default_patterns_json());
}

std::vector<TangleEmbedding> detect_pattern(const PlanarMap& m,
                                            const PatternSpec& pattern) {
  std::vector<TangleEmbedding> out;
  std::set<std::vector<int>> seen;
  if (pattern.kind == "face") {
    for (int f = 0; f < m.num_faces(); ++f) {
      if (face_len(m, f) != pattern.size) continue;
      push_unique(&out, &seen, {pattern.id, face_vertices(m, f), {f}});
    }
  } else if (pattern.kind == "edge_pair") {
    for (int d = 0; d < m.degree * m.nv; ++d) {
      if (d > m.theta[d]) continue;
      int f1 = m.face_of[d];
      int f2 = m.face_of[m.theta[d]];
      if (f1 == f2) continue;
      int a = face_len(m, f1);
      int b = face_len(m, f2);
      if (!((a == pattern.sizes[0] && b == pattern.sizes[1]) ||
            (a == pattern.sizes[1] && b == pattern.sizes[0]))) {
        continue;
      }
      auto vs = face_vertices(m, f1);
      auto vs2 = face_vertices(m, f2);
      vs.insert(vs.end(), vs2.begin(), vs2.end());
      push_unique(&out, &seen, {pattern.id, std::move(vs), {f1, f2}});
    }
  } else if (pattern.kind == "fan") {
    for (int f = 0; f < m.num_faces(); ++f) {
      int len = face_len(m, f);
      if (len < pattern.host_min_size || len < pattern.count) continue;
      const auto& cyc = m.faces[f];
      for (int i = 0; i < len; ++i) {
        std::vector<int> attached;
        std::vector<int> vs;
        bool ok = true;
        for (int k = 0; k < pattern.count && ok; ++k) {
          int d = cyc[(i + k) % len];
          int g = m.face_of[m.theta[d]];
          ok = g != f && face_len(m, g) == pattern.attached_size &&
               std::find(attached.begin(), attached.end(), g) ==
                   attached.end();
          if (ok) {
            attached.push_back(g);
            vs.push_back(m.vertex_of(d));
            vs.push_back(m.vertex_of(m.theta[d]));
          }
        }
        if (!ok) continue;
        attached.push_back(f);
        push_unique(&out, &seen,
                    {pattern.id, std::move(vs), std::move(attached)});
      }
    }
  } else {
    throw ValidationError("unknown tangle pattern kind '" + pattern.kind +
                          "'");
  }
  return out;
}

namespace {

using Objective = std::array<int, 4>;  // (t1+t2, t1, t2, t3+t4)

struct Search {
  std::vector<const TangleEmbedding*> flat;
  std::vector<int> pat_of;  // 0..3
  Objective best{-1, -1, -1, -1};
  std::vector<int> best_pick;
  std::vector<int> pick;

  void rec(size_t i, std::set<int>& used, std::array<int, 4>& t) {
    if (i == flat.size()) {
      Objective obj{t[0] + t[1], t[0], t[1], t[2] + t[3]};
      if (obj > best) {
        best = obj;
        best_pick = pick;
      }
      return;
    }
    const auto& e = *flat[i];
    bool free_ = std::none_of(e.vertices.begin(), e.vertices.end(),
                              [&](int v) { return used.count(v) > 0; });
    if (free_) {
      for (int v : e.vertices) used.insert(v);
      ++t[pat_of[i]];
      pick.push_back(static_cast<int>(i));
      rec(i + 1, used, t);
      pick.pop_back();
      --t[pat_of[i]];
      for (int v : e.vertices) used.erase(v);
    }
    rec(i + 1, used, t);
  }
};

}  // namespace

TangleCount max_disjoint_counts(const PlanarMap& m,
                                const std::vector<PatternSpec>& patterns) {
  std::vector<std::vector<TangleEmbedding>> byp;
  for (const auto& p : patterns) byp.push_back(detect_pattern(m, p));

  Search s;
  for (size_t p = 0; p < byp.size(); ++p) {
    for (const auto& e : byp[p]) {
      s.flat.push_back(&e);
      s.pat_of.push_back(static_cast<int>(p));
    }
  }
  std::set<int> used;
  std::array<int, 4> t{0, 0, 0, 0};
  s.rec(0, used, t);

  TangleCount out;
  for (int i : s.best_pick) {
    out.selected.push_back(*s.flat[i]);
    switch (s.pat_of[i]) {
      case 0: ++out.t1; break;
      case 1: ++out.t2; break;
      case 2: ++out.t3; break;
      default: ++out.t4; break;
    }
  }
  return out;
}

TangleCount max_disjoint_counts(const PlanarMap& m) {
  return max_disjoint_counts(m, default_patterns());
}

ExistenceReport verify_existence(const PlanarMap& m) {
  for (const auto& p : default_patterns()) {
    if (!detect_pattern(m, p).empty()) return {true, ""};
  }
  std::string detail = "no tangle T1..T4 embeds; face vector:";
  for (int c : m.face_vector()) detail += " " + std::to_string(c);
  detail += "; map: " + canonical_code(m, {}, false);
  return {false, detail};
}

FaceIdentityReport face_identity_report(const PlanarMap& m) {
  FaceIdentityReport rep;
  rep.face_vector = m.face_vector();
  const auto& fv = rep.face_vector;
  auto at = [&](size_t k) { return k < fv.size() ? fv[k] : 0; };
  int rhs = 6;
  for (size_t k = 4; k < fv.size(); ++k) {
    rhs += (static_cast<int>(k) - 3) * fv[k];
  }
  rep.residual = 2 * at(1) + at(2) - rhs;
  for (int f = 0; f < m.num_faces(); ++f) {
    int len = static_cast<int>(m.faces[f].size());
    if (len < 4) continue;
    FaceFlag flag;
    flag.face = f;
    flag.length = len;
    flag.limit = 2 * len / 3;
    for (int d : m.faces[f]) {
      int g = m.face_of[m.theta[d]];
      if (g != f && m.faces[g].size() == 2) ++flag.bigon_edges;
    }
    flag.over_limit = flag.bigon_edges > flag.limit;
    rep.flags.push_back(flag);
  }
  return rep;
}

}  // namespace dk
