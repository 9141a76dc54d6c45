#include "deltaknot/classical.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "deltaknot/errors.hpp"

namespace dk {

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;
  void ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c))
      throw ParseError(std::string("expected '") + c + "'", i);
  }
  int integer() {
    ws();
    size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    size_t digits = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == digits) throw ParseError("expected integer", start);
    return std::atoi(s.substr(start, i - start).c_str());
  }
  bool done() {
    ws();
    return i >= s.size();
  }
};

}  // namespace

ClassicalDiagram::ClassicalDiagram(std::vector<Crossing> xs) : xs_(std::move(xs)) {
  validate_and_index();
}

bool ClassicalDiagram::is_in_dart(int dart) const {
  int s = dart & 3;
  if (s == 0) return true;
  if (s == 2) return false;
  int sign = xs_[dart >> 2].sign;
  return (sign > 0) ? s == 3 : s == 1;
}

int ClassicalDiagram::theta(int dart) const { return theta_[dart]; }

void ClassicalDiagram::validate_and_index() {
  const int nd = 4 * size();
  theta_.assign(nd, -1);
  std::map<int, std::vector<int>> occ;
  for (int d = 0; d < nd; ++d) occ[xs_[d >> 2].arcs[d & 3]].push_back(d);
  for (auto& [arc, darts] : occ) {
    if (darts.size() != 2)
      throw ValidationError("arc " + std::to_string(arc) +
                            " used " + std::to_string(darts.size()) +
                            " times, expected 2");
    if (is_in_dart(darts[0]) == is_in_dart(darts[1]))
      throw ValidationError("arc " + std::to_string(arc) +
                            " has inconsistent orientation");
    theta_[darts[0]] = darts[1];
    theta_[darts[1]] = darts[0];
  }
}

ClassicalDiagram ClassicalDiagram::parse(const std::string& text) {
  Cursor c{text};
  c.expect('[');
  std::vector<Crossing> xs;
  std::vector<bool> have_sign;
  if (!c.eat(']')) {
    do {
      c.ws();
      if (c.i >= text.size() || text[c.i] != 'X')
        throw ParseError("expected 'X'", c.i);
      ++c.i;
      int sign = 0;
      if (c.i < text.size() && (text[c.i] == '+' || text[c.i] == '-')) {
        sign = text[c.i] == '+' ? +1 : -1;
        ++c.i;
      }
      c.expect('[');
      Crossing x;
      for (int k = 0; k < 4; ++k) {
        if (k) c.expect(',');
        x.arcs[k] = c.integer();
      }
      c.expect(']');
      x.sign = sign == 0 ? +1 : sign;
      xs.push_back(x);
      have_sign.push_back(sign != 0);
    } while (c.eat(','));
    c.expect(']');
  }
  if (!c.done()) throw ParseError("trailing input", c.i);

  // Infer missing signs from orientation consistency: every arc must have
  // one inflow and one outflow end.
  const int n = static_cast<int>(xs.size());
  std::vector<int> known(n);
  for (int i = 0; i < n; ++i) known[i] = have_sign[i];
  auto flow_at = [&](int cr, int slot, int sign) {
    // +1 = in, -1 = out
    if (slot == 0) return +1;
    if (slot == 2) return -1;
    if (sign > 0) return slot == 3 ? +1 : -1;
    return slot == 1 ? +1 : -1;
  };
  bool progress = true;
  while (true) {
    // Propagate until stable, then default one unknown and repeat.
    progress = false;
    std::map<int, std::vector<std::pair<int, int>>> occ;  // arc -> (cr, slot)
    for (int i = 0; i < n; ++i)
      for (int s = 0; s < 4; ++s) occ[xs[i].arcs[s]].push_back({i, s});
    for (auto& [arc, ends] : occ) {
      if (ends.size() != 2) continue;  // validation will report it
      auto [c1, s1] = ends[0];
      auto [c2, s2] = ends[1];
      for (int rep = 0; rep < 2; ++rep) {
        // Flow at slots 0 and 2 is fixed regardless of sign, so those
        // ends anchor the propagation even at crossings of unknown sign.
        bool src_known = known[c1] || s1 == 0 || s1 == 2;
        if (src_known && !known[c2] && (s2 == 1 || s2 == 3)) {
          int f1 = flow_at(c1, s1, xs[c1].sign);
          // arc needs opposite flow at the other end
          for (int cand : {+1, -1}) {
            if (flow_at(c2, s2, cand) == -f1) {
              xs[c2].sign = cand;
              known[c2] = true;
              progress = true;
            }
          }
        }
        std::swap(c1, c2);
        std::swap(s1, s2);
      }
    }
    if (!progress) {
      int first_unknown = -1;
      for (int i = 0; i < n; ++i)
        if (!known[i]) {
          first_unknown = i;
          break;
        }
      if (first_unknown < 0) break;
      xs[first_unknown].sign = +1;
      known[first_unknown] = true;
    }
  }
  return ClassicalDiagram(std::move(xs));
}

std::string ClassicalDiagram::emit() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < size(); ++i) {
    if (i) os << ", ";
    os << "X" << (xs_[i].sign > 0 ? "+" : "-") << "[";
    for (int k = 0; k < 4; ++k) {
      if (k) os << ", ";
      os << xs_[i].arcs[k];
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

int ClassicalDiagram::writhe() const {
  int w = 0;
  for (const auto& x : xs_) w += x.sign;
  return w;
}

int ClassicalDiagram::components() const {
  if (empty()) return 0;
  const int nd = 4 * size();
  std::vector<char> seen(nd, 0);
  int comp = 0;
  for (int d0 = 0; d0 < nd; ++d0) {
    if (seen[d0] || !is_in_dart(d0)) continue;
    ++comp;
    int d = d0;
    do {
      seen[d] = 1;
      int out = strand_out(d);
      seen[out] = 1;
      d = theta_[out];
    } while (d != d0);
  }
  return comp;
}

ClassicalDiagram ClassicalDiagram::mirror() const {
  std::vector<Crossing> out;
  out.reserve(xs_.size());
  for (const auto& x : xs_) {
    Crossing m;
    if (x.sign > 0) {
      // new incoming under = old slot 3
      m.arcs = {x.arcs[3], x.arcs[0], x.arcs[1], x.arcs[2]};
      m.sign = -1;
    } else {
      m.arcs = {x.arcs[1], x.arcs[2], x.arcs[3], x.arcs[0]};
      m.sign = +1;
    }
    out.push_back(m);
  }
  return ClassicalDiagram(std::move(out));
}

PlanarMap ClassicalDiagram::planar_map() const {
  return build_map(4, size(), theta_);
}

std::string ClassicalDiagram::canonical_key() const {
  if (empty()) return "[]";
  const int nd = 4 * size();
  std::string best;
  for (int start = 0; start < nd; ++start) {
    if (!is_in_dart(start)) continue;
    // Traverse strands; assign crossing numbers by first visit and record
    // the visit rotation implicitly via the fixed slot-0 convention.
    std::vector<int> number(size(), -1);
    std::vector<int> order;
    int next_no = 0;
    std::vector<char> dart_seen(nd, 0);
    int d = start;
    int traversed = 0;
    while (traversed < nd / 2) {
      if (dart_seen[d]) {
        // find next unvisited in-dart at the lowest-numbered crossing
        int pick = -1;
        for (int c : order) {
          for (int s = 0; s < 4; ++s) {
            int dd = 4 * c + s;
            if (!dart_seen[dd] && is_in_dart(dd)) {
              pick = dd;
              break;
            }
          }
          if (pick >= 0) break;
        }
        if (pick < 0) {
          for (int dd = 0; dd < nd; ++dd)
            if (!dart_seen[dd] && is_in_dart(dd)) {
              pick = dd;
              break;
            }
        }
        d = pick;
      }
      int c = d >> 2;
      if (number[c] < 0) {
        number[c] = next_no++;
        order.push_back(c);
      }
      dart_seen[d] = 1;
      int out = strand_out(d);
      dart_seen[out] = 1;
      ++traversed;
      d = theta_[out];
    }
    // Serialize crossings in new order; arcs renamed by (crossing, slot) of
    // their inflow end in the new numbering.
    std::ostringstream os;
    for (int c : order) {
      os << (xs_[c].sign > 0 ? "+" : "-");
      for (int s = 0; s < 4; ++s) {
        int dart = 4 * c + s;
        int in_dart = is_in_dart(dart) ? dart : theta_[dart];
        os << "," << number[in_dart >> 2] * 4 + (in_dart & 3);
      }
      os << ";";
    }
    std::string key = os.str();
    if (best.empty() || key < best) best = key;
  }
  return best;
}

}  // namespace dk
