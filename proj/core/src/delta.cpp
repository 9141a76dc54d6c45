#include "deltaknot/delta.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "deltaknot/errors.hpp"
#include "deltaknot/letters.hpp"

namespace dk {

// Calibrated against the bundled minimal-code table: the anchors are the
// one-delta trefoil code (letter W) and the two-delta figure-eight code
// (letters S, W), which pin the bijection up to one global mirror; the
// remaining freedom is fixed arbitrarily and every other table row is
// verified downstream by identification.
LetterSpec letter_spec(char c) {
  switch (c) {
    case 'S': return {1, 0};
    case 'T': return {0, 0};
    case 'U': return {1, 1};
    case 'W': return {0, 1};
  }
  throw ValidationError(std::string("bad delta type letter '") + c + "'");
}

char spec_letter(int chir, int pat) {
  static const char table[2][2] = {{'T', 'W'}, {'S', 'U'}};
  return table[chir & 1][pat & 1];
}

char mirror_letter(char c) {
  LetterSpec s = letter_spec(c);
  return spec_letter(s.chir, 1 - s.pat);
}

char reverse_letter(char c) {
  LetterSpec s = letter_spec(c);
  return spec_letter(1 - s.chir, s.pat);
}

DeltaDiagram::DeltaDiagram(std::vector<char> letters,
                           std::vector<std::array<int, 6>> verts)
    : base_(std::move(verts)), letters_(std::move(letters)) {
  if (static_cast<size_t>(base_.size()) != letters_.size())
    throw ValidationError("letter count does not match delta count");
  for (char c : letters_) letter_spec(c);  // validates
}

DeltaDiagram DeltaDiagram::parse(const std::string& text) {
  size_t i = 0;
  auto ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  auto expect = [&](char c) {
    ws();
    if (i >= text.size() || text[i] != c)
      throw ParseError(std::string("expected '") + c + "'", i);
    ++i;
  };
  auto read_int = [&] {
    ws();
    size_t start = i;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    size_t digits = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      ++i;
    if (i == digits) throw ParseError("expected integer", start);
    return std::atoi(text.substr(start, i - start).c_str());
  };

  expect('[');
  std::vector<char> letters;
  std::vector<std::array<int, 6>> verts;
  ws();
  if (i < text.size() && text[i] == ']') {
    ++i;
  } else {
    while (true) {
      ws();
      if (i >= text.size() ||
          (text[i] != 'S' && text[i] != 'T' && text[i] != 'U' &&
           text[i] != 'W'))
        throw ParseError("expected type letter S, T, U or W", i);
      letters.push_back(text[i++]);
      expect(',');
      expect('[');
      std::array<int, 6> t;
      for (int k = 0; k < 6; ++k) {
        if (k) expect(',');
        t[k] = read_int();
      }
      expect(']');
      verts.push_back(t);
      ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      expect(']');
      break;
    }
  }
  ws();
  if (i != text.size()) throw ParseError("trailing input", i);
  return DeltaDiagram(std::move(letters), std::move(verts));
}

std::string DeltaDiagram::emit() const {
  std::ostringstream os;
  os << "[";
  for (int v = 0; v < size(); ++v) {
    if (v) os << ", ";
    os << letters_[v] << ", [";
    for (int k = 0; k < 6; ++k) {
      if (k) os << ", ";
      os << base_.verts()[v][k];
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

DeltaDiagram DeltaDiagram::mirror() const {
  std::vector<char> out(letters_.size());
  std::transform(letters_.begin(), letters_.end(), out.begin(), mirror_letter);
  return DeltaDiagram(std::move(out), base_.verts());
}

namespace {

// Breadth-first dart renumbering from one starting inflow dart, with slot
// origins pinned to inflow darts so only orientation-respecting rotations
// occur. Letters are woven in at first visit.
std::string encode_oriented(const ShadowProjection& base,
                            const std::vector<char>& letters,
                            const std::vector<char>& is_in, int start) {
  const int n = base.size();
  std::vector<int> vindex(n, -1), voff(n), vorder(n);
  int placed = 0;
  auto place = [&](int dart) {
    int v = dart / 6;
    vindex[v] = placed;
    voff[v] = is_in[dart] ? dart % 6 : (dart % 6 + 5) % 6;
    vorder[placed] = v;
    ++placed;
  };
  place(start);
  std::string code(1, letters[start / 6]);
  for (int cid = 0; cid < 6 * n; ++cid) {
    int v = vorder[cid / 6];
    int t = base.theta(6 * v + (voff[v] + cid % 6) % 6);
    int tv = t / 6;
    if (vindex[tv] < 0) {
      place(t);
      code += letters[tv];
    }
    code += std::to_string(vindex[tv] * 6 + (t % 6 - voff[tv] + 6) % 6);
    code += ',';
  }
  return code;
}

}  // namespace

std::string DeltaDiagram::canonical_key() const {
  if (size() == 0) return "";
  auto orient = natural_orientation(base_);
  if (!orient)
    throw ValidationError("diagram admits no natural orientation");
  std::vector<char> rev_letters(letters_.size());
  std::transform(letters_.begin(), letters_.end(), rev_letters.begin(),
                 reverse_letter);
  std::vector<char> rev_in(orient->size());
  for (size_t d = 0; d < orient->size(); ++d) rev_in[d] = !(*orient)[d];

  std::string best;
  for (int d = 0; d < 6 * size(); ++d) {
    std::string code = (*orient)[d]
                           ? encode_oriented(base_, letters_, *orient, d)
                           : encode_oriented(base_, rev_letters, rev_in, d);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

}  // namespace dk
