#include "deltaknot/triple.hpp"

#include <cctype>
#include <sstream>

#include "deltaknot/errors.hpp"

namespace dk {

namespace {

bool valid_word(const std::array<char, 3>& w) {
  int mask = 0;
  for (char c : w) {
    if (c == 'T')
      mask |= 1;
    else if (c == 'M')
      mask |= 2;
    else if (c == 'B')
      mask |= 4;
    else
      return false;
  }
  return mask == 7;
}

}  // namespace

TripleDiagram::TripleDiagram(ShadowProjection base,
                             std::vector<std::array<char, 3>> roles)
    : base_(std::move(base)), roles_(std::move(roles)) {
  if (static_cast<size_t>(base_.size()) != roles_.size())
    throw ValidationError("role count does not match triple-point count");
  for (const auto& w : roles_)
    if (!valid_word(w))
      throw ValidationError("roles at a triple point must be T, M, B once each");
}

TripleDiagram TripleDiagram::parse(const std::string& text) {
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
  std::vector<std::array<int, 6>> verts;
  std::vector<std::array<char, 3>> roles;
  ws();
  if (i < text.size() && text[i] == ']') {
    ++i;
  } else {
    while (true) {
      ws();
      std::array<char, 3> w{};
      for (int k = 0; k < 3; ++k) {
        if (i >= text.size()) throw ParseError("expected role word", i);
        w[k] = text[i++];
      }
      if (!valid_word(w)) throw ParseError("bad role word", i - 3);
      roles.push_back(w);
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
  return TripleDiagram(ShadowProjection(std::move(verts)), std::move(roles));
}

std::string TripleDiagram::emit() const {
  std::ostringstream os;
  os << "[";
  for (int v = 0; v < size(); ++v) {
    if (v) os << ", ";
    os << roles_[v][0] << roles_[v][1] << roles_[v][2] << ", [";
    for (int k = 0; k < 6; ++k) {
      if (k) os << ", ";
      os << base_.verts()[v][k];
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace dk
