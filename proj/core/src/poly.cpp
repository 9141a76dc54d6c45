#include "deltaknot/poly.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace dk {

void Laurent::add_term(Key k, Coef c) {
  if (c == 0) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Laurent Laurent::monomial(Coef c, int e1, int e2) {
  Laurent p;
  p.add_term({e1, e2}, c);
  return p;
}

Laurent Laurent::operator+(const Laurent& o) const {
  Laurent r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, c);
  return r;
}

Laurent Laurent::operator-(const Laurent& o) const {
  Laurent r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, -c);
  return r;
}

Laurent Laurent::neg() const {
  Laurent r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

Laurent Laurent::operator*(const Laurent& o) const {
  Laurent r;
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_)
      r.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
  return r;
}

Laurent Laurent::pow(int k) const {
  if (k < 0) throw std::invalid_argument("Laurent::pow: negative exponent");
  Laurent r = one();
  Laurent base = *this;
  while (k > 0) {
    if (k & 1) r *= base;
    base *= base;
    k >>= 1;
  }
  return r;
}

Laurent Laurent::map_exponents(int a, int b) const {
  Laurent r;
  for (const auto& [k, c] : terms_)
    r.add_term({a * k.first, b * k.second}, c);
  return r;
}

namespace {

// sub^(e/2) where e is a doubled exponent, possibly negative or odd.
Laurent half_power(const Laurent& sub, int e) {
  if (e == 0) return Laurent::one();
  if (sub.terms().size() == 1) {
    // Monomial: exact power, fractional or negative steps allowed when
    // the exponents stay integral in half-steps.
    auto [k, c] = *sub.terms().begin();
    if ((static_cast<long long>(k.first) * e) % 2 != 0 ||
        (static_cast<long long>(k.second) * e) % 2 != 0)
      throw std::domain_error("Laurent::substitute: fractional exponent");
    if (c != 1 && c != -1 && e < 0)
      throw std::domain_error("Laurent::substitute: non-unit inverse");
    Laurent::Coef coef = 1;
    if (c == 1) {
      coef = 1;
    } else if (c == -1) {
      coef = (e % 2 == 0) ? 1 : -1;
    } else {
      for (int i = 0; i < e / 2; ++i) coef *= c;
      if (e % 2 != 0)
        throw std::domain_error("Laurent::substitute: fractional coefficient");
    }
    return Laurent::monomial(coef, k.first * e / 2, k.second * e / 2);
  }
  if (e < 0 || e % 2 != 0)
    throw std::domain_error(
        "Laurent::substitute: negative or half power of a sum");
  return sub.pow(e / 2);
}

}  // namespace

Laurent Laurent::substitute(const Laurent& sub1, const Laurent& sub2) const {
  Laurent r;
  for (const auto& [k, c] : terms_) {
    Laurent t = monomial(c, 0, 0);
    t *= half_power(sub1, k.first);
    t *= half_power(sub2, k.second);
    r += t;
  }
  return r;
}

int Laurent::min_exp(int var) const {
  int m = 0;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    int e = var == 1 ? k.first : k.second;
    if (first || e < m) m = e;
    first = false;
  }
  return m;
}

int Laurent::max_exp(int var) const {
  int m = 0;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    int e = var == 1 ? k.first : k.second;
    if (first || e > m) m = e;
    first = false;
  }
  return m;
}

int Laurent::span(int var) const {
  if (terms_.empty()) return 0;
  return max_exp(var) - min_exp(var);
}

namespace {

void print_exp(std::ostream& os, const std::string& var, int e) {
  if (e == 0) return;
  os << "*" << var;
  if (e == 2) return;
  os << "^";
  if (e % 2 == 0)
    os << e / 2;
  else
    os << e << "/2";
}

}  // namespace

std::string Laurent::str(const std::string& v1, const std::string& v2) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c;
    print_exp(os, v1, k.first);
    if (!v2.empty()) print_exp(os, v2, k.second);
  }
  return os.str();
}

Laurent Laurent::parse(const std::string& text, const std::string& v1,
                       const std::string& v2) {
  Laurent r;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip_ws();
  if (text.compare(i, 1, "0") == 0 && i + 1 >= text.size()) return r;
  bool expect_term = true;
  while (i < text.size()) {
    skip_ws();
    if (!expect_term) {
      if (text[i] != '+')
        throw std::invalid_argument("polynomial parse: expected '+' at " +
                                    std::to_string(i));
      ++i;
      skip_ws();
    }
    // coefficient
    size_t start = i;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      ++i;
    if (i == start || (text[start] == '-' && i == start + 1))
      throw std::invalid_argument("polynomial parse: expected coefficient at " +
                                  std::to_string(i));
    Coef c = std::strtoll(text.substr(start, i - start).c_str(), nullptr, 10);
    int e1 = 0, e2 = 0;
    while (i < text.size() && text[i] == '*') {
      ++i;
      int which;
      if (!v1.empty() && text.compare(i, v1.size(), v1) == 0) {
        which = 1;
        i += v1.size();
      } else if (!v2.empty() && text.compare(i, v2.size(), v2) == 0) {
        which = 2;
        i += v2.size();
      } else {
        throw std::invalid_argument("polynomial parse: unknown variable at " +
                                    std::to_string(i));
      }
      int e = 2;  // bare variable means exponent 1 (doubled: 2)
      if (i < text.size() && text[i] == '^') {
        ++i;
        size_t es = i;
        if (i < text.size() && text[i] == '-') ++i;
        while (i < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[i])))
          ++i;
        int num = std::atoi(text.substr(es, i - es).c_str());
        if (i + 1 < text.size() && text[i] == '/' && text[i + 1] == '2') {
          i += 2;
          e = num;
        } else {
          e = 2 * num;
        }
      }
      if (which == 1)
        e1 += e;
      else
        e2 += e;
    }
    r.add_term({e1, e2}, c);
    expect_term = false;
    skip_ws();
  }
  return r;
}

}  // namespace dk
