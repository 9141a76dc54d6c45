#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace dk {

/// Laurent polynomial in one or two variables with exact integer
/// coefficients. Exponents are stored in half-steps (doubled): t^(1/2)
/// has stored exponent 1, t^2 has stored exponent 4. One-variable
/// polynomials keep the second exponent at zero.
class Laurent {
public:
  using Coef = long long;
  using Key = std::pair<int, int>;  // doubled exponents (e1, e2)

  Laurent() = default;

  static Laurent zero() { return Laurent(); }
  static Laurent one() { return monomial(1, 0, 0); }
  // Exponents here are doubled half-steps.
  static Laurent monomial(Coef c, int e1, int e2 = 0);
  // Convenience for whole exponents.
  static Laurent term(Coef c, int whole_e1, int whole_e2 = 0) {
    return monomial(c, 2 * whole_e1, 2 * whole_e2);
  }

  bool is_zero() const { return terms_.empty(); }
  bool operator==(const Laurent& o) const { return terms_ == o.terms_; }
  bool operator!=(const Laurent& o) const { return !(*this == o); }
  bool operator<(const Laurent& o) const { return terms_ < o.terms_; }

  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator*(const Laurent& o) const;
  Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
  Laurent& operator-=(const Laurent& o) { return *this = *this - o; }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
  Laurent neg() const;
  Laurent pow(int k) const;  // k >= 0

  /// Substitute each variable by a polynomial. Every term's exponent must
  /// stay integral in half-steps: a term c*x^(e/2) maps to c*sub^(e/2),
  /// so e must be even whenever the substitute is not a monomial with
  /// half-step support. Negative exponents require sub to be a monomial.
  Laurent substitute(const Laurent& sub1, const Laurent& sub2) const;

  /// Map exponents: (e1, e2) -> (a*e1, b*e2). Used for variable
  /// inversions such as v -> v^-1.
  Laurent map_exponents(int a, int b) const;

  /// Degree span of variable 1 or 2 in half-steps; 0 for the zero poly.
  int span(int var) const;
  int min_exp(int var) const;
  int max_exp(int var) const;

  /// Canonical text form. Terms are sorted by (e1, e2) ascending and
  /// joined by " + "; each term is "coef", "coef*x^p" or "coef*x^p*y^q".
  /// Whole exponents print as integers, half exponents as "n/2".
  std::string str(const std::string& v1, const std::string& v2 = "") const;
  static Laurent parse(const std::string& text, const std::string& v1,
                       const std::string& v2 = "");

  const std::map<Key, Coef>& terms() const { return terms_; }

private:
  std::map<Key, Coef> terms_;
  void add_term(Key k, Coef c);
};

}  // namespace dk
