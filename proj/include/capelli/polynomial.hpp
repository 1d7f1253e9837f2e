// Sparse univariate polynomials in the formal parameter u over Rat.
#pragma once

#include <map>
#include <string>

#include "capelli/rational.hpp"

namespace capelli {

// Coefficient ring element used throughout: a polynomial in the single formal
// parameter u. No zero coefficients are ever stored.
class UnivPoly {
 public:
  UnivPoly() = default;
  UnivPoly(const Rat& c) { set_coeff(0, c); }
  UnivPoly(long c) : UnivPoly(Rat(c)) {}

  static UnivPoly zero() { return UnivPoly(); }
  static UnivPoly one() { return UnivPoly(Rat(1)); }
  static UnivPoly constant(const Rat& c) { return UnivPoly(c); }
  // The formal parameter u.
  static UnivPoly u() {
    UnivPoly p;
    p.set_coeff(1, Rat(1));
    return p;
  }
  static UnivPoly monomial(int e, const Rat& c) {
    UnivPoly p;
    p.set_coeff(e, c);
    return p;
  }

  bool is_zero() const { return coeff_.empty(); }
  bool is_one() const;
  bool is_constant() const { return coeff_.empty() || coeff_.rbegin()->first == 0; }
  // Max stored exponent; -1 for the zero polynomial.
  int degree() const { return coeff_.empty() ? -1 : coeff_.rbegin()->first; }
  Rat coeff(int e) const {
    auto it = coeff_.find(e);
    return it == coeff_.end() ? Rat(0) : it->second;
  }

  UnivPoly operator-() const;
  UnivPoly& operator+=(const UnivPoly& o);
  UnivPoly& operator-=(const UnivPoly& o);
  friend UnivPoly operator+(UnivPoly a, const UnivPoly& b) { return a += b; }
  friend UnivPoly operator-(UnivPoly a, const UnivPoly& b) { return a -= b; }
  friend UnivPoly operator*(const UnivPoly& a, const UnivPoly& b);
  UnivPoly scaled(const Rat& c) const;

  friend bool operator==(const UnivPoly& a, const UnivPoly& b) { return a.coeff_ == b.coeff_; }
  friend bool operator!=(const UnivPoly& a, const UnivPoly& b) { return !(a == b); }
  friend bool operator<(const UnivPoly& a, const UnivPoly& b) { return a.coeff_ < b.coeff_; }

  // Horner evaluation.
  Rat eval(const Rat& x) const;

  // Descending exponents, reduced rationals: "u^2 + 3/2*u - 1".
  std::string to_string() const;

  const std::map<int, Rat>& coeffs() const { return coeff_; }

 private:
  void set_coeff(int e, const Rat& c) {
    if (c.is_zero())
      coeff_.erase(e);
    else
      coeff_[e] = c;
  }

  std::map<int, Rat> coeff_;
};

inline UnivPoly operator+(UnivPoly a, const Rat& c) { return a += UnivPoly(c); }
inline UnivPoly operator-(UnivPoly a, const Rat& c) { return a -= UnivPoly(c); }

std::ostream& operator<<(std::ostream& os, const UnivPoly& p);

}  // namespace capelli
