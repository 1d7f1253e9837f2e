#include "capelli/polynomial.hpp"

#include <ostream>

namespace capelli {

bool UnivPoly::is_one() const {
  return coeff_.size() == 1 && coeff_.begin()->first == 0 && coeff_.begin()->second == Rat(1);
}

UnivPoly UnivPoly::operator-() const {
  UnivPoly r;
  for (const auto& [e, c] : coeff_) r.coeff_[e] = -c;
  return r;
}

UnivPoly& UnivPoly::operator+=(const UnivPoly& o) {
  for (const auto& [e, c] : o.coeff_) {
    auto it = coeff_.find(e);
    if (it == coeff_.end()) {
      coeff_[e] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) coeff_.erase(it);
    }
  }
  return *this;
}

UnivPoly& UnivPoly::operator-=(const UnivPoly& o) {
  for (const auto& [e, c] : o.coeff_) {
    auto it = coeff_.find(e);
    if (it == coeff_.end()) {
      coeff_[e] = -c;
    } else {
      it->second -= c;
      if (it->second.is_zero()) coeff_.erase(it);
    }
  }
  return *this;
}

UnivPoly operator*(const UnivPoly& a, const UnivPoly& b) {
  UnivPoly r;
  for (const auto& [ea, ca] : a.coeff_)
    for (const auto& [eb, cb] : b.coeff_) {
      int e = ea + eb;
      auto it = r.coeff_.find(e);
      if (it == r.coeff_.end()) {
        Rat c = ca * cb;
        if (!c.is_zero()) r.coeff_[e] = c;
      } else {
        it->second += ca * cb;
        if (it->second.is_zero()) r.coeff_.erase(it);
      }
    }
  return r;
}

UnivPoly UnivPoly::scaled(const Rat& c) const {
  UnivPoly r;
  if (c.is_zero()) return r;
  for (const auto& [e, v] : coeff_) r.coeff_[e] = v * c;
  return r;
}

Rat UnivPoly::eval(const Rat& x) const {
  Rat acc(0);
  int prev = -1;
  // Horner over the stored exponents, descending.
  for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it) {
    if (prev >= 0)
      for (int t = 0; t < prev - it->first; ++t) acc *= x;
    acc += it->second;
    prev = it->first;
  }
  if (prev > 0)
    for (int t = 0; t < prev; ++t) acc *= x;
  return acc;
}

std::string UnivPoly::to_string() const {
  if (coeff_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it) {
    const auto& [e, c] = *it;
    bool neg = c.sign() < 0;
    Rat mag = neg ? -c : c;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    std::string coeff_text = mag.to_string();
    if (e == 0) {
      out += coeff_text;
    } else {
      if (mag != Rat(1)) out += coeff_text + "*";
      out += e == 1 ? "u" : "u^" + std::to_string(e);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const UnivPoly& p) { return os << p.to_string(); }

}  // namespace capelli
