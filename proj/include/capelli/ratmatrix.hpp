// Small dense square matrices over Rat: exact inverses, forms, CSV parsing.
#pragma once

#include <string>
#include <vector>

#include "capelli/rational.hpp"

namespace capelli {

class RatMatrix {
 public:
  RatMatrix() : n_(0) {}
  explicit RatMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n) {}

  static RatMatrix identity(int n);
  // Reverse-diagonal symmetric form S0 = (delta_{i,N+1-j}).
  static RatMatrix split_form_o(int n);
  // Alternating form J0 with +1 above the antidiagonal midpoint, -1 below.
  static RatMatrix split_form_sp(int n);

  int size() const { return n_; }
  Rat& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
  const Rat& at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

  RatMatrix transpose() const;
  // Gauss-Jordan; throws std::domain_error when singular.
  RatMatrix inverse() const;
  bool is_symmetric() const;
  bool is_alternating() const;
  bool is_zero() const;

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
  RatMatrix scaled(const Rat& c) const;
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.n_ == b.n_ && a.a_ == b.a_;
  }

  // Rows separated by ';', entries by ',': "0,1;-1,0".
  static RatMatrix parse_csv(const std::string& text);
  std::string to_csv() const;

 private:
  int n_;
  std::vector<Rat> a_;
};

}  // namespace capelli
