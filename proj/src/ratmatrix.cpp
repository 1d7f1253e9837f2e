#include "capelli/ratmatrix.hpp"

#include <sstream>
#include <stdexcept>

namespace capelli {

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rat(1);
  return m;
}

RatMatrix RatMatrix::split_form_o(int n) {
  RatMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, n - 1 - i) = Rat(1);
  return m;
}

RatMatrix RatMatrix::split_form_sp(int n) {
  if (n % 2 != 0) throw std::invalid_argument("split_form_sp: size must be even");
  RatMatrix m(n);
  // (J0)_{ij} = eps(j) delta_{i, n+1-j}, eps = -1 on the first half.
  for (int j = 1; j <= n; ++j) {
    int i = n + 1 - j;
    m.at(i - 1, j - 1) = (j <= n / 2) ? Rat(-1) : Rat(1);
  }
  return m;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RatMatrix RatMatrix::inverse() const {
  RatMatrix a(*this);
  RatMatrix inv = identity(n_);
  for (int col = 0; col < n_; ++col) {
    int pivot = -1;
    for (int r = col; r < n_; ++r)
      if (!a.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw std::domain_error("RatMatrix::inverse: singular matrix");
    if (pivot != col)
      for (int c = 0; c < n_; ++c) {
        std::swap(a.at(pivot, c), a.at(col, c));
        std::swap(inv.at(pivot, c), inv.at(col, c));
      }
    Rat d = a.at(col, col).inverse();
    for (int c = 0; c < n_; ++c) {
      a.at(col, c) *= d;
      inv.at(col, c) *= d;
    }
    for (int r = 0; r < n_; ++r) {
      if (r == col || a.at(r, col).is_zero()) continue;
      Rat f = a.at(r, col);
      for (int c = 0; c < n_; ++c) {
        a.at(r, c) -= f * a.at(col, c);
        inv.at(r, c) -= f * inv.at(col, c);
      }
    }
  }
  return inv;
}

bool RatMatrix::is_symmetric() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

bool RatMatrix::is_alternating() const {
  for (int i = 0; i < n_; ++i) {
    if (!at(i, i).is_zero()) return false;
    for (int j = i + 1; j < n_; ++j)
      if (at(i, j) != -at(j, i)) return false;
  }
  return true;
}

bool RatMatrix::is_zero() const {
  for (const Rat& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("RatMatrix: size mismatch");
  RatMatrix c(a.n_);
  for (int i = 0; i < a.n_; ++i)
    for (int k = 0; k < a.n_; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (int j = 0; j < a.n_; ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return c;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("RatMatrix: size mismatch");
  RatMatrix c(a.n_);
  for (size_t t = 0; t < a.a_.size(); ++t) c.a_[t] = a.a_[t] + b.a_[t];
  return c;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("RatMatrix: size mismatch");
  RatMatrix c(a.n_);
  for (size_t t = 0; t < a.a_.size(); ++t) c.a_[t] = a.a_[t] - b.a_[t];
  return c;
}

RatMatrix RatMatrix::scaled(const Rat& c) const {
  RatMatrix m(n_);
  for (size_t t = 0; t < a_.size(); ++t) m.a_[t] = a_[t] * c;
  return m;
}

RatMatrix RatMatrix::parse_csv(const std::string& text) {
  std::vector<std::vector<Rat>> rows;
  std::stringstream ss(text);
  std::string row;
  while (std::getline(ss, row, ';')) {
    std::vector<Rat> entries;
    std::stringstream rs(row);
    std::string cell;
    while (std::getline(rs, cell, ',')) {
      size_t b = cell.find_first_not_of(" \t\r\n");
      size_t e = cell.find_last_not_of(" \t\r\n");
      if (b == std::string::npos) throw std::invalid_argument("RatMatrix: empty CSV cell");
      entries.push_back(Rat::from_string(cell.substr(b, e - b + 1)));
    }
    rows.push_back(std::move(entries));
  }
  if (rows.empty()) throw std::invalid_argument("RatMatrix: empty CSV");
  int n = static_cast<int>(rows.size());
  RatMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw std::invalid_argument("RatMatrix: CSV is not square");
    for (int j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

std::string RatMatrix::to_csv() const {
  std::string out;
  for (int i = 0; i < n_; ++i) {
    if (i) out += ';';
    for (int j = 0; j < n_; ++j) {
      if (j) out += ',';
      out += at(i, j).to_string();
    }
  }
  return out;
}

}  // namespace capelli
