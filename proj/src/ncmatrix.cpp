#include "capelli/ncmatrix.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace capelli {

ShiftSeq shift_seq_constants(const std::vector<Rat>& v) {
  ShiftSeq s;
  s.reserve(v.size());
  for (const Rat& c : v) s.push_back(UnivPoly::constant(c));
  return s;
}

ShiftSeq shift_seq_u_plus(const UnivPoly& u, const std::vector<Rat>& v, bool negate) {
  ShiftSeq s;
  s.reserve(v.size());
  for (const Rat& c : v) s.push_back(negate ? u - c : u + c);
  return s;
}

NCMatrix::NCMatrix(LieRealization::Ptr r, int n)
    : r_(std::move(r)), n_(n), e_(static_cast<size_t>(n) * n, EnvElement::zero(r_)) {}

NCMatrix NCMatrix::generator_matrix(const LieRealization::Ptr& r) {
  NCMatrix m(r, r->N());
  for (int i = 1; i <= r->N(); ++i)
    for (int j = 1; j <= r->N(); ++j) m.at(i, j) = EnvElement::generator(r, GenPair{i, j});
  return m;
}

NCMatrix NCMatrix::adjusted_matrix(const LieRealization::Ptr& r,
                                   LieRealization::AdjustVariant v) {
  NCMatrix m = generator_matrix(r);
  std::vector<Rat> d = r->diagonal_adjustment(v);
  for (int i = 1; i <= r->N(); ++i)
    m.at(i, i) += EnvElement::scalar(r, UnivPoly::constant(d[static_cast<size_t>(i - 1)]));
  return m;
}

EnvElement& NCMatrix::at(int i, int j) {
  if (i < 1 || i > n_ || j < 1 || j > n_)
    throw std::invalid_argument("NCMatrix: index out of range");
  return e_[static_cast<size_t>(i - 1) * n_ + (j - 1)];
}

const EnvElement& NCMatrix::at(int i, int j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_)
    throw std::invalid_argument("NCMatrix: index out of range");
  return e_[static_cast<size_t>(i - 1) * n_ + (j - 1)];
}

NCMatrix NCMatrix::plus_diagonal(const UnivPoly& u) const {
  NCMatrix m = *this;
  for (int i = 1; i <= n_; ++i) m.at(i, i) += EnvElement::scalar(r_, u);
  return m;
}

NCMatrix operator*(const RatMatrix& g, const NCMatrix& z) {
  if (g.size() != z.n_) throw std::invalid_argument("NCMatrix: size mismatch");
  NCMatrix out(z.r_, z.n_);
  for (int i = 1; i <= z.n_; ++i)
    for (int j = 1; j <= z.n_; ++j) {
      EnvElement acc = EnvElement::zero(z.r_);
      for (int t = 1; t <= z.n_; ++t) {
        const Rat& c = g.at(i - 1, t - 1);
        if (!c.is_zero()) acc += z.at(t, j).scaled(c);
      }
      out.at(i, j) = std::move(acc);
    }
  return out;
}

NCMatrix operator*(const NCMatrix& z, const RatMatrix& g) {
  if (g.size() != z.n_) throw std::invalid_argument("NCMatrix: size mismatch");
  NCMatrix out(z.r_, z.n_);
  for (int i = 1; i <= z.n_; ++i)
    for (int j = 1; j <= z.n_; ++j) {
      EnvElement acc = EnvElement::zero(z.r_);
      for (int t = 1; t <= z.n_; ++t) {
        const Rat& c = g.at(t - 1, j - 1);
        if (!c.is_zero()) acc += z.at(i, t).scaled(c);
      }
      out.at(i, j) = std::move(acc);
    }
  return out;
}

NCMatrix operator+(const NCMatrix& a, const NCMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("NCMatrix: size mismatch");
  NCMatrix out = a;
  for (int i = 1; i <= a.n_; ++i)
    for (int j = 1; j <= a.n_; ++j) out.at(i, j) += b.at(i, j);
  return out;
}

NCMatrix operator-(const NCMatrix& a, const NCMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("NCMatrix: size mismatch");
  NCMatrix out = a;
  for (int i = 1; i <= a.n_; ++i)
    for (int j = 1; j <= a.n_; ++j) out.at(i, j) -= b.at(i, j);
  return out;
}

EnvElement shifted_entry(const NCMatrix& z, int i, int j, const UnivPoly& a) {
  EnvElement e = z.at(i, j);
  if (i == j) e += EnvElement::scalar(z.realization(), a);
  return e;
}

NCMatrix subblock_with_shifts(const NCMatrix& z, const std::vector<int>& rows,
                              const std::vector<int>& cols, const ShiftSeq& a) {
  if (rows.size() != cols.size() || cols.size() != a.size())
    throw std::invalid_argument("subblock_with_shifts: length mismatch");
  const int k = static_cast<int>(rows.size());
  NCMatrix out(z.realization(), k);
  for (int s = 1; s <= k; ++s)
    for (int t = 1; t <= k; ++t) {
      EnvElement e = z.at(rows[static_cast<size_t>(s - 1)], cols[static_cast<size_t>(t - 1)]);
      if (rows[static_cast<size_t>(s - 1)] == cols[static_cast<size_t>(t - 1)])
        e += EnvElement::scalar(z.realization(), a[static_cast<size_t>(t - 1)]);
      out.at(s, t) = std::move(e);
    }
  return out;
}

NCMatrix submatrix_with_shifts(const NCMatrix& z, const std::vector<int>& alpha,
                               const ShiftSeq& a) {
  return subblock_with_shifts(z, alpha, alpha, a);
}

const std::vector<std::pair<std::vector<int>, int>>& permutations_with_signs(int k) {
  static std::mutex mu;
  static std::map<int, std::vector<std::pair<std::vector<int>, int>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;
  std::vector<std::pair<std::vector<int>, int>> all;
  std::vector<int> p(static_cast<size_t>(k));
  for (int t = 0; t < k; ++t) p[static_cast<size_t>(t)] = t + 1;
  do {
    int inv = 0;
    for (size_t x = 0; x < p.size(); ++x)
      for (size_t y = x + 1; y < p.size(); ++y)
        if (p[x] > p[y]) ++inv;
    all.emplace_back(p, inv % 2 == 0 ? 1 : -1);
  } while (std::next_permutation(p.begin(), p.end()));
  return cache.emplace(k, std::move(all)).first->second;
}

namespace {

EnvElement column_perm_sum(const NCMatrix& z, bool with_sign) {
  const int n = z.size();
  EnvElement acc = EnvElement::zero(z.realization());
  for (const auto& [perm, sign] : permutations_with_signs(n)) {
    EnvElement prod = EnvElement::scalar(z.realization(), UnivPoly::one());
    for (int col = 1; col <= n; ++col) prod = prod * z.at(perm[static_cast<size_t>(col - 1)], col);
    acc += with_sign && sign < 0 ? -prod : prod;
  }
  return acc;
}

// (1/k!) sum over row/column permutation pairs of the delta-shifted entries.
// The delta pattern compares index values, so repeated indices in a weak
// sequence shift off-diagonal positions too.
EnvElement sym_perm_sum(const NCMatrix& block, const std::vector<int>& rows,
                        const std::vector<int>& cols, const ShiftSeq& a, bool with_sign) {
  const int k = block.size();
  const auto& perms = permutations_with_signs(k);
  EnvElement acc = EnvElement::zero(block.realization());
  for (const auto& [sigma, sgn1] : perms)
    for (const auto& [sigma2, sgn2] : perms) {
      EnvElement prod = EnvElement::scalar(block.realization(), UnivPoly::one());
      for (int t = 1; t <= k; ++t) {
        const int r = sigma[static_cast<size_t>(t - 1)];
        const int c = sigma2[static_cast<size_t>(t - 1)];
        EnvElement entry = block.at(r, c);
        if (rows[static_cast<size_t>(r - 1)] == cols[static_cast<size_t>(c - 1)])
          entry += EnvElement::scalar(block.realization(), a[static_cast<size_t>(t - 1)]);
        prod = prod * entry;
      }
      acc += (with_sign && sgn1 * sgn2 < 0) ? -prod : prod;
    }
  return acc.scaled(rat_factorial(k).inverse());
}

std::vector<int> trivial_indices(int n) {
  std::vector<int> v(static_cast<size_t>(n));
  for (int t = 0; t < n; ++t) v[static_cast<size_t>(t)] = t + 1;
  return v;
}

EnvElement minor_sum(const NCMatrix& z, int k, const ShiftSeq& a, bool det_style) {
  if (k < 0) throw std::invalid_argument("minor sum: k must be nonnegative");
  if (static_cast<int>(a.size()) != k)
    throw std::invalid_argument("minor sum: need exactly k shift parameters");
  if (k == 0) return EnvElement::scalar(z.realization(), UnivPoly::one());
  EnvElement acc = EnvElement::zero(z.realization());
  const auto seqs =
      det_style ? strict_index_sequences(z.size(), k) : weak_index_sequences(z.size(), k);
  for (const auto& alpha : seqs) {
    NCMatrix block = subblock_with_shifts(z, alpha, alpha, ShiftSeq(static_cast<size_t>(k)));
    EnvElement inner = sym_perm_sum(block, alpha, alpha, a, det_style);
    acc += det_style ? inner : inner.scaled(multiplicity_factorial(alpha).inverse());
  }
  return acc;
}

}  // namespace

EnvElement column_det(const NCMatrix& z) { return column_perm_sum(z, true); }
EnvElement column_per(const NCMatrix& z) { return column_perm_sum(z, false); }

EnvElement sym_det(const NCMatrix& z, const ShiftSeq& a) {
  if (static_cast<int>(a.size()) != z.size())
    throw std::invalid_argument("sym_det: need one parameter per row");
  return sym_perm_sum(z, trivial_indices(z.size()), trivial_indices(z.size()), a, true);
}

EnvElement sym_per(const NCMatrix& z, const ShiftSeq& a) {
  if (static_cast<int>(a.size()) != z.size())
    throw std::invalid_argument("sym_per: need one parameter per row");
  return sym_perm_sum(z, trivial_indices(z.size()), trivial_indices(z.size()), a, false);
}

EnvElement det_k(const NCMatrix& z, int k, const ShiftSeq& a) { return minor_sum(z, k, a, true); }
EnvElement per_k(const NCMatrix& z, int k, const ShiftSeq& a) { return minor_sum(z, k, a, false); }

EnvElement pfaffian(const NCMatrix& z) {
  const int n = z.size();
  if (n % 2 != 0) throw std::invalid_argument("pfaffian: matrix size must be even");
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      if (z.at(i, j) != -z.at(j, i))
        throw std::invalid_argument("pfaffian: entries are not alternating");
  const int half = n / 2;
  EnvElement acc = EnvElement::zero(z.realization());
  for (const auto& [perm, sign] : permutations_with_signs(n)) {
    EnvElement prod = EnvElement::scalar(z.realization(), UnivPoly::one());
    for (int t = 0; t < half; ++t)
      prod = prod * z.at(perm[static_cast<size_t>(2 * t)], perm[static_cast<size_t>(2 * t + 1)]);
    acc += sign < 0 ? -prod : prod;
  }
  return acc.scaled((rat_pow2(half) * rat_factorial(half)).inverse());
}

EnvElement hafnian(const NCMatrix& z) {
  const int n = z.size();
  if (n % 2 != 0) throw std::invalid_argument("hafnian: matrix size must be even");
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (z.at(i, j) != z.at(j, i))
        throw std::invalid_argument("hafnian: entries are not symmetric");
  const int half = n / 2;
  EnvElement acc = EnvElement::zero(z.realization());
  for (const auto& [perm, sign] : permutations_with_signs(n)) {
    EnvElement prod = EnvElement::scalar(z.realization(), UnivPoly::one());
    for (int t = 0; t < half; ++t)
      prod = prod * z.at(perm[static_cast<size_t>(2 * t)], perm[static_cast<size_t>(2 * t + 1)]);
    acc += prod;
  }
  return acc.scaled((rat_pow2(half) * rat_factorial(half)).inverse());
}

NCMatrix conjugate(const NCMatrix& z, const RatMatrix& g) {
  return g * z * g.inverse();
}

std::vector<std::vector<int>> strict_index_sequences(int N, int k) {
  std::vector<std::vector<int>> out;
  if (k > N || k < 0) return out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int lo) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = lo; v <= N; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

std::vector<std::vector<int>> weak_index_sequences(int N, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || N < 1) return out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int lo) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = lo; v <= N; ++v) {
      cur.push_back(v);
      rec(v);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

Rat multiplicity_factorial(const std::vector<int>& alpha) {
  Rat f(1);
  size_t t = 0;
  while (t < alpha.size()) {
    size_t run = 1;
    while (t + run < alpha.size() && alpha[t + run] == alpha[t]) ++run;
    f *= rat_factorial(static_cast<int>(run));
    t += run;
  }
  return f;
}

}  // namespace capelli
