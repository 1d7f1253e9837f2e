#include "capelli/realization.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace capelli {

std::string to_string(AlgKind k) {
  switch (k) {
    case AlgKind::gl: return "gl";
    case AlgKind::o_identity: return "o-id";
    case AlgKind::o_split: return "o-split";
    case AlgKind::sp_split: return "sp-split";
    case AlgKind::o_general: return "o-general";
    case AlgKind::sp_general: return "sp-general";
  }
  return "?";
}

LinComb lin_add(const LinComb& a, const LinComb& b) {
  LinComb out;
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].gen < b[j].gen)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].gen < a[i].gen) {
      out.push_back(b[j++]);
    } else {
      Rat c = a[i].coeff + b[j].coeff;
      if (!c.is_zero()) out.push_back({a[i].gen, c});
      ++i;
      ++j;
    }
  }
  return out;
}

LinComb lin_scale(const LinComb& a, const Rat& c) {
  if (c.is_zero()) return {};
  LinComb out = a;
  for (auto& t : out) t.coeff *= c;
  return out;
}

namespace {

Grade grade_of_pair(GenPair p) {
  if (p.i > p.j) return Grade::minus;
  if (p.i == p.j) return Grade::zero;
  return Grade::plus;
}

// E_ij - c * E_{ab} as an N x N matrix (the c == 0 case is plain E_ij).
RatMatrix elementary_diff(int N, int i, int j, const Rat& c, int a, int b) {
  RatMatrix m(N);
  m.at(i - 1, j - 1) += Rat(1);
  if (!c.is_zero()) m.at(a - 1, b - 1) -= c;
  return m;
}

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}
std::map<std::string, LieRealization::Ptr>& registry() {
  static std::map<std::string, LieRealization::Ptr> reg;
  return reg;
}

}  // namespace

Rat LieRealization::eps(int i) const {
  if (kind_ == AlgKind::sp_split || kind_ == AlgKind::sp_general)
    return i <= N_ / 2 ? Rat(-1) : Rat(1);
  return Rat(1);
}

int LieRealization::index_of(GenPair p) const {
  auto it = basis_index_.find(p);
  if (it == basis_index_.end())
    throw std::invalid_argument("LieRealization: not a canonical generator pair (" +
                                std::to_string(p.i) + "," + std::to_string(p.j) + ")");
  return it->second;
}

const LinComb& LieRealization::expand_pair(int i, int j) const {
  if (i < 1 || i > N_ || j < 1 || j > N_)
    throw std::invalid_argument("LieRealization: generator index out of range");
  return pair_expansion_[static_cast<size_t>(i - 1) * N_ + (j - 1)];
}

LinComb LieRealization::bracket_lin(const LinComb& x, const LinComb& y) const {
  LinComb out;
  for (const auto& tx : x)
    for (const auto& ty : y)
      out = lin_add(out, lin_scale(bracket(tx.gen, ty.gen), tx.coeff * ty.coeff));
  return out;
}

LinComb LieRealization::expand_member_matrix(const RatMatrix& X) const {
  if (X.size() != N_) throw std::invalid_argument("expand_member_matrix: wrong size");
  std::vector<Rat> v(static_cast<size_t>(N_) * N_);
  for (int i = 0; i < N_; ++i)
    for (int j = 0; j < N_; ++j) v[static_cast<size_t>(i) * N_ + j] = X.at(i, j);
  std::vector<Rat> combo(basis_.size());
  for (size_t r = 0; r < echelon_rows_.size(); ++r) {
    const Rat& lead = v[static_cast<size_t>(echelon_pivot_[r])];
    if (lead.is_zero()) continue;
    Rat f = lead;  // echelon rows are normalized to leading 1
    for (size_t c = 0; c < v.size(); ++c) v[c] -= f * echelon_rows_[r][c];
    for (size_t b = 0; b < combo.size(); ++b) combo[b] += f * echelon_combo_[r][b];
  }
  for (const Rat& c : v)
    if (!c.is_zero())
      throw std::invalid_argument("expand_member_matrix: matrix not in the subalgebra");
  LinComb out;
  for (size_t b = 0; b < combo.size(); ++b)
    if (!combo[b].is_zero()) out.push_back({static_cast<uint16_t>(b), combo[b]});
  return out;
}

LinComb LieRealization::closed_form_bracket(GenPair p, GenPair q) const {
  const int i = p.i, j = p.j, k = q.i, l = q.j;
  if (kind_ == AlgKind::o_general || kind_ == AlgKind::sp_general)
    throw std::invalid_argument("closed_form_bracket: no closed form for general realizations");
  LinComb out;
  auto add = [&](int a, int b, const Rat& c) {
    if (!c.is_zero()) out = lin_add(out, lin_scale(expand_pair(a, b), c));
  };
  if (kind_ == AlgKind::gl) {
    if (k == j) add(i, l, Rat(1));
    if (i == l) add(k, j, Rat(-1));
    return out;
  }
  // o / sp closed form; i' is the identity for o(1).
  auto pr = [&](int a) { return kind_ == AlgKind::o_identity ? a : N_ + 1 - a; };
  if (k == j) add(i, l, Rat(1));
  if (i == l) add(k, j, Rat(-1));
  if (i == pr(k)) add(pr(l), j, eps(k) * eps(l));
  if (pr(j) == l) add(k, pr(i), eps(i) * eps(j));
  return out;
}

std::vector<Rat> LieRealization::diagonal_adjustment(AdjustVariant v) const {
  std::vector<Rat> d(static_cast<size_t>(N_));
  int half = N_ / 2;
  if (kind_ == AlgKind::o_split) {
    // tilde: F + diag(0..0[,1/2],1..1); hat: F - diag(1..1[,1/2],0..0).
    for (int t = 0; t < N_; ++t) {
      bool odd_mid = (N_ % 2 == 1) && t == half;
      if (v == AdjustVariant::tilde)
        d[t] = t < half ? Rat(0) : odd_mid ? Rat(1, 2) : Rat(1);
      else
        d[t] = t < half ? Rat(-1) : odd_mid ? Rat(-1, 2) : Rat(0);
    }
    return d;
  }
  if (kind_ == AlgKind::sp_split) {
    // tilde: F - diag(0..0,1..1); hat: F + diag(1..1,0..0).
    for (int t = 0; t < N_; ++t)
      d[t] = (v == AdjustVariant::tilde) ? (t < half ? Rat(0) : Rat(-1))
                                         : (t < half ? Rat(1) : Rat(0));
    return d;
  }
  throw std::invalid_argument("diagonal_adjustment: only o-split and sp-split have variants");
}

void LieRealization::build_from_matrices() {
  const size_t dim = basis_.size();
  basis_index_.clear();
  for (size_t t = 0; t < dim; ++t) basis_index_[basis_[t]] = static_cast<int>(t);

  // Echelon form of the basis matrices, with each reduced row remembered as a
  // combination of basis elements.
  echelon_rows_.clear();
  echelon_pivot_.clear();
  echelon_combo_.clear();
  const size_t vlen = static_cast<size_t>(N_) * N_;
  for (size_t t = 0; t < dim; ++t) {
    std::vector<Rat> v(vlen);
    for (int i = 0; i < N_; ++i)
      for (int j = 0; j < N_; ++j) v[static_cast<size_t>(i) * N_ + j] = matrices_[t].at(i, j);
    std::vector<Rat> combo(dim);
    combo[t] = Rat(1);
    for (size_t r = 0; r < echelon_rows_.size(); ++r) {
      const Rat f = v[static_cast<size_t>(echelon_pivot_[r])];
      if (f.is_zero()) continue;
      for (size_t c = 0; c < vlen; ++c) v[c] -= f * echelon_rows_[r][c];
      for (size_t b = 0; b < dim; ++b) combo[b] -= f * echelon_combo_[r][b];
    }
    int pivot = -1;
    for (size_t c = 0; c < vlen; ++c)
      if (!v[c].is_zero()) {
        pivot = static_cast<int>(c);
        break;
      }
    if (pivot < 0)
      throw std::logic_error("LieRealization: basis matrices are linearly dependent");
    Rat inv = v[static_cast<size_t>(pivot)].inverse();
    for (auto& c : v) c *= inv;
    for (auto& c : combo) c *= inv;
    echelon_rows_.push_back(std::move(v));
    echelon_pivot_.push_back(pivot);
    echelon_combo_.push_back(std::move(combo));
  }
  // Back-substitution so each expand reduction is a single sweep.
  for (size_t r = echelon_rows_.size(); r-- > 0;) {
    for (size_t s = 0; s < r; ++s) {
      const Rat f = echelon_rows_[s][static_cast<size_t>(echelon_pivot_[r])];
      if (f.is_zero()) continue;
      for (size_t c = 0; c < vlen; ++c) echelon_rows_[s][c] -= f * echelon_rows_[r][c];
      for (size_t b = 0; b < dim; ++b) echelon_combo_[s][b] -= f * echelon_combo_[r][b];
    }
  }

  // Structure constants through the gl embedding, cross-checked against the
  // closed-form relation where one exists.
  brackets_.assign(dim * dim, {});
  const bool has_closed_form =
      kind_ != AlgKind::o_general && kind_ != AlgKind::sp_general;
  for (size_t a = 0; a < dim; ++a) {
    for (size_t b = 0; b < dim; ++b) {
      RatMatrix c = matrices_[a] * matrices_[b] - matrices_[b] * matrices_[a];
      LinComb lc = expand_member_matrix(c);
      if (has_closed_form && lc != closed_form_bracket(basis_[a], basis_[b]))
        throw std::logic_error(
            "LieRealization: embedding and closed-form structure constants disagree");
      brackets_[a * dim + b] = std::move(lc);
    }
  }

  cartan_.clear();
  if (graded_)
    for (size_t t = 0; t < dim; ++t)
      if (grades_[t] == Grade::zero) cartan_.push_back(static_cast<int>(t));

  // General realizations expand redundant symbols through the echelon data.
  if (pair_expansion_.empty()) {
    const RatMatrix& B = *form_;
    RatMatrix Binv = B.inverse();
    pair_expansion_.resize(vlen);
    for (int i = 1; i <= N_; ++i)
      for (int j = 1; j <= N_; ++j) {
        RatMatrix m(N_);
        m.at(i - 1, j - 1) += Rat(1);
        for (int a = 1; a <= N_; ++a)
          for (int b = 1; b <= N_; ++b)
            m.at(a - 1, b - 1) -= Binv.at(a - 1, j - 1) * B.at(i - 1, b - 1);
        pair_expansion_[static_cast<size_t>(i - 1) * N_ + (j - 1)] = expand_member_matrix(m);
      }
  }
}

LieRealization::Ptr LieRealization::intern(LieRealization&& r) {
  std::lock_guard<std::mutex> lock(registry_mutex());
  std::string key = r.descriptor();
  auto it = registry().find(key);
  if (it != registry().end()) return it->second;
  r.build_from_matrices();
  Ptr p(new LieRealization(std::move(r)));
  registry()[key] = p;
  return p;
}

LieRealization::Ptr LieRealization::make_gl(int N) {
  if (N < 1) throw std::invalid_argument("gl realization requires N >= 1");
  LieRealization r;
  r.kind_ = AlgKind::gl;
  r.N_ = N;
  r.graded_ = true;
  {
    std::lock_guard<std::mutex> lock(registry_mutex());
    auto it = registry().find(r.descriptor());
    if (it != registry().end()) return it->second;
  }
  std::vector<GenPair> pairs;
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) pairs.push_back({i, j});
  std::stable_sort(pairs.begin(), pairs.end(), [](GenPair a, GenPair b) {
    if (grade_of_pair(a) != grade_of_pair(b)) return grade_of_pair(a) < grade_of_pair(b);
    return a < b;
  });
  for (GenPair p : pairs) {
    r.basis_.push_back(p);
    r.grades_.push_back(grade_of_pair(p));
    r.matrices_.push_back(elementary_diff(N, p.i, p.j, Rat(0), 0, 0));
  }
  r.pair_expansion_.resize(static_cast<size_t>(N) * N);
  std::map<GenPair, int> idx;
  for (size_t t = 0; t < r.basis_.size(); ++t) idx[r.basis_[t]] = static_cast<int>(t);
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j)
      r.pair_expansion_[static_cast<size_t>(i - 1) * N + (j - 1)] = {
          {static_cast<uint16_t>(idx[{i, j}]), Rat(1)}};
  return intern(std::move(r));
}

LieRealization::Ptr LieRealization::make_o_identity(int N) {
  if (N < 2) throw std::invalid_argument("o(1) realization requires N >= 2");
  LieRealization r;
  r.kind_ = AlgKind::o_identity;
  r.N_ = N;
  r.graded_ = false;
  r.form_ = RatMatrix::identity(N);
  {
    std::lock_guard<std::mutex> lock(registry_mutex());
    auto it = registry().find(r.descriptor());
    if (it != registry().end()) return it->second;
  }
  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j) {
      r.basis_.push_back({i, j});
      r.matrices_.push_back(elementary_diff(N, i, j, Rat(1), j, i));
    }
  r.grades_.assign(r.basis_.size(), Grade::zero);  // unused: ungraded
  r.pair_expansion_.resize(static_cast<size_t>(N) * N);
  std::map<GenPair, int> idx;
  for (size_t t = 0; t < r.basis_.size(); ++t) idx[r.basis_[t]] = static_cast<int>(t);
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      LinComb lc;
      if (i < j)
        lc = {{static_cast<uint16_t>(idx[{i, j}]), Rat(1)}};
      else if (i > j)
        lc = {{static_cast<uint16_t>(idx[{j, i}]), Rat(-1)}};
      r.pair_expansion_[static_cast<size_t>(i - 1) * N + (j - 1)] = std::move(lc);
    }
  return intern(std::move(r));
}

LieRealization::Ptr LieRealization::make_o_split(int N) {
  if (N < 2) throw std::invalid_argument("o(S0) realization requires N >= 2");
  LieRealization r;
  r.kind_ = AlgKind::o_split;
  r.N_ = N;
  r.graded_ = true;
  r.form_ = RatMatrix::split_form_o(N);
  {
    std::lock_guard<std::mutex> lock(registry_mutex());
    auto it = registry().find(r.descriptor());
    if (it != registry().end()) return it->second;
  }
  auto pr = [N](int a) { return N + 1 - a; };
  std::vector<GenPair> pairs;
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      GenPair p{i, j}, partner{pr(j), pr(i)};
      if (p < partner) pairs.push_back(p);  // self-paired symbols vanish
    }
  std::stable_sort(pairs.begin(), pairs.end(), [](GenPair a, GenPair b) {
    if (grade_of_pair(a) != grade_of_pair(b)) return grade_of_pair(a) < grade_of_pair(b);
    return a < b;
  });
  for (GenPair p : pairs) {
    r.basis_.push_back(p);
    r.grades_.push_back(grade_of_pair(p));
    r.matrices_.push_back(elementary_diff(N, p.i, p.j, Rat(1), pr(p.j), pr(p.i)));
  }
  r.pair_expansion_.resize(static_cast<size_t>(N) * N);
  std::map<GenPair, int> idx;
  for (size_t t = 0; t < r.basis_.size(); ++t) idx[r.basis_[t]] = static_cast<int>(t);
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      GenPair p{i, j}, partner{pr(j), pr(i)};
      LinComb lc;
      if (p < partner)
        lc = {{static_cast<uint16_t>(idx[p]), Rat(1)}};
      else if (partner < p)
        lc = {{static_cast<uint16_t>(idx[partner]), Rat(-1)}};
      r.pair_expansion_[static_cast<size_t>(i - 1) * N + (j - 1)] = std::move(lc);
    }
  return intern(std::move(r));
}

LieRealization::Ptr LieRealization::make_sp_split(int N) {
  if (N < 2 || N % 2 != 0)
    throw std::invalid_argument("sp(J0) realization requires even N >= 2");
  LieRealization r;
  r.kind_ = AlgKind::sp_split;
  r.N_ = N;
  r.graded_ = true;
  r.form_ = RatMatrix::split_form_sp(N);
  {
    std::lock_guard<std::mutex> lock(registry_mutex());
    auto it = registry().find(r.descriptor());
    if (it != registry().end()) return it->second;
  }
  auto pr = [N](int a) { return N + 1 - a; };
  auto sgn = [N](int a) { return a <= N / 2 ? Rat(-1) : Rat(1); };
  std::vector<GenPair> pairs;
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      GenPair p{i, j}, partner{pr(j), pr(i)};
      if (p < partner || p == partner) pairs.push_back(p);  // keep self-paired F_{ii'}
    }
  std::stable_sort(pairs.begin(), pairs.end(), [](GenPair a, GenPair b) {
    if (grade_of_pair(a) != grade_of_pair(b)) return grade_of_pair(a) < grade_of_pair(b);
    return a < b;
  });
  for (GenPair p : pairs) {
    r.basis_.push_back(p);
    r.grades_.push_back(grade_of_pair(p));
    r.matrices_.push_back(
        elementary_diff(N, p.i, p.j, sgn(p.i) * sgn(p.j), pr(p.j), pr(p.i)));
  }
  r.pair_expansion_.resize(static_cast<size_t>(N) * N);
  std::map<GenPair, int> idx;
  for (size_t t = 0; t < r.basis_.size(); ++t) idx[r.basis_[t]] = static_cast<int>(t);
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      GenPair p{i, j}, partner{pr(j), pr(i)};
      LinComb lc;
      if (p < partner || p == partner)
        lc = {{static_cast<uint16_t>(idx[p]), Rat(1)}};
      else
        lc = {{static_cast<uint16_t>(idx[partner]), -(sgn(i) * sgn(j))}};
      r.pair_expansion_[static_cast<size_t>(i - 1) * N + (j - 1)] = std::move(lc);
    }
  return intern(std::move(r));
}

LieRealization::Ptr LieRealization::make_general(AlgKind kind, const RatMatrix& B) {
  if (kind != AlgKind::o_general && kind != AlgKind::sp_general)
    throw std::invalid_argument("make_general: kind must be o-general or sp-general");
  const int N = B.size();
  if (N < 2) throw std::invalid_argument("make_general: form must be at least 2x2");
  if (kind == AlgKind::o_general && !B.is_symmetric())
    throw std::invalid_argument("make_general: o requires a symmetric form");
  if (kind == AlgKind::sp_general) {
    if (!B.is_alternating())
      throw std::invalid_argument("make_general: sp requires an alternating form");
    if (N % 2 != 0) throw std::invalid_argument("make_general: sp requires even N");
  }
  RatMatrix Binv = B.inverse();  // throws std::domain_error when singular

  LieRealization r;
  r.kind_ = kind;
  r.N_ = N;
  r.graded_ = false;
  r.form_ = B;
  {
    std::lock_guard<std::mutex> lock(registry_mutex());
    auto it = registry().find(r.descriptor());
    if (it != registry().end()) return it->second;
  }
  // F_ij = E_ij - B^{-1} E_ji B has entries (a,b) = d_ai d_bj - Binv_aj B_ib.
  auto member = [&](int i, int j) {
    RatMatrix m(N);
    m.at(i - 1, j - 1) += Rat(1);
    for (int a = 1; a <= N; ++a)
      for (int b = 1; b <= N; ++b)
        m.at(a - 1, b - 1) -= Binv.at(a - 1, j - 1) * B.at(i - 1, b - 1);
    return m;
  };
  // Echelon selection of an independent spanning subset, lex pair order.
  std::vector<std::vector<Rat>> rows;
  std::vector<int> pivots;
  const size_t vlen = static_cast<size_t>(N) * N;
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      RatMatrix m = member(i, j);
      std::vector<Rat> v(vlen);
      for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) v[static_cast<size_t>(a) * N + b] = m.at(a, b);
      for (size_t rr = 0; rr < rows.size(); ++rr) {
        const Rat f = v[static_cast<size_t>(pivots[rr])];
        if (f.is_zero()) continue;
        for (size_t c = 0; c < vlen; ++c) v[c] -= f * rows[rr][c];
      }
      int pivot = -1;
      for (size_t c = 0; c < vlen; ++c)
        if (!v[c].is_zero()) {
          pivot = static_cast<int>(c);
          break;
        }
      if (pivot < 0) continue;
      Rat inv = v[static_cast<size_t>(pivot)].inverse();
      for (auto& c : v) c *= inv;
      rows.push_back(std::move(v));
      pivots.push_back(pivot);
      r.basis_.push_back({i, j});
      r.matrices_.push_back(m);
    }
  const int expect = kind == AlgKind::o_general ? N * (N - 1) / 2 : N * (N + 1) / 2;
  if (static_cast<int>(r.basis_.size()) != expect)
    throw std::logic_error("make_general: unexpected subalgebra dimension");
  r.grades_.assign(r.basis_.size(), Grade::zero);  // unused: ungraded
  return intern(std::move(r));
}

std::string LieRealization::descriptor() const {
  std::string out = to_string(kind_) + ":N=" + std::to_string(N_);
  if (kind_ == AlgKind::o_general || kind_ == AlgKind::sp_general)
    out += ":B=" + form_->to_csv();
  return out;
}

LieRealization::Ptr LieRealization::from_descriptor(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ':')) parts.push_back(tok);
  if (parts.size() < 2 || parts[1].rfind("N=", 0) != 0)
    throw std::invalid_argument("bad realization descriptor: " + text);
  int N = std::stoi(parts[1].substr(2));
  const std::string& kind = parts[0];
  if (kind == "gl") return make_gl(N);
  if (kind == "o-id") return make_o_identity(N);
  if (kind == "o-split") return make_o_split(N);
  if (kind == "sp-split") return make_sp_split(N);
  if (kind == "o-general" || kind == "sp-general") {
    if (parts.size() < 3 || parts[2].rfind("B=", 0) != 0)
      throw std::invalid_argument("general realization descriptor needs B=: " + text);
    RatMatrix B = RatMatrix::parse_csv(parts[2].substr(2));
    return make_general(kind == "o-general" ? AlgKind::o_general : AlgKind::sp_general, B);
  }
  throw std::invalid_argument("unknown realization kind: " + kind);
}

}  // namespace capelli
