#include "capelli/env.hpp"

#include <algorithm>
#include <stdexcept>

namespace capelli {

namespace {

thread_local EnvStats tl_stats;

void require_same(const LieRealization::Ptr& a, const LieRealization::Ptr& b) {
  if (a.get() != b.get())
    throw std::invalid_argument("EnvElement: operands live over different realizations");
}

}  // namespace

void env_stats_reset() { tl_stats = EnvStats{}; }
EnvStats env_stats_snapshot() { return tl_stats; }

Weight weight_from_partition(const LieRealization::Ptr& r, const std::vector<Rat>& lambda) {
  if (!r->graded())
    throw std::invalid_argument("weight_from_partition: realization has no grading");
  size_t expected = 0;
  switch (r->kind()) {
    case AlgKind::gl: expected = static_cast<size_t>(r->N()); break;
    case AlgKind::sp_split: expected = static_cast<size_t>(r->N() / 2); break;
    case AlgKind::o_split: expected = static_cast<size_t>(r->N() / 2); break;
    default:
      throw std::invalid_argument("weight_from_partition: unsupported realization");
  }
  if (lambda.size() != expected)
    throw std::invalid_argument("weight_from_partition: partition length must be " +
                                std::to_string(expected));
  for (size_t t = 0; t + 1 < lambda.size(); ++t)
    if (lambda[t] < lambda[t + 1])
      throw std::invalid_argument("weight_from_partition: partition must be non-increasing");
  if (!lambda.empty() && lambda.back() < Rat(0))
    throw std::invalid_argument("weight_from_partition: partition entries must be nonnegative");

  Weight w;
  w.realization = r;
  const auto& cartan = r->cartan_indices();
  if (cartan.size() != expected)
    throw std::logic_error("weight_from_partition: unexpected Cartan rank");
  // Cartan generators are the canonical diagonal pairs in increasing i.
  for (size_t t = 0; t < cartan.size(); ++t)
    w.values[static_cast<uint16_t>(cartan[t])] = lambda[t];
  return w;
}

EnvElement EnvElement::scalar(LieRealization::Ptr r, const UnivPoly& c) {
  EnvElement e(std::move(r));
  if (!c.is_zero()) e.terms_[{}] = c;
  return e;
}

EnvElement EnvElement::generator(LieRealization::Ptr r, int idx) {
  if (idx < 0 || idx >= r->dim())
    throw std::invalid_argument("EnvElement::generator: index out of range");
  EnvElement e(std::move(r));
  e.terms_[{static_cast<uint16_t>(idx)}] = UnivPoly::one();
  return e;
}

EnvElement EnvElement::generator(LieRealization::Ptr r, GenPair p) {
  const LinComb& lc = r->expand_pair(p.i, p.j);
  return from_lincomb(std::move(r), lc);
}

EnvElement EnvElement::from_lincomb(LieRealization::Ptr r, const LinComb& lc) {
  EnvElement e(std::move(r));
  for (const auto& t : lc) e.terms_[{t.gen}] = UnivPoly::constant(t.coeff);
  return e;
}

UnivPoly EnvElement::coeff(const PbwMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? UnivPoly::zero() : it->second;
}

EnvElement EnvElement::operator-() const {
  EnvElement r(realization_);
  for (const auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

EnvElement& EnvElement::operator+=(const EnvElement& o) {
  if (!realization_) realization_ = o.realization_;
  require_same(realization_, o.realization_);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

EnvElement& EnvElement::operator-=(const EnvElement& o) {
  if (!realization_) realization_ = o.realization_;
  require_same(realization_, o.realization_);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

EnvElement EnvElement::scaled(const UnivPoly& c) const {
  EnvElement r(realization_);
  if (c.is_zero()) return r;
  for (const auto& [m, v] : terms_) r.terms_[m] = v * c;
  return r;
}

EnvElement operator*(const UnivPoly& c, const EnvElement& e) { return e.scaled(c); }
EnvElement operator*(const Rat& c, const EnvElement& e) { return e.scaled(UnivPoly(c)); }

bool operator==(const EnvElement& a, const EnvElement& b) {
  if (a.realization_ && b.realization_) require_same(a.realization_, b.realization_);
  return a.terms_ == b.terms_;
}

void EnvElement::add_term(PbwMonomial m, const UnivPoly& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(std::move(m), c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void EnvElement::add_word(const std::vector<uint16_t>& w, const UnivPoly& c) {
  if (c.is_zero()) return;
  const LieRealization& R = *realization_;
  // Worklist of free words; rewrite the leftmost out-of-order adjacent pair
  // x y -> y x + [x,y] until sorted. Terminates: each step either lowers the
  // inversion count at fixed degree or the degree itself.
  std::vector<std::pair<PbwMonomial, UnivPoly>> work;
  work.emplace_back(w, c);
  while (!work.empty()) {
    auto [m, cf] = std::move(work.back());
    work.pop_back();
    size_t t = 0;
    while (t + 1 < m.size() && m[t] <= m[t + 1]) ++t;
    if (m.size() < 2 || t + 1 == m.size()) {
      add_term(std::move(m), cf);
      continue;
    }
    ++tl_stats.rewrite_steps;
    const uint16_t x = m[t], y = m[t + 1];
    PbwMonomial swapped = m;
    std::swap(swapped[t], swapped[t + 1]);
    ++tl_stats.bracket_lookups;
    const LinComb& br = R.bracket(x, y);
    for (const auto& term : br) {
      PbwMonomial shorter;
      shorter.reserve(m.size() - 1);
      shorter.insert(shorter.end(), m.begin(), m.begin() + t);
      shorter.push_back(term.gen);
      shorter.insert(shorter.end(), m.begin() + t + 2, m.end());
      work.emplace_back(std::move(shorter), cf.scaled(term.coeff));
    }
    work.emplace_back(std::move(swapped), std::move(cf));
  }
}

EnvElement operator*(const EnvElement& a, const EnvElement& b) {
  require_same(a.realization_, b.realization_);
  EnvElement r(a.realization_);
  std::vector<uint16_t> word;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      word.clear();
      word.insert(word.end(), ma.begin(), ma.end());
      word.insert(word.end(), mb.begin(), mb.end());
      r.add_word(word, ca * cb);
    }
  return r;
}

EnvElement EnvElement::hc_project() const {
  if (!realization_->graded())
    throw std::invalid_argument("hc_project: realization has no grading");
  EnvElement r(realization_);
  for (const auto& [m, c] : terms_) {
    bool cartan_only = true;
    for (uint16_t g : m)
      if (realization_->grade_of(g) != Grade::zero) {
        cartan_only = false;
        break;
      }
    if (cartan_only) r.terms_[m] = c;
  }
  return r;
}

EnvElement::TermMap EnvElement::top_degree_part() const {
  TermMap out;
  int d = degree();
  for (const auto& [m, c] : terms_)
    if (static_cast<int>(m.size()) == d) out[m] = c;
  return out;
}

UnivPoly eigenvalue(const EnvElement& e, const Weight& w) {
  if (e.realization().get() != w.realization.get())
    throw std::invalid_argument("eigenvalue: weight over a different realization");
  EnvElement h = e.hc_project();
  UnivPoly out;
  for (const auto& [m, c] : h.terms()) {
    Rat prod(1);
    for (uint16_t g : m) {
      auto it = w.values.find(g);
      if (it == w.values.end())
        throw std::invalid_argument("eigenvalue: weight missing a Cartan generator");
      prod *= it->second;
    }
    out += c.scaled(prod);
  }
  return out;
}

namespace {

std::string monomial_string(const LieRealization& r, const PbwMonomial& m) {
  std::string out;
  for (size_t t = 0; t < m.size(); ++t) {
    if (t) out += "*";
    GenPair p = r.pair_of(m[t]);
    out += r.symbol();
    out += "[" + std::to_string(p.i) + "," + std::to_string(p.j) + "]";
  }
  return out;
}

std::string term_string(const LieRealization& r, const PbwMonomial& m, const UnivPoly& c) {
  if (m.empty()) return "(" + c.to_string() + ")";
  if (c.is_one()) return monomial_string(r, m);
  return "(" + c.to_string() + ")*" + monomial_string(r, m);
}

}  // namespace

std::string EnvElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += term_string(*realization_, m, c);
  }
  return out;
}

std::string EnvElement::first_term_string() const {
  if (terms_.empty()) return "0";
  const auto& [m, c] = *terms_.begin();
  return term_string(*realization_, m, c);
}

}  // namespace capelli
