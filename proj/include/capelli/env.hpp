// Arithmetic in the universal enveloping algebra U(g): PBW normal ordering,
// products, commutators, Harish-Chandra projection, highest-weight
// eigenvalues.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "capelli/polynomial.hpp"
#include "capelli/realization.hpp"

namespace capelli {

// PBW monomial: basis indices, non-decreasing in the realization's generator
// order. The empty monomial is 1.
using PbwMonomial = std::vector<uint16_t>;

// (degree, lexicographic) order; also the rendering and witness order.
struct PbwMonomialLess {
  bool operator()(const PbwMonomial& a, const PbwMonomial& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

// Highest-weight data: a value for every Cartan generator of a graded
// realization.
struct Weight {
  LieRealization::Ptr realization;
  std::map<uint16_t, Rat> values;
};

// Partition conventions: gl takes N entries (E_ii -> lambda_i); sp-split takes
// N/2 entries (F_ii -> lambda_i for the canonical diagonal generators);
// o-split takes floor(N/2) entries.
Weight weight_from_partition(const LieRealization::Ptr& r, const std::vector<Rat>& lambda);

// An element of U(g): a finite map from PBW monomials to UnivPoly
// coefficients, with no zero coefficients stored. Immutable value semantics;
// all operations are pure.
class EnvElement {
 public:
  using TermMap = std::map<PbwMonomial, UnivPoly, PbwMonomialLess>;

  EnvElement() = default;  // detached zero; usable only as a placeholder
  explicit EnvElement(LieRealization::Ptr r) : realization_(std::move(r)) {}

  static EnvElement zero(LieRealization::Ptr r) { return EnvElement(std::move(r)); }
  static EnvElement scalar(LieRealization::Ptr r, const UnivPoly& c);
  static EnvElement generator(LieRealization::Ptr r, int idx);
  static EnvElement generator(LieRealization::Ptr r, GenPair p);  // canonicalized
  static EnvElement from_lincomb(LieRealization::Ptr r, const LinComb& lc);

  const LieRealization::Ptr& realization() const { return realization_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  int degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.size()); }
  UnivPoly coeff(const PbwMonomial& m) const;

  EnvElement operator-() const;
  EnvElement& operator+=(const EnvElement& o);
  EnvElement& operator-=(const EnvElement& o);
  friend EnvElement operator+(EnvElement a, const EnvElement& b) { return a += b; }
  friend EnvElement operator-(EnvElement a, const EnvElement& b) { return a -= b; }
  // PBW normal form of the product.
  friend EnvElement operator*(const EnvElement& a, const EnvElement& b);
  EnvElement scaled(const UnivPoly& c) const;
  EnvElement scaled(const Rat& c) const { return scaled(UnivPoly(c)); }

  friend bool operator==(const EnvElement& a, const EnvElement& b);
  friend bool operator!=(const EnvElement& a, const EnvElement& b) { return !(a == b); }

  // Adds c * (normal form of the free word w); w need not be sorted.
  void add_word(const std::vector<uint16_t>& w, const UnivPoly& c);

  // Keeps exactly the monomials all of whose generators are zero-graded.
  EnvElement hc_project() const;
  // Top-degree part as a plain commutative polynomial in the generators
  // (monomial -> coefficient), for the filtration property.
  TermMap top_degree_part() const;

  // Deterministic rendering: terms by (degree, monomial lex), monomials as
  // "F[2,1]*F[1,1]", coefficients as UnivPoly text.
  std::string to_string() const;
  // First term in rendering order; the minimal witness of a nonzero element.
  std::string first_term_string() const;

 private:
  void add_term(PbwMonomial m, const UnivPoly& c);

  LieRealization::Ptr realization_;
  TermMap terms_;
};

EnvElement operator*(const UnivPoly& c, const EnvElement& e);
EnvElement operator*(const Rat& c, const EnvElement& e);

inline EnvElement env_commutator(const EnvElement& a, const EnvElement& b) {
  return a * b - b * a;
}

// Harish-Chandra projection followed by evaluation of the Cartan generators
// at the weight. For central elements this is the eigenvalue on the
// highest-weight representation; no rho-shift is applied.
UnivPoly eigenvalue(const EnvElement& e, const Weight& w);

// Thread-local rewrite statistics, reset per check by the verification layer.
struct EnvStats {
  uint64_t rewrite_steps = 0;
  uint64_t bracket_lookups = 0;
};
void env_stats_reset();
EnvStats env_stats_snapshot();

}  // namespace capelli
