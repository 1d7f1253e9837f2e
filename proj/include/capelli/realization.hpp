// Concrete realizations of gl_N, o(S), sp(J): indexed generator bases,
// sparse structure constants, triangular gradings, and canonicalization of
// redundant generator symbols.
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "capelli/ratmatrix.hpp"
#include "capelli/rational.hpp"

namespace capelli {

enum class AlgKind { gl, o_identity, o_split, sp_split, o_general, sp_general };

enum class Grade : uint8_t { minus = 0, zero = 1, plus = 2 };

// 1-based index pair naming a generator symbol E_ij or F_ij.
struct GenPair {
  int i = 0;
  int j = 0;
  friend bool operator==(const GenPair&, const GenPair&) = default;
  friend bool operator<(const GenPair& a, const GenPair& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  }
};

// Sparse linear combination of basis generators, sorted by index.
struct LinTerm {
  uint16_t gen;
  Rat coeff;
  friend bool operator==(const LinTerm&, const LinTerm&) = default;
};
using LinComb = std::vector<LinTerm>;

LinComb lin_add(const LinComb& a, const LinComb& b);
LinComb lin_scale(const LinComb& a, const Rat& c);

// A finite Lie algebra presented by an ordered generator basis with exact
// structure constants. All brackets are derived through the embedding into
// gl_N and, for the split kinds, cross-checked against the closed-form
// commutation relation; a mismatch aborts construction.
//
// Instances are interned and immutable: the same descriptor always yields the
// same shared object, so identity of realizations is pointer identity.
class LieRealization : public std::enable_shared_from_this<LieRealization> {
 public:
  using Ptr = std::shared_ptr<const LieRealization>;

  static Ptr make_gl(int N);
  static Ptr make_o_identity(int N);
  static Ptr make_o_split(int N);
  static Ptr make_sp_split(int N);
  // kind must be o_general (B symmetric) or sp_general (B alternating, N even);
  // B invertible over the rationals.
  static Ptr make_general(AlgKind kind, const RatMatrix& B);

  // "gl:N=3", "o-id:N=2", "o-split:N=4", "sp-split:N=2",
  // "o-general:N=3:B=1,0,0;0,1,0;0,0,1".
  static Ptr from_descriptor(const std::string& text);
  std::string descriptor() const;

  AlgKind kind() const { return kind_; }
  int N() const { return N_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<GenPair>& basis() const { return basis_; }
  GenPair pair_of(int idx) const { return basis_[static_cast<size_t>(idx)]; }
  // Basis position of a canonical pair; throws if the pair is not canonical.
  int index_of(GenPair p) const;

  bool graded() const { return graded_; }
  Grade grade_of(int idx) const { return grades_[static_cast<size_t>(idx)]; }
  const std::vector<int>& cartan_indices() const { return cartan_; }

  // [basis_a, basis_b] as a combination of basis generators.
  const LinComb& bracket(int a, int b) const {
    return brackets_[static_cast<size_t>(a) * basis_.size() + b];
  }
  // Bracket of arbitrary combinations.
  LinComb bracket_lin(const LinComb& x, const LinComb& y) const;

  // Expression of the (possibly redundant) symbol F_ij / E_ij in the basis.
  const LinComb& expand_pair(int i, int j) const;

  // Defining N x N rational matrix of a basis generator (gl embedding).
  const RatMatrix& matrix_of(int idx) const { return matrices_[static_cast<size_t>(idx)]; }
  // Expand an arbitrary member matrix of the subalgebra in the basis;
  // throws std::invalid_argument if X does not lie in the span.
  LinComb expand_member_matrix(const RatMatrix& X) const;

  // Closed-form bracket of two generator symbols via the commutation relation
  // [F_ij,F_kl] = d_kj F_il - d_il F_kj + e(k)e(l) d_{ik'} F_{l'j}
  //             + e(i)e(j) d_{j'l} F_{ki'}
  // (with e == 1 and the appropriate i' for the orthogonal kinds, and
  // [E_ij,E_kl] = d_kj E_il - d_il E_kj for gl). Not available for general
  // realizations.
  LinComb closed_form_bracket(GenPair p, GenPair q) const;

  // Split-kind helpers.
  int prime(int i) const { return N_ + 1 - i; }
  Rat eps(int i) const;  // sp split sign: -1 for i <= N/2, +1 above

  // Bilinear form matrix for the o/sp kinds.
  const RatMatrix* form() const { return form_ ? &*form_ : nullptr; }

  // Diagonal adjustment of the tilde / hat generator matrix variants,
  // as a length-N vector of constants added to the diagonal.
  enum class AdjustVariant { tilde, hat };
  std::vector<Rat> diagonal_adjustment(AdjustVariant v) const;

  char symbol() const { return kind_ == AlgKind::gl ? 'E' : 'F'; }

 private:
  LieRealization() = default;
  void build_from_matrices();
  static Ptr intern(LieRealization&& r);

  AlgKind kind_ = AlgKind::gl;
  int N_ = 0;
  bool graded_ = false;
  std::vector<GenPair> basis_;
  std::vector<Grade> grades_;
  std::vector<int> cartan_;
  std::vector<RatMatrix> matrices_;
  std::vector<LinComb> brackets_;
  std::map<GenPair, int> basis_index_;
  std::vector<LinComb> pair_expansion_;  // N*N entries, (i,j) at (i-1)*N+(j-1)
  std::optional<RatMatrix> form_;
  // Row-echelon data over the basis matrices, for expand_member_matrix.
  std::vector<std::vector<Rat>> echelon_rows_;
  std::vector<int> echelon_pivot_;
  std::vector<std::vector<Rat>> echelon_combo_;
};

std::string to_string(AlgKind k);

}  // namespace capelli
