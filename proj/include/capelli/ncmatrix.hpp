// Noncommutative matrix functions over EnvElements: column determinants and
// permanents, symmetrized Det/Per with diagonal parameters, the minor sums
// Det_k / Per_k, Pfaffian, Hafnian, conjugation, index-sequence utilities.
#pragma once

#include <functional>
#include <vector>

#include "capelli/env.hpp"

namespace capelli {

// Sequence of diagonal shift parameters a_1..a_k.
using ShiftSeq = std::vector<UnivPoly>;

ShiftSeq shift_seq_constants(const std::vector<Rat>& v);
// u + v_t (or u - v_t with negate).
ShiftSeq shift_seq_u_plus(const UnivPoly& u, const std::vector<Rat>& v, bool negate = false);

// Square matrix with EnvElement entries over a single realization.
// Indices are 1-based, matching the generator labels.
class NCMatrix {
 public:
  NCMatrix(LieRealization::Ptr r, int n);

  // Matrix of generator symbols: (i,j) entry is E_ij / F_ij expressed in the
  // canonical basis.
  static NCMatrix generator_matrix(const LieRealization::Ptr& r);
  // Generator matrix with the tilde/hat scalar diagonal adjustment
  // (o-split / sp-split only).
  static NCMatrix adjusted_matrix(const LieRealization::Ptr& r,
                                  LieRealization::AdjustVariant v);

  int size() const { return n_; }
  const LieRealization::Ptr& realization() const { return r_; }
  EnvElement& at(int i, int j);
  const EnvElement& at(int i, int j) const;

  // Copy with u added on the diagonal.
  NCMatrix plus_diagonal(const UnivPoly& u) const;
  // Entrywise rational left/right multiplication.
  friend NCMatrix operator*(const RatMatrix& g, const NCMatrix& z);
  friend NCMatrix operator*(const NCMatrix& z, const RatMatrix& g);
  friend NCMatrix operator+(const NCMatrix& a, const NCMatrix& b);
  friend NCMatrix operator-(const NCMatrix& a, const NCMatrix& b);

 private:
  LieRealization::Ptr r_;
  int n_;
  std::vector<EnvElement> e_;
};

// Z_ij + delta_ij * a.
EnvElement shifted_entry(const NCMatrix& z, int i, int j, const UnivPoly& a);

// k x k block with entry (s,t) = Z_{rows_s, cols_t} + delta_{rows_s, cols_t} * a_t.
// The delta compares matrix index VALUES, so a weak index sequence with
// repeats shifts entries off the block diagonal as well (the 1_alpha rule).
NCMatrix subblock_with_shifts(const NCMatrix& z, const std::vector<int>& rows,
                              const std::vector<int>& cols, const ShiftSeq& a);
NCMatrix submatrix_with_shifts(const NCMatrix& z, const std::vector<int>& alpha,
                               const ShiftSeq& a);

// Signed / unsigned permutation sums with factors multiplied column by column.
EnvElement column_det(const NCMatrix& z);
EnvElement column_per(const NCMatrix& z);

// Symmetrized determinant / permanent with diagonal parameters:
// (1/N!) sum over row and column permutations of the shifted entries.
EnvElement sym_det(const NCMatrix& z, const ShiftSeq& a);
EnvElement sym_per(const NCMatrix& z, const ShiftSeq& a);

// Minor sums: Det_k over strictly increasing index sequences, Per_k over
// non-decreasing ones weighted by 1/alpha!. k = 0 gives 1; Det_k vanishes for
// k > N.
EnvElement det_k(const NCMatrix& z, int k, const ShiftSeq& a);
EnvElement per_k(const NCMatrix& z, int k, const ShiftSeq& a);

// Perfect-matching sums for even-size matrices; entries are checked to be
// alternating (Pf) or symmetric (Hf) as EnvElements.
EnvElement pfaffian(const NCMatrix& z);
EnvElement hafnian(const NCMatrix& z);

// g Z g^{-1} for an invertible rational g.
NCMatrix conjugate(const NCMatrix& z, const RatMatrix& g);

// Index sequences alpha = (alpha_1..alpha_k) in 1..N.
std::vector<std::vector<int>> strict_index_sequences(int N, int k);
std::vector<std::vector<int>> weak_index_sequences(int N, int k);
// alpha! = product of multiplicity factorials.
Rat multiplicity_factorial(const std::vector<int>& alpha);

// All permutations of {1..k} with signs, in lexicographic order.
const std::vector<std::pair<std::vector<int>, int>>& permutations_with_signs(int k);

}  // namespace capelli
