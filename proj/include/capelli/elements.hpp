// Constructors for the named central elements of U(gl_N), U(o(S)), U(sp(J))
// and the closed-form eigenvalue polynomials they satisfy on highest-weight
// representations.
#pragma once

#include <vector>

#include "capelli/ncmatrix.hpp"

namespace capelli {

// Shift families.
// natural_seq(k)        = (k-1, k-2, ..., 0)
// tilde_natural_seq(k)  = (k/2-1, ..., 0, 0, ..., -k/2+1)       (k even)
//                         (k/2-1, ..., 1/2, 0, -1/2, ..., -k/2+1) (k odd)
// half_descending_seq(k)= (k/2-1, k/2-2, ..., -k/2)
// hat_descending_seq(k) = (k/2, k/2-1, ..., -k/2+1)
std::vector<Rat> natural_seq(int k);
std::vector<Rat> tilde_natural_seq(int k);
std::vector<Rat> half_descending_seq(int k);
std::vector<Rat> hat_descending_seq(int k);

// R^k_l = C(k,2l) (2l-1)!!; zero when 2l > k.
Rat coeff_R(int k, int l);

// --- gl_N ---------------------------------------------------------------
// Capelli determinant det(E + u1 + diag(N-1,...,0)).
EnvElement capelli_det_gl(int N, const UnivPoly& u);
// Det(E + u1 ; natural_N), the symmetrized form.
EnvElement capelli_det_gl_sym(int N, const UnivPoly& u);
// Degree-k Capelli element: sum of det over strict k-minors.
EnvElement capelli_minor_gl(int N, int k, const UnivPoly& u);
// Det_k(E + u1 ; natural_k).
EnvElement capelli_minor_gl_sym(int N, int k, const UnivPoly& u);
// Permanent analogue over weak k-minors weighted by 1/alpha!.
EnvElement nazarov_per_gl(int N, int k, const UnivPoly& u);
// Per_k(E + u1 ; -natural_k).
EnvElement nazarov_per_gl_sym(int N, int k, const UnivPoly& u);

// --- o(1), the identity-form orthogonal realization ----------------------
EnvElement howe_umeda_o(int N, const UnivPoly& u);
EnvElement howe_umeda_o_sym(int N, const UnivPoly& u);
EnvElement howe_umeda_o_minor(int N, int k, const UnivPoly& u);
EnvElement howe_umeda_o_minor_sym(int N, int k, const UnivPoly& u);

// --- o(S0), the split orthogonal realization -----------------------------
// det(F + u1 + diag tilde_natural_N).
EnvElement wachi_o_split(int N, const UnivPoly& u);
// Det(F + u1 ; tilde_natural_N).
EnvElement wachi_o_split_sym(int N, const UnivPoly& u);
// Sum over strict k-minors of det(F~_alpha + u1 + diag(k/2-1,...,-k/2)).
EnvElement wachi_o_split_minor(int N, int k, const UnivPoly& u);
// Same element through the hat-adjusted matrix.
EnvElement wachi_o_split_minor_hat(int N, int k, const UnivPoly& u);
// Det_k(F + u1 ; tilde_natural_k).
EnvElement wachi_o_split_minor_sym(int N, int k, const UnivPoly& u);

// --- sp(J0), the split symplectic realization ----------------------------
// Column-permanent form over weak k-minors of the tilde-adjusted matrix.
EnvElement sp_split_per(int N, int k, const UnivPoly& u);
// Same element through the hat-adjusted matrix.
EnvElement sp_split_per_hat(int N, int k, const UnivPoly& u);
// Per_k(F + u1 ; tilde_natural_k).
EnvElement sp_split_per_sym(int N, int k, const UnivPoly& u);

// --- Closed-form eigenvalues ---------------------------------------------
// (u + l_1)...(u + l_N), l_i = lambda_i + N - i.
UnivPoly eig_capelli_det_gl(int N, const std::vector<Rat>& lambda, const UnivPoly& u);
// Sum over strict alpha of (u+lambda_{a_1}+k-1)...(u+lambda_{a_k}).
UnivPoly eig_capelli_minor_gl(int N, int k, const std::vector<Rat>& lambda, const UnivPoly& u);
// Sum over weak alpha of (u+lambda_{a_1}-k+1)...(u+lambda_{a_k}).
UnivPoly eig_nazarov_per_gl(int N, int k, const std::vector<Rat>& lambda, const UnivPoly& u);
// prod (u^2 - l_i^2), l_i = lambda_i + N/2 - i, times u for odd N.
UnivPoly eig_wachi_o_split(int N, const std::vector<Rat>& lambda, const UnivPoly& u);
// The two-chain sum for the split symplectic permanents.
UnivPoly eig_sp_split_per(int N, int k, const std::vector<Rat>& lambda, const UnivPoly& u);

}  // namespace capelli
