#include "capelli/elements.hpp"

#include <stdexcept>

namespace capelli {

std::vector<Rat> natural_seq(int k) {
  std::vector<Rat> v(static_cast<size_t>(k < 0 ? 0 : k));
  for (int t = 0; t < k; ++t) v[static_cast<size_t>(t)] = Rat(k - 1 - t);
  return v;
}

std::vector<Rat> tilde_natural_seq(int k) {
  // (k/2-1, ..., 0, 0, ..., -k/2+1) for even k, with a single middle 0 and
  // half-integer steps for odd k. Reversing the sequence negates it.
  std::vector<Rat> v(static_cast<size_t>(k < 0 ? 0 : k));
  for (int t = 0; t < k; ++t) {
    if (k % 2 == 0) {
      v[static_cast<size_t>(t)] = t < k / 2 ? Rat(k / 2 - 1 - t) : Rat(k / 2 - t);
    } else {
      const int mid = (k - 1) / 2;
      v[static_cast<size_t>(t)] =
          t < mid ? Rat(k - 2 - 2 * t, 2) : t == mid ? Rat(0) : Rat(k - 2 * t, 2);
    }
  }
  return v;
}

std::vector<Rat> half_descending_seq(int k) {
  std::vector<Rat> v(static_cast<size_t>(k < 0 ? 0 : k));
  for (int t = 0; t < k; ++t) v[static_cast<size_t>(t)] = Rat(k - 2 - 2 * t, 2);
  return v;
}

std::vector<Rat> hat_descending_seq(int k) {
  std::vector<Rat> v(static_cast<size_t>(k < 0 ? 0 : k));
  for (int t = 0; t < k; ++t) v[static_cast<size_t>(t)] = Rat(k - 2 * t, 2);
  return v;
}

Rat coeff_R(int k, int l) {
  if (k < 0 || l < 0) throw std::invalid_argument("coeff_R: negative arguments");
  return rat_binomial(k, 2 * l) * rat_odd_double_factorial(l);
}

namespace {

// Sum over strict / weak index sequences of the column det / per of the
// shifted sub-blocks; the weak sums carry the 1/alpha! weight.
EnvElement minor_column_sum(const NCMatrix& z, int k, const ShiftSeq& shifts, bool det_style) {
  const auto& r = z.realization();
  if (k == 0) return EnvElement::scalar(r, UnivPoly::one());
  EnvElement acc = EnvElement::zero(r);
  const auto seqs =
      det_style ? strict_index_sequences(z.size(), k) : weak_index_sequences(z.size(), k);
  for (const auto& alpha : seqs) {
    EnvElement inner = det_style ? column_det(submatrix_with_shifts(z, alpha, shifts))
                                 : column_per(submatrix_with_shifts(z, alpha, shifts));
    acc += det_style ? inner : inner.scaled(multiplicity_factorial(alpha).inverse());
  }
  return acc;
}

UnivPoly chain_product(const UnivPoly& u, const std::vector<Rat>& offsets) {
  UnivPoly p = UnivPoly::one();
  for (const Rat& c : offsets) p = p * (u + c);
  return p;
}

}  // namespace

EnvElement capelli_det_gl(int N, const UnivPoly& u) {
  auto r = LieRealization::make_gl(N);
  NCMatrix z = NCMatrix::generator_matrix(r);
  std::vector<Rat> nat = natural_seq(N);
  for (int i = 1; i <= N; ++i)
    z.at(i, i) += EnvElement::scalar(r, u + nat[static_cast<size_t>(i - 1)]);
  return column_det(z);
}

EnvElement capelli_det_gl_sym(int N, const UnivPoly& u) {
  auto r = LieRealization::make_gl(N);
  return sym_det(NCMatrix::generator_matrix(r), shift_seq_u_plus(u, natural_seq(N)));
}

EnvElement capelli_minor_gl(int N, int k, const UnivPoly& u) {
  auto r = LieRealization::make_gl(N);
  if (k < 0 || k > N) return EnvElement::zero(r);
  return minor_column_sum(NCMatrix::generator_matrix(r), k,
                          shift_seq_u_plus(u, natural_seq(k)), true);
}

EnvElement capelli_minor_gl_sym(int N, int k, const UnivPoly& u) {
  auto r = LieRealization::make_gl(N);
  return det_k(NCMatrix::generator_matrix(r), k, shift_seq_u_plus(u, natural_seq(k)));
}

EnvElement nazarov_per_gl(int N, int k, const UnivPoly& u) {
  auto r = LieRealization::make_gl(N);
  return minor_column_sum(NCMatrix::generator_matrix(r), k,
                          shift_seq_u_plus(u, natural_seq(k), /*negate=*/true), false);
}

EnvElement nazarov_per_gl_sym(int N, int k, const UnivPoly& u) {
  auto r = LieRealization::make_gl(N);
  return per_k(NCMatrix::generator_matrix(r), k,
               shift_seq_u_plus(u, natural_seq(k), /*negate=*/true));
}

EnvElement howe_umeda_o(int N, const UnivPoly& u) {
  auto r = LieRealization::make_o_identity(N);
  return minor_column_sum(NCMatrix::generator_matrix(r), N,
                          shift_seq_u_plus(u, natural_seq(N)), true);
}

EnvElement howe_umeda_o_sym(int N, const UnivPoly& u) {
  auto r = LieRealization::make_o_identity(N);
  return sym_det(NCMatrix::generator_matrix(r), shift_seq_u_plus(u, natural_seq(N)));
}

EnvElement howe_umeda_o_minor(int N, int k, const UnivPoly& u) {
  auto r = LieRealization::make_o_identity(N);
  if (k < 0 || k > N) return EnvElement::zero(r);
  return minor_column_sum(NCMatrix::generator_matrix(r), k,
                          shift_seq_u_plus(u, natural_seq(k)), true);
}

EnvElement howe_umeda_o_minor_sym(int N, int k, const UnivPoly& u) {
  auto r = LieRealization::make_o_identity(N);
  return det_k(NCMatrix::generator_matrix(r), k, shift_seq_u_plus(u, natural_seq(k)));
}

EnvElement wachi_o_split(int N, const UnivPoly& u) {
  auto r = LieRealization::make_o_split(N);
  return minor_column_sum(NCMatrix::generator_matrix(r), N,
                          shift_seq_u_plus(u, tilde_natural_seq(N)), true);
}

EnvElement wachi_o_split_sym(int N, const UnivPoly& u) {
  auto r = LieRealization::make_o_split(N);
  return sym_det(NCMatrix::generator_matrix(r), shift_seq_u_plus(u, tilde_natural_seq(N)));
}

EnvElement wachi_o_split_minor(int N, int k, const UnivPoly& u) {
  auto r = LieRealization::make_o_split(N);
  if (k < 0 || k > N) return EnvElement::zero(r);
  return minor_column_sum(
      NCMatrix::adjusted_matrix(r, LieRealization::AdjustVariant::tilde), k,
      shift_seq_u_plus(u, half_descending_seq(k)), true);
}

EnvElement wachi_o_split_minor_hat(int N, int k, const UnivPoly& u) {
  auto r = LieRealization::make_o_split(N);
  if (k < 0 || k > N) return EnvElement::zero(r);
  return minor_column_sum(
      NCMatrix::adjusted_matrix(r, LieRealization::AdjustVariant::hat), k,
      shift_seq_u_plus(u, hat_descending_seq(k)), true);
}

EnvElement wachi_o_split_minor_sym(int N, int k, const UnivPoly& u) {
  auto r = LieRealization::make_o_split(N);
  return det_k(NCMatrix::generator_matrix(r), k, shift_seq_u_plus(u, tilde_natural_seq(k)));
}

EnvElement sp_split_per(int N, int k, const UnivPoly& u) {
  auto r = LieRealization::make_sp_split(N);
  return minor_column_sum(
      NCMatrix::adjusted_matrix(r, LieRealization::AdjustVariant::tilde), k,
      shift_seq_u_plus(u, half_descending_seq(k), /*negate=*/true), false);
}

EnvElement sp_split_per_hat(int N, int k, const UnivPoly& u) {
  auto r = LieRealization::make_sp_split(N);
  return minor_column_sum(
      NCMatrix::adjusted_matrix(r, LieRealization::AdjustVariant::hat), k,
      shift_seq_u_plus(u, hat_descending_seq(k), /*negate=*/true), false);
}

EnvElement sp_split_per_sym(int N, int k, const UnivPoly& u) {
  auto r = LieRealization::make_sp_split(N);
  return per_k(NCMatrix::generator_matrix(r), k, shift_seq_u_plus(u, tilde_natural_seq(k)));
}

UnivPoly eig_capelli_det_gl(int N, const std::vector<Rat>& lambda, const UnivPoly& u) {
  if (static_cast<int>(lambda.size()) != N)
    throw std::invalid_argument("eig_capelli_det_gl: partition length must be N");
  std::vector<Rat> offs;
  for (int i = 1; i <= N; ++i) offs.push_back(lambda[static_cast<size_t>(i - 1)] + Rat(N - i));
  return chain_product(u, offs);
}

UnivPoly eig_capelli_minor_gl(int N, int k, const std::vector<Rat>& lambda, const UnivPoly& u) {
  if (static_cast<int>(lambda.size()) != N)
    throw std::invalid_argument("eig_capelli_minor_gl: partition length must be N");
  UnivPoly acc;
  for (const auto& alpha : strict_index_sequences(N, k)) {
    std::vector<Rat> offs;
    for (int t = 1; t <= k; ++t)
      offs.push_back(lambda[static_cast<size_t>(alpha[static_cast<size_t>(t - 1)] - 1)] +
                     Rat(k - t));
    acc += chain_product(u, offs);
  }
  return acc;
}

UnivPoly eig_nazarov_per_gl(int N, int k, const std::vector<Rat>& lambda, const UnivPoly& u) {
  if (static_cast<int>(lambda.size()) != N)
    throw std::invalid_argument("eig_nazarov_per_gl: partition length must be N");
  UnivPoly acc;
  for (const auto& alpha : weak_index_sequences(N, k)) {
    std::vector<Rat> offs;
    for (int t = 1; t <= k; ++t)
      offs.push_back(lambda[static_cast<size_t>(alpha[static_cast<size_t>(t - 1)] - 1)] +
                     Rat(-k + t));
    acc += chain_product(u, offs);
  }
  return acc;
}

UnivPoly eig_wachi_o_split(int N, const std::vector<Rat>& lambda, const UnivPoly& u) {
  if (static_cast<int>(lambda.size()) != N / 2)
    throw std::invalid_argument("eig_wachi_o_split: partition length must be floor(N/2)");
  UnivPoly acc = N % 2 == 1 ? u : UnivPoly::one();
  for (int i = 1; i <= N / 2; ++i) {
    Rat l = lambda[static_cast<size_t>(i - 1)] + Rat(N - 2 * i, 2);
    acc = acc * ((u + l) * (u - l));
  }
  return acc;
}

UnivPoly eig_sp_split_per(int N, int k, const std::vector<Rat>& lambda, const UnivPoly& u) {
  const int n = N / 2;
  if (N % 2 != 0) throw std::invalid_argument("eig_sp_split_per: N must be even");
  if (static_cast<int>(lambda.size()) != n)
    throw std::invalid_argument("eig_sp_split_per: partition length must be N/2");
  UnivPoly acc;
  for (int l = 0; l <= k; ++l) {
    for (const auto& lo : weak_index_sequences(n, l)) {
      for (const auto& hi_rel : weak_index_sequences(n, k - l)) {
        std::vector<Rat> offs;
        // First chain over 1..n: factor i carries lambda_{a_i} - k/2 + i.
        for (int i = 1; i <= l; ++i)
          offs.push_back(lambda[static_cast<size_t>(lo[static_cast<size_t>(i - 1)] - 1)] +
                         Rat(-k + 2 * i, 2));
        // Second chain over n+1..N: factor j carries -lambda_{a'_j} - k/2 + j - 1
        // with a'_j = N + 1 - a_j.
        for (int j = l + 1; j <= k; ++j) {
          int aj = n + hi_rel[static_cast<size_t>(j - l - 1)];
          int primed = N + 1 - aj;
          offs.push_back(-lambda[static_cast<size_t>(primed - 1)] + Rat(-k + 2 * (j - 1), 2));
        }
        acc += chain_product(u, offs);
      }
    }
  }
  return acc;
}

}  // namespace capelli
