// The extended algebras Lambda(C^{2N}) (x) U and S(C^{2N}) (x) U: variable
// words over e_1..e_N, e*_1..e*_N, the Fischer pairing, the bracket <.>, and
// the named elements eta, Xi, tau, omega, rho, Theta, W_k, V_k, W'_k.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "capelli/ncmatrix.hpp"

namespace capelli {

enum class Flavor { exterior, symmetric };

// Sorted id multiset; ids 0..N-1 are e_1..e_N, ids N..2N-1 are e*_1..e*_N.
// Exterior words carry no repeats; signs are resolved when products are
// canonicalized.
using VarWord = std::vector<uint16_t>;

inline uint16_t var_e(int i) { return static_cast<uint16_t>(i - 1); }
inline uint16_t var_estar(int i, int N) { return static_cast<uint16_t>(N + i - 1); }

struct VarWordLess {
  bool operator()(const VarWord& a, const VarWord& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

// Element of the extended algebra: finite map VarWord -> EnvElement. The
// variables commute with all EnvElements.
class ExtElement {
 public:
  ExtElement() = default;
  ExtElement(LieRealization::Ptr r, Flavor f);

  static ExtElement zero(LieRealization::Ptr r, Flavor f) { return ExtElement(std::move(r), f); }
  static ExtElement one(LieRealization::Ptr r, Flavor f);
  static ExtElement variable(LieRealization::Ptr r, Flavor f, uint16_t id);

  const LieRealization::Ptr& realization() const { return r_; }
  Flavor flavor() const { return flavor_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<VarWord, EnvElement, VarWordLess>& terms() const { return terms_; }

  ExtElement operator-() const;
  ExtElement& operator+=(const ExtElement& o);
  ExtElement& operator-=(const ExtElement& o);
  friend ExtElement operator+(ExtElement a, const ExtElement& b) { return a += b; }
  friend ExtElement operator-(ExtElement a, const ExtElement& b) { return a -= b; }
  friend ExtElement operator*(const ExtElement& a, const ExtElement& b);
  ExtElement scaled(const UnivPoly& c) const;
  ExtElement scaled(const Rat& c) const { return scaled(UnivPoly(c)); }
  ExtElement pow(int k) const;
  // x^(k) = x^k / k!.
  ExtElement divided_power(int k) const;

  friend bool operator==(const ExtElement& a, const ExtElement& b);
  friend bool operator!=(const ExtElement& a, const ExtElement& b) { return !(a == b); }

  // Adds c * (canonical form of the id sequence); for the exterior flavor the
  // sorting sign is folded into the coefficient.
  void add_word(const std::vector<uint16_t>& ids, const EnvElement& c);

  // Coefficient of an id sequence, sign-adjusted for exterior words.
  EnvElement coefficient_of(const std::vector<uint16_t>& ids) const;

  std::string to_string() const;
  std::string first_term_string() const;

 private:
  void add_term(const VarWord& w, const EnvElement& c);

  LieRealization::Ptr r_;
  Flavor flavor_ = Flavor::symmetric;
  std::map<VarWord, EnvElement, VarWordLess> terms_;
};

// Fischer pairing <e_a e*_b | e_a' e*_b'> = delta delta a! b!, extended
// bilinearly; EnvElement coefficients multiply through. Symmetric flavor only.
EnvElement fischer_pair(const ExtElement& phi, const ExtElement& psi);

// <phi> = sum_k <phi | tau^(k)>: keeps the words whose e-part equals the
// e*-part as multisets, weighted by the multiplicity factorial.
EnvElement bracket_expectation(const ExtElement& phi);

// Linear substitution v_j -> sum_i g_{ij} v_i extended multiplicatively;
// g is 2N x 2N and invertible. Symmetric flavor only.
ExtElement transform(const ExtElement& phi, const RatMatrix& g);

// Named elements. eta_j(a) = sum_i e_i Z_ij(a) with Z the generator matrix;
// the dagger versions append e*_j; the tilde version shifts the parameter by
// -1 for j > N/2 (split symplectic only).
ExtElement eta(const LieRealization::Ptr& r, Flavor f, int j, const UnivPoly& a);
ExtElement eta_dagger(const LieRealization::Ptr& r, int j, const UnivPoly& a);
ExtElement eta_tilde_dagger(const LieRealization::Ptr& r, int j, const UnivPoly& a);
ExtElement xi(const LieRealization::Ptr& r, Flavor f, const UnivPoly& a);
ExtElement xi_minus(const LieRealization::Ptr& r, const UnivPoly& a);
ExtElement xi_plus(const LieRealization::Ptr& r, const UnivPoly& a);
ExtElement tau(const LieRealization::Ptr& r, Flavor f);
ExtElement tau_minus(const LieRealization::Ptr& r);
ExtElement tau_plus(const LieRealization::Ptr& r);
ExtElement omega_elem(const LieRealization::Ptr& r);
ExtElement rho_elem(const LieRealization::Ptr& r);
ExtElement rho_star(const LieRealization::Ptr& r);
ExtElement theta_elem(const LieRealization::Ptr& r);
ExtElement theta_star(const LieRealization::Ptr& r);

// String dispatcher: "tau", "tau-", "tau+", "omega", "rho", "rho*", "Theta",
// "Theta*", "Xi", "Xi-", "Xi+", "eta:j", "eta+:j", "eta~:j".
ExtElement named_element(const std::string& name, const LieRealization::Ptr& r,
                         const UnivPoly& u);

// Rising factorial product f(u) f(u+step) ... f(u+(k-1)step).
ExtElement rising_product(const std::function<ExtElement(const UnivPoly&)>& f,
                          const UnivPoly& u, int k, const Rat& step = Rat(1));

// W_k(u)  = sum over weak alpha of (k!/alpha!) etatilde+_{a_1}(u) ... etatilde+_{a_k}(u+k-1)
// W'_k(u) = Xi(u) Xi(u+1) ... Xi(u+k-2) * Xi(u+k/2-1)
// V_k(u)  = sum_l C(k,l) Xi_-^{rising l}(u) Xi_+^{rising k-l}(u+l)
ExtElement weyl_W(const LieRealization::Ptr& r, int k, const UnivPoly& u);
ExtElement weyl_Wprime(const LieRealization::Ptr& r, int k, const UnivPoly& u);
ExtElement weyl_V(const LieRealization::Ptr& r, int k, const UnivPoly& u);

// Executable checks of the lemma suite.
struct LemmaOutcome {
  bool pass = true;
  std::string witness;   // first failing instance, when any
  uint64_t terms = 0;    // total terms inspected
};
struct LemmaCheck {
  std::string id;       // "eq2.3", "lem5.2", ...
  std::string summary;
  LemmaOutcome (*run)(uint64_t seed);
};
const std::vector<LemmaCheck>& lemma_registry();
const LemmaCheck* find_lemma(const std::string& id);

}  // namespace capelli
