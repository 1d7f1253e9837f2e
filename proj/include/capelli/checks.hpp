// Verification layer: check specifications, machine-readable reports, the
// element registry, the free-algebra reference multiplier, and the runner.
#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "capelli/elements.hpp"
#include "capelli/weyl.hpp"

namespace capelli {

enum class CheckKind { central, identity, eigenvalue, pfaffian, hafnian, lemma, oracle };

std::string to_string(CheckKind k);
CheckKind check_kind_from_string(const std::string& s);

struct CheckSpec {
  CheckKind kind = CheckKind::central;
  std::string algebra;            // "gl", "o-id", "o-split", "sp"
  int N = 0;
  int k = -1;                     // -1: not applicable / default
  std::vector<Rat> lambda;
  std::string element;            // "D.sp", "C.gl.k", ...
  std::string lemma;              // lemma id, or "all"
  std::string form_matrix_csv;    // optional general S / J
  uint64_t seed = 1;
  std::optional<Rat> u_value;     // numeric-u smoke mode
};

struct CheckReport {
  CheckSpec spec;
  std::string status;   // "pass" | "fail" | "skipped"
  std::string witness;  // empty unless fail
  int64_t elapsed_ms = 0;
  uint64_t terms = 0;
  std::string note;
};

// Individual checks. Each validates its spec and never throws on a plain
// verification failure; malformed specs raise std::invalid_argument.
CheckReport check_central(const CheckSpec& spec);
CheckReport check_identity(const CheckSpec& spec);
CheckReport check_eigenvalue(const CheckSpec& spec);
CheckReport check_pfaffian_identity(const CheckSpec& spec);
CheckReport check_hafnian_identity(const CheckSpec& spec);
CheckReport run_lemma(const CheckSpec& spec);
CheckReport check_oracle(const CheckSpec& spec);

CheckReport run_check(const CheckSpec& spec);
// Runs independent specs across worker threads; reports are returned in spec
// order regardless of scheduling.
std::vector<CheckReport> run_checks(const std::vector<CheckSpec>& specs, int jobs = 0);

std::string report_to_json(const CheckReport& r);
CheckReport report_from_json(const std::string& text);
std::string report_to_text(const CheckReport& r);
bool reports_equal(const CheckReport& a, const CheckReport& b);

// Element registry: builders, identity partners, eigenvalue formulas.
struct ElementFamily {
  std::string name;       // CLI name, e.g. "D.sp"
  AlgKind kind;
  bool needs_k;
  // Build over the realization for size N (element and identity partner).
  EnvElement (*build)(int N, int k, const UnivPoly& u);
  EnvElement (*partner)(int N, int k, const UnivPoly& u);  // may be null
  // Closed-form eigenvalue; null when the paper gives none for this family.
  UnivPoly (*eig)(int N, int k, const std::vector<Rat>& lambda, const UnivPoly& u);
  std::string identity_note;  // which equality the partner encodes
};
const std::vector<ElementFamily>& element_registry();
const ElementFamily* find_element(const std::string& name);

LieRealization::Ptr realization_for(AlgKind kind, int N, const std::string& form_csv = "");
AlgKind algebra_kind_from_string(const std::string& s);

// Free-algebra reference product: multiplies without assuming normal form and
// reduces by rewriting randomly chosen out-of-order adjacent pairs. Agrees
// with the PBW engine on every input; the reduction path is seed-dependent,
// the result is not.
EnvElement oracle_mul(const EnvElement& a, const EnvElement& b, std::mt19937_64& rng);

// Deterministic random element for the randomized suites.
EnvElement random_env_element(const LieRealization::Ptr& r, int max_degree, int max_terms,
                              std::mt19937_64& rng);
RatMatrix random_invertible_matrix(int n, std::mt19937_64& rng);

std::vector<Rat> parse_lambda(const std::string& csv);

}  // namespace capelli
