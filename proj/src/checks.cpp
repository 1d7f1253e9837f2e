#include "capelli/checks.hpp"

#include <json.hpp>

#include <atomic>
#include <chrono>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace capelli {

namespace {

using Clock = std::chrono::steady_clock;

UnivPoly u_of(const CheckSpec& spec) {
  return spec.u_value ? UnivPoly::constant(*spec.u_value) : UnivPoly::u();
}

int64_t ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

std::string stats_note() {
  EnvStats s = env_stats_snapshot();
  return "rewrites=" + std::to_string(s.rewrite_steps) +
         " lookups=" + std::to_string(s.bracket_lookups);
}

}  // namespace

std::string to_string(CheckKind k) {
  switch (k) {
    case CheckKind::central: return "central";
    case CheckKind::identity: return "identity";
    case CheckKind::eigenvalue: return "eigenvalue";
    case CheckKind::pfaffian: return "pfaffian";
    case CheckKind::hafnian: return "hafnian";
    case CheckKind::lemma: return "lemma";
    case CheckKind::oracle: return "oracle";
  }
  return "?";
}

CheckKind check_kind_from_string(const std::string& s) {
  if (s == "central") return CheckKind::central;
  if (s == "identity") return CheckKind::identity;
  if (s == "eigenvalue") return CheckKind::eigenvalue;
  if (s == "pfaffian") return CheckKind::pfaffian;
  if (s == "hafnian") return CheckKind::hafnian;
  if (s == "lemma") return CheckKind::lemma;
  if (s == "oracle") return CheckKind::oracle;
  throw std::invalid_argument("unknown check kind: " + s);
}

AlgKind algebra_kind_from_string(const std::string& s) {
  if (s == "gl") return AlgKind::gl;
  if (s == "o-id") return AlgKind::o_identity;
  if (s == "o-split") return AlgKind::o_split;
  if (s == "sp" || s == "sp-split") return AlgKind::sp_split;
  if (s == "o-general") return AlgKind::o_general;
  if (s == "sp-general") return AlgKind::sp_general;
  throw std::invalid_argument("unknown algebra: " + s);
}

LieRealization::Ptr realization_for(AlgKind kind, int N, const std::string& form_csv) {
  if (!form_csv.empty()) {
    RatMatrix B = RatMatrix::parse_csv(form_csv);
    if (kind == AlgKind::o_identity || kind == AlgKind::o_split || kind == AlgKind::o_general)
      return LieRealization::make_general(AlgKind::o_general, B);
    if (kind == AlgKind::sp_split || kind == AlgKind::sp_general)
      return LieRealization::make_general(AlgKind::sp_general, B);
    throw std::invalid_argument("form matrix not supported for gl");
  }
  switch (kind) {
    case AlgKind::gl: return LieRealization::make_gl(N);
    case AlgKind::o_identity: return LieRealization::make_o_identity(N);
    case AlgKind::o_split: return LieRealization::make_o_split(N);
    case AlgKind::sp_split: return LieRealization::make_sp_split(N);
    default:
      throw std::invalid_argument("general realizations require a form matrix");
  }
}

namespace {

UnivPoly eig_o_split_full_only(int N, int k, const std::vector<Rat>& lambda, const UnivPoly& u) {
  if (k != N)
    throw std::invalid_argument("o-split eigenvalue formula is available for k = N only");
  return eig_wachi_o_split(N, lambda, u);
}

EnvElement build_C_gl(int N, int, const UnivPoly& u) { return capelli_det_gl(N, u); }
EnvElement build_C_gl_sym(int N, int, const UnivPoly& u) { return capelli_det_gl_sym(N, u); }
UnivPoly eig_C_gl(int N, int, const std::vector<Rat>& l, const UnivPoly& u) {
  return eig_capelli_det_gl(N, l, u);
}
EnvElement build_C_o1(int N, int, const UnivPoly& u) { return howe_umeda_o(N, u); }
EnvElement build_C_o1_sym(int N, int, const UnivPoly& u) { return howe_umeda_o_sym(N, u); }
EnvElement build_C_oS0(int N, int, const UnivPoly& u) { return wachi_o_split(N, u); }
EnvElement build_C_oS0_sym(int N, int, const UnivPoly& u) { return wachi_o_split_sym(N, u); }
UnivPoly eig_C_oS0(int N, int, const std::vector<Rat>& l, const UnivPoly& u) {
  return eig_wachi_o_split(N, l, u);
}

const std::vector<ElementFamily> kElements = {
    {"C.gl", AlgKind::gl, false, build_C_gl, build_C_gl_sym, eig_C_gl,
     "column det form equals Det form"},
    {"C.gl.k", AlgKind::gl, true, capelli_minor_gl, capelli_minor_gl_sym,
     eig_capelli_minor_gl, "minor sum equals Det_k form"},
    {"D.gl.k", AlgKind::gl, true, nazarov_per_gl, nazarov_per_gl_sym, eig_nazarov_per_gl,
     "permanent minor sum equals Per_k form"},
    {"C'.gl.k", AlgKind::gl, true, capelli_minor_gl_sym, capelli_minor_gl,
     eig_capelli_minor_gl, "Det_k form equals minor sum"},
    {"D'.gl.k", AlgKind::gl, true, nazarov_per_gl_sym, nazarov_per_gl, eig_nazarov_per_gl,
     "Per_k form equals permanent minor sum"},
    {"C.o1", AlgKind::o_identity, false, build_C_o1, build_C_o1_sym, nullptr,
     "column det form equals Det form"},
    {"C.o1.k", AlgKind::o_identity, true, howe_umeda_o_minor, howe_umeda_o_minor_sym, nullptr,
     "minor sum equals Det_k form"},
    {"C.oS0", AlgKind::o_split, false, build_C_oS0, build_C_oS0_sym, eig_C_oS0,
     "column det form equals Det form"},
    {"C.oS0.k", AlgKind::o_split, true, wachi_o_split_minor, wachi_o_split_minor_sym,
     eig_o_split_full_only, "tilde minor sum equals Det_k form"},
    {"C'.oS0.k", AlgKind::o_split, true, wachi_o_split_minor_sym, wachi_o_split_minor,
     eig_o_split_full_only, "Det_k form equals tilde minor sum"},
    {"D.sp", AlgKind::sp_split, true, sp_split_per, sp_split_per_sym, eig_sp_split_per,
     "permanent form equals Per_k form"},
    {"D.sp.hat", AlgKind::sp_split, true, sp_split_per_hat, sp_split_per, eig_sp_split_per,
     "hat permanent form equals tilde permanent form"},
    {"D'.sp", AlgKind::sp_split, true, sp_split_per_sym, sp_split_per, eig_sp_split_per,
     "Per_k form equals permanent form"},
};

struct Built {
  LieRealization::Ptr realization;
  EnvElement element;
  const ElementFamily* family = nullptr;
};

Built build_element(const CheckSpec& spec) {
  Built b;
  if (spec.element.rfind("gen:", 0) == 0) {
    // Raw generator symbol, mainly to exercise failing central checks.
    auto comma = spec.element.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("gen: element needs indices, e.g. gen:1,2");
    int i = std::stoi(spec.element.substr(4, comma - 4));
    int j = std::stoi(spec.element.substr(comma + 1));
    if (spec.algebra.empty()) throw std::invalid_argument("gen: element needs --algebra");
    b.realization =
        realization_for(algebra_kind_from_string(spec.algebra), spec.N, spec.form_matrix_csv);
    b.element = EnvElement::generator(b.realization, GenPair{i, j});
    return b;
  }
  const ElementFamily* fam = find_element(spec.element);
  if (!fam) throw std::invalid_argument("unknown element: " + spec.element);
  if (fam->needs_k && spec.k < 0)
    throw std::invalid_argument("element " + spec.element + " needs --k");
  b.family = fam;
  b.realization = realization_for(fam->kind, spec.N);
  b.element = fam->build(spec.N, spec.k, u_of(spec));
  return b;
}

CheckReport start_report(const CheckSpec& spec) {
  CheckReport r;
  r.spec = spec;
  r.status = "pass";
  return r;
}

}  // namespace

const std::vector<ElementFamily>& element_registry() { return kElements; }

const ElementFamily* find_element(const std::string& name) {
  for (const auto& f : kElements)
    if (f.name == name) return &f;
  return nullptr;
}

CheckReport check_central(const CheckSpec& spec) {
  auto t0 = Clock::now();
  env_stats_reset();
  CheckReport rep = start_report(spec);
  Built b = build_element(spec);
  rep.terms = b.element.term_count();
  for (int g = 0; g < b.realization->dim(); ++g) {
    EnvElement x = EnvElement::generator(b.realization, g);
    EnvElement c = env_commutator(b.element, x);
    if (!c.is_zero()) {
      rep.status = "fail";
      GenPair p = b.realization->pair_of(g);
      rep.witness = "[e, " + std::string(1, b.realization->symbol()) + "[" +
                    std::to_string(p.i) + "," + std::to_string(p.j) +
                    "]] = " + c.first_term_string();
      break;
    }
  }
  rep.note = stats_note();
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

CheckReport check_identity(const CheckSpec& spec) {
  auto t0 = Clock::now();
  env_stats_reset();
  CheckReport rep = start_report(spec);
  const ElementFamily* fam = find_element(spec.element);
  if (!fam) throw std::invalid_argument("unknown element: " + spec.element);
  if (!fam->partner) throw std::invalid_argument("element has no identity partner");
  if (fam->needs_k && spec.k < 0)
    throw std::invalid_argument("element " + spec.element + " needs --k");
  UnivPoly u = u_of(spec);
  EnvElement lhs = fam->build(spec.N, spec.k, u);
  EnvElement rhs = fam->partner(spec.N, spec.k, u);
  rep.terms = lhs.term_count() + rhs.term_count();
  EnvElement diff = lhs - rhs;
  if (!diff.is_zero()) {
    rep.status = "fail";
    rep.witness = diff.first_term_string();
  }
  rep.note = fam->identity_note + "; " + stats_note();
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

CheckReport check_eigenvalue(const CheckSpec& spec) {
  auto t0 = Clock::now();
  env_stats_reset();
  CheckReport rep = start_report(spec);
  const ElementFamily* fam = find_element(spec.element);
  if (!fam) throw std::invalid_argument("unknown element: " + spec.element);
  if (fam->needs_k && spec.k < 0)
    throw std::invalid_argument("element " + spec.element + " needs --k");
  LieRealization::Ptr r = realization_for(fam->kind, spec.N);
  if (!r->graded() || !fam->eig) {
    rep.status = "skipped";
    rep.note = "no eigenvalue formula for this realization";
    rep.elapsed_ms = ms_since(t0);
    return rep;
  }
  UnivPoly u = u_of(spec);
  EnvElement e = fam->build(spec.N, spec.k, u);
  rep.terms = e.term_count();
  // The projection recipe computes an eigenvalue only for central elements;
  // flag the report otherwise.
  bool central = true;
  for (int g = 0; g < r->dim() && central; ++g)
    central = env_commutator(e, EnvElement::generator(r, g)).is_zero();
  Weight w = weight_from_partition(r, spec.lambda);
  UnivPoly engine = eigenvalue(e, w);
  UnivPoly formula = fam->eig(spec.N, spec.k, spec.lambda, u);
  if (engine != formula) {
    rep.status = "fail";
    rep.witness = "engine " + engine.to_string() + " vs formula " + formula.to_string();
  }
  rep.note = central ? stats_note() : "projection value, not an eigenvalue; " + stats_note();
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

namespace {

CheckReport matching_identity(const CheckSpec& spec, bool pfaffian_side) {
  auto t0 = Clock::now();
  env_stats_reset();
  CheckReport rep = start_report(spec);
  const int two_k = 2 * (spec.k < 0 ? 1 : spec.k);
  AlgKind kind = algebra_kind_from_string(
      spec.algebra.empty() ? (pfaffian_side ? "o-split" : "sp") : spec.algebra);
  LieRealization::Ptr r = realization_for(kind, spec.N, spec.form_matrix_csv);
  if (pfaffian_side) {
    if (r->kind() != AlgKind::o_identity && r->kind() != AlgKind::o_split &&
        r->kind() != AlgKind::o_general)
      throw std::invalid_argument("pfaffian check needs an orthogonal realization");
  } else {
    if (r->kind() != AlgKind::sp_split && r->kind() != AlgKind::sp_general)
      throw std::invalid_argument("hafnian check needs a symplectic realization");
  }
  const RatMatrix& B = *r->form();
  NCMatrix F = NCMatrix::generator_matrix(r);
  ShiftSeq params = shift_seq_constants(tilde_natural_seq(two_k));
  EnvElement lhs = pfaffian_side ? det_k(F, two_k, params) : per_k(F, two_k, params);

  NCMatrix FB = F * B;
  NCMatrix BinvF = B.inverse() * F;
  ShiftSeq none(static_cast<size_t>(two_k));
  EnvElement rhs = EnvElement::zero(r);
  const auto seqs = pfaffian_side ? strict_index_sequences(r->N(), two_k)
                                  : weak_index_sequences(r->N(), two_k);
  for (const auto& alpha : seqs) {
    EnvElement left = pfaffian_side ? pfaffian(subblock_with_shifts(FB, alpha, alpha, none))
                                    : hafnian(subblock_with_shifts(FB, alpha, alpha, none));
    EnvElement right = pfaffian_side
                           ? pfaffian(subblock_with_shifts(BinvF, alpha, alpha, none))
                           : hafnian(subblock_with_shifts(BinvF, alpha, alpha, none));
    EnvElement prod = left * right;
    rhs += pfaffian_side ? prod : prod.scaled(multiplicity_factorial(alpha).inverse());
  }
  rep.terms = lhs.term_count() + rhs.term_count();
  EnvElement diff = lhs - rhs;
  if (!diff.is_zero()) {
    rep.status = "fail";
    rep.witness = diff.first_term_string();
  }
  rep.note = stats_note();
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

}  // namespace

CheckReport check_pfaffian_identity(const CheckSpec& spec) {
  return matching_identity(spec, true);
}

CheckReport check_hafnian_identity(const CheckSpec& spec) {
  return matching_identity(spec, false);
}

CheckReport run_lemma(const CheckSpec& spec) {
  auto t0 = Clock::now();
  env_stats_reset();
  CheckReport rep = start_report(spec);
  std::vector<const LemmaCheck*> todo;
  if (spec.lemma == "all") {
    for (const auto& l : lemma_registry()) todo.push_back(&l);
  } else {
    const LemmaCheck* l = find_lemma(spec.lemma);
    if (!l) throw std::invalid_argument("unknown lemma id: " + spec.lemma);
    todo.push_back(l);
  }
  for (const LemmaCheck* l : todo) {
    LemmaOutcome o = l->run(spec.seed);
    rep.terms += o.terms;
    if (!o.pass) {
      rep.status = "fail";
      rep.witness = l->id + " " + o.witness;
      break;
    }
  }
  rep.note = stats_note();
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

EnvElement oracle_mul(const EnvElement& a, const EnvElement& b, std::mt19937_64& rng) {
  if (a.realization().get() != b.realization().get())
    throw std::invalid_argument("oracle_mul: realization mismatch");
  const LieRealization& R = *a.realization();
  using Word = std::vector<uint16_t>;
  std::map<Word, UnivPoly> cur;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      Word w = ma;
      w.insert(w.end(), mb.begin(), mb.end());
      UnivPoly& slot = cur[w];
      slot += ca * cb;
      if (slot.is_zero()) cur.erase(w);
    }
  // Reduce by rewriting a randomly chosen out-of-order adjacent pair of a
  // randomly chosen term until every word is sorted.
  while (true) {
    std::vector<std::pair<Word, std::vector<size_t>>> candidates;
    for (const auto& [w, c] : cur) {
      std::vector<size_t> sites;
      for (size_t t = 0; t + 1 < w.size(); ++t)
        if (w[t] > w[t + 1]) sites.push_back(t);
      if (!sites.empty()) candidates.emplace_back(w, std::move(sites));
    }
    if (candidates.empty()) break;
    std::uniform_int_distribution<size_t> pick(0, candidates.size() - 1);
    const auto& [word, sites] = candidates[pick(rng)];
    std::uniform_int_distribution<size_t> site_pick(0, sites.size() - 1);
    size_t t = sites[site_pick(rng)];
    UnivPoly coeff = cur[word];
    cur.erase(word);
    auto deposit = [&cur](Word w, const UnivPoly& c) {
      if (c.is_zero()) return;
      UnivPoly& slot = cur[w];
      slot += c;
      if (slot.is_zero()) cur.erase(w);
    };
    Word swapped = word;
    std::swap(swapped[t], swapped[t + 1]);
    deposit(std::move(swapped), coeff);
    for (const auto& term : R.bracket(word[t], word[t + 1])) {
      Word shorter(word.begin(), word.begin() + t);
      shorter.push_back(term.gen);
      shorter.insert(shorter.end(), word.begin() + t + 2, word.end());
      deposit(std::move(shorter), coeff.scaled(term.coeff));
    }
  }
  EnvElement out = EnvElement::zero(a.realization());
  for (const auto& [w, c] : cur) out.add_word(w, c);
  return out;
}

EnvElement random_env_element(const LieRealization::Ptr& r, int max_degree, int max_terms,
                              std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> gen(0, r->dim() - 1);
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 3);
  std::uniform_int_distribution<int> upow(0, 1);
  EnvElement e = EnvElement::zero(r);
  int terms = nterms(rng);
  for (int t = 0; t < terms; ++t) {
    std::vector<uint16_t> w;
    int d = deg(rng);
    for (int s = 0; s < d; ++s) w.push_back(static_cast<uint16_t>(gen(rng)));
    Rat c(num(rng), den(rng));
    if (c.is_zero()) c = Rat(1);
    UnivPoly coeff = UnivPoly::monomial(upow(rng), c);
    e.add_word(w, coeff);
  }
  return e;
}

RatMatrix random_invertible_matrix(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> entry(-3, 3);
  while (true) {
    RatMatrix g(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g.at(i, j) = Rat(entry(rng));
    try {
      g.inverse();
      return g;
    } catch (const std::domain_error&) {
    }
  }
}

CheckReport check_oracle(const CheckSpec& spec) {
  auto t0 = Clock::now();
  env_stats_reset();
  CheckReport rep = start_report(spec);
  if (spec.algebra.empty()) throw std::invalid_argument("oracle check needs --algebra");
  LieRealization::Ptr r =
      realization_for(algebra_kind_from_string(spec.algebra), spec.N, spec.form_matrix_csv);
  const int count = spec.k > 0 ? spec.k : 200;
  std::mt19937_64 rng(spec.seed);
  for (int t = 0; t < count; ++t) {
    EnvElement a = random_env_element(r, 4, 3, rng);
    EnvElement b = random_env_element(r, 4, 3, rng);
    EnvElement fast = a * b;
    EnvElement slow = oracle_mul(a, b, rng);
    rep.terms += fast.term_count();
    if (fast != slow) {
      rep.status = "fail";
      rep.witness = "trial " + std::to_string(t) + ": " + (fast - slow).first_term_string();
      break;
    }
  }
  rep.note = stats_note();
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

CheckReport run_check(const CheckSpec& spec) {
  switch (spec.kind) {
    case CheckKind::central: return check_central(spec);
    case CheckKind::identity: return check_identity(spec);
    case CheckKind::eigenvalue: return check_eigenvalue(spec);
    case CheckKind::pfaffian: return check_pfaffian_identity(spec);
    case CheckKind::hafnian: return check_hafnian_identity(spec);
    case CheckKind::lemma: return run_lemma(spec);
    case CheckKind::oracle: return check_oracle(spec);
  }
  throw std::invalid_argument("unknown check kind");
}

std::vector<CheckReport> run_checks(const std::vector<CheckSpec>& specs, int jobs) {
  std::vector<CheckReport> out(specs.size());
  if (specs.empty()) return out;
  unsigned hw = std::thread::hardware_concurrency();
  size_t workers = jobs > 0 ? static_cast<size_t>(jobs)
                            : std::min<size_t>(specs.size(), hw ? hw : 1);
  std::atomic<size_t> next{0};
  auto work = [&] {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= specs.size()) return;
      try {
        out[i] = run_check(specs[i]);
      } catch (const std::exception& ex) {
        out[i].spec = specs[i];
        out[i].status = "fail";
        out[i].witness = std::string("error: ") + ex.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (size_t t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  return out;
}

std::string report_to_json(const CheckReport& r) {
  nlohmann::json j;
  j["check"] = to_string(r.spec.kind);
  j["algebra"] = r.spec.algebra;
  j["N"] = r.spec.N;
  j["k"] = r.spec.k;
  j["status"] = r.status;
  j["witness"] = r.witness.empty() ? nlohmann::json() : nlohmann::json(r.witness);
  j["elapsed_ms"] = r.elapsed_ms;
  j["terms"] = r.terms;
  if (!r.spec.element.empty()) j["element"] = r.spec.element;
  if (!r.spec.lemma.empty()) j["lemma"] = r.spec.lemma;
  if (!r.spec.lambda.empty()) {
    std::string l;
    for (size_t t = 0; t < r.spec.lambda.size(); ++t) {
      if (t) l += ",";
      l += r.spec.lambda[t].to_string();
    }
    j["lambda"] = l;
  }
  j["seed"] = r.spec.seed;
  if (!r.note.empty()) j["note"] = r.note;
  return j.dump();
}

CheckReport report_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  CheckReport r;
  r.spec.kind = check_kind_from_string(j.at("check").get<std::string>());
  r.spec.algebra = j.at("algebra").get<std::string>();
  r.spec.N = j.at("N").get<int>();
  r.spec.k = j.at("k").get<int>();
  r.status = j.at("status").get<std::string>();
  r.witness = j.at("witness").is_null() ? "" : j.at("witness").get<std::string>();
  r.elapsed_ms = j.at("elapsed_ms").get<int64_t>();
  r.terms = j.at("terms").get<uint64_t>();
  if (j.contains("element")) r.spec.element = j["element"].get<std::string>();
  if (j.contains("lemma")) r.spec.lemma = j["lemma"].get<std::string>();
  if (j.contains("lambda")) r.spec.lambda = parse_lambda(j["lambda"].get<std::string>());
  if (j.contains("seed")) r.spec.seed = j["seed"].get<uint64_t>();
  if (j.contains("note")) r.note = j["note"].get<std::string>();
  return r;
}

bool reports_equal(const CheckReport& a, const CheckReport& b) {
  return a.spec.kind == b.spec.kind && a.spec.algebra == b.spec.algebra &&
         a.spec.N == b.spec.N && a.spec.k == b.spec.k && a.spec.element == b.spec.element &&
         a.spec.lemma == b.spec.lemma && a.spec.seed == b.spec.seed && a.status == b.status &&
         a.witness == b.witness && a.elapsed_ms == b.elapsed_ms && a.terms == b.terms &&
         a.note == b.note;
}

std::string report_to_text(const CheckReport& r) {
  std::ostringstream os;
  os << "[" << (r.status == "pass" ? "PASS" : r.status == "skipped" ? "SKIP" : "FAIL") << "] "
     << to_string(r.spec.kind);
  if (!r.spec.element.empty()) os << " " << r.spec.element;
  if (!r.spec.lemma.empty()) os << " " << r.spec.lemma;
  if (!r.spec.algebra.empty()) os << " algebra=" << r.spec.algebra;
  if (r.spec.N > 0) os << " N=" << r.spec.N;
  if (r.spec.k >= 0) os << " k=" << r.spec.k;
  if (!r.spec.lambda.empty()) {
    os << " lambda=";
    for (size_t t = 0; t < r.spec.lambda.size(); ++t)
      os << (t ? "," : "") << r.spec.lambda[t].to_string();
  }
  os << " terms=" << r.terms << " elapsed_ms=" << r.elapsed_ms;
  if (!r.witness.empty()) os << "\n  witness: " << r.witness;
  if (!r.note.empty()) os << "\n  note: " << r.note;
  return os.str();
}

std::vector<Rat> parse_lambda(const std::string& csv) {
  std::vector<Rat> out;
  if (csv.empty()) return out;
  std::stringstream ss(csv);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(Rat::from_string(cell));
  return out;
}

}  // namespace capelli
