// Command-line verifier for the Capelli-type central element constructions.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "capelli/checks.hpp"

using namespace capelli;

int main(int argc, char** argv) {
  CLI::App app{"capelli - exact verification of Capelli-type central elements"};
  app.require_subcommand(1);

  CLI::App* verify = app.add_subcommand("verify", "run one verification check");
  std::string check_name, algebra, lambda_csv, element, lemma, form_file, format = "text";
  std::string u_rational;
  int N = 0, k = -1, jobs = 1;
  uint64_t seed = 1;
  verify->add_option("--check", check_name,
                     "central|identity|eigenvalue|pfaffian|hafnian|lemma|oracle")
      ->required();
  verify->add_option("--algebra", algebra, "gl|o-id|o-split|sp");
  verify->add_option("--N", N, "matrix size");
  verify->add_option("--k", k, "minor degree (pfaffian/hafnian: half the block size)");
  verify->add_option("--lambda", lambda_csv, "partition, e.g. 2,1,0");
  verify->add_option("--element", element, "element name, e.g. D.sp or C.gl.k");
  verify->add_option("--lemma", lemma, "lemma id (eq2.1..eq2.9, lem2.1, lem5.1..lem5.12, eq5.6) or 'all'");
  verify->add_option("--form-matrix", form_file, "CSV file with a general S or J form");
  verify->add_option("--seed", seed, "seed for randomized suites");
  verify->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--u-rational", u_rational, "replace the symbolic u by a rational");
  verify->add_option("--jobs", jobs, "worker threads");

  CLI::App* list = app.add_subcommand("list", "list element names and lemma ids");

  CLI11_PARSE(app, argc, argv);

  if (list->parsed()) {
    std::cout << "elements:\n";
    for (const auto& f : element_registry())
      std::cout << "  " << f.name << "  (" << to_string(f.kind)
                << (f.needs_k ? ", needs --k" : "") << ")\n";
    std::cout << "lemmas:\n";
    for (const auto& l : lemma_registry())
      std::cout << "  " << l.id << "  " << l.summary << "\n";
    return 0;
  }

  try {
    CheckSpec spec;
    spec.kind = check_kind_from_string(check_name);
    spec.algebra = algebra;
    spec.N = N;
    spec.k = k;
    spec.element = element;
    spec.lemma = lemma;
    spec.seed = seed;
    if (!lambda_csv.empty()) spec.lambda = parse_lambda(lambda_csv);
    if (!u_rational.empty()) spec.u_value = Rat::from_string(u_rational);
    if (!form_file.empty()) {
      std::ifstream in(form_file);
      if (!in) throw std::invalid_argument("cannot open form matrix file: " + form_file);
      std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
      while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
      // File rows may be newline separated.
      for (auto& c : text)
        if (c == '\n') c = ';';
      spec.form_matrix_csv = text;
    }
    // Desk-scale guard: the symmetrized sums grow like C(N+k-1,k) (k!)^2.
    if (spec.k > 0 && spec.N > 0) {
      double est = 1.0;
      for (int t = 1; t <= spec.k; ++t) est *= double(spec.N + t - 1) / t * t * t;
      est *= double(spec.N) * spec.N;
      if (est > 1e7)
        std::cerr << "warning: N=" << spec.N << " k=" << spec.k
                  << " may generate more than 10^7 terms; expect a long run\n";
    }
    std::vector<CheckReport> reports = run_checks({spec}, jobs);
    bool all_pass = true;
    for (const auto& r : reports) {
      std::cout << (format == "json" ? report_to_json(r) : report_to_text(r)) << "\n";
      if (r.status == "fail") all_pass = false;
    }
    return all_pass ? 0 : 1;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
}
