#include "specpencil/cli.hpp"

#include "specpencil/construct.hpp"
#include "specpencil/search.hpp"
#include "specpencil/serialize.hpp"
#include "specpencil/spectra.hpp"

#include "CLI11.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

namespace specpencil::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OutputOptions {
  std::string format = "text";
  std::string out_path;
  bool no_timing = false;
};

const char* yes_no(bool b) { return b ? "yes" : "no"; }
const char* pass_fail(bool b) { return b ? "PASS" : "FAIL"; }

std::string str(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

unsigned parse_unsigned(std::string_view text, const std::string& what) {
  unsigned v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw UsageError(what + ": expected a non-negative integer, got \"" + std::string(text) + "\"");
  return v;
}

unsigned resolve_workers(const std::optional<unsigned>& flag) {
  if (flag) {
    if (*flag == 0) throw UsageError("--workers must be at least 1");
    return *flag;
  }
  if (const char* env = std::getenv("SPECPENCIL_WORKERS"); env && *env) {
    const unsigned v = parse_unsigned(env, "SPECPENCIL_WORKERS");
    if (v == 0) throw UsageError("SPECPENCIL_WORKERS must be at least 1");
    return v;
  }
  return 1;
}

// "zetaM^k"
CycNumber parse_root_label(std::string_view text) {
  const std::string_view prefix = "zeta";
  const auto caret = text.find('^');
  if (text.substr(0, prefix.size()) != prefix || caret == std::string_view::npos)
    throw UsageError("expected a root of unity written zetaM^k, got \"" + std::string(text) + "\"");
  const unsigned m = parse_unsigned(text.substr(prefix.size(), caret - prefix.size()), "conductor");
  const unsigned k = parse_unsigned(text.substr(caret + 1), "exponent");
  if (m == 0 || m > 1024) throw UsageError("conductor must be in 1..1024");
  return root_of_unity(m, static_cast<long>(k));
}

// "conductor:M" or a comma list of zetaM^k
std::vector<CycNumber> parse_samples(const std::string& text) {
  std::vector<CycNumber> out;
  const std::string key = "conductor:";
  if (text.rfind(key, 0) == 0) {
    const unsigned m = parse_unsigned(std::string_view(text).substr(key.size()), "--samples");
    if (m == 0 || m > 240) throw UsageError("--samples conductor must be in 1..240");
    for (auto& [value, label] : roots_of_unity_samples(m)) out.push_back(value);
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_root_label(item));
  if (out.empty()) throw UsageError("--samples is empty");
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

CycMatrix read_constant_matrix(const std::string& path) { return parse_constant_matrix(read_file(path), path); }

CycMatrix read_square_matrix(const std::string& path) {
  CycMatrix m = read_constant_matrix(path);
  if (!m.is_square())
    throw InputError(path + ": at /rows: matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                     ", expected a square matrix");
  return m;
}

// Writes the JSON report to --out (opened before any computation) and the
// chosen rendering to stdout.
class Reporter {
 public:
  Reporter(const OutputOptions& opts, std::ostream& out) : opts_(opts), out_(out) {
    if (opts_.format != "text" && opts_.format != "json") throw UsageError("--format must be text or json");
    if (!opts_.out_path.empty()) {
      file_.open(opts_.out_path, std::ios::binary | std::ios::trunc);
      if (!file_) throw InputError(opts_.out_path + ": cannot open for writing");
    }
  }

  bool timing() const { return !opts_.no_timing; }

  void emit(const Json& report, const std::function<void(const Json&, std::ostream&)>& render) {
    if (file_.is_open()) {
      file_ << dump_pretty(report);
      file_.flush();
      if (!file_) throw InputError(opts_.out_path + ": write failed");
    }
    if (opts_.format == "json")
      out_ << dump_pretty(report);
    else
      render(report, out_);
  }

 private:
  const OutputOptions& opts_;
  std::ostream& out_;
  std::ofstream file_;
};

void render_checks(const Json& checks, std::ostream& os) {
  for (const auto& c : checks) os << pass_fail(c["passed"].get<bool>()) << "  " << str(c["name"]) << "\n";
}

void render_spectrum(const Json& j, std::ostream& os) {
  os << "conductor " << j["conductor"] << "\n";
  os << "tuple: " << str(j["description"]) << "\n";
  os << "target: " << str(j["target"]["text"]) << "\n";
  os << "computed: " << str(j["computed"]["text"]) << "\n";
  os << "proportional: " << yes_no(j["proportional"].get<bool>());
  if (!j["ratio_text"].is_null()) {
    const std::string r = str(j["ratio_text"]);
    const bool wrap = r.find(' ') != std::string::npos;
    os << " (computed = " << (wrap ? "(" + r + ")" : r) << " * target)";
  }
  os << "\n";
  os << "total degree equals n: " << yes_no(j["degree_matches"].get<bool>()) << "\n";
  if (j["passed"].get<bool>()) os << "matched surface: " << str(j["target"]["text"]) << "\n";
  os << "result: " << pass_fail(j["passed"].get<bool>()) << "\n";
}

void render_relations(const Json& j, std::ostream& os) {
  os << "n = " << j["n"] << ", B = b_hat(n)\n";
  render_checks(j["checks"], os);
  os << "result: " << pass_fail(j["all_passed"].get<bool>()) << "\n";
}

void render_remark27(const Json& j, std::ostream& os) {
  os << "conductor " << j["conductor"] << "\n";
  render_checks(j["relations"], os);
  os << "spectrum (A, b_hat(3)): " << str(j["spectrum_b_hat"]["text"]) << "\n";
  os << "spectrum (A, b_hat_hat(3)): " << str(j["spectrum_b_hat_hat"]["text"]) << "\n";
  os << "both proportional to " << str(j["target"]) << ": " << yes_no(j["spectra_match_target"].get<bool>()) << "\n";
  os << "diagonal unitary conjugation found: " << yes_no(j["diagonal_conjugation_found"].get<bool>()) << "\n";
  os << "scope: " << str(j["inequivalence_scope"]) << "\n";
  os << "result: " << pass_fail(j["passed"].get<bool>()) << "\n";
}

void render_lemma41(const Json& j, std::ostream& os) {
  std::size_t total = 0, verified = 0, recipe = 0, spectrum = 0, monomial = 0;
  for (const auto& c : j["cases"]) {
    ++total;
    verified += c["verified"].get<bool>();
    recipe += c["recipe_witness"].get<bool>();
    spectrum += c["spectrum_fourier"].get<bool>();
    monomial += c["monomial_structure"].get<bool>();
  }
  os << "conductor " << j["conductor"] << "\n";
  os << "n = " << j["n"] << ", cases: " << total << "\n";
  os << "witness verified: " << verified << "/" << total << " (from the affine recipe: " << recipe << ")\n";
  os << "one equal root of unity per row and column: " << monomial << "/" << total << "\n";
  os << "spectrum is the Fourier surface: " << spectrum << "/" << total << "\n";
  for (const auto& c : j["cases"]) {
    if (c["verified"].get<bool>() && c["spectrum_fourier"].get<bool>() && c["monomial_structure"].get<bool>()) continue;
    os << "FAIL  kind " << str(c["kind"]) << " p1 " << c["p1"].dump() << " p2 " << c["p2"].dump() << "\n";
  }
  os << "result: " << pass_fail(j["all_passed"].get<bool>()) << "\n";
}

void render_classification(const Json& j, std::ostream& os) {
  os << "n = " << j["n"] << "\n";
  os << "pairs scanned: " << j["pairs_scanned"] << " of " << j["pairs_total"] << "\n";
  os << "pairs with the Fourier spectrum: " << j["fourier_count"] << "\n";
  os << "pairs with P1 or P2 affine: " << j["predicted_count"] << "\n";
  os << "sets equal: " << yes_no(j["match"].get<bool>()) << "\n";
  if (j.contains("elapsed_ms")) os << "elapsed: " << j["elapsed_ms"] << " ms\n";
  if (!j["complete"].get<bool>()) os << "note: scan stopped early, report covers the scanned prefix\n";
  os << "result: " << pass_fail(j["match"].get<bool>()) << "\n";
}

void render_h4(const Json& j, std::ostream& os) {
  os << "conductor " << j["conductor"] << "\n";
  os << "criterion: " << str(j["criterion"]) << "\n";
  for (const auto& s : j["samples"]) {
    os << str(s["label"]) << "  t = " << str(s["t_text"]) << "  vanishing " << s["vanishing_pairs"] << "/"
       << s["pairs"] << "  expected some: " << yes_no(s["expected_vanishing"].get<bool>());
    if (s["vanishing_pairs"].get<std::size_t>() > 0)
      os << "  vanishing set is the affine pairs: " << yes_no(s["vanishing_equals_affine"].get<bool>());
    if (!s["first_nonzero"].is_null())
      os << "  first nonzero at " << s["first_nonzero"].dump() << ": " << str(s["first_nonzero_coefficient"]);
    os << "\n";
  }
  os << "H(-i) similar to F_4: " << yes_no(j["minus_i_similar_to_f4"].get<bool>()) << "\n";
  if (j.contains("elapsed_ms")) os << "elapsed: " << j["elapsed_ms"] << " ms\n";
  if (!j["complete"].get<bool>()) os << "note: scan stopped early, report covers the scanned prefix\n";
  os << "result: " << pass_fail(j["consistent"].get<bool>() && j["minus_i_similar_to_f4"].get<bool>()) << "\n";
}

void render_hadamard_check(const Json& j, std::ostream& os) {
  os << "file: " << str(j["file"]) << " (" << j["n"] << "x" << j["n"] << ")\n";
  os << "complex Hadamard: " << yes_no(j["hadamard"].get<bool>());
  if (!j["hadamard"].get<bool>()) os << " (" << str(j["witness"]) << ")";
  os << "\n";
  if (!j["transition"].is_null()) {
    os << "B-eigenvectors are the columns of h^*: " << yes_no(j["transition"]["eigen_verified"].get<bool>()) << "\n";
    os << "sqrt(n) * transition matrix is complex Hadamard: " << yes_no(j["transition"]["hadamard"].get<bool>())
       << "\n";
  }
  os << "result: " << pass_fail(j["passed"].get<bool>()) << "\n";
}

void render_similar(const Json& j, std::ostream& os) {
  os << "conductor " << j["conductor"] << "\n";
  os << "similar: " << yes_no(j["similar"].get<bool>()) << "\n";
  if (!j["witness"].is_null()) {
    const Json& w = j["witness"];
    os << "h2 = L1 P1 h1 P2 L2 with\n";
    os << "  P1 = " << w["p1"].dump() << "\n  P2 = " << w["p2"].dump() << "\n";
    auto diag = [&](const char* name, const Json& values) {
      os << "  " << name << " = diag(";
      for (std::size_t i = 0; i < values.size(); ++i) os << (i ? ", " : "") << str(values[i]);
      os << ")\n";
    };
    diag("L1", w["lambda1"]);
    diag("L2", w["lambda2"]);
  }
}

void render_spectrum_command(const Json& j, std::ostream& os) {
  os << "conductor " << j["conductor"] << "\n";
  os << "det(";
  const Json& vars = j["polynomial"]["vars"];
  for (std::size_t i = 0; i < vars.size(); ++i) os << (i ? " + " : "") << str(vars[i]) << "*M" << i + 1;
  os << " - I) = " << str(j["polynomial"]["text"]) << "\n";
}

Json lambda_texts(const std::vector<CycNumber>& values, unsigned c) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_string(v, c));
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const std::atomic<bool>* cancel) {
  CLI::App app{"Exact joint spectra of matrix pencils built from Fourier and complex Hadamard matrices",
               "specpencil"};
  app.require_subcommand(1);
  std::function<int()> action;

  OutputOptions output;
  auto add_output = [&](CLI::App* cmd, bool timing = false) {
    cmd->add_option("--format", output.format, "Output format on stdout")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", output.out_path, "Also write the JSON report to this file");
    if (timing) cmd->add_flag("--no-timing", output.no_timing, "Omit elapsed_ms so reports compare byte for byte");
  };

  unsigned n = 0;
  std::optional<unsigned> workers;
  bool fail_fast = false, four_var = false;
  std::size_t partners = 3;
  std::uint64_t seed = 20240601;
  std::string samples = "conductor:24", vars_text, emit_kind, t_text, p1_text, p2_text;
  std::vector<std::string> files;

  // verify
  CLI::App* verify = app.add_subcommand("verify", "Exact verification runs");
  verify->require_subcommand(1);

  CLI::App* fourier = verify->add_subcommand("fourier", "Joint spectrum of the Fourier pair vs. the Fourier surface");
  fourier->add_option("--n", n, "Matrix size")->required()->check(CLI::Range(2, 9));
  fourier->add_flag("--four-var", four_var, "Use (A, B, AB, BA) and the 4-variable surface");
  add_output(fourier);
  fourier->callback([&] {
    action = [&] {
      Reporter rep(output, out);
      const auto kind = four_var ? SurfaceKind::four_var : SurfaceKind::three_var;
      const Json j = spectrum_report_json(fourier_pair_spectrum(n, kind), n);
      rep.emit(j, render_spectrum);
      return j["passed"].get<bool>() ? kExitOk : kExitCheckFailed;
    };
  });

  CLI::App* relations = verify->add_subcommand("relations", "Moment and resolvent identities for B = b_hat(n)");
  relations->add_option("--n", n, "Matrix size")->required()->check(CLI::Range(2, 12));
  add_output(relations);
  relations->callback([&] {
    action = [&] {
      Reporter rep(output, out);
      const Json j = relation_report_json(verify_moment_relations(b_hat(n), n));
      rep.emit(j, render_relations);
      return j["all_passed"].get<bool>() ? kExitOk : kExitCheckFailed;
    };
  });

  CLI::App* remark = verify->add_subcommand("remark27", "Two order-3 pairs with equal spectra, not diagonally equivalent");
  add_output(remark);
  remark->callback([&] {
    action = [&] {
      Reporter rep(output, out);
      const Json j = counterexample_report_json(verify_counterexample_27());
      rep.emit(j, render_remark27);
      return j["passed"].get<bool>() ? kExitOk : kExitCheckFailed;
    };
  });

  CLI::App* lemma = verify->add_subcommand("lemma41", "Equivalence witnesses when P1 or P2 is affine");
  lemma->add_option("--n", n, "Matrix size")->check(CLI::Range(2, 6))->default_val(5);
  lemma->add_option("--partners", partners, "Random partners per affine permutation")->default_val(3);
  lemma->add_option("--seed", seed, "Seed for the random partners")->default_val(20240601);
  add_output(lemma);
  lemma->callback([&] {
    action = [&] {
      Reporter rep(output, out);
      const Json j = lemma41_report_json(verify_lemma_4_1_equivalences(n, partners, seed));
      rep.emit(j, render_lemma41);
      return j["all_passed"].get<bool>() ? kExitOk : kExitCheckFailed;
    };
  });

  // classify
  CLI::App* classify = app.add_subcommand("classify", "Scan all permutation pairs (P1, P2) of P1 F_n P2");
  classify->add_option("--n", n, "4 or 5")->required()->check(CLI::Range(4, 5));
  classify->add_option("--workers", workers, "Worker threads (default: SPECPENCIL_WORKERS or 1)");
  classify->add_flag("--fail-fast", fail_fast, "Stop at the first pair contradicting the prediction");
  add_output(classify, true);
  classify->callback([&] {
    action = [&] {
      ScanOptions opts{resolve_workers(workers), fail_fast, cancel};
      Reporter rep(output, out);
      const auto report = classify_permutation_pairs(n, opts);
      if (!report.complete) err << "specpencil: scan stopped after " << report.pairs_scanned << " pairs\n";
      rep.emit(classification_report_json(report, rep.timing()), render_classification);
      return report.match ? kExitOk : kExitCheckFailed;
    };
  });

  // scan-h4
  CLI::App* scan = app.add_subcommand("scan-h4", "z^2 coefficient scan over the 4x4 Hadamard family H(t)");
  scan->add_option("--samples", samples, "conductor:M for all M-th roots, or a list zetaM^k,...")
      ->capture_default_str();
  scan->add_option("--workers", workers, "Worker threads (default: SPECPENCIL_WORKERS or 1)");
  add_output(scan, true);
  scan->callback([&] {
    action = [&] {
      const auto ts = parse_samples(samples);
      ScanOptions opts{resolve_workers(workers), false, cancel};
      Reporter rep(output, out);
      const auto report = scan_h4_family(ts, opts);
      if (!report.complete) err << "specpencil: scan stopped early\n";
      rep.emit(h4_report_json(report, rep.timing()), render_h4);
      return report.consistent && report.minus_i_similar_to_f4 ? kExitOk : kExitCheckFailed;
    };
  });

  // hadamard
  CLI::App* hadamard = app.add_subcommand("hadamard", "Complex Hadamard checks on matrix files");
  hadamard->require_subcommand(1);
  CLI::App* hcheck = hadamard->add_subcommand("check", "Is the matrix complex Hadamard?");
  hcheck->add_option("file", files, "Matrix JSON file")->required()->expected(1);
  add_output(hcheck);
  hcheck->callback([&] {
    action = [&] {
      const CycMatrix h = read_square_matrix(files.at(0));
      Reporter rep(output, out);
      const HadamardCheck hc = check_complex_hadamard(h);
      Json j = {{"file", files.at(0)}, {"n", h.rows()}, {"hadamard", hc.hadamard}, {"witness", hc.witness}};
      bool passed = hc.hadamard;
      if (hc.hadamard) {
        const TransitionCheck tc = transition_check(h);
        j["transition"] = {{"eigen_verified", tc.eigen_verified}, {"hadamard", tc.hadamard}, {"message", tc.message}};
        passed = tc.ok();
      } else {
        j["transition"] = nullptr;
      }
      j["passed"] = passed;
      rep.emit(j, render_hadamard_check);
      return passed ? kExitOk : kExitCheckFailed;
    };
  });

  CLI::App* hsimilar = hadamard->add_subcommand("similar", "Search for h2 = L1 P1 h1 P2 L2 (n <= 5)");
  hsimilar->add_option("files", files, "Two matrix JSON files")->required()->expected(2);
  add_output(hsimilar);
  hsimilar->callback([&] {
    action = [&] {
      const CycMatrix h1 = read_square_matrix(files.at(0));
      const CycMatrix h2 = read_square_matrix(files.at(1));
      if (h1.rows() != h2.rows())
        throw InputError(files.at(1) + ": at /rows: size " + std::to_string(h2.rows()) + " differs from " +
                         std::to_string(h1.rows()) + " in " + files.at(0));
      if (h1.rows() > 5) throw InputError(files.at(0) + ": at /rows: similarity search is limited to n <= 5");
      for (const auto* h : {&h1, &h2})
        for (std::size_t r = 0; r < h->rows(); ++r)
          for (std::size_t k = 0; k < h->cols(); ++k)
            if ((*h)(r, k).is_zero())
              throw InputError(files.at(h == &h1 ? 0 : 1) + ": at /rows/" + std::to_string(r) + "/" +
                               std::to_string(k) + ": zero entry");
      Reporter rep(output, out);
      const auto w = hadamard_similar(h1, h2);
      unsigned c = lcm_conductor(conductor(h1), conductor(h2));
      Json j = {{"files", files}, {"n", h1.rows()}, {"conductor", c}, {"similar", w.has_value()}};
      if (w) {
        for (const auto& v : w->lambda1) c = lcm_conductor(c, v.conductor());
        for (const auto& v : w->lambda2) c = lcm_conductor(c, v.conductor());
        j["conductor"] = c;
        j["witness"] = {{"p1", permutation_to_json(w->p1)},
                        {"p2", permutation_to_json(w->p2)},
                        {"lambda1", lambda_texts(w->lambda1, c)},
                        {"lambda2", lambda_texts(w->lambda2, c)}};
      } else {
        j["witness"] = nullptr;
      }
      rep.emit(j, render_similar);
      return w ? kExitOk : kExitCheckFailed;
    };
  });

  // spectrum
  CLI::App* spectrum = app.add_subcommand("spectrum", "det(x1 M1 + ... + xk Mk - I) for matrix files");
  spectrum->add_option("files", files, "Matrix JSON files, one per variable")->required();
  spectrum->add_option("--vars", vars_text, "Comma separated variables (default by count: x / x,y / x,y,z / x,y,z1,z2)");
  add_output(spectrum);
  spectrum->callback([&] {
    action = [&] {
      if (files.size() > 5) throw UsageError("at most 5 matrices are supported");
      VarSet vars = VarSet::for_count(files.size());
      if (!vars_text.empty()) {
        try {
          vars = VarSet::parse(vars_text);
        } catch (const std::exception& e) {
          throw UsageError(std::string("--vars: ") + e.what());
        }
        if (vars.size() != files.size())
          throw UsageError("--vars names " + std::to_string(vars.size()) + " variables for " +
                           std::to_string(files.size()) + " matrices");
      }
      std::vector<CycMatrix> ms;
      for (const auto& f : files) {
        ms.push_back(read_square_matrix(f));
        if (ms.back().rows() != ms.front().rows())
          throw InputError(f + ": at /rows: size " + std::to_string(ms.back().rows()) + " differs from " +
                           std::to_string(ms.front().rows()) + " in " + files.front());
      }
      if (ms.front().rows() > 10) throw InputError(files.front() + ": at /rows: size limited to 10");
      Reporter rep(output, out);
      const MPoly p = joint_spectrum_poly(ms, vars);
      const unsigned c = p.conductor();
      const Json j = {{"files", files}, {"n", ms.front().rows()}, {"conductor", c}, {"polynomial", poly_to_json(p, c)}};
      rep.emit(j, render_spectrum_command);
      return kExitOk;
    };
  });

  // emit
  CLI::App* emit = app.add_subcommand("emit", "Write a built-in matrix in the matrix JSON format");
  emit->add_option("kind", emit_kind, "fourier, omega, bhat, bhathat or h4")
      ->required()
      ->check(CLI::IsMember({"fourier", "omega", "bhat", "bhathat", "h4"}));
  emit->add_option("--n", n, "Matrix size (h4 is always 4)")->check(CLI::Range(1, 16))->default_val(4);
  emit->add_option("--t", t_text, "Parameter of h4, written zetaM^k")->default_str("zeta4^1");
  emit->add_option("--p1", p1_text, "Left permutation, image array like [1,0,2]");
  emit->add_option("--p2", p2_text, "Right permutation");
  emit->add_option("--out", output.out_path, "Write to this file instead of stdout");
  emit->callback([&] {
    action = [&] {
      CycMatrix m;
      if (emit_kind == "fourier") m = fourier_matrix(n);
      else if (emit_kind == "omega") m = omega_diag(n);
      else if (emit_kind == "bhat") m = b_hat(n);
      else if (emit_kind == "bhathat") m = b_hat_hat(n);
      else m = h4_family_at(parse_root_label(t_text.empty() ? "zeta4^1" : t_text));
      auto perm = [&](const std::string& text) {
        try {
          Permutation p = parse_permutation(text, m.rows());
          if (p.size() != m.rows()) throw std::invalid_argument("wrong size");
          return p;
        } catch (const std::exception& e) {
          throw UsageError("bad permutation \"" + text + "\" for size " + std::to_string(m.rows()) + ": " + e.what());
        }
      };
      if (!p1_text.empty()) m = perm_matrix(perm(p1_text)) * m;
      if (!p2_text.empty()) m = m * perm_matrix(perm(p2_text));
      const std::string text = dump_matrix(m);
      if (output.out_path.empty()) {
        out << text;
      } else {
        std::ofstream f(output.out_path, std::ios::binary | std::ios::trunc);
        if (!f || !(f << text)) throw InputError(output.out_path + ": cannot write");
      }
      return kExitOk;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (!action) return kExitUsage;
  try {
    return action();
  } catch (const UsageError& e) {
    err << "specpencil: usage error: " << e.what() << "\n";
  } catch (const InputError& e) {
    err << "specpencil: input error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "specpencil: error: " << e.what() << "\n";
  }
  return kExitUsage;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err, const std::atomic<bool>* cancel) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err, cancel);
}

}  // namespace specpencil::cli
