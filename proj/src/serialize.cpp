#include "specpencil/serialize.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace specpencil {

namespace {

constexpr unsigned kMaxConductor = 1024;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw InputError("at " + (where.empty() ? std::string("/") : where) + ": " + what);
}

Json int_to_json(const BigInt& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

BigInt int_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return BigInt(std::to_string(j.get<std::uint64_t>()));
    return BigInt(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    const std::string& s = j.get_ref<const std::string&>();
    const std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
      fail(where, "expected an integer, got string \"" + s + "\"");
    return BigInt(s);
  }
  fail(where, std::string("expected an integer, got ") + j.type_name());
}

unsigned small_unsigned(const Json& j, const std::string& where, unsigned limit) {
  const BigInt v = int_from_json(j, where);
  if (v < 0 || v >= limit) fail(where, "value " + v.get_str() + " out of range [0, " + std::to_string(limit) + ")");
  return static_cast<unsigned>(v.get_ui());
}

const Json& require_array(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, std::string("expected an array, got ") + j.type_name());
  return j;
}

std::string child(const std::string& where, std::size_t i) { return where + "/" + std::to_string(i); }
std::string child(const std::string& where, std::string_view key) { return where + "/" + std::string(key); }

void reject_unknown_keys(const Json& obj, std::initializer_list<std::string_view> allowed, const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (auto a : allowed) known = known || key == a;
    if (!known) fail(where, "unexpected key \"" + key + "\"");
  }
}

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return std::to_string(line) + ":" + std::to_string(col);
}

unsigned poly_document_conductor(std::initializer_list<const MPoly*> polys, unsigned base = 1) {
  unsigned c = base;
  for (const MPoly* p : polys) c = lcm_conductor(c, p->conductor());
  return c;
}

Json vars_to_json(const VarSet& vars) {
  Json out = Json::array();
  for (Var v : vars) out.push_back(std::string(var_name(v)));
  return out;
}

Json pair_json(const PermPair& p) { return Json::array({permutation_to_json(p.first), permutation_to_json(p.second)}); }

Json checks_json(const std::vector<IdentityCheck>& checks) {
  Json out = Json::array();
  for (const auto& c : checks) out.push_back({{"name", c.name}, {"passed", c.passed}});
  return out;
}

}  // namespace

Json cyc_to_json(const CycNumber& value, unsigned conductor) {
  const CycNumber v = value.promote(conductor);
  Json out = Json::array();
  const auto coeffs = v.coefficients();
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    out.push_back(Json::array({k, int_to_json(coeffs[k].get_num()), int_to_json(coeffs[k].get_den())}));
  }
  return out;
}

CycNumber cyc_from_json(const Json& j, unsigned conductor, const std::string& where) {
  require_array(j, where);
  std::vector<BigRational> coeffs(conductor);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = child(where, i);
    const Json& triple = require_array(j[i], at);
    if (triple.size() != 3) fail(at, "expected a [k, numerator, denominator] triple");
    const unsigned k = small_unsigned(triple[0], child(at, 0), conductor);
    const BigInt num = int_from_json(triple[1], child(at, 1));
    const BigInt den = int_from_json(triple[2], child(at, 2));
    if (den == 0) fail(child(at, 2), "zero denominator");
    BigRational r(num, den);
    r.canonicalize();
    coeffs[k] += r;
  }
  return CycNumber::from_coefficients(conductor, coeffs);
}

Json poly_terms_to_json(const MPoly& p, unsigned conductor) {
  Json out = Json::array();
  for (const auto& term : p.terms())
    out.push_back({{"exponents", term.exponents}, {"coeff", cyc_to_json(term.coeff, conductor)}});
  return out;
}

MPoly poly_from_json(const Json& j, const VarSet& vars, unsigned conductor, const std::string& where) {
  require_array(j, where);
  MPoly p(vars);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = child(where, i);
    const Json& rec = j[i];
    if (!rec.is_object()) fail(at, std::string("expected a term object, got ") + rec.type_name());
    reject_unknown_keys(rec, {"exponents", "coeff"}, at);
    if (!rec.contains("exponents")) fail(at, "missing \"exponents\"");
    if (!rec.contains("coeff")) fail(at, "missing \"coeff\"");
    const Json& ej = require_array(rec["exponents"], child(at, "exponents"));
    Exponents e(vars.size(), 0);
    if (!ej.empty()) {
      if (ej.size() != vars.size())
        fail(child(at, "exponents"), "expected " + std::to_string(vars.size()) + " exponents (one per variable), got " +
                                         std::to_string(ej.size()));
      for (std::size_t v = 0; v < ej.size(); ++v)
        e[v] = small_unsigned(ej[v], child(child(at, "exponents"), v), detail::kMaxDegree + 1);
    }
    unsigned degree = 0;
    for (unsigned d : e) degree += d;
    if (degree > detail::kMaxDegree) fail(child(at, "exponents"), "total degree exceeds 255");
    p.add_term(e, cyc_from_json(rec["coeff"], conductor, child(at, "coeff")));
  }
  return p;
}

Json poly_to_json(const MPoly& p, unsigned conductor) {
  return {{"vars", vars_to_json(p.vars())},
          {"conductor", conductor},
          {"text", to_string(p, conductor)},
          {"terms", poly_terms_to_json(p, conductor)}};
}

Json poly_to_json(const MPoly& p) { return poly_to_json(p, p.conductor()); }

namespace {

template <class M, class EntryFn>
Json matrix_json(const M& m, unsigned c, const VarSet& vars, EntryFn entry) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(entry(m(r, k)));
    rows.push_back(std::move(row));
  }
  return {{"conductor", c}, {"vars", vars_to_json(vars)}, {"rows", std::move(rows)}};
}

}  // namespace

Json matrix_to_json(const CycMatrix& m) {
  const unsigned c = conductor(m);
  return matrix_json(m, c, VarSet{}, [&](const CycNumber& v) {
    Json entry = Json::array();
    if (!v.is_zero()) entry.push_back({{"exponents", Json::array()}, {"coeff", cyc_to_json(v, c)}});
    return entry;
  });
}

Json matrix_to_json(const PolyMatrix& m) {
  const unsigned c = conductor(m);
  const VarSet vars = m.rows() > 0 && m.cols() > 0 ? m(0, 0).vars() : VarSet{};
  return matrix_json(m, c, vars, [&](const MPoly& p) { return poly_terms_to_json(p, c); });
}

namespace {

// `lead` is the column where the value starts, used only for the width test.
void dump_into(const Json& j, std::size_t indent, std::size_t lead, std::size_t width, std::string& out) {
  std::string flat = j.dump();
  if (!j.is_structured() || j.empty() || lead + flat.size() <= width) {
    out += flat;
    return;
  }
  const std::string pad(indent + 2, ' ');
  out += j.is_array() ? "[\n" : "{\n";
  bool first = true;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!first) out += ",\n";
    first = false;
    out += pad;
    std::size_t col = indent + 2;
    if (j.is_object()) {
      const std::string key = Json(it.key()).dump() + ": ";
      out += key;
      col += key.size();
    }
    dump_into(*it, indent + 2, col, width, out);
  }
  out += "\n" + std::string(indent, ' ') + (j.is_array() ? "]" : "}");
}

}  // namespace

std::string dump_pretty(const Json& j, std::size_t width) {
  std::string out;
  dump_into(j, 0, 0, width, out);
  return out + "\n";
}

std::string dump_matrix(const CycMatrix& m) { return dump_pretty(matrix_to_json(m)); }

MatrixDocument parse_matrix_document(std::string_view text, std::string_view source) {
  const std::string prefix = std::string(source) + ": ";
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    std::string detail = e.what();
    // drop the library's "[json.exception.parse_error.101] " tag
    if (auto pos = detail.find("] "); pos != std::string::npos) detail = detail.substr(pos + 2);
    throw InputError(prefix + line_column(text, e.byte) + ": invalid JSON: " + detail);
  }
  try {
    if (!doc.is_object()) fail("", std::string("expected an object, got ") + doc.type_name());
    reject_unknown_keys(doc, {"conductor", "vars", "rows"}, "");
    MatrixDocument out;
    if (!doc.contains("conductor")) fail("", "missing \"conductor\"");
    out.conductor = small_unsigned(doc["conductor"], "/conductor", kMaxConductor + 1);
    if (out.conductor == 0) fail("/conductor", "conductor must be positive");

    std::vector<Var> vars;
    if (doc.contains("vars")) {
      const Json& vj = require_array(doc["vars"], "/vars");
      for (std::size_t i = 0; i < vj.size(); ++i) {
        if (!vj[i].is_string()) fail(child("/vars", i), "expected a variable name");
        const auto v = parse_var(vj[i].get_ref<const std::string&>());
        if (!v) fail(child("/vars", i), "unknown variable \"" + vj[i].get<std::string>() + "\" (expected x, y, z, z1, z2)");
        if (!vars.empty() && *v <= vars.back())
          fail(child("/vars", i), "variables must be distinct and ordered x, y, z, z1, z2");
        vars.push_back(*v);
      }
    }
    out.vars = VarSet(std::move(vars));

    if (!doc.contains("rows")) fail("", "missing \"rows\"");
    const Json& rows = require_array(doc["rows"], "/rows");
    if (rows.empty()) fail("/rows", "matrix has no rows");
    std::vector<std::vector<MPoly>> entries;
    std::size_t cols = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const std::string at = child("/rows", r);
      const Json& row = require_array(rows[r], at);
      if (r == 0) {
        cols = row.size();
        if (cols == 0) fail(at, "matrix has no columns");
      } else if (row.size() != cols) {
        fail(at, "row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(cols));
      }
      std::vector<MPoly> parsed;
      for (std::size_t k = 0; k < row.size(); ++k)
        parsed.push_back(poly_from_json(row[k], out.vars, out.conductor, child(at, k)));
      entries.push_back(std::move(parsed));
    }
    out.matrix = PolyMatrix::from_rows(entries);
    return out;
  } catch (const InputError& e) {
    throw InputError(prefix + e.what());
  }
}

CycMatrix parse_constant_matrix(std::string_view text, std::string_view source) {
  const MatrixDocument doc = parse_matrix_document(text, source);
  for (std::size_t r = 0; r < doc.matrix.rows(); ++r)
    for (std::size_t k = 0; k < doc.matrix.cols(); ++k)
      if (!doc.matrix(r, k).is_constant())
        throw InputError(std::string(source) + ": at /rows/" + std::to_string(r) + "/" + std::to_string(k) +
                         ": expected a constant entry");
  return to_constant(doc.matrix);
}

MatrixDocument read_matrix_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix_document(buf.str(), path);
}

Json permutation_to_json(const Permutation& p) { return Json(p.images()); }

Json spectrum_report_json(const SpectrumReport& r, unsigned n) {
  unsigned c = poly_document_conductor({&r.computed, &r.target});
  if (r.ratio) c = lcm_conductor(c, r.ratio->conductor());
  Json out = {{"description", r.description},
              {"n", n},
              {"conductor", c},
              {"target", poly_to_json(r.target, c)},
              {"computed", poly_to_json(r.computed, c)},
              {"proportional", r.proportional}};
  if (r.ratio) {
    out["ratio"] = cyc_to_json(*r.ratio, c);
    out["ratio_text"] = to_string(*r.ratio, c);
  } else {
    out["ratio"] = nullptr;
    out["ratio_text"] = nullptr;
  }
  out["degree_matches"] = r.degree_matches;
  out["passed"] = r.proportional && r.degree_matches;
  return out;
}

Json relation_report_json(const RelationReport& r) {
  return {{"n", r.n}, {"checks", checks_json(r.checks)}, {"all_passed", r.all_passed()}};
}

Json counterexample_report_json(const CounterexampleReport& r) {
  const unsigned c = poly_document_conductor({&r.spectrum_hat, &r.spectrum_hat_hat}, 3);
  return {{"conductor", c},
          {"relations", checks_json(r.relations)},
          {"spectrum_b_hat", poly_to_json(r.spectrum_hat, c)},
          {"spectrum_b_hat_hat", poly_to_json(r.spectrum_hat_hat, c)},
          {"target", "x^3 + y^3 - 1"},
          {"spectra_match_target", r.spectra_match_target},
          {"diagonal_conjugation_found", r.diagonal_conjugation_found},
          {"inequivalence_scope", r.inequivalence_scope},
          {"passed", r.passed()}};
}

Json lemma41_report_json(const Lemma41Report& r) {
  unsigned c = r.n;
  for (const auto& cs : r.cases)
    for (const auto& l : cs.lambda) c = lcm_conductor(c, l.conductor());
  Json cases = Json::array();
  for (const auto& cs : r.cases) {
    Json lambda = Json::array();
    for (const auto& l : cs.lambda) lambda.push_back(to_string(l, c));
    cases.push_back({{"kind", std::string(1, cs.kind)},
                     {"p1", permutation_to_json(cs.p1)},
                     {"p2", permutation_to_json(cs.p2)},
                     {"q", cs.affine.q},
                     {"m", cs.affine.m},
                     {"witness", permutation_to_json(cs.witness)},
                     {"recipe_witness", cs.recipe_witness},
                     {"lambda", std::move(lambda)},
                     {"monomial_structure", cs.monomial_structure},
                     {"verified", cs.verified},
                     {"spectrum_fourier", cs.spectrum_fourier}});
  }
  return {{"n", r.n}, {"conductor", c}, {"cases", std::move(cases)}, {"all_passed", r.all_passed()}};
}

Json classification_report_json(const ClassificationReport& r, bool include_timing) {
  Json fourier = Json::array(), predicted = Json::array();
  for (const auto& p : r.fourier_pairs) fourier.push_back(pair_json(p));
  for (const auto& p : r.predicted) predicted.push_back(pair_json(p));
  Json out = {{"n", r.n},
              {"pairs_total", r.pairs_total},
              {"fourier_pairs", std::move(fourier)},
              {"predicted", std::move(predicted)},
              {"match", r.match},
              {"pairs_scanned", r.pairs_scanned},
              {"complete", r.complete},
              {"fourier_count", r.fourier_pairs.size()},
              {"predicted_count", r.predicted.size()}};
  if (include_timing) out["elapsed_ms"] = static_cast<std::int64_t>(r.elapsed_ms);
  return out;
}

Json h4_report_json(const H4ScanReport& r, bool include_timing) {
  unsigned c = 4;
  for (const auto& s : r.samples) {
    c = lcm_conductor(c, s.t.conductor());
    if (s.first_nonzero_coefficient) c = lcm_conductor(c, s.first_nonzero_coefficient->conductor());
  }
  Json samples = Json::array();
  for (const auto& s : r.samples) {
    Json item = {{"label", s.label},
                 {"t", cyc_to_json(s.t, c)},
                 {"t_text", to_string(s.t, c)},
                 {"pairs", s.pairs},
                 {"vanishing_pairs", s.vanishing_pairs},
                 {"all_vanish", s.all_vanish},
                 {"expected_vanishing", s.expected_vanishing},
                 {"vanishing_equals_affine", s.vanishing_equals_affine}};
    item["first_nonzero"] = s.first_nonzero ? pair_json(*s.first_nonzero) : Json(nullptr);
    item["first_nonzero_coefficient"] =
        s.first_nonzero_coefficient ? Json(to_string(*s.first_nonzero_coefficient, c)) : Json(nullptr);
    samples.push_back(std::move(item));
  }
  Json out = {{"conductor", c},
              {"criterion", "exact vanishing of the full z^2 coefficient of det(z A B - I), not only its real part; "
               "consistent means some pair vanishes iff t = i or t = -i, and then exactly the pairs with P1 or P2 in G_4 "
               "vanish"},
              {"samples", std::move(samples)},
              {"consistent", r.consistent},
              {"minus_i_similar_to_f4", r.minus_i_similar_to_f4},
              {"complete", r.complete}};
  if (include_timing) out["elapsed_ms"] = static_cast<std::int64_t>(r.elapsed_ms);
  return out;
}

}  // namespace specpencil
