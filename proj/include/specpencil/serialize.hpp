// JSON encodings of numbers, polynomials, matrices and verification reports.
//
// Integers are written as JSON numbers when they fit in 64 bits and as
// decimal strings otherwise; both spellings are accepted on input.
#pragma once

#include "specpencil/matrix.hpp"
#include "specpencil/search.hpp"
#include "specpencil/spectra.hpp"

#include "json.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace specpencil {

using Json = nlohmann::ordered_json;

/// Malformed input.  what() carries the source name and a position: either
/// line:column for syntax errors or a JSON pointer for structural ones.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// [[k, num, den], ...] over the nonzero coefficients of value at conductor m.
Json cyc_to_json(const CycNumber& value, unsigned conductor);
CycNumber cyc_from_json(const Json& j, unsigned conductor, const std::string& where = "");

/// [{"exponents": [...], "coeff": [...]}, ...]
Json poly_terms_to_json(const MPoly& p, unsigned conductor);
MPoly poly_from_json(const Json& j, const VarSet& vars, unsigned conductor, const std::string& where = "");

/// {"vars", "conductor", "text", "terms"} with text rendered at `conductor`.
Json poly_to_json(const MPoly& p, unsigned conductor);
Json poly_to_json(const MPoly& p);

struct MatrixDocument {
  unsigned conductor = 1;
  VarSet vars;
  PolyMatrix matrix;
};

/// Indented JSON that keeps any container fitting in `width` columns on one
/// line.  Deterministic; ends with a newline.
std::string dump_pretty(const Json& j, std::size_t width = 100);

Json matrix_to_json(const CycMatrix& m);
Json matrix_to_json(const PolyMatrix& m);
std::string dump_matrix(const CycMatrix& m);

/// Parses the matrix format {"conductor": m, "vars": [...], "rows": [...]}.
/// Throws InputError prefixed with `source`.
MatrixDocument parse_matrix_document(std::string_view text, std::string_view source = "<input>");
/// As parse_matrix_document, then requires constant entries.
CycMatrix parse_constant_matrix(std::string_view text, std::string_view source = "<input>");
MatrixDocument read_matrix_file(const std::string& path);

Json permutation_to_json(const Permutation& p);

Json spectrum_report_json(const SpectrumReport& r, unsigned n);
Json relation_report_json(const RelationReport& r);
Json counterexample_report_json(const CounterexampleReport& r);
Json lemma41_report_json(const Lemma41Report& r);
/// elapsed_ms is omitted when include_timing is false.
Json classification_report_json(const ClassificationReport& r, bool include_timing = true);
Json h4_report_json(const H4ScanReport& r, bool include_timing = true);

}  // namespace specpencil
