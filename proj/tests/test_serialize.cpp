#include "doctest.h"
#include "support.hpp"

#include "specpencil/serialize.hpp"

using namespace specpencil;

namespace {

std::string error_of(std::string_view text) {
  try {
    parse_matrix_document(text, "m.json");
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

bool contains(const std::string& s, std::string_view part) { return s.find(part) != std::string::npos; }

}  // namespace

TEST_CASE("cyclotomic numbers round-trip") {
  testgen::Gen g;
  for (unsigned m : {1u, 3u, 4u, 8u, 12u, 24u}) {
    for (int t = 0; t < 20; ++t) {
      const CycNumber v = g.cyc(m);
      CHECK(cyc_from_json(cyc_to_json(v, m), m) == v);
    }
  }
  CHECK(cyc_to_json(root_of_unity(4, 1), 4) == Json::parse("[[1, 1, 1]]"));
  CHECK(cyc_to_json(CycNumber(), 4) == Json::array());
  // repeated k accumulate, and w^2 = -1 reduces
  CHECK(cyc_from_json(Json::parse("[[1, 1, 2], [1, 1, 2], [2, 3, 1]]"), 4) == root_of_unity(4, 1) - CycNumber(3));
}

TEST_CASE("large integers are written as strings") {
  const BigInt big("123456789012345678901234567891");
  const CycNumber v{BigRational(big, BigInt(7))};
  const Json j = cyc_to_json(v, 1);
  CHECK(j[0][1].is_string());
  CHECK(j[0][2] == 7);
  CHECK(cyc_from_json(j, 1) == v);
  CHECK(cyc_from_json(Json::parse(R"([[0, "-12", "4"]])"), 1) == CycNumber(-3));
}

TEST_CASE("matrices round-trip") {
  testgen::Gen g;
  for (int t = 0; t < 10; ++t) {
    const CycMatrix m = g.matrix(3, 3, 12);
    const std::string text = dump_matrix(m);
    CHECK(parse_constant_matrix(text) == m);
  }
  const CycMatrix f = fourier_matrix(5);
  const MatrixDocument doc = parse_matrix_document(dump_matrix(f));
  CHECK(doc.conductor == 5);
  CHECK(doc.vars.size() == 0);

  const VarSet xyz{Var::x, Var::y, Var::z};
  const auto tuple = fourier_tuple(b_hat(3), SurfaceKind::three_var);
  const PolyMatrix p = pencil(tuple, xyz);
  const MatrixDocument pd = parse_matrix_document(matrix_to_json(p).dump());
  CHECK(pd.vars == xyz);
  CHECK(pd.matrix == p);
}

TEST_CASE("polynomial documents") {
  const MPoly s = fourier_surface_3(3);
  const Json j = poly_to_json(s);
  CHECK(j["text"] == "x^3 + y^3 + z^3 - 1");
  CHECK(j["vars"] == Json::parse(R"(["x", "y", "z"])"));
  CHECK(poly_from_json(j["terms"], s.vars(), j["conductor"].get<unsigned>()) == s);
  const Json four = poly_to_json(fourier_surface_4(3), 3);
  CHECK(four["conductor"] == 3);
  CHECK(poly_from_json(four["terms"], VarSet::for_count(4), 3) == fourier_surface_4(3));
}

TEST_CASE("malformed matrices carry positions") {
  const std::string syntax = error_of("{\"conductor\": 4,\n \"rows\": [[[]] ]");
  CHECK(contains(syntax, "m.json: 2:"));
  CHECK(contains(syntax, "invalid JSON"));

  CHECK(contains(error_of(R"({"conductor": 4, "rows": [[[{"exponents": [], "coeff": [[4, 1, 1]]}]]]})"),
                 "at /rows/0/0/0/coeff/0/0"));
  CHECK(contains(error_of(R"({"conductor": 4, "rows": [[[{"exponents": [], "coeff": [[0, "1x", 1]]}]]]})"),
                 "at /rows/0/0/0/coeff/0/1"));
  CHECK(contains(error_of(R"({"conductor": 4, "rows": [[[{"exponents": [], "coeff": [[0, 1, 0]]}]]]})"),
                 "zero denominator"));
  CHECK(contains(error_of(R"({"conductor": 4, "rows": [[[]], [[], []]]})"), "at /rows/1"));
  CHECK(contains(error_of(R"({"conductor": 4, "rows": []})"), "at /rows"));
  CHECK(contains(error_of(R"({"rows": [[[]]]})"), "missing \"conductor\""));
  CHECK(contains(error_of(R"({"conductor": 0, "rows": [[[]]]})"), "at /conductor"));
  CHECK(contains(error_of(R"({"conductor": 4, "rows": [[[]]], "extra": 1})"), "unexpected key"));
  CHECK(contains(error_of(R"({"conductor": 4, "vars": ["y", "x"], "rows": [[[]]]})"), "at /vars/1"));
  CHECK(contains(error_of(R"({"conductor": 4, "vars": ["x"], "rows": [[[{"exponents": [1, 2], "coeff": [[0, 1, 1]]}]]]})"),
                 "at /rows/0/0/0/exponents"));
  CHECK(contains(error_of("[1, 2]"), "expected an object"));

  // a polynomial entry where a constant matrix is required
  try {
    parse_constant_matrix(R"({"conductor": 1, "vars": ["x"], "rows": [[[{"exponents": [1], "coeff": [[0, 1, 1]]}]]]})", "p.json");
    FAIL("expected InputError");
  } catch (const InputError& e) {
    CHECK(contains(e.what(), "p.json: at /rows/0/0"));
  }
  CHECK_THROWS_AS(read_matrix_file("/nonexistent/m.json"), InputError);
}

TEST_CASE("pretty printing") {
  const Json j = Json::parse(R"({"a": [1, 2, 3], "b": {"c": "d"}})");
  CHECK(dump_pretty(j) == "{\"a\":[1,2,3],\"b\":{\"c\":\"d\"}}\n");
  const std::string narrow = dump_pretty(j, 10);
  CHECK(contains(narrow, "\n"));
  CHECK(Json::parse(narrow) == j);
  testgen::Gen g;
  const Json m = matrix_to_json(g.matrix(4, 4, 8));
  CHECK(Json::parse(dump_pretty(m, 40)) == m);
}

TEST_CASE("reports") {
  const Json c = classification_report_json(classify_permutation_pairs(4), false);
  CHECK(c["n"] == 4);
  CHECK(c["pairs_total"] == 576);
  CHECK(c["match"] == true);
  CHECK(c["fourier_pairs"].size() == 320);
  CHECK(c["predicted"] == c["fourier_pairs"]);
  CHECK(!c.contains("elapsed_ms"));
  CHECK(classification_report_json(classify_permutation_pairs(4), true).contains("elapsed_ms"));

  const Json s = spectrum_report_json(fourier_pair_spectrum(3, SurfaceKind::three_var), 3);
  CHECK(s["passed"] == true);
  CHECK(s["target"]["text"] == "x^3 + y^3 + z^3 - 1");

  CHECK(permutation_to_json(Permutation({2, 0, 1})) == Json::parse("[2, 0, 1]"));
}
