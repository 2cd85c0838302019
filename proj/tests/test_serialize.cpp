#include "doctest.h"
#include "gapl/errors.hpp"
#include "gapl/refutation.hpp"
#include "gapl/serialize.hpp"
#include "gapl/zoo.hpp"

using namespace gapl;

namespace {

template <class T>
T round_trip(const T& x) {
  std::string text = dump_json(encode(x));
  T back = decode<T>(parse_json(text));
  CHECK(dump_json(encode(back)) == text);
  return back;
}

std::string parse_error(const std::string& text) {
  try {
    decode<LieAlgebra>(parse_json(text));
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("rationals are written as strings") {
  CHECK(encode(Rational(-4, 5)) == Json("-4/5"));
  CHECK(decode<Rational>(Json("3")) == Rational(3));
  CHECK_THROWS_AS(decode<Rational>(Json(3)), ParseError);
  CHECK_THROWS_AS(decode<Rational>(Json("1/0")), ParseError);
}

TEST_CASE("Lie algebras round-trip") {
  for (const char* id : {"sl2", "so5", "g2"}) {
    AlgebraHandle h = make_algebra(id);
    CHECK(round_trip(*h.algebra) == *h.algebra);
  }
  Json j = encode(*make_algebra("sl2").algebra);
  CHECK(j["basis"] == Json({"h1", "e12", "e21"}));
}

TEST_CASE("the reference structure round-trips and still validates") {
  AntiPreLieAlgebra A = round_trip(reference_sl2_structure());
  CHECK(A == reference_sl2_structure());
  CHECK(validate_apl(A).ok());
}

TEST_CASE("keys are sorted and output is deterministic") {
  std::string a = dump_json(encode(refute("so5")));
  std::string b = dump_json(encode(refute("so5")));
  CHECK(a == b);
  Json j = parse_json(a);
  std::string prev;
  for (const auto& [k, v] : j.items()) {
    CHECK(prev < k);
    prev = k;
  }
  CHECK(a.find("\"a1\"") < a.find("\"algebra\""));
}

TEST_CASE("domain artifacts round-trip") {
  AlgebraHandle h = make_algebra("sp6");
  round_trip(root_decomposition(*h.algebra, h.cartan_vectors()));
  round_trip(make_standard_irrep(4));
  round_trip(decompose_rep(direct_sum(make_standard_irrep(3), make_standard_irrep(1))));
  ForcedValues f = round_trip(bn_forced_values(2, true));
  CHECK(verify_forced(f).ok);
  RefutationReport r = round_trip(refute("g2"));
  CHECK(verify_report(r).ok);
  Certificate c = round_trip(f.outcome.certificate);
  CHECK(verify_certificate(c, f.outcome.branches).ok);
  ValidationReport bad = validate_lie([] {
    LieAlgebra L({"a", "b", "c"});
    L.set_bracket(0, 1, Vec{1, 0, 0});
    L.set_bracket(0, 2, Vec{0, 1, 0});
    return L;
  }());
  ValidationReport back = round_trip(bad);
  CHECK(back.failures.size() == bad.failures.size());
}

TEST_CASE("schema violations name their location") {
  std::string e = parse_error(R"({"basis": 3})");
  CHECK(e.find("/basis") != std::string::npos);
  CHECK(parse_error(R"({"basis": ["a","b"], "brackets": [{"i":"a","j":"q","value":[]}]})").find("/brackets/0/j") !=
        std::string::npos);
  CHECK(parse_error(R"({"basis": ["a","a"], "brackets": []})") != "");
  CHECK(parse_error(R"({"basis": ["a","b"], "brackets": [{"i":"a","j":"a","value":[]}]})") != "");
  CHECK(parse_error(R"({"basis": ["a","b"], "brackets": [{"i":"a","j":"b","value":[{"k":"a","c":"x"}]}]})") != "");
  CHECK(parse_error(R"({"basis": ["a","b"]})").find("brackets") != std::string::npos);
}

TEST_CASE("malformed JSON reports line and column") {
  try {
    parse_json("{\n  \"basis\": [1,\n");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line") != std::string::npos);
    CHECK(std::string(e.what()).find("column") != std::string::npos);
  }
}
