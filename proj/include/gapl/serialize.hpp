#pragma once

#include <string>

#include "json.hpp"

#include "gapl/apl.hpp"
#include "gapl/grading.hpp"
#include "gapl/groebner.hpp"
#include "gapl/lie.hpp"
#include "gapl/refutation.hpp"
#include "gapl/sl2rep.hpp"
#include "gapl/solver.hpp"

namespace gapl {

// std::map-backed, so keys are always emitted in sorted order
using Json = nlohmann::json;

// throws ParseError naming line and column
Json parse_json(const std::string& text);
std::string dump_json(const Json& j);

Json encode(const Rational& r);
Json encode(const Vec& v);
Json encode(const Matrix& m);
Json encode(const LieAlgebra& L);
Json encode(const AntiPreLieAlgebra& A);
Json encode(const RootDatum& d);
Json encode(const ValidationReport& r);
Json encode(const Sl2Action& a);
Json encode(const RepDecomposition& d);
Json encode(const PolynomialSystem& s);
Json encode(const Certificate& c);
Json encode(const SolveOutcome& o);
Json encode(const GroebnerWitness& w);
Json encode(const ForcedValues& f);
Json encode(const RefutationReport& r);

// decode<T> throws ParseError with a JSON pointer to the offending value
template <class T>
T decode(const Json& j);

template <> Rational decode<Rational>(const Json& j);
template <> Vec decode<Vec>(const Json& j);
template <> Matrix decode<Matrix>(const Json& j);
template <> LieAlgebra decode<LieAlgebra>(const Json& j);
template <> AntiPreLieAlgebra decode<AntiPreLieAlgebra>(const Json& j);
template <> RootDatum decode<RootDatum>(const Json& j);
template <> ValidationReport decode<ValidationReport>(const Json& j);
template <> Sl2Action decode<Sl2Action>(const Json& j);
template <> RepDecomposition decode<RepDecomposition>(const Json& j);
template <> PolynomialSystem decode<PolynomialSystem>(const Json& j);
template <> Certificate decode<Certificate>(const Json& j);
template <> SolveOutcome decode<SolveOutcome>(const Json& j);
template <> GroebnerWitness decode<GroebnerWitness>(const Json& j);
template <> ForcedValues decode<ForcedValues>(const Json& j);
template <> RefutationReport decode<RefutationReport>(const Json& j);

}  // namespace gapl
