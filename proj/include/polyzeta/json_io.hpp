#pragma once

#include "polyzeta/connection.hpp"
#include "polyzeta/hurwitz.hpp"
#include "polyzeta/independence.hpp"
#include "polyzeta/lincomb.hpp"
#include "polyzeta/ncseries.hpp"
#include "polyzeta/polynomial.hpp"
#include "polyzeta/report.hpp"
#include "polyzeta/word.hpp"

#include <json.hpp>

namespace polyzeta {

using Json = nlohmann::ordered_json;

// Wire formats (re-parsed by the from_ functions with exact fidelity):
//   Rational      "num/den", reduced
//   RationalPoly  {"coeffs": ["num/den", ...]} ascending; zero poly has []
//   Word          [2,3]                (positive indices)
//   NegTuple      [0,-3,-1]            (signed non-positive entries)
//   LinComb       [{"word": [...], "coeff": "num/den"}, ...]
//   RegElement    {"T^0": LinComb, "T^1": LinComb, ...}
//   NCSeries      {"alphabet": "positive"|"nonpositive", "truncation": {...},
//                  "terms": [{"word": [...], "coeff": poly-or-float}, ...]}
//   connection    {"rank": r, "matrices": {"1": [["0/1", ...], ...], ...}}

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const Poly& p);
Poly poly_from_json(const Json& j);

Json to_json(const Word& w);
Word word_from_json(const Json& j);

Json to_json(const NegTuple& t);
NegTuple neg_tuple_from_json(const Json& j);

Json to_json(const LinComb& c);
LinComb lincomb_from_json(const Json& j);

Json to_json(const TensorLinComb& c);

Json to_json(const RegElement& r);
RegElement reg_element_from_json(const Json& j);

Json to_json(const WordSeries<Poly>& s);
Json to_json(const WordSeries<double>& s);
WordSeries<Poly> word_series_poly_from_json(const Json& j);
WordSeries<double> word_series_numeric_from_json(const Json& j);

Json to_json(const NegSeries<Poly>& s);
NegSeries<Poly> neg_series_from_json(const Json& j);

Json to_json(const UnipotentDiffConnection& c);
UnipotentDiffConnection connection_from_json(const Json& j);

Json to_json(const VectorSection& s);

Json to_json(const EvalResult& r);

Json to_json(const Instance& i);
Json to_json(const Report& r);

Json to_json(const IndependenceResult& r);

/// NMBP result bundle: {"tuple": signed, "poly": ..., "value_at_1": "num/den"}.
Json nmbp_result_json(const NegTuple& t, const Poly& p);

}  // namespace polyzeta
