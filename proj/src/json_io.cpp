#include "polyzeta/json_io.hpp"

namespace polyzeta {

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) { return Rational::parse(j.get<std::string>()); }

Json to_json(const Poly& p) {
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(c.str());
    return Json{{"coeffs", coeffs}};
}

Poly poly_from_json(const Json& j) {
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(Rational::parse(c.get<std::string>()));
    return Poly(std::move(coeffs));
}

Json to_json(const Word& w) { return Json(w.indices()); }

Word word_from_json(const Json& j) { return Word(j.get<std::vector<int>>()); }

Json to_json(const NegTuple& t) { return Json(t.signed_entries()); }

NegTuple neg_tuple_from_json(const Json& j) { return NegTuple::from_signed(j.get<std::vector<int>>()); }

Json to_json(const LinComb& c) {
    Json out = Json::array();
    for (const auto& [w, coeff] : c.terms())
        out.push_back(Json{{"word", to_json(w)}, {"coeff", coeff.str()}});
    return out;
}

LinComb lincomb_from_json(const Json& j) {
    LinComb out;
    for (const auto& term : j)
        out.add(word_from_json(term.at("word")), rational_from_json(term.at("coeff")));
    return out;
}

Json to_json(const TensorLinComb& c) {
    Json out = Json::array();
    for (const auto& [pair, coeff] : c.terms())
        out.push_back(Json{{"left", to_json(pair.first)},
                           {"right", to_json(pair.second)},
                           {"coeff", coeff.str()}});
    return out;
}

Json to_json(const RegElement& r) {
    Json out = Json::object();
    for (const auto& [deg, comb] : r.coeffs()) out["T^" + std::to_string(deg)] = to_json(comb);
    return out;
}

RegElement reg_element_from_json(const Json& j) {
    RegElement out;
    for (const auto& [key, value] : j.items()) {
        if (key.rfind("T^", 0) != 0) throw std::invalid_argument("RegElement: bad key " + key);
        out.set(std::stoi(key.substr(2)), lincomb_from_json(value));
    }
    return out;
}

namespace {

template <class Coeff, class CoeffToJson>
Json word_series_json(const WordSeries<Coeff>& s, CoeffToJson&& enc) {
    Json terms = Json::array();
    for (const auto& [w, c] : s.terms) terms.push_back(Json{{"word", to_json(w)}, {"coeff", enc(c)}});
    return Json{{"alphabet", "positive"},
                {"truncation", Json{{"max_weight", s.max_weight}}},
                {"terms", terms}};
}

}  // namespace

Json to_json(const WordSeries<Poly>& s) {
    return word_series_json(s, [](const Poly& p) { return to_json(p); });
}

Json to_json(const WordSeries<double>& s) {
    return word_series_json(s, [](double v) { return Json(v); });
}

WordSeries<Poly> word_series_poly_from_json(const Json& j) {
    if (j.at("alphabet") != "positive") throw std::invalid_argument("series: expected positive alphabet");
    WordSeries<Poly> s;
    s.max_weight = j.at("truncation").at("max_weight").get<int>();
    for (const auto& term : j.at("terms"))
        s.terms.emplace(word_from_json(term.at("word")), poly_from_json(term.at("coeff")));
    return s;
}

WordSeries<double> word_series_numeric_from_json(const Json& j) {
    if (j.at("alphabet") != "positive") throw std::invalid_argument("series: expected positive alphabet");
    WordSeries<double> s;
    s.max_weight = j.at("truncation").at("max_weight").get<int>();
    for (const auto& term : j.at("terms"))
        s.terms.emplace(word_from_json(term.at("word")), term.at("coeff").get<double>());
    return s;
}

Json to_json(const NegSeries<Poly>& s) {
    Json terms = Json::array();
    terms.push_back(Json{{"word", Json::array()}, {"coeff", to_json(s.unit_coeff)}});
    for (const auto& [t, c] : s.terms)
        terms.push_back(Json{{"word", to_json(t)}, {"coeff", to_json(c)}});
    return Json{{"alphabet", "nonpositive"},
                {"truncation", Json{{"max_depth", s.max_depth}, {"max_index", s.max_index}}},
                {"terms", terms}};
}

NegSeries<Poly> neg_series_from_json(const Json& j) {
    if (j.at("alphabet") != "nonpositive")
        throw std::invalid_argument("series: expected nonpositive alphabet");
    NegSeries<Poly> s;
    s.max_depth = j.at("truncation").at("max_depth").get<int>();
    s.max_index = j.at("truncation").at("max_index").get<int>();
    for (const auto& term : j.at("terms")) {
        const auto entries = term.at("word").get<std::vector<int>>();
        if (entries.empty())
            s.unit_coeff = poly_from_json(term.at("coeff"));
        else
            s.terms.emplace(NegTuple::from_signed(entries), poly_from_json(term.at("coeff")));
    }
    return s;
}

Json to_json(const UnipotentDiffConnection& c) {
    Json mats = Json::object();
    for (const auto& [k, m] : c.matrices()) {
        Json rows = Json::array();
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            Json row = Json::array();
            for (Eigen::Index n = 0; n < m.cols(); ++n) row.push_back(m(i, n).str());
            rows.push_back(row);
        }
        mats[std::to_string(k)] = rows;
    }
    return Json{{"rank", c.rank()}, {"matrices", mats}};
}

UnipotentDiffConnection connection_from_json(const Json& j) {
    const int rank = j.at("rank").get<int>();
    std::map<int, RatMatrix> mats;
    for (const auto& [key, rows] : j.at("matrices").items()) {
        RatMatrix m = RatMatrix::Zero(rank, rank);
        if (static_cast<int>(rows.size()) != rank)
            throw std::invalid_argument("connection: row count does not match rank");
        for (int i = 0; i < rank; ++i) {
            const auto& row = rows.at(static_cast<std::size_t>(i));
            if (static_cast<int>(row.size()) != rank)
                throw std::invalid_argument("connection: column count does not match rank");
            for (int n = 0; n < rank; ++n)
                m(i, n) = Rational::parse(row.at(static_cast<std::size_t>(n)).get<std::string>());
        }
        mats.emplace(std::stoi(key), std::move(m));
    }
    return UnipotentDiffConnection(rank, std::move(mats));
}

Json to_json(const VectorSection& s) {
    Json entries = Json::array();
    for (const auto& e : s.entries) entries.push_back(to_json(e));
    return Json{{"entries", entries}};
}

Json to_json(const EvalResult& r) {
    return Json{{"value", r.value}, {"tol", r.tol}, {"terms_used", r.terms_used}};
}

Json to_json(const Instance& i) {
    return Json{{"input", i.input}, {"lhs", i.lhs}, {"rhs", i.rhs}, {"pass", i.pass}};
}

Json to_json(const Report& r) {
    Json params = Json::object();
    for (const auto& [k, v] : r.parameters) params[k] = v;
    Json instances = Json::array();
    for (const auto& i : r.instances) instances.push_back(to_json(i));
    return Json{{"suite", r.suite},
                {"parameters", params},
                {"instances", instances},
                {"summary", r.summary}};
}

Json to_json(const IndependenceResult& r) {
    Json words = Json::array();
    for (const auto& w : r.words) words.push_back(to_json(w));
    return Json{{"words", words},
                {"zs", r.zs},
                {"matrix", r.matrix},
                {"condition_number", r.condition_number},
                {"threshold", r.threshold},
                {"pass", r.pass}};
}

Json nmbp_result_json(const NegTuple& t, const Poly& p) {
    return Json{{"tuple", to_json(t)},
                {"poly", to_json(p)},
                {"value_at_1", p.evaluate(Rational(1)).str()}};
}

}  // namespace polyzeta
