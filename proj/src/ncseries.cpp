#include "polyzeta/ncseries.hpp"

#include "polyzeta/hurwitz.hpp"
#include "polyzeta/nmbp.hpp"

#include <cmath>
#include <sstream>

namespace polyzeta {

NegSeries<Poly> build_HB(int max_depth, int max_index) {
    if (max_depth < 0 || max_index < 0)
        throw std::invalid_argument("build_HB: bounds must be >= 0");
    NegSeries<Poly> s;
    s.max_depth = max_depth;
    s.max_index = max_index;
    s.unit_coeff = Poly(Rational(1));
    for (const NegTuple& t : neg_tuples_up_to(max_depth, max_index)) s.terms.emplace(t, nmbp(t));
    return s;
}

Report check_flat_HB(const NegSeries<Poly>& series) {
    Report rep;
    rep.suite = "flat-hb";
    rep.parameters["max_depth"] = std::to_string(series.max_depth);
    rep.parameters["max_index"] = std::to_string(series.max_index);
    rep.add("()", "0", "0", true);  // unit word: both sides vanish
    for (const auto& [t, poly] : series.terms) {
        const Poly lhs = shift_up(poly) - poly;
        const Poly tail_poly = t.depth() == 1 ? Poly(Rational(1)) : series.coeff(t.tail());
        const Poly rhs = Rational(-1) * Poly::monomial(t.front()) * shift_up(tail_poly);
        rep.add(t.str(), to_string(lhs), to_string(rhs), lhs == rhs);
    }
    rep.finalize();
    return rep;
}

WordSeries<double> build_H_numeric(double z, int max_weight, double tol) {
    if (!(z > 1.0)) throw std::domain_error("build_H_numeric: z must be > 1");
    if (max_weight < 0) throw std::invalid_argument("build_H_numeric: negative weight bound");
    WordSeries<double> s;
    s.max_weight = max_weight;
    for (const Word& w : words_up_to_weight(max_weight)) {
        if (w.empty()) {
            s.terms.emplace(w, 1.0);
        } else if (w.convergent()) {
            s.terms.emplace(w, hurwitz_polyzeta(w, z, tol).value);
        } else {
            s.terms.emplace(w, regularized_numeric(w, z, tol).value);
        }
    }
    return s;
}

FlatHResult check_flat_H(double z, int max_weight, double tol_residual, double eval_tol) {
    if (!(z > 2.0))
        throw std::domain_error("check_flat_H: z must be > 2 so both samples stay off the poles");
    const WordSeries<double> here = build_H_numeric(z, max_weight, eval_tol);
    const WordSeries<double> back = build_H_numeric(z - 1, max_weight, eval_tol);

    FlatHResult out;
    out.report.suite = "flat-h";
    out.report.parameters["z"] = std::to_string(z);
    out.report.parameters["max_weight"] = std::to_string(max_weight);
    out.report.parameters["tol_residual"] = std::to_string(tol_residual);
    for (const auto& [w, value] : here.terms) {
        const double lhs = value - back.coeff(w);
        const double rhs =
            w.empty() ? 0.0 : -std::pow(z - 1.0, -w.front()) * here.coeff(w.tail());
        const double resid = std::abs(lhs - rhs);
        out.max_residual = std::max(out.max_residual, resid);
        std::ostringstream li, ri;
        li.precision(15);
        ri.precision(15);
        li << lhs;
        ri << rhs;
        out.report.add(w.str(), li.str(), ri.str(), resid < tol_residual);
    }
    out.report.finalize();
    return out;
}

}  // namespace polyzeta
