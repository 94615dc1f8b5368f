#include "polyzeta/suites.hpp"

#include "polyzeta/connection.hpp"
#include "polyzeta/hurwitz.hpp"
#include "polyzeta/ncseries.hpp"
#include "polyzeta/nmbp.hpp"
#include "polyzeta/stuffle.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace polyzeta {

namespace {

std::string fmt_double(double v) {
    std::ostringstream os;
    os.precision(15);
    os << v;
    return os.str();
}

}  // namespace

Report run_b0_suite(int max_depth, int max_index) {
    Report rep;
    rep.suite = "b0";
    rep.parameters["max_depth"] = std::to_string(max_depth);
    rep.parameters["max_index"] = std::to_string(max_index);
    for (const NegTuple& t : neg_tuples_up_to(max_depth, max_index)) {
        if (t.depth() < 2) continue;
        const Poly v = nmbp(t);
        const Poly lhs = shift_up(v) - v;
        const Poly rhs = Rational(-1) * Poly::monomial(t.front()) * shift_up(nmbp(t.tail()));
        rep.add(t.str(), to_string(lhs), to_string(rhs), lhs == rhs);
    }
    rep.finalize();
    return rep;
}

Report run_oracle_suite(int max_depth, int max_index) {
    Report rep;
    rep.suite = "oracle";
    rep.parameters["max_depth"] = std::to_string(max_depth);
    rep.parameters["max_index"] = std::to_string(max_index);
    for (const NegTuple& t : neg_tuples_up_to(max_depth, max_index)) {
        const Poly a = nmbp(t);
        const Poly b = nmbp_closed_form(t);
        const bool degree_ok = a.degree() == t.weight() + t.depth();
        rep.add(t.str(), to_string(a), to_string(b), a == b && degree_ok);
    }
    rep.finalize();
    return rep;
}

Report run_props_suite(const PropsBounds& b) {
    Report rep;
    rep.suite = "props";
    rep.parameters["prod_identity_max_n"] = std::to_string(b.prod_identity_max_n);
    rep.parameters["swap_identity_max_n"] = std::to_string(b.swap_identity_max_n);
    rep.parameters["middle_zero_max_n"] = std::to_string(b.middle_zero_max_n);
    rep.parameters["repeated_zero_max_r"] = std::to_string(b.repeated_zero_max_r);
    rep.parameters["at_minus_one_max_r"] = std::to_string(b.at_minus_one_max_r);
    rep.parameters["pair_recursion_max_t"] = std::to_string(b.pair_recursion_max_t);
    rep.parameters["eval01_max_depth"] = std::to_string(b.eval01_max_depth);
    rep.parameters["eval01_max_index"] = std::to_string(b.eval01_max_index);

    const Rational one(1), zero(0);

    // zeta(0) zeta(-2n-1) = zeta(-2n+k-1,-k|1)
    for (int n = 1; n <= b.prod_identity_max_n; ++n) {
        const Rational lhs = mzv_neg(NegTuple({0}), one) * mzv_neg(NegTuple({2 * n + 1}), one);
        for (int k = 0; k <= 2 * n + 1; ++k) {
            const Rational rhs = mzv_neg(NegTuple({2 * n + 1 - k, k}), one);
            std::ostringstream in;
            in << "zeta(0)zeta(" << -(2 * n + 1) << ") = zeta(" << -(2 * n + 1 - k) << "," << -k
               << "|1)";
            rep.add(in.str(), lhs.str(), rhs.str(), lhs == rhs);
        }
    }

    // zeta(-n,-n-1|1) = zeta(-n-1,-n|1)
    for (int n = 1; n <= b.swap_identity_max_n; ++n) {
        const Rational lhs = mzv_neg(NegTuple({n, n + 1}), one);
        const Rational rhs = mzv_neg(NegTuple({n + 1, n}), one);
        std::ostringstream in;
        in << "zeta(" << -n << "," << -(n + 1) << "|1) = zeta(" << -(n + 1) << "," << -n << "|1)";
        rep.add(in.str(), lhs.str(), rhs.str(), lhs == rhs);
    }

    // zeta(-2n1-1,0,-2n2-1|1) = -zeta(-2n1-1,-2n2-1|1)
    for (int n1 = 0; n1 <= b.middle_zero_max_n; ++n1)
        for (int n2 = 0; n2 <= b.middle_zero_max_n; ++n2) {
            const Rational lhs = mzv_neg(NegTuple({2 * n1 + 1, 0, 2 * n2 + 1}), one);
            const Rational rhs = -mzv_neg(NegTuple({2 * n1 + 1, 2 * n2 + 1}), one);
            std::ostringstream in;
            in << "zeta(" << -(2 * n1 + 1) << ",0," << -(2 * n2 + 1) << "|1) = -zeta("
               << -(2 * n1 + 1) << "," << -(2 * n2 + 1) << "|1)";
            rep.add(in.str(), lhs.str(), rhs.str(), lhs == rhs);
        }

    // zeta_r(0|1) = (-1)^r/(r+1), zeta_r(0|0) = (-1)^{r+1}/(r(r+1))
    for (int r = 1; r <= b.repeated_zero_max_r; ++r) {
        const Rational sign(r % 2 ? -1 : 1);
        {
            const Rational lhs = mzv_neg(repeated_zero(r), one);
            const Rational rhs = sign / Rational(r + 1);
            rep.add("zeta_" + std::to_string(r) + "(0|1)", lhs.str(), rhs.str(), lhs == rhs);
        }
        {
            const Rational lhs = mzv_neg(repeated_zero(r), zero);
            const Rational rhs = -sign / Rational(r * (r + 1));
            rep.add("zeta_" + std::to_string(r) + "(0|0)", lhs.str(), rhs.str(), lhs == rhs);
        }
    }

    // zeta_{r+1}(0|-1) = (-1)^{r+1} 2/((r+2)(r+1)r), and its twin
    // -subst(zeta_r(0|.))(0) with the same value
    for (int r = 1; r <= b.at_minus_one_max_r; ++r) {
        const Rational expected =
            Rational(r % 2 ? 2 : -2) / Rational(static_cast<std::int64_t>(r + 2) * (r + 1) * r);
        {
            const Rational lhs = mzv_neg(repeated_zero(r + 1), Rational(-1));
            rep.add("zeta_" + std::to_string(r + 1) + "(0|-1)", lhs.str(), expected.str(),
                    lhs == expected);
        }
        {
            const Rational lhs = -bernoulli_substitute(nmbp(repeated_zero(r))).evaluate(zero);
            rep.add("-subst_B(zeta_" + std::to_string(r) + "(0|.))(0)", lhs.str(), expected.str(),
                    lhs == expected);
        }
    }

    // pair recursion: zeta_t(0|z) + zeta_{t-1}(0|z) = -subst_B(zeta_{t-1}(0|.))(z)
    for (int t = 2; t <= b.pair_recursion_max_t; ++t) {
        const Poly lhs = nmbp(repeated_zero(t)) + nmbp(repeated_zero(t - 1));
        const Poly rhs = Rational(-1) * bernoulli_substitute(nmbp(repeated_zero(t - 1)));
        rep.add("zeta_" + std::to_string(t) + "(0|z) + zeta_" + std::to_string(t - 1) + "(0|z)",
                to_string(lhs), to_string(rhs), lhs == rhs);
    }

    // zeta(t|1) = zeta(t|0) when the first argument is strictly negative
    for (const NegTuple& t : neg_tuples_up_to(b.eval01_max_depth, b.eval01_max_index)) {
        if (t.front() == 0) continue;
        const Rational lhs = mzv_neg(t, one);
        const Rational rhs = mzv_neg(t, zero);
        rep.add("zeta" + t.str() + "|1 = |0", lhs.str(), rhs.str(), lhs == rhs);
    }

    rep.finalize();
    return rep;
}

Report run_flat_hb_suite(int max_depth, int max_index) {
    return check_flat_HB(build_HB(max_depth, max_index));
}

Report run_flat_h_suite(const std::vector<double>& zs, int max_weight, double tol_residual) {
    Report rep;
    rep.suite = "flat-h";
    rep.parameters["max_weight"] = std::to_string(max_weight);
    rep.parameters["tol_residual"] = fmt_double(tol_residual);
    std::string zlist;
    for (double z : zs) {
        if (!zlist.empty()) zlist += ",";
        zlist += fmt_double(z);
        const FlatHResult res = check_flat_H(z, max_weight, tol_residual);
        for (const auto& inst : res.report.instances)
            rep.add(inst.input + " @ z=" + fmt_double(z), inst.lhs, inst.rhs, inst.pass);
    }
    rep.parameters["zs"] = zlist;
    rep.finalize();
    return rep;
}

namespace {

class RandomAlgebra {
public:
    explicit RandomAlgebra(std::uint64_t seed) : rng_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    Rational rational() {
        return Rational(uniform(-3, 3), uniform(1, 3));
    }

    Poly poly(int max_degree) {
        std::vector<Rational> c;
        const int d = uniform(0, max_degree);
        for (int i = 0; i <= d; ++i) c.push_back(rational());
        return Poly(std::move(c));
    }

    RatMatrix strictly_upper(int rank) {
        RatMatrix m = RatMatrix::Zero(rank, rank);
        for (int i = 0; i < rank; ++i)
            for (int j = i + 1; j < rank; ++j) m(i, j) = rational();
        return m;
    }

    UnipotentDiffConnection connection(int max_rank) {
        const int rank = uniform(2, max_rank);
        const int cutoff = uniform(1, 3);
        std::map<int, RatMatrix> mats;
        for (int k = 1; k <= cutoff; ++k) mats.emplace(k, strictly_upper(rank));
        return UnipotentDiffConnection(rank, std::move(mats));
    }

    VectorSection section(int rank, int max_degree) {
        VectorSection s = VectorSection::zero(rank);
        for (auto& e : s.entries) e = poly(max_degree);
        return s;
    }

    RatVector vector(int rank) {
        RatVector v(rank);
        for (int i = 0; i < rank; ++i) v(i) = rational();
        return v;
    }

    WordSeries<Poly> word_series(int max_weight, int max_degree) {
        WordSeries<Poly> s;
        s.max_weight = max_weight;
        s.terms.emplace(Word::unit(), Poly(Rational(1)));
        for (const Word& w : words_up_to_weight(max_weight)) {
            if (w.empty()) continue;
            if (uniform(0, 2) == 0) continue;  // thin it out
            s.terms.emplace(w, poly(max_degree));
        }
        return s;
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace

Report run_leibniz_suite(int instances, std::uint64_t seed, int max_rank) {
    Report rep;
    rep.suite = "leibniz";
    rep.parameters["instances"] = std::to_string(instances);
    rep.parameters["seed"] = std::to_string(seed);
    rep.parameters["max_rank"] = std::to_string(max_rank);
    RandomAlgebra rand(seed);
    for (int i = 0; i < instances; ++i) {
        const auto conn = rand.connection(max_rank);
        const Poly f = rand.poly(3);
        const VectorSection s = rand.section(conn.rank(), 2);
        const bool pass = leibniz_check(conn, f, s);
        std::ostringstream in;
        in << "#" << i << " rank=" << conn.rank() << " cutoff=" << conn.cutoff()
           << " f=" << to_string(f);
        rep.add(in.str(), "product-rule lhs", "product-rule rhs", pass);
    }
    rep.finalize();
    return rep;
}

Report run_psi_suite(int instances, std::uint64_t seed, int max_rank, int max_weight) {
    Report rep;
    rep.suite = "psi";
    rep.parameters["instances"] = std::to_string(instances);
    rep.parameters["seed"] = std::to_string(seed);
    rep.parameters["max_rank"] = std::to_string(max_rank);
    rep.parameters["max_weight"] = std::to_string(max_weight);
    RandomAlgebra rand(seed);
    for (int i = 0; i < instances; ++i) {
        const auto conn = rand.connection(max_rank);
        const RatVector v = rand.vector(conn.rank());
        const WordSeries<Poly> s = rand.word_series(max_weight, 2);
        int deepest = 0;
        for (const auto& [w, f] : s.terms) {
            (void)f;
            deepest = std::max(deepest, w.depth());
        }
        const int length_bound = std::max(conn.rank() - 1, deepest);
        const bool pass = psi_compat_check(conn, v, s, length_bound);
        std::ostringstream in;
        in << "#" << i << " rank=" << conn.rank() << " terms=" << s.terms.size()
           << " length_bound=" << length_bound;
        rep.add(in.str(), "psi after universal connection", "connection after psi", pass);
    }
    rep.finalize();
    return rep;
}

Report run_stuffle_char_suite(int max_total_weight, const std::vector<double>& zs,
                              double rel_tol) {
    Report rep;
    rep.suite = "stuffle-char";
    rep.parameters["max_total_weight"] = std::to_string(max_total_weight);
    rep.parameters["rel_tol"] = fmt_double(rel_tol);
    std::string zlist;
    for (double z : zs) {
        if (!zlist.empty()) zlist += ",";
        zlist += fmt_double(z);
    }
    rep.parameters["zs"] = zlist;

    std::vector<Word> convergent;
    for (const Word& w : words_up_to_weight(max_total_weight - 2))
        if (!w.empty() && w.convergent()) convergent.push_back(w);

    const double eval_tol = 1e-11;
    for (std::size_t a = 0; a < convergent.size(); ++a)
        for (std::size_t b = a; b < convergent.size(); ++b) {
            const Word& w1 = convergent[a];
            const Word& w2 = convergent[b];
            if (w1.weight() + w2.weight() > max_total_weight) continue;
            const LinComb product = stuffle(w1, w2);
            for (double z : zs) {
                const double lhs = hurwitz_polyzeta(w1, z, eval_tol).value *
                                   hurwitz_polyzeta(w2, z, eval_tol).value;
                double rhs = 0.0;
                for (const auto& [w, c] : product.terms())
                    rhs += c.to_double() * hurwitz_polyzeta(w, z, eval_tol).value;
                const double rel = std::abs(lhs - rhs) / std::max(std::abs(lhs), 1e-300);
                rep.add(w1.str() + " * " + w2.str() + " @ z=" + fmt_double(z), fmt_double(lhs),
                        fmt_double(rhs), rel < rel_tol);
            }
        }
    rep.finalize();
    return rep;
}

Report run_conjecture_suite(int max_n) {
    Report rep;
    rep.suite = "conjecture";
    rep.experiment = true;
    rep.parameters["max_n"] = std::to_string(max_n);
    for (int n = 1; n <= max_n; ++n)
        for (int k = 1; k <= 2 * n; ++k) {
            const Poly lhs = nmbp(NegTuple({2 * n - k, 0, k}));
            const Poly rhs = nmbp(NegTuple({2 * n - k, k}));
            std::ostringstream in;
            in << "zeta(" << -(2 * n - k) << ",0," << -k << "|z) = zeta(" << -(2 * n - k) << ","
               << -k << "|z)";
            rep.add(in.str(), to_string(lhs), to_string(rhs), lhs == rhs);
            const Rational l1 = lhs.evaluate(Rational(1));
            const Rational r1 = rhs.evaluate(Rational(1));
            rep.add(in.str() + " at z=1", l1.str(), r1.str(), l1 == r1);
        }
    rep.finalize();
    return rep;
}

}  // namespace polyzeta
