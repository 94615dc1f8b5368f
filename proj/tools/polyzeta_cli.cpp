// polyzeta command line: exact multiple-Bernoulli / stuffle computations,
// numeric polyzeta evaluation, and the verification sweeps.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or domain error.

#include "polyzeta/connection.hpp"
#include "polyzeta/hurwitz.hpp"
#include "polyzeta/independence.hpp"
#include "polyzeta/json_io.hpp"
#include "polyzeta/ncseries.hpp"
#include "polyzeta/nmbp.hpp"
#include "polyzeta/regularize.hpp"
#include "polyzeta/stuffle.hpp"
#include "polyzeta/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>

namespace {

using namespace polyzeta;

double parse_real(const std::string& s) {
    if (s.find('.') != std::string::npos || s.find('e') != std::string::npos ||
        s.find('E') != std::string::npos)
        return std::stod(s);
    return Rational::parse(s).to_double();
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int finish_report(const Report& rep, bool json, const std::string& out_file, bool verbose) {
    if (!out_file.empty()) {
        std::ofstream f(out_file);
        if (!f) {
            std::cerr << "error: cannot write " << out_file << "\n";
            return 2;
        }
        f << to_json(rep).dump(2) << "\n";
    }
    if (json) {
        emit(to_json(rep));
    } else {
        for (const auto& inst : rep.instances) {
            if (!inst.pass || rep.experiment || verbose)
                std::cout << (inst.pass ? "ok   " : "FAIL ") << inst.input << "  lhs=" << inst.lhs
                          << "  rhs=" << inst.rhs << "\n";
        }
        std::cout << rep.summary << "\n";
    }
    return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"polyzeta: stuffle algebra, normalized multiple Bernoulli polynomials,\n"
                 "Hurwitz polyzeta numerics, and difference-equation verification"};
    app.require_subcommand(1);
    std::function<int()> action;

    bool json = false;
    app.add_flag("--json", json, "machine-readable JSON output");

    // ---- nmbp ----------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("nmbp", "normalized multiple Bernoulli polynomial");
        cmd->fallthrough();
        auto tuple = std::make_shared<std::string>();
        cmd->add_option("--tuple", *tuple, "non-positive arguments, e.g. 0,-3,-1")->required();
        cmd->callback([&, tuple] {
            action = [&, tuple]() -> int {
                const NegTuple t = NegTuple::parse(*tuple);
                const Poly p = nmbp(t);
                if (json)
                    emit(nmbp_result_json(t, p));
                else
                    std::cout << "nmbp" << t.str() << " = " << to_string(p) << "\n";
                return 0;
            };
        });
    }

    // ---- mzv-neg -------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("mzv-neg", "regularized zeta value at non-positive arguments");
        cmd->fallthrough();
        auto tuple = std::make_shared<std::string>();
        auto at = std::make_shared<std::string>("1");
        cmd->add_option("--tuple", *tuple, "non-positive arguments, e.g. 0,-3,-1")->required();
        cmd->add_option("--at", *at, "rational evaluation point (default 1)");
        cmd->callback([&, tuple, at] {
            action = [&, tuple, at]() -> int {
                const NegTuple t = NegTuple::parse(*tuple);
                const Rational point = Rational::parse(*at);
                const Rational v = mzv_neg(t, point);
                if (json)
                    emit(Json{{"tuple", to_json(t)}, {"at", point.str()}, {"value", v.str()}});
                else
                    std::cout << v.pretty() << "\n";
                return 0;
            };
        });
    }

    // ---- stuffle -------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("stuffle", "stuffle product of two words");
        cmd->fallthrough();
        auto words = std::make_shared<std::vector<std::string>>();
        cmd->add_option("--word", *words, "word, e.g. 2,1 (give exactly twice)")
            ->required()
            ->expected(2);
        cmd->callback([&, words] {
            action = [&, words]() -> int {
                const Word a = Word::parse((*words)[0]);
                const Word b = Word::parse((*words)[1]);
                const LinComb result = stuffle(a, b);
                if (json)
                    emit(to_json(result));
                else
                    std::cout << a.str() << " * " << b.str() << " = " << result.str() << "\n";
                return 0;
            };
        });
    }

    // ---- coproduct -----------------------------------------------------
    {
        auto* cmd = app.add_subcommand("coproduct", "stuffle-dual coproduct of a word");
        cmd->fallthrough();
        auto word = std::make_shared<std::string>();
        cmd->add_option("--word", *word, "word, e.g. 2,1")->required();
        cmd->callback([&, word] {
            action = [&, word]() -> int {
                const Word w = Word::parse(*word);
                const TensorLinComb result = coproduct(w);
                if (json)
                    emit(to_json(result));
                else
                    std::cout << "coproduct" << w.str() << " = " << result.str() << "\n";
                return 0;
            };
        });
    }

    // ---- regularize ----------------------------------------------------
    {
        auto* cmd = app.add_subcommand("regularize", "stuffle regularization of a word");
        cmd->fallthrough();
        auto word = std::make_shared<std::string>();
        cmd->add_option("--word", *word, "word, e.g. 2,1,1")->required();
        cmd->callback([&, word] {
            action = [&, word]() -> int {
                const Word w = Word::parse(*word);
                const RegElement r = stuffle_regularize(w);
                if (json)
                    emit(to_json(r));
                else
                    std::cout << "reg" << w.str() << " = " << r.str() << "\n";
                return 0;
            };
        });
    }

    // ---- hurwitz-eval --------------------------------------------------
    {
        auto* cmd = app.add_subcommand("hurwitz-eval", "numeric Hurwitz polyzeta value");
        cmd->fallthrough();
        auto word = std::make_shared<std::string>();
        auto z = std::make_shared<std::string>("1");
        auto tol = std::make_shared<double>(1e-8);
        auto regularized = std::make_shared<bool>(false);
        cmd->add_option("--word", *word, "word, e.g. 1,2")->required();
        cmd->add_option("--z", *z, "evaluation point > 0, rational string");
        cmd->add_option("--tol", *tol, "relative tolerance (default 1e-8)");
        cmd->add_flag("--regularized", *regularized,
                      "regularize trailing-1 words instead of rejecting them");
        cmd->callback([&, word, z, tol, regularized] {
            action = [&, word, z, tol, regularized]() -> int {
                const Word w = Word::parse(*word);
                const double zv = parse_real(*z);
                const EvalResult r =
                    *regularized ? regularized_numeric(w, zv, *tol) : hurwitz_polyzeta(w, zv, *tol);
                if (json)
                    emit(to_json(r));
                else
                    std::cout << r.value << "  (tol " << r.tol << ", terms " << r.terms_used
                              << ")\n";
                return 0;
            };
        });
    }

    // ---- digamma -------------------------------------------------------
    {
        auto* cmd = app.add_subcommand(
            "digamma", "digamma value (the regularized depth-one zeta is its negative)");
        cmd->fallthrough();
        auto z = std::make_shared<std::string>();
        cmd->add_option("--z", *z, "argument > 0, rational string")->required();
        cmd->callback([&, z] {
            action = [&, z]() -> int {
                const double v = digamma(parse_real(*z));
                if (json)
                    emit(Json{{"value", v}});
                else
                    std::cout << v << "\n";
                return 0;
            };
        });
    }

    // ---- flatness ------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("flatness", "difference-equation check of a generating series");
        cmd->fallthrough();
        auto series = std::make_shared<std::string>("hb");
        auto max_depth = std::make_shared<int>(3);
        auto max_index = std::make_shared<int>(4);
        auto max_weight = std::make_shared<int>(5);
        auto z = std::make_shared<std::string>("3");
        auto tol = std::make_shared<double>(1e-6);
        auto out = std::make_shared<std::string>();
        auto verbose = std::make_shared<bool>(false);
        cmd->add_option("--series", *series, "hb (exact) or h (numeric)")
            ->check(CLI::IsMember({"hb", "h"}));
        cmd->add_option("--max-depth", *max_depth, "hb: depth bound (default 3)");
        cmd->add_option("--max-index", *max_index, "hb: index bound (default 4)");
        cmd->add_option("--max-weight", *max_weight, "h: weight bound (default 5)");
        cmd->add_option("--z", *z, "h: sample point > 2 (default 3)");
        cmd->add_option("--tol", *tol, "h: residual threshold (default 1e-6)");
        cmd->add_option("--out", *out, "write the JSON report to a file");
        cmd->add_flag("--verbose", *verbose, "print every instance");
        cmd->callback([&, series, max_depth, max_index, max_weight, z, tol, out, verbose] {
            action = [&, series, max_depth, max_index, max_weight, z, tol, out, verbose]() -> int {
                Report rep;
                if (*series == "hb") {
                    rep = check_flat_HB(build_HB(*max_depth, *max_index));
                } else {
                    const FlatHResult res = check_flat_H(parse_real(*z), *max_weight, *tol);
                    if (!json) std::cout << "max residual " << res.max_residual << "\n";
                    rep = res.report;
                }
                return finish_report(rep, json, *out, *verbose);
            };
        });
    }

    // ---- verify --------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("verify", "run a verification sweep");
        cmd->fallthrough();
        auto suite = std::make_shared<std::string>();
        auto max_depth = std::make_shared<int>(-1);
        auto max_index = std::make_shared<int>(-1);
        auto max_weight = std::make_shared<int>(-1);
        auto instances = std::make_shared<int>(-1);
        auto seed = std::make_shared<std::uint64_t>(20240901ULL);
        auto zs = std::make_shared<std::vector<std::string>>();
        auto tol = std::make_shared<double>(-1.0);
        auto out = std::make_shared<std::string>();
        auto verbose = std::make_shared<bool>(false);
        cmd->add_option("--suite", *suite,
                        "b0 | props | flat-hb | flat-h | leibniz | psi | stuffle-char | conjecture")
            ->required()
            ->check(CLI::IsMember({"b0", "props", "flat-hb", "flat-h", "leibniz", "psi",
                                   "stuffle-char", "conjecture"}));
        cmd->add_option("--max-depth", *max_depth, "tuple depth bound");
        cmd->add_option("--max-index", *max_index, "tuple index bound");
        cmd->add_option("--max-weight", *max_weight, "word weight bound");
        cmd->add_option("--instances", *instances, "random instance count");
        cmd->add_option("--seed", *seed, "random seed");
        cmd->add_option("--z", *zs, "sample points (repeatable)");
        cmd->add_option("--tol", *tol, "residual threshold");
        cmd->add_option("--out", *out, "write the JSON report to a file");
        cmd->add_flag("--verbose", *verbose, "print every instance");
        cmd->callback([&, suite, max_depth, max_index, max_weight, instances, seed, zs, tol, out,
                       verbose] {
            action = [&, suite, max_depth, max_index, max_weight, instances, seed, zs, tol, out,
                      verbose]() -> int {
                auto depth_or = [&](int d) { return *max_depth > 0 ? *max_depth : d; };
                auto index_or = [&](int d) { return *max_index >= 0 ? *max_index : d; };
                auto weight_or = [&](int d) { return *max_weight > 0 ? *max_weight : d; };
                auto count_or = [&](int d) { return *instances > 0 ? *instances : d; };
                auto tol_or = [&](double d) { return *tol > 0 ? *tol : d; };
                std::vector<double> zvals;
                for (const auto& s : *zs) zvals.push_back(parse_real(s));

                Report rep;
                if (*suite == "b0") {
                    rep = run_b0_suite(depth_or(3), index_or(4));
                } else if (*suite == "props") {
                    rep = run_props_suite();
                } else if (*suite == "flat-hb") {
                    rep = run_flat_hb_suite(depth_or(3), index_or(4));
                } else if (*suite == "flat-h") {
                    if (zvals.empty()) zvals = {2.5, 3.0, 4.0};
                    rep = run_flat_h_suite(zvals, weight_or(5), tol_or(1e-6));
                } else if (*suite == "leibniz") {
                    rep = run_leibniz_suite(count_or(100), *seed);
                } else if (*suite == "psi") {
                    rep = run_psi_suite(count_or(50), *seed);
                } else if (*suite == "stuffle-char") {
                    if (zvals.empty()) zvals = {1.0, 1.5, 2.0};
                    rep = run_stuffle_char_suite(weight_or(6), zvals, tol_or(1e-7));
                } else {  // conjecture
                    rep = run_conjecture_suite(depth_or(3));
                }
                return finish_report(rep, json, *out, *verbose);
            };
        });
    }

    // ---- psi-map -------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("psi-map", "apply the versal map of a unipotent connection");
        cmd->fallthrough();
        auto conn_file = std::make_shared<std::string>();
        auto vec = std::make_shared<std::string>();
        auto series_file = std::make_shared<std::string>();
        cmd->add_option("--connection", *conn_file, "connection JSON file")->required();
        cmd->add_option("--vector", *vec, "fiber vector, e.g. 1,0 or 1/2,0")->required();
        cmd->add_option("--series", *series_file,
                        "positive-alphabet series JSON file (default: unit series)");
        cmd->callback([&, conn_file, vec, series_file] {
            action = [&, conn_file, vec, series_file]() -> int {
                std::ifstream f(*conn_file);
                if (!f) {
                    std::cerr << "error: cannot read " << *conn_file << "\n";
                    return 2;
                }
                const UnipotentDiffConnection conn = connection_from_json(Json::parse(f));

                std::vector<std::string> parts;
                std::string cur;
                for (char c : *vec) {
                    if (c == ',') {
                        parts.push_back(cur);
                        cur.clear();
                    } else {
                        cur += c;
                    }
                }
                parts.push_back(cur);
                if (static_cast<int>(parts.size()) != conn.rank()) {
                    std::cerr << "error: vector length " << parts.size() << " != rank "
                              << conn.rank() << "\n";
                    return 2;
                }
                RatVector v(conn.rank());
                for (int i = 0; i < conn.rank(); ++i)
                    v(i) = Rational::parse(parts[static_cast<std::size_t>(i)]);

                WordSeries<Poly> s;
                if (series_file->empty()) {
                    s.max_weight = 0;
                    s.terms.emplace(Word::unit(), Poly(Rational(1)));
                } else {
                    std::ifstream sf(*series_file);
                    if (!sf) {
                        std::cerr << "error: cannot read " << *series_file << "\n";
                        return 2;
                    }
                    s = word_series_poly_from_json(Json::parse(sf));
                }

                const VectorSection result = psi_v(conn, v, s);
                if (json) {
                    emit(to_json(result));
                } else {
                    for (const auto& e : result.entries) std::cout << to_string(e) << "\n";
                }
                return 0;
            };
        });
    }

    // ---- independence-check ---------------------------------------------
    {
        auto* cmd = app.add_subcommand(
            "independence-check",
            "numeric nonsingularity witness for a panel of polyzeta values (heuristic)");
        cmd->fallthrough();
        cmd->callback([&] {
            action = [&]() -> int {
                const IndependenceResult r = independence_check();
                if (json) {
                    emit(to_json(r));
                } else {
                    std::cout << "condition number " << r.condition_number << " (threshold "
                              << r.threshold << ")\n"
                              << (r.pass ? "PASS" : "FAIL") << "\n";
                }
                return r.pass ? 0 : 1;
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        return action();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
