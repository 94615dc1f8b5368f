#include "polyzeta/hurwitz.hpp"

#include "polyzeta/bernoulli.hpp"
#include "polyzeta/regularize.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

namespace polyzeta {

namespace {

double rising_d(double a, int m) {
    double acc = 1.0;
    for (int i = 0; i < m; ++i) acc *= a + i;
    return acc;
}

// Asymptotic tail expansion sum_i c[i] * u^-(min_exp + i), valid u -> infinity.
struct TailExpansion {
    int min_exp = 1;
    std::vector<double> c;

    double eval(double u) const {
        const double inv = 1.0 / u;
        double acc = 0.0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * inv + *it;
        return acc * std::pow(u, -min_exp);
    }
};

constexpr int kOrder = 24;  // coefficients kept per expansion

// Euler-Maclaurin expansion of the depth-one tail zeta(s|u):
//   u^(1-s)/(s-1) + u^(-s)/2 + sum_k B_{2k} rising(s,2k-1)/(2k)! u^(-s-2k+1)
TailExpansion depth_one_expansion(int s) {
    TailExpansion e;
    e.min_exp = s - 1;
    e.c.assign(kOrder, 0.0);
    e.c[0] = 1.0 / (s - 1);
    e.c[1] = 0.5;
    for (int k = 1; 2 * k < kOrder; ++k) {
        const double b2k = bernoulli_number(2 * k).to_double();
        double fact = 1.0;
        for (int i = 2; i <= 2 * k; ++i) fact *= i;
        e.c[static_cast<std::size_t>(2 * k)] = b2k * rising_d(s, 2 * k - 1) / fact;
    }
    return e;
}

// Given the expansion of f, produce the expansion of
//   F(v) = sum_{n>=0} (v+n)^{-s} f(v+n+1).
TailExpansion push_level(const TailExpansion& f, int s) {
    // phi(u) = u^{-s} f(u+1); re-expand (u+1)^{-d} = sum_m (-1)^m C(d+m-1,m) u^{-d-m}
    const int phi_min = s + f.min_exp;
    std::vector<double> b(kOrder, 0.0);
    for (int i = 0; i < kOrder; ++i) {
        const int d = f.min_exp + i;
        double binom = 1.0;
        for (int m = 0; i + m < kOrder; ++m) {
            b[static_cast<std::size_t>(i + m)] +=
                f.c[static_cast<std::size_t>(i)] * (m % 2 ? -binom : binom);
            binom = binom * (d + m) / (m + 1);
        }
    }
    // Euler-Maclaurin for F(v) = sum_n phi(v+n):
    //   integral_v^inf phi + phi(v)/2 + sum_k B_{2k}/(2k)! rising(e,2k-1) b_e v^{-(e+2k-1)}
    TailExpansion F;
    F.min_exp = phi_min - 1;
    F.c.assign(kOrder, 0.0);
    for (int t = 0; t < kOrder; ++t) {
        const int D = F.min_exp + t;
        double acc = b[static_cast<std::size_t>(t)] / D;  // integral term, e = D+1
        if (t >= 1) acc += 0.5 * b[static_cast<std::size_t>(t - 1)];  // boundary, e = D
        for (int k = 1; t - 2 * k >= 0; ++k) {  // derivative terms, e = D - 2k + 1
            const int idx = t - 2 * k;
            const int e = phi_min + idx;
            double fact = 1.0;
            for (int i = 2; i <= 2 * k; ++i) fact *= i;
            acc += bernoulli_number(2 * k).to_double() / fact * rising_d(e, 2 * k - 1) *
                   b[static_cast<std::size_t>(idx)];
        }
        F.c[static_cast<std::size_t>(t)] = acc;
    }
    return F;
}

// Expansions for every suffix of the word, one per level, innermost last.
std::vector<TailExpansion> suffix_expansions(std::span<const int> idx) {
    const int r = static_cast<int>(idx.size());
    std::vector<TailExpansion> out(static_cast<std::size_t>(r));
    out[static_cast<std::size_t>(r - 1)] = depth_one_expansion(idx[static_cast<std::size_t>(r - 1)]);
    for (int j = r - 2; j >= 0; --j)
        out[static_cast<std::size_t>(j)] =
            push_level(out[static_cast<std::size_t>(j + 1)], idx[static_cast<std::size_t>(j)]);
    return out;
}

// One full evaluation with grid length M: exact backward recurrences
//   f_j(v) = v^{-s_j} f_{j+1}(v+1) + f_j(v+1)
// seeded at v = z+M by the tail expansions.
double eval_on_grid(std::span<const int> idx, const std::vector<TailExpansion>& tails, double z,
                    int M, long& terms) {
    const int r = static_cast<int>(idx.size());
    std::vector<double> inner;
    std::vector<double> cur(static_cast<std::size_t>(M) + 1);
    for (int j = r - 1; j >= 0; --j) {
        const int s = idx[static_cast<std::size_t>(j)];
        cur[static_cast<std::size_t>(M)] = tails[static_cast<std::size_t>(j)].eval(z + M);
        for (int m = M - 1; m >= 0; --m) {
            const double in = (j == r - 1) ? 1.0 : inner[static_cast<std::size_t>(m) + 1];
            cur[static_cast<std::size_t>(m)] =
                cur[static_cast<std::size_t>(m) + 1] + std::pow(z + m, -s) * in;
            ++terms;
        }
        inner = cur;
    }
    return cur[0];
}

}  // namespace

double digamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("digamma: argument must be > 0");
    double acc = 0.0;
    while (x < 16.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    static const std::vector<double> coeff = [] {
        std::vector<double> c;
        for (int k = 1; k <= 8; ++k) c.push_back(bernoulli_number(2 * k).to_double() / (2 * k));
        return c;
    }();
    const double inv2 = 1.0 / (x * x);
    double series = 0.0, p = inv2;
    for (double ck : coeff) {
        series += ck * p;
        p *= inv2;
    }
    return acc + std::log(x) - 0.5 / x - series;
}

EvalResult hurwitz_polyzeta(const Word& w, double z, double tol) {
    if (!(z > 0.0)) throw std::domain_error("hurwitz_polyzeta: z must be > 0");
    if (!(tol > 0.0 && tol < 1.0)) throw std::invalid_argument("hurwitz_polyzeta: tol must be in (0,1)");
    if (!w.convergent())
        throw std::invalid_argument("hurwitz_polyzeta: non-convergent word " + w.str());
    if (w.empty()) return {1.0, 0.0, 0};

    const auto tails = suffix_expansions(w.indices());
    // the seeds need z+M comfortably inside the asymptotic regime
    int M = std::max(16, static_cast<int>(std::ceil(2.0 * kOrder - z)));
    EvalResult res;
    double prev = eval_on_grid(w.indices(), tails, z, M, res.terms_used);
    for (int attempt = 0; attempt < 6; ++attempt) {
        const double next = eval_on_grid(w.indices(), tails, z, 2 * M, res.terms_used);
        const double diff = std::abs(next - prev);
        const double scale = std::max(std::abs(next), 1e-300);
        res.value = next;
        res.tol = std::max(diff / scale, 8e-16);
        if (res.tol <= tol) return res;
        prev = next;
        M *= 2;
    }
    return res;  // best effort; tol reports what was achieved
}

EvalResult regularized_numeric(const Word& w, double z, double tol) {
    if (!(z > 0.0)) throw std::domain_error("regularized_numeric: z must be > 0");
    const RegElement reg = stuffle_regularize(w);
    const double t_value = -digamma(z);
    EvalResult out;
    double abs_err = 0.0;
    for (const auto& [deg, comb] : reg.coeffs()) {
        const double t_pow = std::pow(t_value, deg);
        for (const auto& [cw, coeff] : comb.terms()) {
            const EvalResult part = hurwitz_polyzeta(cw, z, tol / 4);
            const double contrib = coeff.to_double() * t_pow * part.value;
            out.value += contrib;
            out.terms_used += part.terms_used;
            abs_err += std::abs(contrib) * part.tol + std::abs(coeff.to_double() * t_pow) * 1e-13;
        }
    }
    out.tol = abs_err / std::max(std::abs(out.value), 1e-300);
    return out;
}

double difference_residual(const Word& w, double z, double tol) {
    if (!(z > 1.0)) throw std::domain_error("difference_residual: z must be > 1");
    if (w.empty()) return 0.0;
    const double lhs = regularized_numeric(w, z + 1, tol).value - regularized_numeric(w, z, tol).value;
    const double rhs = -std::pow(z, -w.front()) * regularized_numeric(w.tail(), z + 1, tol).value;
    return std::abs(lhs - rhs);
}

}  // namespace polyzeta
