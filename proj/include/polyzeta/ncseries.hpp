#pragma once

#include "polyzeta/polynomial.hpp"
#include "polyzeta/report.hpp"
#include "polyzeta/word.hpp"

#include <map>

namespace polyzeta {

/// Truncated series over the positive alphabet, one coefficient per word of
/// weight <= max_weight. The unit word always carries coefficient 1.
template <class Coeff>
struct WordSeries {
    int max_weight = 0;
    std::map<Word, Coeff> terms;

    Coeff coeff(const Word& w) const {
        auto it = terms.find(w);
        return it == terms.end() ? Coeff(0) : it->second;
    }
};

/// Truncated series over the non-positive alphabet: one coefficient per
/// tuple with depth <= max_depth and every magnitude <= max_index.
template <class Coeff>
struct NegSeries {
    int max_depth = 0;
    int max_index = 0;
    Coeff unit_coeff = Coeff(1);
    std::map<NegTuple, Coeff> terms;

    Coeff coeff(const NegTuple& t) const {
        auto it = terms.find(t);
        return it == terms.end() ? Coeff(0) : it->second;
    }
};

/// Generating series of the normalized multiple Bernoulli polynomials:
/// coefficient of Y_{-k_1}...Y_{-k_r} is nmbp(k_1,...,k_r); unit coefficient 1.
NegSeries<Poly> build_HB(int max_depth, int max_index);

/// Exact per-word check of the difference equation of build_HB's series,
///   H_B(z+1) - H_B(z) = -sum_k Y_{-k} z^k H_B(z+1):
/// the coefficient identity at each stored word only involves that word's
/// first letter and its tail, both inside the truncation.
Report check_flat_HB(const NegSeries<Poly>& series);

/// Generating series of Hurwitz polyzeta values at z (z > 1): convergent
/// words by direct summation, trailing-1 words by stuffle regularization.
WordSeries<double> build_H_numeric(double z, int max_weight, double tol = 1e-9);

struct FlatHResult {
    double max_residual = 0.0;
    Report report;
};

/// Residuals of the difference equation
///   H(z) - H(z-1) = -sum_k Y_k (z-1)^{-k} H(z)
/// coefficient-wise over all stored words; pass threshold `tol_residual`.
FlatHResult check_flat_H(double z, int max_weight, double tol_residual = 1e-6,
                         double eval_tol = 1e-9);

}  // namespace polyzeta
