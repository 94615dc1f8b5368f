#pragma once

#include "polyzeta/word.hpp"

namespace polyzeta {

/// Digamma psi(x) for x > 0, absolute error well under 1e-12.
///
/// Upward recurrence psi(x+1) = psi(x) + 1/x pushes the argument above 16,
/// then the log asymptotic with Bernoulli-number coefficients (taken from
/// the exact layer) finishes the job.
double digamma(double x);

struct EvalResult {
    double value = 0.0;
    double tol = 0.0;     // relative error actually certified (grid-doubling check)
    long terms_used = 0;  // summation grid points consumed
};

/// Nested Hurwitz polyzeta value
///   zeta(s_1,...,s_r | z) = sum_{0<=n_1<...<n_r} prod (z+n_j)^{-s_j}
/// for a convergent word (unit or last index >= 2) at z > 0. The unit word
/// evaluates to 1.
///
/// Each nesting level runs an exact backward recurrence
///   f_j(v) = v^{-s_j} f_{j+1}(v+1) + f_j(v+1)
/// over a short grid, seeded at the far end by an asymptotic tail expansion
/// in 1/v. The expansions are built bottom-up: Euler-Maclaurin gives the
/// depth-one tail in closed form, and each additional level re-expands and
/// integrates the previous one. The grid is doubled until two runs agree
/// within the requested relative tolerance; the agreement actually achieved
/// is reported back in EvalResult::tol.
EvalResult hurwitz_polyzeta(const Word& w, double z, double tol = 1e-8);

/// Value of the regularized polyzeta: stuffle-regularize the word, then
/// substitute T -> -digamma(z) and each convergent word by its numeric value.
/// Agrees with hurwitz_polyzeta on convergent words.
EvalResult regularized_numeric(const Word& w, double z, double tol = 1e-8);

/// Residual |zeta(w|z+1) - zeta(w|z) + z^{-k_1} zeta(tail|z+1)| of the shift
/// identity, computed with regularized values so trailing-1 words are
/// included; requires z > 1.
double difference_residual(const Word& w, double z, double tol = 1e-8);

}  // namespace polyzeta
