#pragma once

#include "polyzeta/bernoulli.hpp"
#include "polyzeta/polynomial.hpp"
#include "polyzeta/word.hpp"

namespace polyzeta {

/// Unique polynomial u with u(z+1) - u(z) = q(z) under the Bernoulli
/// normalization: q = sum a_n z^n maps to u = sum a_n B_{n+1}(z)/(n+1),
/// with no extra constant. This pins the period-1 ambiguity of the
/// difference equation so that depth one reproduces -B_{k+1}(z)/(k+1).
Poly solve_difference(const Poly& q);

/// Normalized multiple Bernoulli polynomial for arguments (-k_1,...,-k_r).
///
/// Depth 1 is -B_{k+1}(z)/(k+1); depth r solves
///   u(z+1) - u(z) = -z^{k_1} * nmbp(k_2,...,k_r)(z+1)
/// via solve_difference. Memoized; this is the production path.
Poly nmbp(const NegTuple& t);

/// Independent evaluation of the same polynomial by the merge recursion:
///   nmbp(k_1..k_r) = -1/(k_r+1) nmbp(..., k_{r-1}+k_r+1)
///                    - 1/2 nmbp(..., k_{r-1}+k_r)
///                    + sum_{q=1}^{k_r} rising(-k_r, q) B_{q+1}/(q+1)! nmbp(..., k_{r-1}+k_r-q)
/// where the merged index replaces the last slot of the depth-(r-1) prefix.
/// Exists solely as a cross-validation oracle for nmbp(); never serves values.
Poly nmbp_closed_form(const NegTuple& t);

/// nmbp(t) evaluated at a rational point; `at` = 1 gives the regularized
/// multiple zeta value at the non-positive arguments.
Rational mzv_neg(const NegTuple& t, const Rational& at);

/// Exact coefficient-wise check of the defining difference equation
///   V(t|z+1) - V(t|z) = -z^{k_1} V(tail|z+1)
/// for the stored polynomial; requires depth >= 2.
bool verify_b0(const NegTuple& t);

/// The repeated-zero tuple (0,...,0) of the given depth.
NegTuple repeated_zero(int depth);

/// Rising factorial a(a+1)...(a+q-1) as an exact rational.
Rational rising_factorial(int a, int q);

}  // namespace polyzeta
