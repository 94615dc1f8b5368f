#pragma once

#include "polyzeta/polynomial.hpp"
#include "polyzeta/rational.hpp"

namespace polyzeta {

/// n-th Bernoulli number in the B(0) convention: B_1 = -1/2.
///
/// Note the sign convention. The other common normalization has B_1 = +1/2;
/// everything in this library (difference solver, evaluations at 0 and 1,
/// the identity B_n(1) = (-1)^n B_n(0)) is wired to B_1 = -1/2.
/// Memoized; safe for concurrent callers.
Rational bernoulli_number(int n);

/// Bernoulli polynomial B_n(z) = sum_j C(n,j) B_j z^(n-j), exact.
Poly bernoulli_poly(int n);

/// For f(z) = sum a_n z^n returns sum a_n B_{n+1}(z)/(n+1).
///
/// This is the canonical antidifference: the result u satisfies
/// u(z+1) - u(z) = f(z) with the Bernoulli normalization of the constant.
Poly bernoulli_substitute(const Poly& f);

}  // namespace polyzeta
