#pragma once

#include "polyzeta/lincomb.hpp"
#include "polyzeta/word.hpp"

namespace polyzeta {

/// Stuffle (quasi-shuffle) product, defined on letters-and-tails by
///   y_k w * y_k' w' = y_k (w * y_k' w') + y_k' (y_k w * w') + y_{k+k'} (w * w')
/// with the unit word as identity. Memoized on word pairs.
LinComb stuffle(const Word& a, const Word& b);

/// Bilinear extension.
LinComb stuffle(const LinComb& a, const LinComb& b);

/// Deconcatenation-style coproduct dual to the stuffle product. On a letter,
/// Y_k splits as sum_{i+j=k, i,j>=0} Y_i (x) Y_j with Y_0 read as the unit;
/// extended to words multiplicatively (leg-wise concatenation).
TensorLinComb coproduct(const Word& w);

/// Leg-wise concatenation product of tensors.
TensorLinComb tensor_concat(const TensorLinComb& a, const TensorLinComb& b);

/// True iff the coefficient of (w1, w2) in coproduct(W) equals the
/// coefficient of W in stuffle(w1, w2).
bool duality_pairing_check(const Word& w1, const Word& w2, const Word& W);

}  // namespace polyzeta
