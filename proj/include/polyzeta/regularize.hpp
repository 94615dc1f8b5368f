#pragma once

#include "polyzeta/lincomb.hpp"
#include "polyzeta/word.hpp"

namespace polyzeta {

/// Rewrites a word as a polynomial in T (the regularized depth-one divergent
/// value) with convergent-word coefficients.
///
/// Convergent words (and the unit) map to themselves in T-degree 0. A word
/// W = U.y1 is solved out of the product U * y1: that product contains W with
/// multiplicity (1 + number of trailing 1s of U), every other term either has
/// strictly fewer trailing 1s or is the lower-weight factor U itself, so the
/// rewriting terminates. The resulting map is the unique algebra section that
/// fixes convergent words and sends y1 to T; stuffle_regularize of a product
/// equals the product of the images (see reg_product).
RegElement stuffle_regularize(const Word& w);

/// Linear extension to combinations of words.
RegElement stuffle_regularize(const LinComb& c);

/// Product of regularized elements: stuffle on the word coefficients,
/// ordinary polynomial multiplication in T.
RegElement reg_product(const RegElement& a, const RegElement& b);

}  // namespace polyzeta
