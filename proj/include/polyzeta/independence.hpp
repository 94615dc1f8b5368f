#pragma once

#include "polyzeta/word.hpp"

#include <vector>

namespace polyzeta {

/// Numeric linear-independence witness: the matrix of polyzeta values of
/// `words` at the sample points `zs` should be far from singular if the
/// functions are independent. A heuristic, not a proof.
struct IndependenceResult {
    std::vector<Word> words;
    std::vector<double> zs;
    std::vector<std::vector<double>> matrix;
    double condition_number = 0.0;
    double threshold = 1e12;
    bool pass = false;
};

/// Default panel: 10 distinct convergent words at 10 distinct z in (1, 4).
IndependenceResult independence_check(double threshold = 1e12);

/// Same with explicit panel; words must be convergent, zs positive.
IndependenceResult independence_check(const std::vector<Word>& words,
                                      const std::vector<double>& zs, double threshold = 1e12);

}  // namespace polyzeta
