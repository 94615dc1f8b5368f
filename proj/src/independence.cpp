#include "polyzeta/independence.hpp"

#include "polyzeta/hurwitz.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <limits>
#include <stdexcept>

namespace polyzeta {

IndependenceResult independence_check(double threshold) {
    // Panel chosen for well-spread leading asymptotics; words with close
    // leading behavior (say (2,3) next to (4)) make the value matrix nearly
    // singular in double precision even though the functions are independent.
    const std::vector<Word> words = {
        Word({2}), Word({3}),  Word({2, 2}), Word({2, 3}),    Word({3, 3}),
        Word({7}), Word({8}),  Word({2, 2, 5}), Word({10}),   Word({11}),
    };
    const std::vector<double> zs = {1.05, 1.15, 1.3, 1.5, 1.75, 2.05, 2.4, 2.8, 3.3, 3.9};
    return independence_check(words, zs, threshold);
}

IndependenceResult independence_check(const std::vector<Word>& words,
                                      const std::vector<double>& zs, double threshold) {
    if (words.empty() || words.size() != zs.size())
        throw std::invalid_argument("independence_check: need a square panel");
    IndependenceResult out;
    out.words = words;
    out.zs = zs;
    out.threshold = threshold;

    const int n = static_cast<int>(words.size());
    Eigen::MatrixXd m(n, n);
    out.matrix.assign(words.size(), std::vector<double>(zs.size(), 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double v = hurwitz_polyzeta(words[static_cast<std::size_t>(i)],
                                              zs[static_cast<std::size_t>(j)], 1e-12)
                                 .value;
            m(i, j) = v;
            out.matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
        }

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const auto& sv = svd.singularValues();
    const double smin = sv(sv.size() - 1);
    out.condition_number = smin > 0.0 ? sv(0) / smin : std::numeric_limits<double>::infinity();
    out.pass = out.condition_number < threshold;
    return out;
}

}  // namespace polyzeta
