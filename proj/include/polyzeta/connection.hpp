#pragma once

#include "polyzeta/eigen_support.hpp"
#include "polyzeta/ncseries.hpp"
#include "polyzeta/polynomial.hpp"
#include "polyzeta/word.hpp"

#include <map>
#include <vector>

namespace polyzeta {

/// Finite-rank model of a unipotent difference connection:
///   nabla = D^- - I - sum_{k>=1} N_k (z-1)^{-k}
/// with every N_k strictly upper triangular, so products of rank-many
/// letters vanish. D^- is the shift F(z) -> F(z-1).
class UnipotentDiffConnection {
public:
    UnipotentDiffConnection(int rank, std::map<int, RatMatrix> matrices);

    int rank() const { return rank_; }
    /// Largest k with a nonzero N_k (0 when all vanish).
    int cutoff() const { return cutoff_; }
    const std::map<int, RatMatrix>& matrices() const { return mats_; }
    /// N_k (zero matrix when absent).
    RatMatrix matrix(int k) const;
    /// Ordered product N_{k_1} ... N_{k_r} over the word's letters (identity
    /// for the unit word); vanishes whenever depth(w) >= rank.
    RatMatrix word_matrix(const Word& w) const;

private:
    int rank_;
    int cutoff_ = 0;
    std::map<int, RatMatrix> mats_;
};

/// Polynomial model of a section of the rank-r trivial bundle.
struct VectorSection {
    std::vector<Poly> entries;

    int rank() const { return static_cast<int>(entries.size()); }
    static VectorSection zero(int rank) { return {std::vector<Poly>(static_cast<std::size_t>(rank))}; }
    friend bool operator==(const VectorSection& a, const VectorSection& b) {
        return a.entries == b.entries;
    }
};

VectorSection operator+(const VectorSection& a, const VectorSection& b);
VectorSection operator-(const VectorSection& a);
/// Scalar polynomial times section, entry-wise.
VectorSection operator*(const Poly& f, const VectorSection& s);
/// Matrix action with exact rational entries.
VectorSection operator*(const RatMatrix& m, const VectorSection& s);
/// Entry-wise z -> z-1.
VectorSection shift_down(const VectorSection& s);

/// Value of a connection applied to a section, kept exactly in pieces:
/// polynomial part plus a map pole order k -> numerator of (z-1)^{-k}.
struct SectionExpr {
    std::vector<Poly> poly;
    std::map<int, std::vector<Poly>> pole;

    friend bool operator==(const SectionExpr& a, const SectionExpr& b);
};

/// The three raw pieces of nabla s = s(z-1) - s(z) - sum_k N_k s(z) (z-1)^{-k}.
struct ConnectionApplication {
    VectorSection shifted;                 // s(z-1)
    VectorSection negated;                 // -s(z)
    std::map<int, VectorSection> pole;     // k -> -N_k s(z)

    SectionExpr combined() const;
};

ConnectionApplication connection_apply(const UnipotentDiffConnection& conn, const VectorSection& s);

/// Exact check of the twisted product rule
///   nabla(f s) = (-D_- f) * (D^- s) + f * (nabla s),
/// compared piecewise (polynomial part and each pole order).
bool leibniz_check(const UnipotentDiffConnection& conn, const Poly& f, const VectorSection& s);

/// psi_v of a truncated positive-alphabet series with polynomial
/// coefficients: sum_w f_w(z) N_w v.
VectorSection psi_v(const UnipotentDiffConnection& conn, const RatVector& v,
                    const WordSeries<Poly>& s);

/// Pieces of the universal connection applied to a truncated series: shifted
/// coefficients minus originals, and per pole order k the series of [Y_k w]
/// terms, projected to words of length <= length_bound. Pole orders are
/// materialized for k = 1..max_pole_order.
struct SeriesPieces {
    WordSeries<Poly> poly;
    std::map<int, WordSeries<Poly>> pole;
};

SeriesPieces universal_connection_apply(const WordSeries<Poly>& s, int length_bound,
                                        int max_pole_order);

/// Theorem-level compatibility at finite truncation: applies psi_v after the
/// universal connection and compares piecewise with the finite-rank
/// connection applied after psi_v. Exact whenever length_bound >= rank-1
/// (dropped words then act by zero); the caller passes the length bound.
bool psi_compat_check(const UnipotentDiffConnection& conn, const RatVector& v,
                      const WordSeries<Poly>& s, int length_bound);

}  // namespace polyzeta
