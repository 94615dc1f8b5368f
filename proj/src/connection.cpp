#include "polyzeta/connection.hpp"

#include <stdexcept>

namespace polyzeta {

UnipotentDiffConnection::UnipotentDiffConnection(int rank, std::map<int, RatMatrix> matrices)
    : rank_(rank), mats_(std::move(matrices)) {
    if (rank < 1) throw std::invalid_argument("connection: rank must be >= 1");
    for (auto it = mats_.begin(); it != mats_.end();) {
        const auto& [k, m] = *it;
        if (k < 1) throw std::invalid_argument("connection: pole orders start at 1");
        if (m.rows() != rank || m.cols() != rank)
            throw std::invalid_argument("connection: matrix size does not match rank");
        if (!is_strictly_upper_triangular(m))
            throw std::invalid_argument("connection: N_" + std::to_string(k) +
                                        " is not strictly upper triangular");
        bool all_zero = true;
        for (Eigen::Index i = 0; i < m.rows() && all_zero; ++i)
            for (Eigen::Index j = 0; j < m.cols() && all_zero; ++j)
                if (!m(i, j).is_zero()) all_zero = false;
        if (all_zero) {
            it = mats_.erase(it);
        } else {
            cutoff_ = std::max(cutoff_, k);
            ++it;
        }
    }
}

RatMatrix UnipotentDiffConnection::matrix(int k) const {
    auto it = mats_.find(k);
    if (it != mats_.end()) return it->second;
    return RatMatrix::Zero(rank_, rank_);
}

RatMatrix UnipotentDiffConnection::word_matrix(const Word& w) const {
    RatMatrix acc = RatMatrix::Identity(rank_, rank_);
    for (int k : w.indices()) acc = acc * matrix(k);
    return acc;
}

VectorSection operator+(const VectorSection& a, const VectorSection& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("section rank mismatch");
    VectorSection out = a;
    for (std::size_t i = 0; i < out.entries.size(); ++i) out.entries[i] += b.entries[i];
    return out;
}

VectorSection operator-(const VectorSection& a) {
    VectorSection out = a;
    for (auto& e : out.entries) e = -e;
    return out;
}

VectorSection operator*(const Poly& f, const VectorSection& s) {
    VectorSection out = s;
    for (auto& e : out.entries) e = f * e;
    return out;
}

VectorSection operator*(const RatMatrix& m, const VectorSection& s) {
    if (m.cols() != s.rank()) throw std::invalid_argument("matrix/section rank mismatch");
    VectorSection out = VectorSection::zero(static_cast<int>(m.rows()));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            out.entries[static_cast<std::size_t>(i)] +=
                m(i, j) * s.entries[static_cast<std::size_t>(j)];
    return out;
}

VectorSection shift_down(const VectorSection& s) {
    VectorSection out = s;
    for (auto& e : out.entries) e = shift_down(e);
    return out;
}

bool operator==(const SectionExpr& a, const SectionExpr& b) {
    if (!(a.poly == b.poly)) return false;
    auto nonzero = [](const std::map<int, std::vector<Poly>>& m, int k,
                      std::size_t rank) -> std::vector<Poly> {
        auto it = m.find(k);
        if (it != m.end()) return it->second;
        return std::vector<Poly>(rank);
    };
    const std::size_t rank = a.poly.size();
    std::map<int, bool> orders;
    for (const auto& [k, v] : a.pole) orders[k] = true, (void)v;
    for (const auto& [k, v] : b.pole) orders[k] = true, (void)v;
    for (const auto& [k, unused] : orders) {
        (void)unused;
        if (!(nonzero(a.pole, k, rank) == nonzero(b.pole, k, rank))) return false;
    }
    return true;
}

SectionExpr ConnectionApplication::combined() const {
    SectionExpr out;
    out.poly = (shifted + negated).entries;
    for (const auto& [k, v] : pole) out.pole.emplace(k, v.entries);
    return out;
}

ConnectionApplication connection_apply(const UnipotentDiffConnection& conn,
                                       const VectorSection& s) {
    if (s.rank() != conn.rank()) throw std::invalid_argument("connection_apply: rank mismatch");
    ConnectionApplication out;
    out.shifted = shift_down(s);
    out.negated = -s;
    for (const auto& [k, m] : conn.matrices()) out.pole.emplace(k, -(m * s));
    return out;
}

bool leibniz_check(const UnipotentDiffConnection& conn, const Poly& f, const VectorSection& s) {
    if (s.rank() != conn.rank()) throw std::invalid_argument("leibniz_check: rank mismatch");
    const SectionExpr lhs = connection_apply(conn, f * s).combined();

    const ConnectionApplication nabla_s = connection_apply(conn, s);
    SectionExpr rhs;
    const Poly minus_diff_f = shift_down(f) - f;  // -D_- f
    rhs.poly = (minus_diff_f * shift_down(s) + f * (nabla_s.shifted + nabla_s.negated)).entries;
    for (const auto& [k, v] : nabla_s.pole) rhs.pole.emplace(k, (f * v).entries);
    return lhs == rhs;
}

VectorSection psi_v(const UnipotentDiffConnection& conn, const RatVector& v,
                    const WordSeries<Poly>& s) {
    if (v.size() != conn.rank()) throw std::invalid_argument("psi_v: vector length != rank");
    VectorSection out = VectorSection::zero(conn.rank());
    for (const auto& [w, f] : s.terms) {
        if (f.is_zero()) continue;
        const RatVector nv = conn.word_matrix(w) * v;
        for (int i = 0; i < conn.rank(); ++i)
            out.entries[static_cast<std::size_t>(i)] += nv(i) * f;
    }
    return out;
}

SeriesPieces universal_connection_apply(const WordSeries<Poly>& s, int length_bound,
                                        int max_pole_order) {
    SeriesPieces out;
    out.poly.max_weight = s.max_weight;
    for (const auto& [w, f] : s.terms) {
        const Poly d = shift_down(f) - f;
        if (!d.is_zero()) out.poly.terms.emplace(w, d);
    }
    for (int k = 1; k <= max_pole_order; ++k) {
        WordSeries<Poly> piece;
        piece.max_weight = s.max_weight + k;
        for (const auto& [w, f] : s.terms) {
            if (w.depth() + 1 > length_bound) continue;  // projection by word length
            if (f.is_zero()) continue;
            piece.terms.emplace(prepend(k, w), -f);
        }
        out.pole.emplace(k, std::move(piece));
    }
    return out;
}

bool psi_compat_check(const UnipotentDiffConnection& conn, const RatVector& v,
                      const WordSeries<Poly>& s, int length_bound) {
    const SeriesPieces upstream = universal_connection_apply(s, length_bound, conn.cutoff());
    SectionExpr lhs;
    lhs.poly = psi_v(conn, v, upstream.poly).entries;
    for (const auto& [k, piece] : upstream.pole) {
        const VectorSection mapped = psi_v(conn, v, piece);
        bool zero = true;
        for (const auto& e : mapped.entries) zero = zero && e.is_zero();
        if (!zero) lhs.pole.emplace(k, mapped.entries);
    }
    const SectionExpr rhs = connection_apply(conn, psi_v(conn, v, s)).combined();
    return lhs == rhs;
}

}  // namespace polyzeta
