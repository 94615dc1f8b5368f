#include "polyzeta/lincomb.hpp"
#include "polyzeta/polynomial.hpp"

namespace polyzeta {

namespace {

// Renders c*X with sign folded into the join: "+ 2(1,1)", "- (3)".
void append_term(std::string& out, const Rational& c, const std::string& body) {
    const bool first = out.empty();
    const Rational a = abs(c);
    if (!first) out += c.sign() < 0 ? " - " : " + ";
    else if (c.sign() < 0) out += "-";
    if (!(a == Rational(1)) || body.empty()) out += a.pretty();
    out += body;
}

}  // namespace

std::string LinComb::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : terms_) append_term(out, c, w.str());
    return out;
}

std::string TensorLinComb::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [pair, c] : terms_) append_term(out, c, pair.first.str() + "(x)" + pair.second.str());
    return out;
}

std::string RegElement::str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        if (!out.empty()) out += " + ";
        if (it->first == 0) {
            out += "[" + it->second.str() + "]";
        } else {
            out += "T";
            if (it->first > 1) out += "^" + std::to_string(it->first);
            out += "*[" + it->second.str() + "]";
        }
    }
    return out;
}

std::string to_string(const Poly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int d = p.degree(); d >= 0; --d) {
        const Rational c = p.coeff(d);
        if (c.is_zero()) continue;
        const bool first = out.empty();
        if (!first) out += c.sign() < 0 ? " - " : " + ";
        else if (c.sign() < 0) out += "-";
        const Rational a = abs(c);
        std::string body;
        if (d == 0) {
            body = a.pretty();
        } else {
            std::string x = var;
            if (d > 1) x += "^" + std::to_string(d);
            if (a == Rational(1)) {
                body = x;
            } else if (a.num() == 1) {
                body = x + "/" + a.den().str();
            } else if (a.is_integer()) {
                body = a.num().str() + x;
            } else {
                body = a.num().str() + x + "/" + a.den().str();
            }
        }
        out += body;
    }
    return out.empty() ? "0" : out;
}

}  // namespace polyzeta
