#include "hyperoct/poly.hpp"

#include <sstream>

namespace hyperoct {

BivarPoly::BivarPoly(const Rational& c) {
    if (c != 0) terms_.emplace(Exponents{0, 0}, c);
}

BivarPoly BivarPoly::qp() { return monomial(1, 0); }
BivarPoly BivarPoly::qm() { return monomial(0, 1); }

BivarPoly BivarPoly::monomial(unsigned e_qp, unsigned e_qm, const Rational& c) {
    BivarPoly p;
    p.add_term({e_qp, e_qm}, c);
    return p;
}

Rational BivarPoly::coefficient(unsigned e_qp, unsigned e_qm) const {
    auto it = terms_.find({e_qp, e_qm});
    return it == terms_.end() ? Rational(0) : it->second;
}

void BivarPoly::add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
    BivarPoly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            out.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
    return out;
}

BivarPoly& BivarPoly::operator*=(const BivarPoly& o) { return *this = *this * o; }

BivarPoly& BivarPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

BivarPoly BivarPoly::operator-() const {
    BivarPoly out = *this;
    for (auto& [e, v] : out.terms_) v = -v;
    return out;
}

BivarPoly BivarPoly::pow(unsigned e) const {
    BivarPoly result(1), base = *this;
    while (e) {
        if (e & 1u) result *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return result;
}

Rational BivarPoly::eval(const Rational& qp, const Rational& qm) const {
    Rational s = 0;
    for (const auto& [e, c] : terms_) s += c * hyperoct::pow(qp, e.first) * hyperoct::pow(qm, e.second);
    return s;
}

BivarPoly BivarPoly::compose(const BivarPoly& qp_sub, const BivarPoly& qm_sub) const {
    BivarPoly out;
    for (const auto& [e, c] : terms_) out += qp_sub.pow(e.first) * qm_sub.pow(e.second) * c;
    return out;
}

std::optional<BivarPoly::Exponents> BivarPoly::first_difference(const BivarPoly& a, const BivarPoly& b) {
    BivarPoly d = a - b;
    if (d.is_zero()) return std::nullopt;
    return d.terms_.begin()->first;
}

std::string BivarPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational a = abs(c);
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        bool unit = a == 1 && (e.first || e.second);
        if (!unit) os << a.get_str();
        auto var = [&](const char* name, unsigned k) {
            if (!k) return;
            if (!unit) os << "*";
            os << name;
            if (k > 1) os << "^" << k;
            unit = false;
        };
        var("qp", e.first);
        var("qm", e.second);
    }
    return os.str();
}

UniPoly::UniPoly(const Rational& c) {
    if (c != 0) c_.push_back(c);
}

UniPoly UniPoly::t() { return monomial(1); }

UniPoly UniPoly::monomial(unsigned k, const Rational& c) {
    UniPoly p;
    if (c == 0) return p;
    p.c_.assign(k + 1, Rational(0));
    p.c_[k] = c;
    return p;
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    UniPoly out;
    if (a.c_.empty() || b.c_.empty()) return out;
    out.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
    out.trim();
    return out;
}

UniPoly UniPoly::pow(unsigned e) const {
    UniPoly r(1);
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

Rational UniPoly::eval(const Rational& t) const {
    Rational s = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) s = s * t + *it;
    return s;
}

std::string UniPoly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << c_[k].get_str();
        if (k) os << "*t" << (k > 1 ? "^" + std::to_string(k) : "");
    }
    return os.str();
}

}  // namespace hyperoct
