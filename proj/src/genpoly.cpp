#include "qf/genpoly.hpp"

namespace qf {

GenPoly GenPoly::constant(const BaseField& k, const RatFunc& a) {
    GenPoly p(k);
    if (!a.is_zero()) p.terms_.emplace(Exp4{}, a);
    return p;
}

GenPoly GenPoly::symbol(const BaseField& k, int idx, uint16_t deg) {
    GenPoly p(k);
    Exp4 e;
    e.e[static_cast<size_t>(idx)] = deg;
    p.terms_.emplace(e, RatFunc::constant(k, 1));
    return p;
}

void GenPoly::add_term(Exp4 e, const RatFunc& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(e, c);
        return;
    }
    RatFunc v = it->second + c;
    if (v.is_zero())
        terms_.erase(it);
    else
        it->second = std::move(v);
}

RatFunc GenPoly::coefficient(Exp4 e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? RatFunc::constant(*k_, 0) : it->second;
}

GenPoly GenPoly::operator+(const GenPoly& o) const {
    GenPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

GenPoly GenPoly::operator*(const GenPoly& o) const {
    GenPoly r(*k_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            Exp4 e;
            for (size_t i = 0; i < 4; ++i) e.e[i] = static_cast<uint16_t>(ea.e[i] + eb.e[i]);
            r.add_term(e, ca * cb);
        }
    return r;
}

GenPoly GenPoly::operator*(const RatFunc& a) const {
    GenPoly r(*k_);
    if (a.is_zero()) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * a);
    return r;
}

GenPoly GenPoly::pow(unsigned e) const {
    GenPoly r = constant(*k_, RatFunc::constant(*k_, 1));
    GenPoly b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool GenPoly::operator==(const GenPoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin(), jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt)
        if (!(it->first == jt->first) || it->second != jt->second) return false;
    return true;
}

GenPoly GenPoly::substitute(const std::array<GenPoly, 4>& images) const {
    GenPoly r(*k_);
    for (const auto& [e, c] : terms_) {
        GenPoly term = constant(*k_, c);
        for (size_t i = 0; i < 4; ++i)
            if (e.e[i]) term = term * images[i].pow(e.e[i]);
        r = r + term;
    }
    return r;
}

std::string GenPoly::to_string(const std::array<std::string, 4>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!out.empty()) out += " + ";
        std::string term;
        bool any_sym = e.e[0] || e.e[1] || e.e[2] || e.e[3];
        if (!c.is_one() || !any_sym) {
            std::string cs = c.to_string();
            if (cs.find('+') != std::string::npos || cs.find(' ') != std::string::npos)
                cs = "(" + cs + ")";
            term += cs;
        }
        for (size_t i = 0; i < 4; ++i) {
            if (!e.e[i]) continue;
            if (!term.empty()) term += "*";
            term += names[i];
            if (e.e[i] > 1) term += "^" + std::to_string(e.e[i]);
        }
        out += term;
    }
    return out;
}

GenPoly reduce(GenPoly p, const std::vector<RewriteRule>& rules) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [e, c] : p.terms()) {
            for (const auto& rule : rules) {
                auto si = static_cast<size_t>(rule.symbol);
                if (e.e[si] < rule.power) continue;
                // c * mono(e)  ->  c * mono(e - power*unit_i) * rhs
                Exp4 rest = e;
                rest.e[si] = static_cast<uint16_t>(rest.e[si] - rule.power);
                GenPoly mono(p.field());
                mono.add_term(rest, c);
                GenPoly replaced = mono * rule.rhs;
                GenPoly killer(p.field());
                killer.add_term(e, c);  // char 2: adding removes the term
                p = p + killer + replaced;
                changed = true;
                break;
            }
            if (changed) break;
        }
    }
    return p;
}

}  // namespace qf
