#include "qf/mpoly.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "qf/fqpoly.hpp"

namespace qf {

MPoly MPoly::constant(uint32_t a) {
    MPoly p;
    if (a) p.terms[{}] = a;
    return p;
}

MPoly MPoly::variable(int idx, uint16_t deg) {
    MPoly p;
    Exp2 e;
    e.e[static_cast<size_t>(idx)] = deg;
    p.terms[e] = 1;
    return p;
}

bool MPoly::is_constant() const {
    return terms.empty() || (terms.size() == 1 && terms.begin()->first == Exp2{});
}

uint32_t MPoly::constant_value() const {
    if (terms.empty()) return 0;
    return terms.begin()->second;
}

int MPoly::degree(int var) const {
    int d = -1;
    for (const auto& [e, c] : terms) d = std::max(d, static_cast<int>(e.e[static_cast<size_t>(var)]));
    return d;
}

int MPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms) d = std::max(d, static_cast<int>(e.e[0]) + static_cast<int>(e.e[1]));
    return d;
}

MPoly mp_add(const Fq& F, const MPoly& a, const MPoly& b) {
    MPoly r = a;
    for (const auto& [e, c] : b.terms) {
        uint32_t v = F.add(r.get(e), c);
        r.set(e, v);
    }
    return r;
}

MPoly mp_mul_term(const Fq& F, const MPoly& a, Exp2 e, uint32_t c) {
    MPoly r;
    if (c == 0) return r;
    for (const auto& [ea, ca] : a.terms) {
        Exp2 k{{static_cast<uint16_t>(ea.e[0] + e.e[0]), static_cast<uint16_t>(ea.e[1] + e.e[1])}};
        r.terms[k] = F.mul(ca, c);
    }
    return r;
}

MPoly mp_mul(const Fq& F, const MPoly& a, const MPoly& b) {
    MPoly r;
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms) {
            Exp2 k{{static_cast<uint16_t>(ea.e[0] + eb.e[0]),
                    static_cast<uint16_t>(ea.e[1] + eb.e[1])}};
            uint32_t v = F.add(r.get(k), F.mul(ca, cb));
            r.set(k, v);
        }
    return r;
}

MPoly mp_pow(const Fq& F, const MPoly& a, unsigned e) {
    MPoly r = MPoly::constant(1);
    MPoly b = a;
    while (e) {
        if (e & 1) r = mp_mul(F, r, b);
        b = mp_mul(F, b, b);
        e >>= 1;
    }
    return r;
}

MPoly mp_div_exact(const Fq& F, const MPoly& a, const MPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    MPoly r = a, q;
    auto [eb, cb] = b.lead();
    uint32_t icb = F.inv(cb);
    while (!r.is_zero()) {
        auto [er, cr] = r.lead();
        if (er.e[0] < eb.e[0] || er.e[1] < eb.e[1])
            throw std::domain_error("inexact polynomial division");
        Exp2 k{{static_cast<uint16_t>(er.e[0] - eb.e[0]), static_cast<uint16_t>(er.e[1] - eb.e[1])}};
        uint32_t f = F.mul(cr, icb);
        q.set(k, f);
        r = mp_add(F, r, mp_mul_term(F, b, k, f));
    }
    return q;
}

bool mp_equal(const MPoly& a, const MPoly& b) { return a.terms == b.terms; }

uint32_t mp_eval(const Fq& F, const MPoly& a, uint32_t tv, uint32_t sv) {
    uint32_t acc = 0;
    for (const auto& [e, c] : a.terms)
        acc = F.add(acc, F.mul(c, F.mul(F.pow(tv, e.e[0]), F.pow(sv, e.e[1]))));
    return acc;
}

namespace {

// Views for the gcd: a bivariate polynomial as a dense vector of FqPoly
// in t, indexed by the power of s.
std::vector<FqPoly> as_svec(const MPoly& a) {
    std::vector<FqPoly> v(static_cast<size_t>(std::max(a.degree(1), 0)) + 1);
    for (const auto& [e, c] : a.terms) {
        auto& p = v[e.e[1]];
        if (p.c.size() <= e.e[0]) p.c.resize(e.e[0] + 1, 0);
        p.c[e.e[0]] = c;
    }
    for (auto& p : v) p.trim();
    while (!v.empty() && v.back().is_zero()) v.pop_back();
    return v;
}

MPoly from_svec(const std::vector<FqPoly>& v) {
    MPoly a;
    for (size_t j = 0; j < v.size(); ++j)
        for (size_t i = 0; i < v[j].c.size(); ++i)
            if (v[j].c[i])
                a.terms[Exp2{{static_cast<uint16_t>(i), static_cast<uint16_t>(j)}}] = v[j].c[i];
    return a;
}

MPoly from_tpoly(const FqPoly& p) {
    MPoly a;
    for (size_t i = 0; i < p.c.size(); ++i)
        if (p.c[i]) a.terms[Exp2{{static_cast<uint16_t>(i), 0}}] = p.c[i];
    return a;
}

FqPoly content_s(const Fq& F, const std::vector<FqPoly>& v) {
    FqPoly g;
    for (const auto& p : v)
        if (!p.is_zero()) g = g.is_zero() ? fq_monic(F, p) : fq_gcd(F, g, p);
    return g;
}

std::vector<FqPoly> divide_coeffs(const Fq& F, const std::vector<FqPoly>& v, const FqPoly& d) {
    std::vector<FqPoly> r(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        auto [q, rem] = fq_divmod(F, v[i], d);
        if (!rem.is_zero()) throw std::logic_error("content division not exact");
        r[i] = q;
    }
    return r;
}

// Pseudo-remainder of a by b in (Fq[t])[s].
std::vector<FqPoly> prem_s(const Fq& F, std::vector<FqPoly> a, const std::vector<FqPoly>& b) {
    int db = static_cast<int>(b.size()) - 1;
    const FqPoly& lb = b.back();
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        int k = static_cast<int>(a.size()) - 1 - db;
        FqPoly la = a.back();
        // a := lb * a - la * s^k * b
        for (auto& p : a) p = fq_mul(F, p, lb);
        for (int i = 0; i <= db; ++i) {
            auto& dst = a[static_cast<size_t>(i + k)];
            dst = fq_add(dst, fq_mul(F, la, b[static_cast<size_t>(i)]));
        }
        while (!a.empty() && a.back().is_zero()) a.pop_back();
    }
    return a;
}

}  // namespace

MPoly mp_gcd(const Fq& F, const MPoly& a, const MPoly& b) {
    auto normalized = [&F](const MPoly& p) {
        if (p.is_zero() || p.lead().second == 1) return p;
        return mp_mul(F, MPoly::constant(F.inv(p.lead().second)), p);
    };
    if (a.is_zero()) return normalized(b);
    if (b.is_zero()) return normalized(a);
    // Univariate (or constant) fast path: both free of s.
    if (a.degree(1) <= 0 && b.degree(1) <= 0) {
        auto pa = as_svec(a), pb = as_svec(b);
        FqPoly g = fq_gcd(F, pa.empty() ? FqPoly{} : pa[0], pb.empty() ? FqPoly{} : pb[0]);
        return from_tpoly(g);
    }
    // Primitive PRS over Fq[t] with s as the main variable.
    auto va = as_svec(a), vb = as_svec(b);
    FqPoly ca = content_s(F, va), cb = content_s(F, vb);
    auto pa = divide_coeffs(F, va, ca), pb = divide_coeffs(F, vb, cb);
    if (pa.size() < pb.size()) std::swap(pa, pb);
    while (!pb.empty()) {
        auto r = prem_s(F, pa, pb);
        pa = std::move(pb);
        pb = std::move(r);
        if (!pb.empty()) {
            FqPoly c = content_s(F, pb);
            pb = divide_coeffs(F, pb, c);
        }
    }
    FqPoly cg = fq_gcd(F, ca, cb);
    FqPoly cpa = content_s(F, pa);
    pa = divide_coeffs(F, pa, cpa);
    MPoly g = mp_mul(F, from_tpoly(cg), from_svec(pa));
    uint32_t lc = g.lead().second;
    if (lc != 1) g = mp_mul(F, MPoly::constant(F.inv(lc)), g);
    return g;
}

std::string mp_to_string(const Fq& F, const MPoly& a, const std::array<std::string, 2>& names) {
    if (a.is_zero()) return "0";
    std::string out;
    // print highest terms first
    for (auto it = a.terms.rbegin(); it != a.terms.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!out.empty()) out += " + ";
        std::string term;
        bool unit = (c == 1) && (e.e[0] || e.e[1]);
        if (!unit) term += F.to_string(c);
        for (int v = 0; v < 2; ++v) {
            if (!e.e[v]) continue;
            if (!term.empty()) term += "*";
            term += names[static_cast<size_t>(v)];
            if (e.e[v] > 1) term += "^" + std::to_string(e.e[v]);
        }
        out += term;
    }
    return out;
}

}  // namespace qf
