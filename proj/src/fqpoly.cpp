#include "qf/fqpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace qf {

FqPoly fq_add(const FqPoly& a, const FqPoly& b) {
    FqPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] ^= a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] ^= b.c[i];
    r.trim();
    return r;
}

FqPoly fq_mul(const Fq& F, const FqPoly& a, const FqPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    FqPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (!a.c[i]) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            if (b.c[j]) r.c[i + j] ^= F.mul(a.c[i], b.c[j]);
    }
    r.trim();
    return r;
}

FqPoly fq_scale(const Fq& F, const FqPoly& a, uint32_t s) {
    if (s == 0) return {};
    FqPoly r = a;
    for (auto& v : r.c) v = F.mul(v, s);
    return r;
}

std::pair<FqPoly, FqPoly> fq_divmod(const Fq& F, const FqPoly& a, const FqPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    FqPoly q, r = a;
    int db = b.degree();
    uint32_t il = F.inv(b.lead());
    if (r.degree() >= db) q.c.assign(static_cast<size_t>(r.degree() - db) + 1, 0);
    while (!r.is_zero() && r.degree() >= db) {
        int k = r.degree() - db;
        uint32_t f = F.mul(r.lead(), il);
        q.c[static_cast<size_t>(k)] = f;
        for (int i = 0; i <= db; ++i)
            r.c[static_cast<size_t>(i + k)] ^= F.mul(f, b.c[static_cast<size_t>(i)]);
        r.trim();
    }
    q.trim();
    return {q, r};
}

FqPoly fq_gcd(const Fq& F, FqPoly a, FqPoly b) {
    while (!b.is_zero()) {
        auto [q, r] = fq_divmod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return fq_monic(F, a);
}

FqPoly fq_derivative(const FqPoly& a) {
    FqPoly r;
    if (a.c.size() <= 1) return r;
    r.c.assign(a.c.size() - 1, 0);
    for (size_t i = 1; i < a.c.size(); i += 2) r.c[i - 1] = a.c[i];  // char 2
    r.trim();
    return r;
}

uint32_t fq_eval(const Fq& F, const FqPoly& a, uint32_t x) {
    uint32_t acc = 0;
    for (size_t i = a.c.size(); i-- > 0;) acc = F.add(F.mul(acc, x), a.c[i]);
    return acc;
}

FqPoly fq_monic(const Fq& F, const FqPoly& a) {
    if (a.is_zero() || a.lead() == 1) return a;
    return fq_scale(F, a, F.inv(a.lead()));
}

FqPoly fq_powmod(const Fq& F, const FqPoly& base, uint64_t e, const FqPoly& mod) {
    FqPoly r = FqPoly::constant(1);
    FqPoly b = fq_divmod(F, base, mod).second;
    while (e) {
        if (e & 1) r = fq_divmod(F, fq_mul(F, r, b), mod).second;
        b = fq_divmod(F, fq_mul(F, b, b), mod).second;
        e >>= 1;
    }
    return r;
}

namespace {

// Roots of a product of distinct linear factors, by blind splitting with
// the F2-trace map: for any a, Tr(ax) takes both values 0/1 on the roots
// unless they all agree, and sweeping a over a basis separates any pair.
void split_linear(const Fq& F, const FqPoly& f, std::vector<uint32_t>& out) {
    int d = f.degree();
    if (d <= 0) return;
    if (d == 1) {
        out.push_back(F.div(f.c[0], f.c[1]));
        return;
    }
    if (f.c[0] == 0) {
        out.push_back(0);
        FqPoly g;
        g.c.assign(f.c.begin() + 1, f.c.end());
        split_linear(F, g, out);
        return;
    }
    if (d == 2) {
        // a x^2 + b x + c with distinct roots and c != 0 (so b != 0 in char 2).
        uint32_t a = f.c[2], b = f.c[1], c = f.c[0];
        uint32_t e = F.div(F.mul(a, c), F.mul(b, b));
        uint32_t u;
        if (!F.solve_artin_schreier(e, u))
            throw std::logic_error("quadratic expected to split did not");
        uint32_t r1 = F.mul(F.div(b, a), u);
        uint32_t r2 = r1 ^ F.div(b, a);
        out.push_back(r1);
        out.push_back(r2);
        return;
    }
    FqPoly x{{0, 1}};
    for (int bi = 0; bi < F.m(); ++bi) {
        FqPoly ax = fq_scale(F, x, 1u << bi);
        // trace polynomial  T(x) = ax + (ax)^2 + ... + (ax)^(2^(m-1))  mod f
        FqPoly t = FqPoly::zero(), term = fq_divmod(F, ax, f).second;
        for (int i = 0; i < F.m(); ++i) {
            t = fq_add(t, term);
            term = fq_divmod(F, fq_mul(F, term, term), f).second;
        }
        FqPoly g = fq_gcd(F, f, t);
        if (g.degree() > 0 && g.degree() < d) {
            split_linear(F, g, out);
            split_linear(F, fq_divmod(F, f, g).first, out);
            return;
        }
    }
    throw std::logic_error("trace splitting failed on a split polynomial");
}

}  // namespace

std::vector<std::pair<uint32_t, int>> fq_roots(const Fq& F, const FqPoly& a) {
    std::vector<std::pair<uint32_t, int>> result;
    if (a.degree() <= 0) return result;
    // x^q - x mod a via repeated squaring
    FqPoly x{{0, 1}};
    FqPoly xq = fq_powmod(F, x, F.q(), a);
    FqPoly diff = fq_add(xq, x);
    FqPoly g = diff.is_zero() ? fq_monic(F, a) : fq_gcd(F, a, diff);
    if (g.degree() <= 0) return result;
    std::vector<uint32_t> roots;
    split_linear(F, g, roots);
    std::sort(roots.begin(), roots.end());
    for (uint32_t r : roots) {
        int mult = 0;
        FqPoly rem = a, lin{{r, 1}};
        for (;;) {
            auto [q, rr] = fq_divmod(F, rem, lin);
            if (!rr.is_zero()) break;
            ++mult;
            rem = q;
        }
        result.emplace_back(r, mult);
    }
    return result;
}

std::vector<int> fq_factor_degrees(const Fq& F, FqPoly a) {
    std::vector<int> degs;
    a = fq_monic(F, a);
    // peel repeated factors through gcd with the derivative
    for (;;) {
        FqPoly d = fq_derivative(a);
        if (d.is_zero()) {
            // perfect square in char 2: take the square root of exponents
            FqPoly r;
            r.c.assign(a.c.size() / 2 + 1, 0);
            for (size_t i = 0; i < a.c.size(); i += 2) r.c[i / 2] = F.sqrt(a.c[i]);
            r.trim();
            auto sub = fq_factor_degrees(F, r);
            degs.insert(degs.end(), sub.begin(), sub.end());
            degs.insert(degs.end(), sub.begin(), sub.end());
            std::sort(degs.begin(), degs.end());
            return degs;
        }
        FqPoly g = fq_gcd(F, a, d);
        if (g.degree() <= 0) break;
        auto sub = fq_factor_degrees(F, g);
        degs.insert(degs.end(), sub.begin(), sub.end());
        a = fq_divmod(F, a, g).first;
    }
    // a squarefree: distinct-degree decomposition
    FqPoly x{{0, 1}}, h = x;
    for (int d = 1; a.degree() > 0 && d <= a.degree(); ++d) {
        h = fq_powmod(F, h, F.q(), a);
        FqPoly g = fq_gcd(F, a, fq_add(h, x));
        if (g.degree() > 0) {
            for (int i = 0; i < g.degree() / d; ++i) degs.push_back(d);
            a = fq_divmod(F, a, g).first;
        }
    }
    if (a.degree() > 0) degs.push_back(a.degree());
    std::sort(degs.begin(), degs.end());
    return degs;
}

}  // namespace qf
