#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "qf/gf.hpp"

namespace qf {

// Exponent vector for at most two base variables (t, s), lex-ordered.
struct Exp2 {
    std::array<uint16_t, 2> e{0, 0};
    bool operator<(const Exp2& o) const { return e < o.e; }
    bool operator==(const Exp2& o) const { return e == o.e; }
};

// Sparse polynomial over GF(2^m) in the base variables.  No zero
// coefficients are stored; the zero polynomial is the empty map.
// Characteristic 2 makes addition involutive: p + p = 0.
struct MPoly {
    std::map<Exp2, uint32_t> terms;

    static MPoly zero() { return {}; }
    static MPoly constant(uint32_t a);
    static MPoly variable(int idx, uint16_t deg = 1);

    bool is_zero() const { return terms.empty(); }
    bool is_constant() const;
    uint32_t constant_value() const;  // requires is_constant()
    int degree(int var) const;
    int total_degree() const;
    // Lex-leading (largest) term.
    std::pair<Exp2, uint32_t> lead() const { return *terms.rbegin(); }

    void set(Exp2 k, uint32_t v) {
        if (v)
            terms[k] = v;
        else
            terms.erase(k);
    }
    uint32_t get(Exp2 k) const {
        auto it = terms.find(k);
        return it == terms.end() ? 0 : it->second;
    }
};

MPoly mp_add(const Fq& F, const MPoly& a, const MPoly& b);
MPoly mp_mul(const Fq& F, const MPoly& a, const MPoly& b);
MPoly mp_mul_term(const Fq& F, const MPoly& a, Exp2 e, uint32_t c);
MPoly mp_pow(const Fq& F, const MPoly& a, unsigned e);
// Exact division; throws std::domain_error if b does not divide a.
MPoly mp_div_exact(const Fq& F, const MPoly& a, const MPoly& b);
// GCD in GF(2^m)[t,s], normalized to lex-leading coefficient 1.
MPoly mp_gcd(const Fq& F, const MPoly& a, const MPoly& b);
bool mp_equal(const MPoly& a, const MPoly& b);
uint32_t mp_eval(const Fq& F, const MPoly& a, uint32_t tv, uint32_t sv);

std::string mp_to_string(const Fq& F, const MPoly& a,
                         const std::array<std::string, 2>& names = {"t", "s"});

}  // namespace qf
