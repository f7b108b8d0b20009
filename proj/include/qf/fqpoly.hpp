#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qf/gf.hpp"

namespace qf {

// Dense univariate polynomials over GF(2^m).  Coefficients are raw field
// values; the context travels alongside.  Trailing zeros are trimmed, the
// zero polynomial has empty storage.
struct FqPoly {
    std::vector<uint32_t> c;  // c[i] = coefficient of x^i

    static FqPoly zero() { return {}; }
    static FqPoly constant(uint32_t a) { return a ? FqPoly{{a}} : FqPoly{}; }

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    uint32_t lead() const { return c.back(); }
    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
};

FqPoly fq_add(const FqPoly& a, const FqPoly& b);
FqPoly fq_mul(const Fq& F, const FqPoly& a, const FqPoly& b);
FqPoly fq_scale(const Fq& F, const FqPoly& a, uint32_t s);
// Quotient and remainder; b must be nonzero.
std::pair<FqPoly, FqPoly> fq_divmod(const Fq& F, const FqPoly& a, const FqPoly& b);
FqPoly fq_gcd(const Fq& F, FqPoly a, FqPoly b);  // monic
FqPoly fq_derivative(const FqPoly& a);
uint32_t fq_eval(const Fq& F, const FqPoly& a, uint32_t x);
FqPoly fq_monic(const Fq& F, const FqPoly& a);
FqPoly fq_powmod(const Fq& F, const FqPoly& base, uint64_t e, const FqPoly& mod);

// All roots of a squarefree-or-not polynomial inside GF(2^m) itself,
// with multiplicities, found without scanning: rational roots split off
// via gcd with x^q - x, then extracted degree by degree.
//
// Returned pairs (root, multiplicity), sorted by root encoding.
std::vector<std::pair<uint32_t, int>> fq_roots(const Fq& F, const FqPoly& a);

// Degrees of the irreducible factors (distinct-degree information only).
std::vector<int> fq_factor_degrees(const Fq& F, FqPoly a);

}  // namespace qf
