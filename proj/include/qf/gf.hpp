#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace qf {

// Arithmetic context for GF(2^m), 1 <= m <= 16, in polynomial basis.
//
// Every degree uses a fixed published irreducible polynomial (classic
// LFSR/Peterson table), so element encodings are stable across runs and
// platforms: an element is a bit vector of polynomial-basis coordinates,
// value 0x2 is the basis generator g.
//
// Multiplication and inversion go through exp/log tables (all table
// polynomials are primitive, so g generates the multiplicative group).
// Squaring is a linear map in characteristic 2; its inverse gives the
// unique square root.
class Fq {
public:
    static const Fq& get(int m);           // shared context per degree, lazily built
    static uint32_t modulus_bits(int m);   // irreducible polynomial bit pattern

    int m() const { return m_; }
    uint32_t q() const { return q_; }
    uint32_t poly() const { return poly_; }

    uint32_t add(uint32_t a, uint32_t b) const { return a ^ b; }
    uint32_t mul(uint32_t a, uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        uint32_t s = log_[a] + log_[b];
        if (s >= q_ - 1) s -= q_ - 1;
        return exp_[s];
    }
    uint32_t inv(uint32_t a) const;
    uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }
    uint32_t pow(uint32_t a, long long e) const;

    // Frobenius x -> x^2 and its inverse (bijective in a finite field).
    uint32_t square(uint32_t a) const { return mul(a, a); }
    uint32_t sqrt(uint32_t a) const;

    // Smallest solution u of u^2 + u = c, if any (the map is 2-to-1 onto
    // its image, an F2-hyperplane).  Returns false when c has no preimage.
    bool solve_artin_schreier(uint32_t c, uint32_t& u) const;

    uint32_t generator() const { return m_ == 1 ? 1u : 2u; }
    uint32_t from_int(uint64_t bits) const { return static_cast<uint32_t>(bits) & (q_ - 1); }

    // Subfield embedding GF(2^m) -> GF(2^M) for m | M: sends the generator
    // to the deterministically chosen smallest root of this field's modulus
    // in the bigger field.
    static uint32_t embed(int m, int M, uint32_t v);
    // Partial inverse of embed(); false if v is outside the embedded image.
    static bool project(int M, int m, uint32_t v, uint32_t& out);

    // Fixed points of x -> x^(2^j) form the subfield GF(2^j) (j | m).
    bool in_subfield(int j, uint32_t v) const { return pow_frobenius(v, j) == v; }
    uint32_t pow_frobenius(uint32_t v, int j) const;  // x -> x^(2^j)

    std::string to_string(uint32_t v) const;  // 0, 1, g, g<k> (power of the generator)

private:
    explicit Fq(int m);

    int m_;
    uint32_t q_;
    uint32_t poly_;
    std::vector<uint32_t> exp_;  // exp_[i] = g^i, doubled to avoid one reduction
    std::vector<uint32_t> log_;
    // Artin-Schreier solver: basis images of u -> u^2 + u and preimages.
    mutable std::vector<uint32_t> as_image_basis_;
    mutable std::vector<uint32_t> as_preimage_;
    mutable bool as_ready_ = false;
    void build_artin_schreier() const;
};

// Convenience for tests: true iff the table polynomial of degree m is
// irreducible over F2 (checked by Frobenius/gcd criteria).
bool table_polynomial_irreducible(int m);

}  // namespace qf
