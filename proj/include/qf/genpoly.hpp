#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "qf/ratfunc.hpp"

namespace qf {

struct Exp4 {
    std::array<uint16_t, 4> e{0, 0, 0, 0};
    bool operator<(const Exp4& o) const { return e < o.e; }
    bool operator==(const Exp4& o) const { return e == o.e; }
};

// Polynomial in up to four symbols with coefficients in K.  The symbols
// stand for function-field generators (x, w, z, y) or projective
// coordinates; reduction rules of the form  sym^p -> polynomial in lower
// symbols  turn this into a normal-form calculator for the fields cut out
// by the model relations.
class GenPoly {
public:
    GenPoly() = default;
    explicit GenPoly(const BaseField& k) : k_(&k) {}
    static GenPoly constant(const BaseField& k, const RatFunc& a);
    static GenPoly symbol(const BaseField& k, int idx, uint16_t deg = 1);

    const BaseField& field() const { return *k_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exp4, RatFunc>& terms() const { return terms_; }

    GenPoly operator+(const GenPoly& o) const;
    GenPoly operator*(const GenPoly& o) const;
    GenPoly operator*(const RatFunc& a) const;
    GenPoly pow(unsigned e) const;
    bool operator==(const GenPoly& o) const;

    void add_term(Exp4 e, const RatFunc& c);
    RatFunc coefficient(Exp4 e) const;

    // Substitute each symbol by the given polynomial.
    GenPoly substitute(const std::array<GenPoly, 4>& images) const;

    std::string to_string(const std::array<std::string, 4>& names) const;

private:
    const BaseField* k_ = nullptr;
    std::map<Exp4, RatFunc> terms_;
};

// One rewrite rule: symbol^power -> rhs (a polynomial in strictly lower
// symbols, so reduction terminates).
struct RewriteRule {
    int symbol;
    uint16_t power;
    GenPoly rhs;
};

// Reduce to normal form modulo the rules.
GenPoly reduce(GenPoly p, const std::vector<RewriteRule>& rules);

}  // namespace qf
