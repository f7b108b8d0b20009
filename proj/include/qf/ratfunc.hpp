#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "qf/mpoly.hpp"

namespace qf {

// The base field K = F_{2^m}(t_1, ..., t_r), r <= 2.  Immutable; shared by
// pointer from every element of K.
struct BaseField {
    const Fq* F = nullptr;
    int r = 1;
    std::array<std::string, 2> names{"t", "s"};

    static const BaseField& get(int m, int r);
    bool operator==(const BaseField& o) const { return F == o.F && r == o.r; }
    std::string to_string() const;
};

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};
class PreconditionViolated : public Error {
public:
    using Error::Error;
};
class DegenerateSpan : public Error {
public:
    using Error::Error;
};
class PrecisionExhausted : public Error {
public:
    using Error::Error;
};

// Element of K in canonical form: numerator and denominator coprime, and
// the denominator's lex-leading coefficient equal to 1.  Equal field
// elements therefore compare equal term-by-term.
class RatFunc {
public:
    RatFunc() = default;
    RatFunc(const BaseField& k, MPoly num, MPoly den);
    static RatFunc from_int(const BaseField& k, uint64_t bits);
    static RatFunc constant(const BaseField& k, uint32_t a);
    static RatFunc variable(const BaseField& k, int idx);

    const BaseField& field() const { return *k_; }
    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_polynomial() const { return den_.is_constant(); }

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const { return *this + o; }  // char 2
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc inverse() const;
    RatFunc pow(long long e) const;
    RatFunc square() const { return *this * *this; }

    bool operator==(const RatFunc& o) const;
    bool operator!=(const RatFunc& o) const { return !(*this == o); }
    // Deterministic total order (for map keys and candidate enumeration).
    bool operator<(const RatFunc& o) const;

    std::string to_string() const;

private:
    const BaseField* k_ = nullptr;
    MPoly num_, den_ = MPoly::constant(1);
    void canonicalize();
    void check_same(const RatFunc& o) const {
        if (k_ != o.k_) throw Error("mixed base fields");
    }
};

}  // namespace qf
