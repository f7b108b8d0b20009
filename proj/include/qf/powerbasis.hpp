#pragma once

#include <map>
#include <optional>
#include <utility>

#include "qf/ratfunc.hpp"

namespace qf {

// K is spanned over K^(2^k) by the monomials t^e1 s^e2 with 0 <= e_i < 2^k.
// decompose_by_power_basis writes f = sum_e (t^e1 s^e2) g_e^(2^k) and
// returns the nonzero components g_e, keyed by the residue vector e.
//
// Denominators are cleared first (f = n d^(q-1) / d^q with q = 2^k, and
// d^q is a q-th power), then monomial exponents split by residue mod q and
// coefficients get their unique q-th roots in the perfect field F_{2^m}.
std::map<Exp2, RatFunc> decompose_by_power_basis(const RatFunc& f, int k);

// Witness g with g^(2^k) = f, when f is a (2^k)-th power in K.
std::optional<RatFunc> power_membership(const RatFunc& f, int k);

// Pair (u, v) with f = u^(2^k) + v^(2^k) a, when f lies in the
// K^(2^k)-span of {1, a}.  Requires a outside K^(2^k); otherwise the span
// degenerates and DegenerateSpan is thrown.
std::optional<std::pair<RatFunc, RatFunc>> span_membership(const RatFunc& f, const RatFunc& a,
                                                           int k);

}  // namespace qf
