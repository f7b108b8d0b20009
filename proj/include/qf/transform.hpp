#pragma once

#include <optional>
#include <vector>

#include "qf/model.hpp"

namespace qf {

class InvariantViolation : public Error {
public:
    using Error::Error;
};

// Coefficient tuple of a K-isomorphism between models of the same variant:
//
//   G3i    (x', y')     -> (eps^4 (x + beta), eps (y + gamma x + eta))
//   G3ii   (x', z', y') -> (eps^8 (x + beta), eps^2 (z + gamma), eps (y + eta + tau z))
//   Q4ii   same shape as G3ii, with beta derived from (eps, gamma, eta, tau)
//
// tau is unused for G3i; beta is never stored for Q4ii (recomputed from
// the other coefficients, with denominator a b^2 + c^2 + 1).
struct Transform {
    Variant variant;
    RatFunc eps, beta, gamma, eta, tau;

    static Transform identity(Variant v, const BaseField& K);
    bool is_identity() const;
    std::string to_string() const;
};

// Derived beta for a Q4ii transform; throws InvariantViolation when
// a b^2 + c^2 = 1 (the formula's denominator vanishes there).
RatFunc q4ii_beta(const FunctionFieldModel& model, const Transform& tr);

// Image model under the transformation (solves the constraint displays for
// the primed parameters); the result re-validates.
FunctionFieldModel apply_transform(const FunctionFieldModel& model, const Transform& tr);

// Composite transform: applying `first` then `second` equals applying the
// returned transform (group law on coefficient tuples).
Transform compose(const Transform& second, const Transform& first);

// b1^4/a2^3 for G3ii (the paper's b1 is this artifact's c1), a b^2 + c^2
// for Q4ii.
RatFunc invariant_of(const FunctionFieldModel& model);

// Finite, deterministic candidate pool: all constants of F_{2^m}, then all
// reduced fractions of polynomials with degree <= max_degree.
std::vector<RatFunc> candidate_set(const BaseField& K, int max_degree);

struct SearchReport {
    std::optional<Transform> transform;
    long long candidates_examined = 0;
    bool invariant_filtered = false;  // short-circuited on invariant mismatch
};

// Bounded exact search for an isomorphism model2 -> model1 image, i.e. a
// transform with apply_transform(model1, tr) == model2.  The loop runs
// over the announced free coefficients; the remaining ones are solved by
// root extraction, so hits outside the pool are still found.
SearchReport search_transform(const FunctionFieldModel& model1, const FunctionFieldModel& model2,
                              const std::vector<RatFunc>& bounds);

// All automorphism tuples with free coefficients in the pool; always
// contains the identity.
std::vector<Transform> automorphisms(const FunctionFieldModel& model,
                                     const std::vector<RatFunc>& bounds);

// The proof's parameter bijection (a2, c1, a0, c2) <-> (a, b, c, d)
// between normalized G3ii tuples and Q4ii tuples.
enum class BijectionDirection { Forward, Inverse };
std::vector<RatFunc> param_bijection(BijectionDirection dir, const std::vector<RatFunc>& tuple);

}  // namespace qf
