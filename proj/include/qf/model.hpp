#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qf/genpoly.hpp"
#include "qf/laurent.hpp"
#include "qf/ratfunc.hpp"

namespace qf {

// Normal-form families of function fields over K in characteristic 2.
//
//   QEi       z^2 = a0 + x + a2 x^2 + a4 x^4          a4 not in K^2
//   QEii      z^4 = a0 + x + a2 x^2 + b2^2 x^4        a2 not in K^2, b2 not in K^2(a2)
//   QEiii     z^4 = a0 + x + a2 x^2                   a2 not in K^2
//   QEu       w^2 = a0 + x + a2 x^2,                  a2 not in K^2
//             z^2 = b0 + b1 x + b2 x^2 + w
//   G3i       y^4 = a0 + x + a2 x^2 + a4 x^4          a4 not in K^2
//   G3ii      z^4 = a0 + x + a2 x^2,                  a2 not in K^2; and
//             y^2 = c0 + c1 x + z + c2 z^2            c1 != 0 or c2 not in K^2+K^2 a2
//   Q4i       y^4 + a + x + b x^2 + c x^4 = 0         c not in K^2
//   Q4ii      y^4 + a z^4 + b y^2 + c z^2 + b z + d = 0   a not in K^2, b != 0
//
// The genus-1 families (QE*) are quasi-elliptic; the genus-3 ones carry a
// singular prime that is a canonical divisor.  Q4i/Q4ii are the plane
// quartic presentations of G3i/G3ii.
enum class Variant { QEi, QEii, QEiii, QEu, G3i, G3ii, Q4i, Q4ii };

const char* variant_name(Variant v);                      // "QE-i", ...
std::optional<Variant> variant_from_name(const std::string& s);
std::vector<std::string> variant_param_names(Variant v);  // e.g. {"a0","a2","a4"}

struct FunctionFieldModel {
    Variant variant;
    const BaseField* K = nullptr;
    std::map<std::string, RatFunc> params;

    const RatFunc& p(const std::string& name) const;
    std::string to_string() const;  // "Q4-ii a=1/t b=1/t c=1 d=0 K=F2(t)"
};

FunctionFieldModel make_model(Variant v, const BaseField& K, std::vector<RatFunc> values);

// Residue fields are recorded as root adjunctions: K(gen^(1/e), ...).
struct ResidueRoot {
    RatFunc generator;
    int root_exponent;  // 2 or 4
};
struct ResidueField {
    std::vector<ResidueRoot> roots;  // empty = K itself
    std::string to_string(const std::string& base) const;
};

struct PrimeData {
    std::vector<int> degrees;               // deg(p), deg(p1), ... down to the rational prime
    std::vector<ResidueField> residue_fields;
    std::vector<int> ramification;          // e(p|p1), e(p1|p2), ...
    std::vector<int> deltas;                // delta(p), delta(p1), delta(p2)
    bool hyperelliptic = false;             // G3ii with c1 = 0
};

// Checks the variant preconditions and reports the prime tower of the
// classification.  Throws PreconditionViolated naming the failed condition.
PrimeData validate(const FunctionFieldModel& model);

// The rewriting system presenting the field: symbol indices 0..3 stand for
// x, w, z, y; each bound generator carries a rule sym^2 -> lower terms.
struct RewriteSystem {
    std::vector<RewriteRule> rules;
    std::array<std::string, 4> names;
    std::array<bool, 4> used;
};
RewriteSystem rewriting(const FunctionFieldModel& model);

// Frobenius pullback presentations F = F_0 > F_1 > ... down to the
// rational field, each relation re-verified in the rewriting system.
struct FieldPresentation {
    std::string field;                    // "F", "F1", "F2", "F3"
    std::vector<std::string> generators;  // over K
    std::string relation;                 // empty for the rational bottom field
    bool rational;
    bool verified;
};
std::vector<FieldPresentation> pullback_chain(const FunctionFieldModel& model);

// Riemann-Roch basis of H^0(p_level^m) as normal-form monomials in the
// rewriting symbols.  Coverage follows the classification tables; anything
// else throws Unsupported.
class Unsupported : public Error {
public:
    using Error::Error;
};
struct RRBasis {
    std::vector<Exp4> monomials;
    std::array<std::string, 4> names;
    std::vector<std::string> to_strings() const;
};
RRBasis rr_basis(const FunctionFieldModel& model, int level, int m);
// True when H^0(p_level^m1) * H^0(p_level^m2) rewrites into the span of
// H^0(p_level^(m1+m2)), coefficient by coefficient.
bool rr_closure_check(const FunctionFieldModel& model, int level, int m1, int m2);

class BranchUnresolvable : public Error {
public:
    using Error::Error;
};

enum class DeltaBranch { Inertial, Ramified };
struct DeltaReport {
    int delta_p;
    int delta_p1;
    int delta_p2;
    DeltaBranch branch;
};

// Geometric singularity degrees by the local-expansion recipes: form the
// breve variables at the rational restriction, expand the right power as a
// Laurent series, pick the branch by residue-field membership, and read
// the degree off the differential order.
DeltaReport delta(const FunctionFieldModel& model, int precision = 16);

// The two quadrics in P^3 cutting out a quasi-elliptic curve, with the
// substitution check that the generators satisfy them.
struct QuadricPair {
    GenPoly q1, q2;                    // symbols x0..x3
    std::array<std::string, 4> names;  // {"x0","x1","x2","x3"}
    bool verified;
};
QuadricPair embed_quadrics(const FunctionFieldModel& model);

class Hyperelliptic : public Error {
public:
    Hyperelliptic(const std::string& msg, std::string rel)
        : Error(msg), relation(std::move(rel)) {}
    std::string relation;  // the genus-0 canonical-field relation
};

// Canonical plane quartic of a non-hyperelliptic genus-3 model:
// G3i -> Q4i by renaming, G3ii -> Q4ii through the parameter bijection
// (after the explicit c0 -> 0 shift).  The emitted quartic relation is
// re-verified against the source rewriting system.
FunctionFieldModel to_canonical_quartic(const FunctionFieldModel& model);

// Explicit normalization x -> x + c0/c1 turning a G3ii model into one with
// c0 = 0 (requires c1 != 0).
FunctionFieldModel normalize_constant_term(const FunctionFieldModel& model);

// Internal bridge: the G3ii model presenting a Q4ii model (parameter
// bijection inverse); used by delta and rr on Q4ii.
FunctionFieldModel q4ii_to_g3ii(const FunctionFieldModel& model);

}  // namespace qf
