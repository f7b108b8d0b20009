#include "qf/transform.hpp"

#include <algorithm>

#include "qf/powerbasis.hpp"

namespace qf {

Transform Transform::identity(Variant v, const BaseField& K) {
    RatFunc zero = RatFunc::constant(K, 0);
    return Transform{v, RatFunc::constant(K, 1), zero, zero, zero, zero};
}

bool Transform::is_identity() const {
    return eps.is_one() && beta.is_zero() && gamma.is_zero() && eta.is_zero() && tau.is_zero();
}

std::string Transform::to_string() const {
    std::string s = "eps=" + eps.to_string();
    if (variant != Variant::Q4ii) s += " beta=" + beta.to_string();
    s += " gamma=" + gamma.to_string() + " eta=" + eta.to_string();
    if (variant != Variant::G3i) s += " tau=" + tau.to_string();
    return s;
}

RatFunc q4ii_beta(const FunctionFieldModel& model, const Transform& tr) {
    const BaseField& K = *model.K;
    RatFunc one = RatFunc::constant(K, 1);
    const RatFunc& a = model.p("a");
    const RatFunc& b = model.p("b");
    const RatFunc& c = model.p("c");
    const RatFunc& d = model.p("d");
    RatFunc denom = a * b.square() + c.square() + one;
    if (denom.is_zero())
        throw InvariantViolation("a b^2 + c^2 = 1: the beta formula degenerates");
    RatFunc inner = tr.gamma.square() * (tr.tau.square() * b + d + one) +
                    (tr.gamma + tr.eta.square()) * b;
    return b.square() / denom * inner;
}

FunctionFieldModel apply_transform(const FunctionFieldModel& model, const Transform& tr) {
    if (tr.variant != model.variant) throw PreconditionViolated("transform/model variant mismatch");
    const BaseField& K = *model.K;
    if (tr.eps.is_zero()) throw PreconditionViolated("eps = 0");
    switch (model.variant) {
        case Variant::G3i: {
            // eps^4 a2' = a2,  eps^12 a4' = a4 + gamma^4,
            // eps^-4 a0' = a0 + beta^2 a2 + beta^4 a4 + eta^4 + gamma^4 beta^4 + beta
            const RatFunc &a0 = model.p("a0"), &a2 = model.p("a2"), &a4 = model.p("a4");
            RatFunc a2p = a2 / tr.eps.pow(4);
            RatFunc a4p = (a4 + tr.gamma.pow(4)) / tr.eps.pow(12);
            RatFunc a0p = tr.eps.pow(4) * (a0 + tr.beta.square() * a2 + tr.beta.pow(4) * a4 +
                                           tr.eta.pow(4) + tr.gamma.pow(4) * tr.beta.pow(4) +
                                           tr.beta);
            auto out = make_model(Variant::G3i, K, {a0p, a2p, a4p});
            validate(out);
            return out;
        }
        case Variant::G3ii: {
            // eps^8 a2' = a2,  eps^-8 a0' = a0 + beta^2 a2 + beta + gamma^4,
            // eps^6 c1' = c1,  eps^2 c2' = c2 + tau^2,
            // eps^-2 c0' = c0 + beta c1 + gamma^2 (c2 + tau^2) + gamma + eta^2
            const RatFunc &a0 = model.p("a0"), &a2 = model.p("a2");
            const RatFunc &c0 = model.p("c0"), &c1 = model.p("c1"), &c2 = model.p("c2");
            RatFunc a2p = a2 / tr.eps.pow(8);
            RatFunc a0p = tr.eps.pow(8) * (a0 + tr.beta.square() * a2 + tr.beta + tr.gamma.pow(4));
            RatFunc c1p = c1 / tr.eps.pow(6);
            RatFunc c2p = (c2 + tr.tau.square()) / tr.eps.square();
            RatFunc c0p = tr.eps.square() * (c0 + tr.beta * c1 +
                                             tr.gamma.square() * (c2 + tr.tau.square()) + tr.gamma +
                                             tr.eta.square());
            auto out = make_model(Variant::G3ii, K, {a0p, a2p, c0p, c1p, c2p});
            validate(out);
            return out;
        }
        case Variant::Q4ii: {
            // eps^4 a' = a + tau^4,  eps^-2 b' = b,  c' = c + tau^2 b,
            // eps^-4 d' = d + gamma^4 (tau^4 + a) + gamma^2 c + eta^4
            //             + (gamma^2 tau^2 + gamma + eta^2) b
            const RatFunc &a = model.p("a"), &b = model.p("b"), &c = model.p("c"),
                          &d = model.p("d");
            q4ii_beta(model, tr);  // raises InvariantViolation on the degenerate locus
            RatFunc ap = (a + tr.tau.pow(4)) / tr.eps.pow(4);
            RatFunc bp = tr.eps.square() * b;
            RatFunc cp = c + tr.tau.square() * b;
            RatFunc dp = tr.eps.pow(4) *
                         (d + tr.gamma.pow(4) * (tr.tau.pow(4) + a) + tr.gamma.square() * c +
                          tr.eta.pow(4) +
                          (tr.gamma.square() * tr.tau.square() + tr.gamma + tr.eta.square()) * b);
            auto out = make_model(Variant::Q4ii, K, {ap, bp, cp, dp});
            validate(out);
            return out;
        }
        default:
            throw PreconditionViolated("transformations are defined for G3-i, G3-ii and Q4-ii");
    }
}

Transform compose(const Transform& second, const Transform& first) {
    if (second.variant != first.variant) throw PreconditionViolated("variant mismatch in compose");
    const RatFunc &e1 = first.eps, &e2 = second.eps;
    Transform r;
    r.variant = first.variant;
    r.eps = e1 * e2;
    switch (first.variant) {
        case Variant::G3i:
            r.beta = first.beta + second.beta / e1.pow(4);
            r.gamma = first.gamma + second.gamma * e1.pow(3);
            r.eta = first.eta + second.gamma * e1.pow(3) * first.beta + second.eta / e1;
            r.tau = first.tau;  // zero for this variant
            break;
        case Variant::G3ii:
        case Variant::Q4ii:
            r.beta = first.beta + second.beta / e1.pow(8);
            r.gamma = first.gamma + second.gamma / e1.square();
            r.eta = first.eta + second.eta / e1 + e1 * second.tau * first.gamma;
            r.tau = first.tau + e1 * second.tau;
            break;
        default:
            throw PreconditionViolated("transformations are defined for G3-i, G3-ii and Q4-ii");
    }
    return r;
}

RatFunc invariant_of(const FunctionFieldModel& model) {
    switch (model.variant) {
        case Variant::G3ii:
            return model.p("c1").pow(4) / model.p("a2").pow(3);
        case Variant::Q4ii:
            return model.p("a") * model.p("b").square() + model.p("c").square();
        default:
            throw PreconditionViolated("invariant is defined for G3-ii and Q4-ii models");
    }
}

std::vector<RatFunc> candidate_set(const BaseField& K, int max_degree) {
    const Fq& F = *K.F;
    std::vector<RatFunc> out;
    for (uint32_t v = 0; v < F.q(); ++v) out.push_back(RatFunc::constant(K, v));
    if (max_degree <= 0 || K.r < 1) return out;
    // all polynomials of degree <= max_degree in the first variable
    unsigned count = 1;
    for (int i = 0; i <= max_degree; ++i) count *= F.q();
    auto poly_of = [&](unsigned code) {
        MPoly p;
        for (int i = 0; i <= max_degree; ++i) {
            uint32_t c = code % F.q();
            code /= F.q();
            if (c) p.set(Exp2{{static_cast<uint16_t>(i), 0}}, c);
        }
        return p;
    };
    std::vector<RatFunc> fractions;
    for (unsigned n = 0; n < count; ++n) {
        MPoly num = poly_of(n);
        if (num.is_zero() || num.is_constant()) continue;
        out.push_back(RatFunc(K, num, MPoly::constant(1)));
    }
    for (unsigned d = 0; d < count; ++d) {
        MPoly den = poly_of(d);
        if (den.is_zero() || den.is_constant()) continue;
        for (unsigned n = 0; n < count; ++n) {
            MPoly num = poly_of(n);
            if (num.is_zero()) continue;
            RatFunc f(K, num, den);
            if (f.is_polynomial()) continue;  // already listed (or will be) in reduced form
            fractions.push_back(std::move(f));
        }
    }
    std::sort(fractions.begin(), fractions.end());
    fractions.erase(std::unique(fractions.begin(), fractions.end()), fractions.end());
    out.insert(out.end(), fractions.begin(), fractions.end());
    return out;
}

namespace {

std::optional<RatFunc> nth_root(const RatFunc& f, int k) { return power_membership(f, k); }

bool models_equal(const FunctionFieldModel& a, const FunctionFieldModel& b) {
    for (const auto& n : variant_param_names(a.variant))
        if (a.p(n) != b.p(n)) return false;
    return true;
}

}  // namespace

SearchReport search_transform(const FunctionFieldModel& model1, const FunctionFieldModel& model2,
                              const std::vector<RatFunc>& bounds) {
    if (model1.variant != model2.variant)
        throw PreconditionViolated("isomorphism search needs models of one variant");
    SearchReport rep;
    const BaseField& K = *model1.K;
    // necessary-condition filter
    if (model1.variant == Variant::G3ii || model1.variant == Variant::Q4ii) {
        if (invariant_of(model1) != invariant_of(model2)) {
            rep.invariant_filtered = true;
            return rep;
        }
    }
    auto zero = RatFunc::constant(K, 0);
    auto try_out = [&](const Transform& tr) {
        ++rep.candidates_examined;
        try {
            if (models_equal(apply_transform(model1, tr), model2)) {
                rep.transform = tr;
                return true;
            }
        } catch (const Error&) {
        }
        return false;
    };

    switch (model1.variant) {
        case Variant::G3i: {
            const RatFunc &a0 = model1.p("a0"), &a2 = model1.p("a2"), &a4 = model1.p("a4");
            for (const auto& eps : bounds) {
                if (eps.is_zero()) continue;
                if (model2.p("a2") * eps.pow(4) != a2) continue;
                auto g4 = model2.p("a4") * eps.pow(12) + a4;
                auto gamma = nth_root(g4, 2);
                if (!gamma) continue;
                for (const auto& beta : bounds) {
                    auto e4 = model2.p("a0") / eps.pow(4) + a0 + beta.square() * a2 +
                              beta.pow(4) * a4 + gamma->pow(4) * beta.pow(4) + beta;
                    auto eta = nth_root(e4, 2);
                    if (!eta) continue;
                    Transform tr{Variant::G3i, eps, beta, *gamma, *eta, zero};
                    if (try_out(tr)) return rep;
                }
            }
            return rep;
        }
        case Variant::G3ii: {
            const RatFunc &a0 = model1.p("a0"), &a2 = model1.p("a2");
            const RatFunc &c0 = model1.p("c0"), &c1 = model1.p("c1"), &c2 = model1.p("c2");
            for (const auto& eps : bounds) {
                if (eps.is_zero()) continue;
                if (model2.p("a2") * eps.pow(8) != a2) continue;
                if (model2.p("c1") * eps.pow(6) != c1) continue;
                auto t2 = model2.p("c2") * eps.square() + c2;
                auto tau = nth_root(t2, 1);
                if (!tau) continue;
                for (const auto& beta : bounds) {
                    auto g4 = model2.p("a0") / eps.pow(8) + a0 + beta.square() * a2 + beta;
                    auto gamma = nth_root(g4, 2);
                    if (!gamma) continue;
                    auto e2 = model2.p("c0") / eps.square() + c0 + beta * c1 +
                              gamma->square() * (c2 + tau->square()) + *gamma;
                    auto eta = nth_root(e2, 1);
                    if (!eta) continue;
                    Transform tr{Variant::G3ii, eps, beta, *gamma, *eta, *tau};
                    if (try_out(tr)) return rep;
                }
            }
            return rep;
        }
        case Variant::Q4ii: {
            const RatFunc &a = model1.p("a"), &b = model1.p("b"), &c = model1.p("c"),
                          &d = model1.p("d");
            for (const auto& eps : bounds) {
                if (eps.is_zero()) continue;
                if (eps.square() * b != model2.p("b")) continue;
                auto t4 = model2.p("a") * eps.pow(4) + a;
                auto tau = nth_root(t4, 2);
                if (!tau) continue;
                if (model2.p("c") != c + tau->square() * b) continue;
                for (const auto& gamma : bounds) {
                    // eta^4 + eta^2 b = RHS; sweep eta as well (no radical solve in K)
                    auto rhs = model2.p("d") / eps.pow(4) + d + gamma.pow(4) * (tau->pow(4) + a) +
                               gamma.square() * c + (gamma.square() * tau->square() + gamma) * b;
                    for (const auto& eta : bounds) {
                        if (eta.pow(4) + eta.square() * b != rhs) continue;
                        Transform tr{Variant::Q4ii, eps, zero, gamma, eta, *tau};
                        if (try_out(tr)) return rep;
                    }
                }
            }
            return rep;
        }
        default:
            throw PreconditionViolated("isomorphism search is defined for G3-i, G3-ii and Q4-ii");
    }
}

std::vector<Transform> automorphisms(const FunctionFieldModel& model,
                                     const std::vector<RatFunc>& bounds) {
    const BaseField& K = *model.K;
    auto zero = RatFunc::constant(K, 0);
    auto one = RatFunc::constant(K, 1);
    std::vector<Transform> out;
    auto push_if_valid = [&](const Transform& tr) {
        try {
            if (models_equal(apply_transform(model, tr), model)) out.push_back(tr);
        } catch (const Error&) {
        }
    };
    switch (model.variant) {
        case Variant::G3i: {
            // eps^3 = 1, (eps + 1) a2 = 0,
            // eta^4 = (eps^2 + 1) a0 + beta^2 a2 + beta^4 a4 + beta
            const RatFunc &a0 = model.p("a0"), &a2 = model.p("a2"), &a4 = model.p("a4");
            for (const auto& eps : bounds) {
                if (eps.is_zero() || !(eps.pow(3)).is_one()) continue;
                if (!((eps + one) * a2).is_zero()) continue;
                for (const auto& beta : bounds) {
                    auto e4 = (eps.square() + one) * a0 + beta.square() * a2 + beta.pow(4) * a4 +
                              beta;
                    auto eta = nth_root(e4, 2);
                    if (!eta) continue;
                    push_if_valid(Transform{Variant::G3i, eps, beta, zero, *eta, zero});
                }
            }
            break;
        }
        case Variant::G3ii: {
            // gamma^4 = beta + beta^2 a2,  eta^2 = beta c1 + gamma + gamma^2 c2
            const RatFunc &a2 = model.p("a2"), &c1 = model.p("c1"), &c2 = model.p("c2");
            for (const auto& beta : bounds) {
                auto g4 = beta + beta.square() * a2;
                auto gamma = nth_root(g4, 2);
                if (!gamma) continue;
                auto e2 = beta * c1 + *gamma + gamma->square() * c2;
                auto eta = nth_root(e2, 1);
                if (!eta) continue;
                push_if_valid(Transform{Variant::G3ii, one, beta, *gamma, *eta, zero});
            }
            break;
        }
        case Variant::Q4ii: {
            // gamma^4 a + gamma^2 c + eta^4 + (gamma + eta^2) b = 0
            const RatFunc &a = model.p("a"), &b = model.p("b"), &c = model.p("c");
            for (const auto& gamma : bounds)
                for (const auto& eta : bounds) {
                    auto lhs = gamma.pow(4) * a + gamma.square() * c + eta.pow(4) +
                               (gamma + eta.square()) * b;
                    if (!lhs.is_zero()) continue;
                    push_if_valid(Transform{Variant::Q4ii, one, zero, gamma, eta, zero});
                }
            break;
        }
        default:
            throw PreconditionViolated("automorphisms are defined for G3-i, G3-ii and Q4-ii");
    }
    std::sort(out.begin(), out.end(), [](const Transform& x, const Transform& y) {
        auto key = [](const Transform& t) {
            return std::vector<RatFunc>{t.eps, t.beta, t.gamma, t.eta, t.tau};
        };
        return key(x) < key(y);
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const Transform& x, const Transform& y) {
                              return x.eps == y.eps && x.beta == y.beta && x.gamma == y.gamma &&
                                     x.eta == y.eta && x.tau == y.tau;
                          }),
              out.end());
    return out;
}

std::vector<RatFunc> param_bijection(BijectionDirection dir, const std::vector<RatFunc>& tuple) {
    if (tuple.size() != 4) throw PreconditionViolated("the bijection takes 4-parameter tuples");
    const BaseField& K = tuple[0].field();
    RatFunc one = RatFunc::constant(K, 1);
    if (dir == BijectionDirection::Forward) {
        // (a2, c1, a0, c2) -> (a, b, c, d)
        const RatFunc &a2 = tuple[0], &c1 = tuple[1], &a0 = tuple[2], &c2 = tuple[3];
        if (c1.is_zero()) throw PreconditionViolated("c1 = 0");
        if (power_membership(a2, 1)) throw PreconditionViolated("a2 in K^2");
        RatFunc ia2 = a2.inverse();
        return {ia2 * (c1.square() + a2 * c2.square()), ia2 * c1, ia2 * (a2 + c1 * c2),
                ia2 * c1.square() * a0};
    }
    // (a, b, c, d) -> (a2, c1, a0, c2)
    const RatFunc &a = tuple[0], &b = tuple[1], &c = tuple[2], &d = tuple[3];
    if (b.is_zero()) throw PreconditionViolated("b = 0");
    if (power_membership(a, 1)) throw PreconditionViolated("a in K^2");
    RatFunc c2 = (c + one) / b;
    RatFunc denom = a + c2.square();
    if (denom.is_zero()) throw PreconditionViolated("a = ((c+1)/b)^2 is a square");
    RatFunc c1 = denom / b;
    RatFunc a2 = c1 / b;
    RatFunc a0 = d / denom;
    if (power_membership(a2, 1)) throw PreconditionViolated("derived a2 in K^2");
    return {a2, c1, a0, c2};
}

}  // namespace qf
