#include "qf/powerbasis.hpp"

namespace qf {

std::map<Exp2, RatFunc> decompose_by_power_basis(const RatFunc& f, int k) {
    if (k < 1) throw Error("power exponent must be >= 1");
    const BaseField& K = f.field();
    const Fq& F = *K.F;
    const unsigned q = 1u << k;

    // f = n * d^(q-1) / d^q: split the numerator N = n * d^(q-1).
    MPoly N = mp_mul(F, f.num(), mp_pow(F, f.den(), q - 1));
    const MPoly& D = f.den();

    std::map<Exp2, MPoly> comps;
    for (const auto& [e, c] : N.terms) {
        Exp2 res{{static_cast<uint16_t>(e.e[0] % q), static_cast<uint16_t>(e.e[1] % q)}};
        Exp2 quo{{static_cast<uint16_t>(e.e[0] / q), static_cast<uint16_t>(e.e[1] / q)}};
        uint32_t root = c;
        for (int i = 0; i < k; ++i) root = F.sqrt(root);
        auto& comp = comps[res];
        comp.set(quo, F.add(comp.get(quo), root));
    }

    std::map<Exp2, RatFunc> out;
    for (auto& [e, p] : comps) {
        if (p.is_zero()) continue;
        RatFunc g = RatFunc(K, std::move(p), MPoly::constant(1)) / RatFunc(K, D, MPoly::constant(1));
        if (!g.is_zero()) out.emplace(e, std::move(g));
    }
    return out;
}

std::optional<RatFunc> power_membership(const RatFunc& f, int k) {
    if (f.is_zero()) return RatFunc::constant(f.field(), 0);
    auto comps = decompose_by_power_basis(f, k);
    for (const auto& [e, g] : comps)
        if (!(e == Exp2{})) return std::nullopt;
    auto it = comps.find(Exp2{});
    if (it == comps.end()) return RatFunc::constant(f.field(), 0);
    return it->second;
}

std::optional<std::pair<RatFunc, RatFunc>> span_membership(const RatFunc& f, const RatFunc& a,
                                                           int k) {
    const BaseField& K = f.field();
    auto acomps = decompose_by_power_basis(a, k);
    // locate a component of a outside the e = 0 class
    const Exp2 zero{};
    Exp2 pivot{};
    bool found = false;
    for (const auto& [e, g] : acomps)
        if (!(e == zero)) {
            pivot = e;
            found = true;
            break;
        }
    if (!found) throw DegenerateSpan("a lies in K^(2^k); the span {1, a} degenerates");

    auto fcomps = decompose_by_power_basis(f, k);
    auto fc = [&](Exp2 e) {
        auto it = fcomps.find(e);
        return it == fcomps.end() ? RatFunc::constant(K, 0) : it->second;
    };
    auto ac = [&](Exp2 e) {
        auto it = acomps.find(e);
        return it == acomps.end() ? RatFunc::constant(K, 0) : it->second;
    };

    RatFunc v = fc(pivot) / ac(pivot);
    // all other nonzero classes must agree
    for (const auto& [e, g] : fcomps) {
        if (e == zero) continue;
        if (fc(e) != v * ac(e)) return std::nullopt;
    }
    for (const auto& [e, g] : acomps) {
        if (e == zero) continue;
        if (fc(e) != v * ac(e)) return std::nullopt;
    }
    RatFunc u = fc(zero) + v * ac(zero);
    return std::make_pair(std::move(u), std::move(v));
}

}  // namespace qf
