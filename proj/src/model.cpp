#include "qf/model.hpp"

#include <algorithm>

#include "qf/powerbasis.hpp"

namespace qf {

namespace {

const std::map<Variant, std::vector<std::string>>& param_table() {
    static const std::map<Variant, std::vector<std::string>> t = {
        {Variant::QEi, {"a0", "a2", "a4"}},
        {Variant::QEii, {"a0", "a2", "b2"}},
        {Variant::QEiii, {"a0", "a2"}},
        {Variant::QEu, {"a0", "a2", "b0", "b1", "b2"}},
        {Variant::G3i, {"a0", "a2", "a4"}},
        {Variant::G3ii, {"a0", "a2", "c0", "c1", "c2"}},
        {Variant::Q4i, {"a", "b", "c"}},
        {Variant::Q4ii, {"a", "b", "c", "d"}},
    };
    return t;
}

}  // namespace

const char* variant_name(Variant v) {
    switch (v) {
        case Variant::QEi: return "QE-i";
        case Variant::QEii: return "QE-ii";
        case Variant::QEiii: return "QE-iii";
        case Variant::QEu: return "QE-unified";
        case Variant::G3i: return "G3-i";
        case Variant::G3ii: return "G3-ii";
        case Variant::Q4i: return "Q4-i";
        case Variant::Q4ii: return "Q4-ii";
    }
    return "?";
}

std::optional<Variant> variant_from_name(const std::string& s) {
    for (Variant v : {Variant::QEi, Variant::QEii, Variant::QEiii, Variant::QEu, Variant::G3i,
                      Variant::G3ii, Variant::Q4i, Variant::Q4ii})
        if (s == variant_name(v)) return v;
    if (s == "QE-u") return Variant::QEu;
    return std::nullopt;
}

std::vector<std::string> variant_param_names(Variant v) { return param_table().at(v); }

const RatFunc& FunctionFieldModel::p(const std::string& name) const {
    auto it = params.find(name);
    if (it == params.end()) throw Error("model has no parameter " + name);
    return it->second;
}

std::string FunctionFieldModel::to_string() const {
    std::string s = variant_name(variant);
    for (const auto& n : variant_param_names(variant)) s += " " + n + "=" + p(n).to_string();
    s += " K=" + K->to_string();
    return s;
}

FunctionFieldModel make_model(Variant v, const BaseField& K, std::vector<RatFunc> values) {
    const auto& names = variant_param_names(v);
    if (values.size() != names.size())
        throw Error(std::string(variant_name(v)) + " takes " + std::to_string(names.size()) +
                    " parameters");
    FunctionFieldModel m;
    m.variant = v;
    m.K = &K;
    for (size_t i = 0; i < names.size(); ++i) m.params.emplace(names[i], std::move(values[i]));
    return m;
}

std::string ResidueField::to_string(const std::string& base) const {
    if (roots.empty()) return base;
    std::string s = base + "(";
    for (size_t i = 0; i < roots.size(); ++i) {
        if (i) s += ", ";
        s += "(" + roots[i].generator.to_string() + ")^(1/" + std::to_string(roots[i].root_exponent) +
             ")";
    }
    return s + ")";
}

namespace {

bool in_k2(const RatFunc& f) { return power_membership(f, 1).has_value(); }
bool in_k2_span(const RatFunc& f, const RatFunc& a) { return span_membership(f, a, 1).has_value(); }

}  // namespace

PrimeData validate(const FunctionFieldModel& model) {
    const BaseField& K = *model.K;
    PrimeData out;
    auto k_field = ResidueField{};
    switch (model.variant) {
        case Variant::QEi: {
            const auto& a4 = model.p("a4");
            if (in_k2(a4)) throw PreconditionViolated("a4 in K^2");
            out.degrees = {2, 1};
            out.residue_fields = {ResidueField{{{a4, 2}}}, k_field};
            out.ramification = {1};
            out.deltas = {1, 0};
            break;
        }
        case Variant::QEii: {
            const auto& a2 = model.p("a2");
            const auto& b2 = model.p("b2");
            if (in_k2(a2)) throw PreconditionViolated("a2 in K^2");
            if (in_k2_span(b2, a2)) throw PreconditionViolated("b2 in K^2(a2)");
            out.degrees = {4, 2, 1};
            out.residue_fields = {ResidueField{{{a2, 2}, {b2, 2}}}, ResidueField{{{a2, 2}}}, k_field};
            out.ramification = {1, 1};
            out.deltas = {1, 0, 0};
            break;
        }
        case Variant::QEiii: {
            const auto& a2 = model.p("a2");
            if (in_k2(a2)) throw PreconditionViolated("a2 in K^2");
            out.degrees = {2, 2, 1};
            out.residue_fields = {ResidueField{{{a2, 2}}}, ResidueField{{{a2, 2}}}, k_field};
            out.ramification = {2, 1};
            out.deltas = {1, 0, 0};
            break;
        }
        case Variant::QEu: {
            const auto& a2 = model.p("a2");
            const auto& b2 = model.p("b2");
            if (in_k2(a2)) throw PreconditionViolated("a2 in K^2");
            bool ramified = in_k2_span(b2, a2);
            if (!ramified) {
                out.degrees = {4, 2, 1};
                out.residue_fields = {ResidueField{{{a2, 2}, {b2, 2}}}, ResidueField{{{a2, 2}}},
                                      k_field};
                out.ramification = {1, 1};
            } else {
                out.degrees = {2, 2, 1};
                out.residue_fields = {ResidueField{{{a2, 2}}}, ResidueField{{{a2, 2}}}, k_field};
                out.ramification = {2, 1};
            }
            out.deltas = {1, 0, 0};
            break;
        }
        case Variant::G3i: {
            const auto& a4 = model.p("a4");
            if (in_k2(a4)) throw PreconditionViolated("a4 in K^2");
            out.degrees = {4, 2, 1};
            out.residue_fields = {ResidueField{{{a4, 4}}}, ResidueField{{{a4, 2}}}, k_field};
            out.ramification = {1, 1};
            out.deltas = {3, 1, 0};
            break;
        }
        case Variant::G3ii: {
            const auto& a2 = model.p("a2");
            const auto& c1 = model.p("c1");
            const auto& c2 = model.p("c2");
            if (in_k2(a2)) throw PreconditionViolated("a2 in K^2");
            if (c1.is_zero() && in_k2_span(c2, a2))
                throw PreconditionViolated("c1 = 0 and c2 in K^2 + K^2 a2");
            RatFunc gamma = c2.square() + c1.square() / a2;  // kappa(p) = K(a2^(1/2), gamma^(1/4))
            out.degrees = {4, 2, 2, 1};
            out.residue_fields = {ResidueField{{{a2, 2}, {gamma, 4}}}, ResidueField{{{a2, 2}}},
                                  ResidueField{{{a2, 2}}}, k_field};
            out.ramification = {1, 2, 1};
            out.deltas = {3, 1, 0};
            out.hyperelliptic = c1.is_zero();
            break;
        }
        case Variant::Q4i: {
            const auto& c = model.p("c");
            if (in_k2(c)) throw PreconditionViolated("c in K^2");
            out.degrees = {4, 2, 1};
            out.residue_fields = {ResidueField{{{c, 4}}}, ResidueField{{{c, 2}}}, k_field};
            out.ramification = {1, 1};
            out.deltas = {3, 1, 0};
            break;
        }
        case Variant::Q4ii: {
            const auto& a = model.p("a");
            const auto& b = model.p("b");
            if (b.is_zero()) throw PreconditionViolated("b = 0");
            if (in_k2(a)) throw PreconditionViolated("a in K^2");
            out.degrees = {4, 2, 2, 1};
            out.residue_fields = {ResidueField{{{a, 4}}}, ResidueField{{{a, 2}}},
                                  ResidueField{{{a, 2}}}, k_field};
            out.ramification = {1, 2, 1};
            out.deltas = {3, 1, 0};
            break;
        }
    }
    // Tower consistency: [F_i : F_{i+1}] = 2 = e_i * (deg p_i / deg p_{i+1}).
    for (size_t i = 0; i + 1 < out.degrees.size(); ++i)
        if (2 * out.degrees[i + 1] != out.ramification[i] * out.degrees[i])
            throw Error("inconsistent prime tower");
    (void)K;
    return out;
}

RewriteSystem rewriting(const FunctionFieldModel& model) {
    const BaseField& K = *model.K;
    auto C = [&](const RatFunc& a) { return GenPoly::constant(K, a); };
    auto one = RatFunc::constant(K, 1);
    GenPoly X = GenPoly::symbol(K, 0), W = GenPoly::symbol(K, 1), Z = GenPoly::symbol(K, 2),
            Y = GenPoly::symbol(K, 3);
    RewriteSystem rs;
    rs.names = {"x", "w", "z", "y"};
    rs.used = {true, false, false, false};
    switch (model.variant) {
        case Variant::QEi: {
            GenPoly rhs = C(model.p("a0")) + X + X.pow(2) * model.p("a2") + X.pow(4) * model.p("a4");
            rs.rules = {{2, 2, rhs}};
            rs.used[2] = true;
            break;
        }
        case Variant::QEii: {
            GenPoly wr = C(model.p("a0")) + X + X.pow(2) * model.p("a2");
            GenPoly zr = W + X.pow(2) * model.p("b2");
            rs.rules = {{1, 2, wr}, {2, 2, zr}};
            rs.used[1] = rs.used[2] = true;
            break;
        }
        case Variant::QEiii: {
            GenPoly wr = C(model.p("a0")) + X + X.pow(2) * model.p("a2");
            rs.rules = {{1, 2, wr}, {2, 2, W}};
            rs.used[1] = rs.used[2] = true;
            break;
        }
        case Variant::QEu: {
            GenPoly wr = C(model.p("a0")) + X + X.pow(2) * model.p("a2");
            GenPoly zr = C(model.p("b0")) + X * model.p("b1") + X.pow(2) * model.p("b2") + W;
            rs.rules = {{1, 2, wr}, {2, 2, zr}};
            rs.used[1] = rs.used[2] = true;
            break;
        }
        case Variant::G3i: {
            GenPoly zr = C(model.p("a0")) + X + X.pow(2) * model.p("a2") + X.pow(4) * model.p("a4");
            rs.rules = {{2, 2, zr}, {3, 2, Z}};
            rs.used[2] = rs.used[3] = true;
            break;
        }
        case Variant::G3ii: {
            GenPoly wr = C(model.p("a0")) + X + X.pow(2) * model.p("a2");
            GenPoly yr = C(model.p("c0")) + X * model.p("c1") + Z + W * model.p("c2");
            rs.rules = {{1, 2, wr}, {2, 2, W}, {3, 2, yr}};
            rs.used[1] = rs.used[2] = rs.used[3] = true;
            break;
        }
        case Variant::Q4i: {
            GenPoly zr = C(model.p("a")) + X + X.pow(2) * model.p("b") + X.pow(4) * model.p("c");
            rs.rules = {{2, 2, zr}, {3, 2, Z}};
            rs.used[2] = rs.used[3] = true;
            break;
        }
        case Variant::Q4ii: {
            return rewriting(q4ii_to_g3ii(model));
        }
    }
    (void)one;
    (void)Y;
    return rs;
}

namespace {

GenPoly reduced_zero_check(const FunctionFieldModel& model, const GenPoly& expr) {
    return reduce(expr, rewriting(model).rules);
}

}  // namespace

std::vector<FieldPresentation> pullback_chain(const FunctionFieldModel& model) {
    const BaseField& K = *model.K;
    auto C = [&](const RatFunc& a) { return GenPoly::constant(K, a); };
    GenPoly X = GenPoly::symbol(K, 0), W = GenPoly::symbol(K, 1), Z = GenPoly::symbol(K, 2),
            Y = GenPoly::symbol(K, 3);
    std::vector<FieldPresentation> chain;
    auto verify0 = [&](const GenPoly& expr) { return reduced_zero_check(model, expr).is_zero(); };

    switch (model.variant) {
        case Variant::QEi: {
            GenPoly rel = Z.pow(2) + C(model.p("a0")) + X + X.pow(2) * model.p("a2") +
                          X.pow(4) * model.p("a4");
            chain.push_back({"F", {"x", "z"}, "z^2 = a0 + x + a2 x^2 + a4 x^4", false, verify0(rel)});
            chain.push_back({"F1", {"x"}, "", true, true});
            break;
        }
        case Variant::QEii: {
            GenPoly quart = Z.pow(4) + C(model.p("a0")) + X + X.pow(2) * model.p("a2") +
                            X.pow(4) * model.p("b2").square();
            chain.push_back(
                {"F", {"x", "z"}, "z^4 = a0 + x + a2 x^2 + b2^2 x^4", false, verify0(quart)});
            GenPoly wdef = (Z.pow(2) + X.pow(2) * model.p("b2")).pow(2) + C(model.p("a0")) + X +
                           X.pow(2) * model.p("a2");
            chain.push_back(
                {"F1", {"x", "w"}, "w = z^2 + b2 x^2,  w^2 = a0 + x + a2 x^2", false, verify0(wdef)});
            chain.push_back({"F2", {"x"}, "", true, true});
            break;
        }
        case Variant::QEiii: {
            GenPoly quart = Z.pow(4) + C(model.p("a0")) + X + X.pow(2) * model.p("a2");
            chain.push_back({"F", {"x", "z"}, "z^4 = a0 + x + a2 x^2", false, verify0(quart)});
            GenPoly wdef = Z.pow(4) + C(model.p("a0")) + X + X.pow(2) * model.p("a2");
            chain.push_back(
                {"F1", {"x", "w"}, "w = z^2,  w^2 = a0 + x + a2 x^2", false, verify0(wdef)});
            chain.push_back({"F2", {"x"}, "", true, true});
            break;
        }
        case Variant::QEu: {
            RatFunc qa0 = model.p("a0") + model.p("b0").square();
            RatFunc qa2 = model.p("a2") + model.p("b1").square();
            GenPoly quart = Z.pow(4) + C(qa0) + X + X.pow(2) * qa2 +
                            X.pow(4) * model.p("b2").square();
            chain.push_back({"F",
                             {"x", "z"},
                             "z^4 = (a0 + b0^2) + x + (a2 + b1^2) x^2 + b2^2 x^4",
                             false,
                             verify0(quart)});
            GenPoly wdef = W.pow(2) + C(model.p("a0")) + X + X.pow(2) * model.p("a2");
            chain.push_back({"F1", {"x", "w"}, "w^2 = a0 + x + a2 x^2", false, verify0(wdef)});
            chain.push_back({"F2", {"x"}, "", true, true});
            break;
        }
        case Variant::G3i: {
            GenPoly rel = Y.pow(4) + C(model.p("a0")) + X + X.pow(2) * model.p("a2") +
                          X.pow(4) * model.p("a4");
            chain.push_back({"F", {"x", "y"}, "y^4 = a0 + x + a2 x^2 + a4 x^4", false, verify0(rel)});
            GenPoly zdef = Y.pow(4) + C(model.p("a0")) + X + X.pow(2) * model.p("a2") +
                           X.pow(4) * model.p("a4");
            chain.push_back({"F1",
                             {"x", "z"},
                             "z = y^2,  z^2 = a0 + x + a2 x^2 + a4 x^4",
                             false,
                             verify0(zdef)});
            chain.push_back({"F2", {"x"}, "", true, true});
            break;
        }
        case Variant::G3ii: {
            GenPoly yrel = Y.pow(2) + C(model.p("c0")) + X * model.p("c1") + Z +
                           Z.pow(2) * model.p("c2");
            GenPoly zrel = Z.pow(4) + C(model.p("a0")) + X + X.pow(2) * model.p("a2");
            chain.push_back({"F",
                             {"x", "z", "y"},
                             "z^4 = a0 + x + a2 x^2,  y^2 = c0 + c1 x + z + c2 z^2",
                             false,
                             verify0(yrel) && verify0(zrel)});
            chain.push_back({"F1", {"x", "z"}, "z^4 = a0 + x + a2 x^2", false, verify0(zrel)});
            GenPoly wdef = W.pow(2) + C(model.p("a0")) + X + X.pow(2) * model.p("a2");
            chain.push_back(
                {"F2", {"x", "w"}, "w = z^2,  w^2 = a0 + x + a2 x^2", false, verify0(wdef)});
            chain.push_back({"F3", {"x"}, "", true, true});
            break;
        }
        case Variant::Q4i: {
            GenPoly rel = Y.pow(4) + C(model.p("a")) + X + X.pow(2) * model.p("b") +
                          X.pow(4) * model.p("c");
            chain.push_back(
                {"F", {"x", "y"}, "y^4 + a + x + b x^2 + c x^4 = 0", false, verify0(rel)});
            chain.push_back({"F1",
                             {"x", "z"},
                             "z = y^2,  z^2 = a + x + b x^2 + c x^4",
                             false,
                             verify0(rel)});
            chain.push_back({"F2", {"x"}, "", true, true});
            break;
        }
        case Variant::Q4ii: {
            FunctionFieldModel g = q4ii_to_g3ii(model);
            auto sub = pullback_chain(g);
            // the top field is presented by the plane quartic itself
            GenPoly quart = Y.pow(4) + Z.pow(4) * model.p("a") + Y.pow(2) * model.p("b") +
                            Z.pow(2) * model.p("c") + Z * model.p("b") + C(model.p("d"));
            bool ok = reduce(quart, rewriting(g).rules).is_zero();
            chain.push_back({"F",
                             {"z", "y"},
                             "y^4 + a z^4 + b y^2 + c z^2 + b z + d = 0",
                             false,
                             ok});
            for (size_t i = 1; i < sub.size(); ++i) chain.push_back(sub[i]);
            break;
        }
    }
    return chain;
}

namespace {

struct LevelSpec {
    std::array<int, 4> weight{0, 0, 0, 0};
    std::array<int, 4> cap{0, 0, 0, 0};
};

LevelSpec level_spec(const FunctionFieldModel& model, int level) {
    auto unsupported = [&] {
        throw Unsupported("no tabulated basis at level " + std::to_string(level) + " for " +
                          variant_name(model.variant));
    };
    LevelSpec s;
    auto set = [&](std::array<int, 4> w, std::array<int, 4> c) {
        s.weight = w;
        s.cap = c;
    };
    switch (model.variant) {
        case Variant::QEi:
            if (level == 0)
                set({1, 0, 2, 0}, {-1, 0, 1, 0});
            else if (level == 1)
                set({1, 0, 0, 0}, {-1, 0, 0, 0});
            else
                unsupported();
            break;
        case Variant::QEii:
            if (level == 0)
                set({1, 1, 1, 0}, {-1, 1, 1, 0});
            else if (level == 1)
                set({1, 1, 0, 0}, {-1, 1, 0, 0});
            else if (level == 2)
                set({1, 0, 0, 0}, {-1, 0, 0, 0});
            else
                unsupported();
            break;
        case Variant::QEiii:
            if (level == 0)
                set({2, 2, 1, 0}, {-1, 1, 1, 0});
            else if (level == 1)
                set({1, 1, 0, 0}, {-1, 1, 0, 0});
            else if (level == 2)
                set({1, 0, 0, 0}, {-1, 0, 0, 0});
            else
                unsupported();
            break;
        case Variant::QEu: {
            bool ramified = span_membership(model.p("b2"), model.p("a2"), 1).has_value();
            if (level == 0) {
                if (!ramified)
                    set({1, 1, 1, 0}, {-1, 1, 1, 0});
                else if (model.p("b2").is_zero())
                    set({2, 2, 1, 0}, {-1, 1, 1, 0});
                else
                    set({2, 2, 2, 0}, {-1, 1, 1, 0});  // even exponents only; checked by caller
            } else if (level == 1)
                set({1, 1, 0, 0}, {-1, 1, 0, 0});
            else if (level == 2)
                set({1, 0, 0, 0}, {-1, 0, 0, 0});
            else
                unsupported();
            break;
        }
        case Variant::G3i:
        case Variant::Q4i:
            if (level == 0)
                set({1, 0, 2, 1}, {-1, 0, 1, 1});
            else if (level == 1)
                set({1, 0, 2, 0}, {-1, 0, 1, 0});
            else if (level == 2)
                set({1, 0, 0, 0}, {-1, 0, 0, 0});
            else
                unsupported();
            break;
        case Variant::G3ii:
        case Variant::Q4ii:
            if (level == 0)
                set({2, 2, 1, 1}, {-1, 1, 1, 1});
            else if (level == 1)
                set({2, 2, 1, 0}, {-1, 1, 1, 0});
            else if (level == 2)
                set({1, 1, 0, 0}, {-1, 1, 0, 0});
            else if (level == 3)
                set({1, 0, 0, 0}, {-1, 0, 0, 0});
            else
                unsupported();
            break;
    }
    return s;
}

bool odd_levels_unsupported(const FunctionFieldModel& model) {
    return model.variant == Variant::QEu && !model.p("b2").is_zero() &&
           span_membership(model.p("b2"), model.p("a2"), 1).has_value();
}

}  // namespace

RRBasis rr_basis(const FunctionFieldModel& model, int level, int m) {
    if (m < 0) throw Unsupported("negative divisor exponent");
    const FunctionFieldModel* use = &model;
    FunctionFieldModel converted;
    if (model.variant == Variant::Q4ii) {
        converted = q4ii_to_g3ii(model);
        use = &converted;
    }
    if (level == 0 && m % 2 == 1 && odd_levels_unsupported(*use))
        throw Unsupported("odd exponents are not tabulated for this ramified unified form");
    LevelSpec spec = level_spec(*use, level);
    RRBasis basis;
    basis.names = {"x", "w", "z", "y"};
    // enumerate monomials with bounded symbol caps and weighted degree <= m
    int xw = spec.weight[0];
    for (int j = 0; j <= spec.cap[1]; ++j)
        for (int l = 0; l <= spec.cap[2]; ++l)
            for (int n = 0; n <= spec.cap[3]; ++n) {
                int base = j * spec.weight[1] + l * spec.weight[2] + n * spec.weight[3];
                if (base > m) continue;
                int imax = (m - base) / xw;
                for (int i = 0; i <= imax; ++i) {
                    Exp4 e;
                    e.e = {static_cast<uint16_t>(i), static_cast<uint16_t>(j),
                           static_cast<uint16_t>(l), static_cast<uint16_t>(n)};
                    basis.monomials.push_back(e);
                }
            }
    std::sort(basis.monomials.begin(), basis.monomials.end(),
              [&](const Exp4& a, const Exp4& b) {
                  int wa = 0, wb = 0;
                  for (int i = 0; i < 4; ++i) {
                      wa += a.e[static_cast<size_t>(i)] * spec.weight[static_cast<size_t>(i)];
                      wb += b.e[static_cast<size_t>(i)] * spec.weight[static_cast<size_t>(i)];
                  }
                  if (wa != wb) return wa < wb;
                  return a < b;
              });
    return basis;
}

std::vector<std::string> RRBasis::to_strings() const {
    std::vector<std::string> out;
    for (const auto& e : monomials) {
        std::string s;
        for (size_t i = 0; i < 4; ++i) {
            if (!e.e[i]) continue;
            if (!s.empty()) s += "*";
            s += names[i];
            if (e.e[i] > 1) s += "^" + std::to_string(e.e[i]);
        }
        out.push_back(s.empty() ? "1" : s);
    }
    return out;
}

bool rr_closure_check(const FunctionFieldModel& model, int level, int m1, int m2) {
    const FunctionFieldModel* use = &model;
    FunctionFieldModel converted;
    if (model.variant == Variant::Q4ii) {
        converted = q4ii_to_g3ii(model);
        use = &converted;
    }
    RRBasis b1 = rr_basis(*use, level, m1);
    RRBasis b2 = rr_basis(*use, level, m2);
    RRBasis target = rr_basis(*use, level, m1 + m2);
    std::vector<Exp4> allowed = target.monomials;
    std::sort(allowed.begin(), allowed.end());
    auto rs = rewriting(*use);
    const BaseField& K = *use->K;
    for (const auto& ea : b1.monomials)
        for (const auto& eb : b2.monomials) {
            GenPoly prod(K);
            Exp4 e;
            for (size_t i = 0; i < 4; ++i) e.e[i] = static_cast<uint16_t>(ea.e[i] + eb.e[i]);
            prod.add_term(e, RatFunc::constant(K, 1));
            GenPoly nf = reduce(prod, rs.rules);
            for (const auto& [me, mc] : nf.terms())
                if (!std::binary_search(allowed.begin(), allowed.end(), me)) return false;
        }
    return true;
}

DeltaReport delta(const FunctionFieldModel& model, int precision) {
    validate(model);
    const BaseField& K = *model.K;
    auto zero = RatFunc::constant(K, 0);
    auto one = RatFunc::constant(K, 1);

    auto finish = [&](const KPoly& num, const KPoly& den, DeltaBranch branch, int delta_p1,
                      int delta_p2) -> DeltaReport {
        LaurentSeries s = series_expand(num, den, precision);
        int dv = differential_valuation(s);
        if (dv == kInfValuation || dv % 2 != 0)
            throw BranchUnresolvable("differential order " +
                                     (dv == kInfValuation ? std::string("inf") : std::to_string(dv)) +
                                     " is inconsistent with the classification");
        return DeltaReport{2 * delta_p1 + dv / 2, delta_p1, delta_p2, branch};
    };
    KPoly den1;
    den1.c = {one};

    switch (model.variant) {
        case Variant::QEi: {
            if (power_membership(model.p("a4"), 1))
                throw BranchUnresolvable("a4 became a square after validation");
            KPoly s;
            s.c = {model.p("a4"), zero, model.p("a2"), one, model.p("a0")};
            return finish(s, den1, DeltaBranch::Inertial, 0, 0);
        }
        case Variant::QEii:
        case Variant::QEiii:
        case Variant::QEu: {
            RatFunc a0 = model.p("a0"), a2 = model.p("a2");
            RatFunc b0 = zero, b1 = zero, b2 = zero;
            if (model.variant == Variant::QEii) b2 = model.p("b2");
            if (model.variant == Variant::QEu) {
                b0 = model.p("b0");
                b1 = model.p("b1");
                b2 = model.p("b2");
            }
            auto memb = span_membership(b2, a2, 1);
            if (!memb) {
                KPoly s;
                s.c = {b2.square(), zero, b1.square() + a2, one, b0.square() + a0};
                return finish(s, den1, DeltaBranch::Inertial, 0, 0);
            }
            // killing combination t = z + u + v w vanishes at the prime;
            // expand t^4 instead
            const RatFunc& v = memb->second;
            KPoly s;
            s.c = {zero, zero, b1.square() + v.pow(4) + a2, one,
                   b0.square() + v.pow(4) * a0.square() + a0};
            return finish(s, den1, DeltaBranch::Ramified, 0, 0);
        }
        case Variant::G3i:
        case Variant::Q4i: {
            RatFunc a0 = model.variant == Variant::G3i ? model.p("a0") : model.p("a");
            RatFunc a2 = model.variant == Variant::G3i ? model.p("a2") : model.p("b");
            RatFunc a4 = model.variant == Variant::G3i ? model.p("a4") : model.p("c");
            DeltaReport sub = delta(make_model(Variant::QEi, K, {a0, a2, a4}), precision);
            if (span_membership(a4, a4.square(), 2))
                throw BranchUnresolvable("residue generator degenerated after validation");
            KPoly s;
            s.c = {a4, zero, a2, one, a0};
            auto r = finish(s, den1, DeltaBranch::Inertial, sub.delta_p, 0);
            return r;
        }
        case Variant::G3ii: {
            RatFunc a0 = model.p("a0"), a2 = model.p("a2");
            RatFunc c0 = model.p("c0"), c1 = model.p("c1"), c2 = model.p("c2");
            DeltaReport sub = delta(make_model(Variant::QEiii, K, {a0, a2}), precision);
            KPoly num, den;
            num.c = {c1.pow(4) + c2.pow(4) * a2.square(), zero, c2.pow(4) + a2, one,
                     c0.pow(4) + c2.pow(4) * a0.square() + a0};
            den.c = {a2.square(), zero, one, zero, a0.square()};
            LaurentSeries s = series_expand(num, den, precision);
            RatFunc expected = (c2.square() + c1.square() / a2).square();
            if (s.coefficient(0) != expected)
                throw Error("series constant term disagrees with the residue generator");
            if (span_membership(s.coefficient(0), a2.pow(4), 3))
                throw BranchUnresolvable(
                    "residue class fell into the ramified locus after validation");
            int dv = differential_valuation(s);
            if (dv == kInfValuation || dv % 2 != 0)
                throw BranchUnresolvable("differential order inconsistent with the classification");
            return DeltaReport{2 * sub.delta_p + dv / 2, sub.delta_p, 0, DeltaBranch::Inertial};
        }
        case Variant::Q4ii:
            return delta(q4ii_to_g3ii(model), precision);
    }
    throw Error("unreachable");
}

QuadricPair embed_quadrics(const FunctionFieldModel& model) {
    const BaseField& K = *model.K;
    auto C = [&](const RatFunc& a) { return GenPoly::constant(K, a); };
    GenPoly x0 = GenPoly::symbol(K, 0), x1 = GenPoly::symbol(K, 1), x2 = GenPoly::symbol(K, 2),
            x3 = GenPoly::symbol(K, 3);
    GenPoly X = GenPoly::symbol(K, 0), W = GenPoly::symbol(K, 1), Z = GenPoly::symbol(K, 2);
    QuadricPair out;
    out.names = {"x0", "x1", "x2", "x3"};
    auto rs = rewriting(model);
    switch (model.variant) {
        case Variant::QEi: {
            out.q1 = x1.pow(2) + x0 * x2;
            out.q2 = x3.pow(2) + x0.pow(2) * model.p("a0") + x0 * x1 + (x0 * x2) * model.p("a2") +
                     x2.pow(2) * model.p("a4");
            // generators embed as (x0:x1:x2:x3) = (1 : x : x^2 : z)
            std::array<GenPoly, 4> img = {C(RatFunc::constant(K, 1)), X, X.pow(2),
                                          GenPoly::symbol(K, 2)};
            out.verified = reduce(out.q1.substitute(img), rs.rules).is_zero() &&
                           reduce(out.q2.substitute(img), rs.rules).is_zero();
            return out;
        }
        case Variant::QEii:
        case Variant::QEiii:
        case Variant::QEu: {
            RatFunc zero = RatFunc::constant(K, 0);
            RatFunc b0 = zero, b1 = zero, b2 = zero;
            if (model.variant == Variant::QEii) b2 = model.p("b2");
            if (model.variant == Variant::QEu) {
                b0 = model.p("b0");
                b1 = model.p("b1");
                b2 = model.p("b2");
            }
            out.q1 = x2.pow(2) + x0.pow(2) * model.p("a0") + x0 * x1 + x1.pow(2) * model.p("a2");
            out.q2 = x3.pow(2) + x0.pow(2) * b0 + (x0 * x1) * b1 + x1.pow(2) * b2 + x0 * x2;
            // (x0:x1:x2:x3) = (1 : x : w : z)
            std::array<GenPoly, 4> img = {C(RatFunc::constant(K, 1)), X, W, GenPoly::symbol(K, 2)};
            out.verified = reduce(out.q1.substitute(img), rs.rules).is_zero() &&
                           reduce(out.q2.substitute(img), rs.rules).is_zero();
            (void)Z;
            return out;
        }
        default:
            throw PreconditionViolated("quadric embedding applies to quasi-elliptic models");
    }
}

FunctionFieldModel normalize_constant_term(const FunctionFieldModel& model) {
    if (model.variant != Variant::G3ii)
        throw PreconditionViolated("constant-term normalization applies to G3-ii models");
    const RatFunc& c1 = model.p("c1");
    if (c1.is_zero()) throw PreconditionViolated("c1 = 0");
    RatFunc shift = model.p("c0") / c1;  // x -> x + c0/c1
    RatFunc a0 = model.p("a0") + shift + model.p("a2") * shift.square();
    return make_model(Variant::G3ii, *model.K,
                      {a0, model.p("a2"), RatFunc::constant(*model.K, 0), c1, model.p("c2")});
}

FunctionFieldModel to_canonical_quartic(const FunctionFieldModel& model) {
    const BaseField& K = *model.K;
    switch (model.variant) {
        case Variant::G3i: {
            validate(model);
            auto out = make_model(Variant::Q4i, K, {model.p("a0"), model.p("a2"), model.p("a4")});
            GenPoly Y = GenPoly::symbol(K, 3), X = GenPoly::symbol(K, 0);
            GenPoly quart = Y.pow(4) + GenPoly::constant(K, out.p("a")) + X +
                            X.pow(2) * out.p("b") + X.pow(4) * out.p("c");
            if (!reduce(quart, rewriting(model).rules).is_zero())
                throw Error("canonical quartic failed symbolic verification");
            return out;
        }
        case Variant::G3ii: {
            PrimeData pd = validate(model);
            if (pd.hyperelliptic) {
                std::string rel = "y^2 + (" + model.p("c2").to_string() + ")*z^2 + z + (" +
                                  model.p("c0").to_string() + ") = 0";
                throw Hyperelliptic("c1 = 0: the field is hyperelliptic", rel);
            }
            FunctionFieldModel norm = normalize_constant_term(model);
            RatFunc a2 = norm.p("a2"), c1 = norm.p("c1"), c2 = norm.p("c2"), a0 = norm.p("a0");
            RatFunc ia2 = a2.inverse();
            RatFunc a = ia2 * (c1.square() + a2 * c2.square());
            RatFunc b = ia2 * c1;
            RatFunc c = ia2 * (a2 + c1 * c2);
            RatFunc d = ia2 * c1.square() * a0;
            auto out = make_model(Variant::Q4ii, K, {a, b, c, d});
            GenPoly Y = GenPoly::symbol(K, 3), Z = GenPoly::symbol(K, 2);
            GenPoly quart = Y.pow(4) + Z.pow(4) * a + Y.pow(2) * b + Z.pow(2) * c + Z * b +
                            GenPoly::constant(K, d);
            if (!reduce(quart, rewriting(norm).rules).is_zero())
                throw Error("canonical quartic failed symbolic verification");
            validate(out);
            return out;
        }
        default:
            throw PreconditionViolated("canonical model applies to genus-3 normal forms");
    }
}

FunctionFieldModel q4ii_to_g3ii(const FunctionFieldModel& model) {
    if (model.variant != Variant::Q4ii) throw PreconditionViolated("expected a Q4-ii model");
    validate(model);
    const BaseField& K = *model.K;
    RatFunc one = RatFunc::constant(K, 1);
    const RatFunc& a = model.p("a");
    const RatFunc& b = model.p("b");
    const RatFunc& c = model.p("c");
    const RatFunc& d = model.p("d");
    RatFunc c2 = (c + one) / b;
    RatFunc denom = a + c2.square();  // equals c1 * b, nonzero since a is not a square
    RatFunc c1 = denom / b;
    RatFunc a2 = c1 / b;
    RatFunc a0 = d / denom;
    auto g = make_model(Variant::G3ii, K, {a0, a2, RatFunc::constant(K, 0), c1, c2});
    validate(g);
    return g;
}

}  // namespace qf
