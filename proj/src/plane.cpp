#include "qf/plane.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace qf {

namespace {

// Largest representable field degree for GF(2^n) contexts.
constexpr int kMaxBits = 16;

const Fq& field_of(const PlaneCurveFq& c, int k) { return Fq::get(c.m * k); }

uint32_t embed_coeff(int m, int k, uint32_t v) { return Fq::embed(m, m * k, v); }

// minimal extension level j | k over which normalized coordinates live
int minimal_level(int m, int k, const std::array<uint32_t, 3>& coords) {
    const Fq& F = Fq::get(m * k);
    for (int j = 1; j <= k; ++j) {
        if (k % j != 0) continue;
        bool fixed = true;
        for (uint32_t c : coords)
            if (F.pow_frobenius(c, m * j) != c) fixed = false;
        if (fixed) return j;
    }
    return k;
}

// true iff a value of GF(2^(m*k)) does not already live in GF(2^(m*j))
// for a proper divisor j of k
bool new_at_level(int m, int k, uint32_t v) {
    const Fq& F = Fq::get(m * k);
    for (int j = 1; j < k; ++j)
        if (k % j == 0 && F.pow_frobenius(v, m * j) == v) return false;
    return true;
}

std::array<uint32_t, 3> normalize3(const Fq& F, std::array<uint32_t, 3> v) {
    for (auto c : v) {
        if (c != 0) {
            uint32_t inv = F.inv(c);
            for (auto& x : v) x = F.mul(x, inv);
            break;
        }
    }
    return v;
}

// reduce coords from level k to their minimal level j (coords are fixed by
// the relevant Frobenius, so projection succeeds)
ProjPoint canonical_point(int m, int k, std::array<uint32_t, 3> coords) {
    const Fq& F = Fq::get(m * k);
    coords = normalize3(F, coords);
    int j = minimal_level(m, k, coords);
    if (j == k) return ProjPoint{k, coords};
    std::array<uint32_t, 3> small{0, 0, 0};
    for (int i = 0; i < 3; ++i) {
        uint32_t out;
        if (!Fq::project(m * k, m * j, coords[static_cast<size_t>(i)], out))
            return ProjPoint{k, coords};
        small[static_cast<size_t>(i)] = out;
    }
    return ProjPoint{j, small};
}

ProjLine canonical_line(int m, int k, std::array<uint32_t, 3> abc) {
    ProjPoint p = canonical_point(m, k, abc);
    return ProjLine{p.k, p.xyz};
}

}  // namespace

PlaneCurveFq PlaneCurveFq::zero(int m, int degree) {
    PlaneCurveFq c;
    c.m = m;
    c.degree = degree;
    c.coeff.assign(static_cast<size_t>((degree + 1) * (degree + 1)), 0);
    return c;
}

bool PlaneCurveFq::is_zero() const {
    for (uint32_t c : coeff)
        if (c) return false;
    return true;
}

std::vector<uint32_t> PlaneCurveFq::serialize() const {
    std::vector<uint32_t> v;
    for (int i = degree; i >= 0; --i)
        for (int j = degree - i; j >= 0; --j) v.push_back(get(i, j));
    return v;
}

PlaneCurveFq PlaneCurveFq::deserialize(int m, int degree, const std::vector<uint32_t>& v) {
    PlaneCurveFq c = zero(m, degree);
    size_t idx = 0;
    for (int i = degree; i >= 0; --i)
        for (int j = degree - i; j >= 0; --j) {
            if (idx >= v.size()) throw Error("coefficient vector too short");
            c.set(i, j, v[idx++]);
        }
    if (idx != v.size()) throw Error("coefficient vector too long");
    return c;
}

std::string PlaneCurveFq::to_string() const {
    const Fq& F = Fq::get(m);
    std::string out;
    for (int i = degree; i >= 0; --i)
        for (int j = degree - i; j >= 0; --j) {
            uint32_t c = get(i, j);
            if (!c) continue;
            if (!out.empty()) out += " + ";
            std::string term;
            int kz = degree - i - j;
            if (c != 1 || (i == 0 && j == 0 && kz == 0)) term += F.to_string(c);
            auto app = [&](const char* v, int e) {
                if (!e) return;
                if (!term.empty()) term += "*";
                term += v;
                if (e > 1) term += "^" + std::to_string(e);
            };
            app("X", i);
            app("Y", j);
            app("Z", kz);
            out += term;
        }
    return out.empty() ? "0" : out;
}

uint32_t PlaneCurveFq::eval(const Fq& F, int k, uint32_t x, uint32_t y, uint32_t z) const {
    // Horner over powers; curve coefficients embedded into GF(2^(m*k)).
    uint32_t acc = 0;
    for (int i = 0; i <= degree; ++i)
        for (int j = 0; j <= degree - i; ++j) {
            uint32_t c = get(i, j);
            if (!c) continue;
            uint32_t t = embed_coeff(m, k, c);
            t = F.mul(t, F.pow(x, i));
            t = F.mul(t, F.pow(y, j));
            t = F.mul(t, F.pow(z, degree - i - j));
            acc = F.add(acc, t);
        }
    return acc;
}

std::array<uint32_t, 3> PlaneCurveFq::gradient(const Fq& F, int k, uint32_t x, uint32_t y,
                                               uint32_t z) const {
    std::array<uint32_t, 3> g{0, 0, 0};
    for (int i = 0; i <= degree; ++i)
        for (int j = 0; j <= degree - i; ++j) {
            uint32_t c = get(i, j);
            if (!c) continue;
            int kz = degree - i - j;
            uint32_t ce = embed_coeff(m, k, c);
            if (i % 2)
                g[0] = F.add(g[0], F.mul(ce, F.mul(F.pow(x, i - 1),
                                                   F.mul(F.pow(y, j), F.pow(z, kz)))));
            if (j % 2)
                g[1] = F.add(g[1], F.mul(ce, F.mul(F.pow(x, i),
                                                   F.mul(F.pow(y, j - 1), F.pow(z, kz)))));
            if (kz % 2)
                g[2] = F.add(g[2], F.mul(ce, F.mul(F.pow(x, i),
                                                   F.mul(F.pow(y, j), F.pow(z, kz - 1)))));
        }
    return g;
}

std::optional<PlaneCurveFq> PlaneCurveFq::square_root() const {
    const Fq& F = Fq::get(m);
    if (degree % 2) return std::nullopt;
    PlaneCurveFq r = zero(m, degree / 2);
    for (int i = 0; i <= degree; ++i)
        for (int j = 0; j <= degree - i; ++j) {
            uint32_t c = get(i, j);
            if (!c) continue;
            if (i % 2 || j % 2 || (degree - i - j) % 2) return std::nullopt;
            r.set(i / 2, j / 2, F.sqrt(c));
        }
    return r;
}

std::string ProjPoint::to_string() const {
    const Fq& F = Fq::get(16);  // display only; encodings are field-independent bit patterns
    (void)F;
    auto s = [&](uint32_t c) { return std::to_string(c); };
    return "(" + s(xyz[0]) + ":" + s(xyz[1]) + ":" + s(xyz[2]) + ")@k" + std::to_string(k);
}

std::string ProjLine::to_string() const {
    auto s = [&](uint32_t c) { return std::to_string(c); };
    return "[" + s(abc[0]) + ":" + s(abc[1]) + ":" + s(abc[2]) + "]@k" + std::to_string(k);
}

namespace {

// enumerate P^2(GF(2^(m*k))) as (1:y:z), (0:1:z), (0:0:1)
template <typename Fn>
void for_each_point(const Fq& F, Fn&& fn) {
    for (uint32_t y = 0; y < F.q(); ++y)
        for (uint32_t z = 0; z < F.q(); ++z) fn(1u, y, z);
    for (uint32_t z = 0; z < F.q(); ++z) fn(0u, 1u, z);
    fn(0u, 0u, 1u);
}

}  // namespace

SingularLocus singular_points(const PlaneCurveFq& curve, int max_ext) {
    if (curve.is_zero()) throw Error("zero form is not a curve");
    SingularLocus out;
    if (auto r = curve.square_root()) {
        out.non_reduced = true;
        out.reduced_support = *r;
        return out;
    }
    for (int k = 1; k <= max_ext && curve.m * k <= kMaxBits; ++k) {
        const Fq& F = field_of(curve, k);
        for_each_point(F, [&](uint32_t x, uint32_t y, uint32_t z) {
            if (curve.eval(F, k, x, y, z)) return;
            auto g = curve.gradient(F, k, x, y, z);
            if (g[0] || g[1] || g[2]) return;
            ProjPoint p = canonical_point(curve.m, k, {x, y, z});
            if (p.k != k) return;  // already reported at its minimal level
            out.points.push_back(multiplicity_and_cone(curve, p));
        });
    }
    std::sort(out.points.begin(), out.points.end(),
              [](const SingularityReport& a, const SingularityReport& b) {
                  return a.point < b.point;
              });
    return out;
}

namespace {

// affine expansion of the curve at a point: chart picked by the first
// nonzero coordinate; returns bivariate coefficients a[i][j] of u^i v^j
std::vector<std::vector<uint32_t>> affine_at(const PlaneCurveFq& curve, const ProjPoint& p) {
    int k = p.k;
    const Fq& F = field_of(curve, k);
    int d = curve.degree;
    auto dim = static_cast<size_t>(d + 1);
    std::vector<std::vector<uint32_t>> a(dim, std::vector<uint32_t>(dim, 0));
    // binomial expansion helpers over char 2 (Lucas: C(n,k) odd iff k's bits
    // lie inside n's)
    auto binom_odd = [](int n, int r) { return (r & ~n) == 0; };
    // which chart: X=1, Y=1 or Z=1
    int chart = p.xyz[0] ? 0 : (p.xyz[1] ? 1 : 2);
    uint32_t pu, pv;
    if (chart == 0) {
        pu = p.xyz[1];
        pv = p.xyz[2];
    } else if (chart == 1) {
        pu = p.xyz[0];
        pv = p.xyz[2];
    } else {
        pu = p.xyz[0];
        pv = p.xyz[1];
    }
    for (int i = 0; i <= d; ++i)
        for (int j = 0; j <= d - i; ++j) {
            uint32_t c = curve.get(i, j);
            if (!c) continue;
            uint32_t ce = embed_coeff(curve.m, k, c);
            int kz = d - i - j;
            // exponents of (u-part, v-part) depending on the chart
            int eu, ev;
            if (chart == 0) {
                eu = j;
                ev = kz;
            } else if (chart == 1) {
                eu = i;
                ev = kz;
            } else {
                eu = i;
                ev = j;
            }
            // (pu + u)^eu (pv + v)^ev
            for (int r = 0; r <= eu; ++r) {
                if (!binom_odd(eu, r)) continue;
                uint32_t cu = F.mul(ce, F.pow(pu, eu - r));
                for (int s = 0; s <= ev; ++s) {
                    if (!binom_odd(ev, s)) continue;
                    uint32_t cv = F.mul(cu, F.pow(pv, ev - s));
                    a[static_cast<size_t>(r)][static_cast<size_t>(s)] ^= cv;
                }
            }
        }
    return a;
}

// lift a cone line alpha*u + beta*v = 0 at p back to a plane line
std::array<uint32_t, 3> lift_cone_line(const Fq& F, const ProjPoint& p, uint32_t alpha,
                                       uint32_t beta, int mbase, int lift_k) {
    // embed point into the line's field
    auto e = [&](uint32_t c) { return Fq::embed(mbase * p.k, mbase * lift_k, c); };
    uint32_t pu, pv;
    int chart = p.xyz[0] ? 0 : (p.xyz[1] ? 1 : 2);
    pu = 0;
    pv = 0;
    std::array<uint32_t, 3> l{0, 0, 0};
    if (chart == 0) {
        pu = e(p.xyz[1]);
        pv = e(p.xyz[2]);
        // alpha (Y - pu X) + beta (Z - pv X) = 0
        l = {F.add(F.mul(alpha, pu), F.mul(beta, pv)), alpha, beta};
    } else if (chart == 1) {
        pu = e(p.xyz[0]);
        pv = e(p.xyz[2]);
        l = {alpha, F.add(F.mul(alpha, pu), F.mul(beta, pv)), beta};
    } else {
        pu = e(p.xyz[0]);
        pv = e(p.xyz[1]);
        l = {alpha, beta, F.add(F.mul(alpha, pu), F.mul(beta, pv))};
    }
    return l;
}

}  // namespace

SingularityReport multiplicity_and_cone(const PlaneCurveFq& curve, const ProjPoint& point) {
    const Fq& Fp = field_of(curve, point.k);
    if (curve.eval(Fp, point.k, point.xyz[0], point.xyz[1], point.xyz[2]))
        throw PointNotOnCurve("point is not on the curve");
    auto a = affine_at(curve, point);
    int d = curve.degree;
    int mult = d + 1;
    for (int total = 0; total <= d && mult > d; ++total)
        for (int i = 0; i <= total; ++i)
            if (a[static_cast<size_t>(i)][static_cast<size_t>(total - i)]) {
                mult = total;
                break;
            }
    SingularityReport rep;
    rep.point = point;
    rep.multiplicity = mult;
    if (mult == 0) throw Error("inconsistent multiplicity computation");
    // factor the lowest form  sum_i a[i][mult-i] u^i v^(mult-i)
    // as v^e * prod (u + r v): roots r of the dehomogenized polynomial
    FqPoly bin;
    bin.c.assign(static_cast<size_t>(mult) + 1, 0);
    for (int i = 0; i <= mult; ++i)
        bin.c[static_cast<size_t>(i)] = a[static_cast<size_t>(i)][static_cast<size_t>(mult - i)];
    bin.trim();
    int vpow = mult - bin.degree();  // multiplicity of the line v = 0 in the cone
    std::map<ProjLine, int> cone;
    if (vpow > 0) {
        auto l = lift_cone_line(Fp, point, 0, 1, curve.m, point.k);
        cone[canonical_line(curve.m, point.k, l)] += vpow;
    }
    int found = vpow;
    for (int j = 1; j * point.k * curve.m <= kMaxBits && j <= mult; ++j) {
        const Fq& Fj = Fq::get(curve.m * point.k * j);
        FqPoly lifted;
        lifted.c.resize(bin.c.size());
        for (size_t i = 0; i < bin.c.size(); ++i)
            lifted.c[i] = Fq::embed(curve.m * point.k, curve.m * point.k * j, bin.c[i]);
        lifted.trim();
        for (auto [root, mul] : fq_roots(Fj, lifted)) {
            if (j > 1 && !new_at_level(curve.m * point.k, j, root)) continue;
            // cone line u + root * v = 0
            auto l = lift_cone_line(Fj, point, 1, root, curve.m, point.k * j);
            cone[canonical_line(curve.m, point.k * j, l)] += mul;
            found += mul;
        }
        if (found >= mult) break;
    }
    for (const auto& [l, mu] : cone) rep.tangent_cone.push_back({l, mu});
    rep.unsplit_cone_degree = mult - found;
    return rep;
}

ProjLine tangent_line(const PlaneCurveFq& curve, const ProjPoint& point) {
    const Fq& F = field_of(curve, point.k);
    if (curve.eval(F, point.k, point.xyz[0], point.xyz[1], point.xyz[2]))
        throw PointNotOnCurve("point is not on the curve");
    auto g = curve.gradient(F, point.k, point.xyz[0], point.xyz[1], point.xyz[2]);
    if (!g[0] && !g[1] && !g[2]) throw SingularPoint("gradient vanishes at the point");
    return canonical_line(curve.m, point.k, g);
}

namespace {

// two distinct points spanning the line a x + b y + c z = 0
std::pair<std::array<uint32_t, 3>, std::array<uint32_t, 3>> span_line(const Fq& F,
                                                                      std::array<uint32_t, 3> l) {
    uint32_t a = l[0], b = l[1], c = l[2];
    if (a == 0 && b == 0) return {{1, 0, 0}, {0, 1, 0}};                    // z = 0
    if (a == 0) return {{1, 0, 0}, {0, c, b}};                              // b y = c z
    // a != 0: points (b : a : 0) and (c : 0 : a)
    return {{b, a, 0}, {c, 0, a}};
}

}  // namespace

LineProfile line_profile(const PlaneCurveFq& curve, const ProjLine& line, int max_ext) {
    (void)max_ext;  // the 16-bit field ceiling bounds the search
    int kl = line.k;
    const Fq& F = field_of(curve, kl);
    auto [P, Q] = span_line(F, line.abc);
    int d = curve.degree;
    // restricted binary form B(s,t) = F(s P + t Q), coefficients in GF(2^(m*kl))
    std::vector<uint32_t> B(static_cast<size_t>(d) + 1, 0);
    for (int i = 0; i <= d; ++i)
        for (int j = 0; j <= d - i; ++j) {
            uint32_t c = curve.get(i, j);
            if (!c) continue;
            uint32_t ce = embed_coeff(curve.m, kl, c);
            int kz = d - i - j;
            // (sPx + tQx)^i (sPy + tQy)^j (sPz + tQz)^kz
            std::vector<uint32_t> acc(1, ce);  // poly in s of bidegree tracked by index
            auto mul_in = [&](uint32_t pc, uint32_t qc, int e) {
                for (int r = 0; r < e; ++r) {
                    std::vector<uint32_t> next(acc.size() + 1, 0);
                    for (size_t ii = 0; ii < acc.size(); ++ii) {
                        next[ii + 1] ^= F.mul(acc[ii], pc);  // s-part
                        next[ii] ^= F.mul(acc[ii], qc);      // t-part
                    }
                    acc = std::move(next);
                }
            };
            mul_in(P[0], Q[0], i);
            mul_in(P[1], Q[1], j);
            mul_in(P[2], Q[2], kz);
            for (size_t ii = 0; ii < acc.size(); ++ii) B[ii] ^= acc[ii];
        }
    bool all_zero = std::all_of(B.begin(), B.end(), [](uint32_t v) { return v == 0; });
    if (all_zero) throw LineIsComponent("line is a component of the curve");

    LineProfile out;
    // multiplicity of the point P itself: power of t dividing B means root
    // (s:t) = (1:0); B[index] = coefficient of s^index t^(d-index)
    int inf_mult = 0;
    {
        int lead = d;
        while (lead >= 0 && B[static_cast<size_t>(lead)] == 0) --lead;
        inf_mult = d - lead;
    }
    if (inf_mult > 0)
        out.points.emplace_back(canonical_point(curve.m, kl, P), inf_mult);
    // finite roots: polynomial in t after setting s = 1
    FqPoly f;
    for (int i = 0; i <= d; ++i) f.c.push_back(B[static_cast<size_t>(d - i)]);
    f.trim();
    int accounted = inf_mult;
    for (int j = 1; j * kl * curve.m <= kMaxBits && j <= d; ++j) {
        if (accounted >= d) break;
        const Fq& Fj = Fq::get(curve.m * kl * j);
        FqPoly lifted;
        for (uint32_t c : f.c) lifted.c.push_back(Fq::embed(curve.m * kl, curve.m * kl * j, c));
        lifted.trim();
        for (auto [root, mul] : fq_roots(Fj, lifted)) {
            if (j > 1 && !new_at_level(curve.m * kl, j, root)) continue;
            std::array<uint32_t, 3> pt;
            for (int i = 0; i < 3; ++i) {
                uint32_t pe = Fq::embed(curve.m * kl, curve.m * kl * j, P[static_cast<size_t>(i)]);
                uint32_t qe = Fq::embed(curve.m * kl, curve.m * kl * j, Q[static_cast<size_t>(i)]);
                pt[static_cast<size_t>(i)] = Fj.add(pe, Fj.mul(root, qe));
            }
            out.points.emplace_back(canonical_point(curve.m, kl * j, pt), mul);
            accounted += mul;
        }
    }
    std::sort(out.points.begin(), out.points.end());
    out.complete = accounted == d;
    return out;
}

std::vector<ProjPoint> smooth_points(const PlaneCurveFq& curve, int max_ext) {
    std::vector<ProjPoint> pts;
    for (int k = 1; k <= max_ext && curve.m * k <= kMaxBits; ++k) {
        const Fq& F = field_of(curve, k);
        for_each_point(F, [&](uint32_t x, uint32_t y, uint32_t z) {
            if (curve.eval(F, k, x, y, z)) return;
            auto g = curve.gradient(F, k, x, y, z);
            if (!g[0] && !g[1] && !g[2]) return;
            ProjPoint p = canonical_point(curve.m, k, {x, y, z});
            if (p.k == k) pts.push_back(p);
        });
    }
    std::sort(pts.begin(), pts.end());
    return pts;
}

std::optional<ProjPoint> is_strange(const PlaneCurveFq& curve, int max_ext, int sample) {
    auto pts = smooth_points(curve, max_ext);
    if (sample > 0 && static_cast<size_t>(sample) < pts.size()) pts.resize(static_cast<size_t>(sample));
    if (pts.size() < 2) throw TooFewSmoothPoints("need at least 2 smooth points; widen the field");
    std::vector<ProjLine> lines;
    for (const auto& p : pts) lines.push_back(tangent_line(curve, p));
    // candidate from the first two distinct comparable tangents
    std::optional<ProjPoint> candidate;
    for (size_t i = 0; i < lines.size() && !candidate; ++i)
        for (size_t j = i + 1; j < lines.size() && !candidate; ++j) {
            if (lines[i] == lines[j]) continue;
            int ki = lines[i].k, kj = lines[j].k;
            if (ki % kj != 0 && kj % ki != 0) continue;
            int kc = std::max(ki, kj);
            if (curve.m * kc > kMaxBits) continue;
            const Fq& F = Fq::get(curve.m * kc);
            auto e = [&](const ProjLine& l, int idx) {
                return Fq::embed(curve.m * l.k, curve.m * kc, l.abc[static_cast<size_t>(idx)]);
            };
            // cross product of the two line vectors
            std::array<uint32_t, 3> c;
            c[0] = F.add(F.mul(e(lines[i], 1), e(lines[j], 2)),
                         F.mul(e(lines[i], 2), e(lines[j], 1)));
            c[1] = F.add(F.mul(e(lines[i], 0), e(lines[j], 2)),
                         F.mul(e(lines[i], 2), e(lines[j], 0)));
            c[2] = F.add(F.mul(e(lines[i], 0), e(lines[j], 1)),
                         F.mul(e(lines[i], 1), e(lines[j], 0)));
            candidate = canonical_point(curve.m, kc, c);
        }
    if (!candidate) {
        // all tangents coincide: any point of the common line qualifies
        auto [P, Q] = span_line(Fq::get(curve.m * lines[0].k), lines[0].abc);
        (void)Q;
        return canonical_point(curve.m, lines[0].k, P);
    }
    // verify every tangent passes through the candidate
    for (const auto& l : lines) {
        int lcm = std::max(candidate->k, l.k);
        if (candidate->k % l.k != 0 && l.k % candidate->k != 0)
            lcm = candidate->k * l.k / std::gcd(candidate->k, l.k);
        if (curve.m * lcm > kMaxBits)
            throw Error("strangeness undecidable within the representable field tower");
        const Fq& F = Fq::get(curve.m * lcm);
        uint32_t acc = 0;
        for (int i = 0; i < 3; ++i) {
            uint32_t a = Fq::embed(curve.m * l.k, curve.m * lcm, l.abc[static_cast<size_t>(i)]);
            uint32_t x =
                Fq::embed(curve.m * candidate->k, curve.m * lcm, candidate->xyz[static_cast<size_t>(i)]);
            acc = F.add(acc, F.mul(a, x));
        }
        if (acc != 0) return std::nullopt;
    }
    return candidate;
}

TangencyReport tangency_class(const PlaneCurveFq& curve, int max_ext) {
    TangencyReport rep;
    bool all_infl = true, all_bit = true;
    auto pts = smooth_points(curve, max_ext);
    for (const auto& p : pts) {
        ++rep.points_checked;
        ProjLine tl = tangent_line(curve, p);
        LineProfile prof = line_profile(curve, tl, max_ext);
        if (!prof.complete) {
            rep.mixed_witnesses.push_back(p);
            all_infl = all_bit = false;
            continue;
        }
        // lift p to the line's field level for comparisons
        bool inflectional = false, bitangent = false;
        if (prof.points.size() == 1 && prof.points[0].second == 4) {
            // the single profile point must be p itself
            inflectional = prof.points[0].first == p;
        } else if (prof.points.size() == 2 && prof.points[0].second == 2 &&
                   prof.points[1].second == 2) {
            bitangent = prof.points[0].first == p || prof.points[1].first == p;
        }
        if (inflectional)
            all_bit = false;
        else if (bitangent)
            all_infl = false;
        else {
            all_infl = all_bit = false;
            rep.mixed_witnesses.push_back(p);
        }
    }
    if (all_infl && !pts.empty())
        rep.cls = TangencyClass::AllInflectional;
    else if (all_bit && !pts.empty())
        rep.cls = TangencyClass::AllBitangent;
    else
        rep.cls = TangencyClass::Mixed;
    return rep;
}

}  // namespace qf
