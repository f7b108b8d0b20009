#include "qf/laurent.hpp"

namespace qf {

LaurentSeries::LaurentSeries(const BaseField& k, int valuation, std::vector<RatFunc> coeffs,
                             int precision, bool exact)
    : k_(&k), valuation_(valuation), coeffs_(std::move(coeffs)), precision_(precision),
      exact_(exact) {
    // trim leading zeros, keep the invariant that the first stored
    // coefficient is nonzero
    size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
    if (lead) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
        valuation_ += static_cast<int>(lead);
    }
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

RatFunc LaurentSeries::coefficient(int i) const {
    if (coeffs_.empty() || i < valuation_ || i >= valuation_ + static_cast<int>(coeffs_.size()))
        return RatFunc::constant(*k_, 0);
    return coeffs_[static_cast<size_t>(i - valuation_)];
}

std::string LaurentSeries::to_string(const std::string& var) const {
    if (coeffs_.empty()) return "O(" + var + "^" + std::to_string(precision_) + ")";
    std::string out;
    for (size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j].is_zero()) continue;
        if (!out.empty()) out += " + ";
        int e = valuation_ + static_cast<int>(j);
        std::string cs = coeffs_[j].to_string();
        if (cs.find('+') != std::string::npos || cs.find(' ') != std::string::npos)
            cs = "(" + cs + ")";
        if (e == 0)
            out += cs;
        else if (coeffs_[j].is_one())
            out += var + (e == 1 ? "" : "^" + std::to_string(e));
        else
            out += cs + "*" + var + (e == 1 ? "" : "^" + std::to_string(e));
    }
    if (!exact_) out += " + O(" + var + "^" + std::to_string(precision_) + ")";
    return out;
}

LaurentSeries series_expand(const KPoly& num, const KPoly& den, int N) {
    if (den.is_zero()) throw Error("zero denominator (malformed input)");
    const BaseField* k = nullptr;
    for (const auto& a : den.c)
        if (!a.is_zero()) k = &a.field();
    int vd = den.valuation();
    if (num.is_zero()) return LaurentSeries(*k, 0, {}, N, true);
    int vn = num.valuation();
    int v = vn - vd;
    if (v >= N)
        throw PrecisionExhausted("series valuation " + std::to_string(v) +
                                 " is not below the precision window " + std::to_string(N));

    // normalized denominator  den = xv^vd * (d0 + d1 xv + ...), d0 != 0
    size_t width = static_cast<size_t>(N - v);
    std::vector<RatFunc> d, n, out;
    d.reserve(width);
    for (size_t i = static_cast<size_t>(vd); i < den.c.size() && d.size() < width; ++i)
        d.push_back(den.c[i]);
    while (d.size() < width) d.push_back(RatFunc::constant(*k, 0));
    n.reserve(width);
    for (size_t i = static_cast<size_t>(vn); n.size() < width; ++i)
        n.push_back(i < num.c.size() ? num.c[i] : RatFunc::constant(*k, 0));

    RatFunc inv_d0 = d[0].inverse();
    out.resize(width, RatFunc::constant(*k, 0));
    for (size_t j = 0; j < width; ++j) {
        RatFunc acc = n[j];
        for (size_t i = 1; i <= j; ++i) acc = acc + d[i] * out[j - i];
        out[j] = acc * inv_d0;
    }

    bool exact = false;
    size_t den_terms = 0;
    for (const auto& a : den.c)
        if (!a.is_zero()) ++den_terms;
    if (den_terms == 1) {
        int top = static_cast<int>(num.c.size()) - 1 - vd;
        exact = top < N;
    }
    return LaurentSeries(*k, v, std::move(out), N, exact);
}

LaurentSeries series_expand(const KPoly& poly, int N) {
    if (poly.is_zero()) {
        for (const auto& a : poly.c) return LaurentSeries(a.field(), 0, {}, N, true);
        throw Error("cannot infer base field from an empty polynomial");
    }
    KPoly one;
    one.c.push_back(RatFunc::constant(poly.c[static_cast<size_t>(poly.valuation())].field(), 1));
    return series_expand(poly, one, N);
}

int differential_valuation(const LaurentSeries& s) {
    if (s.is_zero()) {
        if (s.exact()) return kInfValuation;
        throw PrecisionExhausted("no terms available below the precision window");
    }
    for (int i = s.valuation(); i < s.precision(); ++i) {
        if (i % 2 != 0 && !s.coefficient(i).is_zero()) return i - 1;
    }
    if (s.exact()) return kInfValuation;
    throw PrecisionExhausted("no odd-order term below the precision window; increase precision");
}

}  // namespace qf
