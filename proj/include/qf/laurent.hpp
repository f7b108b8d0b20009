#pragma once

#include <limits>
#include <vector>

#include "qf/ratfunc.hpp"

namespace qf {

// Valuation sentinel for series that are exact squares (zero differential)
// or identically zero.
inline constexpr int kInfValuation = std::numeric_limits<int>::max();

// Polynomial in the local parameter (written xv for "x-breve" = 1/x in the
// recipes) with coefficients in K.
struct KPoly {
    std::vector<RatFunc> c;  // c[i] multiplies xv^i

    bool is_zero() const {
        for (const auto& a : c)
            if (!a.is_zero()) return false;
        return true;
    }
    int valuation() const {
        for (size_t i = 0; i < c.size(); ++i)
            if (!c[i].is_zero()) return static_cast<int>(i);
        return kInfValuation;
    }
};

// Truncated Laurent series over K in the local parameter.  Coefficients
// are exact through order precision-1; `exact` marks series known to
// terminate inside the window.
class LaurentSeries {
public:
    LaurentSeries(const BaseField& k, int valuation, std::vector<RatFunc> coeffs, int precision,
                  bool exact);

    const BaseField& field() const { return *k_; }
    int precision() const { return precision_; }
    bool exact() const { return exact_; }
    bool is_zero() const { return coeffs_.empty(); }
    // Valuation of the series; kInfValuation when zero to precision.
    int valuation() const { return coeffs_.empty() ? kInfValuation : valuation_; }
    // Coefficient of xv^i (zero outside the stored window).
    RatFunc coefficient(int i) const;

    std::string to_string(const std::string& var = "xv") const;

private:
    const BaseField* k_;
    int valuation_ = 0;
    std::vector<RatFunc> coeffs_;  // coeffs_[j] multiplies xv^(valuation_+j); leading != 0
    int precision_;
    bool exact_;
};

// Expansion of num/den as a Laurent series, exact through order N-1.
// Throws on a zero denominator; PrecisionExhausted when the expansion
// cannot place any certified coefficient below N.
LaurentSeries series_expand(const KPoly& num, const KPoly& den, int N);
LaurentSeries series_expand(const KPoly& poly, int N);

// Order of the differential d(s) in the local parameter: term-wise
// characteristic-2 differentiation kills even exponents, so this is
// (lowest odd exponent with nonzero coefficient) - 1.  Exact squares give
// kInfValuation; a window with no odd term and unknown tail raises
// PrecisionExhausted.
int differential_valuation(const LaurentSeries& s);

}  // namespace qf
