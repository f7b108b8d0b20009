#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qf/fqpoly.hpp"
#include "qf/ratfunc.hpp"

namespace qf {

class PointNotOnCurve : public Error {
public:
    using Error::Error;
};
class SingularPoint : public Error {
public:
    using Error::Error;
};
class LineIsComponent : public Error {
public:
    using Error::Error;
};
class TooFewSmoothPoints : public Error {
public:
    using Error::Error;
};

// Projective point over GF(2^(m*k)), normalized so the first nonzero
// coordinate is 1; k is the extension level over the curve's base field.
struct ProjPoint {
    int k = 1;
    std::array<uint32_t, 3> xyz{0, 0, 0};

    bool operator==(const ProjPoint& o) const { return k == o.k && xyz == o.xyz; }
    bool operator<(const ProjPoint& o) const {
        if (k != o.k) return k < o.k;
        return xyz < o.xyz;
    }
    std::string to_string() const;
};

// Line a X + b Y + c Z = 0 over GF(2^(m*k)), normalized like points.
struct ProjLine {
    int k = 1;
    std::array<uint32_t, 3> abc{0, 0, 0};
    bool operator==(const ProjLine& o) const { return k == o.k && abc == o.abc; }
    bool operator<(const ProjLine& o) const {
        if (k != o.k) return k < o.k;
        return abc < o.abc;
    }
    std::string to_string() const;
};

// Homogeneous plane curve of degree 3 or 4 over GF(2^m).  Coefficients are
// stored sparsely by exponent (i, j) of X^i Y^j (Z^(d-i-j) implied).
struct PlaneCurveFq {
    int m = 1;
    int degree = 4;
    // dense row-major over (i, j): index = i*(degree+1) + j, i + j <= degree
    std::vector<uint32_t> coeff;

    static PlaneCurveFq zero(int m, int degree);
    uint32_t get(int i, int j) const { return coeff[static_cast<size_t>(i * (degree + 1) + j)]; }
    void set(int i, int j, uint32_t c) { coeff[static_cast<size_t>(i * (degree + 1) + j)] = c; }
    bool is_zero() const;
    // Coefficient vector in the documented monomial order: exponents
    // (i, j, k), i + j + k = degree, listed lexicographically decreasing.
    std::vector<uint32_t> serialize() const;
    static PlaneCurveFq deserialize(int m, int degree, const std::vector<uint32_t>& v);
    std::string to_string() const;

    uint32_t eval(const Fq& F, int k, uint32_t x, uint32_t y, uint32_t z) const;
    std::array<uint32_t, 3> gradient(const Fq& F, int k, uint32_t x, uint32_t y,
                                     uint32_t z) const;
    // Square root when every monomial exponent is even (char 2), else nullopt.
    std::optional<PlaneCurveFq> square_root() const;
};

struct TangentConeLine {
    ProjLine line;
    int multiplicity;
};

struct SingularityReport {
    ProjPoint point;
    int multiplicity = 0;
    std::vector<TangentConeLine> tangent_cone;
    int unsplit_cone_degree = 0;  // cone factors that did not split within the field tower
};

struct SingularLocus {
    bool non_reduced = false;
    std::optional<PlaneCurveFq> reduced_support;  // sqrt of the form, when non_reduced
    std::vector<SingularityReport> points;
};

// All non-smooth points of the curve with coordinates in GF(2^(m*k)) for
// k <= max_ext, each reported at its minimal field of definition.  A curve
// that is a proper power gets the non_reduced flag and the reduced support
// instead of a point list.
SingularLocus singular_points(const PlaneCurveFq& curve, int max_ext);

// Multiplicity and tangent cone at a point of the curve.
SingularityReport multiplicity_and_cone(const PlaneCurveFq& curve, const ProjPoint& point);

// Gradient line at a smooth point.
ProjLine tangent_line(const PlaneCurveFq& curve, const ProjPoint& point);

// Intersection profile of a line with the curve: points with intersection
// multiplicities, summing to the degree whenever the restricted form
// splits inside the representable field tower.
struct LineProfile {
    std::vector<std::pair<ProjPoint, int>> points;
    bool complete = true;  // multiplicities sum to deg(curve)
};
LineProfile line_profile(const PlaneCurveFq& curve, const ProjLine& line, int max_ext);

// Smooth rational points over GF(2^(m*k)), k <= max_ext, at minimal fields.
std::vector<ProjPoint> smooth_points(const PlaneCurveFq& curve, int max_ext);

// Common point of all sampled tangent lines, if one exists.  sample = 0
// means exhaustive over the tower.
std::optional<ProjPoint> is_strange(const PlaneCurveFq& curve, int max_ext, int sample = 0);

enum class TangencyClass { AllInflectional, AllBitangent, Mixed };
struct TangencyReport {
    TangencyClass cls;
    std::vector<ProjPoint> mixed_witnesses;
    long long points_checked = 0;
};
// Classifies the tangent-line behaviour at every smooth point over the
// field tower: intersection profile {(P,4)} everywhere -> AllInflectional,
// {(P,2),(Q,2)} everywhere -> AllBitangent, anything else -> Mixed.
TangencyReport tangency_class(const PlaneCurveFq& curve, int max_ext);

}  // namespace qf
