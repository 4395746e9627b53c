#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "cremona/field.hpp"

namespace cremona {

/// Point of P^2 with the first nonzero coordinate equal to 1.
struct ProjPoint {
    std::array<Fe, 3> c{};
    friend constexpr auto operator<=>(const ProjPoint&, const ProjPoint&) = default;
};

ProjPoint make_point(const Field& F, Fe x, Fe y, Fe z);
ProjPoint point_from_codes(const Field& F, std::uint64_t x, std::uint64_t y, std::uint64_t z);
ProjPoint frobenius(const Field& F, const ProjPoint& p, unsigned times = 1);

/// |P^2(F)| and the enumeration in lexicographic order: [0:0:1], [0:1:z], [1:y:z].
std::uint64_t plane_point_count(const Field& F);
ProjPoint plane_point(const Field& F, std::uint64_t index);

struct Monomial {
    unsigned x, y, z;
};

/// Degree-d monomials, lexicographically descending on (x, y, z) exponents.
const std::vector<Monomial>& monomials(unsigned degree);
std::size_t monomial_index(unsigned degree, unsigned a, unsigned b);
std::vector<Fe> monomial_values(const Field& F, unsigned degree, const ProjPoint& p);

/// Degree-d form, coefficients normalized so the first nonzero one is 1.
struct PlaneCurve {
    unsigned degree = 1;
    std::vector<Fe> coeffs;
    friend bool operator==(const PlaneCurve&, const PlaneCurve&) = default;
};

PlaneCurve make_curve(const Field& F, unsigned degree, std::vector<Fe> coeffs);
Fe evaluate(const Field& F, unsigned degree, std::span<const Fe> coeffs, const std::array<Fe, 3>& v);
Fe evaluate(const Field& F, const PlaneCurve& C, const ProjPoint& p);
std::array<Fe, 3> gradient(const Field& F, unsigned degree, std::span<const Fe> coeffs,
                           const std::array<Fe, 3>& v);

/// Element of PGL_3, normalized so the first nonzero entry in row-major order is 1.
struct ProjTransform {
    std::array<Fe, 9> m{};
    friend constexpr auto operator<=>(const ProjTransform&, const ProjTransform&) = default;
};

using Mat3 = std::array<Fe, 9>;

Fe det3(const Field& F, const Mat3& m);
Mat3 adjugate(const Field& F, const Mat3& m);
Mat3 mat_mul(const Field& F, const Mat3& a, const Mat3& b);

ProjTransform make_transform(const Field& F, const Mat3& m);
ProjTransform identity_transform();
ProjTransform compose(const Field& F, const ProjTransform& g, const ProjTransform& h);
ProjTransform inverse(const Field& F, const ProjTransform& g);
ProjPoint apply(const Field& F, const ProjTransform& g, const ProjPoint& p);
/// The curve g(C), i.e. the form C composed with g^{-1}.
PlaneCurve apply_curve(const Field& F, const ProjTransform& g, const PlaneCurve& C);
/// Coefficients of v -> C(M v), unnormalized.
std::vector<Fe> substitute(const Field& F, unsigned degree, std::span<const Fe> coeffs, const Mat3& M);

bool collinear(const Field& F, const ProjPoint& a, const ProjPoint& b, const ProjPoint& c);
bool six_on_conic(const Field& F, std::span<const ProjPoint> pts);
bool singular_cubic_through(const Field& F, std::span<const ProjPoint> pts, std::size_t i);

/// Coefficients (a, b, c) of a u^2 + b uw + c w^2, the quadratic part of C at p
/// in the chart p + u e_j + w e_k.
std::array<Fe, 3> tangent_cone(const Field& F, const PlaneCurve& C, const ProjPoint& p);
bool node_check(const Field& F, const PlaneCurve& C, const ProjPoint& p);

}  // namespace cremona
