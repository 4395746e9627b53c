#pragma once

#include <optional>

#include "cremona/orbit.hpp"
#include "cremona/plane.hpp"

namespace cremona {

/// xyz = c0 x^3 - c0 z^3 with c0 in F_q^*; node at [0:1:0], tangent cone xz.
struct NodalCubicNF {
    Fe c0;
    friend bool operator==(const NodalCubicNF&, const NodalCubicNF&) = default;
};

NodalCubicNF make_nodal_nf(const Field& F, Fe c0);
PlaneCurve nf_curve(const Field& F, const NodalCubicNF& nf);

/// [a : c0 (a^3 - 1)/a : 1].
ProjPoint param_point(const Field& F, const NodalCubicNF& nf, Fe a);

/// The line y + A x + B z = 0 through the param points of a1, a2, a3 (a1 a2 a3 = 1).
PlaneCurve line_witness(const Field& F, const NodalCubicNF& nf, Fe a1, Fe a2, Fe a3);

bool is_cube(const Field& F, Fe x);

struct Normalization {
    ProjTransform g;  // apply_curve(g, C) == nf_curve(nf)
    NodalCubicNF nf;
};

/// C must have its node at [0:1:0] with tangent cone xz.
/// Empty when -c0/c3 is not a cube in F_q.
std::optional<Normalization> normalize(const Field& F, const PlaneCurve& C);

/// Nodal members of the pencil of cubics through the orbit whose parameter [s:t]
/// lies in F_{q^m} for some m dividing 8 with m <= extension_cap.
int count_nodal_members(const Field& F, const GaloisOrbit8& orbit, unsigned extension_cap = 8);

}  // namespace cremona
