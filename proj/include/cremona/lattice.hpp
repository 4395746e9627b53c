#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "cremona/errors.hpp"

namespace cremona {

using IntVec = std::vector<std::int64_t>;
using IntMat = std::vector<IntVec>;
using Q = boost::rational<std::int64_t>;
using QVec = std::vector<Q>;

/// Néron–Severi lattice of a blow-up of the plane.
/// `basis[k]` is the k-th basis class written in standard coordinates (H, E_1, ..., E_r),
/// where E_i is the total transform of the i-th blown-up orbit. Plain blow-ups use the
/// standard basis itself; `rebase` switches to another unimodular basis.
struct Lattice {
    std::vector<std::string> labels;
    IntMat gram;
    IntVec K;
    std::vector<int> degrees;   // degree of each blown-up orbit
    std::vector<int> parent;    // -1, or the orbit this one is infinitely near to
    IntMat basis;

    std::size_t rank() const { return labels.size(); }
    std::int64_t dot(const IntVec& a, const IntVec& b) const;
    Q dot(const QVec& a, const IntVec& b) const;
    Q dot(const QVec& a, const QVec& b) const;
    std::int64_t self(const IntVec& a) const { return dot(a, a); }
    IntVec to_standard(const IntVec& v) const;
    IntVec from_standard(const IntVec& s) const;

    friend bool operator==(const Lattice&, const Lattice&) = default;
};

/// Basis (H, E_1..E_r), K = -3H + sum E_i. `nesting[i]` is -1 or the index of the orbit that
/// orbit i is infinitely near to; nested orbits must have the degree of their parent.
Lattice blowup_lattice(const std::vector<int>& degrees, const std::vector<int>& nesting = {});

/// Same lattice in a new basis given by rows in the current coordinates (must be unimodular).
Lattice rebase(const Lattice& L, const IntMat& rows, std::vector<std::string> labels);

/// A point p, then p' on its exceptional curve E and on the line L' through p, rewritten in
/// the basis (L', E, E').
Lattice example_3_8();

/// Classes of irreducible curves with non-negative K-degree forced by the nesting
/// (strict transforms E_i - sum of E_j over orbits j infinitely near to i).
std::vector<IntVec> nesting_curves(const Lattice& L);

/// All classes C with C^2 = K.C = -delta that can be the class of a Galois orbit of delta
/// disjoint (-1)-curves, sorted by (delta, H-degree, coordinates descending).
std::vector<IntVec> negative_classes(const Lattice& L);

/// Classes F with F^2 = 0 and K.F = -2 (fibres of conic bundles).
std::vector<IntVec> conic_classes(const Lattice& L);

std::int64_t orbit_size(const Lattice& L, const IntVec& C);  // -C^2

/// Classes orthogonal to every contracted class: pull-backs from the contracted surface.
bool orthogonal_to(const Lattice& L, const IntVec& v, const std::vector<IntVec>& contracted);

/// Orthogonal projection onto the complement of pairwise orthogonal contracted classes.
QVec pushforward(const Lattice& L, const std::vector<IntVec>& contracted, const QVec& D);
QVec to_q(const IntVec& v);

/// Lattice of the surface obtained by contracting pairwise orthogonal classes.
Lattice contract(const Lattice& L, const std::vector<IntVec>& contracted);

struct Chamber {
    std::vector<int> contracted;  // indices into negative_classes(L), sorted
    QVec certificate;             // interior point, normalised to K.D = -1
    Lattice target;
};

/// Curves on the contraction Y of `I` that generate its cone of curves.
struct SurfaceData {
    std::vector<int> negatives;     // indices of negative classes that are irreducible on Y
    std::vector<IntVec> rigid;      // nesting curves surviving on Y
    std::vector<IntVec> conics;     // conic classes nef on Y
    std::int64_t rho = 0;
    std::int64_t K2 = 0;
};

class ChamberModel {
public:
    explicit ChamberModel(Lattice L);

    const Lattice& lattice() const { return L_; }
    const std::vector<IntVec>& negatives() const { return neg_; }
    const std::vector<IntVec>& rigid() const { return rigid_; }
    const std::vector<IntVec>& conics() const { return conics_; }

    std::vector<IntVec> classes(const std::vector<int>& I) const;
    SurfaceData surface(const std::vector<int>& I) const;

    /// Iteratively contractible subsets, sorted by (size, indices).
    std::vector<std::vector<int>> contractible_sets() const;

    /// Pull-back of the canonical class of the contraction.
    IntVec canonical_of(const std::vector<int>& I) const;

    /// Pull-back of an ample class on the contraction, or nullopt when none was found.
    std::optional<IntVec> ample_on(const std::vector<int>& I) const;

    /// True when the projection of D to the contraction of I is ample there and every
    /// contracted class has a strictly positive coefficient in D - projection.
    bool in_chamber(const std::vector<int>& I, const QVec& D) const;

    /// Contracts classes C with D.C < 0 in the order chosen by `pick` among candidates.
    /// Throws NotBig when D is not big, InvalidArgument when its model is singular.
    std::pair<std::vector<int>, QVec> run(const QVec& D,
                                          const std::function<std::size_t(std::size_t)>* pick = nullptr) const;

private:
    Lattice L_;
    std::vector<IntVec> neg_;
    std::vector<IntVec> rigid_;
    std::vector<IntVec> conics_;
};

/// Ample model of D: the chamber it lies in and the pushforward of D.
std::pair<Chamber, QVec> run_ample_model(const Lattice& L, const QVec& D);

std::vector<Chamber> chambers(const Lattice& L);

/// |I_2 \ I_1| or |I_1 \ I_2| for nested contracted sets; NotNested otherwise.
int codim_of_shared_face(const Chamber& c1, const Chamber& c2);

struct Window {
    std::vector<int> contracted;
    std::optional<IntVec> fibre;  // conic class for a fibration over a curve
    int chamber = -1;             // index into chambers(L)
};

/// Rank one fibrations dominated by the lattice.
std::vector<Window> windows(const Lattice& L);

/// Human readable form of a class, e.g. "H-E1-E2", "E+E'", "48H-17E1".
std::string format_class(const Lattice& L, const IntVec& v);

}  // namespace cremona
