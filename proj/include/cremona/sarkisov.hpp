#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cremona/lattice.hpp"

namespace cremona {

/// A fibration on a contraction of the ambient lattice. The contraction is recorded by the
/// indices of its contracted negative classes; a curve base is recorded by its fibre class.
struct FibrationVertex {
    std::vector<int> contracted;
    std::optional<IntVec> fibre;
    int rank = 0;
    std::string name;

    friend bool operator==(const FibrationVertex&, const FibrationVertex&) = default;
};

struct ComplexEdge {
    int from = 0;  // higher rank
    int to = 0;
    int type_hi = 0, type_lo = 0;

    friend bool operator==(const ComplexEdge&, const ComplexEdge&) = default;
};

/// (rank 3 vertex, rank 2 vertex, rank 1 vertex, rank 2 vertex).
using Square = std::array<int, 4>;

struct SquareComplex {
    Lattice ambient;
    std::vector<IntVec> negatives;
    std::vector<FibrationVertex> vertices;
    std::vector<ComplexEdge> edges;  // types (3,2) and (2,1) only
    std::vector<Square> squares;

    int find(const std::string& name) const;  // -1 when absent
    friend bool operator==(const SquareComplex&, const SquareComplex&) = default;
};

/// Every rank 1..3 fibration on every contraction of Z, the factorisation edges, and one square
/// for each pair of triangles glued along a (3,1) edge.
SquareComplex build_local(const Lattice& Z);

/// Squares having `v` as a corner.
int squares_at(const SquareComplex& X, int v);

/// Boundary cycle of the disk of squares around a rank 3 vertex, alternating rank 2 and rank 1
/// vertices and starting at the smallest rank 1 vertex.
std::vector<int> elementary_relation(const SquareComplex& X, int vertex);

/// Squares containing the edge from the blow-up of one orbit of the given degree to the plane,
/// over every further blow-up of an orbit of degree 1..max_extra.
int bertini_edge_square_count(int degree = 8, int max_extra = 8);

std::string export_dot(const SquareComplex& X);
std::string export_json(const SquareComplex& X);
SquareComplex import_json(const std::string& text);

}  // namespace cremona
