#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "parabolica/sparse_poly.hpp"

namespace parabolica {

struct LiftingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Height function on a finite set of lattice points; non-negative integers
// only. Rational inputs are cleared to integers by normalize_lifting.
struct Lifting {
    std::map<Exp2, Int> values;

    bool covers(const LatticeSet& s) const;
    Int min_over(const LatticeSet& s) const;
    LatticeSet domain() const;
};

// Clears denominators with the lcm of the values and shifts to min 0 if
// requested; rejects negative heights.
Lifting normalize_lifting(const std::map<Exp2, Rat>& values);

// CSV lines "i,j,lambda"; lambda may be rational.
Lifting lifting_from_csv(const std::string& text);
std::string lifting_to_csv(const Lifting& lift);

// One 2-cell of the induced subdivision. The supporting plane is
// z = A x + B y + C, so the upward co-normal is (alpha, beta, 1) with
// alpha = -A, beta = -B, and the plane offset satisfies
// C = min over all lifted points of (alpha, beta, 1) . v.
struct Face {
    std::vector<Exp2> polygon;    // corner vertices, CCW from the lex-min corner
    std::vector<Exp2> points_on;  // every domain point lying on the face
    Rat A, B, C;
    bool normal_integral = false;
};

struct Subdivision {
    std::vector<Face> faces;  // sorted by lexicographic minimum corner
};

struct DegenerateLiftingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Projection of the lower convex hull of the lifted points.
Subdivision regular_subdivision(const Lifting& lift);

// True when regular_subdivision(lift) has exactly the claimed 2-cells
// (corner lists compared up to face order). Flat creases across interior
// edges fail automatically because hull faces are maximal.
bool validate_inducing(const Lifting& lift, const std::vector<std::vector<Exp2>>& claimed);
bool validate_inducing(const Lifting& lift, const Subdivision& claimed);

// f_t = sum a_ij t^lambda(i,j) x^i y^j; every support point must be covered.
ParamPoly patchworking_polynomial(const SparsePoly& f, const Lifting& lift);

// Terms of f_t sitting at lifting level r, with the t^r factor retained.
// An unattained level yields the zero polynomial.
ParamPoly level_restriction(const ParamPoly& f_t, const Lifting& lift, const Int& r);

struct NonIntegerNormalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// (alpha, beta) with (alpha, beta, 1) orthogonal to the lifted face; throws
// when the exact solution is not integral.
std::pair<Int, Int> face_normal(const Subdivision& sub, std::size_t face_id);

struct FlattenResult {
    ParamPoly flattened;
    SparsePoly tile;
    Int alpha, beta, gamma;
};

// Applies the quasihomothety that brings the chosen face to t-level zero.
// The t = 0 specialisation equals the restriction of specialize(f_t, 1) to
// the face, which is asserted.
FlattenResult flatten_face(const ParamPoly& f_t, const Subdivision& sub, std::size_t face_id);

// Lattice points of the face polygon (corners, edges and interior).
LatticeSet face_lattice_points(const Face& face);

// Exact doubled area of the face polygon.
Int face_area2(const Face& face);

}  // namespace parabolica
