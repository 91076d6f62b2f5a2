#ifndef TROPCONE_HALFSPACE_HPP
#define TROPCONE_HALFSPACE_HPP

#include <map>
#include <vector>

#include "tropcone/cone.hpp"

namespace tropcone {

// Enumeration budget shared by the conversion and enumeration routines.
// Charged per candidate vector; exceeding it raises ResourceError.
struct Budget {
    long long max_candidates = 1000000;
};

// Half-space {x : max_{i in I}(a_i + x_i) <= max_{j in J}(a_j + x_j)} in
// canonical form: I and J disjoint, all stored coefficients finite (a bottom
// coefficient is represented by absence). Keys are 0-based coordinates.
class HalfSpace {
public:
    HalfSpace(int dim, std::map<int, Rational> lhs, std::map<int, Rational> rhs);

    static HalfSpace whole_space(int dim) { return HalfSpace(dim, {}, {}); }

    int dim() const { return dim_; }
    const std::map<int, Rational>& lhs() const { return lhs_; }
    const std::map<int, Rational>& rhs() const { return rhs_; }

    bool is_whole_space() const { return lhs_.empty(); }

    // Dense coefficient vectors (bottom outside I resp. J).
    TropVector lhs_vector() const;
    TropVector rhs_vector() const;

    TropScalar lhs_value(const TropVector& x) const;
    TropScalar rhs_value(const TropVector& x) const;
    bool contains(const TropVector& x) const;

    // The half-space {rhs <= lhs}; the closure of the complement.
    HalfSpace reversed() const { return HalfSpace(dim_, rhs_, lhs_); }

    // Requires I u J = {1..n}: the point -a (componentwise negation).
    TropVector apex() const;

    friend bool operator==(const HalfSpace& g, const HalfSpace& h) {
        return g.dim_ == h.dim_ && g.lhs_ == h.lhs_ && g.rhs_ == h.rhs_;
    }

private:
    int dim_;
    std::map<int, Rational> lhs_, rhs_;
};

// Canonical form of {x : ax <= bx}: coordinate k goes to J with coefficient
// b_k when a_k <= b_k (dropped if bottom), to I with coefficient a_k when
// a_k > b_k. The denoted set is unchanged.
HalfSpace canonicalize(const TropVector& a, const TropVector& b);

// Inclusion order (inner included in outer). A whole-space outer contains
// everything; otherwise requires I c I', J' c J and the coefficient
// differences a'_j - a'_i <= a_j - a_i for i in I, j in J'.
bool includes(const HalfSpace& outer, const HalfSpace& inner);

// Generators of a single half-space (reduced).
Cone halfspace_generators(const HalfSpace& H);

// Double description step: generators of the intersection of V with H.
Cone intersect(const Cone& V, const HalfSpace& H, const Budget& budget = {});

// Fold intersect over the list starting from the full cone.
Cone hrep_to_vrep(const std::vector<HalfSpace>& hs, int dim, const Budget& budget = {});

// External representation: canonical half-spaces cut out by the extreme
// vectors of the polar, trivial (whole-space) ones dropped. Their
// intersection equals V.
std::vector<HalfSpace> vrep_to_hrep(const Cone& V, const Budget& budget = {});

bool contains_cone(const HalfSpace& H, const Cone& V);

// Affine half-space {x : max(ax, c) <= max(bx, d)}.
struct AffineHalfSpace {
    int dim;
    TropVector a;
    TropScalar c;
    TropVector b;
    TropScalar d;

    bool contains(const TropVector& x) const;
    // Homogenized linear half-space in dimension dim+1 (constants become
    // coefficients of the extra coordinate).
    HalfSpace lift() const;
};

// Tropical polyhedron co(points) + cone(rays). The empty polyhedron is
// represented with no points and no rays.
struct Polyhedron {
    int dim;
    std::vector<TropVector> points;
    std::vector<TropVector> rays;

    Polyhedron(int n, std::vector<TropVector> pts, std::vector<TropVector> rys);
    static Polyhedron empty(int n) { return Polyhedron(n, {}, {}); }
    bool is_empty() const { return points.empty(); }
};

// Lift to the cone in dimension n+1 generated by (z, 0) for points and
// (y, -inf) for rays; x is in P iff (x, 0) is in the lift.
Cone homogenize(const Polyhedron& P);

// Split the generators of a cone in dimension n+1 by their last coordinate
// (finite ones are scaled to 0 first). Throws DegenerateError when no
// generator has a finite last coordinate (the polyhedron is empty).
Polyhedron dehomogenize(const Cone& V);

// Canonical form: extreme points plus one representative per extreme
// recession ray, computed through the homogenized cone.
Polyhedron decompose(const Polyhedron& P);

Cone recession_cone(const Polyhedron& P);

bool polyhedron_member(const Polyhedron& P, const TropVector& x);

// Solve an affine system: V-representation of the intersection of the given
// affine half-spaces. Infeasible systems yield the empty polyhedron.
Polyhedron affine_to_polyhedron(const std::vector<AffineHalfSpace>& hs, int dim,
                                const Budget& budget = {});

// Intersection of V with the closure of the complement of H (H should be
// minimal with respect to V; the caller checks minimality).
Cone face(const Cone& V, const HalfSpace& H, const Budget& budget = {});

} // namespace tropcone

#endif
