#ifndef TROPCONE_CONE_HPP
#define TROPCONE_CONE_HPP

#include <vector>

#include "tropcone/linalg.hpp"

namespace tropcone {

// Finitely generated max-plus cone in V-representation: the set of all
// max-plus linear combinations of the columns of `generators`. The zero
// vector is never stored as a generator; a cone with no columns denotes
// the zero cone {(-inf,...,-inf)}.
class Cone {
public:
    explicit Cone(int dim) : dim_(dim), generators_(dim, 0) {}
    Cone(int dim, std::vector<TropVector> gens);

    static Cone full(int dim); // generated by the unit vectors
    static Cone zero(int dim) { return Cone(dim); }

    int dim() const { return dim_; }
    int num_generators() const { return generators_.cols(); }
    const TropMatrix& generators() const { return generators_; }
    TropVector generator(int r) const { return generators_.column(r); }

private:
    int dim_;
    TropMatrix generators_;
};

// x in cone(V), decided by the projection fixed-point test.
bool member(const Cone& V, const TropVector& x);

// Keep exactly one representative per extreme ray: drop proportional
// duplicates (first representative wins), then every column that is a
// combination of the retained others. The cone is unchanged as a set.
Cone reduce(const Cone& V);

// Union of the generators' supports (0-based coordinate indices).
std::vector<int> support_of(const Cone& V);
bool full_support(const Cone& V);

// All finite-entry generators.
bool all_finite(const Cone& V);

// Same set of projectively normalized extreme rays.
bool cone_equal_projective(const Cone& A, const Cone& B);

// Keep only the coordinates listed in `coords` (ascending, 0-based).
Cone project_coordinates(const Cone& V, const std::vector<int>& coords);

} // namespace tropcone

#endif
