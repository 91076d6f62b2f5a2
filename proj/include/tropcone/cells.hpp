#ifndef TROPCONE_CELLS_HPP
#define TROPCONE_CELLS_HPP

#include <optional>
#include <set>
#include <vector>

#include "tropcone/halfspace.hpp"

namespace tropcone {

// Type of a point relative to the generators: for each
// coordinate j, the set S_j of generators r (0-based) attaining
// max_k (v^r_k - x_k) at k = j. Every generator belongs to at least one S_j.
using TypeVector = std::vector<std::set<int>>;

// All entries of x and of every generator must be finite.
TypeVector type_of(const TropVector& x, const Cone& V);

// V c H, decided by the covering criterion at the apex: the S_j of the apex
// for j in J cover all generators. H must be canonical with I u J = {1..n}.
bool covers(const HalfSpace& H, const Cone& V);

struct MinimalityResult {
    bool minimal = false;
    // condition (iii): the J-sets at the apex cover every generator
    bool covering = false;
    std::vector<int> uncovered; // generators missed by the J-sets
    // condition (i): witnesses (i, j, r) with r in S_i n S_j
    struct LhsWitness { int i, j, r; };
    std::vector<LhsWitness> lhs_witnesses;
    std::vector<int> lhs_violations; // i in I with no such witness
    // condition (ii): witnesses (j, i, r) with r in (S_i n S_j) \ U_{k in J\{j}} S_k
    struct RhsWitness { int j, i, r; };
    std::vector<RhsWitness> rhs_witnesses;
    std::vector<int> rhs_violations; // j in J with no such witness
};

// Exact combinatorial minimality test at the apex. Requires finite
// generators, canonical H and I u J = {1..n}.
MinimalityResult is_minimal_halfspace(const HalfSpace& H, const Cone& V);

// Extend a half-space whose I u J misses some coordinates to one with
// I u J = {1..n} containing the same cone: each missing coordinate h joins
// the left side with coefficient min_r (rhs(v^r) - v^r_h).
HalfSpace complete_coefficients(const HalfSpace& H, const Cone& V);

// Two-coordinate inequality x_j + v^r_i <= x_i + v^r_j (r in S_j).
struct CellInequality {
    int j, i, r;
};

// Defining inequalities of the cell X_S (all points whose type contains S).
std::vector<CellInequality> cell_of(const TypeVector& S, const Cone& V);
bool cell_member(const TropVector& x, const TypeVector& S, const Cone& V);

// Dimension of X_S: connected components of the graph on coordinates with
// an edge {i,j} whenever S_i n S_j is nonempty.
int cell_dimension(const TypeVector& S);

// x spans a one-dimensional cell of the natural cell decomposition.
bool is_vertex(const TropVector& x, const Cone& V);

// All vertices of the natural cell decomposition, one projectively
// normalized representative per class, in lexicographic order. Candidates
// come from spanning-tree tightness systems; every output is certified by
// is_vertex. Requires finite generators.
std::vector<TropVector> enumerate_vertices(const Cone& V, const Budget& budget = {});

// Min-plus decomposition of a point of a bounded cell over the vertices
// lying in that cell: x = min_s (lambda_s + vertex_s) exactly.
struct VertexDecomposition {
    std::vector<TropVector> vertices;
    std::vector<Rational> lambdas;
};

VertexDecomposition vertex_decompose_cell(const TropVector& x, const TypeVector& S,
                                          const Cone& V, const Budget& budget = {});

// Separation of a point from a cone by a half-space whose apex is a vertex.
struct Separation {
    bool is_member = false;
    TropVector projection;              // P_V(y)
    TropVector witness;                 // member case: V (x) witness = y
    std::optional<HalfSpace> separator; // non-member case
    TropVector apex;                    // apex of the separator (a vertex)
};

Separation separate(const TropVector& y, const Cone& V, const Budget& budget = {});

// All index sets J whose type sets at the apex cover every generator, with
// no proper subset covering. Sorted lexicographically.
struct CoveringsResult {
    std::vector<std::vector<int>> coverings;
    bool apex_in_cone = false;
};

CoveringsResult enumerate_minimal_coverings(const TropVector& apex, const Cone& V);

// The half-spaces with coefficients -apex determined by the minimal
// coverings (I is the complement of J).
std::vector<HalfSpace> minimal_halfspaces_at_apex(const TropVector& apex, const Cone& V);

long long padovan(int n);
long long sperner_bound(int n);

} // namespace tropcone

#endif
