#ifndef TROPCONE_POLAR_HPP
#define TROPCONE_POLAR_HPP

#include <map>
#include <vector>

#include "tropcone/cells.hpp"

namespace tropcone {

// Element of the polar cone: the pair (a, b) denoting the inequality
// max_i (a_i + x_i) <= max_j (b_j + x_j). Membership in the polar of V means
// every generator of V satisfies it.
struct PolarVector {
    TropVector a;
    TropVector b;

    int dim() const { return static_cast<int>(a.size()); }

    friend bool operator==(const PolarVector& u, const PolarVector& w) {
        return u.a == w.a && u.b == w.b;
    }
};

// Every generator of V satisfies the inequality of w.
bool polar_member(const PolarVector& w, const Cone& V);

// Scale so the maximum rhs coefficient is 0 (falling back to the lhs when
// the rhs is all bottom); canonical representative of the scaling class.
PolarVector normalize_polar(const PolarVector& w);

// The inequality constrains nothing (its canonical form has empty lhs).
bool is_trivial_polar(const PolarVector& w);

// Extreme vectors of the polar of V, computed by double description in
// dimension 2n, one normalized representative per ray.
std::vector<PolarVector> polar_extremes(const Cone& V, const Budget& budget = {});

// Structural test of extremality: scalar multiple of (bottom, e^i), or of
// (e^i, sum_J b_j e^j) with i outside J where every j in J has a generator
// tight at i and j and strictly above the rest of J. Requires finite
// generators and w in the polar.
struct PolarExtremeResult {
    bool extreme = false;
    bool trivial = false;              // denotes the whole space
    int lhs_index = -1;                // i of the normalized form, when shaped
    std::map<int, int> witnesses;      // j -> witness generator r
    std::vector<int> unwitnessed;      // j in J with no tight dominant generator
    std::string reason;
};

PolarExtremeResult is_extreme_polar(const PolarVector& w, const Cone& V);

// Cone cut out by a family of inequalities.
Cone dual_polar(const std::vector<PolarVector>& W, int dim, const Budget& budget = {});

// Generators lying on the hyperplane {x_i = max_J (b_j + x_j)} of an extreme
// polar vector; they determine its coefficients. For a trivial extreme every
// generator is reported and `degenerate` is set.
struct SupportVectors {
    std::vector<int> generators;
    bool degenerate = false;
};

SupportVectors support_vectors(const PolarVector& w, const Cone& V);

} // namespace tropcone

#endif
