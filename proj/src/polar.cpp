#include "tropcone/polar.hpp"

#include <algorithm>

namespace tropcone {

bool polar_member(const PolarVector& w, const Cone& V) {
    if (w.dim() != V.dim()) throw ShapeError("polar_member: dimension mismatch");
    for (int r = 0; r < V.num_generators(); ++r) {
        TropVector g = V.generator(r);
        TropScalar lhs = TropScalar::bottom(), rhs = TropScalar::bottom();
        for (int k = 0; k < V.dim(); ++k) {
            lhs = t_add(lhs, t_mul(w.a[k], g[k]));
            rhs = t_add(rhs, t_mul(w.b[k], g[k]));
        }
        if (!(lhs <= rhs)) return false;
    }
    return true;
}

PolarVector normalize_polar(const PolarVector& w) {
    TropScalar m = TropScalar::bottom();
    for (const TropScalar& x : w.b) m = t_add(m, x);
    if (m.is_bottom())
        for (const TropScalar& x : w.a) m = t_add(m, x);
    if (m.is_bottom()) return w;
    TropScalar shift = t_neg(m);
    return PolarVector{v_scale(shift, w.a), v_scale(shift, w.b)};
}

bool is_trivial_polar(const PolarVector& w) {
    return canonicalize(w.a, w.b).is_whole_space();
}

std::vector<PolarVector> polar_extremes(const Cone& V, const Budget& budget) {
    const int n = V.dim();
    std::vector<HalfSpace> constraints;
    for (int r = 0; r < V.num_generators(); ++r) {
        TropVector g = V.generator(r);
        TropVector lhs(2 * n), rhs(2 * n);
        for (int k = 0; k < n; ++k) {
            lhs[k] = g[k];
            rhs[n + k] = g[k];
        }
        constraints.push_back(canonicalize(lhs, rhs));
    }
    Cone polar = hrep_to_vrep(constraints, 2 * n, budget);
    std::vector<PolarVector> out;
    for (int r = 0; r < polar.num_generators(); ++r) {
        TropVector w = polar.generator(r);
        PolarVector pv{TropVector(w.begin(), w.begin() + n),
                       TropVector(w.begin() + n, w.end())};
        out.push_back(normalize_polar(pv));
    }
    std::sort(out.begin(), out.end(), [](const PolarVector& u, const PolarVector& w) {
        return lex_less(u.a, w.a) || (u.a == w.a && lex_less(u.b, w.b));
    });
    return out;
}

PolarExtremeResult is_extreme_polar(const PolarVector& w, const Cone& V) {
    if (w.dim() != V.dim()) throw ShapeError("is_extreme_polar: dimension mismatch");
    if (!all_finite(V))
        throw PreconditionError("is_extreme_polar: generators must have finite entries");
    if (!polar_member(w, V))
        throw DomainError("is_extreme_polar: inequality does not hold on the cone");

    PolarExtremeResult res;
    PolarVector nw = normalize_polar(w);
    std::vector<int> sa = support(nw.a), sb = support(nw.b);

    if (sa.empty()) {
        // (bottom, b): extreme exactly when b is a unit vector up to scaling
        res.trivial = true;
        res.extreme = sb.size() == 1;
        res.reason = res.extreme ? "trivial extreme (bottom, e^i)"
                                 : "left side bottom but right side not a single unit";
        return res;
    }
    if (sa.size() != 1) {
        res.reason = "left support is not a single coordinate";
        return res;
    }
    const int i = sa[0];
    res.lhs_index = i;
    if (std::find(sb.begin(), sb.end(), i) != sb.end()) {
        res.trivial = is_trivial_polar(w);
        res.reason = res.trivial
                         ? "whole-space inequality (left coordinate also on the right)"
                         : "left coordinate appears on the right";
        return res;
    }

    // scale so a = e^i
    TropScalar shift = t_neg(nw.a[i]);
    TropVector b = v_scale(shift, nw.b);

    for (int j : sb) {
        bool found = false;
        for (int r = 0; r < V.num_generators() && !found; ++r) {
            TropVector g = V.generator(r);
            TropScalar tight = t_mul(b[j], g[j]);
            if (g[i] != tight) continue;
            TropScalar rest = TropScalar::bottom();
            for (int k : sb)
                if (k != j) rest = t_add(rest, t_mul(b[k], g[k]));
            if (tight > rest) {
                res.witnesses[j] = r;
                found = true;
            }
        }
        if (!found) res.unwitnessed.push_back(j);
    }
    res.extreme = res.unwitnessed.empty();
    res.reason = res.extreme ? "every right coordinate has a tight dominant generator"
                             : "some right coordinate has no tight dominant generator";
    return res;
}

Cone dual_polar(const std::vector<PolarVector>& W, int dim, const Budget& budget) {
    std::vector<HalfSpace> hs;
    for (const PolarVector& w : W) {
        if (w.dim() != dim) throw ShapeError("dual_polar: dimension mismatch");
        HalfSpace H = canonicalize(w.a, w.b);
        if (!H.is_whole_space()) hs.push_back(std::move(H));
    }
    return hrep_to_vrep(hs, dim, budget);
}

SupportVectors support_vectors(const PolarVector& w, const Cone& V) {
    PolarExtremeResult ext = is_extreme_polar(w, V);
    if (!ext.extreme)
        throw PreconditionError("support_vectors: vector is not an extreme of the polar");
    SupportVectors out;
    if (ext.trivial) {
        out.degenerate = true;
        for (int r = 0; r < V.num_generators(); ++r) out.generators.push_back(r);
        return out;
    }
    PolarVector nw = normalize_polar(w);
    const int i = ext.lhs_index;
    TropScalar shift = t_neg(nw.a[i]);
    TropVector b = v_scale(shift, nw.b);
    for (int r = 0; r < V.num_generators(); ++r) {
        TropVector g = V.generator(r);
        TropScalar rhs = TropScalar::bottom();
        for (int k = 0; k < V.dim(); ++k) rhs = t_add(rhs, t_mul(b[k], g[k]));
        if (g[i] == rhs) out.generators.push_back(r);
    }
    return out;
}

} // namespace tropcone
