// Test-only oracles: independent brute-force routes used to check the
// library's answers. Nothing here calls the code path under test.
#ifndef TROPCONE_TESTS_ORACLES_HPP
#define TROPCONE_TESTS_ORACLES_HPP

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "tropcone/polar.hpp"

namespace oracles {

using namespace tropcone;

// Integer grid [lo, hi], optionally with bottom.
inline std::vector<TropScalar> scalar_grid(int lo, int hi, bool with_bottom) {
    std::vector<TropScalar> g;
    if (with_bottom) g.push_back(TropScalar::bottom());
    for (int v = lo; v <= hi; ++v) g.push_back(TropScalar(static_cast<long>(v)));
    return g;
}

// All vectors of dimension n with entries from the grid.
inline std::vector<TropVector> vector_grid(int n, const std::vector<TropScalar>& grid) {
    std::vector<TropVector> out;
    std::vector<size_t> idx(n, 0);
    while (true) {
        TropVector v(n);
        for (int k = 0; k < n; ++k) v[k] = grid[idx[k]];
        out.push_back(std::move(v));
        int k = 0;
        for (; k < n; ++k) {
            if (++idx[k] < grid.size()) break;
            idx[k] = 0;
        }
        if (k == n) break;
    }
    return out;
}

// Evaluate {x : max(a_k + x_k) <= max(b_k + x_k)} directly from the dense
// coefficient vectors, bypassing canonical form.
inline bool dense_halfspace_contains(const TropVector& a, const TropVector& b,
                                     const TropVector& x) {
    TropScalar lhs = TropScalar::bottom(), rhs = TropScalar::bottom();
    for (size_t k = 0; k < a.size(); ++k) {
        lhs = t_add(lhs, t_mul(a[k], x[k]));
        rhs = t_add(rhs, t_mul(b[k], x[k]));
    }
    return lhs <= rhs;
}

// Combinations C (x) lambda over a scalar grid: a finite sample of the cone.
inline std::vector<TropVector> sampled_cone_points(const Cone& V,
                                                   const std::vector<TropScalar>& grid) {
    std::vector<TropVector> out;
    for (const TropVector& lambda : vector_grid(V.num_generators(), grid))
        out.push_back(mat_vec(V.generators(), lambda));
    return out;
}

// Membership by brute force over scalar combinations (use for small p only).
inline bool brute_member(const Cone& V, const TropVector& x,
                         const std::vector<TropScalar>& grid) {
    for (const TropVector& pt : sampled_cone_points(V, grid))
        if (pt == x) return true;
    return false;
}

// Minimality by raw evaluations: the half-space contains the cone, no lhs
// coefficient can be raised, and no rhs coefficient can be lowered, all
// decided exactly from generator evaluations. Independent of the type-based
// route.
inline bool tightness_oracle_minimal(const HalfSpace& H, const Cone& V) {
    const int p = V.num_generators();
    for (int r = 0; r < p; ++r)
        if (!H.contains(V.generator(r))) return false;

    // raising a_i is blocked iff some generator is tight at i
    for (const auto& [i, ai] : H.lhs()) {
        bool tight = false;
        for (int r = 0; r < p && !tight; ++r) {
            TropVector g = V.generator(r);
            tight = t_mul(TropScalar(ai), g[i]) == H.rhs_value(g);
        }
        if (!tight) return false;
    }
    // lowering a_j is blocked iff some generator leans on j alone:
    // a_j + g_j = lhs value, strictly above the rest of the rhs
    for (const auto& [j, aj] : H.rhs()) {
        bool pivotal = false;
        for (int r = 0; r < p && !pivotal; ++r) {
            TropVector g = V.generator(r);
            TropScalar lhs = H.lhs_value(g);
            TropScalar jterm = t_mul(TropScalar(aj), g[j]);
            if (jterm != lhs) continue;
            TropScalar rest = TropScalar::bottom();
            for (const auto& [k, ak] : H.rhs())
                if (k != j) rest = t_add(rest, t_mul(TropScalar(ak), g[k]));
            pivotal = jterm > rest;
        }
        if (!pivotal) return false;
    }
    return true;
}

// A point of `inner` outside `outer`, built from the failed inclusion
// condition: a unit vector for a missing left index, otherwise a two-entry
// vector with the inner coefficients negated. Returns nullopt when the
// inclusion conditions all hold.
inline std::optional<TropVector> inclusion_counterexample(const HalfSpace& outer,
                                                          const HalfSpace& inner) {
    const int n = outer.dim();
    if (outer.is_whole_space()) return std::nullopt;
    for (const auto& [i, q] : outer.lhs()) {
        (void)q;
        if (!inner.lhs().count(i)) return unit_vector(n, i);
    }
    auto two_entry = [&](int i, int j) {
        TropVector x(n);
        x[i] = TropScalar(Rational(-inner.lhs().at(i)));
        x[j] = TropScalar(Rational(-inner.rhs().at(j)));
        return x;
    };
    int i0 = outer.lhs().begin()->first;
    for (const auto& [j, q] : inner.rhs()) {
        (void)q;
        if (!outer.rhs().count(j)) return two_entry(i0, j);
    }
    for (const auto& [i, ai] : outer.lhs())
        for (const auto& [j, bj] : inner.rhs())
            if (bj - inner.lhs().at(i) > outer.rhs().at(j) - ai) return two_entry(i, j);
    return std::nullopt;
}

// Difference-bound closure of a system of constraints x_j - x_i <= c_{ji};
// std::nullopt marks an absent bound. Two systems denote the same cell
// exactly when their closures agree.
using Bounds = std::vector<std::vector<std::optional<Rational>>>;

inline Bounds dbm_closure(int n, const std::vector<std::tuple<int, int, Rational>>& cons) {
    Bounds d(n, std::vector<std::optional<Rational>>(n));
    for (int k = 0; k < n; ++k) d[k][k] = Rational(0);
    for (const auto& [j, i, c] : cons) {
        if (!d[j][i] || c < *d[j][i]) d[j][i] = c;
    }
    for (int m = 0; m < n; ++m)
        for (int u = 0; u < n; ++u)
            for (int w = 0; w < n; ++w) {
                if (!d[u][m] || !d[m][w]) continue;
                Rational through = *d[u][m] + *d[m][w];
                if (!d[u][w] || through < *d[u][w]) d[u][w] = through;
            }
    return d;
}

// All extreme candidates of the polar by the structural route: left side a
// unit vector e^i, right coefficients pinned by a tight witness generator
// per index. Returns normalized representatives. Exponential; small n, p only.
inline std::vector<PolarVector> polar_extreme_candidates(const Cone& V) {
    const int n = V.dim(), p = V.num_generators();
    std::vector<PolarVector> found;
    auto push = [&](const PolarVector& w) {
        PolarVector nw = normalize_polar(w);
        for (const auto& m : found)
            if (m == nw) return;
        found.push_back(nw);
    };

    std::vector<int> coords(n);
    for (int k = 0; k < n; ++k) coords[k] = k;

    for (int i = 0; i < n; ++i) {
        for (uint32_t mask = 1; mask < (uint32_t(1) << n); ++mask) {
            if (mask & (uint32_t(1) << i)) continue;
            std::vector<int> J;
            for (int k = 0; k < n; ++k)
                if (mask & (uint32_t(1) << k)) J.push_back(k);
            // witness generator per j pins b_j = v^r_i - v^r_j
            std::vector<int> witness(J.size(), 0);
            while (true) {
                PolarVector w{bottom_vector(n), bottom_vector(n)};
                w.a[i] = TropScalar::one();
                for (size_t t = 0; t < J.size(); ++t) {
                    TropVector g = V.generator(witness[t]);
                    w.b[J[t]] = TropScalar(Rational(g[i].value() - g[J[t]].value()));
                }
                if (polar_member(w, V)) {
                    bool ok = true;
                    for (size_t t = 0; t < J.size() && ok; ++t) {
                        bool tight_dominant = false;
                        for (int r = 0; r < p && !tight_dominant; ++r) {
                            TropVector g = V.generator(r);
                            TropScalar jterm = t_mul(w.b[J[t]], g[J[t]]);
                            if (g[i] != jterm) continue;
                            TropScalar rest = TropScalar::bottom();
                            for (size_t u = 0; u < J.size(); ++u)
                                if (u != t) rest = t_add(rest, t_mul(w.b[J[u]], g[J[u]]));
                            tight_dominant = jterm > rest;
                        }
                        ok = tight_dominant;
                    }
                    if (ok) push(w);
                }
                size_t t = 0;
                for (; t < witness.size(); ++t) {
                    if (++witness[t] < p) break;
                    witness[t] = 0;
                }
                if (t == witness.size()) break;
            }
        }
    }
    return found;
}

// Deterministic random instances.
class Rng {
public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    int uniform(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(engine_);
    }

    TropScalar scalar(int lo, int hi, int bottom_percent) {
        if (uniform(0, 99) < bottom_percent) return TropScalar::bottom();
        return TropScalar(static_cast<long>(uniform(lo, hi)));
    }

    TropVector vector(int n, int lo, int hi, int bottom_percent) {
        TropVector v(n);
        for (int k = 0; k < n; ++k) v[k] = scalar(lo, hi, bottom_percent);
        return v;
    }

    Cone cone(int n, int p, int lo, int hi, int bottom_percent) {
        std::vector<TropVector> gens;
        while (static_cast<int>(gens.size()) < p) {
            TropVector g = vector(n, lo, hi, bottom_percent);
            if (!is_bottom_vector(g)) gens.push_back(std::move(g));
        }
        return Cone(n, std::move(gens));
    }

private:
    std::mt19937_64 engine_;
};

// Example instance used throughout: generators v^r = (r, 2r, 3r, 4r).
inline Cone cyclic_cone(int n) {
    std::vector<TropVector> gens;
    for (int r = 1; r <= n; ++r) {
        TropVector g(n);
        for (int k = 1; k <= n; ++k) g[k - 1] = TropScalar(static_cast<long>(k * r));
        gens.push_back(std::move(g));
    }
    return Cone(n, std::move(gens));
}

inline TropVector qvec(const std::vector<Rational>& entries) {
    TropVector v;
    for (const Rational& q : entries) v.push_back(TropScalar(q));
    return v;
}

} // namespace oracles

#endif
