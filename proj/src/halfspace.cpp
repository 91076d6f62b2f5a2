#include "tropcone/halfspace.hpp"

#include <algorithm>

namespace tropcone {

namespace {

void charge(long long& used, long long amount, const Budget& budget) {
    used += amount;
    if (used > budget.max_candidates)
        throw ResourceError("candidate budget exceeded");
}

Cone intersect_impl(const Cone& V, const HalfSpace& H, const Budget& budget, long long& used);

} // namespace

HalfSpace::HalfSpace(int dim, std::map<int, Rational> lhs, std::map<int, Rational> rhs)
    : dim_(dim), lhs_(std::move(lhs)), rhs_(std::move(rhs)) {
    for (const auto& [k, q] : lhs_) {
        (void)q;
        if (k < 0 || k >= dim_) throw ShapeError("HalfSpace: lhs index out of range");
        if (rhs_.count(k)) throw PreconditionError("HalfSpace: I and J must be disjoint");
    }
    for (const auto& [k, q] : rhs_) {
        (void)q;
        if (k < 0 || k >= dim_) throw ShapeError("HalfSpace: rhs index out of range");
    }
}

TropVector HalfSpace::lhs_vector() const {
    TropVector a(dim_);
    for (const auto& [k, q] : lhs_) a[k] = TropScalar(q);
    return a;
}

TropVector HalfSpace::rhs_vector() const {
    TropVector b(dim_);
    for (const auto& [k, q] : rhs_) b[k] = TropScalar(q);
    return b;
}

TropScalar HalfSpace::lhs_value(const TropVector& x) const {
    TropScalar v = TropScalar::bottom();
    for (const auto& [k, q] : lhs_) v = t_add(v, t_mul(TropScalar(q), x[k]));
    return v;
}

TropScalar HalfSpace::rhs_value(const TropVector& x) const {
    TropScalar v = TropScalar::bottom();
    for (const auto& [k, q] : rhs_) v = t_add(v, t_mul(TropScalar(q), x[k]));
    return v;
}

bool HalfSpace::contains(const TropVector& x) const {
    if (static_cast<int>(x.size()) != dim_)
        throw ShapeError("HalfSpace::contains: dimension mismatch");
    return lhs_value(x) <= rhs_value(x);
}

TropVector HalfSpace::apex() const {
    if (static_cast<int>(lhs_.size() + rhs_.size()) != dim_)
        throw PreconditionError("apex: requires I u J = {1..n}");
    TropVector a(dim_);
    for (const auto& [k, q] : lhs_) a[k] = TropScalar(Rational(-q));
    for (const auto& [k, q] : rhs_) a[k] = TropScalar(Rational(-q));
    return a;
}

HalfSpace canonicalize(const TropVector& a, const TropVector& b) {
    if (a.size() != b.size()) throw ShapeError("canonicalize: dimension mismatch");
    std::map<int, Rational> lhs, rhs;
    for (int k = 0; k < static_cast<int>(a.size()); ++k) {
        if (a[k] <= b[k]) {
            if (b[k].is_finite()) rhs.emplace(k, b[k].value());
        } else {
            lhs.emplace(k, a[k].value()); // a_k > b_k >= bottom, so finite
        }
    }
    return HalfSpace(static_cast<int>(a.size()), std::move(lhs), std::move(rhs));
}

bool includes(const HalfSpace& outer, const HalfSpace& inner) {
    if (outer.dim() != inner.dim()) throw ShapeError("includes: dimension mismatch");
    if (outer.is_whole_space()) return true;
    // I c I'
    for (const auto& [i, q] : outer.lhs()) {
        (void)q;
        if (!inner.lhs().count(i)) return false;
    }
    // J' c J
    for (const auto& [j, q] : inner.rhs()) {
        (void)q;
        if (!outer.rhs().count(j)) return false;
    }
    for (const auto& [i, ai] : outer.lhs()) {
        const Rational& bi = inner.lhs().at(i);
        for (const auto& [j, bj] : inner.rhs()) {
            const Rational& aj = outer.rhs().at(j);
            if (bj - bi > aj - ai) return false;
        }
    }
    return true;
}

namespace {

// Generators of a canonical half-space, deduplicated but not reduced.
std::vector<TropVector> raw_halfspace_generators(const HalfSpace& H) {
    const int n = H.dim();
    std::vector<TropVector> out;
    std::vector<TropVector> norms;
    auto push = [&](TropVector v) {
        if (is_bottom_vector(v)) return;
        TropVector nv = normalize_projective(v);
        for (const auto& m : norms)
            if (m == nv) return;
        norms.push_back(std::move(nv));
        out.push_back(std::move(v));
    };

    if (H.rhs().empty()) {
        // {lhs <= -inf}: coordinates of I pinned to bottom
        for (int i = 0; i < n; ++i)
            if (!H.lhs().count(i)) push(unit_vector(n, i));
        return out;
    }
    for (const auto& [j, bj] : H.rhs()) {
        for (int i = 0; i < n; ++i) {
            TropVector v(n);
            v[i] = t_add(v[i], TropScalar(bj));
            auto it = H.lhs().find(i);
            if (it != H.lhs().end()) v[j] = t_add(v[j], TropScalar(it->second));
            push(std::move(v));
        }
    }
    return out;
}

} // namespace

Cone halfspace_generators(const HalfSpace& H) {
    return reduce(Cone(H.dim(), raw_halfspace_generators(H)));
}

namespace {

Cone intersect_impl(const Cone& V, const HalfSpace& H, const Budget& budget, long long& used) {
    if (V.dim() != H.dim()) throw ShapeError("intersect: dimension mismatch");
    if (V.num_generators() == 0) return V;

    const TropMatrix& C = V.generators();
    TropVector a = vec_mat(H.lhs_vector(), C);
    TropVector b = vec_mat(H.rhs_vector(), C);
    HalfSpace Hw = canonicalize(a, b);

    std::vector<TropVector> w_gens = raw_halfspace_generators(Hw);
    charge(used, static_cast<long long>(w_gens.size()), budget);

    std::vector<TropVector> cols;
    std::vector<TropVector> norms;
    for (const auto& w : w_gens) {
        TropVector v = mat_vec(C, w);
        if (is_bottom_vector(v)) continue;
        TropVector nv = normalize_projective(v);
        bool seen = false;
        for (const auto& m : norms)
            if (m == nv) { seen = true; break; }
        if (!seen) {
            norms.push_back(std::move(nv));
            cols.push_back(std::move(v));
        }
    }
    return reduce(Cone(V.dim(), std::move(cols)));
}

} // namespace

Cone intersect(const Cone& V, const HalfSpace& H, const Budget& budget) {
    long long used = 0;
    return intersect_impl(V, H, budget, used);
}

// The budget spans the whole fold, not each step.
Cone hrep_to_vrep(const std::vector<HalfSpace>& hs, int dim, const Budget& budget) {
    Cone V = Cone::full(dim);
    long long used = 0;
    for (const HalfSpace& H : hs) {
        if (H.dim() != dim) throw ShapeError("hrep_to_vrep: dimension mismatch");
        V = intersect_impl(V, H, budget, used);
    }
    return V;
}

std::vector<HalfSpace> vrep_to_hrep(const Cone& V, const Budget& budget) {
    const int n = V.dim();
    // The polar {(a,b) : aC <= bC} as an intersection of one half-space in
    // dimension 2n per generator.
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

    std::vector<HalfSpace> out;
    for (int r = 0; r < polar.num_generators(); ++r) {
        TropVector w = polar.generator(r);
        // scale the pair so the largest right-hand coefficient is 0
        TropScalar top = TropScalar::bottom();
        for (int k = n; k < 2 * n; ++k) top = t_add(top, w[k]);
        if (top.is_bottom())
            for (int k = 0; k < n; ++k) top = t_add(top, w[k]);
        if (top.is_finite()) w = v_scale(t_neg(top), w);
        TropVector a(w.begin(), w.begin() + n);
        TropVector b(w.begin() + n, w.end());
        HalfSpace H = canonicalize(a, b);
        if (H.is_whole_space()) continue;
        if (std::find(out.begin(), out.end(), H) == out.end()) out.push_back(H);
    }
    return out;
}

bool contains_cone(const HalfSpace& H, const Cone& V) {
    for (int r = 0; r < V.num_generators(); ++r)
        if (!H.contains(V.generator(r))) return false;
    return true;
}

bool AffineHalfSpace::contains(const TropVector& x) const {
    if (static_cast<int>(x.size()) != dim)
        throw ShapeError("AffineHalfSpace::contains: dimension mismatch");
    TropScalar l = c, r = d;
    for (int k = 0; k < dim; ++k) {
        l = t_add(l, t_mul(a[k], x[k]));
        r = t_add(r, t_mul(b[k], x[k]));
    }
    return l <= r;
}

HalfSpace AffineHalfSpace::lift() const {
    TropVector la = a, lb = b;
    la.push_back(c);
    lb.push_back(d);
    return canonicalize(la, lb);
}

Polyhedron::Polyhedron(int n, std::vector<TropVector> pts, std::vector<TropVector> rys)
    : dim(n), points(std::move(pts)) {
    for (const auto& z : points)
        if (static_cast<int>(z.size()) != n)
            throw ShapeError("Polyhedron: point dimension mismatch");
    for (auto& y : rys) {
        if (static_cast<int>(y.size()) != n)
            throw ShapeError("Polyhedron: ray dimension mismatch");
        if (!is_bottom_vector(y)) rays.push_back(std::move(y));
    }
}

Cone homogenize(const Polyhedron& P) {
    std::vector<TropVector> cols;
    for (const auto& z : P.points) {
        TropVector v = z;
        v.push_back(TropScalar::one());
        cols.push_back(std::move(v));
    }
    for (const auto& y : P.rays) {
        TropVector v = y;
        v.push_back(TropScalar::bottom());
        cols.push_back(std::move(v));
    }
    return Cone(P.dim + 1, std::move(cols));
}

Polyhedron dehomogenize(const Cone& V) {
    const int n = V.dim() - 1;
    if (n < 0) throw ShapeError("dehomogenize: dimension must be at least 1");
    std::vector<TropVector> points, rays;
    for (int r = 0; r < V.num_generators(); ++r) {
        TropVector g = V.generator(r);
        TropScalar last = g[n];
        TropVector head(g.begin(), g.begin() + n);
        if (last.is_finite()) {
            points.push_back(v_scale(t_neg(last), head));
        } else if (!is_bottom_vector(head)) {
            rays.push_back(std::move(head));
        }
    }
    if (points.empty())
        throw DegenerateError("dehomogenize: no generator with finite last coordinate "
                              "(empty polyhedron)");
    return Polyhedron(n, std::move(points), std::move(rays));
}

Polyhedron decompose(const Polyhedron& P) {
    if (P.is_empty()) return Polyhedron::empty(P.dim);
    return dehomogenize(reduce(homogenize(P)));
}

Cone recession_cone(const Polyhedron& P) {
    return reduce(Cone(P.dim, P.rays));
}

bool polyhedron_member(const Polyhedron& P, const TropVector& x) {
    TropVector lifted = x;
    lifted.push_back(TropScalar::one());
    return member(homogenize(P), lifted);
}

Polyhedron affine_to_polyhedron(const std::vector<AffineHalfSpace>& hs, int dim,
                                const Budget& budget) {
    std::vector<HalfSpace> lifted;
    for (const auto& h : hs) {
        if (h.dim != dim) throw ShapeError("affine_to_polyhedron: dimension mismatch");
        lifted.push_back(h.lift());
    }
    Cone V = hrep_to_vrep(lifted, dim + 1, budget);
    try {
        return decompose(dehomogenize(V));
    } catch (const DegenerateError&) {
        return Polyhedron::empty(dim);
    }
}

Cone face(const Cone& V, const HalfSpace& H, const Budget& budget) {
    return intersect(V, H.reversed(), budget);
}

} // namespace tropcone
