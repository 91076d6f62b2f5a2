#include "tropcone/cells.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

namespace tropcone {

namespace {

void require_finite_generators(const Cone& V, const char* where) {
    if (!all_finite(V))
        throw PreconditionError(std::string(where) + ": generators must have finite entries");
}

void require_finite_point(const TropVector& x, const char* where) {
    if (!all_finite(x))
        throw PreconditionError(std::string(where) + ": point must have finite entries");
}

// I u J = {1..n} and the split sets, 0-based.
std::pair<std::vector<int>, std::vector<int>> full_split(const HalfSpace& H, const char* where) {
    if (static_cast<int>(H.lhs().size() + H.rhs().size()) != H.dim())
        throw PreconditionError(std::string(where) + ": requires I u J = {1..n}");
    std::vector<int> I, J;
    for (const auto& [i, q] : H.lhs()) { (void)q; I.push_back(i); }
    for (const auto& [j, q] : H.rhs()) { (void)q; J.push_back(j); }
    return {I, J};
}

uint64_t cover_mask(const TypeVector& S, const std::vector<int>& J) {
    uint64_t m = 0;
    for (int j : J)
        for (int r : S[j]) m |= (uint64_t(1) << r);
    return m;
}

} // namespace

TypeVector type_of(const TropVector& x, const Cone& V) {
    if (static_cast<int>(x.size()) != V.dim()) throw ShapeError("type_of: dimension mismatch");
    require_finite_point(x, "type_of");
    require_finite_generators(V, "type_of");
    const int n = V.dim(), p = V.num_generators();
    TypeVector S(n);
    for (int r = 0; r < p; ++r) {
        TropVector g = V.generator(r);
        std::vector<Rational> diff(n);
        for (int k = 0; k < n; ++k) diff[k] = g[k].value() - x[k].value();
        Rational best = diff[0];
        for (int k = 1; k < n; ++k)
            if (diff[k] > best) best = diff[k];
        for (int k = 0; k < n; ++k)
            if (diff[k] == best) S[k].insert(r);
    }
    return S;
}

bool covers(const HalfSpace& H, const Cone& V) {
    if (H.dim() != V.dim()) throw ShapeError("covers: dimension mismatch");
    require_finite_generators(V, "covers");
    auto [I, J] = full_split(H, "covers");
    (void)I;
    if (V.num_generators() > 63) throw PreconditionError("covers: too many generators");
    TypeVector S = type_of(H.apex(), V);
    uint64_t all = (V.num_generators() == 0) ? 0 : ((uint64_t(1) << V.num_generators()) - 1);
    return cover_mask(S, J) == all;
}

MinimalityResult is_minimal_halfspace(const HalfSpace& H, const Cone& V) {
    if (H.dim() != V.dim()) throw ShapeError("is_minimal_halfspace: dimension mismatch");
    require_finite_generators(V, "is_minimal_halfspace");
    auto [I, J] = full_split(H, "is_minimal_halfspace");
    const int p = V.num_generators();
    if (p > 63) throw PreconditionError("is_minimal_halfspace: too many generators");

    TypeVector S = type_of(H.apex(), V);
    MinimalityResult res;

    uint64_t all = (p == 0) ? 0 : ((uint64_t(1) << p) - 1);
    uint64_t covered = cover_mask(S, J);
    res.covering = covered == all;
    for (int r = 0; r < p; ++r)
        if (!(covered & (uint64_t(1) << r))) res.uncovered.push_back(r);

    for (int i : I) {
        bool found = false;
        for (int j : J) {
            for (int r : S[i]) {
                if (S[j].count(r)) {
                    res.lhs_witnesses.push_back({i, j, r});
                    found = true;
                    break;
                }
            }
            if (found) break;
        }
        if (!found) res.lhs_violations.push_back(i);
    }

    for (int j : J) {
        uint64_t others = 0;
        for (int k : J)
            if (k != j)
                for (int r : S[k]) others |= (uint64_t(1) << r);
        bool found = false;
        for (int i : I) {
            for (int r : S[i]) {
                if (S[j].count(r) && !(others & (uint64_t(1) << r))) {
                    res.rhs_witnesses.push_back({j, i, r});
                    found = true;
                    break;
                }
            }
            if (found) break;
        }
        if (!found) res.rhs_violations.push_back(j);
    }

    res.minimal = res.covering && res.lhs_violations.empty() && res.rhs_violations.empty();
    return res;
}

HalfSpace complete_coefficients(const HalfSpace& H, const Cone& V) {
    if (H.dim() != V.dim()) throw ShapeError("complete_coefficients: dimension mismatch");
    require_finite_generators(V, "complete_coefficients");
    std::vector<int> missing;
    for (int k = 0; k < H.dim(); ++k)
        if (!H.lhs().count(k) && !H.rhs().count(k)) missing.push_back(k);
    if (missing.empty()) return H;
    if (H.rhs().empty())
        throw PreconditionError("complete_coefficients: empty right-hand side");
    if (V.num_generators() == 0)
        throw PreconditionError("complete_coefficients: cone has no generators");

    std::map<int, Rational> lhs = H.lhs();
    for (int h : missing) {
        bool first = true;
        Rational best;
        for (int r = 0; r < V.num_generators(); ++r) {
            TropVector g = V.generator(r);
            Rational value = H.rhs_value(g).value() - g[h].value();
            if (first || value < best) { best = value; first = false; }
        }
        lhs.emplace(h, best);
    }
    return HalfSpace(H.dim(), std::move(lhs), H.rhs());
}

std::vector<CellInequality> cell_of(const TypeVector& S, const Cone& V) {
    const int n = V.dim();
    if (static_cast<int>(S.size()) != n) throw ShapeError("cell_of: type dimension mismatch");
    require_finite_generators(V, "cell_of");
    std::vector<CellInequality> out;
    for (int j = 0; j < n; ++j)
        for (int r : S[j])
            for (int i = 0; i < n; ++i)
                if (i != j) out.push_back({j, i, r});
    return out;
}

bool cell_member(const TropVector& x, const TypeVector& S, const Cone& V) {
    require_finite_point(x, "cell_member");
    for (const CellInequality& q : cell_of(S, V)) {
        TropVector g = V.generator(q.r);
        if (x[q.j].value() + g[q.i].value() > x[q.i].value() + g[q.j].value()) return false;
    }
    return true;
}

int cell_dimension(const TypeVector& S) {
    const int n = static_cast<int>(S.size());
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = ncomp;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w = 0; w < n; ++w) {
                if (comp[w] != -1) continue;
                bool overlap = false;
                for (int r : S[u])
                    if (S[w].count(r)) { overlap = true; break; }
                if (overlap) {
                    comp[w] = ncomp;
                    stack.push_back(w);
                }
            }
        }
        ++ncomp;
    }
    return ncomp;
}

bool is_vertex(const TropVector& x, const Cone& V) {
    return cell_dimension(type_of(x, V)) == 1;
}

namespace {

// Labeled tree on {0..n-1} from a Pruefer sequence (length n-2).
std::vector<std::pair<int, int>> pruefer_tree(const std::vector<int>& seq, int n) {
    std::vector<int> degree(n, 1);
    for (int v : seq) ++degree[v];
    std::vector<std::pair<int, int>> edges;
    std::vector<bool> used(n, false);
    for (int v : seq) {
        int leaf = -1;
        for (int u = 0; u < n; ++u)
            if (degree[u] == 1 && !used[u]) { leaf = u; break; }
        edges.emplace_back(leaf, v);
        used[leaf] = true;
        --degree[v];
    }
    int u1 = -1, u2 = -1;
    for (int u = 0; u < n; ++u) {
        if (used[u] || degree[u] != 1) continue;
        (u1 == -1 ? u1 : u2) = u;
    }
    edges.emplace_back(u1, u2);
    return edges;
}

bool next_odometer(std::vector<int>& idx, int base) {
    for (size_t k = 0; k < idx.size(); ++k) {
        if (++idx[k] < base) return true;
        idx[k] = 0;
    }
    return false;
}

// Solve the tightness system of a tree with a generator on each edge:
// x_u - x_w = v^r_u - v^r_w, pinned at x_0 = 0.
TropVector solve_tree(const std::vector<std::pair<int, int>>& edges,
                      const std::vector<int>& assignment, const Cone& V) {
    const int n = V.dim();
    std::vector<std::vector<std::pair<int, int>>> adj(n); // (neighbor, edge id)
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
        adj[edges[e].first].emplace_back(edges[e].second, e);
        adj[edges[e].second].emplace_back(edges[e].first, e);
    }
    std::vector<Rational> x(n);
    std::vector<bool> known(n, false);
    known[0] = true;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (auto [w, e] : adj[u]) {
            if (known[w]) continue;
            TropVector g = V.generator(assignment[e]);
            x[w] = x[u] - g[u].value() + g[w].value();
            known[w] = true;
            stack.push_back(w);
        }
    }
    TropVector out(n);
    for (int k = 0; k < n; ++k) out[k] = TropScalar(x[k]);
    return out;
}

} // namespace

std::vector<TropVector> enumerate_vertices(const Cone& V, const Budget& budget) {
    require_finite_generators(V, "enumerate_vertices");
    const int n = V.dim(), p = V.num_generators();
    if (p == 0) throw PreconditionError("enumerate_vertices: cone has no generators");

    std::vector<TropVector> found;
    auto record = [&](const TropVector& candidate) {
        if (!is_vertex(candidate, V)) return;
        TropVector nc = normalize_projective(candidate);
        for (const auto& m : found)
            if (m == nc) return;
        found.push_back(std::move(nc));
    };

    if (n == 1) {
        record(TropVector{TropScalar::one()});
    } else {
        long long used = 0;
        std::vector<int> seq(std::max(0, n - 2), 0);
        bool more_trees = true;
        while (more_trees) {
            auto edges = pruefer_tree(seq, n);
            std::vector<int> assignment(n - 1, 0);
            bool more = true;
            while (more) {
                ++used;
                if (used > budget.max_candidates)
                    throw ResourceError("enumerate_vertices: candidate budget exceeded");
                record(solve_tree(edges, assignment, V));
                more = next_odometer(assignment, p);
            }
            more_trees = !seq.empty() && next_odometer(seq, n);
        }
    }
    std::sort(found.begin(), found.end(), lex_less);
    return found;
}

VertexDecomposition vertex_decompose_cell(const TropVector& x, const TypeVector& S,
                                          const Cone& V, const Budget& budget) {
    require_finite_point(x, "vertex_decompose_cell");
    require_finite_generators(V, "vertex_decompose_cell");
    if (!cell_member(x, S, V))
        throw PreconditionError("vertex_decompose_cell: point not in the cell");
    for (const auto& Sj : S)
        if (Sj.empty())
            throw DomainError("vertex_decompose_cell: unbounded cell (empty type set)");

    VertexDecomposition dec;
    for (const TropVector& v : enumerate_vertices(V, budget)) {
        if (!cell_member(v, S, V)) continue;
        Rational lambda = x[0].value() - v[0].value();
        for (int k = 1; k < static_cast<int>(x.size()); ++k)
            lambda = std::max(lambda, Rational(x[k].value() - v[k].value()));
        dec.vertices.push_back(v);
        dec.lambdas.push_back(lambda);
    }
    if (dec.vertices.empty())
        throw DomainError("vertex_decompose_cell: cell has no vertices (boundedness violated)");

    // min-plus combination must reproduce x exactly
    for (int k = 0; k < static_cast<int>(x.size()); ++k) {
        Rational best = dec.lambdas[0] + dec.vertices[0][k].value();
        for (size_t s = 1; s < dec.vertices.size(); ++s)
            best = std::min(best, Rational(dec.lambdas[s] + dec.vertices[s][k].value()));
        if (best != x[k].value())
            throw DomainError("vertex_decompose_cell: cell-boundedness violation "
                              "(vertices do not min-plus generate the point)");
    }
    return dec;
}

Separation separate(const TropVector& y, const Cone& V, const Budget& budget) {
    if (static_cast<int>(y.size()) != V.dim()) throw ShapeError("separate: dimension mismatch");
    require_finite_point(y, "separate");
    require_finite_generators(V, "separate");
    if (V.num_generators() == 0)
        throw PreconditionError("separate: cone has no generators");

    const int n = V.dim();
    Separation sep;
    Residuation res = residual(V.generators(), y);
    sep.projection = mat_vec(V.generators(), res.lambda);
    if (sep.projection == y) {
        sep.is_member = true;
        sep.witness = res.lambda;
        return sep;
    }

    std::vector<int> I, J;
    for (int k = 0; k < n; ++k)
        (sep.projection[k] == y[k] ? J : I).push_back(k);

    auto halfspace_at = [&](const TropVector& point) {
        std::map<int, Rational> lhs, rhs;
        for (int i : I) lhs.emplace(i, Rational(-point[i].value()));
        for (int j : J) rhs.emplace(j, Rational(-point[j].value()));
        return HalfSpace(n, std::move(lhs), std::move(rhs));
    };

    if (is_vertex(sep.projection, V)) {
        sep.apex = sep.projection;
        sep.separator = halfspace_at(sep.projection);
        return sep;
    }

    // Decompose the projection over the vertices of its cell and pick the
    // vertex whose half-space is strictly violated at y.
    TypeVector S = type_of(sep.projection, V);
    VertexDecomposition dec = vertex_decompose_cell(sep.projection, S, V, budget);
    for (const TropVector& vert : dec.vertices) {
        HalfSpace H = halfspace_at(vert);
        if (H.lhs_value(y) > H.rhs_value(y)) {
            sep.apex = vert;
            sep.separator = std::move(H);
            return sep;
        }
    }
    throw Error("separate: no separating vertex found"); // unreachable on valid input
}

CoveringsResult enumerate_minimal_coverings(const TropVector& apex, const Cone& V) {
    require_finite_point(apex, "enumerate_minimal_coverings");
    require_finite_generators(V, "enumerate_minimal_coverings");
    const int n = V.dim(), p = V.num_generators();
    if (n > 20) throw PreconditionError("enumerate_minimal_coverings: dimension too large");
    if (p > 63) throw PreconditionError("enumerate_minimal_coverings: too many generators");

    CoveringsResult out;
    out.apex_in_cone = member(V, apex);
    TypeVector S = type_of(apex, V);
    std::vector<uint64_t> set_mask(n, 0);
    for (int j = 0; j < n; ++j)
        for (int r : S[j]) set_mask[j] |= (uint64_t(1) << r);
    const uint64_t all = (p == 0) ? 0 : ((uint64_t(1) << p) - 1);

    for (uint32_t J = 1; J < (uint32_t(1) << n); ++J) {
        uint64_t covered = 0;
        for (int j = 0; j < n; ++j)
            if (J & (uint32_t(1) << j)) covered |= set_mask[j];
        if (covered != all) continue;
        bool minimal = true;
        for (int j = 0; j < n && minimal; ++j) {
            if (!(J & (uint32_t(1) << j))) continue;
            uint64_t rest = 0;
            for (int k = 0; k < n; ++k)
                if (k != j && (J & (uint32_t(1) << k))) rest |= set_mask[k];
            if (rest == all) minimal = false;
        }
        if (!minimal) continue;
        std::vector<int> js;
        for (int j = 0; j < n; ++j)
            if (J & (uint32_t(1) << j)) js.push_back(j);
        out.coverings.push_back(std::move(js));
    }
    std::sort(out.coverings.begin(), out.coverings.end());
    return out;
}

std::vector<HalfSpace> minimal_halfspaces_at_apex(const TropVector& apex, const Cone& V) {
    CoveringsResult cov = enumerate_minimal_coverings(apex, V);
    std::vector<HalfSpace> out;
    for (const auto& J : cov.coverings) {
        std::map<int, Rational> lhs, rhs;
        for (int j : J) rhs.emplace(j, Rational(-apex[j].value()));
        for (int k = 0; k < V.dim(); ++k)
            if (!rhs.count(k)) lhs.emplace(k, Rational(-apex[k].value()));
        out.emplace_back(V.dim(), std::move(lhs), std::move(rhs));
    }
    return out;
}

long long padovan(int n) {
    if (n < 1) throw DomainError("padovan: n must be at least 1");
    if (n <= 3) return 1;
    std::vector<long long> P(n + 1, 1);
    for (int k = 4; k <= n; ++k) P[k] = P[k - 2] + P[k - 3];
    return P[n];
}

long long sperner_bound(int n) {
    if (n < 1) throw DomainError("sperner_bound: n must be at least 1");
    long long value = 1;
    int k = n / 2;
    for (int i = 1; i <= k; ++i) value = value * (n - k + i) / i;
    return value;
}

} // namespace tropcone
