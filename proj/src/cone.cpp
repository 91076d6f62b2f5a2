#include "tropcone/cone.hpp"

#include <algorithm>
#include <set>

namespace tropcone {

Cone::Cone(int dim, std::vector<TropVector> gens) : dim_(dim) {
    std::vector<TropVector> kept;
    kept.reserve(gens.size());
    for (auto& g : gens) {
        if (static_cast<int>(g.size()) != dim)
            throw ShapeError("Cone: generator dimension mismatch");
        if (!is_bottom_vector(g)) kept.push_back(std::move(g));
    }
    generators_ = TropMatrix::from_columns(dim, kept);
}

Cone Cone::full(int dim) {
    std::vector<TropVector> gens;
    for (int k = 0; k < dim; ++k) gens.push_back(unit_vector(dim, k));
    return Cone(dim, std::move(gens));
}

bool member(const Cone& V, const TropVector& x) {
    if (static_cast<int>(x.size()) != V.dim())
        throw ShapeError("member: dimension mismatch");
    return project(V.generators(), x) == x;
}

Cone reduce(const Cone& V) {
    const int n = V.dim();
    std::vector<TropVector> cols = V.generators().columns();

    // one representative per proportionality class, first wins
    std::vector<TropVector> distinct;
    std::vector<TropVector> norms;
    for (auto& c : cols) {
        TropVector nc = normalize_projective(c);
        bool seen = false;
        for (const auto& m : norms)
            if (m == nc) { seen = true; break; }
        if (!seen) {
            norms.push_back(std::move(nc));
            distinct.push_back(std::move(c));
        }
    }

    std::vector<bool> kept(distinct.size(), true);
    for (size_t s = 0; s < distinct.size(); ++s) {
        std::vector<TropVector> others;
        for (size_t t = 0; t < distinct.size(); ++t)
            if (t != s && kept[t]) others.push_back(distinct[t]);
        TropMatrix M = TropMatrix::from_columns(n, others);
        if (project(M, distinct[s]) == distinct[s]) kept[s] = false;
    }

    std::vector<TropVector> out;
    for (size_t s = 0; s < distinct.size(); ++s)
        if (kept[s]) out.push_back(distinct[s]);
    return Cone(n, std::move(out));
}

std::vector<int> support_of(const Cone& V) {
    std::set<int> s;
    for (int r = 0; r < V.num_generators(); ++r)
        for (int k : support(V.generator(r))) s.insert(k);
    return std::vector<int>(s.begin(), s.end());
}

bool full_support(const Cone& V) {
    return static_cast<int>(support_of(V).size()) == V.dim();
}

bool all_finite(const Cone& V) {
    for (int r = 0; r < V.num_generators(); ++r)
        if (!all_finite(V.generator(r))) return false;
    return true;
}

bool cone_equal_projective(const Cone& A, const Cone& B) {
    if (A.dim() != B.dim()) return false;
    auto normalized = [](const Cone& C) {
        Cone R = reduce(C);
        std::vector<TropVector> cols;
        for (int r = 0; r < R.num_generators(); ++r)
            cols.push_back(normalize_projective(R.generator(r)));
        std::sort(cols.begin(), cols.end(), lex_less);
        return cols;
    };
    return normalized(A) == normalized(B);
}

Cone project_coordinates(const Cone& V, const std::vector<int>& coords) {
    std::vector<TropVector> cols;
    for (int r = 0; r < V.num_generators(); ++r) {
        TropVector g = V.generator(r);
        TropVector q;
        q.reserve(coords.size());
        for (int k : coords) q.push_back(g[k]);
        cols.push_back(std::move(q));
    }
    return Cone(static_cast<int>(coords.size()), std::move(cols));
}

} // namespace tropcone
