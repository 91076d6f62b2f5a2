#include "tropcone/linalg.hpp"

#include <algorithm>

namespace tropcone {

TropMatrix TropMatrix::identity(int n) {
    TropMatrix I(n, n);
    for (int i = 0; i < n; ++i) I.at(i, i) = TropScalar::one();
    return I;
}

TropMatrix TropMatrix::from_columns(int rows, const std::vector<TropVector>& cols) {
    TropMatrix A(rows, static_cast<int>(cols.size()));
    for (int j = 0; j < A.cols(); ++j) {
        if (static_cast<int>(cols[j].size()) != rows)
            throw ShapeError("from_columns: column dimension mismatch");
        for (int i = 0; i < rows; ++i) A.at(i, j) = cols[j][i];
    }
    return A;
}

TropVector TropMatrix::column(int j) const {
    TropVector v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

std::vector<TropVector> TropMatrix::columns() const {
    std::vector<TropVector> out;
    out.reserve(cols_);
    for (int j = 0; j < cols_; ++j) out.push_back(column(j));
    return out;
}

TropVector bottom_vector(int dim) { return TropVector(dim); }

TropVector unit_vector(int dim, int k) {
    TropVector v(dim);
    v[k] = TropScalar::one();
    return v;
}

bool is_bottom_vector(const TropVector& v) {
    return std::all_of(v.begin(), v.end(), [](const TropScalar& x) { return x.is_bottom(); });
}

bool all_finite(const TropVector& v) {
    return std::all_of(v.begin(), v.end(), [](const TropScalar& x) { return x.is_finite(); });
}

std::vector<int> support(const TropVector& v) {
    std::vector<int> s;
    for (int k = 0; k < static_cast<int>(v.size()); ++k)
        if (v[k].is_finite()) s.push_back(k);
    return s;
}

bool leq(const TropVector& x, const TropVector& y) {
    if (x.size() != y.size()) throw ShapeError("leq: dimension mismatch");
    for (size_t k = 0; k < x.size(); ++k)
        if (!(x[k] <= y[k])) return false;
    return true;
}

TropVector v_add(const TropVector& x, const TropVector& y) {
    if (x.size() != y.size()) throw ShapeError("v_add: dimension mismatch");
    TropVector out(x.size());
    for (size_t k = 0; k < x.size(); ++k) out[k] = t_add(x[k], y[k]);
    return out;
}

TropVector v_scale(const TropScalar& lambda, const TropVector& v) {
    TropVector out(v.size());
    for (size_t k = 0; k < v.size(); ++k) out[k] = t_mul(lambda, v[k]);
    return out;
}

TropVector normalize_projective(const TropVector& v) {
    TropScalar m = TropScalar::bottom();
    for (const TropScalar& x : v) m = t_add(m, x);
    if (m.is_bottom()) return v;
    return v_scale(t_neg(m), v);
}

bool proportional(const TropVector& x, const TropVector& y) {
    if (x.size() != y.size()) return false;
    return normalize_projective(x) == normalize_projective(y);
}

bool lex_less(const TropVector& x, const TropVector& y) {
    size_t n = std::min(x.size(), y.size());
    for (size_t k = 0; k < n; ++k) {
        if (x[k] < y[k]) return true;
        if (y[k] < x[k]) return false;
    }
    return x.size() < y.size();
}

TropMatrix mat_mul(const TropMatrix& A, const TropMatrix& B) {
    if (A.cols() != B.rows()) throw ShapeError("mat_mul: inner dimension mismatch");
    TropMatrix C(A.rows(), B.cols());
    for (int i = 0; i < A.rows(); ++i)
        for (int k = 0; k < A.cols(); ++k) {
            const TropScalar& a = A.at(i, k);
            if (a.is_bottom()) continue;
            for (int j = 0; j < B.cols(); ++j)
                C.at(i, j) = t_add(C.at(i, j), t_mul(a, B.at(k, j)));
        }
    return C;
}

TropVector mat_vec(const TropMatrix& A, const TropVector& x) {
    if (A.cols() != static_cast<int>(x.size())) throw ShapeError("mat_vec: dimension mismatch");
    TropVector y(A.rows());
    for (int k = 0; k < A.cols(); ++k) {
        if (x[k].is_bottom()) continue;
        for (int i = 0; i < A.rows(); ++i)
            y[i] = t_add(y[i], t_mul(A.at(i, k), x[k]));
    }
    return y;
}

TropVector vec_mat(const TropVector& a, const TropMatrix& A) {
    if (A.rows() != static_cast<int>(a.size())) throw ShapeError("vec_mat: dimension mismatch");
    TropVector y(A.cols());
    for (int k = 0; k < A.rows(); ++k) {
        if (a[k].is_bottom()) continue;
        for (int j = 0; j < A.cols(); ++j)
            y[j] = t_add(y[j], t_mul(a[k], A.at(k, j)));
    }
    return y;
}

Residuation residual(const TropMatrix& C, const TropVector& x) {
    if (C.rows() != static_cast<int>(x.size())) throw ShapeError("residual: dimension mismatch");
    Residuation res;
    res.lambda.assign(C.cols(), TropScalar::bottom());
    res.top.assign(C.cols(), false);
    for (int r = 0; r < C.cols(); ++r) {
        bool any = false, is_bot = false;
        TropScalar best;
        for (int k = 0; k < C.rows(); ++k) {
            const TropScalar& c = C.at(k, r);
            if (c.is_bottom()) continue;
            if (x[k].is_bottom()) { is_bot = true; any = true; break; }
            TropScalar d(Rational(x[k].value() - c.value()));
            if (!any || d < best) best = d;
            any = true;
        }
        if (!any) {
            res.top[r] = true; // all-bottom column: formal top, never exposed
        } else if (!is_bot) {
            res.lambda[r] = best;
        }
    }
    return res;
}

TropVector project(const TropMatrix& C, const TropVector& x) {
    return mat_vec(C, residual(C, x).lambda);
}

} // namespace tropcone
