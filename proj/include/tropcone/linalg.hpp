#ifndef TROPCONE_LINALG_HPP
#define TROPCONE_LINALG_HPP

#include <vector>

#include "tropcone/scalar.hpp"

namespace tropcone {

// Fixed-dimension vector over the max-plus semiring.
using TropVector = std::vector<TropScalar>;

// Rectangular max-plus matrix, row-major.
class TropMatrix {
public:
    TropMatrix() : rows_(0), cols_(0) {}
    TropMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

    static TropMatrix identity(int n);
    static TropMatrix from_columns(int rows, const std::vector<TropVector>& cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const TropScalar& at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }
    TropScalar& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }

    TropVector column(int j) const;
    std::vector<TropVector> columns() const;

    friend bool operator==(const TropMatrix& a, const TropMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    int rows_, cols_;
    std::vector<TropScalar> data_;
};

TropVector bottom_vector(int dim);
TropVector unit_vector(int dim, int k); // e^k: one at k, bottom elsewhere

bool is_bottom_vector(const TropVector& v);
bool all_finite(const TropVector& v);
std::vector<int> support(const TropVector& v);

// x <= y componentwise.
bool leq(const TropVector& x, const TropVector& y);

// Componentwise max.
TropVector v_add(const TropVector& x, const TropVector& y);

// Scalar multiple: lambda + v componentwise.
TropVector v_scale(const TropScalar& lambda, const TropVector& v);

// Shift a non-zero vector so its maximum finite entry becomes 0. Rays are
// identified up to scalar multiples; this picks the class representative.
TropVector normalize_projective(const TropVector& v);

bool proportional(const TropVector& x, const TropVector& y);

// Strict weak order: componentwise with bottom below every rational.
bool lex_less(const TropVector& x, const TropVector& y);

TropMatrix mat_mul(const TropMatrix& A, const TropMatrix& B);
TropVector mat_vec(const TropMatrix& A, const TropVector& x);
// Row vector times matrix: (a A)_j = max_k (a_k + A_kj).
TropVector vec_mat(const TropVector& a, const TropMatrix& A);

// Left residuation C \ x: the greatest lambda with C lambda <= x (max-plus
// product). An all-bottom column has no finite residual (the formal top);
// such columns are flagged in `top` and their lambda entry is kept at
// bottom, which contributes nothing to subsequent products.
struct Residuation {
    TropVector lambda;
    std::vector<bool> top;
};

Residuation residual(const TropMatrix& C, const TropVector& x);

// Canonical projection onto the column cone: P_C(x) = C (C \ x).
TropVector project(const TropMatrix& C, const TropVector& x);

} // namespace tropcone

#endif
