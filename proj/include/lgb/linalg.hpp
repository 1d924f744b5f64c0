#ifndef LGB_LINALG_HPP
#define LGB_LINALG_HPP

#include "lgb/numberfield.hpp"
#include "lgb/rational.hpp"

#include <Eigen/Dense>

#include <optional>
#include <vector>

namespace Eigen {

template <>
struct NumTraits<lgb::Scalar> : GenericNumTraits<lgb::Scalar> {
    typedef lgb::Scalar Real;
    typedef lgb::Scalar NonInteger;
    typedef lgb::Scalar Nested;
    static inline Real epsilon() { return lgb::Scalar(0); }
    static inline Real dummy_precision() { return lgb::Scalar(0); }
    static inline int digits10() { return 0; }
    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 10,
        AddCost = 200,
        MulCost = 200
    };
};

}  // namespace Eigen

namespace lgb {

using MatS = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

// Gaussian elimination over an exact field with first-nonzero pivoting; works
// for Scalar matrices (possibly over an extension), where magnitude-based
// pivoting makes no sense.
template <typename Mat>
int field_rank(Mat a) {
    using Entry = typename Mat::Scalar;
    int rank = 0;
    for (int col = 0; col < a.cols() && rank < a.rows(); ++col) {
        int pivot = -1;
        for (int r = rank; r < a.rows(); ++r)
            if (!(a(r, col) == Entry(0))) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        a.row(rank).swap(a.row(pivot));
        Entry inv = Entry(1) / a(rank, col);
        for (int r = rank + 1; r < a.rows(); ++r) {
            if (a(r, col) == Entry(0)) continue;
            Entry f = a(r, col) * inv;
            for (int c = col; c < a.cols(); ++c) a(r, c) -= f * a(rank, c);
        }
        ++rank;
    }
    return rank;
}

template <typename Mat>
typename Mat::Scalar field_det(Mat a) {
    using Entry = typename Mat::Scalar;
    if (a.rows() != a.cols()) fail(ErrorCode::Internal, "determinant of non-square matrix");
    Entry det(1);
    for (int col = 0; col < a.cols(); ++col) {
        int pivot = -1;
        for (int r = col; r < a.rows(); ++r)
            if (!(a(r, col) == Entry(0))) {
                pivot = r;
                break;
            }
        if (pivot < 0) return Entry(0);
        if (pivot != col) {
            a.row(col).swap(a.row(pivot));
            det = -det;
        }
        det *= a(col, col);
        Entry inv = Entry(1) / a(col, col);
        for (int r = col + 1; r < a.rows(); ++r) {
            if (a(r, col) == Entry(0)) continue;
            Entry f = a(r, col) * inv;
            for (int c = col; c < a.cols(); ++c) a(r, c) -= f * a(col, c);
        }
    }
    return det;
}

struct RationalSolve {
    bool consistent = false;
    bool unique = false;
    VecQ solution;  // one solution when consistent
    int rank = 0;
};

// Exact solve of A x = b over Q via full-pivot LU.
inline RationalSolve solve_rational(const MatQ& a, const VecQ& b) {
    RationalSolve out;
    Eigen::FullPivLU<MatQ> lu(a);
    lu.setThreshold(Rational(0));
    out.rank = static_cast<int>(lu.rank());
    VecQ x = lu.solve(b);
    if ((a * x - b).isZero(Rational(0))) {
        out.consistent = true;
        out.solution = x;
        out.unique = out.rank == a.cols();
    }
    return out;
}

}  // namespace lgb

#endif
