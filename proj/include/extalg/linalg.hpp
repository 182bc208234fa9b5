#pragma once

#include <optional>
#include <vector>

#include "extalg/field.hpp"

namespace extalg {

using Vec = std::vector<Fel>;

/// Dense row-major matrix of field elements.
struct Mat {
    int rows = 0, cols = 0;
    std::vector<Fel> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a((size_t)r * c, Fel{0, 1}) {}
    Fel& at(int i, int j) { return a[(size_t)i * cols + j]; }
    const Fel& at(int i, int j) const { return a[(size_t)i * cols + j]; }
    Vec row(int i) const { return Vec(a.begin() + (size_t)i * cols, a.begin() + (size_t)(i + 1) * cols); }
    void set_row(int i, const Vec& v) { std::copy(v.begin(), v.end(), a.begin() + (size_t)i * cols); }
    friend bool operator==(const Mat&, const Mat&) = default;
    friend auto operator<=>(const Mat&, const Mat&) = default;

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = {1, 1};
        return m;
    }
    static Mat from_rows(const std::vector<Vec>& rows);
};

Vec vec_zero(int n);
bool vec_is_zero(const Vec& v);
Vec vec_add(const Field& F, const Vec& u, const Vec& v);
Vec vec_sub(const Field& F, const Vec& u, const Vec& v);
Vec vec_scale(const Field& F, const Fel& c, const Vec& v);
Vec vec_axpy(const Field& F, const Fel& c, const Vec& u, const Vec& v);  // c*u + v

Mat mat_mul(const Field& F, const Mat& A, const Mat& B);
Vec mat_apply(const Field& F, const Mat& A, const Vec& v);  // A * v
Fel dot(const Field& F, const Vec& u, const Vec& v);
Mat mat_transpose(const Mat& A);

/// Reduced row echelon form in place; returns rank, records pivot columns.
int rref(const Field& F, Mat& M, std::vector<int>* pivots = nullptr);
int rank(const Field& F, Mat M);
std::optional<Mat> inverse(const Field& F, const Mat& A);
/// One solution of A x = b, or nullopt.
std::optional<Vec> solve(const Field& F, const Mat& A, const Vec& b);
/// Rows span the right null space of A (A x = 0), in reduced echelon form.
Mat kernel_basis(const Field& F, const Mat& A);

/// Canonical reduced echelon basis of the row span (zero rows dropped).
Mat row_space(const Field& F, Mat M);
bool in_row_space(const Field& F, const Mat& echelon, const Vec& v);
/// Standard basis vectors completing the echelon row space to all of k^n.
Mat complement_rows(const Field& F, const Mat& echelon, int n);

/// Odometer over k^n in enumeration-index order (finite fields).
struct VecCounter {
    const Field* F;
    std::vector<long long> idx;
    bool done = false;
    VecCounter(const Field& field, int n) : F(&field), idx(n, 0) { done = false; }
    Vec value() const {
        Vec v(idx.size());
        for (size_t i = 0; i < idx.size(); ++i) v[i] = F->element(idx[i]);
        return v;
    }
    bool next() {
        for (size_t i = 0; i < idx.size(); ++i) {
            if (++idx[i] < F->size()) return true;
            idx[i] = 0;
        }
        done = true;
        return false;
    }
};

}  // namespace extalg
