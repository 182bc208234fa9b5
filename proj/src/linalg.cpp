#include "extalg/linalg.hpp"

#include <algorithm>

namespace extalg {

Mat Mat::from_rows(const std::vector<Vec>& rows) {
    Mat m((int)rows.size(), rows.empty() ? 0 : (int)rows[0].size());
    for (int i = 0; i < m.rows; ++i) m.set_row(i, rows[i]);
    return m;
}

Vec vec_zero(int n) { return Vec(n, Fel{0, 1}); }

bool vec_is_zero(const Vec& v) {
    for (const Fel& x : v)
        if (x.a != 0) return false;
    return true;
}

Vec vec_add(const Field& F, const Vec& u, const Vec& v) {
    Vec r(u.size());
    for (size_t i = 0; i < u.size(); ++i) r[i] = F.add(u[i], v[i]);
    return r;
}

Vec vec_sub(const Field& F, const Vec& u, const Vec& v) {
    Vec r(u.size());
    for (size_t i = 0; i < u.size(); ++i) r[i] = F.sub(u[i], v[i]);
    return r;
}

Vec vec_scale(const Field& F, const Fel& c, const Vec& v) {
    Vec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = F.mul(c, v[i]);
    return r;
}

Vec vec_axpy(const Field& F, const Fel& c, const Vec& u, const Vec& v) {
    Vec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = F.add(F.mul(c, u[i]), v[i]);
    return r;
}

Fel dot(const Field& F, const Vec& u, const Vec& v) {
    Fel r = F.zero();
    for (size_t i = 0; i < u.size(); ++i) r = F.add(r, F.mul(u[i], v[i]));
    return r;
}


Mat mat_mul(const Field& F, const Mat& A, const Mat& B) {
    Mat C(A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            const Fel& x = A.at(i, k);
            if (x.a == 0) continue;
            for (int j = 0; j < B.cols; ++j)
                C.at(i, j) = F.add(C.at(i, j), F.mul(x, B.at(k, j)));
        }
    return C;
}

Vec mat_apply(const Field& F, const Mat& A, const Vec& v) {
    Vec r = vec_zero(A.rows);
    for (int i = 0; i < A.rows; ++i) {
        Fel s = F.zero();
        for (int j = 0; j < A.cols; ++j) s = F.add(s, F.mul(A.at(i, j), v[j]));
        r[i] = s;
    }
    return r;
}

Mat mat_transpose(const Mat& A) {
    Mat T(A.cols, A.rows);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) T.at(j, i) = A.at(i, j);
    return T;
}

int rref(const Field& F, Mat& M, std::vector<int>* pivots) {
    int r = 0;
    if (pivots) pivots->clear();
    for (int c = 0; c < M.cols && r < M.rows; ++c) {
        int p = -1;
        for (int i = r; i < M.rows; ++i)
            if (M.at(i, c).a != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        for (int j = 0; j < M.cols; ++j) std::swap(M.at(p, j), M.at(r, j));
        Fel s = F.inv(M.at(r, c));
        for (int j = 0; j < M.cols; ++j) M.at(r, j) = F.mul(s, M.at(r, j));
        for (int i = 0; i < M.rows; ++i) {
            if (i == r || M.at(i, c).a == 0) continue;
            Fel f = M.at(i, c);
            for (int j = 0; j < M.cols; ++j)
                M.at(i, j) = F.sub(M.at(i, j), F.mul(f, M.at(r, j)));
        }
        if (pivots) pivots->push_back(c);
        ++r;
    }
    return r;
}

int rank(const Field& F, Mat M) { return rref(F, M); }

std::optional<Mat> inverse(const Field& F, const Mat& A) {
    if (A.rows != A.cols) return std::nullopt;
    int n = A.rows;
    Mat W(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) W.at(i, j) = A.at(i, j);
        W.at(i, n + i) = {1, 1};
    }
    std::vector<int> piv;
    int r = rref(F, W, &piv);
    if (r < n || piv[n - 1] != n - 1) return std::nullopt;
    Mat R(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) R.at(i, j) = W.at(i, n + j);
    return R;
}

std::optional<Vec> solve(const Field& F, const Mat& A, const Vec& b) {
    Mat W(A.rows, A.cols + 1);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j) W.at(i, j) = A.at(i, j);
        W.at(i, A.cols) = b[i];
    }
    std::vector<int> piv;
    int r = rref(F, W, &piv);
    if (!piv.empty() && piv.back() == A.cols) return std::nullopt;  // inconsistent
    Vec x = vec_zero(A.cols);
    for (int i = 0; i < r; ++i) x[piv[i]] = W.at(i, A.cols);
    return x;
}

Mat kernel_basis(const Field& F, const Mat& A) {
    Mat W = A;
    std::vector<int> piv;
    rref(F, W, &piv);
    std::vector<bool> is_piv(A.cols, false);
    for (int c : piv) is_piv[c] = true;
    std::vector<Vec> rows;
    for (int c = 0; c < A.cols; ++c) {
        if (is_piv[c]) continue;
        Vec v = vec_zero(A.cols);
        v[c] = {1, 1};
        for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = F.neg(W.at((int)i, c));
        rows.push_back(v);
    }
    Mat K = Mat::from_rows(rows);
    if (K.rows == 0) K.cols = A.cols;
    rref(F, K);
    return K;
}

Mat row_space(const Field& F, Mat M) {
    int r = rref(F, M);
    Mat R(r, M.cols);
    for (int i = 0; i < r; ++i) R.set_row(i, M.row(i));
    return R;
}

bool in_row_space(const Field& F, const Mat& echelon, const Vec& v) {
    Vec w = v;
    for (int i = 0; i < echelon.rows; ++i) {
        int lead = -1;
        for (int j = 0; j < echelon.cols; ++j)
            if (echelon.at(i, j).a != 0) {
                lead = j;
                break;
            }
        if (lead < 0) continue;
        if (w[lead].a != 0) {
            Fel f = F.div(w[lead], echelon.at(i, lead));
            for (int j = 0; j < echelon.cols; ++j) w[j] = F.sub(w[j], F.mul(f, echelon.at(i, j)));
        }
    }
    return vec_is_zero(w);
}

Mat complement_rows(const Field&, const Mat& echelon, int n) {
    std::vector<bool> is_piv(n, false);
    for (int i = 0; i < echelon.rows; ++i)
        for (int j = 0; j < n; ++j)
            if (echelon.at(i, j).a != 0) {
                is_piv[j] = true;
                break;
            }
    std::vector<Vec> rows;
    for (int j = 0; j < n; ++j) {
        if (is_piv[j]) continue;
        Vec v = vec_zero(n);
        v[j] = {1, 1};
        rows.push_back(v);
    }
    Mat C = Mat::from_rows(rows);
    if (C.rows == 0) C.cols = n;
    return C;
}

}  // namespace extalg
