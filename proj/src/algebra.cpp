#include "extalg/algebra.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace extalg {

Vec Algebra::mul(const Vec& u, const Vec& v) const {
    if ((int)u.size() != dim || (int)v.size() != dim)
        fail("DimensionMismatch", "vector length does not match algebra dimension");
    Vec r = vec_zero(dim);
    for (int i = 0; i < dim; ++i) {
        if (u[i].a == 0) continue;
        for (int j = 0; j < dim; ++j) {
            if (v[j].a == 0) continue;
            Fel cij = F->mul(u[i], v[j]);
            for (int l = 0; l < dim; ++l) {
                const Fel& t = c(i, j, l);
                if (t.a == 0) continue;
                r[l] = F->add(r[l], F->mul(cij, t));
            }
        }
    }
    return r;
}

bool Algebra::is_commutative() const {
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
            if (basis_product(i, j) != basis_product(j, i)) return false;
    return true;
}

std::string Algebra::key() const {
    std::ostringstream os;
    for (const Fel& x : table) os << F->to_string(x) << ",";
    os << "|";
    for (const Fel& x : unit) os << F->to_string(x) << ",";
    return os.str();
}

std::string ValidationReport::summary() const {
    if (issues.empty()) return "valid";
    std::ostringstream os;
    for (const auto& is : issues) {
        if (is.kind == ValidationIssue::Associativity)
            os << "assoc(" << is.i << "," << is.j << "," << is.l << ") ";
        else
            os << "unit(" << is.i << ") ";
    }
    return os.str();
}

ValidationReport validate(const Algebra& A) {
    ValidationReport rep;
    const Field& F = *A.F;
    if ((int)A.unit.size() != A.dim || (int)A.table.size() != A.dim * A.dim * A.dim)
        fail("DimensionMismatch", "table/unit shapes do not match dim");
    std::vector<Vec> basis(A.dim, vec_zero(A.dim));
    for (int i = 0; i < A.dim; ++i) basis[i][i] = F.one();
    for (int i = 0; i < A.dim; ++i) {
        if (A.mul(A.unit, basis[i]) != basis[i] || A.mul(basis[i], A.unit) != basis[i])
            rep.issues.push_back({ValidationIssue::Unit, i, 0, 0});
    }
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < A.dim; ++j)
            for (int l = 0; l < A.dim; ++l) {
                Vec lhs = A.mul(A.basis_product(i, j), basis[l]);
                Vec rhs = A.mul(basis[i], A.basis_product(j, l));
                if (lhs != rhs) rep.issues.push_back({ValidationIssue::Associativity, i, j, l});
            }
    return rep;
}

Algebra change_basis(const Algebra& A, const Mat& C) {
    const Field& F = *A.F;
    auto Ci = inverse(F, C);
    if (!Ci) fail("DimensionMismatch", "change of basis matrix is singular");
    Algebra B(A.F, A.dim);
    std::vector<Vec> cols(A.dim);
    for (int j = 0; j < A.dim; ++j) {
        cols[j] = vec_zero(A.dim);
        for (int i = 0; i < A.dim; ++i) cols[j][i] = C.at(i, j);
    }
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < A.dim; ++j)
            B.set_product(i, j, mat_apply(F, *Ci, A.mul(cols[i], cols[j])));
    B.unit = mat_apply(F, *Ci, A.unit);
    return B;
}

std::pair<Algebra, Mat> with_unit_first(const Algebra& A) {
    const Field& F = *A.F;
    Mat u(1, A.dim);
    u.set_row(0, A.unit);
    Mat span = row_space(F, u);
    Mat comp = complement_rows(F, span, A.dim);
    Mat C(A.dim, A.dim);
    for (int i = 0; i < A.dim; ++i) C.at(i, 0) = A.unit[i];
    for (int j = 0; j < comp.rows; ++j)
        for (int i = 0; i < A.dim; ++i) C.at(i, j + 1) = comp.at(j, i);
    return {change_basis(A, C), C};
}

// ---- characters ----

namespace {

std::vector<Character> characters_finite(const Algebra& A) {
    const Field& F = *A.F;
    auto [N, C] = with_unit_first(A);
    auto Ci = inverse(F, C);
    std::vector<Character> out;
    // functional values on e_1..e_{n-1}; value on e_0 = 1 is forced
    VecCounter ctr(F, A.dim - 1);
    do {
        Vec row = vec_zero(A.dim);
        row[0] = F.one();
        Vec v = ctr.value();
        for (int i = 1; i < A.dim; ++i) row[i] = v[i - 1];
        bool ok = true;
        for (int i = 0; i < A.dim && ok; ++i)
            for (int j = 0; j < A.dim && ok; ++j) {
                Fel lhs = dot(F, row, N.basis_product(i, j));
                if (lhs != F.mul(row[i], row[j])) ok = false;
            }
        if (ok) {
            // transform back: chi(v) = chi_norm(C^{-1} v)
            Vec orig = vec_zero(A.dim);
            for (int j = 0; j < A.dim; ++j) {
                Fel s = F.zero();
                for (int i = 0; i < A.dim; ++i) s = F.add(s, F.mul(row[i], Ci->at(i, j)));
                orig[j] = s;
            }
            out.push_back({orig});
        }
    } while (ctr.next());
    return out;
}

std::vector<long long> divisors(long long n) {
    n = std::llabs(n);
    std::vector<long long> d;
    for (long long i = 1; i * i <= n; ++i)
        if (n % i == 0) {
            d.push_back(i);
            if (i != n / i) d.push_back(n / i);
        }
    std::sort(d.begin(), d.end());
    return d;
}

std::vector<Character> characters_rational(const Algebra& A) {
    const Field& F = *A.F;
    if (A.dim == 1) {
        Vec row = {F.inv(A.unit[0])};
        return {{row}};
    }
    // monogenic route: find a single generator among basis vectors and small sums
    std::vector<Vec> candidates;
    std::vector<Vec> basis(A.dim, vec_zero(A.dim));
    for (int i = 0; i < A.dim; ++i) basis[i][i] = F.one();
    for (int i = 0; i < A.dim; ++i) candidates.push_back(basis[i]);
    for (int i = 0; i < A.dim; ++i)
        for (int j = i + 1; j < A.dim; ++j) candidates.push_back(vec_add(F, basis[i], basis[j]));
    for (const Vec& g : candidates) {
        Mat sub = subalgebra_generated(A, {g});
        if (sub.rows != A.dim) continue;
        // power basis 1, g, ..., g^{d-1}
        std::vector<Vec> powers = {A.unit};
        for (int k = 1; k < A.dim; ++k) powers.push_back(A.mul(powers.back(), g));
        Mat P(A.dim, A.dim);
        for (int k = 0; k < A.dim; ++k)
            for (int i = 0; i < A.dim; ++i) P.at(i, k) = powers[k][i];
        auto Pi = inverse(F, P);
        if (!Pi) continue;
        // minimal polynomial: g^d = sum m_k g^k
        Vec gd = A.mul(powers.back(), g);
        Vec m = mat_apply(F, *Pi, gd);
        // integer-cleared coefficients of x^d - sum m_k x^k
        long long lcm = 1;
        for (const Fel& x : m) lcm = std::lcm(lcm, x.b);
        std::vector<long long> ip(A.dim + 1, 0);
        ip[A.dim] = lcm;
        for (int k = 0; k < A.dim; ++k) ip[k] = -m[k].a * (lcm / m[k].b);
        // rational roots p/q, p | ip[first nonzero], q | lead
        std::vector<Fel> roots;
        int low = 0;
        while (low <= A.dim && ip[low] == 0) ++low;
        if (low > 0) roots.push_back(F.zero());
        if (low <= A.dim && low < A.dim) {
            for (long long pnum : divisors(ip[low]))
                for (long long qden : divisors(ip[A.dim]))
                    for (int sgn : {1, -1}) {
                        Fel cand = F.div(F.from_int(sgn * pnum), F.from_int(qden));
                        Fel acc = F.zero(), pw = F.one();
                        for (int k = 0; k <= A.dim; ++k) {
                            acc = F.add(acc, F.mul(F.from_int(ip[k]), pw));
                            pw = F.mul(pw, cand);
                        }
                        if (F.is_zero(acc)) roots.push_back(cand);
                    }
        }
        std::sort(roots.begin(), roots.end());
        roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
        std::vector<Character> out;
        for (const Fel& lam : roots) {
            Vec pow_row(A.dim);
            Fel pw = F.one();
            for (int k = 0; k < A.dim; ++k) {
                pow_row[k] = pw;
                pw = F.mul(pw, lam);
            }
            Vec row = vec_zero(A.dim);
            for (int j = 0; j < A.dim; ++j) {
                Fel s = F.zero();
                for (int i = 0; i < A.dim; ++i) s = F.add(s, F.mul(pow_row[i], Pi->at(i, j)));
                row[j] = s;
            }
            bool ok = true;
            for (int i = 0; i < A.dim && ok; ++i)
                for (int j = 0; j < A.dim && ok; ++j)
                    if (dot(F, row, A.basis_product(i, j)) != F.mul(row[i], row[j])) ok = false;
            if (ok) out.push_back({row});
        }
        return out;
    }
    fail("UnsupportedOverInfiniteField", "characters over Q require a monogenic algebra");
}

}  // namespace

std::vector<Character> characters(const Algebra& A) {
    if (A.F->finite()) return characters_finite(A);
    if (A.F->kind() == FieldKind::Rationals) return characters_rational(A);
    fail("UnsupportedOverInfiniteField", "character enumeration needs a finite field or Q");
}

// ---- subalgebras ----

Mat subalgebra_generated(const Algebra& A, const std::vector<Vec>& gens) {
    const Field& F = *A.F;
    std::vector<Vec> rows = {A.unit};
    for (const Vec& g : gens) rows.push_back(g);
    Mat span = row_space(F, Mat::from_rows(rows));
    for (;;) {
        std::vector<Vec> next;
        for (int i = 0; i < span.rows; ++i) next.push_back(span.row(i));
        bool grew = false;
        for (int i = 0; i < span.rows; ++i)
            for (int j = 0; j < span.rows; ++j) {
                Vec p = A.mul(span.row(i), span.row(j));
                if (!in_row_space(F, span, p)) {
                    next.push_back(p);
                    grew = true;
                }
            }
        if (!grew) return span;
        span = row_space(F, Mat::from_rows(next));
    }
}

bool is_subalgebra(const Algebra& A, const Mat& rows, bool unital) {
    const Field& F = *A.F;
    Mat ech = row_space(F, rows);
    if (unital && !in_row_space(F, ech, A.unit)) return false;
    for (int i = 0; i < ech.rows; ++i)
        for (int j = 0; j < ech.rows; ++j)
            if (!in_row_space(F, ech, A.mul(ech.row(i), ech.row(j)))) return false;
    return true;
}

Algebra subalgebra_restrict(const Algebra& A, const Mat& rows) {
    const Field& F = *A.F;
    Mat Bt = mat_transpose(rows);  // columns are basis vectors of the span
    Algebra S(A.F, rows.rows);
    for (int i = 0; i < rows.rows; ++i)
        for (int j = 0; j < rows.rows; ++j) {
            auto coords = solve(F, Bt, A.mul(rows.row(i), rows.row(j)));
            if (!coords) fail("NotASubalgebra", "span is not multiplicatively closed");
            S.set_product(i, j, *coords);
        }
    auto u = solve(F, Bt, A.unit);
    if (!u) fail("NotASubalgebra", "span does not contain the unit");
    S.unit = *u;
    return S;
}

// ---- multiplication operators and invariants ----

Mat left_mult(const Algebra& A, const Vec& v) {
    Mat M(A.dim, A.dim);
    std::vector<Vec> basis(A.dim, vec_zero(A.dim));
    for (int i = 0; i < A.dim; ++i) basis[i][i] = A.F->one();
    for (int j = 0; j < A.dim; ++j) {
        Vec col = A.mul(v, basis[j]);
        for (int i = 0; i < A.dim; ++i) M.at(i, j) = col[i];
    }
    return M;
}

Mat right_mult(const Algebra& A, const Vec& v) {
    Mat M(A.dim, A.dim);
    std::vector<Vec> basis(A.dim, vec_zero(A.dim));
    for (int i = 0; i < A.dim; ++i) basis[i][i] = A.F->one();
    for (int j = 0; j < A.dim; ++j) {
        Vec col = A.mul(basis[j], v);
        for (int i = 0; i < A.dim; ++i) M.at(i, j) = col[i];
    }
    return M;
}

AlgebraInvariants invariants(const Algebra& A) {
    const Field& F = *A.F;
    AlgebraInvariants inv;
    inv.commutative = A.is_commutative();
    VecCounter ctr(F, A.dim);
    do {
        Vec v = ctr.value();
        Vec sq = A.mul(v, v);
        if (sq == v) ++inv.idempotents;
        if (vec_is_zero(sq)) ++inv.square_zero;
    } while (ctr.next());
    inv.characters = (long long)characters(A).size();
    // center: v with e_i v = v e_i for every basis vector
    std::vector<Vec> basis(A.dim, vec_zero(A.dim));
    for (int i = 0; i < A.dim; ++i) basis[i][i] = F.one();
    Mat sys(A.dim * A.dim, A.dim);
    for (int i = 0; i < A.dim; ++i) {
        Mat D = left_mult(A, basis[i]);
        Mat R = right_mult(A, basis[i]);
        for (int r = 0; r < A.dim; ++r)
            for (int cjl = 0; cjl < A.dim; ++cjl)
                sys.at(i * A.dim + r, cjl) = F.sub(D.at(r, cjl), R.at(r, cjl));
    }
    inv.center_dim = kernel_basis(F, sys).rows;
    return inv;
}

// ---- isomorphism search ----

namespace {

bool is_multiplicative(const Algebra& A, const Algebra& B, const Mat& M) {
    const Field& F = *A.F;
    std::vector<Vec> img(A.dim);
    for (int j = 0; j < A.dim; ++j) {
        img[j] = vec_zero(A.dim);
        for (int i = 0; i < A.dim; ++i) img[j][i] = M.at(i, j);
    }
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < A.dim; ++j) {
            Vec lhs = mat_apply(F, M, A.basis_product(i, j));
            Vec rhs = B.mul(img[i], img[j]);
            if (lhs != rhs) return false;
        }
    return true;
}

std::optional<Mat> iso_dim2_rationals(const Algebra& A, const Algebra& B) {
    const Field& F = *A.F;
    // normalize both to basis {1, x}: x^2 = a + b x, then compare the
    // completed-square discriminant a + b^2/4 up to squares
    auto normal_form = [&](const Algebra& X) {
        auto [N, C] = with_unit_first(X);
        Vec sq = N.basis_product(1, 1);
        return std::tuple<Fel, Fel, Mat>(sq[0], sq[1], C);
    };
    auto [a1, b1, C1] = normal_form(A);
    auto [a2, b2, C2] = normal_form(B);
    Fel quarter = F.inv(F.from_int(4));
    Fel d1 = F.add(a1, F.mul(quarter, F.mul(b1, b1)));
    Fel d2 = F.add(a2, F.mul(quarter, F.mul(b2, b2)));
    std::optional<Fel> q;
    if (F.is_zero(d1) && F.is_zero(d2)) q = F.one();
    else if (!F.is_zero(d1) && !F.is_zero(d2)) q = F.square_root(F.div(d1, d2));
    if (!q) return std::nullopt;
    // x1 -> alpha + q x2 with alpha = (b1 - q b2) / 2
    Fel alpha = F.div(F.sub(b1, F.mul(*q, b2)), F.from_int(2));
    Mat Mn(2, 2);
    Mn.at(0, 0) = F.one();
    Mn.at(0, 1) = alpha;
    Mn.at(1, 1) = *q;
    Mat M = mat_mul(F, C2, mat_mul(F, Mn, *inverse(F, C1)));
    return M;
}

}  // namespace

std::optional<Mat> find_isomorphism(const Algebra& A, const Algebra& B) {
    const Field& F = *A.F;
    if (!A.F->same(*B.F)) fail("DimensionMismatch", "isomorphism requires a common field");
    if (A.dim != B.dim) return std::nullopt;
    if (A.dim == 1) {
        Mat M(1, 1);
        M.at(0, 0) = F.div(B.unit[0], A.unit[0]);
        return M;
    }
    if (!F.finite()) {
        if (F.kind() == FieldKind::Rationals && A.dim == 2) return iso_dim2_rationals(A, B);
        fail("UnsupportedOverInfiniteField", "isomorphism search needs a finite field (or Q, dim <= 2)");
    }
    if (invariants(A) != invariants(B)) return std::nullopt;
    auto [An, CA] = with_unit_first(A);
    auto [Bn, CB] = with_unit_first(B);
    int n = A.dim;
    // images of e_1..e_{n-1}; e_0 = 1 is fixed
    VecCounter ctr(F, n * (n - 1));
    do {
        Mat M(n, n);
        M.at(0, 0) = F.one();
        Vec flat = ctr.value();
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < n; ++i) M.at(i, j) = flat[(j - 1) * n + i];
        if (!is_multiplicative(An, Bn, M)) continue;
        if (rank(F, M) != n) continue;
        return mat_mul(F, CB, mat_mul(F, M, *inverse(F, CA)));
    } while (ctr.next());
    return std::nullopt;
}

std::vector<Mat> automorphisms_fixing(const Algebra& B, const Mat& a_rows) {
    const Field& F = *B.F;
    if (!F.finite()) fail("UnsupportedOverInfiniteField", "automorphism search needs a finite field");
    Mat ech = row_space(F, a_rows);
    if (!is_subalgebra(B, ech, true)) fail("NotASubalgebra", "span is not a unital subalgebra");
    Mat comp = complement_rows(F, ech, B.dim);
    int r = ech.rows, m = comp.rows, n = B.dim;
    Mat C(n, n);
    for (int j = 0; j < r; ++j)
        for (int i = 0; i < n; ++i) C.at(i, j) = ech.at(j, i);
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < n; ++i) C.at(i, r + j) = comp.at(j, i);
    Algebra Bn = change_basis(B, C);
    Mat Ci = *inverse(F, C);
    std::vector<Mat> out;
    VecCounter ctr(F, n * m);
    do {
        Mat M = Mat::identity(n);
        Vec flat = ctr.value();
        for (int j = 0; j < m; ++j)
            for (int i = 0; i < n; ++i) M.at(i, r + j) = flat[j * n + i];
        // identity on the fixed block is built in; complement columns free
        if (!is_multiplicative(Bn, Bn, M)) continue;
        if (rank(F, M) != n) continue;
        out.push_back(mat_mul(F, C, mat_mul(F, M, Ci)));
    } while (ctr.next());
    return out;
}

// ---- supersolvable towers ----

namespace {

std::optional<std::vector<Mat>> tower_rec(const Algebra& E) {
    const Field& F = *E.F;
    if (E.dim == 1) {
        Mat u(1, 1);
        u.at(0, 0) = F.one();
        return std::vector<Mat>{u};
    }
    // codimension-1 closed subspaces containing the unit: kernels of
    // functionals vanishing on the unit
    Mat urow(1, E.dim);
    urow.set_row(0, E.unit);
    Mat funcs = kernel_basis(F, urow);  // f with f . unit = 0? kernel of u^T x...
    // kernel_basis solves urow * x = 0, i.e. functionals are vectors x with
    // <unit, x> = 0; hyperplane = { v : <x, v> = 0 } contains unit.
    std::set<std::string> seen;
    VecCounter ctr(F, funcs.rows);
    do {
        Vec coef = ctr.value();
        if (vec_is_zero(coef)) continue;
        Vec f = vec_zero(E.dim);
        for (int i = 0; i < funcs.rows; ++i) f = vec_axpy(F, coef[i], funcs.row(i), f);
        // scale-normalize for dedup
        int lead = 0;
        while (f[lead] == F.zero()) ++lead;
        f = vec_scale(F, F.inv(f[lead]), f);
        std::ostringstream os;
        for (const Fel& x : f) os << F.to_string(x) << ",";
        if (!seen.insert(os.str()).second) continue;
        Mat frow(1, E.dim);
        frow.set_row(0, f);
        Mat hyper = kernel_basis(F, frow);
        if (!is_subalgebra(E, hyper, true)) continue;
        Algebra sub = subalgebra_restrict(E, hyper);
        auto inner = tower_rec(sub);
        if (!inner) continue;
        std::vector<Mat> tower;
        for (const Mat& stage : *inner) tower.push_back(row_space(F, mat_mul(F, stage, hyper)));
        tower.push_back(Mat::identity(E.dim));
        return tower;
    } while (ctr.next());
    return std::nullopt;
}

}  // namespace

std::optional<std::vector<Mat>> supersolvable_tower(const Algebra& E) {
    if (!E.F->finite() && E.dim > 2)
        fail("UnsupportedOverInfiniteField", "tower search needs a finite field above dim 2");
    if (!E.F->finite()) {
        // dim <= 2: the chain span{1} c E always works
        const Field& F = *E.F;
        std::vector<Mat> tower;
        Mat u(1, E.dim);
        u.set_row(0, E.unit);
        tower.push_back(row_space(F, u));
        if (E.dim == 2) tower.push_back(Mat::identity(2));
        return tower;
    }
    return tower_rec(E);
}

// ---- builders ----

Algebra algebra_k(FieldPtr F) {
    Algebra A(F, 1);
    A.c(0, 0, 0) = F->one();
    A.unit = {F->one()};
    return A;
}

Algebra algebra_dim2(FieldPtr F, const Fel& a, const Fel& b) {
    Algebra A(F, 2);
    A.unit = {F->one(), F->zero()};
    A.set_product(0, 0, A.unit);
    A.set_product(0, 1, {F->zero(), F->one()});
    A.set_product(1, 0, {F->zero(), F->one()});
    A.set_product(1, 1, {a, b});
    return A;
}

Algebra algebra_dim3(FieldPtr F, const Vec& xx, const Vec& yy, const Vec& xy, const Vec& yx) {
    Algebra A(F, 3);
    A.unit = {F->one(), F->zero(), F->zero()};
    std::vector<Vec> basis = {{F->one(), F->zero(), F->zero()},
                              {F->zero(), F->one(), F->zero()},
                              {F->zero(), F->zero(), F->one()}};
    for (int i = 0; i < 3; ++i) {
        A.set_product(0, i, basis[i]);
        A.set_product(i, 0, basis[i]);
    }
    A.set_product(1, 1, xx);
    A.set_product(2, 2, yy);
    A.set_product(1, 2, xy);
    A.set_product(2, 1, yx);
    return A;
}

Algebra algebra_m2(FieldPtr F) {
    // basis E11, E12, E21, E22; Eab * Ecd = [b==c] Ead
    Algebra A(F, 4);
    auto idx = [](int a, int b) { return 2 * a + b; };
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d)
                    if (b == c) A.c(idx(a, b), idx(c, d), idx(a, d)) = F->one();
    A.unit = vec_zero(4);
    A.unit[idx(0, 0)] = F->one();
    A.unit[idx(1, 1)] = F->one();
    return A;
}

}  // namespace extalg
