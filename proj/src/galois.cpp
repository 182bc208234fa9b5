#include "extalg/galois.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace extalg {

void FiniteGroup::validate_or_throw() const {
    GroupPresentationInput g{labels, table, identity};
    g.validate();
}

bool FiniteGroup::abelian() const {
    for (size_t i = 0; i < table.size(); ++i)
        for (size_t j = 0; j < table.size(); ++j)
            if (table[i][j] != table[j][i]) return false;
    return true;
}

int FiniteGroup::element_order(int g) const {
    int e = identity, cur = g, ord = 1;
    while (cur != e) {
        cur = table[cur][g];
        ++ord;
        if (ord > order()) fail("ShapeMismatch", "element order exceeds group order");
    }
    return ord;
}

std::vector<int> FiniteGroup::element_orders() const {
    std::vector<int> out;
    for (int g = 0; g < order(); ++g) out.push_back(element_order(g));
    std::sort(out.begin(), out.end());
    return out;
}

long long gl_order(long long q, int m) {
    long long qm = 1;
    for (int i = 0; i < m; ++i) qm *= q;
    long long r = 1, qi = 1;
    for (int i = 0; i < m; ++i) {
        r *= qm - qi;
        qi *= q;
    }
    return r;
}

std::string FiniteGroup::iso_hint() const {
    int n = order();
    if (n == 1) return "1";
    auto orders = element_orders();
    if (orders.back() == n) return "Z/" + std::to_string(n);
    if (abelian()) {
        int p = orders[1];  // smallest nontrivial order
        bool elem = true;
        for (int g = 0; g < n; ++g)
            if (g != identity && element_order(g) != p) elem = false;
        if (elem) {
            int k = 0, m = n;
            while (m > 1) {
                m /= p;
                ++k;
            }
            return "(Z/" + std::to_string(p) + ")^" + std::to_string(k);
        }
        return "";
    }
    for (long long q : {2, 3, 4, 5})
        if (gl_order(q, 2) == n) return "GL(2," + std::to_string(q) + ")";
    return "";
}

FiniteGroup group_from_matrices(const Field& F, const std::vector<Mat>& mats) {
    FiniteGroup G;
    std::map<Mat, int> index;
    for (size_t i = 0; i < mats.size(); ++i) {
        if (index.count(mats[i])) fail("ShapeMismatch", "duplicate group element");
        index[mats[i]] = (int)i;
    }
    G.action = mats;
    G.table.assign(mats.size(), std::vector<int>(mats.size(), -1));
    for (size_t i = 0; i < mats.size(); ++i)
        for (size_t j = 0; j < mats.size(); ++j) {
            Mat prod = mat_mul(F, mats[i], mats[j]);
            auto it = index.find(prod);
            if (it == index.end()) fail("ShapeMismatch", "matrix set is not closed");
            G.table[i][j] = it->second;
        }
    Mat id = Mat::identity(mats.empty() ? 0 : mats[0].rows);
    auto it = index.find(id);
    if (it == index.end()) fail("ShapeMismatch", "identity missing");
    G.identity = it->second;
    for (size_t i = 0; i < mats.size(); ++i) G.labels.push_back("g" + std::to_string(i));
    G.validate_or_throw();
    return G;
}

FiniteGroup galois_group_brute(const Algebra& B, const Mat& a_rows) {
    if (!B.F->finite()) fail("UnsupportedOverInfiniteField", "Galois search needs a finite field");
    std::vector<Mat> autos = automorphisms_fixing(B, a_rows);
    return group_from_matrices(*B.F, autos);
}

// ---- pair form on a unified product ----

namespace {

std::string pair_key(const Field& F, const Mat& r, const Mat& s) {
    std::ostringstream os;
    for (const Fel& x : r.a) os << F.to_string(x) << ",";
    os << "|";
    for (const Fel& x : s.a) os << F.to_string(x) << ",";
    return os.str();
}

}  // namespace

UnifiedGaloisGroup galois_group_unified(const ExtendingDatum& D) {
    const Field& F = *D.A.F;
    if (!F.finite()) fail("UnsupportedOverInfiniteField", "Galois search needs a finite field");
    AxiomReport rep = check_axioms(D);
    if (!rep.all_ok()) fail("AxiomsFailed", rep.first_failure());
    int n = D.adim(), m = D.vdim;

    std::vector<PairGroupElement> pairs;
    if (m == 0) {
        pairs.push_back({Mat(n, 0), Mat(0, 0)});
    } else {
        VecCounter sc(F, m * m);
        do {
            Mat sigma(m, m);
            Vec flat = sc.value();
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) sigma.at(i, j) = flat[i * m + j];
            if (rank(F, sigma) != m) continue;
            VecCounter rc(F, n * m);
            do {
                Mat r(n, m);
                Vec rf = rc.value();
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < m; ++j) r.at(i, j) = rf[i * m + j];
                if (morphism_check(D, D, {r, sigma})) pairs.push_back({r, sigma});
            } while (rc.next());
        } while (sc.next());
    }

    UnifiedGaloisGroup out;
    out.pairs = pairs;
    std::map<std::string, int> index;
    for (size_t i = 0; i < pairs.size(); ++i) index[pair_key(F, pairs[i].r, pairs[i].sigma)] = (int)i;
    out.group.table.assign(pairs.size(), std::vector<int>(pairs.size(), -1));
    for (size_t i = 0; i < pairs.size(); ++i)
        for (size_t j = 0; j < pairs.size(); ++j) {
            // (r, s) (r', s') = (r' + r s', s s')
            Mat rprod(pairs[i].r.rows, pairs[i].r.cols);
            Mat rs = mat_mul(F, pairs[i].r, pairs[j].sigma);
            for (size_t k = 0; k < rprod.a.size(); ++k) rprod.a[k] = F.add(pairs[j].r.a[k], rs.a[k]);
            Mat sprod = mat_mul(F, pairs[i].sigma, pairs[j].sigma);
            auto it = index.find(pair_key(F, rprod, sprod));
            if (it == index.end()) fail("ShapeMismatch", "pair set is not closed under the group law");
            out.group.table[i][j] = it->second;
        }
    out.group.identity = index.at(pair_key(F, Mat(n, m), Mat::identity(m)));
    for (size_t i = 0; i < pairs.size(); ++i) {
        out.group.labels.push_back("(r" + std::to_string(i) + ")");
        out.group.action.push_back(morphism_matrix(D, {pairs[i].r, pairs[i].sigma}));
    }
    out.group.validate_or_throw();
    return out;
}

UnifiedGaloisGroup stabilizing_costabilizing_subgroup(const ExtendingDatum& D) {
    UnifiedGaloisGroup full = galois_group_unified(D);
    const Field& F = *D.A.F;
    int m = D.vdim;
    Mat id = Mat::identity(m);
    std::vector<PairGroupElement> sel;
    for (const auto& p : full.pairs)
        if (p.sigma == id) sel.push_back(p);
    // rebuild the table on the subset
    UnifiedGaloisGroup out;
    out.pairs = sel;
    std::map<std::string, int> index;
    for (size_t i = 0; i < sel.size(); ++i) index[pair_key(F, sel[i].r, sel[i].sigma)] = (int)i;
    out.group.table.assign(sel.size(), std::vector<int>(sel.size(), -1));
    for (size_t i = 0; i < sel.size(); ++i)
        for (size_t j = 0; j < sel.size(); ++j) {
            Mat rprod(sel[i].r.rows, sel[i].r.cols);
            for (size_t k = 0; k < rprod.a.size(); ++k)
                rprod.a[k] = F.add(sel[j].r.a[k], sel[i].r.a[k]);  // sigma' = id
            auto it = index.find(pair_key(F, rprod, id));
            if (it == index.end()) fail("ShapeMismatch", "subgroup not closed");
            out.group.table[i][j] = it->second;
        }
    out.group.identity = index.at(pair_key(F, Mat(D.adim(), m), id));
    for (size_t i = 0; i < sel.size(); ++i) {
        out.group.labels.push_back("(h" + std::to_string(i) + ")");
        out.group.action.push_back(morphism_matrix(D, {sel[i].r, sel[i].sigma}));
    }
    out.group.validate_or_throw();
    return out;
}

CodimOneGaloisGroup galois_group_codim1(const Algebra& A, const FlagDatum& fd) {
    const Field& F = *A.F;
    if (!F.finite()) fail("UnsupportedOverInfiniteField", "Galois search needs a finite field");
    ConditionReport rep = flag_check(A, fd);
    if (!rep.all_ok()) fail("FlagCheckFailed", rep.first_failure());
    int n = A.dim;
    std::vector<Vec> basis(n, vec_zero(n));
    for (int i = 0; i < n; ++i) basis[i][i] = F.one();

    std::vector<std::pair<Vec, Fel>> pairs;
    for (long long qi = 1; qi < F.size(); ++qi) {
        Fel q = F.element(qi);
        Fel oneq = F.sub(F.one(), q);
        VecCounter ac(F, n);
        do {
            Vec alpha = ac.value();
            bool ok = true;
            for (int a = 0; a < n && ok; ++a) {
                Vec lhs = vec_scale(F, oneq, mat_apply(F, fd.D, basis[a]));
                Vec rhs = vec_sub(F, A.mul(alpha, basis[a]), vec_scale(F, fd.Lambda[a], alpha));
                if (lhs != rhs) ok = false;
                if (ok) {
                    Vec lhs2 = vec_scale(F, oneq, mat_apply(F, fd.d, basis[a]));
                    Vec rhs2 = vec_sub(F, A.mul(basis[a], alpha), vec_scale(F, fd.lambda[a], alpha));
                    if (lhs2 != rhs2) ok = false;
                }
            }
            if (ok) {
                Vec lhs = vec_scale(F, F.sub(F.one(), F.mul(q, q)), fd.a0);
                Vec rhs = vec_sub(F, A.mul(alpha, alpha), vec_scale(F, fd.u, alpha));
                rhs = vec_add(F, rhs, vec_scale(F, q, mat_apply(F, fd.d, alpha)));
                rhs = vec_add(F, rhs, vec_scale(F, q, mat_apply(F, fd.D, alpha)));
                if (lhs != rhs) ok = false;
            }
            if (ok) {
                Fel lhs = F.mul(oneq, fd.u);
                Fel rhs = F.add(dot(F, fd.lambda, alpha), dot(F, fd.Lambda, alpha));
                if (lhs != rhs) ok = false;
            }
            if (ok) pairs.push_back({alpha, q});
        } while (ac.next());
    }

    CodimOneGaloisGroup out;
    out.pairs = pairs;
    auto key = [&](const Vec& alpha, const Fel& q) {
        std::ostringstream os;
        for (const Fel& x : alpha) os << F.to_string(x) << ",";
        os << "|" << F.to_string(q);
        return os.str();
    };
    std::map<std::string, int> index;
    for (size_t i = 0; i < pairs.size(); ++i) index[key(pairs[i].first, pairs[i].second)] = (int)i;
    out.group.table.assign(pairs.size(), std::vector<int>(pairs.size(), -1));
    for (size_t i = 0; i < pairs.size(); ++i)
        for (size_t j = 0; j < pairs.size(); ++j) {
            // (alpha, q)(alpha', q') = (alpha' + q' alpha, q q')
            Vec aprod = vec_axpy(F, pairs[j].second, pairs[i].first, pairs[j].first);
            Fel qprod = F.mul(pairs[i].second, pairs[j].second);
            auto it = index.find(key(aprod, qprod));
            if (it == index.end()) fail("ShapeMismatch", "pair set is not closed under the group law");
            out.group.table[i][j] = it->second;
        }
    out.group.identity = index.at(key(vec_zero(n), F.one()));
    for (size_t i = 0; i < pairs.size(); ++i) {
        out.group.labels.push_back("(a" + std::to_string(i) + ")");
        Mat M = Mat::identity(n + 1);
        for (int r = 0; r < n; ++r) M.at(r, n) = pairs[i].first[r];
        M.at(n, n) = pairs[i].second;
        out.group.action.push_back(M);
    }
    out.group.validate_or_throw();
    return out;
}

GaloisTestResult invariants_and_galois_test(const Algebra& B, const Mat& a_rows) {
    const Field& F = *B.F;
    FiniteGroup G = galois_group_brute(B, a_rows);
    // fixed subspace: intersection of kernels of (sigma - id)
    std::vector<Vec> rows;
    for (const Mat& sigma : G.action) {
        for (int i = 0; i < B.dim; ++i) {
            Vec row(B.dim);
            for (int j = 0; j < B.dim; ++j)
                row[j] = F.sub(sigma.at(i, j), i == j ? F.one() : F.zero());
            rows.push_back(row);
        }
    }
    GaloisTestResult out;
    if (rows.empty()) {
        out.fixed_rows = Mat::identity(B.dim);
    } else {
        out.fixed_rows = kernel_basis(F, Mat::from_rows(rows));
    }
    if (!is_subalgebra(B, out.fixed_rows, true))
        fail("ShapeMismatch", "fixed subspace is not a subalgebra");
    out.is_galois = row_space(F, out.fixed_rows) == row_space(F, a_rows);
    return out;
}

}  // namespace extalg
