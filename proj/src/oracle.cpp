#include "extalg/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <thread>

#include "extalg/unified.hpp"

namespace extalg {

namespace {

long long pow_capped(long long base, long long exp, long long cap) {
    long long r = 1;
    for (long long i = 0; i < exp; ++i) {
        if (r > cap / base) return cap + 1;
        r *= base;
    }
    return r;
}

/// Fast associativity check over the non-unit triples only (products with
/// e_0 = 1 hold by construction).
bool associative_nonunit(const Algebra& A) {
    int n = A.dim;
    std::vector<Vec> basis(n, vec_zero(n));
    for (int i = 0; i < n; ++i) basis[i][i] = A.F->one();
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) {
            Vec pij = A.basis_product(i, j);
            for (int l = 1; l < n; ++l)
                if (A.mul(pij, basis[l]) != A.mul(basis[i], A.basis_product(j, l))) return false;
        }
    return true;
}

/// Subspaces of dimension sub_dim containing the unit, as echelon bases.
std::vector<Mat> unital_subspaces(const Algebra& A, int sub_dim) {
    const Field& F = *A.F;
    std::vector<Mat> out;
    std::set<std::string> seen;
    int extra = sub_dim - 1;
    if (extra < 0) return out;
    VecCounter ctr(F, extra * A.dim);
    do {
        std::vector<Vec> rows = {A.unit};
        Vec flat = ctr.value();
        for (int e = 0; e < extra; ++e)
            rows.push_back(Vec(flat.begin() + e * A.dim, flat.begin() + (e + 1) * A.dim));
        Mat span = row_space(F, Mat::from_rows(rows));
        if (span.rows != sub_dim) continue;
        std::string key;
        for (const Fel& x : span.a) key += F.to_string(x) + ",";
        if (seen.insert(key).second) out.push_back(span);
    } while (ctr.next());
    return out;
}

bool contains_copy(const Algebra& E, const Algebra& A) {
    if (A.dim > E.dim) return false;
    for (const Mat& span : unital_subspaces(E, A.dim)) {
        if (!is_subalgebra(E, span, true)) continue;
        Algebra S = subalgebra_restrict(E, span);
        if (find_isomorphism(S, A)) return true;
    }
    return false;
}

}  // namespace

long long EnumerationTask::candidate_count() const {
    long long entries = (long long)(dim - 1) * (dim - 1) * dim;
    return pow_capped(F->size(), entries, budget);
}

std::vector<Algebra> enumerate_algebras(const EnumerationTask& task) {
    const FieldPtr& F = task.F;
    if (!F->finite()) fail("InfiniteField", "enumeration needs a finite field");
    int n = task.dim;
    long long q = F->size();
    long long entries = (long long)(n - 1) * (n - 1) * n;
    long long total = pow_capped(q, entries, task.budget);
    if (total > task.budget)
        fail("BudgetExceeded", "candidate bound " + std::to_string(q) + "^" +
                                   std::to_string(entries) + " exceeds the budget");

    auto scan = [&](long long lo, long long hi, std::vector<Algebra>& sink) {
        Algebra A(F, n);
        A.unit = vec_zero(n);
        A.unit[0] = F->one();
        for (int i = 0; i < n; ++i) {
            Vec ei = vec_zero(n);
            ei[i] = F->one();
            A.set_product(0, i, ei);
            A.set_product(i, 0, ei);
        }
        for (long long idx = lo; idx < hi; ++idx) {
            long long v = idx;
            for (int i = 1; i < n; ++i)
                for (int j = 1; j < n; ++j)
                    for (int l = 0; l < n; ++l) {
                        A.c(i, j, l) = F->element(v % q);
                        v /= q;
                    }
            if (!associative_nonunit(A)) continue;
            if (task.require_commutative && !A.is_commutative()) continue;
            if (task.require_supersolvable && !supersolvable_tower(A)) continue;
            if (task.contains && !contains_copy(A, *task.contains)) continue;
            sink.push_back(A);
        }
    };

    int T = std::max(1, task.threads);
    if (T == 1 || total < 1024) {
        std::vector<Algebra> out;
        scan(0, total, out);
        return out;
    }
    std::vector<std::vector<Algebra>> parts(T);
    std::vector<std::thread> workers;
    long long chunk = (total + T - 1) / T;
    for (int t = 0; t < T; ++t) {
        long long lo = t * chunk, hi = std::min(total, lo + chunk);
        workers.emplace_back([&, lo, hi, t] { scan(lo, std::min(hi, total), parts[t]); });
    }
    for (auto& w : workers) w.join();
    std::vector<Algebra> out;
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

IsoClasses iso_classes(const std::vector<Algebra>& algebras) {
    int n = (int)algebras.size();
    IsoClasses out;
    out.class_of.assign(n, -1);
    std::vector<AlgebraInvariants> inv;
    inv.reserve(n);
    for (const Algebra& A : algebras) inv.push_back(invariants(A));
    for (int i = 0; i < n; ++i) {
        for (int c = 0; c < (int)out.representative.size(); ++c) {
            int rep = out.representative[c];
            if (inv[rep] == inv[i] && find_isomorphism(algebras[rep], algebras[i])) {
                out.class_of[i] = c;
                ++out.class_size[c];
                break;
            }
        }
        if (out.class_of[i] < 0) {
            out.class_of[i] = (int)out.representative.size();
            out.representative.push_back(i);
            out.class_size.push_back(1);
        }
    }
    return out;
}

ExtensionClasses brute_extensions_codim1(const Algebra& A_in, long long budget) {
    const FieldPtr& F = A_in.F;
    if (!F->finite()) fail("InfiniteField", "extension enumeration needs a finite field");
    if (A_in.dim > 3) fail("BudgetExceeded", "extension enumeration is supported for dim A <= 3");
    // work with the unit at index 0
    Algebra A = A_in;
    Vec e0 = vec_zero(A.dim);
    if (A.dim > 0) e0[0] = F->one();
    if (A.unit != e0) A = with_unit_first(A_in).first;

    int n = A.dim, N = n + 1;
    long long q = F->size();
    long long entries = (long long)(2 * (n - 1) + 1) * N;
    long long total = pow_capped(q, entries, budget);
    if (total > budget)
        fail("BudgetExceeded", "candidate bound " + std::to_string(q) + "^" +
                                   std::to_string(entries) + " exceeds the budget");

    ExtensionClasses out;
    out.total_tables = total;

    // transformations x -> alpha + q x, identity on A
    std::vector<Mat> transforms;
    for (long long qi = 1; qi < q; ++qi) {
        VecCounter ac(*F, n);
        do {
            Mat C = Mat::identity(N);
            Vec alpha = ac.value();
            for (int i = 0; i < n; ++i) C.at(i, n) = alpha[i];
            C.at(n, n) = F->element(qi);
            transforms.push_back(C);
        } while (ac.next());
    }

    std::map<std::string, int> canon_to_class;
    Algebra E(F, N);
    E.unit = vec_zero(N);
    E.unit[0] = F->one();
    for (int i = 0; i < N; ++i) {
        Vec ei = vec_zero(N);
        ei[i] = F->one();
        E.set_product(0, i, ei);
        E.set_product(i, 0, ei);
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec p = A.basis_product(i, j);
            p.resize(N, F->zero());
            E.set_product(i, j, p);
        }
    for (long long idx = 0; idx < total; ++idx) {
        long long v = idx;
        auto next_vec = [&]() {
            Vec w(N);
            for (int k = 0; k < N; ++k) {
                w[k] = F->element(v % q);
                v /= q;
            }
            return w;
        };
        for (int i = 1; i < n; ++i) E.set_product(i, n, next_vec());
        for (int i = 1; i < n; ++i) E.set_product(n, i, next_vec());
        E.set_product(n, n, next_vec());
        if (!associative_nonunit(E)) continue;
        ++out.valid;
        // canonical form over the stabilizing transformations
        std::string canon;
        for (const Mat& C : transforms) {
            Algebra T = change_basis(E, C);
            std::string key = T.key();
            if (canon.empty() || key < canon) canon = std::move(key);
        }
        auto it = canon_to_class.find(canon);
        if (it == canon_to_class.end()) {
            canon_to_class[canon] = (int)out.representatives.size();
            out.representatives.push_back(E);
            out.class_size.push_back(1);
        } else {
            ++out.class_size[it->second];
        }
    }
    return out;
}

}  // namespace extalg
