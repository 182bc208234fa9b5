#include "extalg/flag.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace extalg {

std::vector<long long> FlagDatum::key(const Field& F) const {
    std::vector<long long> k;
    auto push = [&](const Fel& x) { k.push_back(F.finite() ? F.index_of(x) : x.a * 1000003 + x.b); };
    for (const Fel& x : Lambda) push(x);
    for (const Fel& x : lambda) push(x);
    for (const Fel& x : D.a) push(x);
    for (const Fel& x : d.a) push(x);
    for (const Fel& x : a0) push(x);
    push(u);
    return k;
}

namespace {

bool is_character(const Algebra& A, const Vec& row) {
    const Field& F = *A.F;
    if (dot(F, row, A.unit) != F.one()) return false;
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < A.dim; ++j)
            if (dot(F, row, A.basis_product(i, j)) != F.mul(row[i], row[j])) return false;
    return true;
}

std::string idx_witness(int a, int b) {
    return "a" + std::to_string(a) + ",b" + std::to_string(b);
}

}  // namespace

ConditionReport flag_check(const Algebra& A, const FlagDatum& fd) {
    const Field& F = *A.F;
    int n = A.dim;
    if ((int)fd.Lambda.size() != n || (int)fd.lambda.size() != n || fd.D.rows != n ||
        fd.D.cols != n || fd.d.rows != n || fd.d.cols != n || (int)fd.a0.size() != n)
        fail("ShapeMismatch", "flag datum shapes");
    if (!is_character(A, fd.Lambda) || !is_character(A, fd.lambda))
        fail("NotACharacter", "Lambda and lambda must be algebra maps to k");

    ConditionReport rep;
    auto entry = [&](const std::string& name) -> ConditionReport::Entry& {
        rep.entries.push_back({name, true, ""});
        return rep.entries.back();
    };
    std::vector<Vec> basis(n, vec_zero(n));
    for (int i = 0; i < n; ++i) basis[i][i] = F.one();
    auto Dm = [&](const Vec& v) { return mat_apply(F, fd.D, v); };
    auto dm = [&](const Vec& v) { return mat_apply(F, fd.d, v); };
    auto L = [&](const Vec& v) { return dot(F, fd.Lambda, v); };
    auto l = [&](const Vec& v) { return dot(F, fd.lambda, v); };

    auto& f1 = entry("flag1");
    if (L(fd.a0) != l(fd.a0) || Dm(fd.a0) != dm(fd.a0)) {
        f1.ok = false;
        f1.witness = "a0";
    }
    for (int a = 0; a < n && f1.ok; ++a)
        if (!F.is_zero(l(dm(basis[a]))) || !F.is_zero(L(Dm(basis[a])))) {
            f1.ok = false;
            f1.witness = "a" + std::to_string(a);
        }

    auto& f2 = entry("flag2");
    for (int a = 0; a < n && f2.ok; ++a)
        for (int b = 0; b < n; ++b) {
            Vec ab = A.basis_product(a, b);
            Vec lhs = dm(ab);
            Vec rhs = vec_add(F, A.mul(basis[a], dm(basis[b])),
                              vec_scale(F, fd.lambda[b], dm(basis[a])));
            Vec lhs2 = Dm(ab);
            Vec rhs2 = vec_add(F, vec_scale(F, fd.Lambda[a], Dm(basis[b])),
                               A.mul(Dm(basis[a]), basis[b]));
            if (lhs != rhs || lhs2 != rhs2) {
                f2.ok = false;
                f2.witness = idx_witness(a, b);
                break;
            }
        }

    auto& f3 = entry("flag3");
    for (int a = 0; a < n && f3.ok; ++a) {
        Vec lhs = dm(dm(basis[a]));
        Vec rhs = vec_sub(F, vec_add(F, vec_scale(F, fd.u, dm(basis[a])), A.mul(basis[a], fd.a0)),
                          vec_scale(F, fd.lambda[a], fd.a0));
        Vec lhs2 = Dm(Dm(basis[a]));
        Vec rhs2 = vec_sub(F, vec_add(F, vec_scale(F, fd.u, Dm(basis[a])), A.mul(fd.a0, basis[a])),
                           vec_scale(F, fd.Lambda[a], fd.a0));
        if (lhs != rhs || lhs2 != rhs2) {
            f3.ok = false;
            f3.witness = "a" + std::to_string(a);
        }
    }

    auto& f4 = entry("flag4");
    for (int a = 0; a < n && f4.ok; ++a) {
        Vec lhs = vec_sub(F, Dm(dm(basis[a])), dm(Dm(basis[a])));
        Vec rhs = vec_scale(F, F.sub(fd.Lambda[a], fd.lambda[a]), fd.a0);
        if (lhs != rhs) {
            f4.ok = false;
            f4.witness = "a" + std::to_string(a);
        }
    }

    auto& f5 = entry("flag5");
    for (int a = 0; a < n && f5.ok; ++a) {
        Fel lhs = F.sub(L(dm(basis[a])), l(Dm(basis[a])));
        Fel rhs = F.mul(F.sub(fd.Lambda[a], fd.lambda[a]), fd.u);
        if (lhs != rhs) {
            f5.ok = false;
            f5.witness = "a" + std::to_string(a);
        }
    }

    auto& f6 = entry("flag6");
    for (int a = 0; a < n && f6.ok; ++a)
        for (int b = 0; b < n; ++b) {
            Vec lhs = vec_add(F, A.mul(basis[a], Dm(basis[b])),
                              vec_scale(F, fd.Lambda[b], dm(basis[a])));
            Vec rhs = vec_add(F, A.mul(dm(basis[a]), basis[b]),
                              vec_scale(F, fd.lambda[a], Dm(basis[b])));
            if (lhs != rhs) {
                f6.ok = false;
                f6.witness = idx_witness(a, b);
                break;
            }
        }

    return rep;
}

ExtendingDatum flag_to_datum(const Algebra& A, const FlagDatum& fd) {
    const Field& F = *A.F;
    int n = A.dim;
    ExtendingDatum D(A, 1);
    for (int a = 0; a < n; ++a) {
        Vec ea = vec_zero(n);
        ea[a] = F.one();
        D.lact.set_value(0, a, {fd.Lambda[a]});
        D.ract.set_value(0, a, mat_apply(F, fd.D, ea));
        D.lhar.set_value(a, 0, mat_apply(F, fd.d, ea));
        D.rhar.set_value(a, 0, {fd.lambda[a]});
    }
    D.cocycle.set_value(0, 0, fd.a0);
    D.vmult.set_value(0, 0, {fd.u});
    return D;
}

std::vector<FlagDatum> enumerate_flag_datums(const Algebra& A) {
    const Field& F = *A.F;
    if (!F.finite()) fail("UnsupportedOverInfiniteField", "flag enumeration needs a finite field");
    if (A.dim > 4) fail("DimensionBoundExceeded", "flag enumeration is supported for dim A <= 4");
    int n = A.dim;
    std::vector<Character> chars = characters(A);
    std::vector<FlagDatum> out;
    std::vector<Vec> basis(n, vec_zero(n));
    for (int i = 0; i < n; ++i) basis[i][i] = F.one();

    for (const Character& Lam : chars)
        for (const Character& lam : chars) {
            // linear phase: twisted-derivation conditions for (D, d)
            // unknowns: entries of D then d, row-major (2 n^2)
            int U = 2 * n * n;
            std::vector<Vec> eqs;
            // rows of the homogeneous system over the U unknowns
            auto add_eq = [&](const Vec& row) { eqs.push_back(row); };
            auto Didx = [&](int i, int j) { return i * n + j; };
            auto didx = [&](int i, int j) { return n * n + i * n + j; };
            // d(ab) = a d(b) + d(a) lambda(b); D(ab) = Lambda(a) D(b) + D(a) b
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    Vec ab = A.basis_product(a, b);
                    // coefficient extraction per output coordinate i
                    for (int i = 0; i < n; ++i) {
                        Vec row_d = vec_zero(U), row_D = vec_zero(U);
                        // d(ab): sum_j d[i][j] ab[j]
                        for (int j = 0; j < n; ++j) {
                            row_d[didx(i, j)] = F.add(row_d[didx(i, j)], ab[j]);
                            row_D[Didx(i, j)] = F.add(row_D[Didx(i, j)], ab[j]);
                        }
                        // -(a d(b))_i = -sum_l (e_a e_l)_i d[l][b]... expand:
                        // a d(b) = A.mul(e_a, d(e_b)); d(e_b) = columns d[.][b]
                        for (int l = 0; l < n; ++l) {
                            Fel coeff = A.basis_product(a, l)[i];
                            row_d[didx(l, b)] = F.sub(row_d[didx(l, b)], coeff);
                        }
                        // -(d(a) lambda(b))_i = -lambda(b) d[i][a]
                        row_d[didx(i, a)] = F.sub(row_d[didx(i, a)], lam.row[b]);
                        // -(Lambda(a) D(b))_i = -Lambda(a) D[i][b]
                        row_D[Didx(i, b)] = F.sub(row_D[Didx(i, b)], Lam.row[a]);
                        // -(D(a) b)_i = -sum_l (e_l e_b)_i D[l][a]
                        for (int l = 0; l < n; ++l) {
                            Fel coeff = A.basis_product(l, b)[i];
                            row_D[Didx(l, a)] = F.sub(row_D[Didx(l, a)], coeff);
                        }
                        add_eq(row_d);
                        add_eq(row_D);
                    }
                }
            // lambda(d(a)) = 0 and Lambda(D(a)) = 0
            for (int a = 0; a < n; ++a) {
                Vec row_d = vec_zero(U), row_D = vec_zero(U);
                for (int i = 0; i < n; ++i) {
                    row_d[didx(i, a)] = lam.row[i];
                    row_D[Didx(i, a)] = Lam.row[i];
                }
                add_eq(row_d);
                add_eq(row_D);
            }
            Mat sys = Mat::from_rows(eqs);
            Mat K = kernel_basis(F, sys);

            VecCounter kc(F, K.rows);
            do {
                Vec sol = vec_zero(U);
                Vec coef = kc.value();
                for (int i = 0; i < K.rows; ++i) sol = vec_axpy(F, coef[i], K.row(i), sol);
                FlagDatum fd;
                fd.Lambda = Lam.row;
                fd.lambda = lam.row;
                fd.D = Mat(n, n);
                fd.d = Mat(n, n);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) {
                        fd.D.at(i, j) = sol[i * n + j];
                        fd.d.at(i, j) = sol[n * n + i * n + j];
                    }
                // quadratic phase: exhaust (a0, u)
                VecCounter ac(F, n);
                do {
                    fd.a0 = ac.value();
                    for (long long ui = 0; ui < F.size(); ++ui) {
                        fd.u = F.element(ui);
                        ConditionReport rep = flag_check(A, fd);
                        if (rep.all_ok()) out.push_back(fd);
                    }
                } while (ac.next());
            } while (kc.next());
        }
    return out;
}

Algebra flag_extension(const Algebra& A, const FlagDatum& fd) {
    ConditionReport rep = flag_check(A, fd);
    if (!rep.all_ok()) fail("FlagCheckFailed", rep.first_failure());
    return unified_product_raw(flag_to_datum(A, fd));
}

std::optional<std::pair<Fel, Vec>> flag_equiv(const Algebra& A, const FlagDatum& fd,
                                              const FlagDatum& fd2, EquivMode mode) {
    const Field& F = *A.F;
    if (!F.finite()) fail("UnsupportedOverInfiniteField", "flag relation search needs a finite field");
    if (fd.Lambda != fd2.Lambda || fd.lambda != fd2.lambda) return std::nullopt;
    int n = A.dim;
    std::vector<Vec> basis(n, vec_zero(n));
    for (int i = 0; i < n; ++i) basis[i][i] = F.one();

    auto try_pair = [&](const Fel& q, const Vec& alpha) -> bool {
        // D(a) = q D'(a) + alpha a - Lambda(a) alpha
        for (int a = 0; a < n; ++a) {
            Vec lhs = mat_apply(F, fd.D, basis[a]);
            Vec rhs = vec_sub(F,
                              vec_add(F, vec_scale(F, q, mat_apply(F, fd2.D, basis[a])),
                                      A.mul(alpha, basis[a])),
                              vec_scale(F, fd.Lambda[a], alpha));
            if (lhs != rhs) return false;
            Vec lhs2 = mat_apply(F, fd.d, basis[a]);
            Vec rhs2 = vec_sub(F,
                               vec_add(F, vec_scale(F, q, mat_apply(F, fd2.d, basis[a])),
                                       A.mul(basis[a], alpha)),
                               vec_scale(F, fd.lambda[a], alpha));
            if (lhs2 != rhs2) return false;
        }
        // a0 = q^2 a0' + alpha^2 - u alpha + q d'(alpha) + q D'(alpha)
        Vec rhs = vec_scale(F, F.mul(q, q), fd2.a0);
        rhs = vec_add(F, rhs, A.mul(alpha, alpha));
        rhs = vec_sub(F, rhs, vec_scale(F, fd.u, alpha));
        rhs = vec_add(F, rhs, vec_scale(F, q, mat_apply(F, fd2.d, alpha)));
        rhs = vec_add(F, rhs, vec_scale(F, q, mat_apply(F, fd2.D, alpha)));
        if (fd.a0 != rhs) return false;
        // u = q u' + lambda'(alpha) + Lambda'(alpha)
        Fel urhs = F.add(F.mul(q, fd2.u), F.add(dot(F, fd2.lambda, alpha), dot(F, fd2.Lambda, alpha)));
        return fd.u == urhs;
    };

    for (long long qi = 1; qi < F.size(); ++qi) {
        Fel q = F.element(qi);
        if (mode == EquivMode::Cohomologous && !F.is_one(q)) continue;
        VecCounter ac(F, n);
        do {
            Vec alpha = ac.value();
            if (try_pair(q, alpha)) return std::make_pair(q, alpha);
        } while (ac.next());
    }
    return std::nullopt;
}

ClassifiedFamily classify_codim1(const Algebra& A, EquivMode mode) {
    const Field& F = *A.F;
    ClassifiedFamily fam;
    fam.mode = mode;
    fam.datums = enumerate_flag_datums(A);
    int n = (int)fam.datums.size();
    // union-find over pairwise witnesses
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (find(i) == find(j)) continue;
            if (fam.datums[i].Lambda != fam.datums[j].Lambda ||
                fam.datums[i].lambda != fam.datums[j].lambda)
                continue;
            if (flag_equiv(A, fam.datums[i], fam.datums[j], mode)) parent[find(i)] = find(j);
        }
    // representatives: least key per class
    std::map<int, int> rep_of_root;
    for (int i = 0; i < n; ++i) {
        int r = find(i);
        auto it = rep_of_root.find(r);
        if (it == rep_of_root.end() ||
            fam.datums[i].key(F) < fam.datums[it->second].key(F))
            rep_of_root[r] = i;
    }
    std::vector<std::pair<std::vector<long long>, int>> ordered;
    for (auto& [root, rep] : rep_of_root) ordered.push_back({fam.datums[rep].key(F), rep});
    std::sort(ordered.begin(), ordered.end());
    std::map<int, int> class_id;  // root -> id
    for (auto& [key, rep] : ordered) {
        int id = (int)fam.representative.size();
        fam.representative.push_back(rep);
        class_id[find(rep)] = id;
    }
    fam.class_of.resize(n);
    fam.witness.resize(n);
    for (int i = 0; i < n; ++i) {
        fam.class_of[i] = class_id[find(i)];
        int rep = fam.representative[fam.class_of[i]];
        auto w = flag_equiv(A, fam.datums[i], fam.datums[rep], mode);
        if (!w) fail("ShapeMismatch", "missing witness inside an equivalence class");
        fam.witness[i] = *w;
    }
    return fam;
}

// ---- supersolvable catalog ----

namespace {

/// Deduplicate by isomorphism, keeping first occurrences in order.
std::vector<Algebra> dedupe_up_to_iso(const std::vector<Algebra>& list) {
    std::vector<Algebra> reps;
    std::vector<AlgebraInvariants> inv;
    for (const Algebra& A : list) {
        AlgebraInvariants ia = invariants(A);
        bool known = false;
        for (size_t i = 0; i < reps.size() && !known; ++i)
            if (inv[i] == ia && find_isomorphism(reps[i], A)) known = true;
        if (!known) {
            reps.push_back(A);
            inv.push_back(ia);
        }
    }
    return reps;
}

}  // namespace

std::vector<Algebra> supersolvable_catalog(FieldPtr F, int m) {
    if (!F->finite()) fail("UnsupportedOverInfiniteField", "catalog iteration needs a finite field");
    if (m < 1 || m > 4) fail("DimensionBoundExceeded", "supersolvable catalog supports 1 <= m <= 4");
    std::vector<Algebra> current = {algebra_k(F)};
    for (int dim = 2; dim <= m; ++dim) {
        std::vector<Algebra> next;
        for (const Algebra& A : current) {
            ClassifiedFamily fam = classify_codim1(A, EquivMode::Equivalent);
            for (int rep : fam.representative)
                next.push_back(flag_extension(A, fam.datums[rep]));
        }
        current = dedupe_up_to_iso(next);
    }
    return current;
}

// ---- named catalogs ----

namespace {

std::string fel_str(const Field& F, const Fel& x) { return F.to_string(x); }

std::string lincomb(const Field& F, const Fel& c1, const Fel& cx, const std::string& x) {
    // pretty "c1 + cx x" with zeros dropped
    std::string s;
    if (!F.is_zero(c1)) s += fel_str(F, c1);
    if (!F.is_zero(cx)) {
        if (!s.empty()) s += " + ";
        if (!F.is_one(cx)) s += fel_str(F, cx) + " ";
        s += x;
    }
    if (s.empty()) s = "0";
    return s;
}

CatalogEntry dim2_entry(FieldPtr F, const Fel& a, const Fel& b, const std::string& name) {
    CatalogEntry e;
    e.name = name;
    e.presentation = "x^2 = " + lincomb(*F, a, b, "x");
    e.algebra = algebra_dim2(F, a, b);
    return e;
}

}  // namespace

std::vector<CatalogEntry> catalog_dim2(FieldPtr F, int degree_bound) {
    const Field& f = *F;
    Fel zero = f.zero(), one = f.one();
    std::vector<CatalogEntry> out;
    out.push_back(dim2_entry(F, zero, zero, "k_(0,0)"));
    if (f.characteristic() != 2) {
        out.push_back(dim2_entry(F, zero, one, "k_(0,1)"));
        if (f.kind() == FieldKind::Rationals) {
            CatalogEntry e = dim2_entry(F, f.from_int(2), zero, "k_(d,0)");
            e.family = true;
            e.note = "one entry per square class d in S; S is infinite over Q (instantiated at d = 2)";
            out.push_back(e);
        } else {
            auto cs = f.class_system(degree_bound);
            for (const Fel& d : cs.S())
                out.push_back(dim2_entry(F, d, zero, "k_(" + fel_str(f, d) + ",0)"));
        }
    } else {
        auto cs = f.class_system(degree_bound);
        for (const Fel& c : cs.T())
            out.push_back(dim2_entry(F, c, one, "k_(" + fel_str(f, c) + ",1)"));
        if (f.kind() == FieldKind::RationalFunction2) {
            for (auto& e : out)
                if (e.name != "k_(0,0)") {
                    e.family = e.name != "k_(0,1)";
                    e.note = "T computed inside the degree bound";
                }
            for (const Fel& d : cs.R()) {
                CatalogEntry e = dim2_entry(F, d, zero, "k_(" + fel_str(f, d) + ",0)");
                e.family = true;
                e.note = "R computed inside the degree bound";
                out.push_back(e);
            }
        }
    }
    return out;
}

namespace {

struct Dim3Spec {
    std::string name;
    Vec xx, yy, xy, yx;
};

CatalogEntry dim3_entry(FieldPtr F, const Dim3Spec& s) {
    const Field& f = *F;
    CatalogEntry e;
    e.name = s.name;
    auto rel = [&](const char* lhs, const Vec& v) {
        std::string r = std::string(lhs) + " = ";
        std::string body;
        const char* names[3] = {"", "x", "y"};
        for (int i = 0; i < 3; ++i) {
            if (f.is_zero(v[i])) continue;
            if (!body.empty()) body += " + ";
            if (i == 0)
                body += fel_str(f, v[i]);
            else if (f.is_one(v[i]))
                body += names[i];
            else
                body += fel_str(f, v[i]) + " " + names[i];
        }
        if (body.empty()) body = "0";
        return r + body;
    };
    e.presentation = rel("x^2", s.xx) + ", " + rel("y^2", s.yy) + ", " + rel("xy", s.xy) + ", " +
                     rel("yx", s.yx);
    e.algebra = algebra_dim3(F, s.xx, s.yy, s.xy, s.yx);
    return e;
}

}  // namespace

std::vector<CatalogEntry> catalog_dim3(FieldPtr F, int degree_bound) {
    const Field& f = *F;
    Fel z = f.zero(), one = f.one();
    Vec v0 = {z, z, z};
    Vec vx = {z, one, z};
    Vec vy = {z, z, one};
    auto vc = [&](const Fel& c1, const Fel& cx) { return Vec{c1, cx, z}; };
    std::vector<CatalogEntry> out;

    // base-k_(0,0) families: independent of the characteristic
    out.push_back(dim3_entry(F, {"A0_1", v0, vy, vx, v0}));
    out.push_back(dim3_entry(F, {"A0_2", v0, vy, v0, v0}));
    out.push_back(dim3_entry(F, {"A0_3", v0, v0, v0, v0}));
    out.push_back(dim3_entry(F, {"A0_4", v0, vx, v0, v0}));
    out.push_back(dim3_entry(F, {"A0_5", v0, vec_add(f, vx, vy), v0, v0}));
    bool perfect = true;  // k = k^2
    std::vector<Fel> S, T, R;
    if (f.kind() == FieldKind::Rationals) {
        perfect = false;
        S = {f.from_int(2)};
    } else {
        auto cs = f.class_system(degree_bound);
        S = cs.S();
        perfect = S.empty();
        if (f.characteristic() == 2) {
            T = cs.T();
            R = cs.R();
        }
    }
    bool family_note = f.kind() == FieldKind::Rationals || f.kind() == FieldKind::RationalFunction2;
    auto push_family = [&](CatalogEntry e, const std::string& note) {
        if (family_note) {
            e.family = true;
            e.note = note;
        }
        out.push_back(std::move(e));
    };
    if (!perfect)
        for (const Fel& dd : S)
            push_family(dim3_entry(F, {"A0(" + fel_str(f, dd) + ")", v0, vc(z, dd), v0, v0}),
                        "one entry per d in S");

    if (f.characteristic() != 2) {
        out.push_back(dim3_entry(F, {"A1_1", vx, v0, v0, v0}));
        out.push_back(dim3_entry(F, {"A1_2", vx, vc(f.neg(one), one), v0, v0}));
        out.push_back(dim3_entry(F, {"A1_3", vx, v0, vy, vy}));
        out.push_back(dim3_entry(F, {"A1_4", vx, vx, vy, vy}));
        out.push_back(dim3_entry(F, {"A1_5", vx, v0, vy, v0}));
        if (!perfect)
            for (const Fel& dd : S) {
                push_family(dim3_entry(F, {"B1(" + fel_str(f, dd) + ")", vx,
                                           vc(f.neg(dd), dd), v0, v0}),
                            "one entry per d in S");
                push_family(dim3_entry(F, {"B2(" + fel_str(f, dd) + ")", vx, vc(z, dd), vy, vy}),
                            "one entry per d in S");
            }
    } else {
        out.push_back(dim3_entry(F, {"C1_1", vx, v0, v0, v0}));
        for (const Fel& c : T)
            push_family(dim3_entry(F, {"C1_2(" + fel_str(f, c) + ")", vx,
                                       vec_add(f, vc(c, c), vy), v0, v0}),
                        "one entry per c in T (degree-bounded here)");
        out.push_back(dim3_entry(F, {"C1_3", vx, v0, vy, vy}));
        for (const Fel& c : T)
            push_family(dim3_entry(F, {"C1_4(" + fel_str(f, c) + ")", vx,
                                       vec_add(f, vc(z, c), vy), vy, vy}),
                        "one entry per c in T (degree-bounded here)");
        out.push_back(dim3_entry(F, {"C1_5", vx, v0, vy, v0}));
        for (const Fel& dd : R) {
            push_family(dim3_entry(F, {"D1(" + fel_str(f, dd) + ")", vx, vc(dd, dd), v0, v0}),
                        "one entry per delta in R (degree-bounded here)");
            push_family(dim3_entry(F, {"D2(" + fel_str(f, dd) + ")", vx, vc(z, dd), vy, vy}),
                        "one entry per delta in R (degree-bounded here)");
        }
    }
    for (const auto& e : out)
        if (!validate(e.algebra).ok())
            fail("ShapeMismatch", "catalog entry fails validation: " + e.name);
    return out;
}

// ---- closed-form flag families ----

std::vector<FlagFamily> flag_family_generators(const Algebra& A) {
    const Field& F = *A.F;
    if (!F.finite()) fail("UnsupportedOverInfiniteField", "family enumeration needs a finite field");
    Fel zero = F.zero(), one = F.one();
    bool is_k00 = A.table == algebra_dim2(A.F, zero, zero).table && A.unit == Vec{one, zero};
    bool is_k01 = A.table == algebra_dim2(A.F, zero, one).table && A.unit == Vec{one, zero};
    if (!is_k00 && !is_k01)
        fail("ShapeMismatch", "closed-form families exist for the bases k_(0,0) and k_(0,1)");

    auto mk = [&](const Vec& Lam, const Vec& lam, const Fel& Dx1, const Fel& dx1, bool flip_D,
                  bool flip_d, const Vec& a0, const Fel& u) {
        // D(x) = Dx1 * x or Dx1 * (1 - x); always D(1) = 0
        FlagDatum fd;
        fd.Lambda = Lam;
        fd.lambda = lam;
        fd.D = Mat(2, 2);
        fd.d = Mat(2, 2);
        if (!flip_D) {
            fd.D.at(1, 1) = Dx1;
        } else {
            fd.D.at(0, 1) = Dx1;
            fd.D.at(1, 1) = F.neg(Dx1);
        }
        if (!flip_d) {
            fd.d.at(1, 1) = dx1;
        } else {
            fd.d.at(0, 1) = dx1;
            fd.d.at(1, 1) = F.neg(dx1);
        }
        fd.a0 = a0;
        fd.u = u;
        return fd;
    };

    std::vector<FlagFamily> fams;
    Vec chi0 = {one, zero};  // x -> 0
    Vec chi1 = {one, one};   // x -> 1
    auto els = F.elements();

    if (is_k00) {
        FlagFamily f1{"F1", {}}, f2{"F2", {}}, f3{"F3", {}};
        for (const Fel& D1 : els)
            for (const Fel& a01 : els) {
                if (F.is_zero(a01)) continue;
                for (const Fel& u : els) {
                    Fel c1 = F.sub(F.mul(D1, D1), F.mul(u, D1));
                    f1.members.push_back(mk(chi0, chi0, D1, D1, false, false, {c1, a01}, u));
                }
            }
        for (const Fel& D1 : els)
            for (const Fel& u : els) {
                Fel c1 = F.sub(F.mul(D1, D1), F.mul(u, D1));
                f2.members.push_back(mk(chi0, chi0, D1, D1, false, false, {c1, zero}, u));
            }
        for (const Fel& D1 : els)
            for (const Fel& d1 : els) {
                if (D1 == d1) continue;
                f3.members.push_back(mk(chi0, chi0, D1, d1, false, false,
                                        {F.neg(F.mul(D1, d1)), zero}, F.add(D1, d1)));
            }
        fams = {f1, f2, f3};
    } else {
        FlagFamily f1{"F1", {}}, f2{"F2", {}}, f3{"F3", {}}, f4{"F4", {}};
        for (const Fel& D1 : els)
            for (const Fel& a01 : els)
                for (const Fel& u : els) {
                    Fel c1 = F.sub(F.sub(F.mul(D1, D1), F.mul(u, D1)), a01);
                    f1.members.push_back(mk(chi0, chi0, D1, D1, false, false, {c1, a01}, u));
                    Fel c2 = F.add(F.mul(D1, D1), F.mul(u, D1));
                    f2.members.push_back(mk(chi1, chi1, D1, D1, true, true, {c2, a01}, u));
                }
        for (const Fel& D1 : els)
            for (const Fel& d1 : els) {
                Fel a0c = F.mul(D1, d1);
                f3.members.push_back(mk(chi0, chi1, D1, d1, false, true, {a0c, zero}, F.sub(D1, d1)));
                f4.members.push_back(mk(chi1, chi0, D1, d1, true, false, {a0c, zero}, F.sub(d1, D1)));
            }
        fams = {f1, f2, f3, f4};
    }
    return fams;
}

}  // namespace extalg
