#include "extalg/unified.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace extalg {

Vec BilinearMap::apply(const Field& F, const Vec& u, const Vec& w) const {
    Vec out = vec_zero(c);
    for (int i = 0; i < l; ++i) {
        if (u[i].a == 0) continue;
        for (int j = 0; j < r; ++j) {
            if (w[j].a == 0) continue;
            Fel s = F.mul(u[i], w[j]);
            for (int k = 0; k < c; ++k) {
                const Fel& v = at(i, j, k);
                if (v.a == 0) continue;
                out[k] = F.add(out[k], F.mul(s, v));
            }
        }
    }
    return out;
}

ExtendingDatum::ExtendingDatum(Algebra a, int m)
    : A(std::move(a)),
      vdim(m),
      lact(m, A.dim, m),
      ract(m, A.dim, A.dim),
      lhar(A.dim, m, A.dim),
      rhar(A.dim, m, m),
      cocycle(m, m, A.dim),
      vmult(m, m, m) {}

bool AxiomReport::all_ok() const {
    if (!normalization.ok) return false;
    for (const auto& e : axiom)
        if (!e.ok) return false;
    return true;
}

std::string AxiomReport::first_failure() const {
    if (!normalization.ok) return "normalization: " + normalization.witness;
    for (size_t i = 0; i < axiom.size(); ++i)
        if (!axiom[i].ok) return "A" + std::to_string(i + 1) + ": " + axiom[i].witness;
    return "";
}

namespace {

std::string tuple_witness(std::initializer_list<std::pair<const char*, int>> parts) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [name, idx] : parts) {
        if (!first) os << ",";
        os << name << idx;
        first = false;
    }
    return os.str();
}

/// Expression helpers bound to one datum.
struct Ops {
    const ExtendingDatum& D;
    const Field& F;
    explicit Ops(const ExtendingDatum& d) : D(d), F(*d.A.F) {}

    Vec amul(const Vec& u, const Vec& v) const { return D.A.mul(u, v); }
    Vec la(const Vec& x, const Vec& a) const { return D.lact.apply(F, x, a); }   // x <| a
    Vec ra(const Vec& x, const Vec& a) const { return D.ract.apply(F, x, a); }   // x |> a
    Vec lh(const Vec& a, const Vec& x) const { return D.lhar.apply(F, a, x); }   // a <- x
    Vec rh(const Vec& a, const Vec& x) const { return D.rhar.apply(F, a, x); }   // a -> x
    Vec f(const Vec& x, const Vec& y) const { return D.cocycle.apply(F, x, y); }
    Vec vm(const Vec& x, const Vec& y) const { return D.vmult.apply(F, x, y); }

    std::vector<Vec> abasis() const {
        std::vector<Vec> b(D.adim(), vec_zero(D.adim()));
        for (int i = 0; i < D.adim(); ++i) b[i][i] = F.one();
        return b;
    }
    std::vector<Vec> vbasis() const {
        std::vector<Vec> b(D.vdim, vec_zero(D.vdim));
        for (int i = 0; i < D.vdim; ++i) b[i][i] = F.one();
        return b;
    }
};

}  // namespace

AxiomReport check_axioms(const ExtendingDatum& D) {
    if (D.lact.l != D.vdim || D.lact.r != D.adim() || D.lact.c != D.vdim ||
        D.ract.l != D.vdim || D.ract.r != D.adim() || D.ract.c != D.adim() ||
        D.lhar.l != D.adim() || D.lhar.r != D.vdim || D.lhar.c != D.adim() ||
        D.rhar.l != D.adim() || D.rhar.r != D.vdim || D.rhar.c != D.vdim ||
        D.cocycle.l != D.vdim || D.cocycle.r != D.vdim || D.cocycle.c != D.adim() ||
        D.vmult.l != D.vdim || D.vmult.r != D.vdim || D.vmult.c != D.vdim)
        fail("ShapeMismatch", "datum tensor shapes do not match dim(A) and dim(V)");

    Ops o(D);
    const Field& F = o.F;
    AxiomReport rep;
    auto ab = o.abasis();
    auto vb = o.vbasis();
    const Vec& unit = D.A.unit;
    int n = D.adim(), m = D.vdim;

    auto set_fail = [](AxiomReport::Entry& e, const std::string& w) {
        if (e.ok) {
            e.ok = false;
            e.witness = w;
        }
    };

    // normalization: x |> 1 = 0, x <| 1 = x, 1 <- x = 0, 1 -> x = x
    for (int x = 0; x < m; ++x) {
        if (!vec_is_zero(o.ra(vb[x], unit)) || o.la(vb[x], unit) != vb[x] ||
            !vec_is_zero(o.lh(unit, vb[x])) || o.rh(unit, vb[x]) != vb[x])
            set_fail(rep.normalization, tuple_witness({{"x", x}}));
    }

    // A1 remainder: (V, ->, <|) is an A-bimodule
    for (int x = 0; x < m && rep.axiom[0].ok; ++x) {
        for (int a = 0; a < n && rep.axiom[0].ok; ++a)
            for (int b = 0; b < n; ++b) {
                Vec ab_prod = o.amul(ab[a], ab[b]);
                if (o.rh(ab_prod, vb[x]) != o.rh(ab[a], o.rh(ab[b], vb[x])) ||
                    o.la(o.la(vb[x], ab[a]), ab[b]) != o.la(vb[x], ab_prod) ||
                    o.rh(ab[a], o.la(vb[x], ab[b])) != o.la(o.rh(ab[a], vb[x]), ab[b])) {
                    set_fail(rep.axiom[0], tuple_witness({{"a", a}, {"b", b}, {"x", x}}));
                    break;
                }
            }
    }

    auto vsub = [&](const Vec& u, const Vec& v) { return vec_sub(F, u, v); };
    auto vadd = [&](const Vec& u, const Vec& v) { return vec_add(F, u, v); };

    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) {
            Vec fxy = o.f(vb[x], vb[y]);
            Vec xy = o.vm(vb[x], vb[y]);
            for (int z = 0; z < m; ++z) {
                // A2
                Vec lhs = vsub(o.vm(vb[x], o.vm(vb[y], vb[z])), o.vm(xy, vb[z]));
                Vec rhs = vsub(o.rh(fxy, vb[z]), o.la(vb[x], o.f(vb[y], vb[z])));
                if (lhs != rhs) set_fail(rep.axiom[1], tuple_witness({{"x", x}, {"y", y}, {"z", z}}));
                // A3
                lhs = vsub(o.f(vb[x], o.vm(vb[y], vb[z])), o.f(xy, vb[z]));
                rhs = vsub(o.lh(fxy, vb[z]), o.ra(vb[x], o.f(vb[y], vb[z])));
                if (lhs != rhs) set_fail(rep.axiom[2], tuple_witness({{"x", x}, {"y", y}, {"z", z}}));
            }
            for (int a = 0; a < n; ++a) {
                // A4: a -> (x.y) = (a -> x).y + (a <- x) -> y
                Vec lhs = o.rh(ab[a], xy);
                Vec rhs = vadd(o.vm(o.rh(ab[a], vb[x]), vb[y]), o.rh(o.lh(ab[a], vb[x]), vb[y]));
                if (lhs != rhs) set_fail(rep.axiom[3], tuple_witness({{"a", a}, {"x", x}, {"y", y}}));
                // A5: (a <- x) <- y = a <- (x.y) + a f(x,y) - f(a -> x, y)
                lhs = o.lh(o.lh(ab[a], vb[x]), vb[y]);
                rhs = vsub(vadd(o.lh(ab[a], xy), o.amul(ab[a], fxy)), o.f(o.rh(ab[a], vb[x]), vb[y]));
                if (lhs != rhs) set_fail(rep.axiom[4], tuple_witness({{"a", a}, {"x", x}, {"y", y}}));
                // A8: x |> (y |> a) = (x.y) |> a + f(x,y) a - f(x, y <| a)
                lhs = o.ra(vb[x], o.ra(vb[y], ab[a]));
                rhs = vsub(vadd(o.ra(xy, ab[a]), o.amul(fxy, ab[a])), o.f(vb[x], o.la(vb[y], ab[a])));
                if (lhs != rhs) set_fail(rep.axiom[7], tuple_witness({{"x", x}, {"y", y}, {"a", a}}));
                // A9: (x.y) <| a = x <| (y |> a) + x.(y <| a)
                lhs = o.la(xy, ab[a]);
                rhs = vadd(o.la(vb[x], o.ra(vb[y], ab[a])), o.vm(vb[x], o.la(vb[y], ab[a])));
                if (lhs != rhs) set_fail(rep.axiom[8], tuple_witness({{"x", x}, {"y", y}, {"a", a}}));
            }
        }

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Vec ab_prod = o.amul(ab[a], ab[b]);
            for (int x = 0; x < m; ++x) {
                // A6: (ab) <- x = a (b <- x) + a <- (b -> x)
                Vec lhs = o.lh(ab_prod, vb[x]);
                Vec rhs = vadd(o.amul(ab[a], o.lh(ab[b], vb[x])), o.lh(ab[a], o.rh(ab[b], vb[x])));
                if (lhs != rhs) set_fail(rep.axiom[5], tuple_witness({{"a", a}, {"b", b}, {"x", x}}));
                // A7: x |> (ab) = (x |> a) b + (x <| a) |> b
                lhs = o.ra(vb[x], ab_prod);
                rhs = vadd(o.amul(o.ra(vb[x], ab[a]), ab[b]), o.ra(o.la(vb[x], ab[a]), ab[b]));
                if (lhs != rhs) set_fail(rep.axiom[6], tuple_witness({{"x", x}, {"a", a}, {"b", b}}));
                // A10: a (x |> b) + a <- (x <| b) = (a <- x) b + (a -> x) |> b
                lhs = vadd(o.amul(ab[a], o.ra(vb[x], ab[b])), o.lh(ab[a], o.la(vb[x], ab[b])));
                rhs = vadd(o.amul(o.lh(ab[a], vb[x]), ab[b]), o.ra(o.rh(ab[a], vb[x]), ab[b]));
                if (lhs != rhs) set_fail(rep.axiom[9], tuple_witness({{"a", a}, {"x", x}, {"b", b}}));
            }
        }

    for (int x = 0; x < m; ++x)
        for (int a = 0; a < n; ++a)
            for (int y = 0; y < m; ++y) {
                // A11: x |> (a <- y) + f(x, a -> y) = (x |> a) <- y + f(x <| a, y)
                Vec lhs = vadd(o.ra(vb[x], o.lh(ab[a], vb[y])), o.f(vb[x], o.rh(ab[a], vb[y])));
                Vec rhs = vadd(o.lh(o.ra(vb[x], ab[a]), vb[y]), o.f(o.la(vb[x], ab[a]), vb[y]));
                if (lhs != rhs) set_fail(rep.axiom[10], tuple_witness({{"x", x}, {"a", a}, {"y", y}}));
                // A12: x <| (a <- y) + x.(a -> y) = (x |> a) -> y + (x <| a).y
                lhs = vadd(o.la(vb[x], o.lh(ab[a], vb[y])), o.vm(vb[x], o.rh(ab[a], vb[y])));
                rhs = vadd(o.rh(o.ra(vb[x], ab[a]), vb[y]), o.vm(o.la(vb[x], ab[a]), vb[y]));
                if (lhs != rhs) set_fail(rep.axiom[11], tuple_witness({{"x", x}, {"a", a}, {"y", y}}));
            }

    return rep;
}

Algebra unified_product_raw(const ExtendingDatum& D) {
    int n = D.adim(), m = D.vdim, N = n + m;
    Algebra P(D.A.F, N);
    auto put = [&](int i, int j, const Vec& apart, const Vec& vpart) {
        Vec w(N);
        for (int k = 0; k < n; ++k) w[k] = apart[k];
        for (int k = 0; k < m; ++k) w[n + k] = vpart[k];
        P.set_product(i, j, w);
    };
    Ops o(D);
    auto ab = o.abasis();
    auto vb = o.vbasis();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) put(i, j, D.A.basis_product(i, j), vec_zero(m));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) put(i, n + j, o.lh(ab[i], vb[j]), o.rh(ab[i], vb[j]));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) put(n + i, j, o.ra(vb[i], ab[j]), o.la(vb[i], ab[j]));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) put(n + i, n + j, o.f(vb[i], vb[j]), o.vm(vb[i], vb[j]));
    P.unit = vec_zero(N);
    for (int k = 0; k < n; ++k) P.unit[k] = D.A.unit[k];
    return P;
}

Algebra unified_product(const ExtendingDatum& D) {
    AxiomReport rep = check_axioms(D);
    if (!rep.all_ok()) fail("AxiomsFailed", rep.first_failure());
    return unified_product_raw(D);
}

bool is_associative_unital(const Algebra& A) {
    ValidationReport rep = validate(A);
    return rep.ok();
}

std::pair<ExtendingDatum, Mat> datum_from_retraction(const Algebra& E, const Mat& a_rows,
                                                     const Mat& p) {
    const Field& F = *E.F;
    Mat ech = row_space(F, a_rows);
    if (ech.rows != a_rows.rows) fail("NotASubalgebra", "subalgebra basis is linearly dependent");
    if (!is_subalgebra(E, ech, true)) fail("NotASubalgebra", "span is not a unital subalgebra");
    if (p.rows != a_rows.rows || p.cols != E.dim) fail("ShapeMismatch", "retraction shape");
    // p restricted to the span must be the identity (in a_rows coordinates)
    for (int i = 0; i < a_rows.rows; ++i) {
        Vec img = mat_apply(F, p, a_rows.row(i));
        for (int j = 0; j < a_rows.rows; ++j)
            if (img[j] != (i == j ? F.one() : F.zero()))
                fail("NotARetraction", "p does not restrict to the identity on the subalgebra");
    }
    Algebra A = subalgebra_restrict(E, a_rows);
    Mat W = kernel_basis(F, p);  // complement basis: V = Ker(p)
    int n = a_rows.rows, m = W.rows;
    if (n + m != E.dim) fail("NotARetraction", "kernel dimension mismatch");

    // decomposition helpers: E-vector -> (A part in a_rows coords, V part in W coords)
    Mat Bt(E.dim, E.dim);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < E.dim; ++i) Bt.at(i, j) = a_rows.at(j, i);
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < E.dim; ++i) Bt.at(i, n + j) = W.at(j, i);
    Mat Bi = *inverse(F, Bt);
    auto split = [&](const Vec& v) {
        Vec coords = mat_apply(F, Bi, v);
        Vec apart(coords.begin(), coords.begin() + n);
        Vec vpart(coords.begin() + n, coords.end());
        return std::pair<Vec, Vec>(apart, vpart);
    };

    ExtendingDatum D(A, m);
    for (int x = 0; x < m; ++x)
        for (int a = 0; a < n; ++a) {
            auto [ap, vp] = split(E.mul(W.row(x), a_rows.row(a)));
            D.ract.set_value(x, a, ap);  // x |> a = p(x * a)
            D.lact.set_value(x, a, vp);  // x <| a = x * a - p(x * a)
            auto [ap2, vp2] = split(E.mul(a_rows.row(a), W.row(x)));
            D.lhar.set_value(a, x, ap2);
            D.rhar.set_value(a, x, vp2);
        }
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) {
            auto [ap, vp] = split(E.mul(W.row(x), W.row(y)));
            D.cocycle.set_value(x, y, ap);
            D.vmult.set_value(x, y, vp);
        }
    return {D, Bt};
}

// ---- morphisms ----

namespace {

struct MorphOps {
    const ExtendingDatum& D;  // source
    const ExtendingDatum& E;  // target
    const Field& F;
    const Mat& R;
    const Mat& V;
    MorphOps(const ExtendingDatum& d, const ExtendingDatum& e, const MorphismPair& p)
        : D(d), E(e), F(*d.A.F), R(p.r), V(p.v) {}
    Vec r(const Vec& x) const { return mat_apply(F, R, x); }
    Vec v(const Vec& x) const { return mat_apply(F, V, x); }
};

}  // namespace

bool morphism_check(const ExtendingDatum& D, const ExtendingDatum& E, const MorphismPair& pair) {
    if (!D.A.F->same(*E.A.F) || D.adim() != E.adim() || D.vdim != E.vdim ||
        D.A.table != E.A.table || D.A.unit != E.A.unit)
        fail("ShapeMismatch", "morphism requires datums over the same algebra and space");
    if (pair.r.rows != D.adim() || pair.r.cols != D.vdim || pair.v.rows != D.vdim ||
        pair.v.cols != D.vdim)
        fail("ShapeMismatch", "morphism pair shape");
    const Field& F = *D.A.F;
    Ops od(D), oe(E);
    MorphOps mo(D, E, pair);
    auto ab = od.abasis();
    auto vb = od.vbasis();
    int n = D.adim(), m = D.vdim;
    auto vadd = [&](const Vec& u, const Vec& v) { return vec_add(F, u, v); };
    auto vsub = [&](const Vec& u, const Vec& v) { return vec_sub(F, u, v); };

    for (int x = 0; x < m; ++x) {
        Vec rx = mo.r(vb[x]), vx = mo.v(vb[x]);
        for (int y = 0; y < m; ++y) {
            Vec ry = mo.r(vb[y]), vy = mo.v(vb[y]);
            // M1: r(x.y) = r(x)r(y) + f'(v(x),v(y)) - f(x,y) + r(x) <-' v(y) + v(x) |>' r(y)
            Vec lhs = mo.r(od.vm(vb[x], vb[y]));
            Vec rhs = vadd(vadd(vsub(vadd(E.A.mul(rx, ry), oe.f(vx, vy)), od.f(vb[x], vb[y])),
                                 oe.lh(rx, vy)),
                           oe.ra(vx, ry));
            if (lhs != rhs) return false;
            // M2: v(x.y) = r(x) ->' v(y) + v(x) <|' r(y) + v(x) .' v(y)
            Vec lhs2 = mo.v(od.vm(vb[x], vb[y]));
            Vec rhs2 = vadd(vadd(oe.rh(rx, vy), oe.la(vx, ry)), oe.vm(vx, vy));
            if (lhs2 != rhs2) return false;
        }
        for (int a = 0; a < n; ++a) {
            // M3: r(x <| a) = r(x) a - x |> a + v(x) |>' a
            Vec lhs = mo.r(od.la(vb[x], ab[a]));
            Vec rhs = vadd(vsub(E.A.mul(rx, ab[a]), od.ra(vb[x], ab[a])), oe.ra(vx, ab[a]));
            if (lhs != rhs) return false;
            // M4: v(x <| a) = v(x) <|' a
            if (mo.v(od.la(vb[x], ab[a])) != oe.la(vx, ab[a])) return false;
            // M5: r(a -> x) = a r(x) - a <- x + a <-' v(x)
            Vec lhs5 = mo.r(od.rh(ab[a], vb[x]));
            Vec rhs5 = vadd(vsub(E.A.mul(ab[a], rx), od.lh(ab[a], vb[x])), oe.lh(ab[a], vx));
            if (lhs5 != rhs5) return false;
            // M6: v(a -> x) = a ->' v(x)
            if (mo.v(od.rh(ab[a], vb[x])) != oe.rh(ab[a], vx)) return false;
        }
    }
    return true;
}

Mat morphism_matrix(const ExtendingDatum& D, const MorphismPair& pair) {
    int n = D.adim(), m = D.vdim;
    Mat M = Mat::identity(n + m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) M.at(i, n + j) = pair.r.at(i, j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) M.at(n + i, n + j) = pair.v.at(i, j);
    return M;
}

namespace {

/// Solves the affine conditions (M2),(M3),(M5) for r at fixed v, then filters
/// by the remaining quadratic condition through a full morphism check.
std::optional<Mat> solve_r_for_v(const ExtendingDatum& D, const ExtendingDatum& E, const Mat& v) {
    const Field& F = *D.A.F;
    int n = D.adim(), m = D.vdim;
    int unknowns = n * m;
    // residual(R) for the linear conditions, as one long vector
    auto residual = [&](const Mat& R) {
        MorphismPair p{R, v};
        Ops od(D), oe(E);
        MorphOps mo(D, E, p);
        auto ab = od.abasis();
        auto vb = od.vbasis();
        Vec out;
        auto push = [&](const Vec& u) { out.insert(out.end(), u.begin(), u.end()); };
        for (int x = 0; x < m; ++x) {
            Vec rx = mo.r(vb[x]), vx = mo.v(vb[x]);
            for (int y = 0; y < m; ++y) {
                Vec ry = mo.r(vb[y]), vy = mo.v(vb[y]);
                Vec lhs = mo.v(od.vm(vb[x], vb[y]));
                Vec rhs = vec_add(F, vec_add(F, oe.rh(rx, vy), oe.la(vx, ry)), oe.vm(vx, vy));
                push(vec_sub(F, lhs, rhs));
            }
            for (int a = 0; a < n; ++a) {
                Vec lhs = mo.r(od.la(vb[x], ab[a]));
                Vec rhs = vec_add(F, vec_sub(F, E.A.mul(rx, ab[a]), od.ra(vb[x], ab[a])),
                                  oe.ra(vx, ab[a]));
                push(vec_sub(F, lhs, rhs));
                Vec lhs5 = mo.r(od.rh(ab[a], vb[x]));
                Vec rhs5 = vec_add(F, vec_sub(F, E.A.mul(ab[a], rx), od.lh(ab[a], vb[x])),
                                   oe.lh(ab[a], vx));
                push(vec_sub(F, lhs5, rhs5));
            }
        }
        return out;
    };
    Mat R0(n, m);
    Vec base = residual(R0);
    int eqs = (int)base.size();
    Mat L(eqs, unknowns);
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < m; ++t) {
            Mat Rst(n, m);
            Rst.at(s, t) = F.one();
            Vec col = residual(Rst);
            for (int e = 0; e < eqs; ++e) L.at(e, s * m + t) = F.sub(col[e], base[e]);
        }
    Vec rhs(eqs);
    for (int e = 0; e < eqs; ++e) rhs[e] = F.neg(base[e]);
    auto part = solve(F, L, rhs);
    if (!part) return std::nullopt;
    Mat K = kernel_basis(F, L);
    // enumerate the affine solution set in canonical order
    VecCounter ctr(F, K.rows);
    do {
        Vec sol = *part;
        Vec coef = ctr.value();
        for (int i = 0; i < K.rows; ++i) sol = vec_axpy(F, coef[i], K.row(i), sol);
        Mat R(n, m);
        for (int s = 0; s < n; ++s)
            for (int t = 0; t < m; ++t) R.at(s, t) = sol[s * m + t];
        if (morphism_check(D, E, {R, v})) return R;
    } while (ctr.next());
    return std::nullopt;
}

}  // namespace

std::optional<MorphismPair> find_equivalence(const ExtendingDatum& D, const ExtendingDatum& E) {
    const Field& F = *D.A.F;
    if (!F.finite()) fail("UnsupportedOverInfiniteField", "equivalence search needs a finite field");
    int m = D.vdim;
    if (m == 0) return MorphismPair{Mat(D.adim(), 0), Mat(0, 0)};
    Ops od(D), oe(E);
    auto ab = od.abasis();
    auto vb = od.vbasis();
    VecCounter ctr(F, m * m);
    do {
        Mat v(m, m);
        Vec flat = ctr.value();
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) v.at(i, j) = flat[i * m + j];
        if (rank(F, v) != m) continue;
        // v-only conditions (M4) and (M6) first
        bool ok = true;
        for (int x = 0; x < m && ok; ++x) {
            Vec vx = mat_apply(F, v, vb[x]);
            for (int a = 0; a < D.adim() && ok; ++a) {
                if (mat_apply(F, v, od.la(vb[x], ab[a])) != oe.la(vx, ab[a])) ok = false;
                if (ok && mat_apply(F, v, od.rh(ab[a], vb[x])) != oe.rh(ab[a], vx)) ok = false;
            }
        }
        if (!ok) continue;
        auto r = solve_r_for_v(D, E, v);
        if (r) return MorphismPair{*r, v};
    } while (ctr.next());
    return std::nullopt;
}

std::optional<Mat> find_cohomologous(const ExtendingDatum& D, const ExtendingDatum& E) {
    const Field& F = *D.A.F;
    if (!F.finite()) fail("UnsupportedOverInfiniteField", "cohomologous search needs a finite field");
    int m = D.vdim;
    Mat id = Mat::identity(m);
    // with v = id the datum actions <| and -> must agree
    if (D.lact != E.lact || D.rhar != E.rhar) return std::nullopt;
    return solve_r_for_v(D, E, id);
}

std::vector<std::string> classify_special(const ExtendingDatum& D) {
    AxiomReport rep = check_axioms(D);
    if (!rep.all_ok()) fail("AxiomsFailed", rep.first_failure());
    std::vector<std::string> tags;
    bool lh0 = D.lhar.is_zero(), ra0 = D.ract.is_zero(), f0 = D.cocycle.is_zero(),
         vm0 = D.vmult.is_zero();
    if (lh0 && ra0 && f0 && vm0) tags.push_back("trivial-extension");
    if (lh0 && ra0 && vm0) tags.push_back("cocycle-deformed-trivial");
    if (lh0) tags.push_back("left-split");
    if (ra0) tags.push_back("right-split");
    if (lh0 && ra0) tags.push_back("cocycle-semidirect");
    if (lh0 && ra0 && f0) tags.push_back("semidirect");
    if (f0) tags.push_back("matched-pair");
    return tags;
}

// ---- matched pairs ----

std::string ConditionReport::first_failure() const {
    for (const auto& e : entries)
        if (!e.ok) return e.name + " at " + e.witness;
    return "";
}

ExtendingDatum matched_pair_datum(const MatchedPair& mp) {
    ExtendingDatum D(mp.A, mp.vdim);
    D.lact = mp.lact;
    D.ract = mp.ract;
    D.lhar = mp.lhar;
    D.rhar = mp.rhar;
    D.vmult = mp.vmult;
    return D;  // cocycle stays zero
}

ConditionReport matched_pair_check(const MatchedPair& mp) {
    if (mp.lact.l != mp.vdim || mp.lact.r != mp.A.dim || mp.vmult.c != mp.vdim)
        fail("ShapeMismatch", "matched pair tensor shapes");
    ConditionReport rep;
    const Field& F = *mp.A.F;
    ExtendingDatum D = matched_pair_datum(mp);
    Ops o(D);
    auto ab = o.abasis();
    auto vb = o.vbasis();
    int n = mp.A.dim, m = mp.vdim;
    auto entry = [&](const std::string& name) -> ConditionReport::Entry& {
        rep.entries.push_back({name, true, ""});
        return rep.entries.back();
    };
    auto check_all = [&](ConditionReport::Entry& e, auto&& fn) {
        // fn(witness&) -> bool over its own loops
        fn(e);
    };

    auto& assoc = entry("V-associative");
    check_all(assoc, [&](ConditionReport::Entry& e) {
        for (int x = 0; x < m; ++x)
            for (int y = 0; y < m; ++y)
                for (int z = 0; z < m; ++z)
                    if (o.vm(o.vm(vb[x], vb[y]), vb[z]) != o.vm(vb[x], o.vm(vb[y], vb[z]))) {
                        e.ok = false;
                        e.witness = tuple_witness({{"x", x}, {"y", y}, {"z", z}});
                        return;
                    }
    });

    auto& abim = entry("A-bimodule");
    check_all(abim, [&](ConditionReport::Entry& e) {
        for (int x = 0; x < m; ++x) {
            if (o.rh(mp.A.unit, vb[x]) != vb[x] || o.la(vb[x], mp.A.unit) != vb[x]) {
                e.ok = false;
                e.witness = tuple_witness({{"x", x}});
                return;
            }
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    Vec prod = mp.A.mul(ab[a], ab[b]);
                    if (o.rh(prod, vb[x]) != o.rh(ab[a], o.rh(ab[b], vb[x])) ||
                        o.la(o.la(vb[x], ab[a]), ab[b]) != o.la(vb[x], prod) ||
                        o.rh(ab[a], o.la(vb[x], ab[b])) != o.la(o.rh(ab[a], vb[x]), ab[b])) {
                        e.ok = false;
                        e.witness = tuple_witness({{"a", a}, {"b", b}, {"x", x}});
                        return;
                    }
                }
        }
    });

    auto& vbim = entry("V-bimodule");
    check_all(vbim, [&](ConditionReport::Entry& e) {
        for (int x = 0; x < m; ++x)
            for (int y = 0; y < m; ++y)
                for (int a = 0; a < n; ++a) {
                    Vec xy = o.vm(vb[x], vb[y]);
                    if (o.ra(xy, ab[a]) != o.ra(vb[x], o.ra(vb[y], ab[a])) ||
                        o.lh(o.lh(ab[a], vb[x]), vb[y]) != o.lh(ab[a], xy) ||
                        o.ra(vb[x], o.lh(ab[a], vb[y])) != o.lh(o.ra(vb[x], ab[a]), vb[y])) {
                        e.ok = false;
                        e.witness = tuple_witness({{"x", x}, {"y", y}, {"a", a}});
                        return;
                    }
                }
    });

    const char* names[6] = {"MP1", "MP2", "MP3", "MP4", "MP5", "MP6"};
    for (int k = 0; k < 6; ++k) {
        auto& e = entry(names[k]);
        for (int x = 0; x < m && e.ok; ++x)
            for (int y = 0; y < m && e.ok; ++y)
                for (int a = 0; a < n && e.ok; ++a)
                    for (int b = 0; b < n; ++b) {
                        bool ok = true;
                        switch (k) {
                            case 0:  // a -> (x.y) = (a -> x).y + (a <- x) -> y
                                ok = o.rh(ab[a], o.vm(vb[x], vb[y])) ==
                                     vec_add(F, o.vm(o.rh(ab[a], vb[x]), vb[y]),
                                             o.rh(o.lh(ab[a], vb[x]), vb[y]));
                                break;
                            case 1:  // (ab) <- x = a (b <- x) + a <- (b -> x)
                                ok = o.lh(mp.A.mul(ab[a], ab[b]), vb[x]) ==
                                     vec_add(F, mp.A.mul(ab[a], o.lh(ab[b], vb[x])),
                                             o.lh(ab[a], o.rh(ab[b], vb[x])));
                                break;
                            case 2:  // x |> (ab) = (x |> a) b + (x <| a) |> b
                                ok = o.ra(vb[x], mp.A.mul(ab[a], ab[b])) ==
                                     vec_add(F, mp.A.mul(o.ra(vb[x], ab[a]), ab[b]),
                                             o.ra(o.la(vb[x], ab[a]), ab[b]));
                                break;
                            case 3:  // (x.y) <| a = x <| (y |> a) + x.(y <| a)
                                ok = o.la(o.vm(vb[x], vb[y]), ab[a]) ==
                                     vec_add(F, o.la(vb[x], o.ra(vb[y], ab[a])),
                                             o.vm(vb[x], o.la(vb[y], ab[a])));
                                break;
                            case 4:  // a (x |> b) + a <- (x <| b) = (a <- x) b + (a -> x) |> b
                                ok = vec_add(F, mp.A.mul(ab[a], o.ra(vb[x], ab[b])),
                                             o.lh(ab[a], o.la(vb[x], ab[b]))) ==
                                     vec_add(F, mp.A.mul(o.lh(ab[a], vb[x]), ab[b]),
                                             o.ra(o.rh(ab[a], vb[x]), ab[b]));
                                break;
                            case 5:  // x <| (a <- y) + x.(a -> y) = (x |> a) -> y + (x <| a).y
                                ok = vec_add(F, o.la(vb[x], o.lh(ab[a], vb[y])),
                                             o.vm(vb[x], o.rh(ab[a], vb[y]))) ==
                                     vec_add(F, o.rh(o.ra(vb[x], ab[a]), vb[y]),
                                             o.vm(o.la(vb[x], ab[a]), vb[y]));
                                break;
                        }
                        if (!ok) {
                            e.ok = false;
                            e.witness =
                                tuple_witness({{"x", x}, {"y", y}, {"a", a}, {"b", b}});
                            break;
                        }
                    }
    }
    return rep;
}

Algebra bicrossed_product(const MatchedPair& mp) {
    ConditionReport rep = matched_pair_check(mp);
    if (!rep.all_ok()) fail("MatchedPairFailed", rep.first_failure());
    return unified_product_raw(matched_pair_datum(mp));
}

MatchedPair factorize(const Algebra& E, const Mat& a_rows, const Mat& v_rows) {
    const Field& F = *E.F;
    if (a_rows.rows + v_rows.rows != E.dim) fail("NotAFactorization", "dimensions do not add up");
    Mat stacked(E.dim, E.dim);
    for (int i = 0; i < a_rows.rows; ++i) stacked.set_row(i, a_rows.row(i));
    for (int i = 0; i < v_rows.rows; ++i) stacked.set_row(a_rows.rows + i, v_rows.row(i));
    if (rank(F, stacked) != E.dim) fail("NotAFactorization", "spans are not complementary");
    if (!is_subalgebra(E, a_rows, true)) fail("NotAFactorization", "A span is not a unital subalgebra");
    if (!is_subalgebra(E, v_rows, false)) fail("NotAFactorization", "V span is not closed");

    int n = a_rows.rows, m = v_rows.rows;
    Mat Bt = mat_transpose(stacked);
    Mat Bi = *inverse(F, Bt);
    auto split = [&](const Vec& v) {
        Vec coords = mat_apply(F, Bi, v);
        return std::pair<Vec, Vec>(Vec(coords.begin(), coords.begin() + n),
                                   Vec(coords.begin() + n, coords.end()));
    };

    MatchedPair mp;
    mp.A = subalgebra_restrict(E, a_rows);
    mp.vdim = m;
    mp.lact = BilinearMap(m, n, m);
    mp.ract = BilinearMap(m, n, n);
    mp.lhar = BilinearMap(n, m, n);
    mp.rhar = BilinearMap(n, m, m);
    mp.vmult = BilinearMap(m, m, m);
    for (int x = 0; x < m; ++x)
        for (int a = 0; a < n; ++a) {
            auto [ap, vp] = split(E.mul(v_rows.row(x), a_rows.row(a)));
            mp.ract.set_value(x, a, ap);
            mp.lact.set_value(x, a, vp);
            auto [ap2, vp2] = split(E.mul(a_rows.row(a), v_rows.row(x)));
            mp.lhar.set_value(a, x, ap2);
            mp.rhar.set_value(a, x, vp2);
        }
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) {
            auto [ap, vp] = split(E.mul(v_rows.row(x), v_rows.row(y)));
            if (!vec_is_zero(ap)) fail("NotAFactorization", "V span is not closed");
            mp.vmult.set_value(x, y, vp);
        }
    return mp;
}

// ---- groups and crossed products ----

void GroupPresentationInput::validate() const {
    int n = size();
    if ((int)table.size() != n) fail("ShapeMismatch", "group table shape");
    for (const auto& row : table) {
        if ((int)row.size() != n) fail("ShapeMismatch", "group table shape");
        for (int v : row)
            if (v < 0 || v >= n) fail("ShapeMismatch", "group table entry out of range");
    }
    if (identity < 0 || identity >= n) fail("ShapeMismatch", "identity index out of range");
    for (int g = 0; g < n; ++g)
        if (table[identity][g] != g || table[g][identity] != g)
            fail("ShapeMismatch", "identity law fails");
    for (int g = 0; g < n; ++g) {
        bool has_inv = false;
        for (int h = 0; h < n; ++h)
            if (table[g][h] == identity && table[h][g] == identity) has_inv = true;
        if (!has_inv) fail("ShapeMismatch", "missing inverse for element " + std::to_string(g));
    }
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            for (int l = 0; l < n; ++l)
                if (table[table[g][h]][l] != table[g][table[h][l]])
                    fail("ShapeMismatch", "group table not associative");
}

std::optional<Vec> algebra_inverse(const Algebra& A, const Vec& u) {
    const Field& F = *A.F;
    Mat L = left_mult(A, u);
    auto w = solve(F, L, A.unit);
    if (!w) return std::nullopt;
    if (A.mul(*w, u) != A.unit) return std::nullopt;
    return w;
}

Algebra crossed_product(const Algebra& A, const GroupPresentationInput& G,
                        const std::vector<Mat>& action, const std::vector<std::vector<Vec>>& cocycle) {
    G.validate();
    const Field& F = *A.F;
    int n = A.dim, gs = G.size();
    if ((int)action.size() != gs) fail("ShapeMismatch", "one action matrix per group element");
    if ((int)cocycle.size() != gs) fail("ShapeMismatch", "cocycle shape");
    for (const auto& row : cocycle)
        if ((int)row.size() != gs) fail("ShapeMismatch", "cocycle shape");

    std::vector<Vec> basis(n, vec_zero(n));
    for (int i = 0; i < n; ++i) basis[i][i] = F.one();
    auto act = [&](int g, const Vec& v) { return mat_apply(F, action[g], v); };

    for (int g = 0; g < gs; ++g) {
        const Mat& M = action[g];
        if (M.rows != n || M.cols != n) fail("ShapeMismatch", "action matrix shape");
        if (rank(F, M) != n) fail("NotAnAutomorphism", "action of element " + std::to_string(g));
        if (mat_apply(F, M, A.unit) != A.unit)
            fail("NotAnAutomorphism", "action does not fix the unit");
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (mat_apply(F, M, A.mul(basis[i], basis[j])) != A.mul(act(g, basis[i]), act(g, basis[j])))
                    fail("NotAnAutomorphism", "action of element " + std::to_string(g));
    }
    if (cocycle[G.identity][G.identity] != A.unit)
        fail("CocycleConditionFailed", "f(1,1) != 1");
    std::vector<std::vector<Vec>> coc_inv(gs, std::vector<Vec>(gs));
    for (int g = 0; g < gs; ++g)
        for (int h = 0; h < gs; ++h) {
            auto w = algebra_inverse(A, cocycle[g][h]);
            if (!w) fail("CocycleConditionFailed", "cocycle value is not a unit of A");
            coc_inv[g][h] = *w;
        }
    // twisted module condition: g |> (h |> a) = f(g,h) ((gh) |> a) f(g,h)^{-1}
    for (int g = 0; g < gs; ++g)
        for (int h = 0; h < gs; ++h)
            for (int i = 0; i < n; ++i) {
                Vec lhs = act(g, act(h, basis[i]));
                Vec rhs = A.mul(cocycle[g][h], A.mul(act(G.table[g][h], basis[i]), coc_inv[g][h]));
                if (lhs != rhs) fail("CocycleConditionFailed", "twisted module condition");
            }
    // cocycle condition: f(g,h) f(gh,l) = (g |> f(h,l)) f(g,hl)
    for (int g = 0; g < gs; ++g)
        for (int h = 0; h < gs; ++h)
            for (int l = 0; l < gs; ++l) {
                Vec lhs = A.mul(cocycle[g][h], cocycle[G.table[g][h]][l]);
                Vec rhs = A.mul(act(g, cocycle[h][l]), cocycle[g][G.table[h][l]]);
                if (lhs != rhs) fail("CocycleConditionFailed", "2-cocycle condition");
            }

    // basis (g, i) = e_i g-bar, ordered by group index then algebra index
    Algebra P(A.F, n * gs);
    auto put = [&](int g, int h, const Vec& coeff_a) {
        // contribution coeff_a placed in block gh
        return std::pair<int, Vec>(G.table[g][h], coeff_a);
    };
    for (int g = 0; g < gs; ++g)
        for (int i = 0; i < n; ++i)
            for (int h = 0; h < gs; ++h)
                for (int j = 0; j < n; ++j) {
                    Vec prod = A.mul(basis[i], A.mul(act(g, basis[j]), cocycle[g][h]));
                    auto [blk, coeff] = put(g, h, prod);
                    Vec w = vec_zero(n * gs);
                    for (int k = 0; k < n; ++k) w[blk * n + k] = coeff[k];
                    P.set_product(g * n + i, h * n + j, w);
                }
    P.unit = vec_zero(n * gs);
    for (int k = 0; k < n; ++k) P.unit[G.identity * n + k] = A.unit[k];
    return P;
}

// ---- commutative case ----

ExtendingDatum expand_commutative(const CommutativeDatum& Dc) {
    ExtendingDatum D(Dc.A, Dc.vdim);
    D.lact = Dc.lact;
    D.ract = Dc.ract;
    D.cocycle = Dc.cocycle;
    D.vmult = Dc.vmult;
    int n = Dc.A.dim, m = Dc.vdim;
    for (int a = 0; a < n; ++a)
        for (int x = 0; x < m; ++x) {
            D.lhar.set_value(a, x, Dc.ract.value(x, a));  // a <- x := x |> a
            D.rhar.set_value(a, x, Dc.lact.value(x, a));  // a -> x := x <| a
        }
    return D;
}

ConditionReport commutative_check(const CommutativeDatum& Dc) {
    if (!Dc.A.is_commutative()) fail("NotCommutativeBase", "base algebra is not commutative");
    int m = Dc.vdim;
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y)
            if (Dc.cocycle.value(x, y) != Dc.cocycle.value(y, x) ||
                Dc.vmult.value(x, y) != Dc.vmult.value(y, x))
                fail("NotSymmetric", "f or . is not symmetric");

    ConditionReport rep;
    ExtendingDatum D = expand_commutative(Dc);
    Ops o(D);
    const Field& F = o.F;
    auto ab = o.abasis();
    auto vb = o.vbasis();
    int n = Dc.A.dim;
    auto entry = [&](const std::string& name) -> ConditionReport::Entry& {
        rep.entries.push_back({name, true, ""});
        return rep.entries.back();
    };

    auto& ca1 = entry("CA1");
    for (int x = 0; x < m && ca1.ok; ++x) {
        if (o.la(vb[x], Dc.A.unit) != vb[x] || !vec_is_zero(o.ra(vb[x], Dc.A.unit))) {
            ca1.ok = false;
            ca1.witness = tuple_witness({{"x", x}});
            break;
        }
        for (int a = 0; a < n && ca1.ok; ++a)
            for (int b = 0; b < n; ++b)
                if (o.la(o.la(vb[x], ab[a]), ab[b]) != o.la(vb[x], Dc.A.mul(ab[a], ab[b]))) {
                    ca1.ok = false;
                    ca1.witness = tuple_witness({{"x", x}, {"a", a}, {"b", b}});
                    break;
                }
    }

    auto& ca2 = entry("CA2");
    for (int x = 0; x < m && ca2.ok; ++x)
        for (int y = 0; y < m && ca2.ok; ++y)
            for (int z = 0; z < m; ++z) {
                Vec lhs = vec_sub(F, o.vm(vb[x], o.vm(vb[y], vb[z])), o.vm(o.vm(vb[x], vb[y]), vb[z]));
                Vec rhs = vec_sub(F, o.la(vb[z], o.f(vb[x], vb[y])), o.la(vb[x], o.f(vb[y], vb[z])));
                if (lhs != rhs) {
                    ca2.ok = false;
                    ca2.witness = tuple_witness({{"x", x}, {"y", y}, {"z", z}});
                    break;
                }
            }

    auto& ca3 = entry("CA3");
    for (int x = 0; x < m && ca3.ok; ++x)
        for (int y = 0; y < m && ca3.ok; ++y)
            for (int a = 0; a < n; ++a) {
                Vec lhs = o.la(o.vm(vb[x], vb[y]), ab[a]);
                Vec rhs = vec_add(F, o.la(vb[x], o.ra(vb[y], ab[a])), o.vm(vb[x], o.la(vb[y], ab[a])));
                if (lhs != rhs) {
                    ca3.ok = false;
                    ca3.witness = tuple_witness({{"x", x}, {"y", y}, {"a", a}});
                    break;
                }
            }

    auto& ca4 = entry("CA4");
    for (int x = 0; x < m && ca4.ok; ++x)
        for (int a = 0; a < n && ca4.ok; ++a)
            for (int b = 0; b < n; ++b) {
                Vec lhs = o.ra(vb[x], Dc.A.mul(ab[a], ab[b]));
                Vec rhs = vec_add(F, Dc.A.mul(ab[a], o.ra(vb[x], ab[b])),
                                  o.ra(o.la(vb[x], ab[b]), ab[a]));
                if (lhs != rhs) {
                    ca4.ok = false;
                    ca4.witness = tuple_witness({{"x", x}, {"a", a}, {"b", b}});
                    break;
                }
            }

    auto& ca5 = entry("CA5");
    for (int x = 0; x < m && ca5.ok; ++x)
        for (int y = 0; y < m && ca5.ok; ++y)
            for (int a = 0; a < n; ++a) {
                Vec lhs = o.ra(o.vm(vb[x], vb[y]), ab[a]);
                Vec rhs = vec_sub(F,
                                  vec_add(F, o.ra(vb[x], o.ra(vb[y], ab[a])),
                                          o.f(vb[x], o.la(vb[y], ab[a]))),
                                  Dc.A.mul(o.f(vb[x], vb[y]), ab[a]));
                if (lhs != rhs) {
                    ca5.ok = false;
                    ca5.witness = tuple_witness({{"x", x}, {"y", y}, {"a", a}});
                    break;
                }
            }

    auto& ca6 = entry("CA6");
    for (int x = 0; x < m && ca6.ok; ++x)
        for (int y = 0; y < m && ca6.ok; ++y)
            for (int z = 0; z < m; ++z) {
                Vec lhs = vec_sub(F, o.f(vb[x], o.vm(vb[y], vb[z])), o.f(o.vm(vb[x], vb[y]), vb[z]));
                Vec rhs = vec_sub(F, o.ra(vb[z], o.f(vb[x], vb[y])), o.ra(vb[x], o.f(vb[y], vb[z])));
                if (lhs != rhs) {
                    ca6.ok = false;
                    ca6.witness = tuple_witness({{"x", x}, {"y", y}, {"z", z}});
                    break;
                }
            }

    return rep;
}

}  // namespace extalg
