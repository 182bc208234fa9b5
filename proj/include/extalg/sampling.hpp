#pragma once

// Seeded random generators for property checks: random field elements,
// random valid algebras (unit in position 0), and random extending datums.

#include <optional>
#include <random>

#include "extalg/unified.hpp"

namespace extalg {

using Rng = std::mt19937_64;

inline Fel random_fel(const Field& F, Rng& rng) {
    if (F.finite()) return F.element((long long)(rng() % F.size()));
    if (F.kind() == FieldKind::Rationals) {
        long long n = (long long)(rng() % 21) - 10;
        long long d = 1 + (long long)(rng() % 6);
        return F.div(F.from_int(n), F.from_int(d));
    }
    Fel num{(long long)(rng() % 8), 1};
    Fel den{(long long)(1 + rng() % 7), 1};
    return F.div(num, den);
}

inline Vec random_vec(const Field& F, int n, Rng& rng) {
    Vec v(n);
    for (int i = 0; i < n; ++i) v[i] = random_fel(F, rng);
    return v;
}

/// Random associative unital table with e_0 = 1 (rejection sampling).
inline Algebra random_valid_algebra(FieldPtr F, int dim, Rng& rng, int max_tries = 100000) {
    for (int t = 0; t < max_tries; ++t) {
        Algebra A(F, dim);
        A.unit = vec_zero(dim);
        A.unit[0] = F->one();
        for (int i = 0; i < dim; ++i) {
            Vec ei = vec_zero(dim);
            ei[i] = F->one();
            A.set_product(0, i, ei);
            A.set_product(i, 0, ei);
        }
        for (int i = 1; i < dim; ++i)
            for (int j = 1; j < dim; ++j) A.set_product(i, j, random_vec(*F, dim, rng));
        if (validate(A).ok()) return A;
    }
    fail("BudgetExceeded", "could not sample a valid algebra");
}

/// Random normalized datum over an algebra whose unit is e_0: every tensor
/// entry free except the ones pinned by normalization.
inline ExtendingDatum random_normalized_datum(const Algebra& A, int vdim, Rng& rng) {
    const Field& F = *A.F;
    ExtendingDatum D(A, vdim);
    for (int x = 0; x < vdim; ++x)
        for (int a = 0; a < A.dim; ++a) {
            D.lact.set_value(x, a, random_vec(F, vdim, rng));
            D.ract.set_value(x, a, random_vec(F, A.dim, rng));
            D.lhar.set_value(a, x, random_vec(F, A.dim, rng));
            D.rhar.set_value(a, x, random_vec(F, vdim, rng));
        }
    for (int x = 0; x < vdim; ++x)
        for (int y = 0; y < vdim; ++y) {
            D.cocycle.set_value(x, y, random_vec(F, A.dim, rng));
            D.vmult.set_value(x, y, random_vec(F, vdim, rng));
        }
    // pin normalization (unit is e_0): x |> 1 = 0, x <| 1 = x, 1 <- x = 0, 1 -> x = x
    for (int x = 0; x < vdim; ++x) {
        Vec ex = vec_zero(vdim);
        ex[x] = F.one();
        D.ract.set_value(x, 0, vec_zero(A.dim));
        D.lact.set_value(x, 0, ex);
        D.lhar.set_value(0, x, vec_zero(A.dim));
        D.rhar.set_value(0, x, ex);
    }
    return D;
}

/// Valid-by-construction datum: character bimodule with everything else zero,
/// then re-extracted through a random retraction of its unified product.
/// Empty when A has no characters.
inline std::optional<ExtendingDatum> random_structured_datum(const Algebra& A, int vdim, Rng& rng) {
    const Field& F = *A.F;
    auto chars = characters(A);
    if (chars.empty()) return std::nullopt;
    ExtendingDatum D(A, vdim);
    for (int x = 0; x < vdim; ++x) {
        const Character& cl = chars[rng() % chars.size()];
        const Character& cr = chars[rng() % chars.size()];
        for (int a = 0; a < A.dim; ++a) {
            Vec ex = vec_zero(vdim);
            ex[x] = F.one();
            D.lact.set_value(x, a, vec_scale(F, cl.row[a], ex));
            D.rhar.set_value(a, x, vec_scale(F, cr.row[a], ex));
        }
    }
    Algebra E = unified_product_raw(D);
    // random retraction fixing the embedded copy of A: p(e_{n+x}) arbitrary
    int n = A.dim;
    Mat a_rows(n, E.dim);
    for (int i = 0; i < n; ++i) a_rows.at(i, i) = F.one();
    Mat p(n, E.dim);
    for (int i = 0; i < n; ++i) p.at(i, i) = F.one();
    for (int x = 0; x < vdim; ++x) {
        Vec img = random_vec(F, n, rng);
        for (int i = 0; i < n; ++i) p.at(i, n + x) = img[i];
    }
    return datum_from_retraction(E, a_rows, p).first;
}

/// Flips one non-pinned tensor entry to a random different value.
inline void perturb_datum(ExtendingDatum& D, Rng& rng) {
    const Field& F = *D.A.F;
    for (int tries = 0; tries < 200; ++tries) {
        int which = (int)(rng() % 6);
        BilinearMap* maps[6] = {&D.lact, &D.ract, &D.lhar, &D.rhar, &D.cocycle, &D.vmult};
        BilinearMap& M = *maps[which];
        int i = (int)(rng() % M.l), j = (int)(rng() % M.r), k = (int)(rng() % M.c);
        // stay clear of normalization-pinned slots (unit coordinate 0)
        if ((which == 0 || which == 1) && j == 0) continue;
        if ((which == 2 || which == 3) && i == 0) continue;
        Fel nv = random_fel(F, rng);
        if (nv == M.at(i, j, k)) continue;
        M.at(i, j, k) = nv;
        return;
    }
}

}  // namespace extalg
