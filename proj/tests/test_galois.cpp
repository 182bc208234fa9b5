#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "extalg/galois.hpp"
#include "fixtures.hpp"

using namespace extalg;

namespace {

Mat span_1x(const FieldPtr& F) {
    Mat rows(2, 3);
    rows.at(0, 0) = F->one();
    rows.at(1, 1) = F->one();
    return rows;
}

Mat span_1(const FieldPtr& F, int n) {
    Mat rows(1, n);
    rows.at(0, 0) = F->one();
    return rows;
}

std::multiset<std::string> action_keys(const Field& F, const std::vector<Mat>& mats) {
    std::multiset<std::string> s;
    for (const Mat& m : mats) {
        std::string k;
        for (const Fel& x : m.a) k += F.to_string(x) + ",";
        s.insert(k);
    }
    return s;
}

}  // namespace

TEST_CASE("brute Galois groups of the stated extensions") {
    auto f2 = Field::prime(2);
    auto f3 = Field::prime(3);

    // x^2 = 0 inside the 3-dim algebra: Gal = (k,+)
    auto g1 = galois_group_brute(fixtures::ana1(f3), span_1x(f3));
    CHECK(g1.order() == 3);
    CHECK(g1.abelian());
    CHECK(g1.iso_hint() == "Z/3");

    auto g2 = galois_group_brute(fixtures::ana2(f3), span_1(f3, 3));
    CHECK(g2.order() == 6);  // (k,+) x| (k*,.)
    CHECK_FALSE(g2.abelian());

    auto g3b = galois_group_brute(fixtures::ana3_b(f3), fixtures::ana3_subalgebra(f3));
    CHECK(g3b.order() == 4);  // k* x k*
    CHECK(g3b.abelian());

    auto g3c2 = galois_group_brute(fixtures::ana3_c(f2), fixtures::ana3_subalgebra(f2));
    CHECK(g3c2.order() == 6);
    CHECK_FALSE(g3c2.abelian());
    CHECK(g3c2.iso_hint() == "GL(2,2)");

    auto g3c3 = galois_group_brute(fixtures::ana3_c(f3), fixtures::ana3_subalgebra(f3));
    CHECK(g3c3.order() == gl_order(3, 2));  // 48
}

TEST_CASE("pair form agrees with brute force") {
    auto f2 = Field::prime(2);
    // datum of the 4-dim example C relative to span{e1,e2}
    Algebra C = fixtures::ana3_c(f2);
    Mat ar = fixtures::ana3_subalgebra(f2);
    Mat p(2, 4);
    p.at(0, 0) = f2->one();
    p.at(1, 1) = f2->one();
    auto [D, phi] = datum_from_retraction(C, ar, p);
    auto ug = galois_group_unified(D);
    CHECK(ug.group.order() == 6);
    CHECK_FALSE(ug.group.abelian());

    // identity element is (0, id)
    const auto& idp = ug.pairs[ug.group.identity];
    CHECK(vec_is_zero(idp.r.a));
    CHECK(idp.sigma == Mat::identity(2));

    // inverse law (r, s)^{-1} = (-r s^{-1}, s^{-1})
    for (int g = 0; g < ug.group.order(); ++g) {
        int ginv = -1;
        for (int h = 0; h < ug.group.order(); ++h)
            if (ug.group.table[g][h] == ug.group.identity && ug.group.table[h][g] == ug.group.identity)
                ginv = h;
        REQUIRE(ginv >= 0);
        Mat si = *inverse(*f2, ug.pairs[g].sigma);
        Mat expect_r = mat_mul(*f2, ug.pairs[g].r, si);
        for (Fel& x : expect_r.a) x = f2->neg(x);
        CHECK(ug.pairs[ginv].sigma == si);
        CHECK(ug.pairs[ginv].r == expect_r);
    }

    // the matrix actions on A (+) V match the brute-force matrices in the
    // same coordinates (the datum's complement here is e3, e4 themselves)
    auto brute = galois_group_brute(C, ar);
    CHECK(action_keys(*f2, brute.action) == action_keys(*f2, ug.group.action));

    // the pair law realizes composition: psi_i psi_j = psi_{table[i][j]}
    for (int i = 0; i < ug.group.order(); ++i)
        for (int j = 0; j < ug.group.order(); ++j) {
            Mat prod = mat_mul(*f2, ug.group.action[i], ug.group.action[j]);
            CHECK(prod == ug.group.action[ug.group.table[i][j]]);
        }

    // vdim 0: trivial group
    ExtendingDatum D0(C, 0);
    CHECK(galois_group_unified(D0).group.order() == 1);
}

TEST_CASE("codimension-1 pair form") {
    auto f3 = Field::prime(3);
    Algebra k = algebra_k(f3);

    auto scalar_fd = [&](long long a0, long long u) {
        FlagDatum fd;
        fd.Lambda = {f3->one()};
        fd.lambda = {f3->one()};
        fd.D = Mat(1, 1);
        fd.d = Mat(1, 1);
        fd.a0 = {f3->from_int(a0)};
        fd.u = f3->from_int(u);
        return fd;
    };

    // k[x]/(x^2): alpha forced to 0, q free in k*
    auto g00 = galois_group_codim1(k, scalar_fd(0, 0));
    CHECK(g00.group.order() == 2);
    for (auto& [alpha, q] : g00.pairs) CHECK(vec_is_zero(alpha));

    // k x k: order 2, matching brute force on the extension
    auto g01 = galois_group_codim1(k, scalar_fd(0, 1));
    CHECK(g01.group.order() == 2);
    Algebra E01 = flag_extension(k, scalar_fd(0, 1));
    auto b01 = galois_group_brute(E01, span_1(f3, 2));
    CHECK(b01.order() == 2);
    CHECK(action_keys(*f3, b01.action) == action_keys(*f3, g01.group.action));

    // base k_(0,0) over GF(2) with the noncommutative extension: order 2
    auto f2 = Field::prime(2);
    Algebra k00 = algebra_dim2(f2, f2->zero(), f2->zero());
    FlagDatum fd;
    fd.Lambda = {f2->one(), f2->zero()};
    fd.lambda = {f2->one(), f2->zero()};
    fd.D = Mat(2, 2);
    fd.d = Mat(2, 2);
    fd.d.at(1, 1) = f2->one();
    fd.a0 = vec_zero(2);
    fd.u = f2->one();
    REQUIRE(flag_check(k00, fd).all_ok());
    auto gfd = galois_group_codim1(k00, fd);
    CHECK(gfd.group.order() == 2);
}

TEST_CASE("three methods agree on every flag datum of small bases") {
    for (auto spec : {"GF(2)", "GF(3)"}) {
        auto F = Field::parse(spec);
        std::vector<Algebra> bases = {algebra_k(F), algebra_dim2(F, F->zero(), F->zero()),
                                      algebra_dim2(F, F->zero(), F->one())};
        for (const Algebra& A : bases) {
            for (const FlagDatum& fd : enumerate_flag_datums(A)) {
                Algebra B = flag_extension(A, fd);
                Mat ar(A.dim, B.dim);
                for (int i = 0; i < A.dim; ++i) ar.at(i, i) = F->one();
                auto brute = galois_group_brute(B, ar);
                auto uni = galois_group_unified(flag_to_datum(A, fd));
                auto cod = galois_group_codim1(A, fd);
                CHECK(brute.order() == uni.group.order());
                CHECK(brute.order() == cod.group.order());
                auto keys = action_keys(*F, brute.action);
                CHECK(keys == action_keys(*F, uni.group.action));
                CHECK(keys == action_keys(*F, cod.group.action));
                // embedding bound: order divides |GL(m,k)| |k|^{nm} with m = 1
                long long bound = gl_order(F->size(), 1) * F->size();
                for (int i = 0; i < A.dim - 1; ++i) bound *= F->size();
                CHECK(bound % brute.order() == 0);
            }
        }
    }
}

TEST_CASE("stabilizing-costabilizing subgroup") {
    auto f2 = Field::prime(2);
    Algebra k00 = algebra_dim2(f2, f2->zero(), f2->zero());
    // datum of the noncommutative 3-dim extension (x^2=0, y^2=y, xy=x, yx=0)
    FlagDatum fd;
    fd.Lambda = {f2->one(), f2->zero()};
    fd.lambda = {f2->one(), f2->zero()};
    fd.D = Mat(2, 2);
    fd.d = Mat(2, 2);
    fd.d.at(1, 1) = f2->one();
    fd.a0 = vec_zero(2);
    fd.u = f2->one();
    ExtendingDatum D = flag_to_datum(k00, fd);
    auto H = stabilizing_costabilizing_subgroup(D);
    auto G = galois_group_unified(D);
    CHECK(H.group.order() == 2);  // sigma is forced trivial here
    CHECK(H.group.order() == G.group.order());
    CHECK(H.group.abelian());
    // contains r = 0
    bool has_zero = false;
    for (const auto& p : H.pairs)
        if (vec_is_zero(p.r.a)) has_zero = true;
    CHECK(has_zero);
    // normal inside the full group: conjugation stays inside
    const Field& F = *f2;
    std::set<std::string> hkeys;
    for (const Mat& m : H.group.action) {
        std::string k;
        for (const Fel& x : m.a) k += F.to_string(x) + ",";
        hkeys.insert(k);
    }
    for (const Mat& g : G.group.action)
        for (const Mat& h : H.group.action) {
            Mat conj = mat_mul(F, g, mat_mul(F, h, *inverse(F, g)));
            std::string k;
            for (const Fel& x : conj.a) k += F.to_string(x) + ",";
            CHECK(hkeys.count(k) == 1);
        }
}

TEST_CASE("fixed subalgebras and the Galois test") {
    auto f2 = Field::prime(2);
    auto f3 = Field::prime(3);

    auto r1 = invariants_and_galois_test(fixtures::ana1(f2), span_1x(f2));
    CHECK(r1.is_galois);

    auto rc = invariants_and_galois_test(fixtures::ana3_c(f2), fixtures::ana3_subalgebra(f2));
    CHECK(rc.is_galois);

    // trivial Galois group with A strictly smaller than B: not Galois
    auto rb2 = invariants_and_galois_test(fixtures::ana3_b(f2), fixtures::ana3_subalgebra(f2));
    CHECK(galois_group_brute(fixtures::ana3_b(f2), fixtures::ana3_subalgebra(f2)).order() == 1);
    CHECK_FALSE(rb2.is_galois);

    // over GF(3) the same extension is Galois
    auto rb3 = invariants_and_galois_test(fixtures::ana3_b(f3), fixtures::ana3_subalgebra(f3));
    CHECK(rb3.is_galois);

    // the fixed subalgebra always contains the base span
    for (const Mat& row : {span_1(f3, 3)}) {
        auto res = invariants_and_galois_test(fixtures::ana2(f3), row);
        for (int i = 0; i < row.rows; ++i)
            CHECK(in_row_space(*f3, row_space(*f3, res.fixed_rows), row.row(i)));
    }
}
