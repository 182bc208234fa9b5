#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "extalg/flag.hpp"
#include "extalg/sampling.hpp"

using namespace extalg;

namespace {

FlagDatum scalar_datum(const Field& F, const Fel& a0, const Fel& u) {
    // base A = k: characters are forced, derivations vanish
    FlagDatum fd;
    fd.Lambda = {F.one()};
    fd.lambda = {F.one()};
    fd.D = Mat(1, 1);
    fd.d = Mat(1, 1);
    fd.a0 = {a0};
    fd.u = u;
    return fd;
}

/// Quadruple parametrization over k_(0,0): D(x) = D1 x, d(x) = d1 x,
/// a0 = (D1^2 - u D1) + a01 x.
FlagDatum k00_datum(const Field& F, const Fel& D1, const Fel& d1, const Fel& a01, const Fel& u) {
    FlagDatum fd;
    fd.Lambda = {F.one(), F.zero()};
    fd.lambda = {F.one(), F.zero()};
    fd.D = Mat(2, 2);
    fd.D.at(1, 1) = D1;
    fd.d = Mat(2, 2);
    fd.d.at(1, 1) = d1;
    fd.a0 = {F.sub(F.mul(D1, D1), F.mul(u, D1)), a01};
    fd.u = u;
    return fd;
}

std::set<std::vector<long long>> key_set(const Field& F, const std::vector<FlagDatum>& v) {
    std::set<std::vector<long long>> s;
    for (const auto& fd : v) s.insert(fd.key(F));
    return s;
}

}  // namespace

TEST_CASE("flag_check on the scalar base and k_(0,0)") {
    auto f3 = Field::prime(3);
    Algebra k = algebra_k(f3);
    for (long long a = 0; a < 3; ++a)
        for (long long u = 0; u < 3; ++u)
            CHECK(flag_check(k, scalar_datum(*f3, f3->from_int(a), f3->from_int(u))).all_ok());

    Algebra k00 = algebra_dim2(f3, f3->zero(), f3->zero());
    // quadruples satisfying a01 D1 = a01 d1 and D1^2 - u D1 = d1^2 - u d1 pass
    CHECK(flag_check(k00, k00_datum(*f3, f3->one(), f3->one(), f3->one(), f3->zero())).all_ok());
    // D1 = 0, d1 = 1, a01 = 1, u = 0 violates D(a0) = d(a0)
    auto rep = flag_check(k00, k00_datum(*f3, f3->zero(), f3->one(), f3->one(), f3->zero()));
    CHECK_FALSE(rep.all_ok());

    FlagDatum notchar = scalar_datum(*f3, f3->zero(), f3->zero());
    notchar.lambda = {f3->from_int(2)};
    CHECK_THROWS_WITH_AS(flag_check(k, notchar), doctest::Contains("NotACharacter"), Error);
}

TEST_CASE("flag datum dictionary matches the axiom system") {
    auto f3 = Field::prime(3);
    Algebra k00 = algebra_dim2(f3, f3->zero(), f3->zero());
    Rng rng(77);
    int pass = 0;
    for (int iter = 0; iter < 400; ++iter) {
        FlagDatum fd = k00_datum(*f3, random_fel(*f3, rng), random_fel(*f3, rng),
                                 random_fel(*f3, rng), random_fel(*f3, rng));
        // scramble a0 independently half the time
        if (rng() % 2) fd.a0 = random_vec(*f3, 2, rng);
        bool flags = flag_check(k00, fd).all_ok();
        bool axioms = check_axioms(flag_to_datum(k00, fd)).all_ok();
        CHECK(flags == axioms);
        if (flags) ++pass;
    }
    CHECK(pass > 0);
}

TEST_CASE("flag enumeration counts") {
    auto f2 = Field::prime(2);
    auto f3 = Field::prime(3);

    Algebra k2 = algebra_k(f2);
    CHECK(enumerate_flag_datums(k2).size() == 4);  // (a0, u) free
    CHECK(enumerate_flag_datums(algebra_k(f3)).size() == 9);

    Algebra k00_2 = algebra_dim2(f2, f2->zero(), f2->zero());
    CHECK(enumerate_flag_datums(k00_2).size() == 10);

    Algebra k20_3 = algebra_dim2(f3, f3->from_int(2), f3->zero());
    CHECK(enumerate_flag_datums(k20_3).empty());  // no characters

    Algebra k01_3 = algebra_dim2(f3, f3->zero(), f3->one());
    CHECK(enumerate_flag_datums(k01_3).size() == 72);
}

TEST_CASE("closed-form families equal the enumeration") {
    for (auto spec : {"GF(2)", "GF(3)", "GF(5)"}) {
        auto F = Field::parse(spec);
        Algebra k00 = algebra_dim2(F, F->zero(), F->zero());
        auto fams = flag_family_generators(k00);
        REQUIRE(fams.size() == 3);
        long long q = F->size();
        CHECK((long long)fams[0].members.size() == q * (q - 1) * q);
        CHECK((long long)fams[1].members.size() == q * q);
        CHECK((long long)fams[2].members.size() == q * (q - 1));
        std::vector<FlagDatum> all;
        for (const auto& fam : fams) {
            for (const auto& fd : fam.members) CHECK(flag_check(k00, fd).all_ok());
            all.insert(all.end(), fam.members.begin(), fam.members.end());
        }
        CHECK(key_set(*F, all) == key_set(*F, enumerate_flag_datums(k00)));

        Algebra k01 = algebra_dim2(F, F->zero(), F->one());
        auto fams01 = flag_family_generators(k01);
        REQUIRE(fams01.size() == 4);
        CHECK((long long)fams01[0].members.size() == q * q * q);
        CHECK((long long)fams01[1].members.size() == q * q * q);
        CHECK((long long)fams01[2].members.size() == q * q);
        CHECK((long long)fams01[3].members.size() == q * q);
        std::vector<FlagDatum> all01;
        for (const auto& fam : fams01)
            all01.insert(all01.end(), fam.members.begin(), fam.members.end());
        CHECK(key_set(*F, all01) == key_set(*F, enumerate_flag_datums(k01)));
    }
    // family members of F3 over k_(0,0) satisfy u = D1 + d1 and a0 = -D1 d1
    auto f3 = Field::prime(3);
    Algebra k00 = algebra_dim2(f3, f3->zero(), f3->zero());
    auto k00_fams = flag_family_generators(k00);
    for (const auto& fd : k00_fams[2].members) {
        Fel D1 = fd.D.at(1, 1), d1 = fd.d.at(1, 1);
        CHECK(fd.u == f3->add(D1, d1));
        Vec expect_a0 = {f3->neg(f3->mul(D1, d1)), f3->zero()};
        CHECK(fd.a0 == expect_a0);
    }
}

TEST_CASE("flag extensions") {
    auto f2 = Field::prime(2);
    auto f3 = Field::prime(3);

    // A = k, (a0, u) = (0, 0): k[x]/(x^2)
    Algebra E = flag_extension(algebra_k(f3), scalar_datum(*f3, f3->zero(), f3->zero()));
    CHECK(validate(E).ok());
    CHECK(E.table == algebra_dim2(f3, f3->zero(), f3->zero()).table);

    // k_(0,0) with (D1, d1) = (0, 1): x^2 = 0, y^2 = y, xy = x, yx = 0
    Algebra k00 = algebra_dim2(f2, f2->zero(), f2->zero());
    FlagDatum fd = k00_datum(*f2, f2->zero(), f2->one(), f2->zero(), f2->one());
    REQUIRE(flag_check(k00, fd).all_ok());
    Algebra A01 = flag_extension(k00, fd);
    CHECK(validate(A01).ok());
    Vec x = {f2->zero(), f2->one(), f2->zero()};
    Vec y = {f2->zero(), f2->zero(), f2->one()};
    CHECK(vec_is_zero(A01.mul(x, x)));
    CHECK(A01.mul(y, y) == y);
    CHECK(A01.mul(x, y) == x);
    CHECK(vec_is_zero(A01.mul(y, x)));

    // k_(0,1) with the mixed character pair and (D1, d1) = (0, 0):
    // x^2 = x, y^2 = 0, xy = y, yx = 0
    Algebra k01 = algebra_dim2(f3, f3->zero(), f3->one());
    FlagDatum f3d;
    f3d.Lambda = {f3->one(), f3->zero()};
    f3d.lambda = {f3->one(), f3->one()};
    f3d.D = Mat(2, 2);
    f3d.d = Mat(2, 2);
    f3d.a0 = vec_zero(2);
    f3d.u = f3->zero();
    REQUIRE(flag_check(k01, f3d).all_ok());
    Algebra A15 = flag_extension(k01, f3d);
    Vec x3 = {f3->zero(), f3->one(), f3->zero()};
    Vec y3 = {f3->zero(), f3->zero(), f3->one()};
    CHECK(A15.mul(x3, x3) == x3);
    CHECK(vec_is_zero(A15.mul(y3, y3)));
    CHECK(A15.mul(x3, y3) == y3);
    CHECK(vec_is_zero(A15.mul(y3, x3)));

    // every enumerated datum yields a valid extension containing A in
    // codimension 1, supersolvable when A is
    for (const auto& dd : enumerate_flag_datums(k01)) {
        Algebra Ext = flag_extension(k01, dd);
        CHECK(validate(Ext).ok());
        CHECK(supersolvable_tower(Ext).has_value());
    }

    FlagDatum badfd = k00_datum(*f2, f2->zero(), f2->one(), f2->one(), f2->zero());
    CHECK_THROWS_WITH_AS(flag_extension(k00, badfd), doctest::Contains("FlagCheckFailed"), Error);
}

TEST_CASE("flag relations and certificates") {
    auto f2 = Field::prime(2);
    Algebra k = algebra_k(f2);
    FlagDatum d00 = scalar_datum(*f2, f2->zero(), f2->zero());
    FlagDatum d10 = scalar_datum(*f2, f2->one(), f2->zero());
    FlagDatum d01 = scalar_datum(*f2, f2->zero(), f2->one());

    auto self = flag_equiv(k, d00, d00, EquivMode::Equivalent);
    REQUIRE(self.has_value());
    CHECK(self->first == f2->one());
    CHECK(vec_is_zero(self->second));

    // (1,0) ~ (0,0) through q = 1, alpha = 1: 1 = 0 + 1^2 - 0*1
    auto w = flag_equiv(k, d10, d00, EquivMode::Equivalent);
    REQUIRE(w.has_value());
    CHECK(w->second == Vec{f2->one()});

    CHECK_FALSE(flag_equiv(k, d00, d01, EquivMode::Equivalent).has_value());
    CHECK_FALSE(flag_equiv(k, d00, d01, EquivMode::Cohomologous).has_value());
}

TEST_CASE("codimension-1 classification") {
    auto f2 = Field::prime(2);
    auto f3 = Field::prime(3);
    Algebra k2 = algebra_k(f2);

    ClassifiedFamily fam = classify_codim1(k2, EquivMode::Equivalent);
    REQUIRE(fam.class_count() == 3);
    // classes: {(0,0),(1,0)}, {(0,1)}, {(1,1)}
    auto datum_key = [&](const FlagDatum& fd) {
        return std::pair<long long, long long>(fd.a0[0].a, fd.u.a);
    };
    std::map<std::pair<long long, long long>, int> cls;
    for (size_t i = 0; i < fam.datums.size(); ++i) cls[datum_key(fam.datums[i])] = fam.class_of[i];
    CHECK(cls[{0, 0}] == cls[{1, 0}]);
    CHECK(cls[{0, 1}] != cls[{0, 0}]);
    CHECK(cls[{1, 1}] != cls[{0, 0}]);
    CHECK(cls[{1, 1}] != cls[{0, 1}]);

    CHECK(classify_codim1(algebra_k(f3), EquivMode::Equivalent).class_count() == 3);

    // cohomologous classes refine equivalent classes, with q = 1 witnesses
    ClassifiedFamily coh = classify_codim1(k2, EquivMode::Cohomologous);
    CHECK(coh.class_count() >= fam.class_count());
    for (size_t i = 0; i < coh.datums.size(); ++i) {
        CHECK(coh.witness[i].first == f2->one());
        for (size_t j = 0; j < i; ++j)
            if (coh.class_of[i] == coh.class_of[j]) CHECK(fam.class_of[i] == fam.class_of[j]);
    }

    // relation sanity: symmetric + transitive witnesses on the enumerated set
    for (size_t i = 0; i < fam.datums.size(); ++i)
        for (size_t j = 0; j < fam.datums.size(); ++j) {
            bool ij = flag_equiv(k2, fam.datums[i], fam.datums[j], EquivMode::Equivalent).has_value();
            bool ji = flag_equiv(k2, fam.datums[j], fam.datums[i], EquivMode::Equivalent).has_value();
            CHECK(ij == ji);
            CHECK(ij == (fam.class_of[i] == fam.class_of[j]));
        }
}

TEST_CASE("flag pipeline over GF(4) and GF(5)") {
    auto gf4 = Field::parse("GF(4)=GF(2)[t]/(t^2+t+1)");
    Algebra k4 = algebra_k(gf4);
    CHECK(enumerate_flag_datums(k4).size() == 16);
    // char 2, k = k^2: one nilpotent class plus one class per Artin-Schreier rep
    CHECK(classify_codim1(k4, EquivMode::Equivalent).class_count() == 3);

    auto f5 = Field::prime(5);
    CHECK(enumerate_flag_datums(algebra_k(f5)).size() == 25);
    CHECK(classify_codim1(algebra_k(f5), EquivMode::Equivalent).class_count() == 3);
}

TEST_CASE("per-base class counts (pinned against the brute-force census)") {
    // the enumerated quotients below agree with brute_extensions_codim1;
    // cross-family merges make some family-by-family tallies smaller than a
    // per-family count would suggest (see A0_2 vs A0_5: y -> x + y)
    auto f2 = Field::prime(2);
    auto f3 = Field::prime(3);
    CHECK(classify_codim1(algebra_dim2(f2, f2->zero(), f2->zero()), EquivMode::Equivalent)
              .class_count() == 4);
    CHECK(classify_codim1(algebra_dim2(f3, f3->zero(), f3->zero()), EquivMode::Equivalent)
              .class_count() == 5);
    CHECK(classify_codim1(algebra_dim2(f2, f2->zero(), f2->one()), EquivMode::Equivalent)
              .class_count() == 8);
    CHECK(classify_codim1(algebra_dim2(f3, f3->zero(), f3->one()), EquivMode::Equivalent)
              .class_count() == 8);
    // the two sides of the explicit merge
    Algebra a02 = algebra_dim3(f3, vec_zero(3), {f3->zero(), f3->zero(), f3->one()}, vec_zero(3),
                               vec_zero(3));
    Algebra a05 = algebra_dim3(f3, vec_zero(3), {f3->zero(), f3->one(), f3->one()}, vec_zero(3),
                               vec_zero(3));
    CHECK(find_isomorphism(a02, a05).has_value());
}

TEST_CASE("supersolvable catalogs in dimension 2") {
    for (auto spec : {"GF(2)", "GF(3)", "GF(5)"}) {
        auto F = Field::parse(spec);
        auto cat = supersolvable_catalog(F, 2);
        CHECK(cat.size() == 3);
    }
    // normal forms over GF(3): k_(0,0), k_(0,1), k_(2,0)
    auto f3 = Field::prime(3);
    auto cat3 = supersolvable_catalog(f3, 2);
    std::vector<Algebra> expect = {algebra_dim2(f3, f3->zero(), f3->zero()),
                                   algebra_dim2(f3, f3->zero(), f3->one()),
                                   algebra_dim2(f3, f3->from_int(2), f3->zero())};
    for (const Algebra& E : expect) {
        bool found = false;
        for (const Algebra& A : cat3)
            if (find_isomorphism(A, E)) found = true;
        CHECK(found);
    }
}

TEST_CASE("named catalogs") {
    auto f2 = Field::prime(2);
    auto f3 = Field::prime(3);

    auto d2_gf2 = catalog_dim2(f2);
    CHECK(d2_gf2.size() == 3);  // k_(0,0), k_(0,1), k_(1,1)

    auto gf4 = Field::parse("GF(4)=GF(2)[t]/(t^2+t+1)");
    CHECK(catalog_dim2(gf4).size() == 3);  // 1 + |T| with |T| = 2

    auto d2_q = catalog_dim2(Field::rationals());
    REQUIRE(d2_q.size() == 3);
    CHECK(d2_q[2].family);

    // odd characteristic with nonsquares: exact representatives
    auto d2_gf3 = catalog_dim2(f3);
    REQUIRE(d2_gf3.size() == 3);
    CHECK(d2_gf3[2].name == "k_(2,0)");
    CHECK(d2_gf3[2].algebra.table == algebra_dim2(f3, f3->from_int(2), f3->zero()).table);
    auto f5 = Field::prime(5);
    auto d2_gf5 = catalog_dim2(f5);
    REQUIRE(d2_gf5.size() == 3);
    CHECK(d2_gf5[2].name == "k_(2,0)");
    for (const auto& e : d2_gf5) CHECK(validate(e.algebra).ok());

    auto d3_gf2 = catalog_dim3(f2);
    CHECK(d3_gf2.size() == 12);
    for (const auto& e : d3_gf2) {
        CHECK(validate(e.algebra).ok());
        CHECK(supersolvable_tower(e.algebra).has_value());
    }

    auto d3_gf3 = catalog_dim3(f3);
    CHECK(d3_gf3.size() == 13);  // 5 + 1 + 5 + 2 over S = {2}
    for (const auto& e : d3_gf3) CHECK(validate(e.algebra).ok());

    // characteristic 2 with k != k^2: the delta families instantiate at t
    auto rf = Field::rational_function2();
    auto d3_rf = catalog_dim3(rf);
    bool d1t = false, d2t = false;
    for (const auto& e : d3_rf) {
        CHECK(validate(e.algebra).ok());
        if (e.name == "D1(t)") d1t = true;
        if (e.name == "D2(t)") d2t = true;
    }
    CHECK(d1t);
    CHECK(d2t);
}
