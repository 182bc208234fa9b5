#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "extalg/field.hpp"

using namespace extalg;

namespace {

Fel random_element(const Field& F, std::mt19937_64& rng) {
    if (F.finite()) return F.element((long long)(rng() % F.size()));
    if (F.kind() == FieldKind::Rationals) {
        long long n = (long long)(rng() % 41) - 20;
        long long d = 1 + (long long)(rng() % 9);
        return F.div(F.from_int(n), F.from_int(d));
    }
    // GF(2)(t): random bounded masks
    Fel num{(long long)(rng() % 8), 1};
    Fel den{(long long)(1 + rng() % 7), 1};
    return F.div(num, F.add(den, F.zero()));
}

void check_field_axioms(const FieldPtr& F, int trials) {
    std::mt19937_64 rng(12345);
    for (int i = 0; i < trials; ++i) {
        Fel x = random_element(*F, rng), y = random_element(*F, rng), z = random_element(*F, rng);
        CHECK(F->add(x, F->add(y, z)) == F->add(F->add(x, y), z));
        CHECK(F->mul(x, F->mul(y, z)) == F->mul(F->mul(x, y), z));
        CHECK(F->mul(x, F->add(y, z)) == F->add(F->mul(x, y), F->mul(x, z)));
        CHECK(F->add(x, F->neg(x)) == F->zero());
        CHECK(F->mul(x, F->one()) == x);
        if (!F->is_zero(x)) CHECK(F->mul(x, F->inv(x)) == F->one());
    }
}

}  // namespace

TEST_CASE("field grammar") {
    auto f3 = Field::parse("GF(3)");
    CHECK(f3->kind() == FieldKind::Prime);
    CHECK(f3->characteristic() == 3);

    // t^2+t+1 has no root in GF(2): 0^2+0+1 = 1, 1^2+1+1 = 1
    auto f4 = Field::parse("GF(4)=GF(2)[t]/(t^2+t+1)");
    CHECK(f4->kind() == FieldKind::Extension);
    CHECK(f4->size() == 4);
    CHECK(f4->modulus() == std::vector<long long>{1, 1, 1});

    CHECK_THROWS_WITH_AS(Field::parse("GF(4)=GF(2)[t]/(t^2+1)"), doctest::Contains("ReducibleModulus"),
                         Error);
    CHECK_THROWS_WITH_AS(Field::parse("GF(4)"), doctest::Contains("NotPrime"), Error);
    CHECK_THROWS_WITH_AS(Field::parse("GF[3]"), doctest::Contains("ParseError"), Error);
    CHECK(Field::parse("Q")->kind() == FieldKind::Rationals);
    CHECK(Field::parse("GF(2)(t)")->kind() == FieldKind::RationalFunction2);

    for (auto spec : {"Q", "GF(3)", "GF(4)=GF(2)[t]/(t^2+t+1)", "GF(2)(t)"}) {
        auto F = Field::parse(spec);
        CHECK(Field::parse(F->spec_string())->same(*F));
    }
}

TEST_CASE("element strings round trip") {
    auto f9 = Field::parse("GF(9)=GF(3)[t]/(t^2+1)");
    for (long long i = 0; i < 9; ++i) {
        Fel x = f9->element(i);
        CHECK(f9->parse_element(f9->to_string(x)) == x);
    }
    auto q = Field::rationals();
    CHECK(q->parse_element("-4/6") == q->div(q->from_int(-2), q->from_int(3)));
    CHECK(q->to_string(q->parse_element("2/3")) == "2/3");
    auto rf = Field::rational_function2();
    Fel t{2, 1};
    CHECK(rf->to_string(t) == "t");
    CHECK(rf->parse_element("(t^2+t)/(t+1)") == t);  // reduces
    CHECK(rf->parse_element("1/t") == rf->inv(t));
}

TEST_CASE("squares with witnesses") {
    auto f3 = Field::prime(3);
    // independent oracle: enumerate x^2 over GF(3)
    std::set<long long> sq3;
    for (long long i = 0; i < 3; ++i) sq3.insert(f3->mul({i, 1}, {i, 1}).a);
    CHECK(sq3 == std::set<long long>{0, 1});
    CHECK_FALSE(f3->is_square(f3->from_int(2)));

    auto q = Field::rationals();
    auto w = q->square_root(q->parse_element("4/9"));
    REQUIRE(w.has_value());
    CHECK(*w == q->parse_element("2/3"));
    CHECK_FALSE(q->is_square(q->from_int(-4)));

    auto f5 = Field::prime(5);
    std::set<long long> sq5;
    for (long long i = 0; i < 5; ++i) sq5.insert(f5->mul({i, 1}, {i, 1}).a);
    CHECK(sq5 == std::set<long long>{0, 1, 4});
    auto w5 = f5->square_root(f5->from_int(4));
    REQUIRE(w5.has_value());
    CHECK(f5->mul(*w5, *w5) == f5->from_int(4));
    CHECK(*w5 == f5->from_int(2));  // first witness in enumeration order

    // witness contract on every finite field of size <= 25
    for (auto spec : {"GF(2)", "GF(3)", "GF(5)", "GF(7)", "GF(11)", "GF(13)", "GF(17)", "GF(19)",
                      "GF(23)", "GF(4)=GF(2)[t]/(t^2+t+1)", "GF(8)=GF(2)[t]/(t^3+t+1)",
                      "GF(9)=GF(3)[t]/(t^2+1)", "GF(16)=GF(2)[t]/(t^4+t+1)",
                      "GF(25)=GF(5)[t]/(t^2+2)"}) {
        auto F = Field::parse(spec);
        for (const Fel& x : F->elements()) {
            bool brute = false;
            for (const Fel& c : F->elements())
                if (F->mul(c, c) == x) brute = true;
            auto root = F->square_root(x);
            CHECK(root.has_value() == brute);
            if (root) CHECK(F->mul(*root, *root) == x);
        }
    }
}

TEST_CASE("enumeration") {
    auto f2 = Field::prime(2);
    auto es = f2->elements();
    REQUIRE(es.size() == 2);
    CHECK(es[0] == f2->zero());
    CHECK(es[1] == f2->one());
    CHECK(Field::parse("GF(4)=GF(2)[t]/(t^2+t+1)")->elements().size() == 4);
    CHECK_THROWS_WITH_AS(Field::rationals()->elements(), doctest::Contains("InfiniteField"), Error);
}

TEST_CASE("field axioms on random triples") {
    for (auto spec : {"Q", "GF(2)", "GF(3)", "GF(5)", "GF(7)", "GF(4)=GF(2)[t]/(t^2+t+1)",
                      "GF(8)=GF(2)[t]/(t^3+t+1)", "GF(9)=GF(3)[t]/(t^2+1)",
                      "GF(16)=GF(2)[t]/(t^4+t+1)", "GF(25)=GF(5)[t]/(t^2+2)", "GF(2)(t)"})
        check_field_axioms(Field::parse(spec), 1000);
}

TEST_CASE("class systems partition the carrier") {
    auto f2 = Field::prime(2);
    auto cs2 = f2->class_system();
    CHECK(cs2.S().empty());
    CHECK(cs2.R().empty());
    // alpha^2 - alpha = 0 over GF(2), so classes are singletons
    CHECK(cs2.T() == std::vector<Fel>{{0, 1}, {1, 1}});

    auto f3 = Field::prime(3);
    auto cs3 = f3->class_system();
    CHECK(cs3.S() == std::vector<Fel>{{2, 1}});
    CHECK(cs3.square_index() == 2);
    CHECK_THROWS_WITH_AS(cs3.T(), doctest::Contains("InfiniteClassSet"), Error);

    auto f5 = Field::prime(5);
    auto cs5 = f5->class_system();
    REQUIRE(cs5.S().size() == 1);
    CHECK(cs5.S()[0] == f5->from_int(2));
    // orbit of 2 under q^2-scaling: q^2 in {1,4} gives {2, 3}
    std::set<long long> orbit;
    for (long long q = 1; q < 5; ++q) orbit.insert(f5->mul(f5->mul({q, 1}, {q, 1}), {2, 1}).a);
    CHECK(orbit == std::set<long long>{2, 3});

    for (auto spec : {"GF(3)", "GF(5)", "GF(7)", "GF(9)=GF(3)[t]/(t^2+1)", "GF(25)=GF(5)[t]/(t^2+2)"}) {
        auto F = Field::parse(spec);
        auto cs = F->class_system();
        // S orbits partition the nonsquares exactly
        std::set<long long> covered;
        for (const Fel& d : cs.S())
            for (const Fel& q : F->elements())
                if (!F->is_zero(q)) covered.insert(F->mul(F->mul(q, q), d).a);
        std::set<long long> nonsquares;
        for (const Fel& x : F->elements())
            if (!F->is_square(x)) nonsquares.insert(x.a);
        CHECK(covered == nonsquares);
        CHECK((long long)cs.S().size() == cs.square_index() - 1);
    }

    for (auto spec : {"GF(2)", "GF(4)=GF(2)[t]/(t^2+t+1)", "GF(8)=GF(2)[t]/(t^3+t+1)",
                      "GF(16)=GF(2)[t]/(t^4+t+1)"}) {
        auto F = Field::parse(spec);
        auto cs = F->class_system();
        CHECK(cs.S().empty());  // finite characteristic-2 fields are perfect
        CHECK(cs.R().empty());
        CHECK(cs.T().front() == F->zero());
        // T classes under c -> c + (a^2 - a) partition the field
        std::set<long long> covered;
        size_t total = 0;
        for (const Fel& c : cs.T()) {
            std::set<long long> cls;
            for (const Fel& a : F->elements())
                cls.insert(F->add(c, F->sub(F->mul(a, a), a)).a);
            total += cls.size();
            covered.insert(cls.begin(), cls.end());
        }
        CHECK(total == (size_t)F->size());
        CHECK(covered.size() == (size_t)F->size());
    }

    // GF(4): Artin-Schreier image {0,1}, so two classes -> |T| = 2
    CHECK(Field::parse("GF(4)=GF(2)[t]/(t^2+t+1)")->class_system().T().size() == 2);

    auto q = Field::rationals();
    auto csq = q->class_system();
    CHECK_THROWS_WITH_AS(csq.S(), doctest::Contains("InfiniteClassSet"), Error);
}

TEST_CASE("GF(2)(t) bounded class data") {
    auto rf = Field::rational_function2();
    Fel t{2, 1};
    CHECK_FALSE(rf->is_square(t));
    CHECK(rf->is_square(rf->mul(t, t)));
    auto cs = rf->class_system(2);
    REQUIRE(!cs.S().empty());
    CHECK(cs.S().front() == t);  // least-degree nonsquare
    REQUIRE(!cs.R().empty());
    CHECK(cs.R().front() == t);
    CHECK(cs.T().front() == rf->zero());
    // 1 is not of the form a^2 - a in GF(2)(t), so {0} and {1} are distinct classes
    bool one_seen = false;
    for (const Fel& c : cs.T())
        if (c == rf->one()) one_seen = true;
    CHECK(one_seen);
    auto bounded = rf->bounded_elements(1);
    CHECK(bounded[0] == rf->zero());
    CHECK(bounded[1] == rf->one());
}
