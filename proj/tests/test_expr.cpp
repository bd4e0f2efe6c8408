#include <catch2/catch_amalgamated.hpp>

#include "ringlab/expr.hpp"

using namespace ringlab;

TEST_CASE("parsing atoms") {
    auto e = parse("Z/2[x]/(x^4+x)");
    REQUIRE(e->kind == RingExpr::Kind::PolyQuot);
    CHECK(e->base->kind == RingExpr::Kind::Zmod);
    CHECK(e->base->n == 2);
    CHECK(e->modulus.coeffs == std::vector<long long>{0, 1, 0, 0, 1});
    CHECK(build(*e)->size() == 16);

    auto p = parse("Z/2 * GF(4)");
    REQUIRE(p->kind == RingExpr::Kind::Product);
    CHECK(p->factors.size() == 2);
    CHECK(build(*p)->size() == 8);

    auto i = parse("Z/4 (+) ideal(2)");
    REQUIRE(i->kind == RingExpr::Kind::Idealization);
    CHECK(i->ideal_gens.size() == 1);
    CHECK(build(*i)->size() == 8);
}

TEST_CASE("whitespace and nesting") {
    auto a = parse("  Z/2  *  GF( 4 ) ");
    auto b = parse("Z/2*GF(4)");
    CHECK(expr_equal(*a, *b));

    auto nested = parse("(Z/4 (+) ideal(2)) * Z/2");
    REQUIRE(nested->kind == RingExpr::Kind::Product);
    CHECK(nested->factors[0]->kind == RingExpr::Kind::Idealization);
    CHECK(build(*nested)->size() == 16);

    auto chain = parse("Z/2[x]/(x^2+x+1)[y]/(y^2+y+1)");
    CHECK(build(*chain)->size() == 16);

    // left-associative: a * b (+) ideal(e) wraps the whole product
    auto mixed = parse("Z/2 * Z/2 (+) ideal((1,0))");
    REQUIRE(mixed->kind == RingExpr::Kind::Idealization);
    CHECK(mixed->base->kind == RingExpr::Kind::Product);
    CHECK(build(*mixed)->size() == 8);
}

TEST_CASE("syntax errors carry positions") {
    auto rejects = [](const std::string& text) {
        try {
            parse(text);
            return false;
        } catch (const error& e) {
            return e.code() == std::string("syntax-error") &&
                   std::string(e.what()).find("col") != std::string::npos;
        }
    };
    CHECK(rejects("Z/"));
    CHECK(rejects("Z/4 (+) 2"));
    CHECK(rejects("GF(4"));
    CHECK(rejects("Z/2 * "));
    CHECK(rejects("Z/2 Z/2"));
}

TEST_CASE("galois atoms expand to prime-power fields") {
    CHECK(build(*parse("GF(2)"))->size() == 2);
    CHECK(build(*parse("GF(9)"))->size() == 9);
    auto f8 = build(*parse("GF(8)"));
    CHECK(f8->size() == 8);
    CHECK(units(f8).units.size() == 7);  // a field
    CHECK_THROWS_MATCHES(build(*parse("GF(6)")), error,
                         Catch::Matchers::Predicate<error>([](const error& e) {
                             return e.code() == "invalid-ring";
                         }));
}

TEST_CASE("element literals resolve against the ring") {
    auto R = build(*parse("Z/2[t]/(t^4+t)"));
    ElemLit lit;
    lit.kind = ElemLit::Kind::Poly;
    lit.poly.var = "t";
    lit.poly.coeffs = {1, 1, 0, 1};
    auto pq = std::dynamic_pointer_cast<const PolyQuotRing>(R);
    CHECK(resolve_element(R, lit) == pq->from_coeffs({1, 1, 0, 1}));

    auto P = build(*parse("Z/2 * Z/3"));
    ElemLit tup;
    tup.kind = ElemLit::Kind::Tuple;
    ElemLit a, b;
    a.value = 1;
    b.value = 2;
    tup.tuple = {a, b};
    auto pr = std::dynamic_pointer_cast<const ProductRing>(P);
    CHECK(resolve_element(P, tup) == pr->from_coords({1, 2}));

    // integers land on multiples of one in any ring
    CHECK(resolve_element(P, a) == P->one());

    // degree overflow reduces through the relation
    ElemLit high;
    high.kind = ElemLit::Kind::Poly;
    high.poly.var = "t";
    high.poly.coeffs = {0, 0, 0, 0, 1};  // t^4 = t
    CHECK(resolve_element(R, high) == pq->from_coeffs({0, 1}));
}

TEST_CASE("round-trip through the printer") {
    const char* fixed[] = {
        "Z/2[x]/(x^4+x)", "Z/2 * GF(4)", "Z/4 (+) ideal(2)",
        "(Z/4 (+) ideal(2)) * Z/2", "Z/3 * Z/3 * Z/2", "GF(9)[y]/(y^2+1)",
    };
    for (const char* t : fixed) {
        auto e = parse(t);
        CHECK(expr_equal(*parse(pretty(*e)), *e));
    }

    Rng rng(1234);
    for (int i = 0; i < 1000; ++i) {
        auto e = random_expr(rng);
        auto printed = pretty(*e);
        CAPTURE(printed);
        CHECK(expr_equal(*parse(printed), *e));
    }
}
