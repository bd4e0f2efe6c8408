#include <catch2/catch_amalgamated.hpp>

#include "ringlab/ideal.hpp"

using namespace ringlab;

namespace {

auto F2() { return make_zmod(2); }
auto F4() { return make_poly_quot(make_zmod(2), {1, 1, 1}); }

std::vector<RingPtr> catalog_small() {
    return {make_zmod(4),
            make_zmod(6),
            make_zmod(8),
            make_zmod(9),
            F4(),
            make_product({F2(), F2()}),
            make_product({F2(), F4()}),
            make_product({make_zmod(4), F2()}),
            make_poly_quot(F2(), {0, 0, 1}),
            make_poly_quot(F2(), {0, 1, 0, 0, 1}, "t"),
            make_poly_quot(F2(), {1, 0, 0, 1}, "y"),
            make_idealization(make_zmod(4), {2})};
}

}  // namespace

TEST_CASE("generated ideals") {
    auto z8 = make_zmod(8);
    CHECK(ideal_generated(z8, {2}).members.items() == std::vector<index_t>{0, 2, 4, 6});
    CHECK(ideal_generated(z8, {}).members.items() == std::vector<index_t>{0});

    auto P = make_product({F2(), F2()});
    auto I = ideal_generated(P, {P->from_coords({1, 0})});
    CHECK(I.members.items() ==
          std::vector<index_t>{P->from_coords({0, 0}), P->from_coords({1, 0})});
    CHECK(is_ideal(P, I.members));
}

TEST_CASE("nilradical") {
    CHECK(nilradical(make_zmod(8)).members.items() == std::vector<index_t>{0, 2, 4, 6});
    CHECK(nilradical(make_product({F2(), F4()})).members.items() == std::vector<index_t>{0});
    auto P = make_product({make_zmod(4), F2()});
    CHECK(nilradical(P).members.items() ==
          std::vector<index_t>{P->from_coords({0, 0}), P->from_coords({2, 0})});
}

TEST_CASE("jacobson radical") {
    auto z8 = make_zmod(8);
    CHECK(jacobson(z8).members == ideal_generated(z8, {2}).members);

    auto fields = make_product({F2(), F4(), make_zmod(3)});
    CHECK(jacobson(fields).members.items() == std::vector<index_t>{0});

    auto P = make_product({make_zmod(4), F2()});
    CHECK(jacobson(P).members.items() ==
          std::vector<index_t>{P->from_coords({0, 0}), P->from_coords({2, 0})});
}

TEST_CASE("idempotents") {
    auto B = make_product({F2(), F2(), F2()});
    auto ide = idempotents(B);
    CHECK(ide.all.size() == 8);
    CHECK(ide.primitive.size() == 3);

    auto z9 = make_zmod(9);  // local
    CHECK(idempotents(z9).all == std::vector<index_t>{0, 1});
    CHECK(idempotents(z9).primitive == std::vector<index_t>{1});

    auto z6 = make_zmod(6);
    CHECK(idempotents(z6).all == std::vector<index_t>{0, 1, 3, 4});
    CHECK(idempotents(z6).primitive == std::vector<index_t>{3, 4});
}

TEST_CASE("maximal ideals and residue fields") {
    auto z8 = make_zmod(8);
    auto mx = maximal_ideals(z8);
    REQUIRE(mx.size() == 1);
    CHECK(mx[0].members.items() == std::vector<index_t>{0, 2, 4, 6});

    auto S = make_poly_quot(F2(), {0, 1, 0, 0, 1}, "t");
    auto mxS = maximal_ideals(S);
    REQUIRE(mxS.size() == 3);
    std::vector<std::size_t> residues;
    for (const auto& M : mxS) residues.push_back(S->size() / M.size());
    std::sort(residues.begin(), residues.end());
    CHECK(residues == std::vector<std::size_t>{2, 2, 4});

    auto R = make_poly_quot(F2(), {1, 0, 0, 1}, "y");
    auto mxR = maximal_ideals(R);
    REQUIRE(mxR.size() == 2);
    std::vector<std::size_t> residuesR;
    for (const auto& M : mxR) residuesR.push_back(R->size() / M.size());
    std::sort(residuesR.begin(), residuesR.end());
    CHECK(residuesR == std::vector<std::size_t>{2, 4});

    // each quotient by a maximal ideal is a field
    for (const auto& M : mxS) {
        auto q = quotient(S, M);
        CHECK(units(q.ring).units.size() == q.ring->size() - 1);
    }
}

TEST_CASE("quotients") {
    auto z8 = make_zmod(8);
    auto q = quotient(z8, ideal_generated(z8, {2}));
    CHECK(q.ring->size() == 2);
    CHECK(q.projection.surjective);
    validate_ring_axioms(q.ring);

    auto qz = quotient(z8, ideal_generated(z8, {}));
    CHECK(qz.ring->size() == 8);
    CHECK(qz.projection.injective);

    auto S = make_poly_quot(F2(), {0, 1, 0, 0, 1}, "t");
    for (const auto& M : maximal_ideals(S))
        if (S->size() / M.size() == 4) {
            auto field = quotient(S, M);
            CHECK(field.ring->size() == 4);
            CHECK(units(field.ring).units.size() == 3);
        }

    CHECK_THROWS_MATCHES(quotient(z8, ideal_generated(z8, {1})), error,
                         Catch::Matchers::Predicate<error>([](const error& e) {
                             return e.code() == "invalid-quotient";
                         }));
}

TEST_CASE("local factor decomposition") {
    auto z6 = make_zmod(6);
    auto dec = local_factors(z6);
    REQUIRE(dec.factors.size() == 2);
    std::vector<index_t> idems{dec.factors[0].idempotent, dec.factors[1].idempotent};
    std::sort(idems.begin(), idems.end());
    CHECK(idems == std::vector<index_t>{3, 4});
    std::vector<std::size_t> sizes{dec.factors[0].factor->size(),
                                   dec.factors[1].factor->size()};
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<std::size_t>{2, 3});

    auto z9 = make_zmod(9);
    CHECK(local_factors(z9).factors.size() == 1);
    CHECK(local_factors(z9).factors[0].idempotent == z9->one());

    auto S = make_poly_quot(F2(), {0, 1, 0, 0, 1}, "t");
    auto decS = local_factors(S);
    REQUIRE(decS.factors.size() == 3);
    std::vector<std::size_t> sizesS;
    for (const auto& f : decS.factors) sizesS.push_back(f.factor->size());
    std::sort(sizesS.begin(), sizesS.end());
    CHECK(sizesS == std::vector<std::size_t>{2, 2, 4});
}

TEST_CASE("j-regular witnesses") {
    auto z4 = make_zmod(4);
    auto w = j_regular_witness(z4);
    REQUIRE(w.ok);
    auto J = jacobson(z4);
    auto u = units(z4);
    for (index_t x = 0; x < z4->size(); ++x) {
        index_t y = w.partner[x];
        CHECK(J.contains(z4->mul(x, y)));
        CHECK(u.is_unit(z4->add(x, y)));
    }

    CHECK(j_regular_witness(F4()).ok);
    auto P = make_product({F2(), F2()});
    auto wp = j_regular_witness(P);
    REQUIRE(wp.ok);
    // complementary idempotents witness each other
    index_t e = P->from_coords({1, 0});
    CHECK(P->mul(e, wp.partner[e]) == 0);
}

TEST_CASE("structural invariants across the small catalog") {
    for (const auto& R : catalog_small()) {
        auto J = jacobson(R);
        auto nil = nilradical(R);
        auto mx = maximal_ideals(R);
        auto dec = local_factors(R);

        // J = intersection of maximal ideals
        IndexSet inter = mx[0].members;
        for (std::size_t i = 1; i < mx.size(); ++i)
            inter = IndexSet::intersect(inter, mx[i].members);
        CHECK(J.members == inter);

        // Nil inside J
        CHECK(nil.members.subset_of(J.members));

        // factor count matches the maximal spectrum
        CHECK(mx.size() == dec.factors.size());

        // primitive idempotents are orthogonal and sum to one
        auto idem = idempotents(R);
        index_t sum = 0;
        for (index_t e : idem.primitive) sum = R->add(sum, e);
        CHECK(sum == R->one());

        // semisimple quotient: reduced, and every element splits as e*u
        auto q = quotient(R, J);
        CHECK(nilradical(q.ring).members.items() == std::vector<index_t>{0});
        auto uq = units(q.ring);
        for (index_t x = 0; x < q.ring->size(); ++x) {
            bool split = false;
            for (index_t y = 0; y < q.ring->size() && !split; ++y) {
                if (q.ring->mul(q.ring->mul(x, x), y) != x) continue;
                index_t e = q.ring->mul(x, y);
                index_t u = q.ring->add(q.ring->sub(q.ring->one(), e), x);
                split = q.ring->mul(e, e) == e && uq.is_unit(u) &&
                        q.ring->mul(e, u) == x;
            }
            CHECK(split);
        }

        // projected radical: J(R)/Nil maps onto J(R/Nil)
        auto qq = quotient(R, nil);
        auto Jq = jacobson(qq.ring);
        std::vector<index_t> mapped;
        for (index_t j : J.members.items()) mapped.push_back(qq.projection(j));
        CHECK(IndexSet(qq.ring->size(), std::move(mapped)) == Jq.members);
    }
}
