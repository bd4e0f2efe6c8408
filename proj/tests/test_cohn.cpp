#include <catch2/catch_amalgamated.hpp>

#include "ringlab/cohn.hpp"

using namespace ringlab;

namespace {

auto F2() { return make_zmod(2); }
auto F4() { return make_poly_quot(make_zmod(2), {1, 1, 1}); }

ShiftedRing z4_mod2() {
    auto z4 = make_zmod(4);
    return make_shifted(z4, ideal_generated(z4, {2}));
}

}  // namespace

TEST_CASE("construction of shifted rings") {
    auto SR = z4_mod2();
    CHECK(SR.slots() == 1);
    CHECK(SR.slot_quot[0]->size() == 2);

    auto P = make_product({F2(), F4()});
    auto SP = make_shifted(P, ideal_generated(P, {}));
    CHECK(SP.slot_quot[0]->size() == 8);  // zero ideal over a reduced base

    auto z4 = make_zmod(4);
    CHECK_THROWS_MATCHES(make_shifted(z4, ideal_generated(z4, {})), error,
                         Catch::Matchers::Predicate<error>([](const error& e) {
                             return e.code() == "not-semiprime";
                         }));
}

TEST_CASE("construction of the maximal-slot ring") {
    auto C6 = make_cohn(make_zmod(6));
    REQUIRE(C6.slots() == 2);
    std::vector<std::size_t> sizes{C6.slot_quot[0]->size(), C6.slot_quot[1]->size()};
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<std::size_t>{2, 3});

    auto CF = make_cohn(F4());
    CHECK(CF.slots() == 1);
    CHECK(CF.slot_quot[0]->size() == 4);

    auto C4 = make_cohn(make_zmod(4));
    CHECK(C4.slots() == 1);
    CHECK(C4.slot_quot[0]->size() == 2);
}

TEST_CASE("arithmetic laws at the bound") {
    std::vector<ShiftedRing> rings{z4_mod2(), make_cohn(make_zmod(6)),
                                   make_cohn(make_product({F2(), F4()}))};
    for (const auto& SR : rings) {
        auto elems = elements_at_bound(SR, 2, 1 << 20);
        Rng rng(17);
        for (int t = 0; t < 300; ++t) {
            const auto& a = elems[rng.below(elems.size())];
            const auto& b = elems[rng.below(elems.size())];
            const auto& c = elems[rng.below(elems.size())];
            CHECK(shifted::mul(SR, a, b) == shifted::mul(SR, b, a));
            CHECK(shifted::add(SR, a, b) == shifted::add(SR, b, a));
            CHECK(shifted::mul(SR, shifted::mul(SR, a, b), c) ==
                  shifted::mul(SR, a, shifted::mul(SR, b, c)));
            CHECK(shifted::mul(SR, a, shifted::add(SR, b, c)) ==
                  shifted::add(SR, shifted::mul(SR, a, b), shifted::mul(SR, a, c)));
            // head projection is a retraction homomorphism onto the base
            CHECK(shifted::mul(SR, a, b).head == SR.base->mul(a.head, b.head));
            CHECK(shifted::add(SR, a, b).head == SR.base->add(a.head, b.head));
        }
        for (index_t r = 0; r < SR.base->size(); ++r)
            CHECK(shifted::make(SR, r).head == r);
    }
}

TEST_CASE("unit rigidity") {
    CHECK(verify_unit_rigidity(z4_mod2(), 2).ok);

    // units at the bound are exactly the unit heads: scan directly
    auto SR = z4_mod2();
    auto elems = elements_at_bound(SR, 2, 1 << 20);
    std::vector<index_t> unit_heads;
    auto one = shifted::one(SR);
    for (const auto& y : elems)
        for (const auto& z : elems)
            if (shifted::mul(SR, y, z) == one) {
                REQUIRE(y.tail_is_zero());
                unit_heads.push_back(y.head);
                break;
            }
    std::sort(unit_heads.begin(), unit_heads.end());
    CHECK(unit_heads == std::vector<index_t>{1, 3});

    // reduced base, zero ideal: models constant-only units of R[X]
    auto P = make_product({F2(), F2()});
    CHECK(verify_unit_rigidity(make_shifted(P, ideal_generated(P, {})), 2).ok);

    CHECK(verify_unit_rigidity(make_cohn(make_zmod(6)), 2).ok);
}

TEST_CASE("polynomial lift oracle") {
    auto z4 = make_zmod(4);
    auto I = ideal_generated(z4, {2});
    auto rep = lemma_poly_lift_oracle(z4, I, 2);
    CHECK(rep.ok);
    CHECK(rep.checked == 2ull * 2 * 64 * 64);  // |U|^2 * 64 * 64 with |U| = 2

    // the worked instance: a=b=1, f=g=2 satisfies both sides
    auto f = BoundedPoly::from(z4, {2});
    auto lhs = poly_add(poly_add(f, f), poly_shift(poly_mul(f, f)));
    for (index_t c : lhs.c) CHECK(I.contains(c));

    auto P = make_product({F2(), F2()});
    for (auto gens : std::vector<std::vector<index_t>>{
             {}, {P->from_coords({1, 0})}, {P->from_coords({0, 1})}})
        CHECK(lemma_poly_lift_oracle(P, ideal_generated(P, gens), 2).ok);
}

TEST_CASE("conductor traces") {
    CHECK(verify_conductor(z4_mod2()).ok);
    CHECK(verify_conductor(make_cohn(make_zmod(6))).ok);
    auto P = make_product({F2(), F4()});
    CHECK(verify_conductor(make_shifted(P, ideal_generated(P, {}))).ok);

    // the trace is the ideal itself: t = 2 kills x, units do not
    auto SR = z4_mod2();
    auto x = shifted::slot_gen(SR, 0);
    CHECK(shifted::mul(SR, shifted::make(SR, 2), x) == shifted::zero(SR));
    CHECK_FALSE(shifted::mul(SR, shifted::make(SR, 1), x) == shifted::zero(SR));
    CHECK_FALSE(shifted::mul(SR, shifted::make(SR, 3), x) == shifted::zero(SR));
}

TEST_CASE("zerodivisor witnesses") {
    CHECK(verify_zerodivisors(make_cohn(make_zmod(4))).ok);
    CHECK(verify_zerodivisors(make_cohn(make_zmod(6))).ok);
    CHECK(verify_zerodivisors(make_cohn(make_product({F2(), F4()}))).ok);

    auto C6 = make_cohn(make_zmod(6));
    std::size_t slot3 = C6.slot_ideals[0].contains(3) ? 0 : 1;
    CHECK(shifted::mul(C6, shifted::make(C6, 3), shifted::slot_gen(C6, slot3)) ==
          shifted::zero(C6));
}

TEST_CASE("closure of the base inside the shifted ring") {
    CHECK(verify_t_closed(z4_mod2(), 2).ok);
    auto P = make_product({F2(), F2()});
    CHECK(verify_t_closed(make_shifted(P, ideal_generated(P, {})), 1).ok);
    CHECK(verify_t_closed(make_cohn(make_zmod(6)), 2).ok);
}

TEST_CASE("radical membership trace") {
    auto z4 = make_zmod(4);
    auto SR = make_shifted(z4, jacobson(z4));
    CHECK(verify_jacobson_membership(SR, 2).ok);

    auto z8 = make_zmod(8);
    CHECK(verify_jacobson_membership(make_shifted(z8, jacobson(z8)), 2).ok);
}

TEST_CASE("reducedness propagates at the bound") {
    auto P = make_product({F2(), F4()});
    CHECK(verify_reduced(make_shifted(P, ideal_generated(P, {})), 2).ok);
    CHECK(verify_reduced(make_cohn(make_zmod(6)), 2).ok);
}

TEST_CASE("shared-unit transfer to the shifted pair") {
    // strongly local pair: diagonal F2 inside F2 x F2, zero ideal
    auto P = make_product({F2(), F2()});
    auto e = extension_generated(P, {});
    auto rep = verify_sl_transfer(e, ideal_generated(P, {}), 2, 7);
    CHECK(rep.ok);
    CHECK(rep.base_sl);
    CHECK(rep.bounded_sl);

    // non-strongly-local pair: diagonal F3 inside F3 x F3
    auto P3 = make_product({make_zmod(3), make_zmod(3)});
    auto e3 = extension_generated(P3, {});
    auto rep3 = verify_sl_transfer(e3, ideal_generated(P3, {}), 2, 7);
    CHECK(rep3.ok);
    CHECK_FALSE(rep3.base_sl);
    CHECK_FALSE(rep3.bounded_sl);

    // a nonzero matched ideal: K = (1,0) inside F2 x F2
    auto K = ideal_generated(P, {P->from_coords({1, 0})});
    auto rep2 = verify_sl_transfer(e, K, 2, 7);
    CHECK(rep2.ok);
    CHECK(rep2.base_sl == rep2.bounded_sl);
}

TEST_CASE("element literals") {
    auto SR = z4_mod2();
    auto x = shifted::slot_gen(SR, 0);
    auto y = shifted::add(SR, shifted::make(SR, 3), x);
    CHECK(shifted::str(SR, y) == "3 + x*(1)");
    auto C6 = make_cohn(make_zmod(6));
    auto z = shifted::add(C6, shifted::make(C6, 1), shifted::slot_gen(C6, 0));
    CHECK(shifted::str(C6, z).rfind("1 + x_(", 0) == 0);
}
