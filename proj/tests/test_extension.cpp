#include <catch2/catch_amalgamated.hpp>

#include "ringlab/extension.hpp"

using namespace ringlab;

namespace {

auto F2() { return make_zmod(2); }
auto F4() { return make_poly_quot(make_zmod(2), {1, 1, 1}); }

// F2 as the diagonal inside a product
Extension diagonal_ext(RingPtr S) { return extension_generated(std::move(S), {}); }

Extension dual_numbers_ext() {
    auto S = make_poly_quot(F2(), {0, 0, 1});  // x^2
    return extension_generated(S, {});
}

}  // namespace

TEST_CASE("generator-image morphisms of the eight-to-sixteen embedding") {
    auto R = make_poly_quot(F2(), {1, 0, 0, 1}, "y");      // y^3+1 = y^3-1 over F2
    auto S = make_poly_quot(F2(), {0, 1, 0, 0, 1}, "t");   // t^4+t

    auto f1 = make_morphism_gen(R, S, S->from_coeffs({1, 1, 0, 1}));  // y -> t^3+t+1
    CHECK(f1.injective);
    CHECK(is_sl(f1));
    CHECK(is_local(f1));

    auto f2 = make_morphism_gen(R, S, S->from_coeffs({1, 0, 1, 1}));  // y -> t^3+t^2+1
    CHECK(f2.injective);
    CHECK(is_sl(f2));

    // y -> t violates y^3 = 1
    CHECK_THROWS_MATCHES(make_morphism_gen(R, S, S->from_coeffs({0, 1})), error,
                         Catch::Matchers::Predicate<error>([](const error& e) {
                             return e.code() == "not-well-defined";
                         }));
}

TEST_CASE("morphism composition and cancellation") {
    auto z8 = make_zmod(8);
    auto q1 = quotient(z8, ideal_generated(z8, {4}));
    auto q2 = quotient(q1.ring, ideal_generated(q1.ring, {q1.projection(2)}));
    auto f = q1.projection;               // Z/8 -> Z/4-like
    auto g = q2.projection;
    auto gf = compose(g, f);

    // surjective + local => strongly local, and composition preserves both
    CHECK(is_local(f));
    CHECK(is_sl(f));
    CHECK(is_local(g));
    CHECK(is_sl(gf));

    // g o f strongly local forces g strongly local
    CHECK(is_sl(g));

    // identity composes neutrally
    auto idm = identity_morphism(z8);
    CHECK(compose(f, idm).map == f.map);
}

TEST_CASE("local and strongly local inclusions") {
    auto z4 = make_zmod(4);
    auto A = make_idealization(z4, {2});
    // R -> R(+)M is local but strongly local only for M = 0
    std::vector<index_t> baseline;
    for (index_t r = 0; r < z4->size(); ++r) baseline.push_back(A->from_parts(r, 0));
    auto e = make_extension(A, baseline);
    CHECK(is_local(e));
    CHECK_FALSE(is_sl(e));

    auto A0 = make_idealization(F2(), {});
    auto e0 = full_extension(A0);
    CHECK(is_sl(e0));

    CHECK(is_local(dual_numbers_ext()));

    // diagonal F3 in F3 x F3 is local but not strongly local (2 vs 4 units)
    auto P3 = make_product({make_zmod(3), make_zmod(3)});
    auto d3 = diagonal_ext(P3);
    CHECK(d3.members.size() == 3);
    CHECK_FALSE(is_sl(d3));
    CHECK(is_local(d3));

    // diagonal F2 in F2^n is strongly local
    auto P2 = make_product({F2(), F2(), F2()});
    CHECK(is_sl(diagonal_ext(P2)));

    // projections are strongly local morphisms
    auto z4q = quotient(z4, ideal_generated(z4, {2}));
    CHECK(is_local(z4q.projection));
    CHECK(is_sl(z4q.projection));
}

TEST_CASE("conductor") {
    auto P = make_product({F2(), F2()});
    auto d = diagonal_ext(P);
    CHECK(conductor(d).members.items() == std::vector<index_t>{0});

    auto e = full_extension(make_zmod(6));
    CHECK(conductor(e).members.size() == 6);

    // diagonal Z/4 inside Z/4 x Z/4: the only common ideal is zero
    auto P4 = make_product({make_zmod(4), make_zmod(4)});
    auto d4 = diagonal_ext(P4);
    REQUIRE(d4.members.size() == 4);
    CHECK(conductor(d4).members.items() == std::vector<index_t>{0});
}

TEST_CASE("support of the extension") {
    auto P = make_product({F2(), F2()});
    auto d = diagonal_ext(P);
    auto decR = local_factors(d.sub);
    auto ms = msupp(d, decR);
    REQUIRE(ms.size() == 1);
    CHECK(ms[0].residue_size == 2);

    auto e = full_extension(make_zmod(6));
    CHECK(msupp(e, local_factors(e.sub)).empty());

    // (F2 x F3) embedded in F2^2 x F3 diagonally on the F2 part
    auto S = make_product({F2(), F2(), make_zmod(3)});
    std::vector<index_t> mem;
    for (index_t a = 0; a < 2; ++a)
        for (index_t b = 0; b < 3; ++b) mem.push_back(S->from_coords({a, a, b}));
    auto ext = make_extension(S, mem);
    auto ms2 = msupp(ext, local_factors(ext.sub));
    REQUIRE(ms2.size() == 1);
    CHECK(ms2[0].residue_size == 2);  // only the F2 slot is supported
}

TEST_CASE("closedness predicates") {
    auto d = dual_numbers_ext();
    auto c = closedness_predicates(d);
    CHECK_FALSE(c.seminormal);
    REQUIRE(c.seminormal_witness.has_value());  // x itself

    auto P = make_product({F2(), F2()});
    auto dp = diagonal_ext(P);
    auto cp = closedness_predicates(dp);
    CHECK(cp.seminormal);
    CHECK_FALSE(cp.t_closed);
    CHECK_FALSE(cp.u_closed);  // b=(1,0), r=1 in the subring

    // any strongly local pair is co-integrally closed
    auto P2 = make_product({F2(), F2(), F2()});
    auto d2 = diagonal_ext(P2);
    auto u2 = subring_units(d2.ambient, d2.members);
    REQUIRE(is_sl(d2));
    CHECK(is_co_integrally_closed(d2, u2, 4));

    // and the non-sl diagonal F3 pair is not (degree-2 witness exists)
    auto P3 = make_product({make_zmod(3), make_zmod(3)});
    auto d3 = diagonal_ext(P3);
    auto u3 = subring_units(d3.ambient, d3.members);
    CHECK_FALSE(is_co_integrally_closed(d3, u3, 4));
}

TEST_CASE("residual fibers") {
    auto P = make_product({F2(), F2()});
    auto d = diagonal_ext(P);
    auto res = residual_analysis(d, maximal_ideals(P));
    CHECK(res.infra_integral);
    CHECK_FALSE(res.i_extension);

    auto f4 = F4();
    auto e = diagonal_ext(f4);  // F2 in F4
    auto res2 = residual_analysis(e, maximal_ideals(f4));
    CHECK_FALSE(res2.infra_integral);
    CHECK(res2.i_extension);

    // image of the valid embedding: fibers F2->F2 (split), F4->F4
    auto S = make_poly_quot(F2(), {0, 1, 0, 0, 1}, "t");
    auto img = extension_generated(S, {S->from_coeffs({1, 1, 0, 1})});
    auto res3 = residual_analysis(img, maximal_ideals(S));
    CHECK(res3.infra_integral);
    CHECK_FALSE(res3.i_extension);
}

TEST_CASE("unit index and invertible modules") {
    auto P3 = make_product({make_zmod(3), make_zmod(3)});
    auto d3 = diagonal_ext(P3);
    auto def = sl_defect(d3, units(P3));
    CHECK(def.index == 2);
    CHECK(def.modules.size() == 2);

    auto f4 = F4();
    auto e = diagonal_ext(f4);
    auto def2 = sl_defect(e, units(f4));
    CHECK(def2.index == 3);
    CHECK(def2.modules.size() == 3);

    auto P2 = make_product({F2(), F2(), F2()});
    auto d2 = diagonal_ext(P2);
    auto def3 = sl_defect(d2, units(P2));
    CHECK(def3.index == 1);
    REQUIRE(def3.modules.size() == 1);
    CHECK(def3.modules[0] == d2.members.items());  // the module is R itself
}

TEST_CASE("aggregate reports") {
    auto S = make_poly_quot(F2(), {0, 1, 0, 0, 1}, "t");
    auto img = extension_generated(S, {S->from_coeffs({1, 1, 0, 1})});
    auto rep = analyze(img);
    CHECK(rep.sl);
    CHECK(rep.local);
    CHECK(rep.infra_integral == std::optional<bool>(true));
    CHECK(rep.seminormal == std::optional<bool>(true));
    CHECK(rep.sl_defect_index == 1);
    CHECK(rep.invertible_modules == 1);
    CHECK(rep.sub_size == 8);
    CHECK(rep.skipped.empty());

    auto d = dual_numbers_ext();
    auto rep2 = analyze(d);
    CHECK_FALSE(rep2.sl);
    CHECK(rep2.seminormal == std::optional<bool>(false));

    auto e = full_extension(make_zmod(9));
    auto rep3 = analyze(e);
    CHECK(rep3.sl);
    CHECK(rep3.seminormal == std::optional<bool>(true));
    CHECK(rep3.t_closed == std::optional<bool>(true));
    CHECK(rep3.u_closed == std::optional<bool>(true));
    CHECK(rep3.co_integrally_closed == std::optional<bool>(true));
    CHECK(rep3.sl_defect_index == 1);
}
