#include <catch2/catch_amalgamated.hpp>

#include "ringlab/lattice.hpp"

using namespace ringlab;

namespace {

auto F2() { return make_zmod(2); }
auto F4() { return make_poly_quot(make_zmod(2), {1, 1, 1}); }

Extension diagonal_ext(RingPtr S) { return extension_generated(std::move(S), {}); }

}  // namespace

TEST_CASE("enumeration of intermediate rings") {
    auto P2 = make_product({F2(), F2()});
    auto lat2 = intermediate_rings(diagonal_ext(P2));
    CHECK(lat2.members.size() == 2);  // minimal extension

    auto lat4 = intermediate_rings(diagonal_ext(F4()));
    CHECK(lat4.members.size() == 2);

    auto P3 = make_product({F2(), F2(), F2()});
    auto lat3 = intermediate_rings(diagonal_ext(P3));
    CHECK(lat3.members.size() == 5);  // base, three coordinate merges, top

    // every member is closed and contains the base
    for (const auto& m : lat3.members) {
        CHECK(closure_members(P3, m) == m);
        CHECK(std::includes(m.begin(), m.end(), lat3.members[lat3.base_index].begin(),
                            lat3.members[lat3.base_index].end()));
    }
}

TEST_CASE("closure operators") {
    auto D = make_poly_quot(F2(), {0, 0, 1});  // dual numbers
    auto ed = diagonal_ext(D);
    CHECK(seminormalization(ed).size() == D->size());  // subintegral: closure is all of S

    auto P2 = make_product({F2(), F2()});
    auto e2 = diagonal_ext(P2);
    CHECK(seminormalization(e2).size() == 2);   // stays at the base
    CHECK(t_closure(e2).size() == 4);           // b=(1,0), r=1 qualifies
    CHECK(u_closure(e2).size() == 4);

    auto full = full_extension(make_zmod(9));
    CHECK(seminormalization(full).size() == 9);
    CHECK(t_closure(full).size() == 9);

    // u-closure always sits inside t-closure
    std::vector<Extension> pool{diagonal_ext(make_product({make_zmod(3), make_zmod(3)})),
                                diagonal_ext(make_product({F2(), F4()})), e2, ed};
    for (const auto& e : pool) {
        auto uc = u_closure(e);
        auto tc = t_closure(e);
        CHECK(std::includes(tc.begin(), tc.end(), uc.begin(), uc.end()));
    }
}

TEST_CASE("smallest strongly local subextension") {
    auto P = make_product({F2(), F2(), F2()});
    auto e = diagonal_ext(P);
    CHECK(sl_bottom(e).size() == 2);  // units already in the base

    auto f4 = F4();
    CHECK(sl_bottom(diagonal_ext(f4)).size() == 4);  // three units generate everything

    auto P3 = make_product({make_zmod(3), make_zmod(3)});
    CHECK(sl_bottom(diagonal_ext(P3)).size() == 9);

    // the bottom is strongly local in S and sits inside every member that is
    for (auto S : std::vector<RingPtr>{P, f4, P3}) {
        auto ext = diagonal_ext(S);
        auto bottom = sl_bottom(ext);
        auto uS = units(S);
        CHECK(is_sl(make_extension(S, bottom), uS));
        auto lat = intermediate_rings(ext);
        for (const auto& m : lat.members) {
            auto uM = subring_units(S, IndexSet(S->size(), m));
            if (uM == uS.units)  // member strongly local under S
                CHECK(std::includes(m.begin(), m.end(), bottom.begin(), bottom.end()));
        }
    }
}

TEST_CASE("greatest strongly local subextension") {
    auto P3 = make_product({F2(), F2(), F2()});
    auto lat = intermediate_rings(diagonal_ext(P3));
    auto msl = msl_subextension(lat);
    CHECK(msl.unique_maximal);
    CHECK(msl.formulas_hold);
    CHECK(lat.members[msl.member_index].size() == 8);  // all of S

    auto D = make_poly_quot(F2(), {0, 0, 1});
    auto latD = intermediate_rings(diagonal_ext(D));
    auto mslD = msl_subextension(latD);
    CHECK(mslD.unique_maximal);
    CHECK(latD.members[mslD.member_index].size() == 2);  // only the base

    auto P33 = make_product({make_zmod(3), make_zmod(3)});
    auto lat33 = intermediate_rings(diagonal_ext(P33));
    CHECK(lat33.members.size() == 2);
    auto msl33 = msl_subextension(lat33);
    CHECK(msl33.unique_maximal);
    CHECK(lat33.members[msl33.member_index].size() == 3);  // the base itself

    // greatest seminormal infra-integral member behaves the same way
    auto sni = sni_subextension(lat);
    CHECK(sni.unique_maximal);
    CHECK(sni.formulas_hold);
    CHECK(lat.members[sni.member_index].size() == 8);
}

TEST_CASE("classification of minimal steps") {
    auto P2 = make_product({F2(), F2()});
    auto lat = intermediate_rings(diagonal_ext(P2));
    auto step = classify_minimal(P2, lat.members[lat.base_index], lat.members[lat.top_index]);
    CHECK(step.kind == MinimalKind::Decomposed);
    CHECK(step.conductor_residue == 2);

    auto f4 = F4();
    auto latF = intermediate_rings(diagonal_ext(f4));
    auto stepF =
        classify_minimal(f4, latF.members[latF.base_index], latF.members[latF.top_index]);
    CHECK(stepF.kind == MinimalKind::Inert);

    auto D = make_poly_quot(F2(), {0, 0, 1});
    auto latD = intermediate_rings(diagonal_ext(D));
    auto stepD =
        classify_minimal(D, latD.members[latD.base_index], latD.members[latD.top_index]);
    CHECK(stepD.kind == MinimalKind::Ramified);
}

TEST_CASE("boolean lattice test") {
    auto P2 = make_product({F2(), F2()});
    CHECK(is_boolean_lattice(intermediate_rings(diagonal_ext(P2))));

    // the five-member lattice over F2^3 is M3-shaped: not distributive
    auto P3 = make_product({F2(), F2(), F2()});
    CHECK_FALSE(is_boolean_lattice(intermediate_rings(diagonal_ext(P3))));
}

TEST_CASE("subring generated by the units") {
    CHECK(unit_generated_check(F4()).equals_ring);  // local: F[U(R)] = R
    CHECK(unit_generated_check(make_zmod(8)).equals_ring);
    CHECK(unit_generated_check(make_zmod(9)).equals_ring);

    auto P = make_product({F2(), F2()});
    auto c = unit_generated_check(P);
    CHECK(c.sl);
    CHECK(c.generated_size == 2);  // diagonal F2
    CHECK_FALSE(c.equals_ring);

    std::vector<RingPtr> pool{make_zmod(6),
                              make_product({F2(), F4()}),
                              make_product({make_zmod(4), F2()}),
                              make_idealization(make_zmod(4), {2}),
                              make_poly_quot(F2(), {0, 1, 0, 0, 1}, "t")};
    for (const auto& R : pool) CHECK(unit_generated_check(R).sl);
}

TEST_CASE("pairwise products of well-behaved members stay well-behaved") {
    auto P3 = make_product({F2(), F2(), F2()});
    auto ext = diagonal_ext(P3);
    auto lat = intermediate_rings(ext);
    auto uS = units(P3);

    auto sl_over_base = [&](const std::vector<index_t>& m) {
        auto uM = subring_units(P3, IndexSet(P3->size(), m));
        auto uB = subring_units(P3, ext.members);
        return uM == uB;
    };
    for (std::size_t i = 0; i < lat.members.size(); ++i)
        for (std::size_t j = 0; j < lat.members.size(); ++j) {
            if (!sl_over_base(lat.members[i]) || !sl_over_base(lat.members[j])) continue;
            auto merged = lat.members[i];
            merged.insert(merged.end(), lat.members[j].begin(), lat.members[j].end());
            auto prod = closure_members(P3, merged);
            CHECK(sl_over_base(prod));
        }
}
