#include <catch2/catch_amalgamated.hpp>

#include "ringlab/poly.hpp"

using namespace ringlab;

namespace {

auto F2() { return make_zmod(2); }
auto F3() { return make_zmod(3); }
auto F4() { return make_poly_quot(make_zmod(2), {1, 1, 1}); }

// oracle: p has an inverse among all q of degree <= dq
bool invertible_by_scan(const BoundedPoly& p, int dq) {
    const auto& R = p.base;
    std::uint64_t total = 1;
    for (int k = 0; k <= dq; ++k) total *= R->size();
    auto one = BoundedPoly::from(R, {R->one()});
    for (std::uint64_t code = 0; code < total; ++code)
        if (poly_mul(p, BoundedPoly::from(R, enum_tuple(R, code, std::size_t(dq) + 1))) == one)
            return true;
    return false;
}

// oracle: root-free and no monic factor pair (exhaustive product table)
bool irreducible_by_products(const BoundedPoly& f) {
    const auto& F = f.base;
    for (int d1 = 1; d1 <= f.degree() / 2; ++d1) {
        int d2 = f.degree() - d1;
        std::uint64_t c1 = 1, c2 = 1;
        for (int k = 0; k < d1; ++k) c1 *= F->size();
        for (int k = 0; k < d2; ++k) c2 *= F->size();
        for (std::uint64_t a = 0; a < c1; ++a) {
            auto ga = enum_tuple(F, a, std::size_t(d1));
            ga.push_back(F->one());
            auto pa = BoundedPoly::from(F, ga);
            for (std::uint64_t b = 0; b < c2; ++b) {
                auto gb = enum_tuple(F, b, std::size_t(d2));
                gb.push_back(F->one());
                if (poly_mul(pa, BoundedPoly::from(F, gb)) == f) return false;
            }
        }
    }
    return true;
}

}  // namespace

TEST_CASE("polynomial arithmetic basics") {
    auto R = make_zmod(4);
    auto p = BoundedPoly::from(R, {1, 2});
    auto sq = poly_mul(p, p);
    CHECK(sq == BoundedPoly::from(R, {1}));  // (1+2X)^2 = 1 over Z/4
    CHECK(poly_eval(p, 3) == 3);
    CHECK(poly_rem(BoundedPoly::from(R, {0, 0, 1}), BoundedPoly::from(R, {0, 1})).is_zero());
    CHECK(poly_content(BoundedPoly::from(R, {2, 2})).members.items() ==
          std::vector<index_t>{0, 2});
}

TEST_CASE("polynomial units match the nilpotent-tail description") {
    auto rep2 = poly_unit_check(F2(), 3);
    CHECK(rep2.matches_formula);
    CHECK(rep2.units.size() == 1);  // reduced base: constants only

    auto rep4 = poly_unit_check(make_zmod(4), 2);
    CHECK(rep4.matches_formula);
    // unit heads {1,3} x nilpotent tails {0,2}^2
    CHECK(rep4.units.size() == 2 * 4);

    auto rep8 = poly_unit_check(make_zmod(8), 2);
    CHECK(rep8.matches_formula);
    CHECK(rep8.units.size() == 4 * 16);

    // cross-check against the pair-scan oracle at a slack degree
    auto z4 = make_zmod(4);
    std::uint64_t total = 64;  // all p of degree <= 2
    for (std::uint64_t code = 0; code < total; ++code) {
        auto p = BoundedPoly::from(z4, enum_tuple(z4, code, 3));
        bool in_report = false;
        for (const auto& q : rep4.units) in_report |= q == p;
        CHECK(in_report == invertible_by_scan(p, 4));
    }
}

TEST_CASE("irreducibility by trial division") {
    auto f2 = F2();
    CHECK(is_irreducible(BoundedPoly::from(f2, {1, 1, 1})).irreducible);
    CHECK(is_irreducible(BoundedPoly::from(f2, {1, 1, 1, 1, 1})).irreducible);  // p = 5

    auto seven = is_irreducible(BoundedPoly::from(f2, {1, 1, 1, 1, 1, 1, 1}));  // p = 7
    REQUIRE_FALSE(seven.irreducible);
    std::vector<BoundedPoly> factors{seven.left, seven.right};
    auto matches = [&](std::vector<index_t> c) {
        auto want = BoundedPoly::from(f2, std::move(c));
        return factors[0] == want || factors[1] == want;
    };
    CHECK(matches({1, 1, 0, 1}));  // X^3+X+1
    CHECK(matches({1, 0, 1, 1}));  // X^3+X^2+1
    CHECK(poly_mul(seven.left, seven.right) ==
          BoundedPoly::from(f2, {1, 1, 1, 1, 1, 1, 1}));

    CHECK_THROWS_MATCHES(is_irreducible(BoundedPoly::from(make_zmod(4), {1, 0, 1})), error,
                         Catch::Matchers::Predicate<error>([](const error& e) {
                             return e.code() == "base-not-field";
                         }));
}

TEST_CASE("irreducibility agrees with the product-table oracle") {
    std::vector<RingPtr> fields{F2(), F3(), F4()};
    for (const auto& F : fields) {
        int max_deg = F->size() == 2 ? 6 : (F->size() == 3 ? 5 : 3);
        for (int dg = 2; dg <= max_deg; ++dg) {
            std::uint64_t count = 1;
            for (int k = 0; k < dg; ++k) count *= F->size();
            for (std::uint64_t code = 0; code < count; ++code) {
                auto cs = enum_tuple(F, code, std::size_t(dg));
                cs.push_back(F->one());
                auto f = BoundedPoly::from(F, cs);
                CHECK(is_irreducible(f).irreducible == irreducible_by_products(f));
            }
        }
    }
}

TEST_CASE("primitive roots") {
    CHECK(is_primitive_root(2, 3));
    CHECK(is_primitive_root(2, 5));
    CHECK_FALSE(is_primitive_root(2, 7));
    CHECK(is_primitive_root(2, 11));
    CHECK(is_primitive_root(2, 13));
    CHECK_FALSE(is_primitive_root(2, 17));
    CHECK_THROWS_MATCHES(is_primitive_root(2, 9), error,
                         Catch::Matchers::Predicate<error>([](const error& e) {
                             return e.code() == "p-not-prime";
                         }));

    // cyclotomic irreducibility instancewise equals primitivity of 2
    auto f2 = F2();
    for (std::uint64_t p : {3ull, 5ull, 7ull, 11ull, 13ull}) {
        std::vector<index_t> cs(std::size_t(p), 1);
        CHECK(is_irreducible(BoundedPoly::from(f2, cs)).irreducible ==
              is_primitive_root(2, p));
    }
}

TEST_CASE("monic maximal ideals") {
    auto z4 = make_zmod(4);
    auto M = ideal_generated(z4, {2});

    auto r1 = monic_maximal_ideal(z4, M, BoundedPoly::from(z4, {1, 1, 1}));
    REQUIRE(r1.ok);
    CHECK(r1.field_size == 4);
    CHECK(r1.residue_size == 2);

    auto r2 = monic_maximal_ideal(z4, M, BoundedPoly::from(z4, {0, 1}));
    REQUIRE(r2.ok);
    CHECK(r2.field_size == 2);

    auto r3 = monic_maximal_ideal(z4, M, BoundedPoly::from(z4, {1, 0, 1}));
    REQUIRE_FALSE(r3.ok);
    REQUIRE_FALSE(r3.reducibility.irreducible);
    CHECK(r3.reducibility.left == r3.reducibility.right);  // (X+1)^2 mod 2
}

TEST_CASE("cyclotomic embeddings") {
    auto r3 = cyclotomic_sl_construction(3, default_limits(), true);
    CHECK(r3.sl);
    CHECK(r3.embedding_count == 2);
    CHECK(units(RingPtr(r3.source)).units.size() == 3);
    CHECK(units(RingPtr(r3.target)).units.size() == 3);
    CHECK(r3.embedding(r3.source->from_coeffs({0, 1})) ==
          r3.target->from_coeffs({1, 1, 0, 1}));
    CHECK(r3.report.sl);
    CHECK(r3.report.infra_integral == std::optional<bool>(true));
    CHECK(r3.report.seminormal == std::optional<bool>(true));

    auto r5 = cyclotomic_sl_construction(5);
    CHECK(r5.sl);
    CHECK(units(RingPtr(r5.source)).units.size() == 15);
    CHECK(units(RingPtr(r5.target)).units.size() == 15);

    CHECK_THROWS_MATCHES(cyclotomic_sl_construction(7), error,
                         Catch::Matchers::Predicate<error>([](const error& e) {
                             return e.code() == "2-not-primitive";
                         }));
}

TEST_CASE("coordinate padding embeddings") {
    auto r1 = pad_construction(F3(), 1, 2);
    CHECK(r1.sl);
    CHECK(units(r1.source).units.size() == 2);
    CHECK(units(r1.target).units.size() == 2);

    auto r2 = pad_construction(make_zmod(4), 1, 3);
    CHECK(r2.sl);

    auto r3 = pad_construction(F4(), 2, 2);
    CHECK(r3.sl);  // n = m: componentwise identity
}
