#pragma once

#include "ring.hpp"

namespace ringlab {

// A validated unital ring homomorphism, stored as a total map on source indices.
struct RingMorphism {
    RingPtr source;
    RingPtr target;
    std::vector<index_t> map;
    bool injective = false;
    bool surjective = false;

    index_t operator()(index_t x) const { return map[x]; }
};

namespace detail {

inline void set_flags(RingMorphism& f) {
    std::vector<bool> hit(f.target->size(), false);
    std::size_t distinct = 0;
    for (index_t y : f.map)
        if (!hit[y]) {
            hit[y] = true;
            ++distinct;
        }
    f.injective = distinct == f.source->size();
    f.surjective = distinct == f.target->size();
}

inline void validate_pairwise(const RingMorphism& f, std::size_t cap) {
    const auto& R = *f.source;
    const auto& S = *f.target;
    if (f.map.size() != R.size()) fail("not-a-homomorphism", "map is not total");
    if (f.map[R.zero()] != S.zero()) fail("not-a-homomorphism", "f(0) != 0");
    if (f.map[R.one()] != S.one()) fail("not-a-homomorphism", "f(1) != 1");
    if (R.size() > cap) return;  // structural validation already done by the builder
    for (index_t a = 0; a < R.size(); ++a)
        for (index_t b = 0; b < R.size(); ++b) {
            if (f.map[R.add(a, b)] != S.add(f.map[a], f.map[b]))
                fail("not-a-homomorphism",
                     "additivity fails at (" + R.format_element(a) + ", " +
                         R.format_element(b) + ")");
            if (f.map[R.mul(a, b)] != S.mul(f.map[a], f.map[b]))
                fail("not-a-homomorphism",
                     "multiplicativity fails at (" + R.format_element(a) + ", " +
                         R.format_element(b) + ")");
        }
}

}  // namespace detail

inline RingMorphism make_morphism(RingPtr R, RingPtr S, std::vector<index_t> full_map,
                                  std::size_t check_cap = default_limits().hom_check_cap) {
    RingMorphism f{std::move(R), std::move(S), std::move(full_map)};
    detail::validate_pairwise(f, check_cap);
    detail::set_flags(f);
    return f;
}

// Morphism out of base[y]/(m) determined by the image of y. Well defined iff
// the base maps through k -> k*1_S (characteristic divides the base modulus)
// and m(image) = 0 in S; both are checked, which fully determines a
// homomorphism, and pairwise validation is repeated below the cap.
inline RingMorphism make_morphism_gen(const std::shared_ptr<const PolyQuotRing>& R, RingPtr S,
                                      index_t gen_image,
                                      std::size_t check_cap = default_limits().hom_check_cap) {
    auto base = std::dynamic_pointer_cast<const ZmodRing>(R->base());
    if (!base) fail("not-well-defined", "generator images need a modular coefficient ring");

    // base coefficient c maps to c * 1_S; requires char(S) | modulus
    std::vector<index_t> base_img(base->size());
    index_t acc = S->zero();
    for (index_t c = 0; c < base->size(); ++c) {
        base_img[c] = acc;
        acc = S->add(acc, S->one());
    }
    if (acc != S->zero())
        fail("not-well-defined", "characteristic of target does not divide " + base->name());

    // modulus must vanish at the generator image
    const auto& m = R->modulus();
    index_t v = S->zero(), p = S->one();
    for (std::size_t k = 0; k < m.size(); ++k) {
        v = S->add(v, S->mul(base_img[m[k]], p));
        p = S->mul(p, gen_image);
    }
    if (v != S->zero())
        fail("not-well-defined", "relation violated: modulus does not vanish at " +
                                     S->format_element(gen_image));

    std::vector<index_t> map(R->size());
    for (index_t x = 0; x < R->size(); ++x) {
        auto cs = R->coeffs(x);
        index_t val = S->zero();
        for (std::size_t k = cs.size(); k-- > 0;)
            val = S->add(S->mul(val, gen_image), base_img[cs[k]]);
        map[x] = val;
    }
    return make_morphism(R, std::move(S), std::move(map), check_cap);
}

inline RingMorphism compose(const RingMorphism& g, const RingMorphism& f) {
    if (f.target.get() != g.source.get())
        fail("not-a-homomorphism", "composition domains do not match");
    std::vector<index_t> map(f.source->size());
    for (index_t x = 0; x < f.source->size(); ++x) map[x] = g.map[f.map[x]];
    RingMorphism h{f.source, g.target, std::move(map)};
    detail::set_flags(h);
    return h;
}

inline RingMorphism identity_morphism(RingPtr R) {
    std::vector<index_t> map(R->size());
    std::iota(map.begin(), map.end(), 0);
    RingMorphism f{R, R, std::move(map), true, true};
    return f;
}

// embedding of a subring into its ambient ring
inline RingMorphism inclusion_morphism(const std::shared_ptr<const SubringRing>& sub) {
    std::vector<index_t> map(sub->members().begin(), sub->members().end());
    RingMorphism f{sub, sub->ambient(), std::move(map)};
    f.injective = true;
    f.surjective = sub->size() == sub->ambient()->size();
    return f;
}

// f is local when units pull back to units
inline bool is_local(const RingMorphism& f, const UnitGroup& uR, const UnitGroup& uS) {
    for (index_t x = 0; x < f.source->size(); ++x)
        if (uS.is_unit(f.map[x]) != uR.is_unit(x)) return false;
    return true;
}

inline bool is_local(const RingMorphism& f) {
    return is_local(f, units(f.source), units(f.target));
}

// f is strongly local when it maps the unit group onto the target's
inline bool is_sl(const RingMorphism& f, const UnitGroup& uR, const UnitGroup& uS) {
    std::vector<index_t> img;
    img.reserve(uR.units.size());
    for (index_t u : uR.units.items()) img.push_back(f.map[u]);
    return IndexSet(f.target->size(), std::move(img)) == uS.units;
}

inline bool is_sl(const RingMorphism& f) { return is_sl(f, units(f.source), units(f.target)); }

}  // namespace ringlab
