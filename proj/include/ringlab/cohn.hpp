#pragma once

#include "ideal.hpp"
#include "poly.hpp"

namespace ringlab {

// Exact model of the shifted ring R[X]/XI[X] and of the multi-slot variant
// with one indeterminate per maximal ideal. Elements are a head in R plus a
// finitely supported tail per slot; the tail coefficient k lives in the slot
// quotient and stands for the X^(k+1) term. Arithmetic never truncates.
struct ShiftedRing {
    RingPtr base;
    std::vector<Ideal> slot_ideals;                 // I, or Max(R) for the multi-slot ring
    std::vector<RingPtr> slot_quot;                 // R/I_s
    std::vector<std::vector<index_t>> slot_proj;    // base index -> quotient index
    bool multi_slot = false;

    std::size_t slots() const { return slot_quot.size(); }
    std::string name() const {
        if (multi_slot) return base->name() + " cohn<" + std::to_string(slots()) + ">";
        return base->name() + " // " + slot_ideals[0].gens_str();
    }
};

struct CohnElt {
    index_t head = 0;
    std::vector<std::vector<index_t>> tails;  // per slot, ascending, normalized

    bool operator==(const CohnElt& o) const { return head == o.head && tails == o.tails; }
    bool tail_is_zero() const {
        for (const auto& t : tails)
            if (!t.empty()) return false;
        return true;
    }
};

namespace shifted {

inline CohnElt make(const ShiftedRing& SR, index_t head) {
    return CohnElt{head, std::vector<std::vector<index_t>>(SR.slots())};
}

inline CohnElt one(const ShiftedRing& SR) { return make(SR, SR.base->one()); }
inline CohnElt zero(const ShiftedRing& SR) { return make(SR, 0); }

// the class of the slot indeterminate x_s
inline CohnElt slot_gen(const ShiftedRing& SR, std::size_t s) {
    auto e = make(SR, 0);
    e.tails[s].push_back(SR.slot_quot[s]->one());
    return e;
}

inline void normalize(CohnElt& e) {
    for (auto& t : e.tails)
        while (!t.empty() && t.back() == 0) t.pop_back();
}

inline CohnElt add(const ShiftedRing& SR, const CohnElt& a, const CohnElt& b) {
    CohnElt out = make(SR, SR.base->add(a.head, b.head));
    for (std::size_t s = 0; s < SR.slots(); ++s) {
        const auto& Q = SR.slot_quot[s];
        const auto& x = a.tails[s];
        const auto& y = b.tails[s];
        std::vector<index_t> t(std::max(x.size(), y.size()), 0);
        for (std::size_t k = 0; k < t.size(); ++k)
            t[k] = Q->add(k < x.size() ? x[k] : 0, k < y.size() ? y[k] : 0);
        out.tails[s] = std::move(t);
    }
    normalize(out);
    return out;
}

inline CohnElt neg(const ShiftedRing& SR, const CohnElt& a) {
    CohnElt out = make(SR, SR.base->neg(a.head));
    for (std::size_t s = 0; s < SR.slots(); ++s) {
        out.tails[s] = a.tails[s];
        for (auto& c : out.tails[s]) c = SR.slot_quot[s]->neg(c);
    }
    return out;
}

inline CohnElt sub(const ShiftedRing& SR, const CohnElt& a, const CohnElt& b) {
    return add(SR, a, neg(SR, b));
}

// per-slot law: tail(ab) = abar*tail(b) + bbar*tail(a) + X*(tail(a)*tail(b));
// cross-slot tail products vanish
inline CohnElt mul(const ShiftedRing& SR, const CohnElt& a, const CohnElt& b) {
    CohnElt out = make(SR, SR.base->mul(a.head, b.head));
    for (std::size_t s = 0; s < SR.slots(); ++s) {
        const auto& Q = SR.slot_quot[s];
        index_t abar = SR.slot_proj[s][a.head];
        index_t bbar = SR.slot_proj[s][b.head];
        const auto& x = a.tails[s];
        const auto& y = b.tails[s];
        std::size_t len = std::max({x.size(), y.size(),
                                    x.empty() || y.empty() ? std::size_t{0}
                                                           : x.size() + y.size()});
        std::vector<index_t> t(len, 0);
        for (std::size_t k = 0; k < y.size(); ++k) t[k] = Q->mul(abar, y[k]);
        for (std::size_t k = 0; k < x.size(); ++k)
            t[k] = Q->add(t[k], Q->mul(bbar, x[k]));
        // X^(i+1) * X^(j+1) = X^(i+j+2): shift the convolution by one slot
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i] == 0) continue;
            for (std::size_t j = 0; j < y.size(); ++j)
                t[i + j + 1] = Q->add(t[i + j + 1], Q->mul(x[i], y[j]));
        }
        out.tails[s] = std::move(t);
    }
    normalize(out);
    return out;
}

inline CohnElt pow(const ShiftedRing& SR, CohnElt a, std::uint64_t e) {
    CohnElt acc = one(SR);
    while (e) {
        if (e & 1) acc = mul(SR, acc, a);
        a = mul(SR, a, a);
        e >>= 1;
    }
    return acc;
}

inline std::string str(const ShiftedRing& SR, const CohnElt& e) {
    std::string out = SR.base->format_element(e.head);
    for (std::size_t s = 0; s < SR.slots(); ++s) {
        if (e.tails[s].empty()) continue;
        BoundedPoly t{SR.slot_quot[s], e.tails[s]};
        std::string label = SR.multi_slot ? "x_" + SR.slot_ideals[s].gens_str() : "x";
        out += " + " + label + "*(" + t.str() + ")";
    }
    return out;
}

}  // namespace shifted

inline ShiftedRing make_shifted(RingPtr R, Ideal I) {
    auto q = quotient(R, I);
    if (!nilradical(q.ring).members.items().empty() &&
        nilradical(q.ring).members.items() != std::vector<index_t>{0})
        fail("not-semiprime", "quotient by the ideal is not reduced");
    ShiftedRing SR;
    SR.base = std::move(R);
    SR.slot_quot.push_back(q.ring);
    SR.slot_proj.push_back(q.projection.map);
    SR.slot_ideals.push_back(std::move(I));
    return SR;
}

inline ShiftedRing make_cohn(RingPtr R) {
    ShiftedRing SR;
    SR.multi_slot = true;
    SR.base = R;
    for (auto& M : maximal_ideals(R)) {
        auto q = quotient(R, M);
        SR.slot_quot.push_back(q.ring);
        SR.slot_proj.push_back(q.projection.map);
        SR.slot_ideals.push_back(std::move(M));
    }
    return SR;
}

// ---------------------------------------------------------------------------
// enumeration at a tail-degree bound

inline std::vector<CohnElt> elements_at_bound(const ShiftedRing& SR, int d,
                                              std::size_t population_cap) {
    double pop = double(SR.base->size());
    for (std::size_t s = 0; s < SR.slots(); ++s)
        for (int k = 0; k < d; ++k) pop *= double(SR.slot_quot[s]->size());
    if (pop > double(population_cap)) fail("too-large", "population over cap");

    std::vector<CohnElt> out;
    out.reserve(std::size_t(pop));
    std::vector<std::uint64_t> tail_counts(SR.slots(), 1);
    for (std::size_t s = 0; s < SR.slots(); ++s)
        for (int k = 0; k < d; ++k) tail_counts[s] *= SR.slot_quot[s]->size();

    std::uint64_t combos = 1;
    for (auto t : tail_counts) combos *= t;
    for (index_t head = 0; head < SR.base->size(); ++head)
        for (std::uint64_t code = 0; code < combos; ++code) {
            CohnElt e = shifted::make(SR, head);
            std::uint64_t rest = code;
            for (std::size_t s = 0; s < SR.slots(); ++s) {
                std::uint64_t slot_code = rest % tail_counts[s];
                rest /= tail_counts[s];
                e.tails[s] = enum_tuple(SR.slot_quot[s], slot_code, std::size_t(d));
                while (!e.tails[s].empty() && e.tails[s].back() == 0) e.tails[s].pop_back();
            }
            out.push_back(std::move(e));
        }
    // normalization may alias tuples; dedupe to keep the population exact
    std::sort(out.begin(), out.end(), [](const CohnElt& a, const CohnElt& b) {
        return a.head != b.head ? a.head < b.head : a.tails < b.tails;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// verification reports

struct CohnReport {
    bool ok = true;
    std::uint64_t checked = 0;
    std::string violation;
};

// products of bounded elements hit 1 only on unit heads with empty tails
inline CohnReport verify_unit_rigidity(const ShiftedRing& SR, int d,
                                       const Limits& lim = default_limits()) {
    auto elems = elements_at_bound(SR, d, lim.pair_scan_cap);
    if (double(elems.size()) * double(elems.size()) > double(lim.pair_scan_cap))
        fail("too-large", "pair scan over cap");
    auto uR = units(SR.base);
    auto one = shifted::one(SR);
    CohnReport rep;
    for (const auto& y : elems)
        for (const auto& z : elems) {
            ++rep.checked;
            if (!(shifted::mul(SR, y, z) == one)) continue;
            bool expected = y.tail_is_zero() && z.tail_is_zero() && uR.is_unit(y.head) &&
                            SR.base->mul(y.head, z.head) == SR.base->one();
            if (!expected) {
                rep.ok = false;
                rep.violation = "unexpected unit " + shifted::str(SR, y);
                return rep;
            }
        }
    // conversely every unit of the base stays a unit
    for (index_t u : uR.units.items()) {
        auto prod = shifted::mul(SR, shifted::make(SR, u), shifted::make(SR, uR.inv(u)));
        if (!(prod == one)) {
            rep.ok = false;
            rep.violation = "base unit lost: " + SR.base->format_element(u);
            return rep;
        }
    }
    return rep;
}

// for units a,b and bounded f,g: af + bg + Xfg lands in I[X] only when f and
// g already have coefficients in I
inline CohnReport lemma_poly_lift_oracle(const RingPtr& R, const Ideal& I, int d,
                                         const Limits& lim = default_limits()) {
    auto uR = units(R);
    std::uint64_t polys = 1;
    for (int k = 0; k <= d; ++k) polys *= R->size();
    double pop = double(uR.units.size()) * double(uR.units.size()) * double(polys) *
                 double(polys);
    if (pop > double(lim.pair_scan_cap)) fail("too-large", "tuple scan over cap");

    auto in_ideal = [&](const BoundedPoly& p) {
        for (index_t c : p.c)
            if (!I.contains(c)) return false;
        return true;
    };
    CohnReport rep;
    for (index_t a : uR.units.items())
        for (index_t b : uR.units.items())
            for (std::uint64_t fc = 0; fc < polys; ++fc) {
                auto f = BoundedPoly::from(R, enum_tuple(R, fc, std::size_t(d) + 1));
                for (std::uint64_t gc = 0; gc < polys; ++gc) {
                    auto g = BoundedPoly::from(R, enum_tuple(R, gc, std::size_t(d) + 1));
                    ++rep.checked;
                    auto lhs = poly_add(
                        poly_add(poly_mul(BoundedPoly::from(R, {a}), f),
                                 poly_mul(BoundedPoly::from(R, {b}), g)),
                        poly_shift(poly_mul(f, g)));
                    if (!in_ideal(lhs)) continue;
                    if (!in_ideal(f) || !in_ideal(g)) {
                        rep.ok = false;
                        rep.violation = "lift fails at f=" + f.str() + ", g=" + g.str();
                        return rep;
                    }
                }
            }
    return rep;
}

// conductor trace: t kills every slot generator iff t lies in every slot ideal
inline CohnReport verify_conductor(const ShiftedRing& SR) {
    CohnReport rep;
    IndexSet expected = SR.slot_ideals[0].members;
    for (std::size_t s = 1; s < SR.slots(); ++s)
        expected = IndexSet::intersect(expected, SR.slot_ideals[s].members);

    std::vector<index_t> killed;
    for (index_t t = 0; t < SR.base->size(); ++t) {
        bool kills_all = true;
        for (std::size_t s = 0; s < SR.slots(); ++s) {
            auto prod = shifted::mul(SR, shifted::make(SR, t), shifted::slot_gen(SR, s));
            ++rep.checked;
            if (!(prod == shifted::zero(SR))) {
                kills_all = false;
                break;
            }
        }
        if (kills_all) killed.push_back(t);
    }
    if (!(IndexSet(SR.base->size(), std::move(killed)) == expected)) {
        rep.ok = false;
        rep.violation = "conductor trace differs from the slot intersection";
    }
    return rep;
}

// every nonunit head is annihilated by some nonzero slot generator
inline CohnReport verify_zerodivisors(const ShiftedRing& SR) {
    if (!SR.multi_slot) fail("invalid-ring", "zerodivisor witnesses need the maximal slots");
    auto uR = units(SR.base);
    CohnReport rep;
    for (index_t y = 0; y < SR.base->size(); ++y) {
        if (uR.is_unit(y)) continue;
        bool witnessed = false;
        for (std::size_t s = 0; s < SR.slots(); ++s) {
            if (!SR.slot_ideals[s].contains(y)) continue;
            auto x = shifted::slot_gen(SR, s);
            ++rep.checked;
            if (shifted::mul(SR, shifted::make(SR, y), x) == shifted::zero(SR) &&
                !(x == shifted::zero(SR))) {
                witnessed = true;
                break;
            }
        }
        if (!witnessed) {
            rep.ok = false;
            rep.violation = "missing-witness for " + SR.base->format_element(y);
            return rep;
        }
    }
    return rep;
}

// no bounded element with a nonzero tail satisfies both closure conditions
inline CohnReport verify_t_closed(const ShiftedRing& SR, int d,
                                  const Limits& lim = default_limits()) {
    auto elems = elements_at_bound(SR, d, lim.pair_scan_cap);
    CohnReport rep;
    for (const auto& y : elems) {
        if (y.tail_is_zero()) continue;
        auto y2 = shifted::mul(SR, y, y);
        auto y3 = shifted::mul(SR, y2, y);
        for (index_t r = 0; r < SR.base->size(); ++r) {
            ++rep.checked;
            auto rb = shifted::make(SR, r);
            auto p = shifted::sub(SR, y2, shifted::mul(SR, rb, y));
            auto q = shifted::sub(SR, y3, shifted::mul(SR, rb, y2));
            if (p.tail_is_zero() && q.tail_is_zero()) {
                rep.ok = false;
                rep.violation = "closure violation at " + shifted::str(SR, y) +
                                " with r=" + SR.base->format_element(r);
                return rep;
            }
        }
    }
    return rep;
}

// radical-membership trace at the bound equals J of the base: heads in J with
// empty tails pass the 1-zy unit test against every bounded z, everything
// else fails with an explicit witness
inline CohnReport verify_jacobson_membership(const ShiftedRing& SR, int d,
                                             const Limits& lim = default_limits()) {
    Ideal J = jacobson(SR.base);
    auto uR = units(SR.base);
    auto elems = elements_at_bound(SR, d, lim.pair_scan_cap);
    auto one = shifted::one(SR);
    CohnReport rep;

    auto unit_at_bound = [&](const CohnElt& w) {
        return w.tail_is_zero() && uR.is_unit(w.head);
    };

    for (const auto& w : elems) {
        bool expected_in = w.tail_is_zero() && J.contains(w.head);
        if (expected_in) {
            for (const auto& z : elems) {
                ++rep.checked;
                auto t = shifted::sub(SR, one, shifted::mul(SR, z, w));
                if (!unit_at_bound(t)) {
                    rep.ok = false;
                    rep.violation = "radical member rejected: " + shifted::str(SR, w);
                    return rep;
                }
            }
        } else {
            // find the failing witness z
            CohnElt z = one;
            if (w.tail_is_zero()) {
                bool found = false;
                for (index_t a = 0; a < SR.base->size() && !found; ++a)
                    if (!uR.is_unit(SR.base->sub(SR.base->one(), SR.base->mul(a, w.head)))) {
                        z = shifted::make(SR, a);
                        found = true;
                    }
                if (!found) {
                    rep.ok = false;
                    rep.violation = "no base witness for " + shifted::str(SR, w);
                    return rep;
                }
            }
            ++rep.checked;
            auto t = shifted::sub(SR, one, shifted::mul(SR, z, w));
            if (unit_at_bound(t)) {
                rep.ok = false;
                rep.violation = "nonmember passed: " + shifted::str(SR, w);
                return rep;
            }
        }
    }
    return rep;
}

// bounded reducedness: squaring chains from bounded nonzero elements never
// reach zero when the base is reduced
inline CohnReport verify_reduced(const ShiftedRing& SR, int d, int squarings = 6,
                                 const Limits& lim = default_limits()) {
    auto elems = elements_at_bound(SR, d, lim.pair_scan_cap);
    CohnReport rep;
    for (const auto& y : elems) {
        if (y == shifted::zero(SR)) continue;
        CohnElt x = y;
        for (int k = 0; k < squarings; ++k) {
            x = shifted::mul(SR, x, x);
            ++rep.checked;
            if (x == shifted::zero(SR)) {
                rep.ok = false;
                rep.violation = "nilpotent found: " + shifted::str(SR, y);
                return rep;
            }
        }
    }
    return rep;
}

// commuting square for an extension with matched semiprime ideals: mapping
// heads along the inclusion and tail coefficients along R/I -> S/K preserves
// arithmetic, and the bounded unit sets correspond exactly when the base
// extension shares its units
struct ShiftedTransferReport {
    bool ok = true;
    bool base_sl = false;
    bool bounded_sl = false;
    std::string violation;
};

inline ShiftedTransferReport verify_sl_transfer(const Extension& e, const Ideal& K_of_S,
                                                int d, std::uint64_t seed,
                                                const Limits& lim = default_limits()) {
    const auto& S = e.ambient;
    // I = R meet K as an ideal of the subring
    std::vector<index_t> Imem;
    for (index_t r : K_of_S.members.items())
        if (e.members.contains(r)) Imem.push_back(e.sub->from_ambient(r));
    Ideal I = ideal_from_members(e.sub, Imem);

    auto SR = make_shifted(e.sub, I);
    auto SS = make_shifted(S, K_of_S);

    // coefficient map R/I -> S/K  (well defined since I = R meet K)
    std::vector<index_t> cmap(SR.slot_quot[0]->size());
    {
        auto qR = std::dynamic_pointer_cast<const QuotientRing>(SR.slot_quot[0]);
        for (index_t c = 0; c < qR->size(); ++c)
            cmap[c] = SS.slot_proj[0][e.sub->to_ambient(qR->rep(c))];
    }
    auto lift = [&](const CohnElt& x) {
        CohnElt out = shifted::make(SS, e.sub->to_ambient(x.head));
        out.tails[0].reserve(x.tails[0].size());
        for (index_t c : x.tails[0]) out.tails[0].push_back(cmap[c]);
        shifted::normalize(out);
        return out;
    };

    ShiftedTransferReport rep;
    auto uS = units(S);
    rep.base_sl = is_sl(e, uS);

    // the square commutes on random bounded pairs
    auto elems = elements_at_bound(SR, d, lim.pair_scan_cap);
    Rng rng(seed);
    for (int t = 0; t < 200; ++t) {
        const auto& a = elems[rng.below(elems.size())];
        const auto& b = elems[rng.below(elems.size())];
        if (!(lift(shifted::mul(SR, a, b)) == shifted::mul(SS, lift(a), lift(b))) ||
            !(lift(shifted::add(SR, a, b)) == shifted::add(SS, lift(a), lift(b)))) {
            rep.ok = false;
            rep.violation = "square does not commute";
            return rep;
        }
    }

    // bounded unit sets: rigid on both sides, so they are the base unit sets
    auto rigidR = verify_unit_rigidity(SR, d, lim);
    auto rigidS = verify_unit_rigidity(SS, d, lim);
    if (!rigidR.ok || !rigidS.ok) {
        rep.ok = false;
        rep.violation = "rigidity failed: " + rigidR.violation + rigidS.violation;
        return rep;
    }
    auto uR_amb = subring_units(S, e.members);
    rep.bounded_sl = uR_amb == uS.units;
    if (rep.base_sl != rep.bounded_sl) {
        rep.ok = false;
        rep.violation = "bounded transfer disagrees with the base extension";
    }
    return rep;
}

}  // namespace ringlab
