#pragma once

#include "morphism.hpp"
#include "ring.hpp"

namespace ringlab {

struct Ideal {
    RingPtr ring;
    IndexSet members;
    std::vector<index_t> gens;  // optional; empty means unspecified

    bool contains(index_t x) const { return members.contains(x); }
    std::size_t size() const { return members.size(); }
    bool is_proper() const { return members.size() < ring->size(); }

    std::string gens_str() const {
        std::string out = "(";
        const auto& shown = gens.empty() ? members.items() : gens;
        for (std::size_t i = 0; i < shown.size(); ++i) {
            if (i) out += ",";
            out += ring->format_element(shown[i]);
        }
        return out + ")";
    }
};

inline Ideal ideal_generated(RingPtr R, std::vector<index_t> gens) {
    std::vector<bool> in(R->size(), false);
    std::vector<index_t> mem{0};
    in[0] = true;
    auto push = [&](index_t x) {
        if (!in[x]) {
            in[x] = true;
            mem.push_back(x);
        }
    };
    for (index_t g : gens) push(g);
    for (std::size_t i = 0; i < mem.size(); ++i) {
        for (std::size_t j = 0; j <= i; ++j) push(R->add(mem[i], mem[j]));
        for (index_t r = 0; r < R->size(); ++r) push(R->mul(r, mem[i]));
    }
    IndexSet ms(R->size(), std::move(mem));
    return Ideal{std::move(R), std::move(ms), std::move(gens)};
}

inline Ideal ideal_from_members(RingPtr R, std::vector<index_t> members) {
    IndexSet ms(R->size(), std::move(members));
    return Ideal{std::move(R), std::move(ms), {}};
}

inline bool is_ideal(const RingPtr& R, const IndexSet& I) {
    if (!I.contains(0)) return false;
    for (index_t a : I.items()) {
        for (index_t b : I.items())
            if (!I.contains(R->add(a, b))) return false;
        for (index_t r = 0; r < R->size(); ++r)
            if (!I.contains(R->mul(r, a))) return false;
    }
    return true;
}

inline Ideal nilradical(const RingPtr& R, std::size_t scan_cap = default_limits().scan_cap) {
    if (R->size() > scan_cap) fail("too-large", "nilradical scan over cap");
    std::vector<index_t> mem;
    for (index_t x = 0; x < R->size(); ++x)
        if (R->is_nilpotent(x)) mem.push_back(x);
    return ideal_from_members(R, std::move(mem));
}

// all idempotents, and the primitive ones (atoms: e != 0 with ef in {0,e}
// for every idempotent f)
struct Idempotents {
    std::vector<index_t> all;
    std::vector<index_t> primitive;
};

inline Idempotents idempotents(const RingPtr& R) {
    Idempotents out;
    for (index_t e = 0; e < R->size(); ++e)
        if (R->mul(e, e) == e) out.all.push_back(e);
    for (index_t e : out.all) {
        if (e == 0) continue;
        bool atom = true;
        for (index_t f : out.all) {
            index_t ef = R->mul(e, f);
            if (ef != 0 && ef != e) {
                atom = false;
                break;
            }
        }
        if (atom) out.primitive.push_back(e);
    }
    return out;
}

// ---------------------------------------------------------------------------
// quotients

struct QuotientResult {
    std::shared_ptr<const QuotientRing> ring;
    RingMorphism projection;
};

inline QuotientResult quotient(const RingPtr& R, const Ideal& I) {
    if (!I.is_proper()) fail("invalid-quotient", "quotient by the whole ring");
    if (I.ring.get() != R.get()) fail("invalid-quotient", "ideal belongs to another ring");
    const index_t kUnset = ~index_t{0};
    std::vector<index_t> rep_of(R->size(), kUnset);
    for (index_t x = 0; x < R->size(); ++x) {
        if (rep_of[x] != kUnset) continue;
        // x is the least element of its coset (smaller ones already visited)
        rep_of[x] = x;
        for (index_t m : I.members.items()) rep_of[R->add(x, m)] = x;
    }
    std::vector<index_t> reps;
    std::vector<index_t> coset_of(R->size());
    for (index_t x = 0; x < R->size(); ++x)
        if (rep_of[x] == x) {
            coset_of[x] = index_t(reps.size());
            reps.push_back(x);
        }
    for (index_t x = 0; x < R->size(); ++x) coset_of[x] = coset_of[rep_of[x]];

    auto Q = std::make_shared<QuotientRing>(R, coset_of, reps,
                                            R->name() + "/" + I.gens_str());
    RingMorphism proj{R, Q, std::move(coset_of)};
    proj.injective = I.members.size() == 1;
    proj.surjective = true;
    return {std::move(Q), std::move(proj)};
}

// ---------------------------------------------------------------------------
// local structure

struct LocalFactor {
    index_t idempotent;                           // primitive idempotent e
    std::shared_ptr<const QuotientRing> factor;   // R/(1-e)R, isomorphic to Re
    RingMorphism projection;                      // R -> factor
    Ideal factor_maximal;                         // the factor's maximal ideal
};

struct LocalDecomposition {
    RingPtr ring;
    std::vector<LocalFactor> factors;
};

inline LocalDecomposition local_factors(const RingPtr& R) {
    auto idem = idempotents(R);
    LocalDecomposition dec{R, {}};
    index_t sum = 0;
    for (index_t e : idem.primitive) {
        for (index_t f : idem.primitive)
            if (e != f && R->mul(e, f) != 0)
                fail("axiom", "primitive idempotents not orthogonal in " + R->name());
        sum = R->add(sum, e);
    }
    if (sum != R->one())
        fail("axiom", "primitive idempotents do not sum to 1 in " + R->name());

    std::size_t product_size = 1;
    for (index_t e : idem.primitive) {
        auto ann = ideal_generated(R, {R->sub(R->one(), e)});
        auto q = quotient(R, ann);
        auto fu = units(q.ring);
        std::vector<index_t> nonunits;
        for (index_t x = 0; x < q.ring->size(); ++x)
            if (!fu.is_unit(x)) nonunits.push_back(x);
        Ideal fmax = ideal_from_members(q.ring, std::move(nonunits));
        if (!is_ideal(q.ring, fmax.members))
            fail("axiom", "factor at idempotent " + R->format_element(e) + " is not local");
        product_size *= q.ring->size();
        dec.factors.push_back(
            LocalFactor{e, q.ring, std::move(q.projection), std::move(fmax)});
    }
    if (product_size != R->size())
        fail("axiom", "local factor sizes do not multiply to |R| in " + R->name());
    return dec;
}

// Maximal ideals via the semisimple quotient: kernels of the projections of
// R/J onto its field factors, pulled back along R -> R/J. Avoids any ideal
// enumeration. The Jacobson radical itself comes from the 1-ax criterion
// below the scan cap and from the local decomposition above it.
inline Ideal jacobson(const RingPtr& R, std::size_t scan_cap = 4096);

inline std::vector<Ideal> maximal_ideals(const RingPtr& R,
                                         std::size_t scan_cap = default_limits().scan_cap) {
    if (R->size() > scan_cap) fail("too-large", "maximal ideal scan over cap");
    Ideal J = jacobson(R);
    auto q = quotient(R, J);
    auto idem = idempotents(q.ring);
    std::vector<Ideal> out;
    for (index_t e : idem.primitive) {
        std::vector<index_t> mem;
        for (index_t x = 0; x < R->size(); ++x)
            if (q.ring->mul(q.projection(x), e) == 0) mem.push_back(x);
        out.push_back(ideal_from_members(R, std::move(mem)));
    }
    std::sort(out.begin(), out.end(), [](const Ideal& a, const Ideal& b) {
        return a.members.items() < b.members.items();
    });
    return out;
}

inline Ideal jacobson(const RingPtr& R, std::size_t scan_cap) {
    std::vector<index_t> mem;
    if (R->size() <= scan_cap) {
        auto u = units(R);
        for (index_t x = 0; x < R->size(); ++x) {
            bool in = true;
            for (index_t a = 0; a < R->size(); ++a)
                if (!u.is_unit(R->sub(R->one(), R->mul(a, x)))) {
                    in = false;
                    break;
                }
            if (in) mem.push_back(x);
        }
    } else {
        auto dec = local_factors(R);
        for (index_t x = 0; x < R->size(); ++x) {
            bool in = true;
            for (const auto& f : dec.factors)
                if (!f.factor_maximal.contains(f.projection(x))) {
                    in = false;
                    break;
                }
            if (in) mem.push_back(x);
        }
    }
    return ideal_from_members(R, std::move(mem));
}

// Executes the unit-witness criterion for J-regularity: for each x a partner
// y with xy in J(R) and x+y a unit. Always succeeds for finite rings; the
// witness map is the payload.
struct JRegularWitness {
    bool ok = false;
    std::vector<index_t> partner;  // x -> y
};

inline JRegularWitness j_regular_witness(const RingPtr& R,
                                         std::size_t scan_cap = default_limits().scan_cap) {
    if (R->size() > scan_cap) fail("too-large", "witness scan over cap");
    Ideal J = jacobson(R);
    auto u = units(R);
    JRegularWitness w;
    w.partner.assign(R->size(), 0);
    for (index_t x = 0; x < R->size(); ++x) {
        bool found = false;
        for (index_t y = 0; y < R->size(); ++y)
            if (J.contains(R->mul(x, y)) && u.is_unit(R->add(x, y))) {
                w.partner[x] = y;
                found = true;
                break;
            }
        if (!found) return w;  // ok stays false
    }
    w.ok = true;
    return w;
}

}  // namespace ringlab
