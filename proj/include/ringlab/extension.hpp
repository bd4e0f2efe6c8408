#pragma once

#include "ideal.hpp"
#include "morphism.hpp"

namespace ringlab {

// An inclusion R <= S, held as the ambient ring plus R's member set. The
// subring is materialized lazily since most predicates run inside the ambient.
struct Extension {
    RingPtr ambient;                               // S
    IndexSet members;                              // R as a subset of S
    std::shared_ptr<const SubringRing> sub;        // R with its own index space

    bool full() const { return members.size() == ambient->size(); }
    std::string describe() const {
        return "sub<" + std::to_string(members.size()) + "> in " + ambient->name();
    }
};

inline Extension make_extension(RingPtr S, std::vector<index_t> member_indices) {
    auto sub = make_subring(S, std::move(member_indices));
    Extension e;
    e.ambient = std::move(S);
    e.members = IndexSet(e.ambient->size(),
                         {sub->members().begin(), sub->members().end()});
    e.sub = std::move(sub);
    return e;
}

inline Extension extension_from_subring(std::shared_ptr<const SubringRing> sub) {
    Extension e;
    e.ambient = sub->ambient();
    e.members = IndexSet(e.ambient->size(), {sub->members().begin(), sub->members().end()});
    e.sub = std::move(sub);
    return e;
}

inline Extension extension_generated(RingPtr S, std::vector<index_t> seed) {
    return extension_from_subring(subring_generated(std::move(S), std::move(seed)));
}

// the whole ring as an extension of itself (ambient view)
inline Extension full_extension(RingPtr S) {
    std::vector<index_t> all(S->size());
    std::iota(all.begin(), all.end(), 0);
    return make_extension(std::move(S), std::move(all));
}

// units of R computed inside the ambient: u in R with a partner in R
inline IndexSet subring_units(const RingPtr& S, const IndexSet& R) {
    std::vector<index_t> out;
    for (index_t u : R.items())
        for (index_t w : R.items())
            if (S->mul(u, w) == S->one()) {
                out.push_back(u);
                break;
            }
    return IndexSet(S->size(), std::move(out));
}

inline bool is_local(const Extension& e, const UnitGroup& uS) {
    // U(R) = U(S) meet R
    auto uR = subring_units(e.ambient, e.members);
    for (index_t x : e.members.items())
        if (uS.is_unit(x) != uR.contains(x)) return false;
    return true;
}

inline bool is_sl(const Extension& e, const UnitGroup& uS) {
    auto uR = subring_units(e.ambient, e.members);
    return uR == uS.units;
}

inline bool is_local(const Extension& e) { return is_local(e, units(e.ambient)); }
inline bool is_sl(const Extension& e) { return is_sl(e, units(e.ambient)); }

// conductor (R:S) = {s in S : sS inside R}, the largest common ideal
inline Ideal conductor(const Extension& e) {
    std::vector<index_t> mem;
    const auto& S = e.ambient;
    for (index_t s = 0; s < S->size(); ++s) {
        bool in = true;
        for (index_t t = 0; t < S->size(); ++t)
            if (!e.members.contains(S->mul(s, t))) {
                in = false;
                break;
            }
        if (in) mem.push_back(s);
    }
    return ideal_from_members(S, std::move(mem));
}

// maximal ideals of R whose local factor differs between R and S; for finite
// rings the localization at M is the corner ring cut by M's primitive
// idempotent, so support is a per-factor set comparison.
struct MSuppEntry {
    std::size_t factor;        // index into local_factors(R)
    index_t idempotent;        // primitive idempotent of R picking the factor
    Ideal maximal_of_sub;      // the maximal ideal of R (in R's own index space)
    std::size_t residue_size;  // |R/M|
};

inline std::vector<MSuppEntry> msupp(const Extension& e, const LocalDecomposition& decR) {
    std::vector<MSuppEntry> out;
    const auto& S = e.ambient;
    for (std::size_t fi = 0; fi < decR.factors.size(); ++fi) {
        const auto& f = decR.factors[fi];
        index_t e_amb = e.sub->to_ambient(f.idempotent);
        std::vector<index_t> Se, Re;
        for (index_t s = 0; s < S->size(); ++s) Se.push_back(S->mul(s, e_amb));
        for (index_t r : e.members.items()) Re.push_back(S->mul(r, e_amb));
        IndexSet Se_set(S->size(), std::move(Se)), Re_set(S->size(), std::move(Re));
        if (Se_set == Re_set) continue;
        // pull the factor's maximal ideal back to R
        std::vector<index_t> mem;
        for (index_t r = 0; r < e.sub->size(); ++r)
            if (f.factor_maximal.contains(f.projection(r))) mem.push_back(r);
        Ideal M = ideal_from_members(e.sub, std::move(mem));
        std::size_t residue = e.sub->size() / M.size();
        out.push_back(MSuppEntry{fi, f.idempotent, std::move(M), residue});
    }
    return out;
}

// factor-wise extension at a maximal ideal of R: Se over Re inside S/(1-e)S
inline Extension localized_extension(const Extension& e, index_t idem_sub) {
    const auto& S = e.ambient;
    index_t e_amb = e.sub->to_ambient(idem_sub);
    auto ann = ideal_generated(S, {S->sub(S->one(), e_amb)});
    auto q = quotient(S, ann);
    std::vector<index_t> mem;
    for (index_t r : e.members.items()) mem.push_back(q.projection(r));
    std::sort(mem.begin(), mem.end());
    mem.erase(std::unique(mem.begin(), mem.end()), mem.end());
    return make_extension(q.ring, std::move(mem));
}

// ---------------------------------------------------------------------------
// closedness predicates

struct Closedness {
    bool seminormal = true;
    bool t_closed = true;
    bool u_closed = true;
    std::optional<index_t> seminormal_witness, t_witness, u_witness;
};

inline Closedness closedness_predicates(const Extension& e,
                                        std::size_t scan_cap = default_limits().scan_cap) {
    const auto& S = e.ambient;
    if (S->size() > scan_cap) fail("too-large", "closedness scan over cap");
    Closedness c;
    for (index_t b = 0; b < S->size(); ++b) {
        if (e.members.contains(b)) continue;
        index_t b2 = S->mul(b, b), b3 = S->mul(b2, b);
        if (c.seminormal && e.members.contains(b2) && e.members.contains(b3)) {
            c.seminormal = false;
            c.seminormal_witness = b;
        }
        if (c.u_closed) {
            index_t p = S->sub(b2, b), q = S->sub(b3, b2);
            if (e.members.contains(p) && e.members.contains(q)) {
                c.u_closed = false;
                c.u_witness = b;
            }
        }
        if (c.t_closed) {
            for (index_t r : e.members.items()) {
                index_t p = S->sub(b2, S->mul(r, b));
                index_t q = S->sub(b3, S->mul(r, b2));
                if (e.members.contains(p) && e.members.contains(q)) {
                    c.t_closed = false;
                    c.t_witness = b;
                    break;
                }
            }
        }
    }
    return c;
}

// Comonic-root membership: s in S is a root of a comonic polynomial over R of
// degree <= d iff the R-module generated by s..s^d meets the units of R.
inline bool is_co_integrally_closed(const Extension& e, const IndexSet& unitsR_amb,
                                    int degree_bound,
                                    std::optional<index_t>* witness = nullptr) {
    const auto& S = e.ambient;
    for (index_t s = 0; s < S->size(); ++s) {
        if (e.members.contains(s)) continue;
        // additive closure of {r * s^i : r in R, 1 <= i <= d}
        std::vector<bool> in(S->size(), false);
        std::vector<index_t> mem{0};
        in[0] = true;
        index_t p = S->one();
        std::vector<index_t> gens;
        for (int i = 1; i <= degree_bound; ++i) {
            p = S->mul(p, s);
            for (index_t r : e.members.items()) gens.push_back(S->mul(r, p));
        }
        for (index_t g : gens)
            if (!in[g]) {
                in[g] = true;
                mem.push_back(g);
            }
        for (std::size_t i = 0; i < mem.size(); ++i)
            for (index_t g : gens) {
                index_t t = S->add(mem[i], g);
                if (!in[t]) {
                    in[t] = true;
                    mem.push_back(t);
                }
            }
        for (index_t m : mem)
            if (unitsR_amb.contains(m)) {
                // -p(0) = m for a unit p(0): s is a comonic root outside R
                if (witness) *witness = s;
                return false;
            }
    }
    return true;
}

// ---------------------------------------------------------------------------
// residual fibers

struct FiberRow {
    std::size_t max_index_S;        // which maximal ideal of S
    std::size_t residue_S;          // |S/N|
    std::size_t residue_R;          // |R/(N meet R)|
    std::vector<index_t> contraction;  // N meet R, ambient indices
};

struct ResidualAnalysis {
    bool infra_integral = true;
    bool i_extension = true;
    std::vector<FiberRow> fibers;
};

inline ResidualAnalysis residual_analysis(const Extension& e,
                                          const std::vector<Ideal>& maxS) {
    ResidualAnalysis out;
    std::vector<std::vector<index_t>> contractions;
    for (std::size_t ni = 0; ni < maxS.size(); ++ni) {
        const auto& N = maxS[ni];
        std::vector<index_t> cont;
        for (index_t r : e.members.items())
            if (N.contains(r)) cont.push_back(r);
        std::size_t residue_R = e.members.size() / cont.size();
        std::size_t residue_S = e.ambient->size() / N.size();
        if (residue_R != residue_S) out.infra_integral = false;
        contractions.push_back(cont);
        out.fibers.push_back(FiberRow{ni, residue_S, residue_R, std::move(cont)});
    }
    for (std::size_t i = 0; i < contractions.size(); ++i)
        for (std::size_t j = i + 1; j < contractions.size(); ++j)
            if (contractions[i] == contractions[j]) out.i_extension = false;
    return out;
}

// ---------------------------------------------------------------------------
// the unit-index defect and the invertible-module count

struct SlDefect {
    std::size_t index = 1;  // [U(S) : U(R)]
    std::vector<std::vector<index_t>> modules;  // distinct sets R*u
};

inline SlDefect sl_defect(const Extension& e, const UnitGroup& uS) {
    auto uR = subring_units(e.ambient, e.members);
    SlDefect d;
    d.index = uS.units.size() / uR.size();
    std::vector<std::vector<index_t>> mods;
    for (index_t u : uS.units.items()) {
        std::vector<index_t> m;
        m.reserve(e.members.size());
        for (index_t r : e.members.items()) m.push_back(e.ambient->mul(r, u));
        std::sort(m.begin(), m.end());
        mods.push_back(std::move(m));
    }
    std::sort(mods.begin(), mods.end());
    mods.erase(std::unique(mods.begin(), mods.end()), mods.end());
    d.modules = std::move(mods);
    return d;
}

// ---------------------------------------------------------------------------
// the aggregate report

struct ExtensionReport {
    std::string ambient_name;
    std::size_t ambient_size = 0, sub_size = 0;
    std::size_t ambient_units = 0, sub_units = 0;
    bool local = false, sl = false;
    std::optional<bool> seminormal, t_closed, u_closed, co_integrally_closed;
    std::optional<bool> infra_integral, i_extension;
    std::vector<index_t> conductor_members;
    std::vector<std::size_t> msupp_residues;  // |R/M| per supported maximal ideal
    std::size_t sl_defect_index = 1;
    std::size_t invertible_modules = 1;
    std::vector<FiberRow> fibers;
    std::vector<std::string> skipped;  // predicates skipped by caps
};

inline ExtensionReport analyze(const Extension& e,
                               const Limits& lim = default_limits()) {
    const auto& S = e.ambient;
    ExtensionReport rep;
    rep.ambient_name = S->name();
    rep.ambient_size = S->size();
    rep.sub_size = e.members.size();

    auto uS = units(S, lim.scan_cap);
    auto uR = subring_units(S, e.members);
    rep.ambient_units = uS.units.size();
    rep.sub_units = uR.size();
    rep.local = is_local(e, uS);
    rep.sl = uR == uS.units;

    auto defect = sl_defect(e, uS);
    rep.sl_defect_index = defect.index;
    rep.invertible_modules = defect.modules.size();

    rep.conductor_members = conductor(e).members.items();

    auto decR = local_factors(e.sub);
    for (const auto& entry : msupp(e, decR)) rep.msupp_residues.push_back(entry.residue_size);

    auto maxS = maximal_ideals(S, lim.scan_cap);
    auto res = residual_analysis(e, maxS);
    rep.infra_integral = res.infra_integral;
    rep.i_extension = res.i_extension;
    rep.fibers = std::move(res.fibers);

    if (S->size() <= lim.scan_cap) {
        auto c = closedness_predicates(e, lim.scan_cap);
        rep.seminormal = c.seminormal;
        rep.t_closed = c.t_closed;
        rep.u_closed = c.u_closed;
    } else {
        rep.skipped.push_back("seminormal");
        rep.skipped.push_back("t_closed");
        rep.skipped.push_back("u_closed");
    }

    if (S->size() <= lim.comonic_cap) {
        rep.co_integrally_closed = is_co_integrally_closed(e, uR, lim.comonic_degree);
    } else {
        rep.skipped.push_back("co_integrally_closed");
    }

    // consequences that hold for every strongly local pair
    if (rep.sl) {
        if (!rep.local) fail("consistency-violation", "sl extension not local");
        if (rep.sl_defect_index != 1)
            fail("consistency-violation", "sl extension with unit index > 1");
        auto nilS = nilradical(S, lim.scan_cap);
        std::vector<index_t> nilR_amb;
        for (index_t r : e.members.items())
            if (S->is_nilpotent(r)) nilR_amb.push_back(r);
        if (!(IndexSet(S->size(), std::move(nilR_amb)) == nilS.members))
            fail("consistency-violation", "sl extension with differing nilradicals");
        auto JS = jacobson(S);
        for (index_t x : JS.members.items())
            if (!e.members.contains(x))
                fail("consistency-violation", "J(S) escapes the subring in an sl pair");
    }
    return rep;
}

}  // namespace ringlab
