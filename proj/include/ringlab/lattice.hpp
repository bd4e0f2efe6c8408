#pragma once

#include "extension.hpp"

namespace ringlab {

// The interval [R,S] of intermediate rings, enumerated by seeded closure.
// Members are stored as sorted ambient index sets, ordered by (size, set).
struct SubringLattice {
    RingPtr ambient;
    std::vector<std::vector<index_t>> members;
    std::size_t base_index = 0, top_index = 0;
    std::vector<std::vector<bool>> leq;  // leq[i][j] : members[i] subset of members[j]

    std::size_t find(const std::vector<index_t>& set) const {
        for (std::size_t i = 0; i < members.size(); ++i)
            if (members[i] == set) return i;
        fail("internal", "set is not a lattice member");
    }

    bool covers(std::size_t lo, std::size_t hi) const {
        if (lo == hi || !leq[lo][hi]) return false;
        for (std::size_t k = 0; k < members.size(); ++k)
            if (k != lo && k != hi && leq[lo][k] && leq[k][hi]) return false;
        return true;
    }
};

inline SubringLattice intermediate_rings(const Extension& e,
                                         const Limits& lim = default_limits()) {
    const auto& S = e.ambient;
    if (S->size() > lim.lattice_cap)
        fail("too-large", "lattice enumeration over cap for " + S->name());

    SubringLattice lat;
    lat.ambient = S;
    std::vector<std::vector<index_t>> work{e.members.items()};
    auto seen = [&](const std::vector<index_t>& s) {
        for (const auto& m : work)
            if (m == s) return true;
        return false;
    };
    for (std::size_t i = 0; i < work.size(); ++i) {
        auto current = work[i];
        std::vector<bool> in(S->size(), false);
        for (index_t x : current) in[x] = true;
        for (index_t s = 0; s < S->size(); ++s) {
            if (in[s]) continue;
            auto grown = current;
            grown.push_back(s);
            auto closed = closure_members(S, grown);
            if (!seen(closed)) work.push_back(closed);
        }
    }
    std::sort(work.begin(), work.end(),
              [](const std::vector<index_t>& a, const std::vector<index_t>& b) {
                  return a.size() != b.size() ? a.size() < b.size() : a < b;
              });
    lat.members = std::move(work);
    lat.base_index = lat.find(e.members.items());
    std::vector<index_t> all(S->size());
    std::iota(all.begin(), all.end(), 0);
    lat.top_index = lat.find(all);

    lat.leq.assign(lat.members.size(), std::vector<bool>(lat.members.size(), false));
    for (std::size_t i = 0; i < lat.members.size(); ++i)
        for (std::size_t j = 0; j < lat.members.size(); ++j)
            lat.leq[i][j] = std::includes(lat.members[j].begin(), lat.members[j].end(),
                                          lat.members[i].begin(), lat.members[i].end());
    return lat;
}

// ---------------------------------------------------------------------------
// closure operators: adjoin every qualifying element, re-close, repeat

namespace detail {

template <typename Qualifies>
std::vector<index_t> iterated_closure(const RingPtr& S, std::vector<index_t> current,
                                      Qualifies qualifies) {
    for (;;) {
        IndexSet T(S->size(), current);
        std::vector<index_t> grow = current;
        for (index_t b = 0; b < S->size(); ++b)
            if (!T.contains(b) && qualifies(T, b)) grow.push_back(b);
        if (grow.size() == current.size()) return current;
        current = closure_members(S, grow);
    }
}

}  // namespace detail

inline std::vector<index_t> seminormalization(const Extension& e) {
    const auto& S = e.ambient;
    return detail::iterated_closure(S, e.members.items(), [&](const IndexSet& T, index_t b) {
        return T.contains(S->mul(b, b)) && T.contains(S->mul(S->mul(b, b), b));
    });
}

inline std::vector<index_t> t_closure(const Extension& e) {
    const auto& S = e.ambient;
    return detail::iterated_closure(S, e.members.items(), [&](const IndexSet& T, index_t b) {
        index_t b2 = S->mul(b, b), b3 = S->mul(b2, b);
        for (index_t r : T.items())
            if (T.contains(S->sub(b2, S->mul(r, b))) &&
                T.contains(S->sub(b3, S->mul(r, b2))))
                return true;
        return false;
    });
}

inline std::vector<index_t> u_closure(const Extension& e) {
    const auto& S = e.ambient;
    return detail::iterated_closure(S, e.members.items(), [&](const IndexSet& T, index_t b) {
        index_t b2 = S->mul(b, b), b3 = S->mul(b2, b);
        return T.contains(S->sub(b2, b)) && T.contains(S->sub(b3, b2));
    });
}

// smallest T in [R,S] with T <= S strongly local: R adjoined with all units of S
inline std::vector<index_t> sl_bottom(const Extension& e) {
    auto u = units(e.ambient);
    auto seed = e.members.items();
    for (index_t x : u.units.items()) seed.push_back(x);
    return closure_members(e.ambient, seed);
}

// ---------------------------------------------------------------------------
// greatest strongly local subextension

struct MslResult {
    std::size_t member_index = 0;              // index into lattice.members
    std::vector<std::size_t> sl_members;       // all V with R <= V strongly local
    bool unique_maximal = true;
    bool formulas_hold = true;                 // product = sup = union = described family
    std::string detail;
};

namespace detail {

inline bool member_sl_over_base(const SubringLattice& lat, const IndexSet& baseUnits,
                                std::size_t vi) {
    auto uV = subring_units(lat.ambient, IndexSet(lat.ambient->size(), lat.members[vi]));
    return uV == baseUnits;
}

}  // namespace detail

inline MslResult msl_subextension(const SubringLattice& lat) {
    MslResult out;
    IndexSet base(lat.ambient->size(), lat.members[lat.base_index]);
    auto baseUnits = subring_units(lat.ambient, base);

    for (std::size_t vi = 0; vi < lat.members.size(); ++vi)
        if (lat.leq[lat.base_index][vi] && detail::member_sl_over_base(lat, baseUnits, vi))
            out.sl_members.push_back(vi);

    // maximal elements of the strongly local family
    std::vector<std::size_t> maxima;
    for (std::size_t vi : out.sl_members) {
        bool is_max = true;
        for (std::size_t wj : out.sl_members)
            if (wj != vi && lat.leq[vi][wj]) {
                is_max = false;
                break;
            }
        if (is_max) maxima.push_back(vi);
    }
    if (maxima.size() != 1) {
        out.unique_maximal = false;
        out.detail = "found " + std::to_string(maxima.size()) + " maximal members";
        out.member_index = maxima.empty() ? lat.base_index : maxima[0];
        return out;
    }
    out.member_index = maxima[0];

    // product of all strongly local members (iterated join)
    std::vector<index_t> prod = lat.members[lat.base_index];
    for (std::size_t vi : out.sl_members) {
        auto merged = prod;
        merged.insert(merged.end(), lat.members[vi].begin(), lat.members[vi].end());
        prod = closure_members(lat.ambient, merged);
    }
    // set union of all strongly local members
    std::vector<index_t> uni;
    for (std::size_t vi : out.sl_members)
        uni.insert(uni.end(), lat.members[vi].begin(), lat.members[vi].end());
    std::sort(uni.begin(), uni.end());
    uni.erase(std::unique(uni.begin(), uni.end()), uni.end());
    // sup in the lattice: least member containing every strongly local member
    std::size_t sup = lat.top_index;
    for (std::size_t ci = 0; ci < lat.members.size(); ++ci) {
        bool above = true;
        for (std::size_t vi : out.sl_members)
            if (!lat.leq[vi][ci]) {
                above = false;
                break;
            }
        if (above && lat.members[ci].size() < lat.members[sup].size()) sup = ci;
    }

    const auto& T = lat.members[out.member_index];
    if (prod != T || uni != T || lat.members[sup] != T) {
        out.formulas_hold = false;
        out.detail = "product/sup/union disagree with the maximal member";
        return out;
    }

    // described family: members V with R <= V seminormal, infra-integral and
    // |R/M| = 2 on every supported maximal ideal; their product must be T
    std::vector<index_t> prodDesc = lat.members[lat.base_index];
    for (std::size_t vi = 0; vi < lat.members.size(); ++vi) {
        if (!lat.leq[lat.base_index][vi]) continue;
        auto V = make_extension(lat.ambient, lat.members[vi]);
        Extension RinV = make_extension(
            RingPtr(V.sub), [&] {
                std::vector<index_t> m;
                for (index_t x : lat.members[lat.base_index])
                    m.push_back(V.sub->from_ambient(x));
                return m;
            }());
        auto c = closedness_predicates(RinV);
        if (!c.seminormal) continue;
        auto res = residual_analysis(RinV, maximal_ideals(RinV.ambient));
        if (!res.infra_integral) continue;
        bool two = true;
        for (const auto& entry : msupp(RinV, local_factors(RinV.sub)))
            if (entry.residue_size != 2) {
                two = false;
                break;
            }
        if (!two) continue;
        auto merged = prodDesc;
        merged.insert(merged.end(), lat.members[vi].begin(), lat.members[vi].end());
        prodDesc = closure_members(lat.ambient, merged);
    }
    if (prodDesc != T) {
        out.formulas_hold = false;
        out.detail = "seminormal-infra-integral description disagrees";
    }
    return out;
}

// greatest seminormal infra-integral subextension with the same three formulas
struct SniResult {
    std::size_t member_index = 0;
    bool unique_maximal = true;
    bool formulas_hold = true;
};

inline SniResult sni_subextension(const SubringLattice& lat) {
    SniResult out;
    std::vector<std::size_t> family;
    for (std::size_t vi = 0; vi < lat.members.size(); ++vi) {
        if (!lat.leq[lat.base_index][vi]) continue;
        auto V = make_extension(lat.ambient, lat.members[vi]);
        Extension RinV = make_extension(
            RingPtr(V.sub), [&] {
                std::vector<index_t> m;
                for (index_t x : lat.members[lat.base_index])
                    m.push_back(V.sub->from_ambient(x));
                return m;
            }());
        if (!closedness_predicates(RinV).seminormal) continue;
        if (!residual_analysis(RinV, maximal_ideals(RinV.ambient)).infra_integral) continue;
        family.push_back(vi);
    }
    std::vector<std::size_t> maxima;
    for (std::size_t vi : family) {
        bool is_max = true;
        for (std::size_t wj : family)
            if (wj != vi && lat.leq[vi][wj]) is_max = false;
        if (is_max) maxima.push_back(vi);
    }
    if (maxima.size() != 1) {
        out.unique_maximal = false;
        out.member_index = maxima.empty() ? lat.base_index : maxima[0];
        return out;
    }
    out.member_index = maxima[0];
    std::vector<index_t> prod = lat.members[lat.base_index];
    std::vector<index_t> uni;
    for (std::size_t vi : family) {
        auto merged = prod;
        merged.insert(merged.end(), lat.members[vi].begin(), lat.members[vi].end());
        prod = closure_members(lat.ambient, merged);
        uni.insert(uni.end(), lat.members[vi].begin(), lat.members[vi].end());
    }
    std::sort(uni.begin(), uni.end());
    uni.erase(std::unique(uni.begin(), uni.end()), uni.end());
    out.formulas_hold = prod == lat.members[out.member_index] &&
                        uni == lat.members[out.member_index];
    return out;
}

// ---------------------------------------------------------------------------
// minimal steps

enum class MinimalKind { Decomposed, Inert, Ramified };

inline const char* to_string(MinimalKind k) {
    switch (k) {
        case MinimalKind::Decomposed: return "decomposed";
        case MinimalKind::Inert: return "inert";
        default: return "ramified";
    }
}

struct MinimalStep {
    MinimalKind kind = MinimalKind::Ramified;
    std::size_t conductor_residue = 0;   // |T/M| for M = (T:V)
    std::size_t fibers_over_conductor = 0;
};

// classify an adjacent pair T < V (both members of a lattice over one ambient)
inline MinimalStep classify_minimal(const RingPtr& ambient, const std::vector<index_t>& T,
                                    const std::vector<index_t>& V) {
    auto extV = make_extension(ambient, V);         // V inside the ambient
    auto Vring = extV.sub;
    std::vector<index_t> Tlocal;
    for (index_t x : T) Tlocal.push_back(Vring->from_ambient(x));
    auto TinV = make_extension(RingPtr(Vring), Tlocal);

    Ideal cond = conductor(TinV);  // ideal of V, member indices in V's space
    // M must be a maximal ideal of T
    std::vector<index_t> condT;
    for (index_t x : cond.members.items())
        if (TinV.members.contains(x)) condT.push_back(x);
    if (condT.size() != cond.members.size())
        fail("conductor-not-maximal", "conductor escapes the subring");
    std::vector<index_t> condInT;
    for (index_t x : condT) condInT.push_back(TinV.sub->from_ambient(x));
    Ideal M = ideal_from_members(TinV.sub, condInT);
    if (!M.is_proper()) fail("conductor-not-maximal", "conductor is the whole subring");
    auto qT = quotient(RingPtr(TinV.sub), M);
    if (units(qT.ring).units.size() != qT.ring->size() - 1)
        fail("conductor-not-maximal", "T/(T:V) is not a field");

    MinimalStep out;
    out.conductor_residue = qT.ring->size();

    auto maxV = maximal_ideals(RingPtr(Vring));
    std::vector<std::size_t> residues_over;
    for (const auto& N : maxV) {
        std::vector<index_t> contr;
        for (index_t t : TinV.members.items())
            if (N.contains(t)) contr.push_back(t);
        // N lies over M iff N meets T exactly in M
        std::vector<index_t> Mamb;
        for (index_t m : M.members.items()) Mamb.push_back(TinV.sub->to_ambient(m));
        if (contr == Mamb) residues_over.push_back(Vring->size() / N.size());
    }
    out.fibers_over_conductor = residues_over.size();
    if (residues_over.size() == 2 && residues_over[0] == out.conductor_residue &&
        residues_over[1] == out.conductor_residue)
        out.kind = MinimalKind::Decomposed;
    else if (residues_over.size() == 1 && residues_over[0] > out.conductor_residue)
        out.kind = MinimalKind::Inert;
    else
        out.kind = MinimalKind::Ramified;
    return out;
}

// ---------------------------------------------------------------------------
// lattice shape

inline bool is_boolean_lattice(const SubringLattice& lat) {
    const std::size_t n = lat.members.size();
    auto meet = [&](std::size_t a, std::size_t b) {
        std::vector<index_t> inter;
        std::set_intersection(lat.members[a].begin(), lat.members[a].end(),
                              lat.members[b].begin(), lat.members[b].end(),
                              std::back_inserter(inter));
        return lat.find(inter);  // intersection of subrings is a subring
    };
    auto join = [&](std::size_t a, std::size_t b) {
        auto merged = lat.members[a];
        merged.insert(merged.end(), lat.members[b].begin(), lat.members[b].end());
        return lat.find(closure_members(lat.ambient, merged));
    };
    for (std::size_t a = 0; a < n; ++a) {
        bool complemented = false;
        for (std::size_t b = 0; b < n && !complemented; ++b)
            complemented = meet(a, b) == lat.base_index && join(a, b) == lat.top_index;
        if (!complemented) return false;
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (meet(a, join(b, c)) != join(meet(a, b), meet(a, c))) return false;
    }
    return true;
}

// F[U(R)] <= R is strongly local; equality when R is local
struct UnitGeneratedCheck {
    bool sl = false;
    bool equals_ring = false;
    std::size_t generated_size = 0;
};

inline UnitGeneratedCheck unit_generated_check(const RingPtr& R) {
    auto u = units(R);
    std::vector<index_t> seed(u.units.items().begin(), u.units.items().end());
    auto T = closure_members(R, seed);  // prime subring joins automatically via 1
    UnitGeneratedCheck out;
    out.generated_size = T.size();
    auto e = make_extension(R, T);
    out.sl = is_sl(e, u);
    out.equals_ring = T.size() == R->size();
    return out;
}

}  // namespace ringlab
