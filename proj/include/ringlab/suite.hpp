#pragma once

#include <atomic>
#include <functional>
#include <thread>

#include <json.hpp>

#include "cohn.hpp"
#include "expr.hpp"
#include "lattice.hpp"
#include "poly.hpp"

namespace ringlab {

inline constexpr const char* kToolVersion = "0.1.0";

struct Finding {
    std::string theorem;
    std::string instance;
    enum class Verdict { Confirmed, Counterexample, CapSkipped } verdict = Verdict::Confirmed;
    std::string witness;
};

inline const char* to_string(Finding::Verdict v) {
    switch (v) {
        case Finding::Verdict::Confirmed: return "confirmed";
        case Finding::Verdict::Counterexample: return "counterexample";
        default: return "cap-skipped";
    }
}

// ---------------------------------------------------------------------------
// corpus

struct CorpusEntry {
    std::string expr;                             // DSL text
    RingPtr ring;                                 // S
    std::vector<std::vector<index_t>> subrings;   // every subring containing the prime one
};

struct Corpus {
    std::vector<CorpusEntry> entries;
    std::vector<Finding> skips;

    // all inclusions (R, T) with R a proper subring of T, T possibly the top
    struct Pair {
        std::size_t entry;
        std::size_t lo, hi;  // indices into entry.subrings; hi may equal subring count = top
    };
    std::vector<Pair> pairs(bool include_equal = false) const {
        std::vector<Pair> out;
        for (std::size_t ei = 0; ei < entries.size(); ++ei) {
            const auto& subs = entries[ei].subrings;
            for (std::size_t i = 0; i < subs.size(); ++i)
                for (std::size_t j = 0; j < subs.size(); ++j) {
                    if (i == j && !include_equal) continue;
                    if (i != j && !std::includes(subs[j].begin(), subs[j].end(),
                                                 subs[i].begin(), subs[i].end()))
                        continue;
                    if (i != j && subs[i].size() == subs[j].size()) continue;
                    out.push_back(Pair{ei, i, j});
                }
        }
        return out;
    }
};

inline const std::vector<std::string>& catalog_exprs() {
    static const std::vector<std::string> cat{
        "Z/2",
        "Z/2 * Z/2",
        "Z/2 * Z/2 * Z/2",
        "Z/2 * Z/2 * Z/2 * Z/2",
        "Z/3 * Z/3",
        "GF(4)",
        "GF(4) * Z/2",
        "Z/4",
        "Z/8",
        "Z/9",
        "Z/6",
        "Z/4 * Z/2",
        "Z/2[x]/(x^2)",
        "Z/4[x]/(x^2+2)",
        "Z/2[x]/(x^4+x)",
        "Z/2[x]/(x^3+1)",
        "Z/4 (+) ideal(2)",
    };
    return cat;
}

inline Corpus corpus(std::size_t max_size, std::uint64_t seed,
                     const Limits& lim = default_limits()) {
    Corpus out;
    std::vector<std::string> exprs = catalog_exprs();

    // stock products with rich subring lattices, then seeded random ones
    for (const char* stock : {"Z/2 * Z/2 * Z/2 * Z/2 * Z/2", "GF(4) * GF(4)"})
        exprs.push_back(stock);
    Rng rng(seed);
    const std::vector<std::string> atoms{"Z/2", "Z/3", "Z/4", "GF(4)", "Z/2[x]/(x^2)"};
    const std::vector<std::size_t> atom_sizes{2, 3, 4, 4, 4};
    const std::size_t base_count = exprs.size();
    for (int tries = 0; tries < 32 && exprs.size() < base_count + 6; ++tries) {
        std::size_t k = 2 + rng.below(4);
        std::string text;
        std::size_t size = 1;
        for (std::size_t i = 0; i < k; ++i) {
            std::size_t a = rng.below(atoms.size());
            if (size * atom_sizes[a] > max_size) continue;
            size *= atom_sizes[a];
            if (!text.empty()) text += " * ";
            text += atoms[a];
        }
        if (size < 4 || text.find('*') == std::string::npos) continue;
        if (std::find(exprs.begin(), exprs.end(), text) == exprs.end())
            exprs.push_back(text);
    }

    for (const auto& text : exprs) {
        auto ast = parse(text);
        auto R = build(*ast, lim.ring_size_cap);
        if (R->size() > max_size) {
            out.skips.push_back(Finding{"corpus", text, Finding::Verdict::CapSkipped,
                                        "ring size " + std::to_string(R->size()) +
                                            " over max " + std::to_string(max_size)});
            continue;
        }
        if (R->size() > lim.lattice_cap_hard) {
            out.skips.push_back(Finding{"corpus", text, Finding::Verdict::CapSkipped,
                                        "lattice cap"});
            continue;
        }
        CorpusEntry entry;
        entry.expr = text;
        entry.ring = R;
        auto lat = intermediate_rings(extension_generated(R, {}),
                                      [&] {
                                          Limits l = lim;
                                          l.lattice_cap = lim.lattice_cap_hard;
                                          return l;
                                      }());
        entry.subrings = lat.members;
        out.entries.push_back(std::move(entry));
    }
    return out;
}

// ---------------------------------------------------------------------------
// suite machinery

namespace detail {

inline Extension pair_extension(const CorpusEntry& e, const std::vector<index_t>& lo,
                                const std::vector<index_t>& hi) {
    if (hi.size() == e.ring->size()) return make_extension(e.ring, lo);
    auto T = make_subring(e.ring, hi);
    std::vector<index_t> local;
    for (index_t x : lo) local.push_back(T->from_ambient(x));
    return make_extension(RingPtr(T), std::move(local));
}

inline std::string pair_name(const CorpusEntry& e, std::size_t lo, std::size_t hi) {
    return e.expr + "; R#" + std::to_string(lo) + "(" +
           std::to_string(e.subrings[lo].size()) + ") in T#" + std::to_string(hi) + "(" +
           std::to_string(e.subrings[hi].size()) + ")";
}

// strongly local in the brute-force sense: unit sets coincide
inline bool brute_sl(const Extension& ext) {
    return subring_units(ext.ambient, ext.members) ==
           units(ext.ambient).units;
}

inline std::vector<Ideal> all_ideals(const RingPtr& R) {
    std::vector<Ideal> out{ideal_generated(R, {})};
    std::vector<std::vector<index_t>> seen{out[0].members.items()};
    for (std::size_t i = 0; i < out.size(); ++i) {
        auto current = out[i];
        for (index_t x = 0; x < R->size(); ++x) {
            if (current.contains(x)) continue;
            auto gens = current.gens;
            gens.push_back(x);
            auto bigger = ideal_generated(R, gens);
            if (std::find(seen.begin(), seen.end(), bigger.members.items()) == seen.end()) {
                seen.push_back(bigger.members.items());
                out.push_back(std::move(bigger));
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const Ideal& a, const Ideal& b) {
        return a.members.items() < b.members.items();
    });
    return out;
}

inline bool is_semiprime(const RingPtr& R, const Ideal& I) {
    for (index_t x = 0; x < R->size(); ++x)
        if (I.contains(R->mul(x, x)) && !I.contains(x)) return false;
    return true;
}

}  // namespace detail

using SuiteTask = std::function<std::vector<Finding>()>;

inline std::vector<Finding> run_tasks(std::vector<SuiteTask> tasks, int jobs) {
    std::vector<std::vector<Finding>> slots(tasks.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) slots[i] = tasks[i]();
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= tasks.size()) return;
                slots[i] = tasks[i]();
            }
        };
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    std::vector<Finding> out;
    for (auto& s : slots) out.insert(out.end(), s.begin(), s.end());
    std::stable_sort(out.begin(), out.end(), [](const Finding& a, const Finding& b) {
        return a.theorem != b.theorem ? a.theorem < b.theorem : a.instance < b.instance;
    });
    return out;
}

// ---------------------------------------------------------------------------
// suite items (each returns findings; confirmed entries aggregate per instance)

namespace suites {

inline Finding confirmed(std::string theorem, std::string instance, std::string note = "") {
    return Finding{std::move(theorem), std::move(instance), Finding::Verdict::Confirmed,
                   std::move(note)};
}

inline Finding counterexample(std::string theorem, std::string instance,
                              std::string witness) {
    return Finding{std::move(theorem), std::move(instance),
                   Finding::Verdict::Counterexample, std::move(witness)};
}

// --- stability ---

inline std::vector<Finding> tower_law(const Corpus& corp) {
    std::vector<Finding> out;
    for (const auto& e : corp.entries) {
        const auto& subs = e.subrings;
        std::size_t violations = 0;
        std::string witness;
        for (std::size_t i = 0; i < subs.size(); ++i)
            for (std::size_t j = 0; j < subs.size(); ++j) {
                if (i == j ||
                    !std::includes(subs[j].begin(), subs[j].end(), subs[i].begin(),
                                   subs[i].end()))
                    continue;
                // R = subs[i], T = subs[j], S = e.ring
                auto RS = make_extension(e.ring, subs[i]);
                auto TS = make_extension(e.ring, subs[j]);
                auto RT = detail::pair_extension(e, subs[i], subs[j]);
                bool rs = detail::brute_sl(RS), ts = detail::brute_sl(TS),
                     rt = detail::brute_sl(RT);
                if (rs != (ts && rt)) {
                    ++violations;
                    witness = detail::pair_name(e, i, j);
                }
                // local: both steps local => whole local; whole local => bottom step local
                bool lrs = is_local(RS), lts = is_local(TS), lrt = is_local(RT);
                if ((lrt && lts && !lrs) || (lrs && !lrt)) {
                    ++violations;
                    witness = detail::pair_name(e, i, j) + " (local)";
                }
            }
        out.push_back(violations == 0
                          ? confirmed("sl-tower-law", e.expr)
                          : counterexample("sl-tower-law", e.expr, witness));
    }
    return out;
}

inline std::vector<Finding> product_law(const Corpus& corp, std::uint64_t seed) {
    std::vector<Finding> out;
    auto pairs = corp.pairs();
    if (pairs.size() < 2) return out;
    Rng rng(seed ^ 0xa5a5a5a5ull);
    std::size_t violations = 0;
    std::string witness;
    int samples = 0;
    for (int t = 0; t < 40; ++t) {
        const auto& p1 = pairs[rng.below(pairs.size())];
        const auto& p2 = pairs[rng.below(pairs.size())];
        const auto& e1 = corp.entries[p1.entry];
        const auto& e2 = corp.entries[p2.entry];
        if (e1.ring->size() * e2.ring->size() > 256) continue;
        ++samples;
        auto S = make_product({e1.ring, e2.ring});
        std::vector<index_t> mem;
        for (index_t a : e1.subrings[p1.lo])
            for (index_t b : e2.subrings[p2.lo])
                mem.push_back(S->from_coords({a, b}));
        auto prod_ext = make_extension(S, mem);
        bool sl1 = detail::brute_sl(make_extension(e1.ring, e1.subrings[p1.lo]));
        bool sl2 = detail::brute_sl(make_extension(e2.ring, e2.subrings[p2.lo]));
        bool slp = detail::brute_sl(prod_ext);
        bool l1 = is_local(make_extension(e1.ring, e1.subrings[p1.lo]));
        bool l2 = is_local(make_extension(e2.ring, e2.subrings[p2.lo]));
        bool lp = is_local(prod_ext);
        if (slp != (sl1 && sl2) || lp != (l1 && l2)) {
            ++violations;
            witness = detail::pair_name(e1, p1.lo, p1.hi) + " x " +
                      detail::pair_name(e2, p2.lo, p2.hi);
        }
    }
    out.push_back(violations == 0 ? confirmed("sl-product-law",
                                              "sampled " + std::to_string(samples) +
                                                  " product pairs")
                                  : counterexample("sl-product-law", "sampled", witness));
    return out;
}

inline std::vector<Finding> morphism_laws(const Corpus& corp, std::uint64_t seed) {
    // pool of validated morphisms: quotient projections and subring inclusions
    struct Named {
        RingMorphism f;
        std::string name;
    };
    std::vector<Named> pool;
    for (const auto& e : corp.entries) {
        if (e.ring->size() > 32) continue;
        auto J = jacobson(e.ring);
        if (J.members.size() > 1 && J.is_proper())
            pool.push_back({quotient(e.ring, J).projection, e.expr + "->/J"});
        auto nil = nilradical(e.ring);
        if (nil.members.size() > 1 && nil.is_proper())
            pool.push_back({quotient(e.ring, nil).projection, e.expr + "->/Nil"});
        if (!e.subrings.empty()) {
            auto sub = make_subring(e.ring, e.subrings[0]);
            pool.push_back({inclusion_morphism(sub), e.expr + "<-prime"});
        }
        for (const auto& f : local_factors(e.ring).factors)
            pool.push_back({f.projection, e.expr + "->factor"});
    }
    std::vector<Finding> out;
    std::size_t checked = 0, violations = 0;
    std::string witness;
    for (const auto& gn : pool)
        for (const auto& fn : pool) {
            if (fn.f.target.get() != gn.f.source.get()) continue;
            ++checked;
            const auto& f = fn.f;
            const auto& g = gn.f;
            auto gf = compose(g, f);
            bool lf = is_local(f), lg = is_local(g), lgf = is_local(gf);
            bool sf = is_sl(f), sg = is_sl(g), sgf = is_sl(gf);
            bool ok = true;
            if (lf && lg && !lgf) ok = false;          // composition (local)
            if (sf && sg && !sgf) ok = false;          // composition (strongly local)
            if (lgf && !lf) ok = false;                // left cancellation (local)
            if (lgf && f.surjective && !lg) ok = false;
            if (sgf && !sg) ok = false;                // right cancellation (strongly local)
            if (sgf && g.injective && !sf) ok = false;
            if (!ok) {
                ++violations;
                witness = fn.name + " ; " + gn.name;
            }
        }
    (void)seed;
    out.push_back(violations == 0
                      ? confirmed("morphism-composition",
                                  std::to_string(checked) + " composable pairs")
                      : counterexample("morphism-composition", "pool", witness));
    return out;
}

inline std::vector<Finding> shared_ideal_lift(const Corpus& corp) {
    std::vector<Finding> out;
    std::size_t checked = 0, violations = 0;
    std::string witness;
    for (const auto& e : corp.entries)
        for (std::size_t i = 0; i + 1 < e.subrings.size(); ++i) {
            auto ext = make_extension(e.ring, e.subrings[i]);
            auto cond = conductor(ext);
            if (cond.members.size() < 2 || !cond.is_proper()) continue;
            ++checked;
            auto q = quotient(e.ring, cond);
            std::vector<index_t> img;
            for (index_t r : ext.members.items()) img.push_back(q.projection(r));
            std::sort(img.begin(), img.end());
            img.erase(std::unique(img.begin(), img.end()), img.end());
            auto qext = make_extension(q.ring, img);
            if (detail::brute_sl(qext) && !detail::brute_sl(ext)) {
                ++violations;
                witness = detail::pair_name(e, i, e.subrings.size() - 1);
            }
        }
    out.push_back(violations == 0
                      ? confirmed("shared-ideal-lift",
                                  std::to_string(checked) + " conductor quotients")
                      : counterexample("shared-ideal-lift", "corpus", witness));
    return out;
}

inline std::vector<Finding> localization_laws(const Corpus& corp) {
    std::vector<Finding> out;
    std::size_t checked = 0, violations = 0;
    std::string witness, converse_witness;
    for (const auto& e : corp.entries) {
        auto pairs = Corpus{{e}, {}}.pairs();
        for (const auto& p : pairs) {
            auto ext = detail::pair_extension(e, e.subrings[p.lo], e.subrings[p.hi]);
            auto dec = local_factors(ext.sub);
            auto supp = msupp(ext, dec);
            bool all_factors_sl = true;
            bool any_factor_not_sl = false;
            for (const auto& entry : supp) {
                auto loc = localized_extension(ext, dec.factors[entry.factor].idempotent);
                bool sl_at = detail::brute_sl(loc);
                all_factors_sl &= sl_at;
                any_factor_not_sl |= !sl_at;
            }
            ++checked;
            bool whole = detail::brute_sl(ext);
            if (all_factors_sl && !whole) {
                ++violations;
                witness = detail::pair_name(e, p.lo, p.hi);
            }
            if (whole && any_factor_not_sl)
                converse_witness = detail::pair_name(e, p.lo, p.hi);
        }
    }
    out.push_back(violations == 0
                      ? confirmed("sl-localization-suffices",
                                  std::to_string(checked) + " pairs")
                      : counterexample("sl-localization-suffices", "corpus", witness));
    out.push_back(confirmed("sl-localization-converse-search", "corpus",
                            converse_witness.empty()
                                ? "no finite witness; corpus exhausted"
                                : "witness: " + converse_witness));
    return out;
}

inline std::vector<Finding> idealization_laws(const Corpus& corp) {
    std::vector<Finding> out;
    std::size_t violations = 0;
    std::string witness;
    std::size_t checked = 0;
    for (const auto& e : corp.entries) {
        if (e.ring->size() > 16) continue;
        auto ideals = detail::all_ideals(e.ring);
        for (const auto& M : ideals) {
            if (e.ring->size() * M.members.size() > 128) continue;
            ++checked;
            auto A = make_idealization(e.ring, M.members.items());
            std::vector<index_t> base;
            for (index_t r = 0; r < e.ring->size(); ++r)
                base.push_back(A->from_parts(r, 0));
            auto ext = make_extension(A, base);
            bool local_ok = is_local(ext);
            bool sl_val = detail::brute_sl(ext);
            bool sl_expect = M.members.size() == 1;
            // radical splits componentwise
            auto JA = jacobson(RingPtr(A));
            auto JR = jacobson(e.ring);
            bool radical_ok = JA.members.size() == JR.members.size() * M.members.size();
            for (index_t x : JA.members.items()) {
                auto parts = A->parts(x);
                if (!JR.contains(parts.first) || !M.contains(parts.second))
                    radical_ok = false;
            }
            if (!local_ok || sl_val != sl_expect || !radical_ok) {
                ++violations;
                witness = A->name();
            }
        }
    }
    out.push_back(violations == 0
                      ? confirmed("idealization-laws", std::to_string(checked) + " modules")
                      : counterexample("idealization-laws", "corpus", witness));
    return out;
}

inline std::vector<Finding> nil_factorization(const Corpus& corp) {
    std::vector<Finding> out;
    std::size_t violations = 0, checked = 0;
    std::string witness;
    for (const auto& e : corp.entries) {
        auto nilS = nilradical(e.ring);
        for (std::size_t i = 0; i < e.subrings.size(); ++i) {
            auto ext = make_extension(e.ring, e.subrings[i]);
            ++checked;
            bool sl = detail::brute_sl(ext);
            std::vector<index_t> nilR;
            for (index_t r : ext.members.items())
                if (e.ring->is_nilpotent(r)) nilR.push_back(r);
            bool nil_equal = IndexSet(e.ring->size(), nilR) == nilS.members;
            bool reduced_sl = false;
            if (nil_equal) {
                if (nilS.members.size() == 1) {
                    reduced_sl = sl;  // already reduced
                } else {
                    auto q = quotient(e.ring, nilS);
                    std::vector<index_t> img;
                    for (index_t r : ext.members.items()) img.push_back(q.projection(r));
                    std::sort(img.begin(), img.end());
                    img.erase(std::unique(img.begin(), img.end()), img.end());
                    reduced_sl = detail::brute_sl(make_extension(q.ring, img));
                }
            }
            if (sl != (nil_equal && reduced_sl)) {
                ++violations;
                witness = detail::pair_name(e, i, e.subrings.size() - 1);
            }
        }
    }
    out.push_back(violations == 0
                      ? confirmed("nil-factorization", std::to_string(checked) + " pairs")
                      : counterexample("nil-factorization", "corpus", witness));
    return out;
}

// --- sl characterization ---

inline std::vector<Finding> semilocal_characterization(const Corpus& corp) {
    std::vector<Finding> out;
    std::size_t checked = 0, violations = 0;
    std::string witness;
    for (const auto& e : corp.entries) {
        auto pairs = Corpus{{e}, {}}.pairs();
        for (const auto& p : pairs) {
            auto ext = detail::pair_extension(e, e.subrings[p.lo], e.subrings[p.hi]);
            ++checked;
            bool sl = detail::brute_sl(ext);
            bool sn = closedness_predicates(ext).seminormal;
            bool infra = residual_analysis(ext, maximal_ideals(ext.ambient)).infra_integral;
            bool two = true;
            for (const auto& m : msupp(ext, local_factors(ext.sub)))
                if (m.residue_size != 2) two = false;
            if (sl != (sn && infra && two)) {
                ++violations;
                witness = detail::pair_name(e, p.lo, p.hi);
            }
        }
    }
    out.push_back(violations == 0 ? confirmed("sl-characterization",
                                              std::to_string(checked) + " pairs")
                                  : counterexample("sl-characterization", "corpus", witness));
    return out;
}

inline std::vector<Finding> sl_consequences(const Corpus& corp) {
    std::vector<Finding> out;
    std::size_t checked = 0, violations = 0;
    std::string witness;
    for (const auto& e : corp.entries) {
        auto uS = units(e.ring);
        auto JS = jacobson(e.ring);
        auto nilS = nilradical(e.ring);
        auto idemS = idempotents(e.ring);
        bool two_unit = uS.is_unit(e.ring->add(e.ring->one(), e.ring->one()));
        bool product_of_fields = JS.members.size() == 1;
        bool s_local = local_factors(e.ring).factors.size() == 1;
        for (std::size_t i = 0; i < e.subrings.size(); ++i) {
            auto ext = make_extension(e.ring, e.subrings[i]);
            if (!detail::brute_sl(ext)) continue;
            ++checked;
            bool ok = true;
            // shared radical and nilradical
            auto JR = jacobson(ext.sub);
            std::vector<index_t> JR_amb;
            for (index_t r : JR.members.items()) JR_amb.push_back(ext.sub->to_ambient(r));
            ok &= IndexSet(e.ring->size(), JR_amb) == JS.members;
            std::vector<index_t> nilR;
            for (index_t r : ext.members.items())
                if (e.ring->is_nilpotent(r)) nilR.push_back(r);
            ok &= IndexSet(e.ring->size(), nilR) == nilS.members;
            // seminormal and infra-integral
            ok &= closedness_predicates(ext).seminormal;
            ok &= residual_analysis(ext, maximal_ideals(ext.ambient)).infra_integral;
            // invertible two forces shared idempotents
            if (two_unit)
                for (index_t id : idemS.all) ok &= ext.members.contains(id);
            if (two_unit && product_of_fields) ok &= ext.full();
            // a local top ring admits no proper sl subring
            if (s_local) ok &= ext.full();
            // semisimple top: quadratic witnesses and u-integrality
            if (product_of_fields) {
                for (index_t x = 0; x < e.ring->size() && ok; ++x) {
                    bool quad = false;
                    for (index_t u : uS.units.items())
                        if (e.ring->mul(x, x) == e.ring->mul(u, x)) {
                            quad = true;
                            break;
                        }
                    ok &= quad;
                }
                ok &= u_closure(ext).size() == e.ring->size();
            }
            if (!ok) {
                ++violations;
                witness = detail::pair_name(e, i, e.subrings.size() - 1);
            }
        }
    }
    out.push_back(violations == 0 ? confirmed("sl-structural-consequences",
                                              std::to_string(checked) + " sl pairs")
                                  : counterexample("sl-structural-consequences", "corpus",
                                                   witness));
    return out;
}

inline std::vector<Finding> defect_modules(const Corpus& corp) {
    std::vector<Finding> out;
    std::size_t checked = 0, violations = 0;
    std::string witness;
    for (const auto& e : corp.entries) {
        auto uS = units(e.ring);
        for (std::size_t i = 0; i < e.subrings.size(); ++i) {
            auto ext = make_extension(e.ring, e.subrings[i]);
            auto d = sl_defect(ext, uS);
            ++checked;
            bool ok = d.index == d.modules.size();
            // the coset map u -> Ru is multiplicative on a sample
            if (ok && uS.units.size() >= 2) {
                index_t u = uS.units.items()[uS.units.size() - 1];
                index_t v = uS.units.items()[uS.units.size() / 2];
                auto module_of = [&](index_t w) {
                    std::vector<index_t> m;
                    for (index_t r : ext.members.items())
                        m.push_back(e.ring->mul(r, w));
                    std::sort(m.begin(), m.end());
                    return m;
                };
                auto mu = module_of(u), mv = module_of(v), muv = module_of(e.ring->mul(u, v));
                // product of the member sets generates the product module
                std::vector<index_t> prod;
                for (index_t a : mu)
                    for (index_t b : mv) prod.push_back(e.ring->mul(a, b));
                std::vector<index_t> closed;
                {
                    std::vector<bool> in(e.ring->size(), false);
                    std::vector<index_t> work;
                    for (index_t x : prod)
                        if (!in[x]) {
                            in[x] = true;
                            work.push_back(x);
                        }
                    for (std::size_t wi = 0; wi < work.size(); ++wi)
                        for (std::size_t wj = 0; wj <= wi; ++wj) {
                            index_t s = e.ring->add(work[wi], work[wj]);
                            if (!in[s]) {
                                in[s] = true;
                                work.push_back(s);
                            }
                        }
                    closed = std::move(work);
                    std::sort(closed.begin(), closed.end());
                }
                ok &= closed == muv;
            }
            if (!ok) {
                ++violations;
                witness = detail::pair_name(e, i, e.subrings.size() - 1);
            }
        }
    }
    out.push_back(violations == 0 ? confirmed("sl-defect-modules",
                                              std::to_string(checked) + " pairs")
                                  : counterexample("sl-defect-modules", "corpus", witness));
    return out;
}

inline std::vector<Finding> comonic_characterization(const Corpus& corp, int degree) {
    std::vector<Finding> out;
    std::size_t checked = 0, violations = 0;
    std::string witness;
    for (const auto& e : corp.entries) {
        auto pairs = Corpus{{e}, {}}.pairs();
        for (const auto& p : pairs) {
            auto ext = detail::pair_extension(e, e.subrings[p.lo], e.subrings[p.hi]);
            ++checked;
            auto uR = subring_units(ext.ambient, ext.members);
            bool cic = is_co_integrally_closed(ext, uR, degree);
            if (cic != detail::brute_sl(ext)) {
                ++violations;
                witness = detail::pair_name(e, p.lo, p.hi);
            }
        }
    }
    out.push_back(violations == 0 ? confirmed("comonic-characterization",
                                              std::to_string(checked) + " pairs")
                                  : counterexample("comonic-characterization", "corpus",
                                                   witness));
    return out;
}

inline std::vector<Finding> field_base_shape(const Corpus& corp) {
    std::vector<Finding> out;
    std::size_t checked = 0, violations = 0;
    std::string witness;
    for (const auto& e : corp.entries) {
        for (std::size_t i = 0; i < e.subrings.size(); ++i) {
            auto ext = make_extension(e.ring, e.subrings[i]);
            auto uR = subring_units(ext.ambient, ext.members);
            if (uR.size() != ext.members.size() - 1) continue;  // base not a field
            ++checked;
            bool sl = detail::brute_sl(ext);
            bool boolean_shape = ext.members.size() == 2;
            if (boolean_shape) {
                for (const auto& f : local_factors(e.ring).factors)
                    boolean_shape &= f.factor->size() == 2;
            }
            bool expect = ext.full() || boolean_shape;
            if (sl != expect) {
                ++violations;
                witness = detail::pair_name(e, i, e.subrings.size() - 1);
            }
        }
    }
    out.push_back(violations == 0 ? confirmed("field-base-shape",
                                              std::to_string(checked) + " field bases")
                                  : counterexample("field-base-shape", "corpus", witness));
    return out;
}

// --- lattice closures ---

inline std::vector<Finding> greatest_sl_member(const Corpus& corp, const Limits& lim) {
    std::vector<Finding> out;
    for (const auto& e : corp.entries) {
        std::size_t violations = 0;
        std::string witness;
        auto pairs = Corpus{{e}, {}}.pairs();
        for (const auto& p : pairs) {
            if (e.subrings[p.hi].size() > lim.lattice_cap) continue;
            auto ext = detail::pair_extension(e, e.subrings[p.lo], e.subrings[p.hi]);
            auto lat = intermediate_rings(ext, lim);
            auto msl = msl_subextension(lat);
            if (!msl.unique_maximal || !msl.formulas_hold) {
                ++violations;
                witness = detail::pair_name(e, p.lo, p.hi) + ": " + msl.detail;
            }
            auto sni = sni_subextension(lat);
            if (!sni.unique_maximal || !sni.formulas_hold) {
                ++violations;
                witness = detail::pair_name(e, p.lo, p.hi) + " (seminormal family)";
            }
        }
        out.push_back(violations == 0
                          ? confirmed("greatest-sl-member", e.expr)
                          : counterexample("greatest-sl-member", e.expr, witness));
    }
    return out;
}

inline std::vector<Finding> u_integral_two_torsion(const Corpus& corp) {
    std::vector<Finding> out;
    std::size_t checked = 0, violations = 0;
    std::string witness;
    for (const auto& e : corp.entries) {
        // base R = prime subring; S = entry ring; members T between them
        auto baseExt = make_extension(e.ring, e.subrings[0]);
        auto uclo = u_closure(baseExt);
        IndexSet uclo_set(e.ring->size(), uclo);
        for (std::size_t j = 0; j < e.subrings.size(); ++j) {
            if (e.subrings[j].size() == e.subrings[0].size()) continue;
            auto ext = detail::pair_extension(e, e.subrings[0], e.subrings[j]);
            ++checked;
            bool sl = detail::brute_sl(ext);
            bool inside_uclosure = true;
            for (index_t x : e.subrings[j])
                if (!uclo_set.contains(x)) inside_uclosure = false;
            // T/(R:T) boolean of two-power order with idempotent elements
            auto cond = conductor(ext);
            bool twotorsion = false;
            if (cond.is_proper()) {
                auto q = quotient(ext.ambient, cond);
                bool all_idem = true;
                for (index_t x = 0; x < q.ring->size(); ++x)
                    if (q.ring->mul(x, x) != x) all_idem = false;
                std::size_t n = q.ring->size();
                bool pow2 = (n & (n - 1)) == 0;
                twotorsion = all_idem && pow2;
            }
            if (sl != (inside_uclosure && twotorsion)) {
                ++violations;
                witness = detail::pair_name(e, 0, j);
            }
        }
    }
    out.push_back(violations == 0 ? confirmed("u-integral-two-torsion",
                                              std::to_string(checked) + " members")
                                  : counterexample("u-integral-two-torsion", "corpus",
                                                   witness));
    return out;
}

inline std::vector<Finding> minimal_sl_steps(const Corpus& corp, const Limits& lim) {
    std::vector<Finding> out;
    std::size_t checked = 0, violations = 0;
    std::string witness;
    for (const auto& e : corp.entries) {
        if (e.ring->size() > lim.lattice_cap) continue;
        auto lat = intermediate_rings(extension_generated(e.ring, {}), lim);
        for (std::size_t lo = 0; lo < lat.members.size(); ++lo)
            for (std::size_t hi = 0; hi < lat.members.size(); ++hi) {
                if (!lat.covers(lo, hi)) continue;
                ++checked;
                auto ext = detail::pair_extension(e, lat.members[lo], lat.members[hi]);
                bool sl = detail::brute_sl(ext);
                MinimalStep step;
                bool classified = true;
                try {
                    step = classify_minimal(e.ring, lat.members[lo], lat.members[hi]);
                } catch (const error& err) {
                    classified = false;
                    ++violations;
                    witness = std::string("classification failed: ") + err.what();
                }
                if (classified) {
                    bool expect =
                        step.kind == MinimalKind::Decomposed && step.conductor_residue == 2;
                    if (sl != expect) {
                        ++violations;
                        witness = e.expr + " adjacent pair";
                    }
                }
            }
    }
    out.push_back(violations == 0 ? confirmed("minimal-sl-steps",
                                              std::to_string(checked) + " adjacent pairs")
                                  : counterexample("minimal-sl-steps", "corpus", witness));
    return out;
}

inline std::vector<Finding> boolean_shape(const Corpus& corp, const Limits& lim) {
    std::vector<Finding> out;
    std::size_t checked = 0, violations = 0;
    std::string witness;
    for (const auto& e : corp.entries) {
        if (e.ring->size() > lim.lattice_cap) continue;
        auto maxS = maximal_ideals(e.ring);
        for (std::size_t i = 0; i < e.subrings.size(); ++i) {
            auto ext = make_extension(e.ring, e.subrings[i]);
            if (!detail::brute_sl(ext) || ext.full()) continue;
            // apply only when every supported maximal ideal has exactly two
            // maximal ideals of S above its extension
            bool hypothesis = true;
            auto dec = local_factors(ext.sub);
            auto supp = msupp(ext, dec);
            if (supp.empty()) continue;
            for (const auto& m : supp) {
                std::vector<index_t> m_amb;
                for (index_t r : m.maximal_of_sub.members.items())
                    m_amb.push_back(ext.sub->to_ambient(r));
                auto MS = ideal_generated(e.ring, m_amb);
                std::size_t over = 0;
                for (const auto& N : maxS)
                    if (MS.members.subset_of(N.members)) ++over;
                if (over != 2) hypothesis = false;
            }
            if (!hypothesis) continue;
            ++checked;
            auto lat = intermediate_rings(ext, lim);
            if (!is_boolean_lattice(lat)) {
                ++violations;
                witness = detail::pair_name(e, i, e.subrings.size() - 1);
            }
        }
    }
    out.push_back(violations == 0 ? confirmed("boolean-shape",
                                              std::to_string(checked) + " qualifying pairs")
                                  : counterexample("boolean-shape", "corpus", witness));
    return out;
}

inline std::vector<Finding> unit_generated(const Corpus& corp) {
    std::vector<Finding> out;
    for (const auto& e : corp.entries) {
        auto c = unit_generated_check(e.ring);
        bool local_ring = local_factors(e.ring).factors.size() == 1;
        bool ok = c.sl && (!local_ring || c.equals_ring);
        out.push_back(ok ? confirmed("unit-generated-subring", e.expr,
                                     "generated size " + std::to_string(c.generated_size))
                         : counterexample("unit-generated-subring", e.expr,
                                          "sl=" + std::to_string(c.sl)));
    }
    return out;
}

inline std::vector<Finding> closure_order(const Corpus& corp) {
    std::vector<Finding> out;
    std::size_t checked = 0, violations = 0;
    std::string witness;
    for (const auto& e : corp.entries)
        for (std::size_t i = 0; i < e.subrings.size(); ++i) {
            if (e.subrings[i].size() == e.ring->size()) continue;
            auto ext = make_extension(e.ring, e.subrings[i]);
            ++checked;
            auto sn = seminormalization(ext);
            auto tc = t_closure(ext);
            auto uc = u_closure(ext);
            bool ok = std::includes(tc.begin(), tc.end(), uc.begin(), uc.end()) &&
                      std::includes(tc.begin(), tc.end(), sn.begin(), sn.end());
            // the unit-generated bottom is strongly local under S and minimal
            auto bottom = sl_bottom(ext);
            ok &= detail::brute_sl(make_extension(e.ring, bottom));
            if (!ok) {
                ++violations;
                witness = detail::pair_name(e, i, e.subrings.size() - 1);
            }
        }
    out.push_back(violations == 0 ? confirmed("closure-order",
                                              std::to_string(checked) + " bases")
                                  : counterexample("closure-order", "corpus", witness));
    return out;
}

// --- cohn ---

inline std::vector<Finding> shifted_ring_checks(const Limits& lim) {
    std::vector<Finding> out;
    struct Case {
        std::string expr;
        RingPtr ring;
    };
    std::vector<Case> rings;
    for (const char* t : {"Z/4", "Z/8", "Z/6", "Z/2 * GF(4)"})
        rings.push_back({t, build(*parse(t), lim.ring_size_cap)});

    for (const auto& c : rings) {
        std::vector<std::pair<std::string, Ideal>> ideals;
        ideals.emplace_back("J", jacobson(c.ring));
        auto maxi = maximal_ideals(c.ring);
        for (std::size_t i = 0; i < maxi.size(); ++i)
            ideals.emplace_back("M" + std::to_string(i), maxi[i]);

        for (auto& [label, I] : ideals) {
            std::string inst = c.expr + " // " + label;
            try {
                auto SR = make_shifted(c.ring, I);
                auto rigid = verify_unit_rigidity(SR, lim.tail_degree_pair, lim);
                auto cond = verify_conductor(SR);
                auto tcl = verify_t_closed(SR, lim.tail_degree_single, lim);
                auto jac = verify_jacobson_membership(SR, lim.tail_degree_pair, lim);
                bool ok = rigid.ok && cond.ok && tcl.ok && (label != "J" || jac.ok);
                out.push_back(ok ? confirmed("shifted-ring-laws", inst)
                                 : counterexample("shifted-ring-laws", inst,
                                                  rigid.violation + cond.violation +
                                                      tcl.violation + jac.violation));
            } catch (const error& err) {
                out.push_back(Finding{"shifted-ring-laws", inst,
                                      Finding::Verdict::CapSkipped, err.what()});
            }
        }

        auto CR = make_cohn(c.ring);
        auto rigid = verify_unit_rigidity(CR, lim.tail_degree_pair, lim);
        auto cond = verify_conductor(CR);
        auto zd = verify_zerodivisors(CR);
        bool ok = rigid.ok && cond.ok && zd.ok;
        out.push_back(ok ? confirmed("cohn-ring-laws", c.expr)
                         : counterexample("cohn-ring-laws", c.expr,
                                          rigid.violation + cond.violation + zd.violation));
    }
    return out;
}

inline std::vector<Finding> poly_lift_lemma(const Limits& lim) {
    std::vector<Finding> out;
    for (const char* t : {"Z/4", "Z/2 * Z/2"}) {
        auto R = build(*parse(t), lim.ring_size_cap);
        std::size_t checked = 0;
        bool ok = true;
        std::string witness;
        for (const auto& I : detail::all_ideals(R)) {
            if (!I.is_proper() || !detail::is_semiprime(R, I)) continue;
            auto rep = lemma_poly_lift_oracle(R, I, lim.tail_degree_pair, lim);
            checked += rep.checked;
            if (!rep.ok) {
                ok = false;
                witness = rep.violation;
            }
        }
        out.push_back(ok ? confirmed("poly-lift-lemma", t,
                                     std::to_string(checked) + " tuples")
                         : counterexample("poly-lift-lemma", t, witness));
    }
    return out;
}

inline std::vector<Finding> shifted_transfer(const Corpus& corp, std::uint64_t seed) {
    std::vector<Finding> out;
    std::size_t checked = 0, violations = 0;
    std::string witness;
    for (const auto& e : corp.entries) {
        if (e.ring->size() > 16) continue;
        auto JS = jacobson(e.ring);
        for (std::size_t i = 0; i < e.subrings.size(); ++i) {
            if (e.subrings[i].size() == e.ring->size()) continue;
            auto ext = make_extension(e.ring, e.subrings[i]);
            try {
                auto rep = verify_sl_transfer(ext, JS, 1, seed, default_limits());
                ++checked;
                if (!rep.ok) {
                    ++violations;
                    witness = detail::pair_name(e, i, e.subrings.size() - 1) + ": " +
                              rep.violation;
                }
            } catch (const error&) {
                // population over cap: skip silently, the small corpus covers it
            }
        }
    }
    out.push_back(violations == 0 ? confirmed("shifted-sl-transfer",
                                              std::to_string(checked) + " pairs")
                                  : counterexample("shifted-sl-transfer", "corpus", witness));
    return out;
}

// --- poly ---

inline std::vector<Finding> poly_unit_formula(const Limits& lim) {
    std::vector<Finding> out;
    for (const char* t : {"Z/4", "Z/8", "Z/2"}) {
        auto R = build(*parse(t), lim.ring_size_cap);
        auto rep = poly_unit_check(R, 3, lim);
        auto u = units(R);
        auto nil = nilradical(R);
        std::size_t expect = u.units.size();
        for (int k = 0; k < 3; ++k) expect *= nil.members.size();
        bool ok = rep.matches_formula && rep.units.size() == expect;
        out.push_back(ok ? confirmed("poly-unit-formula", t,
                                     std::to_string(rep.units.size()) + " units at degree 3")
                         : counterexample("poly-unit-formula", t, rep.mismatch));
    }
    return out;
}

inline std::vector<Finding> irreducibility_checks() {
    std::vector<Finding> out;
    auto f2 = make_zmod(2);
    bool ok = true;
    std::string witness;
    for (std::uint64_t p : {3ull, 5ull, 7ull, 11ull, 13ull}) {
        std::vector<index_t> cs(std::size_t(p), 1);
        bool irr = is_irreducible(BoundedPoly::from(f2, cs)).irreducible;
        if (irr != is_primitive_root(2, p)) {
            ok = false;
            witness = "p=" + std::to_string(p);
        }
    }
    out.push_back(ok ? confirmed("cyclotomic-irreducibility", "p in {3,5,7,11,13}")
                     : counterexample("cyclotomic-irreducibility", "scan", witness));
    return out;
}

inline std::vector<Finding> monic_maximal_checks() {
    std::vector<Finding> out;
    auto z4 = make_zmod(4);
    auto M = ideal_generated(z4, {2});
    bool ok = true;
    std::string witness;
    auto r1 = monic_maximal_ideal(z4, M, BoundedPoly::from(z4, {1, 1, 1}));
    ok &= r1.ok && r1.field_size == 4;
    auto r2 = monic_maximal_ideal(z4, M, BoundedPoly::from(z4, {0, 1}));
    ok &= r2.ok && r2.field_size == 2;
    auto r3 = monic_maximal_ideal(z4, M, BoundedPoly::from(z4, {1, 0, 1}));
    ok &= !r3.ok && !r3.reducibility.irreducible;
    auto z9 = make_zmod(9);
    auto M9 = ideal_generated(z9, {3});
    auto r4 = monic_maximal_ideal(z9, M9, BoundedPoly::from(z9, {1, 0, 1}));
    ok &= r4.ok && r4.field_size == 9;
    out.push_back(ok ? confirmed("monic-maximal-quotient", "modular bases")
                     : counterexample("monic-maximal-quotient", "construction", witness));
    return out;
}

inline std::vector<Finding> pad_checks(const Limits& lim) {
    std::vector<Finding> out;
    struct Case {
        const char* expr;
        std::size_t n, m;
    };
    for (auto c : {Case{"Z/3", 1, 2}, Case{"Z/4", 1, 3}, Case{"GF(4)", 2, 2},
                   Case{"Z/2 * GF(4)", 2, 4}}) {
        auto R = build(*parse(c.expr), lim.ring_size_cap);
        auto r = pad_construction(R, c.n, c.m, lim);
        std::string inst = std::string(c.expr) + " pad " + std::to_string(c.n) + "->" +
                           std::to_string(c.m);
        out.push_back(r.sl ? confirmed("pad-embedding", inst)
                           : counterexample("pad-embedding", inst, "not sl"));
    }
    return out;
}

// --- examples ---

inline std::vector<Finding> example_embeddings(const Limits& lim) {
    std::vector<Finding> out;
    {
        auto r = cyclotomic_sl_construction(3, lim, true);
        auto uS = units(RingPtr(r.target));
        std::vector<index_t> expect{
            r.target->one(),
            r.target->from_coeffs({1, 1, 0, 1}),
            r.target->from_coeffs({1, 0, 1, 1}),
        };
        std::sort(expect.begin(), expect.end());
        bool ok = r.sl && r.embedding_count == 2 && uS.units.items() == expect &&
                  units(RingPtr(r.source)).units.size() == 3;
        out.push_back(ok ? confirmed("unit-triple-embeddings", "p=3",
                                     "2 injective sl morphisms")
                         : counterexample("unit-triple-embeddings", "p=3", "mismatch"));
    }
    for (std::uint64_t p : {3ull, 5ull, 11ull}) {
        try {
            auto r = cyclotomic_sl_construction(p, lim);
            out.push_back(r.sl ? confirmed("cyclotomic-embedding", "p=" + std::to_string(p))
                               : counterexample("cyclotomic-embedding",
                                                "p=" + std::to_string(p), "not sl"));
        } catch (const error& err) {
            out.push_back(Finding{"cyclotomic-embedding", "p=" + std::to_string(p),
                                  Finding::Verdict::CapSkipped, err.what()});
        }
    }
    {
        auto f2 = make_zmod(2);
        auto fact = is_irreducible(BoundedPoly::from(f2, {1, 1, 1, 1, 1, 1, 1}));
        bool ok = !fact.irreducible;
        if (ok) {
            auto matches = [&](const BoundedPoly& g, std::vector<index_t> c) {
                return g == BoundedPoly::from(f2, std::move(c));
            };
            ok = (matches(fact.left, {1, 1, 0, 1}) && matches(fact.right, {1, 0, 1, 1})) ||
                 (matches(fact.left, {1, 0, 1, 1}) && matches(fact.right, {1, 1, 0, 1}));
        }
        out.push_back(ok ? confirmed("cyclotomic-embedding", "p=7 reducible",
                                     "factors found")
                         : counterexample("cyclotomic-embedding", "p=7", "wrong factors"));
    }
    return out;
}

}  // namespace suites

// ---------------------------------------------------------------------------
// one entry point per suite id

struct SuiteRun {
    std::vector<Finding> findings;
    bool has_counterexample = false;
};

inline SuiteRun run_suite(const std::string& suite, std::size_t max_size, std::uint64_t seed,
                          const Limits& lim = default_limits(), int jobs = 1) {
    const bool all = suite == "all";
    std::vector<SuiteTask> tasks;
    auto corp = std::make_shared<Corpus>(corpus(max_size, seed, lim));

    if (all || suite == "stability") {
        tasks.push_back([corp] { return suites::tower_law(*corp); });
        tasks.push_back([corp, seed] { return suites::product_law(*corp, seed); });
        tasks.push_back([corp, seed] { return suites::morphism_laws(*corp, seed); });
        tasks.push_back([corp] { return suites::shared_ideal_lift(*corp); });
        tasks.push_back([corp] { return suites::localization_laws(*corp); });
        tasks.push_back([corp] { return suites::idealization_laws(*corp); });
        tasks.push_back([corp] { return suites::nil_factorization(*corp); });
    }
    if (all || suite == "sl-characterization") {
        tasks.push_back([corp] { return suites::semilocal_characterization(*corp); });
        tasks.push_back([corp] { return suites::sl_consequences(*corp); });
        tasks.push_back([corp] { return suites::defect_modules(*corp); });
        tasks.push_back([corp, &lim] { return suites::comonic_characterization(*corp, 4); });
        tasks.push_back([corp] { return suites::field_base_shape(*corp); });
    }
    if (all || suite == "lattice-closures") {
        tasks.push_back([corp, lim] { return suites::greatest_sl_member(*corp, lim); });
        tasks.push_back([corp] { return suites::u_integral_two_torsion(*corp); });
        tasks.push_back([corp, lim] { return suites::minimal_sl_steps(*corp, lim); });
        tasks.push_back([corp, lim] { return suites::boolean_shape(*corp, lim); });
        tasks.push_back([corp] { return suites::unit_generated(*corp); });
        tasks.push_back([corp] { return suites::closure_order(*corp); });
    }
    if (all || suite == "cohn") {
        tasks.push_back([lim] { return suites::shifted_ring_checks(lim); });
        tasks.push_back([lim] { return suites::poly_lift_lemma(lim); });
        tasks.push_back([corp, seed] { return suites::shifted_transfer(*corp, seed); });
    }
    if (all || suite == "poly") {
        tasks.push_back([lim] { return suites::poly_unit_formula(lim); });
        tasks.push_back([] { return suites::irreducibility_checks(); });
        tasks.push_back([] { return suites::monic_maximal_checks(); });
        tasks.push_back([lim] { return suites::pad_checks(lim); });
    }
    if (all || suite == "examples") {
        tasks.push_back([lim] { return suites::example_embeddings(lim); });
    }
    if (tasks.empty()) fail("usage", "unknown suite '" + suite + "'");

    SuiteRun run;
    run.findings = run_tasks(std::move(tasks), jobs);
    run.findings.insert(run.findings.end(), corp->skips.begin(), corp->skips.end());
    for (const auto& f : run.findings)
        if (f.verdict == Finding::Verdict::Counterexample) run.has_counterexample = true;
    return run;
}

// ---------------------------------------------------------------------------
// reports

inline nlohmann::json findings_json(const std::vector<Finding>& fs) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& f : fs)
        arr.push_back({{"theorem", f.theorem},
                       {"instance", f.instance},
                       {"verdict", to_string(f.verdict)},
                       {"witness", f.witness}});
    return arr;
}

inline nlohmann::json report_json(const SuiteRun& run, std::uint64_t seed,
                                  std::size_t max_size, const Limits& lim) {
    return nlohmann::json{
        {"tool_version", kToolVersion},
        {"seed", seed},
        {"caps",
         {{"max_size", max_size},
          {"lattice_cap", lim.lattice_cap},
          {"scan_cap", lim.scan_cap},
          {"pair_scan_cap", lim.pair_scan_cap},
          {"comonic_degree", lim.comonic_degree}}},
        {"findings", findings_json(run.findings)}};
}

inline nlohmann::json extension_report_json(const ExtensionReport& r) {
    nlohmann::json j{
        {"ambient", r.ambient_name},
        {"ambient_size", r.ambient_size},
        {"sub_size", r.sub_size},
        {"ambient_units", r.ambient_units},
        {"sub_units", r.sub_units},
        {"local", r.local},
        {"sl", r.sl},
        {"sl_defect_index", r.sl_defect_index},
        {"invertible_modules", r.invertible_modules},
        {"conductor_size", r.conductor_members.size()},
        {"msupp_residues", r.msupp_residues},
        {"skipped", r.skipped},
    };
    auto put = [&](const char* key, const std::optional<bool>& v) {
        if (v) j[key] = *v;
    };
    put("seminormal", r.seminormal);
    put("t_closed", r.t_closed);
    put("u_closed", r.u_closed);
    put("co_integrally_closed", r.co_integrally_closed);
    put("infra_integral", r.infra_integral);
    put("i_extension", r.i_extension);
    nlohmann::json fibers = nlohmann::json::array();
    for (const auto& f : r.fibers)
        fibers.push_back({{"residue_ambient", f.residue_S}, {"residue_sub", f.residue_R}});
    j["fibers"] = fibers;
    return j;
}

}  // namespace ringlab
