#pragma once

#include "extension.hpp"
#include "ideal.hpp"

namespace ringlab {

// Dense polynomial over a finite ring; coefficients ascending, normalized.
struct BoundedPoly {
    RingPtr base;
    std::vector<index_t> c;

    static BoundedPoly zero(RingPtr R) { return {std::move(R), {}}; }
    static BoundedPoly from(RingPtr R, std::vector<index_t> coeffs) {
        BoundedPoly p{std::move(R), std::move(coeffs)};
        p.normalize();
        return p;
    }

    void normalize() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return int(c.size()) - 1; }
    index_t at(std::size_t k) const { return k < c.size() ? c[k] : 0; }

    bool operator==(const BoundedPoly& o) const { return c == o.c; }

    std::string str(const std::string& var = "X") const {
        if (c.empty()) return "0";
        std::string out;
        for (std::size_t k = c.size(); k-- > 0;) {
            if (c[k] == 0) continue;
            if (!out.empty()) out += " + ";
            std::string lit = base->format_element(c[k]);
            if (k == 0) {
                out += lit;
            } else {
                if (c[k] != base->one()) out += lit + "*";
                out += var;
                if (k > 1) out += "^" + std::to_string(k);
            }
        }
        return out;
    }
};

inline BoundedPoly poly_add(const BoundedPoly& a, const BoundedPoly& b) {
    std::vector<index_t> c(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.base->add(a.at(k), b.at(k));
    return BoundedPoly::from(a.base, std::move(c));
}

inline BoundedPoly poly_neg(const BoundedPoly& a) {
    auto c = a.c;
    for (auto& x : c) x = a.base->neg(x);
    return BoundedPoly::from(a.base, std::move(c));
}

inline BoundedPoly poly_sub(const BoundedPoly& a, const BoundedPoly& b) {
    return poly_add(a, poly_neg(b));
}

inline BoundedPoly poly_mul(const BoundedPoly& a, const BoundedPoly& b) {
    if (a.is_zero() || b.is_zero()) return BoundedPoly::zero(a.base);
    std::vector<index_t> c(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            c[i + j] = a.base->add(c[i + j], a.base->mul(a.c[i], b.c[j]));
    }
    return BoundedPoly::from(a.base, std::move(c));
}

inline BoundedPoly poly_shift(const BoundedPoly& a, std::size_t k = 1) {
    if (a.is_zero()) return a;
    std::vector<index_t> c(a.c.size() + k, 0);
    std::copy(a.c.begin(), a.c.end(), c.begin() + long(k));
    return BoundedPoly::from(a.base, std::move(c));
}

inline index_t poly_eval(const BoundedPoly& a, index_t x) {
    index_t v = 0;
    for (std::size_t k = a.c.size(); k-- > 0;) v = a.base->add(a.base->mul(v, x), a.c[k]);
    return v;
}

inline Ideal poly_content(const BoundedPoly& a) { return ideal_generated(a.base, a.c); }

// remainder of a by monic b
inline BoundedPoly poly_rem(BoundedPoly a, const BoundedPoly& b) {
    if (b.is_zero() || b.c.back() != b.base->one())
        fail("unsupported-modulus", "division needs a monic divisor");
    while (a.degree() >= b.degree()) {
        index_t lead = a.c.back();
        std::size_t shift = a.c.size() - b.c.size();
        for (std::size_t k = 0; k < b.c.size(); ++k)
            a.c[k + shift] = a.base->sub(a.c[k + shift], a.base->mul(lead, b.c[k]));
        a.normalize();
    }
    return a;
}

inline std::vector<index_t> enum_tuple(const RingPtr& R, std::uint64_t code, std::size_t len) {
    std::vector<index_t> t(len);
    for (std::size_t k = 0; k < len; ++k) {
        t[k] = index_t(code % R->size());
        code /= R->size();
    }
    return t;
}

// ---------------------------------------------------------------------------
// units of R[X] at a degree bound

struct PolyUnitReport {
    std::vector<BoundedPoly> units;         // all invertible p with deg <= d
    std::vector<BoundedPoly> inverses;      // matching inverses (may exceed d)
    bool matches_formula = true;            // unit iff unit head + nilpotent tail
    std::string mismatch;
};

// Invertibility is decided by two independent certificates and cross-checked
// against the head/tail shape: a constructed inverse via the nilpotent
// geometric series on one side, and for nonunits either a failed evaluation
// at 0 or a maximal ideal where the reduction keeps positive degree.
inline PolyUnitReport poly_unit_check(const RingPtr& R, int d,
                                      const Limits& lim = default_limits()) {
    double pop = 1;
    for (int k = 0; k <= d; ++k) pop *= double(R->size());
    if (pop > double(lim.pair_scan_cap)) fail("too-large", "population over pair-scan cap");

    auto u = units(R);
    auto nil = nilradical(R);
    auto maxi = maximal_ideals(R);
    PolyUnitReport rep;

    std::uint64_t total = 1;
    for (int k = 0; k <= d; ++k) total *= R->size();
    for (std::uint64_t code = 0; code < total; ++code) {
        auto p = BoundedPoly::from(R, enum_tuple(R, code, std::size_t(d) + 1));
        bool formula = !p.is_zero() && u.is_unit(p.at(0));
        if (formula)
            for (std::size_t k = 1; k < p.c.size(); ++k)
                if (!nil.contains(p.c[k])) {
                    formula = false;
                    break;
                }
        if (formula) {
            // certify with the explicit inverse u^-1 * sum (-X m u^-1)^k
            index_t a0inv = u.inv(p.at(0));
            BoundedPoly tail = BoundedPoly::from(R, [&] {
                std::vector<index_t> t;
                for (std::size_t k = 1; k < p.c.size(); ++k)
                    t.push_back(R->mul(p.c[k], a0inv));
                return t;
            }());
            BoundedPoly minus_xm = poly_shift(poly_neg(tail));
            BoundedPoly q = BoundedPoly::from(R, {a0inv});
            BoundedPoly term = BoundedPoly::from(R, {R->one()});
            for (int guard = 0; guard < 512 && !term.is_zero(); ++guard) {
                term = poly_mul(term, minus_xm);
                q = poly_add(q, poly_mul(BoundedPoly::from(R, {a0inv}), term));
            }
            if (!(poly_mul(p, q) == BoundedPoly::from(R, {R->one()}))) {
                rep.matches_formula = false;
                rep.mismatch = "series inverse failed for " + p.str();
                return rep;
            }
            rep.units.push_back(p);
            rep.inverses.push_back(q);
        } else {
            // certify the nonunit: evaluation at 0, or reduction mod a
            // maximal ideal keeping positive degree
            if (!u.is_unit(p.at(0))) continue;
            bool certified = false;
            for (const auto& M : maxi) {
                bool positive_degree = false;
                for (std::size_t k = 1; k < p.c.size(); ++k)
                    if (!M.contains(p.c[k])) positive_degree = true;
                if (positive_degree) {
                    certified = true;
                    break;
                }
            }
            if (!certified) {
                rep.matches_formula = false;
                rep.mismatch = "no nonunit certificate for " + p.str();
                return rep;
            }
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// irreducibility over a finite field by trial division

struct Factorization {
    bool irreducible = true;
    BoundedPoly left, right;  // a factorization when reducible
};

inline Factorization is_irreducible(const BoundedPoly& f) {
    const auto& F = f.base;
    if (units(F).units.size() != F->size() - 1)
        fail("base-not-field", F->name() + " is not a field");
    if (f.degree() > 16) fail("too-large", "degree over irreducibility cap");
    Factorization out{true, BoundedPoly::zero(F), BoundedPoly::zero(F)};
    if (f.degree() < 1) {
        out.irreducible = false;  // constants are not irreducible
        return out;
    }
    for (int dg = 1; dg <= f.degree() / 2; ++dg) {
        std::uint64_t count = 1;
        for (int k = 0; k < dg; ++k) count *= F->size();
        for (std::uint64_t code = 0; code < count; ++code) {
            auto low = enum_tuple(F, code, std::size_t(dg));
            low.push_back(F->one());  // monic divisor
            auto g = BoundedPoly::from(F, low);
            if (poly_rem(f, g).is_zero()) {
                // recover the cofactor by long division
                BoundedPoly q = BoundedPoly::zero(F);
                BoundedPoly rem = f;
                std::vector<index_t> qc(std::size_t(f.degree() - dg) + 1, 0);
                while (rem.degree() >= g.degree()) {
                    index_t lead = rem.c.back();
                    std::size_t shift = rem.c.size() - g.c.size();
                    qc[shift] = lead;
                    for (std::size_t k = 0; k < g.c.size(); ++k)
                        rem.c[k + shift] = F->sub(rem.c[k + shift], F->mul(lead, g.c[k]));
                    rem.normalize();
                }
                out.irreducible = false;
                out.left = g;
                out.right = BoundedPoly::from(F, std::move(qc));
                return out;
            }
        }
    }
    return out;
}

inline bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline bool is_primitive_root(std::uint64_t a, std::uint64_t p) {
    if (!is_prime(p)) fail("p-not-prime", std::to_string(p) + " is not prime");
    a %= p;
    if (a == 0) fail("p-not-prime", "base shares a factor with the modulus");
    std::uint64_t x = a % p, ord = 1;
    while (x != 1) {
        x = (x * a) % p;
        ++ord;
    }
    return ord == p - 1;
}

// ---------------------------------------------------------------------------
// monic maximal ideals of R[X]: N = M[X] + f R[X] with f monic and f mod M
// irreducible; certified by exhibiting the quotient as a field

struct MonicMaximalResult {
    RingPtr field;                  // R[X]/(M[X]+fR[X]) = (R/M)[X]/(f mod M)
    std::size_t residue_size;       // |R/M|
    std::size_t field_size;         // residue^deg f
    Factorization reducibility;     // witness when the image factors
    bool ok = false;
};

inline MonicMaximalResult monic_maximal_ideal(const RingPtr& R, const Ideal& M,
                                              const BoundedPoly& f) {
    if (f.is_zero() || f.c.back() != R->one())
        fail("unsupported-modulus", "representative must be monic");
    auto q = quotient(R, M);
    if (units(q.ring).units.size() != q.ring->size() - 1)
        fail("invalid-ideal", "quotient by the given ideal is not a field");

    std::vector<index_t> image;
    for (index_t c : f.c) image.push_back(q.projection(c));
    auto fbar = BoundedPoly::from(q.ring, std::move(image));

    MonicMaximalResult out;
    out.residue_size = q.ring->size();
    if (fbar.degree() >= 2) {
        out.reducibility = is_irreducible(fbar);
        if (!out.reducibility.irreducible) return out;  // caller sees the witness
    }
    if (fbar.degree() < 1) fail("unsupported-modulus", "image of f is constant");

    out.field = fbar.degree() == 1
                    ? RingPtr(q.ring)
                    : RingPtr(make_poly_quot(q.ring, fbar.c, "x"));
    out.field_size = out.field->size();
    // the field certificate is what makes the ideal maximal
    if (units(out.field).units.size() != out.field->size() - 1)
        fail("consistency-violation", "constructed quotient is not a field");
    std::size_t expect = 1;
    for (int k = 0; k < fbar.degree(); ++k) expect *= out.residue_size;
    if (out.field_size != expect)
        fail("consistency-violation", "quotient size disagrees with residue^degree");
    out.ok = true;
    return out;
}

// ---------------------------------------------------------------------------
// strongly local embeddings built from cyclotomic quotients: for p an odd
// prime with 2 a primitive root, K[X]/(X^p-1) embeds in K[X]/(X^(p+1)-X)
// over K = Z/2 with shared unit groups.

struct CyclotomicResult {
    std::shared_ptr<const PolyQuotRing> source, target;
    RingMorphism embedding;
    bool sl = false;
    ExtensionReport report;
    std::size_t embedding_count = 0;  // filled only when the target is scanned
};

inline CyclotomicResult cyclotomic_sl_construction(std::uint64_t p,
                                                   const Limits& lim = default_limits(),
                                                   bool count_embeddings = false) {
    if (!is_prime(p) || p == 2) fail("p-not-prime", "need an odd prime");
    if (!is_primitive_root(2, p)) fail("2-not-primitive", "2 is not a primitive root");
    if ((std::uint64_t{1} << (p + 1)) > lim.ring_size_cap)
        fail("too-large", "2^(p+1) over the ring size cap");

    auto K = make_zmod(2);
    std::vector<index_t> modR(std::size_t(p) + 1, 0);
    modR[0] = 1;
    modR[std::size_t(p)] = 1;  // X^p - 1 = X^p + 1 over Z/2
    auto R = make_poly_quot(K, modR, "y");
    std::vector<index_t> modS(std::size_t(p) + 2, 0);
    modS[1] = 1;
    modS[std::size_t(p) + 1] = 1;  // X^(p+1) - X
    auto S = make_poly_quot(K, modS, "t");

    // image of the generator: lift to S and add (X^p+1) * (lift(0) + lift(1)),
    // which fixes both residues mod X^p-1 and mod X
    auto embed_of = [&](index_t r) {
        auto cs = R->coeffs(r);
        cs.resize(std::size_t(p) + 1, 0);
        index_t at0 = cs[0];
        index_t at1 = 0;
        for (index_t ck : cs) at1 ^= ck;
        index_t corr = at0 ^ at1;
        if (corr) {
            cs[0] ^= 1;
            cs[std::size_t(p)] ^= 1;
        }
        return S->from_coeffs(cs);
    };
    index_t gen_image = embed_of(R->from_coeffs({0, 1}));

    CyclotomicResult out;
    out.source = R;
    out.target = S;
    out.embedding = make_morphism_gen(R, S, gen_image, lim.hom_check_cap);
    if (!out.embedding.injective)
        fail("consistency-violation", "cyclotomic embedding not injective");
    auto uR = units(RingPtr(R), lim.scan_cap);
    auto uS = units(RingPtr(S), lim.scan_cap);
    out.sl = is_sl(out.embedding, uR, uS);

    std::vector<index_t> image;
    for (index_t x = 0; x < R->size(); ++x) image.push_back(out.embedding(x));
    out.report = analyze(make_extension(S, std::move(image)), lim);

    if (count_embeddings) {
        // a morphism is determined by a generator image satisfying s^p = 1
        for (index_t s = 0; s < S->size(); ++s) {
            if (S->pow(s, p) != S->one()) continue;
            auto f = make_morphism_gen(R, S, s, lim.hom_check_cap);
            if (f.injective && is_sl(f, uR, uS)) ++out.embedding_count;
        }
    }
    return out;
}

// F2^n x R -> F2^m x R, repeating the last boolean coordinate; strongly local
struct PadResult {
    RingPtr source, target;
    RingMorphism embedding;
    bool sl = false;
};

inline PadResult pad_construction(const RingPtr& R, std::size_t n, std::size_t m,
                                  const Limits& lim = default_limits()) {
    if (n < 1 || n > m) fail("invalid-ring", "need 1 <= n <= m");
    std::vector<RingPtr> fs(n, make_zmod(2));
    fs.push_back(R);
    auto T = make_product(fs, lim.ring_size_cap);
    std::vector<RingPtr> gs(m, make_zmod(2));
    gs.push_back(R);
    auto S = make_product(gs, lim.ring_size_cap);

    std::vector<index_t> map(T->size());
    for (index_t x = 0; x < T->size(); ++x) {
        auto c = T->coords(x);
        std::vector<index_t> d(m + 1);
        for (std::size_t k = 0; k < n; ++k) d[k] = c[k];
        for (std::size_t k = n; k < m; ++k) d[k] = c[n - 1];
        d[m] = c[n];
        map[x] = S->from_coords(d);
    }
    PadResult out;
    out.source = T;
    out.target = S;
    out.embedding = make_morphism(T, S, std::move(map), lim.hom_check_cap);
    out.sl = is_sl(out.embedding);
    return out;
}

}  // namespace ringlab
