#pragma once

#include <variant>

#include "ring.hpp"

namespace ringlab {

// ---------------------------------------------------------------------------
// ring-expression AST
//
// ring := atom {('*' atom) | ('(+)' 'ideal(' elem {',' elem} ')')}
// atom := 'Z/' INT | 'GF(' INT ')' | atom '[' IDENT ']/(' poly ')' | '(' ring ')'
//
// whitespace insensitive; products left-associative and flattened

struct PolyLit {
    std::string var;                  // empty for constants
    std::vector<long long> coeffs;    // ascending degree
    bool operator==(const PolyLit&) const = default;
};

struct ElemLit {
    enum class Kind { Int, Poly, Tuple };
    Kind kind = Kind::Int;
    long long value = 0;
    PolyLit poly;
    std::vector<ElemLit> tuple;
    bool operator==(const ElemLit&) const = default;
};

struct RingExpr {
    enum class Kind { Zmod, GF, PolyQuot, Product, Idealization };
    Kind kind = Kind::Zmod;
    std::uint64_t n = 0;                               // Zmod, GF
    std::shared_ptr<const RingExpr> base;              // PolyQuot, Idealization
    std::string var;                                   // PolyQuot
    PolyLit modulus;                                   // PolyQuot
    std::vector<std::shared_ptr<const RingExpr>> factors;  // Product
    std::vector<ElemLit> ideal_gens;                   // Idealization
};

using ExprPtr = std::shared_ptr<const RingExpr>;

inline bool expr_equal(const RingExpr& a, const RingExpr& b) {
    if (a.kind != b.kind || a.n != b.n || a.var != b.var || !(a.modulus == b.modulus) ||
        !(a.ideal_gens == b.ideal_gens) || a.factors.size() != b.factors.size())
        return false;
    if (bool(a.base) != bool(b.base)) return false;
    if (a.base && !expr_equal(*a.base, *b.base)) return false;
    for (std::size_t i = 0; i < a.factors.size(); ++i)
        if (!expr_equal(*a.factors[i], *b.factors[i])) return false;
    return true;
}

// ---------------------------------------------------------------------------
// parsing

namespace detail {

class Cursor {
public:
    explicit Cursor(std::string text) : text_(std::move(text)) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            advance();
    }
    bool eof() {
        skip_ws();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool consume(const std::string& tok) {
        skip_ws();
        if (text_.compare(pos_, tok.size(), tok) == 0) {
            for (std::size_t i = 0; i < tok.size(); ++i) advance();
            return true;
        }
        return false;
    }
    void expect(const std::string& tok) {
        if (!consume(tok)) fail_here("expected '" + tok + "'");
    }
    std::uint64_t integer() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail_here("expected an integer");
        std::uint64_t v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + std::uint64_t(text_[pos_] - '0');
            advance();
        }
        return v;
    }
    std::string ident() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isalpha(static_cast<unsigned char>(text_[pos_])))
            fail_here("expected an identifier");
        std::string out;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            out += text_[pos_];
            advance();
        }
        return out;
    }
    [[noreturn]] void fail_here(const std::string& msg) {
        fail("syntax-error", msg + " at line " + std::to_string(line_) + " col " +
                                 std::to_string(col_));
    }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }
    std::string text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1, col_ = 1;
};

// term := INT ['*'] VAR ['^' INT] | VAR ['^' INT] | INT, joined by '+'/'-'
inline PolyLit parse_poly(Cursor& c, const std::string& bound_var = "") {
    PolyLit out;
    bool negate = c.consume("-");
    for (;;) {
        long long coeff = 1;
        long long power = 0;
        bool saw_int = false;
        c.skip_ws();
        if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
            coeff = (long long)c.integer();
            saw_int = true;
            c.consume("*");
        }
        c.skip_ws();
        if (std::isalpha(static_cast<unsigned char>(c.peek()))) {
            std::string v = c.ident();
            if (out.var.empty())
                out.var = v;
            else if (out.var != v)
                c.fail_here("mixed variables '" + out.var + "' and '" + v + "'");
            if (!bound_var.empty() && v != bound_var)
                c.fail_here("unknown variable '" + v + "'");
            power = 1;
            if (c.consume("^")) power = (long long)c.integer();
        } else if (!saw_int) {
            c.fail_here("expected a polynomial term");
        }
        if (negate) coeff = -coeff;
        if (out.coeffs.size() <= std::size_t(power)) out.coeffs.resize(std::size_t(power) + 1);
        out.coeffs[std::size_t(power)] += coeff;
        if (c.consume("+"))
            negate = false;
        else if (c.consume("-"))
            negate = true;
        else
            break;
    }
    while (!out.coeffs.empty() && out.coeffs.back() == 0) out.coeffs.pop_back();
    return out;
}

inline ElemLit parse_elem(Cursor& c) {
    c.skip_ws();
    if (c.peek() == '(') {
        c.expect("(");
        ElemLit out;
        out.kind = ElemLit::Kind::Tuple;
        out.tuple.push_back(parse_elem(c));
        while (c.consume(",")) out.tuple.push_back(parse_elem(c));
        c.expect(")");
        return out;
    }
    PolyLit p = parse_poly(c);
    ElemLit out;
    if (p.var.empty()) {
        out.kind = ElemLit::Kind::Int;
        out.value = p.coeffs.empty() ? 0 : p.coeffs[0];
    } else {
        out.kind = ElemLit::Kind::Poly;
        out.poly = std::move(p);
    }
    return out;
}

inline ExprPtr parse_ring(Cursor& c);

inline ExprPtr parse_atom(Cursor& c) {
    std::shared_ptr<RingExpr> node;
    c.skip_ws();
    if (c.consume("Z/")) {
        node = std::make_shared<RingExpr>();
        node->kind = RingExpr::Kind::Zmod;
        node->n = c.integer();
    } else if (c.consume("GF(")) {
        node = std::make_shared<RingExpr>();
        node->kind = RingExpr::Kind::GF;
        node->n = c.integer();
        c.expect(")");
    } else if (c.consume("(")) {
        auto inner = parse_ring(c);
        c.expect(")");
        node = std::make_shared<RingExpr>(*inner);
    } else {
        c.fail_here("expected a ring atom");
    }
    // postfix polynomial quotients
    while (c.peek() == '[') {
        c.expect("[");
        std::string var = c.ident();
        c.expect("]");
        c.expect("/");
        c.expect("(");
        PolyLit mod = parse_poly(c, var);
        c.expect(")");
        auto quot = std::make_shared<RingExpr>();
        quot->kind = RingExpr::Kind::PolyQuot;
        quot->base = node;
        quot->var = var;
        quot->modulus = std::move(mod);
        node = quot;
    }
    return node;
}

inline ExprPtr parse_ring(Cursor& c) {
    ExprPtr acc = parse_atom(c);
    for (;;) {
        if (c.consume("(+)")) {
            c.expect("ideal");
            c.expect("(");
            auto node = std::make_shared<RingExpr>();
            node->kind = RingExpr::Kind::Idealization;
            node->base = acc;
            node->ideal_gens.push_back(parse_elem(c));
            while (c.consume(",")) node->ideal_gens.push_back(parse_elem(c));
            c.expect(")");
            acc = node;
        } else if (c.consume("*")) {
            auto rhs = parse_atom(c);
            if (acc->kind == RingExpr::Kind::Product) {
                auto node = std::make_shared<RingExpr>(*acc);
                node->factors.push_back(rhs);
                acc = node;
            } else {
                auto node = std::make_shared<RingExpr>();
                node->kind = RingExpr::Kind::Product;
                node->factors = {acc, rhs};
                acc = node;
            }
        } else {
            break;
        }
    }
    return acc;
}

}  // namespace detail

inline ExprPtr parse(const std::string& text) {
    detail::Cursor c(text);
    auto e = detail::parse_ring(c);
    if (!c.eof()) c.fail_here("trailing input");
    return e;
}

// ---------------------------------------------------------------------------
// pretty-printing (canonical; reparses to an equal AST)

inline std::string pretty(const PolyLit& p) {
    if (p.coeffs.empty()) return "0";
    std::string out;
    for (std::size_t k = p.coeffs.size(); k-- > 0;) {
        long long c = p.coeffs[k];
        if (c == 0) continue;
        if (!out.empty()) out += "+";
        if (k == 0) {
            out += std::to_string(c);
        } else {
            if (c != 1) out += std::to_string(c) + "*";
            out += p.var;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out.empty() ? "0" : out;
}

inline std::string pretty(const ElemLit& e) {
    switch (e.kind) {
        case ElemLit::Kind::Int: return std::to_string(e.value);
        case ElemLit::Kind::Poly: return pretty(e.poly);
        default: {
            std::string out = "(";
            for (std::size_t i = 0; i < e.tuple.size(); ++i) {
                if (i) out += ",";
                out += pretty(e.tuple[i]);
            }
            return out + ")";
        }
    }
}

inline std::string pretty(const RingExpr& e) {
    auto atom_str = [](const RingExpr& a) {
        std::string s = pretty(a);
        bool needs_paren =
            a.kind == RingExpr::Kind::Product || a.kind == RingExpr::Kind::Idealization;
        return needs_paren ? "(" + s + ")" : s;
    };
    switch (e.kind) {
        case RingExpr::Kind::Zmod: return "Z/" + std::to_string(e.n);
        case RingExpr::Kind::GF: return "GF(" + std::to_string(e.n) + ")";
        case RingExpr::Kind::PolyQuot:
            return atom_str(*e.base) + "[" + e.var + "]/(" + pretty(e.modulus) + ")";
        case RingExpr::Kind::Product: {
            std::string out;
            for (std::size_t i = 0; i < e.factors.size(); ++i) {
                if (i) out += " * ";
                out += atom_str(*e.factors[i]);
            }
            return out;
        }
        default: {
            std::string out = atom_str(*e.base) + " (+) ideal(";
            for (std::size_t i = 0; i < e.ideal_gens.size(); ++i) {
                if (i) out += ",";
                out += pretty(e.ideal_gens[i]);
            }
            return out + ")";
        }
    }
}

// ---------------------------------------------------------------------------
// building rings and resolving element literals

inline index_t int_element(const RingPtr& R, long long v) {
    std::uint64_t reps = std::uint64_t(v >= 0 ? v : -v);
    index_t acc = 0;
    for (std::uint64_t i = 0; i < reps % (2 * R->size()); ++i) acc = R->add(acc, R->one());
    return v >= 0 ? acc : R->neg(acc);
}

inline index_t resolve_element(const RingPtr& R, const ElemLit& e);

namespace detail {

inline std::pair<std::uint64_t, std::uint64_t> prime_power(std::uint64_t q) {
    for (std::uint64_t p = 2; p * p <= q; ++p) {
        if (q % p) continue;
        std::uint64_t k = 0, v = q;
        while (v % p == 0) {
            v /= p;
            ++k;
        }
        if (v != 1) return {0, 0};
        return {p, k};
    }
    return {q, 1};  // q itself prime (or 1)
}

// least monic irreducible of a given degree over Z/p, by index order
inline std::vector<index_t> least_irreducible(const RingPtr& F, std::size_t deg);

}  // namespace detail

inline RingPtr build(const RingExpr& e,
                     std::size_t size_cap = default_limits().ring_size_cap) {
    switch (e.kind) {
        case RingExpr::Kind::Zmod: return make_zmod(e.n);
        case RingExpr::Kind::GF: {
            auto [p, k] = detail::prime_power(e.n);
            if (p < 2) fail("invalid-ring", "GF argument must be a prime power");
            auto base = make_zmod(p);
            if (k == 1) return base;
            return make_poly_quot(base, detail::least_irreducible(base, std::size_t(k)), "x",
                                  size_cap);
        }
        case RingExpr::Kind::PolyQuot: {
            auto base = build(*e.base, size_cap);
            std::vector<index_t> mod;
            for (long long c : e.modulus.coeffs) mod.push_back(int_element(base, c));
            return make_poly_quot(base, std::move(mod), e.var, size_cap);
        }
        case RingExpr::Kind::Product: {
            std::vector<RingPtr> fs;
            for (const auto& f : e.factors) fs.push_back(build(*f, size_cap));
            return make_product(std::move(fs), size_cap);
        }
        default: {
            auto base = build(*e.base, size_cap);
            std::vector<index_t> gens;
            for (const auto& g : e.ideal_gens) gens.push_back(resolve_element(base, g));
            return make_idealization(base, std::move(gens), size_cap);
        }
    }
}

namespace detail {

inline bool trial_irreducible(const RingPtr& F, const std::vector<index_t>& poly);

inline std::vector<index_t> least_irreducible(const RingPtr& F, std::size_t deg) {
    std::uint64_t count = 1;
    for (std::size_t k = 0; k < deg; ++k) count *= F->size();
    for (std::uint64_t code = 0; code < count; ++code) {
        std::vector<index_t> c(deg + 1);
        std::uint64_t v = code;
        for (std::size_t k = 0; k < deg; ++k) {
            c[k] = index_t(v % F->size());
            v /= F->size();
        }
        c[deg] = F->one();
        if (trial_irreducible(F, c)) return c;
    }
    fail("invalid-ring", "no irreducible modulus found");
}

inline bool trial_irreducible(const RingPtr& F, const std::vector<index_t>& poly) {
    // monic trial division inside plain coefficient vectors
    auto rem_by = [&](std::vector<index_t> a, const std::vector<index_t>& b) {
        while (a.size() >= b.size()) {
            index_t lead = a.back();
            if (lead != 0) {
                std::size_t shift = a.size() - b.size();
                for (std::size_t k = 0; k < b.size(); ++k)
                    a[k + shift] = F->sub(a[k + shift], F->mul(lead, b[k]));
            }
            while (!a.empty() && a.back() == 0) a.pop_back();
            if (a.size() < b.size()) break;
        }
        return a;
    };
    std::size_t deg = poly.size() - 1;
    for (std::size_t dg = 1; dg <= deg / 2; ++dg) {
        std::uint64_t count = 1;
        for (std::size_t k = 0; k < dg; ++k) count *= F->size();
        for (std::uint64_t code = 0; code < count; ++code) {
            std::vector<index_t> b(dg + 1);
            std::uint64_t v = code;
            for (std::size_t k = 0; k < dg; ++k) {
                b[k] = index_t(v % F->size());
                v /= F->size();
            }
            b[dg] = F->one();
            if (rem_by(poly, b).empty()) return false;
        }
    }
    return true;
}

}  // namespace detail

inline index_t resolve_element(const RingPtr& R, const ElemLit& e) {
    switch (e.kind) {
        case ElemLit::Kind::Int: return int_element(R, e.value);
        case ElemLit::Kind::Poly: {
            auto pq = std::dynamic_pointer_cast<const PolyQuotRing>(R);
            if (!pq) fail("invalid-element", "polynomial literal outside a quotient ring");
            if (e.poly.var != pq->variable())
                fail("invalid-element", "variable '" + e.poly.var + "' is not bound; use '" +
                                            pq->variable() + "'");
            // evaluate at the generator so any degree is accepted
            index_t gen = pq->from_coeffs({0, 1});
            index_t acc = 0;
            for (std::size_t k = e.poly.coeffs.size(); k-- > 0;)
                acc = R->add(R->mul(acc, gen), int_element(R, e.poly.coeffs[k]));
            return acc;
        }
        default: {
            if (auto pr = std::dynamic_pointer_cast<const ProductRing>(R)) {
                if (e.tuple.size() != pr->factors().size())
                    fail("invalid-element", "tuple arity mismatch");
                std::vector<index_t> c;
                for (std::size_t k = 0; k < e.tuple.size(); ++k)
                    c.push_back(resolve_element(pr->factors()[k], e.tuple[k]));
                return pr->from_coords(c);
            }
            if (auto id = std::dynamic_pointer_cast<const IdealizationRing>(R)) {
                if (e.tuple.size() != 2)
                    fail("invalid-element", "idealization element is a pair");
                return id->from_parts(resolve_element(id->base(), e.tuple[0]),
                                      resolve_element(id->base(), e.tuple[1]));
            }
            fail("invalid-element", "tuple literal does not match the ring");
        }
    }
}

// seeded random expression, used by the round-trip property test
inline ExprPtr random_expr(Rng& rng, int depth = 0) {
    auto node = std::make_shared<RingExpr>();
    std::uint64_t pick = rng.below(depth >= 2 ? 2 : 5);
    switch (pick) {
        case 0:
            node->kind = RingExpr::Kind::Zmod;
            node->n = 2 + rng.below(10);
            break;
        case 1: {
            node->kind = RingExpr::Kind::GF;
            const std::uint64_t qs[] = {2, 3, 4, 5, 7, 8, 9};
            node->n = qs[rng.below(7)];
            break;
        }
        case 2: {
            node->kind = RingExpr::Kind::PolyQuot;
            node->base = random_expr(rng, depth + 2);
            node->var = "x";
            node->modulus.var = "x";
            std::size_t deg = 1 + rng.below(3);
            node->modulus.coeffs.assign(deg + 1, 0);
            node->modulus.coeffs[deg] = 1;
            for (std::size_t k = 0; k < deg; ++k)
                node->modulus.coeffs[k] = (long long)rng.below(3);
            if (node->modulus.coeffs[0] == 0 && deg == 1) node->modulus.coeffs[0] = 1;
            break;
        }
        case 3: {
            node->kind = RingExpr::Kind::Product;
            std::size_t k = 2 + rng.below(2);
            for (std::size_t i = 0; i < k; ++i)
                node->factors.push_back(random_expr(rng, depth + 2));
            break;
        }
        default: {
            node->kind = RingExpr::Kind::Idealization;
            node->base = random_expr(rng, depth + 2);
            ElemLit g;
            g.kind = ElemLit::Kind::Int;
            g.value = (long long)rng.below(6);
            node->ideal_gens.push_back(g);
            break;
        }
    }
    return node;
}

}  // namespace ringlab
