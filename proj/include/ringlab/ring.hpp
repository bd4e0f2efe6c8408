#pragma once

#include <cassert>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <unordered_map>

#include "core.hpp"

namespace ringlab {

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

enum class RingKind { Modular, PolyQuot, Product, Idealization, Subring, Quotient };

// A finite commutative unital ring with elements indexed 0..N-1.
// Index 0 is always the zero element. Canonical order is lexicographic on
// coordinate vectors, most significant coordinate first; for polynomial
// quotients the coordinate vector lists coefficients by descending degree,
// so the index is sum(c_k * B^k) over ascending degree k.
class FiniteRing : public std::enable_shared_from_this<FiniteRing> {
public:
    virtual ~FiniteRing() = default;

    std::size_t size() const { return size_; }
    RingKind kind() const { return kind_; }
    const std::string& name() const { return name_; }

    index_t zero() const { return 0; }
    index_t one() const { return one_; }

    index_t add(index_t a, index_t b) const {
        return add_tab_.empty() ? add_impl(a, b) : add_tab_[std::size_t(a) * size_ + b];
    }
    index_t mul(index_t a, index_t b) const {
        return mul_tab_.empty() ? mul_impl(a, b) : mul_tab_[std::size_t(a) * size_ + b];
    }
    index_t neg(index_t a) const { return neg_tab_.empty() ? neg_impl(a) : neg_tab_[a]; }
    index_t sub(index_t a, index_t b) const { return add(a, neg(b)); }

    index_t pow(index_t a, std::uint64_t e) const {
        index_t acc = one_, base = a;
        while (e) {
            if (e & 1) acc = mul(acc, base);
            base = mul(base, base);
            e >>= 1;
        }
        return acc;
    }

    bool is_nilpotent(index_t a) const {
        // a^N = 0 iff a nilpotent; squaring chain reaches exponent >= N
        index_t x = a;
        std::size_t e = 1;
        while (e < size_) {
            if (x == 0) return true;
            x = mul(x, x);
            e <<= 1;
        }
        return x == 0;
    }

    // coordinates (see class comment for conventions)
    virtual std::vector<index_t> coords(index_t i) const = 0;
    virtual index_t from_coords(const std::vector<index_t>& c) const = 0;
    virtual std::string format_element(index_t i) const = 0;

protected:
    FiniteRing(RingKind k, std::size_t n, std::string name)
        : kind_(k), size_(n), name_(std::move(name)) {
        if (n < 2) fail("invalid-ring", "ring must have at least two elements (0 != 1)");
    }

    virtual index_t add_impl(index_t, index_t) const = 0;
    virtual index_t mul_impl(index_t, index_t) const = 0;
    virtual index_t neg_impl(index_t) const = 0;

    void set_one(index_t o) { one_ = o; }

    // memoize small rings; called at the end of each concrete constructor
    void init_tables() {
        if (one_ == 0) fail("invalid-ring", "0 = 1 in " + name_);
        if (size_ > kTableThreshold) return;
        add_tab_.resize(size_ * size_);
        mul_tab_.resize(size_ * size_);
        neg_tab_.resize(size_);
        for (index_t a = 0; a < size_; ++a) {
            neg_tab_[a] = neg_impl(a);
            for (index_t b = 0; b < size_; ++b) {
                add_tab_[std::size_t(a) * size_ + b] = add_impl(a, b);
                mul_tab_[std::size_t(a) * size_ + b] = mul_impl(a, b);
            }
        }
    }

    static constexpr std::size_t kTableThreshold = 512;

    RingKind kind_;
    std::size_t size_;
    std::string name_;
    index_t one_ = 0;

private:
    std::vector<index_t> add_tab_, mul_tab_, neg_tab_;
};

struct Element {
    RingPtr ring;
    index_t idx = 0;
    bool operator==(const Element& o) const { return ring.get() == o.ring.get() && idx == o.idx; }
    std::string str() const { return ring->format_element(idx); }
};

// ---------------------------------------------------------------------------
// Z/nZ

class ZmodRing final : public FiniteRing {
public:
    explicit ZmodRing(std::uint64_t n)
        : FiniteRing(RingKind::Modular, check(n), "Z/" + std::to_string(n)), n_(n) {
        set_one(1);
        init_tables();
    }

    std::uint64_t modulus() const { return n_; }

    std::vector<index_t> coords(index_t i) const override { return {i}; }
    index_t from_coords(const std::vector<index_t>& c) const override { return c.at(0) % n_; }
    std::string format_element(index_t i) const override { return std::to_string(i); }

protected:
    index_t add_impl(index_t a, index_t b) const override {
        return index_t((std::uint64_t(a) + b) % n_);
    }
    index_t mul_impl(index_t a, index_t b) const override {
        return index_t((std::uint64_t(a) * b) % n_);
    }
    index_t neg_impl(index_t a) const override { return a == 0 ? 0 : index_t(n_ - a); }

private:
    static std::size_t check(std::uint64_t n) {
        if (n < 2) fail("invalid-ring", "Z/" + std::to_string(n) + " is not a nonzero ring");
        if (n > (std::uint64_t{1} << 16)) fail("too-large", "modulus exceeds element cap");
        return std::size_t(n);
    }
    std::uint64_t n_;
};

inline std::shared_ptr<const ZmodRing> make_zmod(std::uint64_t n) {
    return std::make_shared<ZmodRing>(n);
}

// ---------------------------------------------------------------------------
// base[X]/(m) for monic m

class PolyQuotRing final : public FiniteRing {
public:
    PolyQuotRing(RingPtr base, std::vector<index_t> modulus, std::string var,
                 std::size_t size_cap)
        : FiniteRing(RingKind::PolyQuot, checked_size(base, modulus, size_cap),
                     make_name(base, modulus, var)),
          base_(std::move(base)),
          mod_(std::move(modulus)),
          var_(std::move(var)) {
        deg_ = mod_.size() - 1;
        fast2_ = base_->kind() == RingKind::Modular && base_->size() == 2 && deg_ <= 30;
        if (fast2_) {
            mod_mask_ = 0;
            for (std::size_t k = 0; k + 1 < mod_.size(); ++k)
                if (mod_[k]) mod_mask_ |= std::uint64_t{1} << k;
        }
        set_one(from_coeffs({base_->one()}));
        init_tables();
    }

    const RingPtr& base() const { return base_; }
    std::size_t degree() const { return deg_; }
    const std::vector<index_t>& modulus() const { return mod_; }
    const std::string& variable() const { return var_; }

    // ascending-degree coefficient list, length deg_
    std::vector<index_t> coeffs(index_t i) const {
        std::vector<index_t> c(deg_);
        std::uint64_t v = i;
        std::size_t b = base_->size();
        for (std::size_t k = 0; k < deg_; ++k) {
            c[k] = index_t(v % b);
            v /= b;
        }
        return c;
    }

    index_t from_coeffs(const std::vector<index_t>& c) const {
        if (c.size() > deg_) fail("invalid-element", "coefficient list too long");
        std::uint64_t v = 0, s = 1;
        for (std::size_t k = 0; k < deg_; ++k) {
            v += (k < c.size() ? std::uint64_t(c[k]) : 0) * s;
            s *= base_->size();
        }
        return index_t(v);
    }

    std::vector<index_t> coords(index_t i) const override {
        auto c = coeffs(i);
        std::reverse(c.begin(), c.end());  // descending degree = lexicographic order
        return c;
    }
    index_t from_coords(const std::vector<index_t>& c) const override {
        auto a = c;
        std::reverse(a.begin(), a.end());
        return from_coeffs(a);
    }

    std::string format_element(index_t i) const override {
        auto c = coeffs(i);
        std::string out;
        for (std::size_t k = c.size(); k-- > 0;) {
            if (c[k] == 0) continue;
            if (!out.empty()) out += "+";
            std::string coeff = base_->format_element(c[k]);
            bool unit_coeff = (c[k] == base_->one());
            if (k == 0) {
                out += coeff.find(',') == std::string::npos ? coeff : "(" + coeff + ")";
            } else {
                if (!unit_coeff)
                    out += (coeff.find(',') == std::string::npos ? coeff : "(" + coeff + ")") + "*";
                out += var_;
                if (k > 1) out += "^" + std::to_string(k);
            }
        }
        return out.empty() ? "0" : out;
    }

protected:
    index_t add_impl(index_t a, index_t b) const override {
        if (fast2_) return a ^ b;
        auto x = coeffs(a), y = coeffs(b);
        for (std::size_t k = 0; k < deg_; ++k) x[k] = base_->add(x[k], y[k]);
        return from_coeffs(x);
    }

    index_t neg_impl(index_t a) const override {
        if (fast2_) return a;
        auto x = coeffs(a);
        for (auto& c : x) c = base_->neg(c);
        return from_coeffs(x);
    }

    index_t mul_impl(index_t a, index_t b) const override {
        if (fast2_) {
            std::uint64_t acc = 0, bb = b;
            for (std::size_t i = 0; i < deg_; ++i)
                if ((a >> i) & 1) acc ^= bb << i;
            for (std::size_t k = 2 * deg_ - 1; k-- > deg_;)
                if ((acc >> k) & 1) {
                    acc ^= std::uint64_t{1} << k;
                    acc ^= mod_mask_ << (k - deg_);
                }
            return index_t(acc);
        }
        auto x = coeffs(a), y = coeffs(b);
        std::vector<index_t> buf(2 * deg_ - 1, 0);
        for (std::size_t i = 0; i < deg_; ++i) {
            if (x[i] == 0) continue;
            for (std::size_t j = 0; j < deg_; ++j)
                buf[i + j] = base_->add(buf[i + j], base_->mul(x[i], y[j]));
        }
        // monic reduction: X^deg = -sum(mod_[i] X^i)
        for (std::size_t k = buf.size(); k-- > deg_;) {
            index_t c = buf[k];
            if (c == 0) continue;
            buf[k] = 0;
            for (std::size_t i = 0; i < deg_; ++i)
                buf[k - deg_ + i] = base_->sub(buf[k - deg_ + i], base_->mul(c, mod_[i]));
        }
        buf.resize(deg_);
        return from_coeffs(buf);
    }

private:
    static std::size_t checked_size(const RingPtr& base, const std::vector<index_t>& mod,
                                    std::size_t cap) {
        if (mod.size() < 2) fail("unsupported-modulus", "modulus must have degree >= 1");
        if (mod.back() != base->one()) fail("unsupported-modulus", "modulus must be monic");
        std::size_t n = 1;
        for (std::size_t k = 0; k + 1 < mod.size(); ++k) {
            if (n > cap / base->size()) fail("too-large", "quotient ring exceeds size cap");
            n *= base->size();
        }
        if (n < 2 || n > cap) fail("too-large", "quotient ring exceeds size cap");
        return n;
    }

    static std::string make_name(const RingPtr& base, const std::vector<index_t>& mod,
                                 const std::string& var) {
        std::string p;
        for (std::size_t k = mod.size(); k-- > 0;) {
            if (mod[k] == 0) continue;
            if (!p.empty()) p += "+";
            if (k == 0) {
                p += base->format_element(mod[k]);
            } else {
                if (mod[k] != base->one()) p += base->format_element(mod[k]) + "*";
                p += var;
                if (k > 1) p += "^" + std::to_string(k);
            }
        }
        return base->name() + "[" + var + "]/(" + p + ")";
    }

    RingPtr base_;
    std::vector<index_t> mod_;
    std::string var_;
    std::size_t deg_ = 0;
    bool fast2_ = false;
    std::uint64_t mod_mask_ = 0;
};

inline std::shared_ptr<const PolyQuotRing> make_poly_quot(
    RingPtr base, std::vector<index_t> modulus, std::string var = "x",
    std::size_t size_cap = default_limits().ring_size_cap) {
    return std::make_shared<PolyQuotRing>(std::move(base), std::move(modulus), std::move(var),
                                          size_cap);
}

// ---------------------------------------------------------------------------
// direct products

class ProductRing final : public FiniteRing {
public:
    ProductRing(std::vector<RingPtr> factors, std::size_t size_cap)
        : FiniteRing(RingKind::Product, checked_size(factors, size_cap), make_name(factors)),
          factors_(std::move(factors)) {
        strides_.resize(factors_.size());
        std::size_t s = 1;
        for (std::size_t i = factors_.size(); i-- > 0;) {
            strides_[i] = s;
            s *= factors_[i]->size();
        }
        std::vector<index_t> ones;
        for (auto& f : factors_) ones.push_back(f->one());
        set_one(from_coords(ones));
        init_tables();
    }

    const std::vector<RingPtr>& factors() const { return factors_; }

    std::vector<index_t> coords(index_t i) const override {
        std::vector<index_t> c(factors_.size());
        std::size_t v = i;
        for (std::size_t k = 0; k < factors_.size(); ++k) {
            c[k] = index_t(v / strides_[k]);
            v %= strides_[k];
        }
        return c;
    }

    index_t from_coords(const std::vector<index_t>& c) const override {
        if (c.size() != factors_.size()) fail("invalid-element", "tuple arity mismatch");
        std::size_t v = 0;
        for (std::size_t k = 0; k < factors_.size(); ++k) {
            if (c[k] >= factors_[k]->size()) fail("invalid-element", "component out of range");
            v += std::size_t(c[k]) * strides_[k];
        }
        return index_t(v);
    }

    std::string format_element(index_t i) const override {
        auto c = coords(i);
        std::string out = "(";
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (k) out += ",";
            out += factors_[k]->format_element(c[k]);
        }
        return out + ")";
    }

protected:
    index_t add_impl(index_t a, index_t b) const override { return zip(a, b, true); }
    index_t mul_impl(index_t a, index_t b) const override { return zip(a, b, false); }
    index_t neg_impl(index_t a) const override {
        auto c = coords(a);
        for (std::size_t k = 0; k < c.size(); ++k) c[k] = factors_[k]->neg(c[k]);
        return from_coords(c);
    }

private:
    index_t zip(index_t a, index_t b, bool is_add) const {
        auto x = coords(a), y = coords(b);
        for (std::size_t k = 0; k < x.size(); ++k)
            x[k] = is_add ? factors_[k]->add(x[k], y[k]) : factors_[k]->mul(x[k], y[k]);
        return from_coords(x);
    }

    static std::size_t checked_size(const std::vector<RingPtr>& fs, std::size_t cap) {
        if (fs.empty()) fail("invalid-ring", "product needs at least one factor");
        std::size_t n = 1;
        for (auto& f : fs) {
            if (n > cap / f->size()) fail("too-large", "product exceeds size cap");
            n *= f->size();
        }
        return n;
    }

    static std::string make_name(const std::vector<RingPtr>& fs) {
        std::string out;
        for (std::size_t i = 0; i < fs.size(); ++i) {
            if (i) out += " * ";
            bool paren = fs[i]->kind() == RingKind::Product ||
                         fs[i]->kind() == RingKind::Idealization;
            out += paren ? "(" + fs[i]->name() + ")" : fs[i]->name();
        }
        return out;
    }

    std::vector<RingPtr> factors_;
    std::vector<std::size_t> strides_;
};

inline std::shared_ptr<const ProductRing> make_product(
    std::vector<RingPtr> factors, std::size_t size_cap = default_limits().ring_size_cap) {
    return std::make_shared<ProductRing>(std::move(factors), size_cap);
}

// ---------------------------------------------------------------------------
// Nagata idealization R(+)M with M an ideal of R

class IdealizationRing final : public FiniteRing {
public:
    IdealizationRing(RingPtr base, std::vector<index_t> module_members,
                     std::vector<index_t> module_gens, std::size_t size_cap)
        : FiniteRing(RingKind::Idealization, checked(base, module_members, size_cap),
                     make_name(base, module_gens, module_members)),
          base_(std::move(base)),
          mod_members_(sorted(std::move(module_members))) {
        pos_.assign(base_->size(), kAbsent);
        for (index_t p = 0; p < mod_members_.size(); ++p) pos_[mod_members_[p]] = p;
        verify_module();
        set_one(index(base_->one(), 0));
        init_tables();
    }

    const RingPtr& base() const { return base_; }
    const std::vector<index_t>& module_members() const { return mod_members_; }

    index_t index(index_t r, index_t mpos) const {
        return index_t(std::size_t(r) * mod_members_.size() + mpos);
    }
    std::pair<index_t, index_t> parts(index_t i) const {
        return {index_t(i / mod_members_.size()),
                mod_members_[i % mod_members_.size()]};
    }
    index_t from_parts(index_t r, index_t m) const {
        index_t p = pos_.at(m);
        if (p == kAbsent) fail("invalid-element", "second component not in module");
        return index(r, p);
    }

    std::vector<index_t> coords(index_t i) const override {
        auto [r, m] = parts(i);
        return {r, m};
    }
    index_t from_coords(const std::vector<index_t>& c) const override {
        if (c.size() != 2) fail("invalid-element", "idealization element is a pair");
        return from_parts(c[0], c[1]);
    }
    std::string format_element(index_t i) const override {
        auto [r, m] = parts(i);
        return "(" + base_->format_element(r) + "," + base_->format_element(m) + ")";
    }

protected:
    index_t add_impl(index_t a, index_t b) const override {
        auto [r1, m1] = parts(a);
        auto [r2, m2] = parts(b);
        return from_parts(base_->add(r1, r2), base_->add(m1, m2));
    }
    index_t mul_impl(index_t a, index_t b) const override {
        auto [r1, m1] = parts(a);
        auto [r2, m2] = parts(b);
        return from_parts(base_->mul(r1, r2),
                          base_->add(base_->mul(r1, m2), base_->mul(r2, m1)));
    }
    index_t neg_impl(index_t a) const override {
        auto [r, m] = parts(a);
        return from_parts(base_->neg(r), base_->neg(m));
    }

private:
    static constexpr index_t kAbsent = ~index_t{0};

    static std::vector<index_t> sorted(std::vector<index_t> v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        return v;
    }

    static std::size_t checked(const RingPtr& base, const std::vector<index_t>& mm,
                               std::size_t cap) {
        if (mm.empty()) fail("invalid-ideal", "module must contain 0");
        std::size_t n = base->size() * sorted(mm).size();
        if (n > cap) fail("too-large", "idealization exceeds size cap");
        return n;
    }

    void verify_module() const {
        if (pos_[0] == kAbsent) fail("invalid-ideal", "module must contain 0");
        for (index_t m : mod_members_) {
            for (index_t m2 : mod_members_)
                if (pos_[base_->add(m, m2)] == kAbsent)
                    fail("invalid-ideal", "module not closed under addition");
            for (index_t r = 0; r < base_->size(); ++r)
                if (pos_[base_->mul(r, m)] == kAbsent)
                    fail("invalid-ideal", "module not closed under ring multiplication");
        }
    }

    static std::string make_name(const RingPtr& base, const std::vector<index_t>& gens,
                                 const std::vector<index_t>& members) {
        std::string g;
        const auto& shown = gens.empty() ? members : gens;
        for (std::size_t i = 0; i < shown.size(); ++i) {
            if (i) g += ",";
            g += base->format_element(shown[i]);
        }
        return base->name() + " (+) ideal(" + g + ")";
    }

    RingPtr base_;
    std::vector<index_t> mod_members_;
    std::vector<index_t> pos_;
};

// ---------------------------------------------------------------------------
// subring of an ambient ring, sharing its element formatting

class SubringRing final : public FiniteRing {
public:
    SubringRing(RingPtr ambient, std::vector<index_t> members)
        : FiniteRing(RingKind::Subring, checked(ambient, members),
                     ambient->name() + " sub<" + std::to_string(members.size()) + ">"),
          ambient_(std::move(ambient)),
          members_(std::move(members)) {
        std::sort(members_.begin(), members_.end());
        pos_.assign(ambient_->size(), kAbsent);
        for (index_t p = 0; p < members_.size(); ++p) pos_[members_[p]] = p;
        verify_closed();
        set_one(pos_[ambient_->one()]);
        init_tables();
    }

    const RingPtr& ambient() const { return ambient_; }
    const std::vector<index_t>& members() const { return members_; }
    index_t to_ambient(index_t i) const { return members_[i]; }
    index_t from_ambient(index_t a) const {
        index_t p = pos_.at(a);
        if (p == kAbsent) fail("invalid-element", "element not in subring");
        return p;
    }
    bool contains_ambient(index_t a) const { return pos_.at(a) != kAbsent; }

    std::vector<index_t> coords(index_t i) const override {
        return ambient_->coords(members_[i]);
    }
    index_t from_coords(const std::vector<index_t>& c) const override {
        return from_ambient(ambient_->from_coords(c));
    }
    std::string format_element(index_t i) const override {
        return ambient_->format_element(members_[i]);
    }

protected:
    index_t add_impl(index_t a, index_t b) const override {
        return pos_[ambient_->add(members_[a], members_[b])];
    }
    index_t mul_impl(index_t a, index_t b) const override {
        return pos_[ambient_->mul(members_[a], members_[b])];
    }
    index_t neg_impl(index_t a) const override { return pos_[ambient_->neg(members_[a])]; }

private:
    static constexpr index_t kAbsent = ~index_t{0};

    static std::size_t checked(const RingPtr& ambient, const std::vector<index_t>& m) {
        if (m.empty()) fail("invalid-ring", "empty subring");
        for (index_t i : m)
            if (i >= ambient->size()) fail("invalid-element", "member outside ambient");
        return m.size();
    }

    void verify_closed() const {
        if (pos_[0] == kAbsent || pos_[ambient_->one()] == kAbsent)
            fail("invalid-ring", "subring must contain 0 and 1");
        for (index_t a : members_) {
            if (pos_[ambient_->neg(a)] == kAbsent)
                fail("invalid-ring", "subring not closed under negation");
            for (index_t b : members_) {
                if (pos_[ambient_->add(a, b)] == kAbsent)
                    fail("invalid-ring", "subring not closed under addition");
                if (pos_[ambient_->mul(a, b)] == kAbsent)
                    fail("invalid-ring", "subring not closed under multiplication");
            }
        }
    }

    RingPtr ambient_;
    std::vector<index_t> members_;
    std::vector<index_t> pos_;
};

inline std::shared_ptr<const SubringRing> make_subring(RingPtr ambient,
                                                       std::vector<index_t> members) {
    return std::make_shared<SubringRing>(std::move(ambient), std::move(members));
}

// ---------------------------------------------------------------------------
// quotient ring (built by ideal.hpp); cosets keyed by least member index

class QuotientRing final : public FiniteRing {
public:
    QuotientRing(RingPtr base, std::vector<index_t> coset_of, std::vector<index_t> reps,
                 std::string name)
        : FiniteRing(RingKind::Quotient, reps.size(), std::move(name)),
          base_(std::move(base)),
          coset_of_(std::move(coset_of)),
          reps_(std::move(reps)) {
        set_one(coset_of_[base_->one()]);
        init_tables();
    }

    const RingPtr& base() const { return base_; }
    index_t rep(index_t i) const { return reps_[i]; }
    index_t coset_of(index_t base_index) const { return coset_of_[base_index]; }

    std::vector<index_t> coords(index_t i) const override { return base_->coords(reps_[i]); }
    index_t from_coords(const std::vector<index_t>& c) const override {
        return coset_of_[base_->from_coords(c)];
    }
    std::string format_element(index_t i) const override {
        return base_->format_element(reps_[i]);
    }

protected:
    index_t add_impl(index_t a, index_t b) const override {
        return coset_of_[base_->add(reps_[a], reps_[b])];
    }
    index_t mul_impl(index_t a, index_t b) const override {
        return coset_of_[base_->mul(reps_[a], reps_[b])];
    }
    index_t neg_impl(index_t a) const override { return coset_of_[base_->neg(reps_[a])]; }

private:
    RingPtr base_;
    std::vector<index_t> coset_of_;  // base index -> quotient index
    std::vector<index_t> reps_;      // quotient index -> least base index in coset
};

// ---------------------------------------------------------------------------
// unit groups

struct UnitGroup {
    RingPtr ring;
    IndexSet units;
    std::unordered_map<index_t, index_t> inverse;

    bool is_unit(index_t x) const { return units.contains(x); }
    index_t inv(index_t x) const {
        auto it = inverse.find(x);
        if (it == inverse.end()) fail("invalid-element", "not a unit");
        return it->second;
    }
};

// x is a unit iff 1 occurs among its powers (finite ring); walks the power
// sequence with an N-step guard, which certifies nonunits as well.
inline UnitGroup units(const RingPtr& R,
                       std::size_t scan_cap = default_limits().scan_cap) {
    if (R->size() > scan_cap) fail("too-large", "unit scan over cap for " + R->name());
    UnitGroup g;
    g.ring = R;
    std::vector<index_t> found;
    const index_t one = R->one();
    for (index_t x = 0; x < R->size(); ++x) {
        index_t prev = one, cur = x;
        for (std::size_t k = 0; k <= R->size(); ++k) {
            if (cur == one) {
                found.push_back(x);
                g.inverse[x] = prev;
                break;
            }
            if (cur == 0) break;
            prev = cur;
            cur = R->mul(cur, x);
        }
    }
    g.units = IndexSet(R->size(), std::move(found));
    return g;
}

// {x : exists y != 0 with xy = 0}; 0 included (nonzero ring)
inline IndexSet zerodivisors(const RingPtr& R,
                             std::size_t scan_cap = default_limits().scan_cap) {
    if (R->size() > scan_cap) fail("too-large", "zerodivisor scan over cap");
    std::vector<index_t> zd;
    for (index_t x = 0; x < R->size(); ++x)
        for (index_t y = 1; y < R->size(); ++y)
            if (R->mul(x, y) == 0) {
                zd.push_back(x);
                break;
            }
    return IndexSet(R->size(), std::move(zd));
}

// smallest subset of S containing seed and {0,1}, closed under +, -, *
inline std::vector<index_t> closure_members(const RingPtr& S, std::vector<index_t> seed) {
    std::vector<bool> in(S->size(), false);
    std::vector<index_t> mem;
    auto push = [&](index_t x) {
        if (!in[x]) {
            in[x] = true;
            mem.push_back(x);
        }
    };
    push(0);
    push(S->one());
    for (index_t s : seed) push(s);
    for (std::size_t i = 0; i < mem.size(); ++i) {
        index_t a = mem[i];
        push(S->neg(a));
        for (std::size_t j = 0; j <= i; ++j) {
            index_t b = mem[j];
            push(S->add(a, b));
            push(S->mul(a, b));
        }
    }
    std::sort(mem.begin(), mem.end());
    return mem;
}

inline std::shared_ptr<const SubringRing> subring_generated(RingPtr S,
                                                            std::vector<index_t> seed) {
    auto mem = closure_members(S, std::move(seed));
    return make_subring(std::move(S), std::move(mem));
}

inline std::shared_ptr<const SubringRing> prime_subring(RingPtr R) {
    return subring_generated(std::move(R), {});
}

inline std::shared_ptr<const IdealizationRing> make_idealization(
    RingPtr base, std::vector<index_t> module_gens,
    std::size_t size_cap = default_limits().ring_size_cap) {
    // close the generators into an ideal of the base
    std::vector<bool> in(base->size(), false);
    std::vector<index_t> mem{0};
    in[0] = true;
    auto push = [&](index_t x) {
        if (!in[x]) {
            in[x] = true;
            mem.push_back(x);
        }
    };
    for (index_t gTmp : module_gens) push(gTmp);
    for (std::size_t i = 0; i < mem.size(); ++i) {
        for (std::size_t j = 0; j <= i; ++j) push(base->add(mem[i], mem[j]));
        for (index_t r = 0; r < base->size(); ++r) push(base->mul(r, mem[i]));
    }
    return std::make_shared<IdealizationRing>(std::move(base), std::move(mem),
                                              std::move(module_gens), size_cap);
}

// ---------------------------------------------------------------------------
// axiom validation (exhaustive below cap, sampled above)

inline void validate_ring_axioms(const RingPtr& R, std::size_t exhaustive_cap = 256,
                                 std::uint64_t seed = 1) {
    const std::size_t n = R->size();
    auto check_triple = [&](index_t a, index_t b, index_t c) {
        if (R->add(a, b) != R->add(b, a)) fail("axiom", "+ not commutative in " + R->name());
        if (R->mul(a, b) != R->mul(b, a)) fail("axiom", "* not commutative in " + R->name());
        if (R->add(R->add(a, b), c) != R->add(a, R->add(b, c)))
            fail("axiom", "+ not associative in " + R->name());
        if (R->mul(R->mul(a, b), c) != R->mul(a, R->mul(b, c)))
            fail("axiom", "* not associative in " + R->name());
        if (R->mul(a, R->add(b, c)) != R->add(R->mul(a, b), R->mul(a, c)))
            fail("axiom", "distributivity fails in " + R->name());
    };
    auto check_unary = [&](index_t a) {
        if (R->add(a, 0) != a) fail("axiom", "0 not neutral in " + R->name());
        if (R->mul(a, R->one()) != a) fail("axiom", "1 not neutral in " + R->name());
        if (R->add(a, R->neg(a)) != 0) fail("axiom", "negation fails in " + R->name());
    };
    if (R->one() == R->zero()) fail("axiom", "0 = 1 in " + R->name());
    if (n <= exhaustive_cap) {
        for (index_t a = 0; a < n; ++a) {
            check_unary(a);
            for (index_t b = 0; b < n; ++b)
                for (index_t c = 0; c < n; ++c) check_triple(a, b, c);
        }
    } else {
        Rng rng(seed);
        for (int t = 0; t < 20000; ++t) {
            index_t a = index_t(rng.below(n)), b = index_t(rng.below(n)),
                    c = index_t(rng.below(n));
            check_unary(a);
            check_triple(a, b, c);
        }
    }
}

}  // namespace ringlab
