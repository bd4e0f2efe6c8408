#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ringlab {

using index_t = std::uint32_t;

// Error with a stable machine-readable code ("invalid-ring", "too-large", ...).
class error : public std::runtime_error {
public:
    error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& what) {
    throw error(code, what);
}

// Caps for exhaustive scans. Everything is exact; caps only bound search effort.
struct Limits {
    std::size_t ring_size_cap = std::size_t{1} << 16;  // max element count of any ring
    std::size_t scan_cap = std::size_t{1} << 16;       // max N for O(N^2) element scans
    std::size_t lattice_cap = 64;                      // max |S| for lattice enumeration
    std::size_t lattice_cap_hard = 256;                // flag-raisable ceiling
    std::size_t hom_check_cap = 4096;                  // exhaustive morphism validation below this
    std::size_t pair_scan_cap = 10'000'000;            // population cap for pair scans
    std::size_t comonic_cap = 1024;                    // |S| cap for comonic root search
    int comonic_degree = 4;
    int tail_degree_single = 4;
    int tail_degree_pair = 2;
};

inline const Limits& default_limits() {
    static const Limits l{};
    return l;
}

// Sorted index set with O(1) membership, fixed universe size.
class IndexSet {
public:
    IndexSet() = default;
    IndexSet(std::size_t universe, std::vector<index_t> elems) : bits_(universe, false) {
        std::sort(elems.begin(), elems.end());
        elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
        sorted_ = std::move(elems);
        for (index_t i : sorted_) bits_.at(i) = true;
    }

    bool contains(index_t i) const { return i < bits_.size() && bits_[i]; }
    std::size_t size() const { return sorted_.size(); }
    std::size_t universe() const { return bits_.size(); }
    bool empty() const { return sorted_.empty(); }
    const std::vector<index_t>& items() const { return sorted_; }

    bool operator==(const IndexSet& o) const { return sorted_ == o.sorted_; }
    bool operator!=(const IndexSet& o) const { return sorted_ != o.sorted_; }

    bool subset_of(const IndexSet& o) const {
        for (index_t i : sorted_)
            if (!o.contains(i)) return false;
        return true;
    }

    static IndexSet intersect(const IndexSet& a, const IndexSet& b) {
        std::vector<index_t> out;
        for (index_t i : a.items())
            if (b.contains(i)) out.push_back(i);
        return IndexSet(std::max(a.universe(), b.universe()), std::move(out));
    }

private:
    std::vector<index_t> sorted_;
    std::vector<bool> bits_;
};

// Deterministic RNG helper; avoids distribution objects so output is stable.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}
    std::uint64_t next() {
        // splitmix64
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

private:
    std::uint64_t state_;
};

}  // namespace ringlab
