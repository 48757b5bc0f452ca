#pragma once

// Exhaustive enumeration of a finite permutation group from generators.
// Elements live in one contiguous byte arena (degree bytes each, in BFS
// discovery order) indexed by an open-addressing hash table, so closures
// over groups with ~10^6 elements stay cheap.

#include <cstdint>
#include <cstring>
#include <vector>

#include "gsq/perm.hpp"

namespace gsq {

namespace detail {

inline std::uint64_t hash_bytes(const std::uint8_t* s, std::size_t n) {
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a
    for (std::size_t i = 0; i < n; ++i) {
        h ^= s[i];
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace detail

class GroupTable {
public:
    /// Breadth-first closure of the generators.  Throws if the closure
    /// exceeds `limit` elements.
    static GroupTable enumerate(std::vector<Perm> generators, std::size_t limit = 1000000) {
        if (generators.empty()) throw std::invalid_argument("enumerate: no generators");
        int degree = generators.front().degree();
        for (const Perm& g : generators)
            if (g.degree() != degree) throw std::invalid_argument("enumerate: degree mismatch");

        GroupTable table(degree, std::move(generators));
        table.arena_.reserve(std::min<std::size_t>(limit, 1 << 20) * static_cast<std::size_t>(degree));
        std::vector<std::uint8_t> scratch(static_cast<std::size_t>(degree));
        Perm e = Perm::identity(degree);
        table.insert(e.images().data());
        for (std::size_t head = 0; head < table.order(); ++head) {
            for (const Perm& g : table.gens_) {
                const std::uint8_t* cur = table.at(head);
                auto gi = g.images();
                for (int i = 0; i < degree; ++i) scratch[static_cast<std::size_t>(i)] = gi[cur[i]];
                if (table.find(scratch.data()) == kNone) {
                    if (table.order() >= limit)
                        throw std::runtime_error("enumerate: closure exceeds element limit");
                    table.insert(scratch.data());
                }
            }
        }
        return table;
    }

    int degree() const { return degree_; }
    std::size_t order() const { return count_; }
    const std::vector<Perm>& generators() const { return gens_; }

    /// Raw image bytes of element i (BFS discovery order).
    const std::uint8_t* at(std::size_t i) const {
        return arena_.data() + i * static_cast<std::size_t>(degree_);
    }

    Perm element(std::size_t i) const {
        const std::uint8_t* p = at(i);
        return Perm::from_images(std::vector<std::uint8_t>(p, p + degree_));
    }

    static constexpr std::uint32_t kNone = 0xffffffffu;

    std::uint32_t find(const std::uint8_t* key) const {
        std::size_t n = static_cast<std::size_t>(degree_);
        std::size_t mask = slots_.size() - 1;
        std::size_t pos = detail::hash_bytes(key, n) & mask;
        while (true) {
            std::uint32_t id = slots_[pos];
            if (id == kNone) return kNone;
            if (std::memcmp(at(id), key, n) == 0) return id;
            pos = (pos + 1) & mask;
        }
    }

    std::uint32_t index_of(const Perm& p) const {
        if (p.degree() != degree_) throw std::invalid_argument("index_of: degree mismatch");
        return find(p.images().data());
    }

    bool contains(const Perm& p) const { return index_of(p) != kNone; }

    /// Index of element(i) * element(j) (left-to-right).
    std::uint32_t compose_index(std::uint32_t i, std::uint32_t j, std::vector<std::uint8_t>& scratch) const {
        const std::uint8_t* pi = at(i);
        const std::uint8_t* pj = at(j);
        scratch.resize(static_cast<std::size_t>(degree_));
        for (int k = 0; k < degree_; ++k) scratch[static_cast<std::size_t>(k)] = pj[pi[k]];
        return find(scratch.data());
    }

private:
    GroupTable(int degree, std::vector<Perm> gens) : degree_(degree), gens_(std::move(gens)) {
        slots_.assign(1024, kNone);
    }

    void insert(const std::uint8_t* key) {
        std::size_t n = static_cast<std::size_t>(degree_);
        arena_.insert(arena_.end(), key, key + n);
        std::uint32_t id = static_cast<std::uint32_t>(count_++);
        if (count_ * 10 >= slots_.size() * 7) grow();
        place(at(id), id);
    }

    void place(const std::uint8_t* key, std::uint32_t id) {
        std::size_t mask = slots_.size() - 1;
        std::size_t pos = detail::hash_bytes(key, static_cast<std::size_t>(degree_)) & mask;
        while (slots_[pos] != kNone) pos = (pos + 1) & mask;
        slots_[pos] = id;
    }

    void grow() {
        std::vector<std::uint32_t> old = std::move(slots_);
        slots_.assign(old.size() * 2, kNone);
        for (std::uint32_t i = 0; i < count_; ++i) place(at(i), i);
    }

    int degree_;
    std::vector<Perm> gens_;
    std::vector<std::uint8_t> arena_;
    std::vector<std::uint32_t> slots_;
    std::size_t count_ = 0;
};

/// Indices of {g^2 : g in G}, deduplicated and sorted.
inline std::vector<std::uint32_t> squares_set(const GroupTable& g) {
    std::vector<bool> mark(g.order(), false);
    std::vector<std::uint8_t> scratch;
    for (std::uint32_t i = 0; i < g.order(); ++i)
        mark[g.compose_index(i, i, scratch)] = true;
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 0; i < g.order(); ++i)
        if (mark[i]) out.push_back(i);
    return out;
}

}  // namespace gsq
