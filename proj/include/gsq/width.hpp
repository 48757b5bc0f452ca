#pragma once

// Verbal width by squares: the set S(G), the subgroup it generates, the
// least m with S^m = <S(G)>, and the Cayley diameter of G over S(G).

#include <optional>

#include "gsq/group_table.hpp"

namespace gsq {

struct WidthReport {
    std::size_t order = 0;
    std::size_t squares_count = 0;    // |S(G)|
    std::size_t squares_subgroup = 0; // |<S(G)>|
    bool generates = false;
    int width = 0;                    // least m with S(G)^m = <S(G)>
    std::optional<int> diameter;      // empty when <S(G)> != G
};

namespace detail {

/// Subgroup generated by the listed element indices, as a membership mask.
/// Generators are admitted one by one (each strictly enlarges the closure),
/// so the number of closure rounds is at most log2|G|.
inline std::vector<bool> subgroup_closure(const GroupTable& g,
                                          const std::vector<std::uint32_t>& seed,
                                          std::size_t& size_out) {
    std::vector<bool> in(g.order(), false);
    std::vector<std::uint32_t> members;
    std::vector<std::uint32_t> gens;
    std::vector<std::uint8_t> scratch;
    std::uint32_t e = g.find(Perm::identity(g.degree()).images().data());
    in[e] = true;
    members.push_back(e);
    for (std::uint32_t s : seed) {
        if (in[s]) continue;
        gens.push_back(s);
        // Reclose: every known member can sprout along the enlarged set.
        std::vector<std::uint32_t> queue = members;
        in[s] = true;
        members.push_back(s);
        queue.push_back(s);
        while (!queue.empty()) {
            std::uint32_t x = queue.back();
            queue.pop_back();
            for (std::uint32_t gen : gens) {
                std::uint32_t y = g.compose_index(x, gen, scratch);
                if (!in[y]) {
                    in[y] = true;
                    members.push_back(y);
                    queue.push_back(y);
                }
            }
        }
    }
    size_out = members.size();
    return in;
}

}  // namespace detail

/// Exhaustive width and diameter over the square set.  S(G) contains the
/// identity and is closed under inverses, so distance-m elements are exactly
/// S^m and the BFS below is a plain Cayley search.
inline WidthReport width_by_squares(const GroupTable& g) {
    WidthReport report;
    report.order = g.order();
    std::vector<std::uint32_t> squares = squares_set(g);
    report.squares_count = squares.size();
    std::vector<bool> in_subgroup = detail::subgroup_closure(g, squares, report.squares_subgroup);
    report.generates = report.squares_subgroup == g.order();

    constexpr std::uint16_t kUnknown = 0xffff;
    std::vector<std::uint16_t> dist(g.order(), kUnknown);
    std::uint32_t e = g.find(Perm::identity(g.degree()).images().data());
    dist[e] = 0;
    std::vector<std::uint32_t> connection;  // S(G) without the identity
    for (std::uint32_t s : squares)
        if (s != e) {
            dist[s] = 1;
            connection.push_back(s);
        }
    std::vector<std::uint32_t> unknown;
    for (std::uint32_t i = 0; i < g.order(); ++i)
        if (in_subgroup[i] && dist[i] == kUnknown) unknown.push_back(i);

    std::vector<std::uint32_t> frontier = connection;
    std::vector<std::uint8_t> scratch;
    std::uint16_t level = 1;
    while (!unknown.empty()) {
        ++level;
        std::vector<std::uint32_t> next;
        if (frontier.size() * connection.size() <= unknown.size() * 32 + 1024) {
            // Sparse frontier: expand forward.
            for (std::uint32_t x : frontier)
                for (std::uint32_t s : connection) {
                    std::uint32_t y = g.compose_index(x, s, scratch);
                    if (dist[y] == kUnknown) {
                        dist[y] = level;
                        next.push_back(y);
                    }
                }
            std::erase_if(unknown, [&](std::uint32_t u) { return dist[u] != kUnknown; });
        } else {
            // Dense frontier: test u * s for a previous-level hit; S is
            // inverse-closed so this is membership of u in S^level.
            std::vector<std::uint32_t> still;
            for (std::uint32_t u : unknown) {
                bool hit = false;
                for (std::uint32_t s : connection) {
                    std::uint32_t y = g.compose_index(u, s, scratch);
                    if (dist[y] == level - 1) {
                        hit = true;
                        break;
                    }
                }
                if (hit) {
                    dist[u] = level;
                    next.push_back(u);
                } else {
                    still.push_back(u);
                }
            }
            unknown = std::move(still);
        }
        if (next.empty() && !unknown.empty())
            throw std::logic_error("width_by_squares: subgroup not reached");
        frontier = std::move(next);
    }
    int width = 0;
    for (std::uint32_t i = 0; i < g.order(); ++i)
        if (in_subgroup[i] && dist[i] != kUnknown) width = std::max(width, static_cast<int>(dist[i]));
    report.width = width;
    if (report.generates) report.diameter = width;
    return report;
}

/// Sizes of the decreasing chain G, s(G), s(s(G)), ... down to its fixpoint;
/// equal consecutive sizes mean equal sets from then on.
inline std::vector<std::size_t> iterated_squares_chain(const GroupTable& g) {
    std::vector<std::size_t> sizes{g.order()};
    std::vector<std::uint32_t> current(g.order());
    for (std::uint32_t i = 0; i < g.order(); ++i) current[i] = i;
    std::vector<std::uint8_t> scratch;
    while (true) {
        std::vector<bool> mark(g.order(), false);
        for (std::uint32_t x : current) mark[g.compose_index(x, x, scratch)] = true;
        std::vector<std::uint32_t> next;
        for (std::uint32_t i = 0; i < g.order(); ++i)
            if (mark[i]) next.push_back(i);
        if (next.size() == current.size()) break;
        sizes.push_back(next.size());
        current = std::move(next);
    }
    return sizes;
}

}  // namespace gsq
