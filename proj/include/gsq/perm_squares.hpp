#pragma once

// Squareness decisions and constructive square roots for permutations:
// the criterion for S_n and A_n, root enumeration, two-square
// decompositions of even permutations, and the non-closedness witnesses.

#include <array>
#include <optional>
#include <set>
#include <utility>

#include "gsq/perm.hpp"

namespace gsq {

enum class Ambient { Sn, An };

enum class Obstruction {
    None,
    OddPermutation,        // squares are always even
    UnpairedEvenCycle,     // some even length occurs an odd number of times
    RootParityForcedOdd,   // every root is odd: no duplicate odd length and an
                           // odd number of even-length cycle pairs
};

inline const char* obstruction_name(Obstruction o) {
    switch (o) {
        case Obstruction::None: return "none";
        case Obstruction::OddPermutation: return "odd-permutation";
        case Obstruction::UnpairedEvenCycle: return "unpaired-even-cycle";
        case Obstruction::RootParityForcedOdd: return "root-parity-forced-odd";
    }
    return "?";
}

/// True iff some even cycle length has odd multiplicity; such an element is
/// not a square in S_n (and hence not in A_n).
inline bool even_cycle_obstruction(const CycleType& ct) {
    for (auto [len, m] : ct.multiplicities())
        if (len % 2 == 0 && m % 2 == 1) return true;
    return false;
}

inline bool is_square_in_sn(const CycleType& ct) { return !even_cycle_obstruction(ct); }

/// Criterion for A_n: every even length occurs an even number of times, and
/// the root parity can be corrected: either the even-length pair count is
/// even, or some odd length (fixed points included) occurs at least twice.
inline bool is_square_in_an(const CycleType& ct) {
    if (ct.parity() == Parity::Odd) return false;
    int even_pairs = 0;
    bool duplicate_odd = false;
    for (auto [len, m] : ct.multiplicities()) {
        if (len % 2 == 0) {
            if (m % 2 == 1) return false;
            even_pairs += m / 2;
        } else if (m >= 2) {
            duplicate_odd = true;
        }
    }
    return even_pairs % 2 == 0 || duplicate_odd;
}

/// Square root of an odd-length cycle: the (k+1)/2 power, which is the unique
/// root with the same support and length.
inline std::vector<int> sqrt_odd_cycle(const std::vector<int>& cycle) {
    std::size_t k = cycle.size();
    if (k % 2 == 0) throw std::invalid_argument("sqrt_odd_cycle: cycle length must be odd");
    std::size_t step = (k + 1) / 2;
    std::vector<int> out;
    out.reserve(k);
    std::size_t pos = 0;
    for (std::size_t i = 0; i < k; ++i) {
        out.push_back(cycle[pos]);
        pos = (pos + step) % k;
    }
    return out;
}

/// Interleave two disjoint equal-length cycles into a cycle of twice the
/// length whose square is their product.  Distinct shifts give distinct roots.
inline std::vector<int> interleave_pair(const std::vector<int>& c1, const std::vector<int>& c2,
                                        int shift) {
    std::size_t l = c1.size();
    if (c2.size() != l) throw std::invalid_argument("interleave_pair: unequal cycle lengths");
    if (shift < 0 || static_cast<std::size_t>(shift) >= l)
        throw std::invalid_argument("interleave_pair: shift out of range");
    std::set<int> support(c1.begin(), c1.end());
    for (int x : c2)
        if (!support.insert(x).second)
            throw std::invalid_argument("interleave_pair: overlapping supports");
    std::vector<int> out;
    out.reserve(2 * l);
    for (std::size_t i = 0; i < l; ++i) {
        out.push_back(c1[i]);
        out.push_back(c2[(i + static_cast<std::size_t>(shift)) % l]);
    }
    return out;
}

struct RootReport {
    bool exists_in_sn = false;
    bool exists_in_an = false;
    std::optional<Perm> witness;
    Obstruction obstruction = Obstruction::None;
};

namespace detail {

/// Cycles of p grouped by length, canonical order, fixed points included.
inline std::map<int, std::vector<std::vector<int>>> cycles_by_length(const Perm& p) {
    std::map<int, std::vector<std::vector<int>>> by_len;
    for (auto& cyc : p.cycles(true)) by_len[static_cast<int>(cyc.size())].push_back(std::move(cyc));
    return by_len;
}

}  // namespace detail

/// Decide squareness of g in the requested ambient group and, when a root
/// exists, construct one.  Non-existence is reported, not thrown.
inline RootReport sqrt_permutation(const Perm& g, Ambient ambient) {
    RootReport report;
    CycleType ct(g);
    report.exists_in_sn = is_square_in_sn(ct);
    report.exists_in_an = is_square_in_an(ct);
    if (!report.exists_in_sn) {
        report.obstruction = ct.parity() == Parity::Odd ? Obstruction::OddPermutation
                                                        : Obstruction::UnpairedEvenCycle;
        return report;
    }
    bool want_even = ambient == Ambient::An;
    if (want_even && !report.exists_in_an) {
        report.obstruction = Obstruction::RootParityForcedOdd;
        return report;
    }

    auto by_len = detail::cycles_by_length(g);
    int even_pairs = 0;
    for (auto& [len, cycs] : by_len)
        if (len % 2 == 0) even_pairs += static_cast<int>(cycs.size()) / 2;

    // Parity correction: interleaving a pair of odd-length cycles (fixed
    // points included) adds one even-length root cycle, flipping parity.
    int fix_len = 0;
    if (want_even && even_pairs % 2 == 1) {
        for (auto& [len, cycs] : by_len)
            if (len % 2 == 1 && cycs.size() >= 2) {
                fix_len = len;
                break;
            }
    }

    std::vector<std::vector<int>> root_cycles;
    for (auto& [len, cycs] : by_len) {
        std::size_t start = 0;
        if (len % 2 == 0) {
            for (std::size_t i = 0; i + 1 < cycs.size(); i += 2)
                root_cycles.push_back(interleave_pair(cycs[i], cycs[i + 1], 0));
            continue;
        }
        if (len == fix_len) {
            root_cycles.push_back(interleave_pair(cycs[0], cycs[1], 0));
            start = 2;
        }
        for (std::size_t i = start; i < cycs.size(); ++i)
            root_cycles.push_back(sqrt_odd_cycle(cycs[i]));
    }
    report.witness = Perm::from_cycles(g.degree(), root_cycles);
    return report;
}

enum class RootMode { Constructive, BruteForce };

namespace detail {

inline void enumerate_matchings_rec(std::vector<std::vector<int>>& cycles, std::vector<bool>& used,
                                    bool allow_singles,
                                    std::vector<std::vector<std::vector<int>>>& partial,
                                    std::vector<std::vector<std::vector<int>>>& out) {
    // `partial` holds the root cycles chosen so far for this length class.
    std::size_t first = 0;
    while (first < cycles.size() && used[first]) ++first;
    if (first == cycles.size()) {
        std::vector<std::vector<int>> flat;
        for (auto& group : partial)
            for (auto& c : group) flat.push_back(c);
        out.push_back(std::move(flat));
        return;
    }
    used[first] = true;
    int len = static_cast<int>(cycles[first].size());
    if (allow_singles) {
        partial.push_back({sqrt_odd_cycle(cycles[first])});
        enumerate_matchings_rec(cycles, used, allow_singles, partial, out);
        partial.pop_back();
    }
    for (std::size_t j = first + 1; j < cycles.size(); ++j) {
        if (used[j]) continue;
        used[j] = true;
        for (int shift = 0; shift < len; ++shift) {
            partial.push_back({interleave_pair(cycles[first], cycles[j], shift)});
            enumerate_matchings_rec(cycles, used, allow_singles, partial, out);
            partial.pop_back();
        }
        used[j] = false;
    }
    used[first] = false;
}

/// All ways to root the cycles of one length class: perfect matchings with
/// shifts for even lengths, partial matchings (plus unique single roots) for
/// odd lengths.
inline std::vector<std::vector<std::vector<int>>> root_choices_for_length(
    std::vector<std::vector<int>> cycles, int len) {
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<bool> used(cycles.size(), false);
    std::vector<std::vector<std::vector<int>>> partial;
    enumerate_matchings_rec(cycles, used, len % 2 == 1, partial, out);
    return out;
}

}  // namespace detail

/// All h with h^2 = g.  Constructive mode enumerates cycle matchings and
/// interleave shifts; brute force walks S_n (degree <= 10).
inline std::vector<Perm> enumerate_roots(const Perm& g, RootMode mode) {
    std::vector<Perm> roots;
    if (mode == RootMode::BruteForce) {
        if (g.degree() > 10)
            throw std::invalid_argument("enumerate_roots: brute force needs degree <= 10");
        std::vector<std::uint8_t> images(static_cast<std::size_t>(g.degree()));
        std::iota(images.begin(), images.end(), std::uint8_t{0});
        auto gi = g.images();
        do {
            bool match = true;
            for (std::size_t i = 0; i < images.size(); ++i)
                if (images[images[i]] != gi[i]) {
                    match = false;
                    break;
                }
            if (match) roots.push_back(Perm::from_images(images));
        } while (std::next_permutation(images.begin(), images.end()));
        return roots;  // next_permutation order is already sorted
    }

    CycleType ct(g);
    if (!is_square_in_sn(ct)) return roots;
    std::vector<std::vector<std::vector<std::vector<int>>>> per_length;
    for (auto& [len, cycs] : detail::cycles_by_length(g))
        per_length.push_back(detail::root_choices_for_length(std::move(cycs), len));
    // Cartesian product over length classes.
    std::vector<std::size_t> pick(per_length.size(), 0);
    while (true) {
        std::vector<std::vector<int>> root_cycles;
        for (std::size_t i = 0; i < per_length.size(); ++i)
            for (const auto& c : per_length[i][pick[i]]) root_cycles.push_back(c);
        roots.push_back(Perm::from_cycles(g.degree(), root_cycles));
        std::size_t i = 0;
        for (; i < pick.size(); ++i) {
            if (++pick[i] < per_length[i].size()) break;
            pick[i] = 0;
        }
        if (i == pick.size()) break;
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

struct TwoSquareDecomposition {
    Perm h, t;
};

namespace detail {

/// One member of the two-joint factorization family for a disjoint pair of
/// even cycles B, A: g1 = (b_1..b_m, t, a_1..a_n) and
/// g2 = (b_1, a_{n+1}..a_{last}, t, b_{m+1}..b_{end}) with t = A[0].
/// Both factors are odd-length cycles and g1*g2 = B*A for every m+n even.
inline std::pair<std::vector<int>, std::vector<int>> joint_pair(const std::vector<int>& b,
                                                                const std::vector<int>& a, int m,
                                                                int n) {
    std::vector<int> g1, g2;
    g1.insert(g1.end(), b.begin(), b.begin() + m);
    g1.push_back(a[0]);
    g1.insert(g1.end(), a.begin() + 1, a.begin() + 1 + n);
    g2.push_back(b[0]);
    g2.insert(g2.end(), a.begin() + 1 + n, a.end());
    g2.push_back(a[0]);
    g2.insert(g2.end(), b.begin() + m, b.end());
    return {std::move(g1), std::move(g2)};
}

/// The (m, n) family member selected by a shift index; shift 0 is the
/// canonical construction (m = |B|, n = 0), the rest follow in lexicographic
/// (m, n) order.  There are |A| + |B| - 2 members in total.
inline std::pair<int, int> joint_params(int lb, int la, int shift) {
    std::vector<std::pair<int, int>> family;
    family.emplace_back(lb, 0);
    for (int m = 1; m <= lb; ++m) {
        int lo = (m <= 2) ? 0 : m % 2;
        int hi = (m <= 2) ? la - 1 : m % 2;
        for (int n = lo; n <= hi; ++n) {
            if ((m + n) % 2 != 0) continue;
            if (m == lb && n == 0) continue;
            family.emplace_back(m, n);
        }
    }
    if (shift < 0 || static_cast<std::size_t>(shift) >= family.size())
        throw std::invalid_argument("decompose_two_squares: shift out of range");
    return family[static_cast<std::size_t>(shift)];
}

}  // namespace detail

/// Number of valid shift values for decompose_two_squares.  For an element
/// whose even cycles are a single disjoint pair of lengths 2k and 2r this is
/// 2k + 2r - 2; for a square it is 1.
inline int two_square_shift_count(const Perm& g) {
    CycleType ct(g);
    if (ct.parity() == Parity::Odd)
        throw std::invalid_argument("two_square_shift_count: even permutation required");
    if (is_square_in_an(ct)) return 1;
    auto by_len = detail::cycles_by_length(g);
    std::vector<int> even_lens;
    for (auto& [len, cycs] : by_len)
        if (len % 2 == 0)
            for (std::size_t i = 0; i < cycs.size(); ++i) even_lens.push_back(len);
    return even_lens[0] + even_lens[1] - 2;
}

/// Write an even permutation as h^2 * t^2 with h, t even.  Even cycles are
/// paired in canonical order and factored through two joint odd cycles; odd
/// cycles go to the h side.  A square decomposes as (root, identity).
inline TwoSquareDecomposition decompose_two_squares(const Perm& g, int shift = 0) {
    CycleType ct(g);
    if (ct.parity() == Parity::Odd)
        throw std::invalid_argument("decompose_two_squares: even permutation required");
    if (g.degree() < 4) throw std::invalid_argument("decompose_two_squares: degree >= 4 required");
    if (is_square_in_an(ct)) {
        if (shift != 0) throw std::invalid_argument("decompose_two_squares: shift out of range");
        return {*sqrt_permutation(g, Ambient::An).witness, Perm::identity(g.degree())};
    }

    auto by_len = detail::cycles_by_length(g);
    std::vector<std::vector<int>> even_cycles;
    std::vector<std::vector<int>> h_cycles, t_cycles;
    for (auto& [len, cycs] : by_len) {
        if (len % 2 == 0)
            for (auto& c : cycs) even_cycles.push_back(std::move(c));
        else
            for (auto& c : cycs) h_cycles.push_back(sqrt_odd_cycle(c));
    }
    // An even permutation has an even number of even-length cycles.
    for (std::size_t i = 0; i + 1 < even_cycles.size(); i += 2) {
        const auto& b = even_cycles[i];
        const auto& a = even_cycles[i + 1];
        auto [m, n] = i == 0 ? detail::joint_params(static_cast<int>(b.size()),
                                                    static_cast<int>(a.size()), shift)
                             : std::pair<int, int>{static_cast<int>(b.size()), 0};
        auto [g1, g2] = detail::joint_pair(b, a, m, n);
        h_cycles.push_back(sqrt_odd_cycle(g1));
        t_cycles.push_back(sqrt_odd_cycle(g2));
    }
    return {Perm::from_cycles(g.degree(), h_cycles), Perm::from_cycles(g.degree(), t_cycles)};
}

/// x = a, y = a^-1 b a, z = a^-1 b^-1; then x^2 y^2 z^2 = a b a^-1 b^-1.
inline std::array<Perm, 3> commutator_three_squares(const Perm& a, const Perm& b) {
    if (a.degree() != b.degree())
        throw std::invalid_argument("commutator_three_squares: degree mismatch");
    Perm ainv = a.inverse();
    return {a, compose(compose(ainv, b), a), compose(ainv, b.inverse())};
}

/// A pair g1, g2 in S(A_n) whose product is not in S(A_n).
inline std::pair<Perm, Perm> squares_not_closed_witness(int n) {
    if (n < 4) throw std::invalid_argument("squares_not_closed_witness: n >= 4 required");
    if (n <= 5)
        return {Perm::parse("(1,2,3)", n), Perm::parse("(2,3,4)", n)};
    if (n >= 10)
        return {Perm::parse("(1,3,5)(4,6)(7,8)", n), Perm::parse("(6,7)(9,10)", n)};
    // Product (1,2)(3,4,5,6) has two unpaired even cycles at every degree.
    return {Perm::parse("(1,2,3)", n), Perm::parse("(1,4,5,6,3)", n)};
}

}  // namespace gsq
