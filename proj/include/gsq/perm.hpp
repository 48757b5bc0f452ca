#pragma once

// Permutations of {1..n} with left-to-right composition, cycle decomposition
// and the statistics (cycle type, parity, decrement) everything else is
// built on.  Points are 1-based in all I/O and 0-based in storage.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gsq {

inline constexpr int kMaxDegree = 64;

enum class Parity { Even, Odd };

/// Error thrown by Perm::parse with the offending input position.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

class Perm {
public:
    Perm() = default;

    static Perm identity(int degree) {
        check_degree(degree);
        Perm p;
        p.images_.resize(static_cast<std::size_t>(degree));
        std::iota(p.images_.begin(), p.images_.end(), std::uint8_t{0});
        return p;
    }

    /// Build from a 0-based image array; validates that it is a bijection.
    static Perm from_images(std::vector<std::uint8_t> images) {
        check_degree(static_cast<int>(images.size()));
        std::vector<bool> seen(images.size(), false);
        for (std::uint8_t v : images) {
            if (v >= images.size() || seen[v])
                throw std::invalid_argument("image array is not a bijection");
            seen[v] = true;
        }
        Perm p;
        p.images_ = std::move(images);
        return p;
    }

    /// Build from disjoint cycles of 1-based points.
    static Perm from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
        Perm p = identity(degree);
        std::vector<bool> used(static_cast<std::size_t>(degree), false);
        for (const auto& cyc : cycles) {
            for (std::size_t i = 0; i < cyc.size(); ++i) {
                int from = cyc[i];
                int to = cyc[(i + 1) % cyc.size()];
                if (from < 1 || from > degree)
                    throw std::invalid_argument("cycle point out of range");
                if (used[static_cast<std::size_t>(from - 1)])
                    throw std::invalid_argument("cycles are not disjoint");
                used[static_cast<std::size_t>(from - 1)] = true;
                p.images_[static_cast<std::size_t>(from - 1)] = static_cast<std::uint8_t>(to - 1);
            }
        }
        return p;
    }

    /// Parse cycle notation: `(a,b,c)(d,e)`, `()` or `e` for the identity.
    /// Whitespace is allowed between tokens.  With degree = 0 the degree is
    /// inferred as the largest point mentioned.
    static Perm parse(std::string_view text, int degree = 0);

    int degree() const { return static_cast<int>(images_.size()); }

    /// Image of a 1-based point.
    int apply(int point) const {
        if (point < 1 || point > degree()) throw std::out_of_range("point out of range");
        return images_[static_cast<std::size_t>(point - 1)] + 1;
    }

    std::uint8_t apply0(std::uint8_t point) const { return images_[point]; }

    std::span<const std::uint8_t> images() const { return images_; }

    bool is_identity() const {
        for (std::size_t i = 0; i < images_.size(); ++i)
            if (images_[i] != i) return false;
        return true;
    }

    Perm inverse() const {
        Perm q;
        q.images_.resize(images_.size());
        for (std::size_t i = 0; i < images_.size(); ++i)
            q.images_[images_[i]] = static_cast<std::uint8_t>(i);
        return q;
    }

    /// Disjoint cycles, canonical form: sorted by smallest element, each
    /// rotated to start at its smallest element.  1-based points.
    std::vector<std::vector<int>> cycles(bool include_fixed = false) const {
        std::vector<std::vector<int>> out;
        std::vector<bool> seen(images_.size(), false);
        for (std::size_t start = 0; start < images_.size(); ++start) {
            if (seen[start]) continue;
            std::vector<int> cyc;
            std::size_t x = start;
            do {
                seen[x] = true;
                cyc.push_back(static_cast<int>(x) + 1);
                x = images_[x];
            } while (x != start);
            if (cyc.size() > 1 || include_fixed) out.push_back(std::move(cyc));
        }
        return out;
    }

    /// Canonical cycle notation; fixed points omitted, identity is "()".
    std::string to_cycle_string() const {
        auto cycs = cycles(false);
        if (cycs.empty()) return "()";
        std::string out;
        for (const auto& cyc : cycs) {
            out += '(';
            for (std::size_t i = 0; i < cyc.size(); ++i) {
                if (i) out += ',';
                out += std::to_string(cyc[i]);
            }
            out += ')';
        }
        return out;
    }

    friend bool operator==(const Perm&, const Perm&) = default;
    friend auto operator<=>(const Perm&, const Perm&) = default;

private:
    static void check_degree(int degree) {
        if (degree < 0 || degree > kMaxDegree)
            throw std::invalid_argument("degree must be between 0 and 64");
    }

    std::vector<std::uint8_t> images_;
};

/// Left-to-right composition: (p*q)(i) = q(p(i)).
inline Perm compose(const Perm& p, const Perm& q) {
    if (p.degree() != q.degree())
        throw std::invalid_argument("compose: degree mismatch");
    std::vector<std::uint8_t> out(static_cast<std::size_t>(p.degree()));
    auto pi = p.images(), qi = q.images();
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = qi[pi[i]];
    return Perm::from_images(std::move(out));
}

inline Perm power(const Perm& p, long long k) {
    Perm base = k < 0 ? p.inverse() : p;
    unsigned long long e = k < 0 ? static_cast<unsigned long long>(-(k + 1)) + 1
                                 : static_cast<unsigned long long>(k);
    Perm acc = Perm::identity(p.degree());
    while (e) {
        if (e & 1) acc = compose(acc, base);
        base = compose(base, base);
        e >>= 1;
    }
    return acc;
}

/// Multiset of cycle lengths, including fixed points as length-1 cycles.
class CycleType {
public:
    CycleType() = default;

    explicit CycleType(const Perm& p) : degree_(p.degree()) {
        for (const auto& cyc : p.cycles(true))
            ++mult_[static_cast<int>(cyc.size())];
    }

    /// Build directly from a {length -> multiplicity} map.
    CycleType(int degree, std::map<int, int> multiplicities)
        : degree_(degree), mult_(std::move(multiplicities)) {
        int total = 0;
        for (auto [len, m] : mult_) {
            if (len < 1 || m < 0) throw std::invalid_argument("bad cycle type");
            total += len * m;
        }
        if (total != degree) throw std::invalid_argument("cycle type does not sum to degree");
    }

    int degree() const { return degree_; }

    int multiplicity(int len) const {
        auto it = mult_.find(len);
        return it == mult_.end() ? 0 : it->second;
    }

    /// p_l = floor(m_l / 2), the number of disjoint same-length pairs.
    int pairs(int len) const { return multiplicity(len) / 2; }

    int fixed_points() const { return multiplicity(1); }

    int cycle_count() const {
        int k = 0;
        for (auto [len, m] : mult_) k += m;
        return k;
    }

    int decrement() const { return degree_ - cycle_count(); }

    Parity parity() const {
        int even_cycles = 0;
        for (auto [len, m] : mult_)
            if (len % 2 == 0) even_cycles += m;
        return even_cycles % 2 == 0 ? Parity::Even : Parity::Odd;
    }

    const std::map<int, int>& multiplicities() const { return mult_; }

    friend bool operator==(const CycleType&, const CycleType&) = default;

private:
    int degree_ = 0;
    std::map<int, int> mult_;
};

inline CycleType cycle_type(const Perm& p) { return CycleType(p); }

inline Parity parity(const Perm& p) { return CycleType(p).parity(); }

inline int decrement(const Perm& p) { return CycleType(p).decrement(); }

inline Perm Perm::parse(std::string_view text, int degree) {
    std::vector<std::vector<int>> cycles;
    std::size_t i = 0;
    int max_point = 0;
    auto skip_ws = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    skip_ws();
    if (i < text.size() && text[i] == 'e') {
        ++i;
        skip_ws();
        if (i != text.size()) throw ParseError("trailing input after identity", i);
    } else {
        while (i < text.size()) {
            if (text[i] != '(') throw ParseError("expected '('", i);
            ++i;
            skip_ws();
            std::vector<int> cyc;
            while (i < text.size() && text[i] != ')') {
                if (!cyc.empty()) {
                    if (text[i] != ',') throw ParseError("expected ',' or ')'", i);
                    ++i;
                    skip_ws();
                }
                std::size_t start = i;
                int value = 0;
                while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
                    value = value * 10 + (text[i] - '0');
                    if (value > kMaxDegree) throw ParseError("point exceeds maximum degree 64", start);
                    ++i;
                }
                if (i == start) throw ParseError("expected a point", i);
                if (value < 1) throw ParseError("points are 1-based", start);
                cyc.push_back(value);
                max_point = std::max(max_point, value);
                skip_ws();
            }
            if (i == text.size()) throw ParseError("unterminated cycle", i);
            ++i;  // ')'
            if (!cyc.empty()) cycles.push_back(std::move(cyc));
            skip_ws();
        }
    }
    if (degree == 0) degree = max_point;
    if (degree < max_point) throw ParseError("degree smaller than largest moved point", 0);
    try {
        return Perm::from_cycles(degree, cycles);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), 0);
    }
}

}  // namespace gsq
