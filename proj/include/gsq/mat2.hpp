#pragma once

// Square roots of 2x2 matrices over F_p in GL2, SL2 and PSL2: spectral
// classification, residue criteria, and explicit root construction through
// the commutative algebra <E, A> (every root of a non-scalar matrix lies
// there).  Characteristic 2 is decided by exhaustion in the 6-element group.

#include <optional>
#include <string>
#include <vector>

#include "gsq/fp.hpp"

namespace gsq {

struct Mat2 {
    std::uint64_t a = 0, b = 0, c = 0, d = 0;  // [[a,b],[c,d]]
    friend bool operator==(const Mat2&, const Mat2&) = default;
    friend auto operator<=>(const Mat2&, const Mat2&) = default;
};

enum class MatGroup { GL2, SL2, PSL2 };

enum class MatKind { Scalar, SplitDistinct, JordanBlock, Irreducible };

inline const char* mat_group_name(MatGroup g) {
    switch (g) {
        case MatGroup::GL2: return "gl2";
        case MatGroup::SL2: return "sl2";
        case MatGroup::PSL2: return "psl2";
    }
    return "?";
}

inline const char* mat_kind_name(MatKind k) {
    switch (k) {
        case MatKind::Scalar: return "scalar";
        case MatKind::SplitDistinct: return "split-distinct";
        case MatKind::JordanBlock: return "jordan-block";
        case MatKind::Irreducible: return "irreducible";
    }
    return "?";
}

/// Classification result; lambda1/lambda2 are the F_p eigenvalues where they
/// exist (equal for Scalar and JordanBlock, sorted for SplitDistinct).
struct MatrixClass {
    MatKind kind;
    std::uint64_t lambda1 = 0, lambda2 = 0;
};

inline std::uint64_t mat_trace(const PrimeField& f, const Mat2& m) { return f.add(m.a, m.d); }

inline std::uint64_t mat_det(const PrimeField& f, const Mat2& m) {
    return f.sub(f.mul(m.a, m.d), f.mul(m.b, m.c));
}

inline Mat2 mat_mul(const PrimeField& f, const Mat2& x, const Mat2& y) {
    return {f.add(f.mul(x.a, y.a), f.mul(x.b, y.c)), f.add(f.mul(x.a, y.b), f.mul(x.b, y.d)),
            f.add(f.mul(x.c, y.a), f.mul(x.d, y.c)), f.add(f.mul(x.c, y.b), f.mul(x.d, y.d))};
}

inline Mat2 mat_neg(const PrimeField& f, const Mat2& m) {
    return {f.neg(m.a), f.neg(m.b), f.neg(m.c), f.neg(m.d)};
}

inline Mat2 mat_identity() { return {1, 0, 0, 1}; }

inline Mat2 mat_scalar(std::uint64_t lambda) { return {lambda, 0, 0, lambda}; }

inline Mat2 mat_inv(const PrimeField& f, const Mat2& m) {
    std::uint64_t det = mat_det(f, m);
    std::uint64_t di = f.inv(det);
    return {f.mul(di, m.d), f.mul(di, f.neg(m.b)), f.mul(di, f.neg(m.c)), f.mul(di, m.a)};
}

inline bool mat_is_scalar(const Mat2& m) { return m.b == 0 && m.c == 0 && m.a == m.d; }

inline bool in_group(const PrimeField& f, const Mat2& m, MatGroup g) {
    std::uint64_t det = mat_det(f, m);
    return g == MatGroup::GL2 ? det != 0 : det == 1;
}

/// Canonical sign representative in PSL2: the first nonzero entry in
/// row-major order lies in {1..(p-1)/2}.
inline Mat2 psl2_canonical(const PrimeField& f, const Mat2& m) {
    std::uint64_t half = (f.p() - 1) / 2;
    for (std::uint64_t e : {m.a, m.b, m.c, m.d}) {
        if (e == 0) continue;
        return e <= half ? m : mat_neg(f, m);
    }
    return m;
}

inline bool mat_equal_in(const PrimeField& f, MatGroup g, const Mat2& x, const Mat2& y) {
    if (g != MatGroup::PSL2) return x == y;
    return x == y || x == mat_neg(f, y);
}

/// Spectral classification by the discriminant tr^2 - 4 det.  Singular
/// matrices are rejected.
inline MatrixClass classify(const PrimeField& f, const Mat2& m) {
    std::uint64_t det = mat_det(f, m);
    if (det == 0) throw std::invalid_argument("classify: singular matrix");
    std::uint64_t tr = mat_trace(f, m);
    if (f.p() == 2) {
        // Nonsingular over F_2 means det = 1, so chi(x) = x^2 + tr x + 1:
        // a double root at 1 when tr = 0, irreducible otherwise.
        if (tr == 0) return {mat_is_scalar(m) ? MatKind::Scalar : MatKind::JordanBlock, 1, 1};
        return {MatKind::Irreducible, 0, 0};
    }
    std::uint64_t disc = f.sub(f.mul(tr, tr), f.mul(4 % f.p(), det));
    int ls = f.legendre(disc);
    if (ls == 0) {
        std::uint64_t lambda = f.half(tr);
        return {mat_is_scalar(m) ? MatKind::Scalar : MatKind::JordanBlock, lambda, lambda};
    }
    if (ls == 1) {
        std::uint64_t s = *f.sqrt(disc);
        std::uint64_t l1 = f.half(f.add(tr, s)), l2 = f.half(f.sub(tr, s));
        if (l1 > l2) std::swap(l1, l2);
        return {MatKind::SplitDistinct, l1, l2};
    }
    return {MatKind::Irreducible, 0, 0};
}

/// Eigenvalues over F_{p^2} (conjugate pair when irreducible).
inline std::pair<Fp2, Fp2> eigenvalues_fp2(const QuadExt& ext, const Mat2& m) {
    const PrimeField& f = ext.field();
    std::uint64_t tr = mat_trace(f, m);
    std::uint64_t disc = f.sub(f.mul(tr, tr), f.mul(4 % f.p(), mat_det(f, m)));
    Fp2 s = *ext.sqrt(ext.from_base(disc));
    std::uint64_t ih = f.inv(2);
    Fp2 l1 = {f.mul(f.add(tr, s.a), ih), f.mul(s.b, ih)};
    Fp2 l2 = {f.mul(f.sub(tr, s.a), ih), f.mul(f.neg(s.b), ih)};
    return {l1, l2};
}

namespace detail {

inline void mat_enumerate(const PrimeField& f, MatGroup g, auto&& visit) {
    std::uint64_t p = f.p();
    for (std::uint64_t a = 0; a < p; ++a)
        for (std::uint64_t b = 0; b < p; ++b)
            for (std::uint64_t c = 0; c < p; ++c)
                for (std::uint64_t d = 0; d < p; ++d) {
                    Mat2 m{a, b, c, d};
                    if (!in_group(f, m, g)) continue;
                    if (g == MatGroup::PSL2 && psl2_canonical(f, m) != m) continue;
                    visit(m);
                }
}

inline std::optional<Mat2> sqrt_char2(const PrimeField& f, const Mat2& m) {
    std::optional<Mat2> root;
    mat_enumerate(f, MatGroup::GL2, [&](const Mat2& b) {
        if (!root && mat_mul(f, b, b) == m) root = b;
    });
    return root;
}

/// Algebra construction for non-scalar A: B = u E + v A with
/// u = s v w, v^2 = 1/(tr + 2 s w), w^2 = det; then det B = s w.
inline std::optional<Mat2> sqrt_algebra(const PrimeField& f, const Mat2& m, std::uint64_t w,
                                        int sign) {
    std::uint64_t sw = sign == 1 ? w : f.neg(w);
    std::uint64_t denom = f.add(mat_trace(f, m), f.add(sw, sw));
    if (denom == 0 || f.legendre(denom) != 1) return std::nullopt;
    std::uint64_t v = *f.sqrt(f.inv(denom));
    std::uint64_t u = f.mul(sw, v);
    return Mat2{f.add(u, f.mul(v, m.a)), f.mul(v, m.b), f.mul(v, m.c), f.add(u, f.mul(v, m.d))};
}

/// Jordan branch: A = U J U^-1 with J = [[lambda,1],[0,lambda]]; the root is
/// U [[beta, (2 beta)^-1],[0, beta]] U^-1 with beta^2 = lambda.
inline std::optional<Mat2> sqrt_jordan(const PrimeField& f, const Mat2& m, std::uint64_t lambda) {
    auto beta = f.sqrt(lambda);
    if (!beta) return std::nullopt;
    // Nilpotent part N = A - lambda E; columns of U are (N x, x) for any x
    // outside ker N.
    Mat2 n{f.sub(m.a, lambda), m.b, m.c, f.sub(m.d, lambda)};
    std::uint64_t w1, w2, v1, v2;
    if (n.a != 0 || n.c != 0) {
        v1 = 1, v2 = 0, w1 = n.a, w2 = n.c;
    } else {
        v1 = 0, v2 = 1, w1 = n.b, w2 = n.d;
    }
    Mat2 u{w1, v1, w2, v2};
    std::uint64_t gamma = f.inv(f.add(*beta, *beta));
    Mat2 ut{*beta, gamma, 0, *beta};
    return mat_mul(f, mat_mul(f, u, ut), mat_inv(f, u));
}

inline std::optional<Mat2> sqrt_in_sl2_or_gl2(const PrimeField& f, const Mat2& m, MatGroup g) {
    MatrixClass cls = classify(f, m);
    std::uint64_t det = mat_det(f, m);
    switch (cls.kind) {
        case MatKind::Scalar: {
            std::uint64_t lambda = cls.lambda1;
            if (g == MatGroup::SL2) {
                if (lambda == 1) return mat_identity();
                return Mat2{0, 1, f.neg(1), 0};  // squares to -E
            }
            if (auto r = f.sqrt(lambda)) return mat_scalar(*r);
            return Mat2{0, 1, lambda, 0};  // companion root, det = -lambda
        }
        case MatKind::JordanBlock: {
            if (g == MatGroup::SL2 && cls.lambda1 != 1) return std::nullopt;
            return sqrt_jordan(f, m, cls.lambda1);
        }
        case MatKind::SplitDistinct:
        case MatKind::Irreducible: {
            if (g == MatGroup::SL2) return sqrt_algebra(f, m, 1, 1);
            if (f.legendre(det) != 1) return std::nullopt;
            std::uint64_t w = *f.sqrt(det);
            if (auto r = sqrt_algebra(f, m, w, 1)) return r;
            return sqrt_algebra(f, m, w, -1);
        }
    }
    return std::nullopt;
}

}  // namespace detail

/// Construct a root B in G with B^2 = A (B^2 = +-A for PSL2), or nothing.
inline std::optional<Mat2> sqrt(const PrimeField& f, const Mat2& m, MatGroup g) {
    if (!in_group(f, m, g)) throw std::invalid_argument("sqrt: matrix not in the requested group");
    if (f.p() == 2) return detail::sqrt_char2(f, m);
    if (g == MatGroup::PSL2) {
        auto r = detail::sqrt_in_sl2_or_gl2(f, m, MatGroup::SL2);
        if (!r) r = detail::sqrt_in_sl2_or_gl2(f, mat_neg(f, m), MatGroup::SL2);
        if (!r) return std::nullopt;
        return psl2_canonical(f, *r);
    }
    return detail::sqrt_in_sl2_or_gl2(f, m, g);
}

/// Residue-criterion decision of root existence, by spectral class.
inline bool has_sqrt(const PrimeField& f, const Mat2& m, MatGroup g) {
    if (!in_group(f, m, g))
        throw std::invalid_argument("has_sqrt: matrix not in the requested group");
    if (f.p() == 2) return detail::sqrt_char2(f, m).has_value();
    std::uint64_t tr = mat_trace(f, m);
    MatrixClass cls = classify(f, m);
    switch (cls.kind) {
        case MatKind::Scalar:
            return true;  // residue root or the companion [[0,1],[lambda,0]]
        case MatKind::JordanBlock:
            switch (g) {
                case MatGroup::GL2: return f.legendre(cls.lambda1) == 1;
                case MatGroup::SL2: return cls.lambda1 == 1;  // det B = lambda
                case MatGroup::PSL2: return true;             // lambda = +-1; -A works for -1
            }
            return false;
        case MatKind::SplitDistinct: {
            bool plain = f.legendre(cls.lambda1) == 1 && f.legendre(cls.lambda2) == 1;
            if (g != MatGroup::PSL2 || plain) return plain;
            return f.legendre(f.neg(cls.lambda1)) == 1 && f.legendre(f.neg(cls.lambda2)) == 1;
        }
        case MatKind::Irreducible:
            // The eigenvalue is a square in F_{p^2} iff its norm det(A) is a
            // residue; landing in SL2 additionally pins det B = 1, which is
            // the tr(A)+2 condition.
            switch (g) {
                case MatGroup::GL2: return f.legendre(mat_det(f, m)) == 1;
                case MatGroup::SL2: return f.legendre(f.add(tr, 2)) == 1;
                case MatGroup::PSL2:
                    return f.legendre(f.add(tr, 2)) == 1 || f.legendre(f.sub(2, tr)) == 1;
            }
            return false;
    }
    return false;
}

/// Oracle: the exact root set by exhausting G.  p <= 17.
inline std::vector<Mat2> brute_force_roots(const PrimeField& f, const Mat2& m, MatGroup g) {
    if (f.p() > 17) throw std::invalid_argument("brute_force_roots: p <= 17 required");
    if (!in_group(f, m, g))
        throw std::invalid_argument("brute_force_roots: matrix not in the requested group");
    std::vector<Mat2> roots;
    detail::mat_enumerate(f, g, [&](const Mat2& b) {
        Mat2 sq = mat_mul(f, b, b);
        if (mat_equal_in(f, g, sq, m)) roots.push_back(b);
    });
    return roots;  // enumeration order is row-major lexicographic
}

/// x = a, y = a^-1 b a, z = a^-1 b^-1; x^2 y^2 z^2 is the commutator.
inline std::array<Mat2, 3> commutator_three_squares_matrix(const PrimeField& f, const Mat2& a,
                                                           const Mat2& b) {
    if (mat_det(f, a) == 0 || mat_det(f, b) == 0)
        throw std::invalid_argument("commutator_three_squares_matrix: singular input");
    Mat2 ai = mat_inv(f, a);
    return {a, mat_mul(f, mat_mul(f, ai, b), a), mat_mul(f, ai, mat_inv(f, b))};
}

/// Matrix text format: `[[a,b],[c,d]]`, optionally followed by ` mod p`.
/// Entries may be negative; reduction happens against the ambient prime.
struct Mat2Text {
    long long a = 0, b = 0, c = 0, d = 0;
    std::optional<std::uint64_t> modulus;
};

inline Mat2Text parse_mat2_text(std::string_view text) {
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    auto expect = [&](char c) {
        skip_ws();
        if (i >= text.size() || text[i] != c)
            throw ParseError(std::string("expected '") + c + "'", i);
        ++i;
    };
    auto number = [&]() -> long long {
        skip_ws();
        std::size_t start = i;
        bool negative = i < text.size() && text[i] == '-';
        if (negative) ++i;
        long long value = 0;
        std::size_t digits = 0;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
            value = value * 10 + (text[i] - '0');
            if (value > (1ll << 62)) throw ParseError("entry too large", start);
            ++i;
            ++digits;
        }
        if (digits == 0) throw ParseError("expected an integer", i);
        return negative ? -value : value;
    };
    Mat2Text out;
    expect('[');
    expect('[');
    out.a = number();
    expect(',');
    out.b = number();
    expect(']');
    expect(',');
    expect('[');
    out.c = number();
    expect(',');
    out.d = number();
    expect(']');
    expect(']');
    skip_ws();
    if (i + 3 <= text.size() && text.substr(i, 3) == "mod") {
        i += 3;
        long long p = number();
        if (p < 2) throw ParseError("modulus must be at least 2", i);
        out.modulus = static_cast<std::uint64_t>(p);
        skip_ws();
    }
    if (i != text.size()) throw ParseError("trailing input after matrix", i);
    return out;
}

inline std::string format_mat2(const Mat2& m) {
    return "[[" + std::to_string(m.a) + "," + std::to_string(m.b) + "],[" + std::to_string(m.c) +
           "," + std::to_string(m.d) + "]]";
}

}  // namespace gsq
