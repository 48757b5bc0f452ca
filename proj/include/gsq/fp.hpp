#pragma once

// Arithmetic mod p (p prime, p < 2^61) and in the quadratic extension
// F_{p^2} = F_p(w), w^2 = d for a fixed non-residue d: Legendre symbols,
// Tonelli-Shanks square roots, norms and Frobenius conjugates.

#include <cstdint>
#include <optional>
#include <stdexcept>

namespace gsq {

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod(std::uint64_t a, unsigned __int128 e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while (d % 2 == 0) d /= 2, ++r;
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

}  // namespace detail

class PrimeField {
public:
    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (p >= (1ull << 61)) throw std::invalid_argument("modulus must be < 2^61");
        if (!detail::is_prime_u64(p)) throw std::invalid_argument("modulus is not prime");
    }

    std::uint64_t p() const { return p_; }

    std::uint64_t reduce(long long v) const {
        long long m = static_cast<long long>(p_);
        long long r = v % m;
        return static_cast<std::uint64_t>(r < 0 ? r + m : r);
    }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return detail::mulmod(a, b, p_); }
    std::uint64_t pow(std::uint64_t a, unsigned __int128 e) const { return detail::powmod(a, e, p_); }

    std::uint64_t inv(std::uint64_t a) const {
        if (a % p_ == 0) throw std::invalid_argument("division by zero");
        return pow(a, p_ - 2);
    }

    std::uint64_t half(std::uint64_t a) const {  // a/2, p odd
        return a % 2 == 0 ? a / 2 : (a + p_) / 2;
    }

    /// Legendre symbol as -1, 0 or 1 via Euler's criterion.  p must be odd.
    int legendre(std::uint64_t a) const {
        if (p_ == 2) throw std::invalid_argument("legendre: p must be odd");
        a %= p_;
        if (a == 0) return 0;
        std::uint64_t e = pow(a, (p_ - 1) / 2);
        return e == 1 ? 1 : -1;
    }

    /// Smallest positive quadratic non-residue.  p must be odd.
    std::uint64_t nonresidue() const {
        if (p_ == 2) throw std::invalid_argument("nonresidue: p must be odd");
        for (std::uint64_t d = 2; d < p_; ++d)
            if (legendre(d) == -1) return d;
        throw std::logic_error("no non-residue found");  // unreachable for p > 2
    }

    /// Square root mod p (p odd) when one exists, normalized to min(r, p-r).
    /// Tonelli-Shanks, with the p = 3 (mod 4) fast path.
    std::optional<std::uint64_t> sqrt(std::uint64_t a) const {
        if (p_ == 2) throw std::invalid_argument("sqrt: p must be odd");
        a %= p_;
        if (a == 0) return 0;
        if (legendre(a) != 1) return std::nullopt;
        std::uint64_t r;
        if (p_ % 4 == 3) {
            r = pow(a, (p_ + 1) / 4);
        } else {
            std::uint64_t q = p_ - 1;
            int s = 0;
            while (q % 2 == 0) q /= 2, ++s;
            std::uint64_t z = pow(nonresidue(), q);
            std::uint64_t m = static_cast<std::uint64_t>(s);
            std::uint64_t c = z;
            std::uint64_t t = pow(a, q);
            r = pow(a, (q + 1) / 2);
            while (t != 1) {
                std::uint64_t i = 0, tt = t;
                while (tt != 1) {
                    tt = mul(tt, tt);
                    ++i;
                }
                std::uint64_t b = c;
                for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = mul(b, b);
                m = i;
                c = mul(b, b);
                t = mul(t, c);
                r = mul(r, b);
            }
        }
        return std::min(r, p_ - r);
    }

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    std::uint64_t p_;
};

/// Element a + b*w of F_{p^2}.
struct Fp2 {
    std::uint64_t a = 0, b = 0;
    friend bool operator==(const Fp2&, const Fp2&) = default;
};

/// F_{p^2} built on a chosen non-residue d (w^2 = d).  Squareness verdicts do
/// not depend on the choice of d.
class QuadExt {
public:
    QuadExt(const PrimeField& field, std::uint64_t d) : f_(field), d_(d % field.p()) {
        if (f_.p() == 2) throw std::invalid_argument("QuadExt: p must be odd");
        if (f_.legendre(d_) != -1) throw std::invalid_argument("QuadExt: d must be a non-residue");
    }

    static QuadExt standard(const PrimeField& field) { return QuadExt(field, field.nonresidue()); }

    const PrimeField& field() const { return f_; }
    std::uint64_t d() const { return d_; }

    Fp2 from_base(std::uint64_t a) const { return {a % f_.p(), 0}; }

    Fp2 add(Fp2 x, Fp2 y) const { return {f_.add(x.a, y.a), f_.add(x.b, y.b)}; }
    Fp2 sub(Fp2 x, Fp2 y) const { return {f_.sub(x.a, y.a), f_.sub(x.b, y.b)}; }
    Fp2 neg(Fp2 x) const { return {f_.neg(x.a), f_.neg(x.b)}; }

    Fp2 mul(Fp2 x, Fp2 y) const {
        // (a1 + b1 w)(a2 + b2 w) = a1 a2 + d b1 b2 + (a1 b2 + a2 b1) w
        return {f_.add(f_.mul(x.a, y.a), f_.mul(d_, f_.mul(x.b, y.b))),
                f_.add(f_.mul(x.a, y.b), f_.mul(x.b, y.a))};
    }

    Fp2 conj(Fp2 x) const { return {x.a, f_.neg(x.b)}; }

    std::uint64_t norm(Fp2 x) const { return f_.sub(f_.mul(x.a, x.a), f_.mul(d_, f_.mul(x.b, x.b))); }

    Fp2 pow(Fp2 x, unsigned __int128 e) const {
        Fp2 r = from_base(1);
        while (e) {
            if (e & 1) r = mul(r, x);
            x = mul(x, x);
            e >>= 1;
        }
        return r;
    }

    Fp2 inv(Fp2 x) const {
        std::uint64_t n = norm(x);
        if (n == 0) throw std::invalid_argument("division by zero");
        std::uint64_t ni = f_.inv(n);
        return {f_.mul(x.a, ni), f_.mul(f_.neg(x.b), ni)};
    }

    /// x is a square in F_{p^2}, i.e. x = 0 or x^((p^2-1)/2) = 1.  Equivalent
    /// to the norm of x being a residue in F_p.
    bool is_square(Fp2 x) const {
        if (x.a == 0 && x.b == 0) return true;
        return f_.legendre(norm(x)) == 1;
    }

    /// Square root in F_{p^2}: solve (u + v w)^2 = a + b w.  The returned
    /// root has the lexicographically smaller (a, b) of the two.
    std::optional<Fp2> sqrt(Fp2 x) const {
        if (x.a == 0 && x.b == 0) return Fp2{0, 0};
        if (!is_square(x)) return std::nullopt;
        Fp2 y;
        if (x.b == 0) {
            if (auto r = f_.sqrt(x.a)) {
                y = {*r, 0};
            } else {
                // (v w)^2 = d v^2 = a with a/d a residue when a is not
                y = {0, *f_.sqrt(f_.mul(x.a, f_.inv(d_)))};
            }
        } else {
            // u^2 + d v^2 = a and 2uv = b force u^2 = (a +- s)/2 with
            // s^2 = a^2 - d b^2 = norm(x); exactly one choice is a nonzero
            // residue (their product is d (b/2)^2, a non-residue).
            std::uint64_t s = *f_.sqrt(norm(x));
            auto u = f_.sqrt(f_.half(f_.add(x.a, s)));
            if (!u) u = f_.sqrt(f_.half(f_.sub(x.a, s)));
            std::uint64_t v = f_.mul(x.b, f_.inv(f_.add(*u, *u)));
            y = {*u, v};
        }
        Fp2 z = neg(y);
        if (z.a < y.a || (z.a == y.a && z.b < y.b)) y = z;
        return y;
    }

private:
    PrimeField f_;
    std::uint64_t d_;
};

}  // namespace gsq
