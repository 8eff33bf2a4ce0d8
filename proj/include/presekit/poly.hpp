#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "matrix.hpp"

namespace presekit {

// Univariate polynomials over Fp, monic-normalized where it matters. Only what
// the endomorphism splitting needs: minimal polynomials and full factorization
// into irreducibles (squarefree part, distinct degree, Cantor-Zassenhaus).
struct Poly {
    std::vector<Fp> c;  // c[i] = coefficient of x^i; no trailing zeros

    Poly() = default;
    explicit Poly(std::vector<Fp> cc) : c(std::move(cc)) { trim(); }
    static Poly constant(Fp a) { return a.is_zero() ? Poly{} : Poly{{a}}; }
    static Poly x() { return Poly{{Fp::zero(), Fp::one()}}; }

    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int deg() const { return static_cast<int>(c.size()) - 1; }
    Fp lead() const { return c.back(); }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Fp> r(std::max(a.c.size(), b.c.size()), Fp::zero());
        for (std::size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
        for (std::size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
        return Poly{std::move(r)};
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<Fp> r(std::max(a.c.size(), b.c.size()), Fp::zero());
        for (std::size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
        for (std::size_t i = 0; i < b.c.size(); ++i) r[i] -= b.c[i];
        return Poly{std::move(r)};
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Fp> r(a.c.size() + b.c.size() - 1, Fp::zero());
        for (std::size_t i = 0; i < a.c.size(); ++i)
            for (std::size_t j = 0; j < b.c.size(); ++j)
                r[i + j] += a.c[i] * b.c[j];
        return Poly{std::move(r)};
    }

    Poly monic() const {
        if (is_zero()) return {};
        Fp inv = lead().inv();
        Poly r = *this;
        for (Fp& x : r.c) x *= inv;
        return r;
    }

    // Division with remainder.
    static std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
        Poly q;
        if (a.deg() >= b.deg()) q.c.assign(a.deg() - b.deg() + 1, Fp::zero());
        Fp inv = b.lead().inv();
        while (!a.is_zero() && a.deg() >= b.deg()) {
            std::size_t shift = a.deg() - b.deg();
            Fp f = a.lead() * inv;
            q.c[shift] += f;
            for (std::size_t i = 0; i < b.c.size(); ++i)
                a.c[shift + i] -= f * b.c[i];
            a.trim();
        }
        q.trim();
        return {std::move(q), std::move(a)};
    }
    friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }
    friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }

    Poly derivative() const {
        if (c.size() <= 1) return {};
        std::vector<Fp> r(c.size() - 1);
        for (std::size_t i = 1; i < c.size(); ++i)
            r[i - 1] = Fp{static_cast<std::int64_t>(i)} * c[i];
        return Poly{std::move(r)};
    }

    Fp eval(Fp x) const {
        Fp r = Fp::zero();
        for (std::size_t i = c.size(); i-- > 0;) r = r * x + c[i];
        return r;
    }
};

inline Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

inline Poly poly_powmod(Poly base, mpz_class e, const Poly& mod) {
    Poly r = Poly::constant(Fp::one());
    base = base % mod;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = (r * base) % mod;
        base = (base * base) % mod;
        e >>= 1;
    }
    return r;
}

// Irreducible factors of a squarefree monic polynomial of uniform factor
// degree d (Cantor-Zassenhaus equal-degree splitting).
inline void equal_degree_split(const Poly& f, int d, Rng& rng, std::vector<Poly>& out) {
    if (f.deg() == d) {
        out.push_back(f.monic());
        return;
    }
    mpz_class q{static_cast<unsigned long>(Fp::modulus)};
    mpz_class e;
    mpz_pow_ui(e.get_mpz_t(), q.get_mpz_t(), d);
    e = (e - 1) / 2;
    for (;;) {
        std::vector<Fp> rc(f.deg());
        for (Fp& x : rc) x = rng.uniform();
        Poly r{std::move(rc)};
        if (r.deg() < 1) continue;
        Poly g = poly_gcd(r, f);
        if (g.deg() > 0 && g.deg() < f.deg()) {
            equal_degree_split(g, d, rng, out);
            equal_degree_split((f / g).monic(), d, rng, out);
            return;
        }
        Poly h = poly_powmod(r, e, f) - Poly::constant(Fp::one());
        g = poly_gcd(h, f);
        if (g.deg() > 0 && g.deg() < f.deg()) {
            equal_degree_split(g, d, rng, out);
            equal_degree_split((f / g).monic(), d, rng, out);
            return;
        }
    }
}

// Full factorization of a monic polynomial: list of (irreducible, multiplicity),
// sorted by (degree, coefficient sequence) for determinism.
inline std::vector<std::pair<Poly, int>> factor(const Poly& fin, Rng& rng) {
    std::vector<std::pair<Poly, int>> result;
    Poly f = fin.monic();
    if (f.deg() <= 0) return result;
    // p exceeds any polynomial degree we meet, so f' = 0 cannot happen and
    // squarefree parts come from repeated gcds with the derivative.
    std::map<int, Poly> by_mult;  // multiplicity -> product of its factors
    int mult = 0;
    while (f.deg() > 0) {
        ++mult;
        Poly g = poly_gcd(f, f.derivative());
        Poly sqfree = (f / g).monic();  // product of all distinct factors of f
        if (sqfree.deg() > 0) by_mult[mult] = sqfree;
        f = g;
        if (mult > 1) {
            // sqfree at level m contains factors of multiplicity >= m; correct
            // the previous level by dividing.
            auto it = by_mult.find(mult - 1);
            if (it != by_mult.end() && sqfree.deg() > 0) {
                Poly corrected = (it->second / poly_gcd(it->second, sqfree)).monic();
                if (corrected.deg() > 0)
                    it->second = corrected;
                else
                    by_mult.erase(it);
            }
        }
    }
    for (auto& [m, sq] : by_mult) {
        // Distinct-degree phase on the squarefree product sq.
        Poly rem = sq;
        mpz_class q{static_cast<unsigned long>(Fp::modulus)};
        Poly frob = poly_powmod(Poly::x(), q, rem);  // x^p mod rem
        Poly acc = frob;
        int d = 1;
        while (rem.deg() > 0) {
            if (rem.deg() < 2 * d) {
                result.emplace_back(rem.monic(), m);
                break;
            }
            Poly g = poly_gcd(acc - Poly::x(), rem);
            if (g.deg() > 0) {
                std::vector<Poly> parts;
                equal_degree_split(g, d, rng, parts);
                for (Poly& p : parts) result.emplace_back(std::move(p), m);
                rem = (rem / g).monic();
                acc = acc % rem;
            }
            ++d;
            acc = poly_powmod(acc, q, rem);
        }
    }
    std::sort(result.begin(), result.end(), [](const auto& a, const auto& b) {
        if (a.first.deg() != b.first.deg()) return a.first.deg() < b.first.deg();
        for (std::size_t i = 0; i < a.first.c.size(); ++i) {
            if (a.first.c[i].v != b.first.c[i].v) return a.first.c[i].v < b.first.c[i].v;
        }
        return false;
    });
    return result;
}

// Minimal polynomial of a square matrix over Fp, via the first linear
// dependency among I, T, T^2, ... (vectorized).
inline Poly min_poly(const Mat<Fp>& t) {
    std::size_t n = t.rows();
    if (n == 0) return Poly::constant(Fp::one());
    SpanTracker<Fp> span(n * n);
    auto vec = [n](const Mat<Fp>& m) {
        std::vector<Fp> v(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) v[i * n + j] = m(i, j);
        return v;
    };
    std::vector<Mat<Fp>> powers;
    powers.push_back(Mat<Fp>::identity(n));
    for (;;) {
        const Mat<Fp>& last = powers.back();
        if (!span.insert(vec(last))) {
            // last power is dependent on the earlier ones: solve for the
            // combination to get the monic minimal polynomial.
            std::size_t k = powers.size() - 1;
            Mat<Fp> sys(n * n, k);
            for (std::size_t j = 0; j < k; ++j) sys.set_col(j, vec(powers[j]));
            auto sol = solve(sys, vec(last));
            std::vector<Fp> coeffs(k + 1);
            for (std::size_t j = 0; j < k; ++j) coeffs[j] = -(*sol)[j];
            coeffs[k] = Fp::one();
            return Poly{std::move(coeffs)};
        }
        powers.push_back(powers.back() * t);
    }
}

// Evaluate a polynomial at a matrix.
inline Mat<Fp> poly_at(const Poly& p, const Mat<Fp>& t) {
    std::size_t n = t.rows();
    Mat<Fp> r(n, n);
    for (std::size_t i = p.c.size(); i-- > 0;) {
        r = r * t;
        for (std::size_t d = 0; d < n; ++d) r(d, d) += p.c[i];
    }
    return r;
}

}  // namespace presekit
