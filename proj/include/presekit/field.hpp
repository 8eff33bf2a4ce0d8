#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace presekit {

// Arithmetic mod a large prime. The modulus is process-global: it is set once
// from the input file's options before any computation starts.
struct Fp {
    static inline std::uint64_t modulus = 1'000'000'007ULL;

    std::uint64_t v{0};

    Fp() = default;
    explicit Fp(std::int64_t x) {
        std::int64_t m = static_cast<std::int64_t>(modulus);
        std::int64_t r = x % m;
        if (r < 0) r += m;
        v = static_cast<std::uint64_t>(r);
    }
    static Fp from_raw(std::uint64_t x) {
        Fp r;
        r.v = x % modulus;
        return r;
    }

    static Fp zero() { return Fp{}; }
    static Fp one() { return Fp{1}; }

    bool is_zero() const { return v == 0; }

    friend Fp operator+(Fp a, Fp b) { return from_raw(a.v + b.v); }
    friend Fp operator-(Fp a, Fp b) { return from_raw(a.v + modulus - b.v); }
    friend Fp operator*(Fp a, Fp b) {
        return from_raw(static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(a.v) * b.v) % modulus));
    }
    Fp operator-() const { return from_raw(modulus - v); }
    Fp& operator+=(Fp o) { return *this = *this + o; }
    Fp& operator-=(Fp o) { return *this = *this - o; }
    Fp& operator*=(Fp o) { return *this = *this * o; }
    friend bool operator==(Fp a, Fp b) { return a.v == b.v; }
    friend bool operator!=(Fp a, Fp b) { return a.v != b.v; }

    Fp pow(std::uint64_t e) const {
        Fp r = one(), b = *this;
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }
    Fp inv() const {
        if (is_zero()) throw std::domain_error("Fp: division by zero");
        return pow(modulus - 2);
    }
    friend Fp operator/(Fp a, Fp b) { return a * b.inv(); }

    // Symmetric lift to (-p/2, p/2], for readable output of small values.
    std::int64_t lift() const {
        if (v > modulus / 2) return static_cast<std::int64_t>(v) -
                                    static_cast<std::int64_t>(modulus);
        return static_cast<std::int64_t>(v);
    }
};

// Exact rationals, used as the verification-mode field in the linear algebra
// kernel. Backed by GMP.
struct Rat {
    mpq_class v{0};

    Rat() = default;
    explicit Rat(std::int64_t x) : v(static_cast<long>(x)) {}
    explicit Rat(mpq_class q) : v(std::move(q)) { v.canonicalize(); }

    static Rat zero() { return Rat{}; }
    static Rat one() { return Rat{1}; }

    bool is_zero() const { return v == 0; }

    friend Rat operator+(const Rat& a, const Rat& b) { return Rat{mpq_class(a.v + b.v)}; }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat{mpq_class(a.v - b.v)}; }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat{mpq_class(a.v * b.v)}; }
    Rat operator-() const { return Rat{mpq_class(-v)}; }
    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    friend bool operator==(const Rat& a, const Rat& b) { return a.v == b.v; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v != b.v; }

    Rat inv() const {
        if (is_zero()) throw std::domain_error("Rat: division by zero");
        return Rat{mpq_class(1 / v)};
    }
    friend Rat operator/(const Rat& a, const Rat& b) { return a * b.inv(); }
};

// Field configuration: prime mode drives all Monte Carlo computation, rational
// mode exists for cross-checking ranks of small integer matrices.
struct FieldCfg {
    std::uint64_t prime = 1'000'000'007ULL;
    std::uint64_t seed = 0;

    void activate() const { Fp::modulus = prime; }
};

// Deterministic random stream. Substreams are derived from (seed, tag) so that
// parallel samplers stay reproducible.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    Rng fork(std::uint64_t tag) { return Rng(splitmix(gen_() ^ tag)); }

    Fp uniform() {
        std::uniform_int_distribution<std::uint64_t> d(0, Fp::modulus - 1);
        return Fp::from_raw(d(gen_));
    }
    // Uniform over nonzero elements.
    Fp uniform_nonzero() {
        std::uniform_int_distribution<std::uint64_t> d(1, Fp::modulus - 1);
        return Fp::from_raw(d(gen_));
    }
    std::uint64_t bits() { return gen_(); }

    std::size_t index(std::size_t n) {
        std::uniform_int_distribution<std::size_t> d(0, n - 1);
        return d(gen_);
    }

  private:
    static std::uint64_t splitmix(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }
    std::mt19937_64 gen_;
};

}  // namespace presekit
