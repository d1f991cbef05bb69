#pragma once

// Exact scalar types used throughout the engine.  The default field is the
// rationals (GMP-backed, arbitrary precision); a prime field with a runtime
// modulus is available as a faster alternative backend.  All computations are
// exact: there is no floating point anywhere in the engine.

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ppw {

using Rat = mpq_class;
using Int = mpz_class;

inline bool fis_zero(const Rat& x) { return sgn(x) == 0; }
inline bool fis_one(const Rat& x) { return x == 1; }
inline Rat ffrom(long v, const Rat*) { return Rat(v); }
inline std::string fstr(const Rat& x) { return x.get_str(); }
inline std::string fnum_str(const Rat& x) { return x.get_num().get_str(); }
inline std::string fden_str(const Rat& x) { return x.get_den().get_str(); }

// Prime field with a process-global modulus (set once per run from the CLI).
// The modulus must exceed 2^20 so that small integer data (incidence
// coefficients, composition multiplicities) never collides with zero.
class GFp {
public:
    GFp() : v_(0) {}
    GFp(long x) { v_ = norm(x % (long)p_); }
    static void set_modulus(uint64_t p) {
        if (p <= (1u << 20) || p >= (1ull << 31))
            throw std::invalid_argument("gfp modulus must be in (2^20, 2^31)");
        p_ = p;
    }
    static uint64_t modulus() { return p_; }

    friend GFp operator+(const GFp& a, const GFp& b) { return raw(add(a.v_, b.v_)); }
    friend GFp operator-(const GFp& a, const GFp& b) { return raw(sub(a.v_, b.v_)); }
    friend GFp operator*(const GFp& a, const GFp& b) { return raw(a.v_ * b.v_ % p_); }
    friend GFp operator/(const GFp& a, const GFp& b) { return a * b.inv(); }
    GFp operator-() const { return raw(v_ ? p_ - v_ : 0); }
    GFp& operator+=(const GFp& b) { v_ = add(v_, b.v_); return *this; }
    GFp& operator-=(const GFp& b) { v_ = sub(v_, b.v_); return *this; }
    GFp& operator*=(const GFp& b) { v_ = v_ * b.v_ % p_; return *this; }
    GFp& operator/=(const GFp& b) { *this = *this / b; return *this; }
    friend bool operator==(const GFp& a, const GFp& b) { return a.v_ == b.v_; }
    friend bool operator!=(const GFp& a, const GFp& b) { return a.v_ != b.v_; }

    GFp inv() const {
        if (v_ == 0) throw std::domain_error("division by zero in GF(p)");
        // extended Euclid
        int64_t t = 0, nt = 1, r = (int64_t)p_, nr = (int64_t)v_;
        while (nr) {
            int64_t q = r / nr;
            int64_t tmp = t - q * nt; t = nt; nt = tmp;
            tmp = r - q * nr; r = nr; nr = tmp;
        }
        if (t < 0) t += (int64_t)p_;
        return raw((uint64_t)t);
    }
    uint64_t residue() const { return v_; }

private:
    static GFp raw(uint64_t v) { GFp x; x.v_ = v; return x; }
    static uint64_t add(uint64_t a, uint64_t b) { uint64_t s = a + b; return s >= p_ ? s - p_ : s; }
    static uint64_t sub(uint64_t a, uint64_t b) { return a >= b ? a - b : a + p_ - b; }
    static uint64_t norm(long x) { return x < 0 ? (uint64_t)(x + (long)p_) : (uint64_t)x; }
    uint64_t v_;
    static inline uint64_t p_ = 2097169; // smallest prime above 2^21; CLI may override
};

inline bool fis_zero(const GFp& x) { return x.residue() == 0; }
inline bool fis_one(const GFp& x) { return x.residue() == 1; }
inline GFp ffrom(long v, const GFp*) { return GFp(v); }
inline std::string fstr(const GFp& x) { return std::to_string(x.residue()); }
inline std::string fnum_str(const GFp& x) { return std::to_string(x.residue()); }
inline std::string fden_str(const GFp&) { return "1"; }

template <class F> F fof(long v) { return ffrom(v, (const F*)nullptr); }

template <class F> struct FieldName;
template <> struct FieldName<Rat> { static std::string get() { return "rat"; } };
template <> struct FieldName<GFp> {
    static std::string get() { return "gfp:" + std::to_string(GFp::modulus()); }
};

} // namespace ppw
