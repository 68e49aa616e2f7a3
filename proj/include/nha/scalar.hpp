#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace nha {

/// Ground field descriptor: rationals (p == 0) or the prime field GF(p).
struct Field {
    unsigned long p = 0;

    bool rational() const { return p == 0; }
    bool operator==(const Field&) const = default;

    static Field rationals() { return Field{0}; }
    static Field prime(unsigned long p);

    std::string describe() const;
};

/// Exact field element. Rational arithmetic is arbitrary-precision; GF(p)
/// values are kept as canonical residues in [0, p).
class Scalar {
public:
    Scalar() = default;
    explicit Scalar(Field f) : p_(f.p) {}
    Scalar(Field f, long n) : v_(n), p_(f.p) { canonicalize(); }
    Scalar(Field f, mpq_class q) : v_(std::move(q)), p_(f.p) { canonicalize(); }

    static Scalar zero(Field f) { return Scalar(f); }
    static Scalar one(Field f) { return Scalar(f, 1); }
    /// Parses "n", "-n" or "n/m" exactly; reduces mod p over GF(p).
    static Scalar parse(Field f, const std::string& text);

    Field field() const { return Field{p_}; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    const mpq_class& value() const { return v_; }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar inverse() const;

    bool operator==(const Scalar& o) const { return p_ == o.p_ && v_ == o.v_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    /// Total order (field-consistent inputs assumed); used for canonical forms.
    int cmp(const Scalar& o) const { return ::cmp(v_, o.v_); }

    std::string str() const;

private:
    void canonicalize();
    void check_same(const Scalar& o) const;

    mpq_class v_ = 0;
    unsigned long p_ = 0;
};

}  // namespace nha
