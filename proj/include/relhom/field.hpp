#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "relhom/errors.hpp"

namespace relhom {

/// Exact field element. Arbitrary-precision rational; over GF(p) the canonical
/// representative is the integer in [0,p) with denominator 1.
using Scalar = mpq_class;

/// Coefficient field: the rationals (characteristic 0) or a prime field GF(p).
/// All arithmetic is exact; there is no floating point anywhere in the system.
class FieldSpec {
public:
    /// Rationals.
    FieldSpec() : p_(0) {}

    /// Characteristic 0 (rationals) or a prime p.
    explicit FieldSpec(std::uint64_t characteristic);

    std::uint64_t characteristic() const { return p_; }
    bool rational() const { return p_ == 0; }

    /// Reduce to canonical form (lowest terms / representative in [0,p)).
    Scalar canon(const Scalar& v) const;

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    /// Multiplicative inverse; throws ValidationError on zero.
    Scalar inv(const Scalar& a) const;
    Scalar div(const Scalar& a, const Scalar& b) const;

    Scalar zero() const { return Scalar(0); }
    Scalar one() const { return Scalar(1); }
    Scalar from_int(long v) const { return canon(Scalar(v)); }

    static bool is_zero(const Scalar& a) { return sgn(a) == 0; }

    /// Canonical text form: integer in [0,p) over GF(p), "a" or "a/b" in lowest
    /// terms (positive denominator) over the rationals.
    std::string format(const Scalar& a) const;

    /// Parse "a", "-a" or "a/b"; reduced mod p when applicable.
    Scalar parse(const std::string& text) const;

    bool operator==(const FieldSpec& other) const = default;

private:
    std::uint64_t p_;
    mpz_class pz_;  // cached mpz copy of p_ (0 when rational)
};

}  // namespace relhom
