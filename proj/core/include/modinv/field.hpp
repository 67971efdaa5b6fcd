#pragma once

#include <cstdint>

#include "modinv/errors.hpp"

namespace modinv {

/// Canonical prime-field element, always kept in [0, p).
using fp_t = std::uint32_t;

/// Arithmetic context for F_p, 2 <= p <= 2^31 - 1. Primality is verified at
/// construction. All results are canonical.
class PrimeField {
public:
    explicit PrimeField(std::uint32_t p);

    std::uint32_t characteristic() const { return p_; }

    fp_t reduce(std::uint64_t x) const { return static_cast<fp_t>(x % p_); }
    fp_t from_int(std::int64_t x) const;

    fp_t add(fp_t a, fp_t b) const {
        fp_t s = a + b;  // p < 2^31 so no overflow in 32 bits
        return s >= p_ ? s - p_ : s;
    }
    fp_t sub(fp_t a, fp_t b) const { return a >= b ? a - b : a + p_ - b; }
    fp_t neg(fp_t a) const { return a == 0 ? 0 : p_ - a; }
    fp_t mul(fp_t a, fp_t b) const {
        return static_cast<fp_t>((static_cast<std::uint64_t>(a) * b) % p_);
    }
    fp_t pow(fp_t a, std::uint64_t e) const;
    fp_t inv(fp_t a) const;
    fp_t div(fp_t a, fp_t b) const { return mul(a, inv(b)); }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

    static bool is_prime(std::uint32_t n);

private:
    std::uint32_t p_;
};

}  // namespace modinv
