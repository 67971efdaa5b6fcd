#include "modinv/field.hpp"

namespace modinv {

bool PrimeField::is_prime(std::uint32_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (std::uint32_t d = 3; static_cast<std::uint64_t>(d) * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (p > 0x7fffffffu || !is_prime(p)) {
        throw ValidationError("characteristic must be a prime in [2, 2^31-1], got " +
                              std::to_string(p));
    }
}

fp_t PrimeField::from_int(std::int64_t x) const {
    std::int64_t r = x % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<fp_t>(r);
}

fp_t PrimeField::pow(fp_t a, std::uint64_t e) const {
    fp_t base = a, acc = 1 % p_;
    while (e) {
        if (e & 1) acc = mul(acc, base);
        e >>= 1;
        if (e) base = mul(base, base);
    }
    return acc;
}

fp_t PrimeField::inv(fp_t a) const {
    if (a == 0) throw InversionOfZero();
    // Fermat: a^(p-2); for p = 2 this is a^0 = 1 = a.
    return pow(a, p_ - 2);
}

}  // namespace modinv
