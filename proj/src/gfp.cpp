#include "wildram/gfp.hpp"

#include <string>

namespace wildram {

bool is_prime(std::uint32_t m)
{
    if (m < 2)
        return false;
    for (std::uint32_t d = 2; d * d <= m; ++d)
        if (m % d == 0)
            return false;
    return true;
}

void require_supported_prime(std::uint32_t p, std::uint32_t cap)
{
    if (!is_prime(p))
        throw domain_error("p = " + std::to_string(p) + " is not prime");
    if (p > cap)
        throw domain_error("p = " + std::to_string(p) + " exceeds the configured cap " +
                           std::to_string(cap));
}

Fp::Fp(std::int64_t value, std::uint32_t p) : p_(p)
{
    if (!is_prime(p))
        throw domain_error("modulus " + std::to_string(p) + " is not prime");
    std::int64_t r = value % static_cast<std::int64_t>(p);
    if (r < 0)
        r += p;
    v_ = static_cast<std::uint32_t>(r);
}

void Fp::check_same(const Fp& o) const
{
    if (p_ != o.p_)
        throw structural_error("mixed moduli " + std::to_string(p_) + " and " +
                               std::to_string(o.p_));
}

Fp Fp::operator+(const Fp& o) const
{
    check_same(o);
    return Fp(static_cast<std::int64_t>(v_) + o.v_, p_);
}

Fp Fp::operator-(const Fp& o) const
{
    check_same(o);
    return Fp(static_cast<std::int64_t>(v_) - o.v_, p_);
}

Fp Fp::operator*(const Fp& o) const
{
    check_same(o);
    return Fp(static_cast<std::int64_t>(v_) * o.v_, p_);
}

Fp Fp::operator-() const
{
    return Fp(-static_cast<std::int64_t>(v_), p_);
}

Fp Fp::inv() const
{
    if (v_ == 0)
        throw division_error("inverse of zero mod " + std::to_string(p_));
    return Fp(inv_mod(v_, p_), p_);
}

Fp Fp::pow(std::uint64_t e) const
{
    return Fp(pow_mod(v_, e, p_), p_);
}

std::uint32_t add_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p)
{
    std::uint32_t s = a + b;
    return s >= p ? s - p : s;
}

std::uint32_t sub_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p)
{
    return a >= b ? a - b : a + p - b;
}

std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p)
{
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t pow_mod(std::uint32_t a, std::uint64_t e, std::uint32_t p)
{
    std::uint32_t r = 1 % p;
    std::uint32_t base = a % p;
    while (e) {
        if (e & 1)
            r = mul_mod(r, base, p);
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    return r;
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p)
{
    if (a % p == 0)
        throw division_error("inverse of zero mod " + std::to_string(p));
    return pow_mod(a % p, p - 2, p);  // Fermat
}

Fp dp_coeff(std::uint32_t p, std::uint32_t i)
{
    require_supported_prime(p);
    if (i < 1 || i > p - 1)
        throw domain_error("dp_coeff index i = " + std::to_string(i) + " out of [1, p-1]");
    std::uint32_t num = 1, den = 1;
    for (std::uint32_t m = 2; m <= p - 1; ++m)
        num = mul_mod(num, m, p);
    for (std::uint32_t m = 2; m <= i; ++m)
        den = mul_mod(den, m, p);
    for (std::uint32_t m = 2; m <= p - i; ++m)
        den = mul_mod(den, m, p);
    return Fp(mul_mod(num, inv_mod(den, p), p), p);
}

Fp binom_mod_p(std::uint64_t n, std::uint64_t k, std::uint32_t p)
{
    if (!is_prime(p))
        throw domain_error("modulus " + std::to_string(p) + " is not prime");
    std::uint32_t r = 1;
    while (n || k) {
        std::uint32_t nd = static_cast<std::uint32_t>(n % p);
        std::uint32_t kd = static_cast<std::uint32_t>(k % p);
        if (kd > nd)
            return Fp(0, p);
        // C(nd, kd) for digits below p, computed directly
        std::uint32_t num = 1, den = 1;
        for (std::uint32_t m = 0; m < kd; ++m) {
            num = mul_mod(num, nd - m, p);
            den = mul_mod(den, m + 1, p);
        }
        r = mul_mod(r, mul_mod(num, inv_mod(den, p), p), p);
        n /= p;
        k /= p;
    }
    return Fp(r, p);
}

BigInt binom_z(std::uint64_t n, std::uint64_t k)
{
    if (k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    BigInt r = 1;
    for (std::uint64_t m = 0; m < k; ++m) {
        r *= static_cast<std::uint64_t>(n - m);
        r /= static_cast<std::uint64_t>(m + 1);
    }
    return r;
}

}  // namespace wildram
