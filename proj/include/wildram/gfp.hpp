#ifndef WILDRAM_GFP_HPP
#define WILDRAM_GFP_HPP

#include <cstdint>
#include <boost/multiprecision/cpp_int.hpp>

#include "wildram/errors.hpp"

namespace wildram {

using BigInt = boost::multiprecision::cpp_int;

// Largest prime accepted by default; verification cost grows like p^n.
inline constexpr std::uint32_t kDefaultPrimeCap = 19;

bool is_prime(std::uint32_t m);

// Throws domain_error unless p is prime and 2 <= p <= cap.
void require_supported_prime(std::uint32_t p, std::uint32_t cap = kDefaultPrimeCap);

// Residue arithmetic mod a prime p.  Values are kept in [0, p-1].
class Fp {
public:
    Fp(std::int64_t value, std::uint32_t p);

    std::uint32_t value() const { return v_; }
    std::uint32_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    Fp operator+(const Fp& o) const;
    Fp operator-(const Fp& o) const;
    Fp operator*(const Fp& o) const;
    Fp operator-() const;
    Fp inv() const;  // throws division_error on zero
    Fp pow(std::uint64_t e) const;

    bool operator==(const Fp& o) const { return p_ == o.p_ && v_ == o.v_; }
    bool operator!=(const Fp& o) const { return !(*this == o); }

private:
    std::uint32_t v_;
    std::uint32_t p_;
    void check_same(const Fp& o) const;
};

// Raw helpers used in inner loops where carrying Fp objects is wasteful.
std::uint32_t add_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p);
std::uint32_t sub_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p);
std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p);
std::uint32_t pow_mod(std::uint32_t a, std::uint64_t e, std::uint32_t p);
std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);

// Coefficient of X1^i X2^(p-i) in the degree-p group-law polynomial:
// (p-1)! / (i! (p-i)!) reduced mod p.  Requires 1 <= i <= p-1.
Fp dp_coeff(std::uint32_t p, std::uint32_t i);

// Binomial coefficient C(n, k) mod p via Lucas' decomposition.
Fp binom_mod_p(std::uint64_t n, std::uint64_t k, std::uint32_t p);

// Exact binomial coefficient over Z, for formula evaluation.
BigInt binom_z(std::uint64_t n, std::uint64_t k);

}  // namespace wildram

#endif
