#ifndef WILDRAM_DIMONE_HPP
#define WILDRAM_DIMONE_HPP

#include <cstdint>
#include <optional>

#include "wildram/poly.hpp"

namespace wildram {

// A wild automorphism of k[[u]]: sigma(u) = u + (order >= 2 terms), of order
// p to the stored precision (checked at construction).
class LocalAutomorphism {
public:
    LocalAutomorphism(std::uint32_t p, SeriesTrunc image);

    std::uint32_t p() const { return p_; }
    std::uint32_t precision() const { return image_.precision(); }
    const SeriesTrunc& image() const { return image_; }

    SeriesTrunc apply(const SeriesTrunc& f) const;

private:
    std::uint32_t p_;
    SeriesTrunc image_;
};

// The largest m > 0 with trivial action on A/m^{m+1}, i.e.
// ord(sigma(u) - u) - 1.  nullopt when sigma(u) - u vanishes to precision.
std::optional<std::uint32_t> ramification_break(const LocalAutomorphism& sigma);

struct ModelExponent {
    std::uint32_t r;
    std::uint32_t i;
    bool torsor;  // i == 0
};

// Unique r >= 0, 0 <= i < p with m + 1 = p r + i; the effective model of the
// action is the order-p group scheme with parameter x^{r(p-1)}.
ModelExponent effective_model_exponent(std::uint32_t m, std::uint32_t p);

// Artin-Schreier data z^p - z = x^{-mu} f(x) with f(0) != 0.
struct ASData {
    std::uint32_t mu;
    Poly f;  // univariate in x
};

// Repeatedly replaces z by z - f(0)/x^{mu/p} while p divides mu, absorbing
// the leading coefficient (every scalar is a p-th power over F_p).  Returns
// equivalent data with mu coprime to p; throws precondition_error when the
// extension degenerates (mu reduced to <= 0: split / not totally ramified).
ASData normalize_artin_schreier(ASData data, std::uint32_t p);

// The torsor presentation s^p - x^{r(p-1)} s - x f(x) = 0 with the action
// s -> s + x^r: solves x as a series in s and returns the automorphism,
// asserting order p and ramification break p r - 1.
LocalAutomorphism build_moderate_presentation(std::uint32_t r, const Poly& f, std::uint32_t p,
                                              std::uint32_t precision);

// Ramification break of z^p - z = x^{-mu} f(x), mu = p r - i with 0 < i < p,
// computed through the exact valuation on the free module sum k[[x]] s^j:
//   val(sum c_j(x) s^j) = min_j ( p ord_x(c_j) + j i ),
// well-defined since the residues j i mod p are distinct.  With c i - d p = 1
// the element s^c / x^d is a uniformizer and the break is
// val((s + x^r)^c - s^c) - d p - 1; asserted equal to mu.
std::uint32_t break_via_valuation(std::uint32_t i, std::uint32_t r, const Poly& f,
                                  std::uint32_t p);

}  // namespace wildram

#endif
