#ifndef WILDRAM_TATEOORT_HPP
#define WILDRAM_TATEOORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "wildram/invariants.hpp"
#include "wildram/poly.hpp"

namespace wildram {

// Order-p group scheme with coordinate ring base[T]/(T^p - alpha T) and law
//   s * s' = s + s' + beta sum_i dp_coeff(p, i) s^i s'^(p-i),
// subject to alpha beta = 0.  In symbolic mode alpha and beta are free
// variables of the base ring and the constraint is imposed by rewriting;
// in concrete mode alpha beta = 0 is verified at construction (one of the
// two must vanish, the base ring being a domain).
class TateOortGroup {
public:
    // concrete: alpha, beta polynomials over a shared base ring
    TateOortGroup(std::uint32_t p, Poly alpha, Poly beta);
    // symbolic: base ring F_p[alpha, beta] with both free
    static TateOortGroup symbolic(std::uint32_t p);

    std::uint32_t p() const { return p_; }
    const RingPtr& base() const { return base_; }
    const Poly& alpha() const { return alpha_; }
    const Poly& beta() const { return beta_; }
    bool is_symbolic() const { return symbolic_; }

private:
    std::uint32_t p_;
    RingPtr base_;
    Poly alpha_;
    Poly beta_;
    bool symbolic_;

    friend TateOortGroup scaling_iso(const Fp& eps, const TateOortGroup& g);
};

// The group-law polynomial evaluated on two polynomials over a common ring
// containing the group's base variables (beta lifted there); the law does
// not involve alpha.  Degree < p in each argument.
Poly star(const Poly& s, const Poly& s2, const TateOortGroup& g, const Poly& beta);

struct AxiomReport {
    bool closure = false;
    bool associativity = false;
    bool neutral = false;
    bool inverse = false;
    std::string detail;

    bool ok() const { return closure && associativity && neutral && inverse; }
};

// Verifies closure, associativity, neutrality and the (p-1)-fold-star
// inverse as exact identities modulo (s^p - alpha s, s'^p - alpha s',
// s''^p - alpha s'', alpha beta).
AxiomReport verify_group_axioms(const TateOortGroup& g);

// The isomorphic rescaling alpha' = eps^{p-1} alpha, beta' = eps^{1-p} beta.
TateOortGroup scaling_iso(const Fp& eps, const TateOortGroup& g);
// T -> eps T intertwines the two laws: star'(eps s, eps s') = eps star(s, s').
bool scaling_hom_check(const Fp& eps, const TateOortGroup& g);

// Y = Spec base[u]/(u^p - a^{p-1} u - b) with the translation coaction
// u -> z + u of G_{a^{p-1}, 0}.
struct TorsorScheme {
    RingPtr base;
    Poly a;
    Poly b;
    std::uint32_t p;

    TorsorScheme(std::uint32_t p_, Poly a_, Poly b_);
};

struct TorsorActionReport {
    bool respects_relation = false;  // (z+u)^p - a^{p-1}(z+u) - b reduces to 0
    bool coassociative = false;      // both composite coactions agree
    bool neutral = false;            // z = 0 restores the identity

    bool ok() const { return respects_relation && coassociative && neutral; }
};

// Verifies the coaction axioms; the group must be G_{a^{p-1}, 0} for the
// torsor's a.
TorsorActionReport torsor_action(const TorsorScheme& t, const TateOortGroup& g);

// Determinant of the base-linear map (coaction, pr2) : B (x) B -> A (x) B in
// the bases {u^i (x) u^j} and {z^i (x) u^j}, i, j < p.  A unit determinant
// certifies the torsor property; here it always evaluates to 1.
Poly torsor_determinant(const TorsorScheme& t, const TateOortGroup& g);

}  // namespace wildram

#endif
