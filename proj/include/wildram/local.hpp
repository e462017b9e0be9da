#ifndef WILDRAM_LOCAL_HPP
#define WILDRAM_LOCAL_HPP

#include <cstdint>
#include <vector>

#include "wildram/linalg.hpp"
#include "wildram/poly.hpp"

namespace wildram {

inline constexpr std::uint32_t kDefaultLengthCap = 64;

// Outcome of a colength computation: Finite(length) is conclusive (the
// dimension sequence d(N) stabilized, which forces m^N inside the ideal by
// Nakayama); IndeterminateAtCap(cap) means the cap was reached first.
struct LengthResult {
    bool finite;
    std::uint64_t length;  // valid when finite
    std::uint32_t cap;     // the cap that was hit when not finite

    static LengthResult finite_of(std::uint64_t len) { return {true, len, 0}; }
    static LengthResult indeterminate(std::uint32_t cap) { return {false, 0, cap}; }
};

enum class Verdict { Yes, No, Indeterminate };

// Length of k[x1..xn]/(gens) computed by truncated row reduction: for
// N = 1, 2, ... the dimension d(N) of the quotient by (gens) + m^N is found
// by reducing the span of all monomial multiples of the generators of degree
// < N; the first N with d(N) = d(N+1) is conclusive.  Every generator must
// have zero constant term.
LengthResult local_length(const std::vector<Poly>& gens,
                          std::uint32_t cap = kDefaultLengthCap);

// Exactly n generators in n variables required.  Yes when local_length is
// finite; Indeterminate when the cap is reached (no finite certificate of
// failure exists for a truncation procedure).
Verdict is_system_of_parameters(const std::vector<Poly>& gens,
                                std::uint32_t cap = kDefaultLengthCap);

// Decidable exactly: the n linear parts must be independent over F_p.
Verdict is_regular_sop(const std::vector<Poly>& gens);

// A k-automorphism sigma of k[[u1..un]] given by truncated images sigma(u_i),
// each with zero constant term.  Construction verifies that the p-fold
// composition is the identity to the stored precision.
class SubstitutionAction {
public:
    SubstitutionAction(std::uint32_t p, std::vector<SeriesTrunc> images);

    std::uint32_t order() const { return p_; }
    std::size_t arity() const { return images_.size(); }
    std::uint32_t precision() const { return prec_; }
    const RingPtr& ring() const { return ring_; }
    const std::vector<SeriesTrunc>& images() const { return images_; }

    // Image of f under the substitution, truncated.
    Poly apply(const Poly& f) const;
    // Images of the j-fold composition (j < p), cached.
    const std::vector<Poly>& power_images(std::uint32_t j) const;

private:
    std::uint32_t p_;
    std::uint32_t prec_;
    RingPtr ring_;
    std::vector<SeriesTrunc> images_;
    mutable std::vector<std::vector<Poly>> powers_;  // powers_[j]
};

// Admissibility: every one of the p^n tuples (sigma^{j_1}(u_1), ...,
// sigma^{j_n}(u_n)) must be a regular system of parameters; decided exactly
// on linear parts.  Weak admissibility asks only for a system of parameters
// per tuple, certified through local_length at the stored precision.
Verdict is_admissible(const SubstitutionAction& action);
Verdict is_weakly_admissible(const SubstitutionAction& action,
                             std::uint32_t cap = kDefaultLengthCap);

// Simultaneous triangularization of matrices generating a p-group: returns
// an invertible P with every P*M*P^{-1} upper triangular with unit diagonal,
// found by iterated common-fixed-vector extraction.  Throws precondition or
// domain errors when a generator's order is not a p-power or no common fixed
// vector exists at some stage.
FpMat triangularize(const std::vector<FpMat>& mats);

}  // namespace wildram

#endif
