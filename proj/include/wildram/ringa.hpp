#ifndef WILDRAM_RINGA_HPP
#define WILDRAM_RINGA_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "wildram/local.hpp"
#include "wildram/poly.hpp"

namespace wildram {

// Structure constants of the rank-p^n algebra
//   A = R[u1..un] / (u_i^p - (mu a_i)^{p-1} u_i - x_i),   R = F_p[x1..xn],
// with the elementary abelian group acting by u_i -> u_i + h_i mu a_i.
// Each a_i is nonzero with zero constant term; mu is nonzero (default 1).
// sop_certified records that (mu a_1, ..., mu a_n) was verified to be a
// system of parameters; coprime_asserted is a caller assertion (pairwise
// coprimality is not machine-checked).
class ActionSpec {
public:
    static ActionSpec make(std::uint32_t p, std::size_t n, std::vector<Poly> a,
                           Poly mu);
    static ActionSpec make(std::uint32_t p, std::size_t n, std::vector<Poly> a);

    std::uint32_t p() const { return p_; }
    std::size_t n() const { return n_; }
    const RingPtr& coeff_ring() const { return rx_; }
    const Poly& a(std::size_t i) const { return a_[i]; }
    const std::vector<Poly>& a() const { return a_; }
    const Poly& mu() const { return mu_; }
    const Poly& mu_a(std::size_t i) const { return mu_a_[i]; }
    // (mu a_i)^{p-1}, precomputed
    const Poly& mu_a_pm1(std::size_t i) const { return mu_a_pm1_[i]; }

    bool sop_certified() const { return sop_certified_; }
    bool coprime_asserted() const { return coprime_asserted_; }
    void assert_coprime() { coprime_asserted_ = true; }
    // Runs local_length on (mu a_i); throws precondition_error when the
    // verdict is not a finite length.
    void certify_sop(std::uint32_t cap = kDefaultLengthCap);

    bool same_as(const ActionSpec& o) const;

private:
    ActionSpec(std::uint32_t p, std::size_t n, RingPtr rx, std::vector<Poly> a, Poly mu);
    std::uint32_t p_;
    std::size_t n_;
    RingPtr rx_;
    std::vector<Poly> a_;
    Poly mu_;
    std::vector<Poly> mu_a_;
    std::vector<Poly> mu_a_pm1_;
    bool sop_certified_ = false;
    bool coprime_asserted_ = false;
};

// Element of (Z/pZ)^n.
class GroupVec {
public:
    GroupVec(std::vector<std::uint32_t> h, std::uint32_t p);
    static GroupVec zero(std::size_t n, std::uint32_t p);
    static GroupVec unit(std::size_t i, std::size_t n, std::uint32_t p);
    static GroupVec diagonal(std::size_t n, std::uint32_t p);

    std::uint32_t p() const { return p_; }
    std::size_t n() const { return h_.size(); }
    std::uint32_t operator[](std::size_t i) const { return h_[i]; }
    bool is_zero() const;
    GroupVec operator+(const GroupVec& o) const;
    GroupVec scaled(std::uint32_t c) const;
    std::uint32_t dot(const GroupVec& o) const;
    std::vector<std::size_t> support() const;
    bool operator==(const GroupVec& o) const { return p_ == o.p_ && h_ == o.h_; }

private:
    std::vector<std::uint32_t> h_;
    std::uint32_t p_;
};

// Element of A in the monomial basis u^e, e in [0,p-1]^n, with coefficients
// in R.  Exponents are always reduced and zero coefficients never stored.
class AElement {
public:
    static AElement zero(const ActionSpec& spec);
    static AElement one(const ActionSpec& spec);
    static AElement generator(std::size_t i, const ActionSpec& spec);  // u_i
    static AElement from_coeff(const Poly& r, const ActionSpec& spec);
    static AElement monomial(const Exps& e, const Poly& coeff, const ActionSpec& spec);

    bool is_zero() const { return coeffs_.empty(); }
    const std::map<Exps, Poly, DegRevLexLess>& coeffs() const { return coeffs_; }
    Poly coeff(const Exps& e) const;

    AElement operator+(const AElement& o) const;
    AElement operator-(const AElement& o) const;
    bool operator==(const AElement& o) const;
    bool operator!=(const AElement& o) const { return !(*this == o); }

    std::string str(const ActionSpec& spec) const;

    void add_term(const Exps& e, const Poly& c);  // accumulate, dropping zeros

private:
    explicit AElement(RingPtr rx) : rx_(std::move(rx)) {}
    RingPtr rx_;
    std::map<Exps, Poly, DegRevLexLess> coeffs_;
    friend AElement reduce_in_a(AElement raw, const ActionSpec& spec);
};

// Product in A, fully reduced via u_i^p -> (mu a_i)^{p-1} u_i + x_i.
AElement a_mul(const AElement& f, const AElement& g, const ActionSpec& spec);
AElement a_pow(const AElement& f, std::uint64_t e, const ActionSpec& spec);

// Ring automorphism u_j -> u_j + h_j mu a_j.
AElement act(const GroupVec& h, const AElement& f, const ActionSpec& spec);

// prod_{j=0}^{p-1} act(j h, f)  resp.  sum; h must be nonzero.
AElement norm(const AElement& f, const GroupVec& h, const ActionSpec& spec);
AElement trace(const AElement& f, const GroupVec& h, const ActionSpec& spec);

// The norm elements x_i expressed as series in u1..un: X_i satisfies
// X_i = u_i^p - (mu(X) a_i(X))^{p-1} u_i to the requested precision, and
// ord(X_i) = p.  Requires precision >= p+1.
std::vector<SeriesTrunc> express_x_in_u(const ActionSpec& spec, std::uint32_t precision);

struct FixedIdealReport {
    Verdict contained_in_mp;   // ord_u(mu a_i(X)) >= p for every i
    LengthResult length;       // length of A/(mu a_1, ..., mu a_n)A
    bool multiple_of_pn;       // valid when length.finite
    std::uint32_t precision;
};

// Verifies the fixed-scheme corollaries: the fixed ideal lies in m_A^p and
// the colength is a finite multiple of p^n.  Needs the sop flag certified.
FixedIdealReport fixed_ideal_report(const ActionSpec& spec, std::uint32_t precision,
                                    std::uint32_t cap = kDefaultLengthCap);

enum class ElementClass { PseudoReflection, GeneralizedReflection, FreeActing };

struct ClassifyReport {
    ElementClass kind;
    std::vector<std::size_t> support;   // indices i with h_i != 0
    std::vector<Poly> fixed_ideal;      // the generators mu a_i, i in support
};

// Fixed ideal of h is ({mu a_i : h_i != 0}): one nonzero component gives a
// pseudo-reflection (principal fixed ideal), two or more give a generalized
// reflection with non-divisorial fixed locus.
ClassifyReport classify_element(const GroupVec& h, const ActionSpec& spec);

}  // namespace wildram

#endif
