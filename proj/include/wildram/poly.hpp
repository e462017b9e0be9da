#ifndef WILDRAM_POLY_HPP
#define WILDRAM_POLY_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wildram/errors.hpp"
#include "wildram/gfp.hpp"

namespace wildram {

// A polynomial ring F_p[v_0, ..., v_{arity-1}].  Rings are shared immutable
// contexts; two rings are compatible when modulus and variable lists agree.
struct PolyRing {
    std::uint32_t p;
    std::vector<std::string> vars;

    std::size_t arity() const { return vars.size(); }
    bool operator==(const PolyRing& o) const { return p == o.p && vars == o.vars; }
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::uint32_t p, std::vector<std::string> vars);
// Variables stem1..stemN, e.g. make_ring(5, "x", 3) -> F_5[x1,x2,x3].
RingPtr make_ring(std::uint32_t p, const std::string& stem, std::size_t n);

using Exps = std::vector<std::uint32_t>;

std::uint32_t exps_degree(const Exps& e);

// Graded reverse-lexicographic order on exponent vectors.
struct DegRevLexLess {
    bool operator()(const Exps& a, const Exps& b) const;
};

// Sparse multivariate polynomial over F_p in canonical degrevlex form.
// No zero coefficients are stored.
class Poly {
public:
    explicit Poly(RingPtr ring);  // zero polynomial
    static Poly constant(RingPtr ring, std::int64_t c);
    static Poly variable(RingPtr ring, std::size_t i);
    static Poly monomial(RingPtr ring, Exps e, std::int64_t c);

    const RingPtr& ring() const { return ring_; }
    std::size_t arity() const { return ring_->arity(); }
    std::uint32_t modulus() const { return ring_->p; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // Minimum total degree of a nonzero term; nullopt (= +infinity) for zero.
    std::optional<std::uint32_t> ord() const;
    // Maximum total degree; nullopt for zero.
    std::optional<std::uint32_t> degree() const;

    Fp coeff(const Exps& e) const;
    Fp constant_term() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const Fp& c) const;
    Poly pow(std::uint64_t e) const;
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Drop all terms of total degree >= bound.
    Poly truncated(std::uint32_t bound) const;

    // Image under the homomorphism v_i -> images[i].  All images must live
    // in one common ring, which becomes the ring of the result.
    Poly substitute(std::span<const Poly> images) const;
    // Same, truncating intermediates at total degree `bound`.
    Poly substitute_trunc(std::span<const Poly> images, std::uint32_t bound) const;

    Poly derivative(std::size_t var) const;

    // Exact division; throws division_error when the divisor does not divide.
    Poly divide_exact(const Poly& divisor) const;

    std::string str() const;

    const std::map<Exps, std::uint32_t, DegRevLexLess>& terms() const { return terms_; }

    void add_term(const Exps& e, std::int64_t c);  // accumulate, normalizing

private:
    RingPtr ring_;
    std::map<Exps, std::uint32_t, DegRevLexLess> terms_;

    void check_compatible(const Poly& o) const;
};

Poly mul_trunc(const Poly& a, const Poly& b, std::uint32_t bound);
Poly pow_trunc(const Poly& a, std::uint64_t e, std::uint32_t bound);

// Result of a valuation query on a truncated series: either an exact order
// below the precision, or only the bound "order >= precision".
struct SeriesOrd {
    bool exact;
    std::uint32_t value;  // the order if exact, else the precision bound
};

// A polynomial together with a total-degree precision N; terms of degree >= N
// are identically discarded.  Binary operations take the minimum precision.
class SeriesTrunc {
public:
    SeriesTrunc(Poly poly, std::uint32_t precision);

    const Poly& poly() const { return poly_; }
    std::uint32_t precision() const { return prec_; }

    SeriesTrunc operator+(const SeriesTrunc& o) const;
    SeriesTrunc operator-(const SeriesTrunc& o) const;
    SeriesTrunc operator*(const SeriesTrunc& o) const;
    SeriesTrunc pow(std::uint64_t e) const;
    bool operator==(const SeriesTrunc& o) const;

    SeriesOrd ord() const;

    std::string str() const;

private:
    Poly poly_;
    std::uint32_t prec_;
};

// Solves `relation(unknown, knowns) = 0` for the unknown variable as a power
// series with zero constant term, by fixed-point iteration to the requested
// total-degree precision.  The relation must be linear-unit in the pure
// unknown (coefficient c of the bare unknown monomial nonzero) and every
// remaining unknown-carrying term must have total degree >= 2, so each
// iteration strictly gains precision.  The result lives in the relation's
// ring with the unknown variable unused, and is always back-substituted into
// the relation as a final consistency assertion.
SeriesTrunc implicit_solve(const Poly& relation, std::size_t unknown, std::uint32_t precision);

}  // namespace wildram

#endif
