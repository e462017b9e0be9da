#ifndef WILDRAM_INVARIANTS_HPP
#define WILDRAM_INVARIANTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wildram/ringa.hpp"

namespace wildram {

// Outcome of an exact identity check; failures carry the offending indices
// or residuals, notes carry non-fatal warnings.
struct IdentityReport {
    bool ok = true;
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    void fail(std::string what)
    {
        ok = false;
        failures.push_back(std::move(what));
    }
    void note(std::string what) { notes.push_back(std::move(what)); }
};

// z_ij = a_i u_j - a_j u_i, invariant under the diagonal generator.
AElement minor_elem(std::size_t i, std::size_t j, const ActionSpec& spec);

// Both families of minor relations, exactly, over all index sets:
//   z_ij^p - mu^{p-1} a_i^{p-1} a_j^{p-1} z_ij - a_i^p x_j + a_j^p x_i = 0
//   a_i z_jk - a_j z_ik + a_k z_ij = 0                (needs n >= 3)
IdentityReport verify_minor_relations(const ActionSpec& spec);

struct ZsResult {
    AElement z;
    Poly alpha;            // product of the a_i over the support of s
    bool relation_ok;      // f_s(z_s) = 0 exactly
    bool stabilizer_ok;    // act(h, z_s) = z_s  iff  h.s = 0, all h
};

// The invariant z_s of a nonzero direction s, its monic relation, and the
// stabilizer sweep.  Coprimality over the support of s is a caller assertion
// recorded on the spec.
ZsResult z_s(const GroupVec& s, const ActionSpec& spec);

// Tuples e in [0,p-1]^n with sum e_i > 2p-2, in lexicographic order.
std::vector<Exps> relevant_tuples(std::uint32_t p, std::size_t n);
// Closed form p^n - C(2p+n-2, n) + n C(p+n-2, n) for the count above.
BigInt relevant_count_formula(std::uint32_t p, std::size_t n);
bool relevant_count_check(std::uint32_t p, std::size_t n);

// t_e = sum_{j=0}^{p-1} act(j diag, u^e); e componentwise below p.
AElement trace_element(const Exps& eps, const ActionSpec& spec);

struct EdimRecord {
    BigInt edim_b;   // embedding dimension of the completed 2n-variable invariant ring
    BigInt edim_ag;  // embedding dimension of A^G after cutting by b_i = a_i - alpha_i
};

// Exact evaluation of both closed forms; asserts edim_b - edim_ag = n.
EdimRecord edim_formulas(std::uint32_t p, std::size_t n);

// Which generators to feed the graded generation check.  Trace tuples are
// explicit so the minimality witness (dropping one) can be expressed.
struct GeneratorSelection {
    bool vars = true;    // a_1..a_n
    bool norms = true;   // x_i = u_i^p - a_i^{p-1} u_i
    bool minors = true;  // z_ij
    std::vector<Exps> traces;

    static GeneratorSelection standard(std::uint32_t p, std::size_t n);
};

struct DegreeRow {
    std::uint32_t degree;
    std::uint64_t dim_invariant;  // dim (B^G)_d as kernel of (sigma - id)
    std::uint64_t dim_generated;  // dim of the degree-d span of generator products
};

struct GradedInvariantTable {
    std::uint32_t degree_cap;
    std::vector<DegreeRow> rows;
    std::optional<std::uint32_t> first_defect;  // first degree with a gap
    bool generators_minimal;                    // independent in graded m/m^2

    bool generated_up_to_cap() const { return !first_defect.has_value(); }
};

// Graded dimensions of the invariants of B = F_p[u1..un, a1..an] under the
// linear substitution u_i -> u_i + a_i, against the subalgebra generated by
// the selected elements, per degree d <= D.
GradedInvariantTable graded_invariant_table(std::uint32_t p, std::size_t n, std::uint32_t D,
                                            const GeneratorSelection& gens);

// n = 2 hypersurface relation: z^p - (mu a b)^{p-1} z - a^p x_2 + b^p x_1 = 0
// for z = z_12 = a u_2 - b u_1.  A warning is recorded when the coprimality
// assertion was not made; the identity itself is formal.
IdentityReport hypersurface_check(const Poly& a, const Poly& b, const Poly& mu, std::uint32_t p);

// a_1^p x_2 - a_2^p x_1 = prod_{i in F_p} (z_12 - i mu a_1 a_2), exact in A;
// also the scalar display y x^p - x y^p = x y prod_{i != 0} (x - i y).
IdentityReport nonfactorial_product_check(const ActionSpec& spec);

// The two displayed generalized-reflection differences:
//   act(e_1, z_12) - z_12 = -mu a_1 a_2            (any p, n >= 2)
//   act(e_1, t_(1,1,1)) - t = a_1 z_23 + a_1 a_2 a_3   (p = 2, n = 3, mu = 1)
IdentityReport reflection_deltas(const ActionSpec& spec);

}  // namespace wildram

#endif
