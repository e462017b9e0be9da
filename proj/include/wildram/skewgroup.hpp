#ifndef WILDRAM_SKEWGROUP_HPP
#define WILDRAM_SKEWGROUP_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "wildram/ringa.hpp"

namespace wildram {

// Element of the skew group ring A*G on the basis u^e sigma^i with
// e in [0,p-1]^n, i in [0,p-1] and coefficients in R; sigma is the diagonal
// generator acting by u_j -> u_j + mu a_j.
class SkewElement {
public:
    using Key = std::pair<Exps, std::uint32_t>;

    struct KeyLess {
        bool operator()(const Key& a, const Key& b) const
        {
            if (a.second != b.second)
                return a.second < b.second;
            return DegRevLexLess{}(a.first, b.first);
        }
    };

    static SkewElement zero(const ActionSpec& spec);
    static SkewElement one(const ActionSpec& spec);
    // c * u^e sigma^i
    static SkewElement basis(const Exps& e, std::uint32_t i, const ActionSpec& spec);
    static SkewElement from_a(const AElement& f, std::uint32_t i, const ActionSpec& spec);

    bool is_zero() const { return coeffs_.empty(); }
    const std::map<Key, Poly, KeyLess>& coeffs() const { return coeffs_; }

    SkewElement operator+(const SkewElement& o) const;
    SkewElement operator-(const SkewElement& o) const;
    bool operator==(const SkewElement& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const SkewElement& o) const { return !(*this == o); }

    std::string str() const;

    void add_term(const Key& k, const Poly& c);

private:
    SkewElement() = default;
    std::map<Key, Poly, KeyLess> coeffs_;
};

// (a sigma^i)(b sigma^j) = a sigma^i(b) sigma^{i+j}, extended bilinearly.
SkewElement skew_mul(const SkewElement& x, const SkewElement& y, const ActionSpec& spec);

// The R-coefficient of the basis element u^{(p-1,...,p-1)} sigma^0.
Poly phi(const SkewElement& x, const ActionSpec& spec);

struct SymmetryReport {
    bool ok = true;
    std::uint64_t pairs_checked = 0;
    std::uint64_t seed = 0;
    std::string counterexample;
};

// phi(x y) = phi(y x) over (a) every pair of basis elements, (b) the given
// number of seeded random pairs with coefficient degree at most degree_cap.
SymmetryReport check_trace_symmetry(const ActionSpec& spec, std::uint32_t degree_cap,
                                    std::uint64_t sample_count, std::uint64_t seed);

struct PairingReport {
    bool invertible = false;
    std::size_t dim = 0;  // p^{n+1}
};

// Gram matrix M[z][y] = phi(z y) over F_p on the reduced basis of
// A*G mod m_R (where u_i^p = 0 and sigma acts trivially); the trace pairing
// is nondegenerate exactly when M is invertible.
PairingReport check_pairing_nondegenerate_mod_m(const ActionSpec& spec);

}  // namespace wildram

#endif
