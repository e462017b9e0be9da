#include "wildram/skewgroup.hpp"

#include <random>
#include <sstream>

#include "wildram/linalg.hpp"

namespace wildram {

SkewElement SkewElement::zero(const ActionSpec& spec)
{
    (void)spec;
    return SkewElement();
}

SkewElement SkewElement::one(const ActionSpec& spec)
{
    SkewElement x;
    x.add_term({Exps(spec.n(), 0), 0}, Poly::constant(spec.coeff_ring(), 1));
    return x;
}

SkewElement SkewElement::basis(const Exps& e, std::uint32_t i, const ActionSpec& spec)
{
    if (e.size() != spec.n())
        throw structural_error("exponent vector length mismatch");
    for (auto v : e)
        if (v >= spec.p())
            throw precondition_error("exponent not reduced");
    if (i >= spec.p())
        throw precondition_error("group power not reduced");
    SkewElement x;
    x.add_term({e, i}, Poly::constant(spec.coeff_ring(), 1));
    return x;
}

SkewElement SkewElement::from_a(const AElement& f, std::uint32_t i, const ActionSpec& spec)
{
    if (i >= spec.p())
        throw precondition_error("group power not reduced");
    SkewElement x;
    for (const auto& [e, c] : f.coeffs())
        x.add_term({e, i}, c);
    return x;
}

void SkewElement::add_term(const Key& k, const Poly& c)
{
    if (c.is_zero())
        return;
    auto it = coeffs_.find(k);
    if (it == coeffs_.end()) {
        coeffs_.emplace(k, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero())
            coeffs_.erase(it);
    }
}

SkewElement SkewElement::operator+(const SkewElement& o) const
{
    SkewElement r = *this;
    for (const auto& [k, c] : o.coeffs_)
        r.add_term(k, c);
    return r;
}

SkewElement SkewElement::operator-(const SkewElement& o) const
{
    SkewElement r = *this;
    for (const auto& [k, c] : o.coeffs_)
        r.add_term(k, -c);
    return r;
}

std::string SkewElement::str() const
{
    if (coeffs_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : coeffs_) {
        if (!first)
            os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (std::size_t i = 0; i < k.first.size(); ++i) {
            if (k.first[i] == 0)
                continue;
            os << "*u" << (i + 1);
            if (k.first[i] > 1)
                os << "^" << k.first[i];
        }
        if (k.second)
            os << "*g^" << k.second;
    }
    return os.str();
}

SkewElement skew_mul(const SkewElement& x, const SkewElement& y, const ActionSpec& spec)
{
    const std::uint32_t p = spec.p();
    GroupVec diag = GroupVec::diagonal(spec.n(), p);
    SkewElement out = SkewElement::zero(spec);
    for (const auto& [kx, cx] : x.coeffs()) {
        AElement ax = AElement::monomial(kx.first, cx, spec);
        for (const auto& [ky, cy] : y.coeffs()) {
            AElement ay = AElement::monomial(ky.first, cy, spec);
            AElement twisted = act(diag.scaled(kx.second), ay, spec);
            AElement prod = a_mul(ax, twisted, spec);
            std::uint32_t power = (kx.second + ky.second) % p;
            for (const auto& [e, c] : prod.coeffs())
                out.add_term({e, power}, c);
        }
    }
    return out;
}

Poly phi(const SkewElement& x, const ActionSpec& spec)
{
    SkewElement::Key top{Exps(spec.n(), spec.p() - 1), 0};
    auto it = x.coeffs().find(top);
    if (it == x.coeffs().end())
        return Poly(spec.coeff_ring());
    return it->second;
}

namespace {

std::vector<SkewElement::Key> full_basis(const ActionSpec& spec)
{
    const std::uint32_t p = spec.p();
    const std::size_t n = spec.n();
    std::vector<SkewElement::Key> keys;
    Exps e(n, 0);
    while (true) {
        for (std::uint32_t i = 0; i < p; ++i)
            keys.push_back({e, i});
        std::size_t k = 0;
        while (k < n && ++e[k] == p) {
            e[k] = 0;
            ++k;
        }
        if (k == n)
            break;
    }
    return keys;
}

Poly random_poly(const RingPtr& ring, std::uint32_t degree_cap, std::mt19937_64& rng)
{
    std::uniform_int_distribution<std::uint32_t> nterms(0, 3);
    std::uniform_int_distribution<std::uint32_t> coeff(0, ring->p - 1);
    std::uniform_int_distribution<std::uint32_t> deg(0, degree_cap);
    Poly f(ring);
    std::uint32_t k = nterms(rng);
    for (std::uint32_t t = 0; t < k; ++t) {
        Exps e(ring->arity(), 0);
        std::uint32_t budget = deg(rng);
        std::uniform_int_distribution<std::size_t> pick(0, ring->arity() - 1);
        for (std::uint32_t d = 0; d < budget; ++d)
            e[pick(rng)] += 1;
        f.add_term(e, coeff(rng));
    }
    return f;
}

SkewElement random_skew(const ActionSpec& spec, std::uint32_t degree_cap,
                        std::mt19937_64& rng)
{
    auto keys = full_basis(spec);
    std::uniform_int_distribution<std::size_t> nterms(1, 4);
    std::uniform_int_distribution<std::size_t> pick(0, keys.size() - 1);
    SkewElement x = SkewElement::zero(spec);
    std::size_t k = nterms(rng);
    for (std::size_t t = 0; t < k; ++t)
        x.add_term(keys[pick(rng)], random_poly(spec.coeff_ring(), degree_cap, rng));
    return x;
}

}  // namespace

SymmetryReport check_trace_symmetry(const ActionSpec& spec, std::uint32_t degree_cap,
                                    std::uint64_t sample_count, std::uint64_t seed)
{
    SymmetryReport rep;
    rep.seed = seed;
    auto keys = full_basis(spec);
    for (const auto& kx : keys) {
        SkewElement x = SkewElement::basis(kx.first, kx.second, spec);
        for (const auto& ky : keys) {
            SkewElement y = SkewElement::basis(ky.first, ky.second, spec);
            Poly xy = phi(skew_mul(x, y, spec), spec);
            Poly yx = phi(skew_mul(y, x, spec), spec);
            ++rep.pairs_checked;
            if (!(xy == yx)) {
                rep.ok = false;
                rep.counterexample = "basis pair " + x.str() + " , " + y.str();
                return rep;
            }
        }
    }
    std::mt19937_64 rng(seed);
    for (std::uint64_t t = 0; t < sample_count; ++t) {
        SkewElement x = random_skew(spec, degree_cap, rng);
        SkewElement y = random_skew(spec, degree_cap, rng);
        Poly xy = phi(skew_mul(x, y, spec), spec);
        Poly yx = phi(skew_mul(y, x, spec), spec);
        ++rep.pairs_checked;
        if (!(xy == yx)) {
            rep.ok = false;
            rep.counterexample = "random pair " + x.str() + " , " + y.str();
            return rep;
        }
    }
    return rep;
}

PairingReport check_pairing_nondegenerate_mod_m(const ActionSpec& spec)
{
    const std::uint32_t p = spec.p();
    const std::size_t n = spec.n();
    auto keys = full_basis(spec);
    PairingReport rep;
    rep.dim = keys.size();

    // Mod m_R the algebra is k[u, sigma]/(u_i^p, sigma^p - 1): products are
    // monomial, dying when any u-exponent reaches p.
    FpMat gram(rep.dim, rep.dim, p);
    for (std::size_t r = 0; r < rep.dim; ++r) {
        for (std::size_t c = 0; c < rep.dim; ++c) {
            const auto& [er, ir] = keys[r];
            const auto& [ec, ic] = keys[c];
            bool alive = true;
            Exps sum(n);
            for (std::size_t k = 0; k < n; ++k) {
                sum[k] = er[k] + ec[k];
                if (sum[k] >= p) {
                    alive = false;
                    break;
                }
            }
            if (!alive)
                continue;
            bool top = (ir + ic) % p == 0;
            for (std::size_t k = 0; k < n && top; ++k)
                top = sum[k] == p - 1;
            gram.at(r, c) = top ? 1 : 0;
        }
    }
    rep.invertible = gram.is_invertible();
    return rep;
}

}  // namespace wildram
