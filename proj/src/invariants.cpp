#include "wildram/invariants.hpp"

#include <map>
#include <sstream>

#include "wildram/linalg.hpp"

namespace wildram {

AElement minor_elem(std::size_t i, std::size_t j, const ActionSpec& spec)
{
    if (i == j)
        throw domain_error("minor indices must differ");
    if (i >= spec.n() || j >= spec.n())
        throw domain_error("minor index out of range");
    AElement ui = AElement::generator(i, spec);
    AElement uj = AElement::generator(j, spec);
    AElement left = a_mul(AElement::from_coeff(spec.a(i), spec), uj, spec);
    AElement right = a_mul(AElement::from_coeff(spec.a(j), spec), ui, spec);
    return left - right;
}

IdentityReport verify_minor_relations(const ActionSpec& spec)
{
    IdentityReport rep;
    const std::size_t n = spec.n();
    const std::uint32_t p = spec.p();
    const RingPtr& rx = spec.coeff_ring();

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            AElement z = minor_elem(i, j, spec);
            Poly lin = spec.mu().pow(p - 1) * spec.a(i).pow(p - 1) * spec.a(j).pow(p - 1);
            Poly xi = Poly::variable(rx, i);
            Poly xj = Poly::variable(rx, j);
            AElement res = a_pow(z, p, spec) -
                           a_mul(AElement::from_coeff(lin, spec), z, spec) -
                           AElement::from_coeff(spec.a(i).pow(p) * xj, spec) +
                           AElement::from_coeff(spec.a(j).pow(p) * xi, spec);
            if (!res.is_zero()) {
                std::ostringstream os;
                os << "pth-power relation failed at (" << i + 1 << "," << j + 1
                   << "): residual " << res.str(spec);
                rep.fail(os.str());
            }
        }
    }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                AElement res =
                    a_mul(AElement::from_coeff(spec.a(i), spec), minor_elem(j, k, spec), spec) -
                    a_mul(AElement::from_coeff(spec.a(j), spec), minor_elem(i, k, spec), spec) +
                    a_mul(AElement::from_coeff(spec.a(k), spec), minor_elem(i, j, spec), spec);
                if (!res.is_zero()) {
                    std::ostringstream os;
                    os << "syzygy failed at (" << i + 1 << "," << j + 1 << "," << k + 1 << ")";
                    rep.fail(os.str());
                }
            }
    return rep;
}

ZsResult z_s(const GroupVec& s, const ActionSpec& spec)
{
    if (s.is_zero())
        throw precondition_error("z_s needs a nonzero direction");
    const std::uint32_t p = spec.p();
    const std::size_t n = spec.n();
    const RingPtr& rx = spec.coeff_ring();
    auto supp = s.support();

    Poly alpha = Poly::constant(rx, 1);
    for (auto i : supp)
        alpha = alpha * spec.a(i);

    AElement z = AElement::zero(spec);
    for (auto i : supp) {
        Poly alpha_i = Poly::constant(rx, 1);
        for (auto j : supp)
            if (j != i)
                alpha_i = alpha_i * spec.a(j);
        z = z + a_mul(AElement::from_coeff(alpha_i.scaled(Fp(s[i], p)), spec),
                      AElement::generator(i, spec), spec);
    }

    // f_s(z) = z^p - (mu alpha)^{p-1} z - sum s_i alpha_i^p x_i
    Poly tail(rx);
    for (auto i : supp) {
        Poly alpha_i = Poly::constant(rx, 1);
        for (auto j : supp)
            if (j != i)
                alpha_i = alpha_i * spec.a(j);
        tail = tail + (alpha_i.pow(p) * Poly::variable(rx, i)).scaled(Fp(s[i], p));
    }
    Poly lin = (spec.mu() * alpha).pow(p - 1);
    AElement residual = a_pow(z, p, spec) - a_mul(AElement::from_coeff(lin, spec), z, spec) -
                        AElement::from_coeff(tail, spec);

    ZsResult out{z, alpha, residual.is_zero(), true};

    // stabilizer sweep: act(h, z) = z exactly when h.s = 0
    std::vector<std::uint32_t> h(n, 0);
    while (true) {
        GroupVec hv(h, p);
        bool fixes = act(hv, z, spec) == z;
        bool orth = hv.dot(s) == 0;
        if (fixes != orth)
            out.stabilizer_ok = false;
        std::size_t i = 0;
        while (i < n && ++h[i] == p) {
            h[i] = 0;
            ++i;
        }
        if (i == n)
            break;
    }
    return out;
}

std::vector<Exps> relevant_tuples(std::uint32_t p, std::size_t n)
{
    require_supported_prime(p);
    std::vector<Exps> out;
    Exps e(n, 0);
    while (true) {
        if (exps_degree(e) > 2 * p - 2)
            out.push_back(e);
        std::size_t i = n;
        while (i-- > 0) {
            if (++e[i] < p)
                break;
            e[i] = 0;
            if (i == 0)
                return out;
        }
    }
}

BigInt relevant_count_formula(std::uint32_t p, std::size_t n)
{
    BigInt pn = 1;
    for (std::size_t i = 0; i < n; ++i)
        pn *= p;
    return pn - binom_z(2 * p + n - 2, n) + BigInt(n) * binom_z(p + n - 2, n);
}

bool relevant_count_check(std::uint32_t p, std::size_t n)
{
    return BigInt(relevant_tuples(p, n).size()) == relevant_count_formula(p, n);
}

AElement trace_element(const Exps& eps, const ActionSpec& spec)
{
    if (eps.size() != spec.n())
        throw precondition_error("tuple length must equal n");
    for (auto e : eps)
        if (e >= spec.p())
            throw precondition_error("tuple entries must be below p");
    AElement mono = AElement::monomial(eps, Poly::constant(spec.coeff_ring(), 1), spec);
    if (exps_degree(eps) == 0) {
        // trace(1) = p = 0
        return AElement::zero(spec);
    }
    return trace(mono, GroupVec::diagonal(spec.n(), spec.p()), spec);
}

EdimRecord edim_formulas(std::uint32_t p, std::size_t n)
{
    require_supported_prime(p);
    BigInt pn = 1;
    for (std::size_t i = 0; i < n; ++i)
        pn *= p;
    BigInt common = pn - binom_z(2 * p + n - 2, n) + BigInt(n) * binom_z(p + n - 2, n);
    EdimRecord rec;
    rec.edim_b = BigInt(2 * n) + binom_z(n, 2) + common;
    rec.edim_ag = BigInt(n) + binom_z(n, 2) + common;
    if (rec.edim_b - rec.edim_ag != n)
        throw error("edim difference is not n");  // cannot happen
    return rec;
}

GeneratorSelection GeneratorSelection::standard(std::uint32_t p, std::size_t n)
{
    GeneratorSelection g;
    g.traces = relevant_tuples(p, n);
    return g;
}

namespace {

// The linear model: B = F_p[u1..un, a1..an], sigma(u_i) = u_i + a_i.
// Variables 0..n-1 are the u_i, n..2n-1 the a_i.
struct LinearModel {
    RingPtr ring;
    std::uint32_t p;
    std::size_t n;

    Poly u(std::size_t i) const { return Poly::variable(ring, i); }
    Poly a(std::size_t i) const { return Poly::variable(ring, n + i); }

    Poly sigma(const Poly& f) const
    {
        std::vector<Poly> imgs;
        for (std::size_t i = 0; i < n; ++i)
            imgs.push_back(u(i) + a(i));
        for (std::size_t i = 0; i < n; ++i)
            imgs.push_back(a(i));
        return f.substitute(imgs);
    }

    Poly norm(std::size_t i) const { return u(i).pow(p) - a(i).pow(p - 1) * u(i); }
    Poly minor(std::size_t i, std::size_t j) const { return a(i) * u(j) - a(j) * u(i); }

    Poly trace_elem(const Exps& eps) const
    {
        Poly t(ring);
        for (std::uint32_t j = 0; j < p; ++j) {
            Poly term = Poly::constant(ring, 1);
            for (std::size_t i = 0; i < n; ++i)
                term = term * (u(i) + a(i).scaled(Fp(j, p))).pow(eps[i]);
            t = t + term;
        }
        return t;
    }
};

std::vector<Exps> degree_monomials(std::size_t nvars, std::uint32_t d)
{
    std::vector<Exps> out;
    Exps cur(nvars, 0);
    auto rec = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
        if (i + 1 == nvars) {
            cur[i] = left;
            out.push_back(cur);
            cur[i] = 0;
            return;
        }
        for (std::uint32_t e = 0; e <= left; ++e) {
            cur[i] = e;
            self(self, i + 1, left - e);
        }
        cur[i] = 0;
    };
    if (nvars > 0)
        rec(rec, 0, d);
    return out;
}

// span dimension of a family of homogeneous degree-d polynomials
std::uint64_t span_dim(const std::vector<Poly>& polys, std::size_t nvars, std::uint32_t d,
                       std::uint32_t p)
{
    auto monos = degree_monomials(nvars, d);
    std::map<Exps, std::size_t, DegRevLexLess> index;
    for (std::size_t i = 0; i < monos.size(); ++i)
        index.emplace(monos[i], i);
    FpMat mat(polys.size(), monos.size(), p);
    for (std::size_t r = 0; r < polys.size(); ++r)
        for (const auto& [e, c] : polys[r].terms())
            mat.at(r, index.at(e)) = c;
    return mat.row_reduce();
}

// all products of the generators with total weighted degree d and at least
// `min_factors` factors
void generator_products(const std::vector<Poly>& gens, const std::vector<std::uint32_t>& degs,
                        std::uint32_t d, std::size_t min_factors, std::vector<Poly>& out,
                        const RingPtr& ring)
{
    std::vector<std::uint32_t> mult(gens.size(), 0);
    auto rec = [&](auto&& self, std::size_t i, std::uint32_t left, std::size_t count) -> void {
        if (left == 0) {
            if (count >= min_factors) {
                Poly prod = Poly::constant(ring, 1);
                for (std::size_t k = 0; k < gens.size(); ++k)
                    if (mult[k])
                        prod = prod * gens[k].pow(mult[k]);
                out.push_back(std::move(prod));
            }
            return;
        }
        if (i == gens.size())
            return;
        for (std::uint32_t m = 0; m * degs[i] <= left; ++m) {
            mult[i] = m;
            self(self, i + 1, left - m * degs[i], count + m);
        }
        mult[i] = 0;
    };
    rec(rec, 0, d, 0);
}

}  // namespace

GradedInvariantTable graded_invariant_table(std::uint32_t p, std::size_t n, std::uint32_t D,
                                            const GeneratorSelection& sel)
{
    require_supported_prime(p);
    LinearModel model{make_ring(p, [&] {
                          std::vector<std::string> v;
                          for (std::size_t i = 1; i <= n; ++i)
                              v.push_back("u" + std::to_string(i));
                          for (std::size_t i = 1; i <= n; ++i)
                              v.push_back("a" + std::to_string(i));
                          return v;
                      }()),
                      p, n};

    std::vector<Poly> gens;
    std::vector<std::uint32_t> degs;
    auto push = [&](Poly g) {
        // every declared generator must be invariant
        if (!(model.sigma(g) == g))
            throw precondition_error("declared generator is not invariant");
        degs.push_back(g.degree().value());
        gens.push_back(std::move(g));
    };
    if (sel.vars)
        for (std::size_t i = 0; i < n; ++i)
            push(model.a(i));
    if (sel.norms)
        for (std::size_t i = 0; i < n; ++i)
            push(model.norm(i));
    if (sel.minors)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                push(model.minor(i, j));
    for (const auto& eps : sel.traces) {
        if (eps.size() != n)
            throw precondition_error("trace tuple length mismatch");
        push(model.trace_elem(eps));
    }

    GradedInvariantTable table;
    table.degree_cap = D;
    table.generators_minimal = true;

    const std::size_t nvars = 2 * n;
    for (std::uint32_t d = 1; d <= D; ++d) {
        auto monos = degree_monomials(nvars, d);
        std::map<Exps, std::size_t, DegRevLexLess> index;
        for (std::size_t i = 0; i < monos.size(); ++i)
            index.emplace(monos[i], i);

        // kernel of (sigma - id) on the degree-d graded piece
        FpMat mat(monos.size(), monos.size(), p);
        for (std::size_t c = 0; c < monos.size(); ++c) {
            Poly m = Poly::monomial(model.ring, monos[c], 1);
            Poly im = model.sigma(m) - m;
            for (const auto& [e, coef] : im.terms())
                mat.at(index.at(e), c) = coef;
        }
        std::uint64_t dim_inv = monos.size() - mat.row_reduce();

        std::vector<Poly> prods;
        generator_products(gens, degs, d, 1, prods, model.ring);
        std::uint64_t dim_gen = span_dim(prods, nvars, d, p);

        table.rows.push_back(DegreeRow{d, dim_inv, dim_gen});
        if (dim_gen > dim_inv)
            throw error("generated span exceeds the invariant space");  // cannot happen
        if (dim_gen < dim_inv && !table.first_defect.has_value())
            table.first_defect = d;

        // minimality: degree-d generators stay independent modulo products
        // of two or more generators
        std::vector<Poly> composite;
        generator_products(gens, degs, d, 2, composite, model.ring);
        std::uint64_t base = span_dim(composite, nvars, d, p);
        std::vector<Poly> with_gens = composite;
        std::size_t count_d = 0;
        for (std::size_t k = 0; k < gens.size(); ++k)
            if (degs[k] == d) {
                with_gens.push_back(gens[k]);
                ++count_d;
            }
        if (span_dim(with_gens, nvars, d, p) != base + count_d)
            table.generators_minimal = false;
    }
    return table;
}

IdentityReport hypersurface_check(const Poly& a, const Poly& b, const Poly& mu, std::uint32_t p)
{
    IdentityReport rep;
    std::vector<Poly> as{a, b};
    ActionSpec spec = ActionSpec::make(p, 2, as, mu);
    AElement z = minor_elem(0, 1, spec);
    const RingPtr& rx = spec.coeff_ring();
    Poly lin = (mu * a * b).pow(p - 1);
    AElement res = a_pow(z, p, spec) - a_mul(AElement::from_coeff(lin, spec), z, spec) -
                   AElement::from_coeff(a.pow(p) * Poly::variable(rx, 1), spec) +
                   AElement::from_coeff(b.pow(p) * Poly::variable(rx, 0), spec);
    if (!res.is_zero())
        rep.fail("hypersurface relation residual: " + res.str(spec));
    if (!spec.coprime_asserted())
        rep.note("coprimality of (a, b, mu) not asserted; the identity itself is formal");
    return rep;
}

IdentityReport nonfactorial_product_check(const ActionSpec& spec)
{
    IdentityReport rep;
    const std::uint32_t p = spec.p();
    const RingPtr& rx = spec.coeff_ring();

    AElement z = minor_elem(0, 1, spec);
    Poly shift = spec.mu() * spec.a(0) * spec.a(1);
    AElement prod = AElement::one(spec);
    for (std::uint32_t i = 0; i < p; ++i) {
        AElement factor = z - AElement::from_coeff(shift.scaled(Fp(i, p)), spec);
        prod = a_mul(prod, factor, spec);
    }
    AElement expected =
        AElement::from_coeff(spec.a(0).pow(p) * Poly::variable(rx, 1), spec) -
        AElement::from_coeff(spec.a(1).pow(p) * Poly::variable(rx, 0), spec);
    if (!(prod == expected))
        rep.fail("product of shifted minors does not match a_1^p x_2 - a_2^p x_1");

    // scalar display in F_p[x, y]
    RingPtr rxy = make_ring(p, {"x", "y"});
    Poly x = Poly::variable(rxy, 0), y = Poly::variable(rxy, 1);
    Poly lhs = y * x.pow(p) - x * y.pow(p);
    Poly rhs = x * y;
    for (std::uint32_t i = 1; i < p; ++i)
        rhs = rhs * (x - y.scaled(Fp(i, p)));
    if (!(lhs == rhs))
        rep.fail("y x^p - x y^p does not match x y prod(x - i y)");
    return rep;
}

IdentityReport reflection_deltas(const ActionSpec& spec)
{
    IdentityReport rep;
    const std::uint32_t p = spec.p();
    const std::size_t n = spec.n();

    // minor deltas: act(e_i, z_ij) - z_ij = -mu a_i a_j; disjoint index fixed
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j)
                continue;
            std::size_t lo = std::min(i, j), hi = std::max(i, j);
            AElement z = minor_elem(lo, hi, spec);
            AElement delta = act(GroupVec::unit(i, n, p), z, spec) - z;
            Poly expect = -(spec.mu() * spec.a(lo) * spec.a(hi));
            if (i == hi)
                expect = -expect;  // z_{lo,hi} is antisymmetric
            if (!(delta == AElement::from_coeff(expect, spec)))
                rep.fail("minor delta failed at (" + std::to_string(i + 1) + "," +
                         std::to_string(lo + 1) + std::to_string(hi + 1) + ")");
            for (std::size_t k = 0; k < n; ++k) {
                if (k == lo || k == hi)
                    continue;
                AElement unmoved = act(GroupVec::unit(k, n, p), z, spec) - z;
                if (!unmoved.is_zero())
                    rep.fail("minor z_" + std::to_string(lo + 1) + std::to_string(hi + 1) +
                             " moved by e_" + std::to_string(k + 1));
            }
        }

    if (p == 2 && n == 3) {
        bool mu_is_one = spec.mu() == Poly::constant(spec.coeff_ring(), 1);
        if (mu_is_one) {
            AElement t = trace_element(Exps{1, 1, 1}, spec);
            AElement delta = act(GroupVec::unit(0, 3, 2), t, spec) - t;
            AElement expect =
                a_mul(AElement::from_coeff(spec.a(0), spec), minor_elem(1, 2, spec), spec) +
                AElement::from_coeff(spec.a(0) * spec.a(1) * spec.a(2), spec);
            if (!(delta == expect))
                rep.fail("trace-element delta failed");
        } else {
            rep.note("t-delta only checked at mu = 1");
        }
    }
    return rep;
}

}  // namespace wildram
