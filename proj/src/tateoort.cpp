#include "wildram/tateoort.hpp"

#include <algorithm>

#include "wildram/linalg.hpp"

namespace wildram {

TateOortGroup::TateOortGroup(std::uint32_t p, Poly alpha, Poly beta)
    : p_(p), alpha_(std::move(alpha)), beta_(std::move(beta)), symbolic_(false)
{
    require_supported_prime(p);
    if (!(*alpha_.ring() == *beta_.ring()))
        throw structural_error("alpha and beta must share a base ring");
    base_ = alpha_.ring();
    if (base_->p != p)
        throw structural_error("base ring modulus must be p");
    if (!(alpha_ * beta_).is_zero())
        throw precondition_error("alpha beta = 0 is violated");
}

TateOortGroup TateOortGroup::symbolic(std::uint32_t p)
{
    RingPtr base = make_ring(p, {"alpha", "beta"});
    TateOortGroup g(p, Poly::variable(base, 0), Poly::constant(base, 0));
    g.beta_ = Poly::variable(base, 1);
    g.symbolic_ = true;
    return g;
}

Poly star(const Poly& s, const Poly& s2, const TateOortGroup& g, const Poly& beta)
{
    const std::uint32_t p = g.p();
    Poly r = s + s2;
    Poly mix(s.ring());
    for (std::uint32_t i = 1; i <= p - 1; ++i) {
        Poly term = s.pow(i) * s2.pow(p - i);
        mix = mix + term.scaled(dp_coeff(p, i));
    }
    return r + beta * mix;
}

namespace {

// One monic rewrite rule v^p -> multiplier * v + addend for variable `var`.
struct Rule {
    std::size_t var;
    Poly multiplier;
    Poly addend;
};

// Normal form modulo the given rules; in symbolic mode also kills every
// monomial divisible by alpha*beta (the constraint ideal).
Poly normal_form(Poly f, const std::vector<Rule>& rules, std::uint32_t p,
                 std::optional<std::pair<std::size_t, std::size_t>> kill_pair)
{
    const RingPtr ring = f.ring();
    auto kill = [&](const Poly& g) {
        if (!kill_pair)
            return g;
        Poly out(ring);
        for (const auto& [e, c] : g.terms()) {
            if (e[kill_pair->first] >= 1 && e[kill_pair->second] >= 1)
                continue;
            out.add_term(e, c);
        }
        return out;
    };
    f = kill(f);
    bool changed = true;
    while (changed) {
        changed = false;
        Poly next(ring);
        for (const auto& [e, c] : f.terms()) {
            const Rule* hit = nullptr;
            for (const auto& r : rules)
                if (e[r.var] >= p) {
                    hit = &r;
                    break;
                }
            if (!hit) {
                next.add_term(e, c);
                continue;
            }
            changed = true;
            Exps low = e;
            low[hit->var] -= p;
            Poly mono = Poly::monomial(ring, low, c);
            Exps with_v = low;
            with_v[hit->var] += 1;
            next = next + Poly::monomial(ring, with_v, c) * hit->multiplier +
                   mono * hit->addend;
        }
        f = kill(next);
    }
    return f;
}

// Lift a polynomial of the group's base ring into a working ring whose first
// base->arity() variables are the base variables.
Poly lift(const Poly& f, const RingPtr& work)
{
    Poly out(work);
    for (const auto& [e, c] : f.terms()) {
        Exps w(work->arity(), 0);
        std::copy(e.begin(), e.end(), w.begin());
        out.add_term(w, c);
    }
    return out;
}

}  // namespace

AxiomReport verify_group_axioms(const TateOortGroup& g)
{
    const std::uint32_t p = g.p();
    const std::size_t nb = g.base()->arity();
    std::vector<std::string> vars = g.base()->vars;
    vars.push_back("s");
    vars.push_back("s'");
    vars.push_back("s''");
    RingPtr work = make_ring(p, vars);

    Poly alpha = lift(g.alpha(), work);
    Poly beta = lift(g.beta(), work);
    Poly s1 = Poly::variable(work, nb);
    Poly s2 = Poly::variable(work, nb + 1);
    Poly s3 = Poly::variable(work, nb + 2);

    std::vector<Rule> rules;
    for (std::size_t k = 0; k < 3; ++k)
        rules.push_back(Rule{nb + k, alpha, Poly(work)});
    std::optional<std::pair<std::size_t, std::size_t>> kill;
    if (g.is_symbolic())
        kill = std::make_pair<std::size_t, std::size_t>(0, 1);
    auto nf = [&](const Poly& f) { return normal_form(f, rules, p, kill); };
    auto law = [&](const Poly& x, const Poly& y) { return star(x, y, g, beta); };

    AxiomReport rep;
    Poly w = nf(law(s1, s2));
    rep.closure = nf(w.pow(p) - alpha * w).is_zero();
    rep.associativity = nf(law(w, s3) - law(s1, nf(law(s2, s3)))).is_zero();
    rep.neutral = nf(law(s1, Poly(work)) - s1).is_zero() &&
                  nf(law(Poly(work), s1) - s1).is_zero();

    Poly inv = s1;
    for (std::uint32_t k = 2; k <= p - 1; ++k)
        inv = nf(law(inv, s1));
    rep.inverse = nf(law(inv, s1)).is_zero() && nf(law(s1, inv)).is_zero();

    if (!rep.ok())
        rep.detail = "axiom residual nonzero";
    return rep;
}

TateOortGroup scaling_iso(const Fp& eps, const TateOortGroup& g)
{
    if (eps.is_zero())
        throw precondition_error("scaling unit must be nonzero");
    if (eps.modulus() != g.p())
        throw structural_error("scaling unit modulus mismatch");
    if (!scaling_hom_check(eps, g))
        throw error("T -> eps T fails to intertwine the group laws");
    // over the prime field eps^{p-1} = 1, so the data transform is literal
    Fp scale = eps.pow(g.p() - 1);
    TateOortGroup out = g;
    out.alpha_ = g.alpha().scaled(scale);
    out.beta_ = g.beta().scaled(scale.inv());
    return out;
}

bool scaling_hom_check(const Fp& eps, const TateOortGroup& g)
{
    if (eps.is_zero())
        throw precondition_error("scaling unit must be nonzero");
    const std::uint32_t p = g.p();
    const std::size_t nb = g.base()->arity();
    std::vector<std::string> vars = g.base()->vars;
    vars.push_back("s");
    vars.push_back("s'");
    RingPtr work = make_ring(p, vars);

    Poly beta = lift(g.beta(), work);
    Fp scale = eps.pow(p - 1);
    Poly beta2 = beta.scaled(scale.inv());
    Poly s1 = Poly::variable(work, nb);
    Poly s2 = Poly::variable(work, nb + 1);

    // star'(eps s, eps s') = eps star(s, s') identically
    Poly lhs = star(s1.scaled(eps), s2.scaled(eps), g, beta2);
    Poly rhs = star(s1, s2, g, beta).scaled(eps);
    return lhs == rhs;
}

TorsorScheme::TorsorScheme(std::uint32_t p_, Poly a_, Poly b_)
    : base(a_.ring()), a(std::move(a_)), b(std::move(b_)), p(p_)
{
    require_supported_prime(p);
    if (!(*a.ring() == *b.ring()))
        throw structural_error("a and b must share a base ring");
    if (base->p != p)
        throw structural_error("base ring modulus must be p");
    if (a.is_zero())
        throw precondition_error("torsor needs a != 0");
}

namespace {

void require_matching_group(const TorsorScheme& t, const TateOortGroup& g)
{
    if (g.is_symbolic())
        throw structural_error("torsor checks need a concrete group");
    if (!(*g.base() == *t.base))
        throw structural_error("torsor and group base rings differ");
    if (!(g.alpha() == t.a.pow(t.p - 1)) || !g.beta().is_zero())
        throw structural_error("group must be G_{a^{p-1}, 0} for the torsor's a");
}

}  // namespace

TorsorActionReport torsor_action(const TorsorScheme& t, const TateOortGroup& g)
{
    require_matching_group(t, g);
    const std::uint32_t p = t.p;
    const std::size_t nb = t.base->arity();
    std::vector<std::string> vars = t.base->vars;
    vars.push_back("z");
    vars.push_back("z'");
    vars.push_back("u");
    RingPtr work = make_ring(p, vars);

    Poly a = lift(t.a, work);
    Poly b = lift(t.b, work);
    Poly alpha = a.pow(p - 1);
    Poly z = Poly::variable(work, nb);
    Poly z2 = Poly::variable(work, nb + 1);
    Poly u = Poly::variable(work, nb + 2);

    std::vector<Rule> rules{Rule{nb, alpha, Poly(work)},
                            Rule{nb + 1, alpha, Poly(work)},
                            Rule{nb + 2, alpha, b}};
    auto nf = [&](const Poly& f) { return normal_form(f, rules, p, std::nullopt); };

    TorsorActionReport rep;
    Poly img = z + u;  // the coaction on u
    rep.respects_relation = nf(img.pow(p) - alpha * img - b).is_zero();

    // both ways of acting twice agree: z * z' + u vs z + (z' + u)
    Poly beta_zero(work);
    Poly two_step = star(z, z2, g, beta_zero) + u;
    rep.coassociative = nf(two_step - (z + (z2 + u))).is_zero();

    // neutral section z = 0 restores the identity
    std::vector<Poly> imgs;
    for (std::size_t i = 0; i < work->arity(); ++i)
        imgs.push_back(Poly::variable(work, i));
    imgs[nb] = Poly(work);
    rep.neutral = img.substitute(imgs) == u;
    return rep;
}

Poly torsor_determinant(const TorsorScheme& t, const TateOortGroup& g)
{
    require_matching_group(t, g);
    const std::uint32_t p = t.p;
    const RingPtr& base = t.base;

    // u^m as a vector of p coefficients over the base ring
    std::vector<std::vector<Poly>> upow;
    Poly apm1 = t.a.pow(p - 1);
    for (std::uint32_t m = 0; m <= 2 * (p - 1); ++m) {
        std::vector<Poly> row(p, Poly(base));
        if (m < p) {
            row[m] = Poly::constant(base, 1);
        } else {
            // u^m = u^{m-p} (a^{p-1} u + b)
            for (std::uint32_t l = 0; l < p; ++l)
                row[l] = upow[m - p][l] * t.b + upow[m - p + 1][l] * apm1;
        }
        upow.push_back(std::move(row));
    }

    const std::size_t dim = static_cast<std::size_t>(p) * p;
    std::vector<std::vector<Poly>> mat(dim, std::vector<Poly>(dim, Poly(base)));
    for (std::uint32_t i = 0; i < p; ++i)
        for (std::uint32_t j = 0; j < p; ++j) {
            std::size_t col = static_cast<std::size_t>(i) * p + j;
            for (std::uint32_t k = 0; k <= i; ++k) {
                Fp binom = binom_mod_p(i, k, p);
                if (binom.is_zero())
                    continue;
                const auto& ured = upow[i - k + j];
                for (std::uint32_t l = 0; l < p; ++l) {
                    if (ured[l].is_zero())
                        continue;
                    std::size_t row = static_cast<std::size_t>(k) * p + l;
                    mat[row][col] = mat[row][col] + ured[l].scaled(binom);
                }
            }
        }

    // Bareiss fraction-free elimination
    Poly det_sign = Poly::constant(base, 1);
    Poly prev = Poly::constant(base, 1);
    for (std::size_t k = 0; k + 1 < dim; ++k) {
        if (mat[k][k].is_zero()) {
            std::size_t piv = k + 1;
            while (piv < dim && mat[piv][k].is_zero())
                ++piv;
            if (piv == dim)
                return Poly(base);  // singular
            std::swap(mat[k], mat[piv]);
            det_sign = -det_sign;
        }
        for (std::size_t i = k + 1; i < dim; ++i) {
            for (std::size_t j = k + 1; j < dim; ++j) {
                Poly num = mat[k][k] * mat[i][j] - mat[i][k] * mat[k][j];
                mat[i][j] = num.divide_exact(prev);
            }
            mat[i][k] = Poly(base);
        }
        prev = mat[k][k];
        if (prev.is_zero())
            return Poly(base);
    }
    return mat[dim - 1][dim - 1] * det_sign;
}

}  // namespace wildram
