#include "wildram/dimone.hpp"

#include <string>
#include <vector>

namespace wildram {

namespace {

void require_univariate(const Poly& f)
{
    if (f.arity() != 1)
        throw structural_error("a univariate polynomial is required");
}

}  // namespace

LocalAutomorphism::LocalAutomorphism(std::uint32_t p, SeriesTrunc image)
    : p_(p), image_(std::move(image))
{
    require_supported_prime(p);
    const Poly& im = image_.poly();
    require_univariate(im);
    Poly u = Poly::variable(im.ring(), 0);
    Poly diff = im - u;
    auto o = diff.ord();
    if (!im.constant_term().is_zero() || (o.has_value() && *o < 2))
        throw precondition_error("image must be u + (order >= 2 terms)");
    // p-fold composition must restore u to precision
    Poly cur = im;
    std::vector<Poly> imgs{im};
    for (std::uint32_t j = 1; j < p_; ++j)
        cur = cur.substitute_trunc(imgs, image_.precision());
    if (!(cur == u.truncated(image_.precision())))
        throw precondition_error("substitution does not have order p to precision");
}

SeriesTrunc LocalAutomorphism::apply(const SeriesTrunc& f) const
{
    require_univariate(f.poly());
    std::uint32_t n = std::min(f.precision(), image_.precision());
    std::vector<Poly> imgs{image_.poly()};
    return SeriesTrunc(f.poly().substitute_trunc(imgs, n), n);
}

std::optional<std::uint32_t> ramification_break(const LocalAutomorphism& sigma)
{
    Poly diff = sigma.image().poly() - Poly::variable(sigma.image().poly().ring(), 0);
    auto o = diff.ord();
    if (!o.has_value())
        return std::nullopt;  // identity to precision
    return *o - 1;
}

ModelExponent effective_model_exponent(std::uint32_t m, std::uint32_t p)
{
    require_supported_prime(p);
    if (m < 1)
        throw domain_error("the break m must be at least 1");
    ModelExponent e;
    e.r = (m + 1) / p;
    e.i = (m + 1) % p;
    e.torsor = e.i == 0;
    return e;
}

ASData normalize_artin_schreier(ASData data, std::uint32_t p)
{
    require_supported_prime(p);
    require_univariate(data.f);
    if (data.f.constant_term().is_zero())
        throw precondition_error("f(0) must be nonzero");
    if (data.mu == 0)
        throw precondition_error("mu must be positive");
    const RingPtr& ring = data.f.ring();
    while (data.mu % p == 0) {
        std::uint32_t r = data.mu / p;
        Fp lead = data.f.constant_term();
        // z' = z - lead / x^r turns the right side into
        // x^{-mu} (f - lead + lead x^{mu - r})
        Poly h = data.f - Poly::constant(ring, lead.value()) +
                 Poly::monomial(ring, Exps{data.mu - r}, lead.value());
        if (h.is_zero())
            throw precondition_error("extension is split; not totally ramified");
        std::uint32_t v = h.ord().value();
        if (v >= data.mu)
            throw precondition_error("mu dropped to zero; not totally ramified");
        // divide by x^v
        Poly shifted(ring);
        for (const auto& [e, c] : h.terms())
            shifted.add_term(Exps{e[0] - v}, c);
        data.mu -= v;
        data.f = shifted;
    }
    return data;
}

LocalAutomorphism build_moderate_presentation(std::uint32_t r, const Poly& f, std::uint32_t p,
                                              std::uint32_t precision)
{
    require_supported_prime(p);
    require_univariate(f);
    if (r < 1)
        throw domain_error("r >= 1 required");
    if (f.constant_term().is_zero())
        throw precondition_error("f(0) must be nonzero");
    std::uint32_t prec = std::max<std::uint32_t>(precision, p * r + 2);

    // solve s^p - x^{r(p-1)} s - x f(x) = 0 for x as a series in s
    RingPtr work = make_ring(p, {"x", "s"});
    Poly x = Poly::variable(work, 0);
    Poly s = Poly::variable(work, 1);
    std::vector<Poly> f_lift_imgs{x};
    Poly fx = f.substitute(f_lift_imgs);
    Poly relation = s.pow(p) - x.pow(r * (p - 1)) * s - x * fx;
    SeriesTrunc xs = implicit_solve(relation, 0, prec);

    // sigma(s) = s + x(s)^r in the univariate ring k[s]
    RingPtr rs = make_ring(p, {"s"});
    Poly x_of_s(rs);
    for (const auto& [e, c] : xs.poly().terms())
        x_of_s.add_term(Exps{e[1]}, c);
    Poly image = Poly::variable(rs, 0) + pow_trunc(x_of_s, r, prec);
    LocalAutomorphism sigma(p, SeriesTrunc(image, prec));

    auto brk = ramification_break(sigma);
    if (!brk.has_value() || *brk != p * r - 1)
        throw error("constructed presentation has an unexpected ramification break");
    return sigma;
}

std::uint32_t break_via_valuation(std::uint32_t i, std::uint32_t r, const Poly& f,
                                  std::uint32_t p)
{
    require_supported_prime(p);
    require_univariate(f);
    if (i == 0 || i >= p)
        throw domain_error("0 < i < p required");
    if (r < 1 || p * r <= i)
        throw domain_error("need r >= 1 with p r - i > 0");
    if (f.constant_term().is_zero())
        throw precondition_error("f(0) must be nonzero");

    std::uint32_t c = 0;
    for (std::uint32_t t = 1; t < p; ++t)
        if ((t * i) % p == 1)
            c = t;
    std::uint32_t d = (c * i - 1) / p;

    // (s + x^r)^c - s^c as coefficients of s^j over k[x]
    RingPtr ring = f.ring();
    std::vector<Poly> coeff(c + 1, Poly(ring));
    for (std::uint32_t j = 0; j < c; ++j) {
        Fp binom = binom_mod_p(c, j, p);
        coeff[j] = Poly::monomial(ring, Exps{r * (c - j)}, binom.value());
    }

    // val(sum c_j s^j) = min_j (p ord_x(c_j) + j i), minimum attained once
    std::uint64_t best = UINT64_MAX;
    std::size_t hits = 0;
    for (std::uint32_t j = 0; j <= c; ++j) {
        if (coeff[j].is_zero())
            continue;
        std::uint64_t v = static_cast<std::uint64_t>(p) * coeff[j].ord().value() +
                          static_cast<std::uint64_t>(j) * i;
        if (v < best) {
            best = v;
            hits = 1;
        } else if (v == best) {
            ++hits;
        }
    }
    if (hits != 1)
        throw error("valuation minimum is not unique; cancellation would be possible");

    std::uint64_t result = best - static_cast<std::uint64_t>(d) * p - 1;
    if (result != static_cast<std::uint64_t>(p) * r - i)
        throw error("computed break " + std::to_string(result) + " differs from mu = " +
                    std::to_string(p * r - i));
    return static_cast<std::uint32_t>(result);
}

}  // namespace wildram
