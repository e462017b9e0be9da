#include "wildram/ringa.hpp"

#include <sstream>
#include <string>

namespace wildram {

ActionSpec::ActionSpec(std::uint32_t p, std::size_t n, RingPtr rx, std::vector<Poly> a,
                       Poly mu)
    : p_(p), n_(n), rx_(std::move(rx)), a_(std::move(a)), mu_(std::move(mu))
{
    for (std::size_t i = 0; i < n_; ++i) {
        mu_a_.push_back(mu_ * a_[i]);
        mu_a_pm1_.push_back(mu_a_[i].pow(p_ - 1));
    }
}

ActionSpec ActionSpec::make(std::uint32_t p, std::size_t n, std::vector<Poly> a, Poly mu)
{
    require_supported_prime(p);
    if (n < 2)
        throw precondition_error("n >= 2 required");
    if (a.size() != n)
        throw precondition_error("need one a_i per variable");
    const RingPtr rx = a.front().ring();
    if (rx->arity() != n || rx->p != p)
        throw structural_error("a_i must live in F_p[x1..xn]");
    for (const auto& ai : a) {
        if (!(*ai.ring() == *rx))
            throw structural_error("a_i live in different rings");
        if (ai.is_zero())
            throw precondition_error("a_i must be nonzero");
        if (!ai.constant_term().is_zero())
            throw precondition_error("a_i must have zero constant term");
    }
    if (!(*mu.ring() == *rx))
        throw structural_error("mu must live in the coefficient ring");
    if (mu.is_zero())
        throw precondition_error("mu must be nonzero");

    return ActionSpec(p, n, rx, std::move(a), std::move(mu));
}

ActionSpec ActionSpec::make(std::uint32_t p, std::size_t n, std::vector<Poly> a)
{
    RingPtr rx = a.front().ring();
    return make(p, n, std::move(a), Poly::constant(rx, 1));
}

void ActionSpec::certify_sop(std::uint32_t cap)
{
    LengthResult r = local_length(mu_a_, cap);
    if (!r.finite)
        throw precondition_error("(mu a_1, ..., mu a_n) not certified as a system of parameters");
    sop_certified_ = true;
}

bool ActionSpec::same_as(const ActionSpec& o) const
{
    if (p_ != o.p_ || n_ != o.n_ || !(*rx_ == *o.rx_))
        return false;
    if (!(mu_ == o.mu_))
        return false;
    for (std::size_t i = 0; i < n_; ++i)
        if (!(a_[i] == o.a_[i]))
            return false;
    return true;
}

GroupVec::GroupVec(std::vector<std::uint32_t> h, std::uint32_t p) : h_(std::move(h)), p_(p)
{
    for (auto& v : h_)
        v %= p_;
}

GroupVec GroupVec::zero(std::size_t n, std::uint32_t p)
{
    return GroupVec(std::vector<std::uint32_t>(n, 0), p);
}

GroupVec GroupVec::unit(std::size_t i, std::size_t n, std::uint32_t p)
{
    std::vector<std::uint32_t> h(n, 0);
    h[i] = 1;
    return GroupVec(std::move(h), p);
}

GroupVec GroupVec::diagonal(std::size_t n, std::uint32_t p)
{
    return GroupVec(std::vector<std::uint32_t>(n, 1), p);
}

bool GroupVec::is_zero() const
{
    for (auto v : h_)
        if (v)
            return false;
    return true;
}

GroupVec GroupVec::operator+(const GroupVec& o) const
{
    if (p_ != o.p_ || n() != o.n())
        throw structural_error("group vectors from different groups");
    std::vector<std::uint32_t> h(h_.size());
    for (std::size_t i = 0; i < h_.size(); ++i)
        h[i] = add_mod(h_[i], o.h_[i], p_);
    return GroupVec(std::move(h), p_);
}

GroupVec GroupVec::scaled(std::uint32_t c) const
{
    std::vector<std::uint32_t> h(h_.size());
    for (std::size_t i = 0; i < h_.size(); ++i)
        h[i] = mul_mod(h_[i], c % p_, p_);
    return GroupVec(std::move(h), p_);
}

std::uint32_t GroupVec::dot(const GroupVec& o) const
{
    if (p_ != o.p_ || n() != o.n())
        throw structural_error("group vectors from different groups");
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < h_.size(); ++i)
        s = add_mod(s, mul_mod(h_[i], o.h_[i], p_), p_);
    return s;
}

std::vector<std::size_t> GroupVec::support() const
{
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < h_.size(); ++i)
        if (h_[i])
            s.push_back(i);
    return s;
}

AElement AElement::zero(const ActionSpec& spec)
{
    return AElement(spec.coeff_ring());
}

AElement AElement::one(const ActionSpec& spec)
{
    AElement f(spec.coeff_ring());
    f.add_term(Exps(spec.n(), 0), Poly::constant(spec.coeff_ring(), 1));
    return f;
}

AElement AElement::generator(std::size_t i, const ActionSpec& spec)
{
    if (i >= spec.n())
        throw domain_error("generator index out of range");
    AElement f(spec.coeff_ring());
    Exps e(spec.n(), 0);
    e[i] = 1;
    f.add_term(e, Poly::constant(spec.coeff_ring(), 1));
    return f;
}

AElement AElement::from_coeff(const Poly& r, const ActionSpec& spec)
{
    if (!(*r.ring() == *spec.coeff_ring()))
        throw structural_error("coefficient from the wrong ring");
    AElement f(spec.coeff_ring());
    f.add_term(Exps(spec.n(), 0), r);
    return f;
}

AElement AElement::monomial(const Exps& e, const Poly& coeff, const ActionSpec& spec)
{
    if (e.size() != spec.n())
        throw structural_error("exponent vector length mismatch");
    for (auto x : e)
        if (x >= spec.p())
            throw precondition_error("exponent not reduced");
    AElement f(spec.coeff_ring());
    f.add_term(e, coeff);
    return f;
}

Poly AElement::coeff(const Exps& e) const
{
    auto it = coeffs_.find(e);
    if (it == coeffs_.end())
        return Poly(rx_);
    return it->second;
}

void AElement::add_term(const Exps& e, const Poly& c)
{
    if (c.is_zero())
        return;
    auto it = coeffs_.find(e);
    if (it == coeffs_.end()) {
        coeffs_.emplace(e, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero())
            coeffs_.erase(it);
    }
}

AElement AElement::operator+(const AElement& o) const
{
    AElement r = *this;
    for (const auto& [e, c] : o.coeffs_)
        r.add_term(e, c);
    return r;
}

AElement AElement::operator-(const AElement& o) const
{
    AElement r = *this;
    for (const auto& [e, c] : o.coeffs_)
        r.add_term(e, -c);
    return r;
}

bool AElement::operator==(const AElement& o) const
{
    return coeffs_ == o.coeffs_;
}

std::string AElement::str(const ActionSpec& spec) const
{
    if (coeffs_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        if (!first)
            os << " + ";
        first = false;
        os << "(" << it->second.str() << ")";
        for (std::size_t i = 0; i < it->first.size(); ++i) {
            if (it->first[i] == 0)
                continue;
            os << "*u" << (i + 1);
            if (it->first[i] > 1)
                os << "^" << it->first[i];
        }
        (void)spec;
    }
    return os.str();
}

// Rewrite u_i^p -> (mu a_i)^{p-1} u_i + x_i until all exponents drop below p.
AElement reduce_in_a(AElement raw, const ActionSpec& spec)
{
    const std::uint32_t p = spec.p();
    const std::size_t n = spec.n();
    AElement out(spec.coeff_ring());
    bool changed = true;
    while (changed) {
        changed = false;
        AElement next(spec.coeff_ring());
        for (const auto& [e, c] : raw.coeffs()) {
            std::size_t i = 0;
            while (i < n && e[i] < p)
                ++i;
            if (i == n) {
                out.add_term(e, c);
                continue;
            }
            changed = true;
            Exps low = e;
            low[i] -= p;
            Exps with_u = low;
            with_u[i] += 1;
            next.add_term(with_u, c * spec.mu_a_pm1(i));
            next.add_term(low, c * Poly::variable(spec.coeff_ring(), i));
        }
        raw = std::move(next);
    }
    return out;
}

AElement a_mul(const AElement& f, const AElement& g, const ActionSpec& spec)
{
    AElement raw = AElement::zero(spec);
    const std::size_t n = spec.n();
    Exps e(n);
    for (const auto& [ea, ca] : f.coeffs()) {
        for (const auto& [eb, cb] : g.coeffs()) {
            for (std::size_t i = 0; i < n; ++i)
                e[i] = ea[i] + eb[i];
            raw.add_term(e, ca * cb);
        }
    }
    return reduce_in_a(std::move(raw), spec);
}

AElement a_pow(const AElement& f, std::uint64_t e, const ActionSpec& spec)
{
    AElement r = AElement::one(spec);
    AElement base = f;
    while (e) {
        if (e & 1)
            r = a_mul(r, base, spec);
        if (e >>= 1)
            base = a_mul(base, base, spec);
    }
    return r;
}

AElement act(const GroupVec& h, const AElement& f, const ActionSpec& spec)
{
    if (h.p() != spec.p() || h.n() != spec.n())
        throw structural_error("group vector does not match the spec");
    const std::uint32_t p = spec.p();
    const std::size_t n = spec.n();
    AElement out = AElement::zero(spec);
    // (u_i + h_i mu a_i)^{e_i} expands with all exponents still below p
    std::vector<std::vector<Poly>> shift_pows(n);
    for (std::size_t i = 0; i < n; ++i)
        shift_pows[i].push_back(Poly::constant(spec.coeff_ring(), 1));
    auto shift_pow = [&](std::size_t i, std::uint32_t k) -> const Poly& {
        auto& cache = shift_pows[i];
        while (cache.size() <= k) {
            Poly shift = spec.mu_a(i).scaled(Fp(h[i], p));
            cache.push_back(cache.back() * shift);
        }
        return cache[k];
    };
    for (const auto& [e, c] : f.coeffs()) {
        // iterate over k <= e componentwise
        Exps k(n, 0);
        while (true) {
            Poly coeff = c;
            for (std::size_t i = 0; i < n; ++i) {
                if (e[i] == 0)
                    continue;
                Fp binom = binom_mod_p(e[i], k[i], p);
                if (binom.is_zero()) {
                    coeff = Poly(spec.coeff_ring());
                    break;
                }
                coeff = coeff.scaled(binom) * shift_pow(i, e[i] - k[i]);
            }
            out.add_term(k, coeff);
            std::size_t i = 0;
            while (i < n && ++k[i] > e[i]) {
                k[i] = 0;
                ++i;
            }
            if (i == n)
                break;
        }
    }
    return out;
}

AElement norm(const AElement& f, const GroupVec& h, const ActionSpec& spec)
{
    if (h.is_zero())
        throw precondition_error("norm needs a nonzero group vector");
    AElement r = AElement::one(spec);
    for (std::uint32_t j = 0; j < spec.p(); ++j)
        r = a_mul(r, act(h.scaled(j), f, spec), spec);
    return r;
}

AElement trace(const AElement& f, const GroupVec& h, const ActionSpec& spec)
{
    if (h.is_zero())
        throw precondition_error("trace needs a nonzero group vector");
    AElement r = AElement::zero(spec);
    for (std::uint32_t j = 0; j < spec.p(); ++j)
        r = r + act(h.scaled(j), f, spec);
    return r;
}

std::vector<SeriesTrunc> express_x_in_u(const ActionSpec& spec, std::uint32_t precision)
{
    const std::uint32_t p = spec.p();
    const std::size_t n = spec.n();
    if (precision < p + 1)
        throw precondition_error("precision must be at least p+1");
    RingPtr ru = make_ring(p, "u", n);

    std::vector<Poly> xs;  // current approximations X_i(u)
    for (std::size_t i = 0; i < n; ++i)
        xs.emplace_back(ru);

    std::vector<Poly> u_pow_p;
    for (std::size_t i = 0; i < n; ++i)
        u_pow_p.push_back(Poly::variable(ru, i).pow(p).truncated(precision));

    for (std::uint32_t iter = 0; iter <= precision + 1; ++iter) {
        Poly mu_img = spec.mu().substitute_trunc(xs, precision);
        std::vector<Poly> next;
        next.reserve(n);
        bool stable = true;
        for (std::size_t i = 0; i < n; ++i) {
            Poly ai_img = spec.a(i).substitute_trunc(xs, precision);
            Poly factor = pow_trunc(mul_trunc(mu_img, ai_img, precision), p - 1, precision);
            Poly xi = u_pow_p[i] - mul_trunc(factor, Poly::variable(ru, i), precision);
            if (xi != xs[i])
                stable = false;
            next.push_back(std::move(xi));
        }
        if (stable) {
            // back-substitution assertion at the stated precision
            for (std::size_t i = 0; i < n; ++i) {
                Poly ai_img = spec.a(i).substitute_trunc(xs, precision);
                Poly mu2 = spec.mu().substitute_trunc(xs, precision);
                Poly factor = pow_trunc(mul_trunc(mu2, ai_img, precision), p - 1, precision);
                Poly residual =
                    xs[i] - u_pow_p[i] + mul_trunc(factor, Poly::variable(ru, i), precision);
                if (!residual.is_zero())
                    throw solver_error("norm-element series failed back-substitution");
                if (xs[i].ord() != std::optional<std::uint32_t>(p))
                    throw solver_error("norm-element series has unexpected order");
            }
            std::vector<SeriesTrunc> out;
            out.reserve(n);
            for (auto& x : xs)
                out.emplace_back(std::move(x), precision);
            return out;
        }
        xs = std::move(next);
    }
    throw solver_error("norm-element series failed to stabilize");
}

FixedIdealReport fixed_ideal_report(const ActionSpec& spec, std::uint32_t precision,
                                    std::uint32_t cap)
{
    if (!spec.sop_certified())
        throw precondition_error("fixed_ideal_report requires the sop flag certified");
    const std::uint32_t p = spec.p();
    const std::size_t n = spec.n();
    auto xs = express_x_in_u(spec, precision);
    std::vector<Poly> imgs;
    imgs.reserve(n);
    for (const auto& x : xs)
        imgs.push_back(x.poly());

    FixedIdealReport rep;
    rep.precision = precision;
    rep.contained_in_mp = Verdict::Yes;
    std::vector<Poly> gens;
    for (std::size_t i = 0; i < n; ++i) {
        Poly gi = spec.mu_a(i).substitute_trunc(imgs, precision);
        auto o = gi.ord();
        if (!o.has_value())
            rep.contained_in_mp = Verdict::Indeterminate;  // vanished below precision
        else if (*o < p)
            rep.contained_in_mp = Verdict::No;
        gens.push_back(std::move(gi));
    }

    std::uint32_t effective = std::min<std::uint32_t>(cap, precision > 0 ? precision - 1 : 0);
    rep.length = local_length(gens, effective);
    rep.multiple_of_pn = false;
    if (rep.length.finite) {
        std::uint64_t pn = 1;
        for (std::size_t i = 0; i < n; ++i)
            pn *= p;
        rep.multiple_of_pn = (rep.length.length % pn) == 0;
    }
    return rep;
}

ClassifyReport classify_element(const GroupVec& h, const ActionSpec& spec)
{
    if (h.is_zero())
        throw precondition_error("cannot classify the identity element");
    if (h.p() != spec.p() || h.n() != spec.n())
        throw structural_error("group vector does not match the spec");
    if (!spec.sop_certified())
        throw precondition_error("classify_element requires the sop flag certified");
    ClassifyReport rep;
    rep.support = h.support();
    for (auto i : rep.support)
        rep.fixed_ideal.push_back(spec.mu_a(i));
    rep.kind = rep.support.size() == 1 ? ElementClass::PseudoReflection
                                       : ElementClass::GeneralizedReflection;
    return rep;
}

}  // namespace wildram
