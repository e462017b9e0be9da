#include "wildram/poly.hpp"

#include <algorithm>
#include <sstream>

namespace wildram {

RingPtr make_ring(std::uint32_t p, std::vector<std::string> vars)
{
    if (!is_prime(p))
        throw domain_error("ring modulus " + std::to_string(p) + " is not prime");
    auto r = std::make_shared<PolyRing>();
    r->p = p;
    r->vars = std::move(vars);
    return r;
}

RingPtr make_ring(std::uint32_t p, const std::string& stem, std::size_t n)
{
    std::vector<std::string> vars;
    vars.reserve(n);
    for (std::size_t i = 1; i <= n; ++i)
        vars.push_back(stem + std::to_string(i));
    return make_ring(p, std::move(vars));
}

std::uint32_t exps_degree(const Exps& e)
{
    std::uint32_t d = 0;
    for (auto x : e)
        d += x;
    return d;
}

bool DegRevLexLess::operator()(const Exps& a, const Exps& b) const
{
    std::uint32_t da = exps_degree(a), db = exps_degree(b);
    if (da != db)
        return da < db;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i])
            return a[i] > b[i];
    }
    return false;
}

Poly::Poly(RingPtr ring) : ring_(std::move(ring))
{
    if (!ring_)
        throw structural_error("null ring");
}

Poly Poly::constant(RingPtr ring, std::int64_t c)
{
    Poly f(std::move(ring));
    f.add_term(Exps(f.arity(), 0), c);
    return f;
}

Poly Poly::variable(RingPtr ring, std::size_t i)
{
    Poly f(std::move(ring));
    if (i >= f.arity())
        throw structural_error("variable index out of range");
    Exps e(f.arity(), 0);
    e[i] = 1;
    f.add_term(e, 1);
    return f;
}

Poly Poly::monomial(RingPtr ring, Exps e, std::int64_t c)
{
    Poly f(std::move(ring));
    if (e.size() != f.arity())
        throw structural_error("exponent vector length does not match ring arity");
    f.add_term(e, c);
    return f;
}

void Poly::add_term(const Exps& e, std::int64_t c)
{
    const std::uint32_t p = ring_->p;
    std::int64_t r = c % static_cast<std::int64_t>(p);
    if (r < 0)
        r += p;
    if (r == 0)
        return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, static_cast<std::uint32_t>(r));
    } else {
        std::uint32_t s = add_mod(it->second, static_cast<std::uint32_t>(r), p);
        if (s == 0)
            terms_.erase(it);
        else
            it->second = s;
    }
}

void Poly::check_compatible(const Poly& o) const
{
    if (ring_ == o.ring_)
        return;
    if (!(*ring_ == *o.ring_))
        throw structural_error("polynomials from incompatible rings");
}

std::optional<std::uint32_t> Poly::ord() const
{
    if (terms_.empty())
        return std::nullopt;
    return exps_degree(terms_.begin()->first);
}

std::optional<std::uint32_t> Poly::degree() const
{
    if (terms_.empty())
        return std::nullopt;
    return exps_degree(terms_.rbegin()->first);
}

Fp Poly::coeff(const Exps& e) const
{
    auto it = terms_.find(e);
    return Fp(it == terms_.end() ? 0 : it->second, ring_->p);
}

Fp Poly::constant_term() const
{
    return coeff(Exps(arity(), 0));
}

Poly Poly::operator+(const Poly& o) const
{
    check_compatible(o);
    Poly r = *this;
    for (const auto& [e, c] : o.terms_)
        r.add_term(e, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const
{
    check_compatible(o);
    Poly r = *this;
    for (const auto& [e, c] : o.terms_)
        r.add_term(e, -static_cast<std::int64_t>(c));
    return r;
}

Poly Poly::operator-() const
{
    Poly r(ring_);
    for (const auto& [e, c] : terms_)
        r.add_term(e, -static_cast<std::int64_t>(c));
    return r;
}

Poly Poly::operator*(const Poly& o) const
{
    check_compatible(o);
    Poly r(ring_);
    const std::size_t m = arity();
    Exps e(m);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t i = 0; i < m; ++i)
                e[i] = ea[i] + eb[i];
            r.add_term(e, static_cast<std::int64_t>(mul_mod(ca, cb, ring_->p)));
        }
    }
    return r;
}

Poly Poly::scaled(const Fp& c) const
{
    if (c.modulus() != ring_->p)
        throw structural_error("scalar modulus mismatch");
    Poly r(ring_);
    for (const auto& [e, v] : terms_)
        r.add_term(e, static_cast<std::int64_t>(mul_mod(v, c.value(), ring_->p)));
    return r;
}

Poly Poly::pow(std::uint64_t e) const
{
    Poly r = Poly::constant(ring_, 1);
    Poly base = *this;
    while (e) {
        if (e & 1)
            r = r * base;
        if (e >>= 1)
            base = base * base;
    }
    return r;
}

bool Poly::operator==(const Poly& o) const
{
    check_compatible(o);
    return terms_ == o.terms_;
}

Poly Poly::truncated(std::uint32_t bound) const
{
    Poly r(ring_);
    for (const auto& [e, c] : terms_) {
        if (exps_degree(e) < bound)
            r.terms_.emplace(e, c);
    }
    return r;
}

Poly mul_trunc(const Poly& a, const Poly& b, std::uint32_t bound)
{
    Poly r(a.ring());
    const std::size_t m = a.arity();
    Exps e(m);
    for (const auto& [ea, ca] : a.terms()) {
        std::uint32_t da = exps_degree(ea);
        if (da >= bound)
            continue;
        for (const auto& [eb, cb] : b.terms()) {
            if (da + exps_degree(eb) >= bound)
                continue;
            for (std::size_t i = 0; i < m; ++i)
                e[i] = ea[i] + eb[i];
            r.add_term(e, static_cast<std::int64_t>(mul_mod(ca, cb, a.modulus())));
        }
    }
    return r;
}

Poly pow_trunc(const Poly& a, std::uint64_t e, std::uint32_t bound)
{
    Poly r = Poly::constant(a.ring(), 1).truncated(bound);
    Poly base = a.truncated(bound);
    while (e) {
        if (e & 1)
            r = mul_trunc(r, base, bound);
        if (e >>= 1)
            base = mul_trunc(base, base, bound);
    }
    return r;
}

namespace {

Poly substitute_impl(const Poly& f, std::span<const Poly> images, bool truncate,
                     std::uint32_t bound)
{
    if (images.size() != f.arity())
        throw structural_error("substitution must assign every variable");
    if (images.empty())
        throw structural_error("substitution into a ring with no variables");
    RingPtr target = images[0].ring();
    for (const auto& g : images) {
        if (!(*g.ring() == *target))
            throw structural_error("substitution targets live in different rings");
        if (g.modulus() != f.modulus())
            throw structural_error("substitution target modulus mismatch");
    }
    // powers[i][k] = images[i]^k, computed on demand
    std::vector<std::vector<Poly>> powers(f.arity());
    for (std::size_t i = 0; i < f.arity(); ++i)
        powers[i].push_back(Poly::constant(target, 1));
    auto power = [&](std::size_t i, std::uint32_t k) -> const Poly& {
        auto& cache = powers[i];
        while (cache.size() <= k) {
            Poly next = truncate ? mul_trunc(cache.back(), images[i], bound)
                                 : cache.back() * images[i];
            cache.push_back(std::move(next));
        }
        return cache[k];
    };
    Poly r(target);
    for (const auto& [e, c] : f.terms()) {
        Poly t = Poly::constant(target, static_cast<std::int64_t>(c));
        for (std::size_t i = 0; i < f.arity(); ++i) {
            if (e[i] == 0)
                continue;
            t = truncate ? mul_trunc(t, power(i, e[i]), bound) : t * power(i, e[i]);
            if (t.is_zero())
                break;
        }
        r = r + t;
    }
    return r;
}

}  // namespace

Poly Poly::substitute(std::span<const Poly> images) const
{
    return substitute_impl(*this, images, false, 0);
}

Poly Poly::substitute_trunc(std::span<const Poly> images, std::uint32_t bound) const
{
    return substitute_impl(*this, images, true, bound);
}

Poly Poly::derivative(std::size_t var) const
{
    if (var >= arity())
        throw structural_error("variable index out of range");
    Poly r(ring_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0)
            continue;
        Exps d = e;
        d[var] -= 1;
        r.add_term(d, static_cast<std::int64_t>(mul_mod(c, e[var] % ring_->p, ring_->p)));
    }
    return r;
}

Poly Poly::divide_exact(const Poly& divisor) const
{
    check_compatible(divisor);
    if (divisor.is_zero())
        throw division_error("division by the zero polynomial");
    Poly rem = *this;
    Poly quot(ring_);
    const auto& lt_d = *divisor.terms_.rbegin();
    const std::size_t m = arity();
    while (!rem.is_zero()) {
        const auto& lt_r = *rem.terms_.rbegin();
        Exps q(m);
        for (std::size_t i = 0; i < m; ++i) {
            if (lt_r.first[i] < lt_d.first[i])
                throw division_error("polynomial division is not exact");
            q[i] = lt_r.first[i] - lt_d.first[i];
        }
        std::uint32_t qc = mul_mod(lt_r.second, inv_mod(lt_d.second, ring_->p), ring_->p);
        Poly t = Poly::monomial(ring_, q, qc);
        quot = quot + t;
        rem = rem - t * divisor;
    }
    return quot;
}

std::string Poly::str() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    // leading term first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first)
            os << " + ";
        first = false;
        const auto& [e, c] = *it;
        bool has_var = exps_degree(e) > 0;
        bool wrote = false;
        if (c != 1 || !has_var) {
            os << c;
            wrote = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (wrote)
                os << "*";
            os << ring_->vars[i];
            if (e[i] > 1)
                os << "^" << e[i];
            wrote = true;
        }
    }
    return os.str();
}

SeriesTrunc::SeriesTrunc(Poly poly, std::uint32_t precision)
    : poly_(poly.truncated(precision)), prec_(precision)
{
    if (precision == 0)
        throw domain_error("series precision must be positive");
}

SeriesTrunc SeriesTrunc::operator+(const SeriesTrunc& o) const
{
    std::uint32_t n = std::min(prec_, o.prec_);
    return SeriesTrunc(poly_ + o.poly_, n);
}

SeriesTrunc SeriesTrunc::operator-(const SeriesTrunc& o) const
{
    std::uint32_t n = std::min(prec_, o.prec_);
    return SeriesTrunc(poly_ - o.poly_, n);
}

SeriesTrunc SeriesTrunc::operator*(const SeriesTrunc& o) const
{
    std::uint32_t n = std::min(prec_, o.prec_);
    return SeriesTrunc(mul_trunc(poly_, o.poly_, n), n);
}

SeriesTrunc SeriesTrunc::pow(std::uint64_t e) const
{
    return SeriesTrunc(pow_trunc(poly_, e, prec_), prec_);
}

bool SeriesTrunc::operator==(const SeriesTrunc& o) const
{
    std::uint32_t n = std::min(prec_, o.prec_);
    return poly_.truncated(n) == o.poly_.truncated(n);
}

SeriesOrd SeriesTrunc::ord() const
{
    auto o = poly_.ord();
    if (!o.has_value())
        return SeriesOrd{false, prec_};
    return SeriesOrd{true, *o};
}

std::string SeriesTrunc::str() const
{
    return poly_.str() + " + O(deg " + std::to_string(prec_) + ")";
}

SeriesTrunc implicit_solve(const Poly& relation, std::size_t unknown, std::uint32_t precision)
{
    const RingPtr& ring = relation.ring();
    if (unknown >= relation.arity())
        throw structural_error("unknown variable index out of range");
    if (!relation.constant_term().is_zero())
        throw solver_error("relation has a nonzero constant term; no root at the origin");

    Exps lin(relation.arity(), 0);
    lin[unknown] = 1;
    Fp c = relation.coeff(lin);
    if (c.is_zero())
        throw solver_error("relation is not solvable for the unknown at order 1");

    // Phi = -(1/c) * (relation - c*unknown); iterate unknown <- Phi(unknown).
    Poly rest = relation - Poly::monomial(ring, lin, c.value());
    Poly phi = rest.scaled(-c.inv());
    for (const auto& [e, coef] : phi.terms()) {
        (void)coef;
        if (e[unknown] > 0 && exps_degree(e) < 2)
            throw solver_error("relation is not contractive in the unknown");
    }

    std::vector<Poly> images;
    images.reserve(relation.arity());
    for (std::size_t i = 0; i < relation.arity(); ++i)
        images.push_back(Poly::variable(ring, i));

    Poly sigma(ring);
    std::uint32_t last_agree = 0;
    for (std::uint32_t iter = 0; iter <= precision + 1; ++iter) {
        images[unknown] = sigma;
        Poly next = phi.substitute_trunc(images, precision);
        if (next == sigma) {
            images[unknown] = sigma;
            Poly residual = relation.substitute_trunc(images, precision);
            if (!residual.is_zero())
                throw solver_error("implicit solve back-substitution failed");
            return SeriesTrunc(std::move(sigma), precision);
        }
        Poly diff = next - sigma;
        std::uint32_t agree = diff.ord().value();  // nonzero here
        if (iter > 0 && agree <= last_agree)
            throw solver_error("implicit solve made no precision gain (non-contractive)");
        last_agree = agree;
        sigma = std::move(next);
    }
    throw solver_error("implicit solve failed to stabilize within the precision budget");
}

}  // namespace wildram
