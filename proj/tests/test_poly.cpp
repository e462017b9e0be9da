#include <doctest.h>

#include <random>

#include "wildram/parse.hpp"
#include "wildram/poly.hpp"

using namespace wildram;

namespace {

Poly random_poly(const RingPtr& ring, std::mt19937_64& rng, std::uint32_t max_deg = 3,
                 std::uint32_t max_terms = 4)
{
    std::uniform_int_distribution<std::uint32_t> nterms(0, max_terms);
    std::uniform_int_distribution<std::uint32_t> coeff(0, ring->p - 1);
    std::uniform_int_distribution<std::uint32_t> deg(0, max_deg);
    std::uniform_int_distribution<std::size_t> var(0, ring->arity() - 1);
    Poly f(ring);
    std::uint32_t k = nterms(rng);
    for (std::uint32_t t = 0; t < k; ++t) {
        Exps e(ring->arity(), 0);
        std::uint32_t budget = deg(rng);
        for (std::uint32_t d = 0; d < budget; ++d)
            e[var(rng)] += 1;
        f.add_term(e, coeff(rng));
    }
    return f;
}

}  // namespace

TEST_CASE("ring arithmetic basics")
{
    RingPtr r3 = make_ring(3, {"x", "y"});
    Poly x = Poly::variable(r3, 0), y = Poly::variable(r3, 1);
    CHECK((x + y) * (x - y) == x * x - y * y);

    RingPtr r2 = make_ring(2, {"x", "y"});
    Poly x2 = Poly::variable(r2, 0), y2 = Poly::variable(r2, 1);
    CHECK((x2 + y2).pow(2) == x2 * x2 + y2 * y2);  // Frobenius at p = 2

    RingPtr r5 = make_ring(5, {"x"});
    CHECK((Poly::variable(r5, 0) * Poly(r5)).is_zero());

    RingPtr other = make_ring(5, {"z"});
    CHECK_THROWS_AS(Poly::variable(r5, 0) + Poly::variable(other, 0), structural_error);
}

TEST_CASE("ord and degree")
{
    RingPtr r = make_ring(7, {"x", "y"});
    Poly f = parse_poly("x^2*y + x^5", r);
    CHECK(f.ord() == std::optional<std::uint32_t>(3));
    CHECK(f.degree() == std::optional<std::uint32_t>(5));
    CHECK(!Poly(r).ord().has_value());

    RingPtr ru = make_ring(5, {"u"});
    CHECK(parse_poly("u + u^3", ru).ord() == std::optional<std::uint32_t>(1));
}

TEST_CASE("substitution")
{
    RingPtr r = make_ring(2, {"x"});
    RingPtr t = make_ring(2, {"u", "a"});
    Poly f = parse_poly("x^2", r);
    std::vector<Poly> imgs{parse_poly("u + a", t)};
    CHECK(f.substitute(imgs) == parse_poly("u^2 + a^2", t));

    RingPtr rxy = make_ring(5, {"x", "y"});
    Poly g = parse_poly("x*y", rxy);
    std::vector<Poly> shift{parse_poly("x + 1", rxy), parse_poly("y", rxy)};
    CHECK(g.substitute(shift) == parse_poly("x*y + y", rxy));

    std::vector<Poly> bad{Poly::variable(rxy, 0)};
    CHECK_THROWS_AS(g.substitute(bad), structural_error);
}

TEST_CASE("substitute is a ring homomorphism on random inputs")
{
    std::mt19937_64 rng(7);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        RingPtr r = make_ring(p, {"x", "y"});
        RingPtr t = make_ring(p, {"s", "t", "w"});
        for (int it = 0; it < 40; ++it) {
            Poly f = random_poly(r, rng), g = random_poly(r, rng);
            std::vector<Poly> imgs{random_poly(t, rng), random_poly(t, rng)};
            CHECK((f * g).substitute(imgs) == f.substitute(imgs) * g.substitute(imgs));
            CHECK((f + g).substitute(imgs) == f.substitute(imgs) + g.substitute(imgs));
        }
    }
}

TEST_CASE("Frobenius additivity on random inputs")
{
    std::mt19937_64 rng(11);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        RingPtr r = make_ring(p, {"x", "y"});
        for (int it = 0; it < 40; ++it) {
            Poly f = random_poly(r, rng), g = random_poly(r, rng);
            CHECK((f + g).pow(p) == f.pow(p) + g.pow(p));
        }
    }
}

TEST_CASE("derivative")
{
    RingPtr r3 = make_ring(3, {"x", "y"});
    CHECK(parse_poly("x^3", r3).derivative(0).is_zero());
    CHECK(parse_poly("x*y", r3).derivative(0) == parse_poly("y", r3));

    // d/dz (z^p - a^{p-1} z) = -a^{p-1}
    RingPtr r5 = make_ring(5, {"z", "a"});
    Poly z = Poly::variable(r5, 0), a = Poly::variable(r5, 1);
    CHECK((z.pow(5) - a.pow(4) * z).derivative(0) == -a.pow(4));
}

TEST_CASE("exact division")
{
    RingPtr r = make_ring(7, {"x", "y"});
    Poly f = parse_poly("x^2 - y^2", r);
    Poly g = parse_poly("x + y", r);
    CHECK(f.divide_exact(g) == parse_poly("x - y", r));
    CHECK_THROWS_AS(parse_poly("x^2 + 1", r).divide_exact(g), division_error);

    std::mt19937_64 rng(13);
    for (int it = 0; it < 40; ++it) {
        Poly a = random_poly(r, rng), b = random_poly(r, rng);
        if (b.is_zero())
            continue;
        CHECK((a * b).divide_exact(b) == a);
    }
}

TEST_CASE("series truncation")
{
    RingPtr r = make_ring(2, {"u"});
    SeriesTrunc s(parse_poly("u + u^3 + u^5", r), 4);
    CHECK(s.poly() == parse_poly("u + u^3", r));
    SeriesTrunc t(parse_poly("u^2", r), 6);
    CHECK((s * t).precision() == 4);
    CHECK((s * t).poly() == parse_poly("u^3", r));
    CHECK(s.ord().exact);
    CHECK(s.ord().value == 1);
    SeriesTrunc zero(Poly(r), 4);
    CHECK(!zero.ord().exact);
    CHECK(zero.ord().value == 4);
}

TEST_CASE("implicit solve: geometric series in characteristic 2")
{
    // u^2 - x u - x = 0 for x gives x = u^2/(1+u) = u^2 + u^3 + u^4 + ...
    RingPtr r = make_ring(2, {"x", "u"});
    Poly relation = parse_poly("u^2 - x*u - x", r);
    SeriesTrunc sol = implicit_solve(relation, 0, 8);
    Poly expected(r);
    for (std::uint32_t d = 2; d < 8; ++d)
        expected.add_term(Exps{0, d}, 1);
    CHECK(sol.poly() == expected);
}

TEST_CASE("implicit solve: trivial and degenerate relations")
{
    RingPtr r2 = make_ring(2, {"x", "u"});
    CHECK(implicit_solve(parse_poly("x - u", r2), 0, 6).poly() ==
          parse_poly("u", r2));

    RingPtr r3 = make_ring(3, {"x", "u"});
    CHECK(implicit_solve(parse_poly("u^3 - x", r3), 0, 8).poly() ==
          parse_poly("u^3", r3));

    // not solvable at order 1
    CHECK_THROWS_AS(implicit_solve(parse_poly("x^2 - u", r3), 0, 8), solver_error);
    // nonzero constant term
    CHECK_THROWS_AS(implicit_solve(parse_poly("x - u + 1", r3), 0, 8), solver_error);
}

TEST_CASE("implicit solve back-substitutes to zero on random relations")
{
    std::mt19937_64 rng(17);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        RingPtr r = make_ring(p, {"x", "u"});
        Poly x = Poly::variable(r, 0), u = Poly::variable(r, 1);
        for (int it = 0; it < 20; ++it) {
            // relation x - u * (1 + random) - x^2 * random': linear-unit in x
            Poly relation = x - u * (Poly::constant(r, 1) + random_poly(r, rng, 2, 2)) -
                            x * x * random_poly(r, rng, 1, 2);
            SeriesTrunc sol = implicit_solve(relation, 0, 10);
            std::vector<Poly> imgs{sol.poly(), u};
            CHECK(relation.substitute_trunc(imgs, 10).is_zero());
        }
    }
}

TEST_CASE("canonical printing is stable")
{
    RingPtr r = make_ring(5, {"x1", "x2"});
    Poly f = parse_poly("3*x2 + x1^2 + 2", r);
    CHECK(f.str() == "x1^2 + 3*x2 + 2");
    CHECK(parse_poly(f.str(), r) == f);
}

TEST_CASE("parser grammar")
{
    RingPtr r = make_ring(5, {"x1", "x2"});
    CHECK(parse_poly("  (x1 + x2)^2 ", r) ==
          parse_poly("x1^2 + 2*x1*x2 + x2^2", r));
    CHECK(parse_poly("7", r) == Poly::constant(r, 2));  // reduced mod 5
    CHECK(parse_poly("-x1", r) == -Poly::variable(r, 0));
    CHECK(parse_poly("x1 - -1", r) == parse_poly("x1 + 1", r));
    CHECK_THROWS_AS(parse_poly("y + 1", r), parse_error);
    CHECK_THROWS_AS(parse_poly("x1 +", r), parse_error);
    CHECK_THROWS_AS(parse_poly("x1 ^ x2", r), parse_error);
    CHECK_THROWS_AS(parse_poly("(x1", r), parse_error);
}
