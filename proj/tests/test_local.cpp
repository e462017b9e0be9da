#include <doctest.h>

#include <random>

#include "wildram/local.hpp"
#include "wildram/parse.hpp"

using namespace wildram;

namespace {

// independent oracle for monomial ideals: count lattice points under the
// staircase by direct enumeration
std::uint64_t staircase_count(const std::vector<Exps>& lead, std::size_t nvars,
                              std::uint32_t box)
{
    std::uint64_t count = 0;
    Exps e(nvars, 0);
    while (true) {
        bool below = true;
        for (const auto& m : lead) {
            bool divisible = true;
            for (std::size_t i = 0; i < nvars; ++i)
                if (e[i] < m[i]) {
                    divisible = false;
                    break;
                }
            if (divisible) {
                below = false;
                break;
            }
        }
        if (below)
            ++count;
        std::size_t i = 0;
        while (i < nvars && ++e[i] == box) {
            e[i] = 0;
            ++i;
        }
        if (i == nvars)
            break;
    }
    return count;
}

}  // namespace

TEST_CASE("local length basics")
{
    RingPtr r = make_ring(3, {"x", "y"});
    std::vector<Poly> gens{parse_poly("x", r), parse_poly("y", r)};
    LengthResult a = local_length(gens);
    CHECK(a.finite);
    CHECK(a.length == 1);

    std::vector<Poly> sq{parse_poly("x^2", r), parse_poly("y^2", r)};
    LengthResult b = local_length(sq);
    CHECK(b.finite);
    CHECK(b.length == 4);

    CHECK_THROWS_AS(local_length({parse_poly("x + 1", r)}), precondition_error);
}

TEST_CASE("local length of monomial ideals matches the staircase oracle")
{
    RingPtr r = make_ring(2, {"x", "y"});
    struct Case {
        std::vector<std::string> gens;
        std::vector<Exps> lead;
    };
    std::vector<Case> cases{
        {{"x^2", "y^3"}, {{2, 0}, {0, 3}}},
        {{"x^3", "x*y", "y^2"}, {{3, 0}, {1, 1}, {0, 2}}},
        {{"x^4", "y^4"}, {{4, 0}, {0, 4}}},
    };
    for (const auto& c : cases) {
        std::vector<Poly> gens;
        for (const auto& s : c.gens)
            gens.push_back(parse_poly(s, r));
        LengthResult got = local_length(gens);
        CHECK(got.finite);
        CHECK(got.length == staircase_count(c.lead, 2, 12));
    }
}

TEST_CASE("finite verdicts persist for two extra steps")
{
    // d(N) non-decreasing and stationary after stabilization: rerun with a
    // larger cap and confirm the same answer
    RingPtr r = make_ring(2, {"x", "y"});
    std::vector<Poly> gens{parse_poly("x^2 + y^3", r), parse_poly("x*y", r)};
    LengthResult a = local_length(gens, 16);
    LengthResult b = local_length(gens, 32);
    CHECK(a.finite);
    CHECK(b.finite);
    CHECK(a.length == b.length);
}

TEST_CASE("system of parameters verdicts")
{
    RingPtr r = make_ring(2, {"x", "y"});
    CHECK(is_system_of_parameters({parse_poly("x", r), parse_poly("y", r)}) == Verdict::Yes);
    CHECK(is_regular_sop({parse_poly("x", r), parse_poly("y", r)}) == Verdict::Yes);

    CHECK(is_system_of_parameters({parse_poly("x^2", r), parse_poly("y", r)}) == Verdict::Yes);
    CHECK(is_regular_sop({parse_poly("x^2", r), parse_poly("y", r)}) == Verdict::No);

    // (x, xy) is not a system of parameters; a truncation procedure reports
    // the absence of a certificate rather than a definite no
    CHECK(is_system_of_parameters({parse_poly("x", r), parse_poly("x*y", r)}, 10) !=
          Verdict::Yes);

    CHECK_THROWS_AS(is_system_of_parameters({parse_poly("x", r)}), precondition_error);
}

TEST_CASE("regular sop implies sop")
{
    std::mt19937_64 rng(23);
    RingPtr r = make_ring(3, {"x", "y", "z"});
    std::uniform_int_distribution<std::uint32_t> c(0, 2);
    for (int t = 0; t < 10; ++t) {
        // random unipotent change of the coordinate generators
        std::vector<Poly> gens{
            parse_poly("x", r) + parse_poly("y^2", r).scaled(Fp(c(rng), 3)),
            parse_poly("y", r) + parse_poly("z^2", r).scaled(Fp(c(rng), 3)),
            parse_poly("z", r) + parse_poly("x*y", r).scaled(Fp(c(rng), 3))};
        REQUIRE(is_regular_sop(gens) == Verdict::Yes);
        CHECK(is_system_of_parameters(gens) == Verdict::Yes);
    }
}

TEST_CASE("substitution actions and admissibility")
{
    // identity action is admissible
    RingPtr r = make_ring(2, {"u1", "u2"});
    std::vector<SeriesTrunc> id_imgs{SeriesTrunc(parse_poly("u1", r), 8),
                                     SeriesTrunc(parse_poly("u2", r), 8)};
    SubstitutionAction ident(2, id_imgs);
    CHECK(is_admissible(ident) == Verdict::Yes);
    CHECK(is_weakly_admissible(ident) == Verdict::Yes);

    // the swap has a zero on the diagonal: not admissible, and weak
    // admissibility cannot be certified
    std::vector<SeriesTrunc> swap_imgs{SeriesTrunc(parse_poly("u2", r), 8),
                                       SeriesTrunc(parse_poly("u1", r), 8)};
    SubstitutionAction swap(2, swap_imgs);
    CHECK(is_admissible(swap) == Verdict::No);
    CHECK(is_weakly_admissible(swap, 10) == Verdict::Indeterminate);

    // normal-form-like action u_i -> u_i + (order >= 2): trivial tangent
    // action, admissible
    std::vector<SeriesTrunc> nf_imgs{SeriesTrunc(parse_poly("u1 + u1^2*u2^2", r), 8),
                                     SeriesTrunc(parse_poly("u2 + u1^2*u2^2", r), 8)};
    SubstitutionAction nf(2, nf_imgs);
    CHECK(is_admissible(nf) == Verdict::Yes);

    // order check: u -> u + u^2 alone does not have order 2
    std::vector<SeriesTrunc> bad{SeriesTrunc(parse_poly("u1 + u1^2", r), 8),
                                 SeriesTrunc(parse_poly("u2", r), 8)};
    CHECK_THROWS_AS(SubstitutionAction(2, bad), precondition_error);
}

TEST_CASE("triangularization")
{
    // single unipotent Jordan block: identity change
    FpMat jordan(2, 2, 3);
    jordan.at(0, 0) = 1;
    jordan.at(0, 1) = 1;
    jordan.at(1, 1) = 1;
    FpMat p1 = triangularize({jordan});
    CHECK(p1 == FpMat::identity(2, 3));

    // the swap over F_2: fixed vector e1 + e2
    FpMat swap(2, 2, 2);
    swap.at(0, 1) = 1;
    swap.at(1, 0) = 1;
    FpMat change = triangularize({swap});
    FpMat conj = change * (swap * change.inverse());
    CHECK(conj.at(1, 0) == 0);
    CHECK(conj.at(0, 0) == 1);
    CHECK(conj.at(1, 1) == 1);

    // identity
    CHECK_NOTHROW(triangularize({FpMat::identity(3, 5)}));

    // an order-2 matrix over F_3 is not in a 3-group
    FpMat bad(2, 2, 3);
    bad.at(0, 0) = 2;
    bad.at(1, 1) = 1;
    CHECK_THROWS_AS(triangularize({bad}), precondition_error);
}

TEST_CASE("triangularize a nonabelian pair over F_2")
{
    // two commuting-up-to-triangularity unipotents in GL_3(F_2)
    FpMat m1 = FpMat::identity(3, 2);
    m1.at(0, 1) = 1;
    FpMat m2 = FpMat::identity(3, 2);
    m2.at(1, 2) = 1;
    FpMat change = triangularize({m1, m2});
    for (const auto& m : {m1, m2}) {
        FpMat conj = change * (m * change.inverse());
        for (std::size_t i = 0; i < 3; ++i) {
            CHECK(conj.at(i, i) == 1);
            for (std::size_t j = 0; j < i; ++j)
                CHECK(conj.at(i, j) == 0);
        }
    }
}
