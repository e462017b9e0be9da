#include "wildram/suites.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include <json.hpp>

#include "wildram/dimone.hpp"
#include "wildram/invariants.hpp"
#include "wildram/local.hpp"
#include "wildram/parse.hpp"
#include "wildram/ringa.hpp"
#include "wildram/skewgroup.hpp"
#include "wildram/tateoort.hpp"

namespace wildram {

void CaseSpec::validate() const
{
    require_supported_prime(p);
    if (n < 2)
        throw precondition_error("case needs n >= 2");
    if (a.size() != n)
        throw precondition_error("case needs exactly n polynomials a_i");
    if (precision < p + 2)
        throw precondition_error("case precision must be at least p + 2");
    for (const auto& s : suites) {
        const auto& known = all_suites();
        if (std::find(known.begin(), known.end(), s) == known.end())
            throw precondition_error("unknown suite '" + s + "'");
    }
}

const std::vector<std::string>& all_suites()
{
    static const std::vector<std::string> names{"normal-form", "invariants", "tate-oort",
                                                "dim-one",     "skew",       "admissibility"};
    return names;
}

std::optional<CaseSpec> builtin_case(const std::string& name)
{
    CaseSpec c;
    c.name = name;
    if (name == "artin-p2") {
        c.p = 2;
        c.n = 2;
        c.a = {"x1", "x2"};
        return c;
    }
    if (name == "n2-p3") {
        c.p = 3;
        c.n = 2;
        c.a = {"x1", "x2"};
        return c;
    }
    if (name == "n3-p2") {
        c.p = 2;
        c.n = 3;
        c.a = {"x1", "x2", "x3"};
        return c;
    }
    return std::nullopt;
}

std::vector<std::string> builtin_case_names()
{
    return {"artin-p2", "n2-p3", "n3-p2"};
}

CaseSpec case_from_json(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("invalid case JSON: ") + e.what());
    }
    CaseSpec c;
    try {
        c.name = j.value("name", std::string("case"));
        c.p = j.at("p").get<std::uint32_t>();
        c.n = j.at("n").get<std::uint32_t>();
        c.a = j.at("a").get<std::vector<std::string>>();
        c.mu = j.value("mu", std::string("1"));
        c.suites = j.value("suites", std::vector<std::string>{});
        c.precision = j.value("precision", 16u);
        c.length_cap = j.value("length_cap", 32u);
        c.degree_cap = j.value("degree_cap", 6u);
        c.seed = j.value("seed", std::uint64_t{1});
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("malformed case fields: ") + e.what());
    }
    return c;
}

namespace {

class Runner {
public:
    explicit Runner(Report& rep) : rep_(rep) {}

    template <typename F>
    void check(const std::string& id, const std::string& anchor, F&& body)
    {
        CheckRecord rec;
        rec.id = id;
        rec.anchor = anchor;
        auto start = std::chrono::steady_clock::now();
        try {
            body(rec);
        } catch (const std::exception& e) {
            rec.verdict = CheckVerdict::Fail;
            rec.witness = std::string("exception: ") + e.what();
        }
        rec.ms = std::chrono::duration<double, std::milli>(
                     std::chrono::steady_clock::now() - start)
                     .count();
        rep_.checks.push_back(std::move(rec));
    }

private:
    Report& rep_;
};

void pass(CheckRecord& rec, std::string witness = "")
{
    rec.verdict = CheckVerdict::Pass;
    rec.witness = std::move(witness);
}

void fail(CheckRecord& rec, std::string witness)
{
    rec.verdict = CheckVerdict::Fail;
    rec.witness = std::move(witness);
}

void indeterminate(CheckRecord& rec, std::string witness)
{
    rec.verdict = CheckVerdict::Indeterminate;
    rec.witness = std::move(witness);
}

void from_identity(CheckRecord& rec, const IdentityReport& ir)
{
    if (ir.ok) {
        std::string note;
        for (const auto& n : ir.notes)
            note += (note.empty() ? "" : "; ") + n;
        pass(rec, note);
    } else {
        std::string what;
        for (const auto& f : ir.failures)
            what += (what.empty() ? "" : "; ") + f;
        fail(rec, what);
    }
}

template <typename F>
void for_each_vector(std::uint32_t p, std::size_t n, F&& fn)
{
    std::vector<std::uint32_t> h(n, 0);
    while (true) {
        fn(h);
        std::size_t i = 0;
        while (i < n && ++h[i] == p) {
            h[i] = 0;
            ++i;
        }
        if (i == n)
            break;
    }
}

Poly seeded_univariate_unit(const RingPtr& ring, std::mt19937_64& rng, std::uint32_t max_deg)
{
    std::uniform_int_distribution<std::uint32_t> coeff(0, ring->p - 1);
    std::uniform_int_distribution<std::uint32_t> lead(1, ring->p - 1);
    Poly f = Poly::constant(ring, lead(rng));
    for (std::uint32_t d = 1; d <= max_deg; ++d)
        f.add_term(Exps{d}, coeff(rng));
    return f;
}

void suite_normal_form(Runner& run, const ActionSpec& spec, const CaseSpec& cs,
                       bool sop_ok)
{
    const std::uint32_t p = spec.p();
    const std::size_t n = spec.n();
    GroupVec diag = GroupVec::diagonal(n, p);

    run.check("normal-form/norm-is-x", "norm(u_i) reduces to x_i", [&](CheckRecord& rec) {
        for (std::size_t i = 0; i < n; ++i) {
            AElement expected =
                AElement::from_coeff(Poly::variable(spec.coeff_ring(), i), spec);
            AElement got = norm(AElement::generator(i, spec), diag, spec);
            if (got != expected)
                return fail(rec, "norm(u_" + std::to_string(i + 1) + ") != x_" +
                                     std::to_string(i + 1));
        }
        pass(rec);
    });

    run.check("normal-form/act-order", "p-fold action is the identity", [&](CheckRecord& rec) {
        for (std::size_t i = 0; i < n; ++i) {
            AElement u = AElement::generator(i, spec);
            AElement cur = u;
            for (std::uint32_t j = 0; j < p; ++j)
                cur = act(diag, cur, spec);
            if (cur != u)
                return fail(rec, "sigma^p moved u_" + std::to_string(i + 1));
        }
        pass(rec);
    });

    run.check("normal-form/act-homomorphism", "action is additive in the group",
              [&](CheckRecord& rec) {
                  double total = 1;
                  for (std::size_t k = 0; k < 2 * n; ++k)
                      total *= p;
                  if (total <= 4096) {
                      bool ok = true;
                      for_each_vector(p, n, [&](const std::vector<std::uint32_t>& hv) {
                          for_each_vector(p, n, [&](const std::vector<std::uint32_t>& gv) {
                              if (!ok)
                                  return;
                              GroupVec h(hv, p), g(gv, p);
                              for (std::size_t i = 0; i < n && ok; ++i) {
                                  AElement u = AElement::generator(i, spec);
                                  if (act(h, act(g, u, spec), spec) != act(h + g, u, spec))
                                      ok = false;
                              }
                          });
                      });
                      if (!ok)
                          return fail(rec, "act(h, act(g, u)) != act(h+g, u)");
                      pass(rec, "exhaustive");
                  } else {
                      std::mt19937_64 rng(cs.seed);
                      std::uniform_int_distribution<std::uint32_t> pick(0, p - 1);
                      for (int t = 0; t < 200; ++t) {
                          std::vector<std::uint32_t> hv(n), gv(n);
                          for (std::size_t i = 0; i < n; ++i) {
                              hv[i] = pick(rng);
                              gv[i] = pick(rng);
                          }
                          GroupVec h(hv, p), g(gv, p);
                          for (std::size_t i = 0; i < n; ++i) {
                              AElement u = AElement::generator(i, spec);
                              if (act(h, act(g, u, spec), spec) != act(h + g, u, spec))
                                  return fail(rec, "sampled homomorphism failure");
                          }
                      }
                      pass(rec, "sampled 200 pairs");
                  }
              });

    run.check("normal-form/norm-series", "x_i as series in u with order p",
              [&](CheckRecord& rec) {
                  auto xs = express_x_in_u(spec, cs.precision);
                  for (const auto& x : xs) {
                      auto o = x.ord();
                      if (!o.exact || o.value != p)
                          return fail(rec, "series order differs from p");
                  }
                  pass(rec, "back-substitution verified at precision " +
                               std::to_string(cs.precision));
              });

    run.check("normal-form/norm-length", "rank of A over the norm subring",
              [&](CheckRecord& rec) {
                  auto xs = express_x_in_u(spec, cs.precision);
                  std::vector<Poly> gens;
                  for (const auto& x : xs)
                      gens.push_back(x.poly());
                  std::uint32_t cap = std::min(cs.length_cap, cs.precision - 1);
                  LengthResult r = local_length(gens, cap);
                  std::uint64_t pn = 1;
                  for (std::size_t i = 0; i < n; ++i)
                      pn *= p;
                  if (!r.finite)
                      return indeterminate(rec, "length did not stabilize below cap " +
                                                    std::to_string(cap));
                  if (r.length != pn)
                      return fail(rec, "length " + std::to_string(r.length) + " != p^n = " +
                                           std::to_string(pn));
                  pass(rec, "length " + std::to_string(r.length));
              });

    run.check("normal-form/fixed-ideal", "fixed ideal in m^p with length multiple of p^n",
              [&](CheckRecord& rec) {
                  if (!sop_ok)
                      return indeterminate(rec, "sop flag not certified at cap " +
                                                    std::to_string(cs.length_cap));
                  FixedIdealReport r = fixed_ideal_report(spec, cs.precision, cs.length_cap);
                  if (r.contained_in_mp == Verdict::No)
                      return fail(rec, "fixed ideal escapes m^p");
                  if (r.contained_in_mp == Verdict::Indeterminate || !r.length.finite)
                      return indeterminate(rec, "not certified at precision " +
                                                    std::to_string(cs.precision));
                  if (!r.multiple_of_pn)
                      return fail(rec, "length " + std::to_string(r.length.length) +
                                           " is not a multiple of p^n");
                  pass(rec, "length " + std::to_string(r.length.length));
              });

    run.check("normal-form/classify", "reflection classification by support",
              [&](CheckRecord& rec) {
                  if (!sop_ok)
                      return indeterminate(rec, "sop flag not certified");
                  auto one = classify_element(GroupVec::unit(0, n, p), spec);
                  if (one.kind != ElementClass::PseudoReflection)
                      return fail(rec, "e_1 not classified as a pseudo-reflection");
                  auto full = classify_element(diag, spec);
                  if (full.kind != ElementClass::GeneralizedReflection)
                      return fail(rec, "diagonal not classified as a generalized reflection");
                  pass(rec);
              });
}

void suite_invariants(Runner& run, const ActionSpec& spec, const CaseSpec& cs)
{
    const std::uint32_t p = spec.p();
    const std::size_t n = spec.n();

    run.check("invariants/minor-relations", "minor p-th power relation and syzygy",
              [&](CheckRecord& rec) { from_identity(rec, verify_minor_relations(spec)); });

    if (n == 2) {
        run.check("invariants/hypersurface", "n = 2 invariant-ring hypersurface",
                  [&](CheckRecord& rec) {
                      from_identity(rec, hypersurface_check(spec.a(0), spec.a(1), spec.mu(), p));
                  });
    }

    run.check("invariants/z-s", "z_s relation and stabilizer per direction",
              [&](CheckRecord& rec) {
                  bool ok = true;
                  std::string what;
                  for_each_vector(p, n, [&](const std::vector<std::uint32_t>& sv) {
                      GroupVec s(sv, p);
                      if (s.is_zero() || !ok)
                          return;
                      ZsResult r = z_s(s, spec);
                      if (!r.relation_ok) {
                          ok = false;
                          what = "f_s(z_s) != 0";
                      } else if (!r.stabilizer_ok) {
                          ok = false;
                          what = "stabilizer differs from the orthogonal subgroup";
                      }
                  });
                  if (!ok)
                      return fail(rec, what);
                  pass(rec);
              });

    run.check("invariants/relevant-count", "relevant tuple enumeration vs closed form",
              [&](CheckRecord& rec) {
                  if (!relevant_count_check(p, n))
                      return fail(rec, "enumeration and formula disagree");
                  pass(rec, std::to_string(relevant_tuples(p, n).size()) + " tuples");
              });

    run.check("invariants/edim", "embedding dimension formulas", [&](CheckRecord& rec) {
        EdimRecord r = edim_formulas(p, n);
        std::ostringstream os;
        os << "edim_b = " << r.edim_b << ", edim_ag = " << r.edim_ag;
        if (r.edim_b - r.edim_ag != n)
            return fail(rec, os.str());
        if (n == 3) {
            BigInt expected = 6 + (BigInt(p) * p * p - p) / 6;
            if (r.edim_ag != expected)
                return fail(rec, os.str());
        }
        pass(rec, os.str());
    });

    run.check("invariants/graded-generation", "declared generators span each degree",
              [&](CheckRecord& rec) {
                  auto table = graded_invariant_table(p, n, cs.degree_cap,
                                                      GeneratorSelection::standard(p, n));
                  if (!table.generated_up_to_cap())
                      return fail(rec, "defect at degree " +
                                           std::to_string(*table.first_defect));
                  if (!table.generators_minimal)
                      return fail(rec, "generator set is not minimal");
                  pass(rec, "degrees 1.." + std::to_string(cs.degree_cap));
              });

    run.check("invariants/nonfactorial-product", "shifted-minor product identity",
              [&](CheckRecord& rec) { from_identity(rec, nonfactorial_product_check(spec)); });

    run.check("invariants/reflection-deltas", "generalized-reflection differences",
              [&](CheckRecord& rec) { from_identity(rec, reflection_deltas(spec)); });
}

void suite_tate_oort(Runner& run, const CaseSpec& cs)
{
    const std::uint32_t p = cs.p;

    run.check("tate-oort/axioms-symbolic", "group axioms with free alpha, beta",
              [&](CheckRecord& rec) {
                  AxiomReport r = verify_group_axioms(TateOortGroup::symbolic(p));
                  if (!r.ok())
                      return fail(rec, r.detail);
                  pass(rec);
              });

    run.check("tate-oort/axioms-additive", "constant group scheme alpha = 1, beta = 0",
              [&](CheckRecord& rec) {
                  RingPtr base = make_ring(p, {"x"});
                  TateOortGroup g(p, Poly::constant(base, 1), Poly(base));
                  AxiomReport r = verify_group_axioms(g);
                  if (!r.ok())
                      return fail(rec, r.detail);
                  pass(rec);
              });

    run.check("tate-oort/scaling", "rescaling is a group homomorphism",
              [&](CheckRecord& rec) {
                  TateOortGroup g = TateOortGroup::symbolic(p);
                  for (std::uint32_t e = 1; e < p; ++e) {
                      Fp eps(e, p);
                      if (!scaling_hom_check(eps, g))
                          return fail(rec, "eps = " + std::to_string(e));
                      TateOortGroup g2 = scaling_iso(eps, g);
                      TateOortGroup g3 = scaling_iso(eps.inv(), g2);
                      if (!(g3.alpha() == g.alpha()) || !(g3.beta() == g.beta()))
                          return fail(rec, "round trip changed the data at eps = " +
                                               std::to_string(e));
                  }
                  pass(rec, std::to_string(p - 1) + " units");
              });

    run.check("tate-oort/torsor", "translation coaction and unit determinant",
              [&](CheckRecord& rec) {
                  std::mt19937_64 rng(cs.seed);
                  RingPtr base = make_ring(p, {"x"});
                  for (int t = 0; t < 5; ++t) {
                      std::uniform_int_distribution<std::uint32_t> rdist(1, 3);
                      Poly unit = seeded_univariate_unit(base, rng, 2);
                      Poly a = Poly::monomial(base, Exps{rdist(rng)}, 1) * unit;
                      Poly b = seeded_univariate_unit(base, rng, 3) *
                               Poly::variable(base, 0);
                      TorsorScheme torsor(p, a, b);
                      TateOortGroup g(p, a.pow(p - 1), Poly(base));
                      TorsorActionReport ar = torsor_action(torsor, g);
                      if (!ar.ok())
                          return fail(rec, "coaction axiom failed on sample " +
                                               std::to_string(t));
                      Poly det = torsor_determinant(torsor, g);
                      if (!(det == Poly::constant(base, 1)))
                          return fail(rec, "determinant " + det.str() + " != 1");
                  }
                  pass(rec, "5 seeded samples");
              });
}

void suite_dim_one(Runner& run, const CaseSpec& cs)
{
    const std::uint32_t p = cs.p;

    run.check("dim-one/presentation-break", "torsor presentations break at p r - 1",
              [&](CheckRecord& rec) {
                  std::mt19937_64 rng(cs.seed);
                  RingPtr rx = make_ring(p, {"x"});
                  for (std::uint32_t r = 1; r <= 3; ++r) {
                      Poly f = seeded_univariate_unit(rx, rng, 3);
                      LocalAutomorphism sigma =
                          build_moderate_presentation(r, f, p, cs.precision * 2);
                      auto m = ramification_break(sigma);
                      if (!m.has_value())
                          return indeterminate(rec, "break above precision");
                      if (*m != p * r - 1)
                          return fail(rec, "break " + std::to_string(*m) + " at r = " +
                                               std::to_string(r));
                      if (p == 2 && *m % 2 == 0)
                          return fail(rec, "even break in characteristic 2");
                      auto me = effective_model_exponent(*m, p);
                      if (!me.torsor || me.r != r)
                          return fail(rec, "effective model exponent mismatch");
                  }
                  pass(rec, "r in {1, 2, 3}");
              });

    run.check("dim-one/valuation-break", "valuation computation returns mu = p r - i",
              [&](CheckRecord& rec) {
                  RingPtr rx = make_ring(p, {"x"});
                  std::mt19937_64 rng(cs.seed + 1);
                  int cases = 0;
                  for (std::uint32_t r = 1; r <= 6; ++r)
                      for (std::uint32_t i = 1; i < p; ++i) {
                          if (p * r - i > 12)
                              continue;
                          Poly f = seeded_univariate_unit(rx, rng, 2);
                          std::uint32_t mu = break_via_valuation(i, r, f, p);
                          if (mu != p * r - i)
                              return fail(rec, "mu mismatch at (i, r) = (" +
                                                   std::to_string(i) + ", " +
                                                   std::to_string(r) + ")");
                          ++cases;
                      }
                  pass(rec, std::to_string(cases) + " parameter pairs");
              });

    run.check("dim-one/normalization", "generator exponent becomes coprime to p",
              [&](CheckRecord& rec) {
                  RingPtr rx = make_ring(p, {"x"});
                  std::mt19937_64 rng(cs.seed + 2);
                  int normalized = 0, split = 0;
                  for (std::uint32_t k = 1; k <= 6; ++k) {
                      ASData data{p * k, seeded_univariate_unit(rx, rng, 3)};
                      try {
                          ASData out = normalize_artin_schreier(data, p);
                          if (out.mu == 0 || out.mu % p == 0)
                              return fail(rec, "mu = " + std::to_string(out.mu) +
                                                   " still divisible by p");
                          if (out.f.constant_term().is_zero())
                              return fail(rec, "normalized f lost its unit term");
                          ++normalized;
                      } catch (const precondition_error&) {
                          ++split;  // split extensions are detected, not normalized
                      }
                  }
                  if (normalized == 0)
                      return fail(rec, "every sample degenerated");
                  pass(rec, std::to_string(normalized) + " normalized, " +
                               std::to_string(split) + " detected split");
              });
}

void suite_skew(Runner& run, const ActionSpec& spec, const CaseSpec& cs)
{
    run.check("skew/symmetry", "phi(x y) = phi(y x) on basis pairs and samples",
              [&](CheckRecord& rec) {
                  SymmetryReport r = check_trace_symmetry(spec, cs.degree_cap, 100, cs.seed);
                  if (!r.ok)
                      return fail(rec, r.counterexample);
                  pass(rec, std::to_string(r.pairs_checked) + " pairs, seed " +
                               std::to_string(r.seed));
              });

    run.check("skew/pairing-mod-m", "trace pairing invertible modulo the maximal ideal",
              [&](CheckRecord& rec) {
                  PairingReport r = check_pairing_nondegenerate_mod_m(spec);
                  if (!r.invertible)
                      return fail(rec, "singular Gram matrix of size " +
                                           std::to_string(r.dim));
                  pass(rec, std::to_string(r.dim) + " x " + std::to_string(r.dim));
              });

    run.check("skew/norms-central", "norm elements commute with the generator",
              [&](CheckRecord& rec) {
                  const std::size_t n = spec.n();
                  for (std::size_t i = 0; i < n; ++i) {
                      Poly xi = Poly::variable(spec.coeff_ring(), i);
                      SkewElement x =
                          SkewElement::from_a(AElement::from_coeff(xi, spec), 0, spec);
                      SkewElement sigma =
                          SkewElement::basis(Exps(n, 0), 1, spec);
                      if (skew_mul(x, sigma, spec) != skew_mul(sigma, x, spec))
                          return fail(rec, "x_" + std::to_string(i + 1) +
                                               " does not commute with sigma");
                  }
                  pass(rec);
              });
}

void suite_admissibility(Runner& run, const ActionSpec& spec, const CaseSpec& cs)
{
    run.check("admissibility/normal-form-admissible", "all power tuples are regular",
              [&](CheckRecord& rec) {
                  auto xs = express_x_in_u(spec, cs.precision);
                  std::vector<Poly> imgs;
                  for (const auto& x : xs)
                      imgs.push_back(x.poly());
                  RingPtr ru = imgs.front().ring();
                  std::vector<SeriesTrunc> images;
                  for (std::size_t i = 0; i < spec.n(); ++i) {
                      Poly shift = spec.mu_a(i).substitute_trunc(imgs, cs.precision);
                      images.emplace_back(Poly::variable(ru, i) + shift, cs.precision);
                  }
                  SubstitutionAction sigma(spec.p(), images);
                  if (is_admissible(sigma) != Verdict::Yes)
                      return fail(rec, "a power tuple lost regularity");
                  Verdict weak = is_weakly_admissible(sigma, cs.length_cap);
                  if (weak == Verdict::Indeterminate)
                      return indeterminate(rec,
                                           "weak admissibility not certified at precision " +
                                               std::to_string(cs.precision));
                  pass(rec, "admissible and weakly admissible at precision " +
                               std::to_string(cs.precision));
              });
}

}  // namespace

Report run_case(const CaseSpec& cs)
{
    cs.validate();
    Report rep;
    rep.case_name = cs.name;

    RingPtr rx = make_ring(cs.p, "x", cs.n);
    std::vector<Poly> a;
    for (const auto& s : cs.a)
        a.push_back(parse_poly(s, rx));
    Poly mu = parse_poly(cs.mu, rx);
    ActionSpec spec = ActionSpec::make(cs.p, cs.n, a, mu);
    spec.assert_coprime();

    bool sop_ok = false;
    try {
        spec.certify_sop(cs.length_cap);
        sop_ok = true;
    } catch (const precondition_error&) {
        sop_ok = false;
    }

    auto selected = cs.suites.empty() ? all_suites() : cs.suites;
    auto wants = [&](const char* name) {
        return std::find(selected.begin(), selected.end(), name) != selected.end();
    };

    Runner run(rep);
    if (wants("normal-form"))
        suite_normal_form(run, spec, cs, sop_ok);
    if (wants("invariants"))
        suite_invariants(run, spec, cs);
    if (wants("tate-oort"))
        suite_tate_oort(run, cs);
    if (wants("dim-one"))
        suite_dim_one(run, cs);
    if (wants("skew"))
        suite_skew(run, spec, cs);
    if (wants("admissibility"))
        suite_admissibility(run, spec, cs);
    return rep;
}

std::string report_to_json(const Report& rep, const CaseSpec& cs, bool timings)
{
    nlohmann::ordered_json j;
    j["case"]["name"] = cs.name;
    j["case"]["p"] = cs.p;
    j["case"]["n"] = cs.n;
    j["case"]["a"] = cs.a;
    j["case"]["mu"] = cs.mu;
    j["case"]["suites"] = cs.suites.empty() ? all_suites() : cs.suites;
    j["case"]["precision"] = cs.precision;
    j["case"]["length_cap"] = cs.length_cap;
    j["case"]["degree_cap"] = cs.degree_cap;
    j["case"]["seed"] = cs.seed;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : rep.checks) {
        nlohmann::ordered_json jc;
        jc["id"] = c.id;
        jc["anchor"] = c.anchor;
        jc["verdict"] = verdict_name(c.verdict);
        jc["witness"] = c.witness;
        if (timings)
            jc["ms"] = c.ms;
        j["checks"].push_back(std::move(jc));
    }
    j["summary"]["pass"] = rep.count(CheckVerdict::Pass);
    j["summary"]["fail"] = rep.count(CheckVerdict::Fail);
    j["summary"]["indeterminate"] = rep.count(CheckVerdict::Indeterminate);
    return j.dump(2) + "\n";
}

}  // namespace wildram
