#include "wildram/local.hpp"

#include <map>
#include <string>

namespace wildram {

namespace {

void enumerate_monomials_below(std::size_t nvars, std::uint32_t bound,
                               std::vector<Exps>& out)
{
    Exps cur(nvars, 0);
    // lexicographic-free recursive walk over all exponents of degree < bound
    auto rec = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
        if (i + 1 == nvars) {
            for (std::uint32_t e = 0; e < left; ++e) {
                cur[i] = e;
                out.push_back(cur);
            }
            cur[i] = 0;
            return;
        }
        for (std::uint32_t e = 0; e < left; ++e) {
            cur[i] = e;
            self(self, i + 1, left - e);
        }
        cur[i] = 0;
    };
    if (nvars > 0 && bound > 0)
        rec(rec, 0, bound);
}

// dim_k k[x]/((gens) + m^N)
std::uint64_t quotient_dim(const std::vector<Poly>& gens, std::uint32_t N)
{
    const RingPtr& ring = gens.front().ring();
    const std::size_t nvars = ring->arity();
    const std::uint32_t p = ring->p;

    std::vector<Exps> monomials;
    enumerate_monomials_below(nvars, N, monomials);
    std::map<Exps, std::size_t, DegRevLexLess> index;
    for (std::size_t i = 0; i < monomials.size(); ++i)
        index.emplace(monomials[i], i);

    std::vector<std::vector<std::uint32_t>> rows;
    Exps shifted(nvars);
    for (const auto& g : gens) {
        std::uint32_t o = g.ord().value();  // nonzero by precondition
        if (o >= N)
            continue;
        for (const auto& beta : monomials) {
            if (exps_degree(beta) + o >= N)
                continue;
            std::vector<std::uint32_t> row(monomials.size(), 0);
            bool nonzero = false;
            for (const auto& [e, c] : g.terms()) {
                for (std::size_t i = 0; i < nvars; ++i)
                    shifted[i] = e[i] + beta[i];
                if (exps_degree(shifted) >= N)
                    continue;
                row[index.at(shifted)] = c;
                nonzero = true;
            }
            if (nonzero)
                rows.push_back(std::move(row));
        }
    }

    FpMat mat(rows.size(), monomials.size(), p);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < monomials.size(); ++j)
            mat.at(i, j) = rows[i][j];
    return monomials.size() - mat.row_reduce();
}

}  // namespace

LengthResult local_length(const std::vector<Poly>& gens, std::uint32_t cap)
{
    if (gens.empty())
        throw precondition_error("local_length needs at least one generator");
    const RingPtr& ring = gens.front().ring();
    for (const auto& g : gens) {
        if (!(*g.ring() == *ring))
            throw structural_error("generators live in different rings");
        if (!g.constant_term().is_zero())
            throw precondition_error("generator has a nonzero constant term");
    }
    std::uint64_t prev = quotient_dim(gens, 1);
    for (std::uint32_t N = 2; N <= cap; ++N) {
        std::uint64_t cur = quotient_dim(gens, N);
        if (cur == prev)
            return LengthResult::finite_of(cur);
        prev = cur;
    }
    return LengthResult::indeterminate(cap);
}

Verdict is_system_of_parameters(const std::vector<Poly>& gens, std::uint32_t cap)
{
    if (gens.empty())
        throw precondition_error("empty generator list");
    if (gens.size() != gens.front().arity())
        throw precondition_error("need exactly n generators in n variables");
    LengthResult r = local_length(gens, cap);
    return r.finite ? Verdict::Yes : Verdict::Indeterminate;
}

Verdict is_regular_sop(const std::vector<Poly>& gens)
{
    if (gens.empty())
        throw precondition_error("empty generator list");
    const std::size_t n = gens.front().arity();
    if (gens.size() != n)
        throw precondition_error("need exactly n generators in n variables");
    const std::uint32_t p = gens.front().modulus();
    FpMat lin(n, n, p);
    for (std::size_t i = 0; i < n; ++i) {
        if (!gens[i].constant_term().is_zero())
            throw precondition_error("generator has a nonzero constant term");
        Exps e(n, 0);
        for (std::size_t j = 0; j < n; ++j) {
            e[j] = 1;
            lin.at(i, j) = gens[i].coeff(e).value();
            e[j] = 0;
        }
    }
    return lin.rank() == n ? Verdict::Yes : Verdict::No;
}

SubstitutionAction::SubstitutionAction(std::uint32_t p, std::vector<SeriesTrunc> images)
    : p_(p), images_(std::move(images))
{
    require_supported_prime(p);
    if (images_.empty())
        throw precondition_error("substitution action needs at least one image");
    ring_ = images_.front().poly().ring();
    if (ring_->arity() != images_.size())
        throw structural_error("one image per ring variable required");
    prec_ = images_.front().precision();
    for (const auto& s : images_) {
        if (!(*s.poly().ring() == *ring_))
            throw structural_error("images live in different rings");
        prec_ = std::min(prec_, s.precision());
        if (!s.poly().constant_term().is_zero())
            throw precondition_error("image has a nonzero constant term");
    }
    powers_.resize(p_);
    for (std::size_t i = 0; i < images_.size(); ++i)
        powers_[0].push_back(Poly::variable(ring_, i));
    for (std::uint32_t j = 1; j < p_; ++j)
        for (std::size_t i = 0; i < images_.size(); ++i)
            powers_[j].push_back(apply(powers_[j - 1][i]));
    // order check: sigma^p must be the identity to the stored precision
    for (std::size_t i = 0; i < images_.size(); ++i) {
        Poly pth = apply(powers_[p_ - 1][i]);
        if (pth != Poly::variable(ring_, i).truncated(prec_))
            throw precondition_error("substitution does not have order p to precision");
    }
}

Poly SubstitutionAction::apply(const Poly& f) const
{
    std::vector<Poly> imgs;
    imgs.reserve(images_.size());
    for (const auto& s : images_)
        imgs.push_back(s.poly());
    return f.substitute_trunc(imgs, prec_);
}

const std::vector<Poly>& SubstitutionAction::power_images(std::uint32_t j) const
{
    if (j >= p_)
        throw domain_error("power index must be below p");
    return powers_[j];
}

namespace {

template <typename F>
void for_each_tuple(std::uint32_t p, std::size_t n, F&& fn)
{
    std::vector<std::uint32_t> t(n, 0);
    while (true) {
        fn(t);
        std::size_t i = 0;
        while (i < n && ++t[i] == p) {
            t[i] = 0;
            ++i;
        }
        if (i == n)
            break;
    }
}

}  // namespace

Verdict is_admissible(const SubstitutionAction& action)
{
    const std::size_t n = action.arity();
    bool ok = true;
    for_each_tuple(action.order(), n, [&](const std::vector<std::uint32_t>& t) {
        if (!ok)
            return;
        std::vector<Poly> gens;
        gens.reserve(n);
        for (std::size_t i = 0; i < n; ++i)
            gens.push_back(action.power_images(t[i])[i]);
        if (is_regular_sop(gens) != Verdict::Yes)
            ok = false;
    });
    return ok ? Verdict::Yes : Verdict::No;
}

Verdict is_weakly_admissible(const SubstitutionAction& action, std::uint32_t cap)
{
    const std::size_t n = action.arity();
    if (action.precision() < 2)
        return Verdict::Indeterminate;
    std::uint32_t effective = std::min(cap, action.precision() - 1);
    bool all_finite = true;
    for_each_tuple(action.order(), n, [&](const std::vector<std::uint32_t>& t) {
        if (!all_finite)
            return;
        std::vector<Poly> gens;
        gens.reserve(n);
        for (std::size_t i = 0; i < n; ++i)
            gens.push_back(action.power_images(t[i])[i]);
        if (local_length(gens, effective).finite == false)
            all_finite = false;
    });
    return all_finite ? Verdict::Yes : Verdict::Indeterminate;
}

namespace {

bool is_identity(const FpMat& m)
{
    return m == FpMat::identity(m.rows(), m.modulus());
}

// check that the order of m is a power of p
void require_p_power_order(const FpMat& m, std::uint32_t p)
{
    FpMat q = m;
    std::size_t n = m.rows();
    for (std::size_t s = 0; s <= n + 1; ++s) {
        if (is_identity(q))
            return;
        FpMat next = q;
        for (std::uint32_t j = 1; j < p; ++j)
            next = next * q;
        q = next;  // q^(p)
    }
    throw precondition_error("generator order is not a power of p");
}

}  // namespace

FpMat triangularize(const std::vector<FpMat>& mats)
{
    if (mats.empty())
        throw precondition_error("no matrices given");
    const std::size_t n = mats.front().rows();
    const std::uint32_t p = mats.front().modulus();
    for (const auto& m : mats) {
        if (m.rows() != n || m.cols() != n || m.modulus() != p)
            throw structural_error("matrices must share shape and modulus");
        require_p_power_order(m, p);
    }

    // Columns of basis: first `fixed` columns span the flag built so far.
    FpMat basis = FpMat::identity(n, p);
    for (std::size_t fixed = 0; fixed < n; ++fixed) {
        FpMat binv = basis.inverse();
        // quotient blocks of (M - I) acting on coordinates fixed..n-1
        std::size_t q = n - fixed;
        FpMat stacked(mats.size() * q, q, p);
        for (std::size_t mi = 0; mi < mats.size(); ++mi) {
            FpMat conj = binv * (mats[mi] * basis);
            for (std::size_t i = 0; i < q; ++i)
                for (std::size_t j = 0; j < q; ++j) {
                    std::uint32_t v = conj.at(fixed + i, fixed + j);
                    if (i == j)
                        v = sub_mod(v, 1, p);
                    stacked.at(mi * q + i, j) = v;
                }
        }
        auto kernel = stacked.kernel_basis();
        if (kernel.empty())
            throw precondition_error(
                "no common fixed vector at stage " + std::to_string(fixed) +
                "; the matrices do not generate a p-group");
        // lift the kernel vector and install it as column `fixed`,
        // re-completing the remaining columns to a basis
        std::vector<std::uint32_t> lifted(n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < q; ++j)
                lifted[i] = add_mod(lifted[i], mul_mod(basis.at(i, fixed + j), kernel[0][j], p), p);
        FpMat next(n, n, p);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < fixed; ++j)
                next.at(i, j) = basis.at(i, j);
        for (std::size_t i = 0; i < n; ++i)
            next.at(i, fixed) = lifted[i];
        // greedily extend with standard basis vectors
        std::size_t col = fixed + 1;
        for (std::size_t cand = 0; cand < n && col < n; ++cand) {
            FpMat trial = next;
            trial.at(0, col) = 0;
            for (std::size_t i = 0; i < n; ++i)
                trial.at(i, col) = (i == cand) ? 1 : 0;
            // keep if the first col+1 columns are independent
            FpMat head(col + 1, n, p);
            for (std::size_t j = 0; j <= col; ++j)
                for (std::size_t i = 0; i < n; ++i)
                    head.at(j, i) = trial.at(i, j);
            if (head.rank() == col + 1) {
                next = trial;
                ++col;
            }
        }
        if (col != n)
            throw precondition_error("failed to complete basis");
        basis = next;
    }

    FpMat change = basis.inverse();
    for (const auto& m : mats) {
        FpMat conj = change * (m * basis);
        for (std::size_t i = 0; i < n; ++i) {
            if (conj.at(i, i) != 1)
                throw precondition_error("triangularization lost the unit diagonal");
            for (std::size_t j = 0; j < i; ++j)
                if (conj.at(i, j) != 0)
                    throw precondition_error("triangularization failed");
        }
    }
    return change;
}

}  // namespace wildram
