#include "gbengine.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "fgrade/errors.hpp"

namespace fgrade::detail {

int vterm_cmp(const GBCtx& ctx, const VTerm& a, const VTerm& b)
{
    if (a.comp != b.comp)
        return a.comp < b.comp ? 1 : -1;  // lower component is greater
    return mono_cmp(ctx.ord, a.mono, b.mono);
}

Vec vec_normalize(const GBCtx& ctx, std::vector<VTerm> terms)
{
    const Field& F = ctx.ring.field();
    std::sort(terms.begin(), terms.end(),
              [&](const VTerm& a, const VTerm& b) { return vterm_cmp(ctx, a, b) > 0; });
    Vec v;
    for (VTerm& t : terms) {
        if (!v.t.empty() && v.t.back().comp == t.comp && v.t.back().mono == t.mono) {
            v.t.back().coeff = F.add(v.t.back().coeff, t.coeff);
            if (v.t.back().coeff.is_zero())
                v.t.pop_back();
        } else if (!t.coeff.is_zero()) {
            v.t.push_back(std::move(t));
        }
    }
    return v;
}

Vec vec_add(const GBCtx& ctx, const Vec& a, const Vec& b)
{
    const Field& F = ctx.ring.field();
    Vec r;
    r.t.reserve(a.t.size() + b.t.size());
    size_t i = 0, j = 0;
    while (i < a.t.size() && j < b.t.size()) {
        int c = vterm_cmp(ctx, a.t[i], b.t[j]);
        if (c > 0) {
            r.t.push_back(a.t[i++]);
        } else if (c < 0) {
            r.t.push_back(b.t[j++]);
        } else {
            Scalar s = F.add(a.t[i].coeff, b.t[j].coeff);
            if (!s.is_zero())
                r.t.push_back(VTerm{a.t[i].comp, a.t[i].mono, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < a.t.size(); ++i)
        r.t.push_back(a.t[i]);
    for (; j < b.t.size(); ++j)
        r.t.push_back(b.t[j]);
    return r;
}

Vec vec_neg(const GBCtx& ctx, const Vec& a)
{
    const Field& F = ctx.ring.field();
    Vec r = a;
    for (VTerm& t : r.t)
        t.coeff = F.neg(t.coeff);
    return r;
}

Vec vec_sub(const GBCtx& ctx, const Vec& a, const Vec& b)
{
    return vec_add(ctx, a, vec_neg(ctx, b));
}

Vec vec_mul_term(const GBCtx& ctx, const Vec& a, const Monomial& m, const Scalar& c)
{
    const Field& F = ctx.ring.field();
    Vec r;
    if (c.is_zero())
        return r;
    r.t.reserve(a.t.size());
    for (const VTerm& t : a.t) {
        Scalar s = F.mul(t.coeff, c);
        if (!s.is_zero())
            r.t.push_back(VTerm{t.comp, t.mono * m, std::move(s)});
    }
    return r;
}

Vec vec_monic(const GBCtx& ctx, const Vec& a)
{
    if (a.is_zero())
        return a;
    const Field& F = ctx.ring.field();
    return vec_mul_term(ctx, a, Monomial::one(ctx.ring.nvars()), F.inv(a.lead().coeff));
}

Vec vec_reduce(const GBCtx& ctx, Vec v, const std::vector<Vec>& basis)
{
    const Field& F = ctx.ring.field();
    Vec out;
    while (!v.is_zero()) {
        const VTerm& t = v.lead();
        const Vec* divisor = nullptr;
        for (const Vec& g : basis) {
            if (g.is_zero())
                continue;
            const VTerm& lg = g.lead();
            if (lg.comp == t.comp && lg.mono.divides(t.mono)) {
                divisor = &g;
                break;
            }
        }
        if (divisor) {
            Monomial m = t.mono.divide(divisor->lead().mono);
            Scalar c = F.div(t.coeff, divisor->lead().coeff);
            v = vec_sub(ctx, v, vec_mul_term(ctx, *divisor, m, c));
        } else {
            out.t.push_back(t);
            v.t.erase(v.t.begin());
        }
    }
    return out;
}

namespace {

bool single_component(const Vec& v)
{
    for (const VTerm& t : v.t)
        if (t.comp != v.t.front().comp)
            return false;
    return true;
}

struct PairKey {
    int deg;
    Monomial lcm;
    int i, j;
};

struct PairLess {
    const GBCtx* ctx;
    bool operator()(const PairKey& a, const PairKey& b) const
    {
        if (a.deg != b.deg)
            return a.deg < b.deg;
        int c = mono_cmp(ctx->ord, a.lcm, b.lcm);
        if (c != 0)
            return c < 0;
        if (a.i != b.i)
            return a.i < b.i;
        return a.j < b.j;
    }
};

}  // namespace

std::vector<Vec> module_gb(const GBCtx& ctx, const std::vector<Vec>& gens)
{
    std::vector<Vec> basis;
    for (const Vec& g : gens)
        if (!g.is_zero())
            basis.push_back(vec_monic(ctx, g));

    std::set<PairKey, PairLess> pending(PairLess{&ctx});
    std::set<std::pair<int, int>> in_queue;

    auto add_pairs_for = [&](int k) {
        for (int i = 0; i < k; ++i) {
            if (basis[i].lead().comp != basis[k].lead().comp)
                continue;
            Monomial L = Monomial::lcm(basis[i].lead().mono, basis[k].lead().mono);
            pending.insert(PairKey{L.degree(), L, i, k});
            in_queue.insert({i, k});
        }
    };
    for (int k = 0; k < static_cast<int>(basis.size()); ++k)
        add_pairs_for(k);

    while (!pending.empty()) {
        PairKey pk = *pending.begin();
        pending.erase(pending.begin());
        in_queue.erase({pk.i, pk.j});
        const Vec& f = basis[pk.i];
        const Vec& g = basis[pk.j];

        // product criterion: sound only for vectors supported in a single
        // common component (the polynomial case)
        if (single_component(f) && single_component(g) &&
            Monomial::coprime(f.lead().mono, g.lead().mono))
            continue;

        // chain criterion, proper-divisor form: both triangle pairs already
        // treated and neither shares this pair's lcm
        bool skip = false;
        for (int k = 0; k < static_cast<int>(basis.size()) && !skip; ++k) {
            if (k == pk.i || k == pk.j)
                continue;
            const VTerm& lk = basis[k].lead();
            if (lk.comp != f.lead().comp || !lk.mono.divides(pk.lcm))
                continue;
            if (Monomial::lcm(f.lead().mono, lk.mono) == pk.lcm ||
                Monomial::lcm(lk.mono, g.lead().mono) == pk.lcm)
                continue;
            auto p1 = std::minmax(pk.i, k);
            auto p2 = std::minmax(k, pk.j);
            if (!in_queue.count({p1.first, p1.second}) && !in_queue.count({p2.first, p2.second}))
                skip = true;
        }
        if (skip)
            continue;

        Vec s = vec_sub(ctx, vec_mul_term(ctx, f, pk.lcm.divide(f.lead().mono), ctx.ring.field().one()),
                        vec_mul_term(ctx, g, pk.lcm.divide(g.lead().mono), ctx.ring.field().one()));
        Vec r = vec_reduce(ctx, std::move(s), basis);
        if (!r.is_zero()) {
            basis.push_back(vec_monic(ctx, r));
            add_pairs_for(static_cast<int>(basis.size()) - 1);
        }
    }

    // reduced basis: minimal lead set, then tail reduction
    std::vector<bool> drop(basis.size(), false);
    for (size_t i = 0; i < basis.size(); ++i) {
        for (size_t j = 0; j < basis.size() && !drop[i]; ++j) {
            if (i == j || drop[j])
                continue;
            const VTerm& li = basis[i].lead();
            const VTerm& lj = basis[j].lead();
            if (lj.comp != li.comp || !lj.mono.divides(li.mono))
                continue;
            if (!(lj.mono == li.mono) || j < i)
                drop[i] = true;
        }
    }
    std::vector<Vec> kept;
    for (size_t i = 0; i < basis.size(); ++i)
        if (!drop[i])
            kept.push_back(std::move(basis[i]));

    for (size_t i = 0; i < kept.size(); ++i) {
        std::vector<Vec> others;
        others.reserve(kept.size() - 1);
        for (size_t j = 0; j < kept.size(); ++j)
            if (j != i)
                others.push_back(kept[j]);
        kept[i] = vec_reduce(ctx, kept[i], others);
    }

    std::sort(kept.begin(), kept.end(), [&](const Vec& a, const Vec& b) {
        return vterm_cmp(ctx, a.lead(), b.lead()) > 0;
    });
    return kept;
}

bool gb_member(const GBCtx& ctx, const Vec& v, const std::vector<Vec>& gb)
{
    return vec_reduce(ctx, v, gb).is_zero();
}

std::vector<Vec> syzygies(const GBCtx& ctx, const std::vector<Vec>& columns, int ambient_rank)
{
    const int m = static_cast<int>(columns.size());
    std::vector<Vec> aug;
    aug.reserve(columns.size());
    for (int k = 0; k < m; ++k) {
        Vec v = columns[static_cast<size_t>(k)];
        for (const VTerm& t : v.t)
            if (t.comp < 0 || t.comp >= ambient_rank)
                throw internal_error("syzygy column outside ambient rank");
        v.t.push_back(VTerm{ambient_rank + k, Monomial::one(ctx.ring.nvars()), ctx.ring.field().one()});
        aug.push_back(vec_normalize(ctx, std::move(v.t)));
    }
    std::vector<Vec> gb = module_gb(ctx, aug);
    std::vector<Vec> out;
    for (Vec& g : gb) {
        bool tail_only = true;
        for (const VTerm& t : g.t)
            if (t.comp < ambient_rank) {
                tail_only = false;
                break;
            }
        if (!tail_only)
            continue;
        for (VTerm& t : g.t)
            t.comp -= ambient_rank;
        out.push_back(std::move(g));
    }
    return out;
}

Vec vec_from_coords(const GBCtx& ctx, const std::vector<Polynomial>& coords)
{
    std::vector<VTerm> terms;
    for (size_t c = 0; c < coords.size(); ++c)
        for (const Term& t : coords[c].terms())
            terms.push_back(VTerm{static_cast<int>(c), t.mono, t.coeff});
    return vec_normalize(ctx, std::move(terms));
}

std::vector<Polynomial> vec_to_coords(const PolyRing& ring, const Vec& v, int rank)
{
    std::vector<std::vector<Term>> per(static_cast<size_t>(rank));
    for (const VTerm& t : v.t) {
        if (t.comp < 0 || t.comp >= rank)
            throw internal_error("vector component outside rank");
        per[static_cast<size_t>(t.comp)].push_back(Term{t.mono, t.coeff});
    }
    std::vector<Polynomial> out;
    out.reserve(per.size());
    for (auto& terms : per)
        out.push_back(Polynomial::from_terms(ring, std::move(terms)));
    return out;
}

Vec vec_from_poly(const Polynomial& p, int comp)
{
    Vec v;
    for (const Term& t : p.terms())
        v.t.push_back(VTerm{comp, t.mono, t.coeff});
    return v;
}

Polynomial vec_to_poly(const PolyRing& ring, const Vec& v)
{
    std::vector<Term> terms;
    for (const VTerm& t : v.t) {
        if (t.comp != 0)
            throw internal_error("rank-1 vector with nonzero component");
        terms.push_back(Term{t.mono, t.coeff});
    }
    return Polynomial::from_terms(ring, std::move(terms));
}

}  // namespace fgrade::detail
