#include "fgrade/ideal.hpp"

#include <algorithm>
#include <set>

#include "fgrade/errors.hpp"
#include "gbengine.hpp"

namespace fgrade {

using detail::GBCtx;
using detail::Vec;

bool GroebnerBasis::is_unit() const
{
    return elements_.size() == 1 && elements_[0].is_constant() && !elements_[0].is_zero();
}

Ideal::Ideal(PolyRing ring, std::vector<Polynomial> gens)
{
    std::vector<Polynomial> kept;
    for (Polynomial& g : gens) {
        if (!(g.ring() == ring))
            throw precondition_error("ideal generator from a different ring");
        if (!g.is_zero())
            kept.push_back(std::move(g));
    }
    d_ = std::make_shared<Data>(std::move(ring), std::move(kept));
}

Ideal Ideal::unit(const PolyRing& ring)
{
    return Ideal(ring, {Polynomial::from_int(ring, 1)});
}

const GroebnerBasis& Ideal::groebner() const
{
    std::call_once(d_->once, [this] { d_->gb = buchberger(d_->ring, d_->gens, d_->ring.order()); });
    return *d_->gb;
}

GroebnerBasis buchberger(const PolyRing& ring, const std::vector<Polynomial>& gens,
                         const MonomialOrder& order)
{
    GBCtx ctx(ring, order);
    std::vector<Vec> input;
    for (const Polynomial& g : gens)
        if (!g.is_zero())
            input.push_back(detail::vec_from_poly(g));
    std::vector<Vec> gb = detail::module_gb(ctx, input);
    std::vector<Polynomial> out;
    out.reserve(gb.size());
    for (const Vec& v : gb)
        out.push_back(detail::vec_to_poly(ring, v));
    return GroebnerBasis(std::move(out), order);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G)
{
    if (G.elements().empty())
        return f;
    const PolyRing& ring = G.elements()[0].ring();
    if (!(f.ring() == ring))
        throw precondition_error("normal form across different rings");
    GBCtx ctx(ring, G.order());
    std::vector<Vec> basis;
    basis.reserve(G.elements().size());
    for (const Polynomial& g : G.elements())
        basis.push_back(detail::vec_from_poly(g));
    return detail::vec_to_poly(ring, detail::vec_reduce(ctx, detail::vec_from_poly(f), basis));
}

bool ideal_member(const Polynomial& f, const Ideal& I)
{
    if (f.is_zero())
        return true;
    return normal_form(f, I.groebner()).is_zero();
}

namespace {

// lift p into ext, which extends p's ring by trailing variables
Polynomial lift_poly(const Polynomial& p, const PolyRing& ext)
{
    std::vector<Term> terms;
    for (const Term& t : p.terms()) {
        std::vector<int32_t> e = t.mono.exponents();
        e.resize(static_cast<size_t>(ext.nvars()), 0);
        terms.push_back(Term{Monomial(std::move(e)), t.coeff});
    }
    return Polynomial::from_terms(ext, std::move(terms));
}

// drop trailing variables; every term must be free of them
Polynomial restrict_poly(const Polynomial& p, const PolyRing& base)
{
    std::vector<Term> terms;
    for (const Term& t : p.terms()) {
        std::vector<int32_t> e = t.mono.exponents();
        for (size_t i = static_cast<size_t>(base.nvars()); i < e.size(); ++i)
            if (e[i] != 0)
                throw internal_error("restriction of a polynomial involving auxiliary variables");
        e.resize(static_cast<size_t>(base.nvars()));
        terms.push_back(Term{Monomial(std::move(e)), t.coeff});
    }
    return Polynomial::from_terms(base, std::move(terms));
}

bool free_of_trailing(const Polynomial& p, int nbase)
{
    for (const Term& t : p.terms())
        for (int i = nbase; i < t.mono.nvars(); ++i)
            if (t.mono[i] != 0)
                return false;
    return true;
}

// lex order with the auxiliary (last) variable most significant: an
// elimination order for that variable
MonomialOrder elimination_order(int nvars_ext)
{
    MonomialOrder o;
    o.kind = OrderKind::lex;
    o.precedence.push_back(nvars_ext - 1);
    for (int i = 0; i + 1 < nvars_ext; ++i)
        o.precedence.push_back(i);
    return o;
}

// single-divisor division with quotient: f = q*g + r, no term of r
// divisible by LT(g)
std::pair<Polynomial, Polynomial> divide_single(const Polynomial& f, const Polynomial& g)
{
    const PolyRing& ring = f.ring();
    const Field& F = ring.field();
    const MonomialOrder& ord = ring.order();
    GBCtx ctx(ring, ord);
    Vec work = detail::vec_from_poly(f);
    std::vector<Term> quot, rem;
    const Term& lg = g.leading_term();
    while (!work.is_zero()) {
        detail::VTerm t = work.lead();
        if (lg.mono.divides(t.mono)) {
            Monomial m = t.mono.divide(lg.mono);
            Scalar c = F.div(t.coeff, lg.coeff);
            quot.push_back(Term{m, c});
            work = detail::vec_sub(ctx, work,
                                   detail::vec_mul_term(ctx, detail::vec_from_poly(g), m, c));
        } else {
            rem.push_back(Term{t.mono, t.coeff});
            work.t.erase(work.t.begin());
        }
    }
    return {Polynomial::from_terms(ring, std::move(quot)), Polynomial::from_terms(ring, std::move(rem))};
}

}  // namespace

bool radical_member(const Polynomial& f, const Ideal& I)
{
    if (!(f.ring() == I.ring()))
        throw precondition_error("radical membership across different rings");
    if (f.is_zero())
        return true;
    const PolyRing& ring = I.ring();
    PolyRing ext = ring.adjoin_variable("t", MonomialOrder::natural(OrderKind::grevlex, ring.nvars() + 1));
    std::vector<Polynomial> gens;
    for (const Polynomial& g : I.generators())
        gens.push_back(lift_poly(g, ext));
    Polynomial t = Polynomial::variable(ext, ext.nvars() - 1);
    gens.push_back(Polynomial::from_int(ext, 1) - t * lift_poly(f, ext));
    return buchberger(ext, gens, ext.order()).is_unit();
}

Ideal ideal_intersect(const Ideal& I, const Ideal& J)
{
    if (!(I.ring() == J.ring()))
        throw precondition_error("ideal intersection across different rings");
    const PolyRing& ring = I.ring();
    MonomialOrder elim = elimination_order(ring.nvars() + 1);
    PolyRing ext = ring.adjoin_variable("t", elim);
    Polynomial t = Polynomial::variable(ext, ext.nvars() - 1);
    Polynomial omt = Polynomial::from_int(ext, 1) - t;
    std::vector<Polynomial> gens;
    for (const Polynomial& g : I.generators())
        gens.push_back(t * lift_poly(g, ext));
    for (const Polynomial& h : J.generators())
        gens.push_back(omt * lift_poly(h, ext));
    GroebnerBasis gb = buchberger(ext, gens, elim);
    std::vector<Polynomial> kept;
    for (const Polynomial& g : gb.elements())
        if (free_of_trailing(g, ring.nvars()))
            kept.push_back(restrict_poly(g, ring));
    return Ideal(ring, std::move(kept));
}

Ideal ideal_quotient(const Ideal& I, const Polynomial& f)
{
    if (f.is_zero())
        throw precondition_error("ideal quotient by zero");
    if (!(f.ring() == I.ring()))
        throw precondition_error("ideal quotient across different rings");
    Ideal meet = ideal_intersect(I, Ideal(I.ring(), {f}));
    std::vector<Polynomial> gens;
    for (const Polynomial& g : meet.generators()) {
        auto [q, r] = divide_single(g, f);
        if (!r.is_zero())
            throw internal_error("intersection with (f) produced an element not divisible by f");
        gens.push_back(std::move(q));
    }
    return Ideal(I.ring(), std::move(gens));
}

Ideal ideal_sum(const Ideal& I, const Ideal& J)
{
    if (!(I.ring() == J.ring()))
        throw precondition_error("ideal sum across different rings");
    std::vector<Polynomial> gens = I.generators();
    gens.insert(gens.end(), J.generators().begin(), J.generators().end());
    return Ideal(I.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& I, const Ideal& J)
{
    if (!(I.ring() == J.ring()))
        throw precondition_error("ideal product across different rings");
    std::vector<Polynomial> gens;
    for (const Polynomial& g : I.generators())
        for (const Polynomial& h : J.generators())
            gens.push_back(g * h);
    return Ideal(I.ring(), std::move(gens));
}

bool ideal_contains(const Ideal& I, const Ideal& J)
{
    for (const Polynomial& g : J.generators())
        if (!ideal_member(g, I))
            return false;
    return true;
}

std::optional<int> krull_dim(const Ideal& I)
{
    const GroebnerBasis& gb = I.groebner();
    if (gb.is_unit())
        return std::nullopt;
    const int n = I.ring().nvars();
    if (n > 20)
        throw precondition_error("dimension computation limited to 20 variables");
    std::vector<uint32_t> lt_supports;
    for (const Polynomial& g : gb.elements()) {
        uint32_t s = 0;
        const Monomial& m = g.leading_term().mono;
        for (int i = 0; i < n; ++i)
            if (m[i] > 0)
                s |= 1u << i;
        lt_supports.push_back(s);
    }
    int best = 0;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool independent = true;
        for (uint32_t s : lt_supports) {
            if ((s & ~mask) == 0) {  // leading monomial supported inside the subset
                independent = false;
                break;
            }
        }
        if (independent)
            best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

std::vector<Ideal> minimal_primes_monomial(const Ideal& I)
{
    const PolyRing& ring = I.ring();
    const int n = ring.nvars();
    if (n > 20)
        throw precondition_error("minimal primes limited to 20 variables");
    std::vector<uint32_t> supports;
    for (const Polynomial& g : I.generators()) {
        if (!g.is_term())
            throw precondition_error("minimal primes require a monomial ideal (non-term generator '" +
                                     g.to_string() + "')");
        if (g.leading_term().mono.is_one())
            throw precondition_error("minimal primes of the unit ideal are undefined");
        uint32_t s = 0;
        for (int i = 0; i < n; ++i)
            if (g.leading_term().mono[i] > 0)
                s |= 1u << i;
        supports.push_back(s);
    }
    std::sort(supports.begin(), supports.end());
    supports.erase(std::unique(supports.begin(), supports.end()), supports.end());

    // expand vertex covers of the support hypergraph
    std::set<uint32_t> covers{0u};
    for (uint32_t s : supports) {
        std::set<uint32_t> next;
        for (uint32_t c : covers) {
            if (c & s) {
                next.insert(c);
            } else {
                for (int v = 0; v < n; ++v)
                    if (s & (1u << v))
                        next.insert(c | (1u << v));
            }
        }
        covers = std::move(next);
    }
    // minimalize: drop covers containing another cover
    std::vector<uint32_t> all(covers.begin(), covers.end());
    std::vector<uint32_t> minimal;
    for (uint32_t c : all) {
        bool has_smaller = false;
        for (uint32_t d : all)
            if (d != c && (d & ~c) == 0) {
                has_smaller = true;
                break;
            }
        if (!has_smaller)
            minimal.push_back(c);
    }
    std::sort(minimal.begin(), minimal.end(), [](uint32_t a, uint32_t b) {
        int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
        return pa != pb ? pa < pb : a < b;
    });

    std::vector<Ideal> out;
    for (uint32_t c : minimal) {
        std::vector<Polynomial> gens;
        for (int v = 0; v < n; ++v)
            if (c & (1u << v))
                gens.push_back(Polynomial::variable(ring, v));
        out.push_back(Ideal(ring, std::move(gens)));
    }
    return out;
}

}  // namespace fgrade
