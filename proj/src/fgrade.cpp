#include "fgrade/fgrade.hpp"

#include <chrono>
#include <random>

namespace fgrade {

namespace {

using clock_type = std::chrono::steady_clock;

double ms_since(clock_type::time_point t0)
{
    return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

}  // namespace

std::string method_name(FGradeMethod m)
{
    switch (m) {
        case FGradeMethod::ext: return "ext";
        case FGradeMethod::koszul: return "koszul";
        case FGradeMethod::prime_min: return "prime-min";
    }
    return "?";
}

SuppQuery supp_in_V(const FPModule& N, const Ideal& a)
{
    Ideal ann = annihilator(N);
    for (const Polynomial& g : a.generators())
        if (!radical_member(g, ann))
            return SuppQuery{false, g};
    return SuppQuery{true, std::nullopt};
}

std::optional<int> module_dim(const FPModule& N)
{
    if (is_zero(N))
        return std::nullopt;
    std::optional<int> d = krull_dim(annihilator(N));
    if (!d)
        throw internal_error("nonzero module with unit annihilator");
    return d;
}

ExtNat depth_grade(const Ideal& b, const FPModule& M)
{
    if (!(b.ring() == M.ring()))
        throw precondition_error("depth arguments from different rings");
    if (is_zero(quotient_by_elements(M, b.generators())))
        return ExtNat::infinite();
    const int cap = M.ring().nvars();
    FPModule rb = FPModule::cyclic(M.ring(), b.generators());
    ChainComplex F = free_resolution(rb, cap + 1);
    for (int r = 0; r <= cap; ++r)
        if (!is_zero(hom_cohomology(F, M, r)))
            return ExtNat::finite(r);
    throw internal_error("grade scan exhausted the dimension cap with M/bM != 0");
}

FGradeReport fgrade_ext(const Ideal& a, const Ideal& b, const FPModule& M)
{
    if (!(a.ring() == M.ring()) || !(b.ring() == M.ring()))
        throw precondition_error("f-grade arguments from different rings");
    auto t0 = clock_type::now();
    FGradeReport rep;
    rep.method = FGradeMethod::ext;

    FPModule mbm = quotient_by_elements(M, b.generators());
    if (supp_in_V(mbm, a).contained) {
        rep.value = ExtNat::infinite();
        rep.wall_ms = ms_since(t0);
        return rep;
    }
    // Supp(M/bM) escapes V(a), so M != 0 and the scan terminates by the
    // dimension bound; running past it is an engine bug.
    const int cap = *module_dim(M);
    FPModule rb = FPModule::cyclic(M.ring(), b.generators());
    ChainComplex F = free_resolution(rb, cap + 1);
    for (int r = 0; r <= cap; ++r) {
        SuppQuery q = supp_in_V(hom_cohomology(F, M, r), a);
        if (!q.contained) {
            rep.value = ExtNat::finite(r);
            rep.witness_degree = r;
            rep.witness_generator = q.witness;
            rep.wall_ms = ms_since(t0);
            return rep;
        }
    }
    throw internal_error("Ext scan found no escaping degree below the dimension cap");
}

FGradeReport fgrade_koszul(const Ideal& a, const std::vector<Polynomial>& b_gens,
                           const FPModule& M)
{
    if (b_gens.empty())
        throw precondition_error("Koszul f-grade needs a nonempty generator list");
    auto t0 = clock_type::now();
    FGradeReport rep;
    rep.method = FGradeMethod::koszul;

    const int n = static_cast<int>(b_gens.size());
    ChainComplex K = koszul_complex(b_gens, M);
    // all homologies are computed (no early exit); the largest escaping
    // degree determines the value
    std::optional<int> top_escape;
    std::optional<Polynomial> witness;
    for (int i = n; i >= 0; --i) {
        SuppQuery q = supp_in_V(homology_at(K, i), a);
        if (!q.contained && !top_escape) {
            top_escape = i;
            witness = q.witness;
        }
    }
    if (!top_escape) {
        rep.value = ExtNat::infinite();
    } else {
        rep.value = ExtNat::finite(n - *top_escape);
        rep.witness_degree = top_escape;
        rep.witness_generator = witness;
    }
    rep.wall_ms = ms_since(t0);
    return rep;
}

FGradeReport fgrade_prime_min(const Ideal& a, const Ideal& b, const FPModule& M)
{
    auto t0 = clock_type::now();
    for (const Polynomial& g : b.generators())
        if (!g.is_term())
            throw precondition_error("prime-min method requires a monomial ideal b");

    FGradeReport rep;
    rep.method = FGradeMethod::prime_min;
    FPModule mbm = quotient_by_elements(M, b.generators());
    if (supp_in_V(mbm, a).contained) {
        rep.value = ExtNat::infinite();
        rep.wall_ms = ms_since(t0);
        return rep;
    }
    // the infimum over V(b) is attained on a minimal prime of b because the
    // f-grade is monotone in the second ideal
    std::vector<Ideal> primes = minimal_primes_monomial(b);
    std::optional<FGradeReport> best;
    std::optional<Ideal> best_prime;
    for (const Ideal& p : primes) {
        FGradeReport r = fgrade_ext(a, p, M);
        if (!best || r.value < best->value) {
            best = r;
            best_prime = p;
        }
    }
    if (!best)
        throw internal_error("monomial ideal with no minimal primes");
    rep.value = best->value;
    rep.witness_degree = best->witness_degree;
    rep.witness_generator = best->witness_generator;
    rep.witness_prime = best_prime;
    rep.wall_ms = ms_since(t0);
    return rep;
}

FRSCertificate check_frs(const std::vector<Polynomial>& xs, const Ideal& a, const FPModule& M)
{
    FRSCertificate cert;
    FPModule Q = M;
    int index = 0;
    for (const Polynomial& x : xs) {
        ++index;
        FPModule colon = colon_submodule(Q, {}, x);
        SuppQuery q = supp_in_V(colon, a);
        cert.steps.push_back(FRSStep{x, q});
        if (!q.contained && cert.valid) {
            cert.valid = false;
            cert.failure_index = index;
        }
        Q = quotient_by_elements(Q, {x});
    }
    return cert;
}

std::optional<Polynomial> find_frs_element(const Ideal& a, const Ideal& b, const FPModule& M,
                                           uint64_t seed, int retries)
{
    const PolyRing& ring = M.ring();
    const auto& gens = b.generators();

    auto qualifies = [&](const Polynomial& x) {
        if (x.is_zero())
            return false;
        return supp_in_V(colon_submodule(M, {}, x), a).contained;
    };
    auto verified = [&](const Polynomial& x) -> std::optional<Polynomial> {
        FRSCertificate cert = check_frs({x}, a, M);
        if (!cert.valid)
            throw internal_error("filter-regular candidate failed re-verification");
        return x;
    };

    for (const Polynomial& g : gens)
        if (qualifies(g))
            return verified(g);

    // random small-coefficient combinations of the generators; fixed-width
    // draws keep the stream identical across standard libraries
    std::mt19937_64 rng(seed);
    const Field& F = ring.field();
    for (int t = 0; t < retries; ++t) {
        Polynomial x = Polynomial::zero(ring);
        for (const Polynomial& g : gens) {
            Scalar c = F.kind() == FieldKind::rationals
                           ? F.from_int(static_cast<long>(rng() % 7) - 3)
                           : F.from_int(static_cast<long>(rng() % F.characteristic()));
            x = x + g.scale(c);
        }
        if (qualifies(x))
            return verified(x);
    }
    return std::nullopt;
}

MaxFRSResult max_frs(const Ideal& a, const Ideal& b, const FPModule& M, uint64_t seed, int retries)
{
    FPModule mbm = quotient_by_elements(M, b.generators());
    if (supp_in_V(mbm, a).contained)
        throw precondition_error(
            "maximal sequence rejected: Supp(M/bM) lies in V(a), so the f-grade is infinite");

    const int guard = *module_dim(M) + 1;
    std::vector<Polynomial> xs;
    FPModule Q = M;
    while (true) {
        std::optional<Polynomial> x = find_frs_element(a, b, Q, seed + xs.size(), retries);
        if (!x)
            break;
        xs.push_back(*x);
        Q = quotient_by_elements(Q, {*x});
        if (static_cast<int>(xs.size()) > guard)
            throw internal_error("filter regular sequence exceeded the dimension bound");
    }

    FRSCertificate cert = check_frs(xs, a, M);
    if (!cert.valid)
        throw internal_error("greedy maximal sequence failed re-verification");
    ExtNat fg = fgrade_ext(a, b, M).value;
    if (!(fg == ExtNat::finite(static_cast<int>(xs.size()))))
        throw search_exhausted("maximal-sequence search stopped at length " +
                               std::to_string(xs.size()) + " but the f-grade is " + fg.to_string() +
                               "; rerun with a different seed");
    return MaxFRSResult{std::move(cert), fg, seed, retries};
}

std::pair<FGradeReport, FGradeReport> fgrade_quotient_step(const Ideal& a, const Ideal& b,
                                                           const FPModule& M, const Polynomial& x)
{
    if (!ideal_member(x, b))
        throw precondition_error("quotient step element does not lie in b");
    if (!check_frs({x}, a, M).valid)
        throw precondition_error("quotient step element is not a-filter regular on M");
    FGradeReport before = fgrade_ext(a, b, M);
    if (before.value.is_infinite() || before.value.value() < 1)
        throw precondition_error("quotient step needs a finite f-grade of at least 1");
    FGradeReport after = fgrade_ext(a, b, quotient_by_elements(M, {x}));
    return {std::move(before), std::move(after)};
}

}  // namespace fgrade
