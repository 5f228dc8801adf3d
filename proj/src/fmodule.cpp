#include "fgrade/fmodule.hpp"

namespace fgrade {

std::string verdict_name(FModuleVerdict v)
{
    switch (v) {
        case FModuleVerdict::holds_on_candidates: return "holds-on-candidates";
        case FModuleVerdict::fails: return "fails";
        case FModuleVerdict::vacuous_infinite: return "vacuous-infinite";
        case FModuleVerdict::vacuous_empty: return "vacuous-empty";
    }
    return "?";
}

namespace {

// a subset-of p, both by generator membership (p has a trivial basis when
// variable-generated, but arbitrary trusted primes work the same way)
bool inside_V(const Ideal& a, const Ideal& p)
{
    return ideal_contains(p, a);
}

std::vector<Ideal> auto_candidates(const Ideal& b, const FPModule& M)
{
    for (const Polynomial& g : b.generators())
        if (!g.is_term())
            throw precondition_error("auto candidate primes require a monomial ideal b");
    std::vector<Polynomial> gens = b.generators();
    for (const Polynomial& g : annihilator(M).generators()) {
        if (g.is_term())
            gens.push_back(g);
        else
            throw precondition_error(
                "auto candidate primes require a monomial annihilator; pass primes explicitly");
    }
    Ideal j(b.ring(), std::move(gens));
    if (j.is_unit())
        throw internal_error("candidate ideal became the unit ideal despite Supp(M/bM) escaping");
    return minimal_primes_monomial(j);
}

}  // namespace

FModuleReport check_fmodule(const Ideal& a, const Ideal& b, const FPModule& M,
                            const std::optional<std::vector<Ideal>>& primes)
{
    FModuleReport rep;
    rep.provenance = primes ? CandidateProvenance::user_supplied : CandidateProvenance::monomial_derived;

    FPModule mbm = quotient_by_elements(M, b.generators());
    if (supp_in_V(mbm, a).contained) {
        rep.verdict = FModuleVerdict::vacuous_infinite;
        return rep;
    }

    rep.necessary_equality = check_prop32_3(a, b, M);
    rep.bcm = check_bcm(b, M);

    std::vector<Ideal> candidates = primes ? *primes : auto_candidates(b, M);
    Ideal ann_mbm = annihilator(mbm);
    const int dim_m = *module_dim(M);

    for (const Ideal& p : candidates) {
        // p must lie in Supp(M/bM) = V(ann(M/bM)) and escape V(a)
        if (!ideal_contains(p, ann_mbm)) {
            rep.skipped.push_back(SkippedCandidate{p, "outside Supp(M/bM)"});
            continue;
        }
        if (inside_V(a, p)) {
            rep.skipped.push_back(SkippedCandidate{p, "inside V(a)"});
            continue;
        }
        FGradeReport fg = fgrade_ext(a, p, M);
        if (fg.value.is_infinite())
            throw internal_error("candidate prime escaped V(a) yet yields infinite f-grade");
        std::optional<int> dim_rp = krull_dim(p);
        if (!dim_rp)
            throw precondition_error("candidate prime is the unit ideal");
        int bound = dim_m - *dim_rp;
        if (fg.value.value() > bound)
            throw internal_error("per-row dimension bound violated: f-grade " +
                                 std::to_string(fg.value.value()) + " > " + std::to_string(bound));
        rep.rows.push_back(FModuleRow{p, fg.value.value(), bound, fg.value.value() == bound});
    }

    if (rep.rows.empty()) {
        rep.verdict = FModuleVerdict::vacuous_empty;
        return rep;
    }
    bool all_equal = true;
    for (const FModuleRow& row : rep.rows)
        all_equal = all_equal && row.equal;
    rep.verdict = all_equal ? FModuleVerdict::holds_on_candidates : FModuleVerdict::fails;
    return rep;
}

Prop323Result check_prop32_3(const Ideal& a, const Ideal& b, const FPModule& M)
{
    FGradeReport fg = fgrade_ext(a, b, M);
    if (fg.value.is_infinite())
        throw precondition_error("the necessary-equality check needs a finite f-grade");
    // finite f-grade forces M != 0 and M/bM != 0
    int dim_m = *module_dim(M);
    int dim_mbm = *module_dim(quotient_by_elements(M, b.generators()));
    int lhs = fg.value.value();
    return Prop323Result{lhs == dim_m - dim_mbm, lhs, dim_m, dim_mbm};
}

BcmResult check_bcm(const Ideal& b, const FPModule& M)
{
    FPModule mbm = quotient_by_elements(M, b.generators());
    if (is_zero(mbm))
        throw precondition_error("b-Cohen-Macaulay test needs M/bM != 0");
    ExtNat depth = depth_grade(b, M);
    if (depth.is_infinite())
        throw internal_error("finite grade expected when M/bM != 0");
    int dim_mbm = *module_dim(mbm);
    int dim_m = *module_dim(M);
    return BcmResult{depth.value() + dim_mbm == dim_m, depth.value(), dim_mbm, dim_m};
}

Lemma34Report check_lemma34(const Ideal& a, const Ideal& b, const FPModule& M, const Polynomial& x,
                            const std::optional<std::vector<Ideal>>& primes)
{
    if (!ideal_member(x, b))
        throw precondition_error("quotient element does not lie in b");
    if (!check_frs({x}, a, M).valid)
        throw precondition_error("quotient element is not a-filter regular on M");
    FGradeReport fg = fgrade_ext(a, b, M);
    if (fg.value.is_infinite() || fg.value.value() < 1)
        throw precondition_error("quotient stability needs a finite f-grade of at least 1");

    FPModule mx = quotient_by_elements(M, {x});
    Lemma34Report rep{check_fmodule(a, b, M, primes), check_fmodule(a, b, mx, primes), {}, false};

    // per-prime drop by one; rows are matched by candidate order, which both
    // classifier runs share
    for (const FModuleRow& row : rep.base.rows) {
        FGradeReport after = fgrade_ext(a, row.prime, mx);
        int after_v = after.value.is_infinite() ? -1 : after.value.value();
        rep.rows.push_back(
            Lemma34Row{row.prime, row.fgrade, after_v, after_v == row.fgrade - 1});
    }
    rep.verdicts_agree = rep.base.verdict == rep.quotient.verdict;
    return rep;
}

}  // namespace fgrade
