#pragma once

#include "fgrade/fgrade.hpp"

namespace fgrade {

/// Candidate-set verdicts. The defining condition quantifies over the whole
/// of Supp(M/bM)\V(a); this checker is sound for "fails" (a counterexample
/// prime is a counterexample) and partial for "holds", which the verdict
/// names make explicit. `vacuous_infinite` is the Supp(M/bM) subset V(a)
/// case; `vacuous_empty` means every candidate was filtered away.
enum class FModuleVerdict { holds_on_candidates, fails, vacuous_infinite, vacuous_empty };

std::string verdict_name(FModuleVerdict v);

struct FModuleRow {
    Ideal prime;
    int fgrade;     // f-grad(a, p, M), finite for admitted candidates
    int dim_bound;  // dim M - dim R/p
    bool equal;
};

struct SkippedCandidate {
    Ideal prime;
    std::string reason;
};

struct Prop323Result {
    bool equal;
    int fgrade;  // f-grad(a, b, M)
    int dim_m;
    int dim_mbm;
};

struct BcmResult {
    bool holds;
    int depth;    // depth(b, M), finite since M/bM != 0
    int dim_mbm;
    int dim_m;
};

enum class CandidateProvenance { monomial_derived, user_supplied };

struct FModuleReport {
    FModuleVerdict verdict = FModuleVerdict::vacuous_empty;
    std::vector<FModuleRow> rows;
    std::vector<SkippedCandidate> skipped;
    std::optional<Prop323Result> necessary_equality;  // f-grad = dim M - dim M/bM
    std::optional<BcmResult> bcm;                     // the a = R specialization
    CandidateProvenance provenance = CandidateProvenance::monomial_derived;
};

/// Tests f-grad(a, p, M) = dim M - dim R/p over a candidate prime set:
/// user-supplied primes (trusted as prime) or, for monomial data, the
/// minimal primes of b + the monomial part of ann M. Candidates inside V(a)
/// or outside Supp(M/bM) are skipped with a note.
FModuleReport check_fmodule(const Ideal& a, const Ideal& b, const FPModule& M,
                            const std::optional<std::vector<Ideal>>& primes);

/// Necessary condition: f-grad(a,b,M) = dim M - dim(M/bM); needs a finite
/// f-grade. Cheap pre-filter for the classifier.
Prop323Result check_prop32_3(const Ideal& a, const Ideal& b, const FPModule& M);

/// b-Cohen-Macaulay test: depth(b,M) + dim(M/bM) = dim M; needs M/bM != 0.
BcmResult check_bcm(const Ideal& b, const FPModule& M);

struct Lemma34Row {
    Ideal prime;
    int fgrade_before;
    int fgrade_after;
    bool drop_by_one;
};

struct Lemma34Report {
    FModuleReport base;
    FModuleReport quotient;  // for M/xM, realized over R
    std::vector<Lemma34Row> rows;
    bool verdicts_agree;
};

/// Quotient stability: compares the classifier on M and on M/xM over the
/// same candidate primes, checking the per-row drop by one. x must be a
/// verified a-filter regular element in b with finite positive f-grade.
Lemma34Report check_lemma34(const Ideal& a, const Ideal& b, const FPModule& M, const Polynomial& x,
                            const std::optional<std::vector<Ideal>>& primes);

}  // namespace fgrade
