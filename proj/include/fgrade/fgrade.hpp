#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "fgrade/complex.hpp"

namespace fgrade {

/// Value in N union {infinity}. Def. convention: the f-grade is infinite
/// exactly when Supp(M/bM) is contained in V(a); infinity is a first-class
/// value here, not a sentinel integer.
class ExtNat {
public:
    static ExtNat infinite() { return ExtNat(std::nullopt); }
    static ExtNat finite(int v)
    {
        if (v < 0)
            throw precondition_error("negative extended natural");
        return ExtNat(v);
    }
    bool is_finite() const { return v_.has_value(); }
    bool is_infinite() const { return !v_.has_value(); }
    int value() const
    {
        if (!v_)
            throw precondition_error("taking the value of infinity");
        return *v_;
    }
    bool operator==(const ExtNat&) const = default;
    bool operator<=(const ExtNat& o) const
    {
        if (o.is_infinite())
            return true;
        return is_finite() && value() <= o.value();
    }
    bool operator<(const ExtNat& o) const { return *this <= o && !(*this == o); }
    std::string to_string() const { return v_ ? std::to_string(*v_) : "infinity"; }

private:
    explicit ExtNat(std::optional<int> v) : v_(v) {}
    std::optional<int> v_;
};

/// Outcome of a support containment test Supp(N) subset-of V(a): contained,
/// or a witnessing generator g of a with g outside sqrt(ann N).
struct SuppQuery {
    bool contained;
    std::optional<Polynomial> witness;
};

enum class FGradeMethod { ext, koszul, prime_min };

std::string method_name(FGradeMethod m);

struct FGradeReport {
    ExtNat value = ExtNat::infinite();
    FGradeMethod method = FGradeMethod::ext;
    /// ext: the first escaping Ext degree; koszul: the largest escaping
    /// homology degree; prime-min: inherited from the attaining prime.
    std::optional<int> witness_degree;
    std::optional<Polynomial> witness_generator;
    std::optional<Ideal> witness_prime;  // prime attaining the prime-min value
    double wall_ms = 0.0;
};

struct FRSStep {
    Polynomial element;
    SuppQuery verdict;
};

/// Per-step record of an a-filter regular sequence check. `failure_index`
/// is 1-based, matching the usual x_1,...,x_k indexing.
struct FRSCertificate {
    std::vector<FRSStep> steps;
    bool valid = true;
    std::optional<int> failure_index;
};

struct MaxFRSResult {
    FRSCertificate certificate;
    ExtNat cross_check;  // fgrade_ext value; equals the sequence length
    uint64_t seed = 0;
    int retries = 0;
};

/// Supp(N) subset-of V(a) iff every generator of a is a radical member of
/// ann N. The zero module is contained vacuously.
SuppQuery supp_in_V(const FPModule& N, const Ideal& a);

/// dim(R/ann N); nullopt for the zero module (dimension -infinity).
std::optional<int> module_dim(const FPModule& N);

/// Classical grade inf{r : Ext^r(R/b, M) != 0}; infinite iff M/bM = 0.
ExtNat depth_grade(const Ideal& b, const FPModule& M);

/// f-grade via the Ext-support characterization: the first r whose
/// Ext^r(R/b, M) support escapes V(a).
FGradeReport fgrade_ext(const Ideal& a, const Ideal& b, const FPModule& M);

/// f-grade via Koszul homology: n minus the largest i whose H_i escapes.
FGradeReport fgrade_koszul(const Ideal& a, const std::vector<Polynomial>& b_gens,
                           const FPModule& M);

/// f-grade as the minimum of fgrade_ext(a, p, M) over the minimal primes of
/// a monomial ideal b (the infimum over V(b) is attained there).
FGradeReport fgrade_prime_min(const Ideal& a, const Ideal& b, const FPModule& M);

/// Verifies the defining colon-support condition step by step.
FRSCertificate check_frs(const std::vector<Polynomial>& xs, const Ideal& a, const FPModule& M);

/// Searches b for an a-filter regular element on M: generators first, then
/// seeded random small-coefficient combinations. Every hit is re-verified.
std::optional<Polynomial> find_frs_element(const Ideal& a, const Ideal& b, const FPModule& M,
                                           uint64_t seed, int retries);

/// Greedily builds a maximal a-filter regular M-sequence in b and checks its
/// length against fgrade_ext. Rejects the infinite case up front; a length
/// mismatch after retries reports search exhaustion.
MaxFRSResult max_frs(const Ideal& a, const Ideal& b, const FPModule& M, uint64_t seed = 1,
                     int retries = 64);

/// (f-grad(a,b,M), f-grad(a,b,M/xM)) for a verified a-filter regular x in b
/// with finite positive f-grade; callers assert the drop by one.
std::pair<FGradeReport, FGradeReport> fgrade_quotient_step(const Ideal& a, const Ideal& b,
                                                           const FPModule& M, const Polynomial& x);

}  // namespace fgrade
