#pragma once

#include <vector>

#include "fgrade/module.hpp"

namespace fgrade {

/// Chain complex on a degree window [lo, hi]: free multiplicities m_i over a
/// coefficient module C (free of rank 1 for a plain complex over R) and
/// differentials d_i : C^{m_i} -> C^{m_{i-1}} stored as matrices over R.
/// d o d = 0 holds exactly and is checked on construction. The reported
/// rank of degree i is m_i * ambient_rank(C).
class ChainComplex {
public:
    ChainComplex(PolyRing ring, int lo, std::vector<int> multiplicities,
                 std::vector<PolyMatrix> differentials, FPModule coefficients);

    const PolyRing& ring() const { return ring_; }
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(mults_.size()) - 1; }
    int multiplicity(int i) const;
    int rank(int i) const;
    /// d_i : C_i -> C_{i-1}; defined for lo < i <= hi.
    const PolyMatrix& differential(int i) const;
    const FPModule& coefficients() const { return coeff_; }

private:
    PolyRing ring_;
    int lo_;
    std::vector<int> mults_;
    std::vector<PolyMatrix> diffs_;  // diffs_[k] = d_{lo+1+k}
    FPModule coeff_;
};

/// Free resolution F_L -> ... -> F_1 -> F_0 of N by iterated syzygies;
/// F_0 is N's ambient free module and d_1 its presentation matrix.
ChainComplex free_resolution(const FPModule& N, int length);

/// Koszul complex K(y_1,...,y_n) tensored with M. Sign convention:
/// d(e_{j1<...<ji}) = sum_k (-1)^{k+1} y_{jk} e_{...jk-hat...}.
ChainComplex koszul_complex(const std::vector<Polynomial>& ys, const FPModule& M);

/// H_i = ker d_i / im d_{i+1} as a finitely presented module; for a tensored
/// complex this is a subquotient of C^{m_i} computed over the coefficient
/// presentation. Differentials at the window boundary count as zero maps.
FPModule homology_at(const ChainComplex& C, int i);

/// Cohomology at r of Hom(F, M) for a plain free complex F: the transposed
/// differentials act blockwise on powers of M.
FPModule hom_cohomology(const ChainComplex& F, const FPModule& M, int r);

struct ExtModule {
    int r;
    Ideal b;
    FPModule m;
    FPModule value;
};

/// Ext^r_R(R/b, M): resolve R/b, apply Hom(-, M) via transposed
/// differentials acting on powers of M, take cohomology at r.
ExtModule ext_module(int r, const Ideal& b, const FPModule& M);

}  // namespace fgrade
