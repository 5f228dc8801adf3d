#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "fgrade/errors.hpp"
#include "fgrade/ideal.hpp"
#include "fgrade/poly.hpp"

namespace fgrade {

struct FreeModule {
    PolyRing ring;
    int rank;

    FreeModule(PolyRing r, int n) : ring(std::move(r)), rank(n)
    {
        if (n < 0)
            throw precondition_error("negative free module rank");
    }
};

/// Element of a free module: coordinate list of polynomials.
class ModuleVector {
public:
    ModuleVector(PolyRing ring, std::vector<Polynomial> coords);
    static ModuleVector zero(const PolyRing& ring, int rank);
    static ModuleVector unit(const PolyRing& ring, int rank, int index);

    const PolyRing& ring() const { return ring_; }
    int rank() const { return static_cast<int>(coords_.size()); }
    const std::vector<Polynomial>& coords() const { return coords_; }
    const Polynomial& operator[](int i) const { return coords_[static_cast<size_t>(i)]; }
    bool is_zero() const;

    ModuleVector operator+(const ModuleVector& o) const;
    ModuleVector operator-(const ModuleVector& o) const;
    ModuleVector scale(const Polynomial& f) const;
    bool operator==(const ModuleVector& o) const;

private:
    PolyRing ring_;
    std::vector<Polynomial> coords_;
};

/// Dense matrix of polynomials (rows x cols), row-major.
class PolyMatrix {
public:
    PolyMatrix(PolyRing ring, int rows, int cols);
    static PolyMatrix from_columns(const PolyRing& ring, int rows,
                                   const std::vector<ModuleVector>& cols);
    static PolyMatrix identity(const PolyRing& ring, int n);

    const PolyRing& ring() const { return ring_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Polynomial& at(int r, int c) const;
    void set(int r, int c, Polynomial p);
    ModuleVector column(int c) const;
    std::vector<ModuleVector> columns() const;
    PolyMatrix transpose() const;
    PolyMatrix operator*(const PolyMatrix& o) const;
    bool is_zero() const;

private:
    PolyRing ring_;
    int rows_, cols_;
    std::vector<Polynomial> entries_;
};

/// Finitely presented module coker(A : R^m -> R^n), the engine's universal
/// module representation. Handle with race-safe lazy caches (relation
/// Groebner basis, annihilator, zero test); copies share them.
class FPModule {
public:
    FPModule(PolyRing ring, int ambient_rank, std::vector<ModuleVector> relations);
    static FPModule free(const PolyRing& ring, int rank);
    static FPModule cyclic(const PolyRing& ring, std::vector<Polynomial> gens);  // R/(gens)

    const PolyRing& ring() const;
    int ambient_rank() const;
    const std::vector<ModuleVector>& relations() const;
    PolyMatrix presentation_matrix() const;

    /// True when v maps to zero in the module (lies in the relation span).
    bool member(const ModuleVector& v) const;

private:
    struct Data;
    std::shared_ptr<Data> d_;
    friend bool is_zero(const FPModule&);
    friend Ideal annihilator(const FPModule&);
};

/// Map between finitely presented modules, given on ambient coordinates by
/// a (target rank x source rank) matrix. Construction checks that the
/// matrix carries source relations into the target relation span.
class ModuleMap {
public:
    ModuleMap(FPModule source, FPModule target, PolyMatrix matrix);
    const FPModule& source() const { return source_; }
    const FPModule& target() const { return target_; }
    const PolyMatrix& matrix() const { return matrix_; }
    ModuleVector apply(const ModuleVector& v) const;

private:
    ModuleVector apply_raw(const ModuleVector& v) const;
    FPModule source_;
    FPModule target_;
    PolyMatrix matrix_;
};

/// Module Groebner basis of a submodule of a free module, position-over-term
/// order. Supports membership via module normal forms.
class ModuleGroebnerBasis {
public:
    const std::vector<ModuleVector>& elements() const;
    int rank() const;

private:
    friend ModuleGroebnerBasis module_gb(const std::vector<ModuleVector>&, const FreeModule&);
    friend ModuleVector module_normal_form(const ModuleVector&, const ModuleGroebnerBasis&);
    struct Impl;
    std::shared_ptr<const Impl> impl_;
};

ModuleGroebnerBasis module_gb(const std::vector<ModuleVector>& gens, const FreeModule& F);
ModuleVector module_normal_form(const ModuleVector& v, const ModuleGroebnerBasis& G);

/// Columns generating {v | A v = 0}.
PolyMatrix syzygies(const PolyMatrix& A);
std::vector<ModuleVector> syzygies(const PolyRing& ring, const std::vector<ModuleVector>& columns,
                                   int ambient_rank);

/// Generators of {v in R^{A.cols()} : A v in span(U)}; U lives in R^{A.rows()}.
std::vector<ModuleVector> preimage_of_span(const PolyMatrix& A, const std::vector<ModuleVector>& U);

/// Cokernel presentation of (span(V) + span(W))/span(W) inside R^rank: one
/// generator per element of V, relations {c : sum c_i V_i in span(W)}.
FPModule subquotient(const PolyRing& ring, int ambient_rank, const std::vector<ModuleVector>& V,
                     const std::vector<ModuleVector>& W);

FPModule kernel(const ModuleMap& phi);

/// Presentation of (N :_M f)/N where N = image of N_gens in M; f nonzero.
FPModule colon_submodule(const FPModule& M, const std::vector<ModuleVector>& N_gens,
                         const Polynomial& f);

/// ann N as the intersection over ambient generators of the column-span
/// colon ideals; (1) for the zero module.
Ideal annihilator(const FPModule& N);

/// Presentation of M/(x_1,...,x_k)M.
FPModule quotient_by_elements(const FPModule& M, const std::vector<Polynomial>& xs);

FPModule direct_sum(const FPModule& M, const FPModule& N);

bool is_zero(const FPModule& N);

}  // namespace fgrade
