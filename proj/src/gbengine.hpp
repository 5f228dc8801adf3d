#pragma once

// Internal Groebner engine over free-module vectors. Everything here works
// on a flattened sparse representation; ideals are the rank-1 case. The
// module term order is position-over-term: lower component index takes
// precedence, ring order within a component. With that order, making the
// leading block of components dominate is what realizes module elimination
// (syzygies, colon ideals, kernels).

#include <vector>

#include "fgrade/poly.hpp"

namespace fgrade::detail {

struct VTerm {
    int comp;
    Monomial mono;
    Scalar coeff;
};

/// Sparse module vector: terms strictly descending under POT.
struct Vec {
    std::vector<VTerm> t;
    bool is_zero() const { return t.empty(); }
    const VTerm& lead() const { return t.front(); }
};

struct GBCtx {
    PolyRing ring;
    MonomialOrder ord;  // may differ from ring.order() for elimination runs

    GBCtx(PolyRing r) : ring(r), ord(r.order()) {}
    GBCtx(PolyRing r, MonomialOrder o) : ring(std::move(r)), ord(std::move(o)) {}
};

/// POT comparison: positive when a > b.
int vterm_cmp(const GBCtx& ctx, const VTerm& a, const VTerm& b);

Vec vec_normalize(const GBCtx& ctx, std::vector<VTerm> terms);
Vec vec_add(const GBCtx& ctx, const Vec& a, const Vec& b);
Vec vec_neg(const GBCtx& ctx, const Vec& a);
Vec vec_sub(const GBCtx& ctx, const Vec& a, const Vec& b);
Vec vec_mul_term(const GBCtx& ctx, const Vec& a, const Monomial& m, const Scalar& c);
Vec vec_monic(const GBCtx& ctx, const Vec& a);

/// Full normal form against `basis` (every term reduced).
Vec vec_reduce(const GBCtx& ctx, Vec v, const std::vector<Vec>& basis);

/// Reduced module Groebner basis: monic, minimal leading terms, tails
/// reduced, sorted with descending leads. Unique for a fixed order.
std::vector<Vec> module_gb(const GBCtx& ctx, const std::vector<Vec>& gens);

bool gb_member(const GBCtx& ctx, const Vec& v, const std::vector<Vec>& gb);

/// Generators of {c in R^m : sum c_k columns[k] = 0} for columns living in
/// R^ambient_rank, via the augmented lifted-generator elimination basis.
std::vector<Vec> syzygies(const GBCtx& ctx, const std::vector<Vec>& columns, int ambient_rank);

// conversions between the flattened form and the coordinate-list form
Vec vec_from_coords(const GBCtx& ctx, const std::vector<Polynomial>& coords);
std::vector<Polynomial> vec_to_coords(const PolyRing& ring, const Vec& v, int rank);
Vec vec_from_poly(const Polynomial& p, int comp = 0);
Polynomial vec_to_poly(const PolyRing& ring, const Vec& v);

}  // namespace fgrade::detail
