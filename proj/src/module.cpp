#include "fgrade/module.hpp"

#include <algorithm>

#include "fgrade/errors.hpp"
#include "gbengine.hpp"

namespace fgrade {

using detail::GBCtx;
using detail::Vec;

ModuleVector::ModuleVector(PolyRing ring, std::vector<Polynomial> coords)
    : ring_(std::move(ring)), coords_(std::move(coords))
{
    for (const Polynomial& p : coords_)
        if (!(p.ring() == ring_))
            throw precondition_error("module vector coordinate from a different ring");
}

ModuleVector ModuleVector::zero(const PolyRing& ring, int rank)
{
    return ModuleVector(ring, std::vector<Polynomial>(static_cast<size_t>(rank), Polynomial::zero(ring)));
}

ModuleVector ModuleVector::unit(const PolyRing& ring, int rank, int index)
{
    if (index < 0 || index >= rank)
        throw precondition_error("unit vector index out of range");
    ModuleVector v = zero(ring, rank);
    v.coords_[static_cast<size_t>(index)] = Polynomial::from_int(ring, 1);
    return v;
}

bool ModuleVector::is_zero() const
{
    return std::all_of(coords_.begin(), coords_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

ModuleVector ModuleVector::operator+(const ModuleVector& o) const
{
    if (rank() != o.rank())
        throw precondition_error("module vector rank mismatch");
    std::vector<Polynomial> c;
    c.reserve(coords_.size());
    for (size_t i = 0; i < coords_.size(); ++i)
        c.push_back(coords_[i] + o.coords_[i]);
    return ModuleVector(ring_, std::move(c));
}

ModuleVector ModuleVector::operator-(const ModuleVector& o) const
{
    if (rank() != o.rank())
        throw precondition_error("module vector rank mismatch");
    std::vector<Polynomial> c;
    c.reserve(coords_.size());
    for (size_t i = 0; i < coords_.size(); ++i)
        c.push_back(coords_[i] - o.coords_[i]);
    return ModuleVector(ring_, std::move(c));
}

ModuleVector ModuleVector::scale(const Polynomial& f) const
{
    std::vector<Polynomial> c;
    c.reserve(coords_.size());
    for (const Polynomial& p : coords_)
        c.push_back(p * f);
    return ModuleVector(ring_, std::move(c));
}

bool ModuleVector::operator==(const ModuleVector& o) const
{
    return rank() == o.rank() && coords_ == o.coords_;
}

PolyMatrix::PolyMatrix(PolyRing ring, int rows, int cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols),
      entries_(static_cast<size_t>(rows) * static_cast<size_t>(cols), Polynomial::zero(ring_))
{
    if (rows < 0 || cols < 0)
        throw precondition_error("negative matrix dimension");
}

PolyMatrix PolyMatrix::from_columns(const PolyRing& ring, int rows,
                                    const std::vector<ModuleVector>& cols)
{
    PolyMatrix A(ring, rows, static_cast<int>(cols.size()));
    for (int c = 0; c < A.cols(); ++c) {
        const ModuleVector& v = cols[static_cast<size_t>(c)];
        if (v.rank() != rows)
            throw precondition_error("column rank mismatch");
        for (int r = 0; r < rows; ++r)
            A.set(r, c, v[r]);
    }
    return A;
}

PolyMatrix PolyMatrix::identity(const PolyRing& ring, int n)
{
    PolyMatrix A(ring, n, n);
    for (int i = 0; i < n; ++i)
        A.set(i, i, Polynomial::from_int(ring, 1));
    return A;
}

const Polynomial& PolyMatrix::at(int r, int c) const
{
    return entries_[static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c)];
}

void PolyMatrix::set(int r, int c, Polynomial p)
{
    if (!(p.ring() == ring_))
        throw precondition_error("matrix entry from a different ring");
    entries_[static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c)] = std::move(p);
}

ModuleVector PolyMatrix::column(int c) const
{
    std::vector<Polynomial> coords;
    coords.reserve(static_cast<size_t>(rows_));
    for (int r = 0; r < rows_; ++r)
        coords.push_back(at(r, c));
    return ModuleVector(ring_, std::move(coords));
}

std::vector<ModuleVector> PolyMatrix::columns() const
{
    std::vector<ModuleVector> out;
    out.reserve(static_cast<size_t>(cols_));
    for (int c = 0; c < cols_; ++c)
        out.push_back(column(c));
    return out;
}

PolyMatrix PolyMatrix::transpose() const
{
    PolyMatrix T(ring_, cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            T.set(c, r, at(r, c));
    return T;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const
{
    if (cols_ != o.rows_)
        throw precondition_error("matrix dimension mismatch in product");
    PolyMatrix P(ring_, rows_, o.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < o.cols_; ++c) {
            Polynomial s = Polynomial::zero(ring_);
            for (int k = 0; k < cols_; ++k)
                s = s + at(r, k) * o.at(k, c);
            P.set(r, c, std::move(s));
        }
    return P;
}

bool PolyMatrix::is_zero() const
{
    return std::all_of(entries_.begin(), entries_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

struct FPModule::Data {
    PolyRing ring;
    int ambient_rank;
    std::vector<ModuleVector> relations;

    Data(PolyRing r, int n, std::vector<ModuleVector> rels)
        : ring(std::move(r)), ambient_rank(n), relations(std::move(rels))
    {
    }
    mutable std::once_flag gb_once;
    mutable std::vector<Vec> rel_gb;
    mutable std::once_flag ann_once;
    mutable std::optional<Ideal> ann;
    mutable std::once_flag zero_once;
    mutable bool zero = false;

    const std::vector<Vec>& relation_gb() const
    {
        std::call_once(gb_once, [this] {
            GBCtx ctx(ring);
            std::vector<Vec> cols;
            for (const ModuleVector& v : relations)
                cols.push_back(detail::vec_from_coords(ctx, v.coords()));
            rel_gb = detail::module_gb(ctx, cols);
        });
        return rel_gb;
    }
};

FPModule::FPModule(PolyRing ring, int ambient_rank, std::vector<ModuleVector> relations)
{
    if (ambient_rank < 0)
        throw precondition_error("negative ambient rank");
    std::vector<ModuleVector> kept;
    for (ModuleVector& v : relations) {
        if (!(v.ring() == ring))
            throw precondition_error("relation from a different ring");
        if (v.rank() != ambient_rank)
            throw precondition_error("relation rank does not match ambient rank");
        if (!v.is_zero())
            kept.push_back(std::move(v));
    }
    d_ = std::make_shared<Data>(std::move(ring), ambient_rank, std::move(kept));
}

FPModule FPModule::free(const PolyRing& ring, int rank)
{
    return FPModule(ring, rank, {});
}

FPModule FPModule::cyclic(const PolyRing& ring, std::vector<Polynomial> gens)
{
    std::vector<ModuleVector> rels;
    for (Polynomial& g : gens)
        rels.push_back(ModuleVector(ring, {std::move(g)}));
    return FPModule(ring, 1, std::move(rels));
}

const PolyRing& FPModule::ring() const
{
    return d_->ring;
}

int FPModule::ambient_rank() const
{
    return d_->ambient_rank;
}

const std::vector<ModuleVector>& FPModule::relations() const
{
    return d_->relations;
}

PolyMatrix FPModule::presentation_matrix() const
{
    return PolyMatrix::from_columns(d_->ring, d_->ambient_rank, d_->relations);
}

bool FPModule::member(const ModuleVector& v) const
{
    if (v.rank() != d_->ambient_rank)
        throw precondition_error("vector rank does not match ambient rank");
    GBCtx ctx(d_->ring);
    return detail::gb_member(ctx, detail::vec_from_coords(ctx, v.coords()), d_->relation_gb());
}

ModuleMap::ModuleMap(FPModule source, FPModule target, PolyMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix))
{
    if (matrix_.rows() != target_.ambient_rank() || matrix_.cols() != source_.ambient_rank())
        throw precondition_error("module map matrix has wrong shape");
    for (const ModuleVector& rel : source_.relations())
        if (!target_.member(apply_raw(rel)))
            throw precondition_error("module map is not well defined on the presentation");
}

ModuleVector ModuleMap::apply(const ModuleVector& v) const
{
    if (v.rank() != source_.ambient_rank())
        throw precondition_error("vector rank does not match map source");
    return apply_raw(v);
}

ModuleVector ModuleMap::apply_raw(const ModuleVector& v) const
{
    std::vector<Polynomial> out;
    out.reserve(static_cast<size_t>(matrix_.rows()));
    for (int r = 0; r < matrix_.rows(); ++r) {
        Polynomial s = Polynomial::zero(matrix_.ring());
        for (int c = 0; c < matrix_.cols(); ++c)
            s = s + matrix_.at(r, c) * v[c];
        out.push_back(std::move(s));
    }
    return ModuleVector(matrix_.ring(), std::move(out));
}

struct ModuleGroebnerBasis::Impl {
    PolyRing ring;
    int rank;
    std::vector<Vec> gb;
    std::vector<ModuleVector> elements;

    Impl(PolyRing r, int rk) : ring(std::move(r)), rank(rk) {}
};

const std::vector<ModuleVector>& ModuleGroebnerBasis::elements() const
{
    return impl_->elements;
}

int ModuleGroebnerBasis::rank() const
{
    return impl_->rank;
}

ModuleGroebnerBasis module_gb(const std::vector<ModuleVector>& gens, const FreeModule& F)
{
    auto impl = std::make_shared<ModuleGroebnerBasis::Impl>(F.ring, F.rank);
    GBCtx ctx(F.ring);
    std::vector<Vec> input;
    for (const ModuleVector& v : gens) {
        if (v.rank() != F.rank)
            throw precondition_error("generator rank does not match free module");
        input.push_back(detail::vec_from_coords(ctx, v.coords()));
    }
    impl->gb = detail::module_gb(ctx, input);
    for (const Vec& v : impl->gb)
        impl->elements.push_back(ModuleVector(F.ring, detail::vec_to_coords(F.ring, v, F.rank)));
    ModuleGroebnerBasis out;
    out.impl_ = std::move(impl);
    return out;
}

ModuleVector module_normal_form(const ModuleVector& v, const ModuleGroebnerBasis& G)
{
    const auto& impl = *G.impl_;
    if (v.rank() != impl.rank)
        throw precondition_error("vector rank does not match basis rank");
    GBCtx ctx(impl.ring);
    Vec r = detail::vec_reduce(ctx, detail::vec_from_coords(ctx, v.coords()), impl.gb);
    return ModuleVector(impl.ring, detail::vec_to_coords(impl.ring, r, impl.rank));
}

std::vector<ModuleVector> syzygies(const PolyRing& ring, const std::vector<ModuleVector>& columns,
                                   int ambient_rank)
{
    GBCtx ctx(ring);
    std::vector<Vec> cols;
    for (const ModuleVector& v : columns) {
        if (v.rank() != ambient_rank)
            throw precondition_error("syzygy column rank mismatch");
        cols.push_back(detail::vec_from_coords(ctx, v.coords()));
    }
    std::vector<Vec> syz = detail::syzygies(ctx, cols, ambient_rank);
    std::vector<ModuleVector> out;
    for (const Vec& v : syz)
        out.push_back(ModuleVector(ring, detail::vec_to_coords(ring, v, static_cast<int>(columns.size()))));
    return out;
}

PolyMatrix syzygies(const PolyMatrix& A)
{
    std::vector<ModuleVector> syz = syzygies(A.ring(), A.columns(), A.rows());
    return PolyMatrix::from_columns(A.ring(), A.cols(), syz);
}

std::vector<ModuleVector> preimage_of_span(const PolyMatrix& A, const std::vector<ModuleVector>& U)
{
    const PolyRing& ring = A.ring();
    std::vector<ModuleVector> block;
    for (int c = 0; c < A.cols(); ++c)
        block.push_back(A.column(c));
    for (const ModuleVector& u : U) {
        if (u.rank() != A.rows())
            throw precondition_error("span vector rank mismatch");
        block.push_back(u);
    }
    std::vector<ModuleVector> syz = syzygies(ring, block, A.rows());
    // first A.cols() coordinates of each syzygy generate the preimage
    std::vector<ModuleVector> out;
    for (const ModuleVector& s : syz) {
        std::vector<Polynomial> head(s.coords().begin(), s.coords().begin() + A.cols());
        ModuleVector v(ring, std::move(head));
        if (!v.is_zero())
            out.push_back(std::move(v));
    }
    return out;
}

FPModule subquotient(const PolyRing& ring, int ambient_rank, const std::vector<ModuleVector>& V,
                     const std::vector<ModuleVector>& W)
{
    // normalize both generator lists so presentations stay small
    ModuleGroebnerBasis vg = module_gb(V, FreeModule(ring, ambient_rank));
    ModuleGroebnerBasis wg = module_gb(W, FreeModule(ring, ambient_rank));
    const std::vector<ModuleVector>& vgen = vg.elements();
    const std::vector<ModuleVector>& wgen = wg.elements();

    std::vector<ModuleVector> block = vgen;
    block.insert(block.end(), wgen.begin(), wgen.end());
    std::vector<ModuleVector> syz = syzygies(ring, block, ambient_rank);
    std::vector<ModuleVector> rels;
    for (const ModuleVector& s : syz) {
        std::vector<Polynomial> head(s.coords().begin(),
                                     s.coords().begin() + static_cast<long>(vgen.size()));
        ModuleVector c(ring, std::move(head));
        if (!c.is_zero())
            rels.push_back(std::move(c));
    }
    return FPModule(ring, static_cast<int>(vgen.size()), std::move(rels));
}

FPModule kernel(const ModuleMap& phi)
{
    const PolyRing& ring = phi.matrix().ring();
    std::vector<ModuleVector> V = preimage_of_span(phi.matrix(), phi.target().relations());
    return subquotient(ring, phi.source().ambient_rank(), V, phi.source().relations());
}

FPModule colon_submodule(const FPModule& M, const std::vector<ModuleVector>& N_gens,
                         const Polynomial& f)
{
    if (f.is_zero())
        throw precondition_error("colon by the zero element");
    const PolyRing& ring = M.ring();
    const int n = M.ambient_rank();
    std::vector<ModuleVector> U = M.relations();
    for (const ModuleVector& v : N_gens) {
        if (v.rank() != n)
            throw precondition_error("colon submodule generator rank mismatch");
        U.push_back(v);
    }
    PolyMatrix fid(ring, n, n);
    for (int i = 0; i < n; ++i)
        fid.set(i, i, f);
    std::vector<ModuleVector> V = preimage_of_span(fid, U);
    return subquotient(ring, n, V, U);
}

bool is_zero(const FPModule& N)
{
    auto& d = *N.d_;
    std::call_once(d.zero_once, [&] {
        GBCtx ctx(d.ring);
        const auto& gb = d.relation_gb();
        d.zero = true;
        for (int i = 0; i < d.ambient_rank && d.zero; ++i) {
            Vec e;
            e.t.push_back(detail::VTerm{i, Monomial::one(d.ring.nvars()), d.ring.field().one()});
            if (!detail::gb_member(ctx, e, gb))
                d.zero = false;
        }
    });
    return d.zero;
}

Ideal annihilator(const FPModule& N)
{
    auto& d = *N.d_;
    std::call_once(d.ann_once, [&] {
        const PolyRing& ring = d.ring;
        if (d.ambient_rank == 0) {
            d.ann = Ideal::unit(ring);
            return;
        }
        GBCtx ctx(ring);
        std::optional<Ideal> acc;
        for (int i = 0; i < d.ambient_rank; ++i) {
            // (relation span : e_i) from the first coordinate of syzygies
            std::vector<Vec> block;
            Vec e;
            e.t.push_back(detail::VTerm{i, Monomial::one(ring.nvars()), ring.field().one()});
            block.push_back(std::move(e));
            for (const ModuleVector& v : d.relations)
                block.push_back(detail::vec_from_coords(ctx, v.coords()));
            std::vector<Vec> syz = detail::syzygies(ctx, block, d.ambient_rank);
            std::vector<Polynomial> gens;
            for (const Vec& s : syz) {
                std::vector<Polynomial> coords =
                    detail::vec_to_coords(ring, s, static_cast<int>(block.size()));
                if (!coords[0].is_zero())
                    gens.push_back(coords[0]);
            }
            Ideal qi(ring, std::move(gens));
            acc = acc ? ideal_intersect(*acc, qi) : qi;
            if (acc->is_zero_ideal())
                break;
        }
        d.ann = std::move(*acc);
    });
    return *d.ann;
}

FPModule quotient_by_elements(const FPModule& M, const std::vector<Polynomial>& xs)
{
    const PolyRing& ring = M.ring();
    const int n = M.ambient_rank();
    std::vector<ModuleVector> rels = M.relations();
    for (const Polynomial& x : xs) {
        if (!(x.ring() == ring))
            throw precondition_error("quotient element from a different ring");
        if (x.is_zero())
            continue;
        for (int i = 0; i < n; ++i)
            rels.push_back(ModuleVector::unit(ring, n, i).scale(x));
    }
    return FPModule(ring, n, std::move(rels));
}

FPModule direct_sum(const FPModule& M, const FPModule& N)
{
    if (!(M.ring() == N.ring()))
        throw precondition_error("direct sum across different rings");
    const PolyRing& ring = M.ring();
    const int nm = M.ambient_rank(), nn = N.ambient_rank();
    std::vector<ModuleVector> rels;
    for (const ModuleVector& v : M.relations()) {
        std::vector<Polynomial> c = v.coords();
        c.resize(static_cast<size_t>(nm + nn), Polynomial::zero(ring));
        rels.push_back(ModuleVector(ring, std::move(c)));
    }
    for (const ModuleVector& v : N.relations()) {
        std::vector<Polynomial> c(static_cast<size_t>(nm), Polynomial::zero(ring));
        c.insert(c.end(), v.coords().begin(), v.coords().end());
        rels.push_back(ModuleVector(ring, std::move(c)));
    }
    return FPModule(ring, nm + nn, std::move(rels));
}

}  // namespace fgrade
