#include "fgrade/complex.hpp"

#include <map>
#include <optional>

#include "fgrade/errors.hpp"

namespace fgrade {

ChainComplex::ChainComplex(PolyRing ring, int lo, std::vector<int> multiplicities,
                           std::vector<PolyMatrix> differentials, FPModule coefficients)
    : ring_(std::move(ring)), lo_(lo), mults_(std::move(multiplicities)),
      diffs_(std::move(differentials)), coeff_(std::move(coefficients))
{
    if (mults_.empty())
        throw precondition_error("chain complex needs a nonempty window");
    if (diffs_.size() + 1 != mults_.size())
        throw precondition_error("chain complex differential count mismatch");
    for (size_t k = 0; k < diffs_.size(); ++k) {
        if (diffs_[k].rows() != mults_[k] || diffs_[k].cols() != mults_[k + 1])
            throw precondition_error("chain complex differential shape mismatch");
    }
    for (size_t k = 0; k + 1 < diffs_.size(); ++k)
        if (!(diffs_[k] * diffs_[k + 1]).is_zero())
            throw internal_error("d o d != 0 in chain complex");
}

int ChainComplex::multiplicity(int i) const
{
    if (i < lo() || i > hi())
        throw precondition_error("chain complex index outside window");
    return mults_[static_cast<size_t>(i - lo_)];
}

int ChainComplex::rank(int i) const
{
    return multiplicity(i) * coeff_.ambient_rank();
}

const PolyMatrix& ChainComplex::differential(int i) const
{
    if (i <= lo() || i > hi())
        throw precondition_error("no differential at this index");
    return diffs_[static_cast<size_t>(i - lo_ - 1)];
}

ChainComplex free_resolution(const FPModule& N, int length)
{
    if (length < 0)
        throw precondition_error("negative resolution length");
    const PolyRing& ring = N.ring();
    std::vector<int> mults{N.ambient_rank()};
    std::vector<PolyMatrix> diffs;
    if (length >= 1) {
        PolyMatrix d = N.presentation_matrix();
        mults.push_back(d.cols());
        diffs.push_back(d);
        for (int k = 2; k <= length; ++k) {
            const PolyMatrix& prev = diffs.back();
            PolyMatrix next = prev.cols() == 0 ? PolyMatrix(ring, 0, 0) : syzygies(prev);
            mults.push_back(next.cols());
            diffs.push_back(std::move(next));
        }
    }
    return ChainComplex(ring, 0, std::move(mults), std::move(diffs), FPModule::free(ring, 1));
}

namespace {

std::vector<std::vector<int>> subsets_of_size(int n, int k)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    // lexicographic enumeration
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v < n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace

ChainComplex koszul_complex(const std::vector<Polynomial>& ys, const FPModule& M)
{
    if (ys.empty())
        throw precondition_error("Koszul complex needs at least one element");
    const PolyRing& ring = M.ring();
    for (const Polynomial& y : ys)
        if (!(y.ring() == ring))
            throw precondition_error("Koszul element from a different ring");
    const int n = static_cast<int>(ys.size());

    std::vector<std::vector<std::vector<int>>> bases;
    std::vector<int> mults;
    for (int i = 0; i <= n; ++i) {
        bases.push_back(subsets_of_size(n, i));
        mults.push_back(static_cast<int>(bases.back().size()));
    }

    std::vector<PolyMatrix> diffs;
    for (int i = 1; i <= n; ++i) {
        std::map<std::vector<int>, int> row_of;
        for (size_t r = 0; r < bases[static_cast<size_t>(i - 1)].size(); ++r)
            row_of[bases[static_cast<size_t>(i - 1)][r]] = static_cast<int>(r);
        PolyMatrix d(ring, mults[static_cast<size_t>(i - 1)], mults[static_cast<size_t>(i)]);
        for (size_t c = 0; c < bases[static_cast<size_t>(i)].size(); ++c) {
            const std::vector<int>& S = bases[static_cast<size_t>(i)][c];
            for (size_t k = 0; k < S.size(); ++k) {
                std::vector<int> face = S;
                face.erase(face.begin() + static_cast<long>(k));
                Polynomial entry = ys[static_cast<size_t>(S[k])];
                if (k % 2 == 1)
                    entry = -entry;
                d.set(row_of.at(face), static_cast<int>(c), std::move(entry));
            }
        }
        diffs.push_back(std::move(d));
    }
    return ChainComplex(ring, 0, std::move(mults), std::move(diffs), M);
}

namespace {

// Kronecker lift of d over blocks of size inner: (d tensor Id_inner)
PolyMatrix kron_lift(const PolyMatrix& d, int inner)
{
    const PolyRing& ring = d.ring();
    PolyMatrix L(ring, d.rows() * inner, d.cols() * inner);
    for (int r = 0; r < d.rows(); ++r)
        for (int c = 0; c < d.cols(); ++c) {
            const Polynomial& e = d.at(r, c);
            if (e.is_zero())
                continue;
            for (int a = 0; a < inner; ++a)
                L.set(r * inner + a, c * inner + a, e);
        }
    return L;
}

// relations of coeff^mult inside R^{mult * n_C}
std::vector<ModuleVector> coefficient_block_relations(const FPModule& coeff, int mult)
{
    const PolyRing& ring = coeff.ring();
    const int nc = coeff.ambient_rank();
    std::vector<ModuleVector> out;
    for (int s = 0; s < mult; ++s)
        for (const ModuleVector& rel : coeff.relations()) {
            std::vector<Polynomial> coords(static_cast<size_t>(mult * nc), Polynomial::zero(ring));
            for (int a = 0; a < nc; ++a)
                coords[static_cast<size_t>(s * nc + a)] = rel[a];
            out.push_back(ModuleVector(ring, std::move(coords)));
        }
    return out;
}

// ker(d_out tensor coeff) / (im(d_in tensor coeff) + coefficient relations),
// a subquotient of coeff^{mid}; null matrices mean zero maps.
FPModule homology_span(const PolyRing& ring, const FPModule& coeff, int mid,
                       const PolyMatrix* d_out, const PolyMatrix* d_in)
{
    const int nc = coeff.ambient_rank();
    const int ambient = mid * nc;

    std::vector<ModuleVector> V;
    if (d_out == nullptr || d_out->rows() == 0) {
        for (int i = 0; i < ambient; ++i)
            V.push_back(ModuleVector::unit(ring, ambient, i));
    } else {
        PolyMatrix L = kron_lift(*d_out, nc);
        V = preimage_of_span(L, coefficient_block_relations(coeff, d_out->rows()));
    }

    std::vector<ModuleVector> W = coefficient_block_relations(coeff, mid);
    if (d_in != nullptr && d_in->cols() > 0) {
        PolyMatrix L = kron_lift(*d_in, nc);
        for (int c = 0; c < L.cols(); ++c)
            W.push_back(L.column(c));
    }
    return subquotient(ring, ambient, V, W);
}

}  // namespace

FPModule homology_at(const ChainComplex& C, int i)
{
    if (i < C.lo() || i > C.hi())
        throw precondition_error("homology index outside complex window");
    const PolyMatrix* d_out = i > C.lo() ? &C.differential(i) : nullptr;
    const PolyMatrix* d_in = i < C.hi() ? &C.differential(i + 1) : nullptr;
    return homology_span(C.ring(), C.coefficients(), C.multiplicity(i), d_out, d_in);
}

FPModule hom_cohomology(const ChainComplex& F, const FPModule& M, int r)
{
    if (r < F.lo() || r > F.hi())
        throw precondition_error("cohomology index outside complex window");
    if (F.coefficients().ambient_rank() != 1 || !F.coefficients().relations().empty())
        throw precondition_error("Hom cohomology needs a plain free complex");
    if (!(F.ring() == M.ring()))
        throw precondition_error("Hom cohomology arguments from different rings");
    std::optional<PolyMatrix> delta_out, delta_in;
    if (r < F.hi())
        delta_out = F.differential(r + 1).transpose();
    if (r > F.lo())
        delta_in = F.differential(r).transpose();
    return homology_span(F.ring(), M, F.multiplicity(r), delta_out ? &*delta_out : nullptr,
                         delta_in ? &*delta_in : nullptr);
}

ExtModule ext_module(int r, const Ideal& b, const FPModule& M)
{
    if (r < 0)
        throw precondition_error("negative Ext degree");
    if (!(b.ring() == M.ring()))
        throw precondition_error("Ext arguments from different rings");
    FPModule rb = FPModule::cyclic(M.ring(), b.generators());
    ChainComplex F = free_resolution(rb, r + 1);
    return ExtModule{r, b, M, hom_cohomology(F, M, r)};
}

}  // namespace fgrade
