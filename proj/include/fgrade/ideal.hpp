#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "fgrade/poly.hpp"

namespace fgrade {

/// Reduced Groebner basis: monic elements, minimal leading terms, tails
/// reduced; unique for the order it was computed under.
class GroebnerBasis {
public:
    GroebnerBasis(std::vector<Polynomial> elements, MonomialOrder order)
        : elements_(std::move(elements)), order_(std::move(order))
    {
    }
    const std::vector<Polynomial>& elements() const { return elements_; }
    const MonomialOrder& order() const { return order_; }
    bool is_unit() const;  // basis == {1}

private:
    std::vector<Polynomial> elements_;
    MonomialOrder order_;
};

/// Ideal handle: generator list plus a lazily computed reduced Groebner
/// basis cache. Copies share the cache; the fill is race-safe (first
/// completed computation wins and all results coincide by uniqueness of the
/// reduced basis).
class Ideal {
public:
    Ideal(PolyRing ring, std::vector<Polynomial> gens);
    static Ideal zero(const PolyRing& ring) { return Ideal(ring, {}); }
    static Ideal unit(const PolyRing& ring);

    const PolyRing& ring() const { return d_->ring; }
    const std::vector<Polynomial>& generators() const { return d_->gens; }
    const GroebnerBasis& groebner() const;
    bool is_zero_ideal() const { return d_->gens.empty(); }
    bool is_unit() const { return groebner().is_unit(); }

private:
    struct Data {
        PolyRing ring;
        std::vector<Polynomial> gens;
        mutable std::once_flag once;
        mutable std::optional<GroebnerBasis> gb;

        Data(PolyRing r, std::vector<Polynomial> g) : ring(std::move(r)), gens(std::move(g)) {}
    };
    std::shared_ptr<Data> d_;
};

/// Reduced Groebner basis of arbitrary generators under an explicit order.
GroebnerBasis buchberger(const PolyRing& ring, const std::vector<Polynomial>& gens,
                         const MonomialOrder& order);

/// Remainder with no term divisible by a leading monomial of G; f minus the
/// result lies in the ideal of G.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G);

bool ideal_member(const Polynomial& f, const Ideal& I);

/// f in sqrt(I), by the auxiliary-variable trick: 1 in I + (1 - t*f).
bool radical_member(const Polynomial& f, const Ideal& I);

/// (I : f) = {g | g*f in I}; f must be nonzero.
Ideal ideal_quotient(const Ideal& I, const Polynomial& f);

/// I cap J via elimination of an auxiliary variable from t*I + (1-t)*J.
Ideal ideal_intersect(const Ideal& I, const Ideal& J);

Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_product(const Ideal& I, const Ideal& J);
bool ideal_contains(const Ideal& I, const Ideal& J);  // J subset of I

/// dim(R/I) via independent variable sets of the leading-term ideal;
/// nullopt when I is the unit ideal (empty variety).
std::optional<int> krull_dim(const Ideal& I);

/// Minimal primes of a monomial ideal, each generated by variables.
/// Rejects non-monomial generators and the unit ideal with a typed error.
std::vector<Ideal> minimal_primes_monomial(const Ideal& I);

}  // namespace fgrade
