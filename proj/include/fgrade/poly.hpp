#pragma once

#include <string>
#include <vector>

#include "fgrade/ring.hpp"

namespace fgrade {

struct Term {
    Monomial mono;
    Scalar coeff;
};

/// Sparse multivariate polynomial in canonical form: terms strictly
/// descending in the ring's order, no zero coefficients. Zero is the empty
/// term list. Immutable value type.
class Polynomial {
public:
    explicit Polynomial(PolyRing ring);  // zero
    static Polynomial zero(const PolyRing& ring) { return Polynomial(ring); }
    static Polynomial constant(const PolyRing& ring, const Scalar& c);
    static Polynomial from_int(const PolyRing& ring, long n);
    static Polynomial variable(const PolyRing& ring, int index);
    static Polynomial term(const PolyRing& ring, Monomial m, Scalar c);
    /// Normalizes an arbitrary term list (sorts, merges, drops zeros).
    static Polynomial from_terms(const PolyRing& ring, std::vector<Term> terms);

    const PolyRing& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_term() const { return terms_.size() == 1; }
    /// Total degree; -1 for the zero polynomial (standing in for -infinity).
    int degree() const;
    const Term& leading_term() const;  // requires nonzero

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial mul_term(const Monomial& m, const Scalar& c) const;
    Polynomial scale(const Scalar& c) const;
    Polynomial monic() const;  // requires nonzero
    Polynomial pow(int e) const;

    bool operator==(const Polynomial& o) const;

    std::string to_string() const;

private:
    void check_same_ring(const Polynomial& o) const;
    PolyRing ring_;
    std::vector<Term> terms_;
};

/// Parses the CLI polynomial syntax (`+ - * ^`, integer and a/b literals,
/// explicit `*`, variables declared by the ring). Throws parse_error.
Polynomial parse_polynomial(const PolyRing& ring, const std::string& text);

}  // namespace fgrade
