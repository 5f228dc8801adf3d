#pragma once

#include <memory>
#include <string>
#include <vector>

#include "fgrade/scalar.hpp"

namespace fgrade {

/// Exponent vector of fixed length (one entry per ring variable).
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int32_t> exps);
    static Monomial one(int nvars);
    static Monomial variable(int nvars, int index, int32_t power = 1);

    int nvars() const { return static_cast<int>(e_.size()); }
    int32_t operator[](int i) const { return e_[static_cast<size_t>(i)]; }
    const std::vector<int32_t>& exponents() const { return e_; }
    int degree() const;
    bool is_one() const;

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;       // this | o
    Monomial divide(const Monomial& o) const;    // this / o, requires o | this
    static Monomial lcm(const Monomial& a, const Monomial& b);
    static bool coprime(const Monomial& a, const Monomial& b);

    bool operator==(const Monomial&) const = default;

private:
    std::vector<int32_t> e_;
};

enum class OrderKind { lex, grevlex, grlex };

/// A monomial order: tag plus a variable precedence permutation.
/// precedence[0] is the most significant variable index.
struct MonomialOrder {
    OrderKind kind = OrderKind::grevlex;
    std::vector<int> precedence;

    static MonomialOrder natural(OrderKind kind, int nvars);
    std::string to_string() const;
};

/// Three-way comparison under `order`: -1 (u < v), 0, +1 (u > v).
int mono_cmp(const MonomialOrder& order, const Monomial& u, const Monomial& v);

OrderKind order_kind_from_string(const std::string& s);

/// The ambient polynomial ring: variable names, coefficient field and
/// monomial order. Immutable after construction; cheap shared handle.
class PolyRing {
public:
    PolyRing(std::vector<std::string> vars, Field field, MonomialOrder order);
    PolyRing(std::vector<std::string> vars, Field field, OrderKind kind = OrderKind::grevlex);

    int nvars() const { return static_cast<int>(d_->vars.size()); }
    const std::vector<std::string>& var_names() const { return d_->vars; }
    const std::string& var_name(int i) const { return d_->vars[static_cast<size_t>(i)]; }
    const Field& field() const { return d_->field; }
    const MonomialOrder& order() const { return d_->order; }
    int var_index(const std::string& name) const;  // -1 when absent

    /// Structural equality: same names, field, order.
    bool operator==(const PolyRing& o) const;

    /// New ring with one extra variable appended (used by the auxiliary-
    /// variable constructions); the fresh name never collides.
    PolyRing adjoin_variable(const std::string& hint, MonomialOrder order) const;

private:
    struct Data {
        std::vector<std::string> vars;
        Field field;
        MonomialOrder order;
    };
    std::shared_ptr<const Data> d_;
};

}  // namespace fgrade
