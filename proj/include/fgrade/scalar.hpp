#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace fgrade {

enum class FieldKind { rationals, prime };

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(uint64_t n);

class Scalar;

/// Coefficient field descriptor: the exact rationals, or F_p for a
/// machine-word prime p. All scalar arithmetic is mediated by the field so
/// the representation invariants (lowest terms, residues in [0,p)) live in
/// one place.
class Field {
public:
    static Field rationals();
    static Field prime(uint64_t p);  // rejects non-prime p

    FieldKind kind() const { return kind_; }
    uint64_t characteristic() const { return p_; }  // 0 for the rationals
    bool operator==(const Field&) const = default;
    std::string to_string() const;

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long n) const;
    Scalar from_fraction(long num, long den) const;       // den != 0
    Scalar from_mpq(const mpq_class& q) const;            // rationals only

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar inv(const Scalar& a) const;  // a != 0
    Scalar div(const Scalar& a, const Scalar& b) const;

    std::string to_string(const Scalar& a) const;

private:
    Field(FieldKind k, uint64_t p) : kind_(k), p_(p) {}
    FieldKind kind_;
    uint64_t p_;
};

/// A field element. Dumb value holder; interpret through the owning Field.
class Scalar {
public:
    Scalar() : v_(mpq_class(0)) {}

    bool is_zero() const;
    bool is_one() const;
    bool operator==(const Scalar&) const;

    const mpq_class& rational() const { return std::get<mpq_class>(v_); }
    uint64_t residue() const { return std::get<uint64_t>(v_); }

private:
    friend class Field;
    explicit Scalar(mpq_class q) : v_(std::move(q)) {}
    explicit Scalar(uint64_t r) : v_(r) {}
    std::variant<mpq_class, uint64_t> v_;
};

}  // namespace fgrade
