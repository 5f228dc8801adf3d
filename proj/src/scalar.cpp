#include "fgrade/scalar.hpp"

#include "fgrade/errors.hpp"

namespace fgrade {

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m)
{
    return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t m)
{
    uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1)
            r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

// extended euclid on int64; p < 2^62 so no overflow
uint64_t invmod(uint64_t a, uint64_t p)
{
    int64_t t = 0, newt = 1;
    int64_t r = static_cast<int64_t>(p), newr = static_cast<int64_t>(a % p);
    while (newr != 0) {
        int64_t q = r / newr;
        t -= q * newt;
        std::swap(t, newt);
        r -= q * newr;
        std::swap(r, newr);
    }
    if (r != 1)
        throw precondition_error("division by zero in F_p");
    if (t < 0)
        t += static_cast<int64_t>(p);
    return static_cast<uint64_t>(t);
}

}  // namespace

bool is_prime_u64(uint64_t n)
{
    if (n < 2)
        return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0)
            return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // deterministic witness set for 64-bit integers
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

Field Field::rationals()
{
    return Field(FieldKind::rationals, 0);
}

Field Field::prime(uint64_t p)
{
    if (p >= (1ull << 62))
        throw precondition_error("prime characteristic too large");
    if (!is_prime_u64(p))
        throw precondition_error("field characteristic " + std::to_string(p) + " is not prime");
    return Field(FieldKind::prime, p);
}

std::string Field::to_string() const
{
    return kind_ == FieldKind::rationals ? "QQ" : "Fp(" + std::to_string(p_) + ")";
}

Scalar Field::zero() const
{
    return kind_ == FieldKind::rationals ? Scalar(mpq_class(0)) : Scalar(uint64_t{0});
}

Scalar Field::one() const
{
    return kind_ == FieldKind::rationals ? Scalar(mpq_class(1)) : Scalar(uint64_t{1});
}

Scalar Field::from_int(long n) const
{
    if (kind_ == FieldKind::rationals)
        return Scalar(mpq_class(n));
    int64_t r = n % static_cast<int64_t>(p_);
    if (r < 0)
        r += static_cast<int64_t>(p_);
    return Scalar(static_cast<uint64_t>(r));
}

Scalar Field::from_fraction(long num, long den) const
{
    if (den == 0)
        throw precondition_error("zero denominator in scalar literal");
    if (kind_ == FieldKind::rationals) {
        mpq_class q(num, den);
        q.canonicalize();
        return Scalar(std::move(q));
    }
    return div(from_int(num), from_int(den));
}

Scalar Field::from_mpq(const mpq_class& q) const
{
    if (kind_ != FieldKind::rationals)
        throw precondition_error("rational scalar in a prime field");
    mpq_class c = q;
    c.canonicalize();
    return Scalar(std::move(c));
}

Scalar Field::add(const Scalar& a, const Scalar& b) const
{
    if (kind_ == FieldKind::rationals)
        return Scalar(mpq_class(a.rational() + b.rational()));
    uint64_t s = a.residue() + b.residue();
    if (s >= p_)
        s -= p_;
    return Scalar(s);
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const
{
    if (kind_ == FieldKind::rationals)
        return Scalar(mpq_class(a.rational() - b.rational()));
    uint64_t s = a.residue() + p_ - b.residue();
    if (s >= p_)
        s -= p_;
    return Scalar(s);
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const
{
    if (kind_ == FieldKind::rationals)
        return Scalar(mpq_class(a.rational() * b.rational()));
    return Scalar(mulmod(a.residue(), b.residue(), p_));
}

Scalar Field::neg(const Scalar& a) const
{
    if (kind_ == FieldKind::rationals)
        return Scalar(mpq_class(-a.rational()));
    return a.residue() == 0 ? a : Scalar(p_ - a.residue());
}

Scalar Field::inv(const Scalar& a) const
{
    if (a.is_zero())
        throw precondition_error("inverse of zero scalar");
    if (kind_ == FieldKind::rationals)
        return Scalar(mpq_class(1 / a.rational()));
    return Scalar(invmod(a.residue(), p_));
}

Scalar Field::div(const Scalar& a, const Scalar& b) const
{
    return mul(a, inv(b));
}

std::string Field::to_string(const Scalar& a) const
{
    if (kind_ == FieldKind::rationals)
        return a.rational().get_str();
    return std::to_string(a.residue());
}

bool Scalar::is_zero() const
{
    if (std::holds_alternative<mpq_class>(v_))
        return std::get<mpq_class>(v_) == 0;
    return std::get<uint64_t>(v_) == 0;
}

bool Scalar::is_one() const
{
    if (std::holds_alternative<mpq_class>(v_))
        return std::get<mpq_class>(v_) == 1;
    return std::get<uint64_t>(v_) == 1;
}

bool Scalar::operator==(const Scalar& o) const
{
    if (v_.index() != o.v_.index())
        return false;
    if (std::holds_alternative<mpq_class>(v_))
        return std::get<mpq_class>(v_) == std::get<mpq_class>(o.v_);
    return std::get<uint64_t>(v_) == std::get<uint64_t>(o.v_);
}

}  // namespace fgrade
