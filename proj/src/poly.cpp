#include "fgrade/poly.hpp"

#include <algorithm>

#include "fgrade/errors.hpp"

namespace fgrade {

Polynomial::Polynomial(PolyRing ring) : ring_(std::move(ring)) {}

Polynomial Polynomial::constant(const PolyRing& ring, const Scalar& c)
{
    return term(ring, Monomial::one(ring.nvars()), c);
}

Polynomial Polynomial::from_int(const PolyRing& ring, long n)
{
    return constant(ring, ring.field().from_int(n));
}

Polynomial Polynomial::variable(const PolyRing& ring, int index)
{
    if (index < 0 || index >= ring.nvars())
        throw precondition_error("variable index out of range");
    return term(ring, Monomial::variable(ring.nvars(), index), ring.field().one());
}

Polynomial Polynomial::term(const PolyRing& ring, Monomial m, Scalar c)
{
    Polynomial p(ring);
    if (m.nvars() != ring.nvars())
        throw precondition_error("monomial does not fit the ring");
    if (!c.is_zero())
        p.terms_.push_back(Term{std::move(m), std::move(c)});
    return p;
}

Polynomial Polynomial::from_terms(const PolyRing& ring, std::vector<Term> terms)
{
    const auto& ord = ring.order();
    const auto& F = ring.field();
    for (const Term& t : terms)
        if (t.mono.nvars() != ring.nvars())
            throw precondition_error("monomial does not fit the ring");
    std::sort(terms.begin(), terms.end(),
              [&](const Term& a, const Term& b) { return mono_cmp(ord, a.mono, b.mono) > 0; });
    Polynomial p(ring);
    for (Term& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff = F.add(p.terms_.back().coeff, t.coeff);
            if (p.terms_.back().coeff.is_zero())
                p.terms_.pop_back();
        } else if (!t.coeff.is_zero()) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

bool Polynomial::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

int Polynomial::degree() const
{
    int d = -1;
    for (const Term& t : terms_)
        d = std::max(d, t.mono.degree());
    return d;
}

const Term& Polynomial::leading_term() const
{
    if (terms_.empty())
        throw internal_error("leading term of zero polynomial");
    return terms_.front();
}

void Polynomial::check_same_ring(const Polynomial& o) const
{
    if (!(ring_ == o.ring_))
        throw precondition_error("polynomial ring mismatch");
}

Polynomial Polynomial::operator+(const Polynomial& o) const
{
    check_same_ring(o);
    const auto& ord = ring_.order();
    const auto& F = ring_.field();
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = mono_cmp(ord, terms_[i].mono, o.terms_[j].mono);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            Scalar s = F.add(terms_[i].coeff, o.terms_[j].coeff);
            if (!s.is_zero())
                r.terms_.push_back(Term{terms_[i].mono, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i)
        r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j)
        r.terms_.push_back(o.terms_[j]);
    return r;
}

Polynomial Polynomial::operator-() const
{
    const auto& F = ring_.field();
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_)
        r.terms_.push_back(Term{t.mono, F.neg(t.coeff)});
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const
{
    return *this + (-o);
}

Polynomial Polynomial::mul_term(const Monomial& m, const Scalar& c) const
{
    if (c.is_zero())
        return Polynomial(ring_);
    const auto& F = ring_.field();
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) {
        Scalar s = F.mul(t.coeff, c);
        if (!s.is_zero())
            r.terms_.push_back(Term{t.mono * m, std::move(s)});
    }
    return r;
}

Polynomial Polynomial::scale(const Scalar& c) const
{
    return mul_term(Monomial::one(ring_.nvars()), c);
}

Polynomial Polynomial::operator*(const Polynomial& o) const
{
    check_same_ring(o);
    const auto& F = ring_.field();
    std::vector<Term> acc;
    acc.reserve(terms_.size() * o.terms_.size());
    for (const Term& a : terms_)
        for (const Term& b : o.terms_)
            acc.push_back(Term{a.mono * b.mono, F.mul(a.coeff, b.coeff)});
    return from_terms(ring_, std::move(acc));
}

Polynomial Polynomial::monic() const
{
    const auto& F = ring_.field();
    return scale(F.inv(leading_term().coeff));
}

Polynomial Polynomial::pow(int e) const
{
    if (e < 0)
        throw precondition_error("negative polynomial power");
    Polynomial r = from_int(ring_, 1);
    for (int i = 0; i < e; ++i)
        r = r * *this;
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const
{
    if (!(ring_ == o.ring_) || terms_.size() != o.terms_.size())
        return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].mono == o.terms_[i].mono && terms_[i].coeff == o.terms_[i].coeff))
            return false;
    return true;
}

std::string Polynomial::to_string() const
{
    if (terms_.empty())
        return "0";
    const auto& F = ring_.field();
    std::string out;
    bool first = true;
    for (const Term& t : terms_) {
        std::string c = F.to_string(t.coeff);
        bool negative = !c.empty() && c[0] == '-';
        std::string abs = negative ? c.substr(1) : c;
        if (first) {
            if (negative)
                out += "-";
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        std::string mono;
        for (int i = 0; i < ring_.nvars(); ++i) {
            int32_t e = t.mono[i];
            if (e == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += ring_.var_name(i);
            if (e > 1)
                mono += "^" + std::to_string(e);
        }
        if (mono.empty()) {
            out += abs;
        } else if (abs == "1") {
            out += mono;
        } else {
            out += abs + "*" + mono;
        }
    }
    return out;
}

}  // namespace fgrade
