#include "fgrade/ring.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "fgrade/errors.hpp"

namespace fgrade {

Monomial::Monomial(std::vector<int32_t> exps) : e_(std::move(exps))
{
    for (int32_t e : e_)
        if (e < 0)
            throw precondition_error("negative exponent in monomial");
}

Monomial Monomial::one(int nvars)
{
    Monomial m;
    m.e_.assign(static_cast<size_t>(nvars), 0);
    return m;
}

Monomial Monomial::variable(int nvars, int index, int32_t power)
{
    Monomial m = one(nvars);
    m.e_[static_cast<size_t>(index)] = power;
    return m;
}

int Monomial::degree() const
{
    int d = 0;
    for (int32_t e : e_)
        d += e;
    return d;
}

bool Monomial::is_one() const
{
    return std::all_of(e_.begin(), e_.end(), [](int32_t e) { return e == 0; });
}

Monomial Monomial::operator*(const Monomial& o) const
{
    if (e_.size() != o.e_.size())
        throw precondition_error("monomial length mismatch");
    Monomial r;
    r.e_.resize(e_.size());
    for (size_t i = 0; i < e_.size(); ++i)
        r.e_[i] = e_[i] + o.e_[i];
    return r;
}

bool Monomial::divides(const Monomial& o) const
{
    if (e_.size() != o.e_.size())
        throw precondition_error("monomial length mismatch");
    for (size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > o.e_[i])
            return false;
    return true;
}

Monomial Monomial::divide(const Monomial& o) const
{
    if (!o.divides(*this))
        throw internal_error("inexact monomial division");
    Monomial r;
    r.e_.resize(e_.size());
    for (size_t i = 0; i < e_.size(); ++i)
        r.e_[i] = e_[i] - o.e_[i];
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b)
{
    if (a.e_.size() != b.e_.size())
        throw precondition_error("monomial length mismatch");
    Monomial r;
    r.e_.resize(a.e_.size());
    for (size_t i = 0; i < a.e_.size(); ++i)
        r.e_[i] = std::max(a.e_[i], b.e_[i]);
    return r;
}

bool Monomial::coprime(const Monomial& a, const Monomial& b)
{
    if (a.e_.size() != b.e_.size())
        throw precondition_error("monomial length mismatch");
    for (size_t i = 0; i < a.e_.size(); ++i)
        if (a.e_[i] > 0 && b.e_[i] > 0)
            return false;
    return true;
}

MonomialOrder MonomialOrder::natural(OrderKind kind, int nvars)
{
    MonomialOrder o;
    o.kind = kind;
    o.precedence.resize(static_cast<size_t>(nvars));
    std::iota(o.precedence.begin(), o.precedence.end(), 0);
    return o;
}

std::string MonomialOrder::to_string() const
{
    switch (kind) {
        case OrderKind::lex: return "lex";
        case OrderKind::grevlex: return "grevlex";
        case OrderKind::grlex: return "grlex";
    }
    return "?";
}

OrderKind order_kind_from_string(const std::string& s)
{
    if (s == "lex")
        return OrderKind::lex;
    if (s == "grevlex")
        return OrderKind::grevlex;
    if (s == "grlex" || s == "graded-lex")
        return OrderKind::grlex;
    throw precondition_error("unknown monomial order '" + s + "'");
}

int mono_cmp(const MonomialOrder& order, const Monomial& u, const Monomial& v)
{
    if (u.nvars() != v.nvars())
        throw precondition_error("monomial length mismatch in comparison");
    const auto& p = order.precedence;
    if (static_cast<int>(p.size()) != u.nvars())
        throw precondition_error("order precedence does not match variable count");

    if (order.kind != OrderKind::lex) {
        int du = u.degree(), dv = v.degree();
        if (du != dv)
            return du < dv ? -1 : 1;
    }
    if (order.kind == OrderKind::grevlex) {
        // equal degree: last nonzero difference in precedence order, negative wins
        for (size_t k = p.size(); k-- > 0;) {
            int32_t d = u[p[k]] - v[p[k]];
            if (d != 0)
                return d < 0 ? 1 : -1;
        }
        return 0;
    }
    // lex tail (also the grlex tie-break)
    for (int idx : p) {
        int32_t d = u[idx] - v[idx];
        if (d != 0)
            return d > 0 ? 1 : -1;
    }
    return 0;
}

PolyRing::PolyRing(std::vector<std::string> vars, Field field, MonomialOrder order)
{
    std::set<std::string> seen(vars.begin(), vars.end());
    if (seen.size() != vars.size())
        throw precondition_error("duplicate variable names in ring");
    if (vars.empty())
        throw precondition_error("ring needs at least one variable");
    if (order.precedence.size() != vars.size())
        throw precondition_error("order precedence does not match variable count");
    std::vector<int> sorted = order.precedence;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != static_cast<int>(i))
            throw precondition_error("order precedence is not a permutation");
    d_ = std::make_shared<const Data>(Data{std::move(vars), field, std::move(order)});
}

PolyRing::PolyRing(std::vector<std::string> vars, Field field, OrderKind kind)
    : PolyRing(vars, field, MonomialOrder::natural(kind, static_cast<int>(vars.size())))
{
}

int PolyRing::var_index(const std::string& name) const
{
    for (size_t i = 0; i < d_->vars.size(); ++i)
        if (d_->vars[i] == name)
            return static_cast<int>(i);
    return -1;
}

bool PolyRing::operator==(const PolyRing& o) const
{
    if (d_ == o.d_)
        return true;
    return d_->vars == o.d_->vars && d_->field == o.d_->field &&
           d_->order.kind == o.d_->order.kind && d_->order.precedence == o.d_->order.precedence;
}

PolyRing PolyRing::adjoin_variable(const std::string& hint, MonomialOrder order) const
{
    std::vector<std::string> vars = d_->vars;
    std::string name = hint;
    while (var_index(name) >= 0 || name.empty())
        name += "_";
    vars.push_back(name);
    return PolyRing(std::move(vars), d_->field, std::move(order));
}

}  // namespace fgrade
