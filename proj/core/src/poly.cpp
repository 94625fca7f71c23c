#include "syang/poly.hpp"

#include <algorithm>
#include <sstream>

namespace syang {

Poly::Poly(Field f, std::vector<Fe> coeffs) : field_(f), c_(std::move(coeffs))
{
    for (const auto& c : c_)
        if (c.field_data() != f.data()) throw FieldMismatch("polynomial coefficient field");
    normalize();
}

Poly Poly::constant(const Fe& c) { return Poly(c.field(), {c}); }

Poly Poly::monomial(const Fe& c, std::size_t deg)
{
    std::vector<Fe> v(deg + 1, zero_like(c));
    v[deg] = c;
    return Poly(c.field(), std::move(v));
}

Poly Poly::linear_plus(const Fe& c) { return Poly(c.field(), {c, one_like(c)}); }

void Poly::normalize()
{
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Fe Poly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }

Fe Poly::leading() const { return c_.empty() ? field_.zero() : c_.back(); }

Fe Poly::operator()(const Fe& x) const
{
    Fe r = field_.zero();
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

Poly& Poly::operator+=(const Poly& o)
{
    if (field_ != o.field_) throw FieldMismatch("polynomial addition across fields");
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_.zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& o)
{
    if (field_ != o.field_) throw FieldMismatch("polynomial subtraction across fields");
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_.zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
}

Poly& Poly::operator*=(const Poly& o)
{
    if (field_ != o.field_) throw FieldMismatch("polynomial product across fields");
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<Fe> r(c_.size() + o.c_.size() - 1, field_.zero());
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    c_ = std::move(r);
    normalize();
    return *this;
}

Poly& Poly::operator*=(const Fe& s)
{
    for (auto& c : c_) c *= s;
    normalize();
    return *this;
}

Poly Poly::operator-() const
{
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly Poly::monic() const
{
    if (c_.empty()) return *this;
    return *this * c_.back().inverse();
}

std::string Poly::to_string(const std::string& var) const
{
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        const bool unit = c_[i].is_one();
        if (i == 0 || !unit) {
            const bool paren = c_[i].field_data()->m > 1 && !c_[i].in_prime_field();
            os << (paren ? "(" : "") << c_[i] << (paren ? ")" : "");
        }
        if (i > 0) {
            if (!unit) os << '*';
            os << var;
            if (i > 1) os << '^' << i;
        }
    }
    return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b)
{
    if (b.is_zero()) throw NotInvertible("polynomial division by zero");
    if (a.field() != b.field()) throw FieldMismatch("polynomial division across fields");
    const Field f = a.field();
    std::vector<Fe> rem = a.coeffs();
    const int db = b.degree();
    const Fe lead_inv = b.leading().inverse();
    std::vector<Fe> quo(std::max(0, a.degree() - db + 1), f.zero());
    for (int i = a.degree(); i >= db; --i) {
        const Fe c = rem[i] * lead_inv;
        if (c.is_zero()) continue;
        quo[i - db] = c;
        for (int j = 0; j <= db; ++j) rem[i - db + j] -= c * b.coeffs()[j];
    }
    return {Poly(f, std::move(quo)), Poly(f, std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b)
{
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

Poly poly_from_roots(Field f, const std::vector<Fe>& roots)
{
    Poly r = Poly::constant(f.one());
    for (const auto& c : roots) r *= Poly::linear_plus(c);
    return r;
}

std::optional<std::vector<Fe>> roots_in_field(const Poly& f)
{
    if (f.is_zero()) return std::nullopt;
    std::vector<Fe> roots;
    Poly rest = f;
    for (const Fe& x : f.field().elements()) {
        // divide out (u - x) as often as it divides
        const Poly lin(f.field(), {-x, f.field().one()});
        while (rest.degree() > 0 && rest(x).is_zero()) {
            rest = divmod(rest, lin).first;
            roots.push_back(x);
        }
    }
    if (rest.degree() > 0) return std::nullopt;
    return roots;
}

Poly unit_inverse(const Poly& x)
{
    if (x.degree() != 0) throw NotInvertible("polynomial is not a unit");
    return Poly::constant(x.coeffs()[0].inverse());
}

}  // namespace syang
