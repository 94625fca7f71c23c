#pragma once

#include "syang/field.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace syang {

/// Univariate polynomial over F_q in the variable u, stored low degree first.
/// Canonical: no trailing zero coefficients; the zero polynomial is empty.
class Poly {
public:
    static constexpr int kZeroDegree = -1;

    Poly() = default;
    explicit Poly(Field f) : field_(f) {}
    Poly(Field f, std::vector<Fe> coeffs);

    static Poly constant(const Fe& c);
    static Poly monomial(const Fe& c, std::size_t deg);
    /// u + c  (note the sign: the root is -c).
    static Poly linear_plus(const Fe& c);

    Field field() const { return field_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
    const std::vector<Fe>& coeffs() const { return c_; }
    /// Coefficient of u^i, zero beyond the degree.
    Fe coeff(std::size_t i) const;
    Fe leading() const;

    Fe operator()(const Fe& x) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Fe& s);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    friend Poly operator*(Poly a, const Fe& s) { return a *= s; }
    friend Poly operator*(const Fe& s, Poly a) { return a *= s; }
    Poly operator-() const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly monic() const;
    std::string to_string(const std::string& var = "u") const;

private:
    void normalize();
    Field field_;
    std::vector<Fe> c_;
};

/// Quotient and remainder; throws NotInvertible for a zero divisor.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Monic gcd (zero if both are zero).
Poly gcd(const Poly& a, const Poly& b);

/// prod (u + r) over the multiset.
Poly poly_from_roots(Field f, const std::vector<Fe>& roots);

/// All roots in F_q with multiplicity, sorted by encoding.  Returns nullopt if the
/// polynomial does not split over F_q (or is zero).
std::optional<std::vector<Fe>> roots_in_field(const Poly& f);

// Ring hooks (polynomials serve as series coefficients in the evaluation checks).
inline Poly zero_like(const Poly& x) { return Poly(x.field()); }
inline Poly one_like(const Poly& x) { return Poly::constant(x.field().one()); }
inline bool is_zero(const Poly& x) { return x.is_zero(); }
Poly unit_inverse(const Poly& x);

}  // namespace syang
