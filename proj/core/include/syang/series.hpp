#pragma once

// Truncated series c_0 + c_1 u^-1 + ... + c_N u^-N over a (possibly
// noncommutative) coefficient ring R.
//
// R must provide +, -, * , unary -, ==, right multiplication by Fe, and the
// ADL hooks zero_like / one_like / is_zero / unit_inverse.  The truncation
// order is always explicit; nothing is implied beyond c_N.

#include "syang/field.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace syang {

template <class R>
class Series {
public:
    Series() = default;
    explicit Series(std::vector<R> coeffs) : c_(std::move(coeffs))
    {
        if (c_.empty()) throw std::invalid_argument("series needs at least c_0");
    }

    /// c0 followed by N zeros.
    static Series constant(const R& c0, std::size_t N)
    {
        std::vector<R> v(N + 1, zero_like(c0));
        v[0] = c0;
        return Series(std::move(v));
    }
    static Series one(const R& like, std::size_t N) { return constant(one_like(like), N); }

    std::size_t order() const { return c_.size() - 1; }
    bool empty() const { return c_.empty(); }
    const R& operator[](std::size_t r) const { return c_.at(r); }
    R& operator[](std::size_t r) { return c_.at(r); }
    const std::vector<R>& coeffs() const { return c_; }

    Series truncated(std::size_t N) const
    {
        if (N > order()) throw std::out_of_range("series not known to that order");
        return Series(std::vector<R>(c_.begin(), c_.begin() + N + 1));
    }

    /// Pad with zeros up to order N (only meaningful for polynomial tails).
    Series padded(std::size_t N) const
    {
        Series r = *this;
        while (r.c_.size() < N + 1) r.c_.push_back(zero_like(c_[0]));
        return r;
    }

    Series& operator+=(const Series& o)
    {
        const std::size_t n = std::min(order(), o.order());
        c_.resize(n + 1, c_[0]);
        for (std::size_t i = 0; i <= n; ++i) c_[i] = c_[i] + o.c_[i];
        return *this;
    }
    Series& operator-=(const Series& o)
    {
        const std::size_t n = std::min(order(), o.order());
        c_.resize(n + 1, c_[0]);
        for (std::size_t i = 0; i <= n; ++i) c_[i] = c_[i] - o.c_[i];
        return *this;
    }
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    Series operator-() const
    {
        Series r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend Series operator*(Series a, const Fe& s)
    {
        for (auto& x : a.c_) x = x * s;
        return a;
    }

    /// Product at the common order.
    friend Series operator*(const Series& a, const Series& b)
    {
        return mul(a, b, std::min(a.order(), b.order()));
    }

    friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

private:
    std::vector<R> c_;
};

/// Cauchy product truncated at N; left factors stay on the left.
template <class R>
Series<R> mul(const Series<R>& a, const Series<R>& b, std::size_t N)
{
    if (N > a.order() || N > b.order()) throw std::out_of_range("series_mul beyond known order");
    std::vector<R> out;
    out.reserve(N + 1);
    for (std::size_t n = 0; n <= N; ++n) {
        std::optional<R> acc;
        for (std::size_t t = 0; t <= n; ++t) {
            if (is_zero(a[t]) || is_zero(b[n - t])) continue;
            R term = a[t] * b[n - t];
            if (acc)
                *acc = *acc + term;
            else
                acc = std::move(term);
        }
        out.push_back(acc ? std::move(*acc) : zero_like(a[0]));
    }
    return Series<R>(std::move(out));
}

/// Two-sided inverse through order N: inv_r = -a_0^{-1} sum_{t>=1} a_t inv_{r-t}.
template <class R>
Series<R> inverse(const Series<R>& a, std::size_t N)
{
    if (N > a.order()) throw std::out_of_range("series_inv beyond known order");
    const R u0 = unit_inverse(a[0]);  // throws NotInvertible
    std::vector<R> inv;
    inv.reserve(N + 1);
    inv.push_back(u0);
    for (std::size_t r = 1; r <= N; ++r) {
        std::optional<R> acc;
        for (std::size_t t = 1; t <= r; ++t) {
            if (is_zero(a[t]) || is_zero(inv[r - t])) continue;
            R term = a[t] * inv[r - t];
            if (acc)
                *acc = *acc + term;
            else
                acc = std::move(term);
        }
        inv.push_back(acc ? -(u0 * *acc) : zero_like(a[0]));
    }
    return Series<R>(std::move(inv));
}

template <class R>
Series<R> inverse(const Series<R>& a)
{
    return inverse(a, a.order());
}

/// a(u - c) re-expanded in u^-1 through order N, using
/// (u-c)^{-r} = sum_k C(r+k-1, k) c^k u^{-r-k}, binomials reduced mod p.
template <class R>
Series<R> shift(const Series<R>& a, const Fe& c, std::size_t N)
{
    if (N > a.order()) throw std::out_of_range("series_shift beyond known order");
    const std::uint32_t p = c.field_data()->p;
    std::vector<Fe> cpow{one_like(c)};
    for (std::size_t k = 1; k <= N; ++k) cpow.push_back(cpow.back() * c);
    std::vector<R> out;
    out.reserve(N + 1);
    out.push_back(a[0]);
    for (std::size_t n = 1; n <= N; ++n) {
        std::optional<R> acc;
        for (std::size_t r = 1; r <= n; ++r) {
            if (is_zero(a[r])) continue;
            const std::uint32_t b = binomial_mod(n - 1, n - r, p);
            const Fe s = Fe(c.field_data(), b) * cpow[n - r];
            if (s.is_zero()) continue;
            R term = a[r] * s;
            if (acc)
                *acc = *acc + term;
            else
                acc = std::move(term);
        }
        out.push_back(acc ? std::move(*acc) : zero_like(a[0]));
    }
    return Series<R>(std::move(out));
}

template <class R>
Series<R> shift(const Series<R>& a, const Fe& c)
{
    return shift(a, c, a.order());
}

/// Result of comparing two series; mismatched orders compare through the smaller one.
struct SeriesComparison {
    bool equal = true;
    bool partial = false;                  // orders differed
    std::size_t order = 0;                 // order actually compared
    std::optional<std::size_t> first_mismatch;
};

template <class R>
SeriesComparison compare(const Series<R>& a, const Series<R>& b)
{
    SeriesComparison out;
    out.partial = a.order() != b.order();
    out.order = std::min(a.order(), b.order());
    for (std::size_t r = 0; r <= out.order; ++r) {
        if (!(a[r] == b[r])) {
            out.equal = false;
            out.first_mismatch = r;
            break;
        }
    }
    return out;
}

template <class R>
bool is_one(const Series<R>& a)
{
    if (!(a[0] == one_like(a[0]))) return false;
    for (std::size_t r = 1; r <= a.order(); ++r)
        if (!is_zero(a[r])) return false;
    return true;
}

/// f(u) f(u-1) ... f(u-p+1) through order N.
template <class R>
Series<R> p_shift_product(const Series<R>& f, Field field, std::size_t N)
{
    Series<R> acc = f.truncated(N);
    const std::uint32_t p = field.characteristic();
    for (std::uint32_t j = 1; j < p; ++j) acc = mul(acc, shift(f, field.from_int(j), N), N);
    return acc;
}

using LaurentTail = Series<Fe>;

/// Tail from explicit coefficients c_0..c_N.
LaurentTail make_tail(Field f, const std::vector<std::int64_t>& coeffs);

/// Restrictedness of a tail f with f_0 = 1 of finite degree (trailing zeros are
/// ignored): the p-fold shifted product is compared with 1 through order p*deg.
bool is_restricted(const LaurentTail& f);

/// Independent test for polynomial tails: all roots of u^d f lie in F_p.
bool is_restricted_by_roots(const LaurentTail& f);

/// Degree in u^-1 (index of the last nonzero coefficient).
std::size_t tail_degree(const LaurentTail& f);

}  // namespace syang
