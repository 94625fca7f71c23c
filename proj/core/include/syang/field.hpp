#pragma once

// Exact arithmetic in F_q, q = p^m, p an odd prime.
//
// Fields are interned: Field::make(p, m) always returns a handle to the same
// immutable table, so handles compare by identity and elements can carry a
// plain pointer to their field.  Extension fields are built on the
// lexicographically least monic irreducible polynomial of degree m, ordering
// candidates by the coefficient sequence (c_{m-1}, ..., c_0).

#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace syang {

class FieldMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotInvertible : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

bool is_prime(std::uint64_t n);

namespace detail {

// Dense polynomial over F_p with coefficients stored low degree first.
using PrimePoly = std::vector<std::uint32_t>;

PrimePoly prime_poly_mulmod(const PrimePoly& a, const PrimePoly& b, const PrimePoly& mod,
                            std::uint32_t p);
PrimePoly prime_poly_gcd(PrimePoly a, PrimePoly b, std::uint32_t p);
bool prime_poly_is_irreducible(const PrimePoly& f, std::uint32_t p);

}  // namespace detail

/// Immutable arithmetic tables for one finite field.
struct FieldData {
    std::uint32_t p = 0;
    std::uint32_t m = 0;
    std::uint32_t q = 0;
    detail::PrimePoly modulus;  // monic, size m + 1

    // Discrete log tables, only populated for m > 1.
    std::vector<std::uint32_t> exp_table;
    std::vector<std::uint32_t> log_table;

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
    std::uint32_t from_int(std::int64_t n) const;
};

inline std::uint32_t FieldData::add(std::uint32_t a, std::uint32_t b) const
{
    if (m == 1) {
        const std::uint32_t s = a + b;
        return s >= p ? s - p : s;
    }
    std::uint32_t r = 0, scale = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        std::uint32_t s = a % p + b % p;
        if (s >= p) s -= p;
        r += s * scale;
        scale *= p;
        a /= p;
        b /= p;
    }
    return r;
}

inline std::uint32_t FieldData::neg(std::uint32_t a) const
{
    if (m == 1) return a == 0 ? 0 : p - a;
    std::uint32_t r = 0, scale = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        const std::uint32_t c = a % p;
        r += (c == 0 ? 0 : p - c) * scale;
        scale *= p;
        a /= p;
    }
    return r;
}

inline std::uint32_t FieldData::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

inline std::uint32_t FieldData::mul(std::uint32_t a, std::uint32_t b) const
{
    if (m == 1) return static_cast<std::uint32_t>(std::uint64_t(a) * b % p);
    if (a == 0 || b == 0) return 0;
    std::uint32_t e = log_table[a] + log_table[b];
    if (e >= q - 1) e -= q - 1;
    return exp_table[e];
}

class Fe;

/// Handle to an interned finite field.
class Field {
public:
    Field() = default;

    static Field make(std::uint32_t p, std::uint32_t m = 1);
    /// Handle for tables already obtained from make().
    static Field from_data(const FieldData* d) { return Field(d); }

    std::uint32_t characteristic() const { return data_->p; }
    std::uint32_t degree() const { return data_->m; }
    std::uint32_t order() const { return data_->q; }
    const detail::PrimePoly& modulus() const { return data_->modulus; }
    const FieldData* data() const { return data_; }
    bool valid() const { return data_ != nullptr; }

    Fe zero() const;
    Fe one() const;
    Fe from_int(std::int64_t n) const;
    /// Element with the given coefficients over F_p (power basis in the generator w).
    Fe from_coeffs(const std::vector<std::int64_t>& coeffs) const;
    /// The class w of x in F_p[x]/(modulus).  Requires m > 1.
    Fe generator() const;
    Fe element(std::uint32_t index) const;  // 0 <= index < q, base-p digit encoding

    /// All q elements in index order.
    std::vector<Fe> elements() const;

    friend bool operator==(Field a, Field b) { return a.data_ == b.data_; }
    friend bool operator!=(Field a, Field b) { return a.data_ != b.data_; }

private:
    friend class Fe;
    explicit Field(const FieldData* d) : data_(d) {}
    const FieldData* data_ = nullptr;
};

/// Element of F_q.  Values are encoded as sum c_i p^i over the power basis.
class Fe {
public:
    Fe() = default;
    Fe(const FieldData* f, std::uint32_t v) : f_(f), v_(v) {}

    Field field() const;
    const FieldData* field_data() const { return f_; }
    std::uint32_t raw() const { return v_; }
    std::vector<std::uint32_t> coeffs() const;

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool in_prime_field() const { return f_ == nullptr || v_ < f_->p; }

    Fe inverse() const;
    Fe pow(std::uint64_t e) const;
    Fe frobenius() const { return pow(f_->p); }

    Fe& operator+=(const Fe& o);
    Fe& operator-=(const Fe& o);
    Fe& operator*=(const Fe& o);
    Fe& operator/=(const Fe& o);

    friend Fe operator+(Fe a, const Fe& b) { return a += b; }
    friend Fe operator-(Fe a, const Fe& b) { return a -= b; }
    friend Fe operator*(Fe a, const Fe& b) { return a *= b; }
    friend Fe operator/(Fe a, const Fe& b) { return a /= b; }
    Fe operator-() const { return {f_, f_->neg(v_)}; }

    friend bool operator==(const Fe& a, const Fe& b) { return a.v_ == b.v_ && a.f_ == b.f_; }
    friend bool operator!=(const Fe& a, const Fe& b) { return !(a == b); }
    // Total order by encoding; used for canonical tableaux and deterministic output.
    friend bool operator<(const Fe& a, const Fe& b) { return a.v_ < b.v_; }

    /// "3" for prime-field elements, "2+w", "w^2+1" style otherwise.
    std::string to_string() const;

private:
    void check_same(const Fe& o) const;
    const FieldData* f_ = nullptr;
    std::uint32_t v_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Fe& x);

// Ring-interface hooks used by the generic series code.
inline Fe zero_like(const Fe& x) { return Fe(x.field_data(), 0); }
inline Fe one_like(const Fe& x) { return Fe(x.field_data(), 1); }
inline bool is_zero(const Fe& x) { return x.is_zero(); }
inline Fe unit_inverse(const Fe& x) { return x.inverse(); }

/// C(n, k) mod p by Lucas' theorem.
std::uint32_t binomial_mod(std::uint64_t n, std::uint64_t k, std::uint32_t p);

}  // namespace syang
