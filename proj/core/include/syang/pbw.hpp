#pragma once

// Elements of the super Yangian Y(1|1) over F_q in PBW normal form.
//
// A monomial is a non-decreasing word in letters ordered
//     f(1) < f(2) < ... < d1(1) < d1(2) < ... < d2(1) < ... < e(1) < e(2) < ...
// with odd letters (e, f) appearing at most once.  Products are reduced by
// moving letters into place with the Drinfeld relations; results are memoised
// per thread, so the engine has no shared mutable state.

#include "syang/field.hpp"
#include "syang/series.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace syang {

enum class Kind : std::uint8_t { F = 0, D1 = 1, D2 = 2, E = 3 };

/// A letter packs (kind, superscript) so that integer order is PBW order.
using Letter = std::uint32_t;

constexpr Letter make_letter(Kind k, std::uint32_t r) { return (std::uint32_t(k) << 16) | r; }
constexpr Kind letter_kind(Letter l) { return Kind(l >> 16); }
constexpr std::uint32_t letter_index(Letter l) { return l & 0xffffu; }
constexpr bool letter_odd(Letter l) { return letter_kind(l) == Kind::E || letter_kind(l) == Kind::F; }

std::string kind_name(Kind k);
std::string letter_name(Letter l);

struct Generator {
    Kind kind;
    std::uint32_t r;  // r = 0 allowed for d1, d2 (the unit)
};

using Monomial = std::vector<Letter>;

std::uint32_t monomial_weight(const Monomial& m);
int monomial_parity(const Monomial& m);
/// e-count minus f-count.
int monomial_degree(const Monomial& m);
bool monomial_in_d_sector(const Monomial& m);
/// (letter, exponent) runs.
std::vector<std::pair<Letter, std::uint32_t>> monomial_runs(const Monomial& m);
std::string monomial_name(const Monomial& m);

class RewriteLimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class AlgebraElement {
public:
    using Terms = std::map<Monomial, std::uint32_t>;  // raw nonzero coefficients

    AlgebraElement() = default;
    explicit AlgebraElement(Field f) : fd_(f.data()) {}

    static AlgebraElement scalar(const Fe& c);
    static AlgebraElement one(Field f) { return scalar(f.one()); }
    /// d_i^(0) is the unit.
    static AlgebraElement generator(Field f, Kind k, std::uint32_t r);
    static AlgebraElement monomial(Field f, Monomial m, const Fe& c);

    Field field() const { return Field::from_data(fd_); }
    const FieldData* field_data() const { return fd_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    Fe coeff(const Monomial& m) const;
    /// Coefficient of the empty monomial.
    Fe constant_term() const { return coeff({}); }

    bool is_homogeneous() const;
    /// Parity of a homogeneous element (0 for zero); throws otherwise.
    int parity() const;
    bool in_d_sector() const;

    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement& operator-=(const AlgebraElement& o);
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
    friend AlgebraElement operator*(AlgebraElement a, const Fe& s);
    friend AlgebraElement operator*(const Fe& s, AlgebraElement a) { return std::move(a) * s; }
    AlgebraElement operator-() const;

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b)
    {
        return a.terms_ == b.terms_ && (a.fd_ == b.fd_ || a.terms_.empty());
    }
    friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }

    /// Add c * m without normalising m (m must already be a PBW monomial).
    void add_term(const Monomial& m, std::uint32_t c);

    std::string to_string() const;

private:
    const FieldData* fd_ = nullptr;
    Terms terms_;
};

AlgebraElement normal_form(Field f, const std::vector<Generator>& word);
AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y);
/// Normal form of a product of two PBW monomials (memoised; the reference stays
/// valid until clear_rewrite_cache()).
const AlgebraElement::Terms& monomial_product(Field f, const Monomial& a, const Monomial& b);
/// xy - (-1)^{|x||y|} yx; throws std::invalid_argument for inhomogeneous input.
AlgebraElement super_commutator(const AlgebraElement& x, const AlgebraElement& y);

/// d_1'^{(r)} = coefficient of d_1(u)^{-1}, and likewise for d_2.
AlgebraElement d_prime(Field f, int i, std::uint32_t r);

/// Upper bound on fresh rewriting steps per top-level product (per thread).
void set_rewrite_limit(std::uint64_t steps);
std::uint64_t rewrite_limit();
/// Drop the per-thread memo tables.
void clear_rewrite_cache();

// Ring hooks for Series<AlgebraElement>.
inline AlgebraElement zero_like(const AlgebraElement& x) { return AlgebraElement(x.field()); }
inline AlgebraElement one_like(const AlgebraElement& x) { return AlgebraElement::one(x.field()); }
inline bool is_zero(const AlgebraElement& x) { return x.is_zero(); }
AlgebraElement unit_inverse(const AlgebraElement& x);

using AlgebraTail = Series<AlgebraElement>;

/// The generating series of one kind through order N (e, f start at u^-1).
AlgebraTail generator_tail(Field f, Kind k, std::size_t N);

/// Coefficients b_i^(0..N) of the p-central series.
AlgebraTail b_series(Field f, int i, std::size_t N);

struct CentralityReport {
    bool central = true;
    std::string witness;  // first failing generator, if any
};
CentralityReport centrality_check(Field f, int i, std::uint32_t r, std::uint32_t s_max);

/// d-monomials of the given weight (any exponents), in PBW order.
std::vector<Monomial> d_monomials(std::uint32_t weight);
/// Every exponent is below p.
bool is_restricted_monomial(const Monomial& m, std::uint32_t p);

class WeightCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Representative of x modulo the ideal generated by b_i^(r), r >= 1, supported on
/// restricted d-monomials.  x must lie in the d-sector.
AlgebraElement restricted_reduce(const AlgebraElement& x, std::uint32_t weight_cap = 16);

/// Linear algebra on the filtered piece of weight <= w (the b_i^(r) are not
/// homogeneous, so exact slices by weight would not be closed).
struct RestrictedRankReport {
    std::uint32_t weight = 0;
    std::size_t dim = 0;            // all d-monomials of weight <= w
    std::size_t restricted = 0;     // restricted monomials
    std::size_t ideal_rank = 0;     // rank of the ideal slice
    std::size_t combined_rank = 0;  // rank of ideal slice plus restricted monomials
    bool independent() const { return combined_rank == ideal_rank + restricted; }
    bool spanning() const { return combined_rank == dim; }
};
RestrictedRankReport restricted_rank_check(Field f, std::uint32_t weight);

}  // namespace syang
