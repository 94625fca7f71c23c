#pragma once

// RTT generating series t_ij(u) written in Drinfeld generators via the Gauss
// factorisation T = F D E, their inverse matrix T(u)^{-1}, and the converse
// direction in a free algebra on abstract t-symbols.

#include "syang/pbw.hpp"
#include "syang/report.hpp"

#include <functional>
#include <map>
#include <vector>

namespace syang {

/// Standard parity: |1| = 0, |2| = 1.
constexpr int index_parity(int i) { return i == 2 ? 1 : 0; }

/// t_ij(u) through order N (i, j in {1, 2}).
AlgebraTail t_series(Field f, int i, int j, std::size_t N);
/// t'_ij(u), the (i, j) entry of T(u)^{-1} = E^{-1} D^{-1} F^{-1}.
AlgebraTail t_prime_series(Field f, int i, int j, std::size_t N);

/// Coefficient-wise RTT relation for (i, j, k, l) and all r, s <= N.
Check verify_rtt(Field f, int i, int j, int k, int l, std::size_t N);
/// T T^{-1} = 1 = T^{-1} T through order N.
Check verify_t_inverse(Field f, std::size_t N);

/// Abstract symbol t_ij^(r), r >= 1.
struct TSymbol {
    int i, j;
    std::uint32_t r;
};
std::uint32_t pack(const TSymbol& s);
TSymbol unpack_tsymbol(std::uint32_t code);

/// Noncommutative polynomial in the symbols t_ij^(r) (no relations imposed).
class FreeElement {
public:
    using Word = std::vector<std::uint32_t>;
    using Terms = std::map<Word, std::uint32_t>;

    FreeElement() = default;
    explicit FreeElement(Field f) : fd_(f.data()) {}
    static FreeElement scalar(const Fe& c);
    static FreeElement symbol(Field f, const TSymbol& s);

    Field field() const { return Field::from_data(fd_); }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const Word& w, std::uint32_t c);

    FreeElement& operator+=(const FreeElement& o);
    FreeElement& operator-=(const FreeElement& o);
    friend FreeElement operator+(FreeElement a, const FreeElement& b) { return a += b; }
    friend FreeElement operator-(FreeElement a, const FreeElement& b) { return a -= b; }
    friend FreeElement operator*(const FreeElement& a, const FreeElement& b);
    friend FreeElement operator*(FreeElement a, const Fe& s);
    FreeElement operator-() const;
    friend bool operator==(const FreeElement& a, const FreeElement& b) { return a.terms_ == b.terms_; }

    std::string to_string() const;

private:
    const FieldData* fd_ = nullptr;
    Terms terms_;
};

inline FreeElement zero_like(const FreeElement& x) { return FreeElement(x.field()); }
inline FreeElement one_like(const FreeElement& x) { return FreeElement::scalar(x.field().one()); }
inline bool is_zero(const FreeElement& x) { return x.is_zero(); }
FreeElement unit_inverse(const FreeElement& x);

using FreeTail = Series<FreeElement>;

/// The four Drinfeld tails over a coefficient ring.
template <class R>
struct DrinfeldTails {
    Series<R> d1, d2, e, f;
};

/// d1 = t11, e = t11^{-1} t12, f = t21 t11^{-1}, d2 = t22 - t21 t11^{-1} t12,
/// with abstract t-coefficients.
DrinfeldTails<FreeElement> drinfeld_from_rtt(Field f, std::size_t N);

/// Evaluate a free polynomial by substituting each symbol.
AlgebraElement substitute(const FreeElement& x, const std::function<AlgebraElement(const TSymbol&)>& image);

/// Substituting t_series into drinfeld_from_rtt returns the generators.
Check verify_gauss_roundtrip(Field f, std::size_t N);

}  // namespace syang
