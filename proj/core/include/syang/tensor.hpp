#pragma once

// Elements of Y^{(x)k}, the k-fold super tensor power, with the Koszul rule
//   (x_1 (x) ... (x) x_k)(y_1 (x) ... (x) y_k)
//       = (-1)^{sum_{i>j} |x_i||y_j|} x_1 y_1 (x) ... (x) x_k y_k.

#include "syang/pbw.hpp"

#include <functional>
#include <map>
#include <vector>

namespace syang {

class TensorElement {
public:
    using Key = std::vector<Monomial>;
    using Terms = std::map<Key, std::uint32_t>;

    TensorElement() = default;
    TensorElement(Field f, std::size_t arity) : fd_(f.data()), arity_(arity) {}

    static TensorElement scalar(const Fe& c, std::size_t arity);
    static TensorElement one(Field f, std::size_t arity) { return scalar(f.one(), arity); }
    /// Arity-one view of an algebra element.
    static TensorElement from(const AlgebraElement& x);

    Field field() const { return Field::from_data(fd_); }
    const FieldData* field_data() const { return fd_; }
    std::size_t arity() const { return arity_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    Fe coeff(const Key& k) const;

    void add_term(const Key& k, std::uint32_t c);

    TensorElement& operator+=(const TensorElement& o);
    TensorElement& operator-=(const TensorElement& o);
    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
    friend TensorElement operator*(const TensorElement& a, const TensorElement& b);
    friend TensorElement operator*(TensorElement a, const Fe& s);
    TensorElement operator-() const;

    friend bool operator==(const TensorElement& a, const TensorElement& b)
    {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const TensorElement& a, const TensorElement& b) { return !(a == b); }

    std::string to_string() const;

private:
    const FieldData* fd_ = nullptr;
    std::size_t arity_ = 0;
    Terms terms_;
};

/// x (x) y, concatenating legs (no sign: juxtaposition).
TensorElement tensor(const TensorElement& x, const TensorElement& y);
TensorElement tensor(const AlgebraElement& x, const AlgebraElement& y);

/// Replace leg i by the image of its monomial under an even linear map whose
/// values have arity a; the result has arity k - 1 + a.
TensorElement map_leg(const TensorElement& x, std::size_t leg, std::size_t image_arity,
                      const std::function<TensorElement(const Monomial&)>& f);

/// Multiply all legs together (in order) into a single algebra element.
AlgebraElement multiply_legs(const TensorElement& x);

inline TensorElement zero_like(const TensorElement& x) { return TensorElement(x.field(), x.arity()); }
inline TensorElement one_like(const TensorElement& x) { return TensorElement::one(x.field(), x.arity()); }
inline bool is_zero(const TensorElement& x) { return x.is_zero(); }
TensorElement unit_inverse(const TensorElement& x);

using TensorTail = Series<TensorElement>;

/// (A (x) B)(u): coefficient r is sum_{a+b=r} A^(a) (x) B^(b).
TensorTail tensor_series(const TensorTail& a, const TensorTail& b, std::size_t N);
TensorTail lift(const AlgebraTail& a);

}  // namespace syang
