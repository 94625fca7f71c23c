#pragma once

// Shifted super Yangians Y_{sigma,l}: pyramids, tableaux and the modules V(A)
// realised by explicit matrices of the Drinfeld generators.

#include "syang/supermod.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace syang {

struct ShiftMatrix {
    std::uint32_t s12 = 0, s21 = 0;
    friend bool operator==(const ShiftMatrix&, const ShiftMatrix&) = default;
};

struct Pyramid {
    ShiftMatrix sigma;
    std::uint32_t level = 0, k = 0;
    std::vector<int> heights;  // s21 ones, k twos, s12 ones
};
/// Throws std::invalid_argument when level < s12 + s21.
Pyramid pyramid_from(ShiftMatrix sigma, std::uint32_t level);

/// First row a_1..a_k, second row b_1..b_l.  Column c (0-based) of height 2
/// pairs a_{c - s21} with b_c.
struct Tableau {
    std::vector<Fe> a, b;
    /// Both rows sorted by field-element encoding.
    Tableau canonical() const;
    std::string to_string() const;  // "a1,a2;b1,b2,b3"
    friend bool operator==(const Tableau& x, const Tableau& y) { return x.a == y.a && x.b == y.b; }
};
bool row_equivalent(const Tableau& x, const Tableau& y);
void check_shape(const Pyramid& pi, const Tableau& A);

/// Height 2: L(a, -b) for gl(1|1) (dim 1 iff a = b).  Height 1: the scalar -b by which e11 acts.
struct ColumnLeg {
    int height = 1;
    std::optional<SuperModule> module;
    Fe scalar;
};
ColumnLeg column_module(const std::vector<Fe>& entries);

/// Matrices of d1, d2, e, f through order N.  Only e^(r), r > s12 and
/// f^(r), r > s21 belong to Y_sigma; the lower coefficients are stored as zero.
class ShiftedModule {
public:
    ShiftedModule() = default;
    ShiftedModule(Field f, ShiftMatrix sigma, std::uint32_t level, std::vector<int> parity,
                  DrinfeldTails<Matrix> tails, std::string provenance);

    Field field() const { return f_; }
    ShiftMatrix sigma() const { return sigma_; }
    std::uint32_t level() const { return level_; }
    std::uint32_t k() const { return level_ - sigma_.s12 - sigma_.s21; }
    std::size_t dim() const { return parity_.size(); }
    const std::vector<int>& parity() const { return parity_; }
    std::size_t order() const { return tails_.d1.order(); }
    const DrinfeldTails<Matrix>& tails() const { return tails_; }
    const std::string& provenance() const { return provenance_; }

    const Matrix& action(Kind kind, std::size_t r) const;
    /// d1^(r), r <= k; d2^(r), r <= l; e^(r), s12 < r <= s12 + k; f^(r), s21 < r <= s21 + k.
    std::vector<Matrix> window_generators() const;

private:
    Field f_;
    ShiftMatrix sigma_;
    std::uint32_t level_ = 0;
    std::vector<int> parity_;
    DrinfeldTails<Matrix> tails_;
    std::string provenance_;
};

/// A Y-module viewed over Y_0 at level = number of legs.
ShiftedModule unshifted_module(const SuperModule& M, std::uint32_t level, std::size_t N);

/// Pull back along Delta_+ (M over Y_{sigma_+}, gl_1 leg on the right with e11 = c):
/// d2^(r) -> d2^(r) - c d2^(r-1), e^(r) -> e^(r) - c e^(r-1).
ShiftedModule delta_plus_pullback(const ShiftedModule& M, const Fe& c);
/// Mirror with the gl_1 leg on the left: d2 and f pick up -c times the previous coefficient.
ShiftedModule delta_minus_pullback(const ShiftedModule& M, const Fe& c);

/// Default working order: large enough for b_i through p*l and the truncation range k + p.
std::size_t default_order(const Pyramid& pi, Field f);

class TheoremViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// V(A) = L(A_1) (x) ... (x) L(A_l) restricted to Y_pi.  Checks d1^(r) = 0 for k < r <= N.
ShiftedModule build_VA(const Pyramid& pi, const Tableau& A, std::optional<std::size_t> N = std::nullopt);

struct HwData {
    Vec vector;
    LaurentTail lambda1, lambda2;
    std::size_t singular_dim = 0;
};
/// Joint kernel of e^(r) for s12 < r <= e_top (default s12 + k, capped at the order).
/// Picks the kernel vector when it is a line, else the product of top vectors.
HwData hw_vector(const ShiftedModule& V, std::optional<std::size_t> e_top = std::nullopt);
std::vector<Vec> singular_space(const ShiftedModule& V, std::size_t e_top);

/// prod_i (1 + x_i u^-1) through order N.
LaurentTail elementary_tail(Field f, const std::vector<Fe>& xs, std::size_t N);

/// Dimension of the irreducible head of the submodule generated by v, which must be a
/// highest weight vector (computed as the cyclic span of the functional dual to v).
std::size_t head_dimension(const ShiftedModule& V, const Vec& v);

/// Maximal matching of equal entries; B has h height-2 columns with equal entries.
std::pair<Tableau, std::uint32_t> choose_B(const Pyramid& pi, const Tableau& A);

struct SimpleModule {
    Tableau B;
    std::uint32_t h = 0;
    ShiftedModule module;
    HwData hw;
    IrreducibilityReport irreducibility;
};
/// V(choose_B(A)) with dimension, weights, hw-line and irreducibility verified.
/// Throws TheoremViolation on any failure.
SimpleModule simple_module(const Pyramid& pi, const Tableau& A, std::optional<std::size_t> N = std::nullopt);

struct RestrictedVerdict {
    bool restricted = false;  // b_i(u) = 1 on L(A) through order p*l
    bool entries_in_prime_field = false;
    std::optional<std::string> witness;
};
/// Throws TheoremViolation when the matrix test and the entry test disagree.
RestrictedVerdict restricted_check(const Pyramid& pi, const Tableau& A);
/// b_1 and b_2 (built from d2^{-1}) on V through its order.
RestrictedVerdict restricted_action(const ShiftedModule& V);

/// Sorted multisets of size n drawn from `values`.
std::vector<std::vector<Fe>> multisets(const std::vector<Fe>& values, std::size_t n);
/// Every tableau of shape pi with entries in `values`.
std::vector<Tableau> all_tableaux(const Pyramid& pi, const std::vector<Fe>& values);
/// 0, 1, ..., p-1 inside f.
std::vector<Fe> prime_field_elements(Field f);

struct ClassRow {
    Tableau A;  // canonical
    std::uint32_t h = 0;
    std::uint64_t dim = 0;
    LaurentTail lambda1, lambda2;
    std::optional<bool> verified;  // module built and checked
};
/// One row per row-equivalence class of tableaux with entries in F_p.  Throws when the
/// class count exceeds cap or two classes share their weight data.
std::vector<ClassRow> classify(const Pyramid& pi, Field f, bool build_modules = false,
                               std::uint64_t cap = 100000);

}  // namespace syang
