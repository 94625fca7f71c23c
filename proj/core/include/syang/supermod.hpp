#pragma once

// Finite-dimensional super modules given by the action of t_ij(u).
//
// Tails are stored through an explicit order.  Modules built from evaluation
// legs are polynomial in u^-1 (coefficients past the stored order are zero);
// after a twist by a non-polynomial series they are known only through the
// stored order and every derived quantity is stamped with it.

#include "syang/matrix.hpp"
#include "syang/poly.hpp"
#include "syang/report.hpp"
#include "syang/rtt.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace syang {

class SuperModule {
public:
    SuperModule() = default;
    /// t[(i-1)*2 + (j-1)] is the tail of t_ij(u).
    SuperModule(Field f, std::vector<int> parity, std::array<MatrixTail, 4> t, bool polynomial,
                std::string provenance);

    Field field() const { return f_; }
    std::size_t dim() const { return parity_.size(); }
    const std::vector<int>& parity() const { return parity_; }
    /// Stored order (the degree when polynomial()).
    std::size_t order() const { return order_; }
    bool polynomial() const { return polynomial_; }
    const std::string& provenance() const { return provenance_; }

    /// t_ij(u) through order N; past the stored order only for polynomial modules.
    MatrixTail T(int i, int j, std::size_t N) const;
    const MatrixTail& T(int i, int j) const;
    Matrix t(int i, int j, std::size_t r) const;

    /// Diagonal matrix with (-1)^{parity} entries.
    Matrix parity_sign() const;

private:
    Field f_;
    std::vector<int> parity_;
    std::array<MatrixTail, 4> t_;
    std::size_t order_ = 0;
    bool polynomial_ = true;
    std::string provenance_;
};

/// L(l1, l2): basis xi (even), e21 xi (odd), or only xi when l1 + l2 = 0.
SuperModule eval_module(const Fe& l1, const Fe& l2);
SuperModule trivial_module(Field f);

/// Delta(t_ij) = sum_k t_ik (x) t_kj, with (x (x) y)(v (x) w) = (-1)^{|y||v|} xv (x) yw.
SuperModule tensor(const SuperModule& a, const SuperModule& b);
SuperModule tensor_all(const std::vector<SuperModule>& legs);
SuperModule direct_sum(const SuperModule& a, const SuperModule& b);

/// d1, d2, e, f acting on M through order N (Gauss factorisation of the matrix tails).
DrinfeldTails<Matrix> drinfeld_tails(const SuperModule& M, std::size_t N);
Matrix drinfeld_action(const SuperModule& M, Kind k, std::uint32_t r, std::size_t N);

/// Joint kernel of the stored t12^(r), r >= 1.
std::vector<Vec> singular_space(const SuperModule& M);
/// Joint kernel of e^(r), 1 <= r <= N.
std::vector<Vec> singular_space_drinfeld(const SuperModule& M, std::size_t N);

class NotEigenvector : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct WeightData {
    LaurentTail lambda1, lambda2;
    Vec vector;
    bool restricted = false;
    std::size_t order = 0;
};

/// d_i(u) v = lambda_i(u) v for a singular vector v, through the module order
/// (through N when given).  Throws NotEigenvector.
WeightData hw_weight(const SuperModule& M, const Vec& v, std::optional<std::size_t> N = std::nullopt);

struct IrreducibilityReport {
    std::size_t algebra_dim = 0;       // dimension of the generated matrix algebra
    bool absolutely_irreducible = false;
    std::optional<bool> spinning;      // every nonzero vector generates (run when q^n <= cap)
    bool agree() const { return !spinning || *spinning == absolutely_irreducible; }
};
/// Matrices generating the action: all stored t_ij^(r), r >= 1.
std::vector<Matrix> action_generators(const SuperModule& M);
/// Burnside test on the unital algebra generated by `gens`, optional spinning check.
IrreducibilityReport irreducibility(const std::vector<Matrix>& gens, Field f, std::size_t n,
                                    std::uint64_t spin_cap = 100000);
IrreducibilityReport irreducibility(const SuperModule& M, std::uint64_t spin_cap = 100000);
bool is_irreducible(const SuperModule& M);
/// Span of all images of v under the generated algebra.
std::vector<Vec> spin(const std::vector<Matrix>& gens, const Vec& v);

/// t_ij(u) -> f(u) t_ij(u).  The result is polynomial iff both inputs are.
SuperModule twist(const SuperModule& M, const LaurentTail& f, bool f_polynomial = true);

/// Action of t_ij^(r) on M* is the super-transpose of t_{3-i,3-j}^(r) on M,
///   st(A)_{ab} = (-1)^{|a|(|a|+|b|)} A_{ba}.
SuperModule dual_tau(const SuperModule& M);
Matrix super_transpose(const Matrix& a, const std::vector<int>& parity);

struct DrinfeldPair {
    Poly P1, P2;
};
class NotRestricted : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};
/// Homogenise lambda_i to u^d lambda_i(u) (d = max degree), cancel the gcd; returns
/// the pair iff the reduced degrees agree.  Throws NotRestricted.
std::optional<DrinfeldPair> drinfeld_poly_check(const LaurentTail& lambda1, const LaurentTail& lambda2);

struct FiniteIrrep {
    SuperModule module;
    DrinfeldPair pair;
    std::vector<Fe> mu1, mu2;  // evaluation parameters of the legs
    Vec hw_vector;
};
/// Tensor of L(mu1^(r), mu2^(r)) over the roots of P1 = prod(u + mu1), P2 = prod(u - mu2),
/// twisted by lambda2(u) / mu2(u); stored through order N (default p * (deg + legs)).
FiniteIrrep build_finite_irrep(const LaurentTail& lambda1, const LaurentTail& lambda2,
                               std::optional<std::size_t> N = std::nullopt);

/// Both b_i(u) act as 1 through order p * D (D the degree, or the stored order).
Check restrictedness_action_check(const SuperModule& M);

/// Discrete RTT relation on the action matrices for r, s <= order.
Check module_rtt_check(const SuperModule& M, int i, int j, int k, int l);
/// Every t_ij^(r) is parity-homogeneous of parity |i| + |j|.
Check parity_check(const SuperModule& M);

/// Coefficients g^(r), r <= N, of ev(b1(u)) (i = 1, polynomials in e11) or
/// ev(b2'(u)) (i = 2, polynomials in e22).
std::vector<Poly> evaluation_b_coefficients(Field f, int i, std::size_t N);
/// Each g^(r), 1 <= r <= N, is divisible by x^p - x.
Check evaluation_divisibility_check(Field f, int i, std::size_t N);

}  // namespace syang
