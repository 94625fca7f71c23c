#pragma once

// Coproduct, antipode and counit.  Delta and S are given on the t_ij(u) and
// carried over to the Drinfeld letters through the Gauss factorisation; on
// PBW monomials they are extended (anti)multiplicatively.

#include "syang/report.hpp"
#include "syang/rtt.hpp"
#include "syang/tensor.hpp"

namespace syang {

/// Delta(t_ij(u)) = sum_k t_ik(u) (x) t_kj(u) through order N.
TensorTail coproduct_t(Field f, int i, int j, std::size_t N);

/// Delta of one Drinfeld generating series, via d1 = T11, e = T11^{-1} T12,
/// f = T21 T11^{-1}, d2 = T22 - T21 T11^{-1} T12 applied to Delta(T).
TensorTail coproduct_generator_tail(Field f, Kind k, std::size_t N);

/// Delta on an arbitrary element (letters from the tails above, then products).
TensorElement coproduct(const AlgebraElement& x);
TensorElement coproduct_monomial(Field f, const Monomial& m);

/// S on letters: S(d1) = t'11, S(e) = t'12 t'11^{-1}, S(f) = t'11^{-1} t'21,
/// S(d2) = t'22 + t'12 t'11^{-1} t'21; S(xy) = (-1)^{|x||y|} S(y) S(x).
AlgebraElement antipode(const AlgebraElement& x);
AlgebraElement antipode_monomial(Field f, const Monomial& m);

Fe counit(const AlgebraElement& x);

/// Delta, S and epsilon axioms on t_ij^(r), r <= N, plus multiplicativity of
/// Delta on products t_ij^(r) t_kl^(s) with r + s <= N.
Report verify_hopf_axioms(Field f, std::size_t N);

/// Four identities of t-series products under shifts (k <= kmax in the last),
/// the expansion of Delta(t11(u-n+1)...t11(u)) for n = 1..p, Delta(b_i) = b_i (x) b_i,
/// S(b1) = b1' and S(b2') = b2, all through order N.
struct AppendixOptions {
    std::uint32_t kmax = 4;
    bool letterwise_b = false;  // also expand Delta(b_i^(r)) through coproduct()
    bool lemma_a1 = true, lemma_a2 = true, delta_b = true, antipode_b = true;
};
Report verify_appendix(Field f, std::size_t N, const AppendixOptions& opt = {});

/// Delta(b_i(u)) against b_i (x) b_i through order N (series route).
Check verify_delta_b(Field f, int i, std::size_t N, bool letterwise = false);
/// S(b1) = b1' (i = 1) or S(b2') = b2 (i = 2) through order N.
Check verify_antipode_b(Field f, int i, std::size_t N);

}  // namespace syang
