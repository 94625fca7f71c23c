#include "oracles.hpp"
#include "syang/shifted.hpp"

#include <doctest.h>

#include <map>

using namespace syang;

namespace {

std::vector<Fe> fes(Field f, std::vector<std::int64_t> xs)
{
    std::vector<Fe> out;
    for (auto x : xs) out.push_back(f.from_int(x));
    return out;
}

Tableau tab(Field f, std::vector<std::int64_t> a, std::vector<std::int64_t> b) { return {fes(f, a), fes(f, b)}; }

// e_r by summing over r-subsets, the oracle for elementary_tail.
Fe elementary(const std::vector<Fe>& xs, std::size_t r, Field f)
{
    Fe acc = f.zero();
    const std::size_t n = xs.size();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != r) continue;
        Fe prod = f.one();
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) prod *= xs[i];
        acc += prod;
    }
    return acc;
}

std::uint32_t matching(const std::vector<Fe>& a, const std::vector<Fe>& b)
{
    std::map<std::uint32_t, int> ca, cb;
    for (const auto& x : a) ++ca[x.raw()];
    for (const auto& x : b) ++cb[x.raw()];
    std::uint32_t h = 0;
    for (auto [v, n] : ca) h += std::min(n, cb[v]);
    return h;
}

std::uint64_t choose(std::uint64_t n, std::uint64_t k)
{
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST_SUITE("shifted")
{
    TEST_CASE("pyramids")
    {
        const Pyramid a = pyramid_from({2, 1}, 5);
        CHECK(a.heights == std::vector<int>{1, 2, 2, 1, 1});
        CHECK(a.k == 2);
        CHECK(pyramid_from({0, 0}, 3).heights == std::vector<int>{2, 2, 2});
        const Pyramid c = pyramid_from({1, 1}, 2);
        CHECK(c.heights == std::vector<int>{1, 1});
        CHECK(c.k == 0);
        CHECK_THROWS_AS(pyramid_from({2, 1}, 2), std::invalid_argument);
    }

    TEST_CASE("tableaux and row equivalence")
    {
        const Field f = Field::make(5);
        const Tableau A = tab(f, {2, 1}, {3, 0, 2});
        CHECK(A.canonical() == tab(f, {1, 2}, {0, 2, 3}));
        CHECK(A.to_string() == "2,1;3,0,2");
        CHECK(row_equivalent(A, tab(f, {1, 2}, {2, 3, 0})));
        CHECK_FALSE(row_equivalent(A, tab(f, {1, 2}, {2, 3, 1})));
        CHECK_THROWS(check_shape(pyramid_from({0, 0}, 3), A));
    }

    TEST_CASE("column modules")
    {
        const Field f = Field::make(5);
        CHECK(column_module(fes(f, {1, 1})).module->dim() == 1);
        CHECK(column_module(fes(f, {1, 2})).module->dim() == 2);
        const ColumnLeg leg = column_module(fes(f, {3}));
        CHECK(leg.height == 1);
        CHECK(leg.scalar == f.from_int(-3));
    }

    TEST_CASE("pullbacks")
    {
        const Field f = Field::make(5);
        const ShiftedModule M = unshifted_module(eval_module(f.from_int(1), f.from_int(3)), 1, 6);
        const ShiftedModule P0 = delta_plus_pullback(M, f.zero());
        CHECK(P0.sigma() == ShiftMatrix{1, 0});
        CHECK(P0.level() == 2);
        for (std::size_t r = 1; r <= 6; ++r) {
            CHECK(P0.tails().d2[r] == M.tails().d2[r]);
            CHECK(P0.tails().f[r] == M.tails().f[r]);
        }
        CHECK(P0.tails().e[1].is_zero());  // e(1) leaves Y_sigma
        CHECK(P0.tails().e[2] == M.tails().e[2]);
        // right column with entry b = 2: c = -b, d2(r) + b d2(r-1)
        const Fe b = f.from_int(2);
        const ShiftedModule P = delta_plus_pullback(M, column_module({b}).scalar);
        for (std::size_t r = 1; r <= 6; ++r) CHECK(P.tails().d2[r] == M.tails().d2[r] + M.tails().d2[r - 1] * b);
        const ShiftedModule Q = delta_minus_pullback(M, -b);
        CHECK(Q.sigma() == ShiftMatrix{0, 1});
        CHECK(Q.tails().f[1].is_zero());
        CHECK(Q.tails().f[2] == M.tails().f[2] + M.tails().f[1] * b);
        CHECK(Q.tails().e[1] == M.tails().e[1]);
        // u d2(u) picks up the factor (u + b) on the top vector
        const HwData w0 = hw_vector(M), w1 = hw_vector(P);
        CHECK(w1.lambda2 == w0.lambda2 * make_tail(f, {1, 2, 0, 0, 0, 0, 0}));
    }

    TEST_CASE("V(A) dimensions")
    {
        const Field f = Field::make(5);
        CHECK(build_VA(pyramid_from({0, 0}, 1), tab(f, {1}, {3})).dim() == 2);
        const Pyramid pi = pyramid_from({2, 1}, 5);
        CHECK(build_VA(pi, tab(f, {1, 2}, {0, 3, 4, 0, 1})).dim() == 4);
        CHECK(build_VA(pi, tab(f, {1, 2}, {0, 1, 4, 0, 1})).dim() == 2);
    }

    TEST_CASE("highest weights are elementary symmetric")
    {
        const Field f = Field::make(5);
        const Pyramid pi = pyramid_from({2, 1}, 5);
        const Tableau A = tab(f, {1, 2}, {0, 3, 4, 4, 1});
        const ShiftedModule V = build_VA(pi, A);
        const HwData hw = hw_vector(V);
        for (std::size_t r = 1; r <= V.order(); ++r) {
            CHECK(hw.lambda1[r] == elementary(A.a, r, f));
            CHECK(hw.lambda2[r] == elementary(A.b, r, f));
        }
        CHECK(hw.lambda1[1] == f.from_int(3));
        CHECK(hw.lambda1[2] == f.from_int(2));
        for (std::size_t r = pi.sigma.s12 + 1; r <= V.order(); ++r)
            for (const auto& x : V.tails().e[r].apply(hw.vector)) CHECK(x.is_zero());
        CHECK(elementary_tail(f, A.b, V.order()) == hw.lambda2);
    }

    TEST_CASE("single column weights")
    {
        const Field f = Field::make(5);
        const ShiftedModule V = build_VA(pyramid_from({0, 0}, 1), tab(f, {2}, {4}));
        const HwData hw = hw_vector(V);
        CHECK(hw.vector[0] == f.one());
        CHECK(hw.lambda1 == make_tail(f, {1, 2}).padded(V.order()));
        CHECK(hw.lambda2 == make_tail(f, {1, 4}).padded(V.order()));
    }

    TEST_CASE("choosing B")
    {
        const Field f = Field::make(5);
        const Pyramid pi = pyramid_from({0, 1}, 3);
        const auto [B, h] = choose_B(pi, tab(f, {1, 2}, {2, 0, 3}));
        CHECK(h == 1);
        CHECK(B.a[0] == B.b[pi.sigma.s21]);
        CHECK(B.a[0] == f.from_int(2));
        const auto [B2, h2] = choose_B(pyramid_from({0, 0}, 2), tab(f, {1, 2}, {3, 4}));
        CHECK(h2 == 0);
        CHECK(B2 == tab(f, {1, 2}, {3, 4}).canonical());
        const auto [B3, h3] = choose_B(pyramid_from({1, 0}, 3), tab(f, {1, 1}, {1, 1, 0}));
        CHECK(h3 == 2);
        CHECK(row_equivalent(B3, tab(f, {1, 1}, {1, 1, 0})));
    }

    TEST_CASE("simple modules")
    {
        const Field f = Field::make(3);
        CHECK(simple_module(pyramid_from({0, 0}, 1), tab(f, {0}, {0})).module.dim() == 1);
        const SimpleModule s = simple_module(pyramid_from({0, 0}, 2), tab(f, {0, 1}, {1, 2}));
        CHECK(s.h == 1);
        CHECK(s.module.dim() == 2);
        CHECK(s.irreducibility.absolutely_irreducible);
        CHECK(oracle::brute_force_irreducible(f, s.module.window_generators(), s.module.dim()));
        const SimpleModule g = simple_module(pyramid_from({1, 0}, 3), tab(f, {0, 1}, {2, 2, 2}));
        CHECK(g.h == 0);
        CHECK(g.module.dim() == 4);
        CHECK(oracle::brute_force_irreducible(f, g.module.window_generators(), 4));
    }

    TEST_CASE("head of V(A) matches 2^(k-h)")
    {
        const Field f = Field::make(3);
        const Pyramid pi = pyramid_from({0, 0}, 2);
        for (const Tableau& A : all_tableaux(pi, prime_field_elements(f))) {
            const ShiftedModule V = build_VA(pi, A);
            const std::size_t head = head_dimension(V, hw_vector(V).vector);
            CHECK(head == (std::size_t(1) << (pi.k - matching(A.a, A.b))));
        }
    }

    TEST_CASE("restrictedness")
    {
        const Field f9 = Field::make(3, 2);
        const Fe w = f9.generator();
        const Pyramid pi = pyramid_from({0, 1}, 2);
        const Tableau inF3{{f9.from_int(1)}, {f9.from_int(2), f9.from_int(0)}};
        CHECK(restricted_check(pi, inF3).restricted);
        const Tableau bad{{f9.from_int(1)}, {f9.from_int(2), w}};
        const RestrictedVerdict v = restricted_check(pi, bad);
        CHECK_FALSE(v.restricted);
        CHECK_FALSE(v.entries_in_prime_field);
        CHECK(v.witness.has_value());
        const Pyramid flat = pyramid_from({1, 1}, 2);
        CHECK(restricted_check(flat, Tableau{{}, {f9.from_int(1), f9.from_int(2)}}).restricted);
        CHECK_FALSE(restricted_check(flat, Tableau{{}, {f9.from_int(1), w + f9.one()}}).restricted);
    }

    TEST_CASE("classification counts")
    {
        const Field f = Field::make(3);
        const auto rows = classify(pyramid_from({0, 0}, 1), f);
        CHECK(rows.size() == 9);
        std::size_t ones = 0;
        for (const auto& r : rows) ones += r.dim == 1;
        CHECK(ones == 3);
        const auto rows2 = classify(pyramid_from({1, 0}, 2), f);
        CHECK(rows2.size() == 18);
        for (const auto& r : rows2) CHECK((r.dim == 1) == (r.A.a[0] == r.A.b[0] || r.A.a[0] == r.A.b[1]));
        for (const auto& r : classify(pyramid_from({1, 1}, 2), f)) CHECK(r.dim == 1);
        const Pyramid pi = pyramid_from({0, 1}, 3);
        CHECK(classify(pi, f).size() == choose(3 + pi.k - 1, pi.k) * choose(3 + pi.level - 1, pi.level));
        CHECK_THROWS_AS(classify(pyramid_from({0, 0}, 4), f, false, 10), std::length_error);
    }

    TEST_CASE("multisets")
    {
        const Field f = Field::make(5);
        CHECK(multisets(prime_field_elements(f), 3).size() == choose(7, 3));
        CHECK(multisets(prime_field_elements(f), 0).size() == 1);
    }
}
