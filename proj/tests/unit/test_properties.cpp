#include "oracles.hpp"
#include "syang/io.hpp"
#include "syang/shifted.hpp"
#include "syang/suites.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

using namespace syang;

namespace {

Vec basis0(Field f, std::size_t n)
{
    Vec v(n, f.zero());
    v[0] = f.one();
    return v;
}

LaurentTail roots_tail(Field f, const std::vector<Fe>& xs, std::size_t N)
{
    LaurentTail t = make_tail(f, {1}).padded(N);
    for (const Fe& x : xs) t = t * LaurentTail({f.one(), x}).padded(N);
    return t;
}

std::uint32_t pairing(const std::vector<Fe>& a, const std::vector<Fe>& b)
{
    std::map<std::uint32_t, int> ca, cb;
    for (const auto& x : a) ++ca[x.raw()];
    for (const auto& x : b) ++cb[x.raw()];
    std::uint32_t h = 0;
    for (auto [v, n] : ca) h += std::min(n, cb[v]);
    return h;
}

std::vector<ShiftMatrix> small_shifts()
{
    return {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
}

}  // namespace

TEST_SUITE("supermod-properties")
{
    TEST_CASE("RTT and parity on random tensors")
    {
        std::mt19937 rng(17);
        for (std::uint32_t p : {3u, 5u}) {
            const Field f = Field::make(p);
            for (int trial = 0; trial < 6; ++trial) {
                std::vector<std::pair<int, int>> legs;
                const int k = 1 + trial % 3;
                for (int i = 0; i < k; ++i) legs.emplace_back(rng() % p, rng() % p);
                const SuperModule M = oracle::probe_module(f, legs);
                CHECK(parity_check(M).pass);
                for (int s = 0; s < 4; ++s) {
                    const int i = 1 + rng() % 2, j = 1 + rng() % 2, kk = 1 + rng() % 2, l = 1 + rng() % 2;
                    const Check c = module_rtt_check(M, i, j, kk, l);
                    CHECK_MESSAGE(c.pass, c.witness.value_or(""));
                }
            }
        }
    }

    TEST_CASE("tensor hw weights multiply")
    {
        const Field f = Field::make(5, 2);
        const auto els = f.elements();
        std::mt19937 rng(3);
        const std::size_t N = 6;
        for (int trial = 0; trial < 40; ++trial) {
            const Fe a1 = els[rng() % 25], b1 = els[rng() % 25], a2 = els[rng() % 25], b2 = els[rng() % 25];
            const SuperModule A = eval_module(a1, b1), B = eval_module(a2, b2);
            const SuperModule AB = tensor(A, B);
            const WeightData wa = hw_weight(A, basis0(f, A.dim()), N), wb = hw_weight(B, basis0(f, B.dim()), N);
            const WeightData w = hw_weight(AB, basis0(f, AB.dim()), N);
            CHECK(w.lambda1.padded(N) == wa.lambda1.padded(N) * wb.lambda1.padded(N));
            CHECK(w.lambda2.padded(N) == wa.lambda2.padded(N) * wb.lambda2.padded(N));
        }
    }

    TEST_CASE("Drinfeld pairs are invariant under restricted factors")
    {
        for (std::uint32_t p : {3u, 5u}) {
            const Field f = Field::make(p);
            const auto vals = prime_field_elements(f);
            for (const auto& r1 : multisets(vals, 2))
                for (const auto& extra : multisets(vals, 1)) {
                    const std::vector<Fe> r2{f.from_int(1) + r1[0]};
                    const auto base = drinfeld_poly_check(roots_tail(f, r1, 3), roots_tail(f, {r2[0], r1[1]}, 3));
                    std::vector<Fe> s1 = r1, s2{r2[0], r1[1]};
                    s1.push_back(extra[0]);
                    s2.push_back(extra[0]);
                    const auto scaled = drinfeld_poly_check(roots_tail(f, s1, 3), roots_tail(f, s2, 3));
                    REQUIRE(base.has_value());
                    REQUIRE(scaled.has_value());
                    CHECK(base->P1 == scaled->P1);
                    CHECK(base->P2 == scaled->P2);
                    CHECK(gcd(base->P1, base->P2).degree() == 0);
                    CHECK(base->P1.degree() == base->P2.degree());
                }
        }
    }

    TEST_CASE("Burnside and spinning agree on small modules")
    {
        const Field f = Field::make(3);
        const auto vals = f.elements();
        for (const Fe& a : vals)
            for (const Fe& b : vals)
                for (const Fe& c : vals) {
                    const SuperModule M = tensor(eval_module(a, b), eval_module(c, f.one()));
                    const IrreducibilityReport r = irreducibility(M);
                    REQUIRE(r.spinning.has_value());
                    CHECK(*r.spinning == r.absolutely_irreducible);
                }
    }
}

TEST_SUITE("shifted-properties")
{
    TEST_CASE("V(A) across the desk-scale range")
    {
        const Field f = Field::make(3);
        for (const ShiftMatrix sigma : small_shifts())
            for (std::uint32_t level = std::max(1u, sigma.s12 + sigma.s21); level <= 4; ++level) {
                const Pyramid pi = pyramid_from(sigma, level);
                const std::size_t N = std::max<std::size_t>(default_order(pi, f), pi.k + 3);
                for (const auto& a : multisets(prime_field_elements(f), pi.k))
                    for (const auto& b : multisets(prime_field_elements(f), level)) {
                        const Tableau A{a, b};
                        CAPTURE(A.to_string());
                        const ShiftedModule V = build_VA(pi, A, N);
                        // truncation
                        for (std::size_t r = pi.k + 1; r <= pi.k + 3; ++r) CHECK(V.tails().d1[r].is_zero());
                        // weights
                        const HwData hw = hw_vector(V);
                        CHECK(hw.lambda1 == roots_tail(f, a, V.order()));
                        CHECK(hw.lambda2 == roots_tail(f, b, V.order()));
                        // window sufficiency
                        const auto w = singular_space(V, sigma.s12 + pi.k);
                        const auto full = singular_space(V, V.order());
                        std::vector<Vec> both = w;
                        both.insert(both.end(), full.begin(), full.end());
                        CHECK(w.size() == full.size());
                        CHECK(oracle::span_rank(f, both) == w.size());
                        // head
                        CHECK(head_dimension(V, hw.vector) == (std::size_t(1) << (pi.k - pairing(a, b))));
                    }
            }
    }

    TEST_CASE("row equivalence is detected by weights and dimension")
    {
        const Field f = Field::make(3);
        std::mt19937 rng(5);
        for (const ShiftMatrix sigma : {ShiftMatrix{0, 0}, ShiftMatrix{1, 0}, ShiftMatrix{0, 1}}) {
            const Pyramid pi = pyramid_from(sigma, 3);
            const auto tabs = all_tableaux(pi, prime_field_elements(f));
            for (int trial = 0; trial < 30; ++trial) {
                const Tableau& A = tabs[rng() % tabs.size()];
                const Tableau& B = tabs[rng() % tabs.size()];
                const SimpleModule la = simple_module(pi, A), lb = simple_module(pi, B);
                const bool same = la.module.dim() == lb.module.dim() && la.hw.lambda1 == lb.hw.lambda1 &&
                                  la.hw.lambda2 == lb.hw.lambda2;
                CHECK(same == row_equivalent(A, B));
                Tableau P = A;
                std::shuffle(P.a.begin(), P.a.end(), rng);
                std::shuffle(P.b.begin(), P.b.end(), rng);
                const SimpleModule lp = simple_module(pi, P);
                CHECK(lp.module.dim() == la.module.dim());
                CHECK(lp.hw.lambda1 == la.hw.lambda1);
                CHECK(lp.hw.lambda2 == la.hw.lambda2);
            }
        }
    }

    TEST_CASE("order of the right-column pullbacks")
    {
        const Field f = Field::make(5);
        // right columns hold b[s21 + k ..], one Delta+ pullback each
        const Pyramid rho = pyramid_from({3, 0}, 4);
        Tableau B{{f.from_int(1)}, {f.from_int(1), f.from_int(2), f.from_int(0), f.from_int(4)}};
        const ShiftedModule W = build_VA(rho, B);
        const HwData hw = hw_vector(W);
        std::vector<Fe> right(B.b.begin() + rho.k, B.b.end());
        std::sort(right.begin(), right.end());
        do {
            Tableau C = B;
            std::copy(right.begin(), right.end(), C.b.begin() + rho.k);
            const ShiftedModule X = build_VA(rho, C);
            const HwData hx = hw_vector(X);
            CHECK(X.dim() == W.dim());
            CHECK(hx.lambda1 == hw.lambda1);
            CHECK(hx.lambda2 == hw.lambda2);
        } while (std::next_permutation(right.begin(), right.end()));
    }
}

TEST_SUITE("io")
{
    TEST_CASE("reports embed the run parameters")
    {
        const Field f = Field::make(5);
        SuiteConfig cfg;
        cfg.seed = 9;
        for (const std::string& name : suite_names()) {
            const Report r = run_suite(name, f, cfg);
            CAPTURE(name);
            REQUIRE_FALSE(r.checks.empty());
            for (const Check& c : r.checks)
                for (const char* key : {"p", "m", "N"}) CHECK(c.params.contains(key));
        }
    }
}
