#include "oracles.hpp"

#include <doctest.h>

#include <map>
#include <set>
#include <random>

using namespace syang;

namespace {

LaurentTail tail(Field f, std::vector<std::int64_t> c) { return make_tail(f, c); }

// Pascal's triangle reduced mod p, the oracle for Lucas.
std::uint32_t pascal(std::uint64_t n, std::uint64_t k, std::uint32_t p)
{
    std::vector<std::vector<std::uint32_t>> t(n + 1);
    for (std::uint64_t i = 0; i <= n; ++i) {
        t[i].assign(i + 1, 1);
        for (std::uint64_t j = 1; j < i; ++j) t[i][j] = (t[i - 1][j - 1] + t[i - 1][j]) % p;
    }
    return k > n ? 0 : t[n][k];
}

LaurentTail random_tail(Field f, std::mt19937_64& rng, std::size_t N, bool unit)
{
    std::uniform_int_distribution<std::uint32_t> d(0, f.order() - 1);
    std::vector<Fe> c;
    for (std::size_t i = 0; i <= N; ++i) c.push_back(f.element(d(rng)));
    if (unit) c[0] = f.one();
    return LaurentTail(c);
}

}  // namespace

TEST_SUITE("ffield")
{
    TEST_CASE("field construction rejects even and composite characteristic")
    {
        CHECK_THROWS_AS(Field::make(2), std::invalid_argument);
        CHECK_THROWS_AS(Field::make(4), std::invalid_argument);
        CHECK_THROWS_AS(Field::make(9), std::invalid_argument);
        CHECK(Field::make(3) == Field::make(3));
        CHECK(Field::make(3, 2).order() == 9);
    }

    TEST_CASE("modulus is the least irreducible by coefficient order")
    {
        // degree 2 and 3: irreducible iff no root, candidates in (c_{m-1},...,c_0) order
        for (std::uint32_t p : {3u, 5u, 7u})
            for (std::uint32_t m : {2u, 3u}) {
                std::vector<std::uint32_t> expect;
                const std::uint32_t count = m == 2 ? p * p : p * p * p;
                for (std::uint32_t code = 0; code < count && expect.empty(); ++code) {
                    std::vector<std::uint32_t> c(m + 1, 1);  // low first, leading 1
                    std::uint32_t x = code;
                    for (std::uint32_t i = 0; i < m; ++i) {
                        c[i] = x % p;  // the last digit varies fastest: c_0
                        x /= p;
                    }
                    bool root = false;
                    for (std::uint32_t r = 0; r < p && !root; ++r) {
                        std::uint64_t v = 0;
                        for (std::size_t i = c.size(); i-- > 0;) v = (v * r + c[i]) % p;
                        root = v == 0;
                    }
                    if (!root) expect = c;
                }
                const Field f = Field::make(p, m);
                CHECK(f.modulus() == expect);
            }
        CHECK(Field::make(3, 2).modulus() == detail::PrimePoly{1, 0, 1});
    }

    TEST_CASE("field axioms on F9 and F25, exhaustive")
    {
        for (auto [p, m] : {std::pair{3u, 2u}, std::pair{5u, 2u}}) {
            const Field f = Field::make(p, m);
            const auto el = f.elements();
            for (const auto& a : el) {
                CHECK(a + (-a) == f.zero());
                if (!a.is_zero()) CHECK(a * a.inverse() == f.one());
                for (const auto& b : el) {
                    CHECK(a * b == b * a);
                    CHECK(a + b == b + a);
                }
            }
            std::mt19937_64 rng(7);
            std::uniform_int_distribution<std::size_t> d(0, el.size() - 1);
            for (int t = 0; t < 300; ++t) {
                const Fe a = el[d(rng)], b = el[d(rng)], c = el[d(rng)];
                CHECK((a * b) * c == a * (b * c));
                CHECK(a * (b + c) == a * b + a * c);
            }
        }
        CHECK_THROWS_AS(Field::make(5).zero().inverse(), NotInvertible);
    }

    TEST_CASE("Frobenius fixes exactly the prime field")
    {
        for (auto [p, m] : {std::pair{3u, 1u}, std::pair{3u, 2u}, std::pair{3u, 3u}, std::pair{3u, 4u},
                            std::pair{5u, 2u}, std::pair{7u, 2u}}) {
            const Field f = Field::make(p, m);
            std::size_t fixed = 0;
            std::map<std::uint32_t, int> image;
            for (const auto& x : f.elements()) {
                const Fe y = x.frobenius();
                ++image[y.raw()];
                if (y == x) {
                    ++fixed;
                    CHECK(x.in_prime_field());
                }
            }
            CHECK(fixed == p);
            CHECK(image.size() == f.order());  // bijective
        }
    }

    TEST_CASE("element encodings and printing")
    {
        const Field f = Field::make(3, 2);
        const Fe w = f.generator();
        CHECK(w.coeffs() == std::vector<std::uint32_t>{0, 1});
        CHECK(w * w == f.from_int(-1));  // x^2 + 1
        CHECK(f.from_coeffs({2, 1}) == f.from_int(2) + w);
        CHECK(Field::make(5).from_int(-1).to_string() == "4");
    }

    TEST_CASE("binomials by Lucas match Pascal mod p")
    {
        for (std::uint32_t p : {3u, 5u, 7u})
            for (std::uint64_t n = 0; n <= 40; ++n)
                for (std::uint64_t k = 0; k <= n + 1; ++k) CHECK(binomial_mod(n, k, p) == pascal(n, k, p));
    }

    TEST_CASE("series products")
    {
        const Field f5 = Field::make(5), f3 = Field::make(3);
        CHECK(tail(f5, {1, 1, 0}) * tail(f5, {1, -1, 0}) == tail(f5, {1, 0, -1}));
        const auto a = tail(f5, {2, 3, 1});
        CHECK(a * tail(f5, {1, 0, 0}) == a);
        const auto x = tail(f3, {1, 1, 0, 0});
        CHECK(x * x * x == tail(f3, {1, 0, 0, 1}));
        CHECK_THROWS_AS(mul(x, x, 4), std::out_of_range);
    }

    TEST_CASE("series inverses")
    {
        const Field f5 = Field::make(5);
        CHECK(inverse(tail(f5, {1, 1, 0, 0})) == tail(f5, {1, -1, 1, -1}));
        CHECK(inverse(tail(f5, {1})) == tail(f5, {1}));
        const auto g = tail(f5, {1, 1, 1});
        CHECK(inverse(g) == tail(f5, {1, -1, 0}));
        CHECK(is_one(g * inverse(g)));
        CHECK_THROWS_AS(inverse(tail(f5, {0, 1})), NotInvertible);
    }

    TEST_CASE("series shift")
    {
        const Field f5 = Field::make(5);
        CHECK(shift(tail(f5, {1, 1, 0, 0}), f5.one(), 3) == tail(f5, {1, 1, 1, 1}));
        const auto a = tail(f5, {3, 1, 4, 1});
        CHECK(shift(a, f5.zero()) == a);
        // 2 C(2,1) 3 = 12 and 2 C(3,2) 3^2 = 54 mod 5
        CHECK(shift(tail(f5, {1, 0, 2, 0, 0}), f5.from_int(3), 4) == tail(f5, {1, 0, 2, 2, 4}));
    }

    TEST_CASE("shift agrees with x^r (1 - c x)^-r")
    {
        for (auto [p, m] : {std::pair{5u, 1u}, std::pair{3u, 2u}}) {
            const Field f = Field::make(p, m);
            const std::size_t N = 9;
            for (const auto& c : f.elements())
                for (std::size_t r = 1; r <= 4; ++r) {
                    std::vector<Fe> xr(N + 1, f.zero()), geo(N + 1, f.zero());
                    xr[r] = f.one();
                    geo[0] = f.one();
                    geo[1] = -c;
                    LaurentTail lhs = shift(LaurentTail(xr), c, N);
                    for (std::size_t i = 0; i < r; ++i) lhs = lhs * LaurentTail(geo);
                    CHECK(lhs == LaurentTail(xr));
                }
        }
    }

    TEST_CASE("series ring properties, randomized")
    {
        std::mt19937_64 rng(11);
        for (auto [p, m] : {std::pair{3u, 1u}, std::pair{5u, 1u}, std::pair{3u, 2u}}) {
            const Field f = Field::make(p, m);
            for (int t = 0; t < 40; ++t) {
                const auto a = random_tail(f, rng, 6, false), b = random_tail(f, rng, 6, false),
                           c = random_tail(f, rng, 6, false), u = random_tail(f, rng, 6, true);
                CHECK((a * b) * c == a * (b * c));
                CHECK(a * b == b * a);
                CHECK(is_one(u * inverse(u)));
                CHECK(is_one(inverse(u) * u));
                const Fe s = f.element(static_cast<std::uint32_t>(rng() % f.order()));
                CHECK(shift(a * b, s, 6) == shift(a, s, 6) * shift(b, s, 6));
            }
        }
    }

    TEST_CASE("series comparison at mismatched orders is partial")
    {
        const Field f = Field::make(3);
        const auto cmp = compare(tail(f, {1, 1, 2}), tail(f, {1, 1}));
        CHECK(cmp.equal);
        CHECK(cmp.partial);
        CHECK(cmp.order == 1);
        const auto cmp2 = compare(tail(f, {1, 1, 2}), tail(f, {1, 2, 2}));
        CHECK_FALSE(cmp2.equal);
        CHECK(cmp2.first_mismatch == 1);
    }
}

TEST_SUITE("poly")
{
    TEST_CASE("products of linear factors")
    {
        const Field f3 = Field::make(3), f5 = Field::make(5);
        CHECK(poly_from_roots(f3, {}) == Poly::constant(f3.one()));
        CHECK(poly_from_roots(f3, {f3.one()}).to_string() == "u + 1");
        CHECK(poly_from_roots(f5, {f5.one(), f5.from_int(2)}) ==
              Poly(f5, {f5.from_int(2), f5.from_int(3), f5.one()}));
    }

    TEST_CASE("division and gcd")
    {
        const Field f = Field::make(5);
        const Poly a = poly_from_roots(f, {f.one(), f.from_int(2), f.from_int(2)});
        const Poly b = poly_from_roots(f, {f.from_int(2), f.from_int(3)});
        const auto [q, r] = divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
        CHECK(gcd(a, b) == poly_from_roots(f, {f.from_int(2)}));
        CHECK(Poly(f).degree() == Poly::kZeroDegree);
        CHECK_THROWS_AS(divmod(a, Poly(f)), NotInvertible);
    }

    TEST_CASE("roots recover the multiset, checked by evaluation")
    {
        for (auto [p, m] : {std::pair{3u, 1u}, std::pair{5u, 1u}, std::pair{3u, 2u}}) {
            const Field f = Field::make(p, m);
            const auto el = f.elements();
            for (std::size_t i = 0; i < el.size(); ++i)
                for (std::size_t j = i; j < el.size(); ++j) {
                    const Poly P = poly_from_roots(f, {el[i], el[j]});
                    // P = (u + a)(u + b) vanishes at -a, -b and nowhere else
                    std::vector<Fe> zeros;
                    for (const auto& x : el)
                        if (P(x).is_zero()) zeros.push_back(x);
                    CHECK(zeros.size() == (i == j ? 1u : 2u));
                    const auto roots = roots_in_field(P);
                    REQUIRE(roots.has_value());
                    CHECK(roots->size() == 2);
                    std::vector<Fe> back;
                    for (const auto& r : *roots) back.push_back(-r);
                    std::sort(back.begin(), back.end());
                    std::vector<Fe> want{el[i], el[j]};
                    std::sort(want.begin(), want.end());
                    std::vector<Fe> rs = *roots;
                    CHECK(std::is_sorted(rs.begin(), rs.end()));
                    // roots are the zeros of P with multiplicity
                    for (const auto& r : rs) CHECK(P(r).is_zero());
                    CHECK(back == want);
                }
        }
        const Field f3 = Field::make(3);
        CHECK_FALSE(roots_in_field(Poly(f3, {f3.one(), f3.zero(), f3.one()})).has_value());  // u^2 + 1
    }

    TEST_CASE("restricted tails")
    {
        const Field f3 = Field::make(3), f9 = Field::make(3, 2);
        CHECK(is_restricted(tail(f3, {1})));
        CHECK(is_restricted(tail(f3, {1, 1})));
        CHECK_FALSE(is_restricted(LaurentTail({f9.one(), f9.generator()})));
        // against the root criterion, every tail of degree <= 2 over F9
        for (const auto& a : f9.elements())
            for (const auto& b : f9.elements()) {
                const LaurentTail t({f9.one(), a, b});
                CHECK(is_restricted(t) == is_restricted_by_roots(t));
            }
    }
}

TEST_SUITE("matrix")
{
    TEST_CASE("rank and kernel against enumeration over F3")
    {
        const Field f = Field::make(3);
        std::mt19937_64 rng(5);
        for (int t = 0; t < 60; ++t) {
            Matrix a(f, 3, 3);
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j) a.set(i, j, f.from_int(rng() % 3));
            // image size is 3^rank
            std::set<std::vector<std::uint32_t>> image;
            std::size_t kernel_count = 0;
            for (std::uint32_t code = 0; code < 27; ++code) {
                Vec v{f.from_int(code % 3), f.from_int(code / 3 % 3), f.from_int(code / 9)};
                const Vec img = a.apply(v);
                std::vector<std::uint32_t> raw;
                bool zero = true;
                for (const auto& x : img) {
                    raw.push_back(x.raw());
                    zero &= x.is_zero();
                }
                image.insert(raw);
                kernel_count += zero;
            }
            std::size_t r = 0;
            for (std::size_t s = 1; s < image.size(); s *= 3) ++r;
            CHECK(rank(a) == r);
            const auto ker = kernel(a);
            std::size_t expect = 1;
            for (std::size_t i = 0; i < ker.size(); ++i) expect *= 3;
            CHECK(expect == kernel_count);
            for (const auto& v : ker)
                for (const auto& x : a.apply(v)) CHECK(x.is_zero());
            if (r == 3) CHECK((a * inverse(a)).is_identity());
            else CHECK_THROWS_AS(inverse(a), NotInvertible);
        }
    }

    TEST_CASE("kron and echelon bases")
    {
        const Field f = Field::make(5);
        const Matrix a = Matrix::from_rows(f, {{1, 2}, {3, 4}});
        const Matrix b = Matrix::from_rows(f, {{0, 1}, {1, 0}});
        const Matrix k = a.kron(b);
        CHECK(k.rows() == 4);
        CHECK(k.at(1, 2) == f.from_int(2));  // a_01 b_10
        CHECK(a.kron(b) * a.kron(b) == (a * a).kron(b * b));
        EchelonBasis eb(f.data(), 3);
        CHECK(eb.insert(Vec{f.one(), f.zero(), f.one()}));
        CHECK(eb.insert(Vec{f.zero(), f.one(), f.zero()}));
        CHECK_FALSE(eb.insert(Vec{f.from_int(2), f.from_int(3), f.from_int(2)}));
        CHECK(eb.size() == 2);
    }
}
