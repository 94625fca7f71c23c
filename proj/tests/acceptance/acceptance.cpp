// One line per acceptance criterion; exit status is the number of failures.
#include "syang/hopf.hpp"
#include "syang/rtt.hpp"
#include "syang/shifted.hpp"
#include "syang/suites.hpp"
#include "syang/supermod.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>

using namespace syang;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Collects the first failure; later failures only bump the count.
struct Tally {
    std::size_t cases = 0, failed = 0;
    std::string first;
    void expect(bool ok, const std::string& what)
    {
        ++cases;
        if (ok) return;
        if (failed++ == 0) first = what;
    }
    void expect(const Check& c) { expect(c.pass, c.check + " " + c.params.dump() + " " + c.witness.value_or("")); }
    Outcome done(const std::string& note = "") const
    {
        std::ostringstream s;
        s << cases << " checks";
        if (!note.empty()) s << ", " << note;
        if (failed) s << ", " << failed << " failed; first: " << first;
        return {failed == 0, s.str()};
    }
};

std::vector<Fe> all_elements(Field f) { return f.elements(); }

bool same_tail(const LaurentTail& a, const LaurentTail& b)
{
    const std::size_t n = std::max(a.order(), b.order());
    return a.padded(n) == b.padded(n);
}

// prod (1 + x u^-1) by subset sums, independent of elementary_tail
LaurentTail subset_tail(Field f, const std::vector<Fe>& xs, std::size_t N)
{
    std::vector<Fe> c(N + 1, f.zero());
    const std::size_t n = xs.size();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        const auto r = static_cast<std::size_t>(__builtin_popcount(mask));
        if (r > N) continue;
        Fe prod = f.one();
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) prod *= xs[i];
        c[r] += prod;
    }
    return LaurentTail(c);
}

// largest number of disjoint equal pairs between the rows
std::uint32_t pairing(const std::vector<Fe>& a, const std::vector<Fe>& b)
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

// c0 + c1 u^-1 + ... for prod (u + x) / u^deg
LaurentTail root_tail(Field f, const std::vector<Fe>& xs) { return subset_tail(f, xs, xs.size()); }

Outcome rtt_consistency()
{
    Tally t;
    for (std::uint32_t p : {3u, 5u}) {
        const Field f = Field::make(p);
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j)
                for (int k = 1; k <= 2; ++k)
                    for (int l = 1; l <= 2; ++l) t.expect(verify_rtt(f, i, j, k, l, 6));
    }
    return t.done("p in {3,5}, N = 6");
}

Outcome pbw_confluence_words()
{
    Tally t;
    for (std::uint32_t p : {3u, 5u}) t.expect(pbw_confluence(Field::make(p), 200, 5, 4, 20240 + p));
    return t.done("200 words per p");
}

Outcome p_center()
{
    Tally t;
    const Field f3 = Field::make(3);
    for (int i = 1; i <= 2; ++i)
        for (std::uint32_t r = 1; r <= 6; ++r) {
            const CentralityReport c = centrality_check(f3, i, r, 4);
            t.expect(c.central, "b" + std::to_string(i) + "(" + std::to_string(r) + ") vs " + c.witness);
        }
    for (std::uint32_t p : {3u, 5u}) {
        const Field f = Field::make(p);
        const auto b = b_series(f, 1, p - 1);
        for (std::uint32_t r = 1; r < p; ++r)
            t.expect(b[r].is_zero(), "b1(" + std::to_string(r) + ") != 0 at p = " + std::to_string(p));
    }
    return t.done();
}

Outcome restricted_rank()
{
    Tally t;
    const Field f3 = Field::make(3);
    for (std::uint32_t w = 1; w <= 6; ++w) {
        const auto r = restricted_rank_check(f3, w);
        t.expect(r.independent(), "weight " + std::to_string(w) + " restricted monomials dependent");
        t.expect(r.spanning(), "weight " + std::to_string(w) + " slice not spanned");
    }
    return t.done("p = 3, w <= 6");
}

Outcome hopf_descent()
{
    Tally t;
    for (std::uint32_t p : {3u, 5u}) {
        const Field f = Field::make(p);
        for (int i = 1; i <= 2; ++i) {
            t.expect(verify_delta_b(f, i, p + 3));
            t.expect(verify_antipode_b(f, i, p + 2));
        }
        for (const Check& c : verify_hopf_axioms(f, 5).checks) t.expect(c);
    }
    return t.done();
}

Outcome appendix()
{
    Tally t;
    for (std::uint32_t p : {3u, 5u})
        for (const Check& c : verify_appendix(Field::make(p), 6).checks) t.expect(c);
    return t.done("N = 6");
}

Outcome evaluation()
{
    Tally t;
    for (std::uint32_t p : {3u, 5u}) {
        const Field f = Field::make(p);
        const auto g = evaluation_b_coefficients(f, 1, 2 * p);
        // x^p - x
        std::vector<Fe> c(p + 1, f.zero());
        c[p] = f.one();
        c[1] = -f.one();
        const Poly art(f, c);
        for (std::size_t r = 1; r <= 2 * p && r < g.size(); ++r)
            t.expect(divmod(g[r], art).second.is_zero(), "g(" + std::to_string(r) + ") at p = " + std::to_string(p));
        t.expect(evaluation_divisibility_check(f, 1, 2 * p));
    }
    return t.done("r <= 2p");
}

Outcome eval_dimensions()
{
    Tally t;
    const Field f = Field::make(5, 2);
    std::size_t two = 0;
    for (const Fe& a : all_elements(f))
        for (const Fe& b : all_elements(f)) {
            const SuperModule M = eval_module(a, b);
            const std::size_t want = (a + b).is_zero() ? 1 : 2;
            two += want == 2;
            t.expect(M.dim() == want, "L(" + a.to_string() + "," + b.to_string() + ")");
            t.expect(irreducibility(M).absolutely_irreducible, "L(" + a.to_string() + "," + b.to_string() + ") reducible");
        }
    return t.done(std::to_string(two) + " of 625 two-dimensional");
}

bool hypothesis(const std::vector<std::pair<Fe, Fe>>& legs)
{
    for (const auto& x : legs)
        for (const auto& y : legs)
            if ((x.first + y.second).is_zero()) return false;
    return true;
}

void irreducible_tensor(Tally& t, const std::vector<std::pair<Fe, Fe>>& legs, std::size_t& spun)
{
    std::vector<SuperModule> ms;
    std::string name;
    for (const auto& [a, b] : legs) {
        ms.push_back(eval_module(a, b));
        name += "L(" + a.to_string() + "," + b.to_string() + ")";
    }
    const SuperModule M = tensor_all(ms);
    // spin every line, 5^8 vectors at most
    const IrreducibilityReport r = irreducibility(M, 400000);
    t.expect(M.dim() == (std::size_t(1) << legs.size()), name + " dimension");
    t.expect(r.absolutely_irreducible, name + " not absolutely irreducible");
    t.expect(r.spinning.has_value() && *r.spinning == r.absolutely_irreducible,
             name + " Burnside and spinning disagree");
    spun += r.spinning.has_value();
}

Outcome tensor_irreducibility()
{
    Tally t;
    std::size_t spun = 0, tested = 0;
    const Field f3 = Field::make(3);
    const auto e3 = all_elements(f3);
    for (const Fe& a1 : e3)
        for (const Fe& b1 : e3)
            for (const Fe& a2 : e3)
                for (const Fe& b2 : e3) {
                    const std::vector<std::pair<Fe, Fe>> legs{{a1, b1}, {a2, b2}};
                    if (!hypothesis(legs)) continue;
                    irreducible_tensor(t, legs, spun);
                    ++tested;
                }
    const Field f5 = Field::make(5);
    std::uint64_t state = 0x5eed5;
    auto next = [&] {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return f5.from_int(static_cast<std::int64_t>((state >> 33) % 5));
    };
    for (std::size_t k = 1; k <= 3; ++k) {
        std::size_t found = 0;
        const std::size_t want = k == 3 ? 10 : 40;
        for (int attempt = 0; attempt < 2000 && found < want; ++attempt) {
            std::vector<std::pair<Fe, Fe>> legs;
            for (std::size_t i = 0; i < k; ++i) legs.emplace_back(next(), next());
            if (!hypothesis(legs)) continue;
            irreducible_tensor(t, legs, spun);
            ++found;
            ++tested;
        }
    }
    return t.done(std::to_string(tested) + " tensors, " + std::to_string(spun) + " spun");
}

Outcome finite_irreps()
{
    Tally t;
    std::size_t pairs = 0;
    for (std::uint32_t p : {3u, 5u}) {
        const Field f = Field::make(p);
        for (std::size_t d = 0; d <= 2; ++d)
            for (const auto& r1 : multisets(prime_field_elements(f), d))
                for (const auto& r2 : multisets(prime_field_elements(f), d)) {
                    bool coprime = true;
                    for (const auto& x : r1)
                        for (const auto& y : r2) coprime &= x != y;
                    if (!coprime || pairs >= 60) continue;
                    ++pairs;
                    const LaurentTail l1 = root_tail(f, r1), l2 = root_tail(f, r2);
                    const auto pair = drinfeld_poly_check(l1, l2);
                    t.expect(pair.has_value(), "no Drinfeld pair");
                    if (!pair) continue;
                    t.expect(pair->P1.degree() == static_cast<int>(d) && pair->P2.degree() == static_cast<int>(d),
                             "Drinfeld polynomial degrees");
                    const FiniteIrrep irr = build_finite_irrep(l1, l2);
                    const WeightData w = hw_weight(irr.module, irr.hw_vector);
                    t.expect(same_tail(w.lambda1, l1) && same_tail(w.lambda2, l2), "hw weight mismatch");
                    t.expect(singular_space(irr.module).size() == 1, "singular space not a line");
                    t.expect(is_irreducible(irr.module), "not irreducible");
                    t.expect(restrictedness_action_check(irr.module));
                }
    }
    return t.done(std::to_string(pairs) + " pairs");
}

Outcome shifted_classification()
{
    Tally t;
    const Field f = Field::make(3);
    const auto values = prime_field_elements(f);
    std::size_t total = 0;
    for (std::uint32_t s = 0; s <= 2; ++s)
        for (std::uint32_t s12 = 0; s12 <= s; ++s12) {
            const ShiftMatrix sigma{s12, s - s12};
            for (std::uint32_t level = std::max<std::uint32_t>(s, 1); level <= 4; ++level) {
                const Pyramid pi = pyramid_from(sigma, level);
                const std::string at = "sigma (" + std::to_string(sigma.s12) + "," + std::to_string(sigma.s21) +
                                       ") l = " + std::to_string(level) + " ";
                const auto rows = classify(pi, f);
                t.expect(rows.size() == choose(3 + pi.k - 1, pi.k) * choose(3 + level - 1, level), at + "class count");
                for (const ClassRow& row : rows) {
                    ++total;
                    const std::string tag = at + row.A.to_string();
                    const SimpleModule L = simple_module(pi, row.A);
                    const std::uint32_t h = pairing(row.A.a, row.A.b);
                    t.expect(L.h == h && row.h == h, tag + " h");
                    t.expect(L.module.dim() == (std::size_t(1) << (pi.k - h)) && row.dim == L.module.dim(),
                             tag + " dim");
                    t.expect(same_tail(L.hw.lambda1, subset_tail(f, row.A.a, L.hw.lambda1.order())) &&
                                 same_tail(L.hw.lambda2, subset_tail(f, row.A.b, L.hw.lambda2.order())),
                             tag + " weights");
                    t.expect(L.hw.singular_dim == 1, tag + " hw line");
                    t.expect(L.irreducibility.absolutely_irreducible, tag + " irreducible");
                    const HwData again = hw_vector(L.module);
                    t.expect(again.singular_dim == 1, tag + " recomputed hw line");
                }
            }
        }
    return t.done(std::to_string(total) + " classes");
}

Outcome f9_dichotomy()
{
    Tally t;
    const Field f9 = Field::make(3, 2);
    const auto values = all_elements(f9);
    std::size_t in = 0, out = 0;
    for (const ShiftMatrix sigma : {ShiftMatrix{0, 0}, ShiftMatrix{1, 0}, ShiftMatrix{0, 1}})
        for (std::uint32_t level = std::max<std::uint32_t>(sigma.s12 + sigma.s21, 1); level <= 2; ++level) {
            const Pyramid pi = pyramid_from(sigma, level);
            for (const auto& a : multisets(values, pi.k))
                for (const auto& b : multisets(values, level)) {
                    const Tableau A{a, b};
                    bool prime = true;
                    for (const auto& x : a) prime &= x.in_prime_field();
                    for (const auto& x : b) prime &= x.in_prime_field();
                    const RestrictedVerdict v = restricted_check(pi, A);
                    if (prime) {
                        ++in;
                        t.expect(v.restricted, A.to_string() + " over F3 not restricted");
                    } else {
                        ++out;
                        t.expect(!v.restricted && v.witness.has_value(), A.to_string() + " restricted or no witness");
                    }
                }
        }
    return t.done(std::to_string(in) + " over F3, " + std::to_string(out) + " outside");
}

Outcome duality()
{
    Tally t;
    const Field f = Field::make(5, 2);
    for (const Fe& a : all_elements(f))
        for (const Fe& b : all_elements(f)) {
            const std::string tag = "L(" + a.to_string() + "," + b.to_string() + ")*";
            const SuperModule D = dual_tau(eval_module(a, b));
            const SuperModule W = eval_module(-b, -a);
            t.expect(D.dim() == W.dim(), tag + " dimension");
            const auto sd = singular_space(D), sw = singular_space(W);
            t.expect(sd.size() == 1 && sw.size() == 1, tag + " singular space");
            if (sd.size() != 1 || sw.size() != 1) continue;
            const WeightData wd = hw_weight(D, sd[0]), ww = hw_weight(W, sw[0]);
            t.expect(same_tail(wd.lambda1, ww.lambda1) && same_tail(wd.lambda2, ww.lambda2), tag + " weights");
        }
    return t.done("625 pairs over F25");
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"RTT consistency", rtt_consistency},
        {"PBW confluence", pbw_confluence_words},
        {"p-center", p_center},
        {"restricted basis rank", restricted_rank},
        {"Hopf descent", hopf_descent},
        {"appendix identities", appendix},
        {"evaluation divisibility", evaluation},
        {"evaluation-module dimensions", eval_dimensions},
        {"tensor irreducibility", tensor_irreducibility},
        {"finite irreducibles from Drinfeld pairs", finite_irreps},
        {"shifted classification", shifted_classification},
        {"F9 dichotomy", f9_dichotomy},
        {"duality", duality},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        failures += !o.pass;
        std::printf("%s %2zu %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    o.detail.c_str(), s);
        std::fflush(stdout);
    }
    return failures;
}
