#include "syang/suites.hpp"

#include "syang/hopf.hpp"
#include "syang/rtt.hpp"
#include "syang/supermod.hpp"

#include <random>

namespace syang {

std::vector<Generator> random_word(std::uint64_t& state, std::uint32_t max_len, std::uint32_t max_r)
{
    std::mt19937_64 rng(state);
    std::uniform_int_distribution<std::uint32_t> len(1, max_len), kind(0, 3), sup(1, max_r);
    std::vector<Generator> w(len(rng));
    for (auto& g : w) g = Generator{Kind(kind(rng)), sup(rng)};
    state = rng();
    return w;
}

std::vector<AlgebraElement> all_bracketings(Field f, const std::vector<Generator>& word)
{
    const std::size_t n = word.size();
    // table[i][j]: all values of word[i..j)
    std::vector<std::vector<std::vector<AlgebraElement>>> table(n + 1, std::vector<std::vector<AlgebraElement>>(n + 1));
    for (std::size_t i = 0; i < n; ++i) table[i][i + 1] = {AlgebraElement::generator(f, word[i].kind, word[i].r)};
    for (std::size_t len = 2; len <= n; ++len)
        for (std::size_t i = 0; i + len <= n; ++i)
            for (std::size_t m = i + 1; m < i + len; ++m)
                for (const auto& x : table[i][m])
                    for (const auto& y : table[m][i + len]) table[i][i + len].push_back(multiply(x, y));
    return n ? table[0][n] : std::vector<AlgebraElement>{AlgebraElement::one(f)};
}

Check pbw_confluence(Field f, std::size_t words, std::uint32_t max_len, std::uint32_t max_r, std::uint64_t seed)
{
    Check c("pbw_confluence", {{"p", f.characteristic()},
                               {"m", f.degree()},
                               {"N", max_r},  // superscript bound
                               {"words", words},
                               {"max_len", max_len},
                               {"max_r", max_r},
                               {"seed", seed}});
    std::uint64_t state = seed;
    for (std::size_t t = 0; t < words; ++t) {
        const auto w = random_word(state, max_len, max_r);
        std::string name;
        std::uint32_t weight = 0;
        int degree = 0, parity = 0;
        for (const auto& g : w) {
            name += letter_name(make_letter(g.kind, g.r));
            weight += g.r;
            degree += g.kind == Kind::E ? 1 : g.kind == Kind::F ? -1 : 0;
            parity ^= (g.kind == Kind::E || g.kind == Kind::F);
        }
        const AlgebraElement nf = normal_form(f, w);
        for (const auto& x : all_bracketings(f, w))
            if (x != nf) {
                c.pass = false;
                c.witness = "word " + name + ": left-to-right " + nf.to_string() + " vs bracketing " + x.to_string();
                return c;
            }
        for (const auto& [m, coef] : nf.terms())
            // relations lower the weight (e(1)f(1) = -f(1)e(1) + d2(1) - d1(1)), so it is only bounded
            if (monomial_weight(m) > weight || monomial_degree(m) != degree || monomial_parity(m) != parity) {
                c.pass = false;
                c.witness = "word " + name + ": monomial " + monomial_name(m) + " breaks weight/degree/parity";
                return c;
            }
    }
    return c;
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"relations", "pbw", "pcenter", "hopf", "appendix", "evaluation"};
    return names;
}

std::size_t suite_default_order(const std::string& name, Field f)
{
    const std::size_t p = f.characteristic();
    if (name == "relations" || name == "appendix") return 6;
    if (name == "hopf") return 5;
    if (name == "pbw") return std::min<std::size_t>(2 * p, 6);
    if (name == "pcenter" || name == "evaluation") return 2 * p;
    throw std::invalid_argument("unknown suite '" + name + "'");
}

Report run_suite(const std::string& name, Field f, const SuiteConfig& cfg)
{
    const std::size_t N = cfg.order.value_or(suite_default_order(name, f));
    const std::uint32_t p = f.characteristic();
    Report rep;
    if (name == "relations") {
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j)
                for (int k = 1; k <= 2; ++k)
                    for (int l = 1; l <= 2; ++l) rep.add(verify_rtt(f, i, j, k, l, N));
        rep.add(verify_t_inverse(f, N));
        rep.add(verify_gauss_roundtrip(f, N));
    } else if (name == "pbw") {
        rep.add(pbw_confluence(f, 200, 5, 4, cfg.seed));
        for (std::uint32_t w = 1; w <= N; ++w) {
            const auto r = restricted_rank_check(f, w);
            Check c("restricted_basis_rank", {{"p", p}, {"m", f.degree()}, {"N", w}, {"dim", r.dim},
                                              {"restricted", r.restricted}, {"ideal_rank", r.ideal_rank}});
            c.pass = r.independent();
            if (!c.pass)
                c.witness = "weight " + std::to_string(w) + ": combined rank " + std::to_string(r.combined_rank) +
                            " < " + std::to_string(r.ideal_rank + r.restricted);
            rep.add(std::move(c));
        }
    } else if (name == "pcenter") {
        for (int i = 1; i <= 2; ++i)
            for (std::uint32_t r = 1; r <= N; ++r) {
                const auto cr = centrality_check(f, i, r, 4);
                Check c("centrality", {{"p", p}, {"m", f.degree()}, {"N", N}, {"i", i}, {"r", r}, {"s_max", 4}});
                c.pass = cr.central;
                if (!cr.central) c.witness = cr.witness;
                rep.add(std::move(c));
            }
        const auto b1 = b_series(f, 1, p);
        Check c("b1_vanishes_below_p", {{"p", p}, {"m", f.degree()}, {"N", p - 1}});
        for (std::uint32_t r = 1; r < p; ++r)
            if (!b1[r].is_zero()) {
                c.pass = false;
                c.witness = "b1(" + std::to_string(r) + ") = " + b1[r].to_string();
                break;
            }
        rep.add(std::move(c));
    } else if (name == "hopf") {
        rep.append(verify_hopf_axioms(f, N));
        for (int i = 1; i <= 2; ++i) rep.add(verify_delta_b(f, i, p + 3));
        for (int i = 1; i <= 2; ++i) rep.add(verify_antipode_b(f, i, p + 2));
    } else if (name == "appendix") {
        rep.append(verify_appendix(f, N));
    } else if (name == "evaluation") {
        for (int i = 1; i <= 2; ++i) rep.add(evaluation_divisibility_check(f, i, N));
    } else {
        throw std::invalid_argument("unknown suite '" + name + "'");
    }
    return rep;
}

}  // namespace syang
