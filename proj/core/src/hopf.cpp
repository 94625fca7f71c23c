#include "syang/hopf.hpp"

#include <array>

namespace syang {

namespace {

struct HopfCache {
    std::array<TensorTail, 4> delta_tail;  // indexed by Kind
    std::array<AlgebraTail, 4> s_tail;
    std::map<Monomial, TensorElement> delta_mono;
    std::map<Monomial, AlgebraElement> s_mono;
};

thread_local std::map<const FieldData*, HopfCache> h_cache;

std::string pq(const char* name, std::size_t r)
{
    return std::string(name) + "(" + std::to_string(r) + ")";
}

json base_params(Field f, std::size_t N)
{
    return {{"p", f.characteristic()}, {"m", f.degree()}, {"N", N}};
}

void build_delta_tails(Field f, std::size_t N, HopfCache& c)
{
    const TensorTail T11 = coproduct_t(f, 1, 1, N), T12 = coproduct_t(f, 1, 2, N);
    const TensorTail T21 = coproduct_t(f, 2, 1, N), T22 = coproduct_t(f, 2, 2, N);
    const TensorTail inv11 = inverse(T11, N);
    const TensorTail ft = mul(T21, inv11, N);
    c.delta_tail[int(Kind::D1)] = T11;
    c.delta_tail[int(Kind::E)] = mul(inv11, T12, N);
    c.delta_tail[int(Kind::F)] = ft;
    c.delta_tail[int(Kind::D2)] = T22 - mul(ft, T12, N);
}

void build_s_tails(Field f, std::size_t N, HopfCache& c)
{
    const AlgebraTail p11 = t_prime_series(f, 1, 1, N), p12 = t_prime_series(f, 1, 2, N);
    const AlgebraTail p21 = t_prime_series(f, 2, 1, N), p22 = t_prime_series(f, 2, 2, N);
    const AlgebraTail inv11 = inverse(p11, N);
    const AlgebraTail e = mul(p12, inv11, N);
    c.s_tail[int(Kind::D1)] = p11;
    c.s_tail[int(Kind::E)] = e;
    c.s_tail[int(Kind::F)] = mul(inv11, p21, N);
    c.s_tail[int(Kind::D2)] = p22 + mul(e, p21, N);
}

const TensorElement& delta_letter(Field f, HopfCache& c, Letter l)
{
    const Kind k = letter_kind(l);
    const std::size_t r = letter_index(l);
    TensorTail& t = c.delta_tail[int(k)];
    if (t.empty() || t.order() < r) build_delta_tails(f, r, c);
    return t[r];
}

const AlgebraElement& s_letter(Field f, HopfCache& c, Letter l)
{
    const Kind k = letter_kind(l);
    const std::size_t r = letter_index(l);
    AlgebraTail& t = c.s_tail[int(k)];
    if (t.empty() || t.order() < r) build_s_tails(f, r, c);
    return t[r];
}

const TensorElement& delta_mono(Field f, HopfCache& c, const Monomial& m)
{
    auto it = c.delta_mono.find(m);
    if (it != c.delta_mono.end()) return it->second;
    TensorElement v;
    if (m.empty()) {
        v = TensorElement::one(f, 2);
    } else {
        const Monomial prefix(m.begin(), m.end() - 1);
        v = delta_mono(f, c, prefix) * delta_letter(f, c, m.back());
    }
    return c.delta_mono.emplace(m, std::move(v)).first->second;
}

const AlgebraElement& s_mono(Field f, HopfCache& c, const Monomial& m)
{
    auto it = c.s_mono.find(m);
    if (it != c.s_mono.end()) return it->second;
    AlgebraElement v;
    if (m.empty()) {
        v = AlgebraElement::one(f);
    } else {
        const Monomial prefix(m.begin(), m.end() - 1);
        v = s_letter(f, c, m.back()) * s_mono(f, c, prefix);
        if (monomial_parity(prefix) & int(letter_odd(m.back()))) v = -v;
    }
    return c.s_mono.emplace(m, std::move(v)).first->second;
}

TensorElement eps_leg(Field f, const Monomial& m)
{
    return m.empty() ? TensorElement::one(f, 0) : TensorElement(f, 0);
}

/// Series product of p shifted copies, factor j = 0 first: a(u) a(u-1) ... a(u-p+1).
template <class R>
Series<R> shifted_product(const Series<R>& a, Field f, std::size_t N)
{
    Series<R> acc = a.truncated(N);
    for (std::uint32_t j = 1; j < f.characteristic(); ++j) acc = mul(acc, shift(a, f.from_int(j), N), N);
    return acc;
}

template <class R>
bool record_mismatch(Check& c, const std::string& what, const Series<R>& a, const Series<R>& b)
{
    const SeriesComparison cmp = compare(a, b);
    if (cmp.equal) return false;
    c.pass = false;
    c.witness = what + " differs at u^-" + std::to_string(*cmp.first_mismatch) + ": " +
                a[*cmp.first_mismatch].to_string() + " vs " + b[*cmp.first_mismatch].to_string();
    return true;
}

}  // namespace

TensorTail coproduct_t(Field f, int i, int j, std::size_t N)
{
    TensorTail out = TensorTail::constant(TensorElement(f, 2), N);
    for (int k = 1; k <= 2; ++k)
        out += tensor_series(lift(t_series(f, i, k, N)), lift(t_series(f, k, j, N)), N);
    return out;
}

TensorTail coproduct_generator_tail(Field f, Kind k, std::size_t N)
{
    HopfCache& c = h_cache[f.data()];
    TensorTail& t = c.delta_tail[int(k)];
    if (t.empty() || t.order() < N) build_delta_tails(f, N, c);
    return t.truncated(N);
}

TensorElement coproduct_monomial(Field f, const Monomial& m)
{
    return delta_mono(f, h_cache[f.data()], m);
}

namespace {

std::size_t max_index(const AlgebraElement& x)
{
    std::size_t r = 0;
    for (const auto& kv : x.terms())
        for (Letter l : kv.first) r = std::max<std::size_t>(r, letter_index(l));
    return r;
}

}  // namespace

TensorElement coproduct(const AlgebraElement& x)
{
    const Field f = x.field();
    HopfCache& c = h_cache[f.data()];
    if (const std::size_t r = max_index(x); r > 0) delta_letter(f, c, make_letter(Kind::D1, std::uint32_t(r)));
    TensorElement out(f, 2);
    for (const auto& [m, a] : x.terms()) out += delta_mono(f, c, m) * Fe(f.data(), a);
    return out;
}

AlgebraElement antipode_monomial(Field f, const Monomial& m)
{
    return s_mono(f, h_cache[f.data()], m);
}

AlgebraElement antipode(const AlgebraElement& x)
{
    const Field f = x.field();
    HopfCache& c = h_cache[f.data()];
    if (const std::size_t r = max_index(x); r > 0) s_letter(f, c, make_letter(Kind::D1, std::uint32_t(r)));
    AlgebraElement out(f);
    for (const auto& [m, a] : x.terms()) out += s_mono(f, c, m) * Fe(f.data(), a);
    return out;
}

Fe counit(const AlgebraElement& x) { return x.constant_term(); }

Report verify_hopf_axioms(Field f, std::size_t N)
{
    Report rep;
    auto delta_fn = [f](const Monomial& m) { return coproduct_monomial(f, m); };
    auto eps_fn = [f](const Monomial& m) { return eps_leg(f, m); };
    auto s_fn = [f](const Monomial& m) { return TensorElement::from(antipode_monomial(f, m)); };

    Check transport{"delta_letterwise", base_params(f, N)};
    Check coassoc{"coassociativity", base_params(f, N)};
    Check counit_ax{"counit", base_params(f, N)};
    Check antipode_ax{"antipode", base_params(f, N)};
    Check mult{"delta_multiplicative", base_params(f, N)};

    std::array<TensorTail, 4> D;
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) D[(i - 1) * 2 + j - 1] = coproduct_t(f, i, j, N);

    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) {
            const AlgebraTail t = t_series(f, i, j, N);
            const TensorTail& Dt = D[(i - 1) * 2 + j - 1];
            // sum_{k,l} t_ik (x) t_kl (x) t_lj
            TensorTail triple = TensorTail::constant(TensorElement(f, 3), N);
            for (int k = 1; k <= 2; ++k)
                for (int l = 1; l <= 2; ++l)
                    triple += tensor_series(tensor_series(lift(t_series(f, i, k, N)), lift(t_series(f, k, l, N)), N),
                                            lift(t_series(f, l, j, N)), N);
            const std::string tag = "t_" + std::to_string(i) + std::to_string(j);
            for (std::size_t r = 0; r <= N; ++r) {
                const std::string at = pq(tag.c_str(), r);
                if (transport.pass && coproduct(t[r]) != Dt[r]) {
                    transport.pass = false;
                    transport.witness = "Delta(" + at + ") letterwise: " + coproduct(t[r]).to_string() +
                                        " vs " + Dt[r].to_string();
                }
                if (coassoc.pass) {
                    const TensorElement l = map_leg(Dt[r], 0, 2, delta_fn), rr = map_leg(Dt[r], 1, 2, delta_fn);
                    if (l != rr || l != triple[r]) {
                        coassoc.pass = false;
                        coassoc.witness = at + ": (Delta x id)Delta = " + l.to_string() + ", (id x Delta)Delta = " +
                                          rr.to_string();
                    }
                }
                if (counit_ax.pass) {
                    const TensorElement x = TensorElement::from(t[r]);
                    const TensorElement l = map_leg(Dt[r], 0, 0, eps_fn), rr = map_leg(Dt[r], 1, 0, eps_fn);
                    if (l != x || rr != x) {
                        counit_ax.pass = false;
                        counit_ax.witness = at + ": (eps x id)Delta = " + l.to_string() + ", (id x eps)Delta = " +
                                            rr.to_string();
                    }
                }
                if (antipode_ax.pass) {
                    const AlgebraElement target = AlgebraElement::scalar(counit(t[r]));
                    const AlgebraElement l = multiply_legs(map_leg(Dt[r], 0, 1, s_fn));
                    const AlgebraElement rr = multiply_legs(map_leg(Dt[r], 1, 1, s_fn));
                    if (l != target || rr != target) {
                        antipode_ax.pass = false;
                        antipode_ax.witness = at + ": m(S x id)Delta = " + l.to_string() + ", m(id x S)Delta = " +
                                              rr.to_string();
                    }
                }
            }
        }

    for (int a = 0; a < 4 && mult.pass; ++a)
        for (int b = 0; b < 4 && mult.pass; ++b) {
            const AlgebraTail ta = t_series(f, a / 2 + 1, a % 2 + 1, N);
            const AlgebraTail tb = t_series(f, b / 2 + 1, b % 2 + 1, N);
            for (std::size_t r = 1; r < N && mult.pass; ++r)
                for (std::size_t s = 1; r + s <= N && mult.pass; ++s) {
                    const TensorElement lhs = coproduct(ta[r] * tb[s]);
                    const TensorElement rhs = D[a][r] * D[b][s];
                    if (lhs != rhs) {
                        mult.pass = false;
                        mult.witness = "Delta(t_" + std::to_string(a / 2 + 1) + std::to_string(a % 2 + 1) + "(" +
                                       std::to_string(r) + ") t_" + std::to_string(b / 2 + 1) +
                                       std::to_string(b % 2 + 1) + "(" + std::to_string(s) + ")): " +
                                       lhs.to_string() + " vs " + rhs.to_string();
                    }
                }
        }

    for (Check* c : {&transport, &coassoc, &counit_ax, &antipode_ax, &mult}) rep.add(*c);
    return rep;
}

Check verify_delta_b(Field f, int i, std::size_t N, bool letterwise)
{
    Check c{"delta_b" + std::to_string(i), base_params(f, N)};
    c.params["route"] = letterwise ? "letterwise" : "series";
    const AlgebraTail b = b_series(f, i, N);
    const TensorTail bb = tensor_series(lift(b), lift(b), N);
    if (letterwise) {
        std::vector<TensorElement> v;
        for (std::size_t r = 0; r <= N; ++r) v.push_back(coproduct(b[r]));
        record_mismatch(c, "Delta(b" + std::to_string(i) + ")", TensorTail(std::move(v)), bb);
        return c;
    }
    const TensorTail base = i == 1 ? coproduct_t(f, 1, 1, N) : inverse(coproduct_generator_tail(f, Kind::D2, N), N);
    record_mismatch(c, "Delta(b" + std::to_string(i) + ")", shifted_product(base, f, N), bb);
    return c;
}

Check verify_antipode_b(Field f, int i, std::size_t N)
{
    Check c{i == 1 ? "antipode_b1" : "antipode_b2prime", base_params(f, N)};
    if (i == 1) {
        const AlgebraTail b1 = b_series(f, 1, N);
        std::vector<AlgebraElement> s;
        for (std::size_t r = 0; r <= N; ++r) s.push_back(antipode(b1[r]));
        const AlgebraTail b1p = shifted_product(t_prime_series(f, 1, 1, N), f, N);
        record_mismatch(c, "S(b1) vs b1'", AlgebraTail(std::move(s)), b1p);
    } else {
        const AlgebraTail b2p = shifted_product(t_series(f, 2, 2, N), f, N);
        std::vector<AlgebraElement> s;
        for (std::size_t r = 0; r <= N; ++r) s.push_back(antipode(b2p[r]));
        record_mismatch(c, "S(b2') vs b2", AlgebraTail(std::move(s)), b_series(f, 2, N));
    }
    return c;
}

Report verify_appendix(Field f, std::size_t N, const AppendixOptions& opt)
{
    Report rep;
    const AlgebraTail t11 = t_series(f, 1, 1, N), t12 = t_series(f, 1, 2, N), t21 = t_series(f, 2, 1, N);
    auto sh = [&](const AlgebraTail& a, std::int64_t c) { return shift(a, f.from_int(c), N); };

    if (opt.lemma_a1) {
        Check c1{"a1_item1", base_params(f, N)};
        record_mismatch(c1, "t11(u-1)t12(u) vs t12(u-1)t11(u)", mul(sh(t11, 1), t12, N), mul(sh(t12, 1), t11, N));
        Check c2{"a1_item2", base_params(f, N)};
        record_mismatch(c2, "t11(u)t21(u-1) vs t21(u)t11(u-1)", mul(t11, sh(t21, 1), N), mul(t21, sh(t11, 1), N));
        Check c3{"a1_item3", base_params(f, N)};
        record_mismatch(c3, "t12(u-1)t12(u) vs 0", mul(sh(t12, 1), t12, N),
                        AlgebraTail::constant(AlgebraElement(f), N));
        rep.add(c1);
        rep.add(c2);
        rep.add(c3);
        for (std::uint32_t k = 0; k <= opt.kmax; ++k) {
            Check c4{"a1_item4", base_params(f, N)};
            c4.params["k"] = k;
            const AlgebraTail lhs = mul(t21, sh(t11, k), N) * f.from_int(k + 1);
            const AlgebraTail rhs = mul(sh(t11, k), t21, N) * f.from_int(k) + mul(sh(t21, k), t11, N);
            record_mismatch(c4, "(k+1)t21(u)t11(u-k) vs kt11(u-k)t21(u)+t21(u-k)t11(u)", lhs, rhs);
            rep.add(c4);
        }
    }

    if (opt.lemma_a2) {
        const TensorTail D11 = coproduct_t(f, 1, 1, N);
        auto tsh = [&](const TensorTail& a, std::int64_t c) { return shift(a, f.from_int(c), N); };
        for (std::uint32_t n = 1; n <= f.characteristic(); ++n) {
            Check c{"a2", base_params(f, N)};
            c.params["n"] = n;
            // Delta(t11(u-n+1) ... t11(u))
            TensorTail lhs = tsh(D11, n - 1);
            for (std::int64_t m = std::int64_t(n) - 2; m >= 0; --m) lhs = mul(lhs, tsh(D11, m), N);
            AlgebraTail down = sh(t11, n - 1), up = t11;  // t11(u-n+1)..t11(u), t11(u)..t11(u-n+1)
            for (std::int64_t m = std::int64_t(n) - 2; m >= 0; --m) down = mul(down, sh(t11, m), N);
            for (std::int64_t m = 1; m <= std::int64_t(n) - 1; ++m) up = mul(up, sh(t11, m), N);
            AlgebraTail left2 = sh(t12, n - 1), right2 = AlgebraTail::one(AlgebraElement(f), N);
            for (std::int64_t m = std::int64_t(n) - 2; m >= 0; --m) left2 = mul(left2, sh(t11, m), N);
            for (std::int64_t m = 0; m <= std::int64_t(n) - 2; ++m) right2 = mul(right2, sh(t11, m), N);
            right2 = mul(right2, sh(t21, n - 1), N);
            const TensorTail rhs = tensor_series(lift(down), lift(up), N) +
                                   tensor_series(lift(left2), lift(right2), N) * f.from_int(n);
            record_mismatch(c, "Delta(t11(u-n+1)...t11(u))", lhs, rhs);
            rep.add(c);
        }
    }

    if (opt.delta_b)
        for (int i = 1; i <= 2; ++i) {
            rep.add(verify_delta_b(f, i, N));
            if (opt.letterwise_b) rep.add(verify_delta_b(f, i, N, true));
        }
    if (opt.antipode_b)
        for (int i = 1; i <= 2; ++i) rep.add(verify_antipode_b(f, i, N));
    return rep;
}

}  // namespace syang
