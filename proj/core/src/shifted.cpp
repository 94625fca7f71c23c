#include "syang/shifted.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace syang {

Pyramid pyramid_from(ShiftMatrix sigma, std::uint32_t level)
{
    if (level < sigma.s12 + sigma.s21)
        throw std::invalid_argument("level " + std::to_string(level) + " is below s12 + s21 = " +
                                    std::to_string(sigma.s12 + sigma.s21));
    Pyramid pi;
    pi.sigma = sigma;
    pi.level = level;
    pi.k = level - sigma.s12 - sigma.s21;
    pi.heights.assign(sigma.s21, 1);
    pi.heights.insert(pi.heights.end(), pi.k, 2);
    pi.heights.insert(pi.heights.end(), sigma.s12, 1);
    return pi;
}

Tableau Tableau::canonical() const
{
    Tableau t = *this;
    std::sort(t.a.begin(), t.a.end());
    std::sort(t.b.begin(), t.b.end());
    return t;
}

std::string Tableau::to_string() const
{
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + a[i].to_string();
    s += ";";
    for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + b[i].to_string();
    return s;
}

bool row_equivalent(const Tableau& x, const Tableau& y) { return x.canonical() == y.canonical(); }

void check_shape(const Pyramid& pi, const Tableau& A)
{
    if (A.a.size() != pi.k || A.b.size() != pi.level)
        throw std::invalid_argument("tableau rows have lengths " + std::to_string(A.a.size()) + "," +
                                    std::to_string(A.b.size()) + ", pyramid needs " + std::to_string(pi.k) +
                                    "," + std::to_string(pi.level));
}

ColumnLeg column_module(const std::vector<Fe>& entries)
{
    ColumnLeg leg;
    if (entries.size() == 1) {
        leg.height = 1;
        leg.scalar = -entries[0];
        return leg;
    }
    if (entries.size() != 2) throw std::invalid_argument("a column has one or two entries");
    leg.height = 2;
    leg.module = eval_module(entries[0], -entries[1]);
    return leg;
}

ShiftedModule::ShiftedModule(Field f, ShiftMatrix sigma, std::uint32_t level, std::vector<int> parity,
                             DrinfeldTails<Matrix> tails, std::string provenance)
    : f_(f), sigma_(sigma), level_(level), parity_(std::move(parity)), tails_(std::move(tails)),
      provenance_(std::move(provenance))
{
    if (level_ < sigma_.s12 + sigma_.s21) throw std::invalid_argument("level below s12 + s21");
    const std::size_t N = tails_.d1.order();
    if (tails_.d2.order() != N || tails_.e.order() != N || tails_.f.order() != N)
        throw std::invalid_argument("generator tails stored to different orders");
}

const Matrix& ShiftedModule::action(Kind kind, std::size_t r) const
{
    if (r > order()) throw std::out_of_range("coefficient beyond the working order " + std::to_string(order()));
    switch (kind) {
    case Kind::D1: return tails_.d1[r];
    case Kind::D2: return tails_.d2[r];
    case Kind::E: return tails_.e[r];
    case Kind::F: return tails_.f[r];
    }
    throw std::invalid_argument("unknown kind");
}

std::vector<Matrix> ShiftedModule::window_generators() const
{
    std::vector<Matrix> out;
    const std::size_t N = order();
    auto take = [&](const MatrixTail& t, std::size_t lo, std::size_t hi) {
        for (std::size_t r = lo; r <= std::min(hi, N); ++r) out.push_back(t[r]);
    };
    take(tails_.d1, 1, k());
    take(tails_.d2, 1, level_);
    take(tails_.e, sigma_.s12 + 1, sigma_.s12 + k());
    take(tails_.f, sigma_.s21 + 1, sigma_.s21 + k());
    return out;
}

ShiftedModule unshifted_module(const SuperModule& M, std::uint32_t level, std::size_t N)
{
    return ShiftedModule(M.field(), {}, level, M.parity(), drinfeld_tails(M, N), "tensor");
}

namespace {

/// x(u) (1 - c u^-1), coefficientwise x^(r) - c x^(r-1).
MatrixTail times_linear(const MatrixTail& x, const Fe& c, std::size_t mask_upto)
{
    std::vector<Matrix> out;
    for (std::size_t r = 0; r <= x.order(); ++r) {
        Matrix m = x[r];
        if (r >= 1) m -= x[r - 1] * c;
        if (r >= 1 && r <= mask_upto) m = zero_like(m);
        out.push_back(std::move(m));
    }
    return MatrixTail(std::move(out));
}

}  // namespace

ShiftedModule delta_plus_pullback(const ShiftedModule& M, const Fe& c)
{
    ShiftMatrix s = M.sigma();
    ++s.s12;
    DrinfeldTails<Matrix> t = M.tails();
    t.d2 = times_linear(t.d2, c, 0);
    t.e = times_linear(t.e, c, s.s12);
    return ShiftedModule(M.field(), s, M.level() + 1, M.parity(), std::move(t), "pullback");
}

ShiftedModule delta_minus_pullback(const ShiftedModule& M, const Fe& c)
{
    ShiftMatrix s = M.sigma();
    ++s.s21;
    DrinfeldTails<Matrix> t = M.tails();
    t.d2 = times_linear(t.d2, c, 0);
    t.f = times_linear(t.f, c, s.s21);
    return ShiftedModule(M.field(), s, M.level() + 1, M.parity(), std::move(t), "pullback");
}

std::size_t default_order(const Pyramid& pi, Field f)
{
    const std::size_t p = f.characteristic();
    return std::max<std::size_t>({p * std::max<std::size_t>(pi.level, 1), pi.k + p, pi.sigma.s12 + pi.k,
                     pi.sigma.s21 + pi.k});
}

ShiftedModule build_VA(const Pyramid& pi, const Tableau& A, std::optional<std::size_t> N_opt)
{
    check_shape(pi, A);
    if (A.b.empty() && A.a.empty()) throw std::invalid_argument("empty pyramid");
    const Field f = (A.b.empty() ? A.a : A.b)[0].field();
    const std::size_t N = N_opt.value_or(default_order(pi, f));
    const std::uint32_t s21 = pi.sigma.s21, k = pi.k;

    std::vector<SuperModule> legs;
    for (std::uint32_t c = 0; c < k; ++c) legs.push_back(*column_module({A.a[c], A.b[s21 + c]}).module);
    ShiftedModule V = unshifted_module(legs.empty() ? trivial_module(f) : tensor_all(legs), k, N);
    for (std::uint32_t c = s21; c-- > 0;) V = delta_minus_pullback(V, column_module({A.b[c]}).scalar);
    for (std::uint32_t c = s21 + k; c < pi.level; ++c) V = delta_plus_pullback(V, column_module({A.b[c]}).scalar);

    for (std::size_t r = k + 1; r <= N; ++r)
        if (!V.tails().d1[r].is_zero())
            throw TheoremViolation("d1(" + std::to_string(r) + ") acts nonzero on V(" + A.to_string() + ")");
    return V;
}

std::vector<Vec> singular_space(const ShiftedModule& V, std::size_t e_top)
{
    std::vector<Matrix> maps;
    for (std::size_t r = V.sigma().s12 + 1; r <= std::min(e_top, V.order()); ++r) maps.push_back(V.tails().e[r]);
    return joint_kernel(maps, V.field(), V.dim());
}

HwData hw_vector(const ShiftedModule& V, std::optional<std::size_t> e_top)
{
    const Field f = V.field();
    const auto ker = singular_space(V, e_top.value_or(V.sigma().s12 + V.k()));
    if (ker.empty()) throw TheoremViolation("no singular vector");
    HwData out;
    out.singular_dim = ker.size();
    Vec top(V.dim(), f.zero());
    top[0] = f.one();
    if (ker.size() == 1) {
        out.vector = ker[0];
        std::size_t lead = 0;
        while (out.vector[lead].is_zero()) ++lead;
        const Fe s = out.vector[lead].inverse();
        for (auto& x : out.vector) x = x * s;
    } else {
        EchelonBasis span(f.data(), V.dim());
        for (const auto& v : ker) span.insert(v);
        std::vector<std::uint32_t> raw(V.dim(), 0);
        raw[0] = 1;
        out.vector = span.contains(raw) ? top : ker[0];
    }
    std::size_t lead = 0;
    while (out.vector[lead].is_zero()) ++lead;
    std::vector<Fe> l1{f.one()}, l2{f.one()};
    for (std::size_t r = 1; r <= V.order(); ++r)
        for (int i = 1; i <= 2; ++i) {
            const Vec img = (i == 1 ? V.tails().d1 : V.tails().d2)[r].apply(out.vector);
            const Fe c = img[lead] / out.vector[lead];
            for (std::size_t a = 0; a < img.size(); ++a)
                if (img[a] != c * out.vector[a])
                    throw NotEigenvector("d" + std::to_string(i) + "(" + std::to_string(r) +
                                         ") does not act by a scalar");
            (i == 1 ? l1 : l2).push_back(c);
        }
    out.lambda1 = LaurentTail(std::move(l1));
    out.lambda2 = LaurentTail(std::move(l2));
    return out;
}

LaurentTail elementary_tail(Field f, const std::vector<Fe>& xs, std::size_t N)
{
    std::vector<Fe> c(N + 1, f.zero());
    c[0] = f.one();
    for (const auto& x : xs)
        for (std::size_t r = N; r >= 1; --r) c[r] = c[r] + x * c[r - 1];
    return LaurentTail(std::move(c));
}

std::size_t head_dimension(const ShiftedModule& V, const Vec& v)
{
    const Field f = V.field();
    const std::size_t n = V.dim(), k = V.k(), s21 = V.sigma().s21;
    auto raw = [](const Vec& x) {
        std::vector<std::uint32_t> r;
        for (const auto& e : x) r.push_back(e.raw());
        return r;
    };

    // W = kv + (f-monomials).v, with basis v first
    std::vector<Vec> basis{v};
    EchelonBasis all(f.data(), n), lower(f.data(), n);
    all.insert(raw(v));
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
        Vec y = v;
        for (std::size_t i = k; i-- > 0;)
            if (mask & (1u << i)) y = V.tails().f[s21 + 1 + i].apply(y);
        lower.insert(raw(y));
        if (all.insert(raw(y))) basis.push_back(y);
    }
    if (lower.size() + 1 != basis.size()) throw TheoremViolation("highest weight vector lies in the f-span");
    const auto gens = V.window_generators();
    if (spin(gens, v).size() != basis.size())
        throw TheoremViolation("submodule generated by v is not spanned by f-monomials");

    // generators restricted to W, in the basis above
    const std::size_t w = basis.size();
    const Matrix B = Matrix::from_columns(f, n, basis);
    std::vector<Matrix> dual;
    for (const auto& g : gens) {
        const Matrix GB = g * B;
        Matrix aug(f, n, 2 * w);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < w; ++j) {
                aug.raw(i, j) = B.raw(i, j);
                aug.raw(i, w + j) = GB.raw(i, j);
            }
        const auto piv = rref(aug);
        if (piv.size() != w || piv.back() >= w) throw TheoremViolation("f-span of v is not a submodule");
        dual.push_back(aug.block(0, w, w, w).transpose());
    }
    Vec phi(w, f.zero());
    phi[0] = f.one();
    return spin(dual, phi).size();
}

std::pair<Tableau, std::uint32_t> choose_B(const Pyramid& pi, const Tableau& A)
{
    check_shape(pi, A);
    const Tableau C = A.canonical();
    std::map<Fe, std::size_t> ca, cb;
    for (const auto& x : C.a) ++ca[x];
    for (const auto& x : C.b) ++cb[x];
    std::vector<Fe> matched, rest_a, rest_b;
    for (const auto& [x, m] : ca) {
        const std::size_t both = cb.count(x) ? std::min(m, cb[x]) : 0;
        matched.insert(matched.end(), both, x);
        rest_a.insert(rest_a.end(), m - both, x);
        if (both) cb[x] -= both;
    }
    for (const auto& [x, m] : cb) rest_b.insert(rest_b.end(), m, x);
    std::sort(rest_a.begin(), rest_a.end());
    std::sort(rest_b.begin(), rest_b.end());

    const std::uint32_t h = static_cast<std::uint32_t>(matched.size()), s21 = pi.sigma.s21;
    Tableau B;
    B.a = matched;
    B.a.insert(B.a.end(), rest_a.begin(), rest_a.end());
    B.b.resize(pi.level);
    std::size_t next = 0;
    for (std::uint32_t c = 0; c < pi.level; ++c) {
        if (c >= s21 && c < s21 + h) B.b[c] = matched[c - s21];
        else B.b[c] = rest_b[next++];
    }
    return {B, h};
}

SimpleModule simple_module(const Pyramid& pi, const Tableau& A, std::optional<std::size_t> N)
{
    SimpleModule out;
    std::tie(out.B, out.h) = choose_B(pi, A);
    out.module = build_VA(pi, out.B, N);
    const ShiftedModule& V = out.module;
    const std::string tag = "L(" + A.to_string() + "): ";
    if (V.dim() != (std::size_t(1) << (pi.k - out.h)))
        throw TheoremViolation(tag + "dimension " + std::to_string(V.dim()) + " differs from 2^(k-h)");
    out.hw = hw_vector(V);
    if (out.hw.singular_dim != 1)
        throw TheoremViolation(tag + "singular space has dimension " + std::to_string(out.hw.singular_dim));
    const Field f = V.field();
    if (out.hw.lambda1.coeffs() != elementary_tail(f, A.a, V.order()).coeffs() ||
        out.hw.lambda2.coeffs() != elementary_tail(f, A.b, V.order()).coeffs())
        throw TheoremViolation(tag + "highest weight is not the elementary symmetric data");
    out.irreducibility = irreducibility(V.window_generators(), f, V.dim());
    if (!out.irreducibility.absolutely_irreducible || !out.irreducibility.agree())
        throw TheoremViolation(tag + "not absolutely irreducible (algebra dimension " +
                               std::to_string(out.irreducibility.algebra_dim) + ")");
    return out;
}

RestrictedVerdict restricted_action(const ShiftedModule& V)
{
    const Field f = V.field();
    const std::size_t N = V.order();
    RestrictedVerdict out;
    out.restricted = true;
    const MatrixTail b1 = p_shift_product(V.tails().d1, f, N);
    const MatrixTail b2 = p_shift_product(inverse(V.tails().d2, N), f, N);
    for (int i = 1; i <= 2 && out.restricted; ++i) {
        const MatrixTail& b = i == 1 ? b1 : b2;
        for (std::size_t r = 1; r <= N; ++r)
            if (!b[r].is_zero()) {
                out.restricted = false;
                out.witness = "b" + std::to_string(i) + " coefficient u^-" + std::to_string(r) + " = " +
                              b[r].to_string();
                break;
            }
    }
    return out;
}

RestrictedVerdict restricted_check(const Pyramid& pi, const Tableau& A)
{
    const SimpleModule L = simple_module(pi, A);
    RestrictedVerdict out = restricted_action(L.module);
    out.entries_in_prime_field = true;
    for (const auto* row : {&A.a, &A.b})
        for (const auto& x : *row) out.entries_in_prime_field &= x.in_prime_field();
    if (out.restricted != out.entries_in_prime_field)
        throw TheoremViolation("restricted action and F_p membership disagree for " + A.to_string());
    return out;
}

std::vector<std::vector<Fe>> multisets(const std::vector<Fe>& values, std::size_t n)
{
    std::vector<Fe> vals = values;
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    std::vector<std::vector<Fe>> out;
    std::vector<std::size_t> idx(n, 0);
    if (vals.empty()) {
        if (n == 0) out.emplace_back();
        return out;
    }
    while (true) {
        std::vector<Fe> m;
        for (auto i : idx) m.push_back(vals[i]);
        out.push_back(std::move(m));
        // next non-decreasing index sequence
        std::size_t pos = n;
        while (pos > 0 && idx[pos - 1] == vals.size() - 1) --pos;
        if (pos == 0) break;
        const std::size_t v = idx[pos - 1] + 1;
        for (std::size_t j = pos - 1; j < n; ++j) idx[j] = v;
    }
    return out;
}

std::vector<Tableau> all_tableaux(const Pyramid& pi, const std::vector<Fe>& values)
{
    const std::size_t cells = pi.k + pi.level;
    std::vector<Tableau> out;
    std::vector<std::size_t> idx(cells, 0);
    while (true) {
        Tableau t;
        for (std::size_t i = 0; i < pi.k; ++i) t.a.push_back(values[idx[i]]);
        for (std::size_t i = pi.k; i < cells; ++i) t.b.push_back(values[idx[i]]);
        out.push_back(std::move(t));
        std::size_t j = 0;
        while (j < cells && ++idx[j] == values.size()) idx[j++] = 0;
        if (j == cells) break;
    }
    return out;
}

std::vector<Fe> prime_field_elements(Field f)
{
    std::vector<Fe> out;
    for (std::uint32_t i = 0; i < f.characteristic(); ++i) out.push_back(f.from_int(i));
    return out;
}

std::vector<ClassRow> classify(const Pyramid& pi, Field f, bool build_modules, std::uint64_t cap)
{
    const auto values = prime_field_elements(f);
    const auto as = multisets(values, pi.k), bs = multisets(values, pi.level);
    if (std::uint64_t(as.size()) * bs.size() > cap)
        throw std::length_error("classification has " + std::to_string(std::uint64_t(as.size()) * bs.size()) +
                                " classes, above the cap " + std::to_string(cap));
    const std::size_t deg = std::max<std::size_t>(pi.k, pi.level);
    std::vector<ClassRow> rows;
    std::set<std::pair<std::vector<Fe>, std::vector<Fe>>> seen;
    for (const auto& a : as)
        for (const auto& b : bs) {
            ClassRow row;
            row.A = Tableau{a, b};
            row.h = choose_B(pi, row.A).second;
            row.dim = std::uint64_t(1) << (pi.k - row.h);
            row.lambda1 = elementary_tail(f, a, deg);
            row.lambda2 = elementary_tail(f, b, deg);
            if (!seen.insert({row.lambda1.coeffs(), row.lambda2.coeffs()}).second)
                throw TheoremViolation("two classes share weight data at " + row.A.to_string());
            if (build_modules) {
                const SimpleModule L = simple_module(pi, row.A);
                row.verified = L.module.dim() == row.dim;
            }
            rows.push_back(std::move(row));
        }
    return rows;
}

}  // namespace syang
