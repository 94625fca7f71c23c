#include "syang/supermod.hpp"

#include <sstream>

namespace syang {

namespace {

int slot(int i, int j)
{
    if (i < 1 || i > 2 || j < 1 || j > 2) throw std::invalid_argument("t indices must be 1 or 2");
    return (i - 1) * 2 + (j - 1);
}

MatrixTail poly_tail(const Matrix& c0, const Matrix& c1)
{
    return MatrixTail(std::vector<Matrix>{c0, c1});
}

/// Scalar series as a tail of multiples of the identity.
MatrixTail scalar_tail(const LaurentTail& f, std::size_t n, std::size_t N)
{
    const Field field = f[0].field();
    std::vector<Matrix> c;
    for (std::size_t r = 0; r <= N; ++r)
        c.push_back(Matrix::identity(field, n) * (r <= f.order() ? f[r] : field.zero()));
    return MatrixTail(std::move(c));
}

std::vector<std::uint32_t> flatten(const Matrix& m) { return m.data(); }

std::string matrix_witness(const char* what, std::size_t r, const Matrix& m)
{
    return std::string(what) + " coefficient u^-" + std::to_string(r) + " = " + m.to_string();
}

}  // namespace

SuperModule::SuperModule(Field f, std::vector<int> parity, std::array<MatrixTail, 4> t, bool polynomial,
                         std::string provenance)
    : f_(f), parity_(std::move(parity)), t_(std::move(t)), polynomial_(polynomial), provenance_(std::move(provenance))
{
    order_ = t_[0].order();
    for (const auto& x : t_) {
        if (x.order() != order_) throw std::invalid_argument("module tails stored to different orders");
        for (const auto& m : x.coeffs())
            if (m.rows() != parity_.size() || m.cols() != parity_.size())
                throw std::invalid_argument("module matrix has wrong shape");
    }
}

const MatrixTail& SuperModule::T(int i, int j) const { return t_[slot(i, j)]; }

MatrixTail SuperModule::T(int i, int j, std::size_t N) const
{
    const MatrixTail& x = t_[slot(i, j)];
    if (N <= order_) return x.truncated(N);
    if (!polynomial_) throw std::out_of_range("module action known only through order " + std::to_string(order_));
    return x.padded(N);
}

Matrix SuperModule::t(int i, int j, std::size_t r) const
{
    if (r <= order_) return t_[slot(i, j)][r];
    if (!polynomial_) throw std::out_of_range("module action known only through order " + std::to_string(order_));
    return Matrix(f_, dim(), dim());
}

Matrix SuperModule::parity_sign() const
{
    Matrix s(f_, dim(), dim());
    for (std::size_t a = 0; a < dim(); ++a) s.set(a, a, parity_[a] ? -f_.one() : f_.one());
    return s;
}

SuperModule eval_module(const Fe& l1, const Fe& l2)
{
    const Field f = l1.field();
    const Fe one = f.one();
    if ((l1 + l2).is_zero()) {
        const Matrix I = Matrix::identity(f, 1), Z(f, 1, 1);
        return SuperModule(f, {0},
                           {poly_tail(I, I * l1), poly_tail(Z, Z), poly_tail(Z, Z), poly_tail(I, I * (-l2))},
                           true, "evaluation");
    }
    // basis xi, eta = e21 xi
    Matrix e11(f, 2, 2), e22(f, 2, 2), e12(f, 2, 2), e21(f, 2, 2);
    e11.set(0, 0, l1);
    e11.set(1, 1, l1 - one);
    e22.set(0, 0, l2);
    e22.set(1, 1, l2 + one);
    e12.set(0, 1, l1 + l2);
    e21.set(1, 0, one);
    const Matrix I = Matrix::identity(f, 2), Z(f, 2, 2);
    return SuperModule(f, {0, 1}, {poly_tail(I, e11), poly_tail(Z, e12), poly_tail(Z, -e21), poly_tail(I, -e22)},
                       true, "evaluation");
}

SuperModule trivial_module(Field f)
{
    const Matrix I = Matrix::identity(f, 1), Z(f, 1, 1);
    return SuperModule(f, {0}, {poly_tail(I, Z), poly_tail(Z, Z), poly_tail(Z, Z), poly_tail(I, Z)}, true,
                       "evaluation");
}

SuperModule tensor(const SuperModule& a, const SuperModule& b)
{
    if (a.field() != b.field()) throw FieldMismatch("tensor of modules over different fields");
    const Field f = a.field();
    const bool poly = a.polynomial() && b.polynomial();
    const std::size_t N = poly ? a.order() + b.order() : std::min(a.order(), b.order());
    const Matrix P = a.parity_sign();
    std::array<MatrixTail, 4> t;
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) {
            std::vector<Matrix> c(N + 1, Matrix(f, a.dim() * b.dim(), a.dim() * b.dim()));
            for (int k = 1; k <= 2; ++k) {
                const MatrixTail A = a.T(i, k, N), B = b.T(k, j, N);
                const bool sign = (index_parity(k) + index_parity(j)) % 2;
                for (std::size_t r = 0; r <= N; ++r)
                    for (std::size_t s = 0; r + s <= N; ++s) {
                        if (A[r].is_zero() || B[s].is_zero()) continue;
                        c[r + s] += (sign ? A[r] * P : A[r]).kron(B[s]);
                    }
            }
            t[slot(i, j)] = MatrixTail(std::move(c));
        }
    std::vector<int> par;
    for (int pa : a.parity())
        for (int pb : b.parity()) par.push_back((pa + pb) % 2);
    return SuperModule(f, std::move(par), std::move(t), poly, "tensor");
}

SuperModule tensor_all(const std::vector<SuperModule>& legs)
{
    if (legs.empty()) throw std::invalid_argument("tensor_all needs at least one leg");
    SuperModule acc = legs[0];
    for (std::size_t i = 1; i < legs.size(); ++i) acc = tensor(acc, legs[i]);
    return acc;
}

SuperModule direct_sum(const SuperModule& a, const SuperModule& b)
{
    const Field f = a.field();
    const bool poly = a.polynomial() && b.polynomial();
    const std::size_t N = poly ? std::max(a.order(), b.order()) : std::min(a.order(), b.order());
    const std::size_t n = a.dim() + b.dim();
    std::array<MatrixTail, 4> t;
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) {
            const MatrixTail A = a.T(i, j, N), B = b.T(i, j, N);
            std::vector<Matrix> c;
            for (std::size_t r = 0; r <= N; ++r) {
                Matrix m(f, n, n);
                for (std::size_t x = 0; x < a.dim(); ++x)
                    for (std::size_t y = 0; y < a.dim(); ++y) m.raw(x, y) = A[r].raw(x, y);
                for (std::size_t x = 0; x < b.dim(); ++x)
                    for (std::size_t y = 0; y < b.dim(); ++y) m.raw(a.dim() + x, a.dim() + y) = B[r].raw(x, y);
                c.push_back(std::move(m));
            }
            t[slot(i, j)] = MatrixTail(std::move(c));
        }
    std::vector<int> par = a.parity();
    par.insert(par.end(), b.parity().begin(), b.parity().end());
    return SuperModule(f, std::move(par), std::move(t), poly, "sum");
}

DrinfeldTails<Matrix> drinfeld_tails(const SuperModule& M, std::size_t N)
{
    const MatrixTail T11 = M.T(1, 1, N), T12 = M.T(1, 2, N), T21 = M.T(2, 1, N), T22 = M.T(2, 2, N);
    const MatrixTail inv11 = inverse(T11, N);
    DrinfeldTails<Matrix> out;
    out.d1 = T11;
    out.e = mul(inv11, T12, N);
    out.f = mul(T21, inv11, N);
    out.d2 = T22 - mul(out.f, T12, N);
    return out;
}

Matrix drinfeld_action(const SuperModule& M, Kind k, std::uint32_t r, std::size_t N)
{
    if (r > N) throw std::out_of_range("drinfeld_action: r beyond the requested order");
    const DrinfeldTails<Matrix> d = drinfeld_tails(M, N);
    switch (k) {
    case Kind::D1: return d.d1[r];
    case Kind::D2: return d.d2[r];
    case Kind::E: return d.e[r];
    case Kind::F: return d.f[r];
    }
    throw std::invalid_argument("unknown generator kind");
}

std::vector<Vec> singular_space(const SuperModule& M)
{
    std::vector<Matrix> maps;
    for (std::size_t r = 1; r <= M.order(); ++r) maps.push_back(M.T(1, 2)[r]);
    return joint_kernel(maps, M.field(), M.dim());
}

std::vector<Vec> singular_space_drinfeld(const SuperModule& M, std::size_t N)
{
    const DrinfeldTails<Matrix> d = drinfeld_tails(M, N);
    std::vector<Matrix> maps(d.e.coeffs().begin() + 1, d.e.coeffs().end());
    return joint_kernel(maps, M.field(), M.dim());
}

WeightData hw_weight(const SuperModule& M, const Vec& v, std::optional<std::size_t> N)
{
    const Field f = M.field();
    const std::size_t order = N.value_or(M.order());
    const DrinfeldTails<Matrix> d = drinfeld_tails(M, order);
    std::size_t lead = 0;
    while (lead < v.size() && v[lead].is_zero()) ++lead;
    if (lead == v.size()) throw NotEigenvector("zero vector");
    for (std::size_t r = 1; r <= order; ++r)
        if (!d.e[r].apply(v).empty())
            for (const auto& x : d.e[r].apply(v))
                if (!x.is_zero()) throw NotEigenvector("e(" + std::to_string(r) + ") does not kill the vector");
    WeightData w;
    w.vector = v;
    w.order = order;
    std::vector<Fe> l1{f.one()}, l2{f.one()};
    for (std::size_t r = 1; r <= order; ++r)
        for (int i = 1; i <= 2; ++i) {
            const Vec img = (i == 1 ? d.d1 : d.d2)[r].apply(v);
            const Fe c = img[lead] / v[lead];
            for (std::size_t a = 0; a < v.size(); ++a)
                if (img[a] != c * v[a])
                    throw NotEigenvector("d" + std::to_string(i) + "(" + std::to_string(r) +
                                         ") does not act by a scalar");
            (i == 1 ? l1 : l2).push_back(c);
        }
    w.lambda1 = LaurentTail(std::move(l1));
    w.lambda2 = LaurentTail(std::move(l2));
    w.restricted = is_restricted(w.lambda1) && is_restricted(w.lambda2);
    return w;
}

std::vector<Matrix> action_generators(const SuperModule& M)
{
    std::vector<Matrix> gens;
    EchelonBasis seen(M.field().data(), M.dim() * M.dim());
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            for (std::size_t r = 1; r <= M.order(); ++r) {
                const Matrix& m = M.T(i, j)[r];
                if (seen.insert(flatten(m))) gens.push_back(m);
            }
    return gens;
}

std::vector<Vec> spin(const std::vector<Matrix>& gens, const Vec& v)
{
    if (v.empty()) return {};
    const FieldData* fd = v[0].field_data();
    const std::size_t n = v.size();
    EchelonBasis basis(fd, n);
    std::vector<Vec> out, queue{v};
    while (!queue.empty()) {
        Vec x = std::move(queue.back());
        queue.pop_back();
        std::vector<std::uint32_t> raw(n);
        for (std::size_t a = 0; a < n; ++a) raw[a] = x[a].raw();
        if (!basis.insert(raw)) continue;
        out.push_back(x);
        if (out.size() == n) break;
        for (const auto& g : gens) queue.push_back(g.apply(x));
    }
    return out;
}

IrreducibilityReport irreducibility(const std::vector<Matrix>& gens, Field f, std::size_t n, std::uint64_t spin_cap)
{
    IrreducibilityReport rep;
    const std::size_t full = n * n;
    EchelonBasis basis(f.data(), full);
    std::vector<Matrix> found;
    const Matrix I = Matrix::identity(f, n);
    basis.insert(flatten(I));
    found.push_back(I);
    for (std::size_t idx = 0; idx < found.size() && basis.size() < full; ++idx)
        for (const auto& g : gens) {
            Matrix y = g * found[idx];
            if (basis.insert(flatten(y))) found.push_back(std::move(y));
            if (basis.size() == full) break;
        }
    rep.algebra_dim = basis.size();
    rep.absolutely_irreducible = rep.algebra_dim == full;

    // spinning over F_q: one representative per line (leading coordinate 1)
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < n && count <= spin_cap; ++i) count *= f.order();
    if (count > spin_cap) return rep;
    bool all = true;
    const auto elems = f.elements();
    for (std::size_t lead = 0; lead < n && all; ++lead) {
        // vectors (0,...,0,1,*,...,*)
        const std::size_t free = n - lead - 1;
        std::vector<std::size_t> digits(free, 0);
        while (all) {
            Vec v(n, f.zero());
            v[lead] = f.one();
            for (std::size_t k = 0; k < free; ++k) v[lead + 1 + k] = elems[digits[k]];
            if (spin(gens, v).size() != n) all = false;
            std::size_t k = 0;
            while (k < free && ++digits[k] == elems.size()) digits[k++] = 0;
            if (k == free) break;
        }
    }
    rep.spinning = all;
    return rep;
}

IrreducibilityReport irreducibility(const SuperModule& M, std::uint64_t spin_cap)
{
    return irreducibility(action_generators(M), M.field(), M.dim(), spin_cap);
}

bool is_irreducible(const SuperModule& M) { return irreducibility(M, 0).absolutely_irreducible; }

SuperModule twist(const SuperModule& M, const LaurentTail& f, bool f_polynomial)
{
    if (!f[0].is_one()) throw std::invalid_argument("twist series needs constant term 1");
    const bool poly = M.polynomial() && f_polynomial;
    const std::size_t N = poly ? M.order() + tail_degree(f) : std::min(M.order(), f.order());
    const MatrixTail F = scalar_tail(f, M.dim(), N);
    std::array<MatrixTail, 4> t;
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) t[slot(i, j)] = mul(F, M.T(i, j, N), N);
    return SuperModule(M.field(), M.parity(), std::move(t), poly, "twist");
}

Matrix super_transpose(const Matrix& a, const std::vector<int>& parity)
{
    Matrix out = a.transpose();
    for (std::size_t x = 0; x < out.rows(); ++x)
        for (std::size_t y = 0; y < out.cols(); ++y)
            if (parity[x] & ((parity[x] + parity[y]) & 1)) out.raw(x, y) = a.field_data()->neg(out.raw(x, y));
    return out;
}

SuperModule dual_tau(const SuperModule& M)
{
    std::array<MatrixTail, 4> t;
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) {
            std::vector<Matrix> c;
            for (const auto& m : M.T(3 - i, 3 - j).coeffs()) c.push_back(super_transpose(m, M.parity()));
            t[slot(i, j)] = MatrixTail(std::move(c));
        }
    return SuperModule(M.field(), M.parity(), std::move(t), M.polynomial(), "dual");
}

namespace {

Poly homogenize(const LaurentTail& l, std::size_t d)
{
    const Field f = l[0].field();
    std::vector<Fe> c(d + 1, f.zero());
    for (std::size_t r = 0; r <= std::min(d, l.order()); ++r) c[d - r] = l[r];
    return Poly(f, std::move(c));
}

}  // namespace

std::optional<DrinfeldPair> drinfeld_poly_check(const LaurentTail& lambda1, const LaurentTail& lambda2)
{
    if (!lambda1[0].is_one() || !lambda2[0].is_one()) throw std::invalid_argument("weights need constant term 1");
    if (!is_restricted(lambda1)) throw NotRestricted("lambda1 is not restricted");
    if (!is_restricted(lambda2)) throw NotRestricted("lambda2 is not restricted");
    const std::size_t d = std::max(tail_degree(lambda1), tail_degree(lambda2));
    const Poly h1 = homogenize(lambda1, d), h2 = homogenize(lambda2, d);
    const Poly g = gcd(h1, h2);
    DrinfeldPair out{divmod(h1, g).first.monic(), divmod(h2, g).first.monic()};
    if (out.P1.degree() != out.P2.degree()) return std::nullopt;
    return out;
}

FiniteIrrep build_finite_irrep(const LaurentTail& lambda1, const LaurentTail& lambda2, std::optional<std::size_t> N)
{
    const auto pair = drinfeld_poly_check(lambda1, lambda2);
    if (!pair) throw std::invalid_argument("no Drinfeld polynomials: infinite-dimensional");
    const Field f = lambda1[0].field();
    const auto r1 = roots_in_field(pair->P1), r2 = roots_in_field(pair->P2);
    if (!r1 || !r2) throw std::domain_error("Drinfeld polynomials do not split over the working field");
    FiniteIrrep out{SuperModule(), *pair, {}, {}, {}};
    for (const auto& x : *r1) out.mu1.push_back(-x);
    out.mu2 = *r2;
    std::vector<SuperModule> legs;
    for (std::size_t r = 0; r < out.mu1.size(); ++r) legs.push_back(eval_module(out.mu1[r], out.mu2[r]));
    const SuperModule L = legs.empty() ? trivial_module(f) : tensor_all(legs);

    // mu2(u) = prod (1 - mu2 u^-1), as a polynomial in x = u^-1
    Poly mu2x = Poly::constant(f.one());
    for (const auto& m : out.mu2) mu2x *= Poly(f, {f.one(), -m});
    std::vector<Fe> l2c(lambda2.coeffs().begin(), lambda2.coeffs().end());
    const Poly l2x(f, l2c);
    const auto [q, rem] = divmod(l2x, mu2x);

    const std::size_t deg = std::max({tail_degree(lambda1), tail_degree(lambda2), out.mu1.size(), std::size_t(1)});
    const std::size_t order = N.value_or(f.characteristic() * (deg + out.mu1.size()));
    if (rem.is_zero()) {
        std::vector<Fe> c = q.coeffs();
        if (c.empty()) c.push_back(f.zero());
        out.module = twist(L, LaurentTail(std::move(c)), true);
    } else {
        const LaurentTail mu2t = LaurentTail(mu2x.coeffs()).padded(order);
        const LaurentTail ratio = mul(lambda2.padded(order), inverse(mu2t, order), order);
        out.module = twist(L, ratio, false);
    }
    out.hw_vector = Vec(out.module.dim(), f.zero());
    out.hw_vector[0] = f.one();
    return out;
}

Check restrictedness_action_check(const SuperModule& M)
{
    const Field f = M.field();
    const std::uint32_t p = f.characteristic();
    const std::size_t N = M.polynomial() ? p * std::max<std::size_t>(M.order(), 1) : M.order();
    Check c("restricted_action", {{"p", p}, {"m", f.degree()}, {"N", N}, {"dim", M.dim()}});
    const DrinfeldTails<Matrix> d = drinfeld_tails(M, N);
    const MatrixTail b1 = p_shift_product(d.d1, f, N);
    const MatrixTail b2 = p_shift_product(inverse(d.d2, N), f, N);
    for (int i = 1; i <= 2; ++i) {
        const MatrixTail& b = i == 1 ? b1 : b2;
        for (std::size_t r = 1; r <= N; ++r)
            if (!b[r].is_zero()) {
                c.pass = false;
                c.witness = matrix_witness(i == 1 ? "b1" : "b2", r, b[r]);
                return c;
            }
    }
    return c;
}

Check module_rtt_check(const SuperModule& M, int i, int j, int k, int l)
{
    const Field f = M.field();
    const std::size_t R = M.polynomial() ? M.order() : (M.order() + 1) / 2;
    const std::size_t top = R == 0 ? 0 : 2 * R - 1;
    Check c("module_rtt", {{"p", f.characteristic()}, {"m", f.degree()}, {"N", R}, {"ijkl", {i, j, k, l}}});
    const MatrixTail tij = M.T(i, j, top), tkl = M.T(k, l, top), tkj = M.T(k, j, top), til = M.T(i, l, top);
    const int pi = index_parity(i), pj = index_parity(j), pk = index_parity(k), pl = index_parity(l);
    const bool odd_pair = ((pi + pj) % 2) && ((pk + pl) % 2);
    const bool negate = ((pi & pj) ^ (pi & pk) ^ (pj & pk)) != 0;
    for (std::size_t r = 1; r <= R; ++r)
        for (std::size_t s = 1; s <= R; ++s) {
            const Matrix lhs = odd_pair ? tij[r] * tkl[s] + tkl[s] * tij[r] : tij[r] * tkl[s] - tkl[s] * tij[r];
            Matrix rhs(f, M.dim(), M.dim());
            for (std::size_t t = 0; t < std::min(r, s); ++t)
                rhs += tkj[t] * til[r + s - 1 - t] - tkj[r + s - 1 - t] * til[t];
            if (negate) rhs = -rhs;
            if (lhs != rhs) {
                c.pass = false;
                c.witness = "r=" + std::to_string(r) + " s=" + std::to_string(s) + ": " + lhs.to_string() +
                            " vs " + rhs.to_string();
                return c;
            }
        }
    return c;
}

Check parity_check(const SuperModule& M)
{
    Check c("parity", {{"p", M.field().characteristic()}, {"m", M.field().degree()}, {"N", M.order()}, {"dim", M.dim()}});
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) {
            const int want = (index_parity(i) + index_parity(j)) % 2;
            for (std::size_t r = 0; r <= M.order(); ++r) {
                const Matrix& m = M.T(i, j)[r];
                for (std::size_t a = 0; a < M.dim(); ++a)
                    for (std::size_t b = 0; b < M.dim(); ++b)
                        if (m.raw(a, b) != 0 && (M.parity()[a] + M.parity()[b]) % 2 != want) {
                            c.pass = false;
                            c.witness = "t_" + std::to_string(i) + std::to_string(j) + "(" + std::to_string(r) +
                                        ") entry (" + std::to_string(a) + "," + std::to_string(b) + ")";
                            return c;
                        }
            }
        }
    return c;
}

std::vector<Poly> evaluation_b_coefficients(Field f, int i, std::size_t N)
{
    if (i != 1 && i != 2) throw std::invalid_argument("index must be 1 or 2");
    const Poly x = Poly::monomial(f.one(), 1);
    const Series<Poly> base(std::vector<Poly>{Poly::constant(f.one()), i == 1 ? x : -x});
    const Series<Poly> prod = p_shift_product(base.padded(N), f, N);
    return prod.coeffs();
}

Check evaluation_divisibility_check(Field f, int i, std::size_t N)
{
    Check c("evaluation_divisibility", {{"p", f.characteristic()}, {"m", f.degree()}, {"N", N}, {"series", i == 1 ? "b1" : "b2'"}});
    const Poly modulus = Poly::monomial(f.one(), f.characteristic()) - Poly::monomial(f.one(), 1);
    const auto g = evaluation_b_coefficients(f, i, N);
    for (std::size_t r = 1; r <= N; ++r)
        if (!divmod(g[r], modulus).second.is_zero()) {
            c.pass = false;
            c.witness = "g(" + std::to_string(r) + ") = " + g[r].to_string("x");
            return c;
        }
    return c;
}

}  // namespace syang
