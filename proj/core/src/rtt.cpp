#include "syang/rtt.hpp"

#include <array>
#include <sstream>

namespace syang {

namespace {

struct TCache {
    std::array<AlgebraTail, 4> t, tp;
};

thread_local std::map<const FieldData*, TCache> t_cache;

int slot(int i, int j)
{
    if (i < 1 || i > 2 || j < 1 || j > 2) throw std::invalid_argument("t-series indices must be 1 or 2");
    return (i - 1) * 2 + (j - 1);
}

void build_t(Field f, std::size_t N, TCache& c)
{
    const AlgebraTail d1 = generator_tail(f, Kind::D1, N), d2 = generator_tail(f, Kind::D2, N);
    const AlgebraTail e = generator_tail(f, Kind::E, N), fs = generator_tail(f, Kind::F, N);
    const AlgebraTail fd1 = mul(fs, d1, N);
    c.t[0] = d1;
    c.t[1] = mul(d1, e, N);
    c.t[2] = fd1;
    c.t[3] = mul(fd1, e, N) + d2;
}

void build_tp(Field f, std::size_t N, TCache& c)
{
    std::vector<AlgebraElement> p1{AlgebraElement::one(f)}, p2{AlgebraElement::one(f)};
    for (std::uint32_t r = 1; r <= N; ++r) {
        p1.push_back(d_prime(f, 1, r));
        p2.push_back(d_prime(f, 2, r));
    }
    const AlgebraTail d1p(std::move(p1)), d2p(std::move(p2));
    const AlgebraTail e = generator_tail(f, Kind::E, N), fs = generator_tail(f, Kind::F, N);
    const AlgebraTail ed2p = mul(e, d2p, N);
    c.tp[0] = d1p + mul(ed2p, fs, N);
    c.tp[1] = -ed2p;
    c.tp[2] = -mul(d2p, fs, N);
    c.tp[3] = d2p;
}

std::string tname(const char* base, int i, int j, std::size_t r)
{
    return std::string(base) + "_" + std::to_string(i) + std::to_string(j) + "(" + std::to_string(r) + ")";
}

}  // namespace

AlgebraTail t_series(Field f, int i, int j, std::size_t N)
{
    const int s = slot(i, j);
    TCache& c = t_cache[f.data()];
    if (c.t[s].empty() || c.t[s].order() < N) build_t(f, N, c);
    return c.t[s].truncated(N);
}

AlgebraTail t_prime_series(Field f, int i, int j, std::size_t N)
{
    const int s = slot(i, j);
    TCache& c = t_cache[f.data()];
    if (c.tp[s].empty() || c.tp[s].order() < N) build_tp(f, N, c);
    return c.tp[s].truncated(N);
}

Check verify_rtt(Field f, int i, int j, int k, int l, std::size_t N)
{
    Check out;
    out.check = "rtt";
    out.params = {{"p", f.characteristic()}, {"m", f.degree()}, {"N", N}, {"ijkl", {i, j, k, l}}};
    const std::size_t top = N == 0 ? 0 : 2 * N - 1;
    const AlgebraTail tij = t_series(f, i, j, top), tkl = t_series(f, k, l, top);
    const AlgebraTail tkj = t_series(f, k, j, top), til = t_series(f, i, l, top);
    const int pi = index_parity(i), pj = index_parity(j), pk = index_parity(k);
    const bool negate = ((pi & pj) ^ (pi & pk) ^ (pj & pk)) != 0;
    for (std::size_t r = 1; r <= N; ++r)
        for (std::size_t s = 1; s <= N; ++s) {
            const AlgebraElement lhs = super_commutator(tij[r], tkl[s]);
            AlgebraElement rhs(f);
            for (std::size_t t = 0; t < std::min(r, s); ++t) {
                rhs += tkj[t] * til[r + s - 1 - t];
                rhs -= tkj[r + s - 1 - t] * til[t];
            }
            if (negate) rhs = -rhs;
            if (lhs != rhs) {
                out.pass = false;
                out.witness = "[" + tname("t", i, j, r) + ", " + tname("t", k, l, s) + "]: lhs " +
                              lhs.to_string() + " vs rhs " + rhs.to_string();
                return out;
            }
        }
    return out;
}

Check verify_t_inverse(Field f, std::size_t N)
{
    Check out;
    out.check = "t_inverse";
    out.params = {{"p", f.characteristic()}, {"m", f.degree()}, {"N", N}};
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) {
            AlgebraTail left = Series<AlgebraElement>::constant(AlgebraElement(f), N);
            AlgebraTail right = left;
            for (int k = 1; k <= 2; ++k) {
                left += mul(t_series(f, i, k, N), t_prime_series(f, k, j, N), N);
                right += mul(t_prime_series(f, i, k, N), t_series(f, k, j, N), N);
            }
            const AlgebraTail id = i == j ? AlgebraTail::one(AlgebraElement(f), N)
                                          : AlgebraTail::constant(AlgebraElement(f), N);
            for (const auto& [side, prod] : {std::pair{"T*T'", &left}, std::pair{"T'*T", &right}}) {
                const SeriesComparison cmp = compare(*prod, id);
                if (!cmp.equal) {
                    out.pass = false;
                    out.witness = std::string(side) + " entry (" + std::to_string(i) + "," + std::to_string(j) +
                                  ") at u^-" + std::to_string(*cmp.first_mismatch) + ": " +
                                  (*prod)[*cmp.first_mismatch].to_string();
                    return out;
                }
            }
        }
    return out;
}

std::uint32_t pack(const TSymbol& s)
{
    return (std::uint32_t(s.i) << 24) | (std::uint32_t(s.j) << 16) | s.r;
}

TSymbol unpack_tsymbol(std::uint32_t code)
{
    return {int(code >> 24), int((code >> 16) & 0xff), code & 0xffffu};
}

FreeElement FreeElement::scalar(const Fe& c)
{
    FreeElement x(c.field());
    x.add_term({}, c.raw());
    return x;
}

FreeElement FreeElement::symbol(Field f, const TSymbol& s)
{
    FreeElement x(f);
    x.add_term({pack(s)}, 1);
    return x;
}

void FreeElement::add_term(const Word& w, std::uint32_t c)
{
    if (c == 0) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
        return;
    }
    it->second = fd_->add(it->second, c);
    if (it->second == 0) terms_.erase(it);
}

FreeElement& FreeElement::operator+=(const FreeElement& o)
{
    if (!fd_) fd_ = o.fd_;
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

FreeElement& FreeElement::operator-=(const FreeElement& o)
{
    if (!fd_) fd_ = o.fd_;
    for (const auto& [w, c] : o.terms_) add_term(w, fd_->neg(c));
    return *this;
}

FreeElement operator*(const FreeElement& a, const FreeElement& b)
{
    FreeElement out(a.fd_ ? a.field() : b.field());
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) {
            FreeElement::Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out.add_term(w, out.fd_->mul(ca, cb));
        }
    return out;
}

FreeElement operator*(FreeElement a, const Fe& s)
{
    if (s.is_zero()) return FreeElement(a.field());
    for (auto& kv : a.terms_) kv.second = a.fd_->mul(kv.second, s.raw());
    return a;
}

FreeElement FreeElement::operator-() const
{
    FreeElement r = *this;
    for (auto& kv : r.terms_) kv.second = fd_->neg(kv.second);
    return r;
}

std::string FreeElement::to_string() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        const Fe x(fd_, c);
        if (!x.is_one() || w.empty()) os << x;
        for (std::size_t n = 0; n < w.size(); ++n) {
            const TSymbol s = unpack_tsymbol(w[n]);
            os << (n || !x.is_one() ? "*" : "") << tname("t", s.i, s.j, s.r);
        }
    }
    return os.str();
}

FreeElement unit_inverse(const FreeElement& x)
{
    if (x.terms().size() != 1 || !x.terms().begin()->first.empty())
        throw NotInvertible("free element is not a nonzero scalar");
    return FreeElement::scalar(Fe(x.field().data(), x.terms().begin()->second).inverse());
}

DrinfeldTails<FreeElement> drinfeld_from_rtt(Field f, std::size_t N)
{
    auto tail = [&](int i, int j) {
        std::vector<FreeElement> c{i == j ? FreeElement::scalar(f.one()) : FreeElement(f)};
        for (std::uint32_t r = 1; r <= N; ++r) c.push_back(FreeElement::symbol(f, {i, j, r}));
        return FreeTail(std::move(c));
    };
    const FreeTail t11 = tail(1, 1), t12 = tail(1, 2), t21 = tail(2, 1), t22 = tail(2, 2);
    const FreeTail inv11 = inverse(t11, N);
    DrinfeldTails<FreeElement> out;
    out.d1 = t11;
    out.e = mul(inv11, t12, N);
    out.f = mul(t21, inv11, N);
    out.d2 = t22 - mul(out.f, t12, N);
    return out;
}

AlgebraElement substitute(const FreeElement& x, const std::function<AlgebraElement(const TSymbol&)>& image)
{
    const Field f = x.field();
    std::map<std::uint32_t, AlgebraElement> memo;
    AlgebraElement out(f);
    for (const auto& [w, c] : x.terms()) {
        AlgebraElement prod = AlgebraElement::scalar(Fe(f.data(), c));
        for (std::uint32_t code : w) {
            auto it = memo.find(code);
            if (it == memo.end()) it = memo.emplace(code, image(unpack_tsymbol(code))).first;
            prod = prod * it->second;
            if (prod.is_zero()) break;
        }
        out += prod;
    }
    return out;
}

Check verify_gauss_roundtrip(Field f, std::size_t N)
{
    Check out;
    out.check = "gauss_roundtrip";
    out.params = {{"p", f.characteristic()}, {"m", f.degree()}, {"N", N}};
    const DrinfeldTails<FreeElement> dt = drinfeld_from_rtt(f, N);
    auto image = [&](const TSymbol& s) { return t_series(f, s.i, s.j, N)[s.r]; };
    const std::pair<const char*, std::pair<const FreeTail*, Kind>> rows[] = {
        {"d1", {&dt.d1, Kind::D1}}, {"d2", {&dt.d2, Kind::D2}}, {"e", {&dt.e, Kind::E}}, {"f", {&dt.f, Kind::F}}};
    for (const auto& [name, data] : rows) {
        const AlgebraTail expect = generator_tail(f, data.second, N);
        for (std::size_t r = 0; r <= N; ++r) {
            const AlgebraElement got = substitute((*data.first)[r], image);
            if (got != expect[r]) {
                out.pass = false;
                out.witness = std::string(name) + "(" + std::to_string(r) + ") -> " + got.to_string();
                return out;
            }
        }
    }
    return out;
}

}  // namespace syang
