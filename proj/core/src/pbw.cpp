#include "syang/pbw.hpp"

#include "syang/matrix.hpp"

#include <algorithm>
#include <memory>
#include <sstream>
#include <unordered_map>

namespace syang {

std::string kind_name(Kind k)
{
    switch (k) {
    case Kind::F: return "f";
    case Kind::D1: return "d1";
    case Kind::D2: return "d2";
    case Kind::E: return "e";
    }
    return "?";
}

std::string letter_name(Letter l)
{
    return kind_name(letter_kind(l)) + "(" + std::to_string(letter_index(l)) + ")";
}

std::uint32_t monomial_weight(const Monomial& m)
{
    std::uint32_t w = 0;
    for (auto l : m) w += letter_index(l);
    return w;
}

int monomial_parity(const Monomial& m)
{
    int p = 0;
    for (auto l : m) p ^= letter_odd(l) ? 1 : 0;
    return p;
}

int monomial_degree(const Monomial& m)
{
    int d = 0;
    for (auto l : m) {
        if (letter_kind(l) == Kind::E) ++d;
        if (letter_kind(l) == Kind::F) --d;
    }
    return d;
}

bool monomial_in_d_sector(const Monomial& m)
{
    return std::none_of(m.begin(), m.end(), letter_odd);
}

std::vector<std::pair<Letter, std::uint32_t>> monomial_runs(const Monomial& m)
{
    std::vector<std::pair<Letter, std::uint32_t>> runs;
    for (auto l : m) {
        if (!runs.empty() && runs.back().first == l)
            ++runs.back().second;
        else
            runs.emplace_back(l, 1);
    }
    return runs;
}

std::string monomial_name(const Monomial& m)
{
    if (m.empty()) return "1";
    std::string s;
    for (const auto& [l, e] : monomial_runs(m)) {
        if (!s.empty()) s += '*';
        s += letter_name(l);
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

namespace {

using Terms = std::vector<std::pair<Monomial, std::uint32_t>>;
using Acc = std::map<Monomial, std::uint32_t>;

struct KeyHash {
    std::size_t operator()(const std::pair<Monomial, Letter>& k) const
    {
        std::size_t h = k.second * 0x9e3779b97f4a7c15ULL;
        for (auto l : k.first) h = (h ^ l) * 0x100000001b3ULL + (h >> 29);
        return h;
    }
};

struct PairHash {
    std::size_t operator()(const std::pair<Monomial, Monomial>& k) const
    {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (auto l : k.first) h = (h ^ l) * 0x100000001b3ULL;
        h = (h ^ 0xffffffffu) * 0x100000001b3ULL;
        for (auto l : k.second) h = (h ^ l) * 0x100000001b3ULL;
        return h;
    }
};

struct Engine {
    const FieldData* fd = nullptr;
    std::unordered_map<std::pair<Monomial, Letter>, Terms, KeyHash> rml;
    std::unordered_map<std::pair<Monomial, Monomial>, Acc, PairHash> products;
    std::map<std::pair<Letter, Letter>, Terms> brackets;
    std::vector<AlgebraElement> dprime[2];
    AlgebraTail btail[2];
    std::uint64_t steps = 0;
    int depth = 0;
};

thread_local std::map<const FieldData*, std::unique_ptr<Engine>> t_engines;
thread_local std::uint64_t t_limit = 50'000'000;

Engine& engine_for(const FieldData* fd)
{
    auto& slot = t_engines[fd];
    if (!slot) {
        slot = std::make_unique<Engine>();
        slot->fd = fd;
    }
    return *slot;
}

// Resets the step budget when entered from outside the engine.
struct TopLevel {
    Engine& e;
    explicit TopLevel(Engine& en) : e(en)
    {
        if (e.depth++ == 0) e.steps = 0;
    }
    ~TopLevel() { --e.depth; }
};

void acc_add(const FieldData* fd, Acc& acc, const Monomial& m, std::uint32_t c)
{
    if (c == 0) return;
    auto it = acc.find(m);
    if (it == acc.end()) {
        acc.emplace(m, c);
        return;
    }
    it->second = fd->add(it->second, c);
    if (it->second == 0) acc.erase(it);
}

Terms to_terms(Acc&& acc)
{
    Terms t;
    t.reserve(acc.size());
    for (auto& kv : acc) t.emplace_back(kv.first, kv.second);
    return t;
}

// [h, g] vanishes identically for these ordered pairs (h > g).
bool bracket_vanishes(Letter h, Letter g)
{
    const Kind kh = letter_kind(h), kg = letter_kind(g);
    return kh == kg || (kh == Kind::D2 && kg == Kind::D1);
}

const Terms& right_mul_letter(Engine& E, const Monomial& m, Letter g);

Acc mul_monomials(Engine& E, const Monomial& a, const Monomial& b)
{
    Acc out;
    if (b.empty()) {
        out.emplace(a, 1);
        return out;
    }
    if (a.empty()) {
        out.emplace(b, 1);
        return out;
    }
    if (a.back() < b.front() || (a.back() == b.front() && !letter_odd(b.front()))) {
        Monomial c = a;
        c.insert(c.end(), b.begin(), b.end());
        out.emplace(std::move(c), 1);
        return out;
    }
    if (monomial_in_d_sector(a) && monomial_in_d_sector(b)) {
        Monomial c;
        c.reserve(a.size() + b.size());
        std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(c));
        out.emplace(std::move(c), 1);
        return out;
    }
    out.emplace(a, 1);
    for (Letter g : b) {
        Acc next;
        for (const auto& [mon, c] : out)
            for (const auto& [mon2, c2] : right_mul_letter(E, mon, g)) acc_add(E.fd, next, mon2, E.fd->mul(c, c2));
        out = std::move(next);
        if (out.empty()) break;
    }
    return out;
}

AlgebraElement from_acc(const FieldData* fd, const Acc& acc)
{
    AlgebraElement x(Field::from_data(fd));
    for (const auto& [m, c] : acc) x.add_term(m, c);
    return x;
}

const AlgebraElement& d_prime_cached(Engine& E, int i, std::uint32_t r);

// [h, g] for h > g, already in normal form.
const Terms& bracket(Engine& E, Letter h, Letter g)
{
    const auto key = std::make_pair(h, g);
    if (auto it = E.brackets.find(key); it != E.brackets.end()) return it->second;
    const FieldData* fd = E.fd;
    const std::uint32_t minus_one = fd->neg(1);
    const Kind kh = letter_kind(h), kg = letter_kind(g);
    const std::uint32_t r = letter_index(h), s = letter_index(g);
    Acc acc;
    if (bracket_vanishes(h, g)) {
        // nothing
    } else if (kh == Kind::E && (kg == Kind::D1 || kg == Kind::D2)) {
        // [e^(r), d^(s)] = -[d^(s), e^(r)] = -sum_{t<s} d^(t) e^(s+r-1-t)
        for (std::uint32_t t = 0; t < s; ++t) {
            Monomial m;
            if (t > 0) m.push_back(make_letter(kg, t));
            m.push_back(make_letter(Kind::E, s + r - 1 - t));
            acc_add(fd, acc, m, minus_one);
        }
    } else if ((kh == Kind::D1 || kh == Kind::D2) && kg == Kind::F) {
        // [d^(r), f^(s)] = -sum_{t<r} f^(r+s-1-t) d^(t)
        for (std::uint32_t t = 0; t < r; ++t) {
            Monomial m{make_letter(Kind::F, r + s - 1 - t)};
            if (t > 0) m.push_back(make_letter(kh, t));
            acc_add(fd, acc, m, minus_one);
        }
    } else if (kh == Kind::E && kg == Kind::F) {
        // [e^(r), f^(s)] = sum_{t=0}^{r+s-1} d1'^(t) d2^(r+s-1-t)
        const std::uint32_t n = r + s - 1;
        for (std::uint32_t t = 0; t <= n; ++t) {
            const AlgebraElement& dp = d_prime_cached(E, 0, t);
            for (const auto& [m, c] : dp.terms()) {
                Monomial mm = m;
                if (n - t > 0) mm.push_back(make_letter(Kind::D2, n - t));
                acc_add(fd, acc, mm, c);
            }
        }
    } else {
        throw std::logic_error("bracket called with misordered letters " + letter_name(h) + ", " +
                               letter_name(g));
    }
    return E.brackets.emplace(key, to_terms(std::move(acc))).first->second;
}

const Terms& right_mul_letter(Engine& E, const Monomial& m, Letter g)
{
    auto key = std::make_pair(m, g);
    if (auto it = E.rml.find(key); it != E.rml.end()) return it->second;
    if (++E.steps > t_limit) {
        throw RewriteLimitExceeded("rewriting exceeded " + std::to_string(t_limit) +
                                   " steps while reducing " + monomial_name(m) + " * " + letter_name(g));
    }
    const FieldData* fd = E.fd;
    Terms res;
    const bool odd = letter_odd(g);
    if (m.empty() || g > m.back() || (g == m.back() && !odd)) {
        Monomial n = m;
        n.push_back(g);
        res.emplace_back(std::move(n), 1);
    } else if (g == m.back()) {
        // odd square
    } else {
        // Find where g belongs; if every letter to its right super-commutes with g
        // trivially, insertion only costs a sign.
        const auto pos = std::upper_bound(m.begin(), m.end(), g);
        bool trivial = true;
        int odd_tail = 0;
        for (auto it = pos; it != m.end(); ++it) {
            if (!bracket_vanishes(*it, g)) {
                trivial = false;
                break;
            }
            odd_tail += letter_odd(*it) ? 1 : 0;
        }
        if (trivial) {
            const bool clash = odd && pos != m.begin() && *(pos - 1) == g;
            if (!clash) {
                Monomial n(m.begin(), pos);
                n.push_back(g);
                n.insert(n.end(), pos, m.end());
                res.emplace_back(std::move(n), (odd && (odd_tail & 1)) ? fd->neg(1) : 1u);
            }
        } else {
            // m1 h g = s (m1 g) h + m1 [h, g]
            const Letter h = m.back();
            const Monomial m1(m.begin(), m.end() - 1);
            const std::uint32_t s = (odd && letter_odd(h)) ? fd->neg(1) : 1u;
            Acc acc;
            const Terms& first = right_mul_letter(E, m1, g);
            for (const auto& [mon, c] : first)
                for (const auto& [mon2, c2] : right_mul_letter(E, mon, h))
                    acc_add(fd, acc, mon2, fd->mul(s, fd->mul(c, c2)));
            const Terms& br = bracket(E, h, g);
            for (const auto& [bm, bc] : br)
                for (const auto& [mon2, c2] : mul_monomials(E, m1, bm)) acc_add(fd, acc, mon2, fd->mul(bc, c2));
            res = to_terms(std::move(acc));
        }
    }
    return E.rml.emplace(std::move(key), std::move(res)).first->second;
}

const AlgebraElement& d_prime_cached(Engine& E, int i, std::uint32_t r)
{
    auto& v = E.dprime[i];
    const Field f = Field::from_data(E.fd);
    if (v.empty()) v.push_back(AlgebraElement::one(f));
    const Kind k = i == 0 ? Kind::D1 : Kind::D2;
    while (v.size() <= r) {
        const std::uint32_t n = static_cast<std::uint32_t>(v.size());
        Acc acc;
        for (std::uint32_t t = 1; t <= n; ++t) {
            const Monomial dt{make_letter(k, t)};
            for (const auto& [m, c] : v[n - t].terms())
                for (const auto& [mm, cc] : mul_monomials(E, dt, m)) acc_add(E.fd, acc, mm, E.fd->mul(c, cc));
        }
        AlgebraElement x = from_acc(E.fd, acc);
        v.push_back(-x);
    }
    return v[r];
}

}  // namespace

AlgebraElement AlgebraElement::scalar(const Fe& c)
{
    AlgebraElement x(c.field());
    x.add_term({}, c.raw());
    return x;
}

AlgebraElement AlgebraElement::generator(Field f, Kind k, std::uint32_t r)
{
    if (r == 0) {
        if (k == Kind::D1 || k == Kind::D2) return one(f);
        throw std::invalid_argument("e and f have no zeroth coefficient generator");
    }
    if (r > 0xffffu) throw std::out_of_range("generator superscript too large");
    AlgebraElement x(f);
    x.add_term({make_letter(k, r)}, 1);
    return x;
}

AlgebraElement AlgebraElement::monomial(Field f, Monomial m, const Fe& c)
{
    if (!std::is_sorted(m.begin(), m.end())) throw std::invalid_argument("monomial letters not in PBW order");
    for (std::size_t i = 1; i < m.size(); ++i)
        if (m[i] == m[i - 1] && letter_odd(m[i])) return AlgebraElement(f);
    AlgebraElement x(f);
    x.add_term(m, c.raw());
    return x;
}

Fe AlgebraElement::coeff(const Monomial& m) const
{
    auto it = terms_.find(m);
    return Fe(fd_, it == terms_.end() ? 0 : it->second);
}

void AlgebraElement::add_term(const Monomial& m, std::uint32_t c)
{
    acc_add(fd_, terms_, m, c);
}

bool AlgebraElement::is_homogeneous() const
{
    int par = -1;
    for (const auto& kv : terms_) {
        const int q = monomial_parity(kv.first);
        if (par >= 0 && q != par) return false;
        par = q;
    }
    return true;
}

int AlgebraElement::parity() const
{
    if (!is_homogeneous()) throw std::invalid_argument("element is not parity-homogeneous");
    return terms_.empty() ? 0 : monomial_parity(terms_.begin()->first);
}

bool AlgebraElement::in_d_sector() const
{
    for (const auto& kv : terms_)
        if (!monomial_in_d_sector(kv.first)) return false;
    return true;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o)
{
    if (o.terms_.empty()) return *this;
    if (fd_ == nullptr) fd_ = o.fd_;
    if (fd_ != o.fd_) throw FieldMismatch("algebra elements over different fields");
    for (const auto& [m, c] : o.terms_) acc_add(fd_, terms_, m, c);
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o)
{
    if (o.terms_.empty()) return *this;
    if (fd_ == nullptr) fd_ = o.fd_;
    if (fd_ != o.fd_) throw FieldMismatch("algebra elements over different fields");
    for (const auto& [m, c] : o.terms_) acc_add(fd_, terms_, m, fd_->neg(c));
    return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) { return multiply(a, b); }

AlgebraElement operator*(AlgebraElement a, const Fe& s)
{
    if (a.terms_.empty()) return a;
    if (s.field_data() != a.fd_) throw FieldMismatch("scaling by an element of another field");
    if (s.is_zero()) return AlgebraElement(a.field());
    for (auto& kv : a.terms_) kv.second = a.fd_->mul(kv.second, s.raw());
    return a;
}

AlgebraElement AlgebraElement::operator-() const
{
    AlgebraElement r = *this;
    for (auto& kv : r.terms_) kv.second = fd_->neg(kv.second);
    return r;
}

std::string AlgebraElement::to_string() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const Fe x(fd_, c);
        if (!first) os << " + ";
        first = false;
        if (m.empty()) {
            os << x;
            continue;
        }
        if (!x.is_one()) {
            const bool paren = !x.in_prime_field();
            os << (paren ? "(" : "") << x << (paren ? ")" : "") << '*';
        }
        os << monomial_name(m);
    }
    return os.str();
}

const AlgebraElement::Terms& monomial_product(Field f, const Monomial& a, const Monomial& b)
{
    Engine& E = engine_for(f.data());
    auto key = std::make_pair(a, b);
    if (auto it = E.products.find(key); it != E.products.end()) return it->second;
    TopLevel guard(E);
    Acc r = mul_monomials(E, a, b);
    return E.products.emplace(std::move(key), std::move(r)).first->second;
}

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y)
{
    if (x.is_zero() || y.is_zero()) return AlgebraElement(x.field_data() ? x.field() : y.field());
    if (x.field_data() != y.field_data()) throw FieldMismatch("product of elements over different fields");
    Engine& E = engine_for(x.field_data());
    TopLevel guard(E);
    const FieldData* fd = E.fd;
    Acc acc;
    for (const auto& [a, ca] : x.terms())
        for (const auto& [b, cb] : y.terms()) {
            const std::uint32_t c = fd->mul(ca, cb);
            for (const auto& [m, cm] : mul_monomials(E, a, b)) acc_add(fd, acc, m, fd->mul(c, cm));
        }
    return from_acc(fd, acc);
}

AlgebraElement normal_form(Field f, const std::vector<Generator>& word)
{
    Engine& E = engine_for(f.data());
    TopLevel guard(E);
    Acc cur;
    cur.emplace(Monomial{}, 1);
    for (const auto& g : word) {
        if (g.r == 0) {
            if (g.kind == Kind::D1 || g.kind == Kind::D2) continue;
            throw std::invalid_argument("e(0) and f(0) are not generators");
        }
        const Letter l = make_letter(g.kind, g.r);
        Acc next;
        for (const auto& [m, c] : cur)
            for (const auto& [m2, c2] : right_mul_letter(E, m, l)) acc_add(E.fd, next, m2, E.fd->mul(c, c2));
        cur = std::move(next);
    }
    return from_acc(E.fd, cur);
}

AlgebraElement super_commutator(const AlgebraElement& x, const AlgebraElement& y)
{
    const int px = x.parity(), py = y.parity();
    AlgebraElement xy = multiply(x, y), yx = multiply(y, x);
    return (px & py) ? xy + yx : xy - yx;
}

AlgebraElement d_prime(Field f, int i, std::uint32_t r)
{
    if (i != 1 && i != 2) throw std::invalid_argument("d_prime index must be 1 or 2");
    Engine& E = engine_for(f.data());
    TopLevel guard(E);
    return d_prime_cached(E, i - 1, r);
}

void set_rewrite_limit(std::uint64_t steps) { t_limit = steps; }
std::uint64_t rewrite_limit() { return t_limit; }
void clear_rewrite_cache() { t_engines.clear(); }

AlgebraElement unit_inverse(const AlgebraElement& x)
{
    if (x.size() != 1 || !x.terms().begin()->first.empty())
        throw NotInvertible("only nonzero scalars are invertible here");
    return AlgebraElement::scalar(x.constant_term().inverse());
}

AlgebraTail generator_tail(Field f, Kind k, std::size_t N)
{
    std::vector<AlgebraElement> c;
    c.reserve(N + 1);
    const bool even = k == Kind::D1 || k == Kind::D2;
    c.push_back(even ? AlgebraElement::one(f) : AlgebraElement(f));
    for (std::size_t r = 1; r <= N; ++r) c.push_back(AlgebraElement::generator(f, k, std::uint32_t(r)));
    return AlgebraTail(std::move(c));
}

AlgebraTail b_series(Field f, int i, std::size_t N)
{
    if (i != 1 && i != 2) throw std::invalid_argument("b_series index must be 1 or 2");
    Engine& E = engine_for(f.data());
    TopLevel guard(E);
    AlgebraTail& cached = E.btail[i - 1];
    if (!cached.empty() && cached.order() >= N) return cached.truncated(N);
    AlgebraTail base = i == 1 ? generator_tail(f, Kind::D1, N) : inverse(generator_tail(f, Kind::D2, N), N);
    AlgebraTail acc = base;
    for (std::uint32_t j = 1; j < f.characteristic(); ++j) acc = mul(acc, shift(base, f.from_int(j), N), N);
    cached = acc;
    return acc;
}

CentralityReport centrality_check(Field f, int i, std::uint32_t r, std::uint32_t s_max)
{
    const AlgebraElement b = b_series(f, i, r)[r];
    CentralityReport rep;
    for (Kind k : {Kind::F, Kind::D1, Kind::D2, Kind::E})
        for (std::uint32_t s = 1; s <= s_max; ++s) {
            const AlgebraElement c = super_commutator(b, AlgebraElement::generator(f, k, s));
            if (!c.is_zero()) {
                rep.central = false;
                rep.witness = "[b" + std::to_string(i) + "(" + std::to_string(r) + "), " +
                              letter_name(make_letter(k, s)) + "] = " + c.to_string();
                return rep;
            }
        }
    return rep;
}

namespace {

void enumerate_d(std::uint32_t remaining, std::size_t from, const std::vector<Letter>& letters,
                 Monomial& cur, std::vector<Monomial>& out)
{
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = from; i < letters.size(); ++i) {
        const std::uint32_t w = letter_index(letters[i]);
        if (w > remaining) continue;
        cur.push_back(letters[i]);
        enumerate_d(remaining - w, i, letters, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Monomial> d_monomials(std::uint32_t weight)
{
    std::vector<Letter> letters;
    for (Kind k : {Kind::D1, Kind::D2})
        for (std::uint32_t r = 1; r <= weight; ++r) letters.push_back(make_letter(k, r));
    std::vector<Monomial> out;
    Monomial cur;
    enumerate_d(weight, 0, letters, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

bool is_restricted_monomial(const Monomial& m, std::uint32_t p)
{
    for (const auto& [l, e] : monomial_runs(m))
        if (e >= p) return false;
    return true;
}

namespace {

// The b_i^(r) are not weight-homogeneous (the shifts mix in lower weights), so
// slices are taken in the filtered sense: everything of weight <= w.
struct WeightSlice {
    std::vector<Monomial> columns;  // non-restricted first, heavier first
    std::size_t nonrestricted = 0;
    std::map<Monomial, std::size_t> index;
    Matrix ideal;  // rows span m * b_i^(r) with weight(m) + r <= w
};

WeightSlice build_slice(Field f, std::uint32_t w)
{
    const std::uint32_t p = f.characteristic();
    WeightSlice s;
    std::vector<Monomial> restricted;
    for (std::uint32_t v = w + 1; v-- > 0;)
        for (auto& m : d_monomials(v)) {
            if (is_restricted_monomial(m, p))
                restricted.push_back(std::move(m));
            else
                s.columns.push_back(std::move(m));
        }
    s.nonrestricted = s.columns.size();
    s.columns.insert(s.columns.end(), restricted.begin(), restricted.end());
    for (std::size_t i = 0; i < s.columns.size(); ++i) s.index[s.columns[i]] = i;

    std::vector<std::vector<std::uint32_t>> rows;
    for (int i = 1; i <= 2; ++i) {
        const AlgebraTail b = b_series(f, i, w);
        for (std::uint32_t r = 1; r <= w; ++r) {
            if (b[r].is_zero()) continue;
            for (std::uint32_t v = 0; v + r <= w; ++v)
                for (const auto& m : d_monomials(v)) {
                    std::vector<std::uint32_t> row(s.columns.size(), 0);
                    for (const auto& [bm, c] : b[r].terms()) {
                        Monomial prod;
                        std::merge(m.begin(), m.end(), bm.begin(), bm.end(), std::back_inserter(prod));
                        auto& slot = row[s.index.at(prod)];
                        slot = f.data()->add(slot, c);
                    }
                    rows.push_back(std::move(row));
                }
        }
    }
    s.ideal = Matrix(f, rows.size(), s.columns.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < s.columns.size(); ++j) s.ideal.raw(i, j) = rows[i][j];
    return s;
}

}  // namespace

AlgebraElement restricted_reduce(const AlgebraElement& x, std::uint32_t weight_cap)
{
    if (!x.in_d_sector()) throw std::invalid_argument("restricted_reduce: input is not in the d-sector");
    const Field f = x.field();
    const std::uint32_t p = f.characteristic();
    if (std::all_of(x.terms().begin(), x.terms().end(),
                    [&](const auto& kv) { return is_restricted_monomial(kv.first, p); }))
        return x;
    std::uint32_t w = 0;
    for (const auto& kv : x.terms()) w = std::max(w, monomial_weight(kv.first));
    if (w > weight_cap)
        throw WeightCapExceeded("restricted_reduce: weight " + std::to_string(w) + " exceeds cap " +
                                std::to_string(weight_cap));
    const FieldData* fd = f.data();
    WeightSlice s = build_slice(f, w);
    const auto pivots = rref(s.ideal);
    std::vector<std::uint32_t> v(s.columns.size(), 0);
    for (const auto& [m, c] : x.terms()) v[s.index.at(m)] = c;
    for (std::size_t k = 0; k < pivots.size(); ++k) {
        const std::uint32_t c = v[pivots[k]];
        if (c == 0) continue;
        const std::uint32_t nc = fd->neg(c);
        for (std::size_t j = 0; j < v.size(); ++j)
            if (s.ideal.raw(k, j)) v[j] = fd->add(v[j], fd->mul(nc, s.ideal.raw(k, j)));
    }
    for (std::size_t j = 0; j < s.nonrestricted; ++j)
        if (v[j] != 0)
            throw std::logic_error("restricted_reduce: monomial " + monomial_name(s.columns[j]) +
                                   " cannot be eliminated at weight " + std::to_string(w));
    AlgebraElement out(f);
    for (std::size_t j = s.nonrestricted; j < v.size(); ++j)
        if (v[j]) out.add_term(s.columns[j], v[j]);
    return out;
}

RestrictedRankReport restricted_rank_check(Field f, std::uint32_t weight)
{
    WeightSlice s = build_slice(f, weight);
    RestrictedRankReport rep;
    rep.weight = weight;
    rep.dim = s.columns.size();
    rep.restricted = s.columns.size() - s.nonrestricted;
    rep.ideal_rank = rank(s.ideal);
    Matrix both(f, s.ideal.rows() + rep.restricted, s.columns.size());
    for (std::size_t i = 0; i < s.ideal.rows(); ++i)
        for (std::size_t j = 0; j < s.columns.size(); ++j) both.raw(i, j) = s.ideal.raw(i, j);
    for (std::size_t k = 0; k < rep.restricted; ++k) both.raw(s.ideal.rows() + k, s.nonrestricted + k) = 1;
    rep.combined_rank = rank(both);
    return rep;
}

}  // namespace syang
