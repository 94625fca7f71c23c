#include "syang/field.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <utility>

namespace syang {

bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace detail {

namespace {

void trim(PrimePoly& a)
{
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p)
{
    std::int64_t t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        std::int64_t qt = r / nr;
        t = std::exchange(nt, t - qt * nt);
        r = std::exchange(nr, r - qt * nr);
    }
    if (r != 1) throw NotInvertible("zero has no inverse");
    return static_cast<std::uint32_t>((t % p + p) % p);
}

// Remainder of a modulo the nonzero polynomial b.
PrimePoly prime_poly_rem(PrimePoly a, const PrimePoly& b, std::uint32_t p)
{
    trim(a);
    const std::size_t db = b.size() - 1;
    const std::uint32_t lead_inv = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
        const std::uint64_t c = std::uint64_t(a.back()) * lead_inv % p;
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) {
            const std::uint64_t sub = c * b[i] % p;
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

}  // namespace

PrimePoly prime_poly_mulmod(const PrimePoly& a, const PrimePoly& b, const PrimePoly& mod,
                            std::uint32_t p)
{
    if (a.empty() || b.empty()) return {};
    PrimePoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t(a[i]) * b[j]) % p);
    return prime_poly_rem(std::move(r), mod, p);
}

PrimePoly prime_poly_gcd(PrimePoly a, PrimePoly b, std::uint32_t p)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        PrimePoly r = prime_poly_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const std::uint32_t li = inv_mod(a.back(), p);
        for (auto& c : a) c = static_cast<std::uint32_t>(std::uint64_t(c) * li % p);
    }
    return a;
}

// f of degree m is irreducible iff gcd(f, x^{p^k} - x) = 1 for 1 <= k <= m/2.
bool prime_poly_is_irreducible(const PrimePoly& f, std::uint32_t p)
{
    const std::size_t m = f.size() - 1;
    if (m == 0) return false;
    if (m == 1) return true;
    PrimePoly x = {0, 1};
    PrimePoly power = x;  // x^{p^k} mod f
    for (std::size_t k = 1; k <= m / 2; ++k) {
        // raise to the p-th power by square-and-multiply
        PrimePoly base = power, acc = {1};
        for (std::uint64_t e = p; e > 0; e >>= 1) {
            if (e & 1) acc = prime_poly_mulmod(acc, base, f, p);
            base = prime_poly_mulmod(base, base, f, p);
        }
        power = acc;
        PrimePoly diff = power;
        diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
        diff[1] = (diff[1] + p - 1) % p;
        trim(diff);
        if (prime_poly_gcd(diff, f, p).size() != 1) return false;
    }
    return true;
}

}  // namespace detail

namespace {

std::unique_ptr<FieldData> build_field(std::uint32_t p, std::uint32_t m)
{
    auto d = std::make_unique<FieldData>();
    d->p = p;
    d->m = m;
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) q *= p;
    if (m > 1 && q > (1u << 22))
        throw std::invalid_argument("extension field too large for table arithmetic");
    d->q = static_cast<std::uint32_t>(q);

    if (m == 1) {
        d->modulus = {0, 1};
        return d;
    }
    // Enumerate monic degree-m polynomials, lex on (c_{m-1}, ..., c_0).
    const std::uint64_t count = q;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        detail::PrimePoly f(m + 1, 0);
        f[m] = 1;
        std::uint64_t t = idx;
        for (std::uint32_t i = 0; i < m; ++i) {  // least significant digit -> c_0
            f[i] = static_cast<std::uint32_t>(t % p);
            t /= p;
        }
        if (detail::prime_poly_is_irreducible(f, p)) {
            d->modulus = f;
            break;
        }
    }

    // Multiplication through a primitive element.
    auto to_poly = [&](std::uint32_t v) {
        detail::PrimePoly r(m, 0);
        for (std::uint32_t i = 0; i < m; ++i) {
            r[i] = v % p;
            v /= p;
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    };
    auto from_poly = [&](const detail::PrimePoly& r) {
        std::uint32_t v = 0;
        for (std::size_t i = r.size(); i-- > 0;) v = v * p + r[i];
        return v;
    };
    const std::uint32_t n = d->q - 1;
    d->exp_table.assign(n, 0);
    d->log_table.assign(d->q, 0);
    for (std::uint32_t cand = 2; cand < d->q; ++cand) {
        const auto g = to_poly(cand);
        std::uint32_t cur = 1;
        std::uint32_t ord = 0;
        bool primitive = true;
        for (std::uint32_t i = 0; i < n; ++i) {
            if (i > 0 && cur == 1) {
                primitive = false;
                break;
            }
            d->exp_table[i] = cur;
            cur = from_poly(detail::prime_poly_mulmod(to_poly(cur), g, d->modulus, p));
            ++ord;
        }
        if (primitive && cur == 1 && ord == n) break;
    }
    for (std::uint32_t i = 0; i < n; ++i) d->log_table[d->exp_table[i]] = i;
    return d;
}

}  // namespace

std::uint32_t FieldData::inv(std::uint32_t a) const
{
    if (a == 0) throw NotInvertible("zero has no inverse");
    if (m == 1) return detail::inv_mod(a, p);
    const std::uint32_t l = log_table[a];
    return exp_table[l == 0 ? 0 : q - 1 - l];
}

std::uint32_t FieldData::pow(std::uint32_t a, std::uint64_t e) const
{
    std::uint32_t r = 1;
    while (e > 0) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint32_t FieldData::from_int(std::int64_t n) const
{
    const std::int64_t r = n % static_cast<std::int64_t>(p);
    return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

Field Field::make(std::uint32_t p, std::uint32_t m)
{
    if (!is_prime(p) || p == 2) throw std::invalid_argument("characteristic must be an odd prime");
    if (m < 1) throw std::invalid_argument("extension degree must be at least 1");
    static std::mutex mutex;
    static std::map<std::pair<std::uint32_t, std::uint32_t>, std::unique_ptr<FieldData>> registry;
    std::lock_guard<std::mutex> lock(mutex);
    auto& slot = registry[{p, m}];
    if (!slot) slot = build_field(p, m);
    return Field(slot.get());
}

Fe Field::zero() const { return Fe(data_, 0); }
Fe Field::one() const { return Fe(data_, 1); }
Fe Field::from_int(std::int64_t n) const { return Fe(data_, data_->from_int(n)); }

Fe Field::from_coeffs(const std::vector<std::int64_t>& coeffs) const
{
    if (coeffs.size() > data_->m)
        throw std::invalid_argument("too many coefficients for the field degree");
    std::uint32_t v = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) v = v * data_->p + data_->from_int(coeffs[i]);
    return Fe(data_, v);
}

Fe Field::generator() const
{
    if (data_->m < 2) throw std::invalid_argument("prime field has no extension generator");
    return Fe(data_, data_->p);
}

Fe Field::element(std::uint32_t index) const
{
    if (index >= data_->q) throw std::out_of_range("field element index");
    return Fe(data_, index);
}

std::vector<Fe> Field::elements() const
{
    std::vector<Fe> out;
    out.reserve(data_->q);
    for (std::uint32_t i = 0; i < data_->q; ++i) out.emplace_back(data_, i);
    return out;
}

Field Fe::field() const { return Field(f_); }

std::vector<std::uint32_t> Fe::coeffs() const
{
    std::vector<std::uint32_t> c(f_->m);
    std::uint32_t v = v_;
    for (auto& x : c) {
        x = v % f_->p;
        v /= f_->p;
    }
    return c;
}

void Fe::check_same(const Fe& o) const
{
    if (f_ != o.f_) throw FieldMismatch("field elements from different fields");
}

Fe Fe::inverse() const { return {f_, f_->inv(v_)}; }
Fe Fe::pow(std::uint64_t e) const { return {f_, f_->pow(v_, e)}; }

Fe& Fe::operator+=(const Fe& o)
{
    check_same(o);
    v_ = f_->add(v_, o.v_);
    return *this;
}

Fe& Fe::operator-=(const Fe& o)
{
    check_same(o);
    v_ = f_->sub(v_, o.v_);
    return *this;
}

Fe& Fe::operator*=(const Fe& o)
{
    check_same(o);
    v_ = f_->mul(v_, o.v_);
    return *this;
}

Fe& Fe::operator/=(const Fe& o)
{
    check_same(o);
    v_ = f_->mul(v_, f_->inv(o.v_));
    return *this;
}

std::string Fe::to_string() const
{
    if (f_ == nullptr) return "?";
    if (f_->m == 1) return std::to_string(v_);
    const auto c = coeffs();
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        if (!first) os << '+';
        first = false;
        if (i == 0) {
            os << c[i];
            continue;
        }
        if (c[i] != 1) os << c[i] << '*';
        os << 'w';
        if (i > 1) os << '^' << i;
    }
    if (first) os << '0';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Fe& x) { return os << x.to_string(); }

std::uint32_t binomial_mod(std::uint64_t n, std::uint64_t k, std::uint32_t p)
{
    if (k > n) return 0;
    std::uint64_t result = 1;
    while (n > 0 || k > 0) {
        const std::uint64_t ni = n % p, ki = k % p;
        if (ki > ni) return 0;
        // C(ni, ki) with ni < p via the multiplicative formula
        std::uint64_t num = 1, den = 1;
        for (std::uint64_t i = 0; i < ki; ++i) {
            num = num * ((ni - i) % p) % p;
            den = den * ((i + 1) % p) % p;
        }
        result = result * num % p * detail::inv_mod(static_cast<std::uint32_t>(den), p) % p;
        n /= p;
        k /= p;
    }
    return static_cast<std::uint32_t>(result);
}

}  // namespace syang
