#include "syang/tensor.hpp"

#include <sstream>

namespace syang {

namespace {

void acc_add(const FieldData* fd, TensorElement::Terms& t, const TensorElement::Key& k, std::uint32_t c)
{
    if (c == 0) return;
    auto it = t.find(k);
    if (it == t.end()) {
        t.emplace(k, c);
        return;
    }
    it->second = fd->add(it->second, c);
    if (it->second == 0) t.erase(it);
}

void check_compatible(const TensorElement& a, const TensorElement& b)
{
    if (a.arity() != b.arity()) throw std::invalid_argument("tensor arity mismatch");
    if (a.field_data() && b.field_data() && a.field_data() != b.field_data())
        throw FieldMismatch("tensor elements over different fields");
}

}  // namespace

TensorElement TensorElement::scalar(const Fe& c, std::size_t arity)
{
    TensorElement x(c.field(), arity);
    x.add_term(Key(arity), c.raw());
    return x;
}

TensorElement TensorElement::from(const AlgebraElement& a)
{
    TensorElement x(a.field(), 1);
    for (const auto& [m, c] : a.terms()) x.terms_.emplace(Key{m}, c);
    return x;
}

Fe TensorElement::coeff(const Key& k) const
{
    auto it = terms_.find(k);
    return Fe(fd_, it == terms_.end() ? 0 : it->second);
}

void TensorElement::add_term(const Key& k, std::uint32_t c)
{
    if (k.size() != arity_) throw std::invalid_argument("tensor key arity mismatch");
    acc_add(fd_, terms_, k, c);
}

TensorElement& TensorElement::operator+=(const TensorElement& o)
{
    check_compatible(*this, o);
    if (!fd_) fd_ = o.fd_;
    for (const auto& [k, c] : o.terms_) acc_add(fd_, terms_, k, c);
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o)
{
    check_compatible(*this, o);
    if (!fd_) fd_ = o.fd_;
    for (const auto& [k, c] : o.terms_) acc_add(fd_, terms_, k, fd_->neg(c));
    return *this;
}

TensorElement operator*(const TensorElement& a, const TensorElement& b)
{
    check_compatible(a, b);
    TensorElement out(a.field_data() ? a.field() : b.field(), a.arity_);
    if (a.is_zero() || b.is_zero()) return out;
    const FieldData* fd = a.fd_;
    const Field f = a.field();
    const std::size_t k = a.arity_;
    std::vector<const AlgebraElement::Terms*> legs(k);
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) {
            // Koszul sign: x_i passes y_j for every i > j
            int sign = 0, odd_y = 0;
            for (std::size_t i = 0; i < k; ++i) {
                if (i > 0) odd_y ^= monomial_parity(kb[i - 1]);
                sign ^= monomial_parity(ka[i]) & odd_y;
            }
            bool zero = false;
            for (std::size_t i = 0; i < k && !zero; ++i) {
                legs[i] = &monomial_product(f, ka[i], kb[i]);
                zero = legs[i]->empty();
            }
            if (zero) continue;
            std::uint32_t c = fd->mul(ca, cb);
            if (sign) c = fd->neg(c);
            // cartesian product of the leg expansions
            TensorElement::Key key(k);
            std::vector<AlgebraElement::Terms::const_iterator> it(k);
            for (std::size_t i = 0; i < k; ++i) it[i] = legs[i]->begin();
            while (true) {
                std::uint32_t cc = c;
                for (std::size_t i = 0; i < k; ++i) {
                    key[i] = it[i]->first;
                    cc = fd->mul(cc, it[i]->second);
                }
                acc_add(fd, out.terms_, key, cc);
                bool done = true;
                for (std::size_t i = k; i-- > 0;) {
                    if (++it[i] != legs[i]->end()) {
                        done = false;
                        break;
                    }
                    it[i] = legs[i]->begin();
                }
                if (done) break;
            }
        }
    return out;
}

TensorElement operator*(TensorElement a, const Fe& s)
{
    if (a.terms_.empty()) return a;
    if (s.is_zero()) return TensorElement(a.field(), a.arity_);
    for (auto& kv : a.terms_) kv.second = a.fd_->mul(kv.second, s.raw());
    return a;
}

TensorElement TensorElement::operator-() const
{
    TensorElement r = *this;
    for (auto& kv : r.terms_) kv.second = fd_->neg(kv.second);
    return r;
}

std::string TensorElement::to_string() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        const Fe x(fd_, c);
        if (!x.is_one()) os << x << '*';
        for (std::size_t i = 0; i < k.size(); ++i) os << (i ? " (x) " : "") << monomial_name(k[i]);
    }
    return os.str();
}

TensorElement tensor(const TensorElement& x, const TensorElement& y)
{
    const Field f = x.field_data() ? x.field() : y.field();
    TensorElement out(f, x.arity() + y.arity());
    if (x.field_data() && y.field_data() && x.field_data() != y.field_data())
        throw FieldMismatch("tensor of elements over different fields");
    for (const auto& [kx, cx] : x.terms())
        for (const auto& [ky, cy] : y.terms()) {
            TensorElement::Key k = kx;
            k.insert(k.end(), ky.begin(), ky.end());
            out.add_term(k, f.data()->mul(cx, cy));
        }
    return out;
}

TensorElement tensor(const AlgebraElement& x, const AlgebraElement& y)
{
    return tensor(TensorElement::from(x), TensorElement::from(y));
}

TensorElement map_leg(const TensorElement& x, std::size_t leg, std::size_t image_arity,
                      const std::function<TensorElement(const Monomial&)>& f)
{
    if (leg >= x.arity()) throw std::out_of_range("map_leg: no such leg");
    std::map<Monomial, TensorElement> memo;
    TensorElement out(x.field(), x.arity() - 1 + image_arity);
    const FieldData* fd = x.field_data();
    for (const auto& [k, c] : x.terms()) {
        auto it = memo.find(k[leg]);
        if (it == memo.end()) it = memo.emplace(k[leg], f(k[leg])).first;
        const TensorElement& img = it->second;
        if (img.is_zero()) continue;
        if (img.arity() != image_arity) throw std::invalid_argument("map_leg: image arity mismatch");
        for (const auto& [ki, ci] : img.terms()) {
            TensorElement::Key nk(k.begin(), k.begin() + leg);
            nk.insert(nk.end(), ki.begin(), ki.end());
            nk.insert(nk.end(), k.begin() + leg + 1, k.end());
            out.add_term(nk, fd->mul(c, ci));
        }
    }
    return out;
}

AlgebraElement multiply_legs(const TensorElement& x)
{
    AlgebraElement out(x.field());
    const Field f = x.field();
    for (const auto& [k, c] : x.terms()) {
        AlgebraElement prod = AlgebraElement::monomial(f, {}, Fe(x.field_data(), c));
        for (const auto& m : k) prod = multiply(prod, AlgebraElement::monomial(f, m, f.one()));
        out += prod;
    }
    return out;
}

TensorElement unit_inverse(const TensorElement& x)
{
    if (x.size() != 1) throw NotInvertible("tensor element is not a scalar");
    const auto& [k, c] = *x.terms().begin();
    for (const auto& m : k)
        if (!m.empty()) throw NotInvertible("tensor element is not a scalar");
    return TensorElement::scalar(Fe(x.field_data(), c).inverse(), x.arity());
}

TensorTail tensor_series(const TensorTail& a, const TensorTail& b, std::size_t N)
{
    if (N > a.order() || N > b.order()) throw std::out_of_range("tensor_series beyond known order");
    std::vector<TensorElement> out;
    for (std::size_t r = 0; r <= N; ++r) {
        TensorElement acc(a[0].field(), a[0].arity() + b[0].arity());
        for (std::size_t s = 0; s <= r; ++s) {
            if (a[s].is_zero() || b[r - s].is_zero()) continue;
            acc += tensor(a[s], b[r - s]);
        }
        out.push_back(std::move(acc));
    }
    return TensorTail(std::move(out));
}

TensorTail lift(const AlgebraTail& a)
{
    std::vector<TensorElement> out;
    for (const auto& x : a.coeffs()) out.push_back(TensorElement::from(x));
    return TensorTail(std::move(out));
}

}  // namespace syang
