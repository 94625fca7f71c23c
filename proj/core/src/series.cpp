#include "syang/series.hpp"

#include "syang/poly.hpp"

namespace syang {

LaurentTail make_tail(Field f, const std::vector<std::int64_t>& coeffs)
{
    std::vector<Fe> c;
    for (auto x : coeffs) c.push_back(f.from_int(x));
    if (c.empty()) c.push_back(f.zero());
    return LaurentTail(std::move(c));
}

std::size_t tail_degree(const LaurentTail& f)
{
    std::size_t d = 0;
    for (std::size_t r = 0; r <= f.order(); ++r)
        if (!f[r].is_zero()) d = r;
    return d;
}

bool is_restricted(const LaurentTail& f)
{
    if (!f[0].is_one()) throw std::invalid_argument("is_restricted needs constant term 1");
    const Field field = f[0].field();
    const std::size_t d = tail_degree(f);
    if (d == 0) return true;
    const std::size_t N = field.characteristic() * d;
    return is_one(p_shift_product(f.padded(N), field, N));
}

bool is_restricted_by_roots(const LaurentTail& f)
{
    const Field field = f[0].field();
    const std::size_t d = tail_degree(f);
    std::vector<Fe> c(d + 1, field.zero());
    for (std::size_t i = 0; i <= d; ++i) c[i] = f[d - i];
    const auto roots = roots_in_field(Poly(field, std::move(c)));
    if (!roots) return false;
    for (const auto& r : *roots)
        if (!r.in_prime_field()) return false;
    return true;
}

}  // namespace syang
