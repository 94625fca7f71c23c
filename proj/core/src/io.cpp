#include "syang/io.hpp"

#include <cctype>
#include <map>

namespace syang {

namespace {

// Integer polynomial in w and x = u^-1: (w-degree, x-degree) -> coefficient.
using Bivar = std::map<std::pair<int, int>, std::int64_t>;

Bivar bv_mul(const Bivar& a, const Bivar& b)
{
    Bivar out;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) out[{ka.first + kb.first, ka.second + kb.second}] += ca * cb;
    return out;
}

Bivar bv_add(Bivar a, const Bivar& b, std::int64_t sign)
{
    for (const auto& [k, c] : b) a[k] += sign * c;
    return a;
}

class Parser {
public:
    explicit Parser(std::string s) : s_(std::move(s)) {}

    Bivar parse()
    {
        Bivar v = sum();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

private:
    std::string s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError("cannot parse \"" + s_ + "\" at position " + std::to_string(pos_) + ": " + what);
    }
    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek()
    {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    std::int64_t integer()
    {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        if (pos_ - start > 17) fail("integer too long");
        return std::stoll(s_.substr(start, pos_ - start));
    }

    Bivar sum()
    {
        Bivar acc;
        std::int64_t sign = 1;
        if (peek() == '-' || peek() == '+') {
            sign = peek() == '-' ? -1 : 1;
            ++pos_;
        }
        acc = bv_add(acc, product(), sign);
        while (peek() == '+' || peek() == '-') {
            sign = s_[pos_++] == '-' ? -1 : 1;
            acc = bv_add(acc, product(), sign);
        }
        return acc;
    }

    Bivar product()
    {
        Bivar acc = factor();
        while (true) {
            const char c = peek();
            if (c == '*') {
                ++pos_;
                acc = bv_mul(acc, factor());
            } else if (c == '(' || c == 'w' || c == 'u' || std::isdigit(static_cast<unsigned char>(c))) {
                acc = bv_mul(acc, factor());
            } else {
                return acc;
            }
        }
    }

    Bivar power(Bivar base, std::int64_t e)
    {
        Bivar acc{{{0, 0}, 1}};
        for (std::int64_t i = 0; i < e; ++i) acc = bv_mul(acc, base);
        return acc;
    }

    Bivar factor()
    {
        const char c = peek();
        Bivar base;
        if (c == '(') {
            ++pos_;
            base = sum();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
        } else if (c == 'w') {
            ++pos_;
            base = {{{1, 0}, 1}};
        } else if (c == 'u') {
            ++pos_;
            if (peek() != '^') fail("u must carry a negative exponent");
            ++pos_;
            const bool paren = peek() == '(' || peek() == '{';
            if (paren) ++pos_;
            if (peek() != '-') fail("only negative powers of u are allowed");
            ++pos_;
            const std::int64_t k = integer();
            if (paren) {
                if (peek() != ')' && peek() != '}') fail("unbalanced exponent");
                ++pos_;
            }
            if (k > 100000) fail("exponent too large");
            return {{{0, static_cast<int>(k)}, 1}};
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            base = {{{0, 0}, integer()}};
        } else {
            fail(c ? "unexpected '" + std::string(1, c) + "'" : "unexpected end of input");
        }
        if (peek() == '^') {
            ++pos_;
            const std::int64_t e = integer();
            if (e > 1000) fail("exponent too large");
            base = power(base, e);
        }
        return base;
    }
};

Fe bivar_coeff(Field f, const Bivar& v, int xdeg)
{
    std::vector<std::int64_t> w;
    for (const auto& [k, c] : v) {
        if (k.second != xdeg || c == 0) continue;
        if (k.first > 0 && f.degree() == 1) throw ParseError("w needs an extension field (--ext-degree > 1)");
        if (w.size() <= std::size_t(k.first)) w.resize(k.first + 1, 0);
        w[k.first] += c;
    }
    if (w.empty()) return f.zero();
    if (f.degree() == 1) return f.from_int(w[0]);
    // reduce powers of w beyond the power basis through the field multiplication
    Fe acc = f.zero(), wp = f.one();
    const Fe gen = f.generator();
    for (std::size_t i = 0; i < w.size(); ++i) {
        acc += wp * f.from_int(w[i]);
        wp *= gen;
    }
    return acc;
}

std::vector<std::string> split_top(const std::string& s, char sep)
{
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::string trim(const std::string& s)
{
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

}  // namespace

Fe parse_fe(Field f, const std::string& text)
{
    const std::string t = trim(text);
    if (t.empty()) throw ParseError("empty field element");
    // coefficient tuple "(c0,c1,...)"
    if (t.front() == '(' && t.back() == ')' && t.find(',') != std::string::npos) {
        const auto parts = split_top(t.substr(1, t.size() - 2), ',');
        if (parts.size() > f.degree())
            throw ParseError("tuple \"" + t + "\" has more than " + std::to_string(f.degree()) + " coefficients");
        std::vector<std::int64_t> c;
        for (const auto& p : parts) {
            const std::string q = trim(p);
            std::size_t used = 0;
            try {
                c.push_back(std::stoll(q, &used));
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != q.size() || q.empty()) throw ParseError("bad coefficient \"" + q + "\" in " + t);
        }
        return f.from_coeffs(c);
    }
    const Bivar v = Parser(t).parse();
    for (const auto& [k, c] : v)
        if (k.second != 0 && c != 0) throw ParseError("field element \"" + t + "\" mentions u");
    return bivar_coeff(f, v, 0);
}

LaurentTail parse_series(Field f, const std::string& text)
{
    const Bivar v = Parser(trim(text)).parse();
    int deg = 0;
    for (const auto& [k, c] : v)
        if (c != 0) deg = std::max(deg, k.second);
    std::vector<Fe> coeffs;
    for (int r = 0; r <= deg; ++r) coeffs.push_back(bivar_coeff(f, v, r));
    return LaurentTail(std::move(coeffs));
}

Tableau parse_tableau(Field f, const std::string& text)
{
    const auto rows = split_top(text, ';');
    if (rows.size() != 2) throw ParseError("tableau \"" + text + "\" needs exactly one ';'");
    Tableau t;
    for (int i = 0; i < 2; ++i) {
        if (trim(rows[i]).empty()) continue;
        for (const auto& e : split_top(rows[i], ',')) (i == 0 ? t.a : t.b).push_back(parse_fe(f, e));
    }
    return t;
}

ShiftMatrix parse_shift(const std::string& text)
{
    const auto parts = split_top(text, ',');
    if (parts.size() != 2) throw ParseError("shift \"" + text + "\" must be s12,s21");
    ShiftMatrix s;
    try {
        const long a = std::stol(trim(parts[0])), b = std::stol(trim(parts[1]));
        if (a < 0 || b < 0) throw ParseError("shift entries are non-negative");
        s.s12 = static_cast<std::uint32_t>(a);
        s.s21 = static_cast<std::uint32_t>(b);
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("shift \"" + text + "\" must be two integers");
    }
    return s;
}

json fe_json(const Fe& x)
{
    if (x.field().degree() == 1) return x.raw();
    json out = json::array();
    for (auto c : x.coeffs()) out.push_back(c);
    return out;
}

json series_json(const LaurentTail& s)
{
    json out = json::array();
    for (const auto& c : s.coeffs()) out.push_back(fe_json(c));
    return out;
}

json poly_json(const Poly& p)
{
    json out = json::array();
    for (const auto& c : p.coeffs()) out.push_back(fe_json(c));
    return out;
}

json matrix_json(const Matrix& m)
{
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(fe_json(m.at(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

json element_json(const AlgebraElement& x)
{
    json out = json::array();
    for (const auto& [m, c] : x.terms()) {
        json mono = json::array();
        for (const auto& [l, e] : monomial_runs(m)) mono.push_back({kind_name(letter_kind(l)), letter_index(l), e});
        out.push_back({{"monomial", mono}, {"coeff", fe_json(Fe(x.field_data(), c))}});
    }
    return out;
}

json module_json(const SuperModule& M)
{
    json mats = json::object();
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) {
            json list = json::array();
            for (std::size_t r = 1; r <= M.order(); ++r) list.push_back(matrix_json(M.T(i, j)[r]));
            mats["t" + std::to_string(i) + std::to_string(j)] = std::move(list);
        }
    return {{"dim", M.dim()},
            {"parity", M.parity()},
            {"degree", M.order()},
            {"polynomial", M.polynomial()},
            {"provenance", M.provenance()},
            {"matrices", std::move(mats)}};
}

json shifted_module_json(const ShiftedModule& V)
{
    json mats = json::object();
    const auto add = [&](const char* name, const MatrixTail& t, std::size_t lo, std::size_t hi) {
        json list = json::object();
        for (std::size_t r = lo; r <= std::min(hi, V.order()); ++r) list[std::to_string(r)] = matrix_json(t[r]);
        mats[name] = std::move(list);
    };
    const auto s = V.sigma();
    add("d1", V.tails().d1, 1, V.k());
    add("d2", V.tails().d2, 1, V.level());
    add("e", V.tails().e, s.s12 + 1, s.s12 + V.k());
    add("f", V.tails().f, s.s21 + 1, s.s21 + V.k());
    return {{"dim", V.dim()},
            {"parity", V.parity()},
            {"shift", {s.s12, s.s21}},
            {"level", V.level()},
            {"order", V.order()},
            {"provenance", V.provenance()},
            {"window", std::move(mats)}};
}

json tableau_json(const Tableau& A)
{
    json a = json::array(), b = json::array();
    for (const auto& x : A.a) a.push_back(fe_json(x));
    for (const auto& x : A.b) b.push_back(fe_json(x));
    return {{"text", A.to_string()}, {"a", a}, {"b", b}};
}

}  // namespace syang
