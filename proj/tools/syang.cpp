// syang: verification suites and module constructions for the modular super Yangian Y(1|1).

#include "syang/io.hpp"
#include "syang/shifted.hpp"
#include "syang/suites.hpp"
#include "syang/supermod.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace syang;

namespace {

constexpr int kPass = 0, kFail = 1, kUsage = 2;

struct Config {
    std::uint32_t p = 3, m = 1;
    std::optional<std::size_t> order;
    std::uint64_t seed = 1;
    std::string format = "text";
    std::uint64_t cap = 100000;
};

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

Field make_field(const Config& c)
{
    if (c.p == 2 || !is_prime(c.p)) throw UsageError("--p must be an odd prime, got " + std::to_string(c.p));
    if (c.m < 1 || c.m > 8) throw UsageError("--ext-degree must be between 1 and 8");
    double q = 1;
    for (std::uint32_t i = 0; i < c.m; ++i) q *= c.p;
    if (q > (1 << 20)) throw UsageError("field too large (q > 2^20)");
    return Field::make(c.p, c.m);
}

json header(const Config& c, const std::string& command, std::size_t N)
{
    return {{"tool", "syang"},
            {"version", SYANG_VERSION},
            {"command", command},
            {"p", c.p},
            {"m", c.m},
            {"N", N},
            {"seed", c.seed}};
}

std::string tail_text(const LaurentTail& t)
{
    std::string s;
    for (std::size_t r = 0; r <= t.order(); ++r) {
        if (r > 0 && t[r].is_zero()) continue;
        if (!s.empty()) s += " + ";
        const std::string c = t[r].to_string();
        const bool compound = c.find('+') != std::string::npos;
        if (r == 0) s += c;
        else s += (compound ? "(" + c + ")" : c) + "*u^-" + std::to_string(r);
    }
    return s;
}

std::string parity_signature(const std::vector<int>& parity)
{
    std::size_t odd = 0;
    for (int x : parity) odd += x;
    return std::to_string(parity.size() - odd) + "|" + std::to_string(odd);
}

void emit(const Config& c, const json& j, const std::vector<std::string>& text)
{
    if (c.format == "json") std::cout << j.dump(2) << "\n";
    else
        for (const auto& line : text) std::cout << line << "\n";
}

int cmd_verify(const Config& c, const std::string& suite)
{
    const Field f = make_field(c);
    if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
        throw UsageError("unknown suite '" + suite + "'");
    const std::size_t N = c.order.value_or(suite_default_order(suite, f));
    SuiteConfig sc{N, c.seed};
    const Report rep = run_suite(suite, f, sc);
    json j = header(c, "verify " + suite, N);
    j["status"] = rep.pass() ? "pass" : "fail";
    j["checks"] = rep.to_json();
    std::vector<std::string> text;
    for (const auto& ch : rep.checks)
        text.push_back(std::string(ch.pass ? "PASS " : "FAIL ") + ch.check + " " + ch.params.dump() +
                       (ch.witness ? "  witness: " + *ch.witness : ""));
    text.push_back(std::string("suite ") + suite + ": " + (rep.pass() ? "pass" : "FAIL") + " (p=" +
                   std::to_string(c.p) + ", m=" + std::to_string(c.m) + ", N=" + std::to_string(N) + ")");
    if (const Check* bad = rep.first_failure())
        text.push_back("first failure: " + bad->check + (bad->witness ? " " + *bad->witness : ""));
    emit(c, j, text);
    return rep.pass() ? kPass : kFail;
}

int report_supermodule(const Config& c, const std::string& command, const SuperModule& M)
{
    const auto sing = singular_space(M);
    json j = header(c, command, M.order());
    std::vector<std::string> text{"dim " + std::to_string(M.dim()) + " (parity " + parity_signature(M.parity()) + ")"};
    j["module"] = module_json(M);
    j["singular_dim"] = sing.size();
    text.push_back("singular space dim " + std::to_string(sing.size()));
    Vec v = sing.size() == 1 ? sing[0] : Vec(M.dim(), M.field().zero());
    if (sing.size() != 1) v[0] = M.field().one();
    try {
        const WeightData w = hw_weight(M, v);
        j["lambda1"] = series_json(w.lambda1);
        j["lambda2"] = series_json(w.lambda2);
        j["weight_restricted"] = w.restricted;
        text.push_back("lambda1(u) = " + tail_text(w.lambda1));
        text.push_back("lambda2(u) = " + tail_text(w.lambda2));
    } catch (const NotEigenvector& e) {
        j["lambda_error"] = e.what();
        text.push_back(std::string("no highest weight on the chosen vector: ") + e.what());
    }
    const auto irr = irreducibility(M, c.cap);
    j["algebra_dim"] = irr.algebra_dim;
    j["irreducible"] = irr.absolutely_irreducible;
    if (irr.spinning) j["spinning"] = *irr.spinning;
    const Check r = restrictedness_action_check(M);
    j["restricted"] = r.pass;
    if (r.witness) j["restricted_witness"] = *r.witness;
    text.push_back(std::string(irr.absolutely_irreducible ? "irreducible" : "reducible") + " (algebra dim " +
                   std::to_string(irr.algebra_dim) + ")" +
                   (irr.spinning ? std::string(", spinning ") + (*irr.spinning ? "agrees" : "finds a submodule")
                                 : ""));
    text.push_back(r.pass ? "restricted" : "not restricted: " + r.witness.value_or(""));
    emit(c, j, text);
    return kPass;
}

int cmd_module_eval(const Config& c, const std::string& l1, const std::string& l2)
{
    const Field f = make_field(c);
    return report_supermodule(c, "module eval", eval_module(parse_fe(f, l1), parse_fe(f, l2)));
}

int cmd_module_tensor(const Config& c, const std::vector<std::string>& legs)
{
    const Field f = make_field(c);
    std::vector<SuperModule> mods;
    for (const auto& leg : legs) {
        const auto comma = leg.find(',');
        if (comma == std::string::npos || leg.find('(') != std::string::npos)
            throw ParseError("tensor leg '" + leg + "' must be l1,l2");
        mods.push_back(eval_module(parse_fe(f, leg.substr(0, comma)), parse_fe(f, leg.substr(comma + 1))));
    }
    return report_supermodule(c, "module tensor", tensor_all(mods));
}

int cmd_module_tableau(const Config& c, const std::string& tab, const std::string& shift)
{
    const Field f = make_field(c);
    const Tableau A = parse_tableau(f, tab);
    const ShiftMatrix sigma = parse_shift(shift);
    // the top row fixes k, so the level is k + s12 + s21
    const auto level = static_cast<std::uint32_t>(A.a.size() + sigma.s12 + sigma.s21);
    if (A.b.size() != level)
        throw UsageError("shift " + shift + " with " + std::to_string(A.a.size()) + " top entries needs " +
                         std::to_string(level) + " bottom entries, got " + std::to_string(A.b.size()));
    const Pyramid pi = pyramid_from(sigma, level);
    const std::size_t N = c.order.value_or(default_order(pi, f));
    const ShiftedModule V = build_VA(pi, A, N);
    const HwData hw = hw_vector(V);
    const std::size_t head = head_dimension(V, hw.vector);
    const auto [B, h] = choose_B(pi, A);
    const SimpleModule L = simple_module(pi, A, N);
    const RestrictedVerdict rv = restricted_action(L.module);

    json j = header(c, "module tableau", N);
    j["tableau"] = tableau_json(A);
    j["shift"] = {pi.sigma.s12, pi.sigma.s21};
    j["level"] = pi.level;
    j["k"] = pi.k;
    j["h"] = h;
    j["B"] = tableau_json(B);
    j["dim_VA"] = V.dim();
    j["dim_head"] = head;
    j["dim_LA"] = L.module.dim();
    j["lambda1"] = series_json(hw.lambda1);
    j["lambda2"] = series_json(hw.lambda2);
    j["VA_irreducible"] = V.dim() == head;
    j["restricted"] = rv.restricted;
    if (rv.witness) j["restricted_witness"] = *rv.witness;
    j["module"] = shifted_module_json(L.module);
    std::vector<std::string> text{
        "pyramid heights k=" + std::to_string(pi.k) + ", l=" + std::to_string(pi.level),
        "h = " + std::to_string(h) + ", B = " + B.to_string(),
        "dim V(A) = " + std::to_string(V.dim()) + ", head of V(A) = " + std::to_string(head),
        "dim L(A) = " + std::to_string(L.module.dim()) + " (parity " + parity_signature(L.module.parity()) + ")",
        "lambda1(u) = " + tail_text(hw.lambda1),
        "lambda2(u) = " + tail_text(hw.lambda2),
        rv.restricted ? "restricted" : "not restricted: " + rv.witness.value_or("")};
    emit(c, j, text);
    return kPass;
}

int cmd_classify(const Config& c, const std::string& shift, std::uint32_t level, bool build)
{
    const Field f = make_field(c);
    const Pyramid pi = pyramid_from(parse_shift(shift), level);
    const auto rows = classify(pi, f, build, c.cap);
    json j = header(c, "classify", build ? default_order(pi, f) : std::max<std::size_t>(pi.k, pi.level));
    j["shift"] = {pi.sigma.s12, pi.sigma.s21};
    j["level"] = level;
    j["k"] = pi.k;
    json list = json::array();
    std::vector<std::string> text;
    bool ok = true;
    for (const auto& r : rows) {
        json row = {{"tableau", r.A.to_string()},
                    {"h", r.h},
                    {"dim", r.dim},
                    {"lambda1", series_json(r.lambda1)},
                    {"lambda2", series_json(r.lambda2)}};
        if (r.verified) {
            row["verified"] = *r.verified;
            ok &= *r.verified;
        }
        list.push_back(std::move(row));
        text.push_back(r.A.to_string() + "  h=" + std::to_string(r.h) + "  dim=" + std::to_string(r.dim));
    }
    j["classes"] = rows.size();
    j["rows"] = std::move(list);
    text.push_back(std::to_string(rows.size()) + " classes");
    emit(c, j, text);
    return ok ? kPass : kFail;
}

int cmd_drinfeld(const Config& c, const std::string& s1, const std::string& s2)
{
    const Field f = make_field(c);
    const LaurentTail l1 = parse_series(f, s1), l2 = parse_series(f, s2);
    std::optional<DrinfeldPair> pair;
    try {
        pair = drinfeld_poly_check(l1, l2);
    } catch (const NotRestricted& e) {
        throw UsageError(std::string("not restricted: ") + e.what());
    }
    json j = header(c, "drinfeld-poly", std::max(l1.order(), l2.order()));
    j["lambda1"] = series_json(l1);
    j["lambda2"] = series_json(l2);
    j["finite"] = pair.has_value();
    std::vector<std::string> text;
    if (pair) {
        j["P1"] = poly_json(pair->P1);
        j["P2"] = poly_json(pair->P2);
        text.push_back("finite-dimensional: P1 = " + pair->P1.to_string() + ", P2 = " + pair->P2.to_string());
    } else {
        text.push_back("infinite-dimensional: reduced degrees differ");
    }
    emit(c, j, text);
    return kPass;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact computations in the modular super Yangian Y(1|1) over F_q"};
    app.require_subcommand(1);
    app.fallthrough();
    Config cfg;
    std::size_t order = 0;
    app.add_option("--p", cfg.p, "characteristic (odd prime)")->capture_default_str();
    app.add_option("--ext-degree", cfg.m, "work over F_{p^m}")->capture_default_str();
    auto* order_opt = app.add_option("--order", order, "truncation order N (suite default when omitted)");
    app.add_option("--seed", cfg.seed, "seed for randomised checks")->capture_default_str();
    app.add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    app.add_option("--cap", cfg.cap, "size cap for spinning and classification")->capture_default_str();

    std::string suite;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "relations | pbw | pcenter | hopf | appendix | evaluation")->required();

    auto* module = app.add_subcommand("module", "build a module and report on it");
    module->require_subcommand(1);
    std::string l1, l2, tab, shift = "0,0";
    std::vector<std::string> legs;
    auto* m_eval = module->add_subcommand("eval", "evaluation module L(l1, l2)");
    m_eval->add_option("l1", l1)->required();
    m_eval->add_option("l2", l2)->required();
    auto* m_tensor = module->add_subcommand("tensor", "tensor of evaluation modules, legs given as l1,l2");
    m_tensor->add_option("legs", legs)->required();
    auto* m_tab = module->add_subcommand("tableau", "V(A) and L(A) for a tableau \"a1,..;b1,..\"");
    m_tab->add_option("tableau", tab)->required();
    m_tab->add_option("--shift", shift, "s12,s21")->capture_default_str();

    std::uint32_t level = 1;
    bool build = false;
    auto* cls = app.add_subcommand("classify", "simple modules of Y_{sigma,l} over F_p up to row equivalence");
    cls->add_option("--shift", shift, "s12,s21")->capture_default_str();
    cls->add_option("--level", level, "level l")->required();
    cls->add_flag("--build", build, "construct and verify every simple module");

    std::string s1, s2;
    auto* dp = app.add_subcommand("drinfeld-poly", "finite-dimensionality test for a highest weight");
    dp->add_option("lambda1", s1, "polynomial in u^-1, e.g. \"1+2*u^-1\"")->required();
    dp->add_option("lambda2", s2)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }
    if (*order_opt) {
        if (order < 1) {
            std::cerr << "error: --order must be at least 1\n";
            return kUsage;
        }
        cfg.order = order;
    }

    try {
        if (*verify) return cmd_verify(cfg, suite);
        if (*m_eval) return cmd_module_eval(cfg, l1, l2);
        if (*m_tensor) return cmd_module_tensor(cfg, legs);
        if (*m_tab) return cmd_module_tableau(cfg, tab, shift);
        if (*cls) return cmd_classify(cfg, shift, level, build);
        if (*dp) return cmd_drinfeld(cfg, s1, s2);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const TheoremViolation& e) {
        std::cerr << "theorem violation: " << e.what() << "\n";
        return kFail;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
