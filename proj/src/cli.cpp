#include "kleinian/cli.hpp"

#include "kleinian/expr.hpp"
#include "kleinian/suites.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace kleinian {

using nlohmann::json;

// ---- session ----

TMode Session::tmode() const {
    switch (mode) {
    case SessionMode::Deformation:
        return TMode::Zero;
    case SessionMode::Quantization:
        return TMode::One;
    default:
        return TMode::Generic;
    }
}

const DefParamA &Session::param_a() const {
    if (family != 'A' || !a)
        throw UsageError("this command needs --family A with a parameter");
    return *a;
}

const DefParamD &Session::param_d() const {
    if (family != 'D' || !d)
        throw UsageError("this command needs --family D with a parameter");
    return *d;
}

namespace {

Var var_of(char c) {
    switch (c) {
    case 'x':
        return Var::X;
    case 'y':
        return Var::Y;
    case 'z':
        return Var::Z;
    default:
        return Var::T;
    }
}

[[noreturn]] void unknown(char v, std::size_t at, const char *where) {
    throw UnknownVariable(std::string("variable '") + v + "' at offset " + std::to_string(at) + " is not " +
                          where);
}

template <class T>
T parse_in(const std::string &text, const std::function<T(const CycScalar &)> &constant,
           const std::function<T(char, std::size_t)> &variable) {
    auto tree = parse_expr_tree(text);
    return eval_expr<T>(*tree, constant, variable);
}

GwaElem parse_gwa(const DefParamA &p, TMode mode, const std::string &text) {
    GwaAlgebra alg{p, mode};
    return parse_in<GwaElem>(
        text, [&](const CycScalar &c) { return GwaElem(alg, MPoly(c)); },
        [&](char v, std::size_t at) {
            if (v == 't' && mode != TMode::Generic)
                unknown(v, at, "available outside the t-family mode");
            return GwaElem::gen(alg, var_of(v));
        });
}

std::string mode_name(TMode m) {
    switch (m) {
    case TMode::Generic:
        return "generic";
    case TMode::One:
        return "one";
    default:
        return "zero";
    }
}

TMode mode_from_name(const std::string &s) {
    if (s == "generic")
        return TMode::Generic;
    if (s == "one")
        return TMode::One;
    if (s == "zero")
        return TMode::Zero;
    throw UsageError("unknown t mode '" + s + "'");
}

} // namespace

Element parse_element(const Session &s, const std::string &text) {
    if (s.family == 'A') {
        const DefParamA &p = s.param_a();
        if (s.mode != SessionMode::Deformation)
            return parse_gwa(p, s.tmode(), text);
        return parse_in<ElemADef>(
            text, [&](const CycScalar &c) { return ElemADef(p, MPoly(c)); },
            [&](char v, std::size_t at) {
                if (v == 't')
                    unknown(v, at, "a generator of the deformation");
                return ElemADef::gen(p, var_of(v));
            });
    }
    const DefParamD &p = s.param_d();
    auto var_check = [](char v, std::size_t at) {
        if (v == 't')
            unknown(v, at, "a generator of the type D algebras");
    };
    if (s.mode == SessionMode::Quantization)
        return parse_in<ElemDQuant>(
            text, [&](const CycScalar &c) { return ElemDQuant(p, MPoly(c)); },
            [&](char v, std::size_t at) {
                var_check(v, at);
                return ElemDQuant::gen(p, var_of(v));
            });
    if (s.mode == SessionMode::TFamily)
        throw UsageError("type D has no t-family mode");
    return parse_in<ElemDDef>(
        text, [&](const CycScalar &c) { return ElemDDef(p, MPoly(c)); },
        [&](char v, std::size_t at) {
            var_check(v, at);
            return ElemDDef::gen(p, var_of(v));
        });
}

std::string element_text(const Element &e) {
    return std::visit([](const auto &v) { return v.to_string(); }, e);
}

// ---- JSON ----

json scalar_json(const CycScalar &c) {
    json out = json::array();
    for (const mpq_class &q : c.coeffs())
        out.push_back(q.get_str());
    if (out.empty())
        out.push_back("0");
    return out;
}

CycScalar scalar_from_json(const json &j) {
    if (j.is_string())
        return CycScalar(mpq_class(j.get<std::string>()));
    if (!j.is_array() || j.empty())
        throw UsageError("scalar must be a nonempty array of rational strings");
    std::vector<mpq_class> c;
    for (const auto &q : j) {
        mpq_class v(q.get<std::string>());
        v.canonicalize();
        c.push_back(v);
    }
    if (c.size() == 1)
        return CycScalar(c[0]);
    if (static_cast<int>(c.size()) > session_field()->degree())
        throw UsageError("scalar has more coefficients than the session field degree");
    return CycScalar(session_field(), c);
}

json poly_json(const MPoly &p) {
    json out = json::array();
    for (const auto &[m, c] : p.terms()) {
        json mono = json::object();
        for (int i = 0; i < kNumVars; ++i)
            if (m[i])
                mono[std::string(1, var_name(static_cast<Var>(i)))] = m[i];
        out.push_back({{"mono", mono}, {"coeff", scalar_json(c)}});
    }
    return out;
}

MPoly poly_from_json(const json &j) {
    MPoly out;
    for (const auto &t : j) {
        Mono m{};
        for (const auto &[name, e] : t.at("mono").items()) {
            const std::string vars = "xyztu";
            const auto pos = vars.find(name);
            if (name.size() != 1 || pos == std::string::npos)
                throw UnknownVariable("unknown variable '" + name + "' in JSON");
            m[pos] = e.get<std::uint32_t>();
        }
        out.add_term(m, scalar_from_json(t.at("coeff")));
    }
    return out;
}

json element_json(const Element &e) {
    json out;
    std::visit(
        [&](const auto &v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, ElemADef>) {
                out = {{"type", "A-def"}, {"body", poly_json(v.body())}};
            } else if constexpr (std::is_same_v<T, GwaElem>) {
                json comps = json::array();
                for (const auto &[m, h] : v.components())
                    comps.push_back(json::array({m, poly_json(h)}));
                out = {{"type", "A-gwa"}, {"t", mode_name(v.mode())}, {"components", comps}};
            } else if constexpr (std::is_same_v<T, ElemDDef>) {
                out = {{"type", "D-def"}, {"f", poly_json(v.f())}, {"g", poly_json(v.g())}};
            } else {
                out = {{"type", "D-quant"}, {"terms", poly_json(v.body())}};
            }
            out["text"] = v.to_string();
        },
        e);
    return out;
}

Element element_from_json(const Session &s, const json &j) {
    const std::string type = j.at("type").get<std::string>();
    if (type == "A-def")
        return normalize_a_def(poly_from_json(j.at("body")), s.param_a());
    if (type == "A-gwa") {
        GwaElem::Components comps;
        for (const auto &c : j.at("components"))
            comps[c.at(0).get<int>()] += poly_from_json(c.at(1));
        return GwaElem(GwaAlgebra{s.param_a(), mode_from_name(j.at("t").get<std::string>())}, comps);
    }
    if (type == "D-def")
        return ElemDDef(s.param_d(),
                        poly_from_json(j.at("f")) + poly_from_json(j.at("g")) * MPoly::var(Var::Z));
    if (type == "D-quant")
        return ElemDQuant(s.param_d(), poly_from_json(j.at("terms")));
    throw UsageError("unknown element type '" + type + "'");
}

namespace {

json param_json(const DefParamA &p) { return {{"family", "A"}, {"n", p.n()}, {"P", poly_json(p.P())}, {"text", p.P().to_string()}}; }

json param_json(const DefParamD &p) {
    return {{"family", "D"},         {"n", p.n()},
            {"Q", poly_json(p.Q())}, {"gamma", scalar_json(p.gamma())},
            {"text", "Q = " + p.Q().to_string() + ", gamma = " + p.gamma().to_string()}};
}

json map_json(const AlgMapA &m) {
    json imgs = json::array();
    for (const auto &g : m.images)
        imgs.push_back(element_json(g));
    return {{"type", "A-map"},           {"t", mode_name(m.mode)}, {"source", param_json(m.source)},
            {"target", param_json(m.target)}, {"images", imgs},        {"text", m.to_string()}};
}

json iso_d_json(const IsoD &f) {
    json imgs = json::array();
    for (const auto &g : f.images)
        imgs.push_back(poly_json(g));
    return {{"type", "D-iso"},
            {"name", f.name},
            {"flavor", flavor_name(f.flavor)},
            {"source", param_json(f.source)},
            {"target", param_json(f.target)},
            {"images", imgs},
            {"text", f.to_string()}};
}

json residuals_json(const std::vector<std::pair<std::string, std::string>> &r) {
    json out = json::array();
    for (const auto &[label, value] : r)
        out.push_back({{"relation", label}, {"residual", value}});
    return out;
}

std::string triple_text(const std::array<long, 3> &d) {
    return "(" + std::to_string(d[0]) + ", " + std::to_string(d[1]) + ", " + std::to_string(d[2]) + ")";
}

// ---- generator words ----

std::vector<std::string> split_top(const std::string &s, const std::function<bool(std::size_t)> &at_sep,
                                   std::size_t sep_len) {
    std::vector<std::string> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t j = 0; j < s.size(); ++j) {
        if (s[j] == '(')
            ++depth;
        else if (s[j] == ')')
            --depth;
        else if (depth == 0 && at_sep(j)) {
            out.push_back(s.substr(start, j - start));
            start = j + sep_len;
            j = start - 1;
        }
    }
    out.push_back(s.substr(start));
    return out;
}

std::string trim(const std::string &s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos)
        return "";
    return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

AutGenA parse_letter(const std::string &raw) {
    const std::string text = trim(raw);
    std::size_t j = 0;
    while (j < text.size() && std::isalpha(static_cast<unsigned char>(text[j])))
        ++j;
    const std::string name = text.substr(0, j);
    std::vector<std::string> args;
    const std::string rest = trim(text.substr(j));
    if (!rest.empty()) {
        if (rest.front() != '(' || rest.back() != ')')
            throw UsageError("malformed generator '" + text + "'");
        const std::string inner = rest.substr(1, rest.size() - 2);
        args = split_top(inner, [&](std::size_t p) { return inner[p] == ','; }, 1);
    }
    auto want = [&](std::size_t count) {
        if (args.size() != count)
            throw UsageError(name + " takes " + std::to_string(count) + " argument(s) in '" + text + "'");
    };
    auto integer = [&](const std::string &a) {
        const CycScalar c = parse_scalar(a);
        if (!c.is_rational() || c.rational().get_den() != 1)
            throw UsageError("expected an integer, got '" + trim(a) + "'");
        return c.rational().get_num().get_si();
    };
    if (name == "Theta") {
        want(1);
        return AutGenA::theta(parse_scalar(args[0]));
    }
    if (name == "Phi" || name == "Psi") {
        const bool phi = name == "Phi";
        if (args.size() == 2)
            return phi ? AutGenA::phi_lm(parse_scalar(args[0]), integer(args[1]))
                       : AutGenA::psi_lm(parse_scalar(args[0]), integer(args[1]));
        want(1);
        return phi ? AutGenA::phi(parse_poly(args[0], "y")) : AutGenA::psi(parse_poly(args[0], "x"));
    }
    if (name == "Omega") {
        want(0);
        return AutGenA::omega();
    }
    if (name == "V") {
        want(0);
        return AutGenA::swap();
    }
    if (name == "Delta") {
        want(1);
        return AutGenA::delta(parse_poly(args[0], "y"));
    }
    if (name == "Nabla") {
        want(1);
        return AutGenA::nabla(parse_poly(args[0], "x"));
    }
    if (name == "R") {
        want(1);
        return AutGenA::rescale(parse_scalar(args[0]));
    }
    if (name == "S") {
        want(2);
        return AutGenA::symmetry(parse_scalar(args[0]), integer(args[1]));
    }
    throw UsageError("unknown generator '" + name + "'");
}

// Letters separated by " o ", as printed; "id" is the empty word.
AutWordA parse_word(const std::string &text, TMode mode) {
    AutWordA w{{}, mode};
    const std::string t = trim(text);
    if (t == "id" || t.empty())
        return w;
    auto parts = split_top(
        t,
        [&](std::size_t p) {
            return t[p] == 'o' && p > 0 && p + 1 < t.size() && std::isspace(static_cast<unsigned char>(t[p - 1])) &&
                   std::isspace(static_cast<unsigned char>(t[p + 1]));
        },
        1);
    for (const auto &p : parts)
        w.letters.push_back(parse_letter(p));
    return w;
}

// ---- command context ----

struct Options {
    std::string family = "A";
    int n = 0;
    std::string P, Q, gamma = "0";
    int k = 4;
    std::string mode = "deformation";
    bool json = false;
    bool strict = false;
    std::uint64_t seed = 20240601;
};

Session make_session(const Options &o) {
    Session s;
    s.k = o.k;
    s.family = o.family[0];
    if (o.mode == "deformation")
        s.mode = SessionMode::Deformation;
    else if (o.mode == "quantization")
        s.mode = SessionMode::Quantization;
    else
        s.mode = SessionMode::TFamily;
    if (s.family == 'A') {
        if (!o.P.empty()) {
            MPoly P = parse_poly(o.P, "z");
            s.a = o.n ? DefParamA(o.n, P) : DefParamA(P);
        } else if (o.n) {
            s.a = DefParamA(o.n, MPoly::var(Var::Z, static_cast<unsigned>(o.n)));
        }
    } else {
        const CycScalar gamma = parse_scalar(o.gamma);
        if (!o.Q.empty()) {
            MPoly Q = parse_poly(o.Q, "x");
            s.d = DefParamD(o.n ? o.n : static_cast<int>(Q.degree(Var::X)) + 1, Q, gamma);
        } else if (o.n) {
            s.d = DefParamD(o.n, MPoly::var(Var::X, static_cast<unsigned>(o.n - 1)), gamma);
        }
    }
    return s;
}

struct Output {
    std::ostringstream text;
    json data;
    bool negative = false; // a mathematical "false/absent" answer
};

FlavorD flavor_of(const Session &s) {
    switch (s.mode) {
    case SessionMode::Quantization:
        return FlavorD::Quantized;
    case SessionMode::Deformation:
        return FlavorD::Deformed;
    default:
        throw UsageError("type D maps need --mode deformation or quantization");
    }
}

Element binary(const Element &a, const Element &b, const char *what) {
    return std::visit(
        [&](const auto &x, const auto &y) -> Element {
            using A = std::decay_t<decltype(x)>;
            using B = std::decay_t<decltype(y)>;
            if constexpr (!std::is_same_v<A, B>) {
                throw UsageError("operands live in different algebras");
            } else if (std::string(what) == "mul") {
                return x * y;
            } else if (std::string(what) == "bracket") {
                if constexpr (std::is_same_v<A, ElemADef>)
                    return poisson_bracket_a(x, y);
                else if constexpr (std::is_same_v<A, ElemDDef>)
                    return poisson_bracket_d(x, y);
                else if constexpr (std::is_same_v<A, GwaElem>) {
                    if (x.mode() != TMode::Generic)
                        throw UsageError("bracket needs --mode deformation or t-family; use commutator");
                    return semiclassical_bracket(x, y);
                } else
                    throw UsageError("bracket needs --mode deformation; use commutator");
            } else {
                if constexpr (std::is_same_v<A, GwaElem>)
                    return gwa_commutator(x, y);
                else if constexpr (std::is_same_v<A, ElemDQuant>)
                    return commutator_d(x, y);
                else
                    throw UsageError("commutator needs --mode quantization or t-family");
            }
        },
        a, b);
}

void emit_element(Output &o, const Element &e) {
    o.text << element_text(e) << "\n";
    o.data = element_json(e);
}

void emit_map(Output &o, const AlgMapA &m) {
    o.text << m.to_string() << "\n";
    o.data = map_json(m);
}

void emit_iso_d(Output &o, const IsoD &f) {
    o.text << f.to_string() << "\n";
    o.data = iso_d_json(f);
}

AlgMapA images_map(const Session &s, const std::vector<std::string> &imgs, const std::string &to_P) {
    const DefParamA &src = s.param_a();
    const DefParamA target = to_P.empty() ? src : DefParamA(parse_poly(to_P, "z"));
    if (imgs.size() != 3)
        throw UsageError("--images needs exactly three expressions");
    return make_map(src, target, s.tmode(), parse_gwa(target, s.tmode(), imgs[0]),
                    parse_gwa(target, s.tmode(), imgs[1]), parse_gwa(target, s.tmode(), imgs[2]));
}

DefParamD target_d(const Session &s, const std::string &Q, const std::string &gamma) {
    const DefParamD &p = s.param_d();
    if (Q.empty() && gamma.empty())
        return p;
    return DefParamD(p.n(), Q.empty() ? p.Q() : parse_poly(Q, "x"),
                     gamma.empty() ? p.gamma() : parse_scalar(gamma));
}

IsoD named_iso_d(const Session &s, const std::string &name, const std::string &lambda,
                 const std::string &sign_text) {
    const std::string st = trim(sign_text);
    if (st != "1" && st != "-1" && st != "+1")
        throw UsageError("--sign must be 1 or -1");
    const int sign = st == "-1" ? -1 : 1;
    const DefParamD &p = s.param_d();
    const FlavorD f = flavor_of(s);
    if (name == "id")
        return identity_d(p, f);
    if (name == "sigma" || name == "Sigma")
        return make_sigma(p, f);
    if (name == "T" || name == "tau")
        return make_T(p, f);
    if (name == "T-inverse" || name == "tau-inverse")
        return make_T(p, f, TDirection::Inverse);
    if (name == "R" || name == "P") {
        if (lambda.empty())
            throw UsageError(name + " needs --lambda");
        return make_scaling(p, parse_scalar(lambda), sign, name == "R" ? ScalingFamily::R : ScalingFamily::P, f);
    }
    throw UsageError("unknown map '" + name + "' (id, sigma, T, T-inverse, R, P)");
}

AutKindD kind_from(const std::string &k) {
    if (k == "affine")
        return AutKindD::Affine;
    if (k == "poisson")
        return AutKindD::Poisson;
    if (k == "quantized")
        return AutKindD::Quantized;
    throw UsageError("unknown --kind '" + k + "'");
}

void classify(const Session &s, const std::string &kind, Output &o) {
    if (s.family == 'A') {
        AutGroupDescriptor d = describe_aut_group_a(s.param_a());
        o.text << d.to_string() << "\n"
               << "H = " << d.factor_h << "\nK = " << d.factor_k << "\namalgamated over " << d.amalgamated << "\n";
        o.data = {{"structure", d.structure}, {"reflective", d.reflective}, {"n", d.n},
                  {"H", d.factor_h},          {"K", d.factor_k},            {"amalgamated", d.amalgamated}};
        return;
    }
    AutGroupD g = classify_aut_d(s.param_d(), kind_from(kind.empty() ? "poisson" : kind));
    o.text << g.to_string() << "\n";
    json gens = json::array();
    for (const auto &e : g.generators)
        gens.push_back(iso_d_json(e));
    o.data = {{"structure", g.structure}, {"order", g.order},       {"complete", g.complete},
              {"required_k", g.required_k}, {"d", g.d},             {"m", g.m},
              {"generators", gens},        {"text", g.to_string()}};
    o.negative = !g.complete;
}

// Arguments beginning with a single '-' (such as "-3*z") are expressions,
// not options; a leading space keeps the option parser away from them and
// the expression grammar ignores it.
std::vector<std::string> protect_negatives(const std::vector<std::string> &args) {
    std::vector<std::string> out;
    for (const auto &a : args) {
        if (a.size() > 1 && a[0] == '-' && a[1] != '-' && a != "-h")
            out.push_back(" " + a);
        else
            out.push_back(a);
    }
    return out;
}

} // namespace

CommandResult run_command(const std::vector<std::string> &raw_args) {
    CLI::App app{"Exact computations with type A and type D Kleinian singularity deformations and quantizations",
                 "kleinian"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--family", opt.family, "A or D")->check(CLI::IsMember({"A", "D"}));
    app.add_option("--n", opt.n, "n (type A: deg P; type D: deg Q + 1)");
    app.add_option("--P", opt.P, "type A parameter P(z)");
    app.add_option("--Q", opt.Q, "type D parameter Q(x)");
    app.add_option("--gamma", opt.gamma, "type D parameter gamma");
    app.add_option("--k", opt.k, "cyclotomic index of the coefficient field Q(zeta_k)")->check(CLI::PositiveNumber);
    app.add_option("--mode", opt.mode, "deformation, quantization or t-family")
        ->check(CLI::IsMember({"deformation", "quantization", "t-family"}));
    app.add_flag("--json", opt.json, "machine-readable output");
    app.add_flag("--strict", opt.strict, "exit 1 on false or absent results");
    app.add_option("--seed", opt.seed, "seed for the randomized suites");

    auto sub = [](CLI::App *parent, const std::string &name, const std::string &desc) {
        CLI::App *c = parent->add_subcommand(name, desc);
        c->fallthrough();
        return c;
    };

    std::vector<std::string> exprs;
    std::string word1, word2, to_P, to_Q, to_gamma, kind, alpha, lambda, suite, name;
    std::vector<std::string> images;
    std::string sign_text = "1";

    CLI::App *eval_cmd = sub(&app, "eval", "normal form of an expression");
    eval_cmd->add_option("expr", exprs)->required()->expected(1);
    CLI::App *mul_cmd = sub(&app, "mul", "product of two expressions");
    CLI::App *bracket_cmd = sub(&app, "bracket", "Poisson bracket (semiclassical in the t-family)");
    CLI::App *comm_cmd = sub(&app, "commutator", "commutator in the quantization");
    CLI::App *limit_cmd = sub(&app, "limit-check", "semiclassical bracket versus the Poisson bracket at t = 0");
    for (CLI::App *c : {mul_cmd, bracket_cmd, comm_cmd, limit_cmd})
        c->add_option("exprs", exprs)->required()->expected(2);

    CLI::App *aut = sub(&app, "aut", "type A automorphisms given by generator words");
    aut->require_subcommand(1);
    CLI::App *aut_make = sub(aut, "make", "images of a word");
    CLI::App *aut_apply = sub(aut, "apply", "apply a word to an expression");
    CLI::App *aut_compose = sub(aut, "compose", "compose two words (first o second)");
    CLI::App *aut_verify = sub(aut, "verify", "check a word or explicit images");
    CLI::App *aut_norm = sub(aut, "normalize", "amalgam normal form of a word");
    CLI::App *aut_mdeg = sub(aut, "mdeg", "multidegree: evaluated and predicted");
    CLI::App *aut_classify = sub(aut, "classify", "structure of the automorphism group");
    for (CLI::App *c : {aut_make, aut_apply, aut_compose, aut_norm, aut_mdeg})
        c->add_option("word", word1, "letters separated by ' o '")->required();
    aut_apply->add_option("expr", exprs)->required()->expected(1);
    aut_compose->add_option("second", word2)->required();
    aut_verify->add_option("word", word1);
    aut_verify->add_option("--images", images)->expected(3);
    aut_verify->add_option("--to-P", to_P, "target parameter for --images");

    CLI::App *iso = sub(&app, "iso", "isomorphisms");
    iso->require_subcommand(1);
    CLI::App *a_quant = sub(iso, "a-quant", "decide A(P) ~ A(P') as algebras");
    CLI::App *a_def = sub(iso, "a-def", "decide an isomorphism of the deformations");
    for (CLI::App *c : {a_quant, a_def})
        c->add_option("--to-P", to_P)->required();
    a_def->add_option("--kind", kind)->check(CLI::IsMember({"poisson", "affine"}));
    a_def->add_option("--alpha", alpha);
    CLI::App *d_make = sub(iso, "d-make", "build sigma, T, T-inverse, R or P");
    CLI::App *d_verify = sub(iso, "d-verify", "verify a named map or explicit images");
    for (CLI::App *c : {d_make, d_verify}) {
        c->add_option("name", name);
        c->add_option("--lambda", lambda);
        c->add_option("--sign", sign_text, "1 or -1");
    }
    d_verify->add_option("--images", images)->expected(3);
    d_verify->add_option("--to-Q", to_Q);
    d_verify->add_option("--to-gamma", to_gamma);
    CLI::App *d_classify = sub(iso, "d-classify", "automorphism group of a type D algebra");
    d_classify->add_option("--kind", kind)->check(CLI::IsMember({"affine", "poisson", "quantized"}));
    CLI::App *d_decide = sub(iso, "d-decide", "Poisson isomorphism between two type D deformations");
    d_decide->add_option("--to-Q", to_Q);
    d_decide->add_option("--to-gamma", to_gamma);
    CLI::App *s3 = sub(iso, "s3", "S3 relations along the T orbit");

    CLI::App *classify_cmd = sub(&app, "classify", "automorphism group");
    classify_cmd->add_option("--kind", kind)->check(CLI::IsMember({"affine", "poisson", "quantized"}));
    CLI::App *verify_cmd = sub(&app, "verify", "run acceptance suites");
    verify_cmd->add_option("--suite", suite);

    CommandResult result;
    std::vector<std::string> args = protect_negatives(raw_args);
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp &) {
        result.out = app.help();
        return result;
    } catch (const CLI::CallForAllHelp &) {
        result.out = app.help("", CLI::AppFormatMode::All);
        return result;
    } catch (const CLI::ParseError &e) {
        result.exit_code = 2;
        result.err = std::string("usage error: ") + e.what() + "\n";
        return result;
    }

    Output o;
    try {
        if (opt.family == "D" && opt.mode == "t-family")
            throw UsageError("type D has no t-family mode");
        ScopedCyclotomicIndex field(opt.k);
        const Session s = make_session(opt);
        auto elem = [&](const std::string &t) { return parse_element(s, t); };

        if (*eval_cmd) {
            emit_element(o, elem(exprs[0]));
        } else if (*mul_cmd) {
            emit_element(o, binary(elem(exprs[0]), elem(exprs[1]), "mul"));
        } else if (*bracket_cmd) {
            emit_element(o, binary(elem(exprs[0]), elem(exprs[1]), "bracket"));
        } else if (*comm_cmd) {
            emit_element(o, binary(elem(exprs[0]), elem(exprs[1]), "commutator"));
        } else if (*limit_cmd) {
            const DefParamA &p = s.param_a();
            GwaElem a = parse_gwa(p, TMode::Generic, exprs[0]), b = parse_gwa(p, TMode::Generic, exprs[1]);
            ElemADef lhs = semiclassical_bracket(a, b);
            ElemADef rhs = poisson_bracket_a(to_deformation(specialize_t(a, 0)), to_deformation(specialize_t(b, 0)));
            const bool eq = lhs == rhs;
            o.text << "semiclassical: " << lhs.to_string() << "\npoisson:       " << rhs.to_string()
                   << "\nequal: " << (eq ? "true" : "false") << "\n";
            o.data = {{"semiclassical", element_json(lhs)}, {"poisson", element_json(rhs)}, {"equal", eq}};
            o.negative = !eq;
        } else if (*aut) {
            const DefParamA &p = s.param_a();
            const TMode tm = s.tmode();
            if (*aut_make) {
                emit_map(o, evaluate_word(parse_word(word1, tm), p));
            } else if (*aut_apply) {
                AlgMapA m = evaluate_word(parse_word(word1, tm), p);
                GwaElem r = apply_map(m, parse_gwa(p, tm, exprs[0]));
                if (s.mode == SessionMode::Deformation)
                    emit_element(o, to_deformation(r));
                else
                    emit_element(o, r);
            } else if (*aut_compose) {
                AlgMapA f = evaluate_word(parse_word(word1, tm), p);
                AlgMapA g = evaluate_word(parse_word(word2, tm), f.source);
                emit_map(o, compose_maps(f, g));
            } else if (*aut_verify) {
                if (word1.empty() == images.empty())
                    throw UsageError("aut verify takes a word or --images, not both");
                AlgMapA m = images.empty() ? evaluate_word(parse_word(word1, tm), p) : images_map(s, images, to_P);
                HomCertificate c = verify_hom_a(m);
                o.text << m.to_string() << "\nhomomorphism: " << (c.ok ? "true" : "false") << "\n";
                for (const auto &[label, v] : c.residuals)
                    o.text << "  " << label << " = " << v << "\n";
                o.data = {{"map", map_json(m)}, {"homomorphism", c.ok}, {"residuals", residuals_json(c.residuals)}};
                if (tm == TMode::Zero && c.ok) {
                    const bool pm = is_poisson_map_a(m);
                    o.text << "poisson: " << (pm ? "true" : "false") << "\n";
                    o.data["poisson"] = pm;
                }
                o.negative = !c.ok;
            } else if (*aut_norm) {
                AutWordA w = word_normal_form(parse_word(word1, tm), p);
                o.text << w.to_string() << "\n";
                json letters = json::array();
                for (const auto &l : w.letters)
                    letters.push_back(l.to_string());
                o.data = {{"letters", letters}, {"text", w.to_string()}};
            } else if (*aut_mdeg) {
                AutWordA w = word_normal_form(parse_word(word1, tm), p);
                const auto pred = predicted_mdeg(w, p);
                const auto got = mdeg_aut(evaluate_word(w, p));
                o.text << "word: " << w.to_string() << "\nmdeg: " << triple_text(got)
                       << "\npredicted: " << triple_text(pred) << "\n";
                o.data = {{"word", w.to_string()}, {"mdeg", got}, {"predicted", pred}, {"match", got == pred}};
                o.negative = got != pred;
            } else if (*aut_classify) {
                classify(s, "", o);
            }
        } else if (*iso) {
            if (*a_quant || *a_def) {
                const DefParamA &p = s.param_a();
                const DefParamA q(parse_poly(to_P, "z"));
                std::optional<AlgMapA> w;
                if (*a_quant)
                    w = decide_iso_quant_a(p, q, s.mode == SessionMode::TFamily ? TMode::Generic : TMode::One);
                else
                    w = decide_iso_def_a(p, q, kind == "affine" ? IsoKindA::Affine : IsoKindA::Poisson,
                                         alpha.empty() ? std::nullopt : std::optional(parse_scalar(alpha)));
                if (w) {
                    o.text << "isomorphic: " << w->to_string() << "\n";
                    o.data = {{"isomorphic", true}, {"witness", map_json(*w)}};
                } else {
                    o.text << "not isomorphic\n";
                    o.data = {{"isomorphic", false}};
                }
                o.negative = !w;
            } else if (*d_make) {
                emit_iso_d(o, named_iso_d(s, name, lambda, sign_text));
            } else if (*d_verify) {
                if (name.empty() == images.empty())
                    throw UsageError("d-verify takes a map name or --images, not both");
                IsoD f = images.empty()
                             ? named_iso_d(s, name, lambda, sign_text)
                             : make_iso_d(s.param_d(), target_d(s, to_Q, to_gamma), flavor_of(s),
                                          {parse_poly(images[0], "xyz"), parse_poly(images[1], "xyz"),
                                           parse_poly(images[2], "xyz")});
                IsoDCertificate c = verify_iso_d(f);
                o.text << f.to_string() << "\nhomomorphism: " << (c.homomorphism ? "true" : "false") << "\n";
                for (const auto &[label, v] : c.residuals)
                    o.text << "  " << label << " = " << v << "\n";
                o.data = {{"map", iso_d_json(f)},
                          {"homomorphism", c.homomorphism},
                          {"residuals", residuals_json(c.residuals)}};
                if (c.poisson) {
                    o.text << "poisson: " << (*c.poisson ? "true" : "false") << "\n";
                    o.data["poisson"] = *c.poisson;
                }
                o.negative = !c.homomorphism;
            } else if (*d_classify) {
                classify(s, kind, o);
            } else if (*d_decide) {
                auto w = decide_iso_d_poisson(s.param_d(), target_d(s, to_Q, to_gamma));
                if (w) {
                    o.text << "isomorphic: " << w->to_string() << "\n";
                    o.data = {{"isomorphic", true}, {"witness", iso_d_json(*w)}};
                } else {
                    o.text << "not isomorphic\n";
                    o.data = {{"isomorphic", false}};
                }
                o.negative = !w;
            } else if (*s3) {
                S3Report r = s3_check(s.param_d(), flavor_of(s));
                json checks = json::array();
                for (const auto &[label, ok] : r.checks) {
                    o.text << label << ": " << (ok ? "true" : "false") << "\n";
                    checks.push_back({{"relation", label}, {"holds", ok}});
                }
                json orbit = json::array();
                for (const auto &q : r.orbit)
                    orbit.push_back(param_json(q));
                o.text << "S3 relations: " << (r.ok ? "true" : "false") << "\n";
                o.data = {{"ok", r.ok}, {"checks", checks}, {"orbit", orbit}};
                o.negative = !r.ok;
            }
        } else if (*classify_cmd) {
            classify(s, kind, o);
        } else if (*verify_cmd) {
            std::vector<std::string> ids;
            if (suite.empty())
                for (const auto &info : suite_catalog())
                    ids.push_back(info.id);
            else
                ids.push_back(suite);
            json rows = json::array();
            bool all = true;
            for (const auto &id : ids) {
                SuiteResult r = run_suite(id, opt.seed);
                int number = 1;
                for (const auto &info : suite_catalog()) {
                    if (info.id == id)
                        break;
                    ++number;
                }
                o.text << r.summary_line(number) << "\n";
                for (const auto &note : r.notes)
                    o.text << "    " << note << "\n";
                rows.push_back({{"id", r.id},
                                {"passed", r.passed},
                                {"checks", r.checks},
                                {"failures", r.failures},
                                {"notes", r.notes}});
                all &= r.passed;
            }
            o.data = {{"suites", rows}, {"passed", all}};
            // A failing suite is an error whether or not --strict is given.
            if (!all)
                result.exit_code = 1;
        }
    } catch (const Error &e) {
        result.exit_code = 2;
        result.err = std::string("error (") + e.kind() + "): " + e.what() + "\n";
        return result;
    } catch (const nlohmann::json::exception &e) {
        result.exit_code = 2;
        result.err = std::string("error (json): ") + e.what() + "\n";
        return result;
    }
    if (opt.json) {
        json out = o.data;
        if (out.is_object())
            out["k"] = opt.k;
        result.out = out.dump(2) + "\n";
    } else {
        result.out = o.text.str();
    }
    if (opt.strict && o.negative)
        result.exit_code = 1;
    return result;
}

} // namespace kleinian
