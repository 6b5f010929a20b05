#include "kleinian/iso_type_d.hpp"

#include "kleinian/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace kleinian {

namespace {

const MPoly X = MPoly::var(Var::X), Y = MPoly::var(Var::Y), Z = MPoly::var(Var::Z);

CycScalar imag_or_throw(const char *what) {
    if (!session_field()->has_i())
        throw NotApplicable(std::string(what) + " needs i; choose k divisible by 4 (current k = " +
                            std::to_string(cyclotomic_index()) + ")");
    return CycScalar::imag();
}

ElemDQuant qconst(const DefParamD &p, const CycScalar &c) { return ElemDQuant(p, MPoly(c)); }

// f(e) for f univariate in x, by Horner.
template <class E>
E horner(const MPoly &f, const E &e, const std::function<E(const CycScalar &)> &constant) {
    std::vector<CycScalar> c = f.univariate_coeffs(Var::X);
    E acc = constant(0);
    for (std::size_t j = c.size(); j-- > 0;)
        acc = acc * e + constant(c[j]);
    return acc;
}

std::string images_key(const IsoD &f) {
    return f.images[0].to_string() + "|" + f.images[1].to_string() + "|" + f.images[2].to_string();
}

// Recognizable names for the sign changes.
void rename_known(IsoD &f) {
    if (f.source != f.target)
        return;
    const bool ex = f.images[0] == X;
    if (ex && f.images[1] == Y && f.images[2] == Z)
        f.name = "id";
    else if (ex && f.images[1] == Y && f.images[2] == -Z)
        f.name = "sigma_z";
    else if (ex && f.images[1] == -Y && f.images[2] == Z)
        f.name = "sigma_y";
    else if (ex && f.images[1] == -Y && f.images[2] == -Z)
        f.name = f.flavor == FlavorD::Quantized ? "Sigma" : "sigma";
}

const char *sigma_name(FlavorD f) { return f == FlavorD::Quantized ? "Sigma" : "sigma"; }
const char *t_name(FlavorD f) { return f == FlavorD::Quantized ? "T" : "tau"; }

// A primitive N-th root of unity in the session field, if there is one.
std::optional<CycScalar> primitive_root(long N) {
    const long k = cyclotomic_index();
    const long L = std::lcm(2L, k);
    if (L % N != 0)
        return std::nullopt;
    CycScalar zL = (k % 2 == 1) ? -CycScalar::zeta() : CycScalar::zeta();
    return zL.pow(L / N);
}

// ---- finite group structure from generators ----

struct FiniteGroup {
    std::vector<IsoD> elems;
    bool finite = true;
};

FiniteGroup closure(const IsoD &identity, const std::vector<IsoD> &gens, std::size_t cap = 2000) {
    FiniteGroup g;
    std::map<std::string, std::size_t> seen;
    g.elems.push_back(identity);
    seen[images_key(identity)] = 0;
    for (std::size_t i = 0; i < g.elems.size(); ++i) {
        for (const IsoD &s : gens) {
            IsoD h = compose_iso_d(s, g.elems[i]);
            if (seen.emplace(images_key(h), g.elems.size()).second) {
                g.elems.push_back(h);
                if (g.elems.size() > cap) {
                    g.finite = false;
                    return g;
                }
            }
        }
    }
    return g;
}

long element_order(const IsoD &e, const IsoD &identity) {
    IsoD h = e;
    long ord = 1;
    while (!h.same_map(identity)) {
        h = compose_iso_d(e, h);
        ++ord;
    }
    return ord;
}

std::string abelian_name(const std::vector<long> &orders, long N) {
    // Elementary divisors per prime, from counts of elements of p-power order.
    std::vector<std::vector<int>> exps;
    long rest = N;
    for (long p = 2; rest > 1; ++p) {
        if (rest % p != 0)
            continue;
        long pe = 1;
        while (rest % p == 0) {
            rest /= p;
            pe *= p;
        }
        auto logp = [p](long v) {
            int e = 0;
            while (v > 1) {
                v /= p;
                ++e;
            }
            return e;
        };
        std::vector<int> ge; // ge[j-1] = number of factors with exponent >= j
        long prev = 1;
        for (long q = p; prev < pe; q *= p) {
            long cnt = std::count_if(orders.begin(), orders.end(), [q](long o) { return q % o == 0; });
            ge.push_back(logp(cnt) - logp(prev));
            prev = cnt;
        }
        std::vector<int> e;
        for (int f = 0; f < (ge.empty() ? 0 : ge[0]); ++f) {
            int x = 0;
            while (x < static_cast<int>(ge.size()) && ge[x] > f)
                ++x;
            e.push_back(x); // descending
        }
        std::vector<int> tagged(e.begin(), e.end());
        tagged.insert(tagged.begin(), static_cast<int>(p));
        exps.push_back(tagged);
    }
    std::size_t rank = 0;
    for (const auto &v : exps)
        rank = std::max(rank, v.size() - 1);
    std::vector<long> inv(rank, 1);
    for (const auto &v : exps)
        for (std::size_t i = 1; i < v.size(); ++i)
            for (int r = 0; r < v[i]; ++r)
                inv[i - 1] *= v[0];
    std::reverse(inv.begin(), inv.end());
    if (inv.size() >= 2 && std::all_of(inv.begin(), inv.end(), [](long d) { return d == 2; }))
        return "(Z/2)^" + std::to_string(inv.size());
    std::string s;
    for (long d : inv)
        s += (s.empty() ? "" : " x ") + ("Z/" + std::to_string(d));
    return s;
}

std::string group_name(const FiniteGroup &g, const std::vector<IsoD> &gens) {
    const long N = static_cast<long>(g.elems.size());
    if (N == 1)
        return "trivial";
    const IsoD &id = g.elems[0];
    auto commute = [](const IsoD &a, const IsoD &b) {
        return compose_iso_d(a, b).same_map(compose_iso_d(b, a));
    };
    std::vector<long> orders;
    for (const IsoD &e : g.elems)
        orders.push_back(element_order(e, id));
    bool abelian = true;
    for (std::size_t i = 0; i < gens.size() && abelian; ++i)
        for (std::size_t j = i + 1; j < gens.size() && abelian; ++j)
            abelian = commute(gens[i], gens[j]);
    if (abelian)
        return abelian_name(orders, N);
    if (N == 6)
        return "S3";
    long center = 0;
    for (const IsoD &e : g.elems)
        if (std::all_of(gens.begin(), gens.end(), [&](const IsoD &s) { return commute(e, s); }))
            ++center;
    const long involutions = std::count(orders.begin(), orders.end(), 2L);
    if (N == 12 && center == 2 && involutions == 7)
        return "S3 x Z/2";
    return "nonabelian group of order " + std::to_string(N) + " (center of order " +
           std::to_string(center) + ")";
}

// The elements of the S3 generated by sigma and T that are automorphisms of param.
std::vector<IsoD> s3_stabilizer(const DefParamD &p, FlavorD flavor) {
    std::vector<IsoD> out;
    IsoD s = make_sigma(p, flavor);
    if (p.n() != 4) {
        out.push_back(identity_d(p, flavor));
        if (s.target == p)
            out.push_back(s);
        return out;
    }
    IsoD t1 = make_T(p, flavor);
    IsoD t2 = compose_iso_d(make_T(t1.target, flavor), t1);
    t2.name = std::string(t_name(flavor)) + "^-1";
    for (IsoD w : {identity_d(p, flavor), t1, t2}) {
        if (w.target == p)
            out.push_back(w);
        IsoD sw = compose_iso_d(make_sigma(w.target, flavor), w);
        sw.name = std::string(sigma_name(flavor)) + (w.name == "id" ? "" : "." + w.name);
        if (sw.target == p)
            out.push_back(sw);
    }
    return out;
}

long lcm_l(long a, long b) { return std::lcm(a, b); }

} // namespace

const char *flavor_name(FlavorD f) { return f == FlavorD::Quantized ? "quantized" : "deformed"; }

bool IsoD::same_map(const IsoD &o) const {
    return flavor == o.flavor && source == o.source && target == o.target && images == o.images;
}

std::string IsoD::to_string() const {
    std::string s = name.empty() ? "" : name + " = ";
    return s + "(" + images[0].to_string() + ", " + images[1].to_string() + ", " +
           images[2].to_string() + ") : " + source.to_string() + " -> " + target.to_string();
}

IsoD make_iso_d(const DefParamD &source, const DefParamD &target, FlavorD flavor,
                const std::array<MPoly, 3> &images, std::string name) {
    if (source.n() != target.n())
        throw ParamMismatch("source and target have different n");
    IsoD f{source, target, flavor, {}, std::move(name)};
    for (int i = 0; i < 3; ++i)
        f.images[i] = flavor == FlavorD::Quantized ? ElemDQuant(target, images[i]).body()
                                                   : normalize_d_def(images[i], target).body();
    return f;
}

IsoD identity_d(const DefParamD &param, FlavorD flavor) {
    return make_iso_d(param, param, flavor, {X, Y, Z}, "id");
}

IsoD make_sigma(const DefParamD &param, FlavorD flavor) {
    DefParamD target(param.n(), param.Q(), -param.gamma());
    return make_iso_d(param, target, flavor, {X, -Y, -Z}, sigma_name(flavor));
}

std::array<CycScalar, 3> cubic_coeffs(const DefParamD &param) {
    if (param.n() != 4)
        throw NotApplicable("T and tau exist only for n = 4");
    std::vector<CycScalar> c = param.Q().univariate_coeffs(Var::X);
    return {c[2], c[1], c[0]};
}

DefParamD t_target(const DefParamD &param) {
    auto [a, b, c] = cubic_coeffs(param);
    const CycScalar i = imag_or_throw("T");
    const CycScalar &g = param.gamma();
    CycScalar b2 = (3 * a * a - 4 * b - 12 * i * g) / CycScalar(8);
    CycScalar c2 = c + (a * a * a - 4 * a * b - 4 * i * a * g) / CycScalar(16);
    CycScalar g2 = i / CycScalar(8) * (a * a - 4 * b + 4 * i * g);
    MPoly Q2 = X.pow(3) + a * X * X + b2 * X + MPoly(c2);
    return DefParamD(4, Q2, g2);
}

IsoD make_T(const DefParamD &param, FlavorD flavor, TDirection dir) {
    if (dir == TDirection::Inverse) {
        IsoD t1 = make_T(param, flavor);
        IsoD r = compose_iso_d(make_T(t1.target, flavor), t1);
        r.name = std::string(t_name(flavor)) + "^-1";
        return r;
    }
    DefParamD target = t_target(param);
    const CycScalar a = cubic_coeffs(param)[0];
    const CycScalar i = CycScalar::imag();
    const CycScalar half(1, 2);
    CycScalar kappa = a / CycScalar(4);
    if (flavor == FlavorD::Quantized)
        kappa += 1;
    MPoly ix = -half * X + (i * half) * Y - MPoly(kappa);
    MPoly iy = (3 * i * half) * X - half * Y + MPoly(i * kappa);
    return make_iso_d(param, target, flavor, {ix, iy, Z}, t_name(flavor));
}

IsoD make_scaling(const DefParamD &param, const CycScalar &lambda, int sign, ScalingFamily family,
                  FlavorD flavor) {
    if (lambda.is_zero())
        throw ZeroScalar("lambda must be nonzero");
    if (sign != 1 && sign != -1)
        throw UsageError("sign must be +1 or -1");
    const int n = param.n();
    const bool is_r = family == ScalingFamily::R;
    if (is_r && param.gamma().is_zero())
        throw FamilyMismatch("R_lambda needs gamma != 0");
    if (!is_r && !param.gamma().is_zero())
        throw FamilyMismatch("P_lambda needs gamma = 0");
    const CycScalar l2 = lambda * lambda;
    MPoly Q2 = param.Q().substitute(Var::X, l2 * X) * lambda.pow(-2L * (n - 1));
    std::string name = std::string(is_r ? "R" : "P") + (sign > 0 ? "^+" : "^-") + "_(" +
                       lambda.to_string() + ")";
    if (is_r) {
        const CycScalar mu = CycScalar(sign) * lambda.pow(n);
        DefParamD target(n, Q2, param.gamma() / mu);
        return make_iso_d(param, target, flavor,
                          {l2 * X, (mu * lambda.pow(-2)) * Y, (mu * lambda.pow(-1)) * Z}, name);
    }
    DefParamD target(n, Q2, 0);
    const CycScalar s(sign);
    return make_iso_d(param, target, flavor,
                      {l2 * X, (s * lambda.pow(n - 2)) * Y, (s * lambda.pow(n - 1)) * Z}, name);
}

ElemDQuant apply_iso_d(const IsoD &f, const ElemDQuant &e) {
    if (f.flavor != FlavorD::Quantized)
        throw ParamMismatch("map is not of quantized flavor");
    require_same(e.param(), f.source);
    std::array<std::vector<ElemDQuant>, 3> pw;
    for (int i = 0; i < 3; ++i)
        pw[i].push_back(qconst(f.target, 1));
    auto power = [&](int i, unsigned k) -> const ElemDQuant & {
        while (pw[i].size() <= k)
            pw[i].push_back(pw[i].back() * f.quant_image(i));
        return pw[i][k];
    };
    ElemDQuant r(f.target);
    for (const auto &[m, c] : e.body().terms())
        r += c * (power(0, m[0]) * power(1, m[1]) * power(2, m[2]));
    return r;
}

ElemDDef apply_iso_d(const IsoD &f, const ElemDDef &e) {
    if (f.flavor != FlavorD::Deformed)
        throw ParamMismatch("map is not of deformed flavor");
    require_same(e.param(), f.source);
    MPoly s = e.body().substitute({{Var::X, f.images[0]}, {Var::Y, f.images[1]}, {Var::Z, f.images[2]}});
    return normalize_d_def(s, f.target);
}

IsoD compose_iso_d(const IsoD &f, const IsoD &g) {
    if (f.flavor != g.flavor)
        throw ParamMismatch("cannot compose maps of different flavor");
    require_same(g.target, f.source);
    IsoD r{g.source, f.target, f.flavor, {}, ""};
    if (f.name == "id")
        r.name = g.name;
    else if (g.name == "id")
        r.name = f.name;
    else if (!f.name.empty() && !g.name.empty())
        r.name = f.name + "." + g.name;
    for (int i = 0; i < 3; ++i)
        r.images[i] = f.flavor == FlavorD::Quantized ? apply_iso_d(f, g.quant_image(i)).body()
                                                     : apply_iso_d(f, g.def_image(i)).body();
    return r;
}

IsoDCertificate verify_iso_d(const IsoD &f) {
    IsoDCertificate cert;
    const DefParamD &src = f.source, &tgt = f.target;
    const int n = src.n();
    const CycScalar &g = src.gamma();
    bool hom = true;
    auto record = [&](const std::string &label, const auto &res) {
        cert.residuals.emplace_back(label, res.is_zero() ? "0" : res.to_string());
        return res.is_zero();
    };
    if (f.flavor == FlavorD::Quantized) {
        ElemDQuant x = f.quant_image(0), y = f.quant_image(1), z = f.quant_image(2);
        std::function<ElemDQuant(const CycScalar &)> k = [&](const CycScalar &c) { return qconst(tgt, c); };
        const MPoly P = solve_p_levy(src).in_x();
        hom &= record("[x,y] - 2z", commutator_d(x, y) - CycScalar(2) * z);
        hom &= record("[x,z] + 2xy - 2z - gamma",
                      commutator_d(x, z) + CycScalar(2) * (x * y) - CycScalar(2) * z - k(g));
        hom &= record("[y,z] - y^2 - P(x) + n",
                      commutator_d(y, z) - y * y - horner(P, x, k) + k(n));
        hom &= record("Q(x) + x(y^2 - n) + z^2 - 2zy - gamma y",
                      horner(src.Q(), x, k) + x * (y * y - k(n)) + z * z - CycScalar(2) * (z * y) -
                          g * y);
        cert.homomorphism = hom;
        return cert;
    }
    MPoly psi = psi_d(src).substitute({{Var::X, f.images[0]}, {Var::Y, f.images[1]}, {Var::Z, f.images[2]}});
    hom &= record("psi(x, y, z)", normalize_d_def(psi, tgt));
    cert.homomorphism = hom;
    bool poisson = true;
    const std::array<Var, 3> v{Var::X, Var::Y, Var::Z};
    const char *names = "xyz";
    for (auto [a, b] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
        ElemDDef lhs = poisson_bracket_d(f.def_image(a), f.def_image(b));
        ElemDDef rhs = apply_iso_d(f, poisson_bracket_d(ElemDDef::gen(src, v[a]), ElemDDef::gen(src, v[b])));
        poisson &= record(std::string("{") + names[a] + "," + names[b] + "}", lhs - rhs);
    }
    cert.poisson = poisson;
    return cert;
}

S3Report s3_check(const DefParamD &param, FlavorD flavor) {
    S3Report rep;
    rep.orbit.push_back(param);
    const IsoD id = identity_d(param, flavor);
    const std::string S = sigma_name(flavor), T = t_name(flavor);
    IsoD s1 = make_sigma(param, flavor);
    IsoD ss = compose_iso_d(make_sigma(s1.target, flavor), s1);
    rep.checks.emplace_back(S + "^2 = id", ss.same_map(id));
    if (param.n() == 4) {
        imag_or_throw("the S3 check");
        IsoD t1 = make_T(param, flavor);
        IsoD t2 = make_T(t1.target, flavor);
        IsoD t3 = make_T(t2.target, flavor);
        rep.orbit.push_back(t1.target);
        rep.orbit.push_back(t2.target);
        const bool closes = t3.target == param;
        rep.checks.emplace_back("orbit closes after three steps", closes);
        IsoD tt = compose_iso_d(t2, t1);
        rep.checks.emplace_back(T + "^3 = id", closes && compose_iso_d(t3, tt).same_map(id));
        IsoD ts = make_T(s1.target, flavor);
        IsoD sts = compose_iso_d(make_sigma(ts.target, flavor), compose_iso_d(ts, s1));
        rep.checks.emplace_back(S + "." + T + "." + S + " = " + T + "^2", sts.same_map(tt));
    }
    rep.ok = std::all_of(rep.checks.begin(), rep.checks.end(), [](const auto &c) { return c.second; });
    return rep;
}

std::pair<int, int> d_m_decomposition(const MPoly &Q) {
    std::vector<int> e;
    std::vector<CycScalar> c = Q.univariate_coeffs(Var::X);
    for (std::size_t j = 0; j < c.size(); ++j)
        if (!c[j].is_zero())
            e.push_back(static_cast<int>(j));
    if (e.empty())
        throw InvalidParameter("Q is zero");
    const int d = e.front();
    int m = 0;
    for (int x : e)
        m = std::gcd(m, x - d);
    return {d, m};
}

std::string AutGroupD::to_string() const {
    if (!complete)
        return "incomplete: session field too small, need k = " + std::to_string(required_k);
    std::string s = structure;
    if (generators.empty())
        return s;
    s += " (generators: ";
    for (std::size_t i = 0; i < generators.size(); ++i)
        s += (i ? ", " : "") + generators[i].name;
    return s + ")";
}

AutGroupD classify_aut_d(const DefParamD &param, AutKindD kind) {
    AutGroupD out;
    out.kind = kind;
    const int n = param.n();
    std::tie(out.d, out.m) = d_m_decomposition(param.Q());
    const bool gamma0 = param.gamma().is_zero();
    const FlavorD flavor = kind == AutKindD::Quantized ? FlavorD::Quantized : FlavorD::Deformed;

    long need = n == 4 ? 4 : 1;
    long rootN = 0;
    if (kind == AutKindD::Affine) {
        if (!gamma0)
            rootN = 2L * (out.m == 0 ? n : std::gcd(n, out.m));
        else if (out.m > 0)
            rootN = 2L * out.m;
        if (rootN)
            need = lcm_l(need, rootN);
    }
    const long k = cyclotomic_index();
    if (std::lcm(2L, k) % need != 0) {
        out.complete = false;
        out.required_k = static_cast<int>(lcm_l(k, need));
        return out;
    }

    const IsoD id = identity_d(param, flavor);
    std::vector<IsoD> gens;
    for (const IsoD &e : s3_stabilizer(param, flavor))
        if (e.name != "id")
            gens.push_back(e);
    // Two distinct involutions generate the whole S3; keep sigma and T then.
    if (gens.size() == 5)
        gens = {make_sigma(param, flavor), make_T(param, flavor)};

    if (kind == AutKindD::Affine) {
        std::vector<IsoD> g0;
        if (!gamma0) {
            const CycScalar z = *primitive_root(rootN);
            g0.push_back(make_scaling(param, z, z.pow(n) == CycScalar(1) ? 1 : -1, ScalingFamily::R));
        } else if (out.m > 0) {
            g0.push_back(make_scaling(param, *primitive_root(rootN), 1, ScalingFamily::P));
            g0.push_back(make_sigma(param, flavor));
        } else {
            // Q = x^(n-1): the torus P^+_lambda, lambda in C^*, times <sigma>.
            const CycScalar z = *primitive_root(std::lcm(2L, k));
            g0.push_back(make_scaling(param, z, 1, ScalingFamily::P));
            g0.push_back(make_sigma(param, flavor));
        }
        for (const IsoD &e : gens)
            if (std::none_of(g0.begin(), g0.end(), [&](const IsoD &h) { return h.same_map(e); }))
                g0.push_back(e);
        gens = g0;
        for (IsoD &e : gens)
            rename_known(e);
        if (gamma0 && out.m == 0) {
            out.order = 0;
            out.structure = gens.size() > 2 ? "<C^* x Z/2, " + gens[2].name + ">" : "C^* x Z/2";
            out.generators = gens;
            return out;
        }
    }
    FiniteGroup fg = closure(id, gens);
    out.order = fg.finite ? static_cast<long>(fg.elems.size()) : 0;
    out.structure = fg.finite ? group_name(fg, gens) : "infinite";
    out.generators = gens;
    return out;
}

std::optional<IsoD> decide_iso_d_poisson(const DefParamD &p1, const DefParamD &p2) {
    if (p1.n() != p2.n())
        throw ParamMismatch("parameters have different n");
    const FlavorD fl = FlavorD::Deformed;
    if (p1 == p2)
        return identity_d(p1, fl);
    if (p1.n() != 4) {
        IsoD s = make_sigma(p1, fl);
        if (s.target == p2)
            return s;
        return std::nullopt;
    }
    // Breadth-first over the orbit; it has at most six points.
    std::vector<IsoD> frontier{identity_d(p1, fl)};
    std::vector<DefParamD> seen{p1};
    for (std::size_t i = 0; i < frontier.size(); ++i) {
        const IsoD cur = frontier[i];
        for (IsoD step : {make_sigma(cur.target, fl), make_T(cur.target, fl)}) {
            IsoD next = compose_iso_d(step, cur);
            if (std::find(seen.begin(), seen.end(), next.target) != seen.end())
                continue;
            if (next.target == p2)
                return next;
            seen.push_back(next.target);
            frontier.push_back(next);
        }
    }
    return std::nullopt;
}

} // namespace kleinian
