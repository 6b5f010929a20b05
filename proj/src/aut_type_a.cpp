#include "kleinian/aut_type_a.hpp"

#include "kleinian/errors.hpp"

namespace kleinian {

namespace {

using Kind = AutGenA::Kind;

GwaElem constant(const GwaAlgebra &alg, const MPoly &c) { return GwaElem(alg, c); }

GwaElem zvar(const GwaAlgebra &alg) { return GwaElem::gen(alg, Var::Z); }

MPoly tvalue(TMode mode) {
    switch (mode) {
    case TMode::Generic:
        return MPoly::var(Var::T);
    case TMode::One:
        return MPoly(1);
    case TMode::Zero:
        return MPoly();
    }
    return MPoly();
}

// f(e) for f in z (and t) by Horner in z; t is central and maps to itself.
GwaElem eval_in_z(const MPoly &f, const GwaElem &e) {
    const GwaAlgebra &alg = e.algebra();
    std::vector<MPoly> c = f.coefficients_in(Var::Z);
    if (c.empty())
        return GwaElem(alg);
    GwaElem acc = constant(alg, c.back());
    for (std::size_t j = c.size() - 1; j-- > 0;)
        acc = acc * e + constant(alg, c[j]);
    return acc;
}

// Elements of the target algebra built from MPolys in x, y, z.
GwaElem from_poly(const GwaAlgebra &alg, const MPoly &p) {
    if (alg.mode != TMode::Zero)
        throw InvalidParameter("polynomial images need the commutative algebra");
    return lift_to_gwa(ElemADef(alg.param, p), TMode::Zero);
}

bool only_in(const MPoly &g, Var v) {
    for (Var w : {Var::X, Var::Y, Var::Z, Var::T, Var::U})
        if (w != v && g.involves(w))
            return false;
    return true;
}

// Antiderivative of g in v, as an element w of the GWA.
GwaElem antiderivative(const GwaAlgebra &alg, const MPoly &g, Var v) {
    std::vector<CycScalar> c = g.univariate_coeffs(v);
    GwaElem::Components comps;
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (c[j].is_zero())
            continue;
        const int m = static_cast<int>(j + 1);
        comps.emplace(v == Var::X ? m : -m, MPoly(c[j] / CycScalar(static_cast<long>(m))));
    }
    return GwaElem(alg, std::move(comps));
}

void require_zero_mode(const AutGenA &gen, TMode mode) {
    if (mode != TMode::Zero)
        throw InvalidGenerator(gen.to_string() + " is only defined at t=0");
}

CycScalar nu_power(const CycScalar &nu, long e) { return nu.pow(e); }

bool symmetric_shape(const MPoly &P, long d, unsigned &i) {
    if (d < 1)
        return false;
    i = P.min_degree(Var::Z);
    for (const auto &[mono, c] : P.terms())
        if ((static_cast<long>(mono[2]) - static_cast<long>(i)) % d != 0)
            return false;
    return true;
}

AlgMapA triple(const DefParamA &source, const DefParamA &target, TMode mode, GwaElem x, GwaElem y,
               GwaElem z) {
    AlgMapA m{source, target, mode, {std::move(x), std::move(y), std::move(z)}, false};
    return m;
}

} // namespace

AutGenA AutGenA::canonical() const {
    switch (kind) {
    case Kind::PhiLM:
    case Kind::PsiLM: {
        if (m < 0)
            throw InvalidGenerator("m must be nonnegative in " + to_string());
        const Var v = kind == Kind::PhiLM ? Var::Y : Var::X;
        MPoly g;
        if (m > 0)
            g = MPoly::var(v, static_cast<unsigned>(m - 1)) * (CycScalar(m) * scalar);
        return kind == Kind::PhiLM ? phi(g) : psi(g);
    }
    default:
        return *this;
    }
}

bool AutGenA::is_word_letter() const {
    switch (kind) {
    case Kind::Theta:
    case Kind::PhiPoly:
    case Kind::PsiPoly:
    case Kind::PhiLM:
    case Kind::PsiLM:
    case Kind::Omega:
        return true;
    default:
        return false;
    }
}

bool operator==(const AutGenA &a, const AutGenA &b) {
    return a.kind == b.kind && a.scalar == b.scalar && a.poly == b.poly && a.m == b.m;
}

std::string AutGenA::to_string() const {
    switch (kind) {
    case Kind::Theta:
        return "Theta(" + scalar.to_string() + ")";
    case Kind::PhiPoly:
        return "Phi(" + poly.to_string() + ")";
    case Kind::PsiPoly:
        return "Psi(" + poly.to_string() + ")";
    case Kind::PhiLM:
        return "Phi(" + scalar.to_string() + ", " + std::to_string(m) + ")";
    case Kind::PsiLM:
        return "Psi(" + scalar.to_string() + ", " + std::to_string(m) + ")";
    case Kind::Omega:
        return "Omega";
    case Kind::V:
        return "V";
    case Kind::DeltaTri:
        return "Delta(" + poly.to_string() + ")";
    case Kind::NablaTri:
        return "Nabla(" + poly.to_string() + ")";
    case Kind::Rescale:
        return "R(" + scalar.to_string() + ")";
    case Kind::Symmetry:
        return "S(" + scalar.to_string() + ", " + std::to_string(m) + ")";
    }
    return "?";
}

std::string AutWordA::to_string() const {
    if (letters.empty())
        return "id";
    std::string out;
    for (const auto &l : letters) {
        if (!out.empty())
            out += " o ";
        out += l.to_string();
    }
    return out;
}

bool operator==(const AlgMapA &a, const AlgMapA &b) {
    return a.mode == b.mode && a.source == b.source && a.target == b.target && a.images == b.images;
}

std::string AlgMapA::to_string() const {
    return "(" + images[0].to_string() + ", " + images[1].to_string() + ", " + images[2].to_string() +
           ")";
}

AlgMapA identity_map(const DefParamA &param, TMode mode) {
    GwaAlgebra alg{param, mode};
    return triple(param, param, mode, GwaElem::gen(alg, Var::X), GwaElem::gen(alg, Var::Y),
                  zvar(alg));
}

AlgMapA make_map(const DefParamA &source, const DefParamA &target, TMode mode, const GwaElem &x,
                 const GwaElem &y, const GwaElem &z) {
    GwaAlgebra alg{target, mode};
    for (const GwaElem *e : {&x, &y, &z})
        require_same(e->algebra(), alg);
    return triple(source, target, mode, x, y, z);
}

DefParamA omega_target(const DefParamA &param) {
    MPoly q = param.P().substitute(Var::Z, -MPoly::var(Var::Z));
    if (param.n() % 2)
        q = -q;
    return DefParamA(param.n(), q);
}

AlgMapA omega_iso(const DefParamA &param, TMode mode) {
    const DefParamA target = omega_target(param);
    GwaAlgebra alg{target, mode};
    const CycScalar sign(param.n() % 2 ? -1 : 1);
    return triple(param, target, mode, GwaElem::gen(alg, Var::Y), sign * GwaElem::gen(alg, Var::X),
                  constant(alg, tvalue(mode)) - zvar(alg));
}

namespace {

AlgMapA exp_ad_side(const MPoly &g, const DefParamA &param, TMode mode, Var side) {
    GwaAlgebra alg{param, mode};
    const GwaElem ghat = antiderivative(alg, g, side);
    const ElemADef ghat_def = mode == TMode::Zero ? to_deformation(ghat) : ElemADef(param, MPoly());

    auto derive = [&](const GwaElem &a) -> GwaElem {
        switch (mode) {
        case TMode::Zero:
            return lift_to_gwa(poisson_bracket_a(ghat_def, to_deformation(a)), TMode::Zero);
        case TMode::One:
            return gwa_commutator(ghat, a);
        case TMode::Generic: {
            GwaElem c = gwa_commutator(ghat, a);
            GwaElem::Components q;
            for (const auto &[m, h] : c.components()) {
                try {
                    q.emplace(m, h.divide_by_var(Var::T));
                } catch (const NotDivisible &) {
                    throw NotDivisibleByT("commutator " + c.to_string() + " is not divisible by t");
                }
            }
            return GwaElem(alg, std::move(q));
        }
        }
        return GwaElem(alg);
    };

    // Each application lowers the z-degree of the x- or y-component, so
    // the series stops after about n + deg g steps on generators.
    const long bound = 8L * (param.n() + static_cast<long>(g.total_degree()) + 4);
    auto exponential = [&](const GwaElem &a) {
        GwaElem sum = a, term = a;
        for (long k = 1;; ++k) {
            term = CycScalar(1, k) * derive(term);
            if (term.is_zero())
                return sum;
            if (k > bound)
                throw NonNilpotent("exp(ad) series did not terminate for " + g.to_string());
            sum += term;
        }
    };
    return triple(param, param, mode, exponential(GwaElem::gen(alg, Var::X)),
                  exponential(GwaElem::gen(alg, Var::Y)), exponential(zvar(alg)));
}

} // namespace

AlgMapA exp_ad_a(const MPoly &g, const DefParamA &param, TMode mode) {
    const Var side = g.involves(Var::X) ? Var::X : Var::Y;
    if (!only_in(g, side))
        throw InvalidGenerator("exp(ad) needs a polynomial in y only or in x only, got " +
                               g.to_string());
    return exp_ad_side(g, param, mode, side);
}

AlgMapA closed_phi_lm(const CycScalar &lambda, long m, const DefParamA &param, TMode mode) {
    if (m < 0)
        throw InvalidGenerator("m must be nonnegative");
    if (m == 0 || lambda.is_zero())
        return identity_map(param, mode);
    GwaAlgebra gen{param, TMode::Generic};
    // x + sum_i (-lambda)^i / (t^i i!) y^(im-1) delta^i(P); computed with t
    // symbolic, then specialized.
    GwaElem x = GwaElem::gen(gen, Var::X);
    MPoly d = param.P();
    CycScalar coef(1);
    for (long i = 1; i <= param.n(); ++i) {
        d = delta_m(d, m, 1).divide_by_var(Var::T);
        coef = coef * (-lambda) / CycScalar(i);
        x += GwaElem::term(gen, -static_cast<int>(i * m - 1), MPoly(1)) * GwaElem(gen, d * coef);
    }
    GwaElem z = zvar(gen) + GwaElem::term(gen, -static_cast<int>(m), MPoly(CycScalar(m) * lambda));
    GwaElem y = GwaElem::gen(gen, Var::Y);
    if (mode != TMode::Generic) {
        const int tv = mode == TMode::One ? 1 : 0;
        x = specialize_t(x, tv), y = specialize_t(y, tv), z = specialize_t(z, tv);
    }
    return triple(param, param, mode, x, y, z);
}

AlgMapA closed_psi_lm(const CycScalar &lambda, long m, const DefParamA &param, TMode mode) {
    if (m < 0)
        throw InvalidGenerator("m must be nonnegative");
    if (m == 0 || lambda.is_zero())
        return identity_map(param, mode);
    GwaAlgebra gen{param, TMode::Generic};
    GwaElem y = GwaElem::gen(gen, Var::Y);
    MPoly d = param.P();
    CycScalar coef(1);
    for (long i = 1; i <= param.n(); ++i) {
        d = delta_m(d, m, 1).divide_by_var(Var::T);
        coef = coef * lambda / CycScalar(i);
        y += GwaElem(gen, d * coef) * GwaElem::term(gen, static_cast<int>(i * m - 1), MPoly(1));
    }
    GwaElem z = zvar(gen) - GwaElem::term(gen, static_cast<int>(m), MPoly(CycScalar(m) * lambda));
    GwaElem x = GwaElem::gen(gen, Var::X);
    if (mode != TMode::Generic) {
        const int tv = mode == TMode::One ? 1 : 0;
        x = specialize_t(x, tv), y = specialize_t(y, tv), z = specialize_t(z, tv);
    }
    return triple(param, param, mode, x, y, z);
}

AlgMapA gen_to_map(const AutGenA &gen, const DefParamA &param, TMode mode) {
    GwaAlgebra alg{param, mode};
    const MPoly X = MPoly::var(Var::X), Y = MPoly::var(Var::Y), Z = MPoly::var(Var::Z);
    switch (gen.kind) {
    case Kind::Theta: {
        if (gen.scalar.is_zero())
            throw InvalidGenerator("Theta needs a nonzero scalar");
        return triple(param, param, mode, gen.scalar * GwaElem::gen(alg, Var::X),
                      gen.scalar.inverse() * GwaElem::gen(alg, Var::Y), zvar(alg));
    }
    case Kind::PhiPoly:
        if (!only_in(gen.poly, Var::Y))
            throw InvalidGenerator("Phi needs a polynomial in y, got " + gen.poly.to_string());
        return exp_ad_side(gen.poly, param, mode, Var::Y);
    case Kind::PsiPoly:
        if (!only_in(gen.poly, Var::X))
            throw InvalidGenerator("Psi needs a polynomial in x, got " + gen.poly.to_string());
        return exp_ad_side(gen.poly, param, mode, Var::X);
    case Kind::PhiLM:
    case Kind::PsiLM:
        return gen_to_map(gen.canonical(), param, mode);
    case Kind::Omega:
        if (!param.reflective())
            throw InvalidGenerator("Omega needs a reflective P, got " + param.P().to_string());
        return omega_iso(param, mode);
    case Kind::V:
        require_zero_mode(gen, mode);
        return triple(param, param, mode, GwaElem::gen(alg, Var::Y), GwaElem::gen(alg, Var::X),
                      zvar(alg));
    case Kind::DeltaTri: {
        require_zero_mode(gen, mode);
        if (!only_in(gen.poly, Var::Y))
            throw InvalidGenerator("Delta needs a polynomial in y, got " + gen.poly.to_string());
        const MPoly shift = Y * gen.poly;
        const MPoly num = param.P().substitute(Var::Z, Z + shift) - param.P();
        return triple(param, param, mode, from_poly(alg, X + num.divide_by_var(Var::Y)),
                      GwaElem::gen(alg, Var::Y), from_poly(alg, Z + shift));
    }
    case Kind::NablaTri: {
        require_zero_mode(gen, mode);
        if (!only_in(gen.poly, Var::X))
            throw InvalidGenerator("Nabla needs a polynomial in x, got " + gen.poly.to_string());
        const MPoly shift = X * gen.poly;
        const MPoly num = param.P().substitute(Var::Z, Z - shift) - param.P();
        return triple(param, param, mode, GwaElem::gen(alg, Var::X),
                      from_poly(alg, Y + num.divide_by_var(Var::X)), from_poly(alg, Z - shift));
    }
    case Kind::Rescale: {
        require_zero_mode(gen, mode);
        if (param.P() != MPoly::var(Var::Z, param.n()))
            throw InvalidGenerator("R needs P = z^n, got " + param.P().to_string());
        if (gen.scalar.is_zero())
            throw InvalidGenerator("R needs a nonzero scalar");
        return triple(param, param, mode, nu_power(gen.scalar, param.n()) * GwaElem::gen(alg, Var::X),
                      GwaElem::gen(alg, Var::Y), gen.scalar * zvar(alg));
    }
    case Kind::Symmetry: {
        require_zero_mode(gen, mode);
        unsigned i = 0;
        if (!symmetric_shape(param.P(), gen.m, i))
            throw InvalidGenerator("S(mu, " + std::to_string(gen.m) + ") needs P = z^i Q(z^d), got " +
                                   param.P().to_string());
        if (!gen.scalar.pow(gen.m).is_one())
            throw InvalidGenerator("S(mu, d) needs mu^d = 1, got mu = " + gen.scalar.to_string());
        return triple(param, param, mode, gen.scalar.pow(i) * GwaElem::gen(alg, Var::X),
                      GwaElem::gen(alg, Var::Y), gen.scalar * zvar(alg));
    }
    }
    throw InvalidGenerator("unknown generator");
}

GwaElem apply_map(const AlgMapA &map, const GwaElem &elem) {
    require_same(elem.algebra(), map.source_algebra());
    const GwaAlgebra alg = map.target_algebra();
    GwaElem pos(alg), neg(alg);
    const auto &comps = elem.components();
    if (comps.empty())
        return pos;
    const int top = std::max(comps.rbegin()->first, 0);
    const int bottom = std::min(comps.begin()->first, 0);
    for (int m = top; m >= 1; --m) {
        pos = pos + eval_in_z(elem.component(m), map.images[2]);
        pos = pos * map.images[0];
    }
    for (int m = bottom; m <= -1; ++m) {
        neg = neg + eval_in_z(elem.component(m), map.images[2]);
        neg = neg * map.images[1];
    }
    return pos + neg + eval_in_z(elem.component(0), map.images[2]);
}

ElemADef apply_map(const AlgMapA &map, const ElemADef &elem) {
    if (map.mode != TMode::Zero)
        throw ParamMismatch("deformation elements need a map at t=0");
    return to_deformation(apply_map(map, lift_to_gwa(elem, TMode::Zero)));
}

AlgMapA compose_maps(const AlgMapA &f, const AlgMapA &g) {
    if (f.mode != g.mode)
        throw ParamMismatch(std::string("cannot compose maps in modes ") + tmode_name(f.mode) +
                            " and " + tmode_name(g.mode));
    require_same(g.target, f.source);
    return triple(g.source, f.target, f.mode, apply_map(f, g.images[0]), apply_map(f, g.images[1]),
                  apply_map(f, g.images[2]));
}

AlgMapA evaluate_word(const AutWordA &word, const DefParamA &param) {
    if (word.letters.empty())
        return identity_map(param, word.mode);
    AlgMapA acc = gen_to_map(word.letters.back(), param, word.mode);
    for (std::size_t i = word.letters.size() - 1; i-- > 0;)
        acc = compose_maps(gen_to_map(word.letters[i], param, word.mode), acc);
    return acc;
}

HomCertificate verify_hom_a(const AlgMapA &map) {
    const GwaAlgebra alg = map.target_algebra();
    HomCertificate cert;
    const GwaElem &X = map.images[0], &Y = map.images[1], &Z = map.images[2];
    for (const GwaElem *e : {&X, &Y, &Z})
        if (!(e->algebra() == alg)) {
            cert.residuals.emplace_back("images", "not in the target algebra");
            return cert;
        }
    const GwaElem t = constant(alg, tvalue(map.mode));
    const MPoly &P = map.source.P();
    const GwaElem r1 = X * Z - (Z - t) * X;
    const GwaElem r2 = Y * Z - (Z + t) * Y;
    const GwaElem r3 = X * Y - eval_in_z(P, Z - t);
    const GwaElem r4 = Y * X - eval_in_z(P, Z);
    cert.residuals = {{"xz - (z - t)x", r1.to_string()},
                      {"yz - (z + t)y", r2.to_string()},
                      {"xy - P(z - t)", r3.to_string()},
                      {"yx - P(z)", r4.to_string()}};
    cert.ok = r1.is_zero() && r2.is_zero() && r3.is_zero() && r4.is_zero();
    return cert;
}

bool is_poisson_map_a(const AlgMapA &map) {
    if (map.mode != TMode::Zero)
        throw ParamMismatch("Poisson maps live at t=0");
    const DefParamA &src = map.source;
    std::array<ElemADef, 3> img{to_deformation(map.images[0]), to_deformation(map.images[1]),
                                to_deformation(map.images[2])};
    const std::array<std::pair<int, int>, 3> pairs{{{0, 1}, {2, 0}, {2, 1}}};
    const Var vars[3] = {Var::X, Var::Y, Var::Z};
    for (auto [a, b] : pairs) {
        ElemADef lhs = poisson_bracket_a(img[a], img[b]);
        ElemADef inner = poisson_bracket_a(ElemADef::gen(src, vars[a]), ElemADef::gen(src, vars[b]));
        if (!(lhs == apply_map(map, inner)))
            return false;
    }
    return true;
}

namespace {

// Theta_nu o L = L' o Theta_nu'; returns L' and updates nu.
AutGenA conjugate_past_theta(const AutGenA &letter, CycScalar &nu) {
    if (nu.is_one())
        return letter;
    const CycScalar inv = nu.inverse();
    switch (letter.kind) {
    case Kind::PhiPoly:
        // g'(y) = g(y / nu) / nu
        return AutGenA::phi(letter.poly.substitute(Var::Y, MPoly::var(Var::Y) * inv) * inv);
    case Kind::PsiPoly:
        // h'(x) = nu h(nu x)
        return AutGenA::psi(letter.poly.substitute(Var::X, MPoly::var(Var::X) * nu) * nu);
    case Kind::Omega:
        nu = inv;
        return letter;
    default:
        throw InvalidGenerator(letter.to_string() + " is not a word letter");
    }
}

} // namespace

AutWordA word_normal_form(const AutWordA &word, const DefParamA &param) {
    const bool reflective = param.reflective();
    const CycScalar omega_sq(param.n() % 2 ? -1 : 1);
    std::vector<AutGenA> input;
    for (const auto &l : word.letters) {
        if (!l.is_word_letter())
            throw InvalidGenerator(l.to_string() + " is not a letter of G_t");
        AutGenA c = l.canonical();
        if (c.kind == Kind::Omega && !reflective)
            throw InvalidGenerator("Omega needs a reflective P, got " + param.P().to_string());
        if (c.kind == Kind::Theta && c.scalar.is_zero())
            throw InvalidGenerator("Theta needs a nonzero scalar");
        if (c.kind == Kind::PhiPoly && !only_in(c.poly, Var::Y))
            throw InvalidGenerator("Phi needs a polynomial in y, got " + c.poly.to_string());
        if (c.kind == Kind::PsiPoly && !only_in(c.poly, Var::X))
            throw InvalidGenerator("Psi needs a polynomial in x, got " + c.poly.to_string());
        if (c.kind == Kind::PsiPoly && reflective) {
            // Psi_h = Theta_{(-1)^n} o Omega o Phi_h(y) o Omega
            input.push_back(AutGenA::theta(omega_sq));
            input.push_back(AutGenA::omega());
            input.push_back(AutGenA::phi(c.poly.substitute(Var::X, MPoly::var(Var::Y))));
            input.push_back(AutGenA::omega());
        } else {
            input.push_back(c);
        }
    }

    std::vector<AutGenA> out;
    CycScalar nu(1);
    for (const AutGenA &raw : input) {
        if (raw.kind == Kind::Theta) {
            nu = nu * raw.scalar;
            continue;
        }
        AutGenA l = conjugate_past_theta(raw, nu);
        if (l.kind == Kind::Omega) {
            if (!out.empty() && out.back().kind == Kind::Omega) {
                out.pop_back();
                nu = nu * omega_sq;
            } else {
                out.push_back(l);
            }
            continue;
        }
        if (l.poly.is_zero())
            continue;
        if (!out.empty() && out.back().kind == l.kind) {
            out.back().poly += l.poly;
            if (out.back().poly.is_zero())
                out.pop_back();
        } else {
            out.push_back(l);
        }
    }
    // Merging can expose a new adjacent pair only at the point of removal,
    // and each later letter checks the top again, so one pass suffices.
    if (!nu.is_one())
        out.push_back(AutGenA::theta(nu));
    return AutWordA{std::move(out), word.mode};
}

std::array<long, 3> mdeg_aut(const AlgMapA &map) {
    std::array<long, 3> d{};
    for (int i = 0; i < 3; ++i) {
        Degree g = map.images[i].fdeg();
        if (!g.is_finite())
            throw InvalidParameter("map sends a generator to 0");
        d[i] = g.value();
    }
    return d;
}

std::array<long, 3> predicted_mdeg(const AutWordA &canonical, const DefParamA &param) {
    const long n = param.n();
    if (n <= 2)
        throw NotApplicable("the multidegree formulas need n > 2");
    std::vector<AutGenA> letters = canonical.letters;
    if (!letters.empty() && letters.back().kind == Kind::Theta)
        letters.pop_back();
    std::array<long, 3> d{n, n, 2};
    Kind prev = Kind::Theta;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        const AutGenA &l = letters[i];
        if (l.kind == prev)
            throw ShapeMismatch("adjacent letters of the same kind in " + canonical.to_string());
        prev = l.kind;
        switch (l.kind) {
        case Kind::Omega:
            if (!param.reflective())
                throw ShapeMismatch("Omega in a word for non-reflective P");
            std::swap(d[0], d[1]);
            break;
        case Kind::PhiPoly:
        case Kind::PsiPoly: {
            if (l.poly.is_zero())
                throw ShapeMismatch("zero letter in " + canonical.to_string());
            if (l.kind == Kind::PsiPoly && param.reflective())
                throw ShapeMismatch("Psi in a word for reflective P");
            const long k = l.poly.total_degree();
            // phi o Phi_g when deg phi(y) dominates, phi o Psi_h when deg phi(x) does.
            const int lead = l.kind == Kind::PhiPoly ? 1 : 0;
            const long dl = d[lead];
            if (!(dl > d[2] && dl >= d[1 - lead]))
                throw ShapeMismatch("word " + canonical.to_string() + " is not in canonical shape");
            d[1 - lead] = (n * k + n - 1) * dl;
            d[2] = (k + 1) * dl;
            break;
        }
        default:
            throw ShapeMismatch(l.to_string() + " cannot occur inside a canonical word");
        }
    }
    return d;
}

std::string AutGroupDescriptor::to_string() const {
    return structure + " [" + (reflective ? "reflective" : "non-reflective") + ", n=" +
           std::to_string(n) + "]";
}

AutGroupDescriptor describe_aut_group_a(const DefParamA &param) {
    if (param.n() <= 2)
        throw NotApplicable("n = 2 is covered by the linear automorphism description");
    AutGroupDescriptor d;
    d.n = param.n();
    d.reflective = param.reflective();
    d.factor_h = "C[y] ⋊ C^×";
    d.amalgamated = "C^×";
    if (!d.reflective)
        d.factor_k = "C[x] ⋊ C^×";
    else if (d.n % 2 == 0)
        d.factor_k = "C^× ⋊ Z/2Z";
    else
        d.factor_k = "<C^×, Omega | Omega^2 = -1, lambda.Omega = Omega.lambda^-1>";
    d.structure = "(" + d.factor_h + ") *_{" + d.amalgamated + "} (" + d.factor_k + ")";
    return d;
}

std::optional<AlgMapA> decide_iso_quant_a(const DefParamA &p1, const DefParamA &p2, TMode mode) {
    if (p1.n() != p2.n())
        return std::nullopt;
    if (p1 == p2)
        return identity_map(p1, mode);
    if (omega_target(p1) == p2) {
        const AlgMapA w = omega_iso(p1, mode);
        return make_map(p1, p2, mode, w.images[0], w.images[1], w.images[2]);
    }
    return std::nullopt;
}

AlgMapA tau_iso(const DefParamA &param) { return omega_iso(param, TMode::Zero); }

AlgMapA r_alpha_iso(const DefParamA &param, const CycScalar &alpha) {
    if (alpha.is_zero())
        throw ZeroScalar("R_alpha needs alpha != 0");
    MPoly q = param.P().substitute(Var::Z, MPoly::var(Var::Z) * alpha) * alpha.pow(-param.n());
    DefParamA target(param.n(), q);
    GwaAlgebra alg{target, TMode::Zero};
    return triple(param, target, TMode::Zero, alpha.pow(param.n()) * GwaElem::gen(alg, Var::X),
                  GwaElem::gen(alg, Var::Y), alpha * zvar(alg));
}

std::optional<AlgMapA> decide_iso_def_a(const DefParamA &p1, const DefParamA &p2, IsoKindA kind,
                                        const std::optional<CycScalar> &alpha) {
    if (p1.n() != p2.n())
        return std::nullopt;
    auto retarget = [&](const AlgMapA &m) {
        GwaAlgebra alg{p2, TMode::Zero};
        auto move = [&](const GwaElem &e) { return GwaElem(alg, e.components()); };
        return make_map(p1, p2, TMode::Zero, move(m.images[0]), move(m.images[1]),
                        move(m.images[2]));
    };
    if (kind == IsoKindA::Poisson) {
        if (p1 == p2)
            return identity_map(p1, TMode::Zero);
        if (omega_target(p1) == p2)
            return retarget(tau_iso(p1));
        return std::nullopt;
    }
    if (!alpha)
        throw UsageError("affine isomorphism check needs a candidate alpha");
    AlgMapA r = r_alpha_iso(p1, *alpha);
    if (!(r.target == p2))
        return std::nullopt;
    return retarget(r);
}

} // namespace kleinian
