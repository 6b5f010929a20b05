#include "kleinian/suites.hpp"

#include "kleinian/aut_type_a.hpp"
#include "kleinian/errors.hpp"
#include "kleinian/iso_type_d.hpp"
#include "kleinian/random.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <mutex>
#include <set>
#include <sstream>

namespace kleinian {

namespace {

using G = AutGenA;

const MPoly X = MPoly::var(Var::X), Y = MPoly::var(Var::Y), Z = MPoly::var(Var::Z);
const TMode kModes[] = {TMode::Generic, TMode::One, TMode::Zero};
constexpr int kSamples = 200;

class Tally {
public:
    void check(bool ok, const std::function<std::string()> &what) {
        std::lock_guard<std::mutex> lock(mu_);
        ++checks_;
        if (ok)
            return;
        ++failures_;
        if (failures_ <= 5)
            notes_.push_back("FAIL: " + what());
    }
    void note(const std::string &s) {
        std::lock_guard<std::mutex> lock(mu_);
        notes_.push_back(s);
    }
    // Runs f and records any exception as a failure.
    void guarded(const std::string &label, const std::function<void()> &f) {
        try {
            f();
        } catch (const std::exception &e) {
            check(false, [&] { return label + " threw " + e.what(); });
        }
    }
    void fill(SuiteResult &r) const {
        r.checks = checks_;
        r.failures = failures_;
        r.notes = notes_;
        r.passed = failures_ == 0 && checks_ > 0;
    }

private:
    std::mutex mu_;
    long checks_ = 0, failures_ = 0;
    std::vector<std::string> notes_;
};

MPoly random_reflective(Sampler &s, int n) {
    MPoly p = MPoly::var(Var::Z, n);
    for (int j = n - 2; j >= 0; j -= 2)
        p += MPoly::var(Var::Z, j) * CycScalar(s.integer(-2, 2));
    return p;
}

MPoly random_nonreflective(Sampler &s, int n) {
    if (n == 2)
        return random_reflective(s, n);
    for (;;) {
        MPoly p = s.monic(Var::Z, n, true);
        if (!DefParamA(n, p).reflective())
            return p;
    }
}

DefParamD random_param_d(Sampler &s, int n) {
    return DefParamD(n, s.monic(Var::X, n - 1, false), s.scalar());
}

AlgMapA word(const DefParamA &p, TMode mode, std::vector<AutGenA> letters) {
    return evaluate_word(AutWordA{std::move(letters), mode}, p);
}

std::string str(const std::array<long, 3> &d) {
    return "(" + std::to_string(d[0]) + "," + std::to_string(d[1]) + "," + std::to_string(d[2]) + ")";
}

// ---- 1 ----
void poisson_axioms(Tally &t, Sampler &s) {
    for (int trial = 0; trial < kSamples; ++trial) {
        const int n = static_cast<int>(s.integer(2, 6));
        DefParamA p(n, s.monic(Var::Z, n, true));
        auto r = [&] { return ElemADef(p, s.poly({Var::X, Var::Y, Var::Z}, 4, 4, true)); };
        ElemADef a = r(), b = r(), c = r();
        ElemADef jac = poisson_bracket_a(a, poisson_bracket_a(b, c)) +
                       poisson_bracket_a(b, poisson_bracket_a(c, a)) +
                       poisson_bracket_a(c, poisson_bracket_a(a, b));
        t.check(jac.is_zero(), [&] { return "A Jacobi on " + p.to_string(); });
        t.check(poisson_bracket_a(a, b * c) ==
                    poisson_bracket_a(a, b) * c + b * poisson_bracket_a(a, c),
                [&] { return "A Leibniz on " + p.to_string(); });
    }
    for (int trial = 0; trial < kSamples; ++trial) {
        const int n = static_cast<int>(s.integer(4, 6));
        DefParamD p = random_param_d(s, n);
        auto r = [&] { return ElemDDef(p, s.poly({Var::X, Var::Y, Var::Z}, 3, 3, true)); };
        ElemDDef a = r(), b = r(), c = r();
        ElemDDef jac = poisson_bracket_d(a, poisson_bracket_d(b, c)) +
                       poisson_bracket_d(b, poisson_bracket_d(c, a)) +
                       poisson_bracket_d(c, poisson_bracket_d(a, b));
        t.check(jac.is_zero(), [&] { return "D Jacobi on " + p.to_string(); });
        t.check(poisson_bracket_d(a, b * c) ==
                    poisson_bracket_d(a, b) * c + b * poisson_bracket_d(a, c),
                [&] { return "D Leibniz on " + p.to_string(); });
    }
    // generator tables
    for (int trial = 0; trial < 20; ++trial) {
        const int n = static_cast<int>(s.integer(2, 6));
        DefParamA p(n, s.monic(Var::Z, n, true));
        auto g = [&](Var v) { return ElemADef::gen(p, v); };
        t.check(poisson_bracket_a(g(Var::X), g(Var::Y)) == ElemADef(p, -p.P().derivative(Var::Z)),
                [&] { return "{x,y} = -P'(z) on " + p.to_string(); });
        t.check(poisson_bracket_a(g(Var::Z), g(Var::X)) == g(Var::X), [&] { return "{z,x} = x"; });
        t.check(poisson_bracket_a(g(Var::Z), g(Var::Y)) == -g(Var::Y), [&] { return "{z,y} = -y"; });
        DefParamD q = random_param_d(s, static_cast<int>(s.integer(4, 6)));
        auto h = [&](Var v) { return ElemDDef::gen(q, v); };
        t.check(poisson_bracket_d(h(Var::X), h(Var::Y)) == ElemDDef(q, 2 * Z),
                [&] { return "{x,y} = 2z on " + q.to_string(); });
        t.check(poisson_bracket_d(h(Var::X), h(Var::Z)) == ElemDDef(q, -2 * X * Y + MPoly(q.gamma())),
                [&] { return "{x,z} = -2xy + gamma on " + q.to_string(); });
        t.check(poisson_bracket_d(h(Var::Y), h(Var::Z)) == ElemDDef(q, q.Q().derivative(Var::X) + Y * Y),
                [&] { return "{y,z} = Q'(x) + y^2 on " + q.to_string(); });
    }
}

// ---- 2 ----
void semiclassical_limit(Tally &t, Sampler &s) {
    std::vector<DefParamA> params;
    for (int n = 2; n <= 6; ++n)
        for (int j = 0; j < 3; ++j)
            params.emplace_back(n, s.monic(Var::Z, n, true));
    std::vector<std::uint64_t> seeds;
    for (std::size_t j = 0; j < params.size(); ++j)
        seeds.push_back(static_cast<std::uint64_t>(s.integer(0, 1L << 30)));
    auto one = [&t](const DefParamA &p, std::uint64_t seed) {
        Sampler rs(seed);
        const int n = p.n();
        GwaAlgebra gen{p, TMode::Generic};
        // z^c x^a and z^c y^b with n a + 2 c <= 6 n
        std::vector<GwaElem> basis;
        for (int a = -6; a <= 6; ++a)
            for (int c = 0; n * std::abs(a) + 2 * c <= 6 * n; ++c)
                basis.push_back(GwaElem::term(gen, a, MPoly::var(Var::Z, c)));
        auto compare = [&](const GwaElem &a, const GwaElem &b) {
            ElemADef lhs = semiclassical_bracket(a, b);
            ElemADef rhs = poisson_bracket_a(to_deformation(specialize_t(a, 0)),
                                             to_deformation(specialize_t(b, 0)));
            t.check(lhs == rhs, [&] { return "limit bracket " + a.to_string() + ", " + b.to_string(); });
        };
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = i + 1; j < basis.size(); ++j)
                compare(basis[i], basis[j]);
        for (int k = 0; k < kSamples; ++k) {
            auto r = [&] {
                GwaElem::Components c;
                const int terms = static_cast<int>(rs.integer(1, 3));
                for (int q = 0; q < terms; ++q)
                    c[static_cast<int>(rs.integer(-3, 3))] +=
                        rs.poly({Var::Z, Var::T}, 3, 3, true);
                return GwaElem(gen, c);
            };
            compare(r(), r());
        }
    };
    std::vector<std::future<void>> jobs;
    for (std::size_t j = 0; j < params.size(); ++j)
        jobs.push_back(std::async(std::launch::async, [&, j] {
            t.guarded("semiclassical " + params[j].to_string(), [&] { one(params[j], seeds[j]); });
        }));
    for (auto &f : jobs)
        f.get();
    t.note("15 parameters (3 per n = 2..6); all unordered basis pairs up to degree 6n plus " +
           std::to_string(kSamples) + " random pairs each");
}

// ---- 3 ----
void generator_formulas(Tally &t, Sampler &s) {
    for (int trial = 0; trial < kSamples / 2; ++trial) {
        const int n = static_cast<int>(s.integer(2, 6));
        DefParamA p(n, s.monic(Var::Z, n, true));
        const CycScalar lambda = s.scalar();
        const long m = s.integer(0, 3);
        for (TMode mode : kModes) {
            t.check(gen_to_map(G::phi_lm(lambda, m), p, mode) == closed_phi_lm(lambda, m, p, mode),
                    [&] { return "Phi_(" + lambda.to_string() + "," + std::to_string(m) + ") on " +
                                 p.to_string() + " " + tmode_name(mode); });
            t.check(gen_to_map(G::psi_lm(lambda, m), p, mode) == closed_psi_lm(lambda, m, p, mode),
                    [&] { return "Psi_(" + lambda.to_string() + "," + std::to_string(m) + ") on " +
                                 p.to_string() + " " + tmode_name(mode); });
        }
    }
}

// ---- 4 ----
void lemma_relations(Tally &t, Sampler &s) {
    for (int trial = 0; trial < 60; ++trial) {
        const int n = static_cast<int>(s.integer(2, 6));
        const bool refl = trial % 2 == 0;
        DefParamA p(n, refl ? random_reflective(s, n) : random_nonreflective(s, n));
        const CycScalar nu = s.nonzero_scalar(), mu = s.nonzero_scalar(), lambda = s.scalar();
        const long m = s.integer(1, 3);
        const TMode mode = kModes[trial % 3];
        auto ev = [&](std::vector<AutGenA> l) { return word(p, mode, std::move(l)); };
        auto ctx = [&](const char *rel) {
            return std::string(rel) + " on " + p.to_string() + " " + tmode_name(mode);
        };
        t.check(ev({G::theta(nu), G::theta(mu)}) == ev({G::theta(nu * mu)}), [&] { return ctx("Theta Theta"); });
        t.check(ev({G::theta(nu), G::psi_lm(lambda, m)}) ==
                    ev({G::psi_lm(lambda * nu.pow(m), m), G::theta(nu)}),
                [&] { return ctx("Theta Psi"); });
        t.check(ev({G::theta(nu), G::phi_lm(lambda, m)}) ==
                    ev({G::phi_lm(lambda * nu.pow(-m), m), G::theta(nu)}),
                [&] { return ctx("Theta Phi"); });
        if (!refl)
            continue;
        const CycScalar sign(n % 2 ? -1 : 1);
        t.check(ev({G::omega(), G::omega()}) == ev({G::theta(sign)}), [&] { return ctx("Omega^2"); });
        t.check(ev({G::omega(), G::theta(nu)}) == ev({G::theta(nu.inverse()), G::omega()}),
                [&] { return ctx("Omega Theta"); });
        t.check(ev({G::theta(sign), G::omega(), G::phi_lm(lambda, m), G::omega()}) ==
                    ev({G::psi_lm(lambda, m)}),
                [&] { return ctx("Omega Phi Omega"); });
    }

    // relations among the affine generators
    ScopedCyclotomicIndex k4(4);
    const CycScalar i = CycScalar::imag();
    for (int trial = 0; trial < 30; ++trial) {
        const int n = static_cast<int>(s.integer(2, 6));
        DefParamA p(n, s.monic(Var::Z, n, true));
        const CycScalar nu = s.nonzero_scalar(), mu = s.nonzero_scalar();
        MPoly g = s.poly({Var::Y}, 2, 3, true);
        MPoly h = s.poly({Var::X}, 2, 3, true);
        auto ev = [&](const DefParamA &q, std::vector<AutGenA> l) { return word(q, TMode::Zero, std::move(l)); };
        auto ctx = [&](const char *rel) { return std::string(rel) + " on " + p.to_string(); };
        t.check(ev(p, {G::swap(), G::swap()}) == identity_map(p, TMode::Zero), [&] { return ctx("V^2"); });
        t.check(ev(p, {G::theta(nu), G::swap()}) == ev(p, {G::swap(), G::theta(nu.inverse())}),
                [&] { return ctx("Theta V"); });
        t.check(ev(p, {G::delta(g), G::swap()}) == ev(p, {G::swap(), G::nabla(-g.substitute(Var::Y, X))}),
                [&] { return ctx("Delta V"); });
        t.check(ev(p, {G::nabla(h), G::swap()}) == ev(p, {G::swap(), G::delta(-h.substitute(Var::X, Y))}),
                [&] { return ctx("Nabla V"); });
        DefParamA pn(n, MPoly::var(Var::Z, n));
        t.check(ev(pn, {G::rescale(nu), G::rescale(mu)}) == ev(pn, {G::rescale(nu * mu)}),
                [&] { return ctx("R R"); });
        t.check(ev(pn, {G::theta(nu), G::rescale(mu)}) == ev(pn, {G::rescale(mu), G::theta(nu)}),
                [&] { return ctx("Theta R"); });
        t.check(ev(pn, {G::swap(), G::rescale(nu)}) == ev(pn, {G::rescale(nu), G::swap(), G::theta(nu.pow(n))}),
                [&] { return ctx("V R"); });
        t.check(ev(pn, {G::delta(g), G::rescale(nu)}) == ev(pn, {G::rescale(nu), G::delta(g * nu)}),
                [&] { return ctx("Delta R"); });
        MPoly h2 = h.substitute(Var::X, X * nu.pow(-n)) * nu.pow(1 - n);
        t.check(ev(pn, {G::nabla(h), G::rescale(nu)}) == ev(pn, {G::rescale(nu), G::nabla(h2)}),
                [&] { return ctx("Nabla R"); });
    }
    struct Case {
        MPoly P;
        long d, e;
    };
    const Case cases[] = {{Z.pow(5) + 2 * Z, 4, 1}, {Z.pow(4) - 3 * Z * Z + 2, 2, 0}, {Z.pow(5) + Z.pow(3) - Z, 2, 1},
                          {Z.pow(6) + Z.pow(2), 4, 2}};
    for (const Case &cs : cases) {
        DefParamA p(cs.P);
        auto ev = [&](std::vector<AutGenA> l) { return word(p, TMode::Zero, std::move(l)); };
        auto ctx = [&](const char *rel) { return std::string(rel) + " on " + p.to_string(); };
        std::vector<CycScalar> roots{CycScalar(1), CycScalar(-1)};
        if (cs.d == 4)
            roots.insert(roots.end(), {i, -i});
        for (const auto &a : roots)
            for (const auto &b : roots)
                t.check(ev({G::symmetry(a, cs.d), G::symmetry(b, cs.d)}) == ev({G::symmetry(a * b, cs.d)}),
                        [&] { return ctx("S S"); });
        for (int trial = 0; trial < 8; ++trial) {
            const CycScalar nu = s.nonzero_scalar();
            const CycScalar mu = roots[s.integer(0, static_cast<long>(roots.size()) - 1)];
            MPoly g = s.poly({Var::Y}, 2, 3, true);
            MPoly h = s.poly({Var::X}, 2, 3, true);
            t.check(ev({G::theta(nu), G::symmetry(mu, cs.d)}) == ev({G::symmetry(mu, cs.d), G::theta(nu)}),
                    [&] { return ctx("Theta S"); });
            t.check(ev({G::swap(), G::symmetry(mu, cs.d)}) ==
                        ev({G::symmetry(mu, cs.d), G::swap(), G::theta(mu.pow(p.n()))}),
                    [&] { return ctx("V S"); });
            t.check(ev({G::delta(g), G::symmetry(mu, cs.d)}) == ev({G::symmetry(mu, cs.d), G::delta(g * mu)}),
                    [&] { return ctx("Delta S"); });
            MPoly h2 = h.substitute(Var::X, X * mu.pow(-cs.e)) * mu.pow(1 - cs.e);
            t.check(ev({G::nabla(h), G::symmetry(mu, cs.d)}) == ev({G::symmetry(mu, cs.d), G::nabla(h2)}),
                    [&] { return ctx("Nabla S"); });
        }
    }
}

// Random word of at most max_len letters, polynomial degrees <= 3, then normalized.
AutWordA random_canonical(Sampler &s, const DefParamA &p, TMode mode, int max_len) {
    const bool refl = p.reflective();
    AutWordA w{{}, mode};
    const long len = s.integer(1, max_len);
    for (long j = 0; j < len; ++j) {
        const long deg = s.integer(0, 3);
        switch (s.integer(0, refl ? 3 : 2)) {
        case 0:
            w.letters.push_back(G::theta(s.nonzero_scalar(false)));
            break;
        case 1:
            w.letters.push_back(G::phi(MPoly::var(Var::Y, static_cast<unsigned>(deg)) * s.nonzero_scalar(false) +
                                       s.poly({Var::Y}, static_cast<unsigned>(deg), 2)));
            break;
        case 2:
            if (!refl) {
                w.letters.push_back(G::psi(MPoly::var(Var::X, static_cast<unsigned>(deg)) * s.nonzero_scalar(false) +
                                           s.poly({Var::X}, static_cast<unsigned>(deg), 2)));
                break;
            }
            [[fallthrough]];
        default:
            w.letters.push_back(G::omega());
        }
    }
    return word_normal_form(w, p);
}

// ---- 5 ----
void multidegree(Tally &t, Sampler &s) {
    // Exact evaluation is limited by the size of the images; words whose
    // predicted degree exceeds the cap are redrawn.
    constexpr long kCap = 600;
    long drawn = 0, evaluated = 0;
    long longest = 0, maxdeg = 0;
    while (evaluated < kSamples) {
        const int n = static_cast<int>(s.integer(3, 5));
        const bool refl = s.coin();
        DefParamA p(n, refl ? random_reflective(s, n) : random_nonreflective(s, n));
        const TMode mode = s.coin() ? TMode::One : TMode::Zero;
        AutWordA w = random_canonical(s, p, mode, 5);
        ++drawn;
        std::array<long, 3> pred;
        try {
            pred = predicted_mdeg(w, p);
        } catch (const std::exception &e) {
            t.check(false, [&] { return "predicted_mdeg " + w.to_string() + " threw " + e.what(); });
            continue;
        }
        if (*std::max_element(pred.begin(), pred.end()) > kCap)
            continue;
        ++evaluated;
        longest = std::max<long>(longest, static_cast<long>(w.letters.size()));
        maxdeg = std::max(maxdeg, *std::max_element(pred.begin(), pred.end()));
        std::array<long, 3> got = mdeg_aut(evaluate_word(w, p));
        t.check(got == pred, [&] {
            return w.to_string() + " on " + p.to_string() + ": mdeg " + str(got) + " predicted " + str(pred);
        });
    }
    t.note(std::to_string(evaluated) + " canonical words evaluated out of " + std::to_string(drawn) +
           " drawn; redrawn when the predicted degree exceeds " + std::to_string(kCap) +
           "; longest evaluated word " + std::to_string(longest) + " letters, largest degree " +
           std::to_string(maxdeg));
}

// ---- 6 ----
void amalgam_uniqueness(Tally &t, Sampler &s) {
    constexpr long kCap = 120;
    struct Entry {
        AutWordA w;
        AlgMapA map;
    };
    long pairs = 0;
    for (int n = 3; n <= 5; ++n) {
        for (bool refl : {false, true}) {
            DefParamA p(n, refl ? random_reflective(s, n) : random_nonreflective(s, n));
            std::vector<Entry> pool;
            for (int tries = 0; pool.size() < 40 && tries < 2000; ++tries) {
                // small integer coefficients make collisions plausible
                AutWordA w{{}, TMode::One};
                const long len = s.integer(1, 4);
                for (long j = 0; j < len; ++j) {
                    const long kind = s.integer(0, 2);
                    const unsigned deg = static_cast<unsigned>(s.integer(0, 2));
                    const CycScalar c(s.integer(1, 2) * (s.coin() ? 1 : -1));
                    if (kind == 0)
                        w.letters.push_back(G::theta(c));
                    else if (kind == 1)
                        w.letters.push_back(G::phi(MPoly::var(Var::Y, deg) * c));
                    else
                        w.letters.push_back(refl ? G::omega() : G::psi(MPoly::var(Var::X, deg) * c));
                }
                w = word_normal_form(w, p);
                if (std::any_of(pool.begin(), pool.end(), [&](const Entry &e) { return e.w == w; }))
                    continue;
                auto d = predicted_mdeg(w, p);
                if (*std::max_element(d.begin(), d.end()) > kCap)
                    continue;
                pool.push_back({w, evaluate_word(w, p)});
            }
            const long want = n == 5 && refl ? 500 - pairs : 84;
            for (long k = 0; k < want; ++k) {
                const long a = s.integer(0, static_cast<long>(pool.size()) - 1);
                long b = s.integer(0, static_cast<long>(pool.size()) - 2);
                if (b >= a)
                    ++b;
                ++pairs;
                t.check(!(pool[a].map == pool[b].map), [&] {
                    return pool[a].w.to_string() + " and " + pool[b].w.to_string() + " agree on " + p.to_string();
                });
            }
        }
    }
    t.note(std::to_string(pairs) + " random pairs of distinct canonical words, n = 3..5, both shapes");
}

// ---- 7 ----
void iso_deciders_a(Tally &t) {
    ScopedCyclotomicIndex k4(4);
    const CycScalar i = CycScalar::imag();
    auto neg = [](const MPoly &P, int n) {
        return P.substitute(Var::Z, -Z) * CycScalar(n % 2 ? -1 : 1);
    };
    struct QRow {
        MPoly p1, p2;
    };
    const QRow quant[] = {{Z.pow(3) + Z + 1, Z.pow(3) + Z - 1}, {Z.pow(3) + Z + 1, Z.pow(3) + Z + 1},
                          {Z.pow(3) + 1, Z.pow(3) + 2},         {Z.pow(4) + Z * Z, Z.pow(4) + Z * Z},
                          {Z.pow(4) + Z + 1, Z.pow(4) - Z + 1}, {Z * Z + 1, Z * Z + 1},
                          {Z.pow(5) + Z * Z, Z.pow(5) - Z * Z}, {Z.pow(3) + 2 * Z, Z.pow(3) + Z}};
    for (const QRow &r : quant) {
        DefParamA a(r.p1), b(r.p2);
        const bool expect = r.p1 == r.p2 || neg(r.p1, a.n()) == r.p2;
        auto w = decide_iso_quant_a(a, b);
        t.check(w.has_value() == expect, [&] { return "quantized " + a.to_string() + " vs " + b.to_string(); });
        if (w)
            t.check(verify_hom_a(*w).ok && w->source == a && w->target == b,
                    [&] { return "quantized witness " + a.to_string(); });
    }
    const QRow poisson[] = {{Z.pow(3) + Z + 1, Z.pow(3) + Z - 1}, {Z.pow(3) + 1, Z.pow(3) + 2},
                            {Z.pow(4) + Z, Z.pow(4) - Z},         {Z * Z + 3, Z * Z + 3},
                            {Z.pow(5) + Z.pow(3) + 1, Z.pow(5) + Z.pow(3) - 1}, {Z.pow(4) + 1, Z.pow(4) + 2}};
    for (const QRow &r : poisson) {
        DefParamA a(r.p1), b(r.p2);
        const bool expect = r.p1 == r.p2 || neg(r.p1, a.n()) == r.p2;
        auto w = decide_iso_def_a(a, b, IsoKindA::Poisson);
        t.check(w.has_value() == expect, [&] { return "Poisson " + a.to_string() + " vs " + b.to_string(); });
        if (w)
            t.check(verify_hom_a(*w).ok && is_poisson_map_a(*w), [&] { return "Poisson witness " + a.to_string(); });
    }
    struct ARow {
        MPoly p1, p2;
        CycScalar alpha;
    };
    const ARow affine[] = {{Z * Z + 1, Z * Z + CycScalar(1, 4), 2},   {Z * Z + 1, Z * Z + CycScalar(1, 4), 3},
                           {Z.pow(3) + Z, Z.pow(3) + CycScalar(1, 4) * Z, 2}, {Z.pow(3) + Z, Z.pow(3) - Z, i},
                           {Z.pow(4) + 1, Z.pow(4) + 1, i},           {Z.pow(4) + 1, Z.pow(4) + 2, 2}};
    for (const ARow &r : affine) {
        DefParamA a(r.p1), b(r.p2);
        const int n = a.n();
        const bool expect = r.p1.substitute(Var::Z, r.alpha * Z) * r.alpha.pow(-n) == r.p2;
        auto w = decide_iso_def_a(a, b, IsoKindA::Affine, r.alpha);
        t.check(w.has_value() == expect, [&] {
            return "affine alpha=" + r.alpha.to_string() + " " + a.to_string() + " vs " + b.to_string();
        });
        if (w)
            t.check(verify_hom_a(*w).ok && is_poisson_map_a(*w) == r.alpha.is_one(),
                    [&] { return "affine witness " + a.to_string(); });
    }
    t.note("20 hand-constructed pairs: 8 quantized, 6 Poisson, 6 affine");
}

// ---- 8 ----
void levy_polynomial(Tally &t) {
    long count = 0;
    for (int deg = 3; deg <= 5; ++deg) {
        std::vector<int> c(static_cast<std::size_t>(deg), -2);
        for (;;) {
            MPoly Q = MPoly::var(Var::X, static_cast<unsigned>(deg));
            for (int j = 0; j < deg; ++j)
                Q += MPoly::var(Var::X, static_cast<unsigned>(j)) * CycScalar(c[static_cast<std::size_t>(j)]);
            DefParamD p(deg + 1, Q, 0);
            ++count;
            try {
                LevyP lp = solve_p_levy(p);
                t.check(levy_residual(p, lp.P).is_zero() && lp.P.degree(Var::U) == static_cast<unsigned>(deg - 1),
                        [&] { return "Levy residual for " + p.to_string(); });
            } catch (const std::exception &e) {
                t.check(false, [&] { return "Levy solve for " + p.to_string() + " threw " + e.what(); });
            }
            std::size_t k = 0;
            while (k < c.size() && c[k] == 2)
                c[k++] = -2;
            if (k == c.size())
                break;
            ++c[k];
        }
    }
    const MPoly U = MPoly::var(Var::U);
    t.check(solve_p_levy(DefParamD(4, X.pow(3), 0)).P == 3 * U * U + 8 * U + 8, [] { return "Q = x^3"; });
    t.check(solve_p_levy(DefParamD(4, X.pow(3) + X, 0)).P == 3 * U * U + 8 * U + 9, [] { return "Q = x^3 + x"; });
    t.check(solve_p_levy(DefParamD(5, X.pow(4), 0)).P == 4 * U.pow(3) + 20 * U * U + 56 * U + 56,
            [] { return "Q = x^4"; });
    t.note(std::to_string(count) + " monic Q of degree 3..5 with coefficients in {-2..2}");
}

// ---- 9 ----
void d_quantization(Tally &t, Sampler &s) {
    const FlavorD Qf = FlavorD::Quantized;
    for (int trial = 0; trial < 20; ++trial) {
        DefParamD p = random_param_d(s, 4);
        auto ctx = [&](const char *w) { return std::string(w) + " on " + p.to_string(); };
        t.check(verify_iso_d(make_sigma(p, Qf)).ok(), [&] { return ctx("Sigma relations"); });
        t.check(verify_iso_d(make_T(p, Qf)).ok(), [&] { return ctx("T relations"); });
        t.check(verify_iso_d(make_T(p, Qf, TDirection::Inverse)).ok(), [&] { return ctx("T^-1 relations"); });
        S3Report r = s3_check(p, Qf);
        for (const auto &[label, ok] : r.checks)
            t.check(ok, [&, l = label] { return ctx(l.c_str()); });
    }
    for (int n : {5, 6}) {
        DefParamD p = random_param_d(s, n);
        t.check(verify_iso_d(make_sigma(p, Qf)).ok(), [&] { return "Sigma relations on " + p.to_string(); });
        t.check(s3_check(p, Qf).ok, [&] { return "Sigma^2 on " + p.to_string(); });
    }
    for (int trial = 0; trial < kSamples; ++trial) {
        DefParamD p = random_param_d(s, static_cast<int>(s.integer(4, 6)));
        auto r = [&] { return ElemDQuant(p, s.poly({Var::X, Var::Y, Var::Z}, 3, 3, true)); };
        ElemDQuant a = r(), b = r(), c = r();
        t.check((a * b) * c == a * (b * c), [&] { return "associativity on " + p.to_string(); });
    }
}

// ---- 10 ----
void d_classification(Tally &t, Sampler &s) {
    ScopedCyclotomicIndex k4(4);
    const CycScalar i = CycScalar::imag();
    auto cubic = [](const CycScalar &a, const CycScalar &b, const CycScalar &c, const CycScalar &g) {
        return DefParamD(4, X.pow(3) + a * X * X + b * X + MPoly(c), g);
    };
    auto names = [](const AutGroupD &g) {
        std::string s;
        for (const IsoD &e : g.generators)
            s += (s.empty() ? "" : ",") + e.name;
        return s;
    };
    auto gens_ok = [&](const AutGroupD &g, bool poisson) {
        for (const IsoD &e : g.generators) {
            IsoDCertificate c = verify_iso_d(e);
            if (!(e.source == e.target) || !c.homomorphism || (poisson && c.poisson == false))
                return false;
        }
        return true;
    };
    struct Row {
        DefParamD p;
        AutKindD kind;
        const char *structure;
        const char *gens; // nullptr: not checked
    };
    const CycScalar a(2), g(1), q4 = a * a / CycScalar(4);
    const std::vector<Row> rows = {
        // quantized table
        {cubic(a, q4, 7, 0), AutKindD::Quantized, "S3", "Sigma,T"},
        {cubic(a, q4 - i * g, 7, g), AutKindD::Quantized, "Z/2", "Sigma.T"},
        {cubic(a, q4 + i * g, 7, g), AutKindD::Quantized, "Z/2", "Sigma.T^-1"},
        {cubic(a, 5, 7, 0), AutKindD::Quantized, "Z/2", "Sigma"},
        {cubic(a, 5, 7, g), AutKindD::Quantized, "trivial", ""},
        {DefParamD(5, X.pow(4) + X, 3), AutKindD::Quantized, "trivial", ""},
        {DefParamD(6, X.pow(5) + X * X, 0), AutKindD::Quantized, "Z/2", "Sigma"},
        // Poisson
        {DefParamD(4, X.pow(3), 0), AutKindD::Poisson, "S3", "sigma,tau"},
        {cubic(a, q4 - i * g, 7, g), AutKindD::Poisson, "Z/2", "sigma.tau"},
        {cubic(a, q4 + i * g, 7, g), AutKindD::Poisson, "Z/2", "sigma.tau^-1"},
        {DefParamD(5, X.pow(4) + X, 3), AutKindD::Poisson, "trivial", ""},
        {DefParamD(5, X.pow(4) + X, 0), AutKindD::Poisson, "Z/2", "sigma"},
        // affine
        {DefParamD(5, X.pow(4) + X.pow(3) + 1, 2), AutKindD::Affine, "Z/2", "sigma_z"},
        {DefParamD(6, X.pow(5) + X.pow(4) + 1, 1), AutKindD::Affine, "Z/2", "sigma_z"},
        {DefParamD(5, X.pow(4) + X.pow(3) + 1, 0), AutKindD::Affine, "(Z/2)^2", nullptr},
        {DefParamD(6, X.pow(5) + X.pow(4) + 1, 0), AutKindD::Affine, "(Z/2)^2", nullptr},
        {DefParamD(5, X.pow(4) + X * X, 1), AutKindD::Affine, "Z/2", nullptr},
        {DefParamD(6, X.pow(5) + X, 1), AutKindD::Affine, "Z/4", nullptr},
        {DefParamD(6, X.pow(5) + X.pow(3), 0), AutKindD::Affine, "Z/2 x Z/4", nullptr},
        {cubic(a, q4, 7, 0), AutKindD::Affine, "S3 x Z/2", nullptr},
        {cubic(a, q4 - i * g, 7, g), AutKindD::Affine, "(Z/2)^2", nullptr},
        {cubic(a, 5, 7, g), AutKindD::Affine, "Z/2", "sigma_z"},
    };
    for (const Row &r : rows) {
        AutGroupD got = classify_aut_d(r.p, r.kind);
        t.check(got.complete && got.structure == r.structure && (!r.gens || names(got) == r.gens) &&
                    gens_ok(got, r.kind != AutKindD::Affine),
                [&] { return r.p.to_string() + ": got " + got.to_string() + ", expected " + r.structure; });
    }
    // undeformed: C^* x Z/2, containing sigma_y, sigma_z and sigma
    for (int n = 4; n <= 6; ++n) {
        DefParamD p(n, X.pow(n - 1), 0);
        AutGroupD got = classify_aut_d(p, AutKindD::Affine);
        bool signs = true;
        std::set<std::string> seen;
        for (auto [lam, sg] : {std::pair{-1, 1}, std::pair{-1, -1}, std::pair{1, -1}}) {
            IsoD e = make_scaling(p, lam, sg, ScalingFamily::P);
            signs &= e.target == p && verify_iso_d(e).homomorphism;
            seen.insert(e.images[1].to_string() + "," + e.images[2].to_string());
        }
        signs &= seen.size() == 3 && seen.count("-y,z") && seen.count("y,-z") && seen.count("-y,-z");
        t.check(got.order == 0 && got.structure.find("C^* x Z/2") != std::string::npos && signs,
                [&] { return "undeformed n=" + std::to_string(n) + ": " + got.to_string(); });
    }
    // Iso(D_n) and PIso(D_n) give the same abstract groups
    std::vector<DefParamD> ps = {cubic(0, 0, 0, 0), cubic(a, q4, 3, 0), cubic(4, 4 - 2 * i, 1, 2),
                                 cubic(4, 4 + 2 * i, 1, 2), cubic(1, 1, 1, 0), DefParamD(5, X.pow(4), 0)};
    while (ps.size() < 20)
        ps.push_back(random_param_d(s, static_cast<int>(s.integer(4, 6))));
    for (const DefParamD &p : ps) {
        AutGroupD q = classify_aut_d(p, AutKindD::Quantized), po = classify_aut_d(p, AutKindD::Poisson);
        t.check(q.structure == po.structure && q.order == po.order,
                [&] { return p.to_string() + ": quantized " + q.to_string() + " vs Poisson " + po.to_string(); });
    }
}

// ---- 11 ----
void poisson_filter(Tally &t, Sampler &s) {
    ScopedCyclotomicIndex k4(4);
    const CycScalar i = CycScalar::imag();
    auto A = [](const DefParamA &p, std::vector<AutGenA> l) { return word(p, TMode::Zero, std::move(l)); };
    for (int n = 2; n <= 6; ++n) {
        DefParamA pn(n, MPoly::var(Var::Z, n));
        for (long nu : {2L, -2L, 3L}) {
            t.check(!is_poisson_map_a(A(pn, {G::rescale(nu)})), [&] { return "R_nu accepted"; });
            t.check(!is_poisson_map_a(A(pn, {G::rescale(nu), G::swap()})), [&] { return "R_nu V accepted"; });
            t.check(!is_poisson_map_a(A(pn, {G::theta(s.nonzero_scalar()), G::rescale(nu),
                                              G::delta(s.poly({Var::Y}, 2, 2, true))})),
                    [&] { return "Theta R_nu Delta accepted"; });
        }
        t.check(!is_poisson_map_a(A(pn, {G::swap()})), [&] { return "V accepted"; });
        t.check(is_poisson_map_a(A(pn, {G::rescale(1)})), [&] { return "R_1 rejected"; });
        t.check(is_poisson_map_a(A(pn, {G::rescale(-1), G::swap()})), [&] { return "R_-1 V rejected"; });
        DefParamA p(n, s.monic(Var::Z, n, true));
        for (int k = 0; k < 8; ++k) {
            std::vector<AutGenA> l{G::theta(s.nonzero_scalar()), G::delta(s.poly({Var::Y}, 1, 2)),
                                   G::nabla(s.poly({Var::X}, 1, 2))};
            if (p.reflective())
                l.push_back(G::omega());
            std::shuffle(l.begin(), l.end(), s.engine());
            t.check(is_poisson_map_a(A(p, l)), [&] { return "G0 word rejected on " + p.to_string(); });
        }
        t.check(is_poisson_map_a(tau_iso(p)), [&] { return "tau rejected on " + p.to_string(); });
    }
    const MPoly sym[] = {Z.pow(5) + 2 * Z, Z.pow(5) + Z.pow(3) - Z};
    const long d[] = {4, 2};
    for (int k = 0; k < 2; ++k) {
        DefParamA p(sym[k]);
        std::vector<CycScalar> mus{CycScalar(-1)};
        if (d[k] == 4)
            mus.insert(mus.end(), {i, -i});
        for (const auto &mu : mus)
            t.check(!is_poisson_map_a(A(p, {G::symmetry(mu, d[k])})), [&] { return "S_mu accepted"; });
        t.check(is_poisson_map_a(A(p, {G::symmetry(1, d[k])})), [&] { return "S_1 rejected"; });
    }
    // type D
    for (int trial = 0; trial < 30; ++trial) {
        const int n = static_cast<int>(s.integer(4, 6));
        DefParamD p = random_param_d(s, n);
        auto ctx = [&](const char *w) { return std::string(w) + " on " + p.to_string(); };
        t.check(verify_iso_d(make_iso_d(p, p, FlavorD::Deformed, {X, Y, -Z})).poisson == false,
                [&] { return ctx("sigma_z accepted"); });
        DefParamD p_neg(n, p.Q(), -p.gamma());
        t.check(verify_iso_d(make_iso_d(p, p_neg, FlavorD::Deformed, {X, -Y, Z})).poisson == false,
                [&] { return ctx("sigma_y accepted"); });
        t.check(verify_iso_d(make_sigma(p, FlavorD::Deformed)).ok(), [&] { return ctx("sigma rejected"); });
        CycScalar lam = s.nonzero_scalar();
        if (lam.is_one())
            lam = 2;
        const ScalingFamily fam = p.gamma().is_zero() ? ScalingFamily::P : ScalingFamily::R;
        for (int sg : {1, -1}) {
            IsoDCertificate c = verify_iso_d(make_scaling(p, lam, sg, fam));
            t.check(c.homomorphism && c.poisson == false, [&] { return ctx("R/P with lambda != 1 accepted"); });
        }
        IsoDCertificate one = verify_iso_d(make_scaling(p, 1, 1, fam));
        t.check(one.ok(), [&] { return ctx("R/P at lambda = 1 rejected"); });
        if (n == 4) {
            IsoD f = identity_d(p, FlavorD::Deformed);
            for (int k = 0; k < 4; ++k)
                f = compose_iso_d(s.coin() ? make_T(f.target, FlavorD::Deformed) : make_sigma(f.target, FlavorD::Deformed), f);
            t.check(verify_iso_d(f).ok(), [&] { return ctx("sigma/tau word rejected"); });
        }
    }
}

const std::vector<SuiteInfo> kCatalog = {
    {"poisson-axioms", "Poisson axioms and generator brackets"},
    {"semiclassical-limit", "semiclassical limit equals the Poisson bracket"},
    {"generator-formulas", "exp(ad) reproduces the closed generator images"},
    {"lemma-relations", "relations among the type A generators, affine ones included"},
    {"multidegree", "multidegree of canonical words"},
    {"amalgam-uniqueness", "distinct canonical words give distinct maps"},
    {"iso-deciders-a", "type A isomorphism deciders"},
    {"levy-polynomial", "Levy polynomial grid"},
    {"d-quantization", "type D quantization: Sigma, T, S3 relations, associativity"},
    {"d-classification", "type D automorphism classification"},
    {"poisson-filter", "Poisson filter on affine maps"},
};

} // namespace

std::string SuiteResult::summary_line(int number) const {
    std::ostringstream os;
    os << "[" << (passed ? "PASS" : "FAIL") << "] " << number << ". " << id << ": " << title << " ("
       << checks << " checks, " << failures << " failures, " << static_cast<long>(seconds * 1000) / 1000.0
       << " s)";
    return os.str();
}

const std::vector<SuiteInfo> &suite_catalog() { return kCatalog; }

SuiteResult run_suite(const std::string &id, std::uint64_t seed) {
    auto it = std::find_if(kCatalog.begin(), kCatalog.end(), [&](const SuiteInfo &s) { return s.id == id; });
    if (it == kCatalog.end())
        throw UsageError("unknown suite '" + id + "'");
    const std::size_t index = static_cast<std::size_t>(it - kCatalog.begin());
    SuiteResult r;
    r.id = it->id;
    r.title = it->title;
    Tally t;
    Sampler s(seed + index);
    const auto start = std::chrono::steady_clock::now();
    ScopedCyclotomicIndex k4(4);
    t.guarded(id, [&] {
        switch (index) {
        case 0: poisson_axioms(t, s); break;
        case 1: semiclassical_limit(t, s); break;
        case 2: generator_formulas(t, s); break;
        case 3: lemma_relations(t, s); break;
        case 4: multidegree(t, s); break;
        case 5: amalgam_uniqueness(t, s); break;
        case 6: iso_deciders_a(t); break;
        case 7: levy_polynomial(t); break;
        case 8: d_quantization(t, s); break;
        case 9: d_classification(t, s); break;
        default: poisson_filter(t, s); break;
        }
    });
    t.fill(r);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

} // namespace kleinian
