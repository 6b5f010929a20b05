#include "doctest.h"
#include "kleinian/aut_type_a.hpp"
#include "kleinian/errors.hpp"
#include "kleinian/random.hpp"

using namespace kleinian;

namespace {
const MPoly X = MPoly::var(Var::X), Y = MPoly::var(Var::Y), Z = MPoly::var(Var::Z),
            T = MPoly::var(Var::T);
const TMode kModes[] = {TMode::Generic, TMode::One, TMode::Zero};

using G = AutGenA;

AlgMapA word(const DefParamA &p, TMode mode, std::vector<AutGenA> letters) {
    return evaluate_word(AutWordA{std::move(letters), mode}, p);
}

// Monic P(z) with only powers of parity n, no z^(n-1) term.
MPoly random_reflective(Sampler &s, int n) {
    MPoly p = MPoly::var(Var::Z, n);
    for (int j = n - 2; j >= 0; j -= 2)
        p += MPoly::var(Var::Z, j) * CycScalar(s.integer(-2, 2));
    return p;
}

// Every normalized P of degree 2 is reflective.
MPoly random_nonreflective(Sampler &s, int n) {
    if (n == 2)
        return random_reflective(s, n);
    for (;;) {
        MPoly p = s.monic(Var::Z, n, true);
        if (!DefParamA(n, p).reflective())
            return p;
    }
}

MPoly random_univariate(Sampler &s, Var v, unsigned maxdeg) {
    return s.poly({v}, maxdeg, 3, true);
}

GwaElem gwa(const GwaAlgebra &alg, std::initializer_list<std::pair<int, MPoly>> c) {
    GwaElem::Components comps;
    for (const auto &[m, h] : c)
        comps[m] += h;
    return GwaElem(alg, comps);
}
} // namespace

TEST_SUITE("aut_type_a") {

TEST_CASE("generator examples") {
    DefParamA p(Z * Z * Z + Z + 1);
    GwaAlgebra a1{p, TMode::One};
    AlgMapA th = gen_to_map(G::theta(2), p, TMode::One);
    CHECK(th.images[0] == gwa(a1, {{1, MPoly(2)}}));
    CHECK(th.images[1] == gwa(a1, {{-1, MPoly(CycScalar(1, 2))}}));
    CHECK(th.images[2] == GwaElem::gen(a1, Var::Z));

    DefParamA q(Z * Z + 1);
    GwaAlgebra b1{q, TMode::One};
    AlgMapA om = gen_to_map(G::omega(), q, TMode::One);
    CHECK(om.images[0] == GwaElem::gen(b1, Var::Y));
    CHECK(om.images[1] == GwaElem::gen(b1, Var::X));
    CHECK(om.images[2] == GwaElem(b1, 1 - Z));

    CHECK_THROWS_AS(gen_to_map(G::omega(), p, TMode::One), InvalidGenerator);
    CHECK_THROWS_AS(gen_to_map(G::theta(0), p, TMode::One), InvalidGenerator);
    CHECK_THROWS_AS(gen_to_map(G::swap(), p, TMode::One), InvalidGenerator);
    CHECK_THROWS_AS(gen_to_map(G::rescale(2), p, TMode::Zero), InvalidGenerator);
    CHECK_THROWS_AS(gen_to_map(G::phi(X), p, TMode::One), InvalidGenerator);
}

TEST_CASE("exp(ad) worked example") {
    DefParamA p(Z * Z);
    GwaAlgebra alg{p, TMode::Generic};
    const CycScalar lambda(3, 2);
    AlgMapA m = exp_ad_a(MPoly(lambda), p, TMode::Generic);
    CHECK(m.images[0] == gwa(alg, {{1, MPoly(1)},
                                   {0, Z * (2 * lambda) - T * lambda},
                                   {-1, MPoly(lambda * lambda)}}));
    CHECK(m.images[1] == GwaElem::gen(alg, Var::Y));
    CHECK(m.images[2] == gwa(alg, {{0, Z}, {-1, MPoly(lambda)}}));
    CHECK(exp_ad_a(MPoly(), p, TMode::Generic) == identity_map(p, TMode::Generic));
}

TEST_CASE("apply and compose examples") {
    DefParamA p(Z * Z * Z * Z + 3 * Z * Z - 1);
    GwaAlgebra a0{p, TMode::Zero};
    AlgMapA th = gen_to_map(G::theta(2), p, TMode::Zero);
    GwaElem xy = GwaElem::gen(a0, Var::X) * GwaElem::gen(a0, Var::Y);
    CHECK(apply_map(th, xy) == GwaElem(a0, p.P()));
    CHECK(apply_map(gen_to_map(G::omega(), p, TMode::Zero), GwaElem::gen(a0, Var::Z)) ==
          GwaElem(a0, -Z));
    CHECK(apply_map(identity_map(p, TMode::Zero), xy) == xy);

    for (TMode mode : kModes) {
        for (int n : {3, 4}) {
            DefParamA r(n == 3 ? Z * Z * Z - 2 * Z : Z * Z * Z * Z + Z * Z);
            AlgMapA om = gen_to_map(G::omega(), r, mode);
            CHECK(compose_maps(om, om) == gen_to_map(G::theta(n % 2 ? -1 : 1), r, mode));
        }
        CHECK(compose_maps(gen_to_map(G::theta(2), p, mode), gen_to_map(G::theta(5), p, mode)) ==
              gen_to_map(G::theta(10), p, mode));
        AlgMapA f = gen_to_map(G::phi(Y + 1), p, mode);
        CHECK(compose_maps(identity_map(p, mode), f) == f);
    }
}

TEST_CASE("homomorphism check examples") {
    DefParamA p(Z * Z);
    for (TMode mode : kModes) {
        CHECK(verify_hom_a(gen_to_map(G::phi_lm(CycScalar(2, 3), 1), p, mode)).ok);
        CHECK(verify_hom_a(identity_map(p, mode)).ok);
    }
    GwaAlgebra a1{p, TMode::One};
    AlgMapA bad = make_map(p, p, TMode::One, GwaElem::gen(a1, Var::X), GwaElem::gen(a1, Var::Y),
                           GwaElem(a1, Z + 1));
    HomCertificate cert = verify_hom_a(bad);
    CHECK_FALSE(cert.ok);
    CHECK(cert.residuals.size() == 4);
}

TEST_CASE("Poisson filter examples") {
    for (int n : {2, 3, 4, 5}) {
        DefParamA p(MPoly::var(Var::Z, n));
        CHECK_FALSE(is_poisson_map_a(gen_to_map(G::rescale(2), p, TMode::Zero)));
        CHECK(is_poisson_map_a(gen_to_map(G::rescale(1), p, TMode::Zero)));
        CHECK(is_poisson_map_a(gen_to_map(G::omega(), p, TMode::Zero)));
        CHECK_FALSE(is_poisson_map_a(gen_to_map(G::swap(), p, TMode::Zero)));
        for (long nu : {2L, -2L, 3L}) {
            AlgMapA rv = compose_maps(gen_to_map(G::rescale(nu), p, TMode::Zero),
                                      gen_to_map(G::swap(), p, TMode::Zero));
            CHECK(verify_hom_a(rv).ok);
            CHECK_FALSE(is_poisson_map_a(rv));
        }
        AlgMapA rv = compose_maps(gen_to_map(G::rescale(-1), p, TMode::Zero),
                                  gen_to_map(G::swap(), p, TMode::Zero));
        CHECK(rv == gen_to_map(G::omega(), p, TMode::Zero));
        CHECK(is_poisson_map_a(rv));
    }
    DefParamA q(Z * Z * Z * Z * Z + Z);
    CHECK_FALSE(is_poisson_map_a(gen_to_map(G::symmetry(CycScalar::imag(), 4), q, TMode::Zero)));
    CHECK_FALSE(is_poisson_map_a(gen_to_map(G::symmetry(-1, 4), q, TMode::Zero)));
    CHECK_THROWS_AS(gen_to_map(G::symmetry(CycScalar::imag(), 3), q, TMode::Zero), InvalidGenerator);
    CHECK_THROWS_AS(gen_to_map(G::symmetry(2, 4), q, TMode::Zero), InvalidGenerator);
}

TEST_CASE("every generator is a homomorphism") {
    Sampler s(11);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = static_cast<int>(s.integer(2, 5));
        const bool refl = s.coin();
        DefParamA p(n, refl ? random_reflective(s, n) : random_nonreflective(s, n));
        std::vector<AutGenA> gens{G::theta(s.nonzero_scalar()),
                                  G::phi(random_univariate(s, Var::Y, 2)),
                                  G::psi(random_univariate(s, Var::X, 2)),
                                  G::phi_lm(s.scalar(), s.integer(0, 3)),
                                  G::psi_lm(s.scalar(), s.integer(0, 3))};
        if (p.reflective())
            gens.push_back(G::omega());
        for (TMode mode : kModes)
            for (const auto &g : gens)
                CHECK_MESSAGE(verify_hom_a(gen_to_map(g, p, mode)).ok, g.to_string(), " on ",
                              p.to_string(), " ", tmode_name(mode));
        std::vector<AutGenA> affine{G::swap(), G::delta(random_univariate(s, Var::Y, 2)),
                                    G::nabla(random_univariate(s, Var::X, 2))};
        for (const auto &g : affine)
            CHECK(verify_hom_a(gen_to_map(g, p, TMode::Zero)).ok);
    }
}

TEST_CASE("exp(ad) agrees with the closed formulas") {
    Sampler s(12);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = static_cast<int>(s.integer(2, 5));
        DefParamA p(n, s.monic(Var::Z, n, true));
        const CycScalar lambda = s.scalar();
        const long m = s.integer(0, 3);
        for (TMode mode : kModes) {
            CHECK(gen_to_map(G::phi_lm(lambda, m), p, mode) == closed_phi_lm(lambda, m, p, mode));
            CHECK(gen_to_map(G::psi_lm(lambda, m), p, mode) == closed_psi_lm(lambda, m, p, mode));
        }
    }
}

TEST_CASE("affine triangular maps are the t=0 exponentials") {
    Sampler s(13);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = static_cast<int>(s.integer(2, 5));
        DefParamA p(n, s.monic(Var::Z, n, true));
        MPoly g = random_univariate(s, Var::Y, 2);
        CHECK(gen_to_map(G::delta(g), p, TMode::Zero) == gen_to_map(G::phi(g), p, TMode::Zero));
        MPoly h = g.substitute(Var::Y, X);
        CHECK(gen_to_map(G::nabla(h), p, TMode::Zero) == gen_to_map(G::psi(h), p, TMode::Zero));
        CHECK(is_poisson_map_a(gen_to_map(G::delta(g), p, TMode::Zero)));
        CHECK(is_poisson_map_a(gen_to_map(G::nabla(h), p, TMode::Zero)));
    }
}

TEST_CASE("relations among Theta Phi Psi and Omega") {
    Sampler s(14);
    for (int trial = 0; trial < 24; ++trial) {
        const int n = static_cast<int>(s.integer(2, 5));
        const bool refl = trial % 2 == 0;
        DefParamA p(n, refl ? random_reflective(s, n) : random_nonreflective(s, n));
        const CycScalar nu = s.nonzero_scalar(), mu = s.nonzero_scalar(), lambda = s.scalar();
        const long m = s.integer(1, 3);
        const TMode mode = kModes[trial % 3];
        auto ev = [&](std::vector<AutGenA> l) { return word(p, mode, std::move(l)); };
        CHECK(ev({G::theta(nu), G::theta(mu)}) == ev({G::theta(nu * mu)}));
        CHECK(ev({G::theta(nu), G::psi_lm(lambda, m)}) ==
              ev({G::psi_lm(lambda * nu.pow(m), m), G::theta(nu)}));
        CHECK(ev({G::theta(nu), G::phi_lm(lambda, m)}) ==
              ev({G::phi_lm(lambda * nu.pow(-m), m), G::theta(nu)}));
        if (!refl)
            continue;
        const CycScalar sign(n % 2 ? -1 : 1);
        CHECK(ev({G::omega(), G::omega()}) == ev({G::theta(sign)}));
        CHECK(ev({G::omega(), G::theta(nu)}) == ev({G::theta(nu.inverse()), G::omega()}));
        CHECK(ev({G::theta(sign), G::omega(), G::phi_lm(lambda, m), G::omega()}) ==
              ev({G::psi_lm(lambda, m)}));
    }
}

TEST_CASE("relations among the affine generators") {
    ScopedCyclotomicIndex k4(4);
    Sampler s(15);
    const CycScalar i = CycScalar::imag();
    for (int trial = 0; trial < 12; ++trial) {
        const int n = static_cast<int>(s.integer(2, 5));
        DefParamA p(n, s.monic(Var::Z, n, true));
        const CycScalar nu = s.nonzero_scalar(), mu = s.nonzero_scalar();
        MPoly g = random_univariate(s, Var::Y, 2);
        MPoly h = random_univariate(s, Var::X, 2);
        auto ev = [&](const DefParamA &q, std::vector<AutGenA> l) {
            return word(q, TMode::Zero, std::move(l));
        };
        CHECK(ev(p, {G::swap(), G::swap()}) == identity_map(p, TMode::Zero));
        CHECK(ev(p, {G::theta(nu), G::swap()}) == ev(p, {G::swap(), G::theta(nu.inverse())}));
        CHECK(ev(p, {G::delta(g), G::swap()}) ==
              ev(p, {G::swap(), G::nabla(-g.substitute(Var::Y, X))}));
        CHECK(ev(p, {G::nabla(h), G::swap()}) ==
              ev(p, {G::swap(), G::delta(-h.substitute(Var::X, Y))}));

        DefParamA pn(n, MPoly::var(Var::Z, n));
        CHECK(ev(pn, {G::rescale(nu), G::rescale(mu)}) == ev(pn, {G::rescale(nu * mu)}));
        CHECK(ev(pn, {G::theta(nu), G::rescale(mu)}) == ev(pn, {G::rescale(mu), G::theta(nu)}));
        CHECK(ev(pn, {G::swap(), G::rescale(nu)}) ==
              ev(pn, {G::rescale(nu), G::swap(), G::theta(nu.pow(n))}));
        CHECK(ev(pn, {G::delta(g), G::rescale(nu)}) == ev(pn, {G::rescale(nu), G::delta(g * nu)}));
        const CycScalar c = nu.pow(1 - n);
        MPoly h2 = h.substitute(Var::X, X * nu.pow(-n)) * c;
        CHECK(ev(pn, {G::nabla(h), G::rescale(nu)}) == ev(pn, {G::rescale(nu), G::nabla(h2)}));
    }

    // P = z^i Q(z^d) with d = 4, i = 1 and d = 2, i = 0
    struct Case {
        MPoly P;
        long d;
        long i;
    };
    const Case cases[] = {{Z.pow(5) + 2 * Z, 4, 1}, {Z.pow(4) - 3 * Z * Z + 2, 2, 0},
                          {Z.pow(5) + Z.pow(3) - Z, 2, 1}};
    for (const auto &cs : cases) {
        DefParamA p(cs.P);
        auto ev = [&](std::vector<AutGenA> l) { return word(p, TMode::Zero, std::move(l)); };
        std::vector<CycScalar> roots{CycScalar(1), CycScalar(-1)};
        if (cs.d == 4)
            roots.insert(roots.end(), {i, -i});
        for (const auto &a : roots)
            for (const auto &b : roots) {
                CHECK(ev({G::symmetry(a, cs.d), G::symmetry(b, cs.d)}) ==
                      ev({G::symmetry(a * b, cs.d)}));
            }
        for (int trial = 0; trial < 6; ++trial) {
            const CycScalar nu = s.nonzero_scalar();
            const CycScalar mu = roots[s.integer(0, static_cast<long>(roots.size()) - 1)];
            MPoly g = random_univariate(s, Var::Y, 2);
            MPoly h = random_univariate(s, Var::X, 2);
            CHECK(ev({G::theta(nu), G::symmetry(mu, cs.d)}) ==
                  ev({G::symmetry(mu, cs.d), G::theta(nu)}));
            CHECK(ev({G::swap(), G::symmetry(mu, cs.d)}) ==
                  ev({G::symmetry(mu, cs.d), G::swap(), G::theta(mu.pow(p.n()))}));
            CHECK(ev({G::delta(g), G::symmetry(mu, cs.d)}) ==
                  ev({G::symmetry(mu, cs.d), G::delta(g * mu)}));
            MPoly h2 = h.substitute(Var::X, X * mu.pow(-cs.i)) * mu.pow(1 - cs.i);
            CHECK(ev({G::nabla(h), G::symmetry(mu, cs.d)}) ==
                  ev({G::symmetry(mu, cs.d), G::nabla(h2)}));
        }
    }
}

TEST_CASE("normal form examples") {
    DefParamA p(Z * Z * Z + Z + 1);
    AutWordA w{{G::theta(2), G::phi_lm(1, 1)}, TMode::One};
    AutWordA nf = word_normal_form(w, p);
    REQUIRE(nf.letters.size() == 2);
    CHECK(nf.letters[0] == G::phi(MPoly(CycScalar(1, 2))));
    CHECK(nf.letters[1] == G::theta(2));

    for (int n : {3, 4}) {
        DefParamA r(MPoly::var(Var::Z, n));
        AutWordA oo = word_normal_form(AutWordA{{G::omega(), G::omega()}, TMode::One}, r);
        if (n % 2)
            CHECK(oo.letters == std::vector<AutGenA>{G::theta(-1)});
        else
            CHECK(oo.letters.empty());
    }
    CHECK(word_normal_form(AutWordA{{}, TMode::One}, p).letters.empty());
    CHECK_THROWS_AS(word_normal_form(AutWordA{{G::omega()}, TMode::One}, p), InvalidGenerator);
    CHECK_THROWS_AS(word_normal_form(AutWordA{{G::swap()}, TMode::Zero}, p), InvalidGenerator);
}

TEST_CASE("normal form preserves evaluation") {
    Sampler s(16);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = static_cast<int>(s.integer(2, 4));
        const bool refl = s.coin();
        DefParamA p(n, refl ? random_reflective(s, n) : random_nonreflective(s, n));
        const TMode mode = s.coin() ? TMode::One : TMode::Zero;
        AutWordA w{{}, mode};
        const long len = s.integer(0, 5);
        for (long j = 0; j < len; ++j) {
            switch (s.integer(0, refl ? 4 : 3)) {
            case 0:
                w.letters.push_back(G::theta(s.nonzero_scalar(false)));
                break;
            case 1:
                w.letters.push_back(G::phi(s.poly({Var::Y}, 1, 2)));
                break;
            case 2:
                w.letters.push_back(G::psi(s.poly({Var::X}, 1, 2)));
                break;
            case 3:
                w.letters.push_back(G::phi_lm(s.scalar(false), s.integer(0, 2)));
                break;
            default:
                w.letters.push_back(G::omega());
            }
        }
        AutWordA nf = word_normal_form(w, p);
        CHECK_MESSAGE(evaluate_word(w, p) == evaluate_word(nf, p), w.to_string());
        CHECK(word_normal_form(nf, p) == nf);
    }
}

TEST_CASE("multidegree examples") {
    DefParamA p3(Z * Z * Z + Z + 1);
    AutWordA phi1{{G::phi(Y + 2)}, TMode::One};
    CHECK(predicted_mdeg(phi1, p3) == std::array<long, 3>{15, 3, 6});
    CHECK(mdeg_aut(evaluate_word(phi1, p3)) == std::array<long, 3>{15, 3, 6});
    CHECK(mdeg_aut(identity_map(p3, TMode::One)) == std::array<long, 3>{3, 3, 2});
    CHECK(predicted_mdeg(AutWordA{{}, TMode::One}, p3) == std::array<long, 3>{3, 3, 2});

    AutWordA chain{{G::phi(1), G::psi(2), G::phi(-1)}, TMode::One};
    CHECK(predicted_mdeg(chain, p3) == std::array<long, 3>{24, 12, 12});
    CHECK(mdeg_aut(evaluate_word(chain, p3)) == std::array<long, 3>{24, 12, 12});

    DefParamA p4(Z.pow(4) - Z * Z);
    AutWordA refl{{G::phi(1), G::omega(), G::phi(3)}, TMode::One};
    CHECK(predicted_mdeg(refl, p4) == std::array<long, 3>{36, 12, 12});
    CHECK(mdeg_aut(evaluate_word(refl, p4)) == std::array<long, 3>{36, 12, 12});

    CHECK_THROWS_AS(predicted_mdeg(phi1, DefParamA(Z * Z)), NotApplicable);
    CHECK_THROWS_AS(predicted_mdeg(AutWordA{{G::phi(1), G::phi(Y)}, TMode::One}, p3), ShapeMismatch);
}

TEST_CASE("multidegree of random canonical words") {
    Sampler s(17);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = static_cast<int>(s.integer(3, 4));
        const bool refl = s.coin();
        DefParamA p(n, refl ? random_reflective(s, n) : random_nonreflective(s, n));
        AutWordA w{{}, trial % 2 ? TMode::One : TMode::Zero};
        const long blocks = s.integer(1, 2);
        for (long j = 0; j < blocks; ++j) {
            if (j > 0)
                w.letters.push_back(refl ? G::omega() : G::psi(MPoly(s.nonzero_scalar(false)) + X * CycScalar(s.integer(0, 1))));
            w.letters.push_back(G::phi(MPoly(s.nonzero_scalar(false)) + Y * CycScalar(s.integer(0, 1))));
        }
        if (s.coin())
            w.letters.push_back(G::theta(s.nonzero_scalar(false)));
        AutWordA nf = word_normal_form(w, p);
        CHECK_MESSAGE(predicted_mdeg(nf, p) == mdeg_aut(evaluate_word(nf, p)), nf.to_string());
    }
}

TEST_CASE("distinct canonical words give distinct maps") {
    Sampler s(18);
    DefParamA p(Z * Z * Z + Z + 1);
    std::vector<AutWordA> words;
    for (const MPoly &a : {MPoly(1), MPoly(2), Y})
        for (const MPoly &b : {MPoly(1), X})
            words.push_back(word_normal_form(AutWordA{{G::phi(a), G::psi(b)}, TMode::One}, p));
    words.push_back(word_normal_form(AutWordA{{G::phi(1), G::theta(2)}, TMode::One}, p));
    words.push_back(word_normal_form(AutWordA{{G::phi(1)}, TMode::One}, p));
    for (std::size_t a = 0; a < words.size(); ++a)
        for (std::size_t b = a + 1; b < words.size(); ++b) {
            REQUIRE_FALSE(words[a] == words[b]);
            CHECK_FALSE(evaluate_word(words[a], p) == evaluate_word(words[b], p));
        }
}

TEST_CASE("group descriptor") {
    CHECK(describe_aut_group_a(DefParamA(Z.pow(4))).reflective);
    CHECK(describe_aut_group_a(DefParamA(Z.pow(4))).factor_k == "C^× ⋊ Z/2Z");
    AutGroupDescriptor odd = describe_aut_group_a(DefParamA(Z.pow(3) + Z));
    CHECK(odd.reflective);
    CHECK(odd.factor_k.find("Omega^2 = -1") != std::string::npos);
    AutGroupDescriptor nr = describe_aut_group_a(DefParamA(Z.pow(3) + Z + 1));
    CHECK_FALSE(nr.reflective);
    CHECK(nr.factor_k == "C[x] ⋊ C^×");
    CHECK_THROWS_AS(describe_aut_group_a(DefParamA(Z * Z + 1)), NotApplicable);
}

TEST_CASE("isomorphism deciders") {
    DefParamA a(Z.pow(3) + Z + 1), b(Z.pow(3) + Z - 1);
    auto w = decide_iso_quant_a(a, b);
    REQUIRE(w);
    CHECK(w->target == b);
    CHECK(verify_hom_a(*w).ok);
    CHECK(decide_iso_quant_a(a, a) == identity_map(a, TMode::One));
    CHECK_FALSE(decide_iso_quant_a(DefParamA(Z.pow(3) + 1), DefParamA(Z.pow(3) + 2)));

    DefParamA c(Z * Z + 1), d(Z * Z + CycScalar(1, 4));
    auto r = decide_iso_def_a(c, d, IsoKindA::Affine, CycScalar(2));
    REQUIRE(r);
    CHECK(verify_hom_a(*r).ok);
    CHECK_FALSE(is_poisson_map_a(*r));
    CHECK_FALSE(decide_iso_def_a(c, d, IsoKindA::Affine, CycScalar(3)));
    CHECK_THROWS_AS(decide_iso_def_a(c, d, IsoKindA::Affine, CycScalar(0)), ZeroScalar);

    auto tau = decide_iso_def_a(a, b, IsoKindA::Poisson);
    REQUIRE(tau);
    CHECK(verify_hom_a(*tau).ok);
    CHECK(is_poisson_map_a(*tau));
    CHECK_FALSE(decide_iso_def_a(DefParamA(Z.pow(3) + 1), DefParamA(Z.pow(3) + 2),
                                 IsoKindA::Poisson));
}

}
