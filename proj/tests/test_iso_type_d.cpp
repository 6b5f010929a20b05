#include "doctest.h"
#include "kleinian/errors.hpp"
#include "kleinian/iso_type_d.hpp"
#include "kleinian/random.hpp"

using namespace kleinian;

namespace {
const MPoly X = MPoly::var(Var::X), Y = MPoly::var(Var::Y), Z = MPoly::var(Var::Z);
const CycScalar I = CycScalar::imag();

DefParamD random_param(Sampler &s, int n) {
    return DefParamD(n, s.monic(Var::X, n - 1, false), s.scalar());
}

// x^3 + a x^2 + b x + c
DefParamD cubic(const CycScalar &a, const CycScalar &b, const CycScalar &c, const CycScalar &g) {
    return DefParamD(4, X.pow(3) + a * X * X + b * X + MPoly(c), g);
}

bool same_images(const IsoD &f, const std::array<MPoly, 3> &im) { return f.images == im; }

std::vector<std::string> names(const AutGroupD &g) {
    std::vector<std::string> out;
    for (const IsoD &e : g.generators)
        out.push_back(e.name);
    return out;
}

// A word in sigma and tau applied to p, as a composite map.
IsoD random_word(Sampler &s, const DefParamD &p, int len) {
    IsoD f = identity_d(p, FlavorD::Deformed);
    for (int j = 0; j < len; ++j) {
        IsoD step = s.coin() ? make_sigma(f.target, FlavorD::Deformed) : make_T(f.target, FlavorD::Deformed);
        f = compose_iso_d(step, f);
    }
    return f;
}
} // namespace

TEST_SUITE("iso_type_d") {

TEST_CASE("sigma examples") {
    DefParamD p(5, X.pow(4) + X, 3);
    IsoD s = make_sigma(p, FlavorD::Deformed);
    CHECK(s.target == DefParamD(5, X.pow(4) + X, -3));
    CHECK(same_images(s, {X, -Y, -Z}));
    DefParamD p0(5, X.pow(4) + X, 0);
    CHECK(make_sigma(p0, FlavorD::Quantized).target == p0);
    IsoD ss = compose_iso_d(make_sigma(s.target, FlavorD::Deformed), s);
    CHECK(ss.same_map(identity_d(p, FlavorD::Deformed)));
}

TEST_CASE("T and tau examples") {
    DefParamD p(4, X.pow(3), 0);
    CHECK(make_T(p, FlavorD::Deformed).target == p);
    IsoD t = make_T(DefParamD(4, X.pow(3) + X, 0), FlavorD::Deformed);
    CHECK(t.target == DefParamD(4, X.pow(3) - CycScalar(1, 2) * X, -I / CycScalar(2)));
    const CycScalar h(1, 2);
    CHECK(same_images(t, {-h * X + (I * h) * Y, (3 * I * h) * X - h * Y, Z}));
    // quantized constants carry the extra 1
    IsoD tq = make_T(p, FlavorD::Quantized);
    CHECK(same_images(tq, {-h * X + (I * h) * Y - 1, (3 * I * h) * X - h * Y + MPoly(I), Z}));
    CHECK_THROWS_AS(make_T(DefParamD(5, X.pow(4), 0), FlavorD::Deformed), NotApplicable);
    {
        ScopedCyclotomicIndex k3(3);
        CHECK_THROWS_AS(make_T(DefParamD(4, X.pow(3), 0), FlavorD::Deformed), NotApplicable);
    }
}

TEST_CASE("T parameter rule on a hand example") {
    // a = 2, b = 3, c = 5, gamma = 1:
    // b' = (12 - 12 - 12i)/8, c' = 5 + (8 - 24 - 8i)/16, gamma' = (i/8)(4 - 12 + 4i)
    DefParamD p = cubic(2, 3, 5, 1);
    DefParamD q = t_target(p);
    CHECK(q == cubic(2, CycScalar(-3, 2) * I, CycScalar(4) - I / CycScalar(2),
                     CycScalar(-1, 2) - I));
}

TEST_CASE("T inverse undoes T") {
    Sampler s(31);
    for (int trial = 0; trial < 10; ++trial) {
        DefParamD p = random_param(s, 4);
        for (FlavorD fl : {FlavorD::Deformed, FlavorD::Quantized}) {
            IsoD t = make_T(p, fl);
            IsoD ti = make_T(t.target, fl, TDirection::Inverse);
            CHECK(ti.target == p);
            CHECK(compose_iso_d(ti, t).same_map(identity_d(p, fl)));
        }
    }
}

TEST_CASE("scaling examples") {
    IsoD r = make_scaling(DefParamD(4, X.pow(3), 2), I, 1, ScalingFamily::R);
    CHECK(r.target == DefParamD(4, X.pow(3), 2));
    CHECK(same_images(r, {-X, -Y, (-I) * Z}));
    IsoD p = make_scaling(DefParamD(4, X.pow(3), 0), 1, -1, ScalingFamily::P);
    CHECK(p.same_map(make_sigma(DefParamD(4, X.pow(3), 0), FlavorD::Deformed)));
    CHECK(make_scaling(DefParamD(5, X.pow(4), 2), 1, -1, ScalingFamily::R).images ==
          std::array<MPoly, 3>{X, -Y, -Z});
    CHECK_THROWS_AS(make_scaling(DefParamD(4, X.pow(3), 2), 0, 1, ScalingFamily::R), ZeroScalar);
    CHECK_THROWS_AS(make_scaling(DefParamD(4, X.pow(3), 0), 2, 1, ScalingFamily::R), FamilyMismatch);
    CHECK_THROWS_AS(make_scaling(DefParamD(4, X.pow(3), 1), 2, 1, ScalingFamily::P), FamilyMismatch);
    // Q'(x) = lambda^-6 Q(lambda^2 x), gamma' = gamma / mu
    IsoD r2 = make_scaling(DefParamD(4, X.pow(3) + X + 1, 3), 2, -1, ScalingFamily::R);
    CHECK(r2.target ==
          DefParamD(4, X.pow(3) + CycScalar(1, 16) * X + MPoly(CycScalar(1, 64)), CycScalar(-3, 16)));
}

TEST_CASE("verification examples") {
    DefParamD p(4, X.pow(3) + X, 2);
    IsoDCertificate c = verify_iso_d(make_sigma(p, FlavorD::Deformed));
    CHECK(c.homomorphism);
    CHECK(c.poisson == true);
    IsoD sz = make_iso_d(p, p, FlavorD::Deformed, {X, Y, -Z});
    IsoDCertificate cz = verify_iso_d(sz);
    CHECK(cz.homomorphism);
    CHECK(cz.poisson == false);
    CHECK(verify_iso_d(make_T(p, FlavorD::Deformed)).ok());
    CHECK(verify_iso_d(make_T(p, FlavorD::Quantized)).ok());
    CHECK_FALSE(verify_iso_d(make_T(p, FlavorD::Quantized)).poisson.has_value());
    // the wrong target is caught
    IsoD bad = make_iso_d(p, DefParamD(4, X.pow(3) + X, 3), FlavorD::Deformed, {X, Y, Z});
    CHECK_FALSE(verify_iso_d(bad).homomorphism);
    IsoD badq = make_iso_d(p, p, FlavorD::Quantized, {X, -Y, -Z});
    CHECK_FALSE(verify_iso_d(badq).homomorphism);
}

TEST_CASE("constructors give verified maps") {
    Sampler s(32);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = static_cast<int>(s.integer(4, 6));
        DefParamD p = random_param(s, n);
        for (FlavorD fl : {FlavorD::Deformed, FlavorD::Quantized}) {
            CHECK(verify_iso_d(make_sigma(p, fl)).ok());
            if (n == 4) {
                CHECK(verify_iso_d(make_T(p, fl)).ok());
                CHECK(verify_iso_d(make_T(p, fl, TDirection::Inverse)).ok());
            }
        }
        CycScalar lambda = s.nonzero_scalar();
        const int sign = s.coin() ? 1 : -1;
        ScalingFamily fam = p.gamma().is_zero() ? ScalingFamily::P : ScalingFamily::R;
        IsoDCertificate c = verify_iso_d(make_scaling(p, lambda, sign, fam));
        CHECK(c.homomorphism);
        CHECK(c.poisson == (lambda.is_one()));
    }
}

TEST_CASE("maps are multiplicative") {
    Sampler s(33);
    for (int trial = 0; trial < 20; ++trial) {
        DefParamD p = random_param(s, 4);
        IsoD t = make_T(p, FlavorD::Quantized);
        auto r = [&] { return ElemDQuant(p, s.poly({Var::X, Var::Y, Var::Z}, 3, 3, true)); };
        ElemDQuant a = r(), b = r();
        CHECK(apply_iso_d(t, a * b) == apply_iso_d(t, a) * apply_iso_d(t, b));
        IsoD td = make_T(p, FlavorD::Deformed);
        ElemDDef e(p, s.poly({Var::X, Var::Y, Var::Z}, 3, 3, true));
        ElemDDef f(p, s.poly({Var::X, Var::Y, Var::Z}, 3, 3, true));
        CHECK(apply_iso_d(td, e * f) == apply_iso_d(td, e) * apply_iso_d(td, f));
        CHECK(apply_iso_d(td, poisson_bracket_d(e, f)) ==
              poisson_bracket_d(apply_iso_d(td, e), apply_iso_d(td, f)));
    }
}

TEST_CASE("S3 check examples") {
    S3Report r = s3_check(DefParamD(4, X.pow(3), 0), FlavorD::Deformed);
    CHECK(r.ok);
    S3Report r2 = s3_check(DefParamD(4, X.pow(3) + X, 0), FlavorD::Deformed);
    CHECK(r2.ok);
    REQUIRE(r2.orbit.size() == 3);
    CHECK(r2.orbit[0] != r2.orbit[1]);
    CHECK(r2.orbit[1] != r2.orbit[2]);
    CHECK(r2.orbit[0] != r2.orbit[2]);
    S3Report r5 = s3_check(DefParamD(5, X.pow(4), 1), FlavorD::Quantized);
    CHECK(r5.ok);
    CHECK(r5.checks.size() == 1);
}

TEST_CASE("S3 relations along random orbits") {
    Sampler s(34);
    for (int trial = 0; trial < 20; ++trial) {
        DefParamD p = random_param(s, 4);
        CHECK(s3_check(p, FlavorD::Deformed).ok);
        CHECK(s3_check(p, FlavorD::Quantized).ok);
    }
}

TEST_CASE("d and m") {
    CHECK(d_m_decomposition(X.pow(4) + X * X) == std::pair{2, 2});
    CHECK(d_m_decomposition(X.pow(5) + X) == std::pair{1, 4});
    CHECK(d_m_decomposition(X.pow(3) + 1) == std::pair{0, 3});
    CHECK(d_m_decomposition(X.pow(4) + X.pow(3) + 1) == std::pair{0, 1});
    CHECK(d_m_decomposition(X.pow(3)).second == 0);
}

TEST_CASE("quantized and Poisson automorphism table") {
    struct Row {
        DefParamD p;
        std::string structure;
        std::vector<std::string> gens;
    };
    const CycScalar a(2), g(1);
    std::vector<Row> rows = {
        {cubic(a, a * a / CycScalar(4), 7, 0), "S3", {"sigma", "tau"}},
        {cubic(a, a * a / CycScalar(4) - I * g, 7, g), "Z/2", {"sigma.tau"}},
        {cubic(a, a * a / CycScalar(4) + I * g, 7, g), "Z/2", {"sigma.tau^-1"}},
        {cubic(a, 5, 7, 0), "Z/2", {"sigma"}},
        {cubic(a, 5, 7, g), "trivial", {}},
        {DefParamD(5, X.pow(4) + X, 3), "trivial", {}},
        {DefParamD(5, X.pow(4) + X, 0), "Z/2", {"sigma"}},
        {DefParamD(6, X.pow(5), 0), "Z/2", {"sigma"}},
    };
    for (const Row &row : rows) {
        CAPTURE(row.p.to_string());
        AutGroupD po = classify_aut_d(row.p, AutKindD::Poisson);
        CHECK(po.structure == row.structure);
        CHECK(names(po) == row.gens);
        AutGroupD qu = classify_aut_d(row.p, AutKindD::Quantized);
        CHECK(qu.structure == row.structure);
        CHECK(qu.order == po.order);
        for (const IsoD &e : po.generators) {
            CHECK(e.source == e.target);
            CHECK(verify_iso_d(e).ok());
        }
        for (const IsoD &e : qu.generators) {
            CHECK(e.source == e.target);
            CHECK(verify_iso_d(e).ok());
        }
    }
    CHECK(classify_aut_d(DefParamD(4, X.pow(3), 0), AutKindD::Poisson).to_string() ==
          "S3 (generators: sigma, tau)");
}

TEST_CASE("affine automorphism groups") {
    struct Row {
        DefParamD p;
        std::string structure;
        long order;
    };
    std::vector<Row> rows = {
        {DefParamD(5, X.pow(4) + X.pow(3) + 1, 2), "Z/2", 2},
        {DefParamD(5, X.pow(4) + X.pow(3) + 1, 0), "(Z/2)^2", 4},
        {DefParamD(5, X.pow(4) + X * X, 1), "Z/2", 2},
        {DefParamD(6, X.pow(5) + X, 1), "Z/4", 4},
        {DefParamD(6, X.pow(5) + X.pow(3), 0), "Z/2 x Z/4", 8},
        {cubic(2, 1, 7, 0), "S3 x Z/2", 12},
        {cubic(2, 1 - I, 7, 1), "(Z/2)^2", 4},
        {cubic(2, 1 + I, 7, 1), "(Z/2)^2", 4},
        {cubic(2, 5, 7, 1), "Z/2", 2},
    };
    for (const Row &row : rows) {
        CAPTURE(row.p.to_string());
        AutGroupD g = classify_aut_d(row.p, AutKindD::Affine);
        REQUIRE(g.complete);
        CHECK(g.structure == row.structure);
        CHECK(g.order == row.order);
        for (const IsoD &e : g.generators) {
            CHECK(e.source == e.target);
            CHECK(verify_iso_d(e).homomorphism);
        }
    }
    AutGroupD generic = classify_aut_d(DefParamD(5, X.pow(4) + X.pow(3) + 1, 2), AutKindD::Affine);
    CHECK(names(generic) == std::vector<std::string>{"sigma_z"});
    CHECK(classify_aut_d(DefParamD(5, X.pow(4) + X * X, 1), AutKindD::Affine).d == 2);
}

TEST_CASE("affine groups need enough roots of unity") {
    AutGroupD g = classify_aut_d(DefParamD(6, X.pow(5) + X, 0), AutKindD::Affine);
    CHECK_FALSE(g.complete);
    CHECK(g.required_k == 8);
    AutGroupD m0 = classify_aut_d(DefParamD(5, X.pow(4), 1), AutKindD::Affine);
    CHECK_FALSE(m0.complete);
    CHECK(m0.required_k == 20);
    {
        ScopedCyclotomicIndex k20(20);
        AutGroupD g20 = classify_aut_d(DefParamD(5, X.pow(4), 1), AutKindD::Affine);
        REQUIRE(g20.complete);
        CHECK(g20.structure == "Z/10");
    }
    ScopedCyclotomicIndex k8(8);
    AutGroupD g8 = classify_aut_d(DefParamD(6, X.pow(5) + X, 0), AutKindD::Affine);
    REQUIRE(g8.complete);
    CHECK(g8.structure == "Z/2 x Z/8");
    for (const IsoD &e : g8.generators)
        CHECK(verify_iso_d(e).homomorphism);
}

TEST_CASE("undeformed affine group") {
    for (int n = 4; n <= 6; ++n) {
        DefParamD p(n, X.pow(n - 1), 0);
        AutGroupD g = classify_aut_d(p, AutKindD::Affine);
        CHECK(g.order == 0);
        CHECK(g.structure.find("C^* x Z/2") != std::string::npos);
        // the sign changes sit inside P^+-_lambda for lambda = +-1
        IsoD a = make_scaling(p, -1, 1, ScalingFamily::P);
        IsoD b = make_scaling(p, -1, -1, ScalingFamily::P);
        IsoD s = make_scaling(p, 1, -1, ScalingFamily::P);
        for (const IsoD &e : {a, b, s}) {
            CHECK(e.target == p);
            CHECK(verify_iso_d(e).homomorphism);
        }
        std::vector<std::array<MPoly, 3>> ims{a.images, b.images, s.images};
        CHECK(std::count(ims.begin(), ims.end(), std::array<MPoly, 3>{X, -Y, Z}) == 1);
        CHECK(std::count(ims.begin(), ims.end(), std::array<MPoly, 3>{X, Y, -Z}) == 1);
        CHECK(std::count(ims.begin(), ims.end(), std::array<MPoly, 3>{X, -Y, -Z}) == 1);
    }
}

TEST_CASE("affine generators other than sigma are not Poisson") {
    for (const DefParamD &p : {DefParamD(6, X.pow(5) + X, 1), DefParamD(6, X.pow(5) + X.pow(3), 0),
                               DefParamD(5, X.pow(4) + X.pow(3) + 1, 0)}) {
        for (const IsoD &e : classify_aut_d(p, AutKindD::Affine).generators) {
            const bool is_sigma = e.images == std::array<MPoly, 3>{X, -Y, -Z};
            CHECK(verify_iso_d(e).poisson == is_sigma);
        }
    }
}

TEST_CASE("quantized and Poisson groups agree") {
    Sampler s(35);
    std::vector<DefParamD> ps = {cubic(0, 0, 0, 0), cubic(2, 1, 3, 0), cubic(4, 4 - 2 * I, 1, 2),
                                 cubic(4, 4 + 2 * I, 1, 2), cubic(1, 1, 1, 0)};
    while (ps.size() < 20)
        ps.push_back(random_param(s, static_cast<int>(s.integer(4, 6))));
    for (const DefParamD &p : ps) {
        AutGroupD a = classify_aut_d(p, AutKindD::Quantized), b = classify_aut_d(p, AutKindD::Poisson);
        CHECK(a.structure == b.structure);
        CHECK(a.order == b.order);
    }
}

TEST_CASE("Poisson isomorphism decisions") {
    DefParamD p(5, X.pow(4) + X, 3);
    auto w = decide_iso_d_poisson(p, DefParamD(5, X.pow(4) + X, -3));
    REQUIRE(w);
    CHECK(w->name == "sigma");
    auto id = decide_iso_d_poisson(p, p);
    REQUIRE(id);
    CHECK(id->same_map(identity_d(p, FlavorD::Deformed)));
    CHECK_FALSE(decide_iso_d_poisson(p, DefParamD(5, X.pow(4) + 2 * X, 3)));
    auto t = decide_iso_d_poisson(DefParamD(4, X.pow(3) + X, 0),
                                  DefParamD(4, X.pow(3) - CycScalar(1, 2) * X, -I / CycScalar(2)));
    REQUIRE(t);
    CHECK(t->same_map(make_T(DefParamD(4, X.pow(3) + X, 0), FlavorD::Deformed)));
    CHECK_THROWS_AS(decide_iso_d_poisson(p, DefParamD(4, X.pow(3), 0)), ParamMismatch);
}

TEST_CASE("Poisson decisions recover random words") {
    Sampler s(36);
    for (int trial = 0; trial < 20; ++trial) {
        DefParamD p = random_param(s, 4);
        IsoD f = random_word(s, p, static_cast<int>(s.integer(1, 6)));
        auto w = decide_iso_d_poisson(p, f.target);
        REQUIRE(w);
        CHECK(w->target == f.target);
        CHECK(verify_iso_d(*w).ok());
        // a scaled parameter is generally out of reach
        DefParamD q(4, p.Q() + X, p.gamma());
        auto none = decide_iso_d_poisson(p, q);
        if (none)
            CHECK(verify_iso_d(*none).ok());
    }
}

}
