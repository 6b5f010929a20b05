#include "doctest.h"
#include "kleinian/dkm_algebras.hpp"
#include "kleinian/errors.hpp"
#include "kleinian/random.hpp"

using namespace kleinian;

namespace {
const MPoly X = MPoly::var(Var::X), Y = MPoly::var(Var::Y), Z = MPoly::var(Var::Z),
            U = MPoly::var(Var::U);

DefParamD random_param(Sampler &s, int n) {
    return DefParamD(n, s.monic(Var::X, n - 1, false), s.scalar());
}

ElemDQuant quant(const DefParamD &p, const MPoly &ordered) { return ElemDQuant(p, ordered); }
} // namespace

TEST_SUITE("dkm_algebras") {

TEST_CASE("Levy polynomial examples") {
    CHECK(solve_p_levy(DefParamD(4, X.pow(3), 0)).P == 3 * U * U + 8 * U + 8);
    CHECK(solve_p_levy(DefParamD(4, X.pow(3) + X, 0)).P == 3 * U * U + 8 * U + 9);
    CHECK(solve_p_levy(DefParamD(5, X.pow(4), 0)).P == 4 * U.pow(3) + 20 * U * U + 56 * U + 56);
}

TEST_CASE("Levy polynomial is unique") {
    Sampler s(21);
    for (int trial = 0; trial < 30; ++trial) {
        DefParamD p = random_param(s, static_cast<int>(s.integer(4, 6)));
        LevyP lp = solve_p_levy(p);
        CHECK(lp.P.degree(Var::U) == static_cast<unsigned>(p.n() - 2));
        CHECK(levy_residual(p, lp.P).is_zero());
        const unsigned j = static_cast<unsigned>(s.integer(0, p.n() - 2));
        CHECK_FALSE(levy_residual(p, lp.P + U.pow(j) * s.nonzero_scalar()).is_zero());
    }
}

TEST_CASE("deformation normal form examples") {
    DefParamD p(4, X.pow(3), 0);
    CHECK(normalize_d_def(Z * Z, p).body() == -X.pow(3) - X * Y * Y);
    CHECK(normalize_d_def(X * Z, p).body() == X * Z);
    DefParamD q(4, X.pow(3), 1);
    CHECK(normalize_d_def(Z.pow(3), q).body() == (Y - X.pow(3) - X * Y * Y) * Z);
    ElemDDef e = normalize_d_def(Z.pow(5) + X * Z.pow(4), q);
    CHECK(e.body().degree(Var::Z) <= 1);
    CHECK(normalize_d_def(e.body(), q) == e);
}

TEST_CASE("deformation normal form is a ring homomorphism") {
    Sampler s(22);
    for (int trial = 0; trial < 100; ++trial) {
        DefParamD p = random_param(s, static_cast<int>(s.integer(4, 6)));
        MPoly a = s.poly({Var::X, Var::Y, Var::Z}, 4, 4, true);
        MPoly b = s.poly({Var::X, Var::Y, Var::Z}, 4, 4, true);
        CHECK(normalize_d_def(a * b, p) == normalize_d_def(a, p) * normalize_d_def(b, p));
        CHECK(normalize_d_def(psi_d(p) * a, p).is_zero());
    }
}

TEST_CASE("Poisson bracket examples") {
    DefParamD p(4, X.pow(3), 5);
    auto x = ElemDDef::gen(p, Var::X), y = ElemDDef::gen(p, Var::Y), z = ElemDDef::gen(p, Var::Z);
    CHECK(poisson_bracket_d(x, y).body() == 2 * Z);
    CHECK(poisson_bracket_d(x, z).body() == -2 * X * Y + 5);
    CHECK(poisson_bracket_d(y, z).body() == 3 * X * X + Y * Y);
    CHECK_THROWS_AS(poisson_bracket_d(x, ElemDDef::gen(DefParamD(4, X.pow(3), 0), Var::Y)),
                    ParamMismatch);
}

TEST_CASE("Poisson axioms and degree") {
    Sampler s(23);
    for (int trial = 0; trial < 200; ++trial) {
        DefParamD p = random_param(s, static_cast<int>(s.integer(4, 6)));
        auto r = [&] { return ElemDDef(p, s.poly({Var::X, Var::Y, Var::Z}, 3, 3, true)); };
        ElemDDef a = r(), b = r(), c = r();
        ElemDDef jac = poisson_bracket_d(a, poisson_bracket_d(b, c)) +
                       poisson_bracket_d(b, poisson_bracket_d(c, a)) +
                       poisson_bracket_d(c, poisson_bracket_d(a, b));
        CHECK(jac.is_zero());
        CHECK(poisson_bracket_d(a, b * c) ==
              poisson_bracket_d(a, b) * c + b * poisson_bracket_d(a, c));
        CHECK(poisson_bracket_d(a, b) == -poisson_bracket_d(b, a));
        if (!a.is_zero() && !b.is_zero())
            CHECK(fdeg_d(poisson_bracket_d(a, b)) <= fdeg_d(a) + fdeg_d(b) + Degree(-2));
    }
}

TEST_CASE("degree examples") {
    CHECK(fdeg_d(ElemDDef::gen(DefParamD(4, X.pow(3), 0), Var::X)) == Degree(4));
    CHECK(fdeg_d(ElemDQuant::gen(DefParamD(5, X.pow(4), 0), Var::Z)) == Degree(8));
    CHECK(!fdeg_d(ElemDQuant(DefParamD(5, X.pow(4), 0))).is_finite());
}

TEST_CASE("quantized product examples") {
    DefParamD p(4, X.pow(3), 0);
    auto x = ElemDQuant::gen(p, Var::X), y = ElemDQuant::gen(p, Var::Y), z = ElemDQuant::gen(p, Var::Z);
    CHECK(y * x == quant(p, X * Y - 2 * Z));
    CHECK(z * z == quant(p, 2 * Y * Z - X.pow(3) - X * Y * Y - 2 * Y * Y - 6 * X * X - 12 * X - 8));
    ElemDQuant e = quant(p, X * Y * Z + 3 * Y);
    CHECK(quant(p, MPoly(1)) * e == e);
    CHECK(e * quant(p, MPoly(1)) == e);
    CHECK(commutator_d(x, y) == quant(p, 2 * Z));
    CHECK(commutator_d(y, z) == quant(p, Y * Y + 3 * X * X + 8 * X + 8 - 4));
    CHECK(commutator_d(x, x).is_zero());
}

TEST_CASE("generator relations and the quartic") {
    Sampler s(24);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = static_cast<int>(s.integer(4, 6));
        DefParamD p = random_param(s, n);
        const MPoly P = solve_p_levy(p).in_x();
        auto x = ElemDQuant::gen(p, Var::X), y = ElemDQuant::gen(p, Var::Y), z = ElemDQuant::gen(p, Var::Z);
        CHECK(commutator_d(x, y) == quant(p, 2 * Z));
        CHECK(commutator_d(x, z) == quant(p, -2 * X * Y + 2 * Z + MPoly(p.gamma())));
        CHECK(commutator_d(y, z) == quant(p, Y * Y + P - n));
        // Q(x) + x(y^2 - n) + z^2 - 2zy - gamma y = 0
        ElemDQuant quartic = quant(p, p.Q()) + x * (y * y - quant(p, MPoly(n))) + z * z -
                             CycScalar(2) * (z * y) - p.gamma() * y;
        CHECK(quartic.is_zero());
        // leading part of z^2 is -x^(n-1) - x y^2
        ElemDQuant lead = z * z + quant(p, X.pow(n - 1) + X * Y * Y);
        CHECK(fdeg_d(lead) < Degree(4L * (n - 1)));
    }
}

TEST_CASE("quantized product is associative") {
    Sampler s(25);
    for (int trial = 0; trial < 200; ++trial) {
        DefParamD p = random_param(s, static_cast<int>(s.integer(4, 6)));
        auto r = [&] { return quant(p, s.poly({Var::X, Var::Y, Var::Z}, 3, 3, true)); };
        ElemDQuant a = r(), b = r(), c = r();
        CHECK_NOTHROW(check_associative_d(a, b, c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("quantized degree is multiplicative") {
    Sampler s(26);
    for (int trial = 0; trial < 100; ++trial) {
        DefParamD p = random_param(s, static_cast<int>(s.integer(4, 6)));
        auto r = [&] { return quant(p, s.poly({Var::X, Var::Y, Var::Z}, 3, 3, true)); };
        ElemDQuant a = r(), b = r();
        if (a.is_zero() || b.is_zero())
            continue;
        CHECK(fdeg_d(a * b) == fdeg_d(a) + fdeg_d(b));
    }
}

}
