#pragma once

#include "kleinian/akm_deformation.hpp"

#include <map>

namespace kleinian {

// A_t(P) with t symbolic, A(P) = A_1(P), or the commutative A_0(P).
struct GwaAlgebra {
    DefParamA param;
    TMode mode = TMode::Generic;
    friend bool operator==(const GwaAlgebra &a, const GwaAlgebra &b) {
        return a.mode == b.mode && a.param == b.param;
    }
};

// sigma^j(f) = f(z - j h) with h = t, 1 or 0.
MPoly sigma_shift(const MPoly &f, long j, TMode mode);

// Element of A_t(P) in the Z-graded basis. components()[m] = h means the
// summand h(z,t) x^m for m >= 0 and h(z,t) y^(-m) for m < 0.
class GwaElem {
public:
    using Components = std::map<int, MPoly>;

    explicit GwaElem(const GwaAlgebra &alg) : alg_(alg) {}
    GwaElem(const GwaAlgebra &alg, Components comps);
    GwaElem(const GwaAlgebra &alg, const MPoly &degree_zero);

    static GwaElem gen(const GwaAlgebra &alg, Var v);
    // h * x^m (m >= 0) or h * y^-m (m < 0).
    static GwaElem term(const GwaAlgebra &alg, int m, const MPoly &h);

    const GwaAlgebra &algebra() const { return alg_; }
    const DefParamA &param() const { return alg_.param; }
    TMode mode() const { return alg_.mode; }
    const Components &components() const { return comps_; }
    MPoly component(int m) const;
    bool is_zero() const { return comps_.empty(); }

    GwaElem operator-() const;
    GwaElem &operator+=(const GwaElem &o);
    GwaElem &operator-=(const GwaElem &o);
    friend GwaElem operator+(GwaElem a, const GwaElem &b) { return a += b; }
    friend GwaElem operator-(GwaElem a, const GwaElem &b) { return a -= b; }
    friend GwaElem operator*(const GwaElem &a, const GwaElem &b);
    friend GwaElem operator*(const CycScalar &c, GwaElem a);
    friend bool operator==(const GwaElem &a, const GwaElem &b);
    friend bool operator!=(const GwaElem &a, const GwaElem &b) { return !(a == b); }

    GwaElem pow(unsigned e) const;
    Degree fdeg() const;
    std::string to_string() const;

private:
    void check_mode() const;
    GwaAlgebra alg_;
    Components comps_;
};

void require_same(const GwaAlgebra &a, const GwaAlgebra &b);

GwaElem gwa_mul(const GwaElem &a, const GwaElem &b);
GwaElem gwa_commutator(const GwaElem &a, const GwaElem &b);
GwaElem specialize_t(const GwaElem &a, int value);
Degree fdeg_gwa(const GwaElem &a);

// A_0 element (or t-free generic element) read in the commutative algebra.
ElemADef to_deformation(const GwaElem &a);
// t-free lift of a deformation element: x^a z^c -> z^c x^a, z^c y^b -> z^c y^b.
GwaElem lift_to_gwa(const ElemADef &a, TMode mode = TMode::Generic);

ElemADef semiclassical_bracket(const GwaElem &a, const GwaElem &b);

} // namespace kleinian
