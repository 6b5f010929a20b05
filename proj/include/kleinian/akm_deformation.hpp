#pragma once

#include "kleinian/degree.hpp"
#include "kleinian/params.hpp"

namespace kleinian {

// Element of the Poisson algebra C[x,y,z]/(xy - P(z)). The body has no
// monomial divisible by xy.
class ElemADef {
public:
    ElemADef(const DefParamA &param, const MPoly &raw);

    static ElemADef gen(const DefParamA &param, Var v);

    const DefParamA &param() const { return param_; }
    const MPoly &body() const { return body_; }
    bool is_zero() const { return body_.is_zero(); }

    ElemADef operator-() const;
    ElemADef &operator+=(const ElemADef &o);
    ElemADef &operator-=(const ElemADef &o);
    friend ElemADef operator+(ElemADef a, const ElemADef &b) { return a += b; }
    friend ElemADef operator-(ElemADef a, const ElemADef &b) { return a -= b; }
    friend ElemADef operator*(const ElemADef &a, const ElemADef &b);
    friend ElemADef operator*(const CycScalar &c, const ElemADef &a);
    friend bool operator==(const ElemADef &a, const ElemADef &b);
    friend bool operator!=(const ElemADef &a, const ElemADef &b) { return !(a == b); }

    Degree fdeg() const;
    std::string to_string() const { return body_.to_string(); }

private:
    struct Normalized {};
    ElemADef(const DefParamA &param, MPoly body, Normalized) : param_(param), body_(std::move(body)) {}
    DefParamA param_;
    MPoly body_;
};

MPoly normalize_a_def_body(const MPoly &raw, const DefParamA &param);
ElemADef normalize_a_def(const MPoly &raw, const DefParamA &param);
ElemADef mul_a_def(const ElemADef &a, const ElemADef &b);
ElemADef poisson_bracket_a(const ElemADef &a, const ElemADef &b);
Degree fdeg_a(const ElemADef &a);
// psi = xy - P(z)
MPoly psi_a(const DefParamA &param);

void require_same(const DefParamA &a, const DefParamA &b);

} // namespace kleinian
