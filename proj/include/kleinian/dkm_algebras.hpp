#pragma once

#include "kleinian/degree.hpp"
#include "kleinian/params.hpp"

#include <string>

namespace kleinian {

// Levy's auxiliary polynomial, written in u, of degree n - 2.
struct LevyP {
    MPoly P;
    // P with u replaced by x.
    MPoly in_x() const { return P.substitute(Var::U, MPoly::var(Var::X)); }
};

LevyP solve_p_levy(const DefParamD &param);
// Q(-x(x-1)) - Q(-x(x+1)) - (x-1)P(-x(x-1)) - (x+1)P(-x(x+1)) as a polynomial in x.
MPoly levy_residual(const DefParamD &param, const MPoly &P_in_u);

// psi = Q(x) + x y^2 + z^2 - gamma y
MPoly psi_d(const DefParamD &param);

// f + g z in the commutative deformation, f and g in x, y.
class ElemDDef {
public:
    ElemDDef(const DefParamD &param, const MPoly &raw);
    static ElemDDef gen(const DefParamD &param, Var v);

    const DefParamD &param() const { return param_; }
    const MPoly &body() const { return body_; }
    MPoly f() const;
    MPoly g() const;
    bool is_zero() const { return body_.is_zero(); }

    ElemDDef operator-() const;
    ElemDDef &operator+=(const ElemDDef &o);
    ElemDDef &operator-=(const ElemDDef &o);
    friend ElemDDef operator+(ElemDDef a, const ElemDDef &b) { return a += b; }
    friend ElemDDef operator-(ElemDDef a, const ElemDDef &b) { return a -= b; }
    friend ElemDDef operator*(const ElemDDef &a, const ElemDDef &b);
    friend ElemDDef operator*(const CycScalar &c, const ElemDDef &a);
    friend bool operator==(const ElemDDef &a, const ElemDDef &b);

    Degree fdeg() const;
    std::string to_string() const { return body_.to_string(); }

private:
    DefParamD param_;
    MPoly body_;
};

ElemDDef normalize_d_def(const MPoly &raw, const DefParamD &param);
ElemDDef poisson_bracket_d(const ElemDDef &a, const ElemDDef &b);

// Element of the quantization in the ordered basis x^a y^b z^c, c <= 1.
// The body is an MPoly whose monomial x^a y^b z^c stands for that word.
class ElemDQuant {
public:
    explicit ElemDQuant(const DefParamD &param) : param_(param) {}
    // Body read as a combination of ordered words; words with z^c, c > 1,
    // are reduced.
    ElemDQuant(const DefParamD &param, const MPoly &ordered);
    static ElemDQuant gen(const DefParamD &param, Var v);

    const DefParamD &param() const { return param_; }
    const MPoly &body() const { return body_; }
    bool is_zero() const { return body_.is_zero(); }

    ElemDQuant operator-() const;
    ElemDQuant &operator+=(const ElemDQuant &o);
    ElemDQuant &operator-=(const ElemDQuant &o);
    friend ElemDQuant operator+(ElemDQuant a, const ElemDQuant &b) { return a += b; }
    friend ElemDQuant operator-(ElemDQuant a, const ElemDQuant &b) { return a -= b; }
    friend ElemDQuant operator*(const ElemDQuant &a, const ElemDQuant &b);
    friend ElemDQuant operator*(const CycScalar &c, const ElemDQuant &a);
    friend bool operator==(const ElemDQuant &a, const ElemDQuant &b);

    ElemDQuant pow(unsigned e) const;
    Degree fdeg() const;
    std::string to_string() const { return body_.to_string(); }

private:
    struct Normalized {};
    ElemDQuant(const DefParamD &param, MPoly body, Normalized) : param_(param), body_(std::move(body)) {}
    DefParamD param_;
    MPoly body_;
};

ElemDQuant mul_d_quant(const ElemDQuant &a, const ElemDQuant &b);
ElemDQuant commutator_d(const ElemDQuant &a, const ElemDQuant &b);
// Throws NonAssociative with the offending triple when (ab)c != a(bc).
void check_associative_d(const ElemDQuant &a, const ElemDQuant &b, const ElemDQuant &c);

Degree fdeg_d(const ElemDDef &a);
Degree fdeg_d(const ElemDQuant &a);

void require_same(const DefParamD &a, const DefParamD &b);

} // namespace kleinian
