#include "kleinian/akm_deformation.hpp"

#include "kleinian/errors.hpp"

namespace kleinian {

void require_same(const DefParamA &a, const DefParamA &b) {
    if (a != b)
        throw ParamMismatch("operands live in " + a.to_string() + " and " + b.to_string());
}

MPoly psi_a(const DefParamA &param) {
    return MPoly::var(Var::X) * MPoly::var(Var::Y) - param.P();
}

MPoly normalize_a_def_body(const MPoly &raw, const DefParamA &param) {
    std::vector<MPoly> ppow{MPoly(1)};
    MPoly out;
    for (const auto &[m, c] : raw.terms()) {
        if (m[3] || m[4])
            throw InvalidParameter("deformation elements cannot involve t or u: " + raw.to_string());
        const unsigned k = std::min(m[0], m[1]);
        if (k == 0) {
            out.add_term(m, c);
            continue;
        }
        while (ppow.size() <= k)
            ppow.push_back(ppow.back() * param.P());
        Mono rest = m;
        rest[0] -= k;
        rest[1] -= k;
        out += ppow[k] * MPoly::monomial(rest, c);
    }
    return out;
}

ElemADef::ElemADef(const DefParamA &param, const MPoly &raw)
    : param_(param), body_(normalize_a_def_body(raw, param)) {}

ElemADef ElemADef::gen(const DefParamA &param, Var v) { return ElemADef(param, MPoly::var(v)); }

ElemADef ElemADef::operator-() const { return ElemADef(param_, -body_, Normalized{}); }

ElemADef &ElemADef::operator+=(const ElemADef &o) {
    require_same(param_, o.param_);
    body_ += o.body_;
    return *this;
}

ElemADef &ElemADef::operator-=(const ElemADef &o) {
    require_same(param_, o.param_);
    body_ -= o.body_;
    return *this;
}

ElemADef operator*(const ElemADef &a, const ElemADef &b) {
    require_same(a.param_, b.param_);
    return ElemADef(a.param_, a.body_ * b.body_);
}

ElemADef operator*(const CycScalar &c, const ElemADef &a) {
    return ElemADef(a.param_, a.body_ * c, ElemADef::Normalized{});
}

bool operator==(const ElemADef &a, const ElemADef &b) {
    return a.param_ == b.param_ && a.body_ == b.body_;
}

Degree ElemADef::fdeg() const {
    Degree d = Degree::minus_infinity();
    const long n = param_.n();
    for (const auto &[m, c] : body_.terms())
        d = max(d, Degree(n * (m[0] + m[1]) + 2 * m[2]));
    return d;
}

ElemADef normalize_a_def(const MPoly &raw, const DefParamA &param) { return ElemADef(param, raw); }

ElemADef mul_a_def(const ElemADef &a, const ElemADef &b) { return a * b; }

ElemADef poisson_bracket_a(const ElemADef &a, const ElemADef &b) {
    require_same(a.param(), b.param());
    return ElemADef(a.param(), jacobian_bracket(a.body(), b.body(), psi_a(a.param())));
}

Degree fdeg_a(const ElemADef &a) { return a.fdeg(); }

} // namespace kleinian
