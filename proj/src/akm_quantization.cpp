#include "kleinian/akm_quantization.hpp"

#include "kleinian/errors.hpp"

#include <cstdlib>

namespace kleinian {

MPoly sigma_shift(const MPoly &f, long j, TMode mode) {
    if (j == 0)
        return f;
    switch (mode) {
    case TMode::Generic:
        return shift_sigma(f, j);
    case TMode::One:
        return f.shift(Var::Z, MPoly(CycScalar(-j)));
    case TMode::Zero:
        return f;
    }
    return f;
}

void require_same(const GwaAlgebra &a, const GwaAlgebra &b) {
    if (a.mode != b.mode)
        throw ParamMismatch(std::string("operands in modes ") + tmode_name(a.mode) + " and " +
                            tmode_name(b.mode));
    require_same(a.param, b.param);
}

GwaElem::GwaElem(const GwaAlgebra &alg, Components comps) : alg_(alg) {
    for (auto &[m, h] : comps)
        if (!h.is_zero())
            comps_.emplace(m, std::move(h));
    check_mode();
}

GwaElem::GwaElem(const GwaAlgebra &alg, const MPoly &degree_zero) : alg_(alg) {
    if (!degree_zero.is_zero())
        comps_.emplace(0, degree_zero);
    check_mode();
}

void GwaElem::check_mode() const {
    for (const auto &[m, h] : comps_) {
        if (h.involves(Var::X) || h.involves(Var::Y) || h.involves(Var::U))
            throw InvalidParameter("GWA coefficients must be polynomials in z and t");
        if (alg_.mode != TMode::Generic && h.involves(Var::T))
            throw InvalidParameter(std::string("t does not occur in mode ") + tmode_name(alg_.mode));
    }
}

GwaElem GwaElem::gen(const GwaAlgebra &alg, Var v) {
    switch (v) {
    case Var::X:
        return term(alg, 1, MPoly(1));
    case Var::Y:
        return term(alg, -1, MPoly(1));
    case Var::Z:
    case Var::T:
        return GwaElem(alg, MPoly::var(v));
    default:
        throw UnknownVariable(std::string("no generator ") + var_name(v) + " in A_t(P)");
    }
}

GwaElem GwaElem::term(const GwaAlgebra &alg, int m, const MPoly &h) {
    Components c;
    c.emplace(m, h);
    return GwaElem(alg, std::move(c));
}

MPoly GwaElem::component(int m) const {
    auto it = comps_.find(m);
    return it == comps_.end() ? MPoly() : it->second;
}

GwaElem GwaElem::operator-() const {
    GwaElem r = *this;
    for (auto &[m, h] : r.comps_)
        h = -h;
    return r;
}

GwaElem &GwaElem::operator+=(const GwaElem &o) {
    require_same(alg_, o.alg_);
    for (const auto &[m, h] : o.comps_) {
        MPoly &slot = comps_[m];
        slot += h;
        if (slot.is_zero())
            comps_.erase(m);
    }
    return *this;
}

GwaElem &GwaElem::operator-=(const GwaElem &o) {
    require_same(alg_, o.alg_);
    for (const auto &[m, h] : o.comps_) {
        MPoly &slot = comps_[m];
        slot -= h;
        if (slot.is_zero())
            comps_.erase(m);
    }
    return *this;
}

namespace {

// w_e w_f = coefficient * w_{e+f}, where w_e = x^e or y^-e.
const MPoly &word_product(const DefParamA &p, TMode mode, int e, int f) {
    static const MPoly one(1);
    if (e == 0 || f == 0 || (e > 0) == (f > 0))
        return one;
    if (e > 0) {
        const long a = e, b = -f;
        return a >= b ? p.shifted_P_product(a - b + 1, a, mode) : p.shifted_P_product(1, a, mode);
    }
    const long a = -e, b = f;
    return a >= b ? p.shifted_P_product(-(a - 1), -(a - b), mode)
                  : p.shifted_P_product(-(a - 1), 0, mode);
}

} // namespace

GwaElem operator*(const GwaElem &a, const GwaElem &b) {
    require_same(a.alg_, b.alg_);
    const TMode mode = a.alg_.mode;
    GwaElem r(a.alg_);
    std::map<std::pair<int, int>, MPoly> shifted;
    for (const auto &[e, h] : a.comps_)
        for (const auto &[f, h2] : b.comps_) {
            auto key = std::make_pair(e, f);
            auto it = shifted.find(key);
            if (it == shifted.end())
                it = shifted.emplace(key, sigma_shift(h2, e, mode)).first;
            MPoly prod = h * it->second;
            const MPoly &w = word_product(a.param(), mode, e, f);
            if (!w.is_constant() || !w.constant_term().is_one())
                prod *= w;
            MPoly &slot = r.comps_[e + f];
            slot += prod;
            if (slot.is_zero())
                r.comps_.erase(e + f);
        }
    return r;
}

GwaElem operator*(const CycScalar &c, GwaElem a) {
    if (c.is_zero())
        return GwaElem(a.alg_);
    for (auto &[m, h] : a.comps_)
        h *= c;
    return a;
}

bool operator==(const GwaElem &a, const GwaElem &b) {
    return a.alg_ == b.alg_ && a.comps_ == b.comps_;
}

GwaElem GwaElem::pow(unsigned e) const {
    GwaElem result(alg_, MPoly(1));
    for (unsigned i = 0; i < e; ++i)
        result = result * *this;
    return result;
}

Degree GwaElem::fdeg() const {
    Degree d = Degree::minus_infinity();
    const long n = param().n();
    for (const auto &[m, h] : comps_)
        d = max(d, Degree(n * std::labs(m) + 2L * h.degree(Var::Z)));
    return d;
}

std::string GwaElem::to_string() const {
    if (comps_.empty())
        return "0";
    std::string out;
    for (auto it = comps_.rbegin(); it != comps_.rend(); ++it) {
        const int m = it->first;
        const MPoly &h = it->second;
        std::string word;
        if (m != 0) {
            word = m > 0 ? "x" : "y";
            if (std::abs(m) > 1)
                word += "^" + std::to_string(std::abs(m));
        }
        std::string piece;
        bool negative = false;
        if (word.empty() || h.size() == 1) {
            piece = h.to_string();
            if (piece[0] == '-') {
                negative = true;
                piece.erase(0, 1);
            }
            if (!word.empty())
                piece = piece == "1" ? word : piece + "*" + word;
        } else {
            piece = "(" + h.to_string() + ")*" + word;
        }
        if (out.empty())
            out = (negative ? "-" : "") + piece;
        else
            out += (negative ? " - " : " + ") + piece;
    }
    return out;
}

GwaElem gwa_mul(const GwaElem &a, const GwaElem &b) { return a * b; }

GwaElem gwa_commutator(const GwaElem &a, const GwaElem &b) { return a * b - b * a; }

GwaElem specialize_t(const GwaElem &a, int value) {
    if (value != 0 && value != 1)
        throw InvalidParameter("t can only be specialized to 0 or 1");
    const TMode target = value == 1 ? TMode::One : TMode::Zero;
    if (a.mode() == target)
        return a;
    if (a.mode() != TMode::Generic)
        throw ParamMismatch(std::string("cannot specialize an element of mode ") +
                            tmode_name(a.mode()));
    GwaElem::Components c;
    for (const auto &[m, h] : a.components())
        c.emplace(m, h.substitute(Var::T, MPoly(value)));
    return GwaElem(GwaAlgebra{a.param(), target}, std::move(c));
}

Degree fdeg_gwa(const GwaElem &a) { return a.fdeg(); }

ElemADef to_deformation(const GwaElem &a) {
    if (a.mode() == TMode::One)
        throw ParamMismatch("A(P) is not commutative; specialize t to 0 first");
    MPoly body;
    for (const auto &[m, h] : a.components()) {
        if (h.involves(Var::T))
            throw InvalidParameter("element still involves t: " + a.to_string());
        body += m >= 0 ? h.times_var(Var::X, m) : h.times_var(Var::Y, -m);
    }
    return ElemADef(a.param(), body);
}

GwaElem lift_to_gwa(const ElemADef &a, TMode mode) {
    GwaElem::Components c;
    for (const auto &[mono, coef] : a.body().terms()) {
        const int m = mono[0] > 0 ? static_cast<int>(mono[0]) : -static_cast<int>(mono[1]);
        Mono zpart{};
        zpart[2] = mono[2];
        c[m].add_term(zpart, coef);
    }
    return GwaElem(GwaAlgebra{a.param(), mode}, std::move(c));
}

ElemADef semiclassical_bracket(const GwaElem &a, const GwaElem &b) {
    if (a.mode() != TMode::Generic)
        throw ParamMismatch("the semiclassical bracket needs the t-version");
    GwaElem c = gwa_commutator(a, b);
    GwaElem::Components reduced;
    for (const auto &[m, h] : c.components()) {
        MPoly q;
        try {
            q = h.divide_by_var(Var::T);
        } catch (const NotDivisible &) {
            throw NotDivisibleByT("commutator component " + h.to_string() + " is not divisible by t");
        }
        reduced.emplace(m, q.substitute(Var::T, MPoly()));
    }
    return to_deformation(GwaElem(a.algebra(), std::move(reduced)));
}

} // namespace kleinian
