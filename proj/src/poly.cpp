#include "kleinian/poly.hpp"

#include "kleinian/errors.hpp"

#include <sstream>

namespace kleinian {

char var_name(Var v) {
    static const char names[kNumVars] = {'x', 'y', 'z', 't', 'u'};
    return names[static_cast<int>(v)];
}

unsigned mono_degree(const Mono &m) {
    unsigned d = 0;
    for (auto e : m)
        d += e;
    return d;
}

MPoly::MPoly(const CycScalar &c) {
    if (!c.is_zero())
        terms_.emplace(Mono{}, c);
}

MPoly MPoly::var(Var v, unsigned power) {
    Mono m{};
    m[static_cast<int>(v)] = power;
    return monomial(m, CycScalar(1));
}

MPoly MPoly::monomial(const Mono &m, const CycScalar &c) {
    MPoly r;
    if (!c.is_zero())
        r.terms_.emplace(m, c);
    return r;
}

MPoly MPoly::univariate(Var v, const std::vector<CycScalar> &coeffs) {
    MPoly r;
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        Mono m{};
        m[static_cast<int>(v)] = static_cast<std::uint32_t>(j);
        r.add_term(m, coeffs[j]);
    }
    return r;
}

bool MPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Mono{});
}

CycScalar MPoly::constant_term() const { return coeff(Mono{}); }

CycScalar MPoly::coeff(const Mono &m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? CycScalar() : it->second;
}

unsigned MPoly::degree(Var v) const {
    unsigned d = 0;
    for (const auto &[m, c] : terms_)
        d = std::max<unsigned>(d, m[static_cast<int>(v)]);
    return d;
}

unsigned MPoly::total_degree() const {
    return terms_.empty() ? 0 : mono_degree(terms_.begin()->first);
}

unsigned MPoly::min_degree(Var v) const {
    if (terms_.empty())
        return 0;
    unsigned d = ~0u;
    for (const auto &[m, c] : terms_)
        d = std::min<unsigned>(d, m[static_cast<int>(v)]);
    return d;
}

std::vector<MPoly> MPoly::coefficients_in(Var v) const {
    const int vi = static_cast<int>(v);
    std::vector<MPoly> out(is_zero() ? 0 : degree(v) + 1);
    for (const auto &[m, c] : terms_) {
        Mono rest = m;
        rest[vi] = 0;
        out[m[vi]].add_term(rest, c);
    }
    return out;
}

std::vector<CycScalar> MPoly::univariate_coeffs(Var v) const {
    const int vi = static_cast<int>(v);
    std::vector<CycScalar> out(is_zero() ? 0 : degree(v) + 1);
    for (const auto &[m, c] : terms_) {
        for (int i = 0; i < kNumVars; ++i)
            if (i != vi && m[i] != 0)
                throw InvalidParameter("expected a polynomial in " + std::string(1, var_name(v)) +
                                       " only, got " + to_string());
        out[m[vi]] = c;
    }
    return out;
}

void MPoly::add_term(const Mono &m, const CycScalar &c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto &[m, c] : r.terms_)
        c = -c;
    return r;
}

MPoly &MPoly::operator+=(const MPoly &o) {
    for (const auto &[m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

MPoly &MPoly::operator-=(const MPoly &o) {
    for (const auto &[m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

MPoly operator*(const MPoly &a, const MPoly &b) {
    MPoly r;
    for (const auto &[ma, ca] : a.terms_)
        for (const auto &[mb, cb] : b.terms_) {
            Mono m;
            for (int i = 0; i < kNumVars; ++i)
                m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    return r;
}

MPoly &MPoly::operator*=(const MPoly &o) { return *this = *this * o; }

MPoly &MPoly::operator*=(const CycScalar &c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto &[m, v] : terms_)
        v *= c;
    return *this;
}

MPoly MPoly::pow(unsigned e) const {
    MPoly result(1), base = *this;
    while (e) {
        if (e & 1)
            result *= base;
        e >>= 1;
        if (e)
            base *= base;
    }
    return result;
}

MPoly MPoly::derivative(Var v) const {
    const int vi = static_cast<int>(v);
    MPoly r;
    for (const auto &[m, c] : terms_) {
        if (m[vi] == 0)
            continue;
        Mono nm = m;
        --nm[vi];
        r.add_term(nm, c * CycScalar(static_cast<long>(m[vi])));
    }
    return r;
}

MPoly MPoly::shift(Var v, const MPoly &c) const {
    if (c.is_zero() || !involves(v))
        return *this;
    std::vector<MPoly> cs = coefficients_in(v);
    MPoly lin = var(v) + c;
    MPoly r;
    for (std::size_t j = cs.size(); j-- > 0;) {
        r *= lin;
        r += cs[j];
    }
    return r;
}

MPoly MPoly::substitute(Var v, const MPoly &value) const {
    if (!involves(v))
        return *this;
    std::vector<MPoly> cs = coefficients_in(v);
    MPoly r;
    for (std::size_t j = cs.size(); j-- > 0;) {
        r *= value;
        r += cs[j];
    }
    return r;
}

MPoly MPoly::substitute(const std::map<Var, MPoly> &bindings) const {
    if (bindings.empty())
        return *this;
    // Powers of each bound value, computed on demand.
    std::map<Var, std::vector<MPoly>> powers;
    auto power_of = [&](Var v, unsigned e) -> const MPoly & {
        auto &ps = powers[v];
        if (ps.empty())
            ps.push_back(MPoly(1));
        while (ps.size() <= e)
            ps.push_back(ps.back() * bindings.at(v));
        return ps[e];
    };
    MPoly r;
    for (const auto &[m, c] : terms_) {
        Mono rest{};
        MPoly term(c);
        for (int i = 0; i < kNumVars; ++i) {
            Var v = static_cast<Var>(i);
            if (m[i] == 0)
                continue;
            if (bindings.count(v))
                term = term * power_of(v, m[i]);
            else
                rest[i] = m[i];
        }
        if (rest != Mono{})
            term = term * monomial(rest, CycScalar(1));
        r += term;
    }
    return r;
}

MPoly MPoly::divide_by_var(Var v, unsigned power) const {
    const int vi = static_cast<int>(v);
    MPoly r;
    for (const auto &[m, c] : terms_) {
        if (m[vi] < power)
            throw NotDivisible(to_string() + " is not divisible by " + var_name(v) + "^" +
                               std::to_string(power));
        Mono nm = m;
        nm[vi] -= power;
        r.terms_.emplace_hint(r.terms_.end(), nm, c);
    }
    return r;
}

MPoly MPoly::times_var(Var v, unsigned power) const {
    const int vi = static_cast<int>(v);
    MPoly r;
    for (const auto &[m, c] : terms_) {
        Mono nm = m;
        nm[vi] += power;
        r.terms_.emplace(nm, c);
    }
    return r;
}

std::string MPoly::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto &[m, c] : terms_) {
        std::string mono;
        for (int i = 0; i < kNumVars; ++i) {
            if (m[i] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += var_name(static_cast<Var>(i));
            if (m[i] > 1)
                mono += "^" + std::to_string(m[i]);
        }
        std::string coef;
        bool negative = false;
        if (c.term_count() > 1) {
            coef = "(" + c.to_string() + ")";
        } else {
            coef = c.to_string();
            if (coef[0] == '-') {
                negative = true;
                coef.erase(0, 1);
            }
        }
        if (first)
            out << (negative ? "-" : "");
        else
            out << (negative ? " - " : " + ");
        first = false;
        if (mono.empty())
            out << coef;
        else if (coef == "1")
            out << mono;
        else
            out << coef << "*" << mono;
    }
    return out.str();
}

MPoly shift_sigma(const MPoly &f, long m) {
    return f.shift(Var::Z, MPoly::var(Var::T) * CycScalar(-m));
}

MPoly delta_m(const MPoly &f, long m, unsigned iterations) {
    MPoly r = f;
    for (unsigned i = 0; i < iterations; ++i)
        r = shift_sigma(r, m) - r;
    return r;
}

MPoly jacobian_bracket(const MPoly &f, const MPoly &g, const MPoly &psi) {
    const MPoly fx = f.derivative(Var::X), fy = f.derivative(Var::Y), fz = f.derivative(Var::Z);
    const MPoly gx = g.derivative(Var::X), gy = g.derivative(Var::Y), gz = g.derivative(Var::Z);
    MPoly r;
    r += psi.derivative(Var::Z) * (fx * gy - fy * gx);
    r -= psi.derivative(Var::Y) * (fx * gz - fz * gx);
    r += psi.derivative(Var::X) * (fy * gz - fz * gy);
    return r;
}

} // namespace kleinian
