#pragma once

#include "kleinian/scalar.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace kleinian {

enum class Var : int { X = 0, Y = 1, Z = 2, T = 3, U = 4 };
constexpr int kNumVars = 5;

char var_name(Var v);

using Mono = std::array<std::uint32_t, kNumVars>;

unsigned mono_degree(const Mono &m);

// Graded-lex, larger monomials first.
struct MonoOrder {
    bool operator()(const Mono &a, const Mono &b) const {
        unsigned da = mono_degree(a), db = mono_degree(b);
        if (da != db)
            return da > db;
        return a > b;
    }
};

class MPoly {
public:
    using Terms = std::map<Mono, CycScalar, MonoOrder>;

    MPoly() = default;
    MPoly(const CycScalar &c);
    MPoly(long c) : MPoly(CycScalar(c)) {}
    MPoly(int c) : MPoly(CycScalar(c)) {}

    static MPoly var(Var v, unsigned power = 1);
    static MPoly monomial(const Mono &m, const CycScalar &c);
    // Univariate polynomial sum_j coeffs[j] * v^j.
    static MPoly univariate(Var v, const std::vector<CycScalar> &coeffs);

    const Terms &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    CycScalar constant_term() const;
    CycScalar coeff(const Mono &m) const;
    std::size_t size() const { return terms_.size(); }

    unsigned degree(Var v) const;
    unsigned total_degree() const;
    bool involves(Var v) const { return degree(v) > 0; }
    // Smallest exponent of v over all terms; 0 for the zero polynomial.
    unsigned min_degree(Var v) const;
    // Coefficients in v: result[j] is the coefficient of v^j (free of v).
    std::vector<MPoly> coefficients_in(Var v) const;
    // Coefficients of a univariate polynomial in v as scalars; throws if
    // other variables occur.
    std::vector<CycScalar> univariate_coeffs(Var v) const;

    void add_term(const Mono &m, const CycScalar &c);

    MPoly operator-() const;
    MPoly &operator+=(const MPoly &o);
    MPoly &operator-=(const MPoly &o);
    MPoly &operator*=(const MPoly &o);
    MPoly &operator*=(const CycScalar &c);
    friend MPoly operator+(MPoly a, const MPoly &b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly &b) { return a -= b; }
    friend MPoly operator*(const MPoly &a, const MPoly &b);
    friend MPoly operator*(MPoly a, const CycScalar &c) { return a *= c; }
    friend MPoly operator*(const CycScalar &c, MPoly a) { return a *= c; }
    friend MPoly operator*(long c, MPoly a) { return a *= CycScalar(c); }
    friend MPoly operator*(MPoly a, long c) { return a *= CycScalar(c); }
    friend bool operator==(const MPoly &a, const MPoly &b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const MPoly &a, const MPoly &b) { return !(a == b); }

    MPoly pow(unsigned e) const;
    MPoly derivative(Var v) const;
    // f(v -> v + c), by Horner in v.
    MPoly shift(Var v, const MPoly &c) const;
    MPoly substitute(Var v, const MPoly &value) const;
    MPoly substitute(const std::map<Var, MPoly> &bindings) const;
    // Exact division by v^power; throws NotDivisible otherwise.
    MPoly divide_by_var(Var v, unsigned power = 1) const;
    // Multiply by v^power.
    MPoly times_var(Var v, unsigned power = 1) const;

    std::string to_string() const;

private:
    Terms terms_;
};

MPoly shift_sigma(const MPoly &f, long m);
MPoly delta_m(const MPoly &f, long m, unsigned iterations);

// det d(f, g, psi)/d(x, y, z).
MPoly jacobian_bracket(const MPoly &f, const MPoly &g, const MPoly &psi);

} // namespace kleinian
