#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace kleinian {

// Q(zeta_k) as Q[u]/(Phi_k). Instances are interned and live for the program.
class CycField {
public:
    static const CycField *get(int k);

    int k() const { return k_; }
    int degree() const { return static_cast<int>(phi_.size()) - 1; }
    // Phi_k, lowest coefficient first, monic.
    const std::vector<mpq_class> &cyclotomic() const { return phi_; }
    // reduce_[j] is u^(degree + j) written in the power basis.
    const std::vector<mpq_class> &reduction(int j) const { return reduce_[j]; }
    bool has_i() const { return k_ % 4 == 0; }

private:
    explicit CycField(int k);
    int k_;
    std::vector<mpq_class> phi_;
    std::vector<std::vector<mpq_class>> reduce_;
};

void set_cyclotomic_index(int k);
int cyclotomic_index();
const CycField *session_field();

class ScopedCyclotomicIndex {
public:
    explicit ScopedCyclotomicIndex(int k);
    ~ScopedCyclotomicIndex();
    ScopedCyclotomicIndex(const ScopedCyclotomicIndex &) = delete;
    ScopedCyclotomicIndex &operator=(const ScopedCyclotomicIndex &) = delete;

private:
    int saved_;
};

// Element of Q(zeta_k). Coefficients are trimmed, so a rational has at most
// one coefficient and carries no field; it combines with any field.
class CycScalar {
public:
    CycScalar() = default;
    CycScalar(long v) : CycScalar(mpq_class(v)) {}
    CycScalar(int v) : CycScalar(mpq_class(v)) {}
    CycScalar(const mpq_class &q);
    CycScalar(long num, long den);
    CycScalar(const CycField *f, std::vector<mpq_class> coeffs);

    // zeta_k of the session field, i.e. i when k = 4.
    static CycScalar zeta();
    // The imaginary unit written in the session field. Requires 4 | k.
    static CycScalar imag();

    const CycField *field() const { return f_; }
    const std::vector<mpq_class> &coeffs() const { return c_; }
    mpq_class coeff(int j) const;

    bool is_zero() const { return c_.empty(); }
    bool is_one() const;
    bool is_rational() const { return c_.size() <= 1; }
    mpq_class rational() const;

    CycScalar operator-() const;
    CycScalar &operator+=(const CycScalar &o);
    CycScalar &operator-=(const CycScalar &o);
    CycScalar &operator*=(const CycScalar &o);
    CycScalar &operator/=(const CycScalar &o);
    friend CycScalar operator+(CycScalar a, const CycScalar &b) { return a += b; }
    friend CycScalar operator-(CycScalar a, const CycScalar &b) { return a -= b; }
    friend CycScalar operator*(const CycScalar &a, const CycScalar &b);
    friend CycScalar operator/(CycScalar a, const CycScalar &b) { return a /= b; }
    friend bool operator==(const CycScalar &a, const CycScalar &b);
    friend bool operator!=(const CycScalar &a, const CycScalar &b) { return !(a == b); }
    // Arbitrary but total order, used for canonical sorting only.
    friend bool operator<(const CycScalar &a, const CycScalar &b);

    CycScalar inverse() const;
    CycScalar pow(long e) const;

    std::string to_string() const;
    // Number of nonzero power-basis coefficients.
    int term_count() const;

private:
    void trim();
    const CycField *f_ = nullptr;
    std::vector<mpq_class> c_;
};

std::optional<int> root_of_unity_order(const CycScalar &a);

// The field both operands live in; throws FieldMismatch if they disagree.
const CycField *common_field(const CycScalar &a, const CycScalar &b);

} // namespace kleinian
