#include "kleinian/scalar.hpp"

#include "kleinian/errors.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace kleinian {

namespace {

using Poly = std::vector<mpq_class>;

Poly poly_mul(const Poly &a, const Poly &b) {
    if (a.empty() || b.empty())
        return {};
    Poly r(a.size() + b.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    return r;
}

// Exact quotient of a by a monic b.
Poly poly_div_monic(Poly a, const Poly &b) {
    const std::size_t db = b.size() - 1;
    Poly q(a.size() - db, mpq_class(0));
    for (std::size_t i = a.size(); i-- > db;) {
        mpq_class c = a[i];
        q[i - db] = c;
        if (c == 0)
            continue;
        for (std::size_t j = 0; j <= db; ++j)
            a[i - db + j] -= c * b[j];
    }
    return q;
}

Poly cyclotomic_poly(int k) {
    Poly num(k + 1, mpq_class(0));
    num[0] = -1;
    num[k] = 1;
    for (int d = 1; d < k; ++d)
        if (k % d == 0)
            num = poly_div_monic(num, cyclotomic_poly(d));
    return num;
}

std::mutex &field_mutex() {
    static std::mutex m;
    return m;
}

int g_session_k = 4;

} // namespace

CycField::CycField(int k) : k_(k), phi_(cyclotomic_poly(k)) {
    const int deg = degree();
    // u^deg = -(phi_0 + ... + phi_{deg-1} u^{deg-1})
    Poly cur(deg, mpq_class(0));
    for (int j = 0; j < deg; ++j)
        cur[j] = -phi_[j];
    for (int j = 0; j < deg; ++j) {
        reduce_.push_back(cur);
        // multiply by u and reduce again
        Poly next(deg, mpq_class(0));
        mpq_class top = cur[deg - 1];
        for (int i = deg - 1; i > 0; --i)
            next[i] = cur[i - 1];
        for (int i = 0; i < deg; ++i)
            next[i] -= top * phi_[i];
        cur = std::move(next);
    }
}

const CycField *CycField::get(int k) {
    if (k < 1)
        throw InvalidParameter("cyclotomic index must be positive");
    std::lock_guard<std::mutex> lock(field_mutex());
    static std::map<int, std::unique_ptr<CycField>> fields;
    auto &slot = fields[k];
    if (!slot)
        slot.reset(new CycField(k));
    return slot.get();
}

void set_cyclotomic_index(int k) {
    CycField::get(k);
    g_session_k = k;
}

int cyclotomic_index() { return g_session_k; }

const CycField *session_field() { return CycField::get(g_session_k); }

ScopedCyclotomicIndex::ScopedCyclotomicIndex(int k) : saved_(g_session_k) {
    set_cyclotomic_index(k);
}

ScopedCyclotomicIndex::~ScopedCyclotomicIndex() { g_session_k = saved_; }

CycScalar::CycScalar(const mpq_class &q) {
    if (q != 0)
        c_.push_back(q);
}

CycScalar::CycScalar(long num, long den) {
    if (den == 0)
        throw DivisionByZero("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    if (q != 0)
        c_.push_back(q);
}

CycScalar::CycScalar(const CycField *f, std::vector<mpq_class> coeffs)
    : f_(f), c_(std::move(coeffs)) {
    const int deg = f->degree();
    if (static_cast<int>(c_.size()) > deg) {
        std::vector<mpq_class> r(c_.begin(), c_.begin() + deg);
        for (std::size_t j = deg; j < c_.size(); ++j) {
            if (c_[j] == 0)
                continue;
            const auto &red = f->reduction(static_cast<int>(j) - deg);
            for (int i = 0; i < deg; ++i)
                r[i] += c_[j] * red[i];
        }
        // Reduction table only covers exponents below 2*deg.
        if (static_cast<int>(c_.size()) > 2 * deg)
            throw InvalidParameter("coefficient vector too long");
        c_ = std::move(r);
    }
    trim();
}

CycScalar CycScalar::zeta() {
    const CycField *f = session_field();
    std::vector<mpq_class> c(2, mpq_class(0));
    c[1] = 1;
    if (f->degree() == 1) // k = 1 or 2: zeta is rational
        return CycScalar(f->k() == 1 ? 1 : -1);
    return CycScalar(f, std::move(c));
}

CycScalar CycScalar::imag() {
    const CycField *f = session_field();
    if (!f->has_i())
        throw InvalidParameter("cyclotomic index " + std::to_string(f->k()) +
                               " does not contain i");
    return zeta().pow(f->k() / 4);
}

void CycScalar::trim() {
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
    if (c_.size() <= 1)
        f_ = nullptr;
}

mpq_class CycScalar::coeff(int j) const {
    return j < static_cast<int>(c_.size()) ? c_[j] : mpq_class(0);
}

bool CycScalar::is_one() const { return c_.size() == 1 && c_[0] == 1; }

mpq_class CycScalar::rational() const {
    if (!is_rational())
        throw InvalidParameter("scalar " + to_string() + " is not rational");
    return coeff(0);
}

const CycField *common_field(const CycScalar &a, const CycScalar &b) {
    if (!a.field())
        return b.field();
    if (!b.field() || a.field() == b.field())
        return a.field();
    throw FieldMismatch("scalars from Q(zeta_" + std::to_string(a.field()->k()) +
                        ") and Q(zeta_" + std::to_string(b.field()->k()) + ")");
}

CycScalar CycScalar::operator-() const {
    CycScalar r = *this;
    for (auto &c : r.c_)
        c = -c;
    return r;
}

CycScalar &CycScalar::operator+=(const CycScalar &o) {
    f_ = common_field(*this, o);
    if (c_.size() < o.c_.size())
        c_.resize(o.c_.size(), mpq_class(0));
    for (std::size_t j = 0; j < o.c_.size(); ++j)
        c_[j] += o.c_[j];
    trim();
    return *this;
}

CycScalar &CycScalar::operator-=(const CycScalar &o) {
    f_ = common_field(*this, o);
    if (c_.size() < o.c_.size())
        c_.resize(o.c_.size(), mpq_class(0));
    for (std::size_t j = 0; j < o.c_.size(); ++j)
        c_[j] -= o.c_[j];
    trim();
    return *this;
}

CycScalar operator*(const CycScalar &a, const CycScalar &b) {
    const CycField *f = common_field(a, b);
    if (a.c_.empty() || b.c_.empty())
        return {};
    if (!f) {
        CycScalar r;
        r.c_.push_back(a.c_[0] * b.c_[0]);
        return r;
    }
    return CycScalar(f, poly_mul(a.c_, b.c_));
}

CycScalar &CycScalar::operator*=(const CycScalar &o) { return *this = *this * o; }

CycScalar &CycScalar::operator/=(const CycScalar &o) { return *this = *this * o.inverse(); }

bool operator==(const CycScalar &a, const CycScalar &b) {
    if (a.c_.size() != b.c_.size())
        return false;
    if (a.f_ && b.f_ && a.f_ != b.f_)
        throw FieldMismatch("comparing scalars from different cyclotomic fields");
    return a.c_ == b.c_;
}

bool operator<(const CycScalar &a, const CycScalar &b) {
    if (a.c_.size() != b.c_.size())
        return a.c_.size() < b.c_.size();
    for (std::size_t j = 0; j < a.c_.size(); ++j)
        if (a.c_[j] != b.c_[j])
            return a.c_[j] < b.c_[j];
    return false;
}

CycScalar CycScalar::inverse() const {
    if (is_zero())
        throw DivisionByZero("inverse of zero");
    if (!f_) {
        CycScalar r;
        r.c_.push_back(1 / c_[0]);
        return r;
    }
    // Solve (multiplication by this) * v = 1 in the power basis.
    const int d = f_->degree();
    std::vector<std::vector<mpq_class>> m(d, std::vector<mpq_class>(d + 1, mpq_class(0)));
    for (int col = 0; col < d; ++col) {
        std::vector<mpq_class> basis(col + 1, mpq_class(0));
        basis[col] = 1;
        CycScalar prod = *this * CycScalar(f_, basis);
        for (int row = 0; row < d; ++row)
            m[row][col] = prod.coeff(row);
    }
    m[0][d] = 1;
    for (int col = 0; col < d; ++col) {
        int piv = col;
        while (piv < d && m[piv][col] == 0)
            ++piv;
        if (piv == d)
            throw DivisionByZero("singular multiplication matrix");
        std::swap(m[piv], m[col]);
        mpq_class inv = 1 / m[col][col];
        for (int j = col; j <= d; ++j)
            m[col][j] *= inv;
        for (int row = 0; row < d; ++row) {
            if (row == col || m[row][col] == 0)
                continue;
            mpq_class c = m[row][col];
            for (int j = col; j <= d; ++j)
                m[row][j] -= c * m[col][j];
        }
    }
    std::vector<mpq_class> v(d);
    for (int row = 0; row < d; ++row)
        v[row] = m[row][d];
    return CycScalar(f_, std::move(v));
}

CycScalar CycScalar::pow(long e) const {
    if (e < 0)
        return inverse().pow(-e);
    CycScalar result(1), base = *this;
    while (e) {
        if (e & 1)
            result *= base;
        e >>= 1;
        if (e)
            base *= base;
    }
    return result;
}

int CycScalar::term_count() const {
    int n = 0;
    for (const auto &c : c_)
        n += (c != 0);
    return n;
}

namespace {

std::string basis_name(const CycField *f, int j) {
    if (j == 0)
        return "";
    if (f && f->k() == 4)
        return "i";
    return j == 1 ? "zeta" : "zeta^" + std::to_string(j);
}

} // namespace

std::string CycScalar::to_string() const {
    if (c_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t j = 0; j < c_.size(); ++j) {
        const mpq_class &c = c_[j];
        if (c == 0)
            continue;
        mpq_class a = abs(c);
        if (first) {
            if (c < 0)
                out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        const std::string name = basis_name(f_, static_cast<int>(j));
        if (name.empty())
            out << a.get_str();
        else if (a == 1)
            out << name;
        else
            out << a.get_str() << "*" << name;
    }
    return out.str();
}

std::optional<int> root_of_unity_order(const CycScalar &a) {
    if (a.is_zero())
        return std::nullopt;
    const int k = a.field() ? a.field()->k() : 2;
    const int bound = std::lcm(2, k);
    CycScalar p = a;
    for (int d = 1; d <= bound; ++d) {
        if (p.is_one())
            return d;
        p *= a;
    }
    return std::nullopt;
}

} // namespace kleinian
