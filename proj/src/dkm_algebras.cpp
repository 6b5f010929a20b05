#include "kleinian/dkm_algebras.hpp"

#include "kleinian/errors.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>

namespace kleinian {

void require_same(const DefParamD &a, const DefParamD &b) {
    if (a != b)
        throw ParamMismatch("operands live in " + a.to_string() + " and " + b.to_string());
}

namespace {

const MPoly X = MPoly::var(Var::X), Y = MPoly::var(Var::Y), Z = MPoly::var(Var::Z);

// Solves A c = b exactly; nullopt if inconsistent or not unique.
std::optional<std::vector<CycScalar>> solve_unique(std::vector<std::vector<CycScalar>> A,
                                                   std::vector<CycScalar> b) {
    const std::size_t rows = A.size(), cols = rows ? A[0].size() : 0;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && A[p][c].is_zero())
            ++p;
        if (p == rows)
            continue;
        std::swap(A[p], A[r]);
        std::swap(b[p], b[r]);
        const CycScalar inv = A[r][c].inverse();
        for (std::size_t j = c; j < cols; ++j)
            A[r][j] = A[r][j] * inv;
        b[r] = b[r] * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || A[i][c].is_zero())
                continue;
            const CycScalar f = A[i][c];
            for (std::size_t j = c; j < cols; ++j)
                A[i][j] = A[i][j] - f * A[r][j];
            b[i] = b[i] - f * b[r];
        }
        pivots.push_back(c);
        ++r;
    }
    if (pivots.size() != cols)
        return std::nullopt;
    for (std::size_t i = r; i < rows; ++i)
        if (!b[i].is_zero())
            return std::nullopt;
    std::vector<CycScalar> sol(cols);
    for (std::size_t i = 0; i < r; ++i)
        sol[pivots[i]] = b[i];
    return sol;
}

// (x-1) f(-x(x-1)) + (x+1) f(-x(x+1)) for f in u.
MPoly levy_rhs(const MPoly &f) {
    const MPoly a = -(X * (X - 1)), b = -(X * (X + 1));
    return (X - 1) * f.substitute(Var::U, a) + (X + 1) * f.substitute(Var::U, b);
}

MPoly levy_lhs(const MPoly &Q) {
    const MPoly a = -(X * (X - 1)), b = -(X * (X + 1));
    return Q.substitute(Var::X, a) - Q.substitute(Var::X, b);
}

// z^2 -> gamma y - Q(x) - x y^2 in the deformation.
MPoly z_square_def(const DefParamD &p) {
    return Y * p.gamma() - p.Q() - X * Y * Y;
}

MPoly reduce_z(const MPoly &raw, const MPoly &zsq) {
    std::vector<MPoly> c = raw.coefficients_in(Var::Z);
    MPoly A(1), B; // z^k = A + B z
    MPoly out;
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (!c[k].is_zero())
            out += c[k] * (A + B * Z);
        MPoly nA = B * zsq;
        B = A;
        A = nA;
    }
    return out;
}

struct QuantCache {
    std::recursive_mutex mutex;
    LevyP levy;
    MPoly Px;
    MPoly z_square; // normal form of z^2
    std::map<std::pair<Mono, int>, MPoly> memo;
};

QuantCache &quant_cache(const DefParamD &p) {
    std::lock_guard<std::mutex> lock(p.cache_mutex());
    auto &slot = p.cache();
    if (!slot) {
        auto c = std::make_shared<QuantCache>();
        c->levy = solve_p_levy(p);
        c->Px = c->levy.in_x();
        const long n = p.n();
        // z^2 = 2zy + gamma y - Q(x) - x(y^2 - n), zy = yz - y^2 - P(x) + n
        c->z_square = 2 * (Y * Z - Y * Y - c->Px + MPoly(n)) + Y * p.gamma() - p.Q() - X * Y * Y +
                      n * X;
        slot = c;
    }
    return *std::static_pointer_cast<QuantCache>(slot);
}

Mono mono(unsigned a, unsigned b, unsigned c) {
    Mono m{};
    m[0] = a, m[1] = b, m[2] = c;
    return m;
}

MPoly word(unsigned a, unsigned b, unsigned c) { return MPoly::monomial(mono(a, b, c), 1); }

MPoly times_gen(QuantCache &qc, const DefParamD &p, const MPoly &A, Var g);
MPoly times_poly(QuantCache &qc, const DefParamD &p, const MPoly &A, const MPoly &B);

// Ordered word x^a y^b z^c times a generator, in normal order.
MPoly word_times_gen(QuantCache &qc, const DefParamD &p, const Mono &m, Var g) {
    const auto key = std::make_pair(m, static_cast<int>(g));
    if (auto it = qc.memo.find(key); it != qc.memo.end())
        return it->second;
    const unsigned a = m[0], b = m[1], c = m[2];
    MPoly r;
    switch (g) {
    case Var::X:
        if (c == 1) {
            // zx = xz + 2xy - 2z - gamma
            const MPoly w = word_times_gen(qc, p, mono(a, b, 0), Var::X);
            r = times_gen(qc, p, w, Var::Z) + 2 * times_gen(qc, p, w, Var::Y) - 2 * word(a, b, 1) -
                word(a, b, 0) * p.gamma();
        } else if (b == 0) {
            r = word(a + 1, 0, 0);
        } else {
            // yx = xy - 2z
            const MPoly w = word_times_gen(qc, p, mono(a, b - 1, 0), Var::X);
            r = times_gen(qc, p, w, Var::Y) - 2 * word(a, b - 1, 1);
        }
        break;
    case Var::Y:
        if (c == 0) {
            r = word(a, b + 1, 0);
        } else {
            // zy = yz - y^2 - P(x) + n
            r = word(a, b + 1, 1) - word(a, b + 2, 0) - times_poly(qc, p, word(a, b, 0), qc.Px) +
                p.n() * word(a, b, 0);
        }
        break;
    case Var::Z:
        r = c == 0 ? word(a, b, 1) : times_poly(qc, p, word(a, b, 0), qc.z_square);
        break;
    default:
        throw UnknownVariable(std::string("no generator ") + var_name(g) + " in the type D algebra");
    }
    qc.memo.emplace(key, r);
    return r;
}

MPoly times_gen(QuantCache &qc, const DefParamD &p, const MPoly &A, Var g) {
    MPoly r;
    for (const auto &[m, c] : A.terms())
        r += word_times_gen(qc, p, m, g) * c;
    return r;
}

MPoly times_poly(QuantCache &qc, const DefParamD &p, const MPoly &A, const MPoly &B) {
    MPoly r;
    for (const auto &[m, c] : B.terms()) {
        MPoly acc = A;
        for (unsigned i = 0; i < m[0]; ++i)
            acc = times_gen(qc, p, acc, Var::X);
        for (unsigned i = 0; i < m[1]; ++i)
            acc = times_gen(qc, p, acc, Var::Y);
        for (unsigned i = 0; i < m[2]; ++i)
            acc = times_gen(qc, p, acc, Var::Z);
        r += acc * c;
    }
    return r;
}

void check_xyz(const MPoly &raw) {
    if (raw.involves(Var::T) || raw.involves(Var::U))
        throw InvalidParameter("type D elements are polynomials in x, y, z: " + raw.to_string());
}

Degree weighted_degree(const MPoly &body, long n) {
    Degree d = Degree::minus_infinity();
    for (const auto &[m, c] : body.terms())
        d = max(d, Degree(4L * m[0] + 2L * (n - 2) * m[1] + 2L * (n - 1) * m[2]));
    return d;
}

} // namespace

MPoly levy_residual(const DefParamD &param, const MPoly &P_in_u) {
    return levy_lhs(param.Q()) - levy_rhs(P_in_u);
}

LevyP solve_p_levy(const DefParamD &param) {
    const int n = param.n();
    const MPoly lhs = levy_lhs(param.Q());
    std::vector<MPoly> cols;
    for (int j = 0; j <= n - 2; ++j)
        cols.push_back(levy_rhs(MPoly::var(Var::U, j)));
    unsigned deg = lhs.degree(Var::X);
    for (const auto &c : cols)
        deg = std::max(deg, c.degree(Var::X));
    std::vector<std::vector<CycScalar>> A(deg + 1, std::vector<CycScalar>(cols.size()));
    std::vector<CycScalar> b(deg + 1);
    for (unsigned i = 0; i <= deg; ++i) {
        Mono m{};
        m[0] = i;
        b[i] = lhs.coeff(m);
        for (std::size_t j = 0; j < cols.size(); ++j)
            A[i][j] = cols[j].coeff(m);
    }
    auto sol = solve_unique(A, b);
    if (!sol)
        throw InconsistentSystem("no unique Levy polynomial for " + param.to_string());
    LevyP out{MPoly::univariate(Var::U, *sol)};
    if (!levy_residual(param, out.P).is_zero())
        throw InconsistentSystem("Levy residual is nonzero for " + param.to_string());
    return out;
}

MPoly psi_d(const DefParamD &param) {
    return param.Q() + X * Y * Y + Z * Z - Y * param.gamma();
}

ElemDDef::ElemDDef(const DefParamD &param, const MPoly &raw) : param_(param) {
    check_xyz(raw);
    body_ = reduce_z(raw, z_square_def(param));
}

ElemDDef ElemDDef::gen(const DefParamD &param, Var v) {
    if (v != Var::X && v != Var::Y && v != Var::Z)
        throw UnknownVariable(std::string("no generator ") + var_name(v) + " in the type D algebra");
    return ElemDDef(param, MPoly::var(v));
}

MPoly ElemDDef::f() const {
    auto c = body_.coefficients_in(Var::Z);
    return c.empty() ? MPoly() : c[0];
}

MPoly ElemDDef::g() const {
    auto c = body_.coefficients_in(Var::Z);
    return c.size() > 1 ? c[1] : MPoly();
}

ElemDDef ElemDDef::operator-() const {
    ElemDDef r = *this;
    r.body_ = -r.body_;
    return r;
}

ElemDDef &ElemDDef::operator+=(const ElemDDef &o) {
    require_same(param_, o.param_);
    body_ += o.body_;
    return *this;
}

ElemDDef &ElemDDef::operator-=(const ElemDDef &o) {
    require_same(param_, o.param_);
    body_ -= o.body_;
    return *this;
}

ElemDDef operator*(const ElemDDef &a, const ElemDDef &b) {
    require_same(a.param_, b.param_);
    return ElemDDef(a.param_, a.body_ * b.body_);
}

ElemDDef operator*(const CycScalar &c, const ElemDDef &a) {
    ElemDDef r = a;
    r.body_ *= c;
    return r;
}

bool operator==(const ElemDDef &a, const ElemDDef &b) {
    return a.param_ == b.param_ && a.body_ == b.body_;
}

Degree ElemDDef::fdeg() const { return weighted_degree(body_, param_.n()); }

ElemDDef normalize_d_def(const MPoly &raw, const DefParamD &param) { return ElemDDef(param, raw); }

ElemDDef poisson_bracket_d(const ElemDDef &a, const ElemDDef &b) {
    require_same(a.param(), b.param());
    return ElemDDef(a.param(), jacobian_bracket(a.body(), b.body(), psi_d(a.param())));
}

ElemDQuant::ElemDQuant(const DefParamD &param, const MPoly &ordered) : param_(param) {
    check_xyz(ordered);
    QuantCache &qc = quant_cache(param);
    std::lock_guard<std::recursive_mutex> lock(qc.mutex);
    for (const auto &[m, c] : ordered.terms()) {
        if (m[2] <= 1) {
            body_.add_term(m, c);
            continue;
        }
        MPoly acc = word(m[0], m[1], 1);
        for (unsigned i = 1; i < m[2]; ++i)
            acc = times_gen(qc, param, acc, Var::Z);
        body_ += acc * c;
    }
}

ElemDQuant ElemDQuant::gen(const DefParamD &param, Var v) {
    if (v != Var::X && v != Var::Y && v != Var::Z)
        throw UnknownVariable(std::string("no generator ") + var_name(v) + " in the type D algebra");
    return ElemDQuant(param, MPoly::var(v), Normalized{});
}

ElemDQuant ElemDQuant::operator-() const { return ElemDQuant(param_, -body_, Normalized{}); }

ElemDQuant &ElemDQuant::operator+=(const ElemDQuant &o) {
    require_same(param_, o.param_);
    body_ += o.body_;
    return *this;
}

ElemDQuant &ElemDQuant::operator-=(const ElemDQuant &o) {
    require_same(param_, o.param_);
    body_ -= o.body_;
    return *this;
}

ElemDQuant operator*(const ElemDQuant &a, const ElemDQuant &b) {
    require_same(a.param_, b.param_);
    QuantCache &qc = quant_cache(a.param_);
    std::lock_guard<std::recursive_mutex> lock(qc.mutex);
    return ElemDQuant(a.param_, times_poly(qc, a.param_, a.body_, b.body_), ElemDQuant::Normalized{});
}

ElemDQuant operator*(const CycScalar &c, const ElemDQuant &a) {
    return ElemDQuant(a.param_, a.body_ * c, ElemDQuant::Normalized{});
}

bool operator==(const ElemDQuant &a, const ElemDQuant &b) {
    return a.param_ == b.param_ && a.body_ == b.body_;
}

ElemDQuant ElemDQuant::pow(unsigned e) const {
    ElemDQuant r(param_, MPoly(1), Normalized{});
    for (unsigned i = 0; i < e; ++i)
        r = r * *this;
    return r;
}

Degree ElemDQuant::fdeg() const { return weighted_degree(body_, param_.n()); }

ElemDQuant mul_d_quant(const ElemDQuant &a, const ElemDQuant &b) { return a * b; }

ElemDQuant commutator_d(const ElemDQuant &a, const ElemDQuant &b) { return a * b - b * a; }

void check_associative_d(const ElemDQuant &a, const ElemDQuant &b, const ElemDQuant &c) {
    const ElemDQuant diff = (a * b) * c - a * (b * c);
    if (!diff.is_zero())
        throw NonAssociative("(ab)c - a(bc) = " + diff.to_string() + " for a = " + a.to_string() +
                             ", b = " + b.to_string() + ", c = " + c.to_string() + " in " +
                             a.param().to_string());
}

Degree fdeg_d(const ElemDDef &a) { return a.fdeg(); }
Degree fdeg_d(const ElemDQuant &a) { return a.fdeg(); }

} // namespace kleinian
