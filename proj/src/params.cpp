#include "kleinian/params.hpp"

#include "kleinian/errors.hpp"

namespace kleinian {

const char *tmode_name(TMode m) {
    switch (m) {
    case TMode::Generic:
        return "t-version";
    case TMode::One:
        return "t=1";
    case TMode::Zero:
        return "t=0";
    }
    return "?";
}

DefParamA::DefParamA(const MPoly &P) : DefParamA(static_cast<int>(P.degree(Var::Z)), P) {}

DefParamA::DefParamA(int n, const MPoly &P) {
    if (n < 2)
        throw InvalidParameter("type A parameter needs n >= 2");
    std::vector<CycScalar> c = P.univariate_coeffs(Var::Z);
    if (static_cast<int>(c.size()) != n + 1 || !c[n].is_one())
        throw InvalidParameter("P = " + P.to_string() + " is not monic of degree " +
                               std::to_string(n));
    if (!c[n - 1].is_zero())
        throw InvalidParameter("P = " + P.to_string() + " has a z^" + std::to_string(n - 1) +
                               " term");
    auto impl = std::make_shared<Impl>();
    impl->n = n;
    impl->P = P;
    impl_ = impl;
}

bool DefParamA::reflective() const {
    MPoly neg = P().substitute(Var::Z, -MPoly::var(Var::Z));
    return neg == P() || neg == -P();
}

namespace {

MPoly shift_for_mode(const MPoly &f, long j, TMode mode) {
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

} // namespace

const MPoly &DefParamA::shifted_P(long j, TMode mode) const {
    std::lock_guard<std::mutex> lock(impl_->mutex);
    auto key = std::make_pair(static_cast<int>(mode), j);
    auto it = impl_->shifted.find(key);
    if (it != impl_->shifted.end())
        return it->second;
    return impl_->shifted.emplace(key, shift_for_mode(impl_->P, j, mode)).first->second;
}

const MPoly &DefParamA::shifted_P_product(long lo, long hi, TMode mode) const {
    auto key = std::make_tuple(static_cast<int>(mode), lo, hi);
    {
        std::lock_guard<std::mutex> lock(impl_->mutex);
        auto it = impl_->products.find(key);
        if (it != impl_->products.end())
            return it->second;
    }
    MPoly r(1);
    if (lo <= hi)
        r = shifted_P_product(lo, hi - 1, mode) * shifted_P(hi, mode);
    std::lock_guard<std::mutex> lock(impl_->mutex);
    return impl_->products.emplace(key, std::move(r)).first->second;
}

bool operator==(const DefParamA &a, const DefParamA &b) {
    return a.impl_ == b.impl_ || (a.n() == b.n() && a.P() == b.P());
}

std::string DefParamA::to_string() const { return "A(n=" + std::to_string(n()) + ", P=" + P().to_string() + ")"; }

DefParamD::DefParamD(int n, const MPoly &Q, const CycScalar &gamma) {
    if (n < 4)
        throw InvalidParameter("type D parameter needs n >= 4");
    std::vector<CycScalar> c = Q.univariate_coeffs(Var::X);
    if (static_cast<int>(c.size()) != n || !c[n - 1].is_one())
        throw InvalidParameter("Q = " + Q.to_string() + " is not monic of degree " +
                               std::to_string(n - 1));
    auto impl = std::make_shared<Impl>();
    impl->n = n;
    impl->Q = Q;
    impl->gamma = gamma;
    impl_ = impl;
}

bool operator==(const DefParamD &a, const DefParamD &b) {
    return a.impl_ == b.impl_ ||
           (a.n() == b.n() && a.Q() == b.Q() && a.gamma() == b.gamma());
}

std::string DefParamD::to_string() const {
    return "D(n=" + std::to_string(n()) + ", Q=" + Q().to_string() +
           ", gamma=" + gamma().to_string() + ")";
}

} // namespace kleinian
