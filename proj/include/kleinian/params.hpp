#pragma once

#include "kleinian/poly.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>

namespace kleinian {

// How t is treated in A_t(P): symbolic, or specialized to 1 or 0.
enum class TMode { Generic, One, Zero };

const char *tmode_name(TMode m);

// Type A parameter: monic P in z of degree n >= 2 with no z^(n-1) term.
class DefParamA {
public:
    DefParamA(int n, const MPoly &P);
    DefParamA(const MPoly &P);

    int n() const { return impl_->n; }
    const MPoly &P() const { return impl_->P; }
    // P(-z) = P(z) or P(-z) = -P(z).
    bool reflective() const;

    // sigma^j(P) = P(z - j h) where h is t, 1 or 0 according to the mode.
    const MPoly &shifted_P(long j, TMode mode) const;
    // prod_{j=lo}^{hi} sigma^j(P); the empty product is 1.
    const MPoly &shifted_P_product(long lo, long hi, TMode mode) const;

    friend bool operator==(const DefParamA &a, const DefParamA &b);
    friend bool operator!=(const DefParamA &a, const DefParamA &b) { return !(a == b); }

    std::string to_string() const;

private:
    struct Impl {
        int n;
        MPoly P;
        mutable std::mutex mutex;
        mutable std::map<std::pair<int, long>, MPoly> shifted;
        mutable std::map<std::tuple<int, long, long>, MPoly> products;
    };
    std::shared_ptr<const Impl> impl_;
};

// Type D parameter: monic Q in x of degree n - 1 >= 3 and gamma.
class DefParamD {
public:
    DefParamD(int n, const MPoly &Q, const CycScalar &gamma);

    int n() const { return impl_->n; }
    const MPoly &Q() const { return impl_->Q; }
    const CycScalar &gamma() const { return impl_->gamma; }

    // Per-parameter cache slot for the type D algebra code.
    std::shared_ptr<void> &cache() const { return impl_->cache; }
    std::mutex &cache_mutex() const { return impl_->mutex; }

    friend bool operator==(const DefParamD &a, const DefParamD &b);
    friend bool operator!=(const DefParamD &a, const DefParamD &b) { return !(a == b); }

    std::string to_string() const;

private:
    struct Impl {
        int n;
        MPoly Q;
        CycScalar gamma;
        mutable std::mutex mutex;
        mutable std::shared_ptr<void> cache;
    };
    std::shared_ptr<const Impl> impl_;
};

} // namespace kleinian
