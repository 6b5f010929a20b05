#pragma once

#include <compare>
#include <optional>
#include <string>

namespace kleinian {

// Filtration degree with deg(0) = -infinity.
class Degree {
public:
    Degree() = default;
    Degree(long v) : v_(v) {}
    static Degree minus_infinity() { return Degree(); }

    bool is_finite() const { return v_.has_value(); }
    long value() const { return *v_; }

    friend bool operator==(const Degree &a, const Degree &b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Degree &a, const Degree &b) {
        if (!a.v_ || !b.v_)
            return a.v_.has_value() <=> b.v_.has_value();
        return *a.v_ <=> *b.v_;
    }
    friend Degree operator+(const Degree &a, const Degree &b) {
        if (!a.v_ || !b.v_)
            return {};
        return Degree(*a.v_ + *b.v_);
    }
    friend Degree max(const Degree &a, const Degree &b) { return a < b ? b : a; }

    std::string to_string() const { return v_ ? std::to_string(*v_) : "-inf"; }

private:
    std::optional<long> v_;
};

} // namespace kleinian
