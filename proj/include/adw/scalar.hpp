#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace adw {

/**
 * Exact rational number, always stored in lowest terms with a positive
 * denominator. Text form is "p" or "p/q".
 */
class Scalar {
public:
    Scalar() = default;

    template <std::integral T>
    Scalar(T v) : q_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)

    Scalar(long num, long den);

    /// Parses "p" or "p/q"; throws InputError on malformed text or q == 0.
    static Scalar parse(std::string_view text);

    std::string str() const;
    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }
    bool is_integer() const;

    /// Numerator and denominator as strings (denominator > 0).
    std::string numerator() const;
    std::string denominator() const;

    /// Residue modulo a prime p; throws InputError when p divides the denominator.
    std::uint32_t mod(std::uint32_t p) const;

    Scalar& operator+=(const Scalar& o) { q_ += o.q_; return *this; }
    Scalar& operator-=(const Scalar& o) { q_ -= o.q_; return *this; }
    Scalar& operator*=(const Scalar& o) { q_ *= o.q_; return *this; }
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar operator-() const;

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

private:
    explicit Scalar(mpq_class q) : q_(std::move(q)) {}
    mpq_class q_;
};

}  // namespace adw
