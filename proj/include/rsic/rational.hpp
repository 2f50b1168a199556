#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace rsic {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Thin value wrapper over GMP's mpq_class; every constructor canonicalizes,
/// so two equal values always share one representation.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t numerator, std::int64_t denominator);
    explicit Rational(mpq_class value);

    /// Parses an integer ("3", "-2") or a fraction "p/q" with decimal p, q.
    /// Throws std::invalid_argument on malformed input or zero denominator.
    static Rational parse(std::string_view text);

    /// Integer power of a base, negative exponents allowed (base != 0).
    static Rational pow(const Rational& base, int exponent);

    /// "p/q" in lowest terms, or "p" when the denominator is 1.
    [[nodiscard]] std::string str() const;
    [[nodiscard]] double toDouble() const;

    [[nodiscard]] std::string numeratorStr() const;
    [[nodiscard]] std::string denominatorStr() const;
    [[nodiscard]] bool isInteger() const;
    [[nodiscard]] int sign() const { return sgn(value_); }

    /// Floor/ceiling for values whose result fits in int64; throws otherwise.
    [[nodiscard]] std::int64_t floor() const;
    [[nodiscard]] std::int64_t ceil() const;

    [[nodiscard]] const mpq_class& raw() const { return value_; }

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    friend Rational operator-(const Rational& v) { return Rational(mpq_class(-v.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& v);

private:
    mpq_class value_{0};
};

[[nodiscard]] inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
[[nodiscard]] inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace rsic

template <>
struct std::hash<rsic::Rational> {
    std::size_t operator()(const rsic::Rational& r) const noexcept;
};
