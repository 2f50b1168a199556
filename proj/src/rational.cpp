#include "rsic/rational.hpp"

#include <cctype>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace rsic {

namespace {

bool isDecimalInteger(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

mpz_class parseInteger(std::string_view s) {
    if (!isDecimalInteger(s)) {
        throw std::invalid_argument("not a decimal integer: '" + std::string(s) + "'");
    }
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return mpz_class(digits, 10);
}

std::int64_t toInt64(const mpz_class& z) {
    if (!z.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits: " + z.get_str());
    return static_cast<std::int64_t>(z.get_si());
}

}  // namespace

Rational::Rational(std::int64_t value) : value_(static_cast<long>(value)) {}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
    if (denominator == 0) throw std::invalid_argument("zero denominator");
    value_ = mpq_class(mpz_class(static_cast<long>(numerator)), mpz_class(static_cast<long>(denominator)));
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(mpq_class(parseInteger(text)));
    }
    const mpz_class num = parseInteger(text.substr(0, slash));
    const std::string_view denText = text.substr(slash + 1);
    if (!denText.empty() && (denText[0] == '-' || denText[0] == '+')) {
        throw std::invalid_argument("denominator must be unsigned: '" + std::string(text) + "'");
    }
    const mpz_class den = parseInteger(denText);
    if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    return Rational(mpq_class(num, den));
}

Rational Rational::pow(const Rational& base, int exponent) {
    if (exponent < 0) {
        if (base.sign() == 0) throw std::domain_error("zero to a negative power");
        return Rational(1) / pow(base, -exponent);
    }
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), base.value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), base.value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(mpq_class(num, den));
}

std::string Rational::str() const { return value_.get_str(10); }

double Rational::toDouble() const { return value_.get_d(); }

std::string Rational::numeratorStr() const { return value_.get_num().get_str(10); }
std::string Rational::denominatorStr() const { return value_.get_den().get_str(10); }

bool Rational::isInteger() const { return value_.get_den() == 1; }

std::int64_t Rational::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return toInt64(q);
}

std::int64_t Rational::ceil() const {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return toInt64(q);
}

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}
Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}
Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}
Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.sign() == 0) throw std::domain_error("division by zero");
    value_ /= rhs.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.str(); }

}  // namespace rsic

std::size_t std::hash<rsic::Rational>::operator()(const rsic::Rational& r) const noexcept {
    return std::hash<std::string>{}(r.str());
}
