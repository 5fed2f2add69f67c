#include "lazygame/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace lazygame {

namespace {

std::int64_t checked_narrow(__int128 v, const char* what) {
    if (v > INT64_MAX || v < INT64_MIN) {
        throw std::overflow_error(std::string("rational overflow in ") + what);
    }
    return static_cast<std::int64_t>(v);
}

}  // namespace

Rational::Rational(std::int64_t num) : num_(num), den_(1) {}

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw std::invalid_argument("rational with zero denominator");
    if (den_ < 0) {
        num_ = checked_narrow(-static_cast<__int128>(num_), "negate");
        den_ = checked_narrow(-static_cast<__int128>(den_), "negate");
    }
    std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::parse(const std::string& text) {
    std::size_t begin = text.find_first_not_of(" \t");
    std::size_t end = text.find_last_not_of(" \t");
    if (begin == std::string::npos) throw std::invalid_argument("empty rational literal");
    std::string body = text.substr(begin, end - begin + 1);

    std::size_t slash = body.find('/');
    try {
        std::size_t used = 0;
        std::int64_t num = std::stoll(body.substr(0, slash), &used);
        if (slash == std::string::npos) {
            if (used != body.size()) throw std::invalid_argument(body);
            return Rational(num);
        }
        if (used != slash) throw std::invalid_argument(body);
        std::string den_text = body.substr(slash + 1);
        std::int64_t den = std::stoll(den_text, &used);
        if (used != den_text.size()) throw std::invalid_argument(body);
        return Rational(num, den);
    } catch (const std::out_of_range&) {
        throw std::invalid_argument("rational literal out of range: " + body);
    }
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator+(const Rational& o) const {
    __int128 num = static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_;
    __int128 den = static_cast<__int128>(den_) * o.den_;
    return Rational(checked_narrow(num, "add"), checked_narrow(den, "add"));
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator-() const {
    Rational r;
    r.num_ = checked_narrow(-static_cast<__int128>(num_), "negate");
    r.den_ = den_;
    return r;
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
    __int128 lhs = static_cast<__int128>(num_) * o.den_;
    __int128 rhs = static_cast<__int128>(o.num_) * den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

}  // namespace lazygame
