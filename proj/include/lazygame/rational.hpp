#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace lazygame {

// Exact rational arithmetic for payoff thresholds. Values stay tiny in this
// library, but every operation still checks for int64 overflow and throws.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t num);  // NOLINT: integers convert implicitly
    Rational(std::int64_t num, std::int64_t den);

    // Accepts "5", "-7/2", with optional surrounding whitespace.
    static Rational parse(const std::string& text);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    // Canonical form: "n" when the denominator is 1, else "n/d".
    std::string str() const;

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator-() const;

    bool operator==(const Rational& o) const = default;
    std::strong_ordering operator<=>(const Rational& o) const;

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace lazygame
