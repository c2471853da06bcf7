#pragma once

#include "n2vx/rational.hpp"

#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>

namespace n2vx {

/// Element of (1/2)Z, stored as the doubled integer so arithmetic stays
/// exact and hashing/ordering are trivial. All mode indices in the algebras
/// live here: integer indices for L, T, e, h, f, alpha; half-odd ones for
/// G+-, psi+-.
class HalfInt {
public:
    constexpr HalfInt() : twice_(0) {}
    constexpr explicit HalfInt(long twice) : twice_(twice) {}

    static constexpr HalfInt whole(long n) { return HalfInt(2 * n); }
    static constexpr HalfInt halves(long twice) { return HalfInt(twice); }

    /// Accepts "n", "n/2" (also "n/1"); nullopt otherwise.
    static std::optional<HalfInt> parse(std::string_view s);

    constexpr long twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    constexpr bool is_half_odd() const { return twice_ % 2 != 0; }
    /// Precondition: is_integer().
    constexpr long whole_part() const { return twice_ / 2; }

    Rational to_rational() const { return Rational(twice_, 2); }
    std::string str() const;

    constexpr HalfInt operator-() const { return HalfInt(-twice_); }
    constexpr HalfInt operator+(HalfInt o) const { return HalfInt(twice_ + o.twice_); }
    constexpr HalfInt operator-(HalfInt o) const { return HalfInt(twice_ - o.twice_); }
    constexpr HalfInt& operator+=(HalfInt o) { twice_ += o.twice_; return *this; }
    constexpr HalfInt& operator-=(HalfInt o) { twice_ -= o.twice_; return *this; }

    friend constexpr bool operator==(HalfInt a, HalfInt b) = default;
    friend constexpr auto operator<=>(HalfInt a, HalfInt b) = default;

private:
    long twice_;
};

inline constexpr HalfInt half(long twice) { return HalfInt::halves(twice); }

std::ostream& operator<<(std::ostream& os, HalfInt h);

}  // namespace n2vx
