#include "n2vx/rational.hpp"
#include "n2vx/half_int.hpp"

#include <cctype>
#include <ostream>

namespace n2vx {

std::optional<Rational> Rational::parse(std::string_view s) {
    if (s.empty()) return std::nullopt;
    auto valid = [](std::string_view t, bool sign_ok) {
        if (t.empty()) return false;
        size_t i = 0;
        if (sign_ok && (t[0] == '-' || t[0] == '+')) i = 1;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    size_t slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    if (!valid(num, true)) return std::nullopt;
    mpz_class n{std::string{num}};
    if (slash == std::string_view::npos) return Rational(mpq_class{n});
    std::string_view den = s.substr(slash + 1);
    if (!valid(den, true)) return std::nullopt;
    mpz_class d{std::string{den}};
    if (d == 0) return std::nullopt;
    // mpq division of canonical integers yields a canonical fraction
    return Rational(mpq_class{n} / mpq_class{d});
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

std::optional<HalfInt> HalfInt::parse(std::string_view s) {
    auto r = Rational::parse(s);
    if (!r) return std::nullopt;
    Rational doubled = *r * Rational(2);
    if (!doubled.is_integer()) return std::nullopt;
    return HalfInt(doubled.to_long());
}

std::string HalfInt::str() const {
    if (is_integer()) return std::to_string(whole_part());
    return std::to_string(twice_) + "/2";
}

std::ostream& operator<<(std::ostream& os, HalfInt h) {
    return os << h.str();
}

}  // namespace n2vx
