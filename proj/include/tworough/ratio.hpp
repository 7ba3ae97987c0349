#pragma once

#include <cstdint>
#include <string>

namespace tworough {

__extension__ typedef unsigned __int128 uint128_t;

// Nonnegative rational in lowest terms. The decimal form is derived on
// demand and never stored.
class Ratio {
public:
    Ratio() = default;
    Ratio(std::uint64_t num, std::uint64_t den);

    std::uint64_t num() const noexcept { return num_; }
    std::uint64_t den() const noexcept { return den_; }

    // Rounded half-up to `places` digits, e.g. "0.250000".
    std::string decimal(int places = 6) const;
    // "1/4", or "0" / "3" for integers.
    std::string to_string() const;
    double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

    friend bool operator==(const Ratio&, const Ratio&) = default;
    friend bool operator<(const Ratio& a, const Ratio& b) noexcept {
        return static_cast<uint128_t>(a.num_) * b.den_ <
               static_cast<uint128_t>(b.num_) * a.den_;
    }
    friend bool operator<=(const Ratio& a, const Ratio& b) noexcept { return !(b < a); }
    friend bool operator>(const Ratio& a, const Ratio& b) noexcept { return b < a; }
    friend bool operator>=(const Ratio& a, const Ratio& b) noexcept { return !(a < b); }

    // "3/5", "2" or "0.4"; throws std::invalid_argument otherwise.
    static Ratio parse(const std::string& text);

private:
    std::uint64_t num_ = 0;
    std::uint64_t den_ = 1;
};

}  // namespace tworough
