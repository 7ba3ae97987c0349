#include "tworough/ratio.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace tworough {

Ratio::Ratio(std::uint64_t num, std::uint64_t den) {
    if (den == 0) {
        throw std::invalid_argument("ratio denominator must be positive");
    }
    const std::uint64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

std::string Ratio::decimal(int places) const {
    using u128 = uint128_t;
    u128 scale = 1;
    for (int i = 0; i < places; ++i) {
        scale *= 10;
    }
    const u128 scaled = (static_cast<u128>(num_) * scale * 2 + den_) / (static_cast<u128>(den_) * 2);
    const u128 whole = scaled / scale;
    u128 frac = scaled % scale;

    auto digits = [](u128 v) {
        std::string s;
        do {
            s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
            v /= 10;
        } while (v != 0);
        return s;
    };
    std::string out = digits(whole);
    if (places > 0) {
        std::string f(static_cast<std::size_t>(places), '0');
        for (int i = places - 1; i >= 0; --i) {
            f[static_cast<std::size_t>(i)] = static_cast<char>('0' + static_cast<int>(frac % 10));
            frac /= 10;
        }
        out += "." + f;
    }
    return out;
}

std::string Ratio::to_string() const {
    if (den_ == 1) {
        return std::to_string(num_);
    }
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Ratio Ratio::parse(const std::string& text) {
    auto all_digits = [](const std::string& s) {
        return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c)) != 0;
        });
    };
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        const std::string n = text.substr(0, slash);
        const std::string d = text.substr(slash + 1);
        if (!all_digits(n) || !all_digits(d)) {
            throw std::invalid_argument("malformed ratio '" + text + "'");
        }
        return Ratio(std::stoull(n), std::stoull(d));
    }
    const auto dot = text.find('.');
    if (dot != std::string::npos) {
        const std::string w = text.substr(0, dot);
        const std::string f = text.substr(dot + 1);
        if ((!w.empty() && !all_digits(w)) || !all_digits(f) || f.size() > 18) {
            throw std::invalid_argument("malformed ratio '" + text + "'");
        }
        std::uint64_t den = 1;
        for (std::size_t i = 0; i < f.size(); ++i) {
            den *= 10;
        }
        const std::uint64_t whole = w.empty() ? 0 : std::stoull(w);
        return Ratio(whole * den + std::stoull(f), den);
    }
    if (!all_digits(text)) {
        throw std::invalid_argument("malformed ratio '" + text + "'");
    }
    return Ratio(std::stoull(text), 1);
}

}  // namespace tworough
