#pragma once

// Brute-force reference implementations over plain containers. They share
// no code with the library and follow the set definitions literally.

#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tworough/relation.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<int>>;
using Set = std::set<std::size_t>;

inline Matrix matrix_of(const tworough::BinaryRelation& r) {
    Matrix m(r.u_size(), std::vector<int>(r.v_size(), 0));
    for (std::size_t i = 0; i < r.u_size(); ++i) {
        for (std::size_t j = 0; j < r.v_size(); ++j) {
            m[i][j] = r.holds(i, j) ? 1 : 0;
        }
    }
    return m;
}

// Cell (i, j) = bit (i * v + j) of k.
inline Matrix matrix_from_code(std::uint64_t k, std::size_t u, std::size_t v) {
    Matrix m(u, std::vector<int>(v, 0));
    for (std::size_t i = 0; i < u; ++i) {
        for (std::size_t j = 0; j < v; ++j) {
            m[i][j] = static_cast<int>((k >> (i * v + j)) & 1U);
        }
    }
    return m;
}

inline Set set_from_mask(std::uint64_t mask, std::size_t n) {
    Set s;
    for (std::size_t i = 0; i < n; ++i) {
        if ((mask >> i) & 1U) {
            s.insert(i);
        }
    }
    return s;
}

inline Set indices_of(const tworough::Subset& s) {
    const auto idx = s.indices();
    return Set(idx.begin(), idx.end());
}

inline Set right(const Matrix& m, std::size_t x) {
    Set s;
    for (std::size_t y = 0; y < m[x].size(); ++y) {
        if (m[x][y]) {
            s.insert(y);
        }
    }
    return s;
}

inline Set left(const Matrix& m, std::size_t y) {
    Set s;
    for (std::size_t x = 0; x < m.size(); ++x) {
        if (m[x][y]) {
            s.insert(x);
        }
    }
    return s;
}

inline Set lower(const Matrix& m, const Set& y) {
    Set out;
    for (std::size_t x = 0; x < m.size(); ++x) {
        bool inside = true;
        for (std::size_t j : right(m, x)) {
            inside = inside && y.count(j) > 0;
        }
        if (inside) {
            out.insert(x);
        }
    }
    return out;
}

inline Set upper(const Matrix& m, const Set& y) {
    Set out;
    for (std::size_t x = 0; x < m.size(); ++x) {
        for (std::size_t j : right(m, x)) {
            if (y.count(j)) {
                out.insert(x);
                break;
            }
        }
    }
    return out;
}

inline bool serial(const Matrix& m) {
    for (std::size_t x = 0; x < m.size(); ++x) {
        if (right(m, x).empty()) {
            return false;
        }
    }
    return true;
}

// 1..4 from (lower empty?, upper full?).
inline int type_of(const Matrix& m, const Set& y) {
    const bool lower_empty = lower(m, y).empty();
    const bool upper_full = upper(m, y).size() == m.size();
    if (!lower_empty && !upper_full) return 1;
    if (lower_empty && !upper_full) return 2;
    if (!lower_empty && upper_full) return 3;
    return 4;
}

// Blocks of equal neighborhoods, as a set of sets.
inline std::set<Set> u_quotient(const Matrix& m) {
    std::map<Set, Set> groups;
    for (std::size_t x = 0; x < m.size(); ++x) {
        groups[right(m, x)].insert(x);
    }
    std::set<Set> out;
    for (auto& [key, members] : groups) {
        out.insert(members);
    }
    return out;
}

inline std::set<Set> v_quotient(const Matrix& m) {
    std::map<Set, Set> groups;
    for (std::size_t y = 0; y < m.front().size(); ++y) {
        groups[left(m, y)].insert(y);
    }
    std::set<Set> out;
    for (auto& [key, members] : groups) {
        out.insert(members);
    }
    return out;
}

struct Fraction {
    std::uint64_t num;
    std::uint64_t den;
};

inline Fraction reduced(std::uint64_t num, std::uint64_t den) {
    const std::uint64_t g = std::gcd(num, den);
    return {num / g, den / g};
}

}  // namespace oracle
