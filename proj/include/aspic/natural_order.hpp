#pragma once

#include <cctype>
#include <compare>
#include <string_view>

namespace aspic {

// Compares strings treating maximal digit runs as numbers, so "A2" < "A10".
// Ties between numerically equal runs ("A01" vs "A1") fall back to plain
// lexicographic order, which keeps the relation a strict total order.
inline std::strong_ordering natural_compare(std::string_view a, std::string_view b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        const bool da = std::isdigit(static_cast<unsigned char>(a[i]));
        const bool db = std::isdigit(static_cast<unsigned char>(b[j]));
        if (da && db) {
            std::size_t ei = i, ej = j;
            while (ei < a.size() && std::isdigit(static_cast<unsigned char>(a[ei])))
                ++ei;
            while (ej < b.size() && std::isdigit(static_cast<unsigned char>(b[ej])))
                ++ej;
            std::string_view ra = a.substr(i, ei - i), rb = b.substr(j, ej - j);
            while (ra.size() > 1 && ra.front() == '0')
                ra.remove_prefix(1);
            while (rb.size() > 1 && rb.front() == '0')
                rb.remove_prefix(1);
            if (ra.size() != rb.size())
                return ra.size() <=> rb.size();
            if (auto c = ra.compare(rb); c != 0)
                return c <=> 0;
            i = ei;
            j = ej;
            continue;
        }
        if (a[i] != b[j])
            return static_cast<unsigned char>(a[i]) <=> static_cast<unsigned char>(b[j]);
        ++i;
        ++j;
    }
    if (auto c = (a.size() - i) <=> (b.size() - j); c != 0)
        return c;
    return a.compare(b) <=> 0;
}

struct NaturalLess {
    bool operator()(std::string_view a, std::string_view b) const { return natural_compare(a, b) < 0; }
};

} // namespace aspic
