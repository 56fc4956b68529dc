#include "tropiq/wedge.hpp"

#include <stdexcept>

namespace tropiq {

std::vector<std::vector<std::size_t>> subsets_lex(std::size_t d, std::size_t p) {
    std::vector<std::vector<std::size_t>> out;
    if (p > d) return out;
    std::vector<std::size_t> cur(p);
    for (std::size_t i = 0; i < p; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        // advance to the next combination
        std::size_t i = p;
        while (i > 0) {
            --i;
            if (cur[i] != i + d - p) {
                ++cur[i];
                for (std::size_t j = i + 1; j < p; ++j) cur[j] = cur[j - 1] + 1;
                i = p + 1;
                break;
            }
        }
        if (i != p + 1) break;
    }
    return out;
}

std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

std::vector<Rational> wedge_coordinates(const std::vector<std::vector<Rational>>& vectors,
                                        std::size_t p) {
    if (vectors.size() != p) throw std::invalid_argument("expected exactly p vectors");
    if (p == 0) return {Rational(1)};
    const std::size_t d = vectors[0].size();
    for (const auto& v : vectors)
        if (v.size() != d) throw std::invalid_argument("vector length mismatch");
    auto subs = subsets_lex(d, p);
    std::vector<Rational> out;
    out.reserve(subs.size());
    for (const auto& s : subs) {
        QMatrix minor(p, p);
        for (std::size_t r = 0; r < p; ++r)
            for (std::size_t c = 0; c < p; ++c) minor.at(r, c) = vectors[r][s[c]];
        out.push_back(determinant(minor));
    }
    return out;
}

} // namespace tropiq
