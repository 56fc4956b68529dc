#include "tropiq/monomial_ideal.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace tropiq {

std::vector<Monomial> minimalize_monomials(const std::vector<Monomial>& gens) {
    std::vector<Monomial> sorted = gens;
    std::sort(sorted.begin(), sorted.end(), [](const Monomial& a, const Monomial& b) {
        return a.degree() < b.degree();
    });
    std::vector<Monomial> out;
    for (const auto& m : sorted) {
        bool redundant = false;
        for (const auto& kept : out)
            if (kept.divides(m)) {
                redundant = true;
                break;
            }
        if (!redundant) out.push_back(m);
    }
    return out;
}

namespace {

// Minimum number of variables hitting every support mask. Branch and bound
// on the smallest un-hit support.
void min_hitting_rec(const std::vector<std::uint32_t>& supports, std::uint32_t chosen,
                     int count, int& best) {
    if (count >= best) return;
    const std::uint32_t* worst = nullptr;
    int worst_sz = 1 << 30;
    for (const auto& s : supports) {
        if (s & chosen) continue; // already hit
        int sz = __builtin_popcount(s);
        if (sz < worst_sz) {
            worst_sz = sz;
            worst = &s;
        }
    }
    if (!worst) {
        best = count;
        return;
    }
    std::uint32_t s = *worst;
    while (s) {
        std::uint32_t bit = s & (s ^ (s - 1));
        min_hitting_rec(supports, chosen | bit, count + 1, best);
        s ^= bit;
    }
}

} // namespace

int monomial_ideal_dimension(int nvars, const std::vector<Monomial>& gens) {
    auto minimal = minimalize_monomials(gens);
    if (minimal.empty()) return nvars;
    std::vector<std::uint32_t> supports;
    supports.reserve(minimal.size());
    for (const auto& m : minimal) {
        if (m.is_one()) return -1;
        supports.push_back(m.support_mask());
    }
    std::sort(supports.begin(), supports.end());
    supports.erase(std::unique(supports.begin(), supports.end()), supports.end());
    // drop supersets
    std::vector<std::uint32_t> reduced;
    for (auto s : supports) {
        bool super = false;
        for (auto t : supports)
            if (t != s && (t & s) == t) {
                super = true;
                break;
            }
        if (!super) reduced.push_back(s);
    }
    int best = nvars;
    min_hitting_rec(reduced, 0, 0, best);
    return nvars - best;
}

namespace {

using Series = std::vector<Int>; // little-endian coefficients in t

Series series_one() { return {Int(1)}; }

Series series_mul(const Series& a, const Series& b) {
    if (a.empty() || b.empty()) return {};
    Series p(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) p[i + j] += a[i] * b[j];
    }
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

bool pairwise_coprime(const std::vector<Monomial>& gens) {
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            if (!gens[i].coprime(gens[j])) return false;
    return true;
}

// Numerator recursion: split on the most shared variable x,
//   N(I) = N(I + (x)) + t * N(I : x).
Series numerator_rec(int nvars, std::vector<Monomial> gens) {
    gens = minimalize_monomials(gens);
    if (gens.empty()) return series_one();
    for (const auto& m : gens)
        if (m.is_one()) return {};
    if (pairwise_coprime(gens)) {
        // regular sequence of monomials: product of (1 - t^deg)
        Series p = series_one();
        for (const auto& m : gens) {
            Series f(m.degree() + 1, Int(0));
            f[0] = 1;
            f[m.degree()] = -1;
            p = series_mul(p, f);
        }
        return p;
    }
    // pick the variable occurring in the most supports
    std::vector<int> freq(nvars, 0);
    for (const auto& m : gens)
        for (int i = 0; i < nvars; ++i)
            if (m[i] > 0) ++freq[i];
    int var = int(std::max_element(freq.begin(), freq.end()) - freq.begin());

    std::vector<Monomial> plus;   // I + (x): keep gens not involving x, add x
    std::vector<Monomial> colon;  // I : x
    Monomial x(nvars);
    x.set(var, 1);
    plus.push_back(x);
    for (const auto& m : gens) {
        if (m[var] == 0) plus.push_back(m);
        Monomial q = m;
        if (q[var] > 0) q.set(var, q[var] - 1);
        colon.push_back(q);
    }
    Series a = numerator_rec(nvars, std::move(plus));
    Series b = numerator_rec(nvars, std::move(colon));
    Series out = a;
    if (!b.empty()) {
        Series shifted(b.size() + 1, Int(0));
        for (std::size_t i = 0; i < b.size(); ++i) shifted[i + 1] = b[i];
        if (out.size() < shifted.size()) out.resize(shifted.size(), Int(0));
        for (std::size_t i = 0; i < shifted.size(); ++i) out[i] += shifted[i];
        while (!out.empty() && out.back() == 0) out.pop_back();
    }
    return out;
}

} // namespace

std::vector<Int> hilbert_numerator(int nvars, const std::vector<Monomial>& gens) {
    return numerator_rec(nvars, gens);
}

Int monomial_ideal_projective_degree(int nvars, const std::vector<Monomial>& gens) {
    int dim = monomial_ideal_dimension(nvars, gens);
    if (dim < 0) throw std::domain_error("degree of the unit ideal");
    if (dim < 1) throw std::domain_error("projective scheme is empty");
    Series n = hilbert_numerator(nvars, gens);
    int codim = nvars - dim;
    for (int d = 0; d < codim; ++d) {
        // divide by (1 - t): quotient coefficients are prefix sums
        Series q(n.size() > 0 ? n.size() - 1 : 0, Int(0));
        Int acc = 0;
        for (std::size_t i = 0; i + 1 < n.size(); ++i) {
            acc += n[i];
            q[i] = acc;
        }
        acc += n.empty() ? Int(0) : n.back();
        if (acc != 0) throw std::domain_error("Hilbert numerator not divisible by (1-t)^codim");
        while (!q.empty() && q.back() == 0) q.pop_back();
        n = std::move(q);
    }
    Int deg = 0;
    for (const auto& c : n) deg += c;
    if (deg <= 0) throw std::domain_error("nonpositive degree");
    return deg;
}

bool monomial_ideal_is_artinian(int nvars, const std::vector<Monomial>& gens) {
    std::vector<bool> has_pure(nvars, false);
    for (const auto& m : gens) {
        if (m.is_one()) return true;
        int support_var = -1;
        bool pure = true;
        for (int i = 0; i < nvars && pure; ++i) {
            if (m[i] > 0) {
                if (support_var >= 0) pure = false;
                support_var = i;
            }
        }
        if (pure && support_var >= 0) has_pure[support_var] = true;
    }
    for (int i = 0; i < nvars; ++i)
        if (!has_pure[i]) return false;
    return true;
}

} // namespace tropiq
