#ifndef TROPIQ_GROEBNER_HPP
#define TROPIQ_GROEBNER_HPP

#include "tropiq/monomial_ideal.hpp"
#include "tropiq/polynomial.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

namespace tropiq {

template <class F>
struct Ideal {
    RingPtr<F> ring;
    std::vector<Polynomial<F>> gens;

    Ideal(RingPtr<F> r, std::vector<Polynomial<F>> g) : ring(std::move(r)), gens(std::move(g)) {
        for (const auto& f : gens)
            if (!(*f.ring() == *ring)) throw std::invalid_argument("generator in wrong ring");
    }
};

/// Reduced Groebner basis: monic elements, no leading monomial divides
/// another, tails fully reduced; sorted by ascending leading monomial.
template <class F>
struct GroebnerBasis {
    RingPtr<F> ring;
    MonomialOrder order;
    std::vector<Polynomial<F>> elems;

    std::vector<Monomial> leading_monomials() const {
        std::vector<Monomial> lms;
        lms.reserve(elems.size());
        for (const auto& g : elems) lms.push_back(g.leading_monomial());
        return lms;
    }
};

/// Remainder of multivariate division by the basis; no term of the result
/// is divisible by a leading monomial of `basis`.
template <class F>
Polynomial<F> normal_form(const Polynomial<F>& f, const std::vector<Polynomial<F>>& basis,
                          MonomialOrder ord) {
    Polynomial<F> h = (f.order() == ord) ? f : f.with_order(ord);
    Polynomial<F> r(f.ring(), ord);
    const F& k = f.ring()->field;
    while (!h.is_zero()) {
        const Monomial& lm = h.leading_monomial();
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.is_zero()) continue;
            if (g.leading_monomial().divides(lm)) {
                Monomial q = lm.divided_by(g.leading_monomial());
                typename F::Elem c = k.div(h.leading_coeff(), g.leading_coeff());
                h = h.axpy_sub(c, q, g);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            r.add_term(lm, h.leading_coeff());
            h = h.axpy_sub(h.leading_coeff(), Monomial(f.ring()->nvars()),
                           Polynomial<F>::constant(f.ring(), k.one(), ord));
        }
    }
    return r;
}

template <class F>
Polynomial<F> normal_form(const Polynomial<F>& f, const GroebnerBasis<F>& gb) {
    if (!(*f.ring() == *gb.ring)) throw std::invalid_argument("polynomial in wrong ring");
    return normal_form(f, gb.elems, gb.order);
}

template <class F>
Polynomial<F> s_polynomial(const Polynomial<F>& f, const Polynomial<F>& g) {
    const F& k = f.ring()->field;
    Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
    Polynomial<F> a = f.times_term(l.divided_by(f.leading_monomial()), k.inv(f.leading_coeff()));
    return a.axpy_sub(k.inv(g.leading_coeff()), l.divided_by(g.leading_monomial()), g);
}

namespace detail {

struct SPair {
    int i, j;
    Monomial lcm;
};

// Deterministic normal strategy: by lcm degree, then lcm under the order,
// then indices.
struct SPairLess {
    MonomialOrder ord;
    bool operator()(const SPair& a, const SPair& b) const {
        if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
        int c = ord.cmp(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

} // namespace detail

/// Buchberger with the Gebauer-Moeller pair criteria. Deterministic:
/// identical inputs give identical bases.
template <class F>
GroebnerBasis<F> buchberger(const Ideal<F>& ideal, MonomialOrder ord = MonomialOrder::grevlex()) {
    using Poly = Polynomial<F>;
    const RingPtr<F>& ring = ideal.ring;
    const F& k = ring->field;

    std::vector<Poly> g;                 // current basis, monic
    std::set<detail::SPair, detail::SPairLess> pairs{detail::SPairLess{ord}};

    auto update = [&](const Poly& h) {
        // Gebauer-Moeller update of the pair set on inserting h.
        const int t = static_cast<int>(g.size());
        const Monomial& lmh = h.leading_monomial();

        std::vector<detail::SPair> fresh;
        fresh.reserve(t);
        for (int i = 0; i < t; ++i)
            fresh.push_back({i, t, Monomial::lcm(g[i].leading_monomial(), lmh)});

        // drop (i,t) when another new pair's lcm strictly divides its lcm
        std::vector<bool> keep(fresh.size(), true);
        for (std::size_t a = 0; a < fresh.size(); ++a)
            for (std::size_t b = 0; b < fresh.size() && keep[a]; ++b) {
                if (a == b || !keep[b]) continue;
                if (fresh[b].lcm.divides(fresh[a].lcm) && fresh[b].lcm != fresh[a].lcm)
                    keep[a] = false;
            }
        // among equal lcms keep the first, or none when some member is coprime
        for (std::size_t a = 0; a < fresh.size(); ++a) {
            if (!keep[a]) continue;
            bool coprime_in_class =
                g[fresh[a].i].leading_monomial().coprime(lmh);
            for (std::size_t b = a + 1; b < fresh.size(); ++b) {
                if (!keep[b] || fresh[b].lcm != fresh[a].lcm) continue;
                keep[b] = false;
                if (g[fresh[b].i].leading_monomial().coprime(lmh)) coprime_in_class = true;
            }
            if (coprime_in_class) keep[a] = false;
        }
        // Buchberger's coprime criterion on the survivors
        for (std::size_t a = 0; a < fresh.size(); ++a)
            if (keep[a] && g[fresh[a].i].leading_monomial().coprime(lmh)) keep[a] = false;

        // prune old pairs made redundant by h
        for (auto it = pairs.begin(); it != pairs.end();) {
            const auto& p = *it;
            if (lmh.divides(p.lcm) &&
                Monomial::lcm(g[p.i].leading_monomial(), lmh) != p.lcm &&
                Monomial::lcm(g[p.j].leading_monomial(), lmh) != p.lcm)
                it = pairs.erase(it);
            else
                ++it;
        }
        for (std::size_t a = 0; a < fresh.size(); ++a)
            if (keep[a]) pairs.insert(fresh[a]);
        g.push_back(h);
    };

    for (const auto& f : ideal.gens) {
        if (f.is_zero()) continue;
        Poly h = normal_form(f.with_order(ord), g, ord);
        if (!h.is_zero()) update(h.monic());
    }

    while (!pairs.empty()) {
        detail::SPair p = *pairs.begin();
        pairs.erase(pairs.begin());
        Poly s = s_polynomial(g[p.i], g[p.j]);
        Poly r = normal_form(s, g, ord);
        if (!r.is_zero()) update(r.monic());
    }

    // minimalize: drop elements whose leading monomial is divisible by another
    std::vector<Poly> minimal;
    std::sort(g.begin(), g.end(), [&](const Poly& a, const Poly& b) {
        return ord.less(a.leading_monomial(), b.leading_monomial());
    });
    for (const auto& f : g) {
        bool redundant = false;
        for (const auto& m : minimal)
            if (m.leading_monomial().divides(f.leading_monomial())) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(f);
    }
    // interreduce tails
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Poly> others;
        others.reserve(minimal.size() - 1);
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        minimal[i] = normal_form(minimal[i], others, ord).monic();
    }
    std::sort(minimal.begin(), minimal.end(), [&](const Poly& a, const Poly& b) {
        return ord.less(a.leading_monomial(), b.leading_monomial());
    });
    (void)k;
    return GroebnerBasis<F>{ring, ord, std::move(minimal)};
}

/// Generators of the intersection with the subring omitting the variables
/// in `drop`, via a block-order basis of a variable-permuted copy.
template <class F>
Ideal<F> eliminate(const Ideal<F>& ideal, const std::vector<int>& drop) {
    const RingPtr<F>& ring = ideal.ring;
    const int n = ring->nvars();
    std::vector<bool> dropped(n, false);
    for (int v : drop) {
        if (v < 0 || v >= n) throw std::invalid_argument("variable index out of range");
        dropped[v] = true;
    }
    std::vector<int> perm; // position in permuted ring -> original index
    for (int i = 0; i < n; ++i)
        if (dropped[i]) perm.push_back(i);
    const int k = static_cast<int>(perm.size());
    for (int i = 0; i < n; ++i)
        if (!dropped[i]) perm.push_back(i);
    std::vector<int> inv(n);
    for (int i = 0; i < n; ++i) inv[perm[i]] = i;

    std::vector<std::string> pvars(n);
    for (int i = 0; i < n; ++i) pvars[i] = ring->vars[perm[i]];
    RingPtr<F> pring = make_ring(ring->field, pvars);

    auto permute = [&](const Polynomial<F>& f, const RingPtr<F>& to,
                       const std::vector<int>& where, MonomialOrder ord) {
        Polynomial<F> out(to, ord);
        for (const auto& [m, c] : f.terms()) {
            Monomial pm(n);
            for (int i = 0; i < n; ++i) pm.set(where[i], m[i]);
            out.add_term(pm, c);
        }
        return out;
    };

    MonomialOrder block = MonomialOrder::elimination_block(k);
    std::vector<Polynomial<F>> pgens;
    pgens.reserve(ideal.gens.size());
    for (const auto& f : ideal.gens) pgens.push_back(permute(f, pring, inv, block));
    GroebnerBasis<F> gb = buchberger(Ideal<F>(pring, pgens), block);

    std::vector<Polynomial<F>> kept;
    for (const auto& f : gb.elems) {
        bool uses_dropped = false;
        for (const auto& [m, c] : f.terms())
            for (int i = 0; i < k && !uses_dropped; ++i)
                if (m[i] > 0) uses_dropped = true;
        if (!uses_dropped) kept.push_back(permute(f, ring, perm, MonomialOrder::grevlex()));
    }
    return Ideal<F>(ring, kept);
}

/// Krull dimension of the affine cone, read combinatorially off the
/// leading-term ideal; -1 for the unit ideal.
template <class F>
int cone_dimension(const GroebnerBasis<F>& gb) {
    return monomial_ideal_dimension(gb.ring->nvars(), gb.leading_monomials());
}

/// Degree of the projective scheme, from the Hilbert series of the
/// leading-term ideal. Requires affine cone dimension >= 1.
template <class F>
Int degree_projective(const GroebnerBasis<F>& gb) {
    return monomial_ideal_projective_degree(gb.ring->nvars(), gb.leading_monomials());
}

/// True when the projective scheme is empty, i.e. the affine cone is
/// supported at the origin: every variable has a pure power among the
/// leading monomials.
template <class F>
bool is_cone_trivial(const GroebnerBasis<F>& gb) {
    return monomial_ideal_is_artinian(gb.ring->nvars(), gb.leading_monomials());
}

} // namespace tropiq

#endif
