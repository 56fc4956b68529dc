#ifndef TROPIQ_RING_MAP_HPP
#define TROPIQ_RING_MAP_HPP

#include "tropiq/polynomial.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace tropiq {

/// Ring map sending each source variable to a single target monomial with
/// coefficient one.
template <class F>
struct MonomialRingMap {
    RingPtr<F> source;
    RingPtr<F> target;
    std::vector<Monomial> images;

    MonomialRingMap(RingPtr<F> src, RingPtr<F> tgt, std::vector<Monomial> imgs)
        : source(std::move(src)), target(std::move(tgt)), images(std::move(imgs)) {
        if (static_cast<int>(images.size()) != source->nvars())
            throw std::invalid_argument("one image per source variable required");
        for (const auto& m : images)
            if (m.nvars() != target->nvars())
                throw std::invalid_argument("image lives in the wrong ring");
    }

    /// Parse images from text, e.g. {"x0^2", "x0*x1", ...}.
    static MonomialRingMap from_strings(const RingPtr<F>& src, const RingPtr<F>& tgt,
                                        const std::vector<std::string>& texts) {
        std::vector<Monomial> imgs;
        imgs.reserve(texts.size());
        for (const auto& t : texts) {
            Polynomial<F> p = parse_polynomial(tgt, t);
            if (p.size() != 1 || !(p.leading_coeff() == tgt->field.one()))
                throw std::invalid_argument("image '" + t + "' is not a plain monomial");
            imgs.push_back(p.leading_monomial());
        }
        return MonomialRingMap(src, tgt, std::move(imgs));
    }
};

/// Substitute every source variable by its image monomial.
template <class F>
Polynomial<F> apply_ring_map(const Polynomial<F>& f, const MonomialRingMap<F>& map) {
    if (!(*f.ring() == *map.source))
        throw std::invalid_argument("polynomial does not live in the source ring");
    Polynomial<F> out(map.target, f.order());
    for (const auto& [m, c] : f.terms()) {
        Monomial img(map.target->nvars());
        for (int i = 0; i < m.nvars(); ++i)
            for (int rep = 0; rep < m[i]; ++rep) img = img * map.images[i];
        out.add_term(img, c);
    }
    return out;
}

} // namespace tropiq

#endif
