#ifndef TROPIQ_WEDGE_HPP
#define TROPIQ_WEDGE_HPP

#include "tropiq/matrix.hpp"
#include "tropiq/rational.hpp"

#include <cstddef>
#include <vector>

namespace tropiq {

/// All p-element subsets of {0,...,d-1} in lexicographic order. This fixes
/// the basis ordering of the p-th exterior power used throughout.
std::vector<std::vector<std::size_t>> subsets_lex(std::size_t d, std::size_t p);

std::size_t binomial(std::size_t n, std::size_t k);

/// Coordinates of v_1 ^ ... ^ v_p in the lexicographic basis of the p-th
/// exterior power of Q^d. Alternating and multilinear in the inputs.
/// Throws std::invalid_argument when the vectors have mismatched lengths
/// or their count differs from p.
std::vector<Rational> wedge_coordinates(const std::vector<std::vector<Rational>>& vectors,
                                        std::size_t p);

} // namespace tropiq

#endif
