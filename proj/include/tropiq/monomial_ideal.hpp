#ifndef TROPIQ_MONOMIAL_IDEAL_HPP
#define TROPIQ_MONOMIAL_IDEAL_HPP

#include "tropiq/monomial.hpp"
#include "tropiq/rational.hpp"

#include <vector>

namespace tropiq {

/// Krull dimension of k[x_1..x_n]/I for the monomial ideal I generated by
/// `gens`: the largest variable subset S such that no generator is
/// supported inside S. Returns n for the zero ideal, -1 for the unit ideal.
int monomial_ideal_dimension(int nvars, const std::vector<Monomial>& gens);

/// Numerator N(t) of the Hilbert series N(t)/(1-t)^n of k[x]/I,
/// little-endian integer coefficients.
std::vector<Int> hilbert_numerator(int nvars, const std::vector<Monomial>& gens);

/// Degree of Proj(k[x]/I): divide N(t) by (1-t)^codim and evaluate at 1.
/// Throws std::domain_error for the unit ideal or when the cone dimension
/// is < 1 (empty projective scheme).
Int monomial_ideal_projective_degree(int nvars, const std::vector<Monomial>& gens);

/// True when I contains a pure power of every variable (the quotient is
/// Artinian, so the projective scheme is empty).
bool monomial_ideal_is_artinian(int nvars, const std::vector<Monomial>& gens);

/// Drop generators divisible by another generator.
std::vector<Monomial> minimalize_monomials(const std::vector<Monomial>& gens);

} // namespace tropiq

#endif
