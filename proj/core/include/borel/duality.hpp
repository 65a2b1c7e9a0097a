#pragma once

#include "borel/decompose.hpp"
#include "borel/ideal.hpp"
#include "borel/polarize.hpp"

#include <optional>
#include <span>
#include <vector>

namespace borel {

/// Alexander dual of a squarefree ideal: one generator prod_{i in F} x_i per
/// irreducible component m^F. The zero and unit ideals are exchanged.
MonomialIdeal alexander_dual(const MonomialIdeal& ideal);
GridIdeal alexander_dual(const GridIdeal& ideal);

/// The strongly stable dual I* in k[y_1..y_d], read off the Psi-expansion of
/// the irreducible decomposition of I. Requires I strongly stable, proper,
/// nonzero, with generator degrees <= d (default: the largest degree).
MonomialIdeal star_dual(const MonomialIdeal& ideal, std::optional<std::size_t> d = std::nullopt);

/// transpose(b-pol(I)^dual), the grid-level witness of the star duality.
GridIdeal star_dual_witness(const MonomialIdeal& ideal,
                            std::optional<std::size_t> d = std::nullopt);

/// b-pol(I*) on d x n equals star_dual_witness(I, d).
bool star_dual_identity_holds(const MonomialIdeal& ideal,
                              std::optional<std::size_t> d = std::nullopt);

/// x_{a_1} ... x_{a_e} (a nondecreasing) -> x_{a_1} x_{a_2 + 1} ... x_{a_e + e - 1},
/// in n + max(deg m, 1) - 1 variables.
Monomial sigma_monomial(const Monomial& m);
/// I^sigma in n + d - 1 variables. Requires I strongly stable.
MonomialIdeal sigma_ideal(const MonomialIdeal& ideal, std::optional<std::size_t> d = std::nullopt);

/// Components of I^sigma: x_{b_i + i - 1} for each b in Psi(E).
std::vector<GeneralComponent> sigma_decomposition(std::span<const IrreducibleComponent> components);

bool is_squarefree_strongly_stable(const MonomialIdeal& ideal);

/// Same minimal generators after identifying k[x_1..x_n] with a subring of
/// k[x_1..x_m]; variable names are irrelevant.
bool ideal_equiv(const MonomialIdeal& a, const MonomialIdeal& b);

}  // namespace borel
