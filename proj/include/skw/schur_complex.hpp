#pragma once

#include <cstdint>
#include <vector>

#include "skw/chain_complex.hpp"
#include "skw/matrix.hpp"
#include "skw/partition.hpp"
#include "skw/tableau.hpp"

namespace skw {

/// L_{lambda/mu} of the generic map phi: F -> G (ranks f, g) in the basis
/// of standard-mod-X tableaux; degree = number of X entries. Differential
/// entries are linear forms in the u_ij.
struct SchurComplex {
  SkewShape shape;
  int f = 0;
  int g = 0;
  Alphabet alphabet{0, 0};
  std::vector<std::vector<Tableau>> components;  // by degree
  FormComplex complex;
};

/// Throws NonIntegralCoordinatesError if some differential fails to have
/// integral coordinates in the standard basis.
SchurComplex build_generic(const SkewShape& shape, int f, int g, Alphabet::Order order = Alphabet::Order::YX);

/// Matrix of epsilon: rows index G* (g), columns the (f+1)-subsets I of the
/// G basis in lexicographic order. Entry (i, I) = (-1)^{#{j in I: j > i}}
/// det(phi restricted to rows I \ {i}). Requires f < g.
IntMatrix epsilon_matrix(const IntMatrix& phi);

/// The matrix of L_{lambda/mu}(psi) for an integer matrix psi: G -> P
/// (P x G), in standard-tableau bases of L_{lambda/mu}G and L_{lambda/mu}P.
IntSparse schur_functor_map(const SkewShape& shape, const IntMatrix& psi);

/// L_{lambda/mu} phi shifted up one degree, with L_{lambda/mu}(epsilon^*)
/// from degree 1 to the new degree-0 component. Requires f < g.
IntComplex build_tilde(const SkewShape& shape, const IntMatrix& phi);
/// Same, reusing an already built generic complex.
IntComplex build_tilde(const SchurComplex& generic, const IntMatrix& phi);

struct SplitCheck {
  std::vector<int> homology_full;   // H_j(L(id_r + phi2))
  std::vector<int> homology_small;  // H_j(L(phi2))
  bool pass = false;
};

/// Compares homology of L(id_r (+) phi2) and L(phi2) over the rationals.
SplitCheck split_decomposition_check(const SkewShape& shape, int phi1_rank, const IntMatrix& phi2);

}  // namespace skw
