#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "skw/matrix.hpp"
#include "skw/partition.hpp"
#include "skw/shape_map.hpp"
#include "skw/tableau.hpp"

namespace skw {

/// Matrix of the composition wedge-rows -> tensor -> symmetric-columns for a
/// free module of rank m (or its divided-power dual for the Weyl map).
/// Columns are indexed by row-standard fillings (a basis of the tensor
/// product of the row factors), rows by column monomials in sorted order.
struct SchurMap {
  SkewShape shape;
  int rank = 0;
  IntSparse matrix;
  std::vector<Tableau> domain;
  std::vector<MonomialKey> codomain;
};

SchurMap d_map_matrix(const SkewShape& shape, int m);
/// Divided-power rows into exterior columns.
SchurMap weyl_d_map_matrix(const SkewShape& shape, int m);

/// Presentation of a module: `relations` has `generators` rows.
struct ModulePresentation {
  int generators = 0;
  IntSparse relations;
};

/// Presentation of L_{lambda/mu}(coker phi) for an integer g x f matrix phi:
/// generators are the standard tableaux in G, relations the specialized
/// degree-one differential of the Schur complex.
ModulePresentation schur_module_presentation(const SkewShape& shape, const IntMatrix& phi);

/// "y1,y2|x1": rows of lambda separated by '|'.
std::string tableau_label(const Tableau& t, const Alphabet& a);
/// Human-readable monomial key: columns separated by '|'.
std::string key_label(const MonomialKey& key, const std::vector<int>& column_lengths, const Alphabet& a);

}  // namespace skw
