#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "skw/chain_complex.hpp"
#include "skw/matrix.hpp"

namespace skw {

enum class Algebra { Exterior, Symmetric, Divided };

/// Monomial basis of a graded piece of an exterior, symmetric or divided
/// power algebra on a free module of rank m. Elements are index tuples
/// (0-based), strictly increasing for exterior and weakly increasing
/// otherwise, in lexicographic order.
class MonomialBasis {
 public:
  MonomialBasis(Algebra kind, int m, int degree);

  Algebra kind() const { return kind_; }
  int rank() const { return m_; }
  int degree() const { return degree_; }
  int size() const { return static_cast<int>(tuples_.size()); }
  const std::vector<int>& operator[](int i) const { return tuples_.at(i); }
  const std::vector<std::vector<int>>& tuples() const { return tuples_; }
  /// Position of a sorted tuple, or -1.
  int index_of(const std::vector<int>& tuple) const;

 private:
  Algebra kind_;
  int m_;
  int degree_;
  std::vector<std::vector<int>> tuples_;
  std::map<std::vector<int>, int> index_;
};

enum class StructureKind { Diagonal, Multiplication };

/// Comultiplication A_{a+b} -> A_a (x) A_b or multiplication
/// A_a (x) A_b -> A_{a+b} on a rank-m module. Tensor basis index is
/// i * dim(A_b) + j.
IntSparse structure_map(StructureKind kind, Algebra algebra, int m, int a, int b);

/// Degree-t strand of the Koszul complex of phi: F -> G, with component
/// wedge^n F (x) S_{t-n} G in degree n.
FormComplex koszul_strand(int t, int f, int g);

/// The complex D_i F (x) wedge^{t-i} G in degree i, whose H_0 is wedge^t of
/// the cokernel.
FormComplex lebelt_complex(int t, int f, int g);

/// Graded tensor product: d(a (x) b) = da (x) b + (-1)^{deg a} a (x) db.
/// Basis of degree n: pairs (p, q) with p + q = n in increasing p, then
/// index_a * rank_b + index_b.
FormComplex tensor_complexes(const std::vector<FormComplex>& factors);

}  // namespace skw
