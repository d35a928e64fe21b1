#pragma once

// Exact integer linear algebra: Smith normal form over arbitrary-precision
// integers, 2-complex homology, exterior-square ranks, flag-complex H1 and a
// bounded Tietze trivialiser for pi_1 certificates.

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "wlog/graph.hpp"
#include "wlog/words.hpp"

namespace wlog {

using Int = boost::multiprecision::cpp_int;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& at(int i, int j) { return data_.at(static_cast<std::size_t>(i) * cols_ + j); }
  const Int& at(int i, int j) const {
    return data_.at(static_cast<std::size_t>(i) * cols_ + j);
  }
  bool operator==(const IntMatrix&) const = default;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Int> data_;
};

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

/// Exact determinant by fraction-free (Bareiss) elimination.
Int determinant(const IntMatrix& a);

struct SmithForm {
  IntMatrix d;  // u * a * v
  IntMatrix u;  // unimodular row transform
  IntMatrix v;  // unimodular column transform
  long rank = 0;
  std::vector<Int> invariantFactors;  // positive, each divides the next
};

/// Smith normal form with a deterministic pivot rule: smallest non-zero
/// absolute value, ties broken by row-major position.
SmithForm smith_normal_form(IntMatrix a);

struct AbelianGroupDescriptor {
  long freeRank = 0;
  std::vector<Int> torsion;  // invariant factors > 1

  bool trivial() const { return freeRank == 0 && torsion.empty(); }
  bool torsionFree() const { return torsion.empty(); }
  std::string str() const;
  bool operator==(const AbelianGroupDescriptor&) const = default;
};

/// Cokernel of an integer matrix whose rows span the relation subgroup of
/// Z^cols: Z^cols / rowspan.
AbelianGroupDescriptor cokernel(const IntMatrix& relations, int cols);

/// True iff x lies in the integer row span of m.
bool in_row_span(const IntMatrix& m, const std::vector<Int>& x);

struct ComplexHomology {
  AbelianGroupDescriptor h1;
  long h2FreeRank = 0;
};

/// Homology of the 2-complex with one vertex, a 1-cell per generator and a
/// 2-cell per relator. H2 is free because there are no 3-cells.
ComplexHomology complex_homology(int generatorCount, const std::vector<Word>& relators);

/// Rank over Z of the stacked exterior images of the relators.
/// Throws NotApplicable when some relator has non-zero abelianisation.
long exterior_rank(const std::vector<Word>& relators, int alphabetSize);

/// Whether candidate's exterior image lies in the integer span of the
/// basis relators' images.
bool in_exterior_span(const std::vector<Word>& basis, const Word& candidate,
                      int alphabetSize);

IntMatrix exterior_matrix(const std::vector<Word>& relators, int alphabetSize);

/// Simplicial H1 of a flag 2-skeleton.
AbelianGroupDescriptor flag_h1(const FlagSkeleton& skel);

enum class CertificateStatus { Certified, Unknown };

/// Presents pi_1 of the skeleton over a spanning tree (generators the
/// non-tree edges, relators the triangle boundaries) and runs a budgeted
/// Tietze simplification. Certified iff every generator is eliminated; the
/// certificate is sound but not complete.
CertificateStatus pi1_trivial_certificate(const FlagSkeleton& skel, long budget = 10'000);

}  // namespace wlog
