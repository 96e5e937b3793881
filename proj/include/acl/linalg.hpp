#ifndef ACL_LINALG_HPP
#define ACL_LINALG_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "acl/rational.hpp"

namespace acl {

// Sparse row over Q, keyed by column index.
using SparseRow = std::map<int, Rat>;

// Incremental row-echelon basis over Q for sparse rows.  Exact; suitable
// for the small structured matrices in the verification suites.
class SparseEchelon {
 public:
  // Reduces the row against the current basis; returns true (and extends
  // the basis) when the row was independent.
  bool insert(SparseRow row);
  int rank() const { return static_cast<int>(pivots_.size()); }
  // Fully reduces a row; empty result means membership in the row span.
  SparseRow reduce(SparseRow row) const;

 private:
  // pivot column -> row normalised to pivot coefficient 1
  std::map<int, SparseRow> pivots_;
};

// Exact rank of a dense integer matrix via Bareiss fraction-free
// elimination.  The matrix is consumed.
int bareiss_rank(std::vector<std::vector<Int>> m);

// Incremental echelon over the prime field F_p, p = 2^31 - 1.  The rank
// of an integer matrix mod p never exceeds its rank over Q, so this
// provides a certified lower bound for span dimensions; pair it with an
// exact upper bound (e.g. containment in a kernel of known dimension) to
// pin the exact value.
class ModEchelon {
 public:
  static constexpr uint64_t kPrime = 2147483647ull;

  explicit ModEchelon(int ncols) : ncols_(ncols) {}
  bool insert(std::vector<uint64_t> row);
  bool insert_int_row(const std::vector<Int>& row);
  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  int ncols_;
  std::vector<std::vector<uint64_t>> rows_; // echelon rows, pivot-normalised
  std::vector<int> pivot_cols_;
};

uint64_t mod_reduce(const Int& v);

} // namespace acl

#endif
