#include "acl/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace acl {

// Eliminates against pivot rows in leading-column order.  Pivot rows have
// their leading column minimal, so each step strictly advances the lead;
// an empty result is equivalent to membership in the row span.
SparseRow SparseEchelon::reduce(SparseRow row) const {
  while (!row.empty()) {
    auto it = pivots_.find(row.begin()->first);
    if (it == pivots_.end()) return row;
    Rat c = row.begin()->second;
    for (const auto& [col, val] : it->second) {
      auto [ins, fresh] = row.emplace(col, Rat(0));
      ins->second -= c * val;
      if (ins->second == 0) row.erase(ins);
    }
  }
  return row;
}

bool SparseEchelon::insert(SparseRow row) {
  row = reduce(std::move(row));
  if (row.empty()) return false;
  int lead = row.begin()->first;
  Rat inv = Rat(1) / row.begin()->second;
  for (auto& [col, val] : row) val *= inv;
  pivots_.emplace(lead, std::move(row));
  return true;
}

int bareiss_rank(std::vector<std::vector<Int>> m) {
  if (m.empty()) return 0;
  size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  Int prev(1);
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    Int q, rem;
    for (size_t i = r + 1; i < rows; ++i) {
      for (size_t j = c + 1; j < cols; ++j) {
        Int t = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        // Fraction-free update: division by the previous pivot is exact.
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), t.get_mpz_t(),
                    prev.get_mpz_t());
        if (rem != 0)
          throw std::logic_error("bareiss: non-exact division");
        m[i][j] = q;
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

uint64_t mod_reduce(const Int& v) {
  Int r = v % static_cast<unsigned long>(ModEchelon::kPrime);
  if (r < 0) r += static_cast<unsigned long>(ModEchelon::kPrime);
  return r.get_ui();
}

namespace {

uint64_t mod_pow(uint64_t base, uint64_t exp, uint64_t p) {
  uint64_t acc = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1) acc = acc * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return acc;
}

} // namespace

bool ModEchelon::insert(std::vector<uint64_t> row) {
  const uint64_t p = kPrime;
  for (size_t k = 0; k < rows_.size(); ++k) {
    uint64_t c = row[pivot_cols_[k]];
    if (c == 0) continue;
    uint64_t neg = p - c;
    const auto& basis = rows_[k];
    for (int j = 0; j < ncols_; ++j)
      if (basis[j]) row[j] = (row[j] + neg * basis[j]) % p;
  }
  int lead = -1;
  for (int j = 0; j < ncols_; ++j)
    if (row[j]) {
      lead = j;
      break;
    }
  if (lead < 0) return false;
  uint64_t inv = mod_pow(row[lead], p - 2, p);
  for (int j = 0; j < ncols_; ++j)
    if (row[j]) row[j] = row[j] * inv % p;
  rows_.push_back(std::move(row));
  pivot_cols_.push_back(lead);
  return true;
}

bool ModEchelon::insert_int_row(const std::vector<Int>& row) {
  std::vector<uint64_t> r(ncols_, 0);
  for (int j = 0; j < ncols_; ++j) r[j] = mod_reduce(row[j]);
  return insert(std::move(r));
}

} // namespace acl
