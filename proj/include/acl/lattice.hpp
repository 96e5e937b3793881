#ifndef ACL_LATTICE_HPP
#define ACL_LATTICE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace acl {

// Element of Z^{2g}, coordinates ordered (a_1, b_1, ..., a_g, b_g).
struct LatticeVector {
  std::vector<long long> c;

  LatticeVector() = default;
  explicit LatticeVector(int genus) : c(2 * genus, 0) {}
  LatticeVector(std::initializer_list<long long> init) : c(init) {}
  explicit LatticeVector(std::vector<long long> v) : c(std::move(v)) {}

  int genus() const { return static_cast<int>(c.size() / 2); }
  bool is_zero() const {
    for (long long x : c)
      if (x != 0) return false;
    return true;
  }

  long long& operator[](size_t i) { return c[i]; }
  long long operator[](size_t i) const { return c[i]; }

  friend LatticeVector operator+(const LatticeVector& a, const LatticeVector& b);
  friend LatticeVector operator-(const LatticeVector& a, const LatticeVector& b);
  LatticeVector operator-() const;
  LatticeVector& operator+=(const LatticeVector& o);
  LatticeVector& operator-=(const LatticeVector& o);

  bool operator==(const LatticeVector& o) const { return c == o.c; }
  bool operator!=(const LatticeVector& o) const { return c != o.c; }
  bool operator<(const LatticeVector& o) const { return c < o.c; }

  std::string str() const;
};

LatticeVector scale(long long k, const LatticeVector& v);

// Standard symplectic basis vectors.  Blocks are 1-based: block d spans
// {a_d, b_d} at coordinates (2d-2, 2d-1).
LatticeVector basis_a(int genus, int d);
LatticeVector basis_b(int genus, int d);

// Algebraic intersection pairing: omega(a_i, b_i) = 1, all other basis
// pairings zero.
long long omega(const LatticeVector& u, const LatticeVector& v);

// Component of v in block d (other coordinates zeroed).
LatticeVector block_component(const LatticeVector& v, int d);
bool block_is_zero(const LatticeVector& v, int d);
// 1-based indices of nonzero blocks, ascending.
std::vector<int> nonzero_blocks(const LatticeVector& v);
// True when the support of v is contained in block d.
bool supported_in_block(const LatticeVector& v, int d);

inline void require_genus(int genus) {
  if (genus < 4)
    throw std::invalid_argument("genus must be at least 4, got " +
                                std::to_string(genus));
}

inline void require_same_genus(int ga, int gb) {
  if (ga != gb)
    throw std::invalid_argument("genus mismatch: " + std::to_string(ga) +
                                " vs " + std::to_string(gb));
}

} // namespace acl

#endif
