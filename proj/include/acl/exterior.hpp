#ifndef ACL_EXTERIOR_HPP
#define ACL_EXTERIOR_HPP

#include <vector>

#include "acl/lattice.hpp"
#include "acl/rational.hpp"

namespace acl {

// Basis index for wedge^2 Q^{2g}: pairs (i, j) with 0 <= i < j < 2g,
// enumerated lexicographically.  Dimension g(2g-1).
int wedge_dim(int genus);
int wedge_index(int genus, int i, int j);
std::pair<int, int> wedge_pair(int genus, int idx);

// Element of wedge^2 Q^{2g} with exact rational coordinates.
class Wedge2 {
 public:
  explicit Wedge2(int genus);

  int genus() const { return genus_; }
  const std::vector<Rat>& coords() const { return c_; }
  bool is_zero() const;

  // Adds k * (u wedge v).
  void add_wedge(const LatticeVector& u, const LatticeVector& v, const Rat& k);
  void add_basis(int i, int j, const Rat& k);
  Rat coeff(int i, int j) const;

  Wedge2& operator+=(const Wedge2& o);
  Wedge2& operator-=(const Wedge2& o);
  friend Wedge2 operator+(Wedge2 a, const Wedge2& b) { a += b; return a; }
  friend Wedge2 operator-(Wedge2 a, const Wedge2& b) { a -= b; return a; }
  friend Wedge2 operator*(const Rat& k, Wedge2 a);

  bool operator==(const Wedge2& o) const {
    return genus_ == o.genus_ && c_ == o.c_;
  }
  bool operator!=(const Wedge2& o) const { return !(*this == o); }

  std::string str() const;

 private:
  int genus_;
  std::vector<Rat> c_;
};

// u wedge v.
Wedge2 wedge_of(const LatticeVector& u, const LatticeVector& v);

// omega = a_1^b_1 + ... + a_g^b_g.
Wedge2 omega_form(int genus);

// Symplectic trace: the functional with trace(u^v) = omega(u, v); takes
// omega_form(g) to g.
Rat symplectic_trace(const Wedge2& w);

// Canonical representative of the class of w in (wedge^2 H)/Q: subtracts
// (trace/g) * omega so the result has symplectic trace zero.
Wedge2 bar_representative(const Wedge2& w);

// Interior product against omega: u |-> omega(u, x) y - omega(u, y) x
// extended linearly; zero for all u in V exactly when w lies in wedge^2
// of the omega-orthogonal complement of V.
std::vector<Rat> interior_product(const LatticeVector& u, const Wedge2& w);

// Basis of the trace-zero subspace of wedge^2 Q^{2g} (dimension
// g(2g-1) - 1): all e_i^e_j with omega(e_i, e_j) = 0, followed by the
// differences a_d^b_d - a_{d+1}^b_{d+1} for 1 <= d <= g-1.
int bar_dim(int genus);
// Expands bar-basis coordinates back to wedge coordinates.
Wedge2 bar_expand(int genus, const std::vector<Rat>& bar_coords);
// Coordinates of a trace-zero element in the bar basis; throws
// std::domain_error when the trace is nonzero.
std::vector<Rat> bar_coords(const Wedge2& w);

// Basis index for Sym^2 Q^{2g}: pairs (i, j) with i <= j.  Dimension
// g(2g+1).
int sym_dim(int genus);
int sym_index(int genus, int i, int j);

// Element of Sym^2 Q^{2g}.
class Sym2 {
 public:
  explicit Sym2(int genus);
  int genus() const { return genus_; }
  const std::vector<Rat>& coords() const { return c_; }
  bool is_zero() const;
  // Adds k * (u sym v).
  void add_sym(const LatticeVector& u, const LatticeVector& v, const Rat& k);
  Sym2& operator+=(const Sym2& o);
  friend Sym2 operator-(Sym2 a, const Sym2& b);
  bool operator==(const Sym2& o) const {
    return genus_ == o.genus_ && c_ == o.c_;
  }

 private:
  int genus_;
  std::vector<Rat> c_;
};

} // namespace acl

#endif
