#include "acl/lattice.hpp"

#include <sstream>

namespace acl {

LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
  require_same_genus(a.genus(), b.genus());
  LatticeVector r = a;
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
  return r;
}

LatticeVector operator-(const LatticeVector& a, const LatticeVector& b) {
  require_same_genus(a.genus(), b.genus());
  LatticeVector r = a;
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] -= b.c[i];
  return r;
}

LatticeVector LatticeVector::operator-() const {
  LatticeVector r = *this;
  for (auto& x : r.c) x = -x;
  return r;
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& o) {
  require_same_genus(genus(), o.genus());
  for (size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
  return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& o) {
  require_same_genus(genus(), o.genus());
  for (size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
  return *this;
}

std::string LatticeVector::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) os << ",";
    os << c[i];
  }
  os << ")";
  return os.str();
}

LatticeVector scale(long long k, const LatticeVector& v) {
  LatticeVector r = v;
  for (auto& x : r.c) x *= k;
  return r;
}

LatticeVector basis_a(int genus, int d) {
  LatticeVector v(genus);
  v.c[2 * (d - 1)] = 1;
  return v;
}

LatticeVector basis_b(int genus, int d) {
  LatticeVector v(genus);
  v.c[2 * (d - 1) + 1] = 1;
  return v;
}

long long omega(const LatticeVector& u, const LatticeVector& v) {
  require_same_genus(u.genus(), v.genus());
  long long s = 0;
  for (int d = 0; d < u.genus(); ++d)
    s += u.c[2 * d] * v.c[2 * d + 1] - u.c[2 * d + 1] * v.c[2 * d];
  return s;
}

LatticeVector block_component(const LatticeVector& v, int d) {
  LatticeVector r(v.genus());
  r.c[2 * (d - 1)] = v.c[2 * (d - 1)];
  r.c[2 * (d - 1) + 1] = v.c[2 * (d - 1) + 1];
  return r;
}

bool block_is_zero(const LatticeVector& v, int d) {
  return v.c[2 * (d - 1)] == 0 && v.c[2 * (d - 1) + 1] == 0;
}

std::vector<int> nonzero_blocks(const LatticeVector& v) {
  std::vector<int> out;
  for (int d = 1; d <= v.genus(); ++d)
    if (!block_is_zero(v, d)) out.push_back(d);
  return out;
}

bool supported_in_block(const LatticeVector& v, int d) {
  for (int e = 1; e <= v.genus(); ++e)
    if (e != d && !block_is_zero(v, e)) return false;
  return true;
}

} // namespace acl
