#include "acl/exterior.hpp"

#include <sstream>
#include <stdexcept>

namespace acl {

int wedge_dim(int genus) { return genus * (2 * genus - 1); }

int wedge_index(int genus, int i, int j) {
  int n = 2 * genus;
  // Offset of row i in the strictly-upper-triangular enumeration.
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

std::pair<int, int> wedge_pair(int genus, int idx) {
  int n = 2 * genus;
  int i = 0;
  while (idx >= n - i - 1) {
    idx -= n - i - 1;
    ++i;
  }
  return {i, i + 1 + idx};
}

Wedge2::Wedge2(int genus) : genus_(genus), c_(wedge_dim(genus), Rat(0)) {}

bool Wedge2::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

void Wedge2::add_basis(int i, int j, const Rat& k) {
  if (i == j) return;
  if (i < j)
    c_[wedge_index(genus_, i, j)] += k;
  else
    c_[wedge_index(genus_, j, i)] -= k;
}

Rat Wedge2::coeff(int i, int j) const {
  if (i == j) return Rat(0);
  if (i < j) return c_[wedge_index(genus_, i, j)];
  return -c_[wedge_index(genus_, j, i)];
}

void Wedge2::add_wedge(const LatticeVector& u, const LatticeVector& v,
                       const Rat& k) {
  require_same_genus(genus_, u.genus());
  require_same_genus(genus_, v.genus());
  int n = 2 * genus_;
  for (int i = 0; i < n; ++i) {
    if (u[i] == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (v[j] == 0 || i == j) continue;
      add_basis(i, j, k * Rat(u[i]) * Rat(v[j]));
    }
  }
}

Wedge2& Wedge2::operator+=(const Wedge2& o) {
  require_same_genus(genus_, o.genus_);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Wedge2& Wedge2::operator-=(const Wedge2& o) {
  require_same_genus(genus_, o.genus_);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Wedge2 operator*(const Rat& k, Wedge2 a) {
  for (auto& x : a.c_) x *= k;
  return a;
}

std::string Wedge2::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t idx = 0; idx < c_.size(); ++idx) {
    if (c_[idx] == 0) continue;
    auto [i, j] = wedge_pair(genus_, static_cast<int>(idx));
    if (!first) os << " + ";
    os << rat_str(c_[idx]) << "*e" << i << "^e" << j;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

Wedge2 wedge_of(const LatticeVector& u, const LatticeVector& v) {
  Wedge2 w(u.genus());
  w.add_wedge(u, v, Rat(1));
  return w;
}

Wedge2 omega_form(int genus) {
  Wedge2 w(genus);
  for (int d = 1; d <= genus; ++d)
    w.add_wedge(basis_a(genus, d), basis_b(genus, d), Rat(1));
  return w;
}

Rat symplectic_trace(const Wedge2& w) {
  // trace(e_i^e_j) = omega(e_i, e_j), nonzero only on the a_d^b_d terms.
  Rat t(0);
  for (int d = 0; d < w.genus(); ++d) t += w.coeff(2 * d, 2 * d + 1);
  return t;
}

Wedge2 bar_representative(const Wedge2& w) {
  Rat t = symplectic_trace(w);
  if (t == 0) return w;
  return w - (t / Rat(w.genus())) * omega_form(w.genus());
}

std::vector<Rat> interior_product(const LatticeVector& u, const Wedge2& w) {
  int n = 2 * u.genus();
  std::vector<Rat> out(n, Rat(0));
  for (size_t idx = 0; idx < w.coords().size(); ++idx) {
    const Rat& c = w.coords()[idx];
    if (c == 0) continue;
    auto [i, j] = wedge_pair(u.genus(), static_cast<int>(idx));
    LatticeVector ei(u.genus()), ej(u.genus());
    ei[i] = 1;
    ej[j] = 1;
    long long wui = omega(u, ei);
    long long wuj = omega(u, ej);
    if (wui != 0) out[j] += c * Rat(wui);
    if (wuj != 0) out[i] -= c * Rat(wuj);
  }
  return out;
}

int bar_dim(int genus) { return wedge_dim(genus) - 1; }

namespace {

// Wedge-basis indices with omega(e_i, e_j) = 0, in order.
std::vector<int> offdiag_indices(int genus) {
  std::vector<int> out;
  for (int idx = 0; idx < wedge_dim(genus); ++idx) {
    auto [i, j] = wedge_pair(genus, idx);
    if (!(j == i + 1 && i % 2 == 0)) out.push_back(idx);
  }
  return out;
}

} // namespace

Wedge2 bar_expand(int genus, const std::vector<Rat>& bar) {
  if (static_cast<int>(bar.size()) != bar_dim(genus))
    throw std::invalid_argument("bar coordinate length mismatch");
  Wedge2 w(genus);
  auto off = offdiag_indices(genus);
  size_t noff = off.size();
  for (size_t k = 0; k < noff; ++k) {
    auto [i, j] = wedge_pair(genus, off[k]);
    w.add_basis(i, j, bar[k]);
  }
  for (int d = 1; d <= genus - 1; ++d) {
    const Rat& s = bar[noff + d - 1];
    if (s == 0) continue;
    w.add_basis(2 * (d - 1), 2 * (d - 1) + 1, s);
    w.add_basis(2 * d, 2 * d + 1, -s);
  }
  return w;
}

std::vector<Rat> bar_coords(const Wedge2& w) {
  if (symplectic_trace(w) != 0)
    throw std::domain_error("bar_coords requires a trace-zero representative");
  int genus = w.genus();
  std::vector<Rat> out(bar_dim(genus), Rat(0));
  auto off = offdiag_indices(genus);
  for (size_t k = 0; k < off.size(); ++k) out[k] = w.coords()[off[k]];
  // Diagonal part sum_d c_d a_d^b_d with sum c_d = 0 decomposes over the
  // difference vectors with partial-sum coordinates.
  Rat partial(0);
  for (int d = 1; d <= genus - 1; ++d) {
    partial += w.coeff(2 * (d - 1), 2 * (d - 1) + 1);
    out[off.size() + d - 1] = partial;
  }
  return out;
}

int sym_dim(int genus) { return genus * (2 * genus + 1); }

int sym_index(int genus, int i, int j) {
  int n = 2 * genus;
  if (i > j) std::swap(i, j);
  return i * n - i * (i - 1) / 2 + (j - i);
}

Sym2::Sym2(int genus) : genus_(genus), c_(sym_dim(genus), Rat(0)) {}

bool Sym2::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

void Sym2::add_sym(const LatticeVector& u, const LatticeVector& v,
                   const Rat& k) {
  int n = 2 * genus_;
  for (int i = 0; i < n; ++i) {
    if (u[i] == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (v[j] == 0) continue;
      c_[sym_index(genus_, i, j)] += k * Rat(u[i]) * Rat(v[j]);
    }
  }
}

Sym2& Sym2::operator+=(const Sym2& o) {
  require_same_genus(genus_, o.genus_);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Sym2 operator-(Sym2 a, const Sym2& b) {
  require_same_genus(a.genus_, b.genus_);
  for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] -= b.c_[i];
  return a;
}

} // namespace acl
