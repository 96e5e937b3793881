#ifndef ACL_GROUPRING_HPP
#define ACL_GROUPRING_HPP

#include <map>
#include <vector>

#include "acl/lattice.hpp"
#include "acl/rational.hpp"

namespace acl {

// Exact element of Q[Z^{2g}]: a finite formal sum of lattice points with
// nonzero rational coefficients.  Zero coefficients are never stored, so
// the term map is a canonical form and equality is map equality.
class GroupRingElem {
 public:
  explicit GroupRingElem(int genus);

  int genus() const { return genus_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  // Coefficient of [h]; zero when absent.
  Rat coeff(const LatticeVector& h) const;

  void add_term(const LatticeVector& h, const Rat& c);

  const std::map<LatticeVector, Rat>& terms() const { return terms_; }

  GroupRingElem& operator+=(const GroupRingElem& o);
  GroupRingElem& operator-=(const GroupRingElem& o);
  friend GroupRingElem operator+(GroupRingElem a, const GroupRingElem& b) {
    a += b;
    return a;
  }
  friend GroupRingElem operator-(GroupRingElem a, const GroupRingElem& b) {
    a -= b;
    return a;
  }
  friend GroupRingElem operator*(const Rat& k, GroupRingElem a);
  friend GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b);

  bool operator==(const GroupRingElem& o) const {
    return genus_ == o.genus_ && terms_ == o.terms_;
  }
  bool operator!=(const GroupRingElem& o) const { return !(*this == o); }

  std::string str() const;

 private:
  int genus_;
  std::map<LatticeVector, Rat> terms_;
};

// [h] as an element of Q[Z^{2g}].
GroupRingElem gr_monomial(int genus, const LatticeVector& h);

// Each term [k] becomes [k + h]; equals multiplication by [h].
GroupRingElem gr_translate(const LatticeVector& h, const GroupRingElem& xi);

// Augmentation: sum of coefficients.
Rat gr_augment(const GroupRingElem& xi);

// Sum of coeff * point, as a rational vector of length 2g.
std::vector<Rat> gr_hmap(const GroupRingElem& xi);

// h -> -h on every term; an involution.
GroupRingElem gr_involution(const GroupRingElem& xi);

} // namespace acl

#endif
