#ifndef ACL_WORDS_HPP
#define ACL_WORDS_HPP

#include <string>
#include <vector>

#include "acl/exterior.hpp"
#include "acl/groupring.hpp"
#include "acl/lattice.hpp"

namespace acl {

// One letter of a word: generator index 1..2g (odd = alpha_{(i+1)/2},
// even = beta_{i/2}) and a sign.
struct Letter {
  int gen;
  int sign;
  bool operator==(const Letter& o) const {
    return gen == o.gen && sign == o.sign;
  }
};

// Freely reduced word in the 2g surface-group generators.  Reduction is
// performed eagerly on construction, so adjacent inverse pairs never
// occur; the empty word is the identity.
class Word {
 public:
  explicit Word(int genus) : genus_(genus) {}
  Word(int genus, const std::vector<Letter>& letters);

  int genus() const { return genus_; }
  const std::vector<Letter>& letters() const { return letters_; }
  bool is_identity() const { return letters_.empty(); }
  size_t length() const { return letters_.size(); }

  Word inverse() const;
  friend Word operator*(const Word& a, const Word& b);

  bool operator==(const Word& o) const {
    return genus_ == o.genus_ && letters_ == o.letters_;
  }
  bool operator!=(const Word& o) const { return !(*this == o); }

  // Whitespace-separated tokens "a1 b3 a1'" with a trailing apostrophe
  // marking an inverse letter.
  std::string str() const;
  static Word parse(int genus, const std::string& text);

 private:
  int genus_;
  std::vector<Letter> letters_;
};

// [x, y] = x y x^-1 y^-1.
Word commutator(const Word& x, const Word& y);
// y x y^-1.
Word conjugate(const Word& y, const Word& x);

// Signed letter count per generator; a homomorphism to Z^{2g} sending
// alpha_d to a_d and beta_d to b_d.
LatticeVector homology_class(const Word& w);

// Cyclic reduction w = u * core * u^-1 with core cyclically reduced.
struct CyclicForm {
  Word core;
  LatticeVector conjugator_class;
};
CyclicForm cyclic_reduce(const Word& w);

// Class of a commutator-subgroup word in wedge^2 H: half the sum over
// letter pairs j < l of class_j ^ class_l, normalised so that the image
// of [x, y] is xbar ^ ybar.  Requires homology_class(w) = 0.
Wedge2 commutator_projection(const Word& w);

// Abelianised free derivative with d(g)/dg = [0], d(g^-1)/dg = -[-gbar]
// and d(uv)/dg = du/dg + [ubar] dv/dg.
GroupRingElem fox_derivative(const Word& w, int gen);

} // namespace acl

#endif
