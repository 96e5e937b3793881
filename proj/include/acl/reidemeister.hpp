#ifndef ACL_REIDEMEISTER_HPP
#define ACL_REIDEMEISTER_HPP

#include <map>

#include "acl/groupring.hpp"
#include "acl/words.hpp"

namespace acl {

// Closed-form value for a pair of almost-disjoint null-homologous curves.
// The geometric hypothesis is supplied by the caller; only homology data
// enters the value.
GroupRingElem closed_form_separated(int genus);

// Closed-form value when a separating curve splits eta from lambda:
// [h] - [h+eta] - [h+lambda] + [h+eta+lambda].
GroupRingElem closed_form_separating(const LatticeVector& h,
                                     const LatticeVector& eta_bar,
                                     const LatticeVector& lambda_bar);

// Equivariant intersection pairing of the lifts of x and y to the
// universal abelian cover, translated by h1 and h2.  Computed on the
// one-vertex fat graph of the surface: both loops are pulled tight to
// cyclic edge-words, strands through each edge band are kept parallel,
// and every signed crossing between the two curves at the vertex disk is
// weighted by the deck-label difference of the corresponding partial
// prefixes.  Requires both words to be null-homologous.
GroupRingElem oracle_pairing(const Word& x, const Word& y,
                             const LatticeVector& h1,
                             const LatticeVector& h2);

// Formal Q-combination of cover classes: Comm(x, y, h) stands for the
// class of the commutator [x, y] pushed by the deck element h, and
// Elt(z, h) for the class of a null-homologous word z pushed by h.
struct CoverSym {
  enum Kind { kComm, kElt };
  Kind kind;
  Word x;
  Word y;
  LatticeVector h;

  bool operator<(const CoverSym& o) const;
  bool operator==(const CoverSym& o) const;
};

class CoverClass {
 public:
  explicit CoverClass(int genus) : genus_(genus) {}

  int genus() const { return genus_; }
  const std::map<CoverSym, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_comm(const Word& x, const Word& y, const LatticeVector& h,
                const Rat& c);
  // Requires homology_class(z) = 0.
  void add_elt(const Word& z, const LatticeVector& h, const Rat& c);

 private:
  void add_sym(CoverSym s, const Rat& c);

  int genus_;
  std::map<CoverSym, Rat> terms_;
};

// Normal form of the Comm terms under the commutator identities
//   <y,x>^h   -> -<x,y>^h
//   <uv,z>^h  ->  <u,z>^h + <v,z>^{h+u}
//   <u^-1,z>^h -> -<u,z>^{h-u}
// applied until both slots are single positive letters in increasing
// generator order.  Elt terms pass through unchanged.
CoverClass cover_rewrite(const CoverClass& c);

// Pairing of a formal cover class against the class of the
// null-homologous probe word at deck position probe_h, evaluated termwise
// through oracle_pairing.
GroupRingElem cover_pairing(const CoverClass& c, const Word& probe,
                            const LatticeVector& probe_h);

} // namespace acl

#endif
