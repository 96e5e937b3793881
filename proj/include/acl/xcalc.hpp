#ifndef ACL_XCALC_HPP
#define ACL_XCALC_HPP

#include <map>
#include <optional>
#include <vector>

#include "acl/groupring.hpp"
#include "acl/lattice.hpp"

namespace acl {

// Exhibited symplectic splitting Z^{2g} = X (+) Y.  Both blocks carry a
// basis; validity means the blocks pair to zero against each other and
// each restricted pairing matrix is unimodular, which together force the
// two blocks to span the whole lattice.
struct SplittingWitness {
  std::vector<LatticeVector> xblock;
  std::vector<LatticeVector> yblock;

  void validate(int genus) const;
  bool x_contains(const LatticeVector& v) const;
  bool y_contains(const LatticeVector& v) const;
};

// Standard splitting: block d against all remaining blocks.
SplittingWitness standard_witness(int genus, int d);
// Splitting with x in the X-block and x + z in the Y-block, for x a basis
// vector of block d and z a signed basis vector of block e.
SplittingWitness pair_sum_witness(int genus, const LatticeVector& x,
                                  const LatticeVector& z);
// Splittings for the cross-block generators (a_d + a_e, b_d - b_e) and
// (a_d + b_e, b_d + a_e).
SplittingWitness cross_witness_z(int genus, int d, int e);
SplittingWitness cross_witness_w(int genus, int d, int e);

// Generator symbol X(h, x, y) together with its splitting witness.  The
// witness certifies that x and y are homologically separate; two symbols
// with equal (h, x, y) denote the same class regardless of witness.
struct XSym {
  LatticeVector h;
  LatticeVector x;
  LatticeVector y;
  SplittingWitness witness;

  XSym(LatticeVector h, LatticeVector x, LatticeVector y,
       SplittingWitness w);
  int genus() const { return h.genus(); }
};

struct XKey {
  LatticeVector h, x, y;
  bool operator<(const XKey& o) const;
  bool operator==(const XKey& o) const;
};

// Finite Q-combination of X-symbols with canonical term order.
class XExpr {
 public:
  explicit XExpr(int genus) : genus_(genus) {}

  int genus() const { return genus_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  const std::map<XKey, Rat>& terms() const { return terms_; }
  const SplittingWitness& witness_for(const XKey& k) const;

  void add(const XSym& s, const Rat& c);
  XExpr& operator+=(const XExpr& o);
  XExpr& operator-=(const XExpr& o);
  friend XExpr operator*(const Rat& k, XExpr e);

  bool same_terms(const XExpr& o) const { return terms_ == o.terms_; }

 private:
  int genus_;
  std::map<XKey, Rat> terms_;
  std::map<XKey, SplittingWitness> witnesses_;
};

XExpr xexpr_of(const XSym& s);

// Image in the group ring: X(h,x,y) |-> [h] - [h+x] - [h+y] + [h+x+y].
GroupRingElem x_image(const XSym& s);
GroupRingElem x_image(const XExpr& e);

enum class RelationKind { kVanishing, kSymmetry, kAdditivity, kInverse, kCube };

// Rewrites a symbol by one relation; the image under x_image is always
// preserved exactly.  Additivity consumes a split x = x1 + (x - x1) with
// both parts in the witness X-block; cube consumes a shift k in the
// witness X-block and treats the symbol as X(h + k, x, y).
XExpr apply_relation(RelationKind kind, const XSym& s,
                     const std::optional<LatticeVector>& param = std::nullopt);

// Rewrites a symbol with x supported in a single block d and y supported
// away from block d into a combination with h = 0, x in block d and y
// supported in blocks above d.  Image-preserving and terminating.
XExpr reduce_to_w1(const XSym& s);

// Telescoping preimage of a class with r >= 2 nonzero blocks:
// [z_{d_1}+...+z_{d_r}] |-> sum X(0, z_{d_i}, z_{d_{i+1}}+...+z_{d_r}).
XExpr p_lift(const LatticeVector& z);

// Constructive projections of the group ring:
//   level 1: onto Q[union of single-block sublattices] along the span of
//            the images of the block-vs-complement generators;
//   level 2: further onto Q[union of {0, a_i, b_i, a_i+b_i}] along the
//            span of the projected two-step generator images.
GroupRingElem project_group_ring(int level, const GroupRingElem& xi);

// Y-layer: classes Y(h, x) with x in {a_d, b_d} and h in block d.
struct YSym {
  int d;
  bool x_is_b;
  LatticeVector h; // supported in block d

  bool operator<(const YSym& o) const;
  bool operator==(const YSym& o) const;
};

using YExpr = std::map<YSym, Rat>;

// Drops the y-witness of a two-block generator and projects h to block d.
// The witness value must have the shape x + z with z a signed basis
// vector of another block.
YSym y_canonicalize(const LatticeVector& h, const LatticeVector& x,
                    const LatticeVector& y_witness);

// [h] - 2[h+x] + [h+2x].
GroupRingElem y_image(const YSym& y);
GroupRingElem y_image(int genus, const YExpr& e);

// Rewrites Y(h, b_d) until every b-type term has a_d-coordinate 0 or 1,
// preserving the image exactly; a-type terms are already reduced.
YExpr reduce_to_w2(const YSym& y);

// ZW-layer symbols: Z corresponds to the pair (a_d+a_e, b_d-b_e), W to
// (a_d+b_e, b_d+a_e), with d != e.
struct ZWSym {
  bool is_w;
  int d;
  int e;

  bool operator<(const ZWSym& o) const;
};

using ZWExpr = std::map<ZWSym, Rat>;

// theta_d = [0] - [a_d] - [b_d] + [a_d+b_d].
GroupRingElem theta(int genus, int d);

// Z |-> theta_d - theta_e,  W |-> theta_d + theta_e.
GroupRingElem zw_image(int genus, const ZWSym& s);

// The defining X-symbol of a ZW generator at deck position h.
XSym zw_generator(int genus, const ZWSym& s, const LatticeVector& h);

// Expansion over the chain basis {Z(d, d+1)} together with W(1, 2).
ZWExpr w3_decompose(int genus, const ZWSym& s);

struct ZWReport {
  int genus = 0;
  int w3_rank = 0;
  int relation_failures = 0;
  int decomposition_failures = 0;
  bool ok() const;
};

// Verifies the ZW relation families at image level for all index
// triples, decomposes every ZW symbol over the chain basis, and computes
// the exact rank of the chain-basis image matrix (expected g).
ZWReport zw_relations_check(int genus);

} // namespace acl

#endif
