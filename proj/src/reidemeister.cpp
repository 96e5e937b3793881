#include "acl/reidemeister.hpp"

#include <mutex>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace acl {

GroupRingElem closed_form_separated(int genus) { return GroupRingElem(genus); }

GroupRingElem closed_form_separating(const LatticeVector& h,
                                     const LatticeVector& eta_bar,
                                     const LatticeVector& lambda_bar) {
  GroupRingElem r(h.genus());
  r.add_term(h, Rat(1));
  r.add_term(h + eta_bar, Rat(-1));
  r.add_term(h + lambda_bar, Rat(-1));
  r.add_term(h + eta_bar + lambda_bar, Rat(1));
  return r;
}

namespace {

// Rotation system of the one-vertex graph: block d occupies the four
// consecutive slots (tail a_d, tail b_d, head a_d, head b_d).  Thickening
// this graph gives the genus-g surface with one boundary face, which is
// verified once below by tracing the face orbit.
int slot_tail(int gen) {
  int d = (gen + 1) / 2;
  return 4 * (d - 1) + (gen % 2 == 0 ? 1 : 0);
}
int slot_head(int gen) {
  int d = (gen + 1) / 2;
  return 4 * (d - 1) + 2 + (gen % 2 == 0 ? 1 : 0);
}

std::once_flag face_checked;

void face_self_check() {
  const int genus = 4;
  const int nslots = 4 * 2 * genus;
  // dart id: 2(gen-1) for the forward traversal, +1 for the backward one
  std::vector<int> slot_to_dart(nslots);
  auto dart_slot = [](int dart) {
    int gen = dart / 2 + 1;
    return dart % 2 == 0 ? slot_tail(gen) : slot_head(gen);
  };
  for (int dart = 0; dart < 4 * genus; ++dart)
    slot_to_dart[dart_slot(dart)] = dart;
  int dart = 0, steps = 0;
  do {
    int rev = dart ^ 1;
    dart = slot_to_dart[(dart_slot(rev) + 1) % nslots];
    ++steps;
  } while (dart != 0 && steps <= nslots);
  if (steps != 4 * genus)
    throw std::logic_error("fat graph rotation does not close a single face");
}

// Boundary position of a strand endpoint on the vertex disk: a slot index
// plus a fractional offset num/den strictly inside the slot arc.
struct Endpoint {
  int slot;
  int num;
  int den;
};

bool angle_less(const Endpoint& a, const Endpoint& b) {
  if (a.slot != b.slot) return a.slot < b.slot;
  return static_cast<long long>(a.num) * b.den <
         static_cast<long long>(b.num) * a.den;
}
bool angle_eq(const Endpoint& a, const Endpoint& b) {
  return a.slot == b.slot && static_cast<long long>(a.num) * b.den ==
                                 static_cast<long long>(b.num) * a.den;
}

// Order on the circle after cutting just below `origin`.
struct CircularLess {
  Endpoint origin;
  bool before(const Endpoint& u, const Endpoint& v) const {
    bool au = angle_less(u, origin) || angle_eq(u, origin);
    bool av = angle_less(v, origin) || angle_eq(v, origin);
    if (au != av) return !au; // strictly after the origin comes first
    return angle_less(u, v);
  }
};

struct Chord {
  Endpoint in;
  Endpoint out;
  LatticeVector label;
};

// The global crossing sign is fixed once against the closed-form values
// of the standard separating configurations and frozen.
constexpr int kOrientationSign = 1;

std::vector<Chord> build_chords(const Word& w, int curve,
                                const std::vector<std::vector<int>>& widths,
                                const std::vector<int>& band_sizes) {
  int genus = w.genus();
  size_t n = w.length();
  std::vector<Chord> chords;
  chords.reserve(n);
  // Strand endpoints of the passage of letter j: at the tail arc the band
  // widths increase counterclockwise, at the head arc they appear
  // reversed (the band boundary exchanges the arc ends).
  auto out_endpoint = [&](size_t j) -> Endpoint {
    const Letter& l = w.letters()[j];
    int k = band_sizes[l.gen];
    int wd = widths[curve][j];
    if (l.sign > 0) return {slot_tail(l.gen), wd, k + 1};
    return {slot_head(l.gen), k + 1 - wd, k + 1};
  };
  auto in_endpoint = [&](size_t j) -> Endpoint {
    const Letter& l = w.letters()[j];
    int k = band_sizes[l.gen];
    int wd = widths[curve][j];
    if (l.sign > 0) return {slot_head(l.gen), k + 1 - wd, k + 1};
    return {slot_tail(l.gen), wd, k + 1};
  };
  LatticeVector prefix(genus);
  for (size_t j = 0; j < n; ++j) {
    size_t prev = (j + n - 1) % n;
    chords.push_back({in_endpoint(prev), out_endpoint(j), prefix});
    LatticeVector step(genus);
    step[w.letters()[j].gen - 1] = w.letters()[j].sign;
    prefix += step;
  }
  return chords;
}

} // namespace

GroupRingElem oracle_pairing(const Word& x0, const Word& y0,
                             const LatticeVector& h1,
                             const LatticeVector& h2) {
  std::call_once(face_checked, face_self_check);
  int genus = x0.genus();
  require_same_genus(genus, y0.genus());
  require_same_genus(genus, h1.genus());
  require_same_genus(genus, h2.genus());
  if (!homology_class(x0).is_zero() || !homology_class(y0).is_zero())
    throw std::domain_error("oracle_pairing requires null-homologous words");

  CyclicForm cx = cyclic_reduce(x0);
  CyclicForm cy = cyclic_reduce(y0);
  GroupRingElem out(genus);
  if (cx.core.is_identity() || cy.core.is_identity()) return out;
  LatticeVector shift =
      (h2 + cy.conjugator_class) - (h1 + cx.conjugator_class);

  // Distinct widths for all strands running through each edge band.
  std::vector<int> band_sizes(2 * genus + 1, 0);
  std::vector<std::vector<int>> widths(2);
  const Word* curves[2] = {&cx.core, &cy.core};
  for (int c = 0; c < 2; ++c) {
    widths[c].resize(curves[c]->length());
    for (size_t j = 0; j < curves[c]->length(); ++j)
      widths[c][j] = ++band_sizes[curves[c]->letters()[j].gen];
  }

  std::vector<Chord> ax = build_chords(cx.core, 0, widths, band_sizes);
  std::vector<Chord> ay = build_chords(cy.core, 1, widths, band_sizes);

  for (const Chord& a : ax) {
    CircularLess rel{a.in};
    for (const Chord& b : ay) {
      // Crossing iff exactly one endpoint of b lies on the arc from a.in
      // to a.out; the order of b's endpoints around that arc gives the
      // sign of the transverse intersection.
      bool b1_inside = rel.before(b.in, a.out);
      bool b2_inside = rel.before(b.out, a.out);
      if (b1_inside == b2_inside) continue;
      int sign = b1_inside ? 1 : -1;
      out.add_term(b.label - a.label + shift,
                   Rat(sign * kOrientationSign));
    }
  }
  return out;
}

bool CoverSym::operator<(const CoverSym& o) const {
  return std::tie(kind, h, x.letters(), y.letters()) <
         std::tie(o.kind, o.h, o.x.letters(), o.y.letters());
}

bool CoverSym::operator==(const CoverSym& o) const {
  return kind == o.kind && h == o.h && x == o.x && y == o.y;
}

void CoverClass::add_sym(CoverSym s, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(std::move(s), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void CoverClass::add_comm(const Word& x, const Word& y,
                          const LatticeVector& h, const Rat& c) {
  require_same_genus(genus_, x.genus());
  require_same_genus(genus_, y.genus());
  require_same_genus(genus_, h.genus());
  add_sym({CoverSym::kComm, x, y, h}, c);
}

void CoverClass::add_elt(const Word& z, const LatticeVector& h, const Rat& c) {
  require_same_genus(genus_, z.genus());
  require_same_genus(genus_, h.genus());
  if (!homology_class(z).is_zero())
    throw std::domain_error("Elt symbol requires a null-homologous word");
  add_sym({CoverSym::kElt, z, Word(genus_), h}, c);
}

namespace {

bool single_positive(const Word& w) {
  return w.length() == 1 && w.letters()[0].sign > 0;
}

void normalize_comm(CoverClass& out, const Rat& c, const Word& x,
                    const Word& y, const LatticeVector& h) {
  if (c == 0 || x.is_identity() || y.is_identity()) return;
  int genus = x.genus();
  if (!single_positive(x)) {
    const Letter first = x.letters()[0];
    if (x.length() == 1) {
      // first is a single inverse letter
      LatticeVector cls(genus);
      cls[first.gen - 1] = 1;
      Word pos(genus, {{first.gen, 1}});
      normalize_comm(out, -c, pos, y, h - cls);
      return;
    }
    Word head(genus, {first});
    std::vector<Letter> rest(x.letters().begin() + 1, x.letters().end());
    Word tail(genus, rest);
    LatticeVector cls(genus);
    cls[first.gen - 1] = first.sign;
    normalize_comm(out, c, head, y, h);
    normalize_comm(out, c, tail, y, h + cls);
    return;
  }
  if (!single_positive(y) || y.letters()[0].gen < x.letters()[0].gen) {
    normalize_comm(out, -c, y, x, h);
    return;
  }
  if (x.letters()[0].gen == y.letters()[0].gen) return; // [u,u] is trivial
  out.add_comm(x, y, h, c);
}

} // namespace

CoverClass cover_rewrite(const CoverClass& c) {
  CoverClass out(c.genus());
  for (const auto& [sym, coef] : c.terms()) {
    if (sym.kind == CoverSym::kElt) {
      out.add_elt(sym.x, sym.h, coef);
      continue;
    }
    normalize_comm(out, coef, sym.x, sym.y, sym.h);
  }
  return out;
}

GroupRingElem cover_pairing(const CoverClass& c, const Word& probe,
                            const LatticeVector& probe_h) {
  GroupRingElem out(c.genus());
  for (const auto& [sym, coef] : c.terms()) {
    Word z =
        sym.kind == CoverSym::kComm ? commutator(sym.x, sym.y) : sym.x;
    out += coef * oracle_pairing(z, probe, sym.h, probe_h);
  }
  return out;
}

} // namespace acl
