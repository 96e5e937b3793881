#include "acl/groupring.hpp"

#include <sstream>
#include <stdexcept>

namespace acl {

Rat rat_parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  size_t pos = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  bool seen_digit = false, seen_slash = false;
  for (size_t i = pos; i < s.size(); ++i) {
    if (s[i] == '/' && !seen_slash && seen_digit && i + 1 < s.size()) {
      seen_slash = true;
      continue;
    }
    if (s[i] < '0' || s[i] > '9')
      throw std::invalid_argument("malformed rational literal: " + s);
    seen_digit = true;
  }
  if (!seen_digit) throw std::invalid_argument("malformed rational literal: " + s);
  Rat q(s);
  q.canonicalize();
  return q;
}

GroupRingElem::GroupRingElem(int genus) : genus_(genus) {
  if (genus < 1) throw std::invalid_argument("genus must be positive");
}

Rat GroupRingElem::coeff(const LatticeVector& h) const {
  auto it = terms_.find(h);
  return it == terms_.end() ? Rat(0) : it->second;
}

void GroupRingElem::add_term(const LatticeVector& h, const Rat& c) {
  require_same_genus(genus_, h.genus());
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(h, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GroupRingElem& GroupRingElem::operator+=(const GroupRingElem& o) {
  require_same_genus(genus_, o.genus_);
  for (const auto& [h, c] : o.terms_) add_term(h, c);
  return *this;
}

GroupRingElem& GroupRingElem::operator-=(const GroupRingElem& o) {
  require_same_genus(genus_, o.genus_);
  for (const auto& [h, c] : o.terms_) add_term(h, -c);
  return *this;
}

GroupRingElem operator*(const Rat& k, GroupRingElem a) {
  if (k == 0) return GroupRingElem(a.genus_);
  for (auto& [h, c] : a.terms_) c *= k;
  return a;
}

GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b) {
  require_same_genus(a.genus_, b.genus_);
  GroupRingElem r(a.genus_);
  for (const auto& [h1, c1] : a.terms_)
    for (const auto& [h2, c2] : b.terms_) r.add_term(h1 + h2, c1 * c2);
  return r;
}

std::string GroupRingElem::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [h, c] : terms_) {
    if (!first) os << " + ";
    os << rat_str(c) << "*[" << h.str() << "]";
    first = false;
  }
  return os.str();
}

GroupRingElem gr_monomial(int genus, const LatticeVector& h) {
  GroupRingElem r(genus);
  r.add_term(h, Rat(1));
  return r;
}

GroupRingElem gr_translate(const LatticeVector& h, const GroupRingElem& xi) {
  require_same_genus(h.genus(), xi.genus());
  GroupRingElem r(xi.genus());
  for (const auto& [k, c] : xi.terms()) r.add_term(k + h, c);
  return r;
}

Rat gr_augment(const GroupRingElem& xi) {
  Rat s(0);
  for (const auto& [h, c] : xi.terms()) s += c;
  return s;
}

std::vector<Rat> gr_hmap(const GroupRingElem& xi) {
  std::vector<Rat> v(2 * xi.genus(), Rat(0));
  for (const auto& [h, c] : xi.terms())
    for (size_t i = 0; i < h.c.size(); ++i) v[i] += c * Rat(h.c[i]);
  return v;
}

GroupRingElem gr_involution(const GroupRingElem& xi) {
  GroupRingElem r(xi.genus());
  for (const auto& [h, c] : xi.terms()) r.add_term(-h, c);
  return r;
}

} // namespace acl
