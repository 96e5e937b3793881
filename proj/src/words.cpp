#include "acl/words.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>

namespace acl {

namespace {

void check_letter(int genus, const Letter& l) {
  if (l.gen < 1 || l.gen > 2 * genus)
    throw std::invalid_argument("generator index out of range: " +
                                std::to_string(l.gen));
  if (l.sign != 1 && l.sign != -1)
    throw std::invalid_argument("letter sign must be +-1");
}

void push_reduced(std::vector<Letter>& out, const Letter& l) {
  if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign)
    out.pop_back();
  else
    out.push_back(l);
}

} // namespace

Word::Word(int genus, const std::vector<Letter>& letters) : genus_(genus) {
  for (const Letter& l : letters) {
    check_letter(genus, l);
    push_reduced(letters_, l);
  }
}

Word Word::inverse() const {
  std::vector<Letter> rev;
  rev.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    rev.push_back({it->gen, -it->sign});
  Word w(genus_);
  w.letters_ = std::move(rev);
  return w;
}

Word operator*(const Word& a, const Word& b) {
  require_same_genus(a.genus_, b.genus_);
  Word w(a.genus_);
  w.letters_ = a.letters_;
  for (const Letter& l : b.letters_) push_reduced(w.letters_, l);
  return w;
}

std::string Word::str() const {
  std::ostringstream os;
  bool first = true;
  for (const Letter& l : letters_) {
    if (!first) os << " ";
    int d = (l.gen + 1) / 2;
    os << (l.gen % 2 == 1 ? 'a' : 'b') << d;
    if (l.sign < 0) os << '\'';
    first = false;
  }
  return os.str();
}

Word Word::parse(int genus, const std::string& text) {
  std::istringstream is(text);
  std::string tok;
  std::vector<Letter> letters;
  while (is >> tok) {
    int sign = 1;
    if (tok.size() > 1 && tok.back() == '\'') {
      sign = -1;
      tok.pop_back();
    }
    if (tok.size() < 2 || (tok[0] != 'a' && tok[0] != 'b'))
      throw std::invalid_argument("bad word token: " + tok);
    int d = 0;
    for (size_t i = 1; i < tok.size(); ++i) {
      if (tok[i] < '0' || tok[i] > '9')
        throw std::invalid_argument("bad word token: " + tok);
      d = d * 10 + (tok[i] - '0');
    }
    if (d < 1 || d > genus)
      throw std::invalid_argument("token block index out of range: " + tok);
    letters.push_back({tok[0] == 'a' ? 2 * d - 1 : 2 * d, sign});
  }
  return Word(genus, letters);
}

Word commutator(const Word& x, const Word& y) {
  return x * y * x.inverse() * y.inverse();
}

Word conjugate(const Word& y, const Word& x) { return y * x * y.inverse(); }

LatticeVector homology_class(const Word& w) {
  LatticeVector v(w.genus());
  for (const Letter& l : w.letters()) v[l.gen - 1] += l.sign;
  return v;
}

CyclicForm cyclic_reduce(const Word& w) {
  std::vector<Letter> body = w.letters();
  std::vector<Letter> prefix;
  while (body.size() >= 2 && body.front().gen == body.back().gen &&
         body.front().sign == -body.back().sign) {
    prefix.push_back(body.front());
    body.erase(body.begin());
    body.pop_back();
  }
  Word core(w.genus(), body);
  Word pre(w.genus(), prefix);
  return {core, homology_class(pre)};
}

namespace {

LatticeVector letter_class(int genus, const Letter& l) {
  LatticeVector v(genus);
  v[l.gen - 1] = l.sign;
  return v;
}

void rho_self_check();

Wedge2 rho_raw(const Word& w) {
  Wedge2 out(w.genus());
  LatticeVector prefix(w.genus());
  for (const Letter& l : w.letters()) {
    LatticeVector v = letter_class(w.genus(), l);
    out.add_wedge(prefix, v, Rat(1, 2));
    prefix += v;
  }
  return out;
}

std::once_flag rho_checked;

void rho_self_check() {
  int g = 4;
  Word x = Word::parse(g, "a1 b2 a3'");
  Word y = Word::parse(g, "b1 a2 a2 b4'");
  Wedge2 lhs = rho_raw(commutator(x, y));
  Wedge2 rhs = wedge_of(homology_class(x), homology_class(y));
  if (lhs != rhs)
    throw std::logic_error("commutator projection normalisation self-check failed");
  Word z = Word::parse(g, "a1 b1 a1' b1'");
  if (rho_raw(z) != wedge_of(basis_a(g, 1), basis_b(g, 1)))
    throw std::logic_error("commutator projection normalisation self-check failed");
}

} // namespace

Wedge2 commutator_projection(const Word& w) {
  std::call_once(rho_checked, rho_self_check);
  if (!homology_class(w).is_zero())
    throw std::domain_error(
        "commutator_projection requires a null-homologous word");
  return rho_raw(w);
}

GroupRingElem fox_derivative(const Word& w, int gen) {
  if (gen < 1 || gen > 2 * w.genus())
    throw std::invalid_argument("generator index out of range");
  GroupRingElem out(w.genus());
  LatticeVector prefix(w.genus());
  for (const Letter& l : w.letters()) {
    LatticeVector v = letter_class(w.genus(), l);
    if (l.gen == gen) {
      if (l.sign > 0)
        out.add_term(prefix, Rat(1));
      else
        out.add_term(prefix + v, Rat(-1));
    }
    prefix += v;
  }
  return out;
}

} // namespace acl
