#ifndef ACL_RATIONAL_HPP
#define ACL_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

namespace acl {

// Exact rational scalar.  Every quantity in this library is an exact
// identity over Q; floating point is never used.
using Rat = mpq_class;
using Int = mpz_class;

inline std::string rat_str(const Rat& q) { return q.get_str(); }

// Parses "p", "-p/q" etc.; throws std::invalid_argument on malformed input.
Rat rat_parse(const std::string& s);

} // namespace acl

#endif
