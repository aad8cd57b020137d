// Exact rational scalars and points. All geometric predicates in this
// library run on these; there is no floating point anywhere.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace linkobs {

using Int = mpz_class;
// Canonical rational: gcd(|num|, den) = 1, den > 0. mpq_class maintains
// this under arithmetic; construction from raw parts must canonicalize.
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Serialized as "num/den", denominator always present so parsing is uniform.
inline std::string rat_to_string(const Rat& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return make_rat(Int(s), 1);
    return make_rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("bad rational literal: " + s);
  }
}

using Point = std::vector<Rat>;

inline int sign(const Rat& q) { return sgn(q); }

}  // namespace linkobs
