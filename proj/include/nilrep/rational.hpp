#ifndef NILREP_RATIONAL_HPP
#define NILREP_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace nilrep {

/// Exact rational scalar. All arithmetic in the library is over Rat;
/// no floating point is used anywhere.
using Rat = mpq_class;
using Int = mpz_class;

using QVec = std::vector<Rat>;

/// Builds a canonical rational from a numerator/denominator pair.
Rat rat(long num, long den = 1);

/// Parses "p", "-p" or "p/q" (q > 0 after canonicalization). Throws
/// Error("BadRational") on malformed input or zero denominator.
Rat rat_from_string(const std::string& s);

/// Renders canonically: "p" when the denominator is 1, else "p/q".
std::string rat_to_string(const Rat& x);

bool is_zero(const QVec& v);
QVec zero_vec(size_t n);
QVec unit_vec(size_t n, size_t i);
void axpy(QVec& y, const Rat& a, const QVec& x); // y += a*x

} // namespace nilrep

#endif
