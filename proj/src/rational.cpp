#include "nilrep/rational.hpp"

#include "nilrep/errors.hpp"

#include <cctype>

namespace nilrep {

Rat rat(long num, long den) {
  if (den == 0) throw Error("BadRational", "zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw Error("BadRational", "empty rational literal");
  // Validate shape by hand: mpq's own parser accepts whitespace and bases
  // we do not want in algebra files.
  size_t pos = 0;
  auto scan_int = [&](const char* what) {
    std::string out;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      if (s[pos] == '-') out += '-';
      ++pos;
    }
    size_t digits = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      out += s[pos];
      ++pos;
      ++digits;
    }
    if (digits == 0)
      throw Error("BadRational", std::string("missing ") + what + " in '" + s + "'");
    return out;
  };
  std::string num = scan_int("numerator");
  std::string den = "1";
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    den = scan_int("denominator");
  }
  if (pos != s.size())
    throw Error("BadRational", "trailing characters in '" + s + "'");
  Rat q(num + "/" + den);
  if (q.get_den() == 0) throw Error("BadRational", "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string rat_to_string(const Rat& x) { return x.get_str(); }

bool is_zero(const QVec& v) {
  for (const Rat& x : v)
    if (x != 0) return false;
  return true;
}

QVec zero_vec(size_t n) { return QVec(n, Rat(0)); }

QVec unit_vec(size_t n, size_t i) {
  QVec v(n, Rat(0));
  v[i] = 1;
  return v;
}

void axpy(QVec& y, const Rat& a, const QVec& x) {
  for (size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

} // namespace nilrep
