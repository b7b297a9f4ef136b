#include "nilrep/bounds.hpp"

#include "nilrep/errors.hpp"

namespace nilrep {
namespace bounds {

Int p_restricted(unsigned k, unsigned j) {
  // DP over parts <= k; row t holds p_t(0..j).
  std::vector<Int> row(j + 1, Int(0));
  row[0] = 1;
  for (unsigned t = 1; t <= k; ++t)
    for (unsigned s = t; s <= j; ++s) row[s] += row[s - t];
  return row[j];
}

Int f(unsigned n, unsigned beta) {
  if (n < 3) throw Error("BadArguments", "f(n, beta) needs n >= 3");
  if (beta < 1 || beta > n - 1) throw Error("BadArguments", "f(n, beta) needs 1 <= beta <= n-1");
  Int total = beta;
  for (unsigned j = 0; j + 2 <= n; ++j) total += p_restricted(n - 1 - beta, j);
  return total;
}

Int f_closed_beta_nm1(unsigned n) { return Int(n); }

Int f_closed_beta_nm2(unsigned n) { return Int(2) * n - 3; }

Int f_closed_beta_nm3(unsigned n) {
  if (n < 4) throw Error("BadArguments", "closed form for beta = n-3 needs n >= 4");
  Int num = Int(n) * n + Int(3) * n - 12 + Int(2) * (n / 2);
  return num / 4;
}

MuLowerResult mu_lower(const LieAlgebra& L) {
  MuLowerResult res;
  res.value = 0;
  const size_t n = L.dim();
  if (n == 0) return res;

  Int s = sqrt(Int(n)); // floor
  if (s * s < Int(n)) s += 1;
  res.sources.push_back({"sqrt-dim", s});

  if (n >= 2) {
    try {
      size_t c = nilpotency_class(L);
      res.sources.push_back({"class-plus-one", Int(c) + 1});
      if (is_filiform(L)) res.sources.push_back({"filiform-dim", Int(n)});
    } catch (const Error& e) {
      if (e.code() != "NotNilpotent") throw;
    }
  }
  for (const LowerBound& b : res.sources)
    if (b.value > res.value) res.value = b.value;
  return res;
}

Rat remark_bound(unsigned n, unsigned beta) {
  if (n < 3 || beta < 1 || beta > n - 1) throw Error("BadArguments", "remark_bound domain");
  unsigned e = n - beta - 1;
  Int base = Int(2) * n - beta - 3;
  Int num = 1;
  for (unsigned k = 0; k < e; ++k) num *= base;
  Int fact = 1;
  for (unsigned k = 2; k <= e; ++k) fact *= k;
  Rat q(num, fact);
  q.canonicalize();
  return Rat(beta) + q;
}

Int half_beta_bound(unsigned n) {
  if (n < 3) throw Error("BadArguments", "half_beta_bound needs n >= 3");
  unsigned k = n / 2 - 1;
  Int total = Int(n) - 1;
  for (unsigned j = 0; j + 2 <= n; ++j) total += p_restricted(k, j);
  return total;
}

GeneralBoundValue general_bound_value(const Int& dim_q, unsigned r) {
  if (r < 1) throw Error("BadArguments", "general_bound_value needs r >= 1");
  GeneralBoundValue out;
  out.radicand = r;
  Rat coeff = Rat(Int(3) * (Int(1) << r), Int(r));
  coeff.canonicalize();

  Int rs = sqrt(Int(r));
  if (rs * rs == Int(r)) {
    // Perfect square: the whole value is rational.
    out.rational_part = Rat(dim_q) + coeff * rs;
    out.sqrt_coeff = 0;
    Int num = out.rational_part.get_num(), den = out.rational_part.get_den();
    Int c = num / den;
    if (c * den < num) c += 1; // ceil for positive values
    out.ceiling = c;
    return out;
  }

  out.rational_part = Rat(dim_q);
  out.sqrt_coeff = coeff;
  // ceil(a/b * sqrt(r)): with s = floor(sqrt(a^2 r)), the value lies in
  // [s/b, (s+1)/b) and is irrational, so ceil = floor(s/b) + 1.
  Int a = coeff.get_num(), b = coeff.get_den();
  Int s = sqrt(a * a * Int(r));
  out.ceiling = dim_q + s / b + 1;
  return out;
}

} // namespace bounds
} // namespace nilrep
