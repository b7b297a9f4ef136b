#include "nilrep/errors.hpp"
#include "nilrep/lie.hpp"

#include <doctest.h>

#include <random>

using namespace nilrep;

namespace {

LieAlgebra heisenberg(size_t dim) {
  // dim = 2k+1: [x_{2i-1}, x_{2i}] = x_dim
  LieAlgebra L(dim);
  for (size_t i = 0; i + 1 < dim; i += 2) {
    QVec v = zero_vec(dim);
    v[dim - 1] = 1;
    L.set_bracket(i, i + 1, v);
  }
  return L;
}

LieAlgebra standard_filiform(size_t n) {
  LieAlgebra L(n);
  for (size_t i = 1; i + 1 < n; ++i) {
    QVec v = zero_vec(n);
    v[i + 1] = 1;
    L.set_bracket(0, i, v);
  }
  return L;
}

} // namespace

TEST_SUITE("lie_core") {

TEST_CASE("jacobi validation accepts and rejects") {
  CHECK_NOTHROW(validate(heisenberg(3)));
  CHECK_NOTHROW(validate(standard_filiform(6)));

  // [x1,x2] = x3, [x1,x3] = x1: the Jacobi sum on (x1,x2,x3) is -x3
  LieAlgebra bad(3);
  {
    QVec v = zero_vec(3);
    v[2] = 1;
    bad.set_bracket(0, 1, v);
    QVec w = zero_vec(3);
    w[0] = 1;
    bad.set_bracket(0, 2, w);
  }
  CHECK_THROWS_WITH_AS(validate(bad), doctest::Contains("JacobiViolation"), Error);
}

TEST_CASE("series, center, derived on the standard examples") {
  LieAlgebra h = heisenberg(5);
  CHECK(nilpotency_class(h) == 2);
  CHECK(center(h).dim() == 1);
  CHECK(derived(h).dim() == 1);
  CHECK_FALSE(is_filiform(h));

  LieAlgebra f6 = standard_filiform(6);
  CHECK(nilpotency_class(f6) == 5);
  CHECK(is_filiform(f6));
  auto series = lower_central_series(f6);
  REQUIRE(series.size() == 5);
  CHECK(series[0].dim() == 6);
  CHECK(series[1].dim() == 4); // <x3..x6>
  CHECK(series[4].dim() == 1);
  CHECK(center(f6).dim() == 1);
  CHECK(derived(f6).dim() == 4);

  // abelian
  LieAlgebra ab(3);
  CHECK(nilpotency_class(ab) == 1);
  CHECK(center(ab).dim() == 3);
  CHECK(derived(ab).dim() == 0);

  // not nilpotent: [x1,x2] = x2
  LieAlgebra aff(2);
  {
    QVec v = zero_vec(2);
    v[1] = 1;
    aff.set_bracket(0, 1, v);
  }
  CHECK_THROWS_WITH_AS(lower_central_series(aff), doctest::Contains("NotNilpotent"), Error);
}

TEST_CASE("adjoint representation verifies; faithful iff center is zero") {
  for (LieAlgebra L : {heisenberg(3), heisenberg(5), standard_filiform(5)}) {
    Representation ad_rep;
    ad_rep.algebra = L;
    for (size_t i = 0; i < L.dim(); ++i) ad_rep.mats.push_back(L.ad_basis(i));
    VerifyResult v = verify_representation(L, ad_rep);
    CHECK(v.is_module);
    CHECK(v.kernel.dim() == center(L).dim());
    CHECK_FALSE(v.faithful);
  }
}

TEST_CASE("verify_representation flags a broken bracket") {
  LieAlgebra h = heisenberg(3);
  Representation rho;
  rho.algebra = h;
  QMat a(2, 2), b(2, 2), c(2, 2);
  a.at(0, 1) = 1; // [a,b] = 0 but [x1,x2] should act as rho(x3) = a
  b.at(0, 0) = 1;
  b.at(1, 1) = 1;
  rho.mats = {a, b, a};
  VerifyResult v = verify_representation(h, rho);
  CHECK_FALSE(v.is_module);
  REQUIRE(v.first_violation.has_value());
}

TEST_CASE("split_abelian_factor peels central directions outside the derived algebra") {
  // h3 + Q^2
  LieAlgebra L(5);
  {
    QVec v = zero_vec(5);
    v[2] = 1;
    L.set_bracket(0, 1, v);
  }
  SplitResult s = split_abelian_factor(L);
  CHECK(s.abelian_dim == 2);
  CHECK(s.complement.dim() == 3);
  CHECK(nilpotency_class(s.complement) == 2);
  // complement has Z(M) inside [M,M]
  CHECK(derived(s.complement).contains(center(s.complement)));

  // an already-saturated algebra splits off nothing
  SplitResult s2 = split_abelian_factor(heisenberg(3));
  CHECK(s2.abelian_dim == 0);
  CHECK(s2.complement.dim() == 3);
}

TEST_CASE("is_derivation accepts ad and flags non-derivations") {
  LieAlgebra f5 = standard_filiform(5);
  for (size_t i = 0; i < 5; ++i) CHECK(is_derivation(f5, f5.ad_basis(i)));
  QMat d = QMat::identity(5);
  // identity is a derivation only for abelian algebras
  CHECK_FALSE(is_derivation(f5, d));
  CHECK(is_derivation(LieAlgebra(4), QMat::identity(4)));
}

TEST_CASE("semidirect_decompose splits the filiform algebra over x1") {
  LieAlgebra f5 = standard_filiform(5);
  SemidirectData sd = semidirect_decompose(f5, {1, 2, 3, 4});
  CHECK(sd.inner.dim() == 4);
  CHECK(sd.outer.dim() == 1);
  REQUIRE(sd.action.mats.size() == 1);
  // the action of x1 shifts x2 -> x3 -> x4 -> x5 (0-based inner coords)
  QMat d = sd.action.mats[0];
  CHECK(d.at(1, 0) == 1);
  CHECK(d.at(2, 1) == 1);
  CHECK(d.at(3, 2) == 1);

  // non-ideal inner choice
  CHECK_THROWS_WITH_AS(semidirect_decompose(f5, {0, 1}), doctest::Contains("NotAnIdeal"), Error);
}

TEST_CASE("extend_by_derivation embeds an algebra with injective central action") {
  LieAlgebra h = heisenberg(3);
  QMat d(3, 3);
  d.at(0, 0) = 1;
  d.at(1, 1) = 1;
  d.at(2, 2) = 2; // scales the center, injectively
  REQUIRE(is_derivation(h, d));
  Representation rho = extend_by_derivation(h, d);
  CHECK(rho.degree() == 4);
  VerifyResult v = verify_representation(h, rho);
  CHECK(v.is_module);
  CHECK(v.faithful);
}

TEST_CASE("affine_embed represents derivations over an abelian algebra") {
  DerivationSet ds;
  ds.algebra = LieAlgebra(2);
  QMat n(2, 2);
  n.at(0, 1) = 1;
  ds.mats = {n};
  validate_derivation_set(ds);
  AffineEmbedResult r = affine_embed(ds);
  CHECK(r.algebra.dim() == 3);
  CHECK(r.rep.degree() == 3);
  VerifyResult v = verify_representation(r.algebra, r.rep);
  CHECK(v.is_module);
  CHECK(v.faithful);
}

TEST_CASE("change_basis preserves the isomorphism class observables") {
  std::mt19937_64 rng(7321);
  LieAlgebra f6 = standard_filiform(6);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int trial = 0; trial < 10; ++trial) {
    QMat p = QMat::identity(6);
    // random unitriangular change of basis stays invertible
    for (size_t i = 0; i < 6; ++i)
      for (size_t j = i + 1; j < 6; ++j) p.at(i, j) = d(rng);
    LieAlgebra m = change_basis(f6, p);
    CHECK_NOTHROW(validate(m));
    CHECK(nilpotency_class(m) == 5);
    CHECK(center(m).dim() == 1);
    CHECK(derived(m).dim() == 4);
    CHECK(is_filiform(m));
  }
}

}
