#include "nilrep/bounds.hpp"
#include "nilrep/builder.hpp"
#include "nilrep/errors.hpp"

#include <doctest.h>

#include <random>

using namespace nilrep;

namespace {

LieAlgebra standard_filiform(size_t n) {
  LieAlgebra L(n);
  for (size_t i = 1; i + 1 < n; ++i) {
    QVec v = zero_vec(n);
    v[i + 1] = 1;
    L.set_bracket(0, i, v);
  }
  return L;
}

LieAlgebra heisenberg(size_t dim) {
  LieAlgebra L(dim);
  for (size_t i = 0; i + 1 < dim; i += 2) {
    QVec v = zero_vec(dim);
    v[dim - 1] = 1;
    L.set_bracket(i, i + 1, v);
  }
  return L;
}

LieAlgebra ell54() {
  // [x1,x2] = x3, [x1,x3] = x4, [x2,x3] = x5
  LieAlgebra L(5);
  QVec a = zero_vec(5), b = zero_vec(5), c = zero_vec(5);
  a[2] = 1;
  b[3] = 1;
  c[4] = 1;
  L.set_bracket(0, 1, a);
  L.set_bracket(0, 2, b);
  L.set_bracket(1, 2, c);
  return L;
}

LieAlgebra free_two_step3() {
  // [x1,x2] = x4, [x1,x3] = x5, [x2,x3] = x6
  LieAlgebra L(6);
  QVec a = zero_vec(6), b = zero_vec(6), c = zero_vec(6);
  a[3] = 1;
  b[4] = 1;
  c[5] = 1;
  L.set_bracket(0, 1, a);
  L.set_bracket(0, 2, b);
  L.set_bracket(1, 2, c);
  return L;
}

/// Direct sum with pads listed first so the series terms stay suffixes.
LieAlgebra pad_then(const LieAlgebra& L, size_t pads) {
  LieAlgebra out(L.dim() + pads);
  for (const auto& [pair, v] : L.table()) {
    QVec w = zero_vec(out.dim());
    for (size_t k = 0; k < L.dim(); ++k) w[pads + k] = v[k];
    out.set_bracket(pads + pair.first, pads + pair.second, w);
  }
  return out;
}

/// Unit upper-triangular with rescaled diagonal: suffix spans (and so the
/// lower central series alignment) survive this change of basis.
LieAlgebra scramble(const LieAlgebra& L, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-2, 2);
  std::uniform_int_distribution<int> nz(1, 3);
  QMat p(L.dim(), L.dim());
  for (size_t i = 0; i < L.dim(); ++i) {
    p.at(i, i) = nz(rng);
    for (size_t j = i + 1; j < L.dim(); ++j) p.at(i, j) = d(rng);
  }
  return change_basis(L, p);
}

std::vector<LieAlgebra> nilpotent_families() {
  std::vector<LieAlgebra> fams;
  for (size_t d = 1; d <= 4; ++d) fams.push_back(LieAlgebra(d));
  fams.push_back(heisenberg(3));
  fams.push_back(heisenberg(5));
  fams.push_back(standard_filiform(4));
  fams.push_back(standard_filiform(5));
  fams.push_back(standard_filiform(6));
  fams.push_back(ell54());
  fams.push_back(free_two_step3());
  fams.push_back(pad_then(heisenberg(3), 1));
  fams.push_back(pad_then(standard_filiform(4), 2));
  return fams;
}

builder::BuildOutcome build_whole_inner(const LieAlgebra& L) {
  builder::BuildRequest req;
  req.L = L;
  for (size_t i = 0; i < L.dim(); ++i) req.inner.push_back(i);
  return builder::build_from_algebra(req);
}

std::vector<Subspace> lcs_filtration(const LieAlgebra& L) {
  std::vector<Subspace> terms = {Subspace::full(L.dim())};
  auto series = lower_central_series(L);
  for (size_t i = 1; i < series.size(); ++i) terms.push_back(series[i]);
  return terms;
}

std::vector<builder::Generator> whole_inner_gens(const pbw::PBWContext& ctx) {
  std::vector<builder::Generator> gens;
  for (size_t k = 0; k < ctx.n(); ++k) {
    builder::Generator g;
    g.deriv_pos = QMat(ctx.n(), ctx.n());
    g.inner_pos = zero_vec(ctx.n());
    g.inner_pos[ctx.pos_of[k]] = 1;
    gens.push_back(g);
  }
  return gens;
}

/// Quotient by a central subspace of the derived algebra.
LieAlgebra central_quotient(const LieAlgebra& L, const Subspace& U) {
  Subspace comp = complement_avoiding(Subspace::full(L.dim()), U);
  std::vector<QVec> rows;
  for (size_t i = 0; i < comp.dim(); ++i) rows.push_back(comp.basis_row(i));
  for (size_t i = 0; i < U.dim(); ++i) rows.push_back(U.basis_row(i));
  LieAlgebra big = change_basis(L, QMat::from_rows(rows, L.dim()));
  size_t q = comp.dim();
  LieAlgebra out(q);
  for (size_t i = 0; i < q; ++i) {
    for (size_t j = i + 1; j < q; ++j) {
      QVec v = big.bracket_basis(i, j);
      QVec w(v.begin(), v.begin() + q);
      if (!is_zero(w)) out.set_bracket(i, j, w);
    }
  }
  return out;
}

} // namespace

TEST_SUITE("builder") {

TEST_CASE("dim-4 worked example: inner {1,3,4}, J = <x3,x4>") {
  builder::BuildRequest req;
  req.L = standard_filiform(4);
  req.inner = {0, 2, 3};
  req.ideal_m = 2;
  builder::BuildOutcome out = builder::build_from_algebra(req);
  REQUIRE(out.qm.dim() == 5);
  CHECK(out.qm.basis_names ==
        std::vector<std::string>{"1", "X1", "X3", "X1^2", "X4"});
  CHECK(out.verify.is_module);
  CHECK(out.verify.faithful);
  CHECK(out.beta == 2);
  CHECK_FALSE(out.f_expected.has_value()); // not the standard decomposition

  // x2 sends the class of X1^2 to the class of X4
  size_t col = 3, x4row = 4;
  const QMat& x2 = out.rep.mats[1];
  for (size_t r = 0; r < 5; ++r) {
    CHECK(x2.at(r, col) == (r == x4row ? Rat(1) : Rat(0)));
  }
}

TEST_CASE("dim-4 worked example: inner {2,3,4}, J = the whole nilradical") {
  builder::BuildRequest req;
  req.L = standard_filiform(4);
  req.inner = {1, 2, 3};
  req.ideal_m = 1;
  builder::BuildOutcome out = builder::build_from_algebra(req);
  REQUIRE(out.qm.dim() == 4);
  CHECK(out.qm.basis_names == std::vector<std::string>{"1", "X2", "X3", "X4"});
  CHECK(out.verify.faithful);
  CHECK(out.beta == 3);
  REQUIRE(out.f_expected.has_value());
  CHECK(*out.f_expected == 4);
}

TEST_CASE("heisenberg: the two maximal ideals give the same module") {
  LieAlgebra h = heisenberg(3);
  builder::BuildOutcome auto_out = build_whole_inner(h);
  CHECK(auto_out.qm.dim() == 4);
  CHECK(auto_out.qm.basis_names == std::vector<std::string>{"1", "X1", "X2", "X3"});
  CHECK(auto_out.verify.faithful);
  CHECK(auto_out.beta == 2); // auto picks <x2,x3> over the center

  builder::BuildRequest req;
  req.L = h;
  for (size_t i = 0; i < 3; ++i) req.inner.push_back(i);
  req.ideal_m = 2; // J = Z = <x3>
  builder::BuildOutcome z_out = builder::build_from_algebra(req);
  CHECK(z_out.qm.dim() == 4);
  CHECK(z_out.qm.basis_names == auto_out.qm.basis_names);
  CHECK(z_out.rep.mats == auto_out.rep.mats);
}

TEST_CASE("heisenberg split over the outer generator gives a dim-3 module") {
  builder::BuildRequest req;
  req.L = heisenberg(3);
  req.inner = {1, 2};
  builder::BuildOutcome out = builder::build_from_algebra(req);
  CHECK(out.qm.dim() == 3);
  CHECK(out.qm.basis_names == std::vector<std::string>{"1", "X2", "X3"});
  CHECK(out.verify.faithful);
}

TEST_CASE("monomial filter agrees with the subspace oracle") {
  struct Probe {
    LieAlgebra L;
    std::optional<size_t> ideal_m;
  };
  std::vector<Probe> probes = {
      {standard_filiform(4), 2},
      {standard_filiform(4), 1},
      {standard_filiform(5), 3},
      {heisenberg(3), 2},
      {heisenberg(3), std::nullopt},
      {ell54(), std::nullopt},
      {pad_then(heisenberg(3), 1), std::nullopt},
  };
  for (const auto& probe : probes) {
    builder::BuildRequest req;
    req.L = probe.L;
    for (size_t i = 0; i < probe.L.dim(); ++i) req.inner.push_back(i);
    req.ideal_m = probe.ideal_m;
    builder::BuildOutcome out = builder::build_from_algebra(req);

    auto gens = whole_inner_gens(out.qm.ctx);
    builder::QuotientModule oracle =
        builder::build_quotient_subspace_oracle(out.qm.ctx, out.qm.ideal, gens);
    CHECK(oracle.dim() == out.qm.dim());
    CHECK(oracle.basis_names == out.qm.basis_names);
    CHECK(oracle.mats == out.qm.mats);
  }
}

TEST_CASE("order truncation dominates the ideal quotient") {
  for (const LieAlgebra& L :
       {standard_filiform(4), standard_filiform(5), heisenberg(3), ell54()}) {
    builder::BuildOutcome out = build_whole_inner(L);
    auto gens = whole_inner_gens(out.qm.ctx);
    builder::QuotientModule trunc = builder::build_order_truncation(out.qm.ctx, gens);
    CHECK(trunc.dim() >= out.qm.dim());
    CHECK(trunc.provenance == "order-truncation");

    Representation rho;
    rho.algebra = L;
    rho.mats = trunc.mats;
    VerifyResult v = verify_representation(L, rho);
    CHECK(v.is_module);
    CHECK(v.faithful);
  }
}

TEST_CASE("filiform modules hit f(n, beta) for every admissible start") {
  for (size_t n = 3; n <= 9; ++n) {
    LieAlgebra f = standard_filiform(n);
    for (size_t m = 1; m <= n - 1; ++m) {
      builder::FiliformResult r = builder::filiform_module(f, m);
      CHECK(r.n == n);
      CHECK(r.beta == n - m);
      CHECK(r.outcome.verify.faithful);
      REQUIRE(r.outcome.f_expected.has_value());
      CHECK(*r.outcome.f_expected == bounds::f(n, n - m));
      CHECK(Int(r.outcome.qm.dim()) == *r.outcome.f_expected);
    }
  }
}

TEST_CASE("random nilpotent algebras build faithful modules") {
  std::mt19937_64 rng(90001);
  size_t built = 0;
  for (const LieAlgebra& fam : nilpotent_families()) {
    for (int variant = 0; variant < 3; ++variant) {
      LieAlgebra L = (variant == 0) ? fam : scramble(fam, rng);
      CHECK_NOTHROW(validate(L));
      builder::BuildOutcome out = build_whole_inner(L);
      CHECK(out.verify.is_module);
      CHECK(out.verify.faithful);
      CHECK(Int(out.qm.dim()) >= bounds::mu_lower(L).value);
      ++built;
    }
  }
  CHECK(built >= 39);
}

TEST_CASE("two-step construction achieves dim L exactly") {
  for (size_t d : {3, 5, 7}) {
    builder::TwoStepResult r = builder::two_step_module(heisenberg(d));
    CHECK(r.rep.degree() == d);
    VerifyResult v = verify_representation(r.rep.algebra, r.rep);
    CHECK(v.is_module);
    CHECK(v.faithful);
    CHECK(r.abelian_dim == 0);
  }

  // abelian input: everything splits off
  builder::TwoStepResult ab = builder::two_step_module(LieAlgebra(4));
  CHECK(ab.rep.degree() == 4);
  CHECK(verify_representation(ab.rep.algebra, ab.rep).faithful);

  // random central quotients of the free two-step algebra
  std::mt19937_64 rng(90002);
  std::uniform_int_distribution<int> d(-2, 2);
  for (int trial = 0; trial < 10; ++trial) {
    LieAlgebra F = free_two_step3();
    QVec u = zero_vec(6);
    for (size_t k = 3; k < 6; ++k) u[k] = d(rng);
    LieAlgebra M = is_zero(u) ? F : central_quotient(F, Subspace::span({u}, 6));
    CHECK_NOTHROW(validate(M));
    if (nilpotency_class(M) > 2) continue;
    builder::TwoStepResult r = builder::two_step_module(M);
    CHECK(r.rep.degree() == M.dim());
    VerifyResult v = verify_representation(r.rep.algebra, r.rep);
    CHECK(v.is_module);
    CHECK(v.faithful);
  }

  CHECK_THROWS_WITH_AS(builder::two_step_module(standard_filiform(4)),
                       doctest::Contains("NotTwoStep"), Error);
}

TEST_CASE("auto ideal selection maximizes the ideal dimension") {
  // standard filiform: the whole abelian part <x2..xn> wins
  for (size_t n : {4, 5, 6}) {
    builder::BuildOutcome out = build_whole_inner(standard_filiform(n));
    CHECK(out.beta == n - 1);
  }
  // free two-step: greedy enlargement beats the derived algebra, since
  // x3 commutes with the whole center
  builder::BuildOutcome f2 = build_whole_inner(free_two_step3());
  CHECK(f2.beta == 4);
  CHECK(f2.verify.faithful);
}

TEST_CASE("compatibility violations are reported by class") {
  // J containing x1 is not abelian in the filiform algebra
  builder::BuildRequest bad;
  bad.L = standard_filiform(5);
  for (size_t i = 0; i < 5; ++i) bad.inner.push_back(i);
  bad.ideal_m = 0;
  CHECK_THROWS_WITH_AS(builder::build_from_algebra(bad), doctest::Contains("NotAbelian"), Error);

  // h3 with a trailing pad: J = <pad> misses the deeper center
  LieAlgebra hp(4);
  {
    QVec v = zero_vec(4);
    v[2] = 1;
    hp.set_bracket(0, 1, v); // [x1,x2] = x3, x4 is the pad
  }
  builder::BuildRequest sq;
  sq.L = hp;
  for (size_t i = 0; i < 4; ++i) sq.inner.push_back(i);
  sq.ideal_m = 3;
  CHECK_THROWS_WITH_AS(builder::build_from_algebra(sq), doctest::Contains("NotSqueezed"), Error);

  // ideal start outside the inner part
  builder::BuildRequest bi;
  bi.L = standard_filiform(4);
  bi.inner = {1, 2, 3};
  bi.ideal_m = 0;
  CHECK_THROWS_WITH_AS(builder::build_from_algebra(bi), doctest::Contains("BadIndex"), Error);
}

TEST_CASE("derivation order conditions gate the two constructions") {
  // h3 as an abelian pair with a flat custom filtration: ad(x1) preserves
  // order but does not raise it
  LieAlgebra h = heisenberg(3);
  SemidirectData sd = semidirect_decompose(h, {1, 2});
  std::vector<Subspace> flat = {Subspace::full(2)};
  pbw::PBWContext ctx = pbw::make_context(sd.inner, flat, sd.action.mats, 1, {0});
  CHECK(ctx.order_preserving);
  CHECK_FALSE(ctx.order_raising);

  CHECK_THROWS_WITH_AS(builder::check_compatible(ctx, 1), doctest::Contains("NotDInvariant"),
                       Error);

  builder::CompatibleIdeal whole = builder::check_compatible(ctx, 0);
  std::vector<builder::Generator> gens;
  {
    builder::Generator g0;
    g0.deriv_pos = ctx.derivs[0];
    g0.inner_pos = zero_vec(2);
    gens.push_back(g0);
  }
  CHECK_THROWS_WITH_AS(builder::build_quotient(ctx, whole, gens),
                       doctest::Contains("DerivationsNotOrderRaising"), Error);

  // an order-lowering derivation blocks the truncation module
  LieAlgebra low(3);
  {
    QVec v = zero_vec(3);
    v[1] = 1;
    low.set_bracket(0, 2, v); // [x1,x3] = x2
  }
  SemidirectData sd2 = semidirect_decompose(low, {1, 2});
  std::vector<Subspace> terms2 = {Subspace::full(2),
                                  Subspace::span({QVec{Rat(0), Rat(1)}}, 2)};
  pbw::PBWContext ctx2 = pbw::make_context(sd2.inner, terms2, sd2.action.mats, 2);
  CHECK_FALSE(ctx2.order_preserving);
  std::vector<builder::Generator> gens2;
  {
    builder::Generator g;
    g.deriv_pos = ctx2.derivs[0];
    g.inner_pos = zero_vec(2);
    gens2.push_back(g);
  }
  CHECK_THROWS_WITH_AS(builder::build_order_truncation(ctx2, gens2),
                       doctest::Contains("DerivationsNotOrderPreserving"), Error);
}

TEST_CASE("dimension caps trip the overflow guard") {
  LieAlgebra f6 = standard_filiform(6);
  pbw::PBWContext ctx = pbw::make_context(f6, lcs_filtration(f6), {}, 5);
  builder::CompatibleIdeal ideal = builder::auto_select_ideal(ctx);
  auto gens = whole_inner_gens(ctx);
  CHECK_THROWS_WITH_AS(builder::build_quotient(ctx, ideal, gens, 3),
                       doctest::Contains("DimensionOverflow"), Error);
  CHECK_THROWS_WITH_AS(builder::build_order_truncation(ctx, gens, 3),
                       doctest::Contains("DimensionOverflow"), Error);
}

TEST_CASE("filiform entry points reject bad inputs") {
  CHECK_THROWS_WITH_AS(builder::filiform_module(heisenberg(5), 1),
                       doctest::Contains("NotFiliform"), Error);

  // filiform with a non-abelian tail: [x2,x3] = x5 added to the dim-5 chain
  LieAlgebra tw = standard_filiform(5);
  {
    QVec v = zero_vec(5);
    v[4] = 1;
    tw.set_bracket(1, 2, v);
  }
  CHECK_NOTHROW(validate(tw));
  REQUIRE(is_filiform(tw));
  CHECK_THROWS_WITH_AS(builder::filiform_module(tw, 1), doctest::Contains("JNotAbelian"), Error);

  CHECK_THROWS_WITH_AS(builder::filiform_module(standard_filiform(5), 0),
                       doctest::Contains("BadIndex"), Error);
  CHECK_THROWS_WITH_AS(builder::filiform_module(standard_filiform(5), 5),
                       doctest::Contains("BadIndex"), Error);
}

}
