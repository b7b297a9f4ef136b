#include "nilrep/bounds.hpp"
#include "nilrep/builder.hpp"
#include "nilrep/errors.hpp"
#include "nilrep/filiform10.hpp"
#include "nilrep/reducer.hpp"

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

builder::BuildOutcome build_whole_inner(const LieAlgebra& L) {
  builder::BuildRequest req;
  req.L = L;
  for (size_t i = 0; i < L.dim(); ++i) req.inner.push_back(i);
  return builder::build_from_algebra(req);
}

Representation adjoint_rep(const LieAlgebra& L) {
  Representation rep;
  rep.algebra = L;
  for (size_t i = 0; i < L.dim(); ++i) rep.mats.push_back(L.ad_basis(i));
  return rep;
}

filiform10::Params params_from(const std::array<int, 13>& a) {
  filiform10::Params p;
  for (size_t i = 0; i < 13; ++i) p.alpha[i] = Rat(a[i]);
  return p;
}

filiform10::Params generic_params() {
  filiform10::Params p = params_from({1, 1, 0, -1, 2, 0, 2, 1, 3, 1, 3, -1, 0});
  p.alpha[2] = Rat(1, 2);
  return p;
}

} // namespace

TEST_SUITE("reducer") {

TEST_CASE("invariant space is the joint kernel") {
  LieAlgebra h = heisenberg(3);
  Representation ad = adjoint_rep(h);
  Subspace inv = reducer::invariant_space(ad);
  CHECK(inv.dim() == 1);
  CHECK(inv.contains(unit_vec(3, 2)));

  // the dim-4 quotient module: only the ideal directions are invariant
  builder::BuildOutcome out = build_whole_inner(h);
  Subspace minv = reducer::invariant_space(out.rep);
  CHECK(minv.dim() == 2);
  CHECK(minv.contains(unit_vec(4, 2))); // X2
  CHECK(minv.contains(unit_vec(4, 3))); // X3
}

TEST_CASE("nilpotency of the action is checked") {
  Representation bad;
  bad.algebra = LieAlgebra(1);
  QMat m(2, 2);
  m.at(0, 0) = 1;
  bad.mats = {m};
  CHECK(verify_representation(bad.algebra, bad).is_module);
  CHECK_FALSE(reducer::is_nilpotent_rep(bad));
  CHECK_THROWS_WITH_AS(reducer::invariant_space(bad), doctest::Contains("NotNilpotentModule"),
                       Error);
  CHECK_THROWS_WITH_AS(reducer::minimal_final_dim_exhaustive(bad),
                       doctest::Contains("NotNilpotentModule"), Error);

  Representation big;
  big.algebra = LieAlgebra(1);
  big.mats = {QMat(13, 13)};
  CHECK_THROWS_WITH_AS(reducer::minimal_final_dim_exhaustive(big),
                       doctest::Contains("BadArguments"), Error);
}

TEST_CASE("minimal and reducible heisenberg modules") {
  // {1, X2, X3} is already minimal: removing X3 would kill the center
  builder::BuildRequest req;
  req.L = heisenberg(3);
  req.inner = {1, 2};
  builder::BuildOutcome minimal = builder::build_from_algebra(req);
  REQUIRE(minimal.qm.dim() == 3);
  CHECK_THROWS_WITH_AS(reducer::reduce_once(minimal.rep),
                       doctest::Contains("NoAdmissibleComplement"), Error);
  reducer::ReductionChain stall = reducer::reduce_fully(minimal.rep);
  CHECK(stall.steps.empty());
  CHECK(stall.final_rep.degree() == 3);

  // {1, X1, X2, X3} has one spare invariant direction
  builder::BuildOutcome out = build_whole_inner(heisenberg(3));
  REQUIRE(out.qm.dim() == 4);
  reducer::ReductionChain chain = reducer::reduce_fully(out.rep);
  REQUIRE(chain.steps.size() == 1);
  CHECK(chain.steps[0].invariant_dim == 2);
  CHECK(chain.steps[0].complement_dim == 1);
  CHECK(chain.final_rep.degree() == 3);
  CHECK(verify_representation(out.rep.algebra, chain.final_rep).faithful);
  CHECK(reducer::minimal_final_dim_exhaustive(out.rep) == 3);

  // the adjoint module is not faithful: the reducer refuses to move
  CHECK_THROWS_WITH_AS(reducer::reduce_once(adjoint_rep(heisenberg(3))),
                       doctest::Contains("NoAdmissibleComplement"), Error);
}

TEST_CASE("dim-4 filiform: the 6-dim quotient reduces to 4") {
  builder::BuildOutcome out = build_whole_inner(standard_filiform(4));
  REQUIRE(out.qm.dim() == 6);
  reducer::ReductionChain chain = reducer::reduce_fully(out.rep);
  REQUIRE(chain.steps.size() == 1);
  CHECK(chain.initial_dim == 6);
  CHECK(chain.steps[0].invariant_dim == 3);
  CHECK(chain.steps[0].complement_dim == 2);
  CHECK(chain.final_rep.degree() == 4);

  VerifyResult v = verify_representation(chain.final_rep.algebra, chain.final_rep);
  CHECK(v.is_module);
  CHECK(v.faithful);

  // 4 = mu for this algebra, so the greedy result is optimal here
  CHECK(reducer::minimal_final_dim_exhaustive(out.rep) == 4);
  CHECK(Int(4) == bounds::mu_lower(standard_filiform(4)).value);
}

TEST_CASE("reduction is deterministic") {
  builder::BuildOutcome out = build_whole_inner(standard_filiform(5));
  reducer::ReductionChain a = reducer::reduce_fully(out.rep);
  reducer::ReductionChain b = reducer::reduce_fully(out.rep);
  REQUIRE(a.steps.size() == b.steps.size());
  for (size_t i = 0; i < a.steps.size(); ++i) {
    CHECK(a.steps[i].invariant_dim == b.steps[i].invariant_dim);
    CHECK(a.steps[i].complement_dim == b.steps[i].complement_dim);
  }
  CHECK(a.final_rep.mats == b.final_rep.mats);
}

TEST_CASE("chains shrink, stay faithful, and respect the lower bounds") {
  std::mt19937_64 rng(77001);
  std::vector<LieAlgebra> algs = {heisenberg(3), heisenberg(5), standard_filiform(4),
                                  standard_filiform(5), standard_filiform(6)};
  for (const LieAlgebra& L : algs) {
    builder::BuildOutcome out = build_whole_inner(L);
    reducer::ReductionChain chain = reducer::reduce_fully(out.rep);
    size_t prev = chain.initial_dim;
    for (const reducer::ChainStep& st : chain.steps) {
      CHECK(st.rep.degree() == prev);
      CHECK(st.complement_dim >= 1);
      CHECK(st.invariant_dim >= st.complement_dim);
      prev -= st.complement_dim;
    }
    CHECK(chain.final_rep.degree() == prev);
    VerifyResult v = verify_representation(L, chain.final_rep);
    CHECK(v.is_module);
    CHECK(v.faithful);
    CHECK(Int(prev) >= bounds::mu_lower(L).value);

    if (chain.initial_dim <= 12)
      CHECK(reducer::minimal_final_dim_exhaustive(out.rep) <= prev);
  }
}

TEST_CASE("the 58-dim family module reduces along the published chain") {
  filiform10::Params p = generic_params();
  LieAlgebra L = filiform10::make_f10(p);
  builder::QuotientModule v58 = filiform10::build_V58(p);
  REQUIRE(v58.dim() == 58);

  Representation rep;
  rep.algebra = L;
  rep.mats = v58.mats;
  REQUIRE(verify_representation(L, rep).faithful);

  reducer::ReductionChain chain = reducer::reduce_fully(rep);
  REQUIRE(chain.steps.size() >= 3);
  CHECK(chain.initial_dim == 58);

  CHECK(chain.steps[0].invariant_dim == 16);
  CHECK(chain.steps[0].rep.degree() == 58);
  CHECK(chain.steps[1].invariant_dim == 12);
  CHECK(chain.steps[1].rep.degree() == 43);
  CHECK(chain.steps[2].invariant_dim == 10);
  CHECK(chain.steps[2].rep.degree() == 32);
  CHECK(chain.steps[3].rep.degree() == 23);

  CHECK(chain.final_rep.degree() == 15);
  VerifyResult v = verify_representation(L, chain.final_rep);
  CHECK(v.is_module);
  CHECK(v.faithful);
}

}
