#include "nilrep/builder.hpp"
#include "nilrep/errors.hpp"
#include "nilrep/rep_analysis.hpp"

#include <doctest.h>

#include <algorithm>
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

LieAlgebra heisenberg3() {
  LieAlgebra L(3);
  QVec v = zero_vec(3);
  v[2] = 1;
  L.set_bracket(0, 1, v);
  return L;
}

Representation h3_module() {
  builder::BuildRequest req;
  req.L = heisenberg3();
  req.inner = {1, 2};
  return builder::build_from_algebra(req).rep;
}

QMat diag(const std::vector<int>& entries) {
  QMat m(entries.size(), entries.size());
  for (size_t i = 0; i < entries.size(); ++i) m.at(i, i) = entries[i];
  return m;
}

/// Same matrices rewritten in the basis given by the rows of p.
Representation conjugate(const Representation& rep, const QMat& p) {
  const size_t d = rep.degree();
  Representation out;
  out.algebra = rep.algebra;
  for (const QMat& mat : rep.mats) {
    QMat m(d, d);
    for (size_t c = 0; c < d; ++c) {
      QVec img = mat.apply(p.row(c));
      auto coords = solve_combination(p, img);
      REQUIRE(coords.has_value());
      for (size_t r = 0; r < d; ++r) m.at(r, c) = (*coords)[r];
    }
    out.mats.push_back(std::move(m));
  }
  return out;
}

QMat random_invertible(size_t d, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> e(-2, 2);
  QMat lo = QMat::identity(d), up = QMat::identity(d);
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < i; ++j) lo.at(i, j) = e(rng);
  for (size_t i = 0; i < d; ++i)
    for (size_t j = i + 1; j < d; ++j) up.at(i, j) = e(rng);
  return lo * up;
}

/// Two copies of base with scalar weight shifts lambda1, lambda2 (each
/// vanishing on the derived algebra, so the result is still a module).
Representation shifted_sum(const Representation& base, const QVec& l1, const QVec& l2) {
  const size_t d = base.degree();
  Representation out;
  out.algebra = base.algebra;
  for (size_t i = 0; i < base.mats.size(); ++i) {
    QMat m(2 * d, 2 * d);
    for (size_t r = 0; r < d; ++r)
      for (size_t c = 0; c < d; ++c) {
        m.at(r, c) = base.mats[i].at(r, c);
        m.at(d + r, d + c) = base.mats[i].at(r, c);
      }
    for (size_t r = 0; r < d; ++r) {
      m.at(r, r) += l1[i];
      m.at(d + r, d + r) += l2[i];
    }
    out.mats.push_back(std::move(m));
  }
  return out;
}

void check_split_properties(const Representation& rep, const rep_analysis::WeightSplit& s) {
  const size_t d = rep.degree();
  const size_t n = rep.algebra.dim();
  const QMat& p = s.change_of_basis;

  size_t total = 0;
  for (size_t k : s.block_dims) total += k;
  CHECK(total == d);
  CHECK(s.weights.size() == s.block_dims.size());

  // delta + nu is the action rewritten in the rows of p
  for (size_t i = 0; i < n; ++i) {
    QMat m = s.delta[i] + s.nu[i];
    for (size_t c = 0; c < d; ++c) {
      QVec img = rep.mats[i].apply(p.row(c));
      QVec rec = zero_vec(d);
      for (size_t r = 0; r < d; ++r)
        if (m.at(r, c) != 0) axpy(rec, m.at(r, c), p.row(r));
      CHECK(img == rec);
    }
  }

  // nu strictly upper; delta diagonal matching the block weights
  for (size_t i = 0; i < n; ++i) {
    for (size_t r = 0; r < d; ++r)
      for (size_t c = 0; c <= r; ++c) CHECK(s.nu[i].at(r, c) == 0);
    size_t off = 0;
    for (size_t b = 0; b < s.block_dims.size(); ++b) {
      for (size_t t = 0; t < s.block_dims[b]; ++t)
        CHECK(s.delta[i].at(off + t, off + t) == s.weights[b][i]);
      off += s.block_dims[b];
    }
  }

  // weights vanish on brackets
  for (const auto& [pair, v] : rep.algebra.table()) {
    (void)pair;
    for (const QVec& w : s.weights) {
      Rat acc(0);
      for (size_t k = 0; k < n; ++k) acc += v[k] * w[k];
      CHECK(acc == 0);
    }
  }

  // delta commutes with nu; commutators see only the nu parts
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      CHECK(s.delta[i] * s.nu[j] == s.nu[j] * s.delta[i]);
      QMat lhs = commutator(s.delta[i] + s.nu[i], s.delta[j] + s.nu[j]);
      CHECK(lhs == commutator(s.nu[i], s.nu[j]));
    }

  // the nu parts form a module of the same algebra
  Representation nurep{rep.algebra, s.nu};
  CHECK(verify_representation(rep.algebra, nurep).is_module);
}

} // namespace

TEST_SUITE("rep_analysis") {

TEST_CASE("characteristic polynomial oracles") {
  QMat a(2, 2);
  a.at(0, 0) = 3;
  a.at(0, 1) = 1;
  a.at(1, 0) = 2;
  a.at(1, 1) = -1;
  // x^2 - 2x - 5
  CHECK(rep_analysis::char_poly(a) == std::vector<Rat>{Rat(-5), Rat(-2), Rat(1)});

  CHECK(rep_analysis::char_poly(QMat::identity(2)) ==
        std::vector<Rat>{Rat(1), Rat(-2), Rat(1)});

  QMat nil(3, 3);
  nil.at(0, 1) = 5;
  nil.at(1, 2) = -7;
  CHECK(rep_analysis::char_poly(nil) == std::vector<Rat>{Rat(0), Rat(0), Rat(0), Rat(1)});

  CHECK_THROWS_WITH_AS(rep_analysis::char_poly(QMat(2, 3)), doctest::Contains("BadShape"), Error);
}

TEST_CASE("rational root extraction") {
  // (x-1)(x-2)^2
  auto [r1, t1] = rep_analysis::rational_roots({Rat(-4), Rat(8), Rat(-5), Rat(1)});
  REQUIRE(t1 == 3);
  REQUIRE(r1.size() == 2);
  CHECK(r1[0] == std::make_pair(Rat(1), size_t(1)));
  CHECK(r1[1] == std::make_pair(Rat(2), size_t(2)));

  // x^2 + 1 has no rational roots
  auto [r2, t2] = rep_analysis::rational_roots({Rat(1), Rat(0), Rat(1)});
  CHECK(t2 == 0);
  CHECK(r2.empty());

  // x^2 - 2: irrational spectrum
  auto [r3, t3] = rep_analysis::rational_roots({Rat(-2), Rat(0), Rat(1)});
  CHECK(t3 == 0);
  CHECK(r3.empty());

  // x(x + 1/2)
  auto [r4, t4] = rep_analysis::rational_roots({Rat(0), Rat(1, 2), Rat(1)});
  REQUIRE(t4 == 2);
  CHECK(r4[0] == std::make_pair(Rat(-1, 2), size_t(1)));
  CHECK(r4[1] == std::make_pair(Rat(0), size_t(1)));

  CHECK_THROWS_WITH_AS(rep_analysis::rational_roots({Rat(0), Rat(0)}),
                       doctest::Contains("BadArguments"), Error);
}

TEST_CASE("jordan block: identity weight plus nilpotent rest") {
  Representation rep;
  rep.algebra = LieAlgebra(1);
  QMat j(2, 2);
  j.at(0, 0) = 1;
  j.at(0, 1) = 1;
  j.at(1, 1) = 1;
  rep.mats = {j};

  rep_analysis::WeightSplit s = rep_analysis::weight_decompose(rep);
  REQUIRE(s.block_dims == std::vector<size_t>{2});
  CHECK(s.weights[0] == QVec{Rat(1)});
  CHECK(s.delta[0] == QMat::identity(2));
  QMat expect_nu(2, 2);
  expect_nu.at(0, 1) = 1;
  CHECK(s.nu[0] == expect_nu);
  check_split_properties(rep, s);
}

TEST_CASE("diagonal module splits into sorted one-dim blocks") {
  Representation rep;
  rep.algebra = LieAlgebra(1);
  rep.mats = {diag({2, 1})};
  rep_analysis::WeightSplit s = rep_analysis::weight_decompose(rep);
  REQUIRE(s.block_dims == std::vector<size_t>{1, 1});
  CHECK(s.weights[0] == QVec{Rat(1)});
  CHECK(s.weights[1] == QVec{Rat(2)});
  check_split_properties(rep, s);

  // joint refinement across two commuting generators
  Representation two;
  two.algebra = LieAlgebra(2);
  two.mats = {diag({1, 1, 2}), diag({3, 4, 5})};
  rep_analysis::WeightSplit s2 = rep_analysis::weight_decompose(two);
  REQUIRE(s2.block_dims == std::vector<size_t>{1, 1, 1});
  CHECK(s2.weights[0] == QVec{Rat(1), Rat(3)});
  CHECK(s2.weights[1] == QVec{Rat(1), Rat(4)});
  CHECK(s2.weights[2] == QVec{Rat(2), Rat(5)});
  check_split_properties(two, s2);
}

TEST_CASE("nilpotent modules carry the single weight zero") {
  Representation rep = h3_module();
  rep_analysis::WeightSplit s = rep_analysis::weight_decompose(rep);
  REQUIRE(s.block_dims == std::vector<size_t>{3});
  CHECK(s.weights[0] == zero_vec(3));
  for (const QMat& d : s.delta) CHECK(d.is_zero());
  check_split_properties(rep, s);
}

TEST_CASE("irrational or complex spectra are rejected") {
  Representation rot;
  rot.algebra = LieAlgebra(1);
  QMat r(2, 2);
  r.at(0, 1) = 1;
  r.at(1, 0) = -1;
  rot.mats = {r};
  CHECK_THROWS_WITH_AS(rep_analysis::weight_decompose(rot), doctest::Contains("IrrationalWeights"),
                       Error);

  Representation sq2;
  sq2.algebra = LieAlgebra(1);
  QMat q(2, 2);
  q.at(0, 1) = 2;
  q.at(1, 0) = 1;
  sq2.mats = {q};
  CHECK_THROWS_WITH_AS(rep_analysis::weight_decompose(sq2), doctest::Contains("IrrationalWeights"),
                       Error);
}

TEST_CASE("the algebra must be nilpotent") {
  LieAlgebra ax(2);
  QVec v = zero_vec(2);
  v[1] = 1;
  ax.set_bracket(0, 1, v); // [x1,x2] = x2
  Representation rep;
  rep.algebra = ax;
  rep.mats = {QMat(2, 2), QMat(2, 2)};
  CHECK_THROWS_WITH_AS(rep_analysis::weight_decompose(rep), doctest::Contains("NotNilpotent"),
                       Error);
}

TEST_CASE("random triangularizable modules decompose cleanly") {
  std::mt19937_64 rng(55001);
  std::uniform_int_distribution<int> wdist(-3, 3);

  builder::BuildRequest f4req;
  f4req.L = standard_filiform(4);
  f4req.inner = {1, 2, 3};
  f4req.ideal_m = 1;
  Representation f4mod = builder::build_from_algebra(f4req).rep;

  std::vector<Representation> bases = {h3_module(), f4mod};
  size_t done = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const Representation& base = bases[trial % bases.size()];
    const size_t n = base.algebra.dim();
    QVec l1 = zero_vec(n), l2 = zero_vec(n);
    // weights may only live on the first two coordinates: the derived
    // algebra of both families sits in the later ones
    for (size_t i = 0; i < 2; ++i) {
      l1[i] = wdist(rng);
      l2[i] = wdist(rng);
    }
    l2[0] = l1[0] + 1; // distinct on x1, so the two copies never merge

    Representation sum = shifted_sum(base, l1, l2);
    Representation rep = conjugate(sum, random_invertible(sum.degree(), rng));
    REQUIRE(verify_representation(rep.algebra, rep).is_module);

    rep_analysis::WeightSplit s = rep_analysis::weight_decompose(rep);
    REQUIRE(s.block_dims.size() == 2);
    CHECK(s.block_dims[0] == base.degree());
    CHECK(s.block_dims[1] == base.degree());
    std::vector<QVec> got = s.weights;
    std::vector<QVec> want = {l1, l2};
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    CHECK(got == want);
    check_split_properties(rep, s);
    ++done;
  }
  CHECK(done == 50);
}

TEST_CASE("faithfulness transfers exactly when the center sits in the derived algebra") {
  // heisenberg: hypothesis holds, the faithful module stays faithful in nu
  rep_analysis::TransferResult t1 = rep_analysis::faithful_transfer(h3_module());
  CHECK(t1.hypothesis_ok);
  CHECK(t1.status == "ok");
  CHECK(t1.rho_faithful);
  CHECK(t1.nu_faithful);

  // adjoint of heisenberg: not faithful on either side
  Representation ad;
  ad.algebra = heisenberg3();
  for (size_t i = 0; i < 3; ++i) ad.mats.push_back(ad.algebra.ad_basis(i));
  rep_analysis::TransferResult t2 = rep_analysis::faithful_transfer(ad);
  CHECK(t2.hypothesis_ok);
  CHECK_FALSE(t2.rho_faithful);
  CHECK_FALSE(t2.nu_faithful);

  // abelian algebra: the hypothesis fails and the equivalence breaks
  Representation di;
  di.algebra = LieAlgebra(2);
  di.mats = {diag({1, 1, 2}), diag({3, 4, 5})};
  rep_analysis::TransferResult t3 = rep_analysis::faithful_transfer(di);
  CHECK_FALSE(t3.hypothesis_ok);
  CHECK(t3.status == "HypothesisFails");
  CHECK(t3.rho_faithful);
  CHECK_FALSE(t3.nu_faithful);
}

}
