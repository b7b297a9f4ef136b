#include "nilrep/filiform10.hpp"

#include "nilrep/errors.hpp"

#include <map>

namespace nilrep {
namespace filiform10 {

namespace {

// a(1) .. a(13)
struct P {
  const std::array<Rat, 13>& v;
  const Rat& operator()(size_t i) const { return v[i - 1]; }
};

LieAlgebra raw_f10(const Params& params) {
  P a{params.alpha};
  LieAlgebra L(10);
  auto e = [&](std::initializer_list<std::pair<size_t, Rat>> terms) {
    QVec v = zero_vec(10);
    for (const auto& [idx1, c] : terms) v[idx1 - 1] = c;
    return v;
  };
  for (size_t i = 2; i <= 9; ++i) L.set_bracket(0, i - 1, e({{i + 1, Rat(1)}}));
  L.set_bracket(1, 2, e({{5, a(1)}, {6, a(2)}, {7, a(3)}, {8, a(4)}, {9, a(5)}, {10, a(6)}}));
  L.set_bracket(1, 3, e({{6, a(1)}, {7, a(2)}, {8, a(3)}, {9, a(4)}, {10, a(5)}}));
  L.set_bracket(1, 4,
                e({{7, a(1) - a(7)}, {8, a(2) - a(8)}, {9, a(3) - a(9)}, {10, a(4) - a(10)}}));
  L.set_bracket(1, 5, e({{8, a(1) - 2 * a(7)}, {9, a(2) - 2 * a(8)}, {10, a(3) - 2 * a(9)}}));
  L.set_bracket(1, 6, e({{9, a(1) - 3 * a(7) + a(11)}, {10, a(2) - 3 * a(8) + a(12)}}));
  L.set_bracket(1, 7, e({{10, a(1) - 4 * a(7) + 3 * a(11)}}));
  L.set_bracket(1, 8, e({{10, -a(13)}}));
  L.set_bracket(2, 3, e({{7, a(7)}, {8, a(8)}, {9, a(9)}, {10, a(10)}}));
  L.set_bracket(2, 4, e({{8, a(7)}, {9, a(8)}, {10, a(9)}}));
  L.set_bracket(2, 5, e({{9, a(7) - a(11)}, {10, a(8) - a(12)}}));
  L.set_bracket(2, 6, e({{10, a(7) - 2 * a(11)}}));
  L.set_bracket(2, 7, e({{10, a(13)}}));
  L.set_bracket(3, 4, e({{9, a(11)}, {10, a(12)}}));
  L.set_bracket(3, 5, e({{10, a(11)}}));
  L.set_bracket(3, 6, e({{10, -a(13)}}));
  L.set_bracket(4, 5, e({{10, a(13)}}));
  return L;
}

} // namespace

std::array<Rat, 3> admissibility_residuals(const Params& params) {
  P a{params.alpha};
  Rat r1 = a(11) * (2 * a(1) + a(7)) - 3 * a(7) * a(7);
  Rat r2 = a(13) * (2 * a(1) - a(7) - a(11));
  Rat r3 = a(13) * (2 * a(3) + a(9)) - a(12) * (2 * a(1) + a(7)) -
           (3 * a(11) * (a(2) + a(8)) - 7 * a(7) * a(8));
  return {r1, r2, r3};
}

namespace {

void require_admissible(const Params& p) {
  auto res = admissibility_residuals(p);
  std::string bad;
  for (size_t i = 0; i < 3; ++i) {
    if (res[i] != 0) {
      if (!bad.empty()) bad += ", ";
      bad += "equation " + std::to_string(i + 1) + " (residual " + rat_to_string(res[i]) + ")";
    }
  }
  if (!bad.empty()) throw Error("NotAdmissible", "parameters violate " + bad);
}

} // namespace

LieAlgebra make_f10(const Params& p) {
  require_admissible(p);
  LieAlgebra L = raw_f10(p);
  validate(L); // independent cross-check: admissibility iff Jacobi
  return L;
}

std::optional<Params> extract_params(const LieAlgebra& L) {
  if (L.dim() != 10) return std::nullopt;
  Params p;
  QVec b23 = L.bracket_basis(1, 2);
  for (size_t k = 0; k < 6; ++k) p.alpha[k] = b23[4 + k];
  QVec b34 = L.bracket_basis(2, 3);
  for (size_t k = 0; k < 4; ++k) p.alpha[6 + k] = b34[6 + k];
  QVec b45 = L.bracket_basis(3, 4);
  p.alpha[10] = b45[8];
  p.alpha[11] = b45[9];
  QVec b56 = L.bracket_basis(4, 5);
  p.alpha[12] = b56[9];

  LieAlgebra expect = raw_f10(p);
  for (size_t i = 0; i < 10; ++i)
    for (size_t j = i + 1; j < 10; ++j)
      if (L.bracket_basis(i, j) != expect.bracket_basis(i, j)) return std::nullopt;
  return p;
}

std::string classify_case(const Params& params) {
  require_admissible(params);
  P a{params.alpha};
  Rat two_a1_plus_a7 = 2 * a(1) + a(7);
  if (two_a1_plus_a7 == 0) {
    if (a(1) != 0 || a(7) != 0)
      throw Error("Internal", "case 1 must force a1 = a7 = 0");
    return "1";
  }
  if (a(13) != 0) {
    if (a(7) * a(7) != a(1) * a(1))
      throw Error("Internal", "a13 nonzero must force a7^2 = a1^2");
    if (a(7) == a(1)) return "2a1";
    return (3 * a(2) + a(8) == 0) ? "2a2a" : "2a2b";
  }
  if (a(7) * a(7) != a(1) * a(1)) return "2b1";
  if (a(7) == a(1)) return "2b2a";
  return (3 * a(2) + a(8) == 0) ? "2b2b1" : "2b2b2";
}

namespace {

// v_1..v_58 exponent tuples over (x2,..,x10), in the published order.
constexpr int kPublishedOrder[58][9] = {
    {0, 0, 0, 0, 0, 0, 0, 0, 0}, // v1 = 1
    {1, 0, 0, 0, 0, 0, 0, 0, 0}, // v2
    {0, 1, 0, 0, 0, 0, 0, 0, 0}, // v3
    {2, 0, 0, 0, 0, 0, 0, 0, 0}, // v4
    {0, 0, 1, 0, 0, 0, 0, 0, 0}, // v5
    {1, 1, 0, 0, 0, 0, 0, 0, 0}, // v6
    {3, 0, 0, 0, 0, 0, 0, 0, 0}, // v7
    {0, 0, 0, 1, 0, 0, 0, 0, 0}, // v8
    {1, 0, 1, 0, 0, 0, 0, 0, 0}, // v9
    {0, 2, 0, 0, 0, 0, 0, 0, 0}, // v10
    {2, 1, 0, 0, 0, 0, 0, 0, 0}, // v11
    {4, 0, 0, 0, 0, 0, 0, 0, 0}, // v12
    {0, 0, 0, 0, 1, 0, 0, 0, 0}, // v13
    {0, 1, 1, 0, 0, 0, 0, 0, 0}, // v14
    {1, 0, 0, 1, 0, 0, 0, 0, 0}, // v15
    {2, 0, 1, 0, 0, 0, 0, 0, 0}, // v16
    {1, 2, 0, 0, 0, 0, 0, 0, 0}, // v17
    {3, 1, 0, 0, 0, 0, 0, 0, 0}, // v18
    {5, 0, 0, 0, 0, 0, 0, 0, 0}, // v19
    {0, 0, 0, 0, 0, 1, 0, 0, 0}, // v20
    {0, 0, 2, 0, 0, 0, 0, 0, 0}, // v21
    {0, 1, 0, 1, 0, 0, 0, 0, 0}, // v22
    {1, 1, 1, 0, 0, 0, 0, 0, 0}, // v23
    {0, 3, 0, 0, 0, 0, 0, 0, 0}, // v24
    {2, 0, 0, 1, 0, 0, 0, 0, 0}, // v25
    {3, 0, 1, 0, 0, 0, 0, 0, 0}, // v26
    {2, 2, 0, 0, 0, 0, 0, 0, 0}, // v27
    {4, 1, 0, 0, 0, 0, 0, 0, 0}, // v28
    {6, 0, 0, 0, 0, 0, 0, 0, 0}, // v29
    {0, 0, 0, 0, 0, 0, 1, 0, 0}, // v30
    {0, 0, 1, 1, 0, 0, 0, 0, 0}, // v31
    {1, 0, 2, 0, 0, 0, 0, 0, 0}, // v32
    {0, 2, 1, 0, 0, 0, 0, 0, 0}, // v33
    {1, 1, 0, 1, 0, 0, 0, 0, 0}, // v34
    {2, 1, 1, 0, 0, 0, 0, 0, 0}, // v35
    {1, 3, 0, 0, 0, 0, 0, 0, 0}, // v36
    {3, 0, 0, 1, 0, 0, 0, 0, 0}, // v37
    {4, 0, 1, 0, 0, 0, 0, 0, 0}, // v38
    {3, 2, 0, 0, 0, 0, 0, 0, 0}, // v39
    {5, 1, 0, 0, 0, 0, 0, 0, 0}, // v40
    {7, 0, 0, 0, 0, 0, 0, 0, 0}, // v41
    {0, 0, 0, 0, 0, 0, 0, 1, 0}, // v42
    {0, 1, 2, 0, 0, 0, 0, 0, 0}, // v43
    {0, 0, 0, 2, 0, 0, 0, 0, 0}, // v44
    {1, 0, 1, 1, 0, 0, 0, 0, 0}, // v45
    {0, 2, 0, 1, 0, 0, 0, 0, 0}, // v46
    {2, 0, 2, 0, 0, 0, 0, 0, 0}, // v47
    {1, 2, 1, 0, 0, 0, 0, 0, 0}, // v48
    {0, 4, 0, 0, 0, 0, 0, 0, 0}, // v49
    {2, 1, 0, 1, 0, 0, 0, 0, 0}, // v50
    {3, 1, 1, 0, 0, 0, 0, 0, 0}, // v51
    {2, 3, 0, 0, 0, 0, 0, 0, 0}, // v52
    {4, 0, 0, 1, 0, 0, 0, 0, 0}, // v53
    {5, 0, 1, 0, 0, 0, 0, 0, 0}, // v54
    {4, 2, 0, 0, 0, 0, 0, 0, 0}, // v55
    {6, 1, 0, 0, 0, 0, 0, 0, 0}, // v56
    {8, 0, 0, 0, 0, 0, 0, 0, 0}, // v57
    {0, 0, 0, 0, 0, 0, 0, 0, 1}, // v58
};

} // namespace

builder::QuotientModule build_V58(const Params& p) {
  LieAlgebra f = make_f10(p);
  builder::FiliformResult res = builder::filiform_module(f, 5); // J = <x6..x10>
  builder::QuotientModule& qm = res.outcome.qm;
  if (qm.dim() != 58) throw Error("Internal", "V58 must have dimension 58");

  std::map<std::vector<uint32_t>, size_t> where;
  for (size_t i = 0; i < 58; ++i) where.emplace(qm.basis[i].exp, i);
  std::vector<size_t> sigma(58);
  for (size_t i = 0; i < 58; ++i) {
    std::vector<uint32_t> key(9);
    for (size_t k = 0; k < 9; ++k) key[k] = static_cast<uint32_t>(kPublishedOrder[i][k]);
    auto it = where.find(key);
    if (it == where.end()) throw Error("Internal", "published monomial missing from the basis");
    sigma[i] = it->second;
  }

  builder::QuotientModule out;
  out.ctx = qm.ctx;
  out.ideal = qm.ideal;
  out.provenance = "filiform-v58";
  for (size_t i = 0; i < 58; ++i) {
    out.basis.push_back(qm.basis[sigma[i]]);
    out.basis_names.push_back(qm.basis_names[sigma[i]]);
  }
  for (const QMat& m : qm.mats) {
    QMat pm(58, 58);
    for (size_t r = 0; r < 58; ++r)
      for (size_t c = 0; c < 58; ++c) pm.at(r, c) = m.at(sigma[r], sigma[c]);
    out.mats.push_back(std::move(pm));
  }
  return out;
}

namespace {

using Row = std::vector<std::pair<size_t, Rat>>; // (1-based v index, coefficient)

std::array<Row, 58> x1_reference(const Params& params) {
  P a{params.alpha};
  std::array<Row, 58> r;
  r[1] = {{3, Rat(1)}};
  r[2] = {{5, Rat(1)}};
  r[3] = {{6, Rat(2)}, {8, -a(1)},  {13, -a(2)}, {20, -a(3)},
          {30, -a(4)}, {42, -a(5)}, {58, -a(6)}};
  r[4] = {{8, Rat(1)}};
  r[5] = {{9, Rat(1)}, {10, Rat(1)}};
  r[6] = {{11, Rat(3)},
          {15, -3 * a(1)},
          {20, a(1) * (a(1) - a(7))},
          {30, 2 * a(1) * a(2) - 2 * a(2) * a(7) - a(1) * a(8)},
          {42, 2 * a(1) * a(3) - a(1) * a(9) + a(11) * a(3) + a(2) * a(2) - 2 * a(2) * a(8) -
                   3 * a(3) * a(7)},
          {58, 2 * a(1) * a(4) - a(1) * a(10) + 3 * a(11) * a(4) + a(12) * a(3) - a(13) * a(5) +
                   2 * a(2) * a(3) - 2 * a(2) * a(9) - 3 * a(3) * a(8) - 4 * a(4) * a(7)}};
  r[7] = {{13, Rat(1)}};
  r[8] = {{14, Rat(1)}, {15, Rat(1)}};
  r[9] = {{14, Rat(2)}, {20, -a(7)}, {30, -a(8)}, {42, -a(9)}, {58, -a(10)}};
  r[10] = {{16, Rat(1)},
           {17, Rat(2)},
           {22, -a(1)},
           {30, a(1) * a(7)},
           {42, a(1) * a(8) - a(11) * a(2) + a(2) * a(7)},
           {58, a(1) * a(9) - 2 * a(11) * a(3) - a(12) * a(2) + a(13) * a(4) + a(2) * a(8) +
                    a(3) * a(7)}};
  r[11] = {{18, Rat(4)},
           {25, -6 * a(1)},
           {42, a(1) * (4 * a(1) * a(7) - a(1) * a(1) - 3 * a(1) * a(11))},
           {58, 4 * a(1) * a(1) * a(8) - a(1) * a(1) * a(12) - 3 * a(1) * a(1) * a(2) -
                    6 * a(1) * a(11) * a(2) + 3 * a(1) * a(11) * a(8) + a(1) * a(12) * a(7) +
                    2 * a(1) * a(13) * a(3) - a(1) * a(13) * a(9) + 11 * a(1) * a(2) * a(7) -
                    7 * a(1) * a(7) * a(8) + a(11) * a(13) * a(3) + 6 * a(11) * a(2) * a(7) +
                    a(13) * a(2) * a(2) - 2 * a(13) * a(2) * a(8) - 3 * a(13) * a(3) * a(7) -
                    8 * a(2) * a(7) * a(7)}};
  r[12] = {{20, Rat(1)}};
  r[13] = {{21, Rat(1)}, {22, Rat(1)}};
  r[14] = {{22, Rat(1)}};
  r[15] = {{23, Rat(2)},
           {25, Rat(1)},
           {31, -a(1)},
           {42, a(1) * a(11)},
           {58, a(1) * a(12) + a(11) * a(2) - a(13) * a(3)}};
  r[16] = {{23, Rat(2)}, {24, Rat(1)}};
  r[17] = {{26, Rat(1)},
           {27, Rat(3)},
           {34, -3 * a(1)},
           {58, 2 * a(1) * a(1) * a(11) - a(1) * a(1) * a(7) - 2 * a(1) * a(11) * a(7) -
                    2 * a(1) * a(13) * a(2) + a(1) * a(13) * a(8) + a(1) * a(7) * a(7) +
                    2 * a(13) * a(2) * a(7)}};
  r[18] = {{28, Rat(5)},
           {37, -10 * a(1)},
           {58, a(1) * a(13) * (4 * a(1) * a(7) - a(1) * a(1) - 3 * a(1) * a(11))}};
  r[19] = {{30, Rat(1)}};
  r[20] = {{31, Rat(2)}, {42, -a(11)}, {58, -a(12)}};
  r[21] = {{31, Rat(1)}};
  r[22] = {{32, Rat(1)}, {33, Rat(1)}, {34, Rat(1)}};
  r[23] = {{33, Rat(3)}, {58, a(7) * a(7) - 2 * a(11) * a(7) + a(13) * a(8)}};
  r[24] = {{34, Rat(2)}, {44, -a(1)}, {58, a(13) * a(2)}};
  r[25] = {{35, Rat(3)}, {37, Rat(1)}, {45, -3 * a(1)}, {58, a(1) * a(13) * (a(1) - a(7))}};
  r[26] = {{35, Rat(2)}, {36, Rat(2)}, {46, -a(1)}, {58, -a(1) * a(13) * a(7)}};
  r[27] = {{38, Rat(1)}, {39, Rat(4)}, {50, -6 * a(1)}};
  r[28] = {{40, Rat(6)}, {53, -15 * a(1)}};
  r[29] = {{42, Rat(1)}};
  r[30] = {{44, Rat(1)}};
  r[31] = {{43, Rat(1)}, {45, Rat(2)}};
  r[32] = {{43, Rat(2)}, {46, Rat(1)}, {58, -a(13) * a(7)}};
  r[33] = {{45, Rat(1)}, {46, Rat(1)}};
  r[34] = {{47, Rat(1)}, {48, Rat(2)}, {50, Rat(1)}};
  r[35] = {{48, Rat(3)}, {49, Rat(1)}};
  r[36] = {{50, Rat(3)}};
  r[37] = {{51, Rat(4)}, {53, Rat(1)}};
  r[38] = {{51, Rat(2)}, {52, Rat(3)}};
  r[39] = {{54, Rat(1)}, {55, Rat(5)}};
  r[40] = {{56, Rat(7)}};
  r[41] = {{58, Rat(1)}};
  r[43] = {{58, -a(13)}};
  return r;
}

std::array<Row, 58> x2_reference(const Params&) {
  std::array<Row, 58> r;
  // x2 maps v_{i+1} to v_{img[i]}; zero marks a vanishing action, and
  // everything from v42 on is killed.
  const size_t img[41] = {2,  4,  6,  7,  9,  11, 12, 15, 16, 17, 18, 19, 0,  23,
                          25, 26, 27, 28, 29, 0,  32, 34, 35, 36, 37, 38, 39, 40,
                          41, 0,  45, 47, 48, 50, 51, 52, 53, 54, 55, 56, 57};
  for (size_t i = 0; i < 41; ++i)
    if (img[i] != 0) r[i] = {{img[i], Rat(1)}};
  return r;
}

QVec row_to_vec(const Row& row) {
  QVec v = zero_vec(58);
  for (const auto& [idx1, c] : row) v[idx1 - 1] += c;
  return v;
}

} // namespace

RegressionReport v58_regression(const Params& p) {
  builder::QuotientModule qm = build_V58(p);
  RegressionReport rep;
  std::array<std::array<Row, 58>, 2> refs{x1_reference(p), x2_reference(p)};
  const char* names[2] = {"x1", "x2"};
  for (size_t g = 0; g < 2; ++g) {
    for (size_t col = 0; col < 58; ++col) {
      QVec expect = row_to_vec(refs[g][col]);
      QVec actual = qm.mats[g].col(col);
      std::string status;
      if (actual == expect) {
        status = "match";
      } else {
        QVec neg = expect;
        for (Rat& c : neg) c = -c;
        if (actual == neg) {
          status = "match-up-to-documented-sign";
          ++rep.sign_flips;
        } else {
          status = "mismatch";
          ++rep.mismatches;
        }
      }
      rep.rows.push_back(RegressionRow{names[g], col + 1, status});
    }
  }
  return rep;
}

MuBounds mu_bounds(const Params& p, size_t achieved_dim) {
  std::string label = classify_case(p);
  MuBounds b;
  b.lower = 10;
  b.lower_source = "filiform dimension bound";
  static const Params kExample{{Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(-1), Rat(1),
                                Rat(0), Rat(0), Rat(3), Rat(-16), Rat(1)}};
  if (p.alpha == kExample.alpha) {
    b.lower = 12;
    b.lower_source = "published lower bound for this parameter tuple";
  }
  if (label == "1" || label == "2b1") {
    b.cited_upper = 10;
    b.upper_source = "published exact value for case " + label;
  } else if (label == "2a2b") {
    b.cited_upper = 18;
    b.upper_source = "published bound for case " + label;
  } else if (label == "2b2b2") {
    b.cited_upper = 15;
    b.upper_source = "published bound for case " + label;
  } else {
    b.cited_upper = 11;
    b.upper_source = "published bound for case " + label;
  }
  b.achieved_dim = achieved_dim;
  b.upper = std::min(b.cited_upper, Int(static_cast<unsigned long>(achieved_dim)));
  return b;
}

PipelineResult pipeline(const Params& p) {
  PipelineResult out;
  out.params = p;
  out.case_label = classify_case(p);
  builder::QuotientModule qm = build_V58(p);
  LieAlgebra f = make_f10(p);
  Representation rep{f, qm.mats};
  out.chain = reducer::reduce_fully(rep);
  out.final_dim = out.chain.final_rep.degree();
  out.mu = mu_bounds(p, out.final_dim);
  return out;
}

} // namespace filiform10
} // namespace nilrep
