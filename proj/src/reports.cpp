#include "nilrep/reports.hpp"

#include "nilrep/bounds.hpp"
#include "nilrep/errors.hpp"
#include "nilrep/reducer.hpp"

namespace nilrep {
namespace reports {

namespace {

using nlohmann::json;

json verification_json(const VerifyResult& v) {
  json out;
  out["module"] = v.is_module;
  out["faithful"] = v.faithful;
  out["kernel_dim"] = v.kernel.dim();
  if (v.first_violation) {
    out["first_violation"] =
        json::array({v.first_violation->first + 1, v.first_violation->second + 1});
  }
  return out;
}

json chain_json(const reducer::ReductionChain& chain) {
  json steps = json::array();
  for (const auto& st : chain.steps) {
    json s;
    s["dim_before"] = st.rep.degree();
    s["invariant_dim"] = st.invariant_dim;
    s["removed_dim"] = st.complement_dim;
    s["dim_after"] = st.rep.degree() - st.complement_dim;
    steps.push_back(std::move(s));
  }
  json out;
  out["initial_dim"] = chain.initial_dim;
  out["steps"] = steps;
  out["final_dim"] = chain.final_rep.degree();
  return out;
}

std::vector<std::string> generic_names(size_t d) {
  std::vector<std::string> names;
  for (size_t i = 1; i <= d; ++i) names.push_back("e" + std::to_string(i));
  return names;
}

} // namespace

json check_report(const io::AlgebraFile& af) {
  json rep;
  rep["command"] = "check";
  rep["algebra"] = io::algebra_to_json(af);
  try {
    validate(af.algebra);
  } catch (const Error& e) {
    if (e.code() != "JacobiViolation") throw;
    rep["jacobi"] = "violated";
    rep["violation"] = e.what();
    return rep;
  }
  rep["jacobi"] = "ok";
  rep["center_dim"] = center(af.algebra).dim();
  rep["derived_dim"] = derived(af.algebra).dim();
  bool nilpotent = true;
  try {
    lower_central_series(af.algebra);
  } catch (const Error& e) {
    if (e.code() != "NotNilpotent") throw;
    nilpotent = false;
  }
  rep["nilpotent"] = nilpotent;
  if (nilpotent) {
    rep["class"] = nilpotency_class(af.algebra);
    rep["filiform"] = is_filiform(af.algebra);
    bounds::MuLowerResult mu = bounds::mu_lower(af.algebra);
    json sources = json::array();
    for (const auto& s : mu.sources) {
      sources.push_back(json{{"name", s.name}, {"value", s.value.get_str()}});
    }
    rep["mu_lower"] = json{{"sources", sources}, {"value", mu.value.get_str()}};
  }
  return rep;
}

json build_report(const io::AlgebraFile& af, const builder::BuildRequest& req,
                  const json& filtration_echo) {
  for (size_t v : req.inner) {
    if (v >= af.dim) {
      throw Error("BadIndex", "inner index " + std::to_string(v + 1) +
                                  " exceeds the algebra dimension " + std::to_string(af.dim));
    }
  }
  for (const auto& term : req.custom_terms) {
    for (size_t v : term) {
      if (v >= af.dim) {
        throw Error("BadIndex", "filtration index " + std::to_string(v + 1) +
                                    " exceeds the algebra dimension " + std::to_string(af.dim));
      }
    }
  }
  if (req.ideal_m && *req.ideal_m >= af.dim) {
    throw Error("BadIndex", "ideal start " + std::to_string(*req.ideal_m + 1) +
                                " exceeds the algebra dimension " + std::to_string(af.dim));
  }

  builder::BuildOutcome out = builder::build_from_algebra(req);

  json rep;
  rep["command"] = "build";
  rep["algebra"] = io::algebra_to_json(af);
  json cons;
  json inner = json::array(), outer = json::array();
  for (size_t i : out.sd.inner_indices) inner.push_back(i + 1);
  for (size_t i : out.sd.outer_indices) outer.push_back(i + 1);
  cons["inner"] = inner;
  cons["outer"] = outer;
  cons["filtration"] = filtration_echo;
  cons["class"] = out.qm.ctx.C;
  cons["truncation"] = out.qm.ctx.T;
  cons["adapted_basis"] = out.qm.ctx.label;
  cons["order"] = out.qm.ctx.order;
  cons["ideal"] = json{{"dim", out.beta},
                       {"level", out.qm.ideal.level},
                       {"start_position", out.qm.ideal.m_pos + 1}};
  cons["provenance"] = out.qm.provenance;
  rep["construction"] = cons;
  if (out.f_expected) {
    rep["f_expected"] = out.f_expected->get_str();
    rep["f_match"] = (*out.f_expected == static_cast<long>(out.qm.dim()));
  }
  rep["module"] = io::module_to_json(af, out.qm.basis_names, out.rep);
  rep["verification"] = verification_json(out.verify);
  return rep;
}

json reduce_report(const io::ModuleDoc& doc) {
  VerifyResult v0 = verify_representation(doc.af.algebra, doc.rep);
  if (!v0.is_module) {
    throw Error("NotNilpotentModule", "input matrices do not satisfy the bracket relations");
  }
  reducer::ReductionChain chain = reducer::reduce_fully(doc.rep);
  json rep;
  rep["command"] = "reduce";
  rep["algebra"] = io::algebra_to_json(doc.af);
  rep["chain"] = chain_json(chain);
  rep["module"] =
      io::module_to_json(doc.af, generic_names(chain.final_rep.degree()), chain.final_rep);
  rep["verification"] = verification_json(verify_representation(doc.af.algebra, chain.final_rep));
  return rep;
}

json filiform10_report(const filiform10::Params& p) {
  filiform10::PipelineResult pr = filiform10::pipeline(p);
  filiform10::RegressionReport reg = filiform10::v58_regression(p);

  json rep;
  rep["command"] = "filiform10";
  json params = json::array();
  for (const Rat& a : p.alpha) params.push_back(rat_to_string(a));
  rep["params"] = params;
  rep["admissible"] = true;
  rep["case"] = pr.case_label;
  size_t matches = 0;
  for (const auto& row : reg.rows) {
    if (row.status == "match") ++matches;
  }
  rep["regression"] = json{{"rows", reg.rows.size()},
                           {"matches", matches},
                           {"sign_flips", reg.sign_flips},
                           {"mismatches", reg.mismatches}};
  rep["pipeline"] = chain_json(pr.chain);
  rep["mu"] = json{{"achieved_dim", pr.mu.achieved_dim},
                   {"cited_upper", pr.mu.cited_upper.get_str()},
                   {"cited_upper_source", pr.mu.upper_source},
                   {"lower", pr.mu.lower.get_str()},
                   {"lower_source", pr.mu.lower_source},
                   {"upper", pr.mu.upper.get_str()}};

  io::AlgebraFile faf;
  faf.dim = 10;
  for (size_t i = 1; i <= 10; ++i) faf.basis.push_back("x" + std::to_string(i));
  faf.algebra = pr.chain.final_rep.algebra;
  rep["algebra"] = io::algebra_to_json(faf);
  rep["module"] =
      io::module_to_json(faf, generic_names(pr.chain.final_rep.degree()), pr.chain.final_rep);
  rep["verification"] = verification_json(verify_representation(faf.algebra, pr.chain.final_rep));
  return rep;
}

json bounds_report(unsigned n, std::optional<unsigned> beta) {
  if (n < 3) throw Error("Usage", "--n must be at least 3");
  if (beta && (*beta < 1 || *beta > n - 1)) {
    throw Error("Usage", "--beta must be between 1 and n-1");
  }
  json rep;
  rep["command"] = "bounds";
  rep["n"] = n;
  json table = json::array();
  for (unsigned b = 1; b <= n - 1; ++b) {
    table.push_back(json{{"beta", b},
                         {"f", bounds::f(n, b).get_str()},
                         {"remark_bound", rat_to_string(bounds::remark_bound(n, b))}});
  }
  rep["table"] = table;
  json cf;
  cf["beta_n_minus_1"] = json{{"beta", n - 1},
                              {"closed", bounds::f_closed_beta_nm1(n).get_str()},
                              {"match", bounds::f_closed_beta_nm1(n) == bounds::f(n, n - 1)}};
  cf["beta_n_minus_2"] = json{{"beta", n - 2},
                              {"closed", bounds::f_closed_beta_nm2(n).get_str()},
                              {"match", bounds::f_closed_beta_nm2(n) == bounds::f(n, n - 2)}};
  if (n >= 4) {
    cf["beta_n_minus_3"] = json{{"beta", n - 3},
                                {"closed", bounds::f_closed_beta_nm3(n).get_str()},
                                {"match", bounds::f_closed_beta_nm3(n) == bounds::f(n, n - 3)}};
  }
  rep["closed_forms"] = cf;
  rep["half_beta_bound"] = bounds::half_beta_bound(n).get_str();
  if (beta) {
    rep["beta"] = *beta;
    rep["f"] = bounds::f(n, *beta).get_str();
  }
  return rep;
}

} // namespace reports
} // namespace nilrep
