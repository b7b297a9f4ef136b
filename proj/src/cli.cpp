#include "nilrep/cli.hpp"

#include "nilrep/algebra_io.hpp"
#include "nilrep/errors.hpp"
#include "nilrep/reports.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace nilrep {
namespace cli {

namespace {

using nlohmann::json;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

/// 1-based comma list -> sorted unique 0-based indices. Syntax problems
/// are usage errors; ranges are checked against the algebra later.
std::vector<size_t> parse_index_list(const std::string& s, const std::string& flag) {
  std::vector<size_t> out;
  for (const std::string& p : split(s, ',')) {
    if (p.empty() || p.find_first_not_of("0123456789") != std::string::npos) {
      throw Error("Usage", flag + " expects comma-separated positive integers");
    }
    size_t v = std::stoull(p);
    if (v == 0) throw Error("Usage", flag + " indices are 1-based");
    out.push_back(v - 1);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

json do_build(const std::string& path, const std::string& inner_str, const std::string& ideal_str,
              const std::string& filt_str, std::optional<uint32_t> truncate) {
  io::AlgebraFile af = io::load_algebra(path);
  builder::BuildRequest req;
  req.L = af.algebra;
  if (inner_str.empty()) {
    for (size_t i = 0; i < af.dim; ++i) req.inner.push_back(i);
  } else {
    req.inner = parse_index_list(inner_str, "--inner");
  }

  if (ideal_str != "auto") {
    if (ideal_str.rfind("m=", 0) != 0) {
      throw Error("Usage", "--ideal expects \"auto\" or \"m=<index>\"");
    }
    std::string num = ideal_str.substr(2);
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos || num == "0") {
      throw Error("Usage", "--ideal m= expects a 1-based index");
    }
    req.ideal_m = std::stoull(num) - 1;
  }

  json filt_echo = "lcs";
  if (filt_str != "lcs") {
    std::ifstream in(filt_str);
    if (!in) throw Error("ParseError", "cannot open " + filt_str);
    json fj;
    try {
      fj = json::parse(in);
    } catch (const json::exception& e) {
      throw Error("ParseError", filt_str + ": " + e.what());
    }
    if (!fj.is_object() || !fj.contains("terms") || !fj["terms"].is_array()) {
      throw Error("ParseError", filt_str + ": expected {\"terms\": [[indices], ...]}");
    }
    req.filtration = builder::FiltrationMode::custom;
    for (const auto& term : fj["terms"]) {
      if (!term.is_array()) throw Error("ParseError", filt_str + ": terms must be arrays");
      std::vector<size_t> t;
      for (const auto& v : term) {
        if (!v.is_number_unsigned() || v.get<size_t>() == 0) {
          throw Error("ParseError", filt_str + ": indices are 1-based integers");
        }
        t.push_back(v.get<size_t>() - 1);
      }
      req.custom_terms.push_back(std::move(t));
    }
    filt_echo = json{{"file", filt_str}};
  }
  req.truncate = truncate;
  return reports::build_report(af, req, filt_echo);
}

json do_filiform10(const std::string& params_str) {
  std::vector<std::string> parts = split(params_str, ',');
  if (parts.size() != 13) {
    throw Error("Usage", "--params expects 13 comma-separated rationals, got " +
                             std::to_string(parts.size()));
  }
  filiform10::Params p;
  for (size_t i = 0; i < 13; ++i) {
    try {
      p.alpha[i] = rat_from_string(parts[i]);
    } catch (const Error&) {
      throw Error("Usage", "--params entry " + std::to_string(i + 1) + " (\"" + parts[i] +
                               "\") is not a rational");
    }
  }
  return reports::filiform10_report(p);
}

std::string strip_code(const Error& e) {
  std::string msg = e.what();
  std::string prefix = e.code() + ": ";
  if (msg.rfind(prefix, 0) == 0) msg = msg.substr(prefix.size());
  return msg;
}

std::string error_json(const std::string& cls, const std::string& message) {
  return io::dump_report(json{{"error", json{{"class", cls}, {"message", message}}}});
}

} // namespace

int run_capture(const std::vector<std::string>& args, std::string& out, std::string& err) {
  CLI::App app{"small faithful modules for nilpotent Lie algebras, in exact arithmetic"};
  app.require_subcommand(1);

  std::string check_path;
  CLI::App* check_cmd =
      app.add_subcommand("check", "validate an algebra file and report its invariants");
  check_cmd->add_option("path", check_path, "algebra file (JSON)")->required();

  std::string build_path, inner_str, ideal_str = "auto", filt_str = "lcs";
  uint32_t truncate_val = 0;
  CLI::App* build_cmd = app.add_subcommand("build", "construct a faithful module");
  build_cmd->add_option("path", build_path, "algebra file (JSON)")->required();
  build_cmd->add_option("--inner", inner_str,
                        "1-based indices spanning the nilpotent part (default: all)");
  build_cmd->add_option("--ideal", ideal_str, "auto, or m=<1-based index> for J = <x_m..x_n>");
  build_cmd->add_option("--filtration", filt_str,
                        "lcs, or a JSON file {\"terms\": [[indices], ...]}");
  CLI::Option* trunc_opt =
      build_cmd->add_option("--truncate", truncate_val, "truncation threshold T (default: the class)");

  std::string reduce_path;
  CLI::App* reduce_cmd =
      app.add_subcommand("reduce", "shrink a module by quotienting invariant vectors");
  reduce_cmd->add_option("path", reduce_path, "module document or build report (JSON)")->required();

  std::string params_str;
  CLI::App* f10_cmd = app.add_subcommand("filiform10", "the dimension-10 filiform family");
  f10_cmd->add_option("--params", params_str, "13 comma-separated rationals a1,...,a13")->required();

  unsigned bounds_n = 0;
  unsigned bounds_beta = 0;
  CLI::App* bounds_cmd = app.add_subcommand("bounds", "dimension bound tables");
  bounds_cmd->add_option("--n", bounds_n, "algebra dimension")->required();
  CLI::Option* beta_opt = bounds_cmd->add_option("--beta", bounds_beta, "report f(n, beta) too");

  std::string output_path;
  for (CLI::App* sub : {check_cmd, build_cmd, reduce_cmd, f10_cmd, bounds_cmd}) {
    sub->add_option("-o,--output", output_path, "write the report to this file instead of stdout");
  }

  std::vector<const char*> argv;
  argv.push_back("nilrep");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      std::ostringstream os;
      app.exit(e, os, os);
      out = os.str();
      return 0;
    }
    err = error_json("Usage", e.what());
    return 2;
  }

  try {
    json rep;
    if (app.got_subcommand(check_cmd)) {
      rep = reports::check_report(io::load_algebra(check_path));
    } else if (app.got_subcommand(build_cmd)) {
      std::optional<uint32_t> truncate;
      if (trunc_opt->count() > 0) {
        if (truncate_val == 0) throw Error("Usage", "--truncate must be positive");
        truncate = truncate_val;
      }
      rep = do_build(build_path, inner_str, ideal_str, filt_str, truncate);
    } else if (app.got_subcommand(reduce_cmd)) {
      rep = reports::reduce_report(io::load_module(reduce_path));
    } else if (app.got_subcommand(f10_cmd)) {
      rep = do_filiform10(params_str);
    } else {
      std::optional<unsigned> beta;
      if (beta_opt->count() > 0) beta = bounds_beta;
      rep = reports::bounds_report(bounds_n, beta);
    }

    std::string bytes = io::dump_report(rep);
    if (!output_path.empty()) {
      std::ofstream f(output_path);
      if (!f) throw Error("IoError", "cannot write " + output_path);
      f << bytes;
    } else {
      out = bytes;
    }
    return 0;
  } catch (const Error& e) {
    err = error_json(e.code(), strip_code(e));
    return e.code() == "Usage" ? 2 : 1;
  } catch (const std::exception& e) {
    err = error_json("Internal", e.what());
    return 1;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  std::string out, err;
  int code = run_capture(args, out, err);
  if (!out.empty()) std::fwrite(out.data(), 1, out.size(), stdout);
  if (!err.empty()) std::fwrite(err.data(), 1, err.size(), stderr);
  return code;
}

} // namespace cli
} // namespace nilrep
