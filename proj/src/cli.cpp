#include "cosk/cli.hpp"

#include <cstdint>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cosk/io.hpp"
#include "cosk/lab.hpp"
#include "cosk/models.hpp"
#include "cosk/spectral.hpp"

namespace cosk::cli {

namespace {

using nlohmann::json;

constexpr int kMaxDim = 32;

struct BuiltModel {
  CurvatureTensor R;
  bool kahler = false;
};

void require_dim(int n) {
  if (n < 1) throw std::invalid_argument("dimension must be positive");
  if (n > kMaxDim)
    throw std::invalid_argument("dimension too large for dense storage");
}

bool detect_kahler(const CurvatureTensor& R) {
  if (R.dim() % 2 != 0) return false;
  return kahler_residual(R) <= 1e-10 * scale_of(R);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

int parse_int(const std::string& s) {
  std::size_t used = 0;
  int v = std::stoi(s, &used);
  if (used != s.size())
    throw std::invalid_argument("not an integer: " + s);
  return v;
}

double parse_double(const std::string& s) {
  std::size_t used = 0;
  double v = std::stod(s, &used);
  if (used != s.size())
    throw std::invalid_argument("not a number: " + s);
  return v;
}

// factor grammar: cp:m:c | sphere:n:kappa | flat:n, comma separated
BuiltModel build_product(const std::string& factors) {
  std::vector<std::string> parts = split(factors, ',');
  if (parts.empty() || parts.front().empty())
    throw std::invalid_argument("empty factor list");
  bool all_cp = true;
  for (const std::string& p : parts)
    if (split(p, ':').front() != "cp") all_cp = false;

  if (all_cp) {
    // interleave so the result is adapted to the standard complex structure
    std::vector<KahlerOperator> ops;
    for (const std::string& p : parts) {
      std::vector<std::string> f = split(p, ':');
      if (f.size() != 3)
        throw std::invalid_argument("cp factor needs cp:m:c, got " + p);
      int m = parse_int(f[1]);
      require_dim(2 * m);
      ops.push_back(const_hsc(m, parse_double(f[2])));
    }
    KahlerOperator acc = ops.front();
    for (std::size_t i = 1; i < ops.size(); ++i)
      acc = kahler_product(acc, ops[i]);
    require_dim(acc.n());
    return {acc.R(), true};
  }

  std::vector<CurvatureTensor> tensors;
  int total = 0;
  for (const std::string& p : parts) {
    std::vector<std::string> f = split(p, ':');
    if (f.empty() || f.front().empty())
      throw std::invalid_argument("empty factor in list");
    if (f.front() == "cp") {
      if (f.size() != 3)
        throw std::invalid_argument("cp factor needs cp:m:c, got " + p);
      int m = parse_int(f[1]);
      require_dim(2 * m);
      tensors.push_back(const_hsc(m, parse_double(f[2])).R());
    } else if (f.front() == "sphere") {
      if (f.size() != 3)
        throw std::invalid_argument("sphere factor needs sphere:n:kappa, got " +
                                    p);
      int n = parse_int(f[1]);
      require_dim(n);
      tensors.push_back(sphere(n, parse_double(f[2])));
    } else if (f.front() == "flat") {
      if (f.size() != 2)
        throw std::invalid_argument("flat factor needs flat:n, got " + p);
      int n = parse_int(f[1]);
      require_dim(n);
      tensors.push_back(flat(n));
    } else {
      throw std::invalid_argument("unknown factor kind: " + f.front());
    }
    total += tensors.back().dim();
    require_dim(total);
  }
  CurvatureTensor acc = tensors.front();
  for (std::size_t i = 1; i < tensors.size(); ++i)
    acc = product(acc, tensors[i]);
  return {acc, detect_kahler(acc)};
}

int cmd_model(const std::string& name, int m, double c, int n, double kappa,
              std::uint64_t seed, const std::string& factors,
              const std::string& out_path) {
  BuiltModel built{CurvatureTensor(1), false};
  if (name == "cp") {
    require_dim(2 * m);
    built.R = const_hsc(m, c).R();
  } else if (name == "sphere") {
    require_dim(n);
    built.R = sphere(n, kappa);
  } else if (name == "flat") {
    require_dim(n);
    built.R = flat(n);
  } else if (name == "random") {
    require_dim(2 * m);
    built.R = random_kahler(m, seed).R();
  } else if (name == "product") {
    if (factors.empty())
      throw std::invalid_argument("model product requires --factors");
    built = build_product(factors);
  } else {
    throw std::invalid_argument("unknown model: " + name);
  }
  // the flag is recomputed from the tensor itself, never trusted from the
  // construction path, so the file always matches what a reader would detect
  built.kahler = detect_kahler(built.R);

  write_file(out_path, write_tensor_json(built.R, built.kahler));
  Scalars sc = ricci_scalar(built.R);
  std::cout << "n=" << built.R.dim() << " N=" << built.R.sym_dim()
            << " S=" << sc.scalar
            << " kahler=" << (built.kahler ? "true" : "false") << "\n";
  return 0;
}

int cmd_spectrum(const std::string& input, const std::string& json_path,
                 const std::string& csv_path) {
  TensorFile tf = read_tensor_json(read_file(input));
  SecondKindMatrix M = assemble(tf.R);
  Eigen::VectorXd eigs = eigenvalues(M);
  Threshold th = alpha_threshold(eigs);
  const int n = tf.R.dim();
  const double trace_lhs = M.M.trace();
  const double trace_rhs = (n + 2.0) / (2.0 * n) * M.scalar;

  std::cout << "n=" << n << " N=" << eigs.size() << " S=" << M.scalar << "\n";
  std::cout << "eigenvalues:";
  for (Eigen::Index i = 0; i < eigs.size(); ++i) std::cout << " " << eigs[i];
  std::cout << "\n";
  if (th.attained)
    std::cout << "threshold: alpha=" << th.alpha << " (attained)\n";
  else
    std::cout << "threshold: not attained on [1, N]\n";

  if (!json_path.empty()) {
    json j;
    j["format"] = "curvature-report/1";
    j["kind"] = "spectrum";
    j["input_digest"] = tf.digest;
    j["n"] = n;
    j["N"] = static_cast<int>(eigs.size());
    j["scalar"] = M.scalar;
    json ev = json::array();
    for (Eigen::Index i = 0; i < eigs.size(); ++i) ev.push_back(eigs[i]);
    j["eigenvalues"] = std::move(ev);
    j["threshold"] = {{"attained", th.attained}, {"alpha", th.alpha}};
    j["trace_check"] = {{"lhs", trace_lhs},
                        {"rhs", trace_rhs},
                        {"residual", std::abs(trace_lhs - trace_rhs)}};
    write_file(json_path, j.dump(2));
  }
  if (!csv_path.empty()) {
    std::ostringstream csv;
    csv << "index,eigenvalue\n";
    for (Eigen::Index i = 0; i < eigs.size(); ++i)
      csv << (i + 1) << "," << eigs[i] << "\n";
    write_file(csv_path, csv.str());
  }
  return 0;
}

int cmd_check(const std::string& input, double alpha) {
  TensorFile tf = read_tensor_json(read_file(input));
  SecondKindMatrix M = assemble(tf.R);
  const int N = static_cast<int>(M.M.rows());
  if (!(alpha >= 1.0 && alpha <= static_cast<double>(N))) {
    std::cerr << "alpha must lie in [1, " << N << "]\n";
    return 2;
  }
  AlphaStatus st = alpha_status(eigenvalues(M), alpha);
  std::cout << verdict_name(st.verdict) << " (f+=" << st.f_pos
            << ", f-=" << st.f_neg << ")\n";
  return 0;
}

int cmd_verify(const std::string& suite, const std::vector<int>& ms,
               int trials, std::uint64_t seed, double tol,
               const std::string& out_path) {
  if (suite != "identities" && suite != "props" && suite != "models" &&
      suite != "all")
    throw std::invalid_argument(
        "unknown suite (expected identities | props | models | all): " +
        suite);
  const bool run_identities = suite == "identities" || suite == "all";
  const bool run_props = suite == "props" || suite == "all";
  const bool run_models = suite == "models" || suite == "all";
  constexpr int kVerifySamples = 200;  // functional sampling inside props

  std::vector<VerificationReport> reports;
  for (int m : ms) {
    if (m < 2) throw std::invalid_argument("verify needs --m values >= 2");
    require_dim(2 * m);
    if (run_identities) reports.push_back(identity_suite(m, trials, seed));
    if (run_props) {
      for (int part = 1; part <= 4; ++part)
        reports.push_back(
            implication_suite(m, part, trials, kVerifySamples, seed));
      reports.push_back(corollary_suite(m, trials, seed));
    }
    if (run_models) reports.push_back(model_suite(m));
  }

  bool all = true;
  for (const VerificationReport& r : reports) {
    bool ok = r.all_pass();
    all = all && ok;
    std::cout << r.suite << " m=" << r.m << ": " << (ok ? "PASS" : "FAIL")
              << " (" << r.checks.size() << " checks)\n";
    if (!ok)
      for (const CheckRecord& c : r.checks)
        if (!c.pass)
          std::cout << "  FAIL " << c.name << ": lhs=" << c.lhs
                    << " rhs=" << c.rhs << " residual=" << c.residual << "\n";
  }

  if (!out_path.empty()) {
    ReportMeta meta;
    meta.kind = "verify";
    meta.m_list = ms;
    meta.seed = seed;
    meta.trials = trials;
    meta.tolerance = tol;
    write_file(out_path, report_json(meta, reports));
  }
  return all ? 0 : 1;
}

int cmd_curvatures(const std::string& input, int samples, std::uint64_t seed,
                   const std::string& json_path, const std::string& csv_path) {
  TensorFile tf = read_tensor_json(read_file(input));
  if (!tf.kahler) {
    std::cerr << "input tensor is not invariant under the complex structure; "
                 "curvature functionals need a kahler input\n";
    return 2;
  }
  KahlerOperator op = KahlerOperator::checked(tf.R);
  json out_functionals = json::array();
  std::ostringstream csv;
  csv << "name,min,max\n";
  for (Functional fn : {Functional::Hsc, Functional::OrthBisec,
                        Functional::RicPerp, Functional::MixedC21}) {
    FunctionalReport rep = functional_extremes(op, fn, samples, seed);
    std::cout << functional_name(fn) << ": min=" << rep.min_value
              << " max=" << rep.max_value << "\n";
    out_functionals.push_back({{"name", functional_name(fn)},
                               {"min", rep.min_value},
                               {"max", rep.max_value}});
    csv << functional_name(fn) << "," << rep.min_value << ","
        << rep.max_value << "\n";
  }
  if (!json_path.empty()) {
    json j;
    j["format"] = "curvature-report/1";
    j["kind"] = "curvatures";
    j["input_digest"] = tf.digest;
    j["m"] = tf.m;
    j["samples"] = samples;
    j["seed"] = seed;
    j["functionals"] = std::move(out_functionals);
    write_file(json_path, j.dump(2));
  }
  if (!csv_path.empty()) write_file(csv_path, csv.str());
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"curvature operators of the second kind: models, spectra, "
               "positivity checks, and verification suites"};
  app.require_subcommand(1);

  // model
  std::string model_name, model_factors, model_out;
  int model_m = 0, model_n = 0;
  double model_c = 4.0, model_kappa = 1.0;
  std::uint64_t model_seed = 1;
  CLI::App* model =
      app.add_subcommand("model", "construct a model operator, write it as JSON");
  model->add_option("name", model_name, "cp | sphere | flat | random | product")
      ->required();
  model->add_option("--m", model_m, "complex dimension");
  model->add_option("--c", model_c, "holomorphic sectional curvature");
  model->add_option("--n", model_n, "real dimension");
  model->add_option("--k", model_kappa, "sectional curvature");
  model->add_option("--seed", model_seed, "random seed");
  model->add_option("--factors", model_factors,
                    "comma list: cp:m:c | sphere:n:kappa | flat:n");
  model->add_option("--out", model_out, "output tensor file")->required();

  // spectrum
  std::string spec_input, spec_json, spec_csv;
  CLI::App* spectrum = app.add_subcommand(
      "spectrum", "eigenvalues, threshold, and trace identity of an operator");
  spectrum->add_option("--input", spec_input, "tensor file")->required();
  spectrum->add_option("--json", spec_json, "write a JSON report here");
  spectrum->add_option("--csv", spec_csv, "write the eigenvalues as CSV here");

  // check
  std::string check_input;
  double check_alpha = 0;
  CLI::App* check = app.add_subcommand(
      "check", "fractional positivity verdict at a given weight");
  check->add_option("--input", check_input, "tensor file")->required();
  check->add_option("--alpha", check_alpha, "weight in [1, N]")->required();

  // verify
  std::string verify_suite = "all", verify_out;
  std::vector<int> verify_m = {2};
  int verify_trials = 20;
  std::uint64_t verify_seed = 1;
  double verify_tol = 1e-9;
  CLI::App* verify =
      app.add_subcommand("verify", "run the verification suites");
  verify->add_option("--suite", verify_suite,
                     "identities | props | models | all");
  verify->add_option("--m", verify_m, "complex dimensions to cover")
      ->delimiter(',');
  verify->add_option("--trials", verify_trials, "random draws per suite");
  verify->add_option("--seed", verify_seed, "base seed");
  verify->add_option("--tol", verify_tol, "reported tolerance");
  verify->add_option("--out", verify_out, "write a JSON report here");

  // curvatures
  std::string curv_input, curv_json, curv_csv;
  int curv_samples = 200;
  std::uint64_t curv_seed = 1;
  CLI::App* curvatures = app.add_subcommand(
      "curvatures", "sampled extremes of the curvature functionals");
  curvatures->add_option("--input", curv_input, "tensor file (kahler)")
      ->required();
  curvatures->add_option("--samples", curv_samples, "random samples per side");
  curvatures->add_option("--seed", curv_seed, "random seed");
  curvatures->add_option("--json", curv_json, "write a JSON report here");
  curvatures->add_option("--csv", curv_csv, "write a CSV summary here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*model)
      return cmd_model(model_name, model_m, model_c, model_n, model_kappa,
                       model_seed, model_factors, model_out);
    if (*spectrum) return cmd_spectrum(spec_input, spec_json, spec_csv);
    if (*check) return cmd_check(check_input, check_alpha);
    if (*verify)
      return cmd_verify(verify_suite, verify_m, verify_trials, verify_seed,
                        verify_tol, verify_out);
    if (*curvatures)
      return cmd_curvatures(curv_input, curv_samples, curv_seed, curv_json,
                            curv_csv);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const KahlerError& e) {
    std::cerr << "error: " << e.what() << " (residual " << e.residual()
              << ")\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace cosk::cli
