#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <map>

#include "skw/analysis.hpp"
#include "skw/errors.hpp"
#include "skw/json_io.hpp"
#include "skw/schur.hpp"
#include "skw/schur_complex.hpp"
#include "skw/verify.hpp"

namespace skw::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string shape;
  int f = -1;
  int g = -1;
  std::string order = "yx";
  std::uint64_t prime = kDefaultPrime;
  int trials = 3;
  std::uint64_t seed = 0;
  std::string grades;
  std::string fitting_grades;
  int module_rank = 0;
  bool assert_true = false;
  std::string specialize_spec;
  std::string phi_path;
  std::string presentation_path;
  int max_weight = 6;
  int max_rank = 4;
};

SkewShape parse_shape(const std::string& text) {
  try {
    return SkewShape::parse(text);
  } catch (const Error& e) {
    throw UsageError("bad shape '" + text + "': " + e.what());
  }
}

void require_ranks(const Options& o) {
  if (o.f < 0 || o.g < 0) throw UsageError("--f and --g are required and must be nonnegative");
}

Alphabet::Order parse_order(const std::string& s) {
  if (s == "yx") return Alphabet::Order::YX;
  if (s == "xy") return Alphabet::Order::XY;
  throw UsageError("--order must be yx or xy");
}

std::map<int, ExtInt> parse_grades(const std::string& text) {
  std::map<int, ExtInt> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("grade entries look like t=v, got '" + item + "'");
    try {
      out[std::stoi(item.substr(0, eq))] = ExtInt::parse(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw UsageError("bad grade entry '" + item + "'");
    }
  }
  return out;
}

IntMatrix read_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return int_matrix_from_json(Json::parse(in));
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(path + ": " + e.what());
  } catch (const Error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

Json ext_json(const ExtInt& e) { return e.is_infinite() ? Json("inf") : Json(e.value()); }


Json info_json(const SkewShape& shape, int f, int g) {
  Json j;
  j["schema"] = "1";
  j["shape"] = shape.to_string();
  j["f"] = f;
  j["g"] = g;
  j["W"] = shape.width();
  j["H"] = shape.height();
  const auto [k, l] = shape.kl_sequences();
  j["k"] = k;
  j["l"] = l;
  const bool empty = shape.is_empty();
  j["T"] = empty ? Json(nullptr) : Json(shape.threshold(f, g));
  const auto bounds = component_bounds(shape, f, g);
  j["bounds"] = bounds ? Json{{"start", bounds->first}, {"finish", bounds->second}} : Json(nullptr);
  const auto ranks = component_ranks(shape, f, g);
  j["component_ranks"] = ranks;
  j["expected_ranks"] = expected_ranks(ranks);
  Json grades = Json::object();
  for (int t = 1; t <= std::min(f, g); ++t) grades["I_" + std::to_string(t)] = ext_json(generic_grade(f, g, t));
  j["generic_grades"] = std::move(grades);
  if (empty) {
    j["profile_case"] = nullptr;
    j["profile"] = nullptr;
    j["shift"] = nullptr;
    return j;
  }
  const auto profile = radical_profile(shape, f, g);
  Json entries = Json::array();
  for (const auto& e : profile.entries) entries.push_back(e.to_string());
  j["profile_case"] = profile.case_one ? 1 : 2;
  j["profile"] = std::move(entries);
  if (const auto s = shape.detect_shift())
    j["shift"] = {{"s", s->s}, {"t", s->t}, {"gamma", s->gamma.parts()}};
  else
    j["shift"] = nullptr;
  if (f >= 1 && g >= 1) {
    j["acyclic_generic"] = predict_acyclic_generic(shape, f, g);
    j["torsion_free_generic"] = predict_torsion_free_generic(shape, f, g);
  } else {
    j["acyclic_generic"] = nullptr;
    j["torsion_free_generic"] = nullptr;
  }
  return j;
}

int emit(std::ostream& out, const Json& j, bool ok) {
  out << j.dump(2) << "\n";
  return ok ? 0 : 1;
}

int cmd_info(const Options& o, std::ostream& out) {
  require_ranks(o);
  return emit(out, info_json(parse_shape(o.shape), o.f, o.g), true);
}

int cmd_predict_acyclic(const Options& o, std::ostream& out) {
  require_ranks(o);
  const SkewShape shape = parse_shape(o.shape);
  if (shape.is_empty()) throw UsageError("shape must be nonempty");
  const int T = shape.threshold(o.f, o.g);
  Json j{{"schema", "1"}, {"shape", shape.to_string()}, {"f", o.f}, {"g", o.g}, {"T", T}};
  bool result;
  if (!o.grades.empty()) {
    const GradeOracle oracle(GradeOracle::Kind::Minors, parse_grades(o.grades));
    result = predict_acyclic(shape, o.f, oracle, T);
    j["acyclic"] = result;
  } else {
    if (o.f < 1 || o.g < 1) throw UsageError("the generic criterion needs f, g >= 1");
    result = predict_acyclic_generic(shape, o.f, o.g);
    j["acyclic_generic"] = result;
    j["acyclic_by_grades"] = predict_acyclic(shape, o.f, GradeOracle::generic_minors(o.f, o.g), T);
  }
  return emit(out, j, result || !o.assert_true);
}

int cmd_predict_torsionfree(const Options& o, std::ostream& out) {
  const SkewShape shape = parse_shape(o.shape);
  if (shape.is_empty()) throw UsageError("shape must be nonempty");
  Json j{{"schema", "1"}, {"shape", shape.to_string()}};
  bool result;
  if (o.module_rank > 0) {
    if (o.fitting_grades.empty()) throw UsageError("--module-rank needs --fitting-grades");
    const GradeOracle oracle(GradeOracle::Kind::Fitting, parse_grades(o.fitting_grades));
    result = predict_torsion_free_module(shape, o.module_rank, oracle);
    j["module_rank"] = o.module_rank;
    j["T"] = shape.threshold(0, o.module_rank);
    j["torsion_free"] = result;
  } else {
    require_ranks(o);
    const int T = shape.threshold(o.f, o.g);
    j["f"] = o.f;
    j["g"] = o.g;
    j["T"] = T;
    if (!o.grades.empty()) {
      const GradeOracle oracle(GradeOracle::Kind::Minors, parse_grades(o.grades));
      result = predict_torsion_free_presentation(shape, o.f, oracle, T);
      j["torsion_free"] = result;
    } else {
      if (o.f < 1 || o.g < 1) throw UsageError("the generic criterion needs f, g >= 1");
      result = predict_torsion_free_generic(shape, o.f, o.g);
      j["torsion_free_generic"] = result;
    }
  }
  return emit(out, j, result || !o.assert_true);
}

int cmd_build(const Options& o, std::ostream& out) {
  require_ranks(o);
  const SkewShape shape = parse_shape(o.shape);
  const SchurComplex c = build_generic(shape, o.f, o.g, parse_order(o.order));
  if (o.specialize_spec.empty()) return emit(out, to_json(c), true);
  const auto colon = o.specialize_spec.find(':');
  if (colon == std::string::npos) throw UsageError("--specialize takes rank:R, file:PATH or seed:S");
  const std::string kind = o.specialize_spec.substr(0, colon);
  const std::string arg = o.specialize_spec.substr(colon + 1);
  Json j;
  if (kind == "rank") {
    int rho;
    try {
      rho = std::stoi(arg);
    } catch (const std::exception&) {
      throw UsageError("bad rank '" + arg + "'");
    }
    if (rho < 0 || rho > std::min(o.f, o.g)) throw UsageError("rank must lie in [0, min(f, g)]");
    const ModMatrix phi = random_rank_matrix(o.g, o.f, rho, o.prime, o.seed);
    j = to_json(c, specialize(c.complex, phi, o.prime));
    j["specialization"] = {{"kind", "rank"}, {"rank", rho}, {"prime", o.prime}, {"seed", o.seed}};
  } else if (kind == "file" || kind == "seed") {
    IntMatrix phi;
    if (kind == "file") {
      phi = read_matrix(arg);
    } else {
      try {
        phi = random_full_rank_matrix(o.g, o.f, std::stoull(arg));
      } catch (const std::invalid_argument&) {
        throw UsageError("bad seed '" + arg + "'");
      }
    }
    if (phi.rows() != o.g || phi.cols() != o.f) throw UsageError("matrix must be g x f");
    j = to_json(c, specialize(c.complex, phi));
    j["specialization"] = {{"kind", kind}, {"matrix", to_json(to_sparse(phi))}};
  } else {
    throw UsageError("--specialize takes rank:R, file:PATH or seed:S");
  }
  return emit(out, j, true);
}

std::vector<IntMatrix> phis_for(const Options& o) {
  if (!o.phi_path.empty()) return {read_matrix(o.phi_path)};
  std::vector<IntMatrix> out;
  for (int t = 0; t < o.trials; ++t) out.push_back(random_full_rank_matrix(o.g, o.f, o.seed, t));
  return out;
}

int cmd_verify(const std::string& kind, const Options& o, std::ostream& out) {
  require_ranks(o);
  if (o.trials < 1) throw UsageError("--trials must be positive");
  const bool needs_shape = kind != "epsilon";
  std::optional<SkewShape> shape;
  if (needs_shape) {
    if (o.shape.empty()) throw UsageError("verify " + kind + " needs a shape");
    shape = parse_shape(o.shape);
    if (shape->is_empty()) throw UsageError("shape must be nonempty");
  }
  const bool f_lt_g = o.f < o.g;
  if ((kind == "epsilon" || kind == "tilde") && !f_lt_g) throw UsageError(kind + " needs f < g");
  std::vector<VerificationReport> reports;
  std::optional<SchurComplex> c;
  if (needs_shape) c = build_generic(*shape, o.f, o.g);
  const SchurComplex* pc = c ? &*c : nullptr;
  if (kind == "radical" || kind == "all") reports.push_back(check_radical_profile(*shape, o.f, o.g, o.prime, o.trials, o.seed, pc));
  if (kind == "homology" || kind == "all") {
    reports.push_back(check_homology(*shape, o.f, o.g, o.prime, o.trials, o.seed, pc));
    if (f_lt_g) reports.push_back(check_h0_identification(*shape, o.f, o.g, o.trials, o.seed, pc));
  }
  if (kind == "nonzero-diff" || kind == "all") reports.push_back(check_nonzero_differential(*shape, o.f, o.g, pc));
  if ((kind == "epsilon" || kind == "all") && f_lt_g) {
    for (const auto& phi : phis_for(o)) {
      if (phi.rows() != o.g || phi.cols() != o.f) throw UsageError("matrix must be g x f");
      reports.push_back(check_epsilon(phi));
    }
  }
  if ((kind == "tilde" || kind == "all") && f_lt_g) {
    for (const auto& phi : phis_for(o)) {
      if (phi.rows() != o.g || phi.cols() != o.f) throw UsageError("matrix must be g x f");
      if (rank_exact(phi) != o.f) throw UsageError("phi must have full column rank");
      reports.push_back(check_h1_tilde(*shape, phi, pc));
    }
  }
  bool ok = true;
  Json list = Json::array();
  for (const auto& r : reports) {
    ok = ok && r.pass;
    list.push_back(r.to_json());
  }
  Json j{{"schema", "1"}, {"check", kind}, {"outcome", ok ? "pass" : "fail"}, {"reports", std::move(list)}};
  return emit(out, j, ok);
}

int cmd_module(const Options& o, std::ostream& out) {
  const SkewShape shape = parse_shape(o.shape);
  if (o.presentation_path.empty()) throw UsageError("--presentation PATH is required");
  const IntMatrix phi = read_matrix(o.presentation_path);
  const ModulePresentation p = schur_module_presentation(shape, phi);
  Json j{{"schema", "1"}, {"shape", shape.to_string()}, {"f", phi.cols()}, {"g", phi.rows()},
         {"generators", p.generators}, {"relations", to_json(p.relations)}};
  return emit(out, j, true);
}

struct SweepRow {
  std::string instance;
  std::vector<std::string> issues;
};

int cmd_sweep(const Options& o, std::ostream& out) {
  if (o.max_weight < 1 || o.max_rank < 1) throw UsageError("--max-weight and --max-rank must be positive");
  const auto shapes = all_skew_shapes(o.max_weight);
  std::vector<std::vector<SweepRow>> rows(shapes.size());
  parallel_for(static_cast<int>(shapes.size()), [&](int idx) {
    const SkewShape& s = shapes[idx];
    for (int f = 1; f <= o.max_rank; ++f)
      for (int g = 1; g <= o.max_rank; ++g) {
        SweepRow row{instance_name(s, f, g), {}};
        const int T = s.threshold(f, g);
        const auto minors = GradeOracle::generic_minors(f, g);
        if (T >= 0 && predict_acyclic(s, f, minors, T) != predict_acyclic_generic(s, f, g))
          row.issues.push_back("acyclicity criteria disagree");
        const bool tf_grades = T >= 0 && predict_torsion_free_presentation(s, f, minors, T);
        if (tf_grades != predict_torsion_free_generic(s, f, g)) row.issues.push_back("torsion-freeness criteria disagree");
        const int r = g - f;
        const int l1 = s.kl_sequences().second.at(0);
        if (r >= 1 && l1 <= r &&
            predict_torsion_free_module(s, r, GradeOracle::generic_fitting(f, g)) != predict_torsion_free_generic(s, f, g))
          row.issues.push_back("module criterion disagrees");
        const auto profile = radical_profile(s, f, g);
        if (profile.case_one && T >= 0) {
          const auto bounds = component_bounds(s, f, g);
          bool witness = false;
          int last = std::numeric_limits<int>::max();
          bool monotone = true;
          for (int n = 1; n <= s.size(); ++n) {
            const auto& e = profile.at(n);
            if (e.kind != ProfileEntry::Kind::MinorSize) continue;
            if (generic_grade(f, g, e.t) < ExtInt(n)) witness = true;
            if (e.t > last) monotone = false;
            last = e.t;
          }
          const bool acyclic = predict_acyclic_generic(s, f, g);
          if (!acyclic && !witness) row.issues.push_back("no grade violation witnesses non-acyclicity");
          if (acyclic && !monotone) row.issues.push_back("profile not decreasing on an acyclic complex");
          const auto r_n = expected_ranks(component_ranks(s, f, g));
          for (int n = 1; n <= s.size(); ++n) {
            const bool zero = r_n[n - 1] == 0;
            const bool outside = n <= bounds->first || n > bounds->second;
            if (zero != outside) row.issues.push_back("r_" + std::to_string(n) + " vanishing does not match bounds");
          }
        }
        rows[idx].push_back(std::move(row));
      }
  });
  int instances = 0, flagged = 0;
  Json issues = Json::array();
  for (const auto& per_shape : rows)
    for (const auto& row : per_shape) {
      ++instances;
      flagged += !row.issues.empty();
      for (const auto& issue : row.issues) issues.push_back({{"instance", row.instance}, {"issue", issue}});
    }
  Json j{{"schema", "1"}, {"max_weight", o.max_weight}, {"max_rank", o.max_rank}, {"instances", instances},
         {"disagreements", flagged}, {"issues", issues}};
  return emit(out, j, issues.empty());
}

void add_ranks(CLI::App* app, Options& o) {
  app->add_option("--f", o.f, "rank of F (source)");
  app->add_option("--g", o.g, "rank of G (target)");
}

void add_random(CLI::App* app, Options& o) {
  app->add_option("--prime", o.prime, "prime for modular checks")
      ->capture_default_str()
      ->check(CLI::Validator(
          [](const std::string& text) -> std::string {
            const std::uint64_t p = std::stoull(text);
            if (p < 3 || p >= (std::uint64_t{1} << 32)) return "prime out of range [3, 2^32)";
            for (std::uint64_t d = 2; d * d <= p; ++d)
              if (p % d == 0) return text + " is not prime";
            return {};
          },
          "PRIME"));
  app->add_option("--trials", o.trials, "random trials per stratum")->capture_default_str();
  app->add_option("--seed", o.seed, "seed")->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Schur complexes of maps of free modules: thresholds, acyclicity and torsion-freeness"};
  app.name("skw");
  app.require_subcommand(1);
  Options o;
  std::string verify_kind;
  std::string shape_help = "shape such as 4,3,2/3,1";

  auto* info = app.add_subcommand("info", "thresholds, bounds, profile and predictions as JSON");
  info->add_option("shape", o.shape, shape_help)->required();
  add_ranks(info, o);

  auto* predict = app.add_subcommand("predict", "acyclicity or torsion-freeness predicates");
  predict->require_subcommand(1);
  auto* pa = predict->add_subcommand("acyclic", "acyclicity of the Schur complex");
  auto* pt = predict->add_subcommand("torsionfree", "torsion-freeness of the Schur module");
  for (auto* sub : {pa, pt}) {
    sub->add_option("shape", o.shape, shape_help)->required();
    add_ranks(sub, o);
    sub->add_option("--grades", o.grades, "grades of I_t as t=v,t=v (v may be inf)");
    sub->add_flag("--assert", o.assert_true, "exit 1 when the predicate is false");
  }
  pt->add_option("--module-rank", o.module_rank, "rank r of a module of projective dimension <= 1");
  pt->add_option("--fitting-grades", o.fitting_grades, "grades of Fitt_j as j=v,j=v");

  auto* build = app.add_subcommand("build", "emit the generic or a specialized complex as JSON");
  build->add_option("shape", o.shape, shape_help)->required();
  add_ranks(build, o);
  build->add_option("--order", o.order, "label order: yx (y before x) or xy")->capture_default_str();
  build->add_option("--specialize", o.specialize_spec, "rank:R (random rank-R mod p), file:PATH or seed:S");
  add_random(build, o);

  auto* verify = app.add_subcommand("verify", "run oracle checks");
  verify->add_option("kind", verify_kind, "radical|homology|epsilon|tilde|nonzero-diff|all")
      ->required()
      ->check(CLI::IsMember({"radical", "homology", "epsilon", "tilde", "nonzero-diff", "all"}));
  verify->add_option("shape", o.shape, shape_help);
  add_ranks(verify, o);
  add_random(verify, o);
  verify->add_option("--phi", o.phi_path, "matrix JSON for epsilon/tilde instead of random matrices");

  auto* module = app.add_subcommand("module", "Schur modules of presented modules");
  module->require_subcommand(1);
  auto* pres = module->add_subcommand("schur-presentation", "presentation of L(coker phi)");
  pres->add_option("shape", o.shape, shape_help)->required();
  pres->add_option("--presentation", o.presentation_path, "matrix JSON of phi (g x f)")->required();

  auto* sweep = app.add_subcommand("sweep", "cross-check predicates over all small shapes");
  sweep->add_option("--max-weight", o.max_weight, "largest |lambda|")->capture_default_str();
  sweep->add_option("--max-rank", o.max_rank, "largest f and g")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (info->parsed()) return cmd_info(o, out);
    if (pa->parsed()) return cmd_predict_acyclic(o, out);
    if (pt->parsed()) return cmd_predict_torsionfree(o, out);
    if (build->parsed()) return cmd_build(o, out);
    if (verify->parsed()) return cmd_verify(verify_kind, o, out);
    if (pres->parsed()) return cmd_module(o, out);
    if (sweep->parsed()) return cmd_sweep(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const HypothesisViolatedError& e) {
    err << "hypothesis violated: " << e.what() << "\n";
    return 2;
  } catch (const MissingGradeError& e) {
    err << "missing grade: " << e.what() << "\n";
    return 2;
  } catch (const DimensionError& e) {
    err << "dimension error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace skw::cli
