// Copyright 2026 The scaledim Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command line front end: generate, dims, pack, predict, bounds, simulate
// and verify-all. Library errors map to exit codes 10-16, a failed
// verification exits 1 and a usage error exits 2.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "scaledim/bounds.h"
#include "scaledim/class_io.h"
#include "scaledim/dims.h"
#include "scaledim/error.h"
#include "scaledim/generators.h"
#include "scaledim/guard.h"
#include "scaledim/packing.h"
#include "scaledim/parallel.h"
#include "scaledim/predict.h"
#include "scaledim/rng.h"
#include "scaledim/simulate.h"
#include "scaledim/verify.h"

namespace scaledim {
namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

std::string Fixed(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

// num,den,decimal
std::string RationalColumns(const Rational& r) {
  return std::to_string(r.num()) + "," + std::to_string(r.den()) + "," +
         ToDecimal(r);
}

std::string BigColumns(const BigRational& r) {
  std::ostringstream ss;
  ss << numerator(r) << "," << denominator(r) << "," << ToDecimal(r);
  return ss.str();
}

Rational ParseQ(const std::string& text, const char* what) {
  try {
    return Rational::Parse(text);
  } catch (const Error& e) {
    Fail(ErrorCode::kParse, std::string(what) + ": " + e.what());
  }
}

std::vector<Rational> ParseQList(const std::string& text, const char* what) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(ParseQ(item, what));
  }
  if (out.empty()) Fail(ErrorCode::kParse, std::string(what) + " is empty");
  return out;
}

void Emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    WriteFile(out_path, text);
  }
}

std::string JoinPoints(const std::vector<PointIndex>& pts) {
  std::string s;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i > 0) s += ";";
    s += std::to_string(pts[i]);
  }
  return s;
}

// ---- generate ----
struct GenerateArgs {
  std::string name;
  std::string params;
  std::uint64_t seed = 0;
  std::string out;
};

int RunGenerate(const GenerateArgs& a) {
  GeneratorSpec spec;
  spec.name = a.name;
  spec.params = ParseParams(a.params);
  spec.seed = a.seed;
  Emit(a.out, ClassToJson(Generate(spec)));
  return 0;
}

// ---- dims ----
struct DimsArgs {
  std::string klass;
  std::vector<std::string> kinds;
  std::string gamma;
  std::string r = "1/2";
  std::string out;
};

int RunDims(const DimsArgs& a) {
  const FunctionClass f = LoadClass(a.klass);
  const std::vector<Rational> gammas = ParseQList(a.gamma, "gamma");
  const Rational r = ParseQ(a.r, "r");
  std::vector<std::string> kinds = a.kinds;
  if (kinds.empty() || (kinds.size() == 1 && kinds[0] == "all")) {
    kinds = {"vcdim_star", "fatv", "fat", "sfat"};
  }
  std::string csv = "kind,gamma,size,witness_points,witness_thresholds\n";
  for (const std::string& name : kinds) {
    const DimensionKind kind = ParseDimensionKind(name);
    for (const Rational& g : gammas) {
      const DimensionResult d = ComputeDimension(kind, f, g, r);
      std::string th;
      if (kind == DimensionKind::kSfat) {
        for (std::size_t i = 0; i < d.witness.levels.size(); ++i) {
          if (i > 0) th += ";";
          th += d.witness.levels[i].first.str() + ":" +
                d.witness.levels[i].second.str();
        }
      } else if (kind == DimensionKind::kVcdimStar) {
        th = r.str();
      } else {
        for (std::size_t i = 0; i < d.witness.thresholds.size(); ++i) {
          if (i > 0) th += ";";
          th += d.witness.thresholds[i].str();
        }
      }
      csv += std::string(DimensionKindName(kind)) + "," + g.str() + "," +
             std::to_string(d.size) + "," + JoinPoints(d.witness.points) +
             "," + th + "\n";
    }
  }
  Emit(a.out, csv);
  return 0;
}

// ---- pack ----
struct PackArgs {
  std::string matrix;
  std::string epsilon;
  bool exact = false;
  bool greedy = false;
  bool cover = false;
  std::string out;
};

int RunPack(const PackArgs& a) {
  const ValueMatrix m = LoadMatrix(a.matrix);
  const Rational eps = ParseQ(a.epsilon, "epsilon");
  std::vector<PackingResult> results;
  const bool any = a.exact || a.greedy || a.cover;
  if (a.exact || !any) results.push_back(PackingExact(m, eps));
  if (a.greedy) results.push_back(PackingGreedy(m, eps));
  if (a.cover) results.push_back(CoverProperExact(m, eps));
  std::string csv = "method,epsilon,size,witness\n";
  for (const PackingResult& r : results) {
    csv += std::string(PackingMethodName(r.method)) + "," + eps.str() + "," +
           std::to_string(r.size) + "," + JoinPoints(r.witness) + "\n";
  }
  Emit(a.out, csv);
  return 0;
}

// ---- predict ----
struct PredictArgs {
  std::string klass;
  std::string gamma;
  std::string tau;
  std::string prefix;
  std::size_t query = 0;
  bool transcript = false;
  std::string out;
};

int RunPredict(const PredictArgs& a) {
  const FunctionClass f = LoadClass(a.klass);
  const AggregatorConfig cfg{ParseQ(a.gamma, "gamma"), ParseQ(a.tau, "tau")};
  cfg.Validate();
  const LabeledSample prefix =
      a.prefix.empty() ? LabeledSample{} : LoadPrefix(a.prefix);
  const AggregateOutcome o = AggregatePredict(f, cfg, prefix, a.query);
  std::string csv = "query,prediction_num,prediction_den,prediction\n" +
                    std::to_string(a.query) + "," +
                    RationalColumns(o.prediction) + "\n";
  if (a.transcript) {
    csv += "\nround,query,prediction_num,prediction_den,prediction,truth_num,"
           "truth_den,truth,abs_error_num,abs_error_den,abs_error,"
           "threshold_mistakes\n";
    for (const TranscriptRow& row : RunTranscript(f, cfg, prefix)) {
      int mistakes = 0;
      for (int m : row.mistakes) mistakes += m;
      csv += std::to_string(row.round) + "," + std::to_string(row.query) +
             "," + RationalColumns(row.prediction) + "," +
             RationalColumns(row.truth) + "," +
             RationalColumns(row.abs_error) + "," + std::to_string(mistakes) +
             "\n";
    }
  }
  Emit(a.out, csv);
  return 0;
}

// ---- bounds ----
struct BoundsArgs {
  std::string formula;
  std::string params;
  std::string out;
};

class Params {
 public:
  explicit Params(const std::string& text) : p_(ParseParams(text)) {}
  std::string Get(const std::string& key) const {
    auto it = p_.find(key);
    if (it == p_.end()) {
      Fail(ErrorCode::kInvalidArgument, "missing parameter '" + key + "'");
    }
    return it->second;
  }
  bool Has(const std::string& key) const { return p_.count(key) > 0; }
  Rational Q(const std::string& key) const {
    return ParseQ(Get(key), key.c_str());
  }
  double D(const std::string& key) const { return Q(key).to_double(); }
  std::int64_t I(const std::string& key) const {
    const Rational v = Q(key);
    if (!v.is_integer()) {
      Fail(ErrorCode::kInvalidArgument, "parameter '" + key + "' must be an integer");
    }
    return v.num();
  }

 private:
  std::map<std::string, std::string> p_;
};

std::string LogRow(const std::string& name, const LogNumber& v) {
  return name + "_ln," + Fixed(v.log()) + "\n" + name + "," + Fixed(v.value()) +
         "\n";
}

int RunBounds(const BoundsArgs& a) {
  const Params p(a.params);
  const std::string& f = a.formula;
  std::string csv = "quantity,value\n";
  if (f == "hoeffding") {
    csv += "hoeffding," +
           Fixed(HoeffdingTail(p.D("eps"), p.I("m"), p.D("a"), p.D("b"))) + "\n";
  } else if (f == "prediction_corrected") {
    std::optional<Rational> tau;
    if (p.Has("tau")) tau = p.Q("tau");
    const Rational v = PredictionBoundCorrected(p.I("d"), p.I("m"), p.Q("gamma"), tau);
    csv += "bound," + v.str() + "\nbound_decimal," + ToDecimal(v) + "\n";
  } else if (f == "prediction_original") {
    const Rational v = PredictionBoundOriginal(p.I("d"), p.I("m"), p.Q("gamma"));
    csv += "bound," + v.str() + "\nbound_decimal," + ToDecimal(v) + "\n";
  } else if (f == "m_pred") {
    const PredictionSampleSize s = MPred(p.I("d"), p.Q("eps"), p.Q("alpha"));
    csv += "printed," + std::to_string(s.printed) + "\ncorrected," +
           std::to_string(s.corrected) + "\ndegenerate," +
           (s.degenerate ? "true" : "false") + "\n";
  } else if (f == "pack_fatv") {
    csv += LogRow("bound", PackBoundFatV(p.Q("eps"), p.Q("alpha"), p.I("b"), p.I("d")));
  } else if (f == "pack_fat") {
    const PackBoundFatResult r = PackBoundFat(p.Q("eps"), p.I("b"), p.I("m"), p.I("d"));
    csv += "exact," + r.exact.str() + "\n" + LogRow("exact", r.exact_log) +
           LogRow("loose", r.loose);
  } else if (f == "sauer_y") {
    csv += "y," + SauerY(p.I("m"), p.I("d"), p.I("b")).str() + "\n";
  } else if (f == "inverse_sample_size") {
    csv += "m," + std::to_string(InverseSampleSize(p.D("y1"), p.D("y2"), p.D("y3"),
                                                   p.D("y4"), p.D("delta"))) + "\n";
  } else if (f == "gc_sample_fat" || f == "gc_sample_fatv") {
    const GcSampleSize s =
        f == "gc_sample_fat"
            ? GcSampleFat(p.Q("eps"), p.Q("delta"), p.I("d"), p.Q("kappa"))
            : GcSampleFatV(p.Q("eps"), p.Q("delta"), p.I("d"), p.Q("kappa"));
    csv += "alpha," + s.alpha.str() + "\nm," + std::to_string(s.m) + "\n";
    if (f == "gc_sample_fat") {
      csv += "side_condition," + std::to_string(s.side_condition) + "\n";
    }
  } else if (f == "cover_learner") {
    const double c = p.Has("c") ? p.D("c") : kDefaultCoverConstant;
    const CoverLearnerPlan s =
        PlanCoverLearner(p.Q("eps"), p.Q("delta"), p.Q("kappa"), p.I("d"), c);
    csv += "alpha," + s.alpha.str() + "\ngamma," + s.gamma.str() + "\nk," +
           std::to_string(s.k) + "\nn1," + std::to_string(s.n1) + "\nn2," +
           std::to_string(s.n2) + "\ntotal," + std::to_string(s.total) +
           "\ncover_radius," + s.cover_radius.str() + "\n";
  } else {
    Fail(ErrorCode::kInvalidArgument,
         "unknown formula '" + f +
             "' (hoeffding, prediction_corrected, prediction_original, m_pred, "
             "pack_fatv, pack_fat, sauer_y, inverse_sample_size, "
             "gc_sample_fat, gc_sample_fatv, cover_learner)");
  }
  Emit(a.out, csv);
  return 0;
}

// ---- simulate ----
struct SimulateArgs {
  std::string klass;
  std::string dist;
  std::uint64_t seed = 0;
  std::uint64_t trials = 10000;
  std::string mode = "auto";
  std::size_t m = 1;
  std::string gamma = "1/10";
  std::string tau = "1/20";
  std::string predictor = "aggregator";
  std::size_t depth = 8;
  std::string eps = "1/5";
  // agnostic
  std::string joint;
  std::string learner = "cover";
  std::string delta = "1/2";
  std::string kappa = "2/5";
  std::string c = "8";
  std::int64_t dim = -1;
  std::string out;
};

DiscreteDistribution DistributionFor(const SimulateArgs& a, std::size_t n) {
  if (a.dist.empty()) return DiscreteDistribution::Uniform(n);
  DiscreteDistribution d = LoadDistribution(a.dist);
  Require(d.size() == n, "distribution size must match the class domain");
  return d;
}

// Resolves auto mode, warning when it falls back to Monte Carlo.
bool UseExhaustive(const std::string& mode, std::uint64_t sequences) {
  if (mode == "exhaustive") return true;
  if (mode == "mc") return false;
  Require(mode == "auto", "mode must be exhaustive, mc or auto");
  if (sequences <= guard::kExhaustiveMaxSequences) return true;
  std::cerr << "warning: " << sequences
            << " sequences exceed the exhaustive limit; using Monte Carlo\n";
  return false;
}

int RunGame(const SimulateArgs& a) {
  const FunctionClass f = LoadClass(a.klass);
  const DiscreteDistribution d = DistributionFor(a, f.num_points());
  Predictor pred;
  if (a.predictor == "aggregator") {
    pred = AggregatorPredictor(
        f, AggregatorConfig{ParseQ(a.gamma, "gamma"), ParseQ(a.tau, "tau")});
  } else if (a.predictor == "binary-search") {
    pred = BinarySearchPredictor(f, ParseQ(a.gamma, "gamma"), a.depth);
  } else {
    Fail(ErrorCode::kInvalidArgument, "predictor must be aggregator or binary-search");
  }
  const bool exhaustive =
      UseExhaustive(a.mode, guard::SaturatingPow(f.num_points(), a.m));
  std::string csv;
  if (exhaustive) {
    const GameResult r = GameExhaustive(f, d, a.m, pred);
    csv = "target_index,expected_error_num,expected_error_den,expected_error\n";
    for (const TargetError& e : r.per_target) {
      csv += std::to_string(e.target) + "," + BigColumns(e.exact_error) + "\n";
    }
  } else {
    const GameResult r = GameMc(f, d, a.m, pred, a.trials, a.seed);
    csv = "target_index,estimate,stderr\n";
    for (const TargetError& e : r.per_target) {
      csv += std::to_string(e.target) + "," + Fixed(e.estimate) + "," +
             Fixed(e.std_error) + "\n";
    }
  }
  Emit(a.out, csv);
  return 0;
}

int RunGc(const SimulateArgs& a) {
  const FunctionClass f = LoadClass(a.klass);
  const DiscreteDistribution d = DistributionFor(a, f.num_points());
  const std::vector<Rational> eps = ParseQList(a.eps, "eps");
  const bool exhaustive =
      UseExhaustive(a.mode, guard::SaturatingPow(f.num_points(), a.m));
  const GcDeviationResult r =
      exhaustive ? GcDeviationExhaustive(f, d, a.m, eps)
                 : GcDeviationMc(f, d, a.m, eps, a.trials, a.seed);
  std::string csv =
      "epsilon_num,epsilon_den,epsilon,exceed_num,exceed_den,exceed,stderr,"
      "max_deviation,mean_deviation\n";
  for (std::size_t i = 0; i < eps.size(); ++i) {
    csv += RationalColumns(eps[i]) + ",";
    if (exhaustive) {
      csv += BigColumns(r.exceed_exact[i]);
    } else {
      csv += ",," + Fixed(r.exceed_estimate[i]);
    }
    csv += "," + Fixed(r.exceed_std_error[i]) + "," +
           ToDecimal(r.max_deviation) + "," + Fixed(r.mean_deviation) + "\n";
  }
  Emit(a.out, csv);
  return 0;
}

int RunAgnostic(const SimulateArgs& a) {
  const FunctionClass f = LoadClass(a.klass);
  Require(!a.joint.empty(), "--joint is required");
  const JointSample p = LoadJointSample(a.joint);
  const Rational eps = ParseQ(a.eps, "eps");
  const Rational delta = ParseQ(a.delta, "delta");
  const Rational kappa = ParseQ(a.kappa, "kappa");
  Rng rng = Rng::ForTrial(a.seed, 0, 0);
  std::vector<Rational> h;
  std::int64_t sample_size = 0;
  if (a.learner == "cover") {
    const CoverLearnerPlan plan0 = PlanCoverLearner(eps, delta, kappa, 0);
    const std::int64_t d =
        a.dim >= 0 ? a.dim
                   : static_cast<std::int64_t>(
                         Fat(f, eps - Rational(13) * plan0.gamma).size);
    const CoverLearnerPlan plan =
        PlanCoverLearner(eps, delta, kappa, d, ParseQ(a.c, "c").to_double());
    h = AgnosticLearnSampled(f, p, plan, rng).hypothesis;
    sample_size = plan.total;
  } else if (a.learner == "erm") {
    const Rational scale = (Rational(1, 4) - kappa) * eps;
    const std::int64_t d =
        a.dim >= 0 ? a.dim : static_cast<std::int64_t>(Fat(f, scale).size);
    sample_size = GcSampleFat(eps, delta, d, kappa).m;
    const auto counts = p.SampleCounts(sample_size, rng);
    h = f.values().row_values(ErmLearnerCounts(f, p, counts));
  } else {
    Fail(ErrorCode::kInvalidArgument, "learner must be cover or erm");
  }
  const BigRational er = EvalError(h, p);
  const InfErrorResult inf = InfError(f, p);
  std::string csv = "point,hypothesis_num,hypothesis_den,hypothesis\n";
  for (std::size_t x = 0; x < h.size(); ++x) {
    csv += std::to_string(x) + "," + RationalColumns(h[x]) + "\n";
  }
  csv += "\nquantity,num,den,value\nerror," + BigColumns(er) +
         "\ninf_class_error," + BigColumns(inf.value) + "\nexcess," +
         BigColumns(er - inf.value) + "\nsample_size," +
         std::to_string(sample_size) + ",1," + std::to_string(sample_size) + "\n";
  Emit(a.out, csv);
  return 0;
}

// ---- verify-all ----
struct VerifyArgs {
  std::uint64_t seed = 7;
  std::string out;
  std::vector<int> only;
};

int RunVerifyAll(const VerifyArgs& a) {
  const std::vector<CriterionResult> results = RunAcceptance(a.seed, a.only);
  std::cout << ResultsTable(results);
  if (!a.out.empty()) {
    std::filesystem::create_directories(a.out);
    WriteFile(a.out + "/acceptance.csv", ResultsCsv(results));
    WriteFile(a.out + "/acceptance.json", ResultsJson(results, a.seed));
  }
  for (const CriterionResult& r : results) {
    if (!r.pass) return kExitVerifyFailed;
  }
  return 0;
}

int Main(int argc, char** argv) {
  CLI::App app{"Exact and Monte Carlo tools for scale-sensitive dimensions"};
  app.require_subcommand(1);
  app.fallthrough();
  std::size_t jobs = 1;
  app.add_option("--jobs", jobs, "Worker thread cap")->check(CLI::Range(1, 256));

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "Build a named function class");
  g->add_option("--name", gen.name, "binary_cube, two_value, profile, "
                "gc_counterexample, band, random")->required();
  g->add_option("--params", gen.params, "key=value,...");
  g->add_option("--seed", gen.seed);
  g->add_option("--out", gen.out, "Output JSON file (stdout by default)");

  DimsArgs dims;
  auto* d = app.add_subcommand("dims", "Combinatorial dimensions with witnesses");
  d->add_option("--class", dims.klass)->required();
  d->add_option("--kind", dims.kinds, "vcdim_star, fatv, fat, sfat or all")
      ->delimiter(',');
  d->add_option("--gamma", dims.gamma, "Scale(s), comma separated")->required();
  d->add_option("--r", dims.r, "Threshold for vcdim_star");
  d->add_option("--out", dims.out);

  PackArgs pack;
  auto* pk = app.add_subcommand("pack", "Packing and proper cover numbers");
  pk->add_option("--matrix", pack.matrix)->required();
  pk->add_option("--epsilon", pack.epsilon)->required();
  pk->add_flag("--exact", pack.exact);
  pk->add_flag("--greedy", pack.greedy);
  pk->add_flag("--cover", pack.cover);
  pk->add_option("--out", pack.out);

  PredictArgs pred;
  auto* pr = app.add_subcommand("predict", "Aggregated threshold prediction");
  pr->add_option("--class", pred.klass)->required();
  pr->add_option("--gamma", pred.gamma)->required();
  pr->add_option("--tau", pred.tau)->required();
  pr->add_option("--prefix", pred.prefix, "Labelled prefix JSON");
  pr->add_option("--query", pred.query)->required();
  pr->add_flag("--transcript", pred.transcript,
               "Also replay the prefix round by round");
  pr->add_option("--out", pred.out);

  BoundsArgs bounds;
  auto* b = app.add_subcommand("bounds", "Evaluate explicit bound formulas");
  b->add_option("--formula", bounds.formula)->required();
  b->add_option("--params", bounds.params)->required();
  b->add_option("--out", bounds.out);

  SimulateArgs sim;
  auto* s = app.add_subcommand("simulate", "Games, deviations and learners");
  s->require_subcommand(1);
  auto common = [&](CLI::App* c) {
    c->add_option("--class", sim.klass)->required();
    c->add_option("--seed", sim.seed);
    c->add_option("--trials", sim.trials)->check(CLI::PositiveNumber);
    c->add_option("--mode", sim.mode, "exhaustive, mc or auto");
    c->add_option("--out", sim.out);
  };
  auto* sg = s->add_subcommand("game", "Expected last-round prediction error");
  common(sg);
  sg->add_option("--dist", sim.dist);
  sg->add_option("--m", sim.m)->required()->check(CLI::PositiveNumber);
  sg->add_option("--gamma", sim.gamma);
  sg->add_option("--tau", sim.tau);
  sg->add_option("--predictor", sim.predictor, "aggregator or binary-search");
  sg->add_option("--depth", sim.depth);
  auto* sc = s->add_subcommand("gc", "Uniform deviation of empirical means");
  common(sc);
  sc->add_option("--dist", sim.dist);
  sc->add_option("--m", sim.m)->required()->check(CLI::PositiveNumber);
  sc->add_option("--eps", sim.eps, "Comma separated");
  auto* sa = s->add_subcommand("agnostic", "Learn from a joint distribution");
  common(sa);
  sa->add_option("--joint", sim.joint)->required();
  sa->add_option("--learner", sim.learner, "cover or erm");
  sa->add_option("--eps", sim.eps);
  sa->add_option("--delta", sim.delta);
  sa->add_option("--kappa", sim.kappa);
  sa->add_option("--c", sim.c, "Cover learner sample constant");
  sa->add_option("--dim", sim.dim, "Dimension override");

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify-all", "Run the acceptance suite");
  v->add_option("--seed", ver.seed);
  v->add_option("--out", ver.out, "Directory for result files");
  v->add_option("--only", ver.only, "Criterion ids")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  SetMaxJobs(jobs);
  try {
    if (*g) return RunGenerate(gen);
    if (*d) return RunDims(dims);
    if (*pk) return RunPack(pack);
    if (*pr) return RunPredict(pred);
    if (*b) return RunBounds(bounds);
    if (*sg) return RunGame(sim);
    if (*sc) return RunGc(sim);
    if (*sa) return RunAgnostic(sim);
    if (*v) return RunVerifyAll(ver);
  } catch (const Error& e) {
    std::cerr << "error (" << ErrorCodeName(e.code()) << "): " << e.what()
              << "\n";
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(ErrorCode::kIo);
  }
  return kExitUsage;
}

}  // namespace
}  // namespace scaledim

int main(int argc, char** argv) { return scaledim::Main(argc, argv); }
