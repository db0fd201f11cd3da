#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "ineqlab/errors.hpp"
#include "ineqlab/extremal.hpp"
#include "ineqlab/forms.hpp"
#include "ineqlab/io.hpp"
#include "ineqlab/oracle.hpp"
#include "ineqlab/specfun.hpp"
#include "profile.hpp"
#include "selftest.hpp"

namespace ineqlab::cli {

namespace {

using nlohmann::json;

std::string g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

double to_double(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw ParseError("not a number: '" + s + "'");
  }
  if (used != s.size()) throw ParseError("not a number: '" + s + "'");
  return v;
}

int to_int(const std::string& s) {
  const double v = to_double(s);
  if (v != std::floor(v)) throw ParseError("not an integer: '" + s + "'");
  return static_cast<int>(v);
}

// "lo:hi"
std::pair<double, double> parse_pair(const std::string& s) {
  const auto parts = split(s, ':');
  if (parts.size() != 2) throw ParseError("expected lo:hi, got '" + s + "'");
  const double lo = to_double(parts[0]);
  const double hi = to_double(parts[1]);
  if (!(lo > 0.0) || !(lo < hi)) throw ParseError("range needs 0 < lo < hi, got '" + s + "'");
  return {lo, hi};
}

// "a,b,c" or "lo:hi:count" (linear).
std::vector<double> parse_real_list(const std::string& s) {
  if (s.find(':') != std::string::npos) {
    const auto parts = split(s, ':');
    if (parts.size() != 3) throw ParseError("expected lo:hi:count, got '" + s + "'");
    const double lo = to_double(parts[0]);
    const double hi = to_double(parts[1]);
    const int count = to_int(parts[2]);
    if (count < 1 || hi < lo) throw ParseError("bad range '" + s + "'");
    std::vector<double> out;
    for (int i = 0; i < count; ++i) out.push_back(count == 1 ? lo : lo + (hi - lo) * i / (count - 1));
    return out;
  }
  std::vector<double> out;
  for (const auto& part : split(s, ',')) out.push_back(to_double(part));
  if (out.empty()) throw ParseError("empty list");
  return out;
}

// "a,b,c" or "a:b" (inclusive).
std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  if (s.find(':') != std::string::npos) {
    const auto parts = split(s, ':');
    if (parts.size() != 2) throw ParseError("expected a:b, got '" + s + "'");
    const int a = to_int(parts[0]);
    const int b = to_int(parts[1]);
    if (b < a) throw ParseError("bad range '" + s + "'");
    for (int i = a; i <= b; ++i) out.push_back(i);
    return out;
  }
  for (const auto& part : split(s, ',')) out.push_back(to_int(part));
  if (out.empty()) throw ParseError("empty list");
  return out;
}

std::vector<double> parse_t_grid(const std::string& s) {
  const auto parts = split(s, ':');
  if (parts.size() != 3) throw ParseError("t grid must be lo:hi:count, got '" + s + "'");
  const double lo = to_double(parts[0]);
  const double hi = to_double(parts[1]);
  const int count = to_int(parts[2]);
  if (!(lo > 0.0) || hi < lo || count < 1) throw ParseError("bad t grid '" + s + "'");
  return log_grid(lo, hi, count);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
  if (!out) throw Error("write failed for '" + path + "'");
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text << '\n';
  } else {
    write_file(out_path, text + "\n");
  }
}

struct ParamOpts {
  std::optional<double> lambda;
  std::optional<double> alpha;
  int n = 0;

  void add(CLI::App* cmd) {
    auto* l = cmd->add_option("--lambda", lambda, "growth exponent lambda");
    auto* a = cmd->add_option("--alpha", alpha, "form-2 exponent alpha = lambda/2");
    l->excludes(a);
    cmd->add_option("--n", n, "integer n >= 2")->required();
  }

  ParamSet get() const {
    if (lambda) return ParamSet::from_lambda(*lambda, n);
    if (alpha) return ParamSet::from_alpha(*alpha, n);
    throw DomainError("one of --lambda or --alpha is required");
  }
};

struct DiscOpts {
  int nodes = 160;
  std::string range = "1e-3:1e3";
  int constraints = 0;
  std::string constraint_range;
  std::string mode = "guaranteed";
  int dense_factor = 4;

  void add(CLI::App* cmd) {
    cmd->add_option("--nodes", nodes, "LP node count m (>= 2)")->capture_default_str();
    cmd->add_option("--range", range, "node range lo:hi (log-spaced)")->capture_default_str();
    cmd->add_option("--constraints", constraints, "constraint row count (default 12 m)");
    cmd->add_option("--constraint-range", constraint_range, "constraint range lo:hi (default lo:1e4 hi)");
    cmd->add_option("--mode", mode, "sampled or guaranteed")->capture_default_str();
    cmd->add_option("--dense-factor", dense_factor, "certificate grid density")->capture_default_str();
  }

  extremal::DiscretizationSpec get() const {
    extremal::DiscretizationSpec d;
    d.node_count = nodes;
    std::tie(d.t_min, d.t_max) = parse_pair(range);
    d.constraint_count = constraints;
    if (!constraint_range.empty()) std::tie(d.constraint_lo, d.constraint_hi) = parse_pair(constraint_range);
    d.mode = extremal::mode_from_string(mode);
    d.dense_factor = dense_factor;
    d.validate();
    return d;
  }
};

// ---- selftest ---------------------------------------------------------------

struct SelftestOpts {
  std::string only;
  bool list = false;
};

int cmd_selftest(const SelftestOpts& o, const Profile& profile) {
  if (o.list) {
    for (const auto& c : selftest_registry()) std::printf("%-18s %s\n", c.anchor.c_str(), c.description.c_str());
    return kExitOk;
  }
  if (!o.only.empty()) {
    const auto& reg = selftest_registry();
    if (std::none_of(reg.begin(), reg.end(), [&](const auto& c) { return c.anchor == o.only; })) {
      std::fprintf(stderr, "unknown anchor '%s' (see selftest --list)\n", o.only.c_str());
      return kExitUsage;
    }
  }
  const auto results = run_selftest(profile, o.only);
  std::printf("%-18s %-4s %12s %12s  %s\n", "anchor", "", "error", "tol", "check");
  std::vector<std::string> failed;
  for (const auto& r : results) {
    std::printf("%-18s %-4s %12.3e %12.3e  %s: %s\n", r.anchor.c_str(), r.passed ? "PASS" : "FAIL", r.error, r.tol,
                r.description.c_str(), r.detail.c_str());
    if (!r.passed) failed.push_back(r.anchor);
  }
  std::printf("%zu/%zu checks passed (profile %s)\n", results.size() - failed.size(), results.size(),
              profile.name.c_str());
  if (failed.empty()) return kExitOk;
  std::string names;
  for (const auto& f : failed) names += (names.empty() ? "" : ", ") + f;
  std::fprintf(stderr, "failing anchors: %s\n", names.c_str());
  return kExitCandidate;
}

// ---- check ------------------------------------------------------------------

struct CheckOpts {
  std::string file;
  std::string form;
  ParamOpts params;
  std::string t_grid;
  std::string out;
};

int cmd_check(const CheckOpts& o, const Profile& profile) {
  const MonotoneFn f = parse_monotone_fn(read_file(o.file));
  if (!o.form.empty() && form_from_string(o.form) != f.form()) {
    throw ParseError("file holds form " + std::string(to_string(f.form())) + ", --form says " + o.form);
  }
  const ParamSet p = o.params.get();
  const auto grid = o.t_grid.empty() ? forms::default_t_grid() : parse_t_grid(o.t_grid);
  const forms::Verdict v = forms::check(f, p, grid, profile.tol(1e-6));
  emit(o.out, json(v).dump(2));
  std::fprintf(stderr, "worst ratio %.9g at t = %.4g, target %.9g, bound %.9g, margin %.3g\n",
               v.worst_constraint_ratio, v.worst_t, v.target_value, v.bound, v.margin);
  if (!v.feasible()) return kExitInfeasible;
  return v.conjecture_consistent() ? kExitOk : kExitCandidate;
}

// ---- bounds -----------------------------------------------------------------

struct BoundsOpts {
  std::string lambda;
  std::string n;
  std::string format = "csv";
};

int cmd_bounds(const BoundsOpts& o) {
  const auto lambdas = parse_real_list(o.lambda);
  const auto ns = parse_int_list(o.n);
  if (o.format != "csv" && o.format != "json") throw ParseError("format must be csv or json");
  json rows = json::array();
  if (o.format == "csv") std::printf("lambda,n,R1,est_S0,est2,est_S0_over_R1,est2_over_R1\n");
  for (double lambda : lambdas) {
    for (int n : ns) {
      const auto p = ParamSet::from_lambda(lambda, n);
      const double r1 = specfun::conjectured_bound(FormTag::S, p);
      const double s0 = oracle::bound_est_S0(p);
      const double e2 = oracle::bound_est2(p);
      if (o.format == "csv") {
        std::printf("%s,%d,%s,%s,%s,%s,%s\n", g17(lambda).c_str(), n, g17(r1).c_str(), g17(s0).c_str(),
                    g17(e2).c_str(), g17(s0 / r1).c_str(), g17(e2 / r1).c_str());
      } else {
        rows.push_back({{"lambda", lambda}, {"n", n}, {"R1", r1}, {"est_S0", s0}, {"est2", e2},
                        {"est_S0_over_R1", s0 / r1}, {"est2_over_R1", e2 / r1}, {"kind", "majorant"}});
      }
    }
  }
  if (o.format == "json") std::cout << rows.dump(2) << '\n';
  return kExitOk;
}

// ---- search -----------------------------------------------------------------

struct SearchOpts {
  double alpha = 0.0;
  int n = 2;
  DiscOpts disc;
  std::string out;
  std::string series;
};

int verdict_exit(extremal::SearchVerdict v) {
  switch (v) {
    case extremal::SearchVerdict::Supports: return kExitOk;
    case extremal::SearchVerdict::CandidateCounterexample: return kExitCandidate;
    case extremal::SearchVerdict::Inconclusive: return kExitInconclusive;
  }
  return kExitInconclusive;
}

void write_series(const std::string& prefix, const extremal::SearchReport& r) {
  std::string h = "t,h\n";
  for (std::size_t i = 0; i < r.optimizer_nodes.size(); ++i) {
    h += g17(r.optimizer_nodes[i]) + "," + g17(r.optimizer_values[i]) + "\n";
  }
  write_file(prefix + "_h.csv", h);
  std::string ratio = "t,ratio\n";
  for (std::size_t i = 0; i < r.certificate.dense_t.size(); ++i) {
    ratio += g17(r.certificate.dense_t[i]) + "," + g17(r.certificate.dense_ratio[i]) + "\n";
  }
  write_file(prefix + "_ratio.csv", ratio);
}

int cmd_search(const SearchOpts& o) {
  const auto p = ParamSet::from_alpha(o.alpha, o.n);
  const auto d = o.disc.get();
  const auto r = extremal::search(p, d);
  for (const auto& w : r.warnings) std::fprintf(stderr, "warning: %s\n", w.c_str());
  std::fprintf(stderr, "alpha %g, n %d: optimum %.9g, bound %.9g, ratio %.6f, certificate %s, verdict %s\n",
               p.alpha(), p.n(), r.optimum, r.bound, r.ratio, r.certificate.passed ? "passed" : "failed",
               std::string(to_string(r.verdict)).c_str());
  emit(o.out, json(r).dump(2));
  if (!o.series.empty()) write_series(o.series, r);
  return verdict_exit(r.verdict);
}

// ---- sweep ------------------------------------------------------------------

struct SweepOpts {
  std::string alpha;
  std::string n;
  DiscOpts disc;
  int jobs = 1;
  std::string out;
};

struct SweepPoint {
  double alpha = 0.0;
  int n = 0;
  std::optional<extremal::SearchReport> report;
  std::string error;
};

int cmd_sweep(const SweepOpts& o) {
  const auto alphas = parse_real_list(o.alpha);
  const auto ns = parse_int_list(o.n);
  const auto d = o.disc.get();
  if (o.jobs < 1) throw ParseError("--jobs must be at least 1");

  std::vector<SweepPoint> points;
  for (double a : alphas) {
    for (int n : ns) points.push_back({a, n, std::nullopt, ""});
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      auto& pt = points[i];
      try {
        pt.report = extremal::search(ParamSet::from_alpha(pt.alpha, pt.n), d);
      } catch (const std::exception& e) {
        pt.error = e.what();
      }
    }
  };
  const int workers = std::min<int>(o.jobs, static_cast<int>(points.size()));
  std::vector<std::thread> pool;
  for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  std::filesystem::create_directories(o.out);
  std::string csv = "alpha,n,optimum,bound,ratio,verdict,worst_constraint_ratio\n";
  bool candidate = false;
  bool unresolved = false;
  for (const auto& pt : points) {
    char name[96];
    std::snprintf(name, sizeof name, "alpha_%g_n_%d.json", pt.alpha, pt.n);
    const auto path = (std::filesystem::path(o.out) / name).string();
    if (pt.report) {
      const auto& r = *pt.report;
      write_file(path, json(r).dump(2) + "\n");
      csv += g17(pt.alpha) + "," + std::to_string(pt.n) + "," + g17(r.optimum) + "," + g17(r.bound) + "," +
             g17(r.ratio) + "," + std::string(to_string(r.verdict)) + "," + g17(r.certificate.worst_ratio) + "\n";
      candidate |= r.verdict == extremal::SearchVerdict::CandidateCounterexample;
      unresolved |= r.verdict == extremal::SearchVerdict::Inconclusive;
    } else {
      write_file(path, json{{"alpha", pt.alpha}, {"n", pt.n}, {"error", pt.error}}.dump(2) + "\n");
      csv += g17(pt.alpha) + "," + std::to_string(pt.n) + ",nan,nan,nan,ERROR,nan\n";
      std::fprintf(stderr, "alpha %g, n %d failed: %s\n", pt.alpha, pt.n, pt.error.c_str());
      unresolved = true;
    }
  }
  write_file((std::filesystem::path(o.out) / "summary.csv").string(), csv);
  std::cout << csv;
  if (candidate) return kExitCandidate;
  return unresolved ? kExitInconclusive : kExitOk;
}

// ---- transform --------------------------------------------------------------

struct TransformOpts {
  std::string in;
  std::string to;
  ParamOpts params;
  std::string out;
  bool round_trip = false;
};

int cmd_transform(const TransformOpts& o) {
  const MonotoneFn f = parse_monotone_fn(read_file(o.in));
  const ParamSet p = o.params.get();
  const FormTag to = form_from_string(o.to);
  const auto result = forms::transform(f, to, p);
  for (const auto& w : result.warnings) std::fprintf(stderr, "warning: %s\n", w.c_str());
  emit(o.out, dump_monotone_fn(result.fn));
  if (o.round_trip) {
    const FormTag mid = f.form() == FormTag::S ? FormTag::s : to;
    const auto there = f.form() == FormTag::S ? forms::transform(f, FormTag::s, p).fn : result.fn;
    const auto back = forms::transform(there, f.form(), p).fn;
    double worst = 0.0;
    for (double t : f.nodes()) {
      worst = std::max(worst, std::abs(back.eval(t) - f.eval(t)) / std::max(1.0, std::abs(f.eval(t))));
    }
    std::fprintf(stderr, "round-trip %s -> %s -> %s max node error: %.3e\n", std::string(to_string(f.form())).c_str(),
                 std::string(to_string(mid)).c_str(), std::string(to_string(f.form())).c_str(), worst);
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"ineqlab: numerical laboratory for a sharp integral inequality"};
  app.require_subcommand(1, 1);
  app.set_config("--config", "",
                 "key=value file; subcommand options go in [name] sections or as name.key=value lines");
  std::string profile_text = "default";
  app.add_option("--profile", profile_text, "tolerance profile: default, strict or a number")
      ->envname("INEQLAB_PROFILE")
      ->capture_default_str();

  SelftestOpts st;
  auto* c_self = app.add_subcommand("selftest", "run the built-in identity checks");
  c_self->add_option("--only", st.only, "run only the checks with this anchor");
  c_self->add_flag("--list", st.list, "list anchors and exit");

  CheckOpts ck;
  auto* c_check = app.add_subcommand("check", "evaluate constraint and target for a function file");
  c_check->add_option("--file,file", ck.file, "MonotoneFn JSON")->required();
  c_check->add_option("--form", ck.form, "expected form (S, s, h, q)");
  ck.params.add(c_check);
  c_check->add_option("--t-grid", ck.t_grid, "constraint grid lo:hi:count (log-spaced)");
  c_check->add_option("--out", ck.out, "write the verdict JSON here");

  BoundsOpts bd;
  auto* c_bounds = app.add_subcommand("bounds", "sharp constant and the two majorant bounds");
  c_bounds->add_option("--lambda,--lambda-range", bd.lambda, "lambda list a,b,c or lo:hi:count")->required();
  c_bounds->add_option("--n,--n-range", bd.n, "n list a,b,c or a:b")->required();
  c_bounds->add_option("--format", bd.format, "csv or json")->capture_default_str();

  SearchOpts se;
  auto* c_search = app.add_subcommand("search", "LP search for the form-2 supremum");
  c_search->add_option("--alpha", se.alpha, "alpha > 0")->required();
  c_search->add_option("--n", se.n, "integer n >= 2")->required();
  se.disc.add(c_search);
  c_search->add_option("--out", se.out, "write the report JSON here (default stdout)");
  c_search->add_option("--series", se.series, "write PREFIX_h.csv and PREFIX_ratio.csv");

  SweepOpts sw;
  auto* c_sweep = app.add_subcommand("sweep", "search over an (alpha, n) grid");
  c_sweep->add_option("--alpha,--alpha-range", sw.alpha, "alpha list a,b,c or lo:hi:count")->required();
  c_sweep->add_option("--n,--n-range", sw.n, "n list a,b,c or a:b")->required();
  sw.disc.add(c_sweep);
  c_sweep->add_option("--jobs", sw.jobs, "worker threads")->capture_default_str();
  c_sweep->add_option("--out", sw.out, "output directory")->required();

  TransformOpts tr;
  auto* c_transform = app.add_subcommand("transform", "move a function along S <-> s <-> h <-> q");
  c_transform->add_option("--in", tr.in, "MonotoneFn JSON")->required();
  c_transform->add_option("--to", tr.to, "target form")->required();
  tr.params.add(c_transform);
  c_transform->add_option("--out", tr.out, "write the result here (default stdout)");
  c_transform->add_flag("--round-trip", tr.round_trip, "report the round-trip node error");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    const Profile profile = parse_profile(profile_text);
    if (c_self->parsed()) return cmd_selftest(st, profile);
    if (c_check->parsed()) return cmd_check(ck, profile);
    if (c_bounds->parsed()) return cmd_bounds(bd);
    if (c_search->parsed()) return cmd_search(se);
    if (c_sweep->parsed()) return cmd_sweep(sw);
    if (c_transform->parsed()) return cmd_transform(tr);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace ineqlab::cli
