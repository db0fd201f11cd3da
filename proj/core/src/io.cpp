#include "ineqlab/io.hpp"

#include <cmath>
#include <optional>

#include <nlohmann/json.hpp>

#include "ineqlab/errors.hpp"

namespace ineqlab {

using nlohmann::json;

namespace {

json number_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

json right_json(const RightRule& r) {
  if (r.kind == RightRule::Kind::Power) return {{"kind", "power"}, {"exponent", r.exponent}};
  return {{"kind", "constant"}};
}

bool same_pieces(const MonotoneFn& a, const MonotoneFn& b) {
  if (a.pieces().size() != b.pieces().size()) return false;
  for (std::size_t i = 0; i < a.pieces().size(); ++i) {
    if (!a.pieces()[i].same_as(b.pieces()[i], 1e-12)) return false;
  }
  return true;
}

// Linear or step data reproducing f exactly, if any.
std::optional<MonotoneFn> as_data(const MonotoneFn& f) {
  const RightRule r = f.right();
  if (r.kind == RightRule::Kind::Segments) return std::nullopt;
  if (f.interpolation() != Interpolation::Exact) return f;
  try {
    auto lin = MonotoneFn::piecewise_linear(f.form(), f.nodes(), f.values(), f.left(), r);
    if (same_pieces(lin, f)) return lin;
  } catch (const Error&) {
  }
  if (f.form() == FormTag::q) {
    try {
      auto st = MonotoneFn::step(f.form(), f.nodes(), f.values(), f.left(), r);
      if (same_pieces(st, f)) return st;
    } catch (const Error&) {
    }
  }
  return std::nullopt;
}

template <typename T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("field '") + key + "': " + e.what());
  }
}

}  // namespace

void to_json(json& j, const MonotoneFn& f) {
  const auto data = as_data(f);
  const MonotoneFn& g = data ? *data : f;
  j = json{{"form", std::string(to_string(g.form()))},
           {"nodes", g.nodes()},
           {"values", g.values()},
           {"left", g.left()},
           {"right", right_json(g.right())}};
  if (data && g.interpolation() == Interpolation::Step) j["interpolation"] = "step";
  if (!data) {
    json segs = json::array();
    for (const auto& piece : f.pieces()) {
      json terms = json::array();
      for (const auto& t : piece.terms()) terms.push_back({t.coeff, t.power});
      segs.push_back({{"terms", terms}, {"log", piece.log_coeff()}});
    }
    j["segments"] = segs;
    j["right"] = {{"kind", "segments"}};
  }
}

MonotoneFn monotone_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("a monotone function must be a JSON object");
  const FormTag form = form_from_string(field<std::string>(j, "form"));
  auto nodes = field<std::vector<double>>(j, "nodes");

  if (j.contains("segments")) {
    std::vector<PieceExpr> pieces;
    for (const auto& seg : j.at("segments")) {
      std::vector<PowerTerm> terms;
      for (const auto& t : field<json>(seg, "terms")) {
        if (!t.is_array() || t.size() != 2) throw ParseError("segment terms must be [coeff, power] pairs");
        terms.push_back({t[0].get<double>(), t[1].get<double>()});
      }
      const double log_coeff = seg.contains("log") ? seg.at("log").get<double>() : 0.0;
      pieces.emplace_back(std::move(terms), log_coeff);
    }
    return MonotoneFn::from_pieces(form, std::move(nodes), std::move(pieces));
  }

  auto values = field<std::vector<double>>(j, "values");
  const double left = field<double>(j, "left");
  const json right = field<json>(j, "right");
  const std::string kind = field<std::string>(right, "kind");
  RightRule rule;
  if (kind == "constant") {
    rule = RightRule::constant();
  } else if (kind == "power") {
    rule = RightRule::power(field<double>(right, "exponent"));
  } else {
    throw ParseError("right.kind must be constant or power, got '" + kind + "'");
  }
  const std::string interp = j.contains("interpolation") ? field<std::string>(j, "interpolation") : "linear";
  if (interp == "linear") return MonotoneFn::piecewise_linear(form, std::move(nodes), std::move(values), left, rule);
  if (interp == "step") return MonotoneFn::step(form, std::move(nodes), std::move(values), left, rule);
  throw ParseError("interpolation must be linear or step, got '" + interp + "'");
}

MonotoneFn parse_monotone_fn(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  return monotone_from_json(j);
}

std::string dump_monotone_fn(const MonotoneFn& f, int indent) { return json(f).dump(indent); }

void to_json(json& j, const ParamSet& p) {
  j = json{{"lambda", p.lambda()}, {"alpha", p.alpha()}, {"n", p.n()},
           {"regime", std::string(to_string(p.regime()))}};
}

namespace forms {

void to_json(json& j, const Verdict& v) {
  json ratios = json::array();
  for (double r : v.ratios) ratios.push_back(number_or_null(r));
  j = json{{"params", v.params},
           {"form", std::string(to_string(v.form))},
           {"constraint_grid", v.constraint_grid},
           {"ratios", ratios},
           {"point_errors", v.point_errors},
           {"worst_constraint_ratio", number_or_null(v.worst_constraint_ratio)},
           {"worst_t", v.worst_t},
           {"target", number_or_null(v.target_value)},
           {"bound", v.bound},
           {"margin", number_or_null(v.margin)},
           {"tol", v.tol},
           {"feasible", v.feasible()},
           {"conjecture_consistent", v.conjecture_consistent()}};
}

}  // namespace forms

namespace extremal {

void to_json(json& j, const DiscretizationSpec& spec) {
  const auto d = spec.resolved();
  j = json{{"node_count", d.node_count},
           {"node_range", {d.t_min, d.t_max}},
           {"constraint_count", d.constraint_count},
           {"constraint_range", {d.constraint_lo, d.constraint_hi}},
           {"mode", std::string(to_string(d.mode))},
           {"dense_factor", d.dense_factor}};
}

void to_json(json& j, const Certificate& c) {
  j = json{{"passed", c.passed},
           {"worst_ratio", number_or_null(c.worst_ratio)},
           {"worst_t", number_or_null(c.worst_t)},
           {"checked_range", {number_or_null(c.checked_lo), number_or_null(c.checked_hi)}},
           {"small_t_end", number_or_null(c.small_t_end)},
           {"small_t_bound", number_or_null(c.small_t_bound)},
           {"bracket_bound", number_or_null(c.bracket_bound)},
           {"tail_bound", number_or_null(c.tail_bound)},
           {"tail_needed", c.tail_needed},
           {"violations", c.violations},
           {"note", c.note}};
}

void to_json(json& j, const SearchReport& r) {
  j = json{{"params", r.params},
           {"disc", r.disc},
           {"status", std::string(lp::to_string(r.status))},
           {"iterations", r.iterations},
           {"optimum", number_or_null(r.optimum)},
           {"bound", r.bound},
           {"ratio", number_or_null(r.ratio)},
           {"verdict", std::string(to_string(r.verdict))},
           {"tail_term", number_or_null(r.tail_term)},
           {"target_of_optimizer", number_or_null(r.target_of_optimizer)},
           {"certificate", r.certificate},
           {"optimizer_nodes", r.optimizer_nodes},
           {"optimizer_values", r.optimizer_values},
           {"warnings", r.warnings}};
}

}  // namespace extremal
}  // namespace ineqlab
