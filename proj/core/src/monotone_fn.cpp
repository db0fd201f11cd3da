#include "ineqlab/monotone_fn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ineqlab/errors.hpp"

namespace ineqlab {

namespace {

constexpr double kPowerMergeTol = 1e-14;
constexpr double kInf = std::numeric_limits<double>::infinity();

double power_of(double x, double p) {
  if (p == 0.0) return 1.0;
  if (p == 1.0) return x;
  if (p == 0.5) return std::sqrt(x);
  return std::pow(x, p);
}

void require(bool ok, const std::string& message) {
  if (!ok) throw DomainError(message);
}

void validate_nodes(const std::vector<double>& nodes) {
  require(!nodes.empty(), "a monotone function needs at least one node");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    require(std::isfinite(nodes[i]) && nodes[i] > 0.0, "nodes must be positive and finite");
    if (i > 0) require(nodes[i] > nodes[i - 1], "nodes must be strictly increasing");
  }
}

bool is_increasing_form(FormTag f) { return f != FormTag::q; }
bool pinned_at_zero(FormTag f) { return f == FormTag::S || f == FormTag::h; }

}  // namespace

PieceExpr::PieceExpr(std::vector<PowerTerm> terms, double log_coeff)
    : terms_(std::move(terms)), log_coeff_(log_coeff) {
  canonicalize();
}

void PieceExpr::canonicalize() {
  std::sort(terms_.begin(), terms_.end(), [](const PowerTerm& a, const PowerTerm& b) { return a.power < b.power; });
  std::vector<PowerTerm> merged;
  for (const auto& t : terms_) {
    if (!merged.empty() && std::abs(merged.back().power - t.power) <= kPowerMergeTol) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(t);
    }
  }
  std::erase_if(merged, [](const PowerTerm& t) { return t.coeff == 0.0; });
  terms_ = std::move(merged);
}

double PieceExpr::eval(double x) const {
  double sum = 0.0;
  for (const auto& t : terms_) sum += t.coeff * power_of(x, t.power);
  if (log_coeff_ != 0.0) sum += log_coeff_ * std::log(x);
  return sum;
}

double PieceExpr::derivative(double x) const {
  double sum = 0.0;
  for (const auto& t : terms_) {
    if (t.power != 0.0) sum += t.coeff * t.power * power_of(x, t.power - 1.0);
  }
  if (log_coeff_ != 0.0) sum += log_coeff_ / x;
  return sum;
}

double PieceExpr::limit_at_zero() const {
  if (log_coeff_ != 0.0) return log_coeff_ > 0.0 ? -kInf : kInf;
  double constant = 0.0;
  for (const auto& t : terms_) {
    // Terms are sorted, so the first negative power dominates.
    if (t.power < 0.0) return t.coeff > 0.0 ? kInf : -kInf;
    if (t.power == 0.0) constant += t.coeff;
  }
  return constant;
}

PieceExpr PieceExpr::derivative_expr() const {
  std::vector<PowerTerm> out;
  for (const auto& t : terms_) {
    if (t.power != 0.0) out.push_back({t.coeff * t.power, t.power - 1.0});
  }
  if (log_coeff_ != 0.0) out.push_back({log_coeff_, -1.0});
  return PieceExpr(std::move(out));
}

PieceExpr PieceExpr::x_derivative() const {
  std::vector<PowerTerm> out;
  for (const auto& t : terms_) {
    if (t.power != 0.0) out.push_back({t.coeff * t.power, t.power});
  }
  if (log_coeff_ != 0.0) out.push_back({log_coeff_, 0.0});
  return PieceExpr(std::move(out));
}

PieceExpr PieceExpr::antiderivative() const {
  if (log_coeff_ != 0.0) throw TransformError("antiderivative of a log term leaves the piece family");
  std::vector<PowerTerm> out;
  double log_part = 0.0;
  for (const auto& t : terms_) {
    if (std::abs(t.power + 1.0) <= kPowerMergeTol) {
      log_part += t.coeff;
    } else {
      out.push_back({t.coeff / (t.power + 1.0), t.power + 1.0});
    }
  }
  return PieceExpr(std::move(out), log_part);
}

PieceExpr PieceExpr::antiderivative_over_x() const {
  if (log_coeff_ != 0.0) throw TransformError("integrating a log term against dt/t leaves the piece family");
  std::vector<PowerTerm> out;
  double log_part = 0.0;
  for (const auto& t : terms_) {
    if (std::abs(t.power) <= kPowerMergeTol) {
      log_part += t.coeff;
    } else {
      out.push_back({t.coeff / t.power, t.power});
    }
  }
  return PieceExpr(std::move(out), log_part);
}

PieceExpr PieceExpr::sqrt_substituted() const {
  std::vector<PowerTerm> out;
  for (const auto& t : terms_) out.push_back({t.coeff, t.power / 2.0});
  return PieceExpr(std::move(out), log_coeff_ / 2.0);
}

PieceExpr PieceExpr::square_substituted() const {
  std::vector<PowerTerm> out;
  for (const auto& t : terms_) out.push_back({t.coeff, 2.0 * t.power});
  return PieceExpr(std::move(out), 2.0 * log_coeff_);
}

PieceExpr PieceExpr::argument_scaled(double c) const {
  std::vector<PowerTerm> out;
  for (const auto& t : terms_) out.push_back({t.coeff * power_of(c, t.power), t.power});
  if (log_coeff_ != 0.0) out.push_back({log_coeff_ * std::log(c), 0.0});
  return PieceExpr(std::move(out), log_coeff_);
}

PieceExpr PieceExpr::scaled(double k) const {
  std::vector<PowerTerm> out = terms_;
  for (auto& t : out) t.coeff *= k;
  return PieceExpr(std::move(out), k * log_coeff_);
}

PieceExpr PieceExpr::plus_constant(double c) const {
  std::vector<PowerTerm> out = terms_;
  out.push_back({c, 0.0});
  return PieceExpr(std::move(out), log_coeff_);
}

bool PieceExpr::same_as(const PieceExpr& other, double rel_tol) const {
  if (terms_.size() != other.terms_.size()) return false;
  auto close = [rel_tol](double a, double b) {
    return std::abs(a - b) <= rel_tol * std::max(std::abs(a), std::abs(b));
  };
  if (!close(log_coeff_, other.log_coeff_)) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (std::abs(terms_[i].power - other.terms_[i].power) > kPowerMergeTol) return false;
    if (!close(terms_[i].coeff, other.terms_[i].coeff)) return false;
  }
  return true;
}

bool PieceExpr::is_affine() const {
  if (log_coeff_ != 0.0) return false;
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const PowerTerm& t) { return t.power == 0.0 || t.power == 1.0; });
}

// ---------------------------------------------------------------------------

MonotoneFn::MonotoneFn(FormTag form, Interpolation interp, std::vector<double> nodes,
                       std::vector<PieceExpr> pieces)
    : form_(form), interp_(interp), nodes_(std::move(nodes)), pieces_(std::move(pieces)) {}

MonotoneFn MonotoneFn::piecewise_linear(FormTag form, std::vector<double> nodes, std::vector<double> values,
                                        double left, RightRule right) {
  validate_nodes(nodes);
  require(values.size() == nodes.size(), "nodes and values must have the same length");
  require(std::isfinite(left), "left value must be finite");
  for (double v : values) require(std::isfinite(v), "values must be finite");
  if (pinned_at_zero(form)) {
    require(left == 0.0, std::string("form ") + std::string(to_string(form)) + " requires value 0 at t = 0");
  }
  if (is_increasing_form(form)) {
    require(left <= values.front(), "values must be nondecreasing (left exceeds first value)");
    for (std::size_t i = 1; i < values.size(); ++i) {
      require(values[i] >= values[i - 1], "values must be nondecreasing");
    }
    require(left >= 0.0, "values must be nonnegative");
    if (right.kind == RightRule::Kind::Power) {
      require(right.exponent >= 0.0, "an increasing function needs a nonnegative tail exponent");
    }
  } else {
    require(left >= 0.0, "a density must be nonnegative");
    for (double v : values) require(v >= 0.0, "a density must be nonnegative");
  }
  require(right.kind != RightRule::Kind::Segments, "linear data needs a constant or power tail");

  std::vector<PieceExpr> pieces;
  pieces.reserve(nodes.size() + 1);
  pieces.push_back(PieceExpr::affine(left, (values[0] - left) / nodes[0]));
  for (std::size_t j = 0; j + 1 < nodes.size(); ++j) {
    const double slope = (values[j + 1] - values[j]) / (nodes[j + 1] - nodes[j]);
    pieces.push_back(PieceExpr::affine(values[j] - slope * nodes[j], slope));
  }
  const double vm = values.back();
  const double tm = nodes.back();
  if (right.kind == RightRule::Kind::Constant || vm == 0.0) {
    pieces.push_back(PieceExpr::constant(vm));
  } else {
    pieces.push_back(PieceExpr({{vm * std::pow(tm, -right.exponent), right.exponent}}));
  }
  return MonotoneFn(form, Interpolation::Linear, std::move(nodes), std::move(pieces));
}

MonotoneFn MonotoneFn::step(FormTag form, std::vector<double> nodes, std::vector<double> values, double left,
                            RightRule right) {
  require(form == FormTag::q, "step functions are admitted only for the density form q");
  validate_nodes(nodes);
  require(values.size() == nodes.size(), "nodes and values must have the same length");
  require(std::isfinite(left) && left >= 0.0, "a density must be nonnegative");
  for (double v : values) require(std::isfinite(v) && v >= 0.0, "a density must be nonnegative");
  require(right.kind != RightRule::Kind::Segments, "step data needs a constant or power tail");

  std::vector<PieceExpr> pieces;
  pieces.push_back(PieceExpr::constant(left));
  for (std::size_t j = 0; j + 1 < nodes.size(); ++j) pieces.push_back(PieceExpr::constant(values[j]));
  const double vm = values.back();
  if (right.kind == RightRule::Kind::Constant || vm == 0.0) {
    pieces.push_back(PieceExpr::constant(vm));
  } else {
    pieces.push_back(PieceExpr({{vm * std::pow(nodes.back(), -right.exponent), right.exponent}}));
  }
  return MonotoneFn(form, Interpolation::Step, std::move(nodes), std::move(pieces));
}

MonotoneFn MonotoneFn::power_law(FormTag form, double coeff, double exponent, std::vector<double> grid) {
  if (grid.empty()) grid = {1.0};
  validate_nodes(grid);
  require(std::isfinite(coeff) && coeff >= 0.0, "power-law coefficient must be nonnegative");
  require(std::isfinite(exponent), "power-law exponent must be finite");
  if (pinned_at_zero(form)) require(exponent > 0.0 || coeff == 0.0, "form requires value 0 at t = 0");
  std::vector<PieceExpr> pieces(grid.size() + 1, PieceExpr({{coeff, exponent}}));
  return MonotoneFn(form, Interpolation::Exact, std::move(grid), std::move(pieces));
}

MonotoneFn MonotoneFn::from_pieces(FormTag form, std::vector<double> nodes, std::vector<PieceExpr> pieces) {
  validate_nodes(nodes);
  require(pieces.size() == nodes.size() + 1, "need exactly one more piece than nodes");
  return MonotoneFn(form, Interpolation::Exact, std::move(nodes), std::move(pieces));
}

MonotoneFn MonotoneFn::zero(FormTag form) {
  return piecewise_linear(form, {1.0}, {0.0}, 0.0, RightRule::constant());
}

std::vector<double> MonotoneFn::values() const {
  std::vector<double> out;
  out.reserve(nodes_.size());
  for (double t : nodes_) out.push_back(eval(t));
  return out;
}

double MonotoneFn::left() const { return pieces_.front().limit_at_zero(); }

RightRule MonotoneFn::right() const {
  const PieceExpr& tail = pieces_.back();
  if (tail.terms().empty() && tail.log_coeff() == 0.0) return RightRule::constant();
  if (tail.is_monomial()) {
    const double p = tail.terms().front().power;
    return p == 0.0 ? RightRule::constant() : RightRule::power(p);
  }
  return {RightRule::Kind::Segments, 0.0};
}

std::size_t MonotoneFn::piece_index(double t) const {
  return static_cast<std::size_t>(std::upper_bound(nodes_.begin(), nodes_.end(), t) - nodes_.begin());
}

double MonotoneFn::eval(double t) const {
  if (t <= 0.0) return left();
  return pieces_[piece_index(t)].eval(t);
}

std::vector<double> MonotoneFn::kinks() const {
  std::vector<double> out;
  for (std::size_t j = 0; j < nodes_.size(); ++j) {
    if (!pieces_[j].same_as(pieces_[j + 1])) out.push_back(nodes_[j]);
  }
  return out;
}

double MonotoneFn::first_piece_end() const {
  for (std::size_t j = 0; j < nodes_.size(); ++j) {
    if (!pieces_[0].same_as(pieces_[j + 1])) return nodes_[j];
  }
  return kInf;
}

bool MonotoneFn::is_nondecreasing(double rel_tol) const {
  auto ok = [rel_tol](double lo, double hi) {
    return hi >= lo - rel_tol * std::max({std::abs(lo), std::abs(hi), 1e-300});
  };
  constexpr int kSamples = 8;
  auto check_range = [&](const PieceExpr& piece, double a, double b) {
    double prev = piece.eval(a);
    for (int i = 1; i <= kSamples; ++i) {
      const double x = a * std::pow(b / a, static_cast<double>(i) / kSamples);
      const double v = piece.eval(x);
      if (!ok(prev, v)) return false;
      prev = v;
    }
    return true;
  };

  if (!check_range(pieces_.front(), nodes_.front() * 1e-8, nodes_.front())) return false;
  for (std::size_t j = 0; j < nodes_.size(); ++j) {
    const double t = nodes_[j];
    if (!ok(pieces_[j].eval(t), pieces_[j + 1].eval(t))) return false;
    const double end = j + 1 < nodes_.size() ? nodes_[j + 1] : t * 1e8;
    if (!check_range(pieces_[j + 1], t, end)) return false;
  }
  return true;
}

bool MonotoneFn::is_log_convex_on_nodes(double rel_tol) const {
  const std::vector<double> v = values();
  double prev_slope = -kInf;
  for (std::size_t j = 0; j + 1 < nodes_.size(); ++j) {
    const double slope = (v[j + 1] - v[j]) / std::log(nodes_[j + 1] / nodes_[j]);
    if (slope < prev_slope - rel_tol * std::max(std::abs(slope), std::abs(prev_slope))) return false;
    prev_slope = slope;
  }
  return true;
}

MonotoneFn MonotoneFn::with_form(FormTag form) const {
  MonotoneFn out = *this;
  out.form_ = form;
  return out;
}

MonotoneFn MonotoneFn::scaled(double k) const {
  MonotoneFn out = *this;
  for (auto& p : out.pieces_) p = p.scaled(k);
  return out;
}

MonotoneFn MonotoneFn::rescaled(double c, double k) const {
  require(c > 0.0, "rescaling factor must be positive");
  MonotoneFn out = *this;
  for (auto& t : out.nodes_) t /= c;
  for (auto& p : out.pieces_) p = p.argument_scaled(c).scaled(k);
  return out;
}

std::vector<double> log_grid(double lo, double hi, int count) {
  require(lo > 0.0 && hi >= lo && count >= 1, "log grid needs 0 < lo <= hi and count >= 1");
  if (count == 1) return {lo};
  std::vector<double> out(static_cast<std::size_t>(count));
  const double a = std::log(lo);
  const double b = std::log(hi);
  for (int i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] = std::exp(a + (b - a) * i / (count - 1));
  }
  out.front() = lo;
  out.back() = hi;
  return out;
}

}  // namespace ineqlab
