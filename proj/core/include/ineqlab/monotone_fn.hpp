#pragma once

#include <span>
#include <string>
#include <vector>

#include "ineqlab/specfun.hpp"

namespace ineqlab {

struct PowerTerm {
  double coeff = 0.0;
  double power = 0.0;
};

// sum_i coeff_i x^{power_i} + log_coeff * ln x on x > 0.
//
// Every transform between the four function forms maps this family to itself
// (up to the two integrals that would need (ln x)^2 or x ln x, which throw), so
// the chain S <-> s <-> h <-> q is exact rather than re-interpolated.
class PieceExpr {
 public:
  PieceExpr() = default;
  explicit PieceExpr(std::vector<PowerTerm> terms, double log_coeff = 0.0);

  static PieceExpr constant(double c) { return PieceExpr({{c, 0.0}}); }
  // a + b x
  static PieceExpr affine(double a, double b) { return PieceExpr({{a, 0.0}, {b, 1.0}}); }

  const std::vector<PowerTerm>& terms() const { return terms_; }
  double log_coeff() const { return log_coeff_; }

  double eval(double x) const;
  double derivative(double x) const;

  // Limit as x -> 0+; may be +-inf.
  double limit_at_zero() const;

  PieceExpr derivative_expr() const;      // f'
  PieceExpr x_derivative() const;         // x f'(x)
  PieceExpr antiderivative() const;       // int f dx, zero constant
  PieceExpr antiderivative_over_x() const;  // int f(x)/x dx, zero constant
  PieceExpr sqrt_substituted() const;     // u -> f(sqrt u)
  PieceExpr square_substituted() const;   // x -> f(x^2)
  PieceExpr argument_scaled(double c) const;  // x -> f(c x)
  PieceExpr scaled(double k) const;
  PieceExpr plus_constant(double c) const;

  bool same_as(const PieceExpr& other, double rel_tol = 1e-13) const;

  // A single power coeff * x^power with no log part.
  bool is_monomial() const { return terms_.size() == 1 && log_coeff_ == 0.0; }
  // Constant plus linear term only.
  bool is_affine() const;

 private:
  void canonicalize();

  std::vector<PowerTerm> terms_;
  double log_coeff_ = 0.0;
};

struct RightRule {
  enum class Kind { Constant, Power, Segments };
  Kind kind = Kind::Constant;
  double exponent = 0.0;

  static RightRule constant() { return {Kind::Constant, 0.0}; }
  static RightRule power(double e) { return {Kind::Power, e}; }
};

enum class Interpolation { Linear, Step, Exact };

// A nonnegative function on [0, inf) given piecewise on the breakpoints
// 0 < t_1 < ... < t_m: piece 0 covers (0, t_1), piece j covers [t_j, t_{j+1})
// and piece m covers [t_m, inf).
//
// Linear data interpolates (0, left), (t_j, v_j) and continues past t_m with a
// constant or power tail. Step data (form q only) holds left on (0, t_1) and
// v_j on [t_j, t_{j+1}). Exact functions come out of the transforms and the
// closed-form extremals. Instances are immutable.
class MonotoneFn {
 public:
  static MonotoneFn piecewise_linear(FormTag form, std::vector<double> nodes, std::vector<double> values,
                                     double left, RightRule right);
  static MonotoneFn step(FormTag form, std::vector<double> nodes, std::vector<double> values, double left,
                         RightRule right);
  // coeff * t^exponent everywhere, listed on the given grid for display.
  static MonotoneFn power_law(FormTag form, double coeff, double exponent, std::vector<double> grid);
  static MonotoneFn from_pieces(FormTag form, std::vector<double> nodes, std::vector<PieceExpr> pieces);
  static MonotoneFn zero(FormTag form);

  FormTag form() const { return form_; }
  Interpolation interpolation() const { return interp_; }
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<PieceExpr>& pieces() const { return pieces_; }
  std::vector<double> values() const;
  double left() const;
  RightRule right() const;

  double operator()(double t) const { return eval(t); }
  double eval(double t) const;

  // Nodes at which adjacent pieces differ; integrands should be split there.
  std::vector<double> kinks() const;

  // Upper end of the leading run of identical pieces (inf for a pure
  // closed form).
  double first_piece_end() const;

  // Checks nodes, one-sided limits at every node and interior samples of each
  // piece. Exact for linear and step data.
  bool is_nondecreasing(double rel_tol = 1e-12) const;

  // Discrete convexity of v_j against ln t_j.
  bool is_log_convex_on_nodes(double rel_tol = 1e-10) const;

  MonotoneFn with_form(FormTag form) const;
  MonotoneFn scaled(double k) const;

  // t -> k * f(c t), the rescaling that preserves form-2 feasibility when
  // k = c^{-alpha}.
  MonotoneFn rescaled(double c, double k) const;

 private:
  MonotoneFn(FormTag form, Interpolation interp, std::vector<double> nodes, std::vector<PieceExpr> pieces);
  std::size_t piece_index(double t) const;

  FormTag form_;
  Interpolation interp_;
  std::vector<double> nodes_;
  std::vector<PieceExpr> pieces_;
};

std::vector<double> log_grid(double lo, double hi, int count);

}  // namespace ineqlab
