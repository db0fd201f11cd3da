#pragma once

#include <string_view>

namespace ineqlab {

enum class Regime {
  Degenerate,      // lambda == 0, only the crude a-priori bounds make sense
  SubConjecture,   // 0 < lambda < 1/2
  Proved,          // 1/2 <= lambda <= 1
  Conjectural,     // lambda > 1
};

std::string_view to_string(Regime r);

// The parameter triple (lambda, n, alpha = lambda / 2).
//
// alpha is always derived from lambda; the two factories only differ in which
// exponent the caller thinks in. lambda == 0 is admitted because the a-priori
// growth bound and the product constants are defined there.
class ParamSet {
 public:
  static ParamSet from_lambda(double lambda, int n);
  static ParamSet from_alpha(double alpha, int n);

  double lambda() const { return lambda_; }
  double alpha() const { return lambda_ / 2.0; }
  int n() const { return n_; }
  Regime regime() const;

  bool operator==(const ParamSet&) const = default;

 private:
  ParamSet(double lambda, int n) : lambda_(lambda), n_(n) {}

  double lambda_;
  int n_;
};

}  // namespace ineqlab
