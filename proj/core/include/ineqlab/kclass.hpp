#pragma once

#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace ineqlab {

// coeff / (t^pow_t * (1 + t^beta_exp)^pow_denom)
struct KClassTerm {
  double coeff = 0.0;
  double pow_t = 0.0;
  double pow_denom = 0.0;
  double beta_exp = 0.0;

  double eval(double t) const;
};

// Nonnegative combinations of K-class terms sharing one exponent beta.
//
// Canonical form: terms sorted by (pow_t, pow_denom), exponents that agree to
// kMergeTolerance merged, zero coefficients dropped. The class is closed under
// M[g](t) = -(g(t)/t)', which is what makes positivity of M^q[phi] provable.
class KClassExpr {
 public:
  static constexpr double kMergeTolerance = 1e-14;

  KClassExpr() = default;
  KClassExpr(double beta_exp, std::vector<KClassTerm> terms);

  double beta_exp() const { return beta_exp_; }
  const std::vector<KClassTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  double eval(double t) const;
  double min_coeff() const;

  // One application of M, term by term:
  //   M[1/(t^a (1+t^b)^k)] = (1+a)/(t^{2+a}(1+t^b)^k) + k b/(t^{2+a-b}(1+t^b)^{k+1})
  KClassExpr m_step() const;

 private:
  void canonicalize();

  double beta_exp_ = 0.0;
  std::vector<KClassTerm> terms_;
};

void to_json(nlohmann::json& j, const KClassTerm& t);
void from_json(const nlohmann::json& j, KClassTerm& t);
void to_json(nlohmann::json& j, const KClassExpr& e);
void from_json(const nlohmann::json& j, KClassExpr& e);

}  // namespace ineqlab
