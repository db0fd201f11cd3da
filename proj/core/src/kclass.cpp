#include "ineqlab/kclass.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <nlohmann/json.hpp>

#include "ineqlab/errors.hpp"

namespace ineqlab {

double KClassTerm::eval(double t) const {
  // Work in logs so large exponents at extreme t neither overflow nor underflow
  // prematurely.
  const double log_denom = pow_denom == 0.0 ? 0.0 : pow_denom * std::log1p(std::pow(t, beta_exp));
  return coeff * std::exp(-pow_t * std::log(t) - log_denom);
}

KClassExpr::KClassExpr(double beta_exp, std::vector<KClassTerm> terms)
    : beta_exp_(beta_exp), terms_(std::move(terms)) {
  if (!(beta_exp_ > 0.0) || beta_exp_ > 2.0) {
    throw DomainError("K-class exponent beta must lie in (0, 2]");
  }
  for (auto& term : terms_) term.beta_exp = beta_exp_;
  canonicalize();
}

void KClassExpr::canonicalize() {
  std::sort(terms_.begin(), terms_.end(), [](const KClassTerm& x, const KClassTerm& y) {
    if (x.pow_t != y.pow_t) return x.pow_t < y.pow_t;
    return x.pow_denom < y.pow_denom;
  });
  std::vector<KClassTerm> merged;
  merged.reserve(terms_.size());
  for (const auto& term : terms_) {
    if (!merged.empty() && std::abs(merged.back().pow_t - term.pow_t) <= kMergeTolerance &&
        std::abs(merged.back().pow_denom - term.pow_denom) <= kMergeTolerance) {
      merged.back().coeff += term.coeff;
    } else {
      merged.push_back(term);
    }
  }
  std::erase_if(merged, [](const KClassTerm& t) { return t.coeff == 0.0; });
  // Merging can bring near-equal keys out of order by at most the tolerance.
  std::stable_sort(merged.begin(), merged.end(), [](const KClassTerm& x, const KClassTerm& y) {
    if (std::abs(x.pow_t - y.pow_t) > kMergeTolerance) return x.pow_t < y.pow_t;
    return x.pow_denom < y.pow_denom;
  });
  terms_ = std::move(merged);
}

double KClassExpr::eval(double t) const {
  double sum = 0.0;
  for (const auto& term : terms_) sum += term.eval(t);
  return sum;
}

double KClassExpr::min_coeff() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& term : terms_) m = std::min(m, term.coeff);
  return m;
}

KClassExpr KClassExpr::m_step() const {
  std::vector<KClassTerm> out;
  out.reserve(2 * terms_.size());
  for (const auto& term : terms_) {
    const double a = term.pow_t;
    const double k = term.pow_denom;
    const double first = term.coeff * (1.0 + a);
    if (first != 0.0) out.push_back({first, 2.0 + a, k, beta_exp_});
    const double second = term.coeff * k * beta_exp_;
    if (second != 0.0) out.push_back({second, 2.0 + a - beta_exp_, k + 1.0, beta_exp_});
  }
  KClassExpr next;
  next.beta_exp_ = beta_exp_;
  next.terms_ = std::move(out);
  next.canonicalize();
  return next;
}

void to_json(nlohmann::json& j, const KClassTerm& t) {
  j = nlohmann::json{{"coeff", t.coeff}, {"pow_t", t.pow_t}, {"pow_denom", t.pow_denom}, {"beta_exp", t.beta_exp}};
}

void from_json(const nlohmann::json& j, KClassTerm& t) {
  t.coeff = j.at("coeff").get<double>();
  t.pow_t = j.at("pow_t").get<double>();
  t.pow_denom = j.at("pow_denom").get<double>();
  t.beta_exp = j.at("beta_exp").get<double>();
}

void to_json(nlohmann::json& j, const KClassExpr& e) {
  j = nlohmann::json::array();
  for (const auto& t : e.terms()) j.push_back(t);
}

void from_json(const nlohmann::json& j, KClassExpr& e) {
  if (!j.is_array()) throw ParseError("K-class expression must be a JSON array");
  std::vector<KClassTerm> terms = j.get<std::vector<KClassTerm>>();
  if (terms.empty()) {
    e = KClassExpr();
    return;
  }
  const double beta = terms.front().beta_exp;
  for (const auto& t : terms) {
    if (t.beta_exp != beta) throw ParseError("all K-class terms must share beta_exp");
  }
  e = KClassExpr(beta, std::move(terms));
}

}  // namespace ineqlab
