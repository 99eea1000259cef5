#include "exmc/zoo.hpp"

#include <stdexcept>

#include "json.hpp"

#include "exmc/errors.hpp"

namespace exmc {

TwoPointExample make_two_point_bernoulli() {
  auto model = std::make_shared<BernoulliModel>(ParamSpace::finite({0.25, 0.75}));
  return {model, Prior::discrete({0.25, 0.75}, {0.75, 0.25}), 1.0};
}

ModelWithPrior make_beta_binomial(int n, double lo, double hi, double a, double b) {
  if (!(lo > 0.0) || !(hi < 1.0) || !(lo < hi)) {
    throw std::invalid_argument("beta-binomial needs 0 < theta1 < theta2 < 1");
  }
  if (!(a > 0.0) || !(b > 0.0)) throw std::invalid_argument("beta-binomial needs a, b > 0");
  auto model = std::make_shared<BinomialModel>(n, ParamSpace::interval(lo, hi));
  return {model, Prior::truncated_beta(a, b, lo, hi)};
}

ModelWithPrior make_exponential_gamma() {
  return {std::make_shared<ExponentialModel>(), Prior::exponential(1.0)};
}

ModelPtr make_poisson(const Prior& prior) {
  const auto& s = prior.support();
  if (s.lo() < 0.0) {
    throw ModelMismatchError("poisson model needs a prior supported on [0, inf), got " +
                             s.describe());
  }
  return std::make_shared<PoissonModel>();
}

ModelWithPrior make_gaussian_location(double prior_sd) {
  if (!(prior_sd > 0.0)) throw std::invalid_argument("gaussian location needs prior sd > 0");
  return {std::make_shared<GaussianLocationModel>(), Prior::gaussian(0.0, prior_sd)};
}

ModelPtr make_ising(int vertices, std::vector<IsingEdge> edges, double field, ParamSpace params) {
  return std::make_shared<IsingModel>(vertices, std::move(edges), field, std::move(params));
}

std::vector<IsingEdge> parse_ising_edges(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("ising edge list is not valid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw std::invalid_argument("ising edge list must be a JSON array");
  std::vector<IsingEdge> edges;
  for (const auto& item : doc) {
    if (!item.is_array() || item.size() != 3 || !item[0].is_number_integer() ||
        !item[1].is_number_integer() || !item[2].is_number()) {
      throw std::invalid_argument("ising edge must be [i, j, J_ij], got " + item.dump());
    }
    edges.push_back({item[0].get<int>(), item[1].get<int>(), item[2].get<double>()});
  }
  return edges;
}

ModelPtr make_ergm(int vertices, GraphStatistic statistic, ParamSpace params) {
  return std::make_shared<ErgmModel>(vertices, statistic, std::move(params));
}

}  // namespace exmc
