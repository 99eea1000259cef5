#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include "exmc/errors.hpp"
#include "exmc/model.hpp"
#include "exmc/stats.hpp"

namespace exmc {

LevelledExponentialFamily::LevelledExponentialFamily(ParamSpace params,
                                                     std::vector<double> stat_per_point)
    : params_(std::move(params)),
      space_(SampleSpace::finite(stat_per_point.size())),
      stat_(std::move(stat_per_point)) {
  std::map<double, std::vector<std::uint32_t>> groups;
  for (std::uint32_t k = 0; k < stat_.size(); ++k) groups[stat_[k]].push_back(k);
  level_of_point_.resize(stat_.size());
  for (auto& [value, members] : groups) {
    const auto level = static_cast<std::uint32_t>(level_values_.size());
    for (auto k : members) level_of_point_[k] = level;
    level_values_.push_back(value);
    level_members_.push_back(std::move(members));
    stat_bound_ = std::max(stat_bound_, std::abs(value));
  }
}

std::size_t LevelledExponentialFamily::point_index(SamplePoint x) const {
  if (x < 0.0 || x >= static_cast<double>(stat_.size()) || x != std::floor(x)) {
    throw std::out_of_range(name() + ": sample point outside the sample space");
  }
  return static_cast<std::size_t>(x);
}

double LevelledExponentialFamily::log_f(double theta, SamplePoint x) const {
  return theta * stat_[point_index(x)];
}

double LevelledExponentialFamily::log_Z(double theta) const {
  std::vector<double> terms(level_values_.size());
  for (std::size_t l = 0; l < terms.size(); ++l) {
    terms[l] = std::log(static_cast<double>(level_members_[l].size())) + theta * level_values_[l];
  }
  return log_sum_exp(terms);
}

SamplePoint LevelledExponentialFamily::draw(double theta, RngStream& rng) const {
  const double log_z = log_Z(theta);
  double u = rng.uniform();
  std::size_t level = level_values_.size() - 1;
  for (std::size_t l = 0; l < level_values_.size(); ++l) {
    u -= std::exp(std::log(static_cast<double>(level_members_[l].size())) +
                  theta * level_values_[l] - log_z);
    if (u <= 0.0) {
      level = l;
      break;
    }
  }
  const auto& members = level_members_[level];
  return static_cast<double>(members[rng.below(members.size())]);
}

std::vector<SupportClass> LevelledExponentialFamily::support_classes(
    std::span<const double>) const {
  std::vector<SupportClass> out;
  out.reserve(level_values_.size());
  for (const auto& members : level_members_) {
    out.push_back({static_cast<double>(members.front()),
                   std::log(static_cast<double>(members.size()))});
  }
  return out;
}

std::optional<double> LevelledExponentialFamily::sufficient_stat(SamplePoint x) const {
  return stat_[point_index(x)];
}

// --- Ising ------------------------------------------------------------------

namespace {

int checked_ising_vertices(int vertices, const std::vector<IsingEdge>& edges) {
  if (vertices < 1) throw std::invalid_argument("ising model needs at least one vertex");
  if (vertices > IsingModel::kMaxVertices) {
    throw BudgetError("ising model with " + std::to_string(vertices) +
                      " vertices exceeds the enumeration budget of 2^" +
                      std::to_string(IsingModel::kMaxVertices) + " configurations");
  }
  for (const auto& e : edges) {
    if (e.i < 0 || e.j < 0 || e.i >= vertices || e.j >= vertices || e.i == e.j) {
      throw std::invalid_argument("ising edge (" + std::to_string(e.i) + ", " +
                                  std::to_string(e.j) + ") is not a valid vertex pair");
    }
    if (!std::isfinite(e.coupling)) throw std::invalid_argument("ising coupling is not finite");
  }
  return vertices;
}

double ising_energy(const std::vector<IsingEdge>& edges, double field, std::uint64_t config,
                    int vertices) {
  auto spin = [config](int v) { return ((config >> v) & 1U) ? 1.0 : -1.0; };
  double h = 0.0;
  for (const auto& e : edges) h -= e.coupling * spin(e.i) * spin(e.j);
  double magnetization = 0.0;
  for (int v = 0; v < vertices; ++v) magnetization += spin(v);
  return h - field * magnetization;
}

std::vector<double> ising_statistics(int vertices, const std::vector<IsingEdge>& edges,
                                     double field) {
  const std::uint64_t n_states = std::uint64_t{1} << checked_ising_vertices(vertices, edges);
  std::vector<double> stat(n_states);
  for (std::uint64_t k = 0; k < n_states; ++k) stat[k] = -ising_energy(edges, field, k, vertices);
  return stat;
}

}  // namespace

IsingModel::IsingModel(int vertices, std::vector<IsingEdge> edges, double field,
                       ParamSpace params)
    : LevelledExponentialFamily(std::move(params), ising_statistics(vertices, edges, field)),
      vertices_(vertices),
      edges_(std::move(edges)),
      field_(field) {}

double IsingModel::hamiltonian(std::uint64_t config) const {
  return ising_energy(edges_, field_, config, vertices_);
}

// --- ERGM -------------------------------------------------------------------

namespace {

int edge_slot(int n, int i, int j) {
  // Lexicographic index of pair (i, j), i < j.
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

std::vector<double> ergm_statistics(int vertices, GraphStatistic statistic) {
  if (vertices < 2) throw std::invalid_argument("ergm needs at least two vertices");
  if (vertices > ErgmModel::kMaxVertices) {
    throw BudgetError("ergm with " + std::to_string(vertices) +
                      " vertices exceeds the enumeration budget (n <= " +
                      std::to_string(ErgmModel::kMaxVertices) + ")");
  }
  const int m = vertices * (vertices - 1) / 2;
  std::vector<double> stat(std::size_t{1} << m);
  for (std::uint64_t g = 0; g < stat.size(); ++g) {
    stat[g] = ErgmModel::graph_statistic(vertices, statistic, g);
  }
  return stat;
}

}  // namespace

double ErgmModel::graph_statistic(int n, GraphStatistic statistic, std::uint64_t mask) {
  if (statistic == GraphStatistic::edge_count) return std::popcount(mask);
  auto has = [&](int i, int j) { return ((mask >> edge_slot(n, i, j)) & 1U) != 0; };
  int triangles = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!has(i, j)) continue;
      for (int k = j + 1; k < n; ++k) {
        if (has(i, k) && has(j, k)) ++triangles;
      }
    }
  }
  return triangles;
}

ErgmModel::ErgmModel(int vertices, GraphStatistic statistic, ParamSpace params)
    : LevelledExponentialFamily(std::move(params), ergm_statistics(vertices, statistic)),
      vertices_(vertices),
      statistic_(statistic) {}

}  // namespace exmc
