#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "exmc/rng.hpp"
#include "exmc/space.hpp"

namespace exmc {

/// The part of a likelihood family that a practical sampler may touch:
/// the unnormalized density f_theta(x) and an exact draw from
/// p_theta = f_theta / Z(theta). There is deliberately no normalizer here;
/// the exchange kernel only ever receives this interface.
class Likelihood {
 public:
  virtual ~Likelihood() = default;

  virtual std::string name() const = 0;
  virtual const ParamSpace& param_space() const = 0;
  virtual double log_f(double theta, SamplePoint x) const = 0;
  virtual SamplePoint draw(double theta, RngStream& rng) const = 0;
};

/// A group of sample points on which f_theta is constant for every theta,
/// stored as one representative plus log of the group size.
struct SupportClass {
  SamplePoint representative = 0.0;
  double log_multiplicity = 0.0;
};

enum class ModelKind {
  bernoulli,
  binomial,
  exponential,
  poisson,
  gaussian_location,
  ising,
  ergm,
};

/// Full model: Likelihood plus the exact normalizer and sample-space
/// structure. Only exact analysis and diagnostics use the members added
/// here.
class UnnormalizedModel : public Likelihood {
 public:
  virtual ModelKind kind() const = 0;
  virtual const SampleSpace& sample_space() const = 0;
  virtual double log_Z(double theta) const = 0;

  double log_p(double theta, SamplePoint x) const { return log_f(theta, x) - log_Z(theta); }

  /// Enumeration of the sample space covering every theta in `thetas`
  /// (countable spaces are truncated at the largest per-theta cut-off).
  /// Throws for continuum spaces.
  virtual std::vector<SupportClass> support_classes(std::span<const double> thetas) const;

  /// Number of points to enumerate for one theta (finite: the full size).
  virtual std::size_t enumeration_size(double theta) const;

  /// Region of a continuum space holding all but a negligible (< 1e-15)
  /// fraction of p_theta's mass. Used to place root scans.
  virtual std::pair<double, double> effective_support(double theta) const;

  /// True when f_theta(x) = h(x) exp(theta * T(x)), so log_Z is the
  /// cumulant function eta(theta).
  virtual bool is_exponential_family() const { return false; }
  virtual std::optional<double> sufficient_stat(SamplePoint) const { return std::nullopt; }
  /// Exact max |T(x)| over the sample space; nullopt when unbounded or
  /// not an exponential family.
  virtual std::optional<double> sufficient_stat_bound() const { return std::nullopt; }
};

using ModelPtr = std::shared_ptr<const UnnormalizedModel>;

/// E_theta[T(x)] by exact enumeration (exponential-family models only).
double expected_sufficient_stat(const UnnormalizedModel& model, double theta);

// ---------------------------------------------------------------------------
// Concrete families.

class BernoulliModel final : public UnnormalizedModel {
 public:
  explicit BernoulliModel(ParamSpace params = ParamSpace::interval(0.0, 1.0));

  std::string name() const override { return "bernoulli"; }
  ModelKind kind() const override { return ModelKind::bernoulli; }
  const ParamSpace& param_space() const override { return params_; }
  const SampleSpace& sample_space() const override { return space_; }
  double log_f(double theta, SamplePoint x) const override;
  double log_Z(double) const override { return 0.0; }
  SamplePoint draw(double theta, RngStream& rng) const override;

 private:
  ParamSpace params_;
  SampleSpace space_ = SampleSpace::finite(2);
};

class BinomialModel final : public UnnormalizedModel {
 public:
  BinomialModel(int trials, ParamSpace params = ParamSpace::interval(0.0, 1.0));

  std::string name() const override { return "binomial"; }
  ModelKind kind() const override { return ModelKind::binomial; }
  const ParamSpace& param_space() const override { return params_; }
  const SampleSpace& sample_space() const override { return space_; }
  double log_f(double theta, SamplePoint x) const override;
  double log_Z(double) const override { return 0.0; }
  SamplePoint draw(double theta, RngStream& rng) const override;
  int trials() const noexcept { return trials_; }

 private:
  int trials_;
  ParamSpace params_;
  SampleSpace space_;
  std::vector<double> log_choose_;
};

/// p_theta(x) = theta exp(-theta x) on (0, inf).
class ExponentialModel final : public UnnormalizedModel {
 public:
  ExponentialModel();

  std::string name() const override { return "exponential"; }
  ModelKind kind() const override { return ModelKind::exponential; }
  const ParamSpace& param_space() const override { return params_; }
  const SampleSpace& sample_space() const override { return space_; }
  double log_f(double theta, SamplePoint x) const override;
  double log_Z(double) const override { return 0.0; }
  SamplePoint draw(double theta, RngStream& rng) const override;
  std::pair<double, double> effective_support(double theta) const override;

 private:
  ParamSpace params_ = ParamSpace::interval(0.0, kInf);
  SampleSpace space_ = SampleSpace::continuum(0.0, kInf);
};

/// Poisson(theta), enumerated up to cumulative mass 1 - 1e-12.
class PoissonModel final : public UnnormalizedModel {
 public:
  static constexpr double kTailMass = 1e-12;

  PoissonModel();

  std::string name() const override { return "poisson"; }
  ModelKind kind() const override { return ModelKind::poisson; }
  const ParamSpace& param_space() const override { return params_; }
  const SampleSpace& sample_space() const override { return space_; }
  double log_f(double theta, SamplePoint x) const override;
  double log_Z(double) const override { return 0.0; }
  SamplePoint draw(double theta, RngStream& rng) const override;
  std::size_t enumeration_size(double theta) const override;

 private:
  ParamSpace params_ = ParamSpace::interval(0.0, kInf);
  SampleSpace space_ = SampleSpace::countable();
};

/// N(theta, 1) with f_theta(x) = exp(-(x - theta)^2 / 2), Z = sqrt(2 pi).
class GaussianLocationModel final : public UnnormalizedModel {
 public:
  GaussianLocationModel();

  std::string name() const override { return "gaussian-location"; }
  ModelKind kind() const override { return ModelKind::gaussian_location; }
  const ParamSpace& param_space() const override { return params_; }
  const SampleSpace& sample_space() const override { return space_; }
  double log_f(double theta, SamplePoint x) const override;
  double log_Z(double theta) const override;
  SamplePoint draw(double theta, RngStream& rng) const override;
  std::pair<double, double> effective_support(double theta) const override;

 private:
  ParamSpace params_ = ParamSpace::real_line();
  SampleSpace space_ = SampleSpace::continuum(-kInf, kInf);
};

/// Shared machinery for exponential families on a finite space whose
/// points group into levels of the sufficient statistic. Z is a sum over
/// levels and exact draws pick a level, then a uniform member.
class LevelledExponentialFamily : public UnnormalizedModel {
 public:
  const ParamSpace& param_space() const override { return params_; }
  const SampleSpace& sample_space() const override { return space_; }
  double log_f(double theta, SamplePoint x) const override;
  double log_Z(double theta) const override;
  SamplePoint draw(double theta, RngStream& rng) const override;
  std::vector<SupportClass> support_classes(std::span<const double> thetas) const override;
  bool is_exponential_family() const override { return true; }
  std::optional<double> sufficient_stat(SamplePoint x) const override;
  std::optional<double> sufficient_stat_bound() const override { return stat_bound_; }

  /// Distinct values of T with their multiplicities.
  const std::vector<double>& level_values() const noexcept { return level_values_; }
  const std::vector<std::vector<std::uint32_t>>& level_members() const noexcept {
    return level_members_;
  }

 protected:
  LevelledExponentialFamily(ParamSpace params, std::vector<double> stat_per_point);

 private:
  std::size_t point_index(SamplePoint x) const;

  ParamSpace params_;
  SampleSpace space_;
  std::vector<double> stat_;
  std::vector<std::uint32_t> level_of_point_;
  std::vector<double> level_values_;
  std::vector<std::vector<std::uint32_t>> level_members_;
  double stat_bound_ = 0.0;
};

struct IsingEdge {
  int i = 0;
  int j = 0;
  double coupling = 1.0;
};

/// P_theta(sigma) = exp(-theta H(sigma)) / Z(theta) with
/// H(sigma) = -sum J_ij s_i s_j - field * sum s_i. Sample point k encodes
/// spin i as +1 when bit i of k is set. Sufficient statistic T = -H.
class IsingModel final : public LevelledExponentialFamily {
 public:
  static constexpr int kMaxVertices = 20;

  IsingModel(int vertices, std::vector<IsingEdge> edges, double field,
             ParamSpace params = ParamSpace::real_line());

  std::string name() const override { return "ising"; }
  ModelKind kind() const override { return ModelKind::ising; }
  int vertices() const noexcept { return vertices_; }
  const std::vector<IsingEdge>& edges() const noexcept { return edges_; }
  double field() const noexcept { return field_; }
  double hamiltonian(std::uint64_t config) const;

 private:
  int vertices_;
  std::vector<IsingEdge> edges_;
  double field_;
};

enum class GraphStatistic { edge_count, triangle_count };

/// P_theta(g) = exp(theta s(g)) / Z(theta) over simple undirected graphs on
/// n vertices. Sample point k is the bitmask of present edges in
/// lexicographic (i < j) order.
class ErgmModel final : public LevelledExponentialFamily {
 public:
  static constexpr int kMaxVertices = 5;

  ErgmModel(int vertices, GraphStatistic statistic,
            ParamSpace params = ParamSpace::real_line());

  std::string name() const override { return "ergm"; }
  ModelKind kind() const override { return ModelKind::ergm; }
  int vertices() const noexcept { return vertices_; }
  GraphStatistic statistic() const noexcept { return statistic_; }
  static double graph_statistic(int vertices, GraphStatistic statistic, std::uint64_t mask);

 private:
  int vertices_;
  GraphStatistic statistic_;
};

}  // namespace exmc
