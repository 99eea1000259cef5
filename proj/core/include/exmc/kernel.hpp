#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "exmc/posterior.hpp"
#include "exmc/proposal.hpp"
#include "exmc/rng.hpp"
#include "exmc/trace.hpp"

namespace exmc {

enum class Algorithm { mh, exchange };

std::string to_string(Algorithm algorithm);

/// One transition rule: proposal, algorithm and laziness lambda in (0, 1].
/// The exchange kernel keeps only the Z-blind view of the posterior.
class KernelSpec {
 public:
  KernelSpec(Algorithm algorithm, Proposal proposal, PosteriorSpec posterior,
             double laziness = 1.0);

  Algorithm algorithm() const noexcept { return algorithm_; }
  const Proposal& proposal() const noexcept { return proposal_; }
  const PosteriorSpec& posterior() const noexcept { return posterior_; }
  const IntractablePosterior& z_blind() const noexcept { return z_blind_; }
  double laziness() const noexcept { return laziness_; }

  KernelSpec with_laziness(double laziness) const;

 private:
  Algorithm algorithm_;
  Proposal proposal_;
  PosteriorSpec posterior_;
  IntractablePosterior z_blind_;
  double laziness_;
};

/// Idealized MH acceptance min(1, q(t',t) pi(t'|x) / (q(t,t') pi(t|x))).
/// Reads the exact normalizer; throws UndefinedDensityError if pi(t|x) = 0.
double mh_acceptance(double theta, double proposed, const PosteriorSpec& posterior,
                     const Proposal& proposal);

/// Exchange acceptance min(1, a(t, t', w)). Only the Z-blind posterior is
/// visible here. Throws UndefinedDensityError if f_t(x) = 0 or f_t'(w) = 0.
double exchange_acceptance(double theta, double proposed, SamplePoint aux,
                           const IntractablePosterior& posterior, const Proposal& proposal);

/// Random streams owned by one chain. Lazy coins come from their own
/// stream, so a held step leaves the move stream untouched.
struct ChainRng {
  RngStream moves;
  RngStream lazy;

  explicit ChainRng(std::uint64_t seed) : moves(seed, 0), lazy(seed, 1) {}
};

struct StepResult {
  double theta = 0.0;
  StepOutcome outcome = StepOutcome::rejected;
  double proposed = 0.0;
  std::optional<SamplePoint> aux;
  double acceptance = 0.0;
};

/// One transition. With probability 1 - lambda the state is held without a
/// proposal; otherwise propose, draw w ~ p_t' for exchange, and accept iff
/// log u <= log a.
StepResult step(const KernelSpec& spec, double theta, ChainRng& rng);

/// Runs `steps` transitions from theta0, calling visit(step_index, result)
/// after each. Nothing is stored.
void simulate(const KernelSpec& spec, double theta0, std::size_t steps, std::uint64_t seed,
              const std::function<void(std::size_t, const StepResult&)>& visit);

Trace run_chain(const KernelSpec& spec, double theta0, std::size_t steps, std::uint64_t seed);

}  // namespace exmc
