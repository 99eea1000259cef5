#include "exmc/kernel.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "exmc/errors.hpp"

namespace exmc {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double log_mh_ratio(double theta, double proposed, const PosteriorSpec& posterior,
                    const Proposal& proposal) {
  const double here = posterior.log_unnormalized(theta);
  if (here == kNegInf) {
    throw UndefinedDensityError("posterior density is zero at current state " + fmt(theta));
  }
  if (proposed == theta) return 0.0;
  const double there = posterior.log_unnormalized(proposed);
  if (there == kNegInf) return kNegInf;
  const double forward = proposal.log_q(theta, proposed);
  if (forward == kNegInf) return kNegInf;
  const double r = there + proposal.log_q(proposed, theta) - here - forward;
  return std::isnan(r) ? kNegInf : std::min(0.0, r);
}

// Checks that do not need the auxiliary draw; returns false when the
// proposal is rejected outright (zero prior mass at the proposed point).
bool exchange_admissible(double theta, double proposed, const IntractablePosterior& posterior) {
  if (posterior.prior().log_density(theta) == kNegInf) {
    throw UndefinedDensityError("prior density is zero at current state " + fmt(theta));
  }
  return posterior.prior().log_density(proposed) != kNegInf;
}

double log_exchange_ratio(double theta, double proposed, SamplePoint aux,
                          const IntractablePosterior& posterior, const Proposal& proposal) {
  if (proposed == theta) return 0.0;
  if (!exchange_admissible(theta, proposed, posterior)) return kNegInf;
  const auto& lik = posterior.likelihood();
  const double x = posterior.data();
  const double f_here_x = lik.log_f(theta, x);
  if (f_here_x == kNegInf) {
    throw UndefinedDensityError("likelihood f_theta(x) is zero at " + fmt(theta));
  }
  const double f_there_w = lik.log_f(proposed, aux);
  if (f_there_w == kNegInf) {
    throw UndefinedDensityError("auxiliary draw has f_theta'(w) = 0 at " + fmt(proposed));
  }
  const double forward = proposal.log_q(theta, proposed);
  if (forward == kNegInf) return kNegInf;
  const auto& prior = posterior.prior();
  const double r = prior.log_density(proposed) + proposal.log_q(proposed, theta) +
                   lik.log_f(proposed, x) + lik.log_f(theta, aux) - prior.log_density(theta) -
                   forward - f_here_x - f_there_w;
  return std::isnan(r) ? kNegInf : std::min(0.0, r);
}

}  // namespace

std::string to_string(Algorithm algorithm) {
  return algorithm == Algorithm::mh ? "mh" : "exchange";
}

KernelSpec::KernelSpec(Algorithm algorithm, Proposal proposal, PosteriorSpec posterior,
                       double laziness)
    : algorithm_(algorithm),
      proposal_(std::move(proposal)),
      posterior_(std::move(posterior)),
      z_blind_(posterior_.z_blind()),
      laziness_(laziness) {
  if (!(laziness > 0.0 && laziness <= 1.0)) {
    throw std::invalid_argument("laziness must lie in (0, 1], got " + fmt(laziness));
  }
}

KernelSpec KernelSpec::with_laziness(double laziness) const {
  return KernelSpec(algorithm_, proposal_, posterior_, laziness);
}

double mh_acceptance(double theta, double proposed, const PosteriorSpec& posterior,
                     const Proposal& proposal) {
  return std::exp(log_mh_ratio(theta, proposed, posterior, proposal));
}

double exchange_acceptance(double theta, double proposed, SamplePoint aux,
                           const IntractablePosterior& posterior, const Proposal& proposal) {
  return std::exp(log_exchange_ratio(theta, proposed, aux, posterior, proposal));
}

StepResult step(const KernelSpec& spec, double theta, ChainRng& rng) {
  StepResult result;
  result.theta = theta;
  result.proposed = theta;
  if (spec.laziness() < 1.0 && !(rng.lazy.uniform() < spec.laziness())) {
    result.outcome = StepOutcome::held;
    return result;
  }
  const double proposed = spec.proposal().sample(theta, rng.moves);
  result.proposed = proposed;
  double log_a = kNegInf;
  if (spec.algorithm() == Algorithm::mh) {
    log_a = log_mh_ratio(theta, proposed, spec.posterior(), spec.proposal());
  } else {
    const auto& zb = spec.z_blind();
    if (proposed == theta) {
      log_a = 0.0;
    } else if (exchange_admissible(theta, proposed, zb)) {
      const SamplePoint w = zb.likelihood().draw(proposed, rng.moves);
      result.aux = w;
      log_a = log_exchange_ratio(theta, proposed, w, zb, spec.proposal());
    }
  }
  result.acceptance = std::exp(log_a);
  const double u = rng.moves.uniform();
  if (std::log(u) <= log_a) {
    result.theta = proposed;
    result.outcome = StepOutcome::accepted;
  } else {
    result.outcome = StepOutcome::rejected;
  }
  return result;
}

void simulate(const KernelSpec& spec, double theta0, std::size_t steps, std::uint64_t seed,
              const std::function<void(std::size_t, const StepResult&)>& visit) {
  ChainRng rng(seed);
  double theta = theta0;
  for (std::size_t i = 0; i < steps; ++i) {
    const auto r = step(spec, theta, rng);
    theta = r.theta;
    visit(i, r);
  }
}

Trace run_chain(const KernelSpec& spec, double theta0, std::size_t steps, std::uint64_t seed) {
  if (steps < 1) throw std::invalid_argument("run_chain needs at least one step");
  Trace trace;
  trace.seed = seed;
  trace.states.reserve(steps + 1);
  trace.outcomes.reserve(steps);
  trace.aux.reserve(steps);
  trace.states.push_back(theta0);
  simulate(spec, theta0, steps, seed, [&](std::size_t, const StepResult& r) {
    trace.states.push_back(r.theta);
    trace.outcomes.push_back(r.outcome);
    trace.aux.push_back(r.aux);
  });
  return trace;
}

}  // namespace exmc
