#include "exmc/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "exmc/comparison.hpp"
#include "exmc/conditions.hpp"
#include "exmc/discretize.hpp"
#include "exmc/divergence.hpp"
#include "exmc/errors.hpp"
#include "exmc/kernel.hpp"
#include "exmc/matrices.hpp"
#include "exmc/output_analysis.hpp"
#include "exmc/rejection.hpp"
#include "exmc/spectrum.hpp"
#include "exmc/zoo.hpp"
#include "report_json.hpp"

namespace exmc {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Typed access to a config block's parameters; finish() rejects keys that
// were never read.
class Params {
 public:
  Params(const ConfigBlock& block, std::string path) : block_(block), path_(std::move(path)) {}

  double number(const std::string& key) {
    const auto v = maybe(key);
    if (!v) throw ConfigError(path_ + "." + key, "missing value");
    return *v;
  }
  double number(const std::string& key, double fallback) { return maybe(key).value_or(fallback); }
  std::optional<double> maybe(const std::string& key) {
    const auto* s = lookup(key);
    if (!s) return std::nullopt;
    return parse(*s, key);
  }
  int integer(const std::string& key) {
    const double v = number(key);
    if (v != std::floor(v) || std::abs(v) > 1e9) {
      throw ConfigError(path_ + "." + key, "expected an integer");
    }
    return static_cast<int>(v);
  }
  std::string text(const std::string& key, const std::string& fallback = {}) {
    const auto* s = lookup(key);
    return s ? *s : fallback;
  }
  std::vector<double> list(const std::string& key) {
    const auto* s = lookup(key);
    std::vector<double> out;
    if (!s) return out;
    std::string item;
    std::string cleaned = *s;
    std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
    std::istringstream items(cleaned);
    while (items >> item) out.push_back(parse(item, key));
    return out;
  }
  void finish() const {
    for (const auto& [k, v] : block_.params) {
      if (!used_.count(k)) throw ConfigError(path_ + "." + k, "unknown field for type " + block_.type);
    }
  }
  const std::string& path() const { return path_; }

 private:
  const std::string* lookup(const std::string& key) {
    used_.insert(key);
    return block_.find(key);
  }
  double parse(const std::string& s, const std::string& key) const {
    try {
      std::size_t pos = 0;
      const double v = std::stod(s, &pos);
      if (pos != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw ConfigError(path_ + "." + key, "expected a number, got '" + s + "'");
    }
  }

  const ConfigBlock& block_;
  std::string path_;
  std::set<std::string> used_;
};

template <typename Fn>
auto guarded(const std::string& path, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const ConfigError&) {
    throw;
  } catch (const BudgetError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ConfigError(path, e.what());
  } catch (const std::domain_error& e) {
    throw ConfigError(path, e.what());
  } catch (const ModelMismatchError& e) {
    throw ConfigError(path, e.what());
  } catch (const UndefinedDensityError& e) {
    throw ConfigError(path, e.what());
  }
}

ParamSpace interval_from(Params& p, double lo, double hi) {
  return ParamSpace::interval(p.number("lo", lo), p.number("hi", hi));
}

ModelPtr build_model(const ConfigBlock& block) {
  Params p(block, "model");
  return guarded("model", [&]() -> ModelPtr {
    ModelPtr m;
    const auto& t = block.type;
    if (t == "bernoulli") {
      auto thetas = p.list("thetas");
      if (thetas.empty()) {
        m = std::make_shared<BernoulliModel>(interval_from(p, 0.0, 1.0));
      } else {
        std::sort(thetas.begin(), thetas.end());
        m = std::make_shared<BernoulliModel>(ParamSpace::finite(thetas));
      }
    } else if (t == "binomial") {
      const int n = p.integer("trials");
      m = std::make_shared<BinomialModel>(n, interval_from(p, 0.0, 1.0));
    } else if (t == "exponential") {
      m = std::make_shared<ExponentialModel>();
    } else if (t == "poisson") {
      m = std::make_shared<PoissonModel>();
    } else if (t == "gaussian-location") {
      m = std::make_shared<GaussianLocationModel>();
    } else if (t == "ising") {
      const int n = p.integer("vertices");
      auto edges = parse_ising_edges(p.text("edges", "[]"));
      const double field = p.number("field", 0.0);
      m = make_ising(n, std::move(edges), field, interval_from(p, -kInf, kInf));
    } else if (t == "ergm") {
      const int n = p.integer("vertices");
      const auto stat = p.text("statistic", "edge-count");
      GraphStatistic s;
      if (stat == "edge-count") s = GraphStatistic::edge_count;
      else if (stat == "triangle-count") s = GraphStatistic::triangle_count;
      else throw ConfigError("model.statistic", "expected edge-count or triangle-count");
      m = make_ergm(n, s, interval_from(p, -kInf, kInf));
    } else {
      throw ConfigError("model.type", "unknown model type '" + t + "'");
    }
    p.finish();
    return m;
  });
}

Prior build_prior(const ConfigBlock& block, const ModelPtr& model, const std::string& path) {
  Params p(block, path);
  return guarded(path, [&]() -> Prior {
    const auto& t = block.type;
    std::optional<Prior> prior;
    if (t == "gamma") {
      prior = Prior::gamma(p.number("shape"), p.number("rate"));
    } else if (t == "exponential") {
      prior = Prior::exponential(p.number("rate", 1.0));
    } else if (t == "truncated-beta") {
      prior = Prior::truncated_beta(p.number("a"), p.number("b"), p.number("lo", 0.0),
                                    p.number("hi", 1.0));
    } else if (t == "gaussian") {
      prior = Prior::gaussian(p.number("mean", 0.0), p.number("sd"));
    } else if (t == "truncated-gaussian") {
      prior = Prior::truncated_gaussian(p.number("mean", 0.0), p.number("sd"), p.number("lo"),
                                        p.number("hi"));
    } else if (t == "cauchy") {
      prior = Prior::cauchy(p.number("location", 0.0), p.number("scale", 1.0));
    } else if (t == "discrete") {
      prior = Prior::discrete(p.list("points"), p.list("masses"));
    } else if (t == "conjugate") {
      prior = make_conjugate_prior(model, p.number("n0"), p.number("t"));
    } else if (t == "mixture") {
      std::vector<Prior> parts;
      for (std::size_t i = 0; i < block.components.size(); ++i) {
        parts.push_back(build_prior(block.components[i], model,
                                    path + ".component[" + std::to_string(i) + "]"));
      }
      prior = Prior::mixture(p.list("weights"), std::move(parts));
    } else {
      throw ConfigError(path + ".type", "unknown prior type '" + t + "'");
    }
    p.finish();
    return *prior;
  });
}

Proposal build_proposal(const ConfigBlock& block, const Prior& prior) {
  Params p(block, "proposal");
  return guarded("proposal", [&]() -> Proposal {
    const auto& t = block.type;
    std::optional<Proposal> q;
    if (t == "random-walk-gaussian") {
      q = Proposal::random_walk_gaussian(p.number("scale", 1.0));
    } else if (t == "random-walk-uniform") {
      q = Proposal::random_walk_uniform(p.number("half_width", 1.0));
    } else if (t == "random-walk-cauchy") {
      q = Proposal::random_walk_cauchy(p.number("scale", 1.0));
    } else if (t == "independence-uniform") {
      q = Proposal::independence_uniform(p.number("lo"), p.number("hi"));
    } else if (t == "independence-gamma") {
      q = Proposal::independence_gamma(p.number("shape"), p.number("rate"));
    } else if (t == "discrete-uniform") {
      if (!prior.support().is_finite()) {
        throw ConfigError("proposal.type", "discrete-uniform needs a discrete prior");
      }
      q = Proposal::discrete_uniform(prior.support().points());
    } else {
      throw ConfigError("proposal.type", "unknown proposal type '" + t + "'");
    }
    p.finish();
    return *q;
  });
}

std::string timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

Json chain_json(const FiniteChain& chain) {
  Json j;
  j["label"] = chain.label;
  j["grid"] = numbers(chain.grid);
  j["pi"] = numbers(std::span<const double>(chain.pi.data(), static_cast<std::size_t>(chain.pi.size())));
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < chain.P.rows(); ++i) {
    Json r = Json::array();
    for (Eigen::Index k = 0; k < chain.P.cols(); ++k) r.push_back(number(chain.P(i, k)));
    rows.push_back(std::move(r));
  }
  j["P"] = std::move(rows);
  return j;
}

struct Grid {
  std::optional<DiscretizedProblem> problem;
  std::optional<FiniteChain> mh;
  std::optional<FiniteChain> ex;
};

std::vector<double> subsample(const std::vector<double>& pts, std::size_t max_points) {
  if (pts.size() <= max_points) return pts;
  std::vector<double> out;
  for (std::size_t i = 0; i < max_points; ++i) {
    out.push_back(pts[i * (pts.size() - 1) / (max_points - 1)]);
  }
  return out;
}

std::vector<Algorithm> algorithms(AlgorithmChoice c) {
  switch (c) {
    case AlgorithmChoice::mh: return {Algorithm::mh};
    case AlgorithmChoice::exchange: return {Algorithm::exchange};
    case AlgorithmChoice::both: return {Algorithm::mh, Algorithm::exchange};
  }
  return {};
}

}  // namespace

BuiltExperiment build_experiment(const ExperimentConfig& config) {
  auto model = build_model(config.model);
  auto prior = build_prior(config.prior, model, "prior");
  auto proposal = build_proposal(config.proposal, prior);
  auto posterior = guarded("prior", [&] { return PosteriorSpec(model, prior, config.data); });
  BuiltExperiment b{model, prior, posterior, proposal, {}};
  if (model->kind() == ModelKind::ergm && !prior.support().is_finite() &&
      (!std::isfinite(prior.support().lo()) || !std::isfinite(prior.support().hi()))) {
    b.notes.push_back("ERGM on an unbounded parameter space: the " + to_string(prior.family()) +
                      " prior is a configured default, not one prescribed by the model");
  }
  return b;
}

bool ExperimentResult::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.satisfied; });
}

ExperimentResult run_experiment(const ExperimentConfig& config, const RunOptions& options) {
  auto built = build_experiment(config);
  const auto& posterior = built.posterior;
  const auto& model = *built.model;
  const bool discrete = built.prior.support().is_finite();

  ExperimentResult result;
  if (options.seed) result.seed = *options.seed;
  else if (config.seed) result.seed = *config.seed;
  else result.seed = (static_cast<std::uint64_t>(std::random_device{}()) << 32) ^ std::random_device{}();

  const unsigned threads = std::max(1u, options.threads);
  const std::string config_text = serialize_config(config);
  if (options.write_files) std::filesystem::create_directories(options.out_dir);

  // Starting state.
  double theta0 = 0.0;
  if (config.theta0) {
    theta0 = *config.theta0;
    if (posterior.log_unnormalized(theta0) == kNegInf) {
      throw ConfigError("theta0", "initial state has zero posterior density");
    }
  } else if (discrete) {
    const auto w = posterior.grid_posterior();
    theta0 = built.prior.support().points()[static_cast<std::size_t>(
        std::max_element(w.begin(), w.end()) - w.begin())];
  } else {
    const auto [a, b] = posterior_mass_interval(posterior, 0.5);
    theta0 = 0.5 * (a + b);
  }

  // Grid chains, built once when any check needs them.
  Grid grid;
  const bool needs_grid = config.has_check("spectrum") || config.has_check("peskun") ||
                          config.has_check("variance-sandwich") || config.has_check("clt") ||
                          discrete;
  if (needs_grid) {
    GridSpec gs;
    if (config.grid) {
      gs.lo = config.grid->lo;
      gs.hi = config.grid->hi;
      gs.size = config.grid->size;
    }
    grid.problem = guarded("grid", [&] { return discretize(posterior, built.proposal, gs); });
    grid.mh = build_mh_matrix(*grid.problem);
    grid.ex = build_exchange_matrix(*grid.problem, threads);
    if (!discrete) {
      built.notes.push_back("grid spectra and variances describe a " +
                            std::to_string(grid.problem->grid.size()) +
                            "-point trapezoid discretization, a surrogate for the continuum operator");
    }
    if (options.write_files) {
      std::ofstream a(options.out_dir / "matrix_mh.csv");
      write_matrix_csv(*grid.mh, a);
      std::ofstream b(options.out_dir / "matrix_exchange.csv");
      write_matrix_csv(*grid.ex, b);
    }
  }

  Json report;
  report["name"] = config.name;
  report["generated_at"] = timestamp();
  report["seed"] = result.seed;
  char hash[17];
  std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(fnv1a(config_text)));
  report["config_hash"] = hash;
  report["config"] = config_text;
  report["model"] = model.name();
  report["prior_family"] = to_string(built.prior.family());
  report["proposal"] = built.proposal.label();
  report["theta0"] = number(theta0);

  // Traces on the configured (not discretized) posterior.
  Json traces = Json::array();
  std::size_t alg_index = 0;
  for (const auto alg : algorithms(config.algorithm)) {
    const KernelSpec spec(alg, built.proposal, posterior, config.laziness);
    const std::uint64_t seed = mix_seed(result.seed, 1 + alg_index++);
    const auto trace = run_chain(spec, theta0, config.steps, seed);
    Json t;
    t["algorithm"] = to_string(alg);
    t["seed"] = seed;
    t["steps"] = trace.steps();
    std::size_t accepted = 0;
    std::size_t held = 0;
    for (auto o : trace.outcomes) {
      accepted += o == StepOutcome::accepted;
      held += o == StepOutcome::held;
    }
    const double n = static_cast<double>(trace.steps());
    t["acceptance_rate"] = number(accepted / n);
    t["held_rate"] = number(held / n);
    t["mean_theta"] = number(mean(trace.states));
    if (discrete) {
      const auto w = posterior.grid_posterior();
      double m = 0.0;
      for (std::size_t i = 0; i < w.size(); ++i) m += w[i] * built.prior.support().points()[i];
      t["posterior_mean_theta"] = number(m);
    } else {
      t["posterior_mean_theta"] = number(posterior_expectation(posterior, [](double x) { return x; }));
    }
    if (trace.states.size() >= config.batches * config.batches) {
      t["batch_means_variance_theta"] =
          number(batch_means_variance(trace, [](double x) { return x; }, config.batches));
    }
    if (discrete && grid.mh) {
      auto chain = alg == Algorithm::mh ? *grid.mh : *grid.ex;
      if (config.laziness < 1.0) chain = lazy_matrix(chain, config.laziness);
      const auto s = spectrum(chain);
      if (std::max(std::abs(s.m), std::abs(s.M)) < 1.0 - 1e-12) {
        const auto f = marginal_frequency_test(trace, chain);
        t["frequency_test"] = {{"chi_square", number(f.fit.statistic)},
                               {"dof", number(f.fit.dof)},
                               {"p_value", number(f.fit.p_value)},
                               {"thin", f.thin}};
      }
    }
    if (options.write_files) {
      const std::string stem = (alg == Algorithm::mh && config.algorithm == AlgorithmChoice::both)
                                   ? "trace_mh"
                                   : "trace";
      std::ofstream csv(options.out_dir / (stem + ".csv"));
      write_trace_csv(trace, csv);
      std::ofstream side(options.out_dir / (stem + ".json"));
      side << trace_sidecar_json(trace, config_text, to_string(alg));
    }
    traces.push_back(std::move(t));
  }
  report["traces"] = std::move(traces);

  if (grid.problem) {
    Json g;
    g["size"] = grid.problem->grid.size();
    g["lo"] = number(grid.problem->grid.front());
    g["hi"] = number(grid.problem->grid.back());
    g["discretized"] = !discrete;
    if (grid.problem->grid.size() <= 30) {
      g["mh"] = chain_json(*grid.mh);
      g["exchange"] = chain_json(*grid.ex);
    }
    report["grid"] = std::move(g);
  }

  Json checks = Json::array();
  auto record = [&](const std::string& name, bool ok, const std::string& detail, Json body) {
    body["check"] = name;
    body["satisfied"] = ok;
    body["detail"] = detail;
    Json ordered;
    ordered["check"] = name;
    ordered["satisfied"] = ok;
    ordered["detail"] = detail;
    for (auto& [k, v] : body.items()) {
      if (k != "check" && k != "satisfied" && k != "detail") ordered[k] = v;
    }
    checks.push_back(std::move(ordered));
    result.checks.push_back({name, detail, ok});
  };
  auto failure = [&](const std::string& name, const std::exception& e) {
    record(name, false, std::string("error: ") + e.what(), Json::object());
  };

  std::vector<std::pair<std::string, const FiniteChain*>> chains;
  std::vector<FiniteChain> lazy;
  if (grid.mh) {
    chains = {{"mh", &*grid.mh}, {"exchange", &*grid.ex}};
    if (config.laziness < 1.0) {
      lazy.push_back(lazy_matrix(*grid.mh, config.laziness));
      lazy.push_back(lazy_matrix(*grid.ex, config.laziness));
      chains.push_back({"mh-lazy", &lazy[0]});
      chains.push_back({"exchange-lazy", &lazy[1]});
    }
  }

  for (const auto& check : config.checks) {
    try {
      if (check == "spectrum") {
        Json body;
        bool ok = true;
        std::string detail;
        for (const auto& [label, chain] : chains) {
          const auto s = spectrum(*chain);
          const auto res = residuals(*chain);
          const auto unit = std::count_if(s.eigenvalues.begin(), s.eigenvalues.end(),
                                          [](double l) { return std::abs(l - 1.0) <= 1e-10; });
          const bool in_range = s.eigenvalues.front() >= -1.0 - 1e-10 &&
                                s.eigenvalues.back() <= 1.0 + 1e-10;
          const bool this_ok = in_range && unit == 1 && res.row_sum <= 1e-12 &&
                               res.stationarity <= 1e-10 && res.reversibility <= 1e-10;
          ok = ok && this_ok;
          body[label] = {{"m", number(s.m)},
                         {"M", number(s.M)},
                         {"gap", number(s.gap)},
                         {"unit_eigenvalues", unit},
                         {"row_sum_residual", number(res.row_sum)},
                         {"stationarity_residual", number(res.stationarity)},
                         {"reversibility_residual", number(res.reversibility)},
                         {"eigenvalues", numbers(s.eigenvalues)}};
          detail += (detail.empty() ? "" : "; ") + label + ": m=" + fmt(s.m) + " M=" + fmt(s.M) +
                    " gap=" + fmt(s.gap);
        }
        record(check, ok, detail, std::move(body));
      } else if (check == "peskun") {
        const auto r = peskun_compare(*grid.mh, *grid.ex);
        const auto smh = spectrum(*grid.mh);
        const auto sex = spectrum(*grid.ex);
        Json body = {{"off_diagonal_margin", number(r.off_diagonal_margin)},
                     {"diagonal_margin", number(r.diagonal_margin)},
                     {"tolerance", number(r.tolerance)},
                     {"M_mh", number(smh.M)},
                     {"M_exchange", number(sex.M)},
                     {"sup_spectrum_ordered", sex.M >= smh.M - 1e-10}};
        record(check, r.holds, "margins off-diagonal " + fmt(r.off_diagonal_margin) +
                                   ", diagonal " + fmt(r.diagonal_margin),
               std::move(body));
      } else if (check == "variance-sandwich") {
        const auto& g = grid.mh->grid;
        const double mid = 0.5 * (g.front() + g.back());
        const std::vector<std::pair<std::string, std::function<double(double)>>> fns{
            {"theta", [](double t) { return t; }},
            {"theta^2", [](double t) { return t * t; }},
            {"upper-half", [mid](double t) { return t > mid ? 1.0 : 0.0; }}};
        Json body = Json::array();
        bool ok = true;
        std::string detail;
        for (const auto& [label, fn] : fns) {
          const auto h = evaluate_on_grid(*grid.mh, fn);
          const auto r = variance_sandwich_check(*grid.mh, *grid.ex, h);
          ok = ok && r.holds;
          body.push_back({{"h", label},
                          {"sigma2_mh", number(r.sigma2_mh)},
                          {"sigma2_exchange", number(r.sigma2_ex)},
                          {"upper", number(r.upper)},
                          {"m_mh", number(r.m_mh)},
                          {"M_exchange", number(r.M_ex)},
                          {"degenerate", r.degenerate},
                          {"divergent", r.divergent},
                          {"holds", r.holds}});
          detail += (detail.empty() ? "" : "; ") + label + ": " + fmt(r.sigma2_mh) + " <= " +
                    fmt(r.sigma2_ex) + (r.degenerate ? " (left only)" : " <= " + fmt(r.upper));
        }
        record(check, ok, detail, Json{{"functions", std::move(body)}});
      } else if (check == "tv-modulus") {
        std::vector<double> thetas;
        std::vector<double> shifts;
        TvModulus mod;
        switch (model.kind()) {
          case ModelKind::gaussian_location:
            mod = TvModulus::location_profile;
            thetas = {-2, -1, 0, 0.5, 1, 2};
            shifts = {0.1, 0.5, 1, 2};
            break;
          case ModelKind::poisson:
            mod = TvModulus::poisson_coupling;
            thetas = {0.5, 1, 2, 5};
            shifts = {0.1, 0.5, 1, 2};
            break;
          default: {
            mod = TvModulus::pinsker_expfam;
            double lo = -2.0;
            double hi = 2.0;
            if (grid.problem) {
              lo = grid.problem->grid.front();
              hi = grid.problem->grid.back();
            }
            for (int i = 0; i < 20; ++i) thetas.push_back(lo + (hi - lo) * i / 19.0);
            shifts = {0.05, 0.1, 0.25, 0.5, 1.0};
            break;
          }
        }
        std::vector<double> usable;
        for (double t : thetas) {
          if (model.param_space().contains(t) && model.param_space().contains(t + shifts.back())) {
            usable.push_back(t);
          }
        }
        auto r = tv_modulus_check(model, mod, usable, shifts);
        Json body = bound_check_json(r);
        bool ok = r.satisfied;
        if (mod == TvModulus::pinsker_expfam) {
          std::vector<std::pair<double, double>> pairs;
          for (double t : usable) {
            for (double s : shifts) pairs.emplace_back(t, t + s);
          }
          const auto chain = pinsker_chain_check(model, pairs);
          ok = ok && chain.satisfied;
          body["pinsker_chain"] = bound_check_json(chain);
          body["M"] = number(*model.sufficient_stat_bound());
        }
        record(check, ok, to_string(mod) + ", worst margin " + fmt(r.worst_margin), std::move(body));
      } else if (check == "non-negligibility") {
        std::vector<double> thetas;
        if (grid.problem) {
          thetas = subsample(grid.problem->grid, 20);
        } else {
          const auto [a, b] = posterior_mass_interval(posterior, 0.9999);
          for (int i = 0; i < 20; ++i) thetas.push_back(a + (b - a) * i / 19.0);
        }
        const auto r = non_negligibility(model, config.delta, thetas);
        Json body = bound_check_json(r.to_bound_check());
        body["delta"] = number(r.delta);
        body["infimum"] = number(r.infimum);
        body["argmin"] = {number(r.argmin.first), number(r.argmin.second)};
        record(check, r.positive(), "grid infimum " + fmt(r.infimum) + " at delta " + fmt(r.delta),
               std::move(body));
      } else if (check == "tail") {
        if (discrete) {
          record(check, true, "finite parameter space: no tails", Json::object());
        } else {
          const auto r = tail_condition_check(posterior);
          Json body = bound_check_json(r.to_bound_check());
          body["best_alpha"] = number(r.best_alpha());
          body["two_sided"] = r.two_sided;
          record(check, r.passes(),
                 r.passes() ? "passes with alpha up to " + fmt(r.best_alpha())
                            : "no alpha on the search grid works",
                 std::move(body));
        }
      } else if (check == "clt") {
        Json body = Json::array();
        bool ok = true;
        std::string detail;
        std::size_t idx = 0;
        for (const auto alg : algorithms(config.algorithm)) {
          const KernelSpec spec(alg, grid.problem->proposal, grid.problem->posterior,
                                config.laziness);
          CltOptions o;
          o.replications = config.replications;
          o.steps = config.clt_steps;
          o.seed = mix_seed(result.seed, 100 + idx++);
          o.threads = threads;
          const auto r = clt_check(spec, [](double t) { return t; }, o);
          ok = ok && r.passes();
          body.push_back({{"algorithm", to_string(alg)},
                          {"status", to_string(r.status)},
                          {"sigma2", number(r.sigma2)},
                          {"ks_statistic", number(r.ks.statistic)},
                          {"p_value", number(r.ks.p_value)},
                          {"max_abs_scaled_sum", number(r.max_abs_scaled_sum)},
                          {"replications", r.replications},
                          {"steps", r.steps}});
          detail += (detail.empty() ? "" : "; ") + to_string(alg) + ": " + to_string(r.status) +
                    (r.status == CltStatus::degenerate ? "" : " p=" + fmt(r.ks.p_value));
        }
        record(check, ok, detail, Json{{"runs", std::move(body)}});
      } else if (check == "rejection-prob") {
        std::vector<double> thetas = config.rejection_thetas;
        if (thetas.empty()) thetas = {theta0};
        const auto t = rejection_table(posterior, built.proposal, thetas);
        Json body = bound_check_json(t.to_bound_check());
        body["thetas"] = numbers(t.thetas);
        body["values"] = numbers(t.values);
        body["strictly_increasing"] = t.strictly_increasing;
        std::string detail;
        for (std::size_t i = 0; i < t.values.size(); ++i) {
          detail += (i ? ", " : "") + fmt(t.thetas[i]) + ": " + fmt(t.values[i]);
        }
        record(check, t.to_bound_check().satisfied, detail, std::move(body));
      }
    } catch (const BudgetError&) {
      throw;
    } catch (const std::exception& e) {
      failure(check, e);
    }
  }

  report["notes"] = built.notes;
  report["checks"] = std::move(checks);
  report["passed"] = result.all_passed();
  result.report_json = report.dump(2) + "\n";

  std::ostringstream sum;
  sum << "experiment " << config.name << " (seed " << result.seed << ")\n";
  std::size_t passed = 0;
  for (const auto& c : result.checks) {
    char line[64];
    std::snprintf(line, sizeof line, "  %-18s %s  ", c.check.c_str(), c.satisfied ? "PASS" : "FAIL");
    sum << line << c.detail << '\n';
    passed += c.satisfied;
  }
  for (const auto& n : built.notes) sum << "  note: " << n << '\n';
  sum << "result: " << (result.all_passed() ? "PASS" : "FAIL") << " (" << passed << "/"
      << result.checks.size() << " checks)\n";
  result.summary = sum.str();

  if (options.write_files) {
    std::ofstream(options.out_dir / "report.json") << result.report_json;
    std::ofstream(options.out_dir / "summary.txt") << result.summary;
  }
  return result;
}

}  // namespace exmc
