#include "exmc/catalog.hpp"

#include <algorithm>

namespace exmc {

namespace {

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> c;
  c.push_back({"two-point",
               "two-state Bernoulli example: exact MH and exchange matrices, Peskun margins, "
               "variance ordering and the lag-one CLT",
               R"(name two-point
algorithm both
steps 100000
replications 2000
clt_steps 10000
seed 20190101
data 1
checks "spectrum peskun variance-sandwich clt rejection-prob"
rejection_thetas "0.25 0.75"
model
{
  type bernoulli
  thetas "0.25 0.75"
}
prior
{
  type discrete
  points "0.25 0.75"
  masses "0.75 0.25"
}
proposal
{
  type discrete-uniform
}
)"});
  c.push_back({"beta-binomial",
               "truncated Beta prior with binomial likelihood on a compact interval: uniform "
               "non-negligibility, independence-proposal positivity, CLT on the grid chain",
               R"(name beta-binomial
algorithm exchange
steps 100000
replications 2000
clt_steps 10000
seed 20190102
data 3
checks "spectrum peskun variance-sandwich non-negligibility clt"
model
{
  type binomial
  trials 10
  lo 0.2
  hi 0.8
}
prior
{
  type truncated-beta
  a 2
  b 2
  lo 0.2
  hi 0.8
}
proposal
{
  type independence-uniform
  lo 0.2
  hi 0.8
}
grid
{
  lo 0.2
  hi 0.8
  K 101
}
)"});
  c.push_back({"exponential-gamma",
               "exponential likelihood with Exp(1) prior and the exact posterior as independence "
               "proposal: MH accepts every move while the exchange rejection probability "
               "climbs toward 1",
               R"(name exponential-gamma
algorithm both
steps 100000
seed 20190103
data 1
checks "rejection-prob tail spectrum peskun variance-sandwich"
rejection_thetas "1 10 100 1000"
model
{
  type exponential
}
prior
{
  type exponential
  rate 1
}
proposal
{
  type independence-gamma
  shape 2
  rate 2
}
grid
{
  K 101
}
)"});
  c.push_back({"poisson-gamma",
               "Poisson likelihood with a Gamma prior: posterior exponential-tail check for a "
               "prior that decays beyond some point, and the coupling TV modulus 1 - exp(-s)",
               R"(name poisson-gamma
algorithm exchange
steps 100000
seed 20190104
data 3
checks "tail tv-modulus spectrum peskun variance-sandwich"
model
{
  type poisson
}
prior
{
  type gamma
  shape 2
  rate 1
}
proposal
{
  type random-walk-gaussian
  scale 1
}
grid
{
  K 61
}
)"});
  c.push_back({"gaussian-location",
               "Gaussian location family with Gaussian prior: TV depends only on the shift, "
               "posterior tail lighter than exponential",
               R"(name gaussian-location
algorithm exchange
steps 100000
seed 20190105
data 1
checks "tail tv-modulus spectrum peskun variance-sandwich"
model
{
  type gaussian-location
}
prior
{
  type gaussian
  mean 0
  sd 2
}
proposal
{
  type random-walk-gaussian
  scale 1
}
grid
{
  K 61
}
)"});
  c.push_back({"ising-n2",
               "single-edge Ising model: Pinsker bound TV <= sqrt(2) M / 2 sqrt(s) for a "
               "bounded sufficient statistic, Peskun ordering on a 20-point grid",
               R"(name ising-n2
algorithm exchange
steps 100000
seed 20190106
data 3
checks "tv-modulus spectrum peskun variance-sandwich"
model
{
  type ising
  vertices 2
  edges "[[0,1,1]]"
  field 0
}
prior
{
  type gaussian
  mean 0
  sd 1
}
proposal
{
  type random-walk-gaussian
  scale 0.5
}
grid
{
  lo -2
  hi 2
  K 20
}
)"});
  c.push_back({"ising-grid",
               "3x3 Ising lattice with a small field: exchange with exact enumeration sampling, "
               "Pinsker bound and Peskun ordering on a positive inverse-temperature grid",
               R"(name ising-grid
algorithm exchange
steps 20000
seed 20190107
data 511
checks "tv-modulus spectrum peskun"
model
{
  type ising
  vertices 9
  edges "[[0,1,1],[1,2,1],[3,4,1],[4,5,1],[6,7,1],[7,8,1],[0,3,1],[3,6,1],[1,4,1],[4,7,1],[2,5,1],[5,8,1]]"
  field 0.1
}
prior
{
  type truncated-gaussian
  mean 0.3
  sd 0.5
  lo 0
  hi 1
}
proposal
{
  type random-walk-gaussian
  scale 0.2
}
grid
{
  lo 0
  hi 1
  K 41
}
)"});
  c.push_back({"ergm-n4",
               "edge-count ERGM on four vertices: Pinsker bound with M = 6, Peskun and "
               "variance ordering on a 25-point grid",
               R"(name ergm-n4
algorithm exchange
steps 100000
seed 20190108
data 7
checks "tv-modulus spectrum peskun variance-sandwich"
model
{
  type ergm
  vertices 4
  statistic edge-count
}
prior
{
  type gaussian
  mean 0
  sd 1
}
proposal
{
  type random-walk-gaussian
  scale 0.5
}
grid
{
  lo -2
  hi 2
  K 25
}
)"});
  return c;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry* find_experiment(std::string_view name) {
  const auto& c = catalog();
  const auto it = std::find_if(c.begin(), c.end(), [&](const auto& e) { return e.name == name; });
  return it == c.end() ? nullptr : &*it;
}

}  // namespace exmc
