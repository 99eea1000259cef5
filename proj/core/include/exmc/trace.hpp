#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "exmc/space.hpp"

namespace exmc {

enum class StepOutcome : std::uint8_t { accepted, rejected, held };

struct Trace {
  std::vector<double> states;
  std::vector<StepOutcome> outcomes;
  std::vector<std::optional<SamplePoint>> aux;
  std::uint64_t seed = 0;

  std::size_t steps() const noexcept { return outcomes.size(); }
  bool accepted(std::size_t step) const { return outcomes.at(step) == StepOutcome::accepted; }
  bool held(std::size_t step) const { return outcomes.at(step) == StepOutcome::held; }
};

/// `step,theta,accepted,held`; row 0 is the initial state.
void write_trace_csv(const Trace& trace, std::ostream& out);

/// JSON sidecar with the seed, step count and a hash of the config text.
std::string trace_sidecar_json(const Trace& trace, std::string_view config_text,
                               std::string_view algorithm);

/// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view text) noexcept;

}  // namespace exmc
