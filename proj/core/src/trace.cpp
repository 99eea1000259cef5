#include "exmc/trace.hpp"

#include <cstdio>
#include <ostream>

#include "json.hpp"

namespace exmc {

void write_trace_csv(const Trace& trace, std::ostream& out) {
  out << "step,theta,accepted,held\n";
  char buf[64];
  for (std::size_t i = 0; i < trace.states.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g", trace.states[i]);
    int accepted = 0;
    int held = 0;
    if (i > 0) {
      accepted = trace.outcomes[i - 1] == StepOutcome::accepted;
      held = trace.outcomes[i - 1] == StepOutcome::held;
    }
    out << i << ',' << buf << ',' << accepted << ',' << held << '\n';
  }
}

std::string trace_sidecar_json(const Trace& trace, std::string_view config_text,
                               std::string_view algorithm) {
  std::size_t accepted = 0;
  std::size_t held = 0;
  for (auto o : trace.outcomes) {
    accepted += o == StepOutcome::accepted;
    held += o == StepOutcome::held;
  }
  char hash[17];
  std::snprintf(hash, sizeof hash, "%016llx",
                static_cast<unsigned long long>(fnv1a(config_text)));
  nlohmann::ordered_json doc;
  doc["algorithm"] = algorithm;
  doc["seed"] = trace.seed;
  doc["config_hash"] = hash;
  doc["steps"] = trace.steps();
  doc["accepted"] = accepted;
  doc["held"] = held;
  return doc.dump(2) + "\n";
}

std::uint64_t fnv1a(std::string_view text) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace exmc
