#pragma once

#include "beliefdyn/config.hpp"

namespace beliefdyn {

// Deterministic random scenario construction. The network is a directed
// ring with self-loops plus random extra edges, rows normalized; logic
// matrices share a random pattern (diagonal forced), signs are shared
// across individuals unless `competition` asks for a deliberate conflict,
// and magnitudes are per-individual. Profiles that fail validation are
// resampled, at most 100 times, before GenerationExhausted.
ScenarioConfig generate_scenario(const GeneratorSpec& spec);

}  // namespace beliefdyn
