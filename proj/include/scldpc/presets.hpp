#pragma once

#include <string>
#include <vector>

#include "scldpc/lifting.hpp"
#include "scldpc/protograph.hpp"

namespace scldpc {

// A named, fully specified code design: protograph, partition, lift size and
// chain length. "sc*" presets are coupled chains; "lc*" presets are the
// standalone local block codes; "tiny" is a minimal coupled chain for fast
// end-to-end runs.
struct Preset {
  std::string name;
  std::string description;
  int p = 0;
  int coupling_length = 1;
  bool coupled = true;
  Protograph b;
  PartitionMatrix part;  // all-H0 placeholder for uncoupled presets
};

std::vector<std::string> preset_names();
Preset make_preset(const std::string& name);
LiftedCode preset_code(const Preset& preset);

}  // namespace scldpc
