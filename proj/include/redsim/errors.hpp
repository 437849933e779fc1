#pragma once

#include <stdexcept>
#include <string>

namespace redsim {

// Error taxonomy shared by all modules. The CLI maps these onto process
// exit codes (usage=1, no_design=2, underrun=3, everything else=4).
class invalid_parameter : public std::runtime_error {
 public:
  explicit invalid_parameter(const std::string& msg) : std::runtime_error(msg) {}
};

class no_design_available : public std::runtime_error {
 public:
  explicit no_design_available(const std::string& msg) : std::runtime_error(msg) {}
};

class unsupported_parameters : public std::runtime_error {
 public:
  explicit unsupported_parameters(const std::string& msg) : std::runtime_error(msg) {}
};

class degenerate_overlap : public std::runtime_error {
 public:
  explicit degenerate_overlap(const std::string& msg) : std::runtime_error(msg) {}
};

class simulation_underrun : public std::runtime_error {
 public:
  explicit simulation_underrun(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace redsim
