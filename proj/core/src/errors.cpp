#include "opsplit/errors.hpp"

namespace opsplit {

BlowupDetected::BlowupDetected(const std::string& what, double norm, double limit,
                               std::optional<std::size_t> step)
    : Error(what), norm_(norm), limit_(limit), step_(step) {}

BlowupDetected BlowupDetected::at_step(std::size_t step) const {
  return BlowupDetected(std::string(what()) + " (composite step " + std::to_string(step) + ")",
                        norm_, limit_, step);
}

}  // namespace opsplit
