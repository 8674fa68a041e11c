#include "takiff/invariants.hpp"

#include <sstream>
#include <stdexcept>

namespace takiff {

void validate_spec(const InvariantSpec& s, int rank, int level) {
  if (s.power < 2 || s.power > rank + 1 || s.index < 0 || s.index > (s.power - 1) * level) {
    std::ostringstream os;
    os << "InvariantSpec(power=" << s.power << ", index=" << s.index
       << ") out of range for rank " << rank << ", level " << level;
    throw std::out_of_range(os.str());
  }
}

std::vector<InvariantSpec> all_invariant_specs(int rank, int level) {
  std::vector<InvariantSpec> out;
  for (int k = 2; k <= rank + 1; ++k)
    for (int j = 0; j <= (k - 1) * level; ++j) out.push_back({k, j});
  return out;
}

std::vector<InvariantSpec> adjoint_invariant_specs(int rank, int level) {
  std::vector<InvariantSpec> out;
  for (const auto& s : all_invariant_specs(rank, level))
    if (is_adjoint_invariant(s, level)) out.push_back(s);
  return out;
}

}  // namespace takiff
