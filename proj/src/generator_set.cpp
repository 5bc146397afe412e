#include "coxconn/generator_set.hpp"

namespace coxconn {

std::vector<Generator> GeneratorSet::members() const {
  std::vector<Generator> out;
  for (Mask m = mask_; m; m &= m - 1) out.push_back(static_cast<Generator>(std::countr_zero(m)));
  return out;
}

std::string GeneratorSet::to_string(int label_offset) const {
  std::string out = "{";
  bool first = true;
  for (Generator s : members()) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(static_cast<int>(s) + label_offset);
  }
  return out + "}";
}

}  // namespace coxconn
