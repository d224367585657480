#include "lec/edge_colouring.hpp"

#include <algorithm>

#include "lec/error.hpp"

namespace lec {

EdgeColouring::EdgeColouring(std::vector<int> colours) : colours_(std::move(colours)) {
  for (int c : colours_) {
    if (c <= 0) throw Error(ErrorCode::kPartialColouring, "partial colouring: uncoloured edge");
  }
}

int EdgeColouring::k() const {
  std::vector<int> sorted = colours_;
  std::sort(sorted.begin(), sorted.end());
  return static_cast<int>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

int EdgeColouring::max_colour() const {
  return colours_.empty() ? 0 : *std::max_element(colours_.begin(), colours_.end());
}

EdgeColouring EdgeColouring::compacted() const {
  std::vector<int> used = colours_;
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  std::vector<int> out;
  out.reserve(colours_.size());
  for (int c : colours_) {
    out.push_back(static_cast<int>(std::lower_bound(used.begin(), used.end(), c) - used.begin()) + 1);
  }
  return EdgeColouring(std::move(out));
}

void require_total(const Graph& g, const EdgeColouring& c) {
  if (c.size() != g.size()) {
    throw Error(ErrorCode::kPartialColouring,
                "partial colouring: " + std::to_string(c.size()) + " colours for " +
                    std::to_string(g.size()) + " edges");
  }
}

}  // namespace lec
