#pragma once

#include <span>
#include <vector>

#include "lec/graph.hpp"

namespace lec {

/// Total map from edge ids to colours. Colours are positive integers; k() is
/// the number of distinct colours in use.
class EdgeColouring {
 public:
  EdgeColouring() = default;
  /// Throws lec::Error (kPartialColouring) on a non-positive colour.
  explicit EdgeColouring(std::vector<int> colours);

  int operator[](EdgeId e) const { return colours_[e]; }
  int size() const { return static_cast<int>(colours_.size()); }
  std::span<const int> colours() const { return colours_; }

  int k() const;
  int max_colour() const;

  /// Same partition, colours renumbered 1..k() in increasing order of the
  /// original colour values.
  EdgeColouring compacted() const;

  bool operator==(const EdgeColouring&) const = default;

 private:
  std::vector<int> colours_;
};

/// Throws lec::Error (kPartialColouring) unless `c` colours every edge of g.
void require_total(const Graph& g, const EdgeColouring& c);

}  // namespace lec
