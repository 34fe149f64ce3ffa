#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sixv {

/// Up-arrow positions r_1 < ... < r_s on row s of an N x N lattice,
/// counted from the right (1-based).
class RowConfig {
 public:
  RowConfig(std::size_t n, std::vector<std::size_t> positions);

  std::size_t size() const { return n_; }
  std::size_t row() const { return positions_.size(); }
  const std::vector<std::size_t>& positions() const { return positions_; }
  std::size_t position(std::size_t j) const { return positions_.at(j - 1); }  // r_j, 1-based j
  bool contains(std::size_t alpha) const;

  /// Bit r-1 set for every position r.
  std::uint64_t mask() const;

  /// All configurations of row s in lexicographic order.
  static std::vector<RowConfig> all(std::size_t n, std::size_t s);

  std::string str() const;

  friend bool operator==(const RowConfig&, const RowConfig&) = default;

 private:
  std::size_t n_;
  std::vector<std::size_t> positions_;
};

}  // namespace sixv
