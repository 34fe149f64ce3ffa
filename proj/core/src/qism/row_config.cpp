#include "sixv/qism/row_config.hpp"

#include "sixv/error.hpp"

#include <algorithm>

namespace sixv {

RowConfig::RowConfig(std::size_t n, std::vector<std::size_t> positions) : n_(n), positions_(std::move(positions)) {
  if (n_ == 0) throw DomainError("lattice size must be positive");
  if (positions_.size() > n_) throw DomainError("row index exceeds lattice size");
  for (std::size_t j = 0; j < positions_.size(); ++j) {
    if (positions_[j] < 1 || positions_[j] > n_) {
      throw DomainError("position " + std::to_string(positions_[j]) + " outside 1.." + std::to_string(n_));
    }
    if (j > 0 && positions_[j] <= positions_[j - 1]) throw DomainError("positions must be strictly increasing");
  }
}

bool RowConfig::contains(std::size_t alpha) const {
  return std::binary_search(positions_.begin(), positions_.end(), alpha);
}

std::uint64_t RowConfig::mask() const {
  std::uint64_t m = 0;
  for (std::size_t r : positions_) m |= std::uint64_t{1} << (r - 1);
  return m;
}

std::vector<RowConfig> RowConfig::all(std::size_t n, std::size_t s) {
  if (s > n) throw DomainError("row index exceeds lattice size");
  std::vector<RowConfig> out;
  std::vector<std::size_t> p(s);
  for (std::size_t j = 0; j < s; ++j) p[j] = j + 1;
  while (true) {
    out.emplace_back(n, p);
    // Advance to the next increasing sequence in lexicographic order.
    std::size_t j = s;
    while (j > 0 && p[j - 1] == n - s + j) --j;
    if (j == 0) break;
    ++p[j - 1];
    for (std::size_t i = j; i < s; ++i) p[i] = p[i - 1] + 1;
  }
  return out;
}

std::string RowConfig::str() const {
  std::string s = "(";
  for (std::size_t j = 0; j < positions_.size(); ++j) {
    if (j) s += ",";
    s += std::to_string(positions_[j]);
  }
  return s + ")";
}

}  // namespace sixv
