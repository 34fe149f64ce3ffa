#include "sixv/algebra/antisym.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace sixv {

int permutation_sign(std::span<const std::size_t> p) {
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (p[i] > p[j]) sign = -sign;
    }
  }
  return sign;
}

const std::vector<SignedPermutation>& signed_permutations(std::size_t s) {
  if (s > kMaxAntisymmetrizeSize) throw BudgetError("permutation enumeration limited to 8 elements");
  static std::mutex mutex;
  static std::map<std::size_t, std::vector<SignedPermutation>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(s);
  if (it != cache.end()) return it->second;
  std::vector<SignedPermutation> out;
  std::vector<std::size_t> p(s);
  for (std::size_t i = 0; i < s; ++i) p[i] = i;
  do {
    out.push_back({p, permutation_sign(p)});
  } while (std::next_permutation(p.begin(), p.end()));
  return cache.emplace(s, std::move(out)).first->second;
}

}  // namespace sixv
