#include "gh/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gh {

std::vector<Permutation> enumerate_permutations(int n) {
  if (n < 2 || n > 8) throw UsageError("permutation arity must be in 2..8");
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back({img});
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

bool is_bijection(const Permutation& p) {
  int n = static_cast<int>(p.images.size());
  std::vector<bool> seen(n, false);
  for (int v : p.images) {
    if (v < 1 || v > n || seen[v - 1]) return false;
    seen[v - 1] = true;
  }
  return true;
}

int sign(const Permutation& p) {
  if (!is_bijection(p)) throw UsageError("not a permutation");
  int inversions = 0;
  int n = static_cast<int>(p.images.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (p.images[i] > p.images[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

std::string to_string(const Permutation& p) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < p.images.size(); ++i) {
    if (i) out << ',';
    out << p.images[i];
  }
  out << ')';
  return out.str();
}

}  // namespace gh
