#pragma once

#include <string>
#include <vector>

#include "gh/numbers.hpp"

namespace gh {

// images[i] = pi(i+1), values 1..n. Always a bijection once validated.
struct Permutation {
  std::vector<int> images;
};

// All n! permutations in lexicographic order of their image lists. 2 <= n <= 8.
std::vector<Permutation> enumerate_permutations(int n);

// +1 or -1, the parity of the inversion count.
int sign(const Permutation& p);

bool is_bijection(const Permutation& p);

// One-line image list, e.g. "(2,1,3)".
std::string to_string(const Permutation& p);

}  // namespace gh
