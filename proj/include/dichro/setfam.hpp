#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace dichro {

inline constexpr int max_ground_size = 64;

// Binomial coefficient C(n, k) for 0 <= n <= 64; 0 when k < 0 or k > n.
std::uint64_t binomial(int n, int k);

// A k-subset of the ground set [n] = {1, ..., n}. Element i lives in bit i-1
// of the mask, so colex order of subsets is numeric order of masks.
class KSubset {
 public:
  KSubset() = default;
  KSubset(std::uint64_t mask, int n);

  static KSubset from_elements(const std::vector<int>& elements, int n);

  std::uint64_t mask() const { return mask_; }
  int n() const { return n_; }
  int k() const;

  bool contains(int element) const;
  int min_element() const;
  int element_sum() const;
  std::vector<int> elements() const;

  // "{1,2,5}"
  std::string to_string() const;

  friend bool operator==(const KSubset&, const KSubset&) = default;
  friend auto operator<=>(const KSubset& a, const KSubset& b) { return a.mask_ <=> b.mask_; }

 private:
  std::uint64_t mask_ = 0;
  int n_ = 0;
};

// All k-subsets of [n] in colex order; position = canonical vertex id.
std::vector<KSubset> enumerate_ksubsets(int n, int k);

std::uint64_t rank(const KSubset& a);
KSubset unrank(std::uint64_t r, int n, int k);

int intersection_size(const KSubset& a, const KSubset& b);

enum class Side { in_a, in_b };

// min(A xor B) and the side holding it. Throws parameter_error when A == B.
std::pair<int, Side> min_diff_element(const KSubset& a, const KSubset& b);

}  // namespace dichro
