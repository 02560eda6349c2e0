#include "dichro/setfam.hpp"

#include <array>
#include <bit>

#include "dichro/errors.hpp"

namespace dichro {

namespace {

using binomial_table = std::array<std::array<std::uint64_t, 65>, 65>;

const binomial_table& pascal() {
  static const binomial_table table = [] {
    binomial_table t{};
    for (int n = 0; n <= 64; ++n) {
      t[n][0] = 1;
      for (int k = 1; k <= n; ++k) t[n][k] = t[n - 1][k - 1] + (k <= n - 1 ? t[n - 1][k] : 0);
    }
    return t;
  }();
  return table;
}

std::uint64_t ground_mask(int n) { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

void check_ground(int n, int k) {
  if (k < 1 || k > n || n > max_ground_size)
    throw parameter_error("need 0 < k <= n <= 64, got n=" + std::to_string(n) +
                          " k=" + std::to_string(k));
}

}  // namespace

std::uint64_t binomial(int n, int k) {
  if (n < 0 || n > 64) throw parameter_error("binomial: n out of range");
  if (k < 0 || k > n) return 0;
  return pascal()[n][k];
}

KSubset::KSubset(std::uint64_t mask, int n) : mask_(mask), n_(n) {
  if (n < 1 || n > max_ground_size) throw parameter_error("ground size out of range");
  if ((mask & ~ground_mask(n)) != 0) throw parameter_error("subset has elements outside [n]");
  if (mask == 0) throw parameter_error("empty subset");
}

KSubset KSubset::from_elements(const std::vector<int>& elements, int n) {
  std::uint64_t mask = 0;
  for (int e : elements) {
    if (e < 1 || e > n) throw parameter_error("element " + std::to_string(e) + " outside [n]");
    const std::uint64_t bit = std::uint64_t{1} << (e - 1);
    if (mask & bit) throw parameter_error("duplicate element " + std::to_string(e));
    mask |= bit;
  }
  return KSubset(mask, n);
}

int KSubset::k() const { return std::popcount(mask_); }

bool KSubset::contains(int element) const {
  return element >= 1 && element <= n_ && ((mask_ >> (element - 1)) & 1U);
}

int KSubset::min_element() const { return std::countr_zero(mask_) + 1; }

int KSubset::element_sum() const {
  int sum = 0;
  for (std::uint64_t m = mask_; m; m &= m - 1) sum += std::countr_zero(m) + 1;
  return sum;
}

std::vector<int> KSubset::elements() const {
  std::vector<int> out;
  out.reserve(k());
  for (std::uint64_t m = mask_; m; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

std::string KSubset::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int e : elements()) {
    if (!first) s += ',';
    s += std::to_string(e);
    first = false;
  }
  return s + "}";
}

std::vector<KSubset> enumerate_ksubsets(int n, int k) {
  check_ground(n, k);
  std::vector<KSubset> out;
  out.reserve(binomial(n, k));
  // Gosper's hack walks same-popcount masks in increasing order.
  std::uint64_t mask = k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
  const std::uint64_t last = mask << (n - k);
  while (true) {
    out.emplace_back(mask, n);
    if (mask == last) break;
    const std::uint64_t c = mask & (~mask + 1);
    const std::uint64_t r = mask + c;
    mask = (((r ^ mask) >> 2) / c) | r;
  }
  return out;
}

std::uint64_t rank(const KSubset& a) {
  std::uint64_t r = 0;
  int i = 1;
  for (std::uint64_t m = a.mask(); m; m &= m - 1, ++i) r += binomial(std::countr_zero(m), i);
  return r;
}

KSubset unrank(std::uint64_t r, int n, int k) {
  check_ground(n, k);
  if (r >= binomial(n, k)) throw parameter_error("rank " + std::to_string(r) + " out of range");
  std::uint64_t mask = 0;
  int hi = n;
  for (int i = k; i >= 1; --i) {
    // largest c (0-based position) with C(c, i) <= r
    int c = hi - 1;
    while (binomial(c, i) > r) --c;
    mask |= std::uint64_t{1} << c;
    r -= binomial(c, i);
    hi = c;
  }
  return KSubset(mask, n);
}

int intersection_size(const KSubset& a, const KSubset& b) {
  if (a.n() != b.n()) throw parameter_error("intersection of subsets over different ground sets");
  return std::popcount(a.mask() & b.mask());
}

std::pair<int, Side> min_diff_element(const KSubset& a, const KSubset& b) {
  if (a.n() != b.n()) throw parameter_error("comparing subsets over different ground sets");
  const std::uint64_t diff = a.mask() ^ b.mask();
  if (diff == 0) throw parameter_error("min_diff_element of equal subsets");
  const std::uint64_t low = diff & (~diff + 1);
  return {std::countr_zero(diff) + 1, (a.mask() & low) ? Side::in_a : Side::in_b};
}

}  // namespace dichro
