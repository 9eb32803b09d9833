#include "typeseq/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace typeseq {

NumericalSemigroup NumericalSemigroup::from_generators(const std::vector<std::size_t>& gens) {
  if (gens.empty()) throw Error(ErrorCode::invalid_argument, "semigroup", "no generators given");
  std::size_t g = 0;
  for (std::size_t x : gens) {
    if (x == 0) throw Error(ErrorCode::invalid_argument, "semigroup", "generators must be positive");
    g = std::gcd(g, x);
  }
  if (g != 1)
    throw Error(ErrorCode::invalid_argument, "semigroup",
                "generators have gcd " + std::to_string(g) + "; the semigroup is not cofinite");
  const std::size_t m = *std::min_element(gens.begin(), gens.end());
  // Membership by dynamic programming until m consecutive members appear.
  std::vector<bool> member{true};
  std::size_t run = 1, x = 0;
  while (run < m) {
    ++x;
    bool in = false;
    for (std::size_t a : gens)
      if (a <= x && member[x - a]) in = true;
    member.push_back(in);
    run = in ? run + 1 : 0;
  }
  NumericalSemigroup S;
  S.c_ = x + 1 - m;
  for (std::size_t i = 0; i <= S.c_; ++i)
    if (member[i]) S.small_.push_back(i);
  return S;
}

NumericalSemigroup NumericalSemigroup::from_data(const SemigroupData& data) {
  NumericalSemigroup S;
  S.c_ = data.c;
  for (std::size_t s : data.s)
    if (s <= data.c) S.small_.push_back(s);
  if (S.small_.empty() || S.small_.front() != 0)
    throw Error(ErrorCode::invalid_argument, "semigroup", "0 is not an element");
  if (S.small_.back() != S.c_) throw Error(ErrorCode::invalid_argument, "semigroup", "conductor is not an element");
  if (!std::is_sorted(S.small_.begin(), S.small_.end()) ||
      std::adjacent_find(S.small_.begin(), S.small_.end()) != S.small_.end())
    throw Error(ErrorCode::invalid_argument, "semigroup", "elements are not strictly increasing");
  if (S.c_ > 0 && S.contains(static_cast<long>(S.c_) - 1))
    throw Error(ErrorCode::invalid_argument, "semigroup", "conductor is not minimal");
  for (std::size_t a : S.small_)
    for (std::size_t b : S.small_)
      if (!S.contains(static_cast<long>(a + b)))
        throw Error(ErrorCode::invalid_argument, "semigroup",
                    "not closed under addition: " + std::to_string(a) + " + " + std::to_string(b));
  return S;
}

bool NumericalSemigroup::contains(long x) const {
  if (x < 0) return false;
  if (static_cast<std::size_t>(x) >= c_) return true;
  return std::binary_search(small_.begin(), small_.end(), static_cast<std::size_t>(x));
}

std::size_t NumericalSemigroup::multiplicity() const { return small_.size() > 1 ? small_[1] : 1; }

std::vector<std::size_t> NumericalSemigroup::gaps() const {
  std::vector<std::size_t> g;
  for (std::size_t x = 0; x < c_; ++x)
    if (!contains(static_cast<long>(x))) g.push_back(x);
  return g;
}

std::vector<std::size_t> NumericalSemigroup::minimal_generators() const {
  std::vector<std::size_t> gens;
  const std::size_t m = multiplicity();
  for (std::size_t x = 1; x < c_ + m; ++x) {
    if (!contains(static_cast<long>(x))) continue;
    bool decomposable = false;
    for (std::size_t a = 1; a < x && !decomposable; ++a)
      decomposable = contains(static_cast<long>(a)) && contains(static_cast<long>(x - a));
    if (!decomposable) gens.push_back(x);
  }
  return gens;
}

std::vector<std::size_t> semigroup_ts_oracle(const NumericalSemigroup& S) {
  const long c = static_cast<long>(S.conductor());
  const auto& s = S.small_elements();
  // Window [-(c+1), 2c] contains every A_i \ A_{i-1}.
  auto in_dual = [&](long x, long si) {
    // x + y ∈ S for every y ∈ S with y >= si; beyond max(c, c - x) all sums lie in S.
    const long top = std::max(c, c - x);
    for (long y = si; y <= top; ++y)
      if (S.contains(y) && !S.contains(x + y)) return false;
    return true;
  };
  std::vector<std::size_t> ts;
  std::vector<bool> prev;
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::vector<bool> cur;
    for (long x = -(c + 1); x <= 2 * c; ++x) cur.push_back(in_dual(x, static_cast<long>(s[i])));
    if (i > 0) {
      std::size_t count = 0;
      for (std::size_t k = 0; k < cur.size(); ++k)
        if (cur[k] && !prev[k]) ++count;
      ts.push_back(count);
    }
    prev = std::move(cur);
  }
  return ts;
}

}  // namespace typeseq
