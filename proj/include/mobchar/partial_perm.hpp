#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "mobchar/numbers.hpp"

namespace mobchar {

// Injective partial self-map of [n], acting on the right: i -> i.apply(...).
// Points are 0-based internally; the textual/JSON boundary is 1-based with
// null (or '-') for undefined.
class PartialPerm {
 public:
  PartialPerm() = default;

  // image[i] in {0..n-1} or kUndef.
  explicit PartialPerm(std::vector<int> image) : image_(std::move(image)) {
    std::vector<char> seen(image_.size(), 0);
    for (int v : image_) {
      if (v == kUndef) continue;
      if (v < 0 || static_cast<std::size_t>(v) >= image_.size())
        throw invalid_input("partial permutation image out of range");
      if (seen[static_cast<std::size_t>(v)])
        throw invalid_input("partial permutation image not injective");
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }

  static constexpr int kUndef = -1;

  static PartialPerm identity(int degree) {
    std::vector<int> img(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) img[static_cast<std::size_t>(i)] = i;
    return PartialPerm(std::move(img));
  }

  static PartialPerm empty_map(int degree) {
    return PartialPerm(std::vector<int>(static_cast<std::size_t>(degree), kUndef));
  }

  // 1_X for a 0-based point set X.
  static PartialPerm partial_identity(int degree, const std::vector<int>& points) {
    std::vector<int> img(static_cast<std::size_t>(degree), kUndef);
    for (int p : points) {
      if (p < 0 || p >= degree) throw invalid_input("partial identity point out of range");
      img[static_cast<std::size_t>(p)] = p;
    }
    return PartialPerm(std::move(img));
  }

  int degree() const { return static_cast<int>(image_.size()); }
  int apply(int i) const { return image_[static_cast<std::size_t>(i)]; }
  bool defined(int i) const { return image_[static_cast<std::size_t>(i)] != kUndef; }

  int rank() const {
    int r = 0;
    for (int v : image_)
      if (v != kUndef) ++r;
    return r;
  }

  std::vector<int> domain() const {
    std::vector<int> d;
    for (int i = 0; i < degree(); ++i)
      if (defined(i)) d.push_back(i);
    return d;
  }

  std::vector<int> range() const {
    std::vector<int> r;
    for (int v : image_)
      if (v != kUndef) r.push_back(v);
    std::sort(r.begin(), r.end());
    return r;
  }

  std::vector<int> fixed_points() const {
    std::vector<int> f;
    for (int i = 0; i < degree(); ++i)
      if (image_[static_cast<std::size_t>(i)] == i) f.push_back(i);
    return f;
  }

  bool is_idempotent() const {  // exactly the partial identities
    for (int i = 0; i < degree(); ++i)
      if (defined(i) && apply(i) != i) return false;
    return true;
  }

  // ss^{-1}: the partial identity on the domain.
  PartialPerm domain_idempotent() const {
    return partial_identity(degree(), domain());
  }

  // s^{-1}s: the partial identity on the range.
  PartialPerm range_idempotent() const {
    return partial_identity(degree(), range());
  }

  PartialPerm inverse() const {
    std::vector<int> img(image_.size(), kUndef);
    for (int i = 0; i < degree(); ++i)
      if (defined(i)) img[static_cast<std::size_t>(apply(i))] = i;
    return PartialPerm(std::move(img));
  }

  // Right-to-left reading order: i (ab) = (i a) b.
  friend PartialPerm compose(const PartialPerm& a, const PartialPerm& b) {
    if (a.degree() != b.degree())
      throw invalid_input("composition of partial permutations of unequal degree");
    std::vector<int> img(a.image_.size(), kUndef);
    for (int i = 0; i < a.degree(); ++i) {
      int j = a.apply(i);
      if (j != kUndef && b.defined(j)) img[static_cast<std::size_t>(i)] = b.apply(j);
    }
    return PartialPerm(std::move(img));
  }

  friend PartialPerm operator*(const PartialPerm& a, const PartialPerm& b) {
    return compose(a, b);
  }

  // Restriction order: a <= b iff dom a within dom b and they agree there.
  friend bool leq(const PartialPerm& a, const PartialPerm& b) {
    if (a.degree() != b.degree())
      throw invalid_input("order comparison of partial permutations of unequal degree");
    for (int i = 0; i < a.degree(); ++i)
      if (a.defined(i) && a.apply(i) != b.apply(i)) return false;
    return true;
  }

  PartialPerm restricted_to(const std::vector<int>& points) const {
    std::vector<int> img(image_.size(), kUndef);
    for (int p : points)
      if (defined(p)) img[static_cast<std::size_t>(p)] = apply(p);
    return PartialPerm(std::move(img));
  }

  // 0/1 matrix with a one at (i, j) iff i maps to j.
  std::vector<std::vector<int>> rook_matrix() const {
    std::vector<std::vector<int>> m(
        image_.size(), std::vector<int>(image_.size(), 0));
    for (int i = 0; i < degree(); ++i)
      if (defined(i)) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(apply(i))] = 1;
    return m;
  }

  // Does this map the point set X bijectively onto itself?
  bool stabilizes(const std::vector<int>& x) const {
    std::vector<char> in_x(image_.size(), 0);
    for (int p : x) in_x[static_cast<std::size_t>(p)] = 1;
    for (int p : x) {
      if (!defined(p)) return false;
      if (!in_x[static_cast<std::size_t>(apply(p))]) return false;
    }
    return true;  // injectivity makes "into" equal "onto" on finite X
  }

  // Sign of the permutation induced on a stabilized point set.
  int sign_on(const std::vector<int>& x) const {
    if (!stabilizes(x)) throw precondition_violation("sign of a non-stabilized set");
    std::vector<int> pos(image_.size(), -1);
    for (std::size_t k = 0; k < x.size(); ++k)
      pos[static_cast<std::size_t>(x[k])] = static_cast<int>(k);
    std::vector<char> visited(x.size(), 0);
    int parity = 0;
    for (std::size_t k = 0; k < x.size(); ++k) {
      if (visited[k]) continue;
      int len = 0;
      std::size_t cur = k;
      while (!visited[cur]) {
        visited[cur] = 1;
        cur = static_cast<std::size_t>(pos[static_cast<std::size_t>(apply(x[cur]))]);
        ++len;
      }
      parity ^= (len - 1) & 1;
    }
    return parity ? -1 : 1;
  }

  friend bool operator==(const PartialPerm& a, const PartialPerm& b) {
    return a.image_ == b.image_;
  }
  friend bool operator!=(const PartialPerm& a, const PartialPerm& b) {
    return !(a == b);
  }
  friend bool operator<(const PartialPerm& a, const PartialPerm& b) {
    if (a.image_.size() != b.image_.size())
      return a.image_.size() < b.image_.size();
    return a.image_ < b.image_;
  }

  std::size_t hash() const {
    std::size_t h = image_.size();
    for (int v : image_) h = h * 1000003u + static_cast<std::size_t>(v + 2);
    return h;
  }

  // "[2,-,1]" with 1-based images.
  std::string str() const {
    std::string out = "[";
    for (int i = 0; i < degree(); ++i) {
      if (i) out += ",";
      out += defined(i) ? std::to_string(apply(i) + 1) : std::string("-");
    }
    return out + "]";
  }

 private:
  std::vector<int> image_;
};

struct PartialPermHash {
  std::size_t operator()(const PartialPerm& p) const { return p.hash(); }
};

}  // namespace mobchar
