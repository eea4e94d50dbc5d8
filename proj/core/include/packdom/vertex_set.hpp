#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace packdom {

using Vertex = std::uint32_t;

/// Sorted, duplicate-free set of vertex indices drawn from [0, universe).
class VertexSet {
 public:
  using const_iterator = std::vector<Vertex>::const_iterator;

  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : universe_(universe) {}
  VertexSet(std::size_t universe, std::vector<Vertex> members);
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
      : VertexSet(universe, std::vector<Vertex>(members)) {}

  std::size_t universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }

  bool contains(Vertex v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
  }

  void insert(Vertex v);
  void erase(Vertex v);

  std::span<const Vertex> members() const noexcept { return members_; }
  const std::vector<Vertex>& vector() const noexcept { return members_; }
  const_iterator begin() const noexcept { return members_.begin(); }
  const_iterator end() const noexcept { return members_.end(); }

  /// Membership bitmap of length universe().
  std::vector<bool> indicator() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<Vertex> members_;
};

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
bool disjoint(const VertexSet& a, const VertexSet& b);

}  // namespace packdom
