#pragma once

#include <span>
#include <vector>

#include "plinth/group_algorithms.hpp"

namespace plinth {

// ℓ partitions of the points such that choosing one block from each always
// meets in exactly one point, i.e. a grid Ω ≅ Δ_1 × ... × Δ_ℓ.
class CartesianDecomposition {
 public:
  // Canonicalizes each partition (partition order is kept) and throws
  // InvalidArgument unless the grid property holds.
  CartesianDecomposition(std::size_t degree, std::vector<Partition> partitions);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t arity() const noexcept { return partitions_.size(); }
  const std::vector<Partition>& partitions() const noexcept { return partitions_; }
  const Partition& partition(std::size_t j) const { return partitions_[j]; }
  std::span<const std::uint32_t> block_of(std::size_t j) const { return block_of_[j]; }

  // Block indices of a point, one per partition.
  std::vector<std::uint32_t> coordinates(Point p) const;
  // The point whose blocks are `blocks`.
  Point point_at(std::span<const std::uint32_t> blocks) const;

  // Equal as sets of partitions.
  bool same_partitions(const CartesianDecomposition& other) const;

 private:
  std::size_t degree_;
  std::vector<Partition> partitions_;
  std::vector<std::vector<std::uint32_t>> block_of_;
  std::vector<Point> grid_;  // mixed radix, partition 0 most significant
};

}  // namespace plinth
