#include "plinth/decomposition.hpp"

#include <algorithm>

#include "plinth/error.hpp"

namespace plinth {

CartesianDecomposition::CartesianDecomposition(std::size_t degree, std::vector<Partition> partitions)
    : degree_(degree) {
  if (partitions.empty()) throw Error(ErrorCode::kInvalidArgument, "a decomposition needs at least one partition");
  std::size_t cells = 1;
  for (auto& p : partitions) {
    p = canonical_partition(std::move(p));
    block_of_.push_back(block_index(p, degree));
    cells *= p.size();
    if (cells > degree) break;
  }
  if (cells != degree) throw Error(ErrorCode::kInvalidArgument, "block counts do not multiply to the degree");
  partitions_ = std::move(partitions);
  grid_.assign(degree, static_cast<Point>(degree));
  for (Point p = 0; p < degree; ++p) {
    std::size_t index = 0;
    for (std::size_t j = 0; j < partitions_.size(); ++j) index = index * partitions_[j].size() + block_of_[j][p];
    if (grid_[index] != degree) throw Error(ErrorCode::kInvalidArgument, "two points share all their blocks");
    grid_[index] = p;
  }
}

std::vector<std::uint32_t> CartesianDecomposition::coordinates(Point p) const {
  std::vector<std::uint32_t> out(partitions_.size());
  for (std::size_t j = 0; j < partitions_.size(); ++j) out[j] = block_of_[j][p];
  return out;
}

Point CartesianDecomposition::point_at(std::span<const std::uint32_t> blocks) const {
  if (blocks.size() != partitions_.size()) throw Error(ErrorCode::kInvalidArgument, "wrong number of blocks");
  std::size_t index = 0;
  for (std::size_t j = 0; j < partitions_.size(); ++j) {
    if (blocks[j] >= partitions_[j].size()) throw Error(ErrorCode::kInvalidArgument, "block index out of range");
    index = index * partitions_[j].size() + blocks[j];
  }
  return grid_[index];
}

bool CartesianDecomposition::same_partitions(const CartesianDecomposition& other) const {
  auto a = partitions_;
  auto b = other.partitions_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace plinth
