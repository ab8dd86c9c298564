#pragma once

// Seeded corpus of small permutation groups for property tests.

#include <string>
#include <vector>

#include "plinth/group_algorithms.hpp"
#include "oracles.hpp"

namespace plinth::corpus {

struct Sample {
  std::string name;
  std::size_t degree;
  std::vector<Permutation> generators;
};

inline Permutation embed(const Permutation& x, std::size_t degree, std::size_t offset) {
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Point>(i);
  for (std::size_t i = 0; i < x.degree(); ++i) images[offset + i] = static_cast<Point>(offset + x[static_cast<Point>(i)]);
  return Permutation(std::move(images));
}

// K wr S_m in imprimitive action on m copies of K's points.
inline std::vector<Permutation> imprimitive_wreath(const PermGroup& k, std::size_t m) {
  const std::size_t d = k.degree();
  const std::size_t n = d * m;
  std::vector<Permutation> gens;
  for (const auto& x : k.generators()) gens.push_back(embed(x, n, 0));
  if (m >= 2) {
    std::vector<Point> swap(n), cycle(n);
    for (std::size_t c = 0; c < m; ++c) {
      for (std::size_t i = 0; i < d; ++i) {
        std::size_t sc = c == 0 ? 1 : (c == 1 ? 0 : c);
        swap[c * d + i] = static_cast<Point>(sc * d + i);
        cycle[c * d + i] = static_cast<Point>(((c + 1) % m) * d + i);
      }
    }
    gens.emplace_back(std::move(swap));
    gens.emplace_back(std::move(cycle));
  }
  return gens;
}

// Groups of order at most a few thousand, on at most 12 points, each
// conjugated by a seeded random relabelling and regenerated from random
// words so that generator sets are not textbook ones.
inline std::vector<Sample> small_groups(std::uint64_t seed) {
  std::vector<Sample> raw;
  for (std::size_t n : {3, 5, 6, 7, 8, 10, 12}) raw.push_back({"C" + std::to_string(n), n, cyclic_group(n).generators()});
  for (std::size_t n : {4, 5, 6, 9, 12}) raw.push_back({"D" + std::to_string(2 * n), n, dihedral_group(n).generators()});
  raw.push_back({"S4", 4, symmetric_group(4).generators()});
  raw.push_back({"A4", 4, alternating_group(4).generators()});
  raw.push_back({"A5", 5, alternating_group(5).generators()});
  raw.push_back({"S5", 5, symmetric_group(5).generators()});
  raw.push_back({"S6", 6, symmetric_group(6).generators()});
  raw.push_back({"S2wrS3", 6, imprimitive_wreath(symmetric_group(2), 3)});
  raw.push_back({"S3wrS2", 6, imprimitive_wreath(symmetric_group(3), 2)});
  raw.push_back({"S2wrS4", 8, imprimitive_wreath(symmetric_group(2), 4)});
  raw.push_back({"S4wrS2", 8, imprimitive_wreath(symmetric_group(4), 2)});
  raw.push_back({"C3wrS3", 9, imprimitive_wreath(cyclic_group(3), 3)});
  raw.push_back({"D8wrC2", 8, {embed(dihedral_group(4).generators()[0], 8, 0),
                               embed(dihedral_group(4).generators()[1], 8, 0),
                               Permutation::from_cycles(8, {{0, 4}, {1, 5}, {2, 6}, {3, 7}})}});
  raw.push_back({"C2xS4", 6, {embed(symmetric_group(4).generators()[0], 6, 0),
                              embed(symmetric_group(4).generators()[1], 6, 0),
                              Permutation::from_cycles(6, {{4, 5}})}});
  raw.push_back({"C4xC3", 7, {Permutation::from_cycles(7, {{0, 1, 2, 3}, {4, 5, 6}})}});
  raw.push_back({"S2wrS2wrS2", 8, imprimitive_wreath(PermGroup(4, imprimitive_wreath(symmetric_group(2), 2)), 2)});
  raw.push_back({"A4wrC3", 12, {embed(alternating_group(4).generators()[0], 12, 0),
                                embed(alternating_group(4).generators()[1], 12, 0),
                                imprimitive_wreath(alternating_group(4), 3).back()}});

  Rng rng(seed);
  std::vector<Sample> out;
  for (auto& s : raw) {
    Permutation relabel = oracle::random_permutation(rng, s.degree);
    // g0, g0*g1, g1*g2, ... spans the same group as g0, g1, g2, ...
    std::vector<Permutation> gens;
    for (std::size_t i = 0; i < s.generators.size(); ++i) {
      Permutation word = i == 0 ? s.generators[0] : s.generators[i - 1] * s.generators[i];
      gens.push_back(word.conjugate(relabel));
    }
    out.push_back({s.name, s.degree, std::move(gens)});
  }
  return out;
}

}  // namespace plinth::corpus

namespace plinth::corpus {

// Action of S_n on the k-subsets of {0..n-1}, subsets in lexicographic order.
inline PermGroup symmetric_on_subsets(std::size_t n, std::size_t k, const PermGroup& base) {
  std::vector<std::vector<Point>> subsets;
  std::vector<Point> current;
  auto rec = [&](auto&& self, Point start) -> void {
    if (current.size() == k) {
      subsets.push_back(current);
      return;
    }
    for (Point p = start; p < n; ++p) {
      current.push_back(p);
      self(self, p + 1);
      current.pop_back();
    }
  };
  rec(rec, 0);
  std::vector<Permutation> gens;
  for (const auto& x : base.generators()) {
    std::vector<Point> images;
    for (const auto& s : subsets) {
      std::vector<Point> img;
      for (Point p : s) img.push_back(x[p]);
      std::sort(img.begin(), img.end());
      images.push_back(static_cast<Point>(std::find(subsets.begin(), subsets.end(), img) - subsets.begin()));
    }
    gens.emplace_back(std::move(images));
  }
  return PermGroup(subsets.size(), std::move(gens));
}

// Aut(Petersen) = S5 on the 10 pairs of a 5-set.
inline PermGroup petersen_automorphisms() { return symmetric_on_subsets(5, 2, symmetric_group(5)); }

}  // namespace plinth::corpus
