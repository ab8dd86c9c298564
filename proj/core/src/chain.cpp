#include "plinth/chain.hpp"

#include <algorithm>

#include "plinth/error.hpp"

namespace plinth {

StabilizerChain::StabilizerChain(std::size_t degree, std::vector<Point> base_prefix)
    : degree_(degree) {
  for (Point b : base_prefix) {
    if (b >= degree) throw Error(ErrorCode::kInvalidArgument, "base point out of range");
    for (const auto& level : levels_) {
      if (level.base == b) throw Error(ErrorCode::kInvalidArgument, "repeated base point");
    }
    append_level(b);
  }
}

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> out;
  out.reserve(levels_.size());
  for (const auto& level : levels_) out.push_back(level.base);
  return out;
}

std::vector<Permutation> StabilizerChain::level_generators(std::size_t level) const {
  std::vector<Permutation> out;
  if (level >= levels_.size()) return out;
  out.reserve(levels_[level].gens.size());
  for (auto s : levels_[level].gens) out.push_back(strong_[s]);
  return out;
}

Order StabilizerChain::order() const { return order_from(0); }

Order StabilizerChain::order_from(std::size_t from_level) const {
  Order result = 1;
  for (std::size_t i = from_level; i < levels_.size(); ++i) {
    result = checked_mul(result, levels_[i].orbit.size());
  }
  return result;
}

StabilizerChain::SiftResult StabilizerChain::sift(Permutation g) const {
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    const Level& level = levels_[i];
    Point p = g[level.base];
    if (level.via[p] == kUnreached) return {std::move(g), i};
    while (level.via[p] != kRoot) {
      const Permutation& inv = strong_inv_[static_cast<std::size_t>(level.via[p])];
      g *= inv;
      p = inv[p];
    }
  }
  return {std::move(g), levels_.size()};
}

bool StabilizerChain::contains(const Permutation& g) const {
  if (g.degree() != degree_) throw Error(ErrorCode::kDegreeMismatch, "element degree differs from group degree");
  return sift(g).residue.is_identity();
}

std::vector<std::uint32_t> StabilizerChain::path(std::size_t level, Point p) const {
  const Level& lv = levels_[level];
  if (lv.via[p] == kUnreached) throw Error(ErrorCode::kInvalidArgument, "point outside basic orbit");
  std::vector<std::uint32_t> out;
  while (lv.via[p] != kRoot) {
    auto s = static_cast<std::uint32_t>(lv.via[p]);
    out.push_back(s);
    p = strong_inv_[s][p];
  }
  std::reverse(out.begin(), out.end());
  return out;
}

Permutation StabilizerChain::transversal(std::size_t level, Point p) const {
  Permutation u(degree_);
  for (auto s : path(level, p)) u *= strong_[s];
  return u;
}

Permutation StabilizerChain::random_element(Rng& rng, std::size_t from_level) const {
  Permutation g(degree_);
  for (std::size_t i = levels_.size(); i-- > from_level;) {
    const auto& orbit = levels_[i].orbit;
    g *= transversal(i, orbit[uniform_below(rng, orbit.size())]);
  }
  return g;
}

void StabilizerChain::for_each_element(const std::function<void(const Permutation&)>& fn) const {
  std::vector<std::vector<Permutation>> transversals(levels_.size());
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    for (Point p : levels_[i].orbit) transversals[i].push_back(transversal(i, p));
  }
  // Element = u_{k-1} * ... * u_0; walk the levels from the deepest outward.
  std::vector<Permutation> partial(levels_.size() + 1, Permutation(degree_));
  auto recurse = [&](auto&& self, std::size_t depth) -> void {
    if (depth == levels_.size()) {
      fn(partial[depth]);
      return;
    }
    std::size_t level = levels_.size() - 1 - depth;
    for (const auto& u : transversals[level]) {
      partial[depth + 1] = partial[depth] * u;
      self(self, depth + 1);
    }
  };
  recurse(recurse, 0);
}

void StabilizerChain::append_level(Point base) {
  Level level;
  level.base = base;
  level.orbit.push_back(base);
  level.via.assign(degree_, kUnreached);
  level.via[base] = kRoot;
  levels_.push_back(std::move(level));
}

void StabilizerChain::rebuild_orbit(std::size_t index) {
  // Orbits only grow, so the existing tree stays valid; new points are
  // appended in discovery order.
  Level& level = levels_[index];
  for (std::size_t head = 0; head < level.orbit.size(); ++head) {
    Point p = level.orbit[head];
    for (auto s : level.gens) {
      Point q = strong_[s][p];
      if (level.via[q] == kUnreached) {
        level.via[q] = static_cast<std::int32_t>(s);
        level.orbit.push_back(q);
      }
    }
  }
}

void StabilizerChain::add_strong_generator(Permutation h, std::size_t level) {
  if (h.degree() != degree_) throw Error(ErrorCode::kDegreeMismatch, "strong generator degree");
  if (level == levels_.size()) {
    Point moved = h.first_moved();
    if (moved == degree_) throw Error(ErrorCode::kInvalidArgument, "identity cannot extend the base");
    append_level(moved);
  }
  auto index = static_cast<std::uint32_t>(strong_.size());
  strong_inv_.push_back(h.inverse());
  strong_.push_back(std::move(h));
  for (std::size_t i = 0; i <= level; ++i) {
    levels_[i].gens.push_back(index);
    rebuild_orbit(i);
  }
}

bool StabilizerChain::complete(std::optional<Order> abort_above) {
  // checked[i][o][k]: Schreier generator of orbit position o and local
  // generator k at level i sifts through the (complete) levels below it.
  std::vector<std::vector<std::vector<char>>> checked(levels_.size());
  std::size_t i = levels_.size();
  while (i-- > 0) {
    bool restarted = false;
    if (checked.size() < levels_.size()) checked.resize(levels_.size());
    for (std::size_t o = 0; o < levels_[i].orbit.size() && !restarted; ++o) {
      if (checked[i].size() <= o) checked[i].resize(o + 1);
      for (std::size_t k = 0; k < levels_[i].gens.size(); ++k) {
        auto& row = checked[i][o];
        if (row.size() <= k) row.resize(levels_[i].gens.size(), 0);
        if (row[k]) continue;
        row[k] = 1;
        Point p = levels_[i].orbit[o];
        const Permutation& s = strong_[levels_[i].gens[k]];
        Permutation schreier = transversal(i, p) * s;
        Point q = s[p];
        // Divide by u_q on the right: walk q's tree path back to the root.
        while (levels_[i].via[q] != kRoot) {
          const Permutation& inv = strong_inv_[static_cast<std::size_t>(levels_[i].via[q])];
          schreier *= inv;
          q = inv[q];
        }
        // Sift through levels below i only.
        std::size_t j = i + 1;
        for (; j < levels_.size(); ++j) {
          const Level& lv = levels_[j];
          Point r = schreier[lv.base];
          if (lv.via[r] == kUnreached) break;
          while (lv.via[r] != kRoot) {
            const Permutation& inv = strong_inv_[static_cast<std::size_t>(lv.via[r])];
            schreier *= inv;
            r = inv[r];
          }
        }
        if (!schreier.is_identity()) {
          add_strong_generator(std::move(schreier), j);
          if (abort_above && order() > *abort_above) return false;
          i = j + 1;
          restarted = true;
          break;
        }
      }
    }
  }
  return true;
}

void StabilizerChain::randomize(const std::function<Permutation()>& next_random, Order target,
                                std::size_t stall_limit) {
  std::size_t stall = 0;
  while (order() < target && stall < stall_limit) {
    auto [residue, level] = sift(next_random());
    if (residue.is_identity()) {
      ++stall;
      continue;
    }
    add_strong_generator(std::move(residue), level);
    stall = 0;
  }
}

ProductReplacement::ProductReplacement(std::size_t degree, const std::vector<Permutation>& gens,
                                       std::uint64_t seed)
    : rng_(seed), accumulator_(degree) {
  slots_ = gens;
  if (slots_.empty()) slots_.emplace_back(degree);
  const std::size_t given = slots_.size();
  for (std::size_t i = 0; slots_.size() < 10; ++i) slots_.push_back(slots_[i % given]);
  for (int i = 0; i < 50; ++i) next();
}

Permutation ProductReplacement::next() {
  std::size_t n = slots_.size();
  std::size_t a = uniform_below(rng_, n);
  std::size_t b = uniform_below(rng_, n - 1);
  if (b >= a) ++b;
  if (uniform_below(rng_, 2) == 0) {
    slots_[a] = slots_[a] * slots_[b];
    accumulator_ = accumulator_ * slots_[a];
  } else {
    slots_[a] = slots_[b] * slots_[a];
    accumulator_ = slots_[a] * accumulator_;
  }
  return accumulator_;
}

}  // namespace plinth
