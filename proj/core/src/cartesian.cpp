#include "plinth/cartesian.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "plinth/error.hpp"

namespace plinth {

std::vector<Partition> all_block_systems(const PermGroup& g) {
  std::set<Partition> found;
  // `group` acts on cells; cells[i] lists the original points of cell i.
  auto recurse = [&](auto&& self, const PermGroup& group, const std::vector<std::vector<Point>>& cells) -> void {
    if (group.degree() < 4) return;
    for (const auto& system : minimal_block_systems(group)) {
      Partition lifted;
      for (const auto& block : system) {
        std::vector<Point> merged;
        for (Point c : block) merged.insert(merged.end(), cells[c].begin(), cells[c].end());
        lifted.push_back(std::move(merged));
      }
      lifted = canonical_partition(std::move(lifted));
      if (!found.insert(lifted).second) continue;
      if (system.size() >= 4) self(self, block_action(group, system), lifted);
    }
  };
  std::vector<std::vector<Point>> singletons(g.degree());
  for (Point p = 0; p < g.degree(); ++p) singletons[p] = {p};
  recurse(recurse, g, singletons);
  return {found.begin(), found.end()};
}

namespace {

Partition image_partition(const Partition& p, const Permutation& x) {
  Partition out;
  for (const auto& block : p) {
    std::vector<Point> img;
    for (Point q : block) img.push_back(x[q]);
    out.push_back(std::move(img));
  }
  return canonical_partition(std::move(out));
}

bool is_grid(const std::vector<const Partition*>& parts, std::size_t degree,
             const std::vector<std::vector<std::uint32_t>>& indices) {
  std::size_t product = 1;
  for (const auto* p : parts) product *= p->size();
  if (product != degree) return false;
  std::set<std::vector<std::uint32_t>> seen;
  for (Point x = 0; x < degree; ++x) {
    std::vector<std::uint32_t> key;
    for (const auto& idx : indices) key.push_back(idx[x]);
    if (!seen.insert(std::move(key)).second) return false;
  }
  return true;
}

}  // namespace

std::vector<CartesianDecomposition> find_grid_decompositions(const PermGroup& g, std::size_t arity_max) {
  const std::size_t n = g.degree();
  std::set<Partition> candidates;
  for (auto& p : all_block_systems(g)) candidates.insert(std::move(p));
  for (const auto& h : index_two_subgroups(g)) {
    if (!is_transitive(h.group())) continue;
    for (auto& p : all_block_systems(h.group())) candidates.insert(std::move(p));
  }
  std::vector<Partition> pool(candidates.begin(), candidates.end());
  std::vector<std::vector<std::uint32_t>> index;
  for (const auto& p : pool) index.push_back(block_index(p, n));

  std::vector<CartesianDecomposition> out;
  std::vector<std::size_t> chosen;
  auto invariant = [&]() {
    std::set<Partition> members;
    for (auto i : chosen) members.insert(pool[i]);
    for (const auto& x : g.generators()) {
      for (auto i : chosen) {
        if (!members.count(image_partition(pool[i], x))) return false;
      }
    }
    return true;
  };
  auto search = [&](auto&& self, std::size_t start) -> void {
    if (chosen.size() >= 2) {
      std::vector<const Partition*> parts;
      std::vector<std::vector<std::uint32_t>> idx;
      for (auto i : chosen) {
        parts.push_back(&pool[i]);
        idx.push_back(index[i]);
      }
      if (is_grid(parts, n, idx) && invariant()) {
        std::vector<Partition> ps;
        for (auto i : chosen) ps.push_back(pool[i]);
        out.emplace_back(n, std::move(ps));
      }
    }
    if (chosen.size() == arity_max) return;
    std::size_t product = 1;
    for (auto i : chosen) product *= pool[i].size();
    for (std::size_t i = start; i < pool.size(); ++i) {
      if (n % (product * pool[i].size()) != 0) continue;
      chosen.push_back(i);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  search(search, 0);
  return out;
}

std::string_view to_string(InclusionTag tag) {
  switch (tag) {
    case InclusionTag::kNormal: return "Normal";
    case InclusionTag::kCD1S: return "CD1S";
    case InclusionTag::kCD2Sim: return "CD2Sim";
    case InclusionTag::kCD2NotSim: return "CD2NotSim";
    case InclusionTag::kCD3: return "CD3";
    case InclusionTag::kIntransitiveTop: return "IntransitiveTop";
  }
  return "?";
}

namespace {

bool moves_some_block(const Permutation& x, const CartesianDecomposition& e, std::size_t j) {
  return !induced_on_blocks(x, e.partition(j), e.block_of(j)).is_identity();
}

std::multiset<std::size_t> orbit_lengths(const PermGroup& g) {
  std::multiset<std::size_t> out;
  for (const auto& o : orbits(g)) out.insert(o.size());
  return out;
}

}  // namespace

InclusionType classify_inclusion(const PermGroup& g, const SubgroupRef& m,
                                 const std::vector<std::vector<Permutation>>& factors,
                                 const CartesianDecomposition& e, Point omega) {
  if (!normalizes(g, m.group())) throw Error(ErrorCode::kNotInvariant, "M is not normal in G");
  for (const auto& x : g.generators()) top_image(x, e);
  for (const auto& x : m.generators()) {
    if (!top_image(x, e).is_identity()) {
      throw Error(ErrorCode::kProjectionUnsupported, "M does not lie in the base group");
    }
  }
  if (factors.empty()) throw Error(ErrorCode::kInvalidArgument, "no simple factors declared");

  InclusionType out;
  for (std::size_t f = 0; f < factors.size(); ++f) {
    std::vector<std::size_t> comps;
    for (std::size_t j = 0; j < e.arity(); ++j) {
      bool moves = std::any_of(factors[f].begin(), factors[f].end(),
                               [&](const Permutation& x) { return moves_some_block(x, e, j); });
      if (moves) comps.push_back(j);
    }
    if (f == 0) {
      out.factor_components = comps;
      out.s = comps.size();
    } else if (comps.size() != out.s) {
      throw Error(ErrorCode::kMismatch, "factors lie in different numbers of components");
    }
  }
  if (out.s > 3) throw Error(ErrorCode::kTooManyComponents, "s = " + std::to_string(out.s));

  if (!is_transitive(top_projection(g, e))) {
    out.tag = InclusionTag::kIntransitiveTop;
    return out;
  }
  if (out.s == 3) {
    out.tag = InclusionTag::kCD3;
    return out;
  }
  if (out.s <= 1) {
    out.tag = InclusionTag::kNormal;
    out.stabilizer_order = m.order() / Orbit(m.group(), omega).size();
    Order product = 1;
    for (std::size_t j = 0; j < e.arity(); ++j) {
      PermGroup comp = block_action(m.group(), e.partition(j));
      Point delta = e.block_of(j)[omega];
      product *= comp.order() / Orbit(comp, delta).size();
    }
    out.component_stabilizer_product = product;
    out.product_formula_holds = product == out.stabilizer_order;
    return out;
  }

  if (factors.size() != 1) {
    throw Error(ErrorCode::kProjectionUnsupported, "projections for s = 2 need a simple plinth");
  }
  const PermGroup& t = m.group();
  std::vector<PermGroup> on_blocks;
  for (std::size_t j : out.factor_components) {
    const Partition& part = e.partition(j);
    SubgroupRef stab = block_stabilizer(t, part, e.block_of(j)[omega]);
    out.projection_orders.push_back(stab.order());
    on_blocks.push_back(block_action(stab.group(), part));
  }
  const Order a = out.projection_orders[0];
  const Order b = out.projection_orders[1];
  out.projection_is_full = a == t.order() || b == t.order();
  if (out.projection_is_full) {
    out.tag = InclusionTag::kCD1S;
    return out;
  }
  out.isomorphism_test = "heuristic: order, element-order spectrum, orbit lengths on blocks";
  out.orbit_lengths_equal = orbit_lengths(on_blocks[0]) == orbit_lengths(on_blocks[1]);
  if (a == b) {
    // The block action of a subgroup of a simple group is faithful here
    // exactly when the orders agree; otherwise count on the full degree.
    auto spectrum = [&](std::size_t i, Order order) {
      if (on_blocks[i].order() == order) return order_spectrum(on_blocks[i]);
      SubgroupRef stab = block_stabilizer(t, e.partition(out.factor_components[i]),
                                          e.block_of(out.factor_components[i])[omega]);
      return order_spectrum(stab.group());
    };
    out.spectra_equal = spectrum(0, a) == spectrum(1, b);
  }
  out.tag = a == b && out.spectra_equal && out.orbit_lengths_equal ? InclusionTag::kCD2Sim : InclusionTag::kCD2NotSim;
  return out;
}

BlowupEmbedding blowup_embedding(const PermGroup& g, const std::vector<std::vector<Permutation>>& factors,
                                 Point omega) {
  const std::size_t n = g.degree();
  const std::size_t r = factors.size();
  if (r == 0) throw Error(ErrorCode::kInvalidArgument, "no factors");
  std::vector<PermGroup> ms;
  std::vector<Permutation> all;
  for (const auto& f : factors) {
    ms.emplace_back(n, f);
    all.insert(all.end(), f.begin(), f.end());
  }
  PermGroup m(n, all);
  if (Orbit(m, omega).size() != n) throw Error(ErrorCode::kNotTransitive, "M is not transitive");

  // σ_x(i) = j when M_i^x = M_j.
  std::vector<std::vector<std::size_t>> sigma;
  for (const auto& x : g.generators()) {
    std::vector<std::size_t> images(r);
    std::vector<bool> hit(r, false);
    for (std::size_t i = 0; i < r; ++i) {
      std::size_t j = 0;
      for (; j < r; ++j) {
        bool inside = std::all_of(factors[i].begin(), factors[i].end(),
                                  [&](const Permutation& y) { return ms[j].contains(y.conjugate(x)); });
        if (inside) break;
      }
      if (j == r || hit[j]) throw Error(ErrorCode::kNotInvariant, "factor decomposition is not G-invariant");
      hit[j] = true;
      images[i] = j;
    }
    sigma.push_back(std::move(images));
  }

  const Order m_stab = m.order() / n;
  Order product = 1;
  std::vector<std::size_t> xi_sizes;
  for (const auto& mi : ms) {
    std::size_t orbit = Orbit(mi, omega).size();
    xi_sizes.push_back(orbit);
    product *= mi.order() / orbit;
  }
  if (product != m_stab) throw Error(ErrorCode::kNotXSubgroup, "M_ω is not the product of its factor parts");

  std::vector<Partition> partitions;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<Permutation> rest;
    for (std::size_t j = 0; j < r; ++j) {
      if (j != i) rest.insert(rest.end(), factors[j].begin(), factors[j].end());
    }
    partitions.push_back(orbits(PermGroup(n, rest)));
  }
  CartesianDecomposition source(n, partitions);

  // transport[i] maps M_0 to M_i by conjugation, hence partition 0 onto i.
  std::vector<std::optional<Permutation>> transport(r);
  transport[0] = Permutation(n);
  std::vector<std::size_t> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::size_t i = queue[head];
    for (std::size_t k = 0; k < sigma.size(); ++k) {
      std::size_t j = sigma[k][i];
      if (!transport[j]) {
        transport[j] = *transport[i] * g.generators()[k];
        queue.push_back(j);
      }
    }
  }
  if (std::any_of(transport.begin(), transport.end(), [](const auto& t) { return !t; })) {
    throw Error(ErrorCode::kNotInvariant, "G is not transitive on the factors");
  }

  const std::size_t xi = source.partition(0).size();
  TupleCodec codec(xi, r);
  if (codec.size() != n) throw Error(ErrorCode::kMismatch, "degree is not |Ξ|^r");
  std::vector<Permutation> back_maps;
  for (const auto& t : transport) back_maps.push_back(t->inverse());
  std::vector<Point> phi(n);
  for (Point alpha = 0; alpha < n; ++alpha) {
    std::vector<Point> tuple(r);
    for (std::size_t i = 0; i < r; ++i) {
      Point beta = source.partition(i)[source.block_of(i)[alpha]].front();
      Point back = back_maps[i][beta];
      tuple[i] = source.block_of(0)[back];
    }
    phi[alpha] = codec.encode(tuple);
  }
  std::vector<Point> phi_inverse(n);
  for (Point alpha = 0; alpha < n; ++alpha) phi_inverse[phi[alpha]] = alpha;

  CartesianDecomposition grid = natural_decomposition(codec);
  std::vector<Permutation> images;
  for (const auto& x : g.generators()) {
    std::vector<Point> y(n);
    for (Point alpha = 0; alpha < n; ++alpha) y[phi[alpha]] = phi[x[alpha]];
    Permutation image(std::move(y));
    // Rebuild the image as (h_1, …, h_r)σ and require equality everywhere.
    Permutation top = top_image(image, grid);
    std::vector<Permutation> base;
    for (std::size_t i = 0; i < r; ++i) {
      std::vector<Point> h(xi);
      for (Point v = 0; v < xi; ++v) {
        std::vector<Point> tuple(r, 0);
        tuple[i] = v;
        h[v] = codec.decode(image[codec.encode(tuple)])[top[static_cast<Point>(i)]];
      }
      base.emplace_back(std::move(h));
    }
    if (product_action_element(codec, base, top) != image) {
      throw Error(ErrorCode::kMismatch, "embedded generator is not a product-action element");
    }
    images.push_back(std::move(image));
  }
  PermGroup embedded(n, images, OrderHint{g.order(), HintKind::kUpperBound});
  return {{codec, embedded, grid}, std::move(source), std::move(phi), xi};
}

StrongFactorization strong_factorization_check(const PermGroup& t, const std::vector<SubgroupRef>& subgroups,
                                               Order bound) {
  if (subgroups.size() < 2 || subgroups.size() > 3) {
    throw Error(ErrorCode::kInvalidArgument, "expected two or three subgroups");
  }
  StrongFactorization out{true, {}};
  for (std::size_t r = 0; r < subgroups.size(); ++r) {
    std::optional<SubgroupRef> rest;
    for (std::size_t i = 0; i < subgroups.size(); ++i) {
      if (i == r) continue;
      rest = rest ? intersection_small(*rest, subgroups[i], bound) : subgroups[i];
    }
    SubgroupRef meet = intersection_small(subgroups[r], *rest, bound);
    FactorizationTerm term{subgroups[r].order(), rest->order(), meet.order(), false};
    term.holds = term.a_order * term.rest_order == t.order() * term.meet_order;
    out.holds = out.holds && term.holds;
    out.terms.push_back(term);
  }
  return out;
}

}  // namespace plinth
