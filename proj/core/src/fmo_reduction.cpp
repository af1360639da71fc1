#include <algorithm>

#include "c1p/errors.hpp"
#include "c1p/reduction.hpp"

namespace c1p {
namespace {

std::string block_name(const HamInstance& instance, std::size_t id) {
  const std::size_t n = instance.graph().vertex_count();
  if (id == n + 1) return "R_w";
  if (id == n + 2) return "R_s";
  return "Q_" + std::to_string(id);
}

}  // namespace

FmoGadgets fmo_gadgets(const HamInstance& instance) {
  const Graph& g = instance.graph();
  const Vertex w = instance.source();
  const Vertex s = instance.destination();

  FmoGadgets out;
  out.vertex.resize(g.vertex_count() + 1);
  for (Vertex i = 1; i <= g.vertex_count(); ++i) {
    SymbolMultiset& q = out.vertex[i];
    for (Vertex j : g.neighbors(i)) {
      q.add(reserved::d(i, j));
      q.add(reserved::vertex(j));
    }
    q.add(reserved::vertex(i));
    q.add(instance.is_endpoint(i) ? reserved::c(i) : reserved::vertex(i));
  }
  out.r_w = {reserved::c(w), reserved::c_prime(w)};
  out.r_s = {reserved::c(s), reserved::c_prime(s)};
  for (const auto& [a, b] : g.edges()) {
    out.pairs.push_back({reserved::d(a, b), reserved::vertex(b)});
    out.pairs.push_back({reserved::d(b, a), reserved::vertex(a)});
  }

  SymbolMultiset all{reserved::c_prime(w), reserved::c_prime(s)};
  SymbolMultiset path_ends{reserved::vertex(w), reserved::vertex(s)};
  for (Vertex i = 1; i <= g.vertex_count(); ++i) {
    all += out.vertex[i];
    if (!instance.is_endpoint(i)) path_ends.add(reserved::vertex(i), 2);
  }
  if (!path_ends.is_subset_of(all)) {
    throw StructureViolation("vertex symbols removed from the universe exceed those available");
  }
  out.universe = all.minus(path_ends);
  return out;
}

FmoInstance build_fmo_instance(const HamInstance& instance) {
  FmoGadgets parts = fmo_gadgets(instance);
  FmoInstance out;
  out.universe = parts.universe;
  for (std::size_t i = 1; i < parts.vertex.size(); ++i) out.family.push_back(parts.vertex[i]);
  out.family.push_back(parts.r_w);
  out.family.push_back(parts.r_s);
  out.family.insert(out.family.end(), parts.pairs.begin(), parts.pairs.end());

  for (const auto& member : out.family) {
    if (!member.is_subset_of(out.universe)) {
      throw StructureViolation("family member " + to_string(member) +
                               " is not contained in the universe");
    }
  }
  return out;
}

Count alpha_product(const HamInstance& instance) {
  const Graph& g = instance.graph();
  Count a = 1;
  for (Vertex v = 1; v <= g.vertex_count(); ++v) {
    const auto free_pairs = static_cast<unsigned>(g.degree(v) - (instance.is_endpoint(v) ? 1 : 2));
    a *= pow2(free_pairs) * factorial(free_pairs);
  }
  return a;
}

FmoCount count_ham_via_fmo(const HamInstance& instance, FmoEngine engine,
                           std::optional<std::size_t> limit) {
  FmoInstance fmo = build_fmo_instance(instance);
  FmoCount out;
  out.universe_size = fmo.universe.size();
  out.z = count_fmo(fmo, engine, limit);
  out.a = alpha_product(instance);
  auto paths = exact_div(out.z, out.a);
  if (!paths) {
    throw NonIntegerResult("#FMO count z = " + to_decimal(out.z) + " is not a multiple of a = " +
                           to_decimal(out.a));
  }
  out.paths = *paths;
  return out;
}

SolutionStructure validate_solution_structure(const HamInstance& instance, const SymbolString& x) {
  const Graph& g = instance.graph();
  const std::size_t n = g.vertex_count();
  FmoGadgets parts = fmo_gadgets(instance);

  if (SymbolMultiset::of(x) != parts.universe) {
    throw PreconditionViolation("string is not drawn from exactly the symbols of R");
  }
  for (const auto& pair : parts.pairs) {
    if (!contains(pair, x)) throw PreconditionViolation("pair " + to_string(pair) + " does not occur");
  }

  // Blocks 1..n are Q_1..Q_n, n+1 is R_w and n+2 is R_s.
  struct Block {
    std::size_t start;
    std::size_t end;
    std::size_t id;
  };
  std::vector<Block> blocks;
  for (std::size_t id = 1; id <= n + 2; ++id) {
    const SymbolMultiset& m = id <= n ? parts.vertex[id] : (id == n + 1 ? parts.r_w : parts.r_s);
    auto at = occurrences(m, x);
    if (at.empty()) throw PreconditionViolation(block_name(instance, id) + " does not occur");
    if (at.size() != 1) {
      throw StructureViolation("occurrence uniqueness: " + block_name(instance, id) + " occurs " +
                               std::to_string(at.size()) + " times");
    }
    blocks.push_back({at.front(), at.front() + m.size() - 1, id});
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const Block& a, const Block& b) { return a.start < b.start; });
  for (std::size_t k = 1; k < blocks.size(); ++k) {
    if (blocks[k].start == blocks[k - 1].start || blocks[k].end <= blocks[k - 1].end) {
      throw StructureViolation("total order: " + block_name(instance, blocks[k].id) + " and " +
                               block_name(instance, blocks[k - 1].id) + " are nested");
    }
  }

  const bool forward = blocks.front().id == n + 1 && blocks.back().id == n + 2;
  const bool backward = blocks.front().id == n + 2 && blocks.back().id == n + 1;
  if (!forward && !backward) {
    throw StructureViolation("total order: R_w and R_s are not the outermost blocks");
  }

  SolutionStructure out;
  out.r_w_start = (forward ? blocks.front() : blocks.back()).start;
  out.r_s_start = (forward ? blocks.back() : blocks.front()).start;
  for (std::size_t k = 1; k + 1 < blocks.size(); ++k) {
    out.path.push_back(static_cast<Vertex>(blocks[k].id));
    out.block_starts.push_back(blocks[k].start);
  }

  for (std::size_t k = 1; k + 2 < blocks.size(); ++k) {
    const Block& left = blocks[k];
    const Block& right = blocks[k + 1];
    const auto i = static_cast<Vertex>(left.id);
    const auto j = static_cast<Vertex>(right.id);
    const std::string names = block_name(instance, i) + " and " + block_name(instance, j);
    if (right.start > left.end || left.end - right.start + 1 != 2) {
      throw StructureViolation("intersection size: " + names + " do not share exactly two positions");
    }
    SymbolString shared(x.begin() + static_cast<std::ptrdiff_t>(right.start - 1),
                        x.begin() + static_cast<std::ptrdiff_t>(left.end));
    if (SymbolMultiset::of(shared) != SymbolMultiset{reserved::vertex(i), reserved::vertex(j)}) {
      throw StructureViolation("intersection content: " + names + " share " +
                               to_string(SymbolMultiset::of(shared)));
    }
    if (!g.has_edge(i, j)) {
      throw StructureViolation("intersection edge: {" + std::to_string(i) + "," +
                               std::to_string(j) + "} is not an edge");
    }
  }

  const Vertex first = forward ? instance.source() : instance.destination();
  const Vertex last = forward ? instance.destination() : instance.source();
  if (out.path.size() != n || out.path.front() != first || out.path.back() != last) {
    throw StructureViolation("Hamiltonian extraction: block order does not run between w and s");
  }
  return out;
}

}  // namespace c1p
