#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "c1p/count.hpp"
#include "c1p/graph.hpp"
#include "c1p/multiset.hpp"
#include "c1p/pqtree.hpp"

namespace c1p {

// --- Hamiltonian paths ---------------------------------------------------

/// Vertex sequences visiting every vertex once along edges whose endpoint
/// set is {w, s}. A path and its reversal are two different sequences.
Count brute_force_ham(const HamInstance& instance);

/// The sequences counted by `brute_force_ham`, sorted.
std::vector<std::vector<Vertex>> hamiltonian_sequences(const HamInstance& instance);

// --- #HAM -> #FRONT ------------------------------------------------------

/// The trees coding a Hamiltonian instance.
///
/// T_E is a P-node over `$`, `#` and one two-leaf Q-node per edge. T_V is the
/// Q-node [$, T_C, #, T_N]; T_C is the Q-node [w, P(Q(i,i) for inner i), s]
/// and T_N a P-node of padding leaves (deg(w)-1 copies of w, deg(s)-1 of s,
/// deg(i)-2 of every inner i). T_G is the Q-node [T_V, T_E]. The three main
/// trees are canonical; `t_c` and `t_n` are kept as constructed, so on small
/// graphs they may be empty or single-child nodes.
struct FrontReduction {
  PqTree t_g;
  PqTree t_v;
  PqTree t_e;
  PqNode t_c;
  PqNode t_n;
};

FrontReduction build_front_trees(const HamInstance& instance);

/// 2 * p! * 2^p with p = |E| - |V| + 1: the number of strings of
/// Fr(T_V) ∩ Fr(T_E) that code one Hamiltonian sequence.
Count sigma_h_size_front(const HamInstance& instance);

/// Fr(T_V) ∩ Fr(T_E), sorted.
FrontierSet intersection_front(const HamInstance& instance,
                               std::optional<std::size_t> limit = kDefaultEnumerationLimit);

/// Reads the Hamiltonian sequence coded by a string of the intersection:
/// the string is `$ tau # pi` or `pi # tau $`, where tau = w v2 v2 ... s
/// lists the path with inner vertices doubled and pi pairs up the remaining
/// edges. Throws StructureViolation if the string has another shape.
std::vector<Vertex> decode_front_string(const HamInstance& instance, const SymbolString& alpha);

struct FrontCount {
  Count fr_tv;
  Count fr_te;
  Count fr_tg;
  /// 2|Fr(T_V)||Fr(T_E)| - |Fr(T_G)|.
  Count numerator;
  /// |Fr(T_V) ∩ Fr(T_E)|, the exact square root of `numerator`.
  Count intersection;
  std::int64_t p = 0;
  Count block_size;
  /// numerator / block_size when that divides, for reference.
  std::optional<Count> unsquared_quotient;
  Count paths;
};

/// Hamiltonian count from three #FRONT counts.
///
/// Fr(T_G) = Fr(T_V)Fr(T_E) ∪ Fr(T_E)Fr(T_V) and, because both factors
/// have the same length, the two products overlap in exactly I x I where
/// I = Fr(T_V) ∩ Fr(T_E). So 2|Fr(T_V)||Fr(T_E)| - |Fr(T_G)| = |I|^2, and
/// the count is sqrt of that divided by the block size 2*p!*2^p. Throws
/// NonIntegerResult when the root or the quotient is not exact.
FrontCount count_ham_via_front(const HamInstance& instance,
                               std::optional<std::size_t> limit = kDefaultEnumerationLimit);

// --- #HAM -> #FMO --------------------------------------------------------

/// The multisets of the #FMO construction, indexed by vertex id (entry 0
/// unused).
struct FmoGadgets {
  /// Q_i = {d_ij, j over edges {i,j}} plus {i, c_i} for endpoints, {i, i} otherwise.
  std::vector<SymbolMultiset> vertex;
  SymbolMultiset r_w;  ///< {c_w, cp_w}
  SymbolMultiset r_s;  ///< {c_s, cp_s}
  /// {d_ij, j} for every ordered pair (i, j) with {i, j} in E.
  std::vector<SymbolMultiset> pairs;
  /// R = (sum of Q_i + {cp_w, cp_s}) minus ({i,i} for inner i + {w, s}).
  SymbolMultiset universe;
};

FmoGadgets fmo_gadgets(const HamInstance& instance);

/// <R, F> with F = Q_1..Q_n, R_w, R_s and every pair multiset. |R| = 4|E|+4.
/// Throws StructureViolation if some member of F is not contained in R.
FmoInstance build_fmo_instance(const HamInstance& instance);

/// Product over vertices of 2^(d-1)(d-1)! for w and s, 2^(d-2)(d-2)! otherwise.
Count alpha_product(const HamInstance& instance);

struct FmoCount {
  Count z;
  Count a;
  std::size_t universe_size = 0;
  Count paths;
};

/// z / a where z counts the #FMO solutions. Throws NonIntegerResult when a
/// does not divide z.
FmoCount count_ham_via_fmo(const HamInstance& instance, FmoEngine engine = FmoEngine::Pruned,
                           std::optional<std::size_t> limit = kDefaultEnumerationLimit);

/// What `validate_solution_structure` read off a solution.
struct SolutionStructure {
  std::vector<Vertex> path;
  /// 1-based start of Q_v for each vertex of `path`, in path order.
  std::vector<std::size_t> block_starts;
  std::size_t r_w_start = 0;
  std::size_t r_s_start = 0;
};

/// Checks that in a solution x of the instance's #FMO reduction
///  - each of R_w, R_s, Q_1..Q_n occurs exactly once,
///  - the occurrences are totally ordered left to right,
///  - consecutive Q_i, Q_j share exactly two positions holding {i, j}, an edge,
///  - the order of the Q blocks is a Hamiltonian sequence with ends {w, s}.
/// Throws PreconditionViolation if x is not a solution at all, and
/// StructureViolation naming the failed property otherwise.
SolutionStructure validate_solution_structure(const HamInstance& instance, const SymbolString& x);

}  // namespace c1p
