#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "c1p/count.hpp"
#include "c1p/graph.hpp"
#include "c1p/multiset.hpp"
#include "c1p/pqtree.hpp"

namespace c1p {

struct Budgets {
  std::size_t limit = kDefaultEnumerationLimit;
  /// The #FRONT route runs only up to this many edges (T_E alone has up to
  /// (|E|+2)! * 2^|E| arrangements).
  std::size_t front_max_edges = 5;
  /// The #FMO route runs only up to this universe size (|R| = 4|E| + 4).
  std::size_t fmo_max_universe = 24;
  FmoEngine engine = FmoEngine::Pruned;
  /// Run the three routes on separate threads.
  bool concurrent = true;
};

struct RouteResult {
  enum class Status { Ok, Skipped, Failed };

  Status status = Status::Skipped;
  std::optional<Count> count;
  /// Why the route produced no count: a budget (Skipped) or an error that
  /// signals a bug (Failed). Empty when Ok.
  std::string reason;
  double millis = 0.0;

  bool ran() const noexcept { return status == Status::Ok; }
};

struct HamCountReport {
  std::uint32_t vertex_count = 0;
  std::size_t edge_count = 0;
  std::uint32_t source = 0;
  std::uint32_t destination = 0;
  std::int64_t p = 0;

  RouteResult brute;
  RouteResult via_front;
  RouteResult via_fmo;
  /// No route failed and all routes that produced a count agree.
  bool agree = false;

  std::optional<Count> fr_tv;
  std::optional<Count> fr_te;
  std::optional<Count> fr_tg;
  std::optional<Count> intersection;
  std::optional<Count> z;
  Count a;
  std::size_t universe_size = 0;
};

/// Counts Hamiltonian sequences three ways: brute force, through #FRONT and
/// through #FMO. Routes beyond their budget are recorded as skipped; a route
/// that throws anything else is recorded as failed. Neither aborts the run.
HamCountReport cross_validate(const HamInstance& instance, const Budgets& budgets = {});

/// JSON with `"schema": 1`. Counts are decimal strings. `millis` fields are
/// only written when `include_timing` is set, so reports without timing are
/// byte-stable across runs.
std::string to_json(const HamCountReport& report, bool include_timing = true);

}  // namespace c1p
