#include <algorithm>

#include "c1p/reduction.hpp"

namespace c1p {
namespace {

class PathSearch {
 public:
  explicit PathSearch(const HamInstance& instance)
      : g_(instance.graph()), visited_(g_.vertex_count() + 1, false) {}

  template <typename OnPath>
  void from(Vertex start, Vertex finish, OnPath&& on_path) {
    path_.assign(1, start);
    visited_[start] = true;
    extend(finish, on_path);
    visited_[start] = false;
  }

 private:
  template <typename OnPath>
  void extend(Vertex finish, OnPath& on_path) {
    const Vertex v = path_.back();
    if (path_.size() == g_.vertex_count()) {
      if (v == finish) on_path(path_);
      return;
    }
    if (v == finish) return;
    for (Vertex u : g_.neighbors(v)) {
      if (visited_[u]) continue;
      visited_[u] = true;
      path_.push_back(u);
      extend(finish, on_path);
      path_.pop_back();
      visited_[u] = false;
    }
  }

  const Graph& g_;
  std::vector<bool> visited_;
  std::vector<Vertex> path_;
};

}  // namespace

Count brute_force_ham(const HamInstance& instance) {
  Count total = 0;
  PathSearch search(instance);
  auto tally = [&](const std::vector<Vertex>&) { ++total; };
  search.from(instance.source(), instance.destination(), tally);
  search.from(instance.destination(), instance.source(), tally);
  return total;
}

std::vector<std::vector<Vertex>> hamiltonian_sequences(const HamInstance& instance) {
  std::vector<std::vector<Vertex>> out;
  PathSearch search(instance);
  auto keep = [&](const std::vector<Vertex>& p) { out.push_back(p); };
  search.from(instance.source(), instance.destination(), keep);
  search.from(instance.destination(), instance.source(), keep);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace c1p
