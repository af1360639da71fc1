#include "c1p/cross_validate.hpp"

#include <chrono>
#include <future>

#include <json.hpp>

#include "c1p/errors.hpp"
#include "c1p/reduction.hpp"

namespace c1p {
namespace {

using ordered_json = nlohmann::ordered_json;

template <typename Fn>
RouteResult timed(Fn&& fn) {
  RouteResult r;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    r.count = fn();
    r.status = RouteResult::Status::Ok;
  } catch (const EnumerationBudgetExceeded& e) {
    r.status = RouteResult::Status::Skipped;
    r.reason = std::string("budget: ") + e.what();
  } catch (const std::exception& e) {
    r.status = RouteResult::Status::Failed;
    r.reason = e.what();
  }
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

ordered_json route_json(const RouteResult& r, bool include_timing) {
  ordered_json j;
  switch (r.status) {
    case RouteResult::Status::Ok:
      j["status"] = "ok";
      j["count"] = to_decimal(*r.count);
      break;
    case RouteResult::Status::Skipped:
      j["status"] = "skipped";
      j["reason"] = r.reason;
      break;
    case RouteResult::Status::Failed:
      j["status"] = "failed";
      j["reason"] = r.reason;
      break;
  }
  if (include_timing) j["millis"] = r.millis;
  return j;
}

ordered_json optional_count(const std::optional<Count>& c) {
  return c ? ordered_json(to_decimal(*c)) : ordered_json(nullptr);
}

}  // namespace

HamCountReport cross_validate(const HamInstance& instance, const Budgets& budgets) {
  HamCountReport report;
  const Graph& g = instance.graph();
  report.vertex_count = g.vertex_count();
  report.edge_count = g.edge_count();
  report.source = instance.source();
  report.destination = instance.destination();
  report.p = instance.surplus();
  report.a = alpha_product(instance);
  report.universe_size = 4 * g.edge_count() + 4;

  std::optional<FrontCount> front;
  std::optional<FmoCount> fmo;

  auto run_brute = [&] { return timed([&] { return brute_force_ham(instance); }); };
  auto run_front = [&] {
    if (g.edge_count() > budgets.front_max_edges) {
      RouteResult r;
      r.reason = "budget: |E| = " + std::to_string(g.edge_count()) +
                  " exceeds the #FRONT route limit of " + std::to_string(budgets.front_max_edges);
      return r;
    }
    return timed([&] {
      front = count_ham_via_front(instance, budgets.limit);
      return front->paths;
    });
  };
  auto run_fmo = [&] {
    if (report.universe_size > budgets.fmo_max_universe) {
      RouteResult r;
      r.reason = "budget: |R| = " + std::to_string(report.universe_size) +
                  " exceeds the #FMO route limit of " + std::to_string(budgets.fmo_max_universe);
      return r;
    }
    return timed([&] {
      fmo = count_ham_via_fmo(instance, budgets.engine, budgets.limit);
      return fmo->paths;
    });
  };

  if (budgets.concurrent) {
    auto f_front = std::async(std::launch::async, run_front);
    auto f_fmo = std::async(std::launch::async, run_fmo);
    report.brute = run_brute();
    report.via_front = f_front.get();
    report.via_fmo = f_fmo.get();
  } else {
    report.brute = run_brute();
    report.via_front = run_front();
    report.via_fmo = run_fmo();
  }

  if (front) {
    report.fr_tv = front->fr_tv;
    report.fr_te = front->fr_te;
    report.fr_tg = front->fr_tg;
    report.intersection = front->intersection;
  }
  if (fmo) report.z = fmo->z;

  report.agree = report.brute.ran();
  for (const RouteResult* r : {&report.via_front, &report.via_fmo}) {
    if (r->status == RouteResult::Status::Failed) report.agree = false;
    if (r->ran() && report.brute.ran() && *r->count != *report.brute.count) report.agree = false;
  }
  return report;
}

std::string to_json(const HamCountReport& report, bool include_timing) {
  ordered_json j;
  j["schema"] = 1;
  j["graph"] = {{"n", report.vertex_count},
                {"m", report.edge_count},
                {"w", report.source},
                {"s", report.destination}};
  j["brute"] = route_json(report.brute, include_timing);
  j["via_front"] = route_json(report.via_front, include_timing);
  j["via_fmo"] = route_json(report.via_fmo, include_timing);
  j["agree"] = report.agree;
  j["intermediates"] = {
      {"fr_tv", optional_count(report.fr_tv)},
      {"fr_te", optional_count(report.fr_te)},
      {"fr_tg", optional_count(report.fr_tg)},
      {"intersection", optional_count(report.intersection)},
      {"z", optional_count(report.z)},
      {"a", to_decimal(report.a)},
      {"p", report.p},
      {"universe_size", report.universe_size},
  };
  return j.dump(2) + "\n";
}

}  // namespace c1p
