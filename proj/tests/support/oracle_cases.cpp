#include "support/oracle_cases.hpp"

#include <algorithm>
#include <sstream>

namespace aziza::testing {

TraceWorld line_trace() {
  TraceWorld t;
  const NodeId a = t.add(TraceWorld::West);
  const NodeId b = t.add(TraceWorld::West);
  const NodeId c = t.add(TraceWorld::East);
  t.contact(a, b, 0, 5);
  t.contact(b, c, 10, 20);
  t.contact(a, b, 30, 40);
  t.contact(b, c, 50, 60);
  t.message(a, c, 25.0);
  t.message(c, a, 15.0);
  t.message(a, c, 45.0);
  t.message(b, c, 65.0);
  return t;
}

TraceWorld five_node_trace() {
  TraceWorld t;
  const NodeId a = t.add(TraceWorld::West);
  const NodeId b = t.add(TraceWorld::West);
  const NodeId c = t.add(TraceWorld::West);
  const NodeId d = t.add(TraceWorld::West);
  const NodeId e = t.add(TraceWorld::East);
  t.contact(a, b, 10, 10.5);
  t.contact(a, c, 20, 30);
  t.contact(c, d, 40, 50);
  t.contact(d, e, 60, 70);
  t.contact(b, e, 80, 90);
  t.message(a, e, 4.0, 51'200);
  t.message(a, e, 5.0, 204'800);
  t.message(b, e, 95.0, 51'200);
  return t;
}

OracleOutcome run_oracle_case(const TraceWorld& trace, Protocol protocol) {
  TraceWorld t = trace;
  auto router = make_router(protocol);
  TraceRun run(t, *router);

  OracleOutcome out;
  std::vector<std::vector<std::vector<NodeId>>> paths;
  for (MessageId id = 0; id < t.world.traffic.size(); ++id) {
    const MessageCreation& c = t.world.traffic[id];
    paths.push_back(feasible_paths(t.script, {c.src, c.dst, c.time, t.world.ttl, c.size_bytes}, t.world.bandwidth_bps,
                                   t.world.horizon));
    if (!paths.back().empty()) out.feasible.push_back(id);
    if (run.engine.delivered(id)) out.delivered.push_back(id);
  }
  for (const Delivery& d : run.engine.deliveries()) {
    out.traces.push_back({d.msg, d.trace});
    const auto& ok = paths.at(d.msg);
    if (std::find(ok.begin(), ok.end(), d.trace) == ok.end()) out.traces_feasible = false;
  }
  return out;
}

std::string OracleOutcome::describe() const {
  std::ostringstream s;
  auto list = [&](const std::vector<MessageId>& ids) {
    s << "{";
    for (std::size_t i = 0; i < ids.size(); ++i) s << (i ? "," : "") << "m" << ids[i];
    s << "}";
  };
  s << "delivered ";
  list(delivered);
  s << " feasible ";
  list(feasible);
  for (const auto& [id, trace] : traces) {
    s << " m" << id << "=[";
    for (std::size_t i = 0; i < trace.size(); ++i) s << (i ? "," : "") << trace[i];
    s << "]";
  }
  if (!traces_feasible) s << " (infeasible trace)";
  return s.str();
}

}  // namespace aziza::testing
