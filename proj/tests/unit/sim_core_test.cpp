#include <gtest/gtest.h>

#include <set>
#include <tuple>

#include "aziza/core/energy.hpp"
#include "aziza/core/rng.hpp"
#include "aziza/routing/epidemic.hpp"
#include "aziza/runner/experiment.hpp"
#include "aziza/scenario/world_builder.hpp"
#include "aziza/sim/engine.hpp"
#include "support/trace_world.hpp"

using namespace aziza;
using aziza::testing::TraceRun;
using aziza::testing::TraceWorld;

namespace {

class NullRouter : public Router {
 public:
  std::string_view name() const override { return "null"; }
  std::optional<TransferRequest> next_transfer(const Link&, NodeId, NodeId, double) override { return std::nullopt; }
};

std::vector<Event> events_of(const EventLog& log, EventKind kind) {
  std::vector<Event> out;
  for (const Event& e : log.events()) {
    if (e.kind == kind) out.push_back(e);
  }
  return out;
}

World two_static(double gap, double range) {
  World w = make_empty_world(1000.0);
  NodeSpec s;
  s.radio_range = range;
  add_static_node(w, s, {100, 100});
  add_static_node(w, s, {100 + gap, 100});
  w.horizon = 50;
  return w;
}

}  // namespace

TEST(Rng, SameSeedAndLabelRepeat) {
  RngStream a(7, "mobility"), b(7, "mobility");
  for (int i = 0; i < 1000; ++i) ASSERT_EQ(a.next_u64(), b.next_u64());
}

TEST(Rng, LabelsGiveDifferentStreams) {
  RngStream a(7, "mobility"), b(7, "traffic");
  int same = 0;
  for (int i = 0; i < 1000; ++i) same += a.next_u64() == b.next_u64();
  EXPECT_EQ(same, 0);
}

TEST(Rng, UniformStaysInRange) {
  RngStream r(3, "x");
  for (int i = 0; i < 10000; ++i) {
    const double u = r.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    const auto k = r.uniform_int(-2, 2);
    ASSERT_GE(k, -2);
    ASSERT_LE(k, 2);
  }
}

TEST(Energy, MixedLedgerTotals) {
  EnergyMeter m(1000.0, EnergyCosts{});
  for (int i = 0; i < 10; ++i) ASSERT_TRUE(m.account(EnergyEventKind::Tx));
  for (int i = 0; i < 20; ++i) ASSERT_TRUE(m.account(EnergyEventKind::Rx));
  m.account(EnergyEventKind::Idle, 3600.0);
  EXPECT_EQ(m.consumed_uj(), 185'500'000);
  EXPECT_DOUBLE_EQ(m.consumed_j(), 185.5);
  EXPECT_EQ(m.consumed_uj(), m.ledger_uj());
}

TEST(Energy, TxRefusedBelowCost) {
  EnergyMeter m(0.1, EnergyCosts{});
  EXPECT_FALSE(m.can_afford(EnergyEventKind::Tx));
  EXPECT_FALSE(m.account(EnergyEventKind::Tx));
  EXPECT_EQ(m.residual_uj(), 100'000);
  EXPECT_EQ(m.tx_count(), 0u);
}

TEST(Energy, NothingHappenedNothingSpent) {
  EnergyMeter m(50.0, EnergyCosts{});
  EXPECT_EQ(m.consumed_uj(), 0);
  EXPECT_EQ(m.ledger_uj(), 0);
}

TEST(Energy, IdleClampsAtZero) {
  EnergyMeter m(1.0, EnergyCosts{});
  m.account(EnergyEventKind::Idle, 100.0);
  EXPECT_TRUE(m.depleted());
  EXPECT_EQ(m.residual_uj(), 0);
  EXPECT_EQ(m.consumed_uj(), m.capacity_uj());
}

TEST(Transfer, DurationFromBandwidth) {
  EXPECT_DOUBLE_EQ(transfer_seconds(102'400, 2e6), 0.4096);
  EXPECT_DOUBLE_EQ(transfer_seconds(204'800, 2e6), 0.8192);
}

TEST(Message, UrgencyFollowsPriority) {
  EXPECT_EQ(urgency_of(Priority::Critical), 1.0);
  EXPECT_EQ(urgency_of(Priority::Important), 0.5);
  EXPECT_EQ(urgency_of(Priority::Routine), 0.1);
}

TEST(Contacts, CloseStaticPairOpensAtStart) {
  World w = two_static(8.0, 10.0);
  NullRouter r;
  Engine e(w, r);
  e.run();
  auto opens = events_of(e.log(), EventKind::ContactOpen);
  ASSERT_EQ(opens.size(), 1u);
  EXPECT_EQ(opens[0].time, 0.0);
  EXPECT_TRUE(events_of(e.log(), EventKind::ContactClose).empty());
}

TEST(Contacts, OutOfRangePairNeverMeets) {
  World w = two_static(60.0, 50.0);
  w.horizon = 3600;
  NullRouter r;
  Engine e(w, r);
  e.run();
  EXPECT_TRUE(events_of(e.log(), EventKind::ContactOpen).empty());
}

TEST(Contacts, ApproachingNodeOpensWhenInRange) {
  World w = two_static(20.0, 10.0);
  // Node 1 walks from 20 m away straight at node 0 at 1 m/s.
  Timetable::Leg leg{0.0, 20.0, {120, 100}, {100, 100}};
  Timetable::Leg rest{20.0, 1000.0, {100, 100}, {100, 100}};
  w.nodes[1].mobility = Timetable(1000.0, 0.0, {leg, rest}, {});
  NullRouter r;
  Engine e(w, r);
  e.run();
  auto opens = events_of(e.log(), EventKind::ContactOpen);
  ASSERT_EQ(opens.size(), 1u);
  EXPECT_NEAR(opens[0].time, 10.0, 1.0);
}

TEST(Contacts, SymmetricWhileOpen) {
  World w = two_static(5.0, 10.0);
  NullRouter r;
  Engine e(w, r);
  e.start();
  EXPECT_TRUE(e.in_contact(0, 1));
  EXPECT_TRUE(e.in_contact(1, 0));
  EXPECT_EQ(e.link_between(0, 1), e.link_between(1, 0));
}

TEST(Engine, TransferTakesSizeOverBandwidth) {
  TraceWorld t;
  const NodeId a = t.add(TraceWorld::West);
  const NodeId b = t.add(TraceWorld::West);
  t.contact(a, b, 0, 100);
  t.message(a, b, 0.5, 102'400);
  EpidemicRouter r;
  TraceRun run(t, r);
  auto done = events_of(run.engine.log(), EventKind::TransferComplete);
  ASSERT_EQ(done.size(), 1u);
  EXPECT_NEAR(done[0].time - 0.5, 0.4096, 1e-12);
}

TEST(Engine, ContactEndingMidTransferAborts) {
  TraceWorld t;
  const NodeId a = t.add(TraceWorld::West);
  const NodeId b = t.add(TraceWorld::West);
  t.contact(a, b, 0, 10.5);
  t.message(a, b, 10.0, 204'800);
  EpidemicRouter r;
  TraceRun run(t, r);
  EXPECT_EQ(events_of(run.engine.log(), EventKind::TransferAbort).size(), 1u);
  EXPECT_TRUE(events_of(run.engine.log(), EventKind::TransferComplete).empty());
  EXPECT_FALSE(run.engine.delivered(0));
  // The sender keyed its radio; the receiver never finished receiving.
  EXPECT_EQ(t.world.nodes[a].energy.tx_count(), 1u);
  EXPECT_EQ(t.world.nodes[b].energy.rx_count(), 0u);
  EXPECT_FALSE(t.world.nodes[b].buffer.contains(0));
}

TEST(Engine, FullReceiverIsRefused) {
  TraceWorld t;
  const NodeId a = t.add(TraceWorld::West);
  const NodeId relay = t.add(TraceWorld::West);
  const NodeId dst = t.add(TraceWorld::East);
  t.world.nodes[relay].spec.buffer_capacity = 0;
  t.world.nodes[relay].buffer = Buffer(0, 0);
  t.contact(a, relay, 0, 100);
  t.message(a, dst, 0.0);
  NullRouter r;
  Engine e(t.world, r, t.options());
  e.start();
  e.step();
  ASSERT_TRUE(t.world.nodes[a].buffer.contains(0));
  TransferResult res = e.enqueue_transfer(a, relay, {0, 1, SenderCopy::Keep});
  EXPECT_FALSE(res);
  EXPECT_EQ(res.error, TransferError::BufferFull);
  EXPECT_EQ(e.stats().buffer_full, 1u);
}

TEST(Engine, EnqueuedJobCarriesProjectedTiming) {
  TraceWorld t;
  const NodeId a = t.add(TraceWorld::West);
  const NodeId b = t.add(TraceWorld::West);
  const NodeId c = t.add(TraceWorld::East);
  t.contact(a, b, 0, 100);
  t.message(a, c, 0.0, 102'400);
  NullRouter r;
  Engine e(t.world, r, t.options());
  e.start();
  e.step();
  TransferResult res = e.enqueue_transfer(a, b, {0, 1, SenderCopy::Keep});
  ASSERT_TRUE(res);
  EXPECT_NEAR(res.job->finish - res.job->start, 0.4096, 1e-12);
  EXPECT_EQ(e.enqueue_transfer(a, c, {0, 1, SenderCopy::Keep}).error, TransferError::NoContact);
}

TEST(Engine, DeadReceiverRefused) {
  TraceWorld t;
  const NodeId a = t.add(TraceWorld::West);
  const NodeId b = t.add(TraceWorld::West);
  t.world.nodes[b].energy = EnergyMeter(0.1, EnergyCosts{});
  t.contact(a, b, 0, 100);
  t.message(a, b, 0.0);
  EpidemicRouter r;
  TraceRun run(t, r);
  EXPECT_FALSE(run.engine.delivered(0));
  EXPECT_EQ(t.world.nodes[a].energy.tx_count(), 0u);
}

TEST(Engine, ExpiredMessagesAreReaped) {
  TraceWorld t;
  const NodeId a = t.add(TraceWorld::West);
  const NodeId b = t.add(TraceWorld::East);
  t.world.ttl = 5.0;
  t.world.horizon = 10.0;
  t.message(a, b, 0.0);
  NullRouter r;
  Engine e(t.world, r, t.options());
  e.start();
  for (int i = 0; i < 5; ++i) e.step();
  EXPECT_TRUE(t.world.nodes[a].buffer.contains(0));
  e.step();
  EXPECT_FALSE(t.world.nodes[a].buffer.contains(0));
  auto drops = events_of(e.log(), EventKind::MessageDropped);
  ASSERT_EQ(drops.size(), 1u);
  EXPECT_EQ(drops[0].reason, DropReason::Ttl);
  EXPECT_EQ(drops[0].time, 6.0);
}

TEST(Engine, BlackholeSwallowsRelayedCopies) {
  TraceWorld t;
  const NodeId a = t.add(TraceWorld::West);
  const NodeId bad = t.add(TraceWorld::West, NodeClass::Ground, true);
  const NodeId c = t.add(TraceWorld::East);
  t.contact(a, bad, 0, 10);
  t.message(a, c, 1.0);
  EpidemicRouter r;
  TraceRun run(t, r);
  EXPECT_FALSE(t.world.nodes[bad].buffer.contains(0));
  EXPECT_EQ(t.world.nodes[bad].energy.rx_count(), 1u);
  auto drops = events_of(run.engine.log(), EventKind::MessageDropped);
  ASSERT_EQ(drops.size(), 1u);
  EXPECT_EQ(drops[0].reason, DropReason::Blackhole);
}

TEST(Engine, BlackholeDestinationStillCountsDelivery) {
  TraceWorld t;
  const NodeId a = t.add(TraceWorld::West);
  const NodeId bad = t.add(TraceWorld::West, NodeClass::Ground, true);
  t.contact(a, bad, 0, 10);
  t.message(a, bad, 1.0);
  EpidemicRouter r;
  TraceRun run(t, r);
  EXPECT_TRUE(run.engine.delivered(0));
}

TEST(Engine, DeliveryAcksPurgeOtherCopies) {
  TraceWorld t;
  const NodeId a = t.add(TraceWorld::West);
  const NodeId b = t.add(TraceWorld::West);
  const NodeId c = t.add(TraceWorld::East);
  t.contact(a, b, 0, 10);
  t.contact(b, c, 20, 30);
  t.contact(a, b, 40, 50);
  t.message(a, c, 1.0);
  EpidemicRouter r;
  TraceRun run(t, r);
  ASSERT_TRUE(run.engine.delivered(0));
  EXPECT_FALSE(t.world.nodes[a].buffer.contains(0));
  EXPECT_FALSE(t.world.nodes[b].buffer.contains(0));
  EXPECT_TRUE(t.world.nodes[a].acks.acked(0));
}

TEST(Engine, FullRunKeepsInvariants) {
  ScenarioConfig c = default_scenario();
  c.horizon = 4 * 3600.0;
  World w = build_world(c, 5);
  EpidemicRouter r;
  Engine e(w, r);
  e.start();
  double last = 0;
  while (e.step()) {
    ASSERT_GE(e.now(), last);
    last = e.now();
    if (static_cast<long>(e.now()) % 600 == 0) {
      for (const NodeState& n : w.nodes) {
        ASSERT_EQ(n.energy.consumed_uj(), n.energy.ledger_uj());
        for (const Message& m : n.buffer.messages()) {
          ASSERT_FALSE(m.expired(e.now()));
          for (std::size_t k = 1; k < m.hop_trace.size(); ++k) ASSERT_NE(m.hop_trace[k], m.hop_trace[k - 1]);
          ASSERT_EQ(m.hop_trace.front(), m.src);
        }
        for (NodeId p : e.neighbors(n.id())) ASSERT_TRUE(e.in_contact(p, n.id()));
      }
    }
  }
  e.finish();
  for (const Event& ev : e.log().events()) {
    if (ev.kind == EventKind::TransferComplete) {
      ASSERT_LE(ev.time, c.horizon);
    }
  }
}

TEST(Engine, RunsAreReproducible) {
  ScenarioConfig c = default_scenario();
  c.horizon = 3 * 3600.0;
  std::string logs[2];
  for (auto& out : logs) {
    World w = build_world(c, 11);
    EpidemicRouter r;
    Engine e(w, r);
    e.run();
    out = e.log().to_jsonl();
  }
  EXPECT_FALSE(logs[0].empty());
  EXPECT_EQ(logs[0], logs[1]);
}

TEST(Engine, SeedsGiveDistinctOutcomes) {
  std::set<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>> seen;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    RunSpec s;
    s.config.scenario.horizon = 4 * 3600.0;
    s.protocol = Protocol::Epidemic;
    s.seed = seed;
    const RunMetrics m = run_cell(s).metrics;
    seen.insert({m.created, m.delivered, m.relayed});
  }
  EXPECT_EQ(seen.size(), 10u);
}
