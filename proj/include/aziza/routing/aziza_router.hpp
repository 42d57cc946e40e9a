#pragma once

#include <iosfwd>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "aziza/routing/decision_model.hpp"
#include "aziza/routing/energy_policy.hpp"
#include "aziza/routing/queue_router.hpp"
#include "aziza/routing/trust.hpp"
#include "aziza/routing/zone_prob.hpp"

namespace aziza {

struct AzizaParams {
  ZoneProbParams zone;
  TrustParams trust;
  EnergyPolicy energy;
  DecisionModel model = DecisionModel::closed_form();
  /// Copies a message may spray once inside its destination zone.
  int intra_copies = 4;
  /// false: every peer is fully trusted, nobody is blacklisted or penalized.
  bool trust_enabled = true;
  /// Period of the forwarding-ledger timeout scan, seconds.
  double timeout_scan = 60.0;
  bool record_decisions = false;
};

enum class ZoneMode { InterZone, IntraZone };

/// One routing decision, for audit.
struct DecisionRecord {
  double time = 0.0;
  NodeId i = kNoNode;
  NodeId j = kNoNode;
  MessageId msg = 0;
  bool has_features = false;
  FeatureVector features;
  std::string_view gate;
  std::string_view action;
};

/// Forwarding-ledger entry: `msg` was handed to `peer` at `time`.
struct LedgerEntry {
  NodeId peer = kNoNode;
  double time = 0.0;
  double deadline = 0.0;
  bool penalized = false;
};

class AzizaRouter : public QueueRouter {
 public:
  explicit AzizaRouter(AzizaParams params = {});

  std::string_view name() const override { return "aziza"; }
  void attach(Engine& engine) override;
  int initial_copies(const Message&) const override { return params_.intra_copies; }
  void on_acks_learned(NodeId node, const IdSet& ids, double now) override;
  void on_transfer_done(const TransferJob& job, TransferOutcome outcome, double now) override;
  void on_transfer_aborted(const TransferJob& job, TransferError error, double now) override;
  void on_refused(const Link& link, NodeId from, NodeId to, const TransferRequest& req, TransferError error,
                  double now) override;
  void on_tick(double now) override;

  ZoneMode mode(NodeId carrier, const Message& m) const;
  const ZoneProbTable& zone_table(NodeId n) const { return zones_.at(n); }
  ZoneProbTable& zone_table(NodeId n) { return zones_.at(n); }
  /// T_n(peer) at `now` (1 when trust is disabled).
  double trust(NodeId n, NodeId peer, double now);
  bool blacklisted(NodeId n, NodeId peer, double now);
  const std::unordered_map<MessageId, std::vector<LedgerEntry>>& ledger(NodeId n) const { return ledger_.at(n); }
  const std::vector<DecisionRecord>& decisions() const { return decisions_; }
  void write_decisions(std::ostream& out) const;
  const AzizaParams& params() const { return params_; }

 protected:
  void exchange(const Link& link, double now) override;
  void on_contact_close(const Link& link, double now) override;
  std::optional<TransferRequest> decide(const Link& link, NodeId from, NodeId to, const Message& m,
                                        double now) override;

 private:
  double initial_trust(NodeId peer) const;
  void record(double now, NodeId i, NodeId j, MessageId m, const FeatureVector* f, std::string_view gate,
              std::string_view action);
  std::optional<TransferRequest> forward(NodeId from, NodeId to, const Message& m, int copies, SenderCopy how,
                                         double now);
  void rollback(const TransferJob& job, double now);
  bool relay_ok(NodeId from, NodeId to, const Message& m, double p_k) const;
  void timeout_scan(double now);

  AzizaParams params_;
  std::vector<ZoneProbTable> zones_;
  std::vector<TrustTable> trust_;
  std::vector<ZoneId> last_zone_;
  /// met_[i][k]: previous encounter start, negative if never.
  std::vector<std::vector<double>> met_;
  /// Gap since the endpoints' previous encounter, per open link.
  std::unordered_map<LinkId, double> gap_;
  std::vector<std::unordered_map<MessageId, std::vector<LedgerEntry>>> ledger_;
  /// Optimistic rewards awaiting the transfer result, keyed by (sender, receiver, msg).
  std::unordered_map<std::uint64_t, double> pending_;
  std::vector<DecisionRecord> decisions_;
  double next_scan_ = 0.0;
};

}  // namespace aziza
