#pragma once

#include <cstddef>

#include <boost/dynamic_bitset.hpp>

#include "aziza/core/ids.hpp"

namespace aziza {

/// Dense set of message ids. Message ids are allocated densely from zero, so a
/// bitset keeps membership tests and unions cheap.
class IdSet {
 public:
  IdSet() = default;
  explicit IdSet(std::size_t universe) : bits_(universe) {}

  void reset_universe(std::size_t universe) { bits_.resize(universe, false); }
  std::size_t universe() const { return bits_.size(); }

  bool contains(MessageId id) const { return id < bits_.size() && bits_.test(id); }
  void insert(MessageId id) {
    if (id >= bits_.size()) bits_.resize(static_cast<std::size_t>(id) + 1, false);
    bits_.set(id);
  }
  void erase(MessageId id) {
    if (id < bits_.size()) bits_.reset(id);
  }
  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }

  /// Adds every member of `other`; returns true if anything was new.
  bool merge(const IdSet& other);
  /// Members of `other` not present here.
  IdSet missing_from(const IdSet& other) const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (auto i = bits_.find_first(); i != boost::dynamic_bitset<>::npos; i = bits_.find_next(i)) {
      fn(static_cast<MessageId>(i));
    }
  }

  friend bool operator==(const IdSet& a, const IdSet& b);

 private:
  boost::dynamic_bitset<> bits_;
};

/// Network-flooded delivery acknowledgments known to one node. Ids are only
/// ever added.
class AckRegistry {
 public:
  AckRegistry() = default;
  explicit AckRegistry(std::size_t universe) : ids_(universe) {}

  bool acked(MessageId id) const { return ids_.contains(id); }
  void add(MessageId id) { ids_.insert(id); }
  /// Unions `peer` into this registry; returns the ids that were new here.
  IdSet merge_from(const AckRegistry& peer);
  const IdSet& ids() const { return ids_; }
  std::size_t size() const { return ids_.size(); }

 private:
  IdSet ids_;
};

}  // namespace aziza
