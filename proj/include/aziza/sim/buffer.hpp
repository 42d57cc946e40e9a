#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "aziza/core/id_set.hpp"
#include "aziza/core/message.hpp"

namespace aziza {

/// Byte-bounded message store kept in arrival order.
class Buffer {
 public:
  Buffer() = default;
  Buffer(std::uint64_t capacity_bytes, std::size_t id_universe);

  bool contains(MessageId id) const { return index_.contains(id); }
  const Message* find(MessageId id) const;
  Message* find(MessageId id);

  std::uint64_t capacity() const { return capacity_; }
  std::uint64_t used() const { return used_; }
  std::uint64_t free_bytes() const { return capacity_ - used_; }
  bool has_room(std::uint64_t bytes) const { return bytes <= free_bytes(); }
  std::size_t count() const { return messages_.size(); }
  bool empty() const { return messages_.empty(); }

  /// Precondition: !contains(m.id) && has_room(m.size_bytes).
  void insert(Message m);
  std::optional<Message> erase(MessageId id);

  /// Oldest-first.
  const std::vector<Message>& messages() const { return messages_; }
  const IdSet& ids() const { return index_; }

 private:
  std::uint64_t capacity_ = 0;
  std::uint64_t used_ = 0;
  std::vector<Message> messages_;
  IdSet index_;
};

}  // namespace aziza
