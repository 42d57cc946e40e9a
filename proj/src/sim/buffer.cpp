#include "aziza/sim/buffer.hpp"

#include <algorithm>

namespace aziza {

Buffer::Buffer(std::uint64_t capacity_bytes, std::size_t id_universe)
    : capacity_(capacity_bytes), index_(id_universe) {}

const Message* Buffer::find(MessageId id) const {
  if (!index_.contains(id)) return nullptr;
  auto it = std::find_if(messages_.begin(), messages_.end(), [id](const Message& m) { return m.id == id; });
  return it == messages_.end() ? nullptr : &*it;
}

Message* Buffer::find(MessageId id) {
  return const_cast<Message*>(static_cast<const Buffer&>(*this).find(id));
}

void Buffer::insert(Message m) {
  used_ += m.size_bytes;
  index_.insert(m.id);
  messages_.push_back(std::move(m));
}

std::optional<Message> Buffer::erase(MessageId id) {
  if (!index_.contains(id)) return std::nullopt;
  auto it = std::find_if(messages_.begin(), messages_.end(), [id](const Message& m) { return m.id == id; });
  if (it == messages_.end()) return std::nullopt;
  Message out = std::move(*it);
  messages_.erase(it);
  index_.erase(id);
  used_ -= out.size_bytes;
  return out;
}

}  // namespace aziza
