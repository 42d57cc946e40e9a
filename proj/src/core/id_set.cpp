#include "aziza/core/id_set.hpp"

#include <algorithm>

namespace aziza {

bool IdSet::merge(const IdSet& other) {
  if (other.bits_.size() > bits_.size()) bits_.resize(other.bits_.size(), false);
  auto widened = other.bits_;
  widened.resize(bits_.size(), false);
  const bool grew = !widened.is_subset_of(bits_);
  bits_ |= widened;
  return grew;
}

IdSet IdSet::missing_from(const IdSet& other) const {
  IdSet out;
  out.bits_ = other.bits_;
  auto mine = bits_;
  mine.resize(out.bits_.size(), false);
  out.bits_ -= mine;
  return out;
}

bool operator==(const IdSet& a, const IdSet& b) {
  const auto n = std::max(a.bits_.size(), b.bits_.size());
  auto x = a.bits_;
  auto y = b.bits_;
  x.resize(n, false);
  y.resize(n, false);
  return x == y;
}

IdSet AckRegistry::merge_from(const AckRegistry& peer) {
  IdSet fresh = ids_.missing_from(peer.ids_);
  if (!fresh.empty()) ids_.merge(peer.ids_);
  return fresh;
}

}  // namespace aziza
