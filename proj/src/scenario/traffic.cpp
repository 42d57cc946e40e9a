#include "aziza/scenario/traffic.hpp"

#include <algorithm>
#include <string>

#include "aziza/core/rng.hpp"

namespace aziza {

namespace {

Priority draw_priority(RngStream& rng, const std::array<double, 3>& mix) {
  const double u = rng.uniform();
  if (u < mix[0]) return Priority::Critical;
  if (u < mix[0] + mix[1]) return Priority::Important;
  // Degenerate mixes put all mass on one class; guard floating-point leftovers.
  if (mix[2] == 0.0) return mix[1] > 0.0 ? Priority::Important : Priority::Critical;
  return Priority::Routine;
}

}  // namespace

std::vector<MessageCreation> generate_traffic(const std::vector<Resident>& residents, ZoneId hub_region,
                                              const TrafficProfile& profile, double horizon, std::uint64_t seed) {
  std::vector<MessageCreation> out;
  if (residents.size() < 2 || profile.rate_per_hour <= 0.0) return out;
  const double rate = profile.rate_per_hour / 3600.0;

  std::vector<NodeId> pool;
  for (const Resident& src : residents) {
    RngStream rng(seed, "traffic/" + std::to_string(src.id));
    double t = 0.0;
    while (true) {
      t += rng.exponential(rate);
      if (t >= horizon) break;
      MessageCreation m;
      m.time = t;
      m.src = src.id;
      m.size_bytes = static_cast<std::uint32_t>(rng.uniform_int(profile.size_min, profile.size_max));
      m.priority = draw_priority(rng, profile.priority_mix);

      const bool intra = rng.bernoulli(profile.intra_zone_fraction);
      const bool to_hub = rng.bernoulli(profile.hub_weight);
      auto collect = [&](auto&& keep) {
        pool.clear();
        for (const Resident& r : residents) {
          if (r.id != src.id && keep(r)) pool.push_back(r.id);
        }
      };
      if (intra) {
        collect([&](const Resident& r) { return r.region == src.region; });
      } else if (src.region != hub_region && to_hub) {
        collect([&](const Resident& r) { return r.region == hub_region; });
      } else {
        collect([&](const Resident& r) { return r.region != src.region && r.region != hub_region; });
      }
      if (pool.empty()) collect([&](const Resident& r) { return r.region != src.region; });
      if (pool.empty()) collect([](const Resident&) { return true; });
      const std::size_t pick = rng.index(pool.size());
      m.dst = pool[pick];
      for (const Resident& r : residents) {
        if (r.id == m.dst) m.dst_zone = r.routing_zone;
      }
      out.push_back(m);
    }
  }
  std::sort(out.begin(), out.end(), [](const MessageCreation& a, const MessageCreation& b) {
    return a.time != b.time ? a.time < b.time : a.src < b.src;
  });
  return out;
}

}  // namespace aziza
