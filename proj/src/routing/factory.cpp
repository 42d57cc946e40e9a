#include "aziza/routing/factory.hpp"

#include "aziza/routing/epidemic.hpp"
#include "aziza/routing/spray_wait.hpp"

namespace aziza {

const char* to_string(Protocol p) {
  switch (p) {
    case Protocol::Aziza: return "aziza";
    case Protocol::Epidemic: return "epidemic";
    case Protocol::Prophet: return "prophet";
    case Protocol::SprayAndWait: return "snw";
    case Protocol::MaxProp: return "maxprop";
    case Protocol::BubbleRap: return "bubblerap";
  }
  return "aziza";
}

std::optional<Protocol> parse_protocol(std::string_view name) {
  for (Protocol p : all_protocols()) {
    if (name == to_string(p)) return p;
  }
  return std::nullopt;
}

std::vector<Protocol> all_protocols() {
  return {Protocol::Aziza,        Protocol::Epidemic, Protocol::Prophet,
          Protocol::SprayAndWait, Protocol::MaxProp,  Protocol::BubbleRap};
}

std::unique_ptr<Router> make_router(Protocol p, const RouterOptions& o) {
  switch (p) {
    case Protocol::Aziza: return std::make_unique<AzizaRouter>(o.aziza);
    case Protocol::Epidemic: return std::make_unique<EpidemicRouter>();
    case Protocol::Prophet: return std::make_unique<ProphetRouter>(o.prophet);
    case Protocol::SprayAndWait: return std::make_unique<SprayAndWaitRouter>(o.snw_copies);
    case Protocol::MaxProp: return std::make_unique<MaxPropRouter>(o.maxprop);
    case Protocol::BubbleRap: return std::make_unique<BubbleRapRouter>(o.bubblerap);
  }
  return nullptr;
}

}  // namespace aziza
