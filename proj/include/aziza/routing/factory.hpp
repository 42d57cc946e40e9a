#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aziza/routing/aziza_router.hpp"
#include "aziza/routing/bubblerap.hpp"
#include "aziza/routing/maxprop.hpp"
#include "aziza/routing/prophet.hpp"
#include "aziza/sim/router.hpp"

namespace aziza {

enum class Protocol { Aziza, Epidemic, Prophet, SprayAndWait, MaxProp, BubbleRap };

const char* to_string(Protocol p);
std::optional<Protocol> parse_protocol(std::string_view name);
std::vector<Protocol> all_protocols();

struct RouterOptions {
  AzizaParams aziza;
  ProphetParams prophet;
  int snw_copies = 4;
  MaxPropParams maxprop;
  BubbleRapParams bubblerap;
};

std::unique_ptr<Router> make_router(Protocol p, const RouterOptions& options = {});

}  // namespace aziza
