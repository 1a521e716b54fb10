#pragma once

#include <string>
#include <vector>

#include "optics/laws/checks.hpp"

namespace optics::laws::parts {

inline constexpr std::size_t random_optics_per_kind = 100;

/// c2p (p2c l) = l at every registry entry that can run optics needing `Need`.
template <Capabilities Need, class Sampler, class RoundTrip>
void at_qualifying_entries(std::vector<LawTask>& tasks, const std::string& law,
                           const std::string& subject, const Config& cfg, Sampler sample,
                           RoundTrip roundtrip)
{
    DefaultRegistry::for_each([&](auto entry) {
        using P = typename decltype(entry)::type;
        constexpr bool qualifies =
            capabilities_of<P>().includes(Need) && (!Need.has_monoidal() || Deferrable<P>);
        if constexpr (qualifies) {
            tasks.push_back(profunctor_roundtrip_task<P>(law, subject, cfg, sample, roundtrip));
        }
    });
}

}  // namespace optics::laws::parts
