#pragma once

// The instance registry: the profunctor dictionaries the laws are checked at.
// Transformer sampling and observation come from Arbitrary/Observe at each
// dictionary's transformer type; the capabilities come from capabilities_of.

#include <string>
#include <type_traits>
#include <vector>

#include "optics/applicative.hpp"
#include "optics/concrete.hpp"
#include "optics/profunctor.hpp"

namespace optics::laws {

using OptionStar = UpStarOf<OptionApplicative>;
using StateStar = UpStarOf<StateApplicative<Integer>>;
using ConstStar = UpStarOf<ConstApplicative<std::vector<std::string>>>;

/// The concrete-optic entries fix their focus types.
using AdapterEntry = AdapterOf<Integer, bool>;
using LensEntry = LensOf<Integer, bool>;
using PrismEntry = PrismOf<Integer, bool>;
using TraversalEntry = TraversalOf<Integer, bool>;

template <class P>
struct InstanceName;

template <>
struct InstanceName<FunctionArrow> {
    static constexpr const char* value = "function-arrow";
};
template <>
struct InstanceName<OptionStar> {
    static constexpr const char* value = "upstar-option";
};
template <>
struct InstanceName<StateStar> {
    static constexpr const char* value = "upstar-state-integer";
};
template <>
struct InstanceName<ConstStar> {
    static constexpr const char* value = "upstar-const-list";
};
template <>
struct InstanceName<AdapterEntry> {
    static constexpr const char* value = "adapter";
};
template <>
struct InstanceName<LensEntry> {
    static constexpr const char* value = "lens";
};
template <>
struct InstanceName<PrismEntry> {
    static constexpr const char* value = "prism";
};
template <>
struct InstanceName<TraversalEntry> {
    static constexpr const char* value = "traversal";
};

template <class P>
std::string instance_name()
{
    return InstanceName<P>::value;
}

/// Capable of running traverse: cocartesian, monoidal, and deferrable. All
/// such entries here are also cartesian, as identity needs.
template <class P>
concept TraversalCapable = Cartesian<P> && Cocartesian<P> && Monoidal<P> && Deferrable<P>;

template <class... Ps>
struct Registry {
    /// Calls f(std::type_identity<P>{}) for each entry, in order.
    template <class F>
    static void for_each(F&& f)
    {
        (f(std::type_identity<Ps>{}), ...);
    }

    static std::vector<std::string> names() { return {instance_name<Ps>()...}; }
};

using DefaultRegistry = Registry<FunctionArrow, OptionStar, StateStar, ConstStar, AdapterEntry,
                                 LensEntry, PrismEntry, TraversalEntry>;

}  // namespace optics::laws
