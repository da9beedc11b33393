#pragma once

#include "zs/cyclic.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace zs
{
    enum class class_filter
    {
        all,
        unsplittable,
        splittable
    };

    [[nodiscard]] std::string to_string(class_filter filter);
    [[nodiscard]] std::optional<class_filter> parse_filter(std::string_view text);

    /// Exhaustive-search resources. Zero means unlimited.
    struct search_limits
    {
        unsigned jobs = 1;
        std::uint64_t node_budget = 0;
        std::chrono::milliseconds time_budget{0};
    };

    struct enum_spec
    {
        std::uint32_t n = 2;
        std::uint32_t min_length = 1;
        std::uint32_t max_length = 1;
        class_filter filter = class_filter::all;
        bool exclude_zero = true;
        bool dedupe_units = true;
        /// Off: visit every nondecreasing tuple and test minimality at the leaf.
        /// Exists to cross-check the pruned search.
        bool prune = true;
        search_limits limits;
    };

    /// Throws precondition_error for an invalid spec.
    void validate(const enum_spec & spec);

    struct enum_stats
    {
        bool complete = true;
        std::uint64_t nodes = 0;
        std::uint64_t emitted = 0;
    };

    using class_sink = std::function<void (const sequence_class &)>;

    /// Streams one representative per unit orbit of minimal zero-sum sequences
    /// matching the request, ordered by length and then lexicographically by the
    /// ascending residue tuple. The order is identical for every jobs value.
    ///
    /// The search walks nondecreasing zero-sum-free prefixes; the last element
    /// is forced to -σ(prefix), so every leaf is minimal by construction.
    /// When a budget runs out the stream stops at the last fully searched
    /// work unit and the stats report complete = false.
    enum_stats enumerate_mzs(const enum_spec & spec, const class_sink & sink);

    struct enum_result
    {
        std::vector<sequence_class> classes;
        enum_stats stats;
    };

    [[nodiscard]] enum_result collect_mzs(const enum_spec & spec);

    /// Extremal data for one group order, with the classes that witness it.
    struct invariant_result
    {
        std::uint32_t n = 0;
        std::uint64_t value = 0;
        std::vector<sequence_class> witnesses;
        bool exhaustive = true;
        std::uint64_t checked = 0;
    };

    inline constexpr std::uint32_t default_invariant_cap = 16;
    inline constexpr std::uint32_t default_davenport_cap = 12;

    /// I(Z_n): least l such that every minimal zero-sum sequence of length >= l
    /// has index 1. Lengths are scanned from n downwards; witnesses are the
    /// classes of the first failing length.
    [[nodiscard]] invariant_result compute_I(std::uint32_t n, const search_limits & limits = {},
            std::uint32_t cap = default_invariant_cap);

    /// I_k(Z_n): as compute_I with threshold index <= k.
    [[nodiscard]] invariant_result compute_Ik(std::uint32_t n, std::uint64_t k, const search_limits & limits = {},
            std::uint32_t cap = default_invariant_cap);

    /// I(n): largest index over all minimal zero-sum sequences; witnesses attain it.
    [[nodiscard]] invariant_result compute_max_index(std::uint32_t n, const search_limits & limits = {},
            std::uint32_t cap = default_invariant_cap);

    /// Largest index over classes with length in [min_length, n].
    [[nodiscard]] invariant_result max_index_from_length(std::uint32_t n, std::uint32_t min_length,
            const search_limits & limits = {});

    /// D(Z_n) by exhaustive search over zero-sum-free sequences; witnesses are
    /// the longest zero-sum-free classes.
    [[nodiscard]] invariant_result davenport(std::uint32_t n, const search_limits & limits = {},
            std::uint32_t cap = default_davenport_cap);
}
