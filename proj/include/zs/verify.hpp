#pragma once

#include "zs/enumerate.hpp"
#include "zs/properties.hpp"
#include "zs/report.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace zs
{
    /// assert: failures of the checked statement falsify the report.
    /// explore: exhaustive small-order classification, findings recorded in
    /// details and never counted as failures.
    enum class verify_mode
    {
        assert_mode,
        explore
    };

    [[nodiscard]] std::string to_string(verify_mode mode);

    struct verify_params
    {
        std::optional<std::uint32_t> n;
        std::optional<std::pair<std::uint32_t, std::uint32_t>> n_range;
        std::optional<std::uint32_t> p;
        std::vector<std::uint32_t> p_set;
        std::uint64_t seed = default_seed;
        verify_mode mode = verify_mode::assert_mode;
        search_limits limits;
    };

    [[nodiscard]] std::span<const std::string_view> verify_targets();
    [[nodiscard]] bool is_verify_target(std::string_view target);

    /// Runs one named campaign. Throws precondition_error for an unknown target
    /// or parameters outside the target's domain.
    [[nodiscard]] verify_report run_verify(std::string_view target, const verify_params & params);

    /// Expected I(Z_n) for n >= 2: 1 for n in {2,3,4,5,7}, 5 for n = 6, ⌊n/2⌋ + 2 for n >= 8.
    [[nodiscard]] std::uint64_t expected_I(std::uint32_t n);
}
