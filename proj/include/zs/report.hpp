#pragma once

#include "zs/cyclic.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace zs
{
    using json = nlohmann::ordered_json;

    inline constexpr std::string_view report_schema = "zs.verify-report/1";
    std::string_view tool_version();

    enum class verify_status
    {
        verified,
        falsified,
        incomplete
    };

    [[nodiscard]] std::string to_string(verify_status status);

    struct counterexample
    {
        std::uint32_t n;
        /// Canonical sequence text; empty when the failure has no witness sequence.
        std::string seq;
        std::string reason;
    };

    [[nodiscard]] counterexample make_counterexample(const sequence & s, std::string reason);

    struct verify_report
    {
        std::string target;
        json params = json::object();
        verify_status status = verify_status::verified;
        std::vector<counterexample> counterexamples;
        std::uint64_t checked_count = 0;
        std::chrono::milliseconds elapsed{0};
        std::string tool_version;
        /// Driver-specific observations (computed values, explore-mode findings).
        json details = json::object();
    };

    [[nodiscard]] json to_json(const counterexample & c);
    [[nodiscard]] json to_json(const verify_report & report);
}
