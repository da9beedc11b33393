#include "zs/report.hpp"

#ifndef ZS_VERSION
#define ZS_VERSION "0.0.0"
#endif

namespace zs
{
    std::string_view tool_version()
    {
        return ZS_VERSION;
    }

    std::string to_string(verify_status status)
    {
        switch (status) {
            case verify_status::verified: return "verified";
            case verify_status::falsified: return "falsified";
            case verify_status::incomplete: return "incomplete";
        }
        return "unknown";
    }

    counterexample make_counterexample(const sequence & s, std::string reason)
    {
        return counterexample{s.order(), format_sequence(s), std::move(reason)};
    }

    json to_json(const counterexample & c)
    {
        return json{{"n", c.n}, {"seq", c.seq}, {"reason", c.reason}};
    }

    json to_json(const verify_report & report)
    {
        json counterexamples = json::array();
        for (const auto & c : report.counterexamples)
            counterexamples.push_back(to_json(c));

        return json{
            {"schema", report_schema},
            {"target", report.target},
            {"params", report.params},
            {"status", to_string(report.status)},
            {"counterexamples", std::move(counterexamples)},
            {"checked_count", report.checked_count},
            {"elapsed_ms", report.elapsed.count()},
            {"tool_version", report.tool_version},
            {"details", report.details},
        };
    }
}
