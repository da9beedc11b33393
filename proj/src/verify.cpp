#include "zs/verify.hpp"
#include "zs/errors.hpp"
#include "zs/forms.hpp"
#include "zs/index.hpp"
#include "zs/sigma.hpp"
#include "zs/split.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <map>
#include <set>

namespace zs
{
    std::string to_string(verify_mode mode)
    {
        return mode == verify_mode::explore ? "explore" : "assert";
    }

    namespace
    {
        constexpr std::array<std::string_view, 8> targets{
            "i-of-g", "xia-yuan-odd", "xia-yuan-even", "main-classification",
            "index-le-2", "thm-4-1", "gao-counterexample", "lemma-suite",
        };

        // Exploration enumerates a single length over Z_p; keep p where that
        // is a matter of seconds.
        constexpr std::uint32_t explore_prime_cap = 61;

        /// Accumulates one campaign's findings.
        struct campaign
        {
            verify_report report;
            bool incomplete = false;

            void fail(counterexample c) { report.counterexamples.push_back(std::move(c)); }
        };

        std::vector<std::uint32_t> orders(const verify_params & params, std::vector<std::uint32_t> defaults)
        {
            if (params.n)
                return {*params.n};
            if (params.p)
                return {*params.p};
            if (params.n_range) {
                auto [lo, hi] = *params.n_range;
                if (lo > hi)
                    throw precondition_error("empty range " + std::to_string(lo) + ".." + std::to_string(hi));
                std::vector<std::uint32_t> result;
                for (auto v = lo ; v <= hi ; ++v)
                    result.push_back(v);
                return result;
            }
            if (! params.p_set.empty())
                return params.p_set;
            return defaults;
        }

        std::set<std::string> canonical_texts(const std::vector<sequence> & seqs)
        {
            std::set<std::string> result;
            for (const auto & s : seqs)
                result.insert(format_sequence(canonical_class(s).canonical));
            return result;
        }

        json texts_json(const std::set<std::string> & texts)
        {
            json result = json::array();
            for (const auto & t : texts)
                result.push_back(t);
            return result;
        }

        enum_result classes_at(std::uint32_t n, std::uint32_t length, class_filter filter, const search_limits & limits)
        {
            enum_spec spec;
            spec.n = n;
            spec.min_length = length;
            spec.max_length = length;
            spec.filter = filter;
            spec.limits = limits;
            return collect_mzs(spec);
        }

        void require_prime(std::uint32_t p, std::uint32_t at_least, std::string_view target)
        {
            if (! is_prime(p) || p < at_least)
                throw precondition_error(std::string(target) + " needs a prime >= " + std::to_string(at_least) + ", got "
                        + std::to_string(p));
        }

        void drive_i_of_g(campaign & c, const verify_params & params)
        {
            json values = json::object();
            for (auto n : orders(params, {2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14})) {
                auto result = compute_I(n, params.limits);
                c.report.checked_count += result.checked;
                if (! result.exhaustive) {
                    c.incomplete = true;
                    values[std::to_string(n)] = nullptr;
                    continue;
                }
                values[std::to_string(n)] = result.value;
                auto expected = expected_I(n);
                if (result.value == expected)
                    continue;
                auto reason = "I(Z_" + std::to_string(n) + ") computed " + std::to_string(result.value) + ", expected "
                    + std::to_string(expected);
                if (result.witnesses.empty())
                    c.fail(counterexample{n, "", reason});
                for (const auto & w : result.witnesses)
                    c.fail(make_counterexample(w.canonical, reason));
            }
            c.report.details["values"] = std::move(values);
        }

        void drive_odd_classification(campaign & c, const verify_params & params)
        {
            json per_order = json::object();
            for (auto n : orders(params, {9, 11, 13, 15})) {
                auto expected = canonical_texts(forms::odd_extremal(n));
                auto found = classes_at(n, n / 2 + 1, class_filter::unsplittable, params.limits);
                c.report.checked_count += found.stats.emitted;
                if (! found.stats.complete) {
                    c.incomplete = true;
                    continue;
                }

                std::set<std::string> enumerated;
                for (const auto & cls : found.classes) {
                    auto text = format_sequence(cls.canonical);
                    enumerated.insert(text);
                    if (! expected.contains(text))
                        c.fail(make_counterexample(cls.canonical, "unsplittable class outside the odd form set"));
                    if (! (index(cls.canonical) == 2))
                        c.fail(make_counterexample(cls.canonical, "index " + index(cls.canonical).to_string() + " != 2"));
                }
                for (const auto & text : expected)
                    if (! enumerated.contains(text))
                        c.fail(counterexample{n, text, "odd form not found among unsplittable classes"});

                per_order[std::to_string(n)] = json{{"length", n / 2 + 1}, {"classes", texts_json(enumerated)},
                    {"expected", texts_json(expected)}};
            }
            c.report.details["orders"] = std::move(per_order);
        }

        void drive_even_classification(campaign & c, const verify_params & params)
        {
            json per_order = json::object();
            for (auto n : orders(params, {8, 10, 12})) {
                std::set<std::string> family, family_unsplittable, family_splittable, family_not_minimal;
                for (const auto & member : forms::even_extremal(n)) {
                    auto text = format_sequence(canonical_class(member).canonical);
                    family.insert(text);
                    if (! is_minimal_zero_sum(member))
                        family_not_minimal.insert(text);
                    else if (classify(member).unsplittable)
                        family_unsplittable.insert(text);
                    else
                        family_splittable.insert(text);
                }

                auto found = classes_at(n, n / 2 + 1, class_filter::unsplittable, params.limits);
                c.report.checked_count += found.stats.emitted;
                if (! found.stats.complete) {
                    c.incomplete = true;
                    continue;
                }

                std::set<std::string> enumerated;
                for (const auto & cls : found.classes) {
                    auto text = format_sequence(cls.canonical);
                    enumerated.insert(text);
                    if (! family.contains(text))
                        c.fail(make_counterexample(cls.canonical, "unsplittable class outside both even families"));
                    if (index(cls.canonical) < norm_value{2, 1})
                        c.fail(make_counterexample(cls.canonical, "index " + index(cls.canonical).to_string() + " < 2"));
                }
                for (const auto & text : family_unsplittable)
                    if (! enumerated.contains(text))
                        c.fail(counterexample{n, text, "unsplittable family member missing from enumeration"});

                per_order[std::to_string(n)] = json{
                    {"length", n / 2 + 1},
                    {"classes", texts_json(enumerated)},
                    {"family_unsplittable", texts_json(family_unsplittable)},
                    {"family_splittable", texts_json(family_splittable)},
                    {"family_not_minimal", texts_json(family_not_minimal)},
                };
            }
            c.report.details["orders"] = std::move(per_order);
        }

        json describe_form(const sequence & s)
        {
            bool minimal = is_minimal_zero_sum(s);
            json complement = json::object();
            for (auto [g, size] : sigma_complement_sizes(s))
                complement[std::to_string(g)] = size;
            auto idx = index_with_generator(s);
            json out{
                {"seq", format_sequence(s)},
                {"minimal", minimal},
                {"unsplittable", minimal ? json(is_unsplittable_fast(s)) : json(nullptr)},
                {"complement_sizes", std::move(complement)},
                {"index", idx.value.to_string()},
                {"index_value", idx.value.reduced_string()},
                {"index_generator", idx.generator},
            };
            return out;
        }

        // Enumerates the unsplittable classes at one length and compares them with the forms.
        json explore_length(campaign & c, std::uint32_t p, std::uint32_t length, const std::vector<sequence> & forms,
                const search_limits & limits)
        {
            auto expected = canonical_texts(forms);
            auto found = classes_at(p, length, class_filter::unsplittable, limits);
            c.report.checked_count += found.stats.emitted;
            if (! found.stats.complete) {
                c.incomplete = true;
                return json{{"length", length}, {"complete", false}};
            }
            std::set<std::string> enumerated;
            json classes = json::array();
            for (const auto & cls : found.classes) {
                auto text = format_sequence(cls.canonical);
                enumerated.insert(text);
                classes.push_back(json{{"seq", text}, {"index", index(cls.canonical).reduced_string()},
                        {"support", cls.canonical.support().size()}});
            }
            std::set<std::string> extra, missing;
            std::set_difference(enumerated.begin(), enumerated.end(), expected.begin(), expected.end(),
                    std::inserter(extra, extra.end()));
            std::set_difference(expected.begin(), expected.end(), enumerated.begin(), enumerated.end(),
                    std::inserter(missing, missing.end()));
            return json{
                {"length", length},
                {"complete", true},
                {"classes", std::move(classes)},
                {"forms", texts_json(expected)},
                {"classes_outside_forms", texts_json(extra)},
                {"forms_not_unsplittable", texts_json(missing)},
            };
        }

        void drive_form_campaign(campaign & c, const verify_params & params, std::uint32_t default_p,
                std::uint32_t min_p, std::uint32_t hypothesis_p, bool assert_index_two, std::uint32_t length_offset)
        {
            json per_prime = json::object();
            for (auto p : orders(params, {default_p})) {
                require_prime(p, min_p, c.report.target);
                auto forms = length_offset == 1 ? forms::prime_half_length(p) : forms::prime_half_length_minus_one(p);
                const bool asserting = params.mode == verify_mode::assert_mode;

                json checked = json::array();
                for (const auto & form : forms) {
                    ++c.report.checked_count;
                    checked.push_back(describe_form(form));
                    if (! asserting)
                        continue;
                    if (! is_minimal_zero_sum(form)) {
                        c.fail(make_counterexample(form, "form is not minimal zero-sum"));
                        continue;
                    }
                    if (! is_unsplittable_fast(form))
                        c.fail(make_counterexample(form, "form is splittable"));
                    if (assert_index_two && ! (index(form) == 2))
                        c.fail(make_counterexample(form, "index " + index(form).to_string() + " != 2"));
                }

                json entry{{"forms", std::move(checked)}};
                if (p <= hypothesis_p)
                    entry["caveat"] = "classification is proved only for p > " + std::to_string(hypothesis_p);
                if (! asserting) {
                    if (p > explore_prime_cap)
                        throw precondition_error("explore mode enumerates exhaustively; p must be <= "
                                + std::to_string(explore_prime_cap));
                    entry["exploration"] = explore_length(c, p, (p - 2 * length_offset + 1) / 2, forms, params.limits);
                }
                per_prime[std::to_string(p)] = std::move(entry);
            }
            c.report.details["primes"] = std::move(per_prime);
        }

        void drive_index_le_2(campaign & c, const verify_params & params)
        {
            json per_prime = json::object();
            for (auto p : orders(params, {11, 13, 17, 19})) {
                require_prime(p, 5, c.report.target);
                auto result = max_index_from_length(p, (p - 1) / 2, params.limits);
                c.report.checked_count += result.checked;
                if (! result.exhaustive) {
                    c.incomplete = true;
                    per_prime[std::to_string(p)] = json{{"complete", false}};
                    continue;
                }
                json witnesses = json::array();
                for (const auto & w : result.witnesses)
                    witnesses.push_back(format_sequence(w.canonical));
                json entry{{"min_length", (p - 1) / 2}, {"classes", result.checked}, {"max_index", result.value},
                    {"witnesses", std::move(witnesses)}};
                if (p <= 155)
                    entry["caveat"] = "the bound is proved only for p > 155";
                per_prime[std::to_string(p)] = std::move(entry);

                if (params.mode == verify_mode::assert_mode && result.value > 2)
                    for (const auto & w : result.witnesses)
                        c.fail(make_counterexample(w.canonical, "index " + std::to_string(result.value) + " > 2"));
            }
            c.report.details["primes"] = std::move(per_prime);
        }

        void drive_large_index(campaign & c, const verify_params & params)
        {
            json per_order = json::object();
            for (auto n : orders(params, {8, 16, 24})) {
                auto s = forms::large_index(n);
                ++c.report.checked_count;
                auto idx = index(s);
                bool minimal = is_minimal_zero_sum(s);
                per_order[std::to_string(n)] = json{{"seq", format_sequence(s)}, {"minimal", minimal},
                    {"index", idx.to_string()}, {"expected", n / 8 + 1}};
                if (! minimal)
                    c.fail(make_counterexample(s, "not minimal zero-sum"));
                if (! (idx == n / 8 + 1))
                    c.fail(make_counterexample(s, "index " + idx.to_string() + " != " + std::to_string(n / 8 + 1)));
            }
            c.report.details["orders"] = std::move(per_order);
        }

        void drive_property_suite(campaign & c, const verify_params & params)
        {
            property_config config;
            if (params.p)
                config.primes = {*params.p};
            else if (! params.p_set.empty())
                config.primes = params.p_set;
            config.seed = params.seed;
            config.limits = params.limits;

            json outcomes = json::array();
            for (const auto & outcome : run_property_suite(config)) {
                c.report.checked_count += outcome.checked;
                outcomes.push_back(to_json(outcome));
                for (const auto & v : outcome.violations)
                    c.fail(counterexample{v.n, v.seq, outcome.name + ": " + v.reason});
            }
            c.report.details["properties"] = std::move(outcomes);
        }

        json params_json(const verify_params & params)
        {
            json out = json::object();
            if (params.n)
                out["n"] = *params.n;
            if (params.n_range)
                out["n_range"] = std::to_string(params.n_range->first) + ".." + std::to_string(params.n_range->second);
            if (params.p)
                out["p"] = *params.p;
            if (! params.p_set.empty())
                out["p_set"] = params.p_set;
            out["seed"] = params.seed;
            out["mode"] = to_string(params.mode);
            out["budget"] = params.limits.node_budget;
            return out;
        }
    }

    std::span<const std::string_view> verify_targets()
    {
        return targets;
    }

    bool is_verify_target(std::string_view target)
    {
        return std::find(targets.begin(), targets.end(), target) != targets.end();
    }

    std::uint64_t expected_I(std::uint32_t n)
    {
        if (n <= 5 || n == 7)
            return 1;
        if (n == 6)
            return 5;
        return n / 2 + 2;
    }

    verify_report run_verify(std::string_view target, const verify_params & params)
    {
        if (! is_verify_target(target))
            throw precondition_error("unknown verify target '" + std::string(target) + "'");

        auto start = std::chrono::steady_clock::now();
        campaign c;
        c.report.target = std::string(target);
        c.report.params = params_json(params);
        c.report.tool_version = std::string(tool_version());

        if (target == "i-of-g")
            drive_i_of_g(c, params);
        else if (target == "xia-yuan-odd")
            drive_odd_classification(c, params);
        else if (target == "xia-yuan-even")
            drive_even_classification(c, params);
        else if (target == "main-classification")
            drive_form_campaign(c, params, 157, 11, 155, true, 1);
        else if (target == "index-le-2")
            drive_index_le_2(c, params);
        else if (target == "thm-4-1")
            drive_form_campaign(c, params, 211, 17, 200, false, 2);
        else if (target == "gao-counterexample")
            drive_large_index(c, params);
        else
            drive_property_suite(c, params);

        if (! c.report.counterexamples.empty())
            c.report.status = verify_status::falsified;
        else if (c.incomplete)
            c.report.status = verify_status::incomplete;
        else
            c.report.status = verify_status::verified;
        c.report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
        return c.report;
    }
}
