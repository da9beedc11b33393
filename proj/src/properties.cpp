#include "zs/properties.hpp"
#include "zs/errors.hpp"
#include "zs/sigma.hpp"
#include "zs/split.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace zs
{
    void property_outcome::record(counterexample c)
    {
        ++violation_count;
        if (violations.size() < 20)
            violations.push_back(std::move(c));
    }

    json to_json(const property_outcome & outcome)
    {
        json examples = json::array();
        for (const auto & c : outcome.violations)
            examples.push_back(to_json(c));
        return json{
            {"property", outcome.name},
            {"checked", outcome.checked},
            {"violations", outcome.violation_count},
            {"passed", outcome.passed()},
            {"examples", std::move(examples)},
        };
    }

    namespace
    {
        using rng_type = std::mt19937_64;

        std::uint32_t uniform(rng_type & rng, std::uint32_t lo, std::uint32_t hi)
        {
            return std::uniform_int_distribution<std::uint32_t>{lo, hi}(rng);
        }

        // Grows a zero-sum-free sequence towards `target` elements. Half of the
        // candidates are small multiples of one random unit so that long
        // sequences (which are highly structured) actually occur.
        sequence random_zero_sum_free(const cyclic_group & group, std::uint32_t target, rng_type & rng)
        {
            const auto n = group.order();
            auto units = group.units();
            auto base = units[uniform(rng, 0, static_cast<std::uint32_t>(units.size() - 1))];
            sum_set sums{group};
            std::vector<residue> elements;
            for (std::uint32_t attempt = 0 ; attempt < 20 * target + 20 && elements.size() < target ; ++attempt) {
                residue a = uniform(rng, 0, 1) == 0 ? group.mul(base, uniform(rng, 1, 3)) : uniform(rng, 1, n - 1);
                if (sums.contains(group.neg(a)))
                    continue;
                sums.extend(a);
                elements.push_back(a);
            }
            return sequence::from_residues(group, elements);
        }

        std::vector<std::uint32_t> primes_up_to(std::uint32_t limit)
        {
            std::vector<std::uint32_t> result;
            for (std::uint32_t p = 2 ; p <= limit ; ++p)
                if (is_prime(p))
                    result.push_back(p);
            return result;
        }

        std::vector<std::uint32_t> merged_primes(std::vector<std::uint32_t> base, const std::vector<std::uint32_t> & extra)
        {
            for (auto p : extra) {
                if (! is_prime(p))
                    throw precondition_error("property checks need prime orders, got " + std::to_string(p));
                base.push_back(p);
            }
            std::sort(base.begin(), base.end());
            base.erase(std::unique(base.begin(), base.end()), base.end());
            return base;
        }

        std::vector<sequence_class> classes_of(std::uint32_t p, std::uint32_t max_length, class_filter filter,
                const search_limits & limits)
        {
            enum_spec spec;
            spec.n = p;
            spec.min_length = 1;
            spec.max_length = std::min(max_length, p);
            spec.filter = filter;
            spec.limits = limits;
            auto result = collect_mzs(spec);
            if (! result.stats.complete)
                throw precondition_error("enumeration over Z_" + std::to_string(p) + " ran out of budget");
            return std::move(result.classes);
        }

        sequence make(const cyclic_group & group, std::initializer_list<std::pair<residue, std::uint32_t>> terms)
        {
            std::vector<std::uint32_t> mult(group.order(), 0);
            for (auto [r, m] : terms)
                mult[r] += m;
            return sequence{group, std::move(mult)};
        }

        std::uint32_t sigma_size(const sequence & s)
        {
            return sigma_set(s).size();
        }

        // Calls f on every sub-multiset of s (including s itself and the empty one).
        template <typename F>
        void for_each_subsequence(const sequence & s, F && f)
        {
            auto support = s.support();
            std::vector<std::uint32_t> counts(support.size(), 0);
            std::vector<std::uint32_t> mult(s.order(), 0);
            while (true) {
                f(sequence{s.group(), mult});
                std::size_t i = 0;
                for ( ; i < support.size() ; ++i) {
                    if (counts[i] < s.multiplicity(support[i])) {
                        ++counts[i];
                        ++mult[support[i]];
                        break;
                    }
                    counts[i] = 0;
                    mult[support[i]] = 0;
                }
                if (i == support.size())
                    return;
            }
        }
    }

    property_outcome check_partition_superadditivity(const property_config & config)
    {
        property_outcome outcome{"partition-superadditivity"};
        rng_type rng{config.seed};
        while (outcome.checked < config.random_partitions) {
            cyclic_group group{uniform(rng, 3, 48)};
            auto s = random_zero_sum_free(group, uniform(rng, 2, group.order() - 1), rng);
            if (s.length() < 2)
                continue;

            auto elements = s.elements();
            auto parts = uniform(rng, 2, static_cast<std::uint32_t>(elements.size()));
            std::vector<std::vector<residue>> pieces(parts);
            for (auto a : elements)
                pieces[uniform(rng, 0, parts - 1)].push_back(a);

            std::uint64_t total = 0;
            for (const auto & piece : pieces)
                total += sigma_size(sequence::from_residues(group, piece));
            ++outcome.checked;
            if (sigma_size(s) < total)
                outcome.record(make_counterexample(s, "|Σ(S)| = " + std::to_string(sigma_size(s))
                            + " < sum over parts " + std::to_string(total)));
        }
        return outcome;
    }

    property_outcome check_zero_sum_free_set_bound(const property_config & config)
    {
        property_outcome outcome{"zero-sum-free-set-bound"};
        auto check = [&](const sequence & set) {
            const std::uint64_t k = set.length();
            const std::uint64_t bound = std::min<std::uint64_t>(set.order(), k * (k + 1) / 2);
            ++outcome.checked;
            if (sigma_size(set) < bound)
                outcome.record(make_counterexample(set, "|Σ(A)| = " + std::to_string(sigma_size(set)) + " < "
                            + std::to_string(bound)));
        };

        for (auto p : primes_up_to(13)) {
            cyclic_group group{p};
            const auto limit = std::min<std::uint32_t>(4, p - 1);
            // all subsets of [1, p-1] with 1..4 elements via bitmask
            for (std::uint32_t mask = 1 ; mask < (1u << (p - 1)) ; ++mask) {
                if (static_cast<std::uint32_t>(std::popcount(mask)) > limit)
                    continue;
                std::vector<residue> set;
                for (residue a = 1 ; a < p ; ++a)
                    if (mask >> (a - 1) & 1u)
                        set.push_back(a);
                auto s = sequence::from_residues(group, set);
                if (is_zero_sum_free(s))
                    check(s);
            }
        }

        rng_type rng{config.seed ^ 0x9e3779b97f4a7c15ULL};
        auto primes = merged_primes(primes_up_to(97), config.primes);
        std::erase_if(primes, [](auto p) { return p < 17; });
        for (std::uint32_t i = 0 ; i < config.random_sets ; ++i) {
            auto p = primes[uniform(rng, 0, static_cast<std::uint32_t>(primes.size() - 1))];
            cyclic_group group{p};
            sum_set sums{group};
            std::vector<std::uint32_t> mult(p, 0);
            auto target = uniform(rng, 1, 12);
            std::uint32_t size = 0;
            for (std::uint32_t attempt = 0 ; attempt < 200 && size < target ; ++attempt) {
                residue a = uniform(rng, 1, p - 1);
                if (mult[a] > 0 || sums.contains(group.neg(a)))
                    continue;
                sums.extend(a);
                mult[a] = 1;
                ++size;
            }
            check(sequence{group, mult});
        }
        return outcome;
    }

    std::vector<property_outcome> check_unsplittable_structure(const property_config & config)
    {
        property_outcome coefficient{"coefficient-condition"};
        property_outcome power_single{"power-single-sigma"};
        property_outcome square_pair{"square-pair-sigma"};
        property_outcome power_square{"power-square-sigma"};
        property_outcome power_pair{"power-pair-sigma"};
        property_outcome removal{"one-removal-bound"};

        for (auto p : merged_primes({}, config.primes)) {
            cyclic_group group{p};
            for (const auto & c : classes_of(p, p, class_filter::unsplittable, config.limits)) {
                const auto & s = c.canonical;
                auto support = s.support();
                for (auto g : support) {
                    const auto g_inv = *group.inverse(g);
                    const auto vg = s.multiplicity(g);
                    for (auto h : support) {
                        if (h == g)
                            continue;
                        const auto vh = s.multiplicity(h);

                        // h = t·g
                        auto t = group.mul(h, g_inv);
                        ++coefficient.checked;
                        if (t < vg + 2 || t == (p + 1) / 2)
                            coefficient.record(make_counterexample(s, "g=" + std::to_string(g) + ", t=" + std::to_string(t)
                                        + ", v_g=" + std::to_string(vg)));

                        for (std::uint32_t k = 0 ; k <= vg ; ++k) {
                            auto size = sigma_size(make(group, {{g, k}, {h, 1}}));
                            ++power_single.checked;
                            if (size != 2 * k + 1)
                                power_single.record(make_counterexample(s, "g=" + std::to_string(g) + ", h="
                                            + std::to_string(h) + ", k=" + std::to_string(k) + ", size="
                                            + std::to_string(size)));
                        }

                        if (vg >= 2 && vh >= 2 && g < h) {
                            auto size = sigma_size(make(group, {{g, 2}, {h, 2}}));
                            ++square_pair.checked;
                            if (size != 8)
                                square_pair.record(make_counterexample(s, "g=" + std::to_string(g) + ", h="
                                            + std::to_string(h) + ", size=" + std::to_string(size)));
                        }

                        if (vg >= 3 && vh >= 2) {
                            const bool exceptional = t == (p + 3) / 2;
                            for (std::uint32_t k = 3 ; k <= vg ; ++k) {
                                auto size = sigma_size(make(group, {{g, k}, {h, 2}}));
                                auto need = 2 * (k + 2) + (exceptional ? 0 : 1);
                                ++power_square.checked;
                                if (size < need)
                                    power_square.record(make_counterexample(s, "g=" + std::to_string(g) + ", h="
                                                + std::to_string(h) + ", k=" + std::to_string(k) + ", size="
                                                + std::to_string(size)));
                            }
                        }
                    }

                    for (std::size_t i = 0 ; i < support.size() ; ++i)
                        for (std::size_t j = i + 1 ; j < support.size() ; ++j) {
                            auto g2 = support[i], g3 = support[j];
                            if (g2 == g || g3 == g)
                                continue;
                            auto t2 = group.mul(g2, g_inv), t3 = group.mul(g3, g_inv);
                            const bool exceptional = std::minmax(t2, t3) == std::minmax((p - 1) / 2, (p + 3) / 2);
                            // k = 1 only reaches 2|T| (three distinct elements); the +1 starts at k = 2
                            for (std::uint32_t k = 1 ; k <= vg ; ++k) {
                                auto size = sigma_size(make(group, {{g, k}, {g2, 1}, {g3, 1}}));
                                auto need = 2 * (k + 2) + ((exceptional || k == 1) ? 0 : 1);
                                ++power_pair.checked;
                                if (size < need)
                                    power_pair.record(make_counterexample(s, "g1=" + std::to_string(g) + ", g2="
                                                + std::to_string(g2) + ", g3=" + std::to_string(g3) + ", k="
                                                + std::to_string(k) + ", size=" + std::to_string(size)));
                            }
                        }
                }

                for_each_subsequence(s, [&](const sequence & sub) {
                    auto sub_support = sub.support();
                    if (sub_support.size() < 2)
                        return;
                    ++removal.checked;
                    for (auto g : sub_support) {
                        auto rest = sub.with_removed(g);
                        if (sigma_size(rest) + 1 >= 2 * rest.length())
                            return;
                    }
                    removal.record(make_counterexample(s, "subsequence " + format_sequence(sub)));
                });
            }
        }
        return {coefficient, power_single, square_pair, power_square, power_pair, removal};
    }

    property_outcome check_two_element_support(const property_config & config)
    {
        property_outcome outcome{"two-element-support-splittable"};
        for (auto p : merged_primes(primes_up_to(13), config.primes))
            for (const auto & c : classes_of(p, p, class_filter::all, config.limits)) {
                if (c.canonical.support().size() != 2)
                    continue;
                ++outcome.checked;
                if (! is_splittable_bruteforce(c.canonical))
                    outcome.record(make_counterexample(c.canonical, "two-element support but unsplittable"));
            }
        return outcome;
    }

    property_outcome check_split_criterion(const property_config & config)
    {
        property_outcome outcome{"split-criterion-equivalence"};
        auto compare = [&](const sequence & s) {
            bool fast = is_unsplittable_fast(s);
            bool brute = ! is_splittable_bruteforce(s).has_value();
            ++outcome.checked;
            if (fast != brute)
                outcome.record(make_counterexample(s, std::string{"sigma criterion says "}
                            + (fast ? "unsplittable" : "splittable") + ", brute force disagrees"));
        };

        for (auto p : merged_primes({5, 7, 11, 13}, config.primes))
            for (const auto & c : classes_of(p, config.exhaustive_split_length, class_filter::all, config.limits))
                compare(c.canonical);

        rng_type rng{config.seed ^ 0x5bd1e995ULL};
        const std::vector<std::uint32_t> sample_primes{17, 19, 23, 29, 31, 37, 41, 43};
        std::uint32_t samples = 0;
        while (samples < config.random_split_samples) {
            auto p = sample_primes[uniform(rng, 0, static_cast<std::uint32_t>(sample_primes.size() - 1))];
            cyclic_group group{p};
            auto t = random_zero_sum_free(group, uniform(rng, config.exhaustive_split_length, p - 2), rng);
            auto s = t.with_added(group.neg(t.sum()));
            if (s.length() <= config.exhaustive_split_length)
                continue;
            ++samples;
            compare(s);
        }
        return outcome;
    }

    std::vector<property_outcome> run_property_suite(const property_config & config)
    {
        std::vector<property_outcome> result;
        result.push_back(check_partition_superadditivity(config));
        result.push_back(check_zero_sum_free_set_bound(config));
        for (auto & o : check_unsplittable_structure(config))
            result.push_back(std::move(o));
        result.push_back(check_two_element_support(config));
        result.push_back(check_split_criterion(config));
        return result;
    }
}
