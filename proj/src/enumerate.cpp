#include "zs/enumerate.hpp"
#include "zs/errors.hpp"
#include "zs/index.hpp"
#include "zs/sigma.hpp"
#include "zs/split.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <mutex>
#include <thread>

namespace zs
{
    std::string to_string(class_filter filter)
    {
        switch (filter) {
            case class_filter::all: return "all";
            case class_filter::unsplittable: return "unsplittable";
            case class_filter::splittable: return "splittable";
        }
        return "unknown";
    }

    std::optional<class_filter> parse_filter(std::string_view text)
    {
        if (text == "all")
            return class_filter::all;
        if (text == "unsplittable")
            return class_filter::unsplittable;
        if (text == "splittable")
            return class_filter::splittable;
        return std::nullopt;
    }

    void validate(const enum_spec & spec)
    {
        cyclic_group group{spec.n};
        if (spec.min_length < 1 || spec.min_length > spec.max_length || spec.max_length > spec.n)
            throw precondition_error("length range [" + std::to_string(spec.min_length) + ", "
                    + std::to_string(spec.max_length) + "] must satisfy 1 <= min <= max <= n = " + std::to_string(spec.n));
        if (spec.limits.jobs < 1)
            throw precondition_error("jobs must be at least 1");
    }

    namespace
    {
        using clock = std::chrono::steady_clock;

        /// Node and wall-clock accounting shared by all workers of one search.
        class shared_budget
        {
        public:
            explicit shared_budget(const search_limits & limits) :
                node_budget_(limits.node_budget),
                has_deadline_(limits.time_budget.count() > 0),
                deadline_(clock::now() + limits.time_budget)
            {
            }

            /// Returns false once any budget is spent.
            bool charge(std::uint64_t nodes)
            {
                auto total = nodes_.fetch_add(nodes, std::memory_order_relaxed) + nodes;
                if (node_budget_ != 0 && total > node_budget_)
                    exhausted_.store(true, std::memory_order_relaxed);
                if (has_deadline_ && clock::now() > deadline_)
                    exhausted_.store(true, std::memory_order_relaxed);
                return ! exhausted();
            }

            void stop() { exhausted_.store(true, std::memory_order_relaxed); }
            [[nodiscard]] bool exhausted() const { return exhausted_.load(std::memory_order_relaxed); }
            [[nodiscard]] std::uint64_t nodes() const { return nodes_.load(); }

        private:
            std::uint64_t node_budget_;
            bool has_deadline_;
            clock::time_point deadline_;
            std::atomic<std::uint64_t> nodes_{0};
            std::atomic<bool> exhausted_{false};
        };

        struct work_unit
        {
            std::uint32_t length;
            std::vector<residue> prefix;
        };

        struct unit_result
        {
            std::vector<sequence_class> classes;
            bool complete = true;
        };

        constexpr std::uint64_t flush_interval = 1024;

        class unit_search
        {
        public:
            unit_search(const enum_spec & spec, shared_budget & budget) :
                spec_(spec),
                group_(spec.n),
                budget_(budget),
                lowest_(spec.exclude_zero ? 1 : 0)
            {
                sums_.assign(spec.max_length + 1, sum_set{group_});
                partial_.assign(spec.max_length + 1, 0);
            }

            unit_result run(const work_unit & unit)
            {
                result_ = unit_result{};
                length_ = unit.length;
                tuple_.clear();

                for (auto a : unit.prefix) {
                    auto depth = tuple_.size();
                    if (spec_.prune && ! zero_sum_free_with(depth, a))
                        return finish();
                    push(a);
                }
                if (spec_.prune)
                    search_pruned();
                else
                    search_unpruned();
                return finish();
            }

        private:
            unit_result finish()
            {
                if (! budget_.charge(pending_))
                    result_.complete = false;
                pending_ = 0;
                return std::move(result_);
            }

            bool tick()
            {
                if (! result_.complete)
                    return false;
                if (++pending_ >= flush_interval) {
                    if (! budget_.charge(pending_))
                        result_.complete = false;
                    pending_ = 0;
                }
                return result_.complete;
            }

            // 0 ∉ Σ(T·a) given 0 ∉ Σ(T)
            bool zero_sum_free_with(std::size_t depth, residue a) const
            {
                return a != 0 && ! sums_[depth].contains(group_.neg(a));
            }

            void push(residue a)
            {
                auto depth = tuple_.size();
                if (spec_.prune) {
                    sums_[depth + 1] = sums_[depth];
                    sums_[depth + 1].extend(a);
                }
                partial_[depth + 1] = group_.add(partial_[depth], a);
                tuple_.push_back(a);
            }

            void search_pruned()
            {
                if (! tick())
                    return;
                auto depth = tuple_.size();
                if (depth + 1 == length_) {
                    auto last = group_.neg(partial_[depth]);
                    if (last < lowest_ || (! tuple_.empty() && last < tuple_.back()))
                        return;
                    tuple_.push_back(last);
                    leaf();
                    tuple_.pop_back();
                    return;
                }
                for (residue a = tuple_.empty() ? lowest_ : tuple_.back() ; a < group_.order() ; ++a) {
                    if (! zero_sum_free_with(depth, a))
                        continue;
                    push(a);
                    search_pruned();
                    tuple_.pop_back();
                    if (! result_.complete)
                        return;
                }
            }

            void search_unpruned()
            {
                if (! tick())
                    return;
                if (tuple_.size() == length_) {
                    if (partial_[length_] == 0
                            && is_minimal_zero_sum(sequence::from_residues(group_, tuple_)))
                        leaf();
                    return;
                }
                for (residue a = tuple_.empty() ? lowest_ : tuple_.back() ; a < group_.order() ; ++a) {
                    push(a);
                    search_unpruned();
                    tuple_.pop_back();
                    if (! result_.complete)
                        return;
                }
            }

            void leaf()
            {
                if (spec_.dedupe_units && ! is_orbit_minimum(group_, tuple_))
                    return;
                auto seq = sequence::from_residues(group_, tuple_);
                if (spec_.filter != class_filter::all) {
                    bool unsplittable = classify(seq).unsplittable;
                    if (unsplittable != (spec_.filter == class_filter::unsplittable))
                        return;
                }
                auto orbit = canonical_class(seq).orbit_size;
                result_.classes.push_back(sequence_class{std::move(seq), orbit});
            }

            const enum_spec & spec_;
            cyclic_group group_;
            shared_budget & budget_;
            residue lowest_;
            std::uint32_t length_ = 0;
            std::vector<residue> tuple_;
            std::vector<sum_set> sums_;
            std::vector<residue> partial_;
            std::uint64_t pending_ = 0;
            unit_result result_;
        };

        // Prefixes of the first min(2, L - 1) residues partition the search forest.
        std::vector<work_unit> make_units(const enum_spec & spec)
        {
            std::vector<work_unit> units;
            const residue lowest = spec.exclude_zero ? 1 : 0;
            for (auto length = spec.min_length ; length <= spec.max_length ; ++length) {
                auto depth = std::min<std::uint32_t>(2, length - 1);
                if (depth == 0)
                    units.push_back({length, {}});
                else if (depth == 1)
                    for (residue a = lowest ; a < spec.n ; ++a)
                        units.push_back({length, {a}});
                else
                    for (residue a = lowest ; a < spec.n ; ++a)
                        for (residue b = a ; b < spec.n ; ++b)
                            units.push_back({length, {a, b}});
            }
            return units;
        }

        void emit(const unit_result & result, const class_sink & sink, enum_stats & stats)
        {
            for (const auto & c : result.classes) {
                sink(c);
                ++stats.emitted;
            }
        }
    }

    enum_stats enumerate_mzs(const enum_spec & spec, const class_sink & sink)
    {
        validate(spec);
        auto units = make_units(spec);
        shared_budget budget{spec.limits};
        enum_stats stats;

        if (spec.limits.jobs <= 1 || units.size() <= 1) {
            unit_search search{spec, budget};
            for (const auto & unit : units) {
                auto result = search.run(unit);
                if (! result.complete) {
                    stats.complete = false;
                    break;
                }
                emit(result, sink, stats);
            }
            stats.nodes = budget.nodes();
            return stats;
        }

        struct slot
        {
            unit_result result;
            bool ready = false;
        };
        std::vector<slot> slots(units.size());
        std::mutex mutex;
        std::condition_variable ready_cv;
        std::atomic<std::size_t> next{0};

        {
            std::vector<std::jthread> workers;
            // Stops the workers early if the collector leaves (budget or sink exception).
            struct stopper
            {
                shared_budget & budget;
                ~stopper() { budget.stop(); }
            };

            for (unsigned j = 0 ; j < spec.limits.jobs ; ++j)
                workers.emplace_back([&] {
                    unit_search search{spec, budget};
                    while (true) {
                        auto i = next.fetch_add(1);
                        if (i >= units.size())
                            break;
                        unit_result result;
                        if (budget.exhausted())
                            result.complete = false;
                        else
                            result = search.run(units[i]);
                        std::lock_guard lock{mutex};
                        slots[i].result = std::move(result);
                        slots[i].ready = true;
                        ready_cv.notify_all();
                    }
                });

            stopper stop_on_exit{budget};
            for (auto & s : slots) {
                std::unique_lock lock{mutex};
                ready_cv.wait(lock, [&] { return s.ready; });
                auto result = std::move(s.result);
                lock.unlock();
                if (! result.complete) {
                    stats.complete = false;
                    break;
                }
                emit(result, sink, stats);
            }
        }

        stats.nodes = budget.nodes();
        return stats;
    }

    enum_result collect_mzs(const enum_spec & spec)
    {
        enum_result result;
        result.stats = enumerate_mzs(spec, [&](const sequence_class & c) { result.classes.push_back(c); });
        return result;
    }

    namespace
    {
        void require_within_cap(std::uint32_t n, std::uint32_t cap)
        {
            cyclic_group group{n};
            if (n > cap)
                throw precondition_error("n = " + std::to_string(n) + " exceeds the exhaustive-search cap "
                        + std::to_string(cap));
        }

        enum_spec all_classes(std::uint32_t n, std::uint32_t length, const search_limits & limits)
        {
            enum_spec spec;
            spec.n = n;
            spec.min_length = length;
            spec.max_length = length;
            spec.limits = limits;
            return spec;
        }
    }

    invariant_result compute_I(std::uint32_t n, const search_limits & limits, std::uint32_t cap)
    {
        return compute_Ik(n, 1, limits, cap);
    }

    invariant_result compute_Ik(std::uint32_t n, std::uint64_t k, const search_limits & limits, std::uint32_t cap)
    {
        require_within_cap(n, cap);
        if (k < 1)
            throw precondition_error("k must be at least 1");

        invariant_result result;
        result.n = n;
        result.value = 1;
        const norm_value threshold{k, 1};
        for (auto length = n ; length >= 1 ; --length) {
            auto found = collect_mzs(all_classes(n, length, limits));
            result.checked += found.classes.size();
            if (! found.stats.complete) {
                result.exhaustive = false;
                result.value = 0;
                return result;
            }
            for (auto & c : found.classes)
                if (index(c.canonical) > threshold)
                    result.witnesses.push_back(std::move(c));
            if (! result.witnesses.empty()) {
                result.value = length + 1;
                return result;
            }
        }
        return result;
    }

    invariant_result max_index_from_length(std::uint32_t n, std::uint32_t min_length, const search_limits & limits)
    {
        invariant_result result;
        result.n = n;
        enum_spec spec = all_classes(n, std::max<std::uint32_t>(min_length, 1), limits);
        spec.max_length = n;

        auto stats = enumerate_mzs(spec, [&](const sequence_class & c) {
            ++result.checked;
            auto value = index(c.canonical).ceil();
            if (value > result.value) {
                result.value = value;
                result.witnesses.clear();
            }
            if (value == result.value)
                result.witnesses.push_back(c);
        });
        result.exhaustive = stats.complete;
        return result;
    }

    invariant_result compute_max_index(std::uint32_t n, const search_limits & limits, std::uint32_t cap)
    {
        require_within_cap(n, cap);
        return max_index_from_length(n, 1, limits);
    }

    namespace
    {
        class zero_sum_free_search
        {
        public:
            zero_sum_free_search(std::uint32_t n, const search_limits & limits) :
                group_(n),
                budget_(limits),
                sums_(n + 1, sum_set{group_})
            {
            }

            invariant_result run()
            {
                invariant_result result;
                result.n = group_.order();
                descend();
                budget_.charge(pending_);
                result.exhaustive = ! aborted_;
                result.checked = budget_.nodes();
                result.value = longest_ + 1;
                for (auto & tuple : witnesses_) {
                    auto seq = sequence::from_residues(group_, tuple);
                    auto orbit = canonical_class(seq).orbit_size;
                    result.witnesses.push_back(sequence_class{std::move(seq), orbit});
                }
                return result;
            }

        private:
            void descend()
            {
                if (++pending_ >= flush_interval) {
                    if (! budget_.charge(pending_))
                        aborted_ = true;
                    pending_ = 0;
                }
                if (aborted_)
                    return;

                auto depth = tuple_.size();
                if (depth > longest_) {
                    longest_ = depth;
                    witnesses_.clear();
                }
                if (depth == longest_ && depth > 0 && is_orbit_minimum(group_, tuple_))
                    witnesses_.push_back(tuple_);

                for (residue a = tuple_.empty() ? 1 : tuple_.back() ; a < group_.order() ; ++a) {
                    if (sums_[depth].contains(group_.neg(a)))
                        continue;
                    sums_[depth + 1] = sums_[depth];
                    sums_[depth + 1].extend(a);
                    tuple_.push_back(a);
                    descend();
                    tuple_.pop_back();
                }
            }

            cyclic_group group_;
            shared_budget budget_;
            std::vector<sum_set> sums_;
            std::vector<residue> tuple_;
            std::vector<std::vector<residue>> witnesses_;
            std::size_t longest_ = 0;
            std::uint64_t pending_ = 0;
            bool aborted_ = false;
        };
    }

    invariant_result davenport(std::uint32_t n, const search_limits & limits, std::uint32_t cap)
    {
        require_within_cap(n, cap);
        return zero_sum_free_search{n, limits}.run();
    }
}
