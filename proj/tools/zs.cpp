#include "zs/cyclic.hpp"
#include "zs/enumerate.hpp"
#include "zs/errors.hpp"
#include "zs/index.hpp"
#include "zs/properties.hpp"
#include "zs/report.hpp"
#include "zs/sigma.hpp"
#include "zs/split.hpp"
#include "zs/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <unistd.h>

namespace fs = std::filesystem;

namespace
{
    enum exit_code : int
    {
        exit_ok = 0,
        exit_failed = 1,
        exit_usage = 2
    };

    class usage_error : public zs::error
    {
    public:
        using zs::error::error;
    };

    zs::json split_move_json(const std::optional<zs::split_move> & move)
    {
        if (! move)
            return nullptr;
        return zs::json{{"target", move->target}, {"x", move->part_x}, {"y", move->part_y}};
    }

    zs::json analyze_record(const zs::sequence & s)
    {
        zs::json support = zs::json::array();
        for (auto g : s.support())
            support.push_back(g);

        const bool minimal = zs::is_minimal_zero_sum(s);
        zs::json record{
            {"n", s.order()},
            {"seq", zs::format_sequence(s)},
            {"length", s.length()},
            {"sum", s.sum()},
            {"support", std::move(support)},
            {"h", s.max_multiplicity()},
            {"zero_sum", s.sum() == 0},
            {"zero_sum_free", zs::is_zero_sum_free(s)},
            {"minimal", minimal},
        };

        if (minimal) {
            auto cls = zs::classify(s);
            record["unsplittable"] = cls.unsplittable;
            record["split_method"] = zs::to_string(cls.method);
            record["witness"] = split_move_json(cls.witness);
        }
        else {
            record["unsplittable"] = nullptr;
            record["split_method"] = nullptr;
            record["witness"] = nullptr;
        }

        auto support_nonzero = s.support();
        std::erase(support_nonzero, 0u);
        if (support_nonzero.empty()) {
            record["index"] = nullptr;
            record["index_value"] = nullptr;
            record["index_generator"] = nullptr;
        }
        else {
            auto idx = zs::index_with_generator(s);
            record["index"] = idx.value.to_string();
            record["index_value"] = idx.value.reduced_string();
            record["index_generator"] = idx.generator;
        }

        zs::json complement = zs::json::object();
        if (! s.empty())
            for (auto [g, size] : zs::sigma_complement_sizes(s))
                complement[std::to_string(g)] = size;
        record["complement_sizes"] = std::move(complement);
        return record;
    }

    void print_analyze_text(const zs::json & record, std::ostream & out)
    {
        for (const auto & [key, value] : record.items())
            out << std::left << std::setw(18) << key << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }

    zs::json enumerate_record(const zs::sequence_class & c)
    {
        const auto & s = c.canonical;
        auto support = s.support();
        bool has_nonzero = std::any_of(support.begin(), support.end(), [](auto g) { return g != 0; });
        return zs::json{
            {"n", s.order()},
            {"seq", zs::format_sequence(s)},
            {"len", s.length()},
            {"index", has_nonzero ? zs::json(zs::index(s).to_string()) : zs::json(nullptr)},
            {"unsplittable", zs::classify(s).unsplittable},
            {"orbit", c.orbit_size},
        };
    }

    std::pair<std::uint32_t, std::uint32_t> parse_range(const std::string & text)
    {
        auto dots = text.find("..");
        if (dots == std::string::npos)
            throw usage_error("range '" + text + "' must look like A..B");
        try {
            std::size_t used_lo = 0, used_hi = 0;
            auto lo_text = text.substr(0, dots), hi_text = text.substr(dots + 2);
            auto lo = std::stoul(lo_text, &used_lo), hi = std::stoul(hi_text, &used_hi);
            if (used_lo != lo_text.size() || used_hi != hi_text.size())
                throw usage_error("range '" + text + "' must look like A..B");
            return {static_cast<std::uint32_t>(lo), static_cast<std::uint32_t>(hi)};
        }
        catch (const std::logic_error &) {
            throw usage_error("range '" + text + "' must look like A..B");
        }
    }

    std::string utc_timestamp()
    {
        auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
        std::tm tm{};
        gmtime_r(&now, &tm);
        std::ostringstream out;
        out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
        return out.str();
    }

    std::optional<fs::path> env_path(const char * name)
    {
        if (const char * value = std::getenv(name) ; value && *value)
            return fs::path{value};
        return std::nullopt;
    }

    /// Output sink owned by a single writer: stdout or a file.
    class output
    {
    public:
        explicit output(const std::string & path)
        {
            if (! path.empty()) {
                file_.open(path, std::ios::binary | std::ios::trunc);
                if (! file_)
                    throw usage_error("cannot open output file '" + path + "'");
            }
        }

        std::ostream & stream() { return file_.is_open() ? file_ : std::cout; }

    private:
        std::ofstream file_;
    };

    struct enumerate_options
    {
        std::uint32_t n = 0;
        std::uint32_t length = 0;
        std::uint32_t min_length = 0;
        std::uint32_t max_length = 0;
        std::string filter = "all";
        unsigned jobs = 1;
        std::uint64_t budget = 0;
        bool include_zero = false;
        bool no_dedupe = false;
        std::string out;
    };

    int run_enumerate(const enumerate_options & opts)
    {
        zs::enum_spec spec;
        spec.n = opts.n;
        if (opts.length != 0) {
            spec.min_length = spec.max_length = opts.length;
        }
        else if (opts.min_length != 0) {
            spec.min_length = opts.min_length;
            spec.max_length = opts.max_length != 0 ? opts.max_length : opts.n;
        }
        else
            throw usage_error("one of --length or --min-length is required");

        auto filter = zs::parse_filter(opts.filter);
        if (! filter)
            throw usage_error("unknown filter '" + opts.filter + "'");
        spec.filter = *filter;
        spec.exclude_zero = ! opts.include_zero;
        spec.dedupe_units = ! opts.no_dedupe;
        spec.limits.jobs = opts.jobs;
        spec.limits.node_budget = opts.budget;
        zs::validate(spec);

        output out{opts.out};
        std::optional<fs::path> cache_file;
        if (auto dir = env_path("ZS_CACHE_DIR")) {
            std::ostringstream key;
            key << "enum-v" << zs::tool_version() << "-n" << spec.n << "-len" << spec.min_length << '-' << spec.max_length
                << '-' << zs::to_string(spec.filter) << (spec.exclude_zero ? "" : "-zero") << (spec.dedupe_units ? "" : "-raw")
                << ".jsonl";
            cache_file = *dir / key.str();
            if (std::ifstream cached{*cache_file, std::ios::binary} ; cached) {
                out.stream() << cached.rdbuf();
                out.stream().flush();
                return exit_ok;
            }
        }

        std::ostringstream buffer;
        auto stats = zs::enumerate_mzs(spec, [&](const zs::sequence_class & c) {
            auto line = enumerate_record(c).dump() + '\n';
            out.stream() << line;
            if (cache_file)
                buffer << line;
        });
        out.stream().flush();

        if (! stats.complete) {
            std::cerr << "zs: enumeration incomplete after " << stats.nodes << " nodes (budget exhausted)\n";
            return exit_failed;
        }
        if (cache_file) {
            std::error_code ec;
            fs::create_directories(cache_file->parent_path(), ec);
            auto tmp = *cache_file;
            tmp += ".tmp" + std::to_string(::getpid());
            {
                std::ofstream file{tmp, std::ios::binary | std::ios::trunc};
                file << buffer.str();
            }
            fs::rename(tmp, *cache_file, ec);
            if (ec)
                std::cerr << "zs: warning: could not write cache file " << *cache_file << ": " << ec.message() << '\n';
        }
        return exit_ok;
    }

    struct verify_options
    {
        std::string target;
        std::uint32_t n = 0;
        std::string n_range;
        std::uint32_t p = 0;
        std::vector<std::uint32_t> p_set;
        std::uint64_t seed = zs::default_seed;
        std::string mode = "assert";
        std::uint64_t budget = 0;
        unsigned jobs = 1;
        std::string results_dir;
    };

    void persist(const zs::verify_report & report, const std::string & dir_option, const std::string & command)
    {
        std::optional<fs::path> dir;
        if (! dir_option.empty())
            dir = fs::path{dir_option};
        else
            dir = env_path("ZS_RESULTS_DIR");
        if (! dir)
            return;

        fs::create_directories(*dir);
        std::ofstream file{*dir / "verify.jsonl", std::ios::binary | std::ios::app};
        if (! file)
            throw usage_error("cannot append to " + (*dir / "verify.jsonl").string());
        zs::json line{{"run", {{"recorded_at", utc_timestamp()}, {"command", command}}}, {"report", zs::to_json(report)}};
        file << line.dump() << '\n';
    }

    int run_verify(const verify_options & opts, const std::string & command)
    {
        if (! zs::is_verify_target(opts.target))
            throw usage_error("unknown verify target '" + opts.target + "'");

        zs::verify_params params;
        if (opts.n != 0)
            params.n = opts.n;
        if (! opts.n_range.empty())
            params.n_range = parse_range(opts.n_range);
        if (opts.p != 0)
            params.p = opts.p;
        params.p_set = opts.p_set;
        params.seed = opts.seed;
        if (opts.mode == "explore")
            params.mode = zs::verify_mode::explore;
        else if (opts.mode != "assert")
            throw usage_error("mode must be assert or explore");
        params.limits.node_budget = opts.budget;
        params.limits.jobs = opts.jobs;

        auto report = zs::run_verify(opts.target, params);
        std::cout << zs::to_json(report).dump() << '\n';
        persist(report, opts.results_dir, command);
        return report.status == zs::verify_status::verified ? exit_ok : exit_failed;
    }

    int run_props(const std::vector<std::uint32_t> & p_set, std::uint64_t seed)
    {
        zs::property_config config;
        if (! p_set.empty())
            config.primes = p_set;
        config.seed = seed;
        bool all_passed = true;
        for (const auto & outcome : zs::run_property_suite(config)) {
            std::cout << zs::to_json(outcome).dump() << '\n';
            all_passed = all_passed && outcome.passed();
        }
        return all_passed ? exit_ok : exit_failed;
    }
}

int main(int argc, char ** argv)
{
    CLI::App app{"Minimal zero-sum sequences over cyclic groups"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(zs::tool_version()));

    std::uint32_t analyze_n = 0;
    std::string analyze_seq;
    bool analyze_json = false;
    auto analyze = app.add_subcommand("analyze", "Analyse one sequence");
    analyze->add_option("--n", analyze_n, "Group order")->required();
    analyze->add_option("--seq", analyze_seq, "Sequence text, e.g. 1^75,77,81^2")->required();
    analyze->add_flag("--json", analyze_json, "Emit one JSON object");

    enumerate_options enum_opts;
    auto enumerate = app.add_subcommand("enumerate", "Stream minimal zero-sum classes as JSON Lines");
    enumerate->add_option("--n", enum_opts.n, "Group order")->required();
    auto length_opt = enumerate->add_option("--length", enum_opts.length, "Exact length");
    auto min_opt = enumerate->add_option("--min-length", enum_opts.min_length, "Smallest length (up to --max-length or n)");
    enumerate->add_option("--max-length", enum_opts.max_length, "Largest length with --min-length")->needs(min_opt);
    length_opt->excludes(min_opt);
    enumerate->add_option("--filter", enum_opts.filter, "all|unsplittable|splittable");
    enumerate->add_option("--jobs", enum_opts.jobs, "Worker threads")->check(CLI::PositiveNumber);
    enumerate->add_option("--budget", enum_opts.budget, "Node budget (0 = unlimited)");
    enumerate->add_option("--out", enum_opts.out, "Write to FILE instead of stdout");
    enumerate->add_flag("--include-zero", enum_opts.include_zero, "Allow the zero element");
    enumerate->add_flag("--no-dedupe", enum_opts.no_dedupe, "Emit every multiset instead of one per unit orbit");

    verify_options verify_opts;
    auto verify = app.add_subcommand("verify", "Run a verification campaign");
    verify->add_option("target", verify_opts.target, "Campaign name")->required();
    auto n_opt = verify->add_option("--n", verify_opts.n, "Group order");
    auto range_opt = verify->add_option("--n-range", verify_opts.n_range, "Orders A..B");
    auto p_opt = verify->add_option("--p", verify_opts.p, "Prime order");
    auto pset_opt = verify->add_option("--p-set", verify_opts.p_set, "Comma-separated primes")->delimiter(',');
    n_opt->excludes(range_opt)->excludes(p_opt)->excludes(pset_opt);
    range_opt->excludes(p_opt)->excludes(pset_opt);
    p_opt->excludes(pset_opt);
    verify->add_option("--seed", verify_opts.seed, "Seed for randomised checks");
    verify->add_option("--mode", verify_opts.mode, "assert|explore");
    verify->add_option("--budget", verify_opts.budget, "Node budget per search (0 = unlimited)");
    verify->add_option("--jobs", verify_opts.jobs, "Worker threads")->check(CLI::PositiveNumber);
    verify->add_option("--results-dir", verify_opts.results_dir, "Append reports to DIR/verify.jsonl (default $ZS_RESULTS_DIR)");

    std::vector<std::uint32_t> props_primes;
    std::uint64_t props_seed = zs::default_seed;
    auto props = app.add_subcommand("props", "Run the structural property suite");
    props->add_option("--p-set", props_primes, "Comma-separated primes")->delimiter(',');
    props->add_option("--seed", props_seed, "Seed for randomised checks");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        auto code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    std::string command;
    for (int i = 0 ; i < argc ; ++i)
        command += (i ? " " : "") + std::string(argv[i]);

    try {
        if (*analyze) {
            auto s = zs::parse_sequence(analyze_seq, analyze_n);
            auto record = analyze_record(s);
            if (analyze_json)
                std::cout << record.dump() << '\n';
            else
                print_analyze_text(record, std::cout);
            return exit_ok;
        }
        if (*enumerate)
            return run_enumerate(enum_opts);
        if (*verify)
            return run_verify(verify_opts, command);
        if (*props)
            return run_props(props_primes, props_seed);
    }
    catch (const zs::error & e) {
        std::cerr << "zs: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const std::exception & e) {
        std::cerr << "zs: internal error: " << e.what() << '\n';
        return exit_failed;
    }
    return exit_usage;
}
