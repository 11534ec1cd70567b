#include "numsg/cli/app.hpp"

#include <algorithm>  // for reverse
#include <fstream>    // for ofstream
#include <map>        // for map
#include <optional>   // for optional

#include "CLI11.hpp"

#include "numsg/ascending.hpp"
#include "numsg/classify.hpp"
#include "numsg/cli/bench.hpp"
#include "numsg/cli/dot.hpp"
#include "numsg/cli/thread_pool.hpp"
#include "numsg/descending.hpp"
#include "numsg/errors.hpp"
#include "numsg/irreducible.hpp"
#include "numsg/oracle.hpp"
#include "numsg/serialize.hpp"

namespace numsg::cli {

  namespace {

    struct Options {
      std::size_t            threads = default_thread_count();
      std::string            out_path;
      std::vector<int>       gens;
      std::vector<int>       gaps;
      int                    frobenius = 0;
      std::optional<int>     type;
      std::optional<int>     min_type;
      bool                   count_only = false;
      bool                   dot        = false;
      bool                   all        = false;
      int                    limit      = kDefaultOracleLimit;
      std::vector<int>       frobenius_list;
      std::vector<std::string> algorithms;
    };

    Algorithm parse_algorithm(std::string const& name) {
      if (name == "ascending") {
        return Algorithm::ascending;
      } else if (name == "descending") {
        return Algorithm::descending;
      } else if (name == "oracle") {
        return Algorithm::oracle;
      }
      throw invalid_parameters("unknown algorithm '" + name + "'");
    }

    void write_semigroups(std::vector<Semigroup> const& v,
                          Options const&                opt,
                          std::ostream&                 os) {
      if (!opt.count_only) {
        for (auto const& s : v) {
          os << to_json_line(s) << '\n';
        }
        return;
      }
      std::map<int, std::size_t> per_type;
      for (auto const& s : v) {
        ++per_type[compute_stats(s).type];
      }
      for (auto const& [t, n] : per_type) {
        nlohmann::ordered_json j;
        j["frobenius"] = opt.frobenius;
        j["type"]      = t;
        j["count"]     = n;
        os << j.dump() << '\n';
      }
      nlohmann::ordered_json j;
      j["frobenius"] = opt.frobenius;
      j["total"]     = v.size();
      os << j.dump() << '\n';
    }

    // Keeps those matching --type / --min-type.
    std::vector<Semigroup> select(std::vector<Semigroup> v,
                                  Options const&         opt) {
      if (!opt.type && !opt.min_type) {
        return v;
      }
      std::vector<Semigroup> kept;
      for (auto& s : v) {
        int const t = compute_stats(s).type;
        if ((opt.type && t == *opt.type)
            || (opt.min_type && t >= *opt.min_type)) {
          kept.push_back(std::move(s));
        }
      }
      return kept;
    }

    void check_selector(Options const& opt) {
      if (opt.frobenius < 1) {
        throw invalid_parameters("--frobenius must be >= 1");
      }
      if ((opt.type && *opt.type < 1) || (opt.min_type && *opt.min_type < 1)) {
        throw invalid_parameters("types must be >= 1");
      }
    }

    void cmd_info(Options const& opt, std::ostream& os) {
      if (opt.gens.empty() == opt.gaps.empty()) {
        throw invalid_parameters("info needs exactly one of --gens, --gaps");
      }
      Semigroup const s
          = opt.gens.empty() ? from_gaps(opt.gaps) : from_generators(opt.gens);
      os << to_json_line(s) << '\n';
    }

    void cmd_enumerate(std::string const& mode,
                       Options const&     opt,
                       Executor const&    ex,
                       std::ostream&      os) {
      check_selector(opt);
      int const f = opt.frobenius;
      if (opt.dot) {
        if (mode == "irreducible") {
          os << irreducible_dot(f, ex);
          return;
        }
        if (mode == "as-descending") {
          int const t = opt.type ? *opt.type : opt.min_type.value_or(1);
          if (t > f) {
            throw invalid_parameters("type must be <= F for as-descending");
          }
          os << descending_dot(f, t, ex);
          return;
        }
        throw invalid_parameters("--dot is only available for the tree "
                                 "modes irreducible and as-descending");
      }

      std::vector<Semigroup> result;
      if (mode == "irreducible") {
        result = select(enumerate_irreducible(f, ex).semigroups, opt);
      } else if (mode == "as-ascending") {
        if (opt.type) {
          result = as_with_type(f, *opt.type, ex).semigroups;
        } else {
          result = as_type_range(f, opt.min_type.value_or(1), f, ex).semigroups;
        }
      } else if (mode == "as-descending") {
        int const t = opt.type ? *opt.type : opt.min_type.value_or(1);
        result      = select(as_down_to_type(f, t, ex).semigroups, opt);
      } else {
        if (opt.all) {
          result = select(all_with_frobenius(f, opt.limit, ex).semigroups, opt);
        } else if (opt.type) {
          result = oracle_as(f, *opt.type, opt.limit, ex).semigroups;
        } else {
          result = select(oracle_as(f, std::nullopt, opt.limit, ex).semigroups,
                          opt);
        }
      }
      write_semigroups(result, opt, os);
    }

    int cmd_bench(Options const& opt,
                  Executor const& ex,
                  std::ostream&  os,
                  std::ostream&  err) {
      BenchConfig config;
      config.threads = opt.threads;
      if (!opt.frobenius_list.empty()) {
        config.frobenius = opt.frobenius_list;
      }
      if (!opt.algorithms.empty()) {
        config.algorithms.clear();
        for (auto const& a : opt.algorithms) {
          config.algorithms.push_back(parse_algorithm(a));
        }
      }
      auto const report = run_bench(config, ex);
      os << render_table(report);
      if (!opt.out_path.empty()) {
        std::ofstream file(opt.out_path);
        if (!file) {
          throw invalid_parameters("cannot write " + opt.out_path);
        }
        file << to_json(report).dump(2) << '\n';
      }
      if (!counts_consistent(report)) {
        err << "error: algorithms disagree on counts\n";
        return kInternalError;
      }
      return kSuccess;
    }

  }  // namespace

  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err) {
    CLI::App app{"Numerical semigroups: almost symmetric enumeration", "numsg"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--threads", opt.threads, "Worker threads")
        ->check(CLI::PositiveNumber);
    app.add_option("--out", opt.out_path,
                   "Write output (bench: JSON report) to this file");

    auto* info = app.add_subcommand("info", "Invariants of one semigroup");
    info->add_option("--gens", opt.gens, "Generators a,b,...")->delimiter(',');
    info->add_option("--gaps", opt.gaps, "Gaps a,b,...")->delimiter(',');

    std::vector<std::pair<std::string, std::string>> const modes = {
        {"irreducible", "Irreducible semigroups with Frobenius number F"},
        {"as-ascending", "Almost symmetric semigroups from irreducibles"},
        {"as-descending", "Almost symmetric semigroups descending from M(F)"},
        {"oracle", "Brute-force almost symmetric semigroups"}};
    std::vector<CLI::App*> enumerators;
    for (auto const& [name, help] : modes) {
      auto* sub = app.add_subcommand(name, help);
      sub->add_option("--frobenius", opt.frobenius, "Frobenius number F")
          ->required();
      auto* t  = sub->add_option("--type", opt.type, "Only type t");
      auto* mt = sub->add_option("--min-type", opt.min_type, "Types >= t");
      t->excludes(mt);
      sub->add_flag("--count-only", opt.count_only, "Print counts per type");
      sub->add_flag("--dot", opt.dot, "Emit the tree in DOT format");
      if (name == "oracle") {
        sub->add_flag("--all", opt.all,
                      "Every semigroup with Frobenius number F");
        sub->add_option("--limit", opt.limit, "Largest F accepted");
      }
      enumerators.push_back(sub);
    }

    auto* bench = app.add_subcommand("bench", "Time the enumerators");
    bench->add_option("--frobenius-list", opt.frobenius_list,
                      "Frobenius numbers")
        ->delimiter(',');
    bench->add_option("--algorithms", opt.algorithms,
                      "ascending,descending,oracle")
        ->delimiter(',');
    // An explicitly empty list is an error, not the default list.
    bool empty_list = false;
    for (auto const& a : args) {
      if (a == "--frobenius-list=" || a == "--frobenius-list") {
        empty_list = true;
      }
    }

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::CallForHelp const& e) {
      out << app.help();
      return kSuccess;
    } catch (CLI::ParseError const& e) {
      err << "error: " << e.what() << '\n';
      return kInvalidParameters;
    }

    try {
      ThreadPool const pool(opt.threads);
      std::ofstream    file;
      std::ostream*    os = &out;
      if (!opt.out_path.empty() && !bench->parsed()) {
        file.open(opt.out_path);
        if (!file) {
          throw invalid_parameters("cannot write " + opt.out_path);
        }
        os = &file;
      }
      if (info->parsed()) {
        cmd_info(opt, *os);
        return kSuccess;
      }
      if (bench->parsed()) {
        if (empty_list && opt.frobenius_list.empty()) {
          throw invalid_parameters("--frobenius-list is empty");
        }
        return cmd_bench(opt, pool, *os, err);
      }
      for (std::size_t i = 0; i < enumerators.size(); ++i) {
        if (enumerators[i]->parsed()) {
          cmd_enumerate(modes[i].first, opt, pool, *os);
        }
      }
      return kSuccess;
    } catch (limit_exceeded const& e) {
      err << "error: LimitExceeded: " << e.what() << '\n';
      return kLimitExceeded;
    } catch (not_numerical const& e) {
      err << "error: NotNumerical: " << e.what() << '\n';
      return kInvalidParameters;
    } catch (closure_violation const& e) {
      err << "error: ClosureViolation(" << e.a() << ", " << e.b()
          << "): " << e.what() << '\n';
      return kInvalidParameters;
    } catch (invalid_parameters const& e) {
      err << "error: InvalidParameters: " << e.what() << '\n';
      return kInvalidParameters;
    } catch (internal_error const& e) {
      err << "error: internal invariant failure: " << e.what() << '\n';
      return kInternalError;
    }
  }

}  // namespace numsg::cli
