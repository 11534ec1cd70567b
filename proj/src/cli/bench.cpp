#include "numsg/cli/bench.hpp"

#include <sys/utsname.h>  // for uname

#include <algorithm>  // for find_if
#include <chrono>     // for steady_clock, system_clock
#include <cstdio>     // for snprintf
#include <ctime>      // for gmtime_r, strftime
#include <map>        // for map
#include <sstream>    // for ostringstream
#include <thread>     // for thread

#include "numsg/ascending.hpp"   // for as_all_ascending
#include "numsg/descending.hpp"  // for as_all_descending
#include "numsg/errors.hpp"      // for invalid_parameters

namespace numsg::cli {

  namespace {
    std::string machine_info() {
      std::ostringstream os;
      struct utsname     u {};
      if (uname(&u) == 0) {
        os << u.sysname << ' ' << u.release << ' ' << u.machine << ", ";
      }
      os << std::thread::hardware_concurrency() << " hardware threads";
      return os.str();
    }

    std::string utc_timestamp() {
      auto const now = std::chrono::system_clock::to_time_t(
          std::chrono::system_clock::now());
      std::tm tm{};
      gmtime_r(&now, &tm);
      char buf[32];
      std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
      return buf;
    }

    std::size_t run_one(Algorithm a, int f, Executor const& executor) {
      switch (a) {
        case Algorithm::ascending:
          return as_all_ascending(f, executor).size();
        case Algorithm::descending:
          return as_all_descending(f, executor).size();
        case Algorithm::oracle:
          return oracle_as(f, std::nullopt, kDefaultOracleLimit, executor)
              .size();
        case Algorithm::irreducible:
          break;
      }
      throw invalid_parameters("bench supports ascending, descending and "
                               "oracle only");
    }

    std::string fixed(double v, int digits) {
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
      return buf;
    }
  }  // namespace

  BenchReport run_bench(BenchConfig const& config, Executor const& executor) {
    if (config.frobenius.empty()) {
      throw invalid_parameters("bench needs at least one Frobenius number");
    }
    if (config.algorithms.empty()) {
      throw invalid_parameters("bench needs at least one algorithm");
    }
    for (int f : config.frobenius) {
      if (f < 1) {
        throw invalid_parameters("Frobenius numbers must be >= 1, found "
                                 + std::to_string(f));
      }
    }
    BenchReport report;
    report.frobenius  = config.frobenius;
    report.algorithms = config.algorithms;
    report.threads    = config.threads;
    report.machine    = machine_info();
    report.timestamp  = utc_timestamp();
    for (int f : config.frobenius) {
      for (Algorithm a : config.algorithms) {
        if (a == Algorithm::oracle && f > config.oracle_limit) {
          report.notes.push_back("oracle skipped for F = " + std::to_string(f)
                                 + " (limit "
                                 + std::to_string(config.oracle_limit) + ")");
          continue;
        }
        auto const        start = std::chrono::steady_clock::now();
        std::size_t const count = run_one(a, f, executor);
        std::chrono::duration<double> const elapsed
            = std::chrono::steady_clock::now() - start;
        report.rows.push_back({f, a, elapsed.count(), count});
      }
    }
    return report;
  }

  bool counts_consistent(BenchReport const& report) {
    std::map<int, std::size_t> seen;
    for (auto const& r : report.rows) {
      auto [it, inserted] = seen.try_emplace(r.frobenius, r.count);
      if (!inserted && it->second != r.count) {
        return false;
      }
    }
    return true;
  }

  std::string render_table(BenchReport const& report) {
    auto cell = [&](int f, Algorithm a) -> BenchRow const* {
      auto it = std::find_if(
          report.rows.begin(), report.rows.end(), [&](BenchRow const& r) {
            return r.frobenius == f && r.algorithm == a;
          });
      return it == report.rows.end() ? nullptr : &*it;
    };
    auto pad = [](std::string s, std::size_t w) {
      return std::string(w > s.size() ? w - s.size() : 0, ' ') + s;
    };
    std::size_t const  first = 14;
    std::size_t const  width = 10;
    std::ostringstream os;
    std::string        rule(first + (width + 3) * report.frobenius.size() + 1,
                     '-');

    os << rule << '\n' << std::string("Frobenius(S)").append(first - 12, ' ');
    for (int f : report.frobenius) {
      os << " | " << pad(std::to_string(f), width);
    }
    os << '\n' << rule << '\n';
    for (Algorithm a : report.algorithms) {
      std::string name(to_string(a));
      os << name << std::string(first - std::min(first, name.size()), ' ');
      for (int f : report.frobenius) {
        auto const* r = cell(f, a);
        os << " | " << pad(r ? fixed(r->seconds, 3) : "-", width);
      }
      os << '\n';
    }
    os << rule << '\n' << "count" << std::string(first - 5, ' ');
    for (int f : report.frobenius) {
      std::string c = "-";
      for (Algorithm a : report.algorithms) {
        if (auto const* r = cell(f, a)) {
          c = std::to_string(r->count);
          break;
        }
      }
      os << " | " << pad(c, width);
    }
    os << '\n' << rule << '\n';
    os << "times in seconds, " << report.threads << " thread(s)\n";
    for (auto const& n : report.notes) {
      os << "note: " << n << '\n';
    }
    return os.str();
  }

  nlohmann::ordered_json to_json(BenchReport const& report) {
    nlohmann::ordered_json j;
    j["machine"]   = report.machine;
    j["timestamp"] = report.timestamp;
    j["threads"]   = report.threads;
    j["rows"]      = nlohmann::ordered_json::array();
    for (auto const& r : report.rows) {
      nlohmann::ordered_json row;
      row["frobenius"] = r.frobenius;
      row["algorithm"] = std::string(to_string(r.algorithm));
      row["seconds"]   = r.seconds;
      row["count"]     = r.count;
      j["rows"].push_back(std::move(row));
    }
    j["counts_consistent"] = counts_consistent(report);
    j["notes"]             = report.notes;
    return j;
  }

}  // namespace numsg::cli
