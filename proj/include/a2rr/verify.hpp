#ifndef A2RR_VERIFY_HPP
#define A2RR_VERIFY_HPP

#include <string>
#include <vector>

#include "a2rr/json_io.hpp"
#include "a2rr/series.hpp"

namespace a2rr {

struct RunReport {
  std::string id;
  std::string title;
  Json inputs = Json::object();
  bool pass = false;
  std::vector<std::string> witnesses;  // first mismatches, always present on failure
  std::vector<std::string> notes;
  double seconds = 0;
};

Json to_json(const RunReport& r, bool timing = false);

// first coefficient where two series differ, or empty
std::string first_difference(const BiSeries& a, const BiSeries& b);
std::string first_difference(const QSeries& a, const QSeries& b);

struct SuiteOptions {
  int qorder = 30;            // capped by the order each criterion names
  std::string data_dir;
  std::string cli_path;       // for the determinism check; skipped when empty
  std::vector<int> only;      // criterion numbers, all when empty
};

// the acceptance criteria, in order
std::vector<RunReport> run_suite(const SuiteOptions& opt);

}  // namespace a2rr

#endif  // A2RR_VERIFY_HPP
