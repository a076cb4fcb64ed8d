#include <cstdio>
#include <string>

#include "a2rr/verify.hpp"

int main(int argc, char** argv) {
  a2rr::SuiteOptions opt;
  opt.qorder = 30;
  opt.data_dir = A2RR_DATA_DIR;
  opt.cli_path = A2RR_CLI_PATH;
  if (argc > 1) opt.qorder = std::stoi(argv[1]);
  int failed = 0;
  for (auto& r : a2rr::run_suite(opt)) {
    std::printf("criterion %2s %s  %s (%.2fs)\n", r.id.c_str(), r.pass ? "PASS" : "FAIL", r.title.c_str(), r.seconds);
    for (auto& w : r.witnesses) std::printf("    witness: %s\n", w.c_str());
    for (auto& n : r.notes) std::printf("    note: %s\n", n.c_str());
    failed += !r.pass;
  }
  std::printf("%d criteria failed\n", failed);
  return failed ? 1 : 0;
}
