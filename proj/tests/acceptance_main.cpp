// Acceptance suite: reproduces every reference number the library is built
// around and prints one line per criterion.  Exit status 0 iff all checked
// criteria pass (REPORT rows are informational).

#include <cstdio>
#include <cstring>
#include <iostream>

#include "tropmod/reproduce.hpp"

int main(int argc, char** argv) {
  tropmod::ReproduceOptions opt;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--skip-exploratory") == 0) opt.exploratory = false;
    if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc)
      opt.seed = static_cast<unsigned>(std::atoi(argv[++i]));
  }
  std::vector<tropmod::ReportRow> rows = tropmod::reproduce_all(opt);
  std::cout << tropmod::format_report(rows);
  return tropmod::report_ok(rows) ? 0 : 1;
}
