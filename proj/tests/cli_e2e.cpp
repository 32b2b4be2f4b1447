// End-to-end checks of the command-line interface: exit-code contract,
// excluded-set reporting, and JSON validity. Takes the binary path as argv[1].
#include <array>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include "supm/report.hpp"

namespace {

int failures = 0;

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

RunResult run(const std::string& binary, const std::string& args) {
  RunResult result;
  std::string cmd = binary + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    std::cerr << "[FAIL] cannot spawn: " << cmd << "\n";
    ++failures;
    return result;
  }
  std::array<char, 4096> buf;
  while (fgets(buf.data(), buf.size(), pipe)) result.output += buf.data();
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

void expect_exit(const std::string& binary, const std::string& args, int want) {
  RunResult r = run(binary, args);
  if (r.exit_code != want) {
    std::cerr << "[FAIL] `" << args << "` exited " << r.exit_code << ", want " << want
              << "\n--- output ---\n" << r.output << "---\n";
    ++failures;
  } else {
    std::cout << "[ok] `" << args << "` -> exit " << want << "\n";
  }
}

void expect_contains(const std::string& binary, const std::string& args,
                     const std::string& needle) {
  RunResult r = run(binary, args);
  if (r.output.find(needle) == std::string::npos) {
    std::cerr << "[FAIL] `" << args << "` output lacks \"" << needle
              << "\"\n--- output ---\n" << r.output << "---\n";
    ++failures;
  } else {
    std::cout << "[ok] `" << args << "` mentions \"" << needle << "\"\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_e2e <path-to-binary>\n";
    return 2;
  }
  std::string bin = argv[1];

  // exit-code contract: 0 SUPM, 1 UPM only, 2 nothing, 3 input error
  expect_exit(bin, "family pfr --n 6 --c 2", 0);
  expect_exit(bin, "family pb --n 3 --m 2 --c 1", 0);
  expect_exit(bin, "family pb --n 2 --m 2 --c 1", 2);  // Theorem A refutes UPM
  // UPM via A but every strong-uniqueness route fails (the value sum is 0)
  expect_exit(bin, "check \"10z^6 - 24z^5 + 15z^4 - 1/2\"", 1);
  expect_exit(bin, "check \"(z-2)^4 - 3\"", 2);
  expect_exit(bin, "check \"z\"", 2);         // degree < 2: explained, not an input error
  expect_exit(bin, "check \"z^2 +\"", 3);     // parse error
  expect_exit(bin, "check \"z^2 + y\"", 3);   // second variable
  expect_exit(bin, "family pfr --n 6 --c 1/2", 3);  // excluded parameter
  expect_exit(bin, "family nosuch --n 3", 3);
  expect_exit(bin, "family pb --n 3 --m 2", 3);  // missing c
  expect_exit(bin, "check \"z^6+4z^5+25/6z^4\" --theorems thm2_3", 0);
  // without the family recognizer the multiple zero blocks every SUPM route,
  // but the pair-product inequality still gives UPM
  expect_exit(bin, "check \"z^6+4z^5+25/6z^4\"", 1);

  // lemma verbs
  expect_exit(bin, "lemma l3_1 --n 6 --A 2", 0);
  expect_exit(bin, "lemma l3_2 --n 6", 0);
  expect_exit(bin, "lemma l3_3 --n 6 --A 1", 3);  // precondition A != 1
  expect_exit(bin, "lemma l3_1 --n 6", 3);        // missing A

  // urs verbs
  expect_exit(bin, "urs --n 12 --k 2 --l 3", 0);
  expect_exit(bin, "urs --n 10 --k 2 --l 3", 2);
  expect_exit(bin, "urs --n 10 --k 2 --l 3 --entire", 0);
  expect_exit(bin, "urs --n 10 --k 2 --l 3 --theta 1/2", 0);
  expect_exit(bin, "urs --n 10 --k 2 --l 3 --theta 3/2", 3);
  expect_exit(bin, "urs --n 0 --k 2", 3);
  expect_exit(bin, "list-families", 0);

  // content checks
  expect_contains(bin, "family pfr --n 6 --c 1/2", "{0, 1, 1/2}");
  expect_contains(bin, "family pfr --n 6 --c 2", "overall: SUPM (via Thm2_1)");
  expect_contains(bin, "check \"z\"", "degree < 2");
  expect_contains(bin, "urs --n 12 --k 2 --l 3", "URSM needs n > 10 (yes at n = 12)");
  expect_contains(bin, "lemma l3_2 --n 6", "(t - 1)^4");
  expect_contains(bin, "list-families", "powergap");
  expect_contains(bin, "family pb --n 3 --m 2 --c 1 --theorems thm2_1,d",
                  "FujimotoD");

  // JSON output parses and matches the schema
  {
    RunResult r = run(bin, "family pb --n 3 --m 2 --c 1 --json");
    try {
      supm::Report report = supm::report_from_json(r.output);
      if (report.overall != supm::Conclusion::SUPM) {
        std::cerr << "[FAIL] JSON report overall mismatch\n";
        ++failures;
      } else {
        std::cout << "[ok] JSON report parses with overall SUPM\n";
      }
    } catch (const std::exception& e) {
      std::cerr << "[FAIL] JSON output did not parse: " << e.what() << "\n";
      ++failures;
    }
  }

  if (failures) {
    std::cerr << failures << " CLI check(s) failed\n";
    return 1;
  }
  std::cout << "all CLI checks passed\n";
  return 0;
}
