#pragma once

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>

#include "symforms/error.hpp"

namespace acceptance {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Runs `body`, prints one PASS/FAIL line and returns the process exit code.
inline int run(int id, const char* title, double time_limit, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (time_limit > 0 && secs >= time_limit) {
    out.pass = false;
    out.detail += " [over time limit]";
  }
  std::printf("%s criterion %d: %s (%s; %.2fs", out.pass ? "PASS" : "FAIL", id, title, out.detail.c_str(), secs);
  if (time_limit > 0) std::printf(" < %.0fs", time_limit);
  std::printf(")\n");
  return out.pass ? 0 : 1;
}

}  // namespace acceptance
