#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "ccells/chirotope.hpp"
#include "ccells/oracle.hpp"
#include "support/brute_force.hpp"

namespace ccells::testing {

/// Chirotope lines: the alternating one first, then in rotation a random
/// reorientation of it, a relabeled and reoriented copy, and a random
/// realizable chirotope.
inline std::vector<std::string> mixed_fixture(int n, int r, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Chirotope alternating = alternating_chirotope(n, r);
  std::vector<std::string> lines;
  lines.reserve(count);
  if (count > 0) lines.push_back(serialize_chirotope(alternating));
  while (lines.size() < count) {
    switch (lines.size() % 3) {
      case 0:
        lines.push_back(serialize_chirotope(reorient(alternating, random_subset(n, rng))));
        break;
      case 1:
        lines.push_back(serialize_chirotope(
            reorient(relabel(alternating, random_permutation(n, rng)), random_subset(n, rng))));
        break;
      default:
        lines.push_back(serialize_chirotope(
            oracle::chirotope_of_configuration(oracle::random_configuration(n, r, rng))));
    }
  }
  return lines;
}

inline void write_lines(const std::filesystem::path& path, const std::vector<std::string>& lines,
                        const std::string& header = {}) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!header.empty()) out << header << '\n';
  for (const std::string& line : lines) out << line << '\n';
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

/// Fresh empty directory under the system temp directory.
inline std::filesystem::path scratch_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("ccells_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace ccells::testing
