#pragma once

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ccells/chirotope.hpp"
#include "ccells/circuits.hpp"
#include "ccells/subset_index.hpp"

namespace ccells {

/// Pipeline result for one chirotope. Counts are signed topes; a projective
/// cell corresponds to the pair {T, -T}.
struct ClassReport {
  std::uint64_t line_index = 0;
  std::uint64_t complete_cell_topes = 0;
  std::uint64_t tope_count = 0;
  bool attains_bound = false;
  bool exceeds_bound = false;

  std::uint64_t projective_cells() const { return complete_cell_topes / 2; }
  bool operator==(const ClassReport&) const = default;
};

/// Circuits, topes and complete cells for chirotopes of a fixed (n, r, order).
/// Immutable; one instance can serve any number of threads.
class Pipeline {
 public:
  /// Requires n >= r + 1 (ParameterError otherwise).
  Pipeline(int n, int r, SubsetOrder order = SubsetOrder::Lex);

  int elements() const { return extractor_.elements(); }
  int rank() const { return extractor_.rank(); }
  SubsetOrder order() const { return extractor_.order(); }
  /// 2 * C_{r-1}(n), the complete-cell tope count of the alternating matroid.
  std::uint64_t bound() const { return bound_; }

  ClassReport run(const Chirotope& chi, std::uint64_t line_index = 0) const;

 private:
  std::uint64_t bound_;
  CircuitExtractor extractor_;
};

ClassReport process_one(const Chirotope& chi);

struct LineError {
  std::uint64_t line_index = 0;
  std::string message;
  bool operator==(const LineError&) const = default;
};

/// Aggregate over a chirotope file. Line indices are 1-based physical line
/// numbers; comment and blank lines are not data lines but keep their numbers.
struct SweepSummary {
  int elements = 0;
  int rank = 0;
  SubsetOrder order = SubsetOrder::Lex;
  std::string input_sha256;
  bool complete = false;

  std::uint64_t data_lines = 0;
  std::uint64_t total_classes = 0;
  /// complete-cell tope count -> number of classes.
  std::map<std::uint64_t, std::uint64_t> histogram;
  std::uint64_t max_count = 0;
  std::vector<std::uint64_t> argmax_lines;
  std::uint64_t bound = 0;
  std::vector<std::uint64_t> violations;
  std::vector<LineError> errors;

  void add(const ClassReport& report);
  void add(LineError error);

  bool operator==(const SweepSummary&) const = default;
};

/// Deterministic pretty-printed JSON (no timestamps, stable key order).
std::string summary_to_json(const SweepSummary& summary);
SweepSummary summary_from_json(std::string_view text);

/// Header and row of the per-class TSV report.
std::string class_report_tsv_header();
std::string class_report_tsv_row(const ClassReport& report);

struct SweepOptions {
  int elements = 0;
  int rank = 0;
  SubsetOrder order = SubsetOrder::Lex;
  /// Worker threads; 0 means hardware concurrency.
  unsigned jobs = 1;
  std::optional<std::filesystem::path> checkpoint;
  /// Data lines per batch; a checkpoint is written after every batch.
  std::uint64_t checkpoint_interval = 10000;
  std::optional<std::filesystem::path> per_class_tsv;
  /// Stop (and checkpoint) after this many data lines in this invocation.
  std::optional<std::uint64_t> stop_after;
  /// Polled between batches; when set the sweep checkpoints and returns early.
  const std::atomic<bool>* cancel = nullptr;
};

struct ResumeOptions {
  unsigned jobs = 1;
  std::optional<std::uint64_t> stop_after;
  const std::atomic<bool>* cancel = nullptr;
};

/// On-disk state of an interrupted sweep.
struct Checkpoint {
  std::filesystem::path input;
  std::uint64_t checkpoint_interval = 10000;
  std::uint64_t byte_offset = 0;
  std::uint64_t physical_lines = 0;
  std::optional<std::filesystem::path> per_class_tsv;
  std::uint64_t tsv_bytes = 0;
  SweepSummary state;
};

Checkpoint read_checkpoint(const std::filesystem::path& path);
/// Writes to a temporary sibling and renames it into place.
void write_checkpoint(const std::filesystem::path& path, const Checkpoint& checkpoint);

/// Hex SHA-256 of the file contents.
std::string file_sha256(const std::filesystem::path& path);

/// Runs the pipeline over every data line of `input`. Malformed lines are
/// recorded in `errors` and excluded from the totals. The result does not
/// depend on `jobs`. Throws IoError if the input cannot be read.
SweepSummary sweep_file(const std::filesystem::path& input, const SweepOptions& options);

/// Continues the sweep recorded in a checkpoint. A completed checkpoint returns
/// its stored summary unchanged. Throws DigestMismatchError if the input file
/// no longer matches the recorded digest.
SweepSummary resume(const std::filesystem::path& checkpoint, const ResumeOptions& options = {});

}  // namespace ccells
