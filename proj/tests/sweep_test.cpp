#include "ccells/sweep.hpp"

#include <random>

#include <gtest/gtest.h>

#include "ccells/errors.hpp"
#include "support/fixtures.hpp"

namespace ccells {
namespace {

using testing::read_file;
using testing::scratch_dir;
using testing::write_lines;

SweepOptions options(int n, int r) {
  SweepOptions o;
  o.elements = n;
  o.rank = r;
  return o;
}

TEST(ProcessOne, Alternating) {
  const ClassReport eight = process_one(alternating_chirotope(8, 5));
  EXPECT_EQ(eight.complete_cell_topes, 62U);
  EXPECT_EQ(eight.projective_cells(), 31U);
  EXPECT_EQ(eight.tope_count, 198U);
  EXPECT_TRUE(eight.attains_bound);
  EXPECT_FALSE(eight.exceeds_bound);
  const ClassReport nine = process_one(alternating_chirotope(9, 5));
  EXPECT_EQ(nine.complete_cell_topes, 74U);
  EXPECT_TRUE(nine.attains_bound);
  const ClassReport reoriented =
      process_one(reorient(alternating_chirotope(8, 5), ElementSet::of({3, 5})));
  EXPECT_EQ(reoriented, eight);
}

TEST(ProcessOne, NeedsCircuits) {
  EXPECT_THROW(process_one(alternating_chirotope(5, 5)), ParameterError);
  EXPECT_THROW(Pipeline(4, 5), ParameterError);
  EXPECT_EQ(Pipeline(8, 5).bound(), 62U);
  EXPECT_EQ(Pipeline(7, 3).bound(), 2U);
}

TEST(Sweep, SingleAlternatingLine) {
  const auto dir = scratch_dir("single");
  write_lines(dir / "in.txt", {serialize_chirotope(alternating_chirotope(8, 5))});
  const SweepSummary s = sweep_file(dir / "in.txt", options(8, 5));
  EXPECT_TRUE(s.complete);
  EXPECT_EQ(s.total_classes, 1U);
  EXPECT_EQ(s.histogram, (std::map<std::uint64_t, std::uint64_t>{{62, 1}}));
  EXPECT_EQ(s.max_count, 62U);
  EXPECT_EQ(s.argmax_lines, std::vector<std::uint64_t>{1});
  EXPECT_EQ(s.bound, 62U);
  EXPECT_TRUE(s.violations.empty());
}

TEST(Sweep, EmptyFile) {
  const auto dir = scratch_dir("empty");
  write_lines(dir / "in.txt", {});
  const SweepSummary s = sweep_file(dir / "in.txt", options(8, 5));
  EXPECT_TRUE(s.complete);
  EXPECT_EQ(s.total_classes, 0U);
  EXPECT_TRUE(s.histogram.empty());
  EXPECT_TRUE(s.argmax_lines.empty());
}

TEST(Sweep, CommentsBlankLinesAndErrors) {
  const auto dir = scratch_dir("errors");
  const std::string alt = serialize_chirotope(alternating_chirotope(6, 3));
  std::ofstream(dir / "in.txt") << "# header\n" << alt << "\n\n+++\n" << alt << "\r\n"
                                << std::string(20, '0') << "\n" << alt;
  const SweepSummary s = sweep_file(dir / "in.txt", options(6, 3));
  EXPECT_EQ(s.data_lines, 5U);
  EXPECT_EQ(s.total_classes, 3U);
  ASSERT_EQ(s.errors.size(), 2U);
  EXPECT_EQ(s.errors[0].line_index, 4U);
  EXPECT_EQ(s.errors[1].line_index, 6U);
  EXPECT_NE(s.errors[1].message.find("non-uniform"), std::string::npos);
  EXPECT_EQ(s.argmax_lines, (std::vector<std::uint64_t>{2, 5, 7}));
  std::uint64_t histogram_total = 0;
  for (const auto& [count, classes] : s.histogram) histogram_total += classes;
  EXPECT_EQ(histogram_total + s.errors.size(), s.data_lines);
}

TEST(Sweep, UnreadableInput) {
  EXPECT_THROW(sweep_file("/nonexistent/ccells/input.txt", options(8, 5)), IoError);
}

TEST(SweepSummary, RecordsViolationsAndArgmax) {
  SweepSummary s;
  s.bound = 62;
  s.add(ClassReport{1, 40, 198, false, false});
  s.add(ClassReport{2, 62, 198, true, false});
  s.add(LineError{3, "bad"});
  s.add(ClassReport{4, 64, 198, false, true});
  s.add(ClassReport{5, 64, 198, false, true});
  EXPECT_EQ(s.data_lines, 5U);
  EXPECT_EQ(s.total_classes, 4U);
  EXPECT_EQ(s.max_count, 64U);
  EXPECT_EQ(s.argmax_lines, (std::vector<std::uint64_t>{4, 5}));
  EXPECT_EQ(s.violations, (std::vector<std::uint64_t>{4, 5}));
  EXPECT_EQ(s.histogram, (std::map<std::uint64_t, std::uint64_t>{{40, 1}, {62, 1}, {64, 2}}));
}

TEST(Sweep, RandomSignArraysStayWithinBound) {
  // Arbitrary sign arrays are mostly not chirotopes, but none found here exceeds the bound.
  std::mt19937_64 rng(404);
  const Pipeline pipeline(6, 3);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<std::int8_t> signs(20);
    for (auto& s : signs) s = rng() % 2 ? 1 : -1;
    const ClassReport report = pipeline.run(Chirotope(6, 3, signs));
    EXPECT_FALSE(report.exceeds_bound);
    EXPECT_LE(report.complete_cell_topes, report.tope_count);
  }
}

TEST(Sweep, JobsDoNotChangeSummary) {
  const auto dir = scratch_dir("jobs");
  write_lines(dir / "in.txt", testing::mixed_fixture(7, 4, 300, 9));
  SweepOptions o = options(7, 4);
  o.checkpoint_interval = 37;
  const std::string one = summary_to_json(sweep_file(dir / "in.txt", o));
  o.jobs = 3;
  EXPECT_EQ(summary_to_json(sweep_file(dir / "in.txt", o)), one);
  o.jobs = 0;
  EXPECT_EQ(summary_to_json(sweep_file(dir / "in.txt", o)), one);
}

TEST(Sweep, JsonRoundTrip) {
  const auto dir = scratch_dir("json");
  std::vector<std::string> lines = testing::mixed_fixture(6, 3, 40, 2);
  lines.push_back("+-");
  write_lines(dir / "in.txt", lines);
  const SweepSummary s = sweep_file(dir / "in.txt", options(6, 3));
  EXPECT_EQ(summary_from_json(summary_to_json(s)), s);
  EXPECT_THROW(summary_from_json("{}"), FormatError);
}

TEST(Sweep, PerClassTsv) {
  const auto dir = scratch_dir("tsv");
  write_lines(dir / "in.txt", testing::mixed_fixture(6, 3, 5, 1), "# five");
  SweepOptions o = options(6, 3);
  o.per_class_tsv = dir / "out.tsv";
  sweep_file(dir / "in.txt", o);
  const std::string tsv = read_file(dir / "out.tsv");
  EXPECT_EQ(tsv.rfind(class_report_tsv_header() + "\n", 0), 0U);
  EXPECT_EQ(std::count(tsv.begin(), tsv.end(), '\n'), 6);
  EXPECT_NE(tsv.find("\n2\t"), std::string::npos);
}

TEST(Resume, InterruptedRunsMatchUninterrupted) {
  const auto dir = scratch_dir("resume");
  write_lines(dir / "in.txt", testing::mixed_fixture(6, 4, 400, 17), "# fixture");
  SweepOptions o = options(6, 4);
  o.checkpoint_interval = 50;
  o.per_class_tsv = dir / "full.tsv";
  const SweepSummary full = sweep_file(dir / "in.txt", o);
  const std::string full_tsv = read_file(dir / "full.tsv");

  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 5; ++trial) {
    SweepOptions partial = o;
    partial.per_class_tsv = dir / "partial.tsv";
    partial.checkpoint = dir / "state.json";
    partial.stop_after = 1 + rng() % 399;
    partial.jobs = 1 + static_cast<unsigned>(rng() % 4);
    const SweepSummary first = sweep_file(dir / "in.txt", partial);
    EXPECT_FALSE(first.complete);
    EXPECT_EQ(first.data_lines, *partial.stop_after);
    SweepSummary resumed;
    do {
      resumed = resume(dir / "state.json", {2, 1 + rng() % 150, nullptr});
    } while (!resumed.complete);
    EXPECT_EQ(summary_to_json(resumed), summary_to_json(full));
    EXPECT_EQ(read_file(dir / "partial.tsv"), full_tsv);
  }
}

TEST(Resume, CompletedCheckpointIsReturnedAsIs) {
  const auto dir = scratch_dir("resume_done");
  write_lines(dir / "in.txt", testing::mixed_fixture(5, 3, 20, 3));
  SweepOptions o = options(5, 3);
  o.checkpoint = dir / "state.json";
  const SweepSummary s = sweep_file(dir / "in.txt", o);
  ASSERT_TRUE(s.complete);
  // Modifying the input no longer matters: nothing is reprocessed.
  write_lines(dir / "in.txt", {"garbage"});
  EXPECT_EQ(resume(dir / "state.json"), s);
}

TEST(Resume, ModifiedInputRejected) {
  const auto dir = scratch_dir("resume_digest");
  write_lines(dir / "in.txt", testing::mixed_fixture(5, 3, 20, 3));
  SweepOptions o = options(5, 3);
  o.checkpoint = dir / "state.json";
  o.stop_after = 5;
  sweep_file(dir / "in.txt", o);
  std::ofstream(dir / "in.txt", std::ios::app) << serialize_chirotope(alternating_chirotope(5, 3))
                                               << "\n";
  EXPECT_THROW(resume(dir / "state.json"), DigestMismatchError);
  EXPECT_THROW(resume(dir / "missing.json"), IoError);
}

TEST(Resume, CancelFlagCheckpoints) {
  const auto dir = scratch_dir("cancel");
  write_lines(dir / "in.txt", testing::mixed_fixture(5, 3, 30, 4));
  std::atomic<bool> cancel{true};
  SweepOptions o = options(5, 3);
  o.checkpoint = dir / "state.json";
  o.cancel = &cancel;
  const SweepSummary stopped = sweep_file(dir / "in.txt", o);
  EXPECT_FALSE(stopped.complete);
  EXPECT_EQ(stopped.data_lines, 0U);
  const SweepSummary finished = resume(dir / "state.json");
  EXPECT_TRUE(finished.complete);
  EXPECT_EQ(finished.total_classes, 30U);
}

}  // namespace
}  // namespace ccells
