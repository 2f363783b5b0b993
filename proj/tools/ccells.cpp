// Command line driver: sweep chirotope files, resume sweeps, generate and check lines.

#include <atomic>
#include <csignal>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ccells/chirotope.hpp"
#include "ccells/errors.hpp"
#include "ccells/sweep.hpp"

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitError = 2;
constexpr int kExitInterrupted = 3;

std::atomic<bool> g_stop{false};

extern "C" void on_signal(int) { g_stop.store(true); }

int report(const ccells::SweepSummary& summary, const std::optional<std::string>& json_path) {
  const std::string json = ccells::summary_to_json(summary);
  if (json_path) {
    std::ofstream out(*json_path, std::ios::binary | std::ios::trunc);
    if (!out) throw ccells::IoError("cannot write " + *json_path);
    out << json;
  } else {
    std::cout << json;
  }
  std::cerr << "classes " << summary.total_classes << ", errors " << summary.errors.size()
            << ", max " << summary.max_count << " (bound " << summary.bound << "), argmax "
            << summary.argmax_lines.size() << ", violations " << summary.violations.size()
            << (summary.complete ? "" : ", INCOMPLETE") << '\n';
  if (!summary.violations.empty()) return kExitViolation;
  return summary.complete ? 0 : kExitInterrupted;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Complete-cell enumeration for uniform oriented matroids"};
  app.require_subcommand(1);

  int rank = 0;
  int elements = 0;
  std::string order_name = "lex";
  std::string input;
  unsigned jobs = 1;
  std::optional<std::string> checkpoint;
  std::uint64_t checkpoint_interval = 10000;
  std::optional<std::string> tsv_path;
  std::optional<std::string> json_path;
  std::optional<std::uint64_t> stop_after;
  bool fresh = false;

  const auto add_shape = [&](CLI::App* cmd) {
    cmd->add_option("--rank,-r", rank, "Rank r of the oriented matroid")->required();
    cmd->add_option("--elements,-n", elements, "Ground set size n")->required();
    cmd->add_option("--order", order_name, "Basis order of chirotope strings")
        ->check(CLI::IsMember({"lex", "colex"}));
  };

  CLI::App* sweep = app.add_subcommand("sweep", "Run the pipeline over every line of a file");
  add_shape(sweep);
  sweep->add_option("--input,-i", input, "Chirotope file, one per line")->required();
  sweep->add_option("--jobs,-j", jobs, "Worker threads (0 = all cores)");
  sweep->add_option("--checkpoint", checkpoint,
                    "Checkpoint file; an existing one is resumed unless --fresh");
  sweep->add_option("--checkpoint-interval", checkpoint_interval,
                    "Data lines between checkpoints")->check(CLI::PositiveNumber);
  sweep->add_option("--per-class-tsv", tsv_path, "Write one report row per class");
  sweep->add_option("--summary-json", json_path, "Write the summary here instead of stdout");
  sweep->add_option("--stop-after", stop_after, "Checkpoint and stop after this many lines");
  sweep->add_flag("--fresh", fresh, "Ignore an existing checkpoint");

  CLI::App* resume_cmd = app.add_subcommand("resume", "Continue an interrupted sweep");
  resume_cmd->add_option("--checkpoint", checkpoint, "Checkpoint file")->required();
  resume_cmd->add_option("--jobs,-j", jobs, "Worker threads (0 = all cores)");
  resume_cmd->add_option("--summary-json", json_path, "Write the summary here instead of stdout");
  resume_cmd->add_option("--stop-after", stop_after, "Checkpoint and stop after this many lines");

  bool alternating = false;
  std::string reorient_list;
  CLI::App* generate = app.add_subcommand("generate", "Print a chirotope line");
  add_shape(generate);
  generate->add_flag("--alternating", alternating, "All sorted bases positive")->required();
  generate->add_option("--reorient", reorient_list, "Comma-separated elements to reorient");

  CLI::App* check = app.add_subcommand("check", "Print a class report for every line");
  add_shape(check);
  check->add_option("--input,-i", input, "Chirotope file, one per line")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    const ccells::SubsetOrder order = ccells::parse_subset_order(order_name);

    if (*generate) {
      ccells::Chirotope chi = ccells::alternating_chirotope(elements, rank, order);
      if (!reorient_list.empty()) {
        std::vector<int> flipped;
        std::stringstream ss(reorient_list);
        for (std::string item; std::getline(ss, item, ',');) flipped.push_back(std::stoi(item));
        chi = ccells::reorient(chi, ccells::ElementSet::of(flipped));
      }
      std::cout << ccells::serialize_chirotope(chi) << '\n';
      return 0;
    }

    if (*check) {
      const ccells::Pipeline pipeline(elements, rank, order);
      std::ifstream in(input, std::ios::binary);
      if (!in) throw ccells::IoError("cannot open input " + input);
      std::cout << ccells::class_report_tsv_header() << '\n';
      bool violation = false;
      bool bad_line = false;
      std::uint64_t line_no = 0;
      for (std::string line; std::getline(in, line);) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        try {
          const ccells::ClassReport r =
              pipeline.run(ccells::parse_chirotope(line, elements, rank, order), line_no);
          violation = violation || r.exceeds_bound;
          std::cout << ccells::class_report_tsv_row(r) << '\n';
        } catch (const ccells::Error& e) {
          bad_line = true;
          std::cerr << "line " << line_no << ": " << e.what() << '\n';
        }
      }
      if (violation) return kExitViolation;
      return bad_line ? kExitError : 0;
    }

    std::signal(SIGINT, on_signal);
    std::signal(SIGTERM, on_signal);

    if (*resume_cmd) {
      return report(ccells::resume(*checkpoint, {jobs, stop_after, &g_stop}), json_path);
    }

    if (checkpoint && !fresh && std::filesystem::exists(*checkpoint)) {
      const ccells::Checkpoint saved = ccells::read_checkpoint(*checkpoint);
      if (saved.state.elements != elements || saved.state.rank != rank ||
          saved.state.order != order ||
          std::filesystem::absolute(input) != saved.input) {
        throw ccells::ParameterError("checkpoint " + *checkpoint +
                                     " belongs to a different sweep; use --fresh to overwrite");
      }
      std::cerr << "resuming from " << *checkpoint << '\n';
      return report(ccells::resume(*checkpoint, {jobs, stop_after, &g_stop}), json_path);
    }

    ccells::SweepOptions options;
    options.elements = elements;
    options.rank = rank;
    options.order = order;
    options.jobs = jobs;
    if (checkpoint) options.checkpoint = *checkpoint;
    options.checkpoint_interval = checkpoint_interval;
    if (tsv_path) options.per_class_tsv = *tsv_path;
    options.stop_after = stop_after;
    options.cancel = &g_stop;
    return report(ccells::sweep_file(input, options), json_path);
  } catch (const ccells::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
}
