#include "ccells/sweep.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <iomanip>
#include <memory>
#include <sstream>
#include <thread>
#include <variant>

#include <openssl/evp.h>

#include "ccells/combinatorics.hpp"
#include "ccells/errors.hpp"
#include "ccells/topes.hpp"
#include "json.hpp"

namespace ccells {

namespace {

using Json = nlohmann::ordered_json;

// Work items handed to a worker at a time.
constexpr std::size_t kGrain = 64;

std::uint64_t bound_for(int n, int r) {
  if (r < 1 || n < r + 1) {
    throw ParameterError("sweep needs n >= r + 1 >= 2, got n=" + std::to_string(n) +
                         " r=" + std::to_string(r));
  }
  return 2 * cyclic_complete_cells(BoundParams{r - 1, n});
}

struct DataLine {
  std::uint64_t line_index;
  std::string text;
};

using Outcome = std::variant<ClassReport, LineError>;

Outcome evaluate(const Pipeline& pipeline, const DataLine& line) {
  try {
    const Chirotope chi =
        parse_chirotope(line.text, pipeline.elements(), pipeline.rank(), pipeline.order());
    return pipeline.run(chi, line.line_index);
  } catch (const Error& e) {
    return LineError{line.line_index, e.what()};
  }
}

std::vector<Outcome> evaluate_batch(const Pipeline& pipeline, const std::vector<DataLine>& batch,
                                    unsigned jobs) {
  std::vector<Outcome> out(batch.size());
  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (;;) {
      const std::size_t start = next.fetch_add(kGrain);
      if (start >= batch.size()) return;
      const std::size_t stop = std::min(batch.size(), start + kGrain);
      for (std::size_t i = start; i < stop; ++i) out[i] = evaluate(pipeline, batch[i]);
    }
  };
  const std::size_t useful = (batch.size() + kGrain - 1) / kGrain;
  const unsigned threads = static_cast<unsigned>(std::min<std::size_t>(jobs, useful));
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  }
  return out;
}

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

unsigned resolve_jobs(unsigned jobs) {
  if (jobs != 0) return jobs;
  return std::max(1U, std::thread::hardware_concurrency());
}

Json summary_json(const SweepSummary& s) {
  Json j;
  j["elements"] = s.elements;
  j["rank"] = s.rank;
  j["order"] = std::string(to_string(s.order));
  j["input_sha256"] = s.input_sha256;
  j["complete"] = s.complete;
  j["data_lines"] = s.data_lines;
  j["total_classes"] = s.total_classes;
  j["error_lines"] = s.errors.size();
  j["bound"] = {{"complete_cell_topes", s.bound}, {"projective_cells", s.bound / 2}};
  j["max"] = {{"complete_cell_topes", s.max_count}, {"projective_cells", s.max_count / 2}};
  j["argmax_lines"] = s.argmax_lines;
  Json histogram = Json::array();
  for (const auto& [count, classes] : s.histogram) {
    histogram.push_back(
        {{"complete_cell_topes", count}, {"projective_cells", count / 2}, {"classes", classes}});
  }
  j["histogram"] = std::move(histogram);
  j["violations"] = s.violations;
  Json errors = Json::array();
  for (const LineError& e : s.errors) errors.push_back({{"line", e.line_index}, {"message", e.message}});
  j["errors"] = std::move(errors);
  return j;
}

SweepSummary summary_from(const Json& j) {
  SweepSummary s;
  s.elements = j.at("elements").get<int>();
  s.rank = j.at("rank").get<int>();
  s.order = parse_subset_order(j.at("order").get<std::string>());
  s.input_sha256 = j.at("input_sha256").get<std::string>();
  s.complete = j.at("complete").get<bool>();
  s.data_lines = j.at("data_lines").get<std::uint64_t>();
  s.total_classes = j.at("total_classes").get<std::uint64_t>();
  s.bound = j.at("bound").at("complete_cell_topes").get<std::uint64_t>();
  s.max_count = j.at("max").at("complete_cell_topes").get<std::uint64_t>();
  s.argmax_lines = j.at("argmax_lines").get<std::vector<std::uint64_t>>();
  for (const Json& h : j.at("histogram")) {
    s.histogram[h.at("complete_cell_topes").get<std::uint64_t>()] =
        h.at("classes").get<std::uint64_t>();
  }
  s.violations = j.at("violations").get<std::vector<std::uint64_t>>();
  for (const Json& e : j.at("errors")) {
    s.errors.push_back({e.at("line").get<std::uint64_t>(), e.at("message").get<std::string>()});
  }
  return s;
}

struct RunControl {
  unsigned jobs = 1;
  std::optional<std::uint64_t> stop_after;
  const std::atomic<bool>* cancel = nullptr;
  std::optional<std::filesystem::path> checkpoint_path;
};

// Processes the input from checkpoint.byte_offset on, updating `checkpoint` in place.
void run(Checkpoint& checkpoint, const RunControl& control) {
  SweepSummary& state = checkpoint.state;
  const Pipeline pipeline(state.elements, state.rank, state.order);
  const unsigned jobs = resolve_jobs(control.jobs);
  const std::uint64_t interval = std::max<std::uint64_t>(1, checkpoint.checkpoint_interval);

  std::ifstream in(checkpoint.input, std::ios::binary);
  if (!in) throw IoError("cannot open input " + checkpoint.input.string());
  in.seekg(static_cast<std::streamoff>(checkpoint.byte_offset));
  if (!in) throw IoError("cannot seek in input " + checkpoint.input.string());

  std::ofstream tsv;
  if (checkpoint.per_class_tsv) {
    tsv.open(*checkpoint.per_class_tsv, std::ios::binary | std::ios::app);
    if (!tsv) throw IoError("cannot open " + checkpoint.per_class_tsv->string());
  }

  const auto save = [&] {
    if (tsv.is_open()) {
      tsv.flush();
      checkpoint.tsv_bytes = std::filesystem::file_size(*checkpoint.per_class_tsv);
    }
    if (control.checkpoint_path) write_checkpoint(*control.checkpoint_path, checkpoint);
  };

  std::uint64_t done_here = 0;
  std::string raw;
  for (;;) {
    if (control.cancel != nullptr && control.cancel->load()) break;
    std::uint64_t limit = interval;
    if (control.stop_after) {
      if (done_here >= *control.stop_after) break;
      limit = std::min(limit, *control.stop_after - done_here);
    }

    std::vector<DataLine> batch;
    bool eof = false;
    while (batch.size() < limit) {
      if (!std::getline(in, raw)) {
        eof = true;
        break;
      }
      checkpoint.byte_offset += raw.size() + (in.eof() ? 0 : 1);
      ++checkpoint.physical_lines;
      const std::string_view text = trim(raw);
      if (text.empty() || text.front() == '#') continue;
      batch.push_back({checkpoint.physical_lines, std::string(text)});
    }

    for (const Outcome& outcome : evaluate_batch(pipeline, batch, jobs)) {
      if (const auto* report = std::get_if<ClassReport>(&outcome)) {
        state.add(*report);
        if (tsv.is_open()) tsv << class_report_tsv_row(*report) << '\n';
      } else {
        state.add(std::get<LineError>(outcome));
      }
    }
    done_here += batch.size();
    if (eof) {
      state.complete = true;
      save();
      return;
    }
    save();
  }
  save();
}

}  // namespace

Pipeline::Pipeline(int n, int r, SubsetOrder order)
    : bound_(bound_for(n, r)), extractor_(n, r, order) {}

ClassReport Pipeline::run(const Chirotope& chi, std::uint64_t line_index) const {
  const CircuitSet circuits = extractor_(chi);
  const TopeSet topes = enumerate_topes(circuits);
  ClassReport report;
  report.line_index = line_index;
  report.tope_count = topes.size();
  report.complete_cell_topes = count_complete_cell_topes(topes);
  report.attains_bound = report.complete_cell_topes == bound_;
  report.exceeds_bound = report.complete_cell_topes > bound_;
  return report;
}

ClassReport process_one(const Chirotope& chi) {
  return Pipeline(chi.elements(), chi.rank(), chi.order()).run(chi);
}

void SweepSummary::add(const ClassReport& report) {
  ++data_lines;
  ++total_classes;
  ++histogram[report.complete_cell_topes];
  if (argmax_lines.empty() || report.complete_cell_topes > max_count) {
    max_count = report.complete_cell_topes;
    argmax_lines.clear();
  }
  if (report.complete_cell_topes == max_count) argmax_lines.push_back(report.line_index);
  if (report.complete_cell_topes > bound) violations.push_back(report.line_index);
}

void SweepSummary::add(LineError error) {
  ++data_lines;
  errors.push_back(std::move(error));
}

std::string summary_to_json(const SweepSummary& summary) {
  return summary_json(summary).dump(2) + "\n";
}

SweepSummary summary_from_json(std::string_view text) {
  try {
    return summary_from(Json::parse(text));
  } catch (const Json::exception& e) {
    throw FormatError(std::string("malformed sweep summary: ") + e.what());
  }
}

std::string class_report_tsv_header() {
  return "line\tcomplete_cell_topes\tprojective_cells\ttope_count\tattains_bound\texceeds_bound";
}

std::string class_report_tsv_row(const ClassReport& r) {
  std::ostringstream os;
  os << r.line_index << '\t' << r.complete_cell_topes << '\t' << r.projective_cells() << '\t'
     << r.tope_count << '\t' << (r.attains_bound ? 1 : 0) << '\t' << (r.exceeds_bound ? 1 : 0);
  return os.str();
}

std::string file_sha256(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1) {
    throw IoError("cannot initialize SHA-256");
  }
  std::array<char, 1 << 16> buf{};
  while (in) {
    in.read(buf.data(), buf.size());
    if (in.gcount() > 0) EVP_DigestUpdate(ctx.get(), buf.data(), static_cast<std::size_t>(in.gcount()));
  }
  if (in.bad()) throw IoError("error reading " + path.string());
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx.get(), digest.data(), &len);
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) {
    os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return os.str();
}

Checkpoint read_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open checkpoint " + path.string());
  try {
    const Json j = Json::parse(in);
    if (j.at("version").get<int>() != 1) throw FormatError("unsupported checkpoint version");
    Checkpoint c;
    c.input = j.at("input").get<std::string>();
    c.checkpoint_interval = j.at("checkpoint_interval").get<std::uint64_t>();
    c.byte_offset = j.at("byte_offset").get<std::uint64_t>();
    c.physical_lines = j.at("physical_lines").get<std::uint64_t>();
    if (!j.at("per_class_tsv").is_null()) c.per_class_tsv = j.at("per_class_tsv").get<std::string>();
    c.tsv_bytes = j.at("tsv_bytes").get<std::uint64_t>();
    c.state = summary_from(j.at("state"));
    return c;
  } catch (const Json::exception& e) {
    throw FormatError("malformed checkpoint " + path.string() + ": " + e.what());
  }
}

void write_checkpoint(const std::filesystem::path& path, const Checkpoint& c) {
  Json j;
  j["version"] = 1;
  j["input"] = c.input.string();
  j["checkpoint_interval"] = c.checkpoint_interval;
  j["byte_offset"] = c.byte_offset;
  j["physical_lines"] = c.physical_lines;
  j["per_class_tsv"] = c.per_class_tsv ? Json(c.per_class_tsv->string()) : Json(nullptr);
  j["tsv_bytes"] = c.tsv_bytes;
  j["state"] = summary_json(c.state);

  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write checkpoint " + tmp.string());
    out << j.dump(2) << '\n';
    if (!out) throw IoError("cannot write checkpoint " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

SweepSummary sweep_file(const std::filesystem::path& input, const SweepOptions& options) {
  Checkpoint c;
  c.input = std::filesystem::absolute(input);
  c.checkpoint_interval = options.checkpoint_interval;
  c.per_class_tsv = options.per_class_tsv;
  c.state.elements = options.elements;
  c.state.rank = options.rank;
  c.state.order = options.order;
  c.state.bound = bound_for(options.elements, options.rank);
  c.state.input_sha256 = file_sha256(input);

  if (c.per_class_tsv) {
    std::ofstream tsv(*c.per_class_tsv, std::ios::binary | std::ios::trunc);
    if (!tsv) throw IoError("cannot write " + c.per_class_tsv->string());
    tsv << class_report_tsv_header() << '\n';
  }
  run(c, RunControl{options.jobs, options.stop_after, options.cancel, options.checkpoint});
  return c.state;
}

SweepSummary resume(const std::filesystem::path& checkpoint, const ResumeOptions& options) {
  Checkpoint c = read_checkpoint(checkpoint);
  if (c.state.complete) return c.state;
  const std::string digest = file_sha256(c.input);
  if (digest != c.state.input_sha256) {
    throw DigestMismatchError("input " + c.input.string() +
                              " changed since the checkpoint was written");
  }
  if (c.per_class_tsv) {
    if (!std::filesystem::exists(*c.per_class_tsv) ||
        std::filesystem::file_size(*c.per_class_tsv) < c.tsv_bytes) {
      throw IoError("per-class report " + c.per_class_tsv->string() +
                    " is shorter than the checkpoint records");
    }
    std::filesystem::resize_file(*c.per_class_tsv, c.tsv_bytes);
  }
  run(c, RunControl{options.jobs, options.stop_after, options.cancel, checkpoint});
  return c.state;
}

}  // namespace ccells
