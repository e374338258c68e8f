#include "histkit/cli.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <functional>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "histkit/equalize.hpp"
#include "histkit/error.hpp"
#include "histkit/histogram.hpp"
#include "histkit/pgm.hpp"
#include "histkit/segment.hpp"
#include "histkit/stats.hpp"
#include "histkit/synth.hpp"

namespace histkit::cli {
namespace {

namespace fs = std::filesystem;

// Failure with an explicit exit code, for conditions detected by the CLI itself.
struct UsageError {
  int code;
  std::string message;
};

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Io:
    case ErrorKind::MalformedHeader:
    case ErrorKind::TruncatedData:
    case ErrorKind::UnsupportedMaxval:
    case ErrorKind::PixelOutOfRange:
      return kIoError;
    case ErrorKind::ZeroMean:
    case ErrorKind::InvalidNumerator:
    case ErrorKind::NotBimodal:
    case ErrorKind::DegenerateField:
      return kAlgorithmFailure;
    default:
      return kInvalidParams;
  }
}

RegionOfInterest parse_roi(const std::string& text) {
  int v[4];
  const char* p = text.data();
  const char* end = text.data() + text.size();
  for (int i = 0; i < 4; ++i) {
    const auto [next, ec] = std::from_chars(p, end, v[i]);
    if (ec != std::errc{}) throw UsageError{kInvalidParams, "--roi expects x,y,w,h"};
    p = next;
    if (i < 3) {
      if (p == end || *p != ',') throw UsageError{kInvalidParams, "--roi expects x,y,w,h"};
      ++p;
    }
  }
  if (p != end) throw UsageError{kInvalidParams, "--roi expects x,y,w,h"};
  return {v[0], v[1], v[2], v[3]};
}

PgmEncoding encoding_for(bool ascii) { return ascii ? PgmEncoding::Ascii : PgmEncoding::Binary; }

// Output paths for single (input output) or batch (--out-dir, all positionals are inputs) use.
struct Job {
  std::string input;
  fs::path output;
};

std::vector<Job> plan_jobs(const std::vector<std::string>& positionals, const std::string& out_dir,
                           const char* extension) {
  std::vector<Job> jobs;
  if (!out_dir.empty()) {
    if (positionals.empty()) throw UsageError{kInvalidParams, "no input files"};
    for (const auto& in : positionals)
      jobs.push_back({in, fs::path(out_dir) / (fs::path(in).stem().string() + extension)});
  } else {
    if (positionals.size() != 2) throw UsageError{kInvalidParams, "expected INPUT OUTPUT (or --out-dir DIR INPUT...)"};
    jobs.push_back({positionals[0], positionals[1]});
  }
  return jobs;
}

// Runs `fn` per input, reporting failures and continuing; returns the highest exit code seen.
// Standard output of each item is buffered so failures leave nothing behind and order is kept.
int run_batch(const std::vector<Job>& jobs, bool label_outputs, std::ostream& out, std::ostream& err,
              const std::function<void(const Job&, std::ostream&)>& fn) {
  int worst = kOk;
  for (const Job& job : jobs) {
    std::ostringstream buffer;
    try {
      fn(job, buffer);
      if (label_outputs) out << "File\t" << job.input << '\n';
      out << buffer.str();
    } catch (const Error& e) {
      err << job.input << ": " << e.what() << '\n';
      worst = std::max(worst, exit_code(e.kind()));
    } catch (const UsageError& e) {
      err << job.input << ": " << e.message << '\n';
      worst = std::max(worst, e.code);
    }
  }
  return worst;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Grayscale histogram toolkit: statistics, equalization, segmentation, test patterns", "histkit"};
  app.require_subcommand(1);

  // stats
  auto* stats = app.add_subcommand("stats", "Region statistics report");
  std::vector<std::string> stats_inputs;
  std::string roi_text;
  std::optional<double> noise_std;
  std::string snr_kind_name = "range";
  stats->add_option("images", stats_inputs, "Input PGM files")->required();
  stats->add_option("--roi", roi_text, "Region of interest x,y,w,h");
  stats->add_option("--noise-std", noise_std, "Noise standard deviation for SNR");
  stats->add_option("--snr-kind", snr_kind_name, "range|mean|signal");

  // hist
  auto* hist = app.add_subcommand("hist", "Histogram CSV export");
  std::vector<std::string> hist_inputs;
  std::string hist_out;
  std::string hist_out_dir;
  bool want_normalized = false;
  bool want_cdf = false;
  hist->add_option("images", hist_inputs, "Input PGM files")->required();
  auto* hist_out_opt = hist->add_option("--out,-o", hist_out, "Output CSV (default: standard output)");
  hist->add_option("--out-dir", hist_out_dir, "Batch output directory")->excludes(hist_out_opt);
  auto* norm_flag = hist->add_flag("--normalized", want_normalized, "Emit probabilities");
  hist->add_flag("--cdf", want_cdf, "Emit cumulative distribution")->excludes(norm_flag);

  // eq
  auto* eq = app.add_subcommand("eq", "Histogram equalization");
  std::vector<std::string> eq_args;
  std::string eq_method = "he";
  std::string eq_out_dir;
  bool eq_ascii = false;
  eq->add_option("files", eq_args, "INPUT OUTPUT, or inputs with --out-dir")->required();
  eq->add_option("--method", eq_method, "he|bbhe");
  eq->add_option("--out-dir", eq_out_dir, "Batch output directory");
  eq->add_flag("--ascii", eq_ascii, "Write plain (P2) output");

  // segment
  auto* seg = app.add_subcommand("segment", "Histogram threshold segmentation");
  std::vector<std::string> seg_args;
  std::string seg_method = "valley";
  std::optional<int> seg_threshold;
  int seg_window = kDefaultSmoothWindow;
  std::string seg_out_dir;
  bool seg_ascii = false;
  seg->add_option("files", seg_args, "INPUT OUTPUT, or inputs with --out-dir")->required();
  seg->add_option("--method", seg_method, "valley|manual");
  seg->add_option("--threshold", seg_threshold, "Threshold for manual method");
  seg->add_option("--window", seg_window, "Smoothing window (odd)");
  seg->add_option("--out-dir", seg_out_dir, "Batch output directory");
  seg->add_flag("--ascii", seg_ascii, "Write plain (P2) output");

  // gen
  auto* gen = app.add_subcommand("gen", "Synthetic test pattern");
  std::string shape = "gaussian";
  int gen_size = 64;
  double gen_extent = 0.5;
  double param_a = 0.25;
  std::optional<double> param_b;
  double param_sigma = 0.1;
  int gen_levels = kDefaultLevels;
  std::string gen_out;
  bool gen_ascii = false;
  gen->add_option("--shape", shape, "rectangle|pyramid|pillbox|cone|gaussian|peak|expdecay");
  gen->add_option("--size", gen_size, "Samples per axis");
  gen->add_option("--extent", gen_extent, "Half-width of the sampled square");
  gen->add_option("--a", param_a, "Half-width, radius or decay rate");
  gen->add_option("--b", param_b, "Second half-width (rectangle, pyramid); defaults to a");
  gen->add_option("--sigma", param_sigma, "Gaussian sigma");
  gen->add_option("--levels", gen_levels, "Gray levels (2..256)");
  gen->add_option("--out,-o", gen_out, "Output PGM")->required();
  gen->add_flag("--ascii", gen_ascii, "Write plain (P2) output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "histkit: " << e.what() << '\n';
    return kInvalidParams;
  }

  try {
    if (stats->parsed()) {
      const auto kind = parse_snr_kind(snr_kind_name);
      if (!kind) throw UsageError{kUnknownName, "unknown SNR kind '" + snr_kind_name + "'"};
      const std::optional<RegionOfInterest> roi =
          roi_text.empty() ? std::nullopt : std::optional(parse_roi(roi_text));
      const std::optional<NoiseModel> noise = noise_std ? std::optional(NoiseModel(*noise_std)) : std::nullopt;
      std::vector<Job> jobs;
      for (const auto& in : stats_inputs) jobs.push_back({in, {}});
      return run_batch(jobs, jobs.size() > 1, out, err, [&](const Job& job, std::ostream& o) {
        const GrayImage image = read_pgm(job.input);
        const RegionStatistics whole = region_statistics(image, std::nullopt, noise, *kind);
        std::optional<RegionStatistics> part;
        if (roi) part = region_statistics(image, roi, noise, *kind);
        o << format_report(whole, part);
      });
    }

    if (hist->parsed()) {
      if (!hist_out.empty() && hist_inputs.size() > 1)
        throw UsageError{kInvalidParams, "--out takes a single input; use --out-dir for batches"};
      const char* extension = ".csv";
      std::vector<Job> jobs;
      for (const auto& in : hist_inputs) {
        fs::path target = hist_out;
        if (!hist_out_dir.empty()) target = fs::path(hist_out_dir) / (fs::path(in).stem().string() + extension);
        jobs.push_back({in, target});
      }
      const bool to_stdout = hist_out.empty() && hist_out_dir.empty();
      return run_batch(jobs, to_stdout && jobs.size() > 1, out, err, [&](const Job& job, std::ostream& o) {
        const Histogram h = compute_histogram(read_pgm(job.input));
        const std::string csv = want_cdf          ? cumulative_csv(cumulative(normalize(h)))
                                : want_normalized ? normalized_csv(normalize(h))
                                                  : histogram_csv(h);
        if (to_stdout)
          o << csv;
        else
          write_file_atomic(job.output, csv);
      });
    }

    if (eq->parsed()) {
      if (eq_method != "he" && eq_method != "bbhe") throw UsageError{kUnknownName, "unknown method '" + eq_method + "'"};
      const auto jobs = plan_jobs(eq_args, eq_out_dir, ".pgm");
      return run_batch(jobs, false, out, err, [&](const Job& job, std::ostream&) {
        const GrayImage image = read_pgm(job.input);
        write_pgm(job.output, eq_method == "he" ? equalize_he(image) : equalize_bbhe(image), encoding_for(eq_ascii));
      });
    }

    if (seg->parsed()) {
      if (seg_method != "valley" && seg_method != "manual")
        throw UsageError{kUnknownName, "unknown method '" + seg_method + "'"};
      if (seg_method == "manual" && !seg_threshold)
        throw UsageError{kInvalidParams, "manual method requires --threshold"};
      const auto jobs = plan_jobs(seg_args, seg_out_dir, ".pgm");
      return run_batch(jobs, jobs.size() > 1, out, err, [&](const Job& job, std::ostream& o) {
        const GrayImage image = read_pgm(job.input);
        const int t = seg_method == "manual" ? *seg_threshold
                                             : threshold_valley(compute_histogram(image), seg_window).threshold;
        write_pgm(job.output, apply_threshold(image, t).to_image(), encoding_for(seg_ascii));
        o << "threshold\t" << t << '\n';
      });
    }

    if (gen->parsed()) {
      const auto kind = parse_shape_kind(shape);
      if (!kind) throw UsageError{kUnknownName, "unknown shape '" + shape + "'"};
      if (gen_levels < 2 || gen_levels > 256) throw UsageError{kInvalidParams, "--levels must be in [2, 256]"};
      const ShapeSpec spec{*kind, param_a, param_b.value_or(param_a), param_sigma};
      return run_batch({{gen_out, gen_out}}, false, out, err, [&](const Job& job, std::ostream&) {
        write_pgm(job.output, quantize_field(sample_shape<double>(spec, gen_size, gen_extent), gen_levels),
                  encoding_for(gen_ascii));
      });
    }
  } catch (const UsageError& e) {
    err << "histkit: " << e.message << '\n';
    return e.code;
  } catch (const Error& e) {
    err << "histkit: " << e.what() << '\n';
    return exit_code(e.kind());
  }
  return kInvalidParams;
}

}  // namespace histkit::cli
