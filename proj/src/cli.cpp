#include "ramp/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <map>
#include <memory>

#include "ramp/dataset.hpp"
#include "ramp/generator.hpp"
#include "ramp/mine.hpp"
#include "ramp/oracle.hpp"
#include "ramp/output.hpp"

namespace ramp::cli {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

TransactionDatabase load(const std::string& path, std::istream& in) {
  if (path.empty()) return parse_transactions(in);
  std::ifstream file(path);
  if (!file) throw IoError("cannot open input file '" + path + "'");
  return parse_transactions(file);
}

// Owns the file when writing to a path; otherwise forwards to the caller's stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (path.empty()) return;
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
    if (!*file_) throw IoError("cannot open output file '" + path + "'");
    stream_ = file_.get();
  }
  std::ostream& stream() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

template <class Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    err << "error: malformed input: " << e.what() << '\n';
    return kParseError;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }
}

void write_sorted(std::vector<Pattern> patterns, const MineConfig& config, std::ostream& out) {
  std::sort(patterns.begin(), patterns.end());
  OutputBuffer buffer(out, config.buffer);
  for (const auto& p : patterns) buffer.write_itemset(p.items, p.support);
  buffer.close();
}

void print_stats(const MineStats& s, std::ostream& err) {
  err << "nodes=" << s.nodes << " word_and_ops=" << s.word_and_ops << " containment_ops=" << s.containment_ops
      << " pair_pruned=" << s.pair_pruned << " hut_pruned=" << s.hut_pruned << " fhut_skips=" << s.fhut_skips
      << " pep_promotions=" << s.pep_promotions << '\n';
}

const std::map<std::string, Mode> kModes{{"all", Mode::all}, {"max", Mode::max}, {"closed", Mode::closed}};

struct DataFlags {
  std::string mode;
  std::string min_sup;
  std::string input;
  std::string output;
};

void add_data_flags(CLI::App& cmd, DataFlags& flags) {
  cmd.add_option("--mode", flags.mode, "all, max or closed")->required()->check(CLI::IsMember({"all", "max", "closed"}));
  cmd.add_option("--min-sup", flags.min_sup, "absolute count, or fraction of transactions in (0,1]")->required();
  cmd.add_option("--input", flags.input, "transaction file (default: stdin)");
  cmd.add_option("--output", flags.output, "result file (default: stdout)");
}

struct MineFlags {
  bool no_pair_prune = false;
  bool no_pep = false;
  bool no_fhut = false;
  bool no_hutmfi = false;
  bool no_erfco = false;
  std::string projection = "pbr";
  std::string order = "support";
  std::string subsumption = "lind";
  bool sorted = false;
  bool stats = false;
  std::size_t buffer = OutputBuffer::kDefaultThreshold;
};

void add_mine_flags(CLI::App& cmd, MineFlags& flags) {
  cmd.add_flag("--no-pair-prune", flags.no_pair_prune, "disable 2-itemset pair pruning");
  cmd.add_flag("--no-pep", flags.no_pep, "disable parent equivalence pruning (max, closed)");
  cmd.add_flag("--no-fhut", flags.no_fhut, "disable frequent-HUT sibling skipping (max)");
  cmd.add_flag("--no-hutmfi", flags.no_hutmfi, "disable HUT lookups in the pattern store (max, closed)");
  cmd.add_flag("--no-erfco", flags.no_erfco, "count and project in separate passes");
  cmd.add_option("--projection", flags.projection, "pbr or full")->check(CLI::IsMember({"pbr", "full"}));
  cmd.add_option("--order", flags.order, "tail order: support or lex")->check(CLI::IsMember({"support", "lex"}));
  cmd.add_option("--subsumption", flags.subsumption, "lind or naive (max, closed)")
      ->check(CLI::IsMember({"lind", "naive"}));
  cmd.add_flag("--sorted", flags.sorted, "sort output by item sequence");
  cmd.add_flag("--stats", flags.stats, "print search counters to stderr");
  cmd.add_option("--buffer", flags.buffer, "itemsets per physical write")->check(CLI::PositiveNumber);
}

MineConfig make_config(const DataFlags& data, const MineFlags& flags) {
  MineConfig c;
  c.mode = kModes.at(data.mode);
  c.min_sup = parse_min_sup(data.min_sup);
  c.input = data.input;
  c.output = data.output;
  c.options.pair_prune = !flags.no_pair_prune;
  c.options.pep = !flags.no_pep;
  c.options.fhut = !flags.no_fhut;
  c.options.hutmfi = !flags.no_hutmfi;
  c.options.erfco = !flags.no_erfco;
  c.options.counting = flags.projection == "full" ? CountingStrategy::full_scan : CountingStrategy::pbr;
  c.options.order = flags.order == "lex" ? ItemOrder::lexicographic : ItemOrder::ascending_support;
  c.options.subsumption = flags.subsumption == "naive" ? Subsumption::naive : Subsumption::lind;
  c.sorted = flags.sorted;
  c.print_stats = flags.stats;
  c.buffer = flags.buffer;
  c.word_width = word_width_from_env();
  validate(c);
  return c;
}

int run_oracle(const DataFlags& data, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto start = Clock::now();
  const Mode mode = kModes.at(data.mode);
  const MinSupport threshold = parse_min_sup(data.min_sup);
  const auto db = load(data.input, in);
  const Support min_sup = threshold.resolve(db.size());
  const auto fi = oracle::apriori_all(db, min_sup);
  std::vector<Pattern> result = mode == Mode::all   ? oracle::to_patterns(fi)
                                : mode == Mode::max ? oracle::maximal_filter(fi)
                                                    : oracle::closed_filter(fi);
  Sink sink(data.output, out);
  MineConfig config;
  write_sorted(result, config, sink.stream());
  err << result.size() << " itemsets (oracle, mode=" << to_string(mode) << ", min_sup=" << min_sup << ") in "
      << seconds_since(start) << " s\n";
  return kOk;
}

int run_bench(const MineConfig& config, unsigned repeat, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto db = load(config.input, in);
  const Support min_sup = config.min_sup.resolve(db.size());
  std::vector<double> times;
  std::uint64_t count = 0;
  MineStats stats;
  for (unsigned r = 0; r < repeat; ++r) {
    stats = {};
    const auto start = Clock::now();
    count = mine(db, min_sup, config.mode, config.options, config.word_width,
                 [](std::span<const Item>, Support) {}, &stats);
    times.push_back(seconds_since(start));
  }
  std::sort(times.begin(), times.end());
  const double median =
      times.size() % 2 ? times[times.size() / 2] : (times[times.size() / 2 - 1] + times[times.size() / 2]) / 2;
  out << "mode=" << to_string(config.mode) << " min_sup=" << min_sup << " width=" << config.word_width
      << " itemsets=" << count << " runs=" << repeat << " median_s=" << median << " min_s=" << times.front()
      << " max_s=" << times.back() << '\n';
  if (config.print_stats) print_stats(stats, err);
  return kOk;
}

}  // namespace

Support MinSupport::resolve(std::size_t transaction_count) const {
  if (absolute) return *absolute;
  return absolute_min_sup(fraction, transaction_count);
}

MinSupport parse_min_sup(const std::string& text) {
  if (text.empty()) throw ConfigError("empty --min-sup");
  const bool is_fraction = text.find_first_of(".eE") != std::string::npos;
  std::size_t used = 0;
  MinSupport m;
  try {
    if (is_fraction) {
      const double f = std::stod(text, &used);
      if (used != text.size()) throw ConfigError("malformed --min-sup '" + text + "'");
      if (!(f > 0.0 && f <= 1.0)) throw ConfigError("fractional --min-sup must lie in (0, 1], got " + text);
      m.fraction = f;
    } else {
      if (text.front() == '-') throw ConfigError("--min-sup must be >= 1, got " + text);
      const unsigned long long v = std::stoull(text, &used);
      if (used != text.size()) throw ConfigError("malformed --min-sup '" + text + "'");
      if (v < 1) throw ConfigError("--min-sup must be >= 1, got " + text);
      if (v > std::numeric_limits<Support>::max()) throw ConfigError("--min-sup out of range: " + text);
      m.absolute = static_cast<Support>(v);
    }
  } catch (const std::logic_error&) {  // stod/stoull: invalid_argument, out_of_range
    throw ConfigError("malformed --min-sup '" + text + "'");
  }
  return m;
}

void validate(const MineConfig& c) {
  if (c.mode == Mode::all) {
    if (!c.options.pep) throw ConfigError("--no-pep applies only to max and closed modes");
    if (!c.options.fhut) throw ConfigError("--no-fhut applies only to max and closed modes");
    if (!c.options.hutmfi) throw ConfigError("--no-hutmfi applies only to max and closed modes");
    if (c.options.subsumption != Subsumption::lind)
      throw ConfigError("--subsumption applies only to max and closed modes");
  }
  if (c.buffer < 1) throw ConfigError("--buffer must be >= 1");
  if (!is_supported_width(c.word_width)) throw ConfigError("unsupported word width " + std::to_string(c.word_width));
  if (!c.min_sup.absolute && !(c.min_sup.fraction > 0.0 && c.min_sup.fraction <= 1.0))
    throw ConfigError("fractional min_sup must lie in (0, 1]");
}

unsigned word_width_from_env() {
  const char* value = std::getenv("RAMP_WORD_WIDTH");
  if (value == nullptr || *value == '\0') return 64;
  const std::string v(value);
  if (v == "64") return 64;
  if (v == "32") return 32;
  throw ConfigError("RAMP_WORD_WIDTH must be 32 or 64, got '" + v + "'");
}

int run_mine(const MineConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    validate(config);
    const auto start = Clock::now();
    const auto db = load(config.input, in);
    const Support min_sup = config.min_sup.resolve(db.size());
    Sink sink(config.output, out);

    MineStats stats;
    std::uint64_t count = 0;
    try {
      if (config.sorted) {
        auto result = mine_patterns(db, min_sup, config.mode, config.options, config.word_width, &stats);
        count = result.size();
        write_sorted(std::move(result), config, sink.stream());
      } else {
        OutputBuffer buffer(sink.stream(), config.buffer);
        count = mine(
            db, min_sup, config.mode, config.options, config.word_width,
            [&buffer](std::span<const Item> items, Support s) { buffer.write_itemset(items, s); }, &stats);
        buffer.close();
      }
    } catch (const IoError&) {
      err << "warning: output is incomplete\n";
      throw;
    }
    err << count << " itemsets (mode=" << to_string(config.mode) << ", min_sup=" << min_sup
        << ", width=" << config.word_width << ") in " << seconds_since(start) << " s\n";
    if (config.print_stats) print_stats(stats, err);
    return static_cast<int>(kOk);
  });
}

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"frequent itemset miner over vertical bit regions", "ramp"};
  app.require_subcommand(1);

  DataFlags mine_data;
  MineFlags mine_flags;
  auto* mine_cmd = app.add_subcommand("mine", "mine all, maximal or closed frequent itemsets");
  add_data_flags(*mine_cmd, mine_data);
  add_mine_flags(*mine_cmd, mine_flags);

  DataFlags oracle_data;
  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force reference result, sorted");
  add_data_flags(*oracle_cmd, oracle_data);

  GeneratorParams gen;
  std::string gen_output;
  auto* gen_cmd = app.add_subcommand("gen", "write a synthetic market-basket database");
  gen_cmd->add_option("--transactions", gen.transactions)->required();
  gen_cmd->add_option("--items", gen.items)->required();
  gen_cmd->add_option("--avg-len", gen.avg_len)->required();
  gen_cmd->add_option("--patterns", gen.patterns)->required();
  gen_cmd->add_option("--seed", gen.seed, "default 1");
  gen_cmd->add_option("--output", gen_output, "default: stdout");

  DataFlags bench_data;
  MineFlags bench_flags;
  unsigned repeat = 5;
  auto* bench_cmd = app.add_subcommand("bench", "run mine repeatedly and report the median wall time");
  add_data_flags(*bench_cmd, bench_data);
  add_mine_flags(*bench_cmd, bench_flags);
  bench_cmd->add_option("--repeat", repeat, "runs (default 5)")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? static_cast<int>(kOk) : static_cast<int>(kConfigError);
  }

  if (mine_cmd->parsed()) {
    MineConfig config;
    const int status = guarded(err, [&] {
      config = make_config(mine_data, mine_flags);
      return static_cast<int>(kOk);
    });
    return status != kOk ? status : run_mine(config, in, out, err);
  }
  if (oracle_cmd->parsed()) return guarded(err, [&] { return run_oracle(oracle_data, in, out, err); });
  if (gen_cmd->parsed()) {
    return guarded(err, [&] {
      const auto db = gen_synthetic(gen);
      Sink sink(gen_output, out);
      write_transactions(sink.stream(), db);
      sink.stream().flush();
      if (!sink.stream()) throw IoError("write failed");
      return static_cast<int>(kOk);
    });
  }
  return guarded(err, [&] {
    const auto config = make_config(bench_data, bench_flags);
    return run_bench(config, repeat, in, out, err);
  });
}

}  // namespace ramp::cli
