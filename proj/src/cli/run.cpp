#include "synviz/cli/run.hpp"

#include <CLI11.hpp>
#include <boost/asio/io_context.hpp>
#include <boost/asio/signal_set.hpp>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>

#include "synviz/analysis/csv.hpp"
#include "synviz/cli/engine_config.hpp"
#include "synviz/error.hpp"
#include "synviz/session/frame_file.hpp"
#include "synviz/session/pipeline.hpp"
#include "synviz/session/server.hpp"

namespace synviz::cli {

namespace {

std::unique_ptr<audio::AudioSource> open_input(const EngineConfig& cfg) {
  audio::SourceOptions opts{cfg.resample};
  if (cfg.stdin_channels) {
    return std::make_unique<audio::AudioSource>(audio::open_raw_stream(std::cin, *cfg.stdin_channels, opts));
  }
  return std::make_unique<audio::AudioSource>(audio::open_source(cfg.input, opts));
}

session::PipelineOptions pipeline_options(const EngineConfig& cfg) {
  session::PipelineOptions opts;
  opts.sim = cfg.sim;
  opts.source.allow_resample = cfg.resample;
  return opts;
}

int run_headless(const EngineConfig& cfg, std::ostream& out) {
  session::Pipeline pipeline(make_bundle(cfg), pipeline_options(cfg));
  pipeline.load(open_input(cfg));
  pipeline.set_playing(true);

  std::optional<session::FrameWriter> frames;
  if (!cfg.frames_out.empty()) frames.emplace(cfg.frames_out);
  std::ofstream csv;
  if (!cfg.csv_out.empty()) {
    csv.open(cfg.csv_out, std::ios::trunc);
    if (!csv) throw Error("cannot open CSV output: " + cfg.csv_out);
    analysis::write_csv_header(csv);
  }

  std::uint64_t count = 0;
  while (auto packet = pipeline.tick()) {
    if (frames) frames->write(*packet);
    if (csv.is_open()) analysis::write_csv_row(csv, pipeline.last_frame());
    ++count;
  }
  if (frames) frames->close();
  if (csv.is_open()) {
    csv.close();
    if (csv.fail()) throw Error("write failed: " + cfg.csv_out);
  }
  out << "processed " << count << " frames";
  if (frames) out << " -> " << cfg.frames_out;
  out << '\n';
  return 0;
}

int run_serve(const EngineConfig& cfg, std::ostream& out) {
  auto pipeline = std::make_unique<session::Pipeline>(make_bundle(cfg), pipeline_options(cfg));
  if (!cfg.input.empty() || cfg.stdin_channels) pipeline->load(open_input(cfg));

  session::ServerOptions opts;
  opts.port = cfg.port;
  session::Server server(std::move(pipeline), opts);
  server.start();
  out << "serving on ws://0.0.0.0:" << server.port() << " (send {\"type\":\"play\"} to start)" << std::endl;

  boost::asio::io_context signals_ctx;
  boost::asio::signal_set signals(signals_ctx, SIGINT, SIGTERM);
  signals.async_wait([&](const boost::system::error_code&, int) { server.stop(); });
  signals_ctx.run();
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"synviz: audio-driven particle visualization engine", "synviz"};
  app.set_help_flag("-h,--help", "Print this help and exit");

  std::optional<std::string> config_path;
  bool headless = false;
  bool serve = false;
  bool defaults_dump_flag = false;
  std::map<std::string, std::string> values;

  app.add_option("--config", config_path, "Config file of `key = value` lines")->type_name("PATH");
  app.add_flag("--headless", headless, "Process the whole input and exit");
  app.add_flag("--serve", serve, "Run the live WebSocket session server");
  app.add_flag("--defaults-dump", defaults_dump_flag, "Print the stock tuning values and exit");

  struct Flag {
    const char* key;
    const char* help;
    const char* type = "NUMBER";
  };
  static constexpr Flag kValueFlags[] = {
      {"input", "WAV file to read", "PATH"},
      {"stdin-pcm", "Read raw f32le PCM at 44100 Hz from stdin with this many channels", "CHANNELS"},
      {"frames-out", "Write frames to this .synframes file", "PATH"},
      {"csv-out", "Write per-hop analysis values to this CSV file", "PATH"},
      {"port", "Session server port (default 7878)", "PORT"},
      {"preset", "Preset name (default, oceanic, scriabin) or preset file", "NAME|PATH"},
      {"seed", "Simulation seed (default 0)", "INT"},
      {"particles", "Particle count (default 100000)", "INT"},
      {"window", "FFT window: rect or hann", "rect|hann"},
      {"num-points-to-average", "Bin averaging window in hops", "HOPS"},
      {"num-points-to-average-vol", "Volatility averaging window in hops", "HOPS"},
      {"trigger-val", "Trigger threshold, percent of max-trigger"},
      {"max-average", "Averaged bin value mapped to full color"},
      {"max-trigger", "Volatility treated as maximum"},
      {"color-sensitivity", "Global brightness multiplier"},
      {"range_max", "Raw bin value mapped to 1.0"},
      {"min-db", "Level mapped to 0% dynamics"},
      {"max-db", "Level mapped to 100% dynamics"},
      {"drag", "Velocity kept per step, (0, 1]"},
      {"base-force", "Attraction force scale"},
      {"target-walk-scale", "Gravity point wander speed scale"},
  };
  std::vector<std::pair<std::string, std::optional<std::string>>> flag_values(std::size(kValueFlags));
  for (std::size_t i = 0; i < std::size(kValueFlags); ++i) {
    flag_values[i].first = kValueFlags[i].key;
    app.add_option(std::string("--") + kValueFlags[i].key, flag_values[i].second, kValueFlags[i].help)
        ->type_name(kValueFlags[i].type);
  }
  bool resample = false;
  app.add_flag("--resample", resample, "Resample non-44100 Hz input instead of rejecting it");

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "synviz: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  if (defaults_dump_flag) {
    out << defaults_dump();
    return 0;
  }

  try {
    EngineConfig cfg;
    if (config_path) merge_config_file(cfg, *config_path);
    for (const auto& [key, value] : flag_values) {
      if (value) set_config_value(cfg, key, *value);
    }
    if (resample) cfg.resample = true;
    if (headless && serve) {
      err << "synviz: choose one of --headless and --serve\n\n" << app.help();
      return 2;
    }
    if (headless) cfg.mode = Mode::headless;
    if (serve) cfg.mode = Mode::serve;
    cfg.validate();

    if (cfg.mode == Mode::headless && cfg.input.empty() && !cfg.stdin_channels) {
      err << "synviz: headless mode needs --input or --stdin-pcm\n\n" << app.help();
      return 2;
    }
    return cfg.mode == Mode::serve ? run_serve(cfg, out) : run_headless(cfg, out);
  } catch (const ParseError& e) {
    err << "synviz: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "synviz: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace synviz::cli
