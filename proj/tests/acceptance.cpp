// Acceptance checks. Prints one PASS/FAIL line per criterion; with an
// argument N runs only criterion N. Exit status is nonzero if any failed.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <ctime>

#include "oracles.hpp"
#include "synviz/analysis/analyzer.hpp"
#include "synviz/analysis/bins.hpp"
#include "synviz/analysis/spectrum.hpp"
#include "synviz/analysis/windows.hpp"
#include "synviz/audio/wav.hpp"
#include "synviz/cli/run.hpp"
#include "synviz/engine/group_params.hpp"
#include "synviz/engine/particle_engine.hpp"
#include "synviz/palette/preset.hpp"
#include "synviz/session/frame_packet.hpp"
#include "synviz/session/pipeline.hpp"

using namespace synviz;
using clock_type = std::chrono::steady_clock;

namespace {

// Tolerances and limits.
constexpr double kFftRelTol = 1e-6;
constexpr double kFftSeconds = 5.0;
constexpr double kBinTol = 1e-6;
constexpr double kSettledVol = 1e-6;
constexpr double kSilenceMeanDist = 0.01;  // measured 0.0059 after 10 s
constexpr double kSilenceMaxDist = 0.05;   // measured 0.027 after 10 s
constexpr double kHopBudgetMs = 1000.0 * 1024.0 / 44100.0;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double seconds_since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

analysis::AnalysisFrame random_frame(std::mt19937_64& gen) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  analysis::AnalysisFrame f;
  for (std::size_t g = 0; g < 12; ++g) {
    f.bins[g] = unit(gen);
    f.avg_bins[g] = unit(gen);
    f.volatility[g] = std::abs(f.bins[g] - f.avg_bins[g]);
    f.avg_volatility[g] = unit(gen);
    f.triggers[g] = unit(gen) < 0.3;
  }
  return f;
}

// Ten seconds of a rhythmic two-voice signal with a melody stepping through
// the bins, so triggers, averages and target motion are all exercised.
std::vector<double> music_like(double seconds) {
  const auto n = static_cast<std::size_t>(seconds * 44100.0);
  std::vector<double> s(n);
  const double pi = 3.141592653589793;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / 44100.0;
    const int beat = static_cast<int>(t * 4.0);
    const double env = std::exp(-8.0 * (t * 4.0 - beat));
    const double melody = 110.0 * std::pow(2.0, (beat % 24) / 4.0);
    s[i] = 0.45 * env * std::sin(2 * pi * melody * t) + 0.15 * std::sin(2 * pi * 55.0 * t) +
           0.05 * std::sin(2 * pi * 6000.0 * t) * (beat % 2);
  }
  return s;
}

Outcome fft_oracle() {
  std::mt19937_64 gen(1);
  const auto t0 = clock_type::now();
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto hop = testing::random_hop(gen);
    const auto oracle = testing::naive_folded_magnitudes({hop.samples.begin(), hop.samples.end()});
    const auto s = analysis::fft_magnitude(hop);
    double peak = 0.0;
    for (double m : oracle) peak = std::max(peak, m);
    for (std::size_t k = 0; k < oracle.size(); ++k) {
      worst = std::max(worst, std::abs(s.magnitudes[k] - oracle[k]) / peak);
    }
  }
  const double secs = seconds_since(t0);
  return {worst < kFftRelTol && secs < kFftSeconds,
          fmt("max rel err %.2e (tol %.0e) over 100 hops in %.2f s (limit %.0f s)", worst, kFftRelTol, secs,
              kFftSeconds)};
}

Outcome bin_constants() {
  bool ok = true;
  std::size_t next = 0;
  for (const auto& r : analysis::kBinPartition) {
    ok &= r.first == next;
    next = r.last + 1;
  }
  ok &= next == analysis::kSpectrumSize;
  const auto& g0 = analysis::kBinPartition[0];
  ok &= g0.first == 0 && g0.last == 1;
  const double hi = g0.high_hz();
  ok &= std::abs(hi - 86.13) < 0.005;

  double worst_in = 0.0, worst_out = 0.0;
  for (std::size_t g = 0; g < 12; ++g) {
    // Group 0's center is index 1; index 0 is DC, which folding doubles.
    const std::size_t k = analysis::kBinPartition[g].center();
    const auto raw = analysis::raw_bins(analysis::fft_magnitude(testing::hop_from(testing::cosine(k, 1.0, 1024))));
    for (std::size_t j = 0; j < 12; ++j) {
      if (j == g) worst_in = std::max(worst_in, std::abs(raw[j] - 1.0));
      else worst_out = std::max(worst_out, raw[j]);
    }
  }
  ok &= worst_in <= kBinTol && worst_out < kBinTol;
  return {ok, fmt("partition covers 0..511, group 0 = {0,1} up to %.2f Hz; tone raw |err| %.1e, leakage %.1e "
                  "(tol %.0e)",
                  hi, worst_in, worst_out, kBinTol)};
}

Outcome volatility_timing() {
  const double d = analysis::window_duration_seconds(8);
  const double rounded = std::round(d * 1000.0) / 1000.0;
  return {std::abs(d - 8.0 * 1024.0 / 44100.0) < 1e-15 && rounded == 0.186,
          fmt("n_vol 8 spans %.5f s (rounds to %.3f, expected 0.186)", d, rounded)};
}

Outcome trigger_behavior() {
  const analysis::AnalysisConfig cfg;
  analysis::Analyzer a(cfg);
  for (std::uint64_t i = 0; i < 8; ++i) a.analyze(testing::hop_from({}, i));
  const std::size_t bin = 5;
  const auto tone = testing::cosine(analysis::kBinPartition[bin].center(), 1.0, 1024);
  const auto first = a.analyze(testing::hop_from(tone, 8));
  bool ok = cfg.trigger_threshold() == 0.105 && first.triggers[bin] && first.triggers.count() == 1;
  std::size_t cleared_after = 0;
  double last_vol = 1.0;
  for (std::size_t h = 2; h <= 2 * cfg.n_avg; ++h) {
    const auto f = a.analyze(testing::hop_from(tone, 7 + h));
    double maxv = 0.0;
    for (double v : f.volatility) maxv = std::max(maxv, v);
    if (!cleared_after && maxv < kSettledVol && f.triggers.none()) {
      cleared_after = h;
      last_vol = maxv;
    }
  }
  ok &= cleared_after != 0 && cleared_after <= cfg.n_avg;
  return {ok, fmt("threshold %.3f; step fires bin %zu on first hop (vol %.3f); steady tone clears at hop %zu "
                  "(vol %.1e, limit %zu hops)",
                  cfg.trigger_threshold(), bin, first.volatility[bin], cleared_after, last_vol, cfg.n_avg)};
}

Outcome silence() {
  testing::TempDir dir;
  audio::write_wav(dir / "silence.wav", std::vector<double>(441000, 0.0), 1, 44100);
  const session::PipelineOptions opts;
  session::Pipeline p({{}, palette::builtin_preset("default")}, opts);
  p.load(std::make_unique<audio::AudioSource>(audio::open_source(dir / "silence.wav")));
  p.set_playing(true);

  const double force = 0.5 * opts.sim.base_force;
  const double vbound = force * opts.sim.dt * opts.sim.drag / (1.0 - opts.sim.drag);
  bool analysis_zero = true, black = true, bounded = true, targets_fixed = true;
  double first_mean = -1.0, mean = 0.0, maxd = 0.0, maxv = 0.0;
  std::size_t frames = 0;
  const auto start_targets = p.engine().targets();
  while (auto f = p.tick()) {
    ++frames;
    const auto& fr = p.last_frame();
    for (std::size_t g = 0; g < 12; ++g) {
      analysis_zero &= fr.bins[g] == 0 && fr.avg_bins[g] == 0 && fr.volatility[g] == 0 && fr.avg_volatility[g] == 0;
    }
    analysis_zero &= fr.triggers.none() && fr.dynamics_percent == 0 && f->trigger_mask == 0;
    for (std::size_t i = 0; i < f->particle_count(); ++i) {
      const float* q = &f->particles[i * session::kParticleFloats];
      black &= q[6] == 0 && q[7] == 0 && q[8] == 0;
    }
    targets_fixed &= p.engine().targets() == start_targets;
    const auto& st = p.engine().state();
    mean = 0.0;
    maxd = 0.0;
    for (std::size_t i = 0; i < st.size(); ++i) {
      const double d = (st.positions[i] - start_targets[st.group_of(i)]).norm();
      mean += d;
      maxd = std::max(maxd, d);
      maxv = std::max(maxv, st.velocities[i].norm());
    }
    mean /= static_cast<double>(st.size());
    if (first_mean < 0) first_mean = mean;
  }
  bounded = maxv <= vbound;
  const bool converged = mean < kSilenceMeanDist && maxd < kSilenceMaxDist;
  return {frames == 430 && analysis_zero && black && targets_fixed && bounded && converged,
          fmt("%zu frames all-zero analysis=%s black=%s; speed max %.3f <= %.3f; distance to gravity point "
              "mean %.3f -> %.4f (< %.2f), max %.4f (< %.2f)",
              frames, analysis_zero ? "yes" : "no", black ? "yes" : "no", maxv, vbound, first_mean, mean,
              kSilenceMeanDist, maxd, kSilenceMaxDist)};
}

Outcome emphasis_law() {
  std::mt19937_64 gen(6);
  const auto look = palette::builtin_preset("default");
  std::size_t violations = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    auto frame = random_frame(gen);
    const std::size_t j = gen() % 12;
    auto off = frame, on = frame;
    off.triggers[j] = false;
    on.triggers[j] = true;
    engine::Rng r1(trial), r2(trial);
    const auto a = engine::derive_group_params(off, look, {}, {}, engine::initial_targets(), r1);
    const auto b = engine::derive_group_params(on, look, {}, {}, engine::initial_targets(), r2);
    for (std::size_t g = 0; g < 12; ++g) {
      if (g == j) {
        violations += b.groups[g].u_force_amt != 2.0 * a.groups[g].u_force_amt;
      } else {
        violations += !(b.groups[g] == a.groups[g]);
      }
    }
  }
  return {violations == 0, fmt("1000 randomized frames, %zu violations (force exactly doubled, other groups "
                               "untouched)",
                               violations)};
}

Outcome inventory() {
  const auto names = engine::declared_inputs();
  const std::set<std::string> unique(names.begin(), names.end());
  const std::size_t expected = 3 + 12 * 6 + 1;
  return {names.size() == expected && unique.size() == expected,
          fmt("%zu declared inputs (%zu distinct), expected 3 + 12*6 + 1 = %zu", names.size(), unique.size(),
              expected)};
}

Outcome determinism() {
  testing::TempDir dir;
  audio::write_wav(dir / "song.wav", music_like(10.0), 1, 44100);
  std::ostringstream out, err;
  for (const char* name : {"a.synframes", "b.synframes"}) {
    const int code = cli::run({"--input", (dir / "song.wav").string(), "--headless", "--seed", "0",
                               "--frames-out", (dir / name).string()},
                              out, err);
    if (code != 0) return {false, "headless run failed: " + err.str()};
  }
  std::ifstream a(dir / "a.synframes", std::ios::binary), b(dir / "b.synframes", std::ios::binary);
  std::vector<char> ba(1 << 20), bb(1 << 20);
  std::uintmax_t total = 0;
  bool same = true;
  while (a && b) {
    a.read(ba.data(), static_cast<std::streamsize>(ba.size()));
    b.read(bb.data(), static_cast<std::streamsize>(bb.size()));
    if (a.gcount() != b.gcount() || std::memcmp(ba.data(), bb.data(), static_cast<std::size_t>(a.gcount())) != 0) {
      same = false;
      break;
    }
    total += static_cast<std::uintmax_t>(a.gcount());
  }
  const auto size = std::filesystem::file_size(dir / "a.synframes");
  const std::uintmax_t expected = 430 * (session::kFixedBytes + 100000 * session::kParticleStride);
  return {same && total == size && size == expected,
          fmt("two seed-0 runs, 10 s input, 100000 particles: %s, %ju bytes each (expected %ju)",
              same ? "byte-identical" : "DIFFERENT", static_cast<std::uintmax_t>(size), expected)};
}

Outcome bounded_dynamics() {
  std::mt19937_64 gen(9);
  engine::SimConfig cfg;
  cfg.n_particles = 1200;
  const auto look = palette::builtin_preset("default");
  engine::ParticleEngine eng(cfg, look.base);
  const double f_max = cfg.base_force * (0.5 + 1.0) * 2.0;
  const double bound = f_max * cfg.dt * cfg.drag / (1.0 - cfg.drag);
  double maxv = 0.0;
  std::size_t outside = 0;
  for (int i = 0; i < 10000; ++i) {
    const auto& params = eng.advance(random_frame(gen), look, {});
    for (std::size_t g = 0; g < 12; ++g) {
      outside += !engine::in_group_cube(params.groups[g].u_target, g);
      outside += params.groups[g].u_y_center != engine::y_center(g);
    }
    for (const auto& v : eng.state().velocities) maxv = std::max(maxv, v.norm());
  }
  const bool ends = engine::y_center(0) == -12.0 && engine::y_center(11) == 10.0;
  return {maxv <= bound && outside == 0 && ends,
          fmt("10000 steps: speed max %.4f <= %.4f; %zu targets outside their cube; y_center(0) = %g, "
              "y_center(11) = %g",
              maxv, bound, outside, engine::y_center(0), engine::y_center(11))};
}

double thread_cpu_ms() {
  timespec ts{};
  clock_gettime(CLOCK_THREAD_CPUTIME_ID, &ts);
  return 1000.0 * static_cast<double>(ts.tv_sec) + static_cast<double>(ts.tv_nsec) / 1e6;
}

// Per-hop cost is taken as thread CPU time, so a hop is not charged for time
// the scheduler gave to someone else. Wall clock must still keep pace with
// the audio over the whole clip.
Outcome realtime_budget() {
  session::PipelineOptions opts;
  opts.sim.n_particles = 100000;
  session::Pipeline p({{}, palette::builtin_preset("default")}, opts);
  p.load(std::make_unique<audio::AudioSource>(
      std::make_unique<audio::MemoryReader>(music_like(10.0), audio::kSampleRate), "music"));
  p.set_playing(true);
  std::vector<std::uint8_t> buf;
  double worst_cpu = 0.0, total_cpu = 0.0, worst_wall = 0.0;
  std::size_t hops = 0, over = 0;
  const auto start = clock_type::now();
  for (;;) {
    const auto w0 = clock_type::now();
    const double c0 = thread_cpu_ms();
    auto f = p.tick();
    if (!f) break;
    buf.clear();
    session::encode_into(*f, buf);
    const double cpu = thread_cpu_ms() - c0;
    worst_wall = std::max(worst_wall, 1000.0 * seconds_since(w0));
    worst_cpu = std::max(worst_cpu, cpu);
    total_cpu += cpu;
    over += cpu >= kHopBudgetMs;
    ++hops;
  }
  const double wall = seconds_since(start);
  const double audio_seconds = static_cast<double>(hops) * kHopBudgetMs / 1000.0;
#ifdef NDEBUG
  const char* build = "optimized";
#else
  const char* build = "debug";
#endif
  return {hops == 430 && over == 0 && wall < audio_seconds,
          fmt("100000 particles, %zu hops: cpu mean %.2f ms, worst %.2f ms, %zu over %.1f ms; wall %.2f s for "
              "%.2f s of audio (worst hop %.2f ms) (%s build)",
              hops, total_cpu / static_cast<double>(hops), worst_cpu, over, kHopBudgetMs, wall, audio_seconds,
              worst_wall, build)};
}

struct Criterion {
  const char* name;
  std::function<Outcome()> check;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {"FFT oracle equivalence", fft_oracle},      {"Bin constants", bin_constants},
      {"Volatility timing", volatility_timing},    {"Trigger behavior", trigger_behavior},
      {"Silence end-to-end", silence},             {"Emphasis law", emphasis_law},
      {"Parameter inventory", inventory},          {"Determinism", determinism},
      {"Bounded dynamics", bounded_dynamics},      {"Real-time budget", realtime_budget},
  };
  std::size_t only = 0;
  if (argc > 1) only = static_cast<std::size_t>(std::stoul(argv[1]));
  if (only > criteria.size()) {
    std::cerr << "no criterion " << only << '\n';
    return 2;
  }
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only && only != i + 1) continue;
    Outcome o;
    try {
      o = criteria[i].check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << ' ' << (i + 1) << ' ' << criteria[i].name << ": " << o.detail
              << std::endl;
    failed += !o.pass;
  }
  return failed ? 1 : 0;
}
