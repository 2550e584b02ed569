#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "synviz/audio/audio_source.hpp"
#include "synviz/audio/wav.hpp"
#include "synviz/error.hpp"

namespace synviz::audio {
namespace {

using synviz::testing::TempDir;

std::vector<double> drain(AudioSource& src, std::vector<SampleHop>* hops = nullptr) {
  std::vector<double> out;
  while (auto hop = src.next_hop()) {
    out.insert(out.end(), hop->samples.begin(), hop->samples.begin() + static_cast<std::ptrdiff_t>(hop->valid));
    if (hops) hops->push_back(*hop);
  }
  return out;
}

TEST(OpenSource, TenSecondMonoWavHas430Hops) {
  TempDir dir;
  write_wav(dir / "a.wav", std::vector<double>(441000, 0.0), 1, 44100);
  auto src = open_source(dir / "a.wav");
  EXPECT_EQ(src.total_hops(), 430u);
  EXPECT_EQ(src.channels(), 1);
  EXPECT_EQ(src.sample_rate(), 44100.0);
}

TEST(OpenSource, StereoIsMixedDownToMean) {
  TempDir dir;
  std::vector<double> interleaved;
  for (int i = 0; i < 2048; ++i) {
    interleaved.push_back(0.5);
    interleaved.push_back(-0.5);
  }
  write_wav(dir / "s.wav", interleaved, 2, 44100, WavSampleFormat::float32);
  auto src = open_source(dir / "s.wav");
  EXPECT_EQ(src.channels(), 2);
  auto hop = src.next_hop();
  ASSERT_TRUE(hop);
  for (double s : hop->samples) EXPECT_EQ(s, 0.0);
}

TEST(OpenSource, Rejects48kWithoutResampling) {
  TempDir dir;
  write_wav(dir / "r.wav", std::vector<double>(4800, 0.1), 1, 48000);
  EXPECT_THROW(open_source(dir / "r.wav"), AudioError);
  try {
    open_source(dir / "r.wav");
  } catch (const AudioError& e) {
    EXPECT_NE(std::string(e.what()).find("sample rate"), std::string::npos);
  }
}

TEST(OpenSource, ResamplesWhenEnabled) {
  TempDir dir;
  // 1 s of a slow ramp at 48 kHz becomes ~44100 samples of the same ramp.
  std::vector<double> ramp(48000);
  for (std::size_t i = 0; i < ramp.size(); ++i) ramp[i] = static_cast<double>(i) / 48000.0;
  write_wav(dir / "r.wav", ramp, 1, 48000, WavSampleFormat::float32);
  auto src = open_source(dir / "r.wav", {.allow_resample = true});
  EXPECT_EQ(src.sample_rate(), 44100.0);
  const auto out = drain(src);
  EXPECT_NEAR(static_cast<double>(out.size()), 44100.0, 1.0);
  for (std::size_t j = 0; j < out.size(); j += 997) {
    EXPECT_NEAR(out[j], static_cast<double>(j) / 44100.0, 1e-6) << j;
  }
}

TEST(OpenSource, MissingAndUnsupportedFiles) {
  TempDir dir;
  EXPECT_THROW(open_source(dir / "nope.wav"), AudioError);

  std::ofstream(dir / "junk.wav") << "definitely not audio";
  EXPECT_THROW(open_source(dir / "junk.wav"), AudioError);

  // 8-bit PCM is outside the supported set.
  std::vector<unsigned char> wav = {'R', 'I', 'F', 'F', 40, 0, 0, 0, 'W', 'A', 'V', 'E', 'f', 'm', 't', ' ',
                                    16,  0,   0,   0,   1,  0, 1, 0, 0x44, 0xAC, 0, 0, 0x44, 0xAC, 0, 0,
                                    1,   0,   8,   0,   'd', 'a', 't', 'a', 4, 0, 0, 0, 128, 128, 128, 128};
  std::ofstream(dir / "u8.wav", std::ios::binary).write(reinterpret_cast<const char*>(wav.data()), static_cast<std::streamsize>(wav.size()));
  EXPECT_THROW(open_source(dir / "u8.wav"), AudioError);
}

TEST(NextHop, SilentFileGivesZeros) {
  AudioSource src(std::make_unique<MemoryReader>(std::vector<double>(2048, 0.0), kSampleRate), "mem");
  auto hop = src.next_hop();
  ASSERT_TRUE(hop);
  for (double s : hop->samples) EXPECT_EQ(s, 0.0);
}

TEST(NextHop, PartialTailIsPaddedAndFlaggedLast) {
  std::vector<double> samples(1025, 0.25);
  AudioSource src(std::make_unique<MemoryReader>(samples, kSampleRate), "mem");
  auto h0 = src.next_hop();
  ASSERT_TRUE(h0);
  EXPECT_EQ(h0->index, 0u);
  EXPECT_EQ(h0->valid, kHopSize);
  EXPECT_FALSE(h0->last);

  auto h1 = src.next_hop();
  ASSERT_TRUE(h1);
  EXPECT_EQ(h1->index, 1u);
  EXPECT_EQ(h1->valid, 1u);
  EXPECT_TRUE(h1->last);
  EXPECT_EQ(h1->samples[0], 0.25);
  for (std::size_t i = 1; i < kHopSize; ++i) EXPECT_EQ(h1->samples[i], 0.0);

  EXPECT_FALSE(src.next_hop());
}

TEST(NextHop, ExactMultipleEndsOnFullHop) {
  AudioSource src(std::make_unique<MemoryReader>(std::vector<double>(2048, 0.1), kSampleRate), "mem");
  ASSERT_TRUE(src.next_hop());
  auto h1 = src.next_hop();
  ASSERT_TRUE(h1);
  EXPECT_TRUE(h1->last);
  EXPECT_FALSE(h1->padded());
  EXPECT_FALSE(src.next_hop());
}

TEST(NextHop, TruncatedDataChunkIsDecodeFailure) {
  TempDir dir;
  write_wav(dir / "t.wav", std::vector<double>(4096, 0.1), 1, 44100);
  std::filesystem::resize_file(dir / "t.wav", 44 + 2 * 3000);
  auto src = open_source(dir / "t.wav");
  EXPECT_TRUE(src.next_hop());
  EXPECT_TRUE(src.next_hop());
  EXPECT_THROW(src.next_hop(), AudioError);
}

// Property: hops partition the decoded stream exactly, for any length and
// every supported sample format; indices step by one.
TEST(NextHop, HopPartitioningReproducesStream) {
  std::mt19937_64 gen(7);
  std::uniform_int_distribution<std::size_t> len(1, 5000);
  std::uniform_real_distribution<double> val(-1.0, 1.0);
  TempDir dir;
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t n = len(gen);
    std::vector<double> stream(n);
    for (double& s : stream) s = val(gen);
    const auto fmt = static_cast<WavSampleFormat>(trial % 3);
    const auto path = dir / ("p" + std::to_string(trial) + ".wav");
    write_wav(path, stream, 1, 44100, fmt);

    auto src = open_source(path);
    std::vector<SampleHop> hops;
    const auto out = drain(src, &hops);
    ASSERT_EQ(out.size(), n);
    const double tol = fmt == WavSampleFormat::pcm16 ? 1.0 / 32768 : fmt == WavSampleFormat::pcm24 ? 1.0 / 8388608 : 1e-7;
    for (std::size_t i = 0; i < n; ++i) ASSERT_NEAR(out[i], stream[i], tol);
    for (std::size_t i = 0; i < hops.size(); ++i) EXPECT_EQ(hops[i].index, i);
    EXPECT_EQ(src.total_hops(), n / kHopSize);
  }
}

TEST(RawStream, ReadsInterleavedFloat) {
  std::string bytes;
  auto put = [&](float f) {
    const auto* p = reinterpret_cast<const char*>(&f);
    bytes.append(p, 4);
  };
  for (int i = 0; i < 1500; ++i) {
    put(0.75f);
    put(0.25f);
  }
  std::istringstream in(bytes);
  auto src = open_raw_stream(in, 2);
  auto h0 = src.next_hop();
  ASSERT_TRUE(h0);
  EXPECT_EQ(h0->samples[0], 0.5);
  auto h1 = src.next_hop();
  ASSERT_TRUE(h1);
  EXPECT_EQ(h1->valid, 1500u - 1024u);
  EXPECT_TRUE(h1->last);
  EXPECT_FALSE(src.total_hops());
}

TEST(RmsDb, FullScaleDcIsZero) {
  SampleHop hop;
  hop.samples.fill(1.0);
  EXPECT_DOUBLE_EQ(rms_db(hop), 0.0);
}

TEST(RmsDb, FullScaleSineMatchesDirectSummation) {
  const auto samples = synviz::testing::cosine(16, 1.0, kHopSize);
  // Oracle: rms by direct summation, then 20 log10.
  double sum = 0.0;
  for (double s : samples) sum += s * s;
  const double oracle = 20.0 * std::log10(std::sqrt(sum / kHopSize));
  const double db = rms_db(synviz::testing::hop_from(samples));
  EXPECT_NEAR(db, oracle, 1e-12);
  EXPECT_NEAR(db, -3.01, 0.01);
}

TEST(RmsDb, SilenceHitsFloor) {
  EXPECT_EQ(rms_db(SampleHop{}), -120.0);
  EXPECT_EQ(rms_db(SampleHop{}, -90.0), -90.0);
}

TEST(RmsDb, UniformGainShiftsByTwentyLogG) {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> val(-0.2, 0.2);
  std::uniform_real_distribution<double> gain(1.01, 4.9);
  for (int trial = 0; trial < 100; ++trial) {
    SampleHop x;
    for (double& s : x.samples) s = val(gen);
    const double g = gain(gen);
    SampleHop gx = x;
    for (double& s : gx.samples) s *= g;
    EXPECT_GT(rms_db(gx), rms_db(x));
    EXPECT_NEAR(rms_db(gx) - rms_db(x), 20.0 * std::log10(g), 1e-6);
  }
}

}  // namespace
}  // namespace synviz::audio
