#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "synviz/session/frame_packet.hpp"

namespace synviz::session {

/// Appends encoded packets to a .synframes file (plain concatenation).
class FrameWriter {
 public:
  explicit FrameWriter(const std::filesystem::path& path);

  void write(const FramePacket& packet);
  void close();
  std::uint64_t frames_written() const { return count_; }

 private:
  std::filesystem::path path_;
  std::ofstream out_;
  std::vector<std::uint8_t> buf_;
  std::uint64_t count_ = 0;
};

void write_frames(const std::vector<FramePacket>& packets, const std::filesystem::path& path);

struct FrameReadResult {
  std::vector<FramePacket> frames;
  /// Set when the file ended inside a packet or a packet failed to decode;
  /// `frames` then holds every whole packet before it.
  std::optional<std::string> error;

  bool ok() const { return !error.has_value(); }
};

FrameReadResult read_frames(const std::filesystem::path& path);

}  // namespace synviz::session
