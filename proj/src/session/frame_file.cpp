#include "synviz/session/frame_file.hpp"

#include <iterator>

#include "synviz/error.hpp"

namespace synviz::session {

FrameWriter::FrameWriter(const std::filesystem::path& path)
    : path_(path), out_(path, std::ios::binary | std::ios::trunc) {
  if (!out_) throw Error("cannot open frames file for writing: " + path.string());
}

void FrameWriter::write(const FramePacket& packet) {
  buf_.clear();
  encode_into(packet, buf_);
  out_.write(reinterpret_cast<const char*>(buf_.data()), static_cast<std::streamsize>(buf_.size()));
  if (!out_) throw Error("write failed: " + path_.string());
  ++count_;
}

void FrameWriter::close() {
  out_.close();
  if (out_.fail()) throw Error("close failed: " + path_.string());
}

void write_frames(const std::vector<FramePacket>& packets, const std::filesystem::path& path) {
  FrameWriter w(path);
  for (const auto& p : packets) w.write(p);
  w.close();
}

FrameReadResult read_frames(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open frames file: " + path.string());
  const std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

  FrameReadResult result;
  std::span<const std::uint8_t> rest(bytes);
  while (!rest.empty()) {
    const std::size_t ordinal = result.frames.size() + 1;
    const auto whole = std::to_string(result.frames.size());
    try {
      const auto size = peek_packet_size(rest);
      if (!size || *size > rest.size()) {
        result.error = "truncated frame " + std::to_string(ordinal) + " at byte " +
                       std::to_string(bytes.size() - rest.size()) + "; last whole frame is " + whole;
        break;
      }
      result.frames.push_back(decode(rest.first(*size)));
      rest = rest.subspan(*size);
    } catch (const DecodeError& e) {
      result.error = "corrupt frame " + std::to_string(ordinal) + ": " + e.what() +
                     "; last whole frame is " + whole;
      break;
    }
  }
  return result;
}

}  // namespace synviz::session
