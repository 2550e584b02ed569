#pragma once

#include <cstdint>
#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace synviz::session {

/// Outgoing queue for one client. Text replies are never dropped; frames are
/// latest-wins with depth 1, so a slow reader skips frames instead of
/// stalling the producer. Queuing a reply discards the pending frame, so
/// every frame received after an ack was built under the acked config.
class ClientOutbox {
 public:
  using Bytes = std::shared_ptr<const std::vector<std::uint8_t>>;

  struct Item {
    bool binary = false;
    std::string text;
    Bytes frame;
    std::uint64_t frame_index = 0;
  };

  void push_text(std::string text);
  /// Replaces any frame not yet taken.
  void offer_frame(Bytes frame, std::uint64_t frame_index);

  std::optional<Item> pop();

  std::uint64_t dropped_frames() const;
  bool empty() const;

 private:
  mutable std::mutex mu_;
  std::deque<std::string> texts_;
  std::optional<Item> frame_;
  std::uint64_t dropped_ = 0;
};

}  // namespace synviz::session
