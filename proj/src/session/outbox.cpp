#include "synviz/session/outbox.hpp"

namespace synviz::session {

void ClientOutbox::push_text(std::string text) {
  std::lock_guard lock(mu_);
  texts_.push_back(std::move(text));
  // A reply can announce a config change; a frame still waiting here was
  // built before it and would arrive after the reply.
  if (frame_) {
    frame_.reset();
    ++dropped_;
  }
}

void ClientOutbox::offer_frame(Bytes frame, std::uint64_t frame_index) {
  std::lock_guard lock(mu_);
  if (frame_) ++dropped_;
  frame_ = Item{true, {}, std::move(frame), frame_index};
}

std::optional<ClientOutbox::Item> ClientOutbox::pop() {
  std::lock_guard lock(mu_);
  if (!texts_.empty()) {
    Item item{false, std::move(texts_.front()), nullptr, 0};
    texts_.pop_front();
    return item;
  }
  if (frame_) {
    auto item = std::move(frame_);
    frame_.reset();
    return item;
  }
  return std::nullopt;
}

std::uint64_t ClientOutbox::dropped_frames() const {
  std::lock_guard lock(mu_);
  return dropped_;
}

bool ClientOutbox::empty() const {
  std::lock_guard lock(mu_);
  return texts_.empty() && !frame_;
}

}  // namespace synviz::session
