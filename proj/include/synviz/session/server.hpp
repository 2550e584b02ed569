#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "synviz/session/pipeline.hpp"

namespace synviz::session {

struct ServerOptions {
  std::string address = "0.0.0.0";
  /// 0 picks a free port; see Server::port().
  std::uint16_t port = 7878;
  /// Produce frames at audio rate (one hop per 23.2 ms). Tests turn this off.
  bool realtime = true;
};

/// WebSocket endpoint for the live engine. Binary messages carry
/// FramePackets to every client; text messages carry JSON control messages
/// in and JSON acks/errors out. Plain HTTP requests get a short notice.
///
/// The pipeline runs on its own worker thread; networking runs on another.
/// Controls are queued to the worker and applied between hops, and the
/// reply is queued to the sender ahead of the first frame built under it.
class Server {
 public:
  Server(std::unique_ptr<Pipeline> pipeline, const ServerOptions& options);
  ~Server();

  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  /// Binds and starts both threads. Throws on bind failure.
  void start();
  /// Idempotent; joins both threads.
  void stop();
  /// Blocks until stop() is called from elsewhere (e.g. a signal handler).
  void wait();

  std::uint16_t port() const;
  std::size_t client_count() const;
  std::uint64_t frames_broadcast() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace synviz::session
