#include "synviz/session/server.hpp"

#include <atomic>
#include <boost/asio.hpp>
#include <boost/beast/core.hpp>
#include <boost/beast/http.hpp>
#include <boost/beast/websocket.hpp>
#include <chrono>
#include <condition_variable>
#include <deque>
#include <iostream>
#include <mutex>
#include <set>
#include <thread>

#include "synviz/error.hpp"
#include "synviz/session/outbox.hpp"

namespace synviz::session {

namespace net = boost::asio;
namespace beast = boost::beast;
namespace http = beast::http;
namespace websocket = beast::websocket;
using tcp = net::ip::tcp;

namespace {

class Hub;

class WsSession : public std::enable_shared_from_this<WsSession> {
 public:
  WsSession(tcp::socket&& socket, Hub& hub) : ws_(std::move(socket)), hub_(hub) {}

  void run(http::request<http::string_body> req);
  void send_text(std::string text) {
    outbox_.push_text(std::move(text));
    kick();
  }
  void send_frame(ClientOutbox::Bytes frame, std::uint64_t index) {
    outbox_.offer_frame(std::move(frame), index);
    kick();
  }
  void close() {
    net::post(ws_.get_executor(), [self = shared_from_this()] {
      beast::error_code ec;
      beast::get_lowest_layer(self->ws_).socket().close(ec);
    });
  }

 private:
  void kick() {
    net::post(ws_.get_executor(), [self = shared_from_this()] { self->pump(); });
  }
  void do_read();
  void pump();

  websocket::stream<beast::tcp_stream> ws_;
  Hub& hub_;
  beast::flat_buffer read_buf_;
  ClientOutbox outbox_;
  bool writing_ = false;
  bool open_ = false;
};

/// Client registry and the control queue feeding the pipeline worker.
class Hub {
 public:
  struct Pending {
    std::weak_ptr<WsSession> from;
    ControlMessage msg;
  };

  void join(const std::shared_ptr<WsSession>& s) {
    std::lock_guard lock(mu_);
    sessions_.insert(s);
  }
  void leave(const std::shared_ptr<WsSession>& s) {
    std::lock_guard lock(mu_);
    sessions_.erase(s);
  }
  std::size_t size() const {
    std::lock_guard lock(mu_);
    return sessions_.size();
  }

  void broadcast(ClientOutbox::Bytes frame, std::uint64_t index) {
    std::vector<std::shared_ptr<WsSession>> targets;
    {
      std::lock_guard lock(mu_);
      targets.assign(sessions_.begin(), sessions_.end());
    }
    for (auto& s : targets) s->send_frame(frame, index);
  }

  void close_all() {
    std::lock_guard lock(mu_);
    for (auto& s : sessions_) s->close();
    sessions_.clear();
  }

  void on_text(const std::shared_ptr<WsSession>& from, const std::string& text) {
    ControlMessage msg;
    try {
      msg = parse_control(text);
    } catch (const ParseError& e) {
      from->send_text(error_reply("malformed", e.what()));
      return;
    }
    {
      std::lock_guard lock(qmu_);
      queue_.push_back({from, std::move(msg)});
    }
    qcv_.notify_one();
  }

  std::deque<Pending> take_controls() {
    std::lock_guard lock(qmu_);
    return std::exchange(queue_, {});
  }

  /// Sleeps until `deadline` or until a control message arrives.
  void wait_for_controls(std::chrono::steady_clock::time_point deadline, const std::atomic<bool>& stopping) {
    std::unique_lock lock(qmu_);
    qcv_.wait_until(lock, deadline, [&] { return !queue_.empty() || stopping.load(); });
  }
  void wake() { qcv_.notify_all(); }

 private:
  mutable std::mutex mu_;
  std::set<std::shared_ptr<WsSession>> sessions_;
  std::mutex qmu_;
  std::condition_variable qcv_;
  std::deque<Pending> queue_;
};

void WsSession::run(http::request<http::string_body> req) {
  ws_.set_option(websocket::stream_base::timeout::suggested(beast::role_type::server));
  ws_.async_accept(req, [self = shared_from_this()](beast::error_code ec) {
    if (ec) return;
    self->open_ = true;
    self->hub_.join(self);
    self->do_read();
    self->pump();
  });
}

void WsSession::do_read() {
  ws_.async_read(read_buf_, [self = shared_from_this()](beast::error_code ec, std::size_t) {
    if (ec) {
      self->open_ = false;
      self->hub_.leave(self);
      return;
    }
    if (self->ws_.got_text()) {
      self->hub_.on_text(self, beast::buffers_to_string(self->read_buf_.data()));
    } else {
      self->send_text(error_reply("malformed", "control messages must be text frames"));
    }
    self->read_buf_.consume(self->read_buf_.size());
    self->do_read();
  });
}

void WsSession::pump() {
  if (!open_ || writing_) return;
  auto item = outbox_.pop();
  if (!item) return;
  writing_ = true;
  auto held = std::make_shared<ClientOutbox::Item>(std::move(*item));
  ws_.binary(held->binary);
  const net::const_buffer buffer = held->binary ? net::const_buffer(held->frame->data(), held->frame->size())
                                                : net::const_buffer(held->text.data(), held->text.size());
  ws_.async_write(buffer, [self = shared_from_this(), held](beast::error_code ec, std::size_t) {
    self->writing_ = false;
    if (ec) {
      self->open_ = false;
      self->hub_.leave(self);
      return;
    }
    self->pump();
  });
}

/// Reads the HTTP request on a fresh connection and upgrades it.
class HttpSession : public std::enable_shared_from_this<HttpSession> {
 public:
  HttpSession(tcp::socket&& socket, Hub& hub) : stream_(std::move(socket)), hub_(hub) {}

  void run() {
    stream_.expires_after(std::chrono::seconds(30));
    http::async_read(stream_, buf_, req_, [self = shared_from_this()](beast::error_code ec, std::size_t) {
      if (ec) return;
      self->on_request();
    });
  }

 private:
  void on_request() {
    if (websocket::is_upgrade(req_)) {
      stream_.expires_never();
      std::make_shared<WsSession>(stream_.release_socket(), hub_)->run(std::move(req_));
      return;
    }
    auto res = std::make_shared<http::response<http::string_body>>(http::status::upgrade_required, req_.version());
    res->set(http::field::content_type, "text/plain");
    res->set(http::field::upgrade, "websocket");
    res->body() = "synviz session endpoint: connect with a WebSocket client\n";
    res->keep_alive(false);
    res->prepare_payload();
    http::async_write(stream_, *res, [self = shared_from_this(), res](beast::error_code, std::size_t) {
      beast::error_code ec;
      self->stream_.socket().shutdown(tcp::socket::shutdown_send, ec);
    });
  }

  beast::tcp_stream stream_;
  Hub& hub_;
  beast::flat_buffer buf_;
  http::request<http::string_body> req_;
};

}  // namespace

struct Server::Impl {
  Impl(std::unique_ptr<Pipeline> p, const ServerOptions& o)
      : pipeline(std::move(p)), options(o), acceptor(ioc) {}

  void accept() {
    acceptor.async_accept(net::make_strand(ioc), [this](beast::error_code ec, tcp::socket socket) {
      if (ec) return;  // acceptor closed
      std::make_shared<HttpSession>(std::move(socket), hub)->run();
      accept();
    });
  }

  void worker_loop() {
    using clock = std::chrono::steady_clock;
    const auto hop = std::chrono::duration_cast<clock::duration>(std::chrono::duration<double>(audio::kHopSeconds));
    auto next = clock::now();
    while (!stopping) {
      for (auto& pending : hub.take_controls()) {
        std::string reply = pipeline->apply(pending.msg);
        if (auto s = pending.from.lock()) s->send_text(std::move(reply));
      }

      std::optional<FramePacket> packet;
      try {
        packet = pipeline->tick();
      } catch (const Error& e) {
        std::cerr << "synviz: pipeline stopped: " << e.what() << '\n';
        pipeline->set_playing(false);
      }
      if (packet) {
        auto bytes = std::make_shared<std::vector<std::uint8_t>>(encode(*packet));
        hub.broadcast(std::move(bytes), packet->frame_index);
        ++broadcast_count;
      }

      if (packet && options.realtime) {
        next += hop;
        const auto now = clock::now();
        if (next < now) next = now;  // fell behind: do not try to catch up in a burst
        hub.wait_for_controls(next, stopping);
        // Controls that arrive early still wait for the hop boundary.
        std::this_thread::sleep_until(next);
      } else if (!packet) {
        next = clock::now() + hop;
        hub.wait_for_controls(next, stopping);
      }
    }
  }

  std::unique_ptr<Pipeline> pipeline;
  ServerOptions options;
  net::io_context ioc;
  tcp::acceptor acceptor;
  Hub hub;
  std::thread io_thread;
  std::thread worker;
  std::atomic<bool> stopping{false};
  std::atomic<bool> running{false};
  std::atomic<std::uint64_t> broadcast_count{0};
  std::uint16_t bound_port = 0;
  std::mutex stop_mu;
  std::condition_variable stop_cv;
};

Server::Server(std::unique_ptr<Pipeline> pipeline, const ServerOptions& options)
    : impl_(std::make_unique<Impl>(std::move(pipeline), options)) {}

Server::~Server() { stop(); }

void Server::start() {
  auto& im = *impl_;
  const tcp::endpoint ep(net::ip::make_address(im.options.address), im.options.port);
  im.acceptor.open(ep.protocol());
  im.acceptor.set_option(net::socket_base::reuse_address(true));
  im.acceptor.bind(ep);
  im.acceptor.listen(net::socket_base::max_listen_connections);
  im.bound_port = im.acceptor.local_endpoint().port();
  im.accept();
  im.running = true;
  im.io_thread = std::thread([&im] { im.ioc.run(); });
  im.worker = std::thread([&im] { im.worker_loop(); });
}

void Server::stop() {
  auto& im = *impl_;
  if (!im.running.exchange(false)) return;
  im.stopping = true;
  im.hub.wake();
  if (im.worker.joinable()) im.worker.join();
  net::post(im.ioc, [&im] {
    beast::error_code ec;
    im.acceptor.close(ec);
    im.hub.close_all();
  });
  // Let queued closes run, then stop the loop.
  net::post(im.ioc, [&im] { im.ioc.stop(); });
  if (im.io_thread.joinable()) im.io_thread.join();
  {
    std::lock_guard lock(im.stop_mu);
  }
  im.stop_cv.notify_all();
}

void Server::wait() {
  auto& im = *impl_;
  std::unique_lock lock(im.stop_mu);
  im.stop_cv.wait(lock, [&im] { return !im.running.load(); });
}

std::uint16_t Server::port() const { return impl_->bound_port; }

std::size_t Server::client_count() const { return impl_->hub.size(); }

std::uint64_t Server::frames_broadcast() const { return impl_->broadcast_count; }

}  // namespace synviz::session
