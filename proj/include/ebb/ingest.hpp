#pragma once

// Passive network ingest: the deployment where the EBB runs as a stand-alone
// process and robots push records over a stream socket.
//
// Wire protocol (proposed here; the record bytes are exactly the storage
// encoding, which is self-delimiting via recS):
//
//   server -> client   "EBB/0.1\n" banner, then one "OK\n" or "ERR <code>\n"
//                      line per record received. Nothing else, ever: the
//                      daemon must not influence the robot.
//   client -> server   encoded records back to back; a '\n' between records
//                      is tolerated and skipped.
//
// Per-record error codes: BADREC (unparseable or checksum failure), NOTRD
// (MD/DD pushed on the wire; the store owns those), TOOBIG (record exceeds
// the slot size or the configured frame cap), INTERNAL.
//
// The daemon reads one record at a time per connection, so memory stays
// bounded by max_record x connections. Records are acknowledged only after
// the store append (and flush, when the store is durable) returns.

#include <arpa/inet.h>
#include <netinet/in.h>
#include <netinet/tcp.h>
#include <sys/socket.h>
#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <cerrno>
#include <cstdint>
#include <cstring>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "ebb/codec.hpp"
#include "ebb/ringstore.hpp"

namespace ebb {

inline constexpr std::string_view kIngestBanner = "EBB/0.1\n";

struct IngestConfig {
  std::string host = "127.0.0.1";
  std::uint16_t port = 0;  // 0 picks an ephemeral port (tests)
  int idle_timeout_s = 30;
  std::size_t max_record = 1 << 20;
};

/// Outcome of one closed session, for the operator log.
struct SessionStats {
  std::string peer;
  std::uint64_t accepted = 0;
  std::uint64_t rejected = 0;
  std::vector<std::string> violations;
};

/// Aggregate of drained sessions.
struct IngestStats {
  std::uint64_t accepted = 0;
  std::uint64_t rejected = 0;
  std::vector<std::string> violations;
};

namespace detail {

inline bool send_all(int fd, std::string_view bytes) {
  const char* p = bytes.data();
  std::size_t left = bytes.size();
  while (left > 0) {
    ssize_t n = ::send(fd, p, left, MSG_NOSIGNAL);
    if (n < 0) {
      if (errno == EINTR) continue;
      return false;
    }
    p += n;
    left -= static_cast<std::size_t>(n);
  }
  return true;
}

// 0 on EOF/timeout/error, n>0 otherwise.
inline ssize_t recv_some(int fd, void* buf, std::size_t len) {
  while (true) {
    ssize_t n = ::recv(fd, buf, len, 0);
    if (n < 0 && errno == EINTR) continue;
    return n;
  }
}

inline bool recv_exact(int fd, std::uint8_t* buf, std::size_t len) {
  std::size_t got = 0;
  while (got < len) {
    ssize_t n = recv_some(fd, buf + got, len - got);
    if (n <= 0) return false;
    got += static_cast<std::size_t>(n);
  }
  return true;
}

}  // namespace detail

class IngestServer {
 public:
  IngestServer(EbbStore& store, IngestConfig config) : store_(store), config_(std::move(config)) {}

  ~IngestServer() { stop(); }

  /// Binds, listens and spawns the accept loop. False (with reason) when the
  /// address cannot be bound, e.g. the port is occupied.
  bool start(std::string& error) {
    listen_fd_ = ::socket(AF_INET, SOCK_STREAM, 0);
    if (listen_fd_ < 0) {
      error = std::strerror(errno);
      return false;
    }
    int one = 1;
    ::setsockopt(listen_fd_, SOL_SOCKET, SO_REUSEADDR, &one, sizeof one);

    sockaddr_in addr{};
    addr.sin_family = AF_INET;
    addr.sin_port = htons(config_.port);
    if (::inet_pton(AF_INET, config_.host.c_str(), &addr.sin_addr) != 1) {
      error = "bad listen address: " + config_.host;
      close_listener();
      return false;
    }
    if (::bind(listen_fd_, reinterpret_cast<sockaddr*>(&addr), sizeof addr) != 0 ||
        ::listen(listen_fd_, 16) != 0) {
      error = std::strerror(errno);
      close_listener();
      return false;
    }
    socklen_t len = sizeof addr;
    ::getsockname(listen_fd_, reinterpret_cast<sockaddr*>(&addr), &len);
    bound_port_ = ntohs(addr.sin_port);

    running_ = true;
    accept_thread_ = std::thread([this] { accept_loop(); });
    return true;
  }

  std::uint16_t port() const { return bound_port_; }

  /// Stops accepting, lets sessions finish their in-flight record, joins.
  void stop() {
    bool was_running = running_.exchange(false);
    if (!was_running && listen_fd_ < 0) return;
    close_listener();
    if (accept_thread_.joinable()) accept_thread_.join();
    std::vector<std::thread> workers;
    {
      std::lock_guard<std::mutex> lock(mutex_);
      workers.swap(session_threads_);
      for (int fd : session_fds_) ::shutdown(fd, SHUT_RD);
    }
    for (auto& t : workers) t.join();
  }

  /// Returns and clears the stats of every session closed so far.
  IngestStats drain() {
    IngestStats total;
    std::lock_guard<std::mutex> lock(mutex_);
    for (auto& s : closed_sessions_) {
      total.accepted += s.accepted;
      total.rejected += s.rejected;
      for (auto& v : s.violations) total.violations.push_back(std::move(v));
    }
    closed_sessions_.clear();
    return total;
  }

  std::vector<SessionStats> drain_sessions() {
    std::lock_guard<std::mutex> lock(mutex_);
    auto out = std::move(closed_sessions_);
    closed_sessions_.clear();
    return out;
  }

 private:
  void close_listener() {
    if (listen_fd_ >= 0) {
      ::shutdown(listen_fd_, SHUT_RDWR);
      ::close(listen_fd_);
      listen_fd_ = -1;
    }
  }

  void accept_loop() {
    while (running_) {
      sockaddr_in peer{};
      socklen_t len = sizeof peer;
      int fd = ::accept(listen_fd_, reinterpret_cast<sockaddr*>(&peer), &len);
      if (fd < 0) {
        if (errno == EINTR) continue;
        break;  // listener closed
      }
      if (config_.idle_timeout_s > 0) {
        timeval tv{config_.idle_timeout_s, 0};
        ::setsockopt(fd, SOL_SOCKET, SO_RCVTIMEO, &tv, sizeof tv);
      }
      char ip[INET_ADDRSTRLEN] = {0};
      ::inet_ntop(AF_INET, &peer.sin_addr, ip, sizeof ip);
      std::string peer_name = std::string(ip) + ":" + std::to_string(ntohs(peer.sin_port));
      std::lock_guard<std::mutex> lock(mutex_);
      session_fds_.push_back(fd);
      session_threads_.emplace_back([this, fd, peer_name] { session(fd, peer_name); });
    }
  }

  void session(int fd, const std::string& peer) {
    SessionStats stats;
    stats.peer = peer;
    if (detail::send_all(fd, kIngestBanner)) {
      // An in-flight record is always finished and acknowledged; the stop
      // flag is only honored between records.
      while (true) {
        auto frame = read_frame(fd, stats);
        if (frame.empty()) break;
        if (!handle_record(fd, frame, stats)) break;
        if (!running_) break;
      }
    }
    ::close(fd);
    std::lock_guard<std::mutex> lock(mutex_);
    session_fds_.erase(std::remove(session_fds_.begin(), session_fds_.end(), fd),
                       session_fds_.end());
    closed_sessions_.push_back(std::move(stats));
  }

  /// Reads one self-delimited record. Empty result means the session is
  /// over (EOF, timeout, or an unframeable stream that was already
  /// answered with an error).
  std::vector<std::uint8_t> read_frame(int fd, SessionStats& stats) {
    // Skip newline padding, land on the first tag byte.
    std::uint8_t first = 0;
    do {
      ssize_t n = detail::recv_some(fd, &first, 1);
      if (n <= 0) return {};
    } while (first == '\n');

    constexpr std::size_t kHead = 20;  // tag + " recS " + 12 digits
    std::vector<std::uint8_t> buf(kHead);
    buf[0] = first;
    if (!detail::recv_exact(fd, buf.data() + 1, kHead - 1)) return {};

    std::string_view head(reinterpret_cast<const char*>(buf.data()), kHead);
    auto rs = RecSize::from_text(head.substr(8, 12));
    if (!record_type_from_tag(head.substr(0, 2)) || head.substr(2, 6) != " recS " || !rs) {
      // Framing is gone; answer once and drop the connection.
      stats.rejected++;
      stats.violations.push_back("unframeable stream from " + stats.peer);
      detail::send_all(fd, "ERR BADREC\n");
      return {};
    }
    if (rs->char_count > config_.max_record) {
      stats.rejected++;
      stats.violations.push_back("frame of " + std::to_string(rs->char_count) +
                                 " bytes exceeds cap");
      detail::send_all(fd, "ERR TOOBIG\n");
      return {};
    }
    if (rs->char_count < kHead) {
      stats.rejected++;
      detail::send_all(fd, "ERR BADREC\n");
      return {};
    }
    buf.resize(rs->char_count);
    if (!detail::recv_exact(fd, buf.data() + kHead, rs->char_count - kHead)) return {};
    return buf;
  }

  // False ends the session.
  bool handle_record(int fd, const std::vector<std::uint8_t>& frame, SessionStats& stats) {
    auto reply = [&](std::string_view line, bool ok) {
      if (ok)
        stats.accepted++;
      else
        stats.rejected++;
      return detail::send_all(fd, line);
    };

    auto parsed = parse_record(std::span<const std::uint8_t>(frame), 0);
    if (!parsed.ok()) {
      stats.violations.push_back(parsed.error().to_string());
      return reply("ERR BADREC\n", false);
    }
    const Record& rec = parsed.value().record;
    if (rec.type != RecordType::RD) {
      stats.violations.push_back(std::string("wire pushed ") + std::string(to_tag(rec.type)));
      return reply("ERR NOTRD\n", false);
    }
    auto outcome = store_.append_rd(rec);
    if (!outcome.ok()) {
      const StoreError& e = outcome.error();
      stats.violations.push_back(e.to_string());
      switch (e.kind) {
        case StoreErrorKind::RecordTooLarge: return reply("ERR TOOBIG\n", false);
        case StoreErrorKind::NotAnRd: return reply("ERR NOTRD\n", false);
        case StoreErrorKind::InvalidRecord: return reply("ERR BADREC\n", false);
        default: return reply("ERR INTERNAL\n", false);
      }
    }
    if (outcome.value().clock_regression)
      stats.violations.push_back("clock regression at slot " +
                                 std::to_string(outcome.value().slot) + " (written)");
    store_.flush();
    return reply("OK\n", true);
  }

  EbbStore& store_;
  IngestConfig config_;
  int listen_fd_ = -1;
  std::uint16_t bound_port_ = 0;
  std::atomic<bool> running_{false};
  std::thread accept_thread_;
  std::mutex mutex_;
  std::vector<std::thread> session_threads_;
  std::vector<int> session_fds_;
  std::vector<SessionStats> closed_sessions_;
};

// ---------------------------------------------------------------------------
// Client (robot side / replay / tests)
// ---------------------------------------------------------------------------

/// Minimal robot-side pusher. Also records every byte the daemon sends, so
/// tests can assert the one-way transcript grammar.
class IngestClient {
 public:
  IngestClient(const IngestClient&) = delete;
  IngestClient& operator=(const IngestClient&) = delete;
  IngestClient(IngestClient&& other) noexcept
      : fd_(other.fd_), transcript_(std::move(other.transcript_)), banner_(std::move(other.banner_)) {
    other.fd_ = -1;
  }

  ~IngestClient() {
    if (fd_ >= 0) ::close(fd_);
  }

  static StoreResult<IngestClient> connect(const std::string& host, std::uint16_t port,
                                           int timeout_s = 10) {
    int fd = ::socket(AF_INET, SOCK_STREAM, 0);
    if (fd < 0) return StoreError{StoreErrorKind::Io, std::strerror(errno)};
    sockaddr_in addr{};
    addr.sin_family = AF_INET;
    addr.sin_port = htons(port);
    if (::inet_pton(AF_INET, host.c_str(), &addr.sin_addr) != 1) {
      ::close(fd);
      return StoreError{StoreErrorKind::Io, "bad address: " + host};
    }
    if (::connect(fd, reinterpret_cast<sockaddr*>(&addr), sizeof addr) != 0) {
      auto err = StoreError{StoreErrorKind::Io,
                            host + ":" + std::to_string(port) + ": " + std::strerror(errno)};
      ::close(fd);
      return err;
    }
    timeval tv{timeout_s, 0};
    ::setsockopt(fd, SOL_SOCKET, SO_RCVTIMEO, &tv, sizeof tv);
    IngestClient client(fd);
    auto line = client.read_line();
    if (!line) {
      return StoreError{StoreErrorKind::Io, "no banner"};
    }
    client.banner_ = *line;
    return client;
  }

  const std::string& banner() const { return banner_; }

  /// Every byte received from the daemon, in order.
  const std::string& transcript() const { return transcript_; }

  /// Sends one encoded record and waits for its ack line ("OK" or
  /// "ERR <code>", newline stripped).
  StoreResult<std::string> send_record(std::string_view bytes) {
    if (!detail::send_all(fd_, bytes))
      return StoreError{StoreErrorKind::Io, std::strerror(errno)};
    auto line = read_line();
    if (!line) return StoreError{StoreErrorKind::Io, "connection closed before ack"};
    return *line;
  }

 private:
  explicit IngestClient(int fd) : fd_(fd) {}

  std::optional<std::string> read_line() {
    std::string line;
    char c;
    while (true) {
      ssize_t n = detail::recv_some(fd_, &c, 1);
      if (n <= 0) return std::nullopt;
      transcript_.push_back(c);
      if (c == '\n') return line;
      line.push_back(c);
    }
  }

  int fd_ = -1;
  std::string transcript_;
  std::string banner_;
};

}  // namespace ebb
