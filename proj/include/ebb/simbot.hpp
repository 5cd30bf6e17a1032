#pragma once

// A deterministic simulated robot: a differential-drive platform with two
// wheel actuators and 8 IR sensors, emitting catalog-valid RD records on a
// variable-frequency schedule. Used for end-to-end tests, demos and seeding
// stores with realistic data.
//
// Script format, one event per line (blank lines and #-comments ignored):
//
//   <offset_ms> <kind> [args]
//
//   kinds: motor_sensor | camera_frame | text_command
//   args:  period=<ms>     repeats every <ms> until the duration runs out
//          camera=<n>      camera_frame device number (default 1)
//          obstacle=<0|1>  motor_sensor: scripted obstacle windows that
//                          elevate the front-right IR sensors and log a
//                          decC "obstacle detected" (default 0)
//          free text       text_command: the command, rest of the line
//
// Records at equal offsets are emitted camera first, then motor/sensor,
// then text. Generation is a pure function of (script, config, duration):
// the same seed yields byte-identical streams.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "ebb/codec.hpp"
#include "ebb/fixtures.hpp"
#include "ebb/ingest.hpp"
#include "ebb/record.hpp"
#include "ebb/ringstore.hpp"

namespace ebb::simbot {

enum class EventKind : std::uint8_t { CameraFrame, MotorSensor, TextCommand };

inline std::string_view event_kind_name(EventKind k) {
  switch (k) {
    case EventKind::CameraFrame: return "camera_frame";
    case EventKind::MotorSensor: return "motor_sensor";
    case EventKind::TextCommand: return "text_command";
  }
  return "?";
}

// Enumerator order doubles as the tie-break priority at equal timestamps.

struct ScheduleEvent {
  EventKind kind = EventKind::MotorSensor;
  std::int64_t offset_ms = 0;
  std::optional<std::int64_t> period_ms;  // one-shot when absent
  std::string text;                       // TextCommand payload
  int camera = 1;
  bool obstacle = false;
};

struct Script {
  std::vector<ScheduleEvent> events;
};

struct ScriptError {
  int line = 0;
  std::string message;

  std::string to_string() const { return "line " + std::to_string(line) + ": " + message; }
};

inline Result<Script, ScriptError> parse_script(std::string_view text) {
  Script script;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                           : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\r' || line.back() == '\t'))
      line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;

    auto sp1 = line.find(' ');
    if (sp1 == std::string_view::npos)
      return ScriptError{line_no, "expected '<offset_ms> <kind> [args]'"};
    std::string_view off = line.substr(0, sp1);
    if (!detail::all_digits(off)) return ScriptError{line_no, "bad offset: " + std::string(off)};

    std::string_view rest = line.substr(sp1 + 1);
    auto sp2 = rest.find(' ');
    std::string_view kind_sv = rest.substr(0, sp2);
    std::string_view args = sp2 == std::string_view::npos ? std::string_view{}
                                                          : rest.substr(sp2 + 1);

    ScheduleEvent ev;
    ev.offset_ms = static_cast<std::int64_t>(detail::to_u64(off));
    if (kind_sv == "motor_sensor")
      ev.kind = EventKind::MotorSensor;
    else if (kind_sv == "camera_frame")
      ev.kind = EventKind::CameraFrame;
    else if (kind_sv == "text_command")
      ev.kind = EventKind::TextCommand;
    else
      return ScriptError{line_no, "unknown kind: " + std::string(kind_sv)};

    if (ev.kind == EventKind::TextCommand) {
      ev.text = std::string(args);
    } else {
      while (!args.empty()) {
        auto sp = args.find(' ');
        std::string_view tok = args.substr(0, sp);
        args = sp == std::string_view::npos ? std::string_view{} : args.substr(sp + 1);
        if (tok.empty()) continue;
        auto eq = tok.find('=');
        std::string_view key = tok.substr(0, eq);
        std::string_view val = eq == std::string_view::npos ? std::string_view{}
                                                            : tok.substr(eq + 1);
        if (key == "period" && detail::all_digits(val))
          ev.period_ms = static_cast<std::int64_t>(detail::to_u64(val));
        else if (key == "camera" && detail::all_digits(val))
          ev.camera = detail::to_int(val);
        else if (key == "obstacle" && detail::all_digits(val))
          ev.obstacle = detail::to_int(val) != 0;
        else
          return ScriptError{line_no, "bad argument: " + std::string(tok)};
      }
    }
    script.events.push_back(std::move(ev));
  }
  return script;
}

/// The schedule that reproduces the worked example: 2 s motor/sensor
/// records, 10 s camera frames starting at +5 s, and two operator commands.
inline constexpr std::string_view kTable9Script =
    "# differential-drive demo: 2s motor/sensor, 10s camera, two commands\n"
    "2000 motor_sensor period=2000\n"
    "5000 camera_frame period=10000 camera=1\n"
    "7100 text_command Halt\n"
    "19100 text_command Run\n";

// ---------------------------------------------------------------------------
// Time arithmetic
// ---------------------------------------------------------------------------

inline EbbDate next_day(EbbDate d) {
  if (++d.day <= days_in_month(d.year, d.month)) return d;
  d.day = 1;
  if (++d.month <= 12) return d;
  d.month = 1;
  ++d.year;
  return d;
}

/// Stamp + milliseconds, rolling over days as needed (offsets are
/// non-negative in schedules).
inline Stamp add_ms(Stamp s, std::int64_t ms) {
  std::int64_t total = s.time.ms_of_day() + ms;
  constexpr std::int64_t kDay = 24ll * 3600 * 1000;
  while (total >= kDay) {
    total -= kDay;
    s.date = next_day(s.date);
  }
  s.time = EbbTime::from_ms_of_day(total);
  return s;
}

// ---------------------------------------------------------------------------
// Generation
// ---------------------------------------------------------------------------

struct GeneratorConfig {
  Stamp start{{2022, 4, 20}, {8, 40, 20, 0}};
  std::uint64_t seed = 1;
  std::int64_t bot_skew_ms = 0;  // robot clock minus EBB clock
  std::vector<std::uint8_t> camera_payload{fixtures::tiny_jpg,
                                           fixtures::tiny_jpg + fixtures::tiny_jpg_len};
};

namespace detail_sim {

struct Occurrence {
  std::int64_t at_ms;
  EventKind kind;
  std::size_t event_index;
  std::uint64_t tick;  // occurrence number within its event
};

struct RobotState {
  double wheel[2] = {0.0, 0.0};
  std::mt19937_64 rng;
};

inline std::string fixed_actuator(int no, double value) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%03d:%+08.2f", no, value);
  return buf;
}

inline std::string fixed_sensor(int no, int value) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "%02d:%03d", no, value);
  return buf;
}

}  // namespace detail_sim

/// Expands a script into timestamped, catalog-valid RD records covering
/// [0, duration_ms]. Deterministic for a fixed config.
inline std::vector<Record> generate(const Script& script, const GeneratorConfig& config,
                                    std::int64_t duration_ms) {
  std::vector<detail_sim::Occurrence> plan;
  for (std::size_t i = 0; i < script.events.size(); ++i) {
    const ScheduleEvent& ev = script.events[i];
    if (ev.period_ms && *ev.period_ms > 0) {
      std::uint64_t tick = 0;
      for (std::int64_t t = ev.offset_ms; t <= duration_ms; t += *ev.period_ms)
        plan.push_back({t, ev.kind, i, tick++});
    } else if (ev.offset_ms <= duration_ms) {
      plan.push_back({ev.offset_ms, ev.kind, i, 0});
    }
  }
  std::stable_sort(plan.begin(), plan.end(),
                   [](const detail_sim::Occurrence& a, const detail_sim::Occurrence& b) {
                     if (a.at_ms != b.at_ms) return a.at_ms < b.at_ms;
                     return static_cast<int>(a.kind) < static_cast<int>(b.kind);
                   });

  detail_sim::RobotState state;
  state.rng.seed(config.seed);

  std::vector<Record> records;
  records.reserve(plan.size());
  for (const auto& occ : plan) {
    const ScheduleEvent& ev = script.events[occ.event_index];
    Stamp stamp = add_ms(config.start, occ.at_ms);
    EbbTime bot_time = add_ms(stamp, config.bot_skew_ms).time;

    std::vector<Field> fields;
    fields.push_back({"botT", bot_time});

    switch (ev.kind) {
      case EventKind::MotorSensor: {
        std::uniform_real_distribution<double> drift(-25.0, 25.0);
        std::uniform_int_distribution<int> jitter(3, 8);
        for (double& w : state.wheel) {
          w += drift(state.rng);
          if (w > 9999.99) w = 9999.99;
          if (w < -9999.99) w = -9999.99;
        }
        fields.push_back({"actV", FixedNumValue{detail_sim::fixed_actuator(1, state.wheel[0])}});
        fields.push_back({"actV", FixedNumValue{detail_sim::fixed_actuator(2, state.wheel[1])}});
        int battery = static_cast<int>(occ.tick / 10 > 255 ? 0 : 255 - occ.tick / 10);
        char bat[8];
        std::snprintf(bat, sizeof bat, "%03d", battery);
        fields.push_back({"batL", FixedNumValue{bat}});
        bool obstacle_now = ev.obstacle && occ.tick % 8 == 5;
        for (int sensor = 1; sensor <= 8; ++sensor) {
          int value = jitter(state.rng);
          if (obstacle_now && (sensor == 6 || sensor == 7))
            value = sensor == 6 ? 23 : 15;  // front-right profile
          fields.push_back({"irSe", FixedNumValue{detail_sim::fixed_sensor(sensor, value)}});
        }
        if (obstacle_now)
          fields.push_back({"decC", DecisionValue{20, "obstacle detected"}});
        break;
      }
      case EventKind::CameraFrame: {
        fields.push_back({"camF", BlobValue{ev.camera, config.camera_payload}});
        break;
      }
      case EventKind::TextCommand: {
        fields.push_back({"txtC", TextValue{ev.text}});
        break;
      }
    }
    records.push_back(build_record(RecordType::RD, stamp.date, stamp.time, std::move(fields)));
  }
  return records;
}

// ---------------------------------------------------------------------------
// Replay
// ---------------------------------------------------------------------------

struct ReplayStats {
  std::uint64_t sent = 0;
  std::uint64_t accepted = 0;
  std::uint64_t rejected = 0;
  std::vector<std::string> errors;
};

/// Writes records straight into a store.
inline StoreResult<ReplayStats> replay_to_store(const std::vector<Record>& records,
                                                EbbStore& store) {
  ReplayStats stats;
  for (const Record& r : records) {
    stats.sent++;
    auto out = store.append_rd(r);
    if (out.ok()) {
      stats.accepted++;
    } else {
      stats.rejected++;
      stats.errors.push_back(out.error().to_string());
    }
  }
  return stats;
}

/// Streams records to an ingest daemon. speed_factor > 0 paces emission at
/// real-time/speed_factor using the records' own timestamps; 0 streams flat
/// out. Rejected records (ERR replies) are counted, not fatal; a dead
/// target is.
inline StoreResult<ReplayStats> replay_to_daemon(const std::vector<Record>& records,
                                                 const std::string& host, std::uint16_t port,
                                                 double speed_factor = 0.0) {
  auto client = IngestClient::connect(host, port);
  if (!client.ok()) return client.error();

  ReplayStats stats;
  std::optional<Stamp> prev;
  for (const Record& r : records) {
    if (speed_factor > 0 && prev) {
      std::int64_t gap = r.time.ms_of_day() - prev->time.ms_of_day();
      if (gap > 0)
        std::this_thread::sleep_for(
            std::chrono::milliseconds(static_cast<std::int64_t>(gap / speed_factor)));
    }
    prev = r.stamp();

    EncodeResult enc = encode_record(r);
    if (!enc.ok()) {
      stats.sent++;
      stats.rejected++;
      stats.errors.push_back("encode: " + enc.violations.front().to_string());
      continue;
    }
    stats.sent++;
    auto reply = client.value().send_record(enc.bytes);
    if (!reply.ok()) return reply.error();
    if (reply.value() == "OK") {
      stats.accepted++;
    } else {
      stats.rejected++;
      stats.errors.push_back(reply.value());
    }
  }
  return stats;
}

}  // namespace ebb::simbot
