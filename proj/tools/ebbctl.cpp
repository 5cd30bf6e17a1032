// ebbctl: initialize EBB media, run the ingest daemon, generate/replay
// simulated robot streams, and inspect/verify/extract stored data.
//
// Exit codes: 0 success, 1 violations/findings reported, 2 usage error,
// 3 I/O or environment error.

#include <csignal>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ebb/ebb.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFindings = 1;
constexpr int kUsage = 2;
constexpr int kIo = 3;

using nlohmann::json;

// ---------------------------------------------------------------------------
// Shared helpers
// ---------------------------------------------------------------------------

ebb::Stamp now_stamp() {
  std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  return {{tm.tm_year + 1900, tm.tm_mon + 1, tm.tm_mday},
          {tm.tm_hour, tm.tm_min, tm.tm_sec, 0}};
}

std::optional<std::string> read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return "cannot open " + path;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return std::nullopt;
}

/// "[yyyy:mm:dd@]hh:mm:ss[:mmm]" -> (optional date, time)
struct TimePoint {
  std::optional<ebb::EbbDate> date;
  ebb::EbbTime time;
};

std::optional<TimePoint> parse_time_point(std::string text) {
  TimePoint tp;
  auto at = text.find('@');
  if (at != std::string::npos) {
    auto d = ebb::EbbDate::from_text(text.substr(0, at));
    if (!d || !d->valid()) return std::nullopt;
    tp.date = *d;
    text = text.substr(at + 1);
  }
  if (text.size() == 8) text += ":000";
  auto t = ebb::EbbTime::from_text(text);
  if (!t || !t->valid()) return std::nullopt;
  tp.time = *t;
  return tp;
}

bool stamp_before(const ebb::Record& r, const TimePoint& tp) {
  if (tp.date) return r.stamp() < ebb::Stamp{*tp.date, tp.time};
  return r.time < tp.time;
}

bool stamp_after(const ebb::Record& r, const TimePoint& tp) {
  if (tp.date) return ebb::Stamp{*tp.date, tp.time} < r.stamp();
  return tp.time < r.time;
}

std::string blob_digest(const ebb::BlobValue& b) {
  return ebb::compute_checksum(std::span<const std::uint8_t>(b.payload)).rendered();
}

std::string field_text(const ebb::Field& f, bool raw) {
  using namespace ebb;
  switch (kind_of(f.data)) {
    case FieldKind::Date: return std::get<EbbDate>(f.data).to_text();
    case FieldKind::Time: return std::get<EbbTime>(f.data).to_text();
    case FieldKind::Size: return std::get<RecSize>(f.data).to_text();
    case FieldKind::Text: return std::get<TextValue>(f.data).text;
    case FieldKind::FixedNum: return std::get<FixedNumValue>(f.data).text;
    case FieldKind::Blob: {
      const auto& b = std::get<BlobValue>(f.data);
      if (raw) {
        std::string hex;
        hex.reserve(2 * b.payload.size());
        static constexpr char kHex[] = "0123456789ABCDEF";
        char dev[8];
        std::snprintf(dev, sizeof dev, "%02d:", b.device);
        for (auto byte : b.payload) {
          hex.push_back(kHex[byte >> 4]);
          hex.push_back(kHex[byte & 0xF]);
        }
        return dev + hex;
      }
      char buf[64];
      std::snprintf(buf, sizeof buf, "<%02d %zu bytes %s>", b.device, b.payload.size(),
                    blob_digest(b).c_str());
      return buf;
    }
    case FieldKind::SysX: {
      const auto& v = std::get<SysXValue>(f.data);
      char buf[8];
      std::snprintf(buf, sizeof buf, "%02d:", v.index);
      return buf + v.text;
    }
    case FieldKind::Wifi: {
      const auto& v = std::get<WifiValue>(f.data);
      char buf[8];
      std::snprintf(buf, sizeof buf, "%d:%02d", v.status, v.strength);
      return buf;
    }
    case FieldKind::Decision: {
      const auto& v = std::get<DecisionValue>(f.data);
      char buf[8];
      std::snprintf(buf, sizeof buf, "%04d:", v.code);
      return buf + v.reason;
    }
    case FieldKind::Checksum: return std::get<ChecksumText>(f.data).hex;
  }
  return {};
}

json field_json(const ebb::Field& f, bool raw) {
  using namespace ebb;
  json j;
  j["label"] = f.label;
  switch (kind_of(f.data)) {
    case FieldKind::Blob: {
      const auto& b = std::get<BlobValue>(f.data);
      j["device"] = b.device;
      j["bytes"] = b.payload.size();
      j["digest"] = blob_digest(b);
      if (raw) {
        std::string hex;
        static constexpr char kHex[] = "0123456789ABCDEF";
        for (auto byte : b.payload) {
          hex.push_back(kHex[byte >> 4]);
          hex.push_back(kHex[byte & 0xF]);
        }
        j["hex"] = hex;
      }
      break;
    }
    case FieldKind::Wifi: {
      const auto& v = std::get<WifiValue>(f.data);
      j["status"] = v.status;
      j["strength"] = v.strength;
      break;
    }
    case FieldKind::Decision: {
      const auto& v = std::get<DecisionValue>(f.data);
      j["code"] = v.code;
      j["reason"] = v.reason;
      break;
    }
    case FieldKind::SysX: {
      const auto& v = std::get<SysXValue>(f.data);
      j["index"] = v.index;
      j["text"] = v.text;
      break;
    }
    default: j["value"] = field_text(f, false); break;
  }
  return j;
}

void print_record_text(const ebb::Record& r, const std::vector<std::string>& fields, bool raw,
                       std::ostream& os) {
  os << ebb::to_tag(r.type) << " ebbD " << r.date.to_text() << " ebbT " << r.time.to_text();
  for (const ebb::Field& f : r.fields) {
    if (!fields.empty() &&
        std::find(fields.begin(), fields.end(), f.label) == fields.end())
      continue;
    os << ' ' << f.label << ' ' << field_text(f, raw);
  }
  os << '\n';
}

void print_record_json(const ebb::Record& r, const std::vector<std::string>& fields, bool raw,
                       std::ostream& os) {
  json j;
  j["type"] = std::string(ebb::to_tag(r.type));
  j["ebbD"] = r.date.to_text();
  j["ebbT"] = r.time.to_text();
  j["recS"] = r.rec_size.to_text();
  j["chkS"] = r.checksum;
  j["fields"] = json::array();
  for (const ebb::Field& f : r.fields) {
    if (!fields.empty() &&
        std::find(fields.begin(), fields.end(), f.label) == fields.end())
      continue;
    j["fields"].push_back(field_json(f, raw));
  }
  os << j.dump() << '\n';
}

// ---------------------------------------------------------------------------
// init / info
// ---------------------------------------------------------------------------

struct InitArgs {
  std::string store;
  std::uint64_t slots = 400;
  std::uint64_t slot_size = 4096;
  std::uint64_t header_size = 4096;
  bool overwrite = false;
  std::string md_from;
  std::string bot_name, bot_version, bot_serial, bot_manufacturer;
  std::string operator_name, responsible, ebb_name = "ebbctl v0.1";
  std::string date, time;
};

int run_init(const InitArgs& a) {
  using namespace ebb;
  std::vector<Field> fields;
  auto add_text = [&](const char* label, const std::string& value) {
    if (!value.empty()) fields.push_back({label, TextValue{value}});
  };

  if (!a.md_from.empty()) {
    std::string text;
    if (auto err = read_file(a.md_from, text)) {
      std::cerr << "ebbctl: " << *err << "\n";
      return kIo;
    }
    std::istringstream lines(text);
    std::string line;
    int line_no = 0;
    while (std::getline(lines, line)) {
      ++line_no;
      if (line.empty() || line[0] == '#') continue;
      auto colon = line.find(':');
      if (colon == std::string::npos || colon != 4) {
        std::cerr << "ebbctl: " << a.md_from << ":" << line_no
                  << ": expected '<label>:<value>'\n";
        return kUsage;
      }
      std::string value = line.substr(colon + 1);
      while (!value.empty() && value.front() == ' ') value.erase(value.begin());
      fields.push_back({line.substr(0, 4), TextValue{value}});
    }
  } else {
    add_text("botN", a.bot_name);
    add_text("botV", a.bot_version);
    add_text("botS", a.bot_serial);
    add_text("botM", a.bot_manufacturer);
    add_text("opeR", a.operator_name);
    add_text("resP", a.responsible);
    add_text("ebbN", a.ebb_name);
  }

  Stamp stamp = now_stamp();
  if (!a.date.empty()) {
    auto d = EbbDate::from_text(a.date);
    if (!d || !d->valid()) {
      std::cerr << "ebbctl: bad --date " << a.date << "\n";
      return kUsage;
    }
    stamp.date = *d;
  }
  if (!a.time.empty()) {
    auto t = EbbTime::from_text(a.time);
    if (!t || !t->valid()) {
      std::cerr << "ebbctl: bad --time " << a.time << "\n";
      return kUsage;
    }
    stamp.time = *t;
  }

  Record md;
  try {
    md = build_record(RecordType::MD, stamp.date, stamp.time, std::move(fields));
  } catch (const BuildError& e) {
    std::cerr << "ebbctl: MD rejected: " << e.what() << "\n";
    return kUsage;
  }

  MediaGeometry geom{a.header_size, a.slot_size, a.slots};
  auto store = EbbStore::init(a.store, geom, md, a.overwrite);
  if (!store.ok()) {
    std::cerr << "ebbctl: " << store.error().to_string() << "\n";
    switch (store.error().kind) {
      case StoreErrorKind::GeometryInvalid:
      case StoreErrorKind::MdTooLarge:
      case StoreErrorKind::InvalidRecord: return kUsage;
      default: return kIo;
    }
  }
  std::cout << "initialized " << a.store << ": " << geom.capacity << " slots x "
            << geom.slot_size << " bytes, header " << geom.header_size << "\n";
  return kOk;
}

int run_info(const std::string& path) {
  auto store = ebb::EbbStore::open(path, /*writable=*/false);
  if (!store.ok()) {
    std::cerr << "ebbctl: " << store.error().to_string() << "\n";
    return kIo;
  }
  const auto& g = store.value().geometry();
  const auto& dd = store.value().dd();
  std::cout << "store      " << path << "\n"
            << "geometry   header " << g.header_size << ", slot " << g.slot_size
            << ", capacity " << g.capacity << "\n";
  print_record_text(store.value().md(), {}, false, std::cout);
  std::cout << "records    " << dd.total_records << "\n"
            << "next_slot  " << store.value().cursor() << " (ebbX " << dd.next_offset
            << ")\n";
  if (dd.total_records > 0) {
    std::cout << "oldest     " << dd.oldest.date.to_text() << " " << dd.oldest.time.to_text()
              << "\n"
              << "newest     " << dd.newest.date.to_text() << " " << dd.newest.time.to_text()
              << "\n";
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// dump / verify / extract
// ---------------------------------------------------------------------------

struct DumpArgs {
  std::string store;
  std::string from, to;
  std::string fields_csv;
  std::string format = "text";
  bool raw = false;
};

int run_dump(const DumpArgs& a) {
  std::optional<TimePoint> from, to;
  if (!a.from.empty()) {
    from = parse_time_point(a.from);
    if (!from) {
      std::cerr << "ebbctl: bad --from " << a.from << "\n";
      return kUsage;
    }
  }
  if (!a.to.empty()) {
    to = parse_time_point(a.to);
    if (!to) {
      std::cerr << "ebbctl: bad --to " << a.to << "\n";
      return kUsage;
    }
  }
  std::vector<std::string> fields;
  std::istringstream fs(a.fields_csv);
  std::string label;
  while (std::getline(fs, label, ',')) {
    if (!label.empty()) fields.push_back(label);
  }
  const bool jsonl = a.format == "jsonlines";

  auto store = ebb::EbbStore::open(a.store, /*writable=*/false);
  if (!store.ok()) {
    std::cerr << "ebbctl: " << store.error().to_string() << "\n";
    return kIo;
  }

  auto emit = [&](const ebb::Record& r) {
    if (jsonl)
      print_record_json(r, fields, a.raw, std::cout);
    else
      print_record_text(r, fields, a.raw, std::cout);
  };

  emit(store.value().md());
  auto dd = store.value().read_dd_record();
  if (dd.ok()) emit(dd.value().record);

  for (const auto& item : store.value().read_chronological()) {
    if (std::holds_alternative<ebb::CorruptSlot>(item)) {
      const auto& c = std::get<ebb::CorruptSlot>(item);
      if (jsonl) {
        json j;
        j["type"] = "corrupt-slot";
        j["slot"] = c.slot;
        j["error"] = c.error.to_string();
        std::cout << j.dump() << '\n';
      } else {
        std::cout << "!! corrupt slot " << c.slot << ": " << c.error.to_string() << "\n";
      }
      continue;
    }
    const ebb::Record& r = std::get<ebb::Record>(item);
    if (from && stamp_before(r, *from)) continue;
    if (to && stamp_after(r, *to)) continue;
    emit(r);
  }
  return kOk;
}

int run_verify(const std::string& path) {
  if (!std::filesystem::exists(path)) {
    std::cerr << "ebbctl: no such file: " << path << "\n";
    return kIo;
  }
  auto report = ebb::verify_store(path);
  if (report.clean()) {
    std::cout << "clean\n";
    return kOk;
  }
  for (const auto& f : report.findings) std::cout << f.to_string() << "\n";
  return kFindings;
}

struct ExtractArgs {
  std::string store;
  std::string label;
  std::uint64_t index = 0;
  std::string out;
};

int run_extract(const ExtractArgs& a) {
  if (a.label != "camF" && a.label != "micI") {
    std::cerr << "ebbctl: --label must be camF or micI\n";
    return kUsage;
  }
  auto store = ebb::EbbStore::open(a.store, /*writable=*/false);
  if (!store.ok()) {
    std::cerr << "ebbctl: " << store.error().to_string() << "\n";
    return kIo;
  }
  std::uint64_t seen = 0;
  for (const auto& item : store.value().read_chronological()) {
    if (!std::holds_alternative<ebb::Record>(item)) continue;
    for (const ebb::Field& f : std::get<ebb::Record>(item).fields) {
      if (f.label != a.label) continue;
      if (seen++ != a.index) continue;
      const auto& blob = std::get<ebb::BlobValue>(f.data);
      std::ofstream out(a.out, std::ios::binary | std::ios::trunc);
      out.write(reinterpret_cast<const char*>(blob.payload.data()),
                static_cast<std::streamsize>(blob.payload.size()));
      if (!out) {
        std::cerr << "ebbctl: cannot write " << a.out << "\n";
        return kIo;
      }
      std::cout << a.out << ": " << blob.payload.size() << " bytes from device "
                << blob.device << "\n";
      return kOk;
    }
  }
  std::cerr << "ebbctl: store holds " << seen << " " << a.label
            << " blob(s); --index " << a.index << " is out of range\n";
  return kUsage;
}

// ---------------------------------------------------------------------------
// serve
// ---------------------------------------------------------------------------

volatile std::sig_atomic_t g_stop = 0;

struct ServeArgs {
  std::string store;
  std::string listen = "127.0.0.1:7733";
  int idle_timeout_s = 30;
  std::uint64_t max_record = 1 << 20;
};

int run_serve(const ServeArgs& a) {
  auto colon = a.listen.rfind(':');
  if (colon == std::string::npos) {
    std::cerr << "ebbctl: --listen expects HOST:PORT\n";
    return kUsage;
  }
  ebb::IngestConfig cfg;
  cfg.host = a.listen.substr(0, colon);
  cfg.port = static_cast<std::uint16_t>(std::strtoul(a.listen.c_str() + colon + 1, nullptr, 10));
  cfg.idle_timeout_s = a.idle_timeout_s;
  cfg.max_record = a.max_record;

  auto store = ebb::EbbStore::open(a.store, /*writable=*/true, /*durable=*/true);
  if (!store.ok()) {
    std::cerr << "ebbctl: " << store.error().to_string() << "\n";
    return kIo;
  }
  ebb::IngestServer server(store.value(), cfg);
  std::string err;
  if (!server.start(err)) {
    std::cerr << "ebbctl: cannot listen on " << a.listen << ": " << err << "\n";
    return kIo;
  }
  std::cout << "listening on " << cfg.host << ":" << server.port() << ", store " << a.store
            << "\n";

  struct sigaction sa{};
  sa.sa_handler = [](int) { g_stop = 1; };
  sigaction(SIGINT, &sa, nullptr);
  sigaction(SIGTERM, &sa, nullptr);
  while (!g_stop) {
    std::this_thread::sleep_for(std::chrono::milliseconds(200));
  }
  server.stop();
  auto stats = server.drain();
  std::cout << "accepted " << stats.accepted << ", rejected " << stats.rejected << "\n";
  for (const auto& v : stats.violations) std::cout << "  " << v << "\n";
  return kOk;
}

// ---------------------------------------------------------------------------
// generate / replay
// ---------------------------------------------------------------------------

struct GenerateArgs {
  std::string script = "table9";
  double duration_s = 25.0;
  std::uint64_t seed = 1;
  std::string start_date = "2022:04:20";
  std::string start_time = "08:40:20:000";
  std::int64_t bot_skew_ms = 0;
  std::string camera_fixture;
  std::string out;  // stdout when empty
};

std::optional<ebb::simbot::Script> load_script(const std::string& name, int& exit_code) {
  using namespace ebb::simbot;
  std::string text;
  if (name == "table9") {
    text = std::string(kTable9Script);
  } else if (auto err = read_file(name, text)) {
    std::cerr << "ebbctl: " << *err << "\n";
    exit_code = kIo;
    return std::nullopt;
  }
  auto script = parse_script(text);
  if (!script.ok()) {
    std::cerr << "ebbctl: script " << name << ": " << script.error().to_string() << "\n";
    exit_code = kUsage;
    return std::nullopt;
  }
  return script.value();
}

std::optional<ebb::simbot::GeneratorConfig> make_generator_config(const GenerateArgs& a,
                                                                  int& exit_code) {
  using namespace ebb;
  simbot::GeneratorConfig cfg;
  auto d = EbbDate::from_text(a.start_date);
  auto t = EbbTime::from_text(a.start_time);
  if (!d || !d->valid() || !t || !t->valid()) {
    std::cerr << "ebbctl: bad --start-date/--start-time\n";
    exit_code = kUsage;
    return std::nullopt;
  }
  cfg.start = {*d, *t};
  cfg.seed = a.seed;
  cfg.bot_skew_ms = a.bot_skew_ms;
  if (!a.camera_fixture.empty()) {
    std::string bytes;
    if (auto err = read_file(a.camera_fixture, bytes)) {
      std::cerr << "ebbctl: " << *err << "\n";
      exit_code = kIo;
      return std::nullopt;
    }
    cfg.camera_payload.assign(bytes.begin(), bytes.end());
  }
  return cfg;
}

int run_generate(const GenerateArgs& a) {
  int exit_code = kOk;
  auto script = load_script(a.script, exit_code);
  if (!script) return exit_code;
  auto cfg = make_generator_config(a, exit_code);
  if (!cfg) return exit_code;

  auto records =
      ebb::simbot::generate(*script, *cfg, static_cast<std::int64_t>(a.duration_s * 1000));

  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!a.out.empty()) {
    file.open(a.out, std::ios::binary | std::ios::trunc);
    if (!file) {
      std::cerr << "ebbctl: cannot write " << a.out << "\n";
      return kIo;
    }
    os = &file;
  }
  for (const auto& r : records) {
    auto enc = ebb::encode_record(r);
    os->write(enc.bytes.data(), static_cast<std::streamsize>(enc.bytes.size()));
    os->put('\n');  // optional separator, skipped by parsers
  }
  std::cerr << records.size() << " records\n";
  return kOk;
}

struct ReplayArgs {
  GenerateArgs gen;
  std::string in;       // pre-encoded stream file; overrides generation
  std::string store;    // direct target
  std::string connect;  // daemon target HOST:PORT
  double speed = 0.0;
};

int run_replay(const ReplayArgs& a) {
  using namespace ebb;
  if (a.store.empty() == a.connect.empty()) {
    std::cerr << "ebbctl: exactly one of --store / --connect is required\n";
    return kUsage;
  }

  std::vector<Record> records;
  if (!a.in.empty()) {
    std::string bytes;
    if (auto err = read_file(a.in, bytes)) {
      std::cerr << "ebbctl: " << *err << "\n";
      return kIo;
    }
    for (const auto& item : scan_stream(bytes)) {
      if (std::holds_alternative<LocatedRecord>(item))
        records.push_back(std::get<LocatedRecord>(item).record);
      else {
        const auto& c = std::get<CorruptRegion>(item);
        std::cerr << "ebbctl: " << a.in << ": skipping " << c.length
                  << " unparseable bytes at offset " << c.offset << "\n";
      }
    }
  } else {
    int exit_code = kOk;
    auto script = load_script(a.gen.script, exit_code);
    if (!script) return exit_code;
    auto cfg = make_generator_config(a.gen, exit_code);
    if (!cfg) return exit_code;
    records = simbot::generate(*script, *cfg,
                               static_cast<std::int64_t>(a.gen.duration_s * 1000));
  }

  simbot::ReplayStats stats;
  if (!a.store.empty()) {
    auto store = EbbStore::open(a.store, /*writable=*/true);
    if (!store.ok()) {
      std::cerr << "ebbctl: " << store.error().to_string() << "\n";
      return kIo;
    }
    auto res = simbot::replay_to_store(records, store.value());
    if (!res.ok()) {
      std::cerr << "ebbctl: " << res.error().to_string() << "\n";
      return kIo;
    }
    stats = res.value();
  } else {
    auto colon = a.connect.rfind(':');
    if (colon == std::string::npos) {
      std::cerr << "ebbctl: --connect expects HOST:PORT\n";
      return kUsage;
    }
    auto port = static_cast<std::uint16_t>(
        std::strtoul(a.connect.c_str() + colon + 1, nullptr, 10));
    auto res = simbot::replay_to_daemon(records, a.connect.substr(0, colon), port, a.speed);
    if (!res.ok()) {
      std::cerr << "ebbctl: target unavailable: " << res.error().to_string() << "\n";
      return kIo;
    }
    stats = res.value();
  }

  std::cout << "sent " << stats.sent << ", accepted " << stats.accepted << ", rejected "
            << stats.rejected << "\n";
  for (const auto& e : stats.errors) std::cout << "  " << e << "\n";
  return stats.rejected == 0 ? kOk : kFindings;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"EBB media and ingest tool"};
  app.require_subcommand(1);

  InitArgs init_args;
  auto* init = app.add_subcommand("init", "create a new EBB media file");
  init->add_option("--store", init_args.store, "media file path")->required();
  init->add_option("--slots", init_args.slots, "RD slot count");
  init->add_option("--slot-size", init_args.slot_size, "RD slot size in bytes (power of two)");
  init->add_option("--header-size", init_args.header_size, "MD+DD region size in bytes");
  init->add_flag("--overwrite", init_args.overwrite, "replace an existing file");
  init->add_option("--md-from", init_args.md_from, "file of '<label>:<value>' MD lines");
  init->add_option("--bot-name", init_args.bot_name, "robot name (botN)");
  init->add_option("--bot-version", init_args.bot_version, "robot version (botV)");
  init->add_option("--bot-serial", init_args.bot_serial, "robot serial no (botS)");
  init->add_option("--bot-manufacturer", init_args.bot_manufacturer, "manufacturer (botM)");
  init->add_option("--operator", init_args.operator_name, "operator (opeR)");
  init->add_option("--responsible", init_args.responsible,
                   "name and contact of responsible person (resP)");
  init->add_option("--ebb-name", init_args.ebb_name, "EBB name and version (ebbN)");
  init->add_option("--date", init_args.date, "MD date yyyy:mm:dd (default: today UTC)");
  init->add_option("--time", init_args.time, "MD time hh:mm:ss:mmm (default: now UTC)");

  std::string info_store;
  auto* info = app.add_subcommand("info", "show store identity and bookkeeping");
  info->add_option("--store", info_store, "media file path")->required();

  DumpArgs dump_args;
  auto* dump = app.add_subcommand("dump", "print MD, DD and chronological RDs");
  dump->add_option("--store", dump_args.store, "media file path")->required();
  dump->add_option("--from", dump_args.from, "lower bound [yyyy:mm:dd@]hh:mm:ss[:mmm]");
  dump->add_option("--to", dump_args.to, "upper bound [yyyy:mm:dd@]hh:mm:ss[:mmm]");
  dump->add_option("--fields", dump_args.fields_csv, "comma-separated field labels to keep");
  dump->add_option("--format", dump_args.format, "text | jsonlines")
      ->check(CLI::IsMember({"text", "jsonlines"}));
  dump->add_flag("--raw", dump_args.raw, "full blob hex instead of summaries");

  std::string verify_store_path;
  auto* verify = app.add_subcommand("verify", "audit checksums and DD consistency");
  verify->add_option("--store", verify_store_path, "media file path")->required();

  ExtractArgs extract_args;
  auto* extract = app.add_subcommand("extract", "decode the K-th blob to a file");
  extract->add_option("--store", extract_args.store, "media file path")->required();
  extract->add_option("--label", extract_args.label, "camF | micI")->required();
  extract->add_option("--index", extract_args.index, "0-based blob index (chronological)");
  extract->add_option("--out", extract_args.out, "output path")->required();

  ServeArgs serve_args;
  auto* serve = app.add_subcommand("serve", "run the one-way ingest daemon");
  serve->add_option("--store", serve_args.store, "media file path")
      ->envname("EBB_STORE")
      ->required();
  serve->add_option("--listen", serve_args.listen, "HOST:PORT")->envname("EBB_LISTEN");
  serve->add_option("--idle-timeout", serve_args.idle_timeout_s, "per-connection idle seconds")
      ->envname("EBB_IDLE_TIMEOUT_S");
  serve->add_option("--max-record", serve_args.max_record, "frame size cap in bytes")
      ->envname("EBB_MAX_RECORD");

  GenerateArgs gen_args;
  auto add_gen_options = [](CLI::App* cmd, GenerateArgs& a) {
    cmd->add_option("--script", a.script, "script path or built-in name 'table9'");
    cmd->add_option("--duration", a.duration_s, "schedule horizon in seconds");
    cmd->add_option("--seed", a.seed, "generator seed");
    cmd->add_option("--start-date", a.start_date, "schedule origin date");
    cmd->add_option("--start-time", a.start_time, "schedule origin time");
    cmd->add_option("--bot-skew-ms", a.bot_skew_ms, "botT minus ebbT, in ms");
    cmd->add_option("--camera-fixture", a.camera_fixture, "jpg payload for camF records");
  };
  auto* generate = app.add_subcommand("generate", "emit a simulated record stream");
  add_gen_options(generate, gen_args);
  generate->add_option("--out", gen_args.out, "write stream here instead of stdout");

  ReplayArgs replay_args;
  auto* replay = app.add_subcommand("replay", "feed records into a store or daemon");
  add_gen_options(replay, replay_args.gen);
  replay->add_option("--in", replay_args.in, "replay a pre-encoded stream file");
  replay->add_option("--store", replay_args.store, "append directly to this media file");
  replay->add_option("--connect", replay_args.connect, "stream to a daemon at HOST:PORT");
  replay->add_option("--speed", replay_args.speed,
                     "pace at real-time/N using record timestamps (0 = flat out)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (init->parsed()) return run_init(init_args);
  if (info->parsed()) return run_info(info_store);
  if (dump->parsed()) return run_dump(dump_args);
  if (verify->parsed()) return run_verify(verify_store_path);
  if (extract->parsed()) return run_extract(extract_args);
  if (serve->parsed()) return run_serve(serve_args);
  if (generate->parsed()) return run_generate(gen_args);
  if (replay->parsed()) return run_replay(replay_args);
  return kUsage;
}
