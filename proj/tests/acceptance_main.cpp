// Acceptance suite: conformance and property checks for the whole stack,
// one pass/fail line per criterion. Runs at desk scale (well under two
// minutes) and exits nonzero if any criterion fails.

#include <cstdio>
#include <cstdlib>
#include <deque>
#include <filesystem>
#include <random>
#include <regex>
#include <set>
#include <string>
#include <vector>

#include "ebb/ebb.hpp"
#include "ebb/fixtures.hpp"
#include "test_support.hpp"

using namespace ebb;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
};

#define EXPECT(cond, why)                 \
  do {                                    \
    if (!(cond)) outcome.fail(why);       \
  } while (0)

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    char tmpl[] = "/tmp/ebbaccept-XXXXXX";
    path = ::mkdtemp(tmpl);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string golden(const std::string& name) {
  return ebbtest::load_file(ebbtest::repo_root() + "/conformance/" + name);
}

Record reference_md() {
  return build_record(RecordType::MD, {2022, 4, 20}, {16, 40, 20, 0},
                      {{"botN", TextValue{"NAO"}},
                       {"botV", TextValue{"4"}},
                       {"botM", TextValue{"Aldebaran"}},
                       {"opeR", TextValue{"Bristol Robotics Lab"}},
                       {"resP", TextValue{"A Winfield +44 117 328 6913"}},
                       {"ebbN", TextValue{"PyEBB v1.2"}}});
}

Record reference_dd() {
  return build_record(RecordType::DD, {2022, 4, 20}, {16, 40, 20, 0},
                      {{"ebbN", FixedNumValue{"0000000400"}},
                       {"ebbX", FixedNumValue{"0000000001545060"}},
                       {"ebD1", EbbDate{2022, 3, 1}},
                       {"ebT1", EbbTime{8, 0, 30, 0}},
                       {"ebDM", EbbDate{2022, 5, 1}},
                       {"ebTM", EbbTime{18, 59, 30, 100}}});
}

Record reference_rd() {
  std::vector<Field> fields{{"botT", EbbTime{16, 40, 20, 0}},
                            {"actV", FixedNumValue{"001:-0175.54"}},
                            {"actV", FixedNumValue{"002:+0102.09"}},
                            {"batL", FixedNumValue{"255"}}};
  const int ir[8] = {5, 5, 5, 5, 5, 23, 15, 5};
  for (int i = 0; i < 8; ++i) {
    char buf[8];
    std::snprintf(buf, sizeof buf, "%02d:%03d", i + 1, ir[i]);
    fields.push_back({"irSe", FixedNumValue{buf}});
  }
  fields.push_back({"decC", DecisionValue{20, "obstacle detected"}});
  fields.push_back({"wifi", WifiValue{1, 99}});
  return build_record(RecordType::RD, {2022, 4, 20}, {16, 40, 20, 0}, std::move(fields));
}

const Stamp kBase{{2022, 4, 20}, {8, 40, 20, 0}};

Record rd_tagged(int k) {
  Stamp s = simbot::add_ms(kBase, 2000ll * k);
  return build_record(RecordType::RD, s.date, s.time,
                      {{"botT", s.time}, {"txtC", TextValue{"rec-" + std::to_string(k)}}});
}

std::string tag_of(const Record& r) {
  const Field* f = r.find("txtC");
  return f ? std::get<TextValue>(f->data).text : "";
}

// ---------------------------------------------------------------------------
// 1. Golden conformance
// ---------------------------------------------------------------------------

Outcome criterion_golden() {
  Outcome outcome;
  struct Row {
    const char* file;
    Record record;
  };
  const Row rows[] = {{"md_table4.ebb", reference_md()},
                      {"dd_table6.ebb", reference_dd()},
                      {"rd_table8.ebb", reference_rd()}};
  for (const Row& row : rows) {
    std::string want = golden(row.file);
    EncodeResult enc = encode_record(row.record);
    EXPECT(enc.ok(), std::string(row.file) + ": encode rejected");
    EXPECT(enc.bytes == want, std::string(row.file) + ": bytes differ from the pinned golden");
    auto parsed = parse_record(want);
    EXPECT(parsed.ok(), std::string(row.file) + ": golden does not parse");
    if (parsed.ok())
      EXPECT(parsed.value().record == row.record,
             std::string(row.file) + ": parsed fields differ");
  }

  // Spot-check the published field values.
  auto md = parse_record(golden("md_table4.ebb")).value().record;
  EXPECT(std::get<TextValue>(md.find("botN")->data).text == "NAO", "botN");
  EXPECT(std::get<TextValue>(md.find("opeR")->data).text == "Bristol Robotics Lab", "opeR");
  auto dd = parse_record(golden("dd_table6.ebb")).value().record;
  EXPECT(std::get<FixedNumValue>(dd.find("ebbN")->data).text == "0000000400", "ebbN");
  auto rd = parse_record(golden("rd_table8.ebb")).value().record;
  auto decc = std::get<DecisionValue>(rd.find("decC")->data);
  EXPECT(decc.code == 20 && decc.reason == "obstacle detected", "decC");
  outcome.detail = "3 goldens byte-exact, field values reproduced";
  return outcome;
}

// ---------------------------------------------------------------------------
// 2. Round-trip property
// ---------------------------------------------------------------------------

Outcome criterion_round_trip() {
  Outcome outcome;
  std::mt19937_64 rng(0xEBB0);
  const int kTrials = 10000;
  int failures = 0;
  for (int i = 0; i < kTrials; ++i) {
    Record r = ebbtest::random_record(rng, 65536);
    EncodeResult enc = encode_record(r);
    if (!enc.ok()) {
      ++failures;
      continue;
    }
    auto back = parse_record(enc.bytes);
    if (!back.ok() || !(back.value().record == r) ||
        back.value().consumed != enc.bytes.size())
      ++failures;
  }
  EXPECT(failures == 0, std::to_string(failures) + " of 10000 failed");
  outcome.detail = std::to_string(kTrials - failures) + "/" + std::to_string(kTrials) +
                   " randomized records (blobs to 64 KiB) survived encode->parse";
  return outcome;
}

// ---------------------------------------------------------------------------
// 3. Ring-buffer oracle
// ---------------------------------------------------------------------------

struct SlotView {
  bool used = false;
  std::optional<Stamp> stamp;
};

/// Recomputes the DD quadruple straight from the media bytes, independent of
/// the store's in-memory state.
bool dd_matches_slot_recomputation(const std::string& path, std::string& why) {
  std::string media = ebbtest::load_file(path);
  auto geom = parse_preamble(std::span<const std::uint8_t>(
      reinterpret_cast<const std::uint8_t*>(media.data()), media.size()));
  if (!geom) {
    why = "preamble unreadable";
    return false;
  }
  auto ddrec = parse_record(media, geom->dd_offset());
  if (!ddrec.ok()) {
    why = "DD unreadable: " + ddrec.error().to_string();
    return false;
  }
  auto dd = dd_state_from_record(ddrec.value().record);
  if (!dd) {
    why = "DD malformed";
    return false;
  }

  std::vector<SlotView> slots(geom->capacity);
  std::uint64_t used = 0;
  for (std::uint64_t i = 0; i < geom->capacity; ++i) {
    std::string_view slot(media.data() + geom->slot_offset(i), geom->slot_size);
    bool all_zero = slot.find_first_not_of('\0') == std::string_view::npos;
    if (all_zero) continue;
    slots[i].used = true;
    ++used;
    auto rec = parse_record(slot);
    if (!rec.ok()) {
      why = "slot " + std::to_string(i) + " unparseable";
      return false;
    }
    slots[i].stamp = rec.value().record.stamp();
  }

  // Monotonic test data: the cursor is the slot count when unwrapped, else
  // the position of the smallest stamp.
  std::uint64_t cursor = used;
  Stamp oldest{}, newest{};
  if (used == geom->capacity) {
    cursor = 0;
    for (std::uint64_t i = 1; i < geom->capacity; ++i)
      if (*slots[i].stamp < *slots[cursor].stamp) cursor = i;
  }
  if (used > 0) {
    std::uint64_t first = used < geom->capacity ? 0 : cursor;
    std::uint64_t last = used < geom->capacity ? used - 1
                                               : (cursor + geom->capacity - 1) % geom->capacity;
    oldest = *slots[first].stamp;
    newest = *slots[last].stamp;
  }
  std::uint64_t next_offset = geom->slot_offset(cursor % geom->capacity);

  if (dd->total_records != used) {
    why = "count: DD " + std::to_string(dd->total_records) + " slots " + std::to_string(used);
    return false;
  }
  if (dd->next_offset != next_offset) {
    why = "next_offset: DD " + std::to_string(dd->next_offset) + " recomputed " +
          std::to_string(next_offset);
    return false;
  }
  if (!(dd->oldest == oldest)) {
    why = "oldest mismatch";
    return false;
  }
  if (!(dd->newest == newest)) {
    why = "newest mismatch";
    return false;
  }
  return true;
}

Outcome criterion_ring_oracle() {
  Outcome outcome;
  TempDir dir;
  std::mt19937_64 rng(0x51A7);
  Record md = reference_md();

  int sequences = 0;
  std::uint64_t appends_total = 0;
  struct Plan {
    std::uint64_t capacity;
    int sequences;
    int min_len, max_len;
  };
  // 1,000 sequences across the capacity set; the large ring gets both cold
  // and wrapped coverage.
  const Plan plans[] = {
      {1, 300, 0, 12}, {2, 300, 0, 14}, {3, 300, 0, 18}, {400, 70, 0, 40}, {400, 30, 390, 430}};

  MediaGeometry geometry;
  geometry.header_size = 1024;
  geometry.slot_size = 512;

  for (const Plan& plan : plans) {
    for (int seq = 0; seq < plan.sequences; ++seq) {
      geometry.capacity = plan.capacity;
      auto path = dir.file("oracle.ebb");
      auto store = EbbStore::init(path, geometry, md, /*overwrite=*/true);
      if (!store.ok()) {
        outcome.fail("init: " + store.error().to_string());
        return outcome;
      }
      ++sequences;
      std::uniform_int_distribution<int> len(plan.min_len, plan.max_len);
      int appends = len(rng);
      std::deque<int> model;
      for (int k = 1; k <= appends; ++k) {
        if (!store.value().append_rd(rd_tagged(k)).ok()) {
          outcome.fail("append failed");
          return outcome;
        }
        model.push_back(k);
        if (model.size() > plan.capacity) model.pop_front();
        ++appends_total;

        std::string why;
        if (!dd_matches_slot_recomputation(path, why)) {
          outcome.fail("capacity " + std::to_string(plan.capacity) + " append " +
                       std::to_string(k) + ": " + why);
          return outcome;
        }
      }
      auto items = store.value().read_chronological();
      if (items.size() != model.size()) {
        outcome.fail("length mismatch vs model");
        return outcome;
      }
      for (std::size_t i = 0; i < model.size(); ++i) {
        const Record* r = std::get_if<Record>(&items[i]);
        if (!r || tag_of(*r) != "rec-" + std::to_string(model[i])) {
          outcome.fail("content mismatch vs model at position " + std::to_string(i));
          return outcome;
        }
      }
    }
  }
  outcome.detail = std::to_string(sequences) + " sequences / " +
                   std::to_string(appends_total) +
                   " appends equal the bounded-queue model; DD recomputed clean every append";
  return outcome;
}

// ---------------------------------------------------------------------------
// 4. Checksum sensitivity
// ---------------------------------------------------------------------------

Outcome criterion_checksum_sensitivity() {
  Outcome outcome;

  // Exhaustive single-bit flips over a small record.
  Record small = build_record(RecordType::RD, {2022, 4, 20}, {16, 40, 20, 0},
                              {{"botT", EbbTime{16, 40, 20, 0}},
                               {"actV", FixedNumValue{"001:+0012.34"}},
                               {"batL", FixedNumValue{"255"}},
                               {"irSe", FixedNumValue{"01:005"}},
                               {"wifi", WifiValue{1, 99}},
                               {"txtC", TextValue{"Halt"}}});
  std::string bytes = encode_record(small).bytes;
  if (bytes.size() > 256) {
    outcome.fail("fixture record unexpectedly larger than 256 bytes");
    return outcome;
  }
  std::uint64_t flips = 0, caught = 0;
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    for (int bit = 0; bit < 8; ++bit) {
      std::string mutated = bytes;
      mutated[i] = static_cast<char>(mutated[i] ^ (1 << bit));
      ++flips;
      auto res = parse_record(mutated);
      if (!res.ok() || !(res.value().record == small)) ++caught;
    }
  }
  EXPECT(caught == flips,
         std::to_string(flips - caught) + " undetected flips of " + std::to_string(flips));

  // Monte-Carlo single-byte corruption over ~1 KiB records.
  std::mt19937_64 rng(0xC0DE);
  std::vector<std::uint8_t> payload(420);
  for (auto& b : payload) b = static_cast<std::uint8_t>(rng());
  Record big = build_record(RecordType::RD, {2022, 4, 20}, {16, 40, 20, 0},
                            {{"botT", EbbTime{16, 40, 20, 0}},
                             {"micI", BlobValue{3, payload}},
                             {"txtR", TextValue{"status nominal"}}});
  std::string big_bytes = encode_record(big).bytes;
  if (big_bytes.size() < 900 || big_bytes.size() > 1200) {
    outcome.fail("fixture record is not about 1 KiB: " + std::to_string(big_bytes.size()));
    return outcome;
  }
  const int kTrials = 10000;
  int detected = 0;
  std::uniform_int_distribution<std::size_t> pos(0, big_bytes.size() - 1);
  std::uniform_int_distribution<int> byte(0, 255);
  for (int t = 0; t < kTrials; ++t) {
    std::string mutated = big_bytes;
    std::size_t at = pos(rng);
    char replacement;
    do {
      replacement = static_cast<char>(byte(rng));
    } while (replacement == mutated[at]);
    mutated[at] = replacement;
    auto res = parse_record(mutated);
    if (!res.ok() || !(res.value().record == big)) ++detected;
  }
  EXPECT(detected >= 9990, "detected only " + std::to_string(detected) + "/10000");
  outcome.detail = std::to_string(flips) + "/" + std::to_string(flips) +
                   " bit flips caught; " + std::to_string(detected) +
                   "/10000 random byte corruptions caught";
  return outcome;
}

// ---------------------------------------------------------------------------
// 5. Schedule reproduction
// ---------------------------------------------------------------------------

Outcome criterion_schedule() {
  Outcome outcome;
  auto script_text = ebbtest::load_file(ebbtest::repo_root() + "/scripts/table9.script");
  auto script = simbot::parse_script(script_text);
  if (!script.ok()) {
    outcome.fail("bundled script: " + script.error().to_string());
    return outcome;
  }
  simbot::GeneratorConfig cfg;
  cfg.start = kBase;
  cfg.seed = 42;
  auto records = simbot::generate(script.value(), cfg, 25000);
  EXPECT(records.size() == 17, "expected 17 records, got " + std::to_string(records.size()));
  if (records.size() != 17) return outcome;

  enum Kind { M, C, T };
  auto kind = [](const Record& r) {
    return r.find("camF") ? C : (r.find("txtC") ? T : M);
  };
  const Kind expected_kinds[17] = {M, M, C, M, T, M, M, M, M, C, M, M, T, M, M, M, C};
  const int expected_ms[17] = {22000, 24000, 25000, 26000, 27100, 28000, 30000, 32000, 34000,
                               35000, 36000, 38000, -1, 40000, 42000, 44000, 45000};
  for (int i = 0; i < 17; ++i) {
    if (kind(records[i]) != expected_kinds[i]) {
      outcome.fail("row " + std::to_string(i + 1) + ": wrong kind");
    }
    if (expected_ms[i] >= 0 &&
        !(records[i].stamp() == simbot::add_ms(kBase, expected_ms[i] - 20000))) {
      outcome.fail("row " + std::to_string(i + 1) + ": wrong timestamp");
    }
  }
  // Row 13 is pinned by ordering (its published time is an accepted
  // erratum): strictly between rows 12 and 14.
  EXPECT(records[11].stamp() < records[12].stamp(), "row 13 not after row 12");
  EXPECT(records[12].stamp() < records[13].stamp(), "row 13 not before row 14");

  std::vector<std::int64_t> motor, camera;
  for (const auto& r : records) {
    if (kind(r) == M) motor.push_back(r.time.ms_of_day());
    if (kind(r) == C) camera.push_back(r.time.ms_of_day());
  }
  EXPECT(motor.size() == 12 && camera.size() == 3, "kind counts off");
  for (std::size_t i = 1; i < motor.size(); ++i)
    EXPECT(motor[i] - motor[i - 1] == 2000, "motor delta not exactly 2000 ms");
  for (std::size_t i = 1; i < camera.size(); ++i)
    EXPECT(camera[i] - camera[i - 1] == 10000, "camera delta not exactly 10000 ms");

  for (const auto& r : records)
    EXPECT(validate_record(r).empty(), "generated record violates the catalog");
  outcome.detail = "17 rows, kinds and stamps as published, 2000/10000 ms cadences exact";
  return outcome;
}

// ---------------------------------------------------------------------------
// 6. End-to-end one-way pipeline
// ---------------------------------------------------------------------------

Outcome criterion_end_to_end() {
  Outcome outcome;
  TempDir dir;
  MediaGeometry geometry;
  geometry.header_size = 4096;
  geometry.slot_size = 4096;
  geometry.capacity = 32;

  auto script = simbot::parse_script(simbot::kTable9Script);
  simbot::GeneratorConfig cfg;
  cfg.start = kBase;
  cfg.seed = 7;
  auto records = simbot::generate(script.value(), cfg, 25000);

  auto direct = EbbStore::init(dir.file("direct.ebb"), geometry, reference_md());
  auto served = EbbStore::init(dir.file("served.ebb"), geometry, reference_md());
  if (!direct.ok() || !served.ok()) {
    outcome.fail("store init failed");
    return outcome;
  }
  auto direct_stats = simbot::replay_to_store(records, direct.value());
  EXPECT(direct_stats.ok() && direct_stats.value().accepted == 17, "direct replay");

  IngestServer server(served.value(), IngestConfig{});
  std::string err;
  if (!server.start(err)) {
    outcome.fail("server: " + err);
    return outcome;
  }
  {
    auto client = IngestClient::connect("127.0.0.1", server.port());
    if (!client.ok()) {
      outcome.fail("connect: " + client.error().to_string());
      return outcome;
    }
    EXPECT(client.value().banner() == "EBB/0.1", "banner");
    for (const auto& r : records) {
      auto reply = client.value().send_record(encode_record(r).bytes);
      if (!reply.ok() || reply.value() != "OK") {
        outcome.fail("push rejected");
        break;
      }
    }
    static const std::regex grammar("EBB/0\\.1\\n(OK\\n|ERR [A-Z]+\\n)*");
    EXPECT(std::regex_match(client.value().transcript(), grammar),
           "daemon transcript violates the banner/ack grammar");
  }
  server.stop();
  auto stats = server.drain();
  EXPECT(stats.accepted == 17 && stats.rejected == 0, "daemon stats");

  std::string a = ebbtest::load_file(dir.file("direct.ebb"));
  std::string b = ebbtest::load_file(dir.file("served.ebb"));
  EXPECT(a.size() == b.size(), "file sizes differ");
  EXPECT(a.substr(geometry.header_size) == b.substr(geometry.header_size),
         "RD regions differ between daemon and direct paths");
  outcome.detail = "daemon and direct stores byte-identical in the RD region; transcript "
                   "matches the ack grammar";
  return outcome;
}

// ---------------------------------------------------------------------------
// 7. Crash safety
// ---------------------------------------------------------------------------

Outcome criterion_crash_safety() {
  Outcome outcome;
  TempDir dir;
  std::mt19937_64 rng(0xDEAD);
  MediaGeometry g;
  g.header_size = 1024;
  g.slot_size = 512;
  g.capacity = 5;
  Record md = reference_md();

  const int kTrials = 100;
  int stale = 0, torn_slot = 0, torn_dd = 0, clean = 0;
  for (int trial = 0; trial < kTrials; ++trial) {
    auto path = dir.file("crash.ebb");
    auto store = EbbStore::init(path, g, md, /*overwrite=*/true);
    if (!store.ok()) {
      outcome.fail("init failed");
      return outcome;
    }
    std::uniform_int_distribution<int> prior_dist(0, 9);
    int prior = prior_dist(rng);  // acknowledged appends before the crash
    for (int k = 1; k <= prior; ++k) {
      if (!store.value().append_rd(rd_tagged(k)).ok()) {
        outcome.fail("append failed");
        return outcome;
      }
    }
    std::string before = ebbtest::load_file(path);
    std::uint64_t target_slot = store.value().cursor();
    if (!store.value().append_rd(rd_tagged(prior + 1)).ok()) {
      outcome.fail("append failed");
      return outcome;
    }
    std::string after = ebbtest::load_file(path);

    // Interrupt the append at a random byte point of its write sequence:
    // slot bytes land first, then the DD region.
    auto slot_parsed = parse_record(std::string_view(after).substr(g.slot_offset(target_slot)));
    std::size_t slot_len = slot_parsed.value().consumed;
    auto dd_parsed = parse_record(std::string_view(after).substr(g.dd_offset()));
    std::size_t dd_len = dd_parsed.value().consumed;
    std::uniform_int_distribution<std::size_t> point_dist(0, slot_len + dd_len);
    std::size_t point = point_dist(rng);

    std::string crashed = before;
    std::size_t slot_bytes = std::min(point, slot_len);
    crashed.replace(g.slot_offset(target_slot), slot_bytes,
                    after.substr(g.slot_offset(target_slot), slot_bytes));
    if (point > slot_len) {
      std::size_t dd_bytes = point - slot_len;
      crashed.replace(g.dd_offset(), dd_bytes, after.substr(g.dd_offset(), dd_bytes));
    }
    ebbtest::save_file(path, crashed);

    // Forensic gate: at most one finding, attributable to the interrupted
    // append.
    auto report = verify_store(path);
    if (report.findings.size() > 1) {
      outcome.fail("trial " + std::to_string(trial) + ": " +
                   std::to_string(report.findings.size()) + " findings");
      return outcome;
    }
    if (report.clean()) {
      ++clean;
    } else {
      switch (report.findings[0].kind) {
        case FindingKind::StaleDd: ++stale; break;
        case FindingKind::TornSlot: ++torn_slot; break;
        case FindingKind::BadDd: ++torn_dd; break;
        default:
          outcome.fail("trial " + std::to_string(trial) + ": unexpected finding " +
                       report.findings[0].to_string());
          return outcome;
      }
    }

    // Every previously acknowledged record must still be readable.
    auto reopened = EbbStore::open(path);
    if (!reopened.ok()) {
      outcome.fail("trial " + std::to_string(trial) +
                   ": reopen failed: " + reopened.error().to_string());
      return outcome;
    }
    std::set<std::string> readable;
    for (const auto& item : reopened.value().read_chronological()) {
      if (const Record* r = std::get_if<Record>(&item)) readable.insert(tag_of(*r));
    }
    int first_retained = std::max(1, prior - static_cast<int>(g.capacity) + 1);
    for (int k = first_retained; k <= prior; ++k) {
      // The slot the in-flight append was overwriting is legitimately gone.
      std::uint64_t slot_of_k = static_cast<std::uint64_t>(k - 1) % g.capacity;
      if (slot_of_k == target_slot && prior >= static_cast<int>(g.capacity)) continue;
      if (!readable.count("rec-" + std::to_string(k))) {
        outcome.fail("trial " + std::to_string(trial) + ": acknowledged rec-" +
                     std::to_string(k) + " lost");
        return outcome;
      }
    }
  }
  outcome.detail = "100 injected crashes: " + std::to_string(clean) + " clean, " +
                   std::to_string(stale) + " stale-dd, " + std::to_string(torn_slot) +
                   " torn-slot, " + std::to_string(torn_dd) +
                   " torn-dd; no acknowledged record lost";
  return outcome;
}

// ---------------------------------------------------------------------------
// 8. Forensic scan
// ---------------------------------------------------------------------------

Outcome criterion_forensic_scan() {
  Outcome outcome;
  std::mt19937_64 rng(0x5CAB);

  std::vector<std::string> encodings;
  encodings.push_back(golden("md_table4.ebb"));
  encodings.push_back(golden("dd_table6.ebb"));
  for (int k = 1; k <= 10; ++k) encodings.push_back(encode_record(rd_tagged(k)).bytes);
  encodings.push_back(golden("rd_table8.ebb"));

  // Known gap plan: garbage spans between some records, then a truncated
  // final record.
  std::string corpus;
  struct Expect {
    bool is_gap;
    std::size_t offset;
    std::size_t length;
  };
  std::vector<Expect> plan;
  std::uniform_int_distribution<int> gap_len(5, 64);
  std::uniform_int_distribution<int> gap_coin(0, 2);
  for (std::size_t i = 0; i < encodings.size(); ++i) {
    if (i > 0 && gap_coin(rng) == 0) {
      int len = gap_len(rng);
      plan.push_back({true, corpus.size(), static_cast<std::size_t>(len)});
      for (int j = 0; j < len; ++j)
        corpus.push_back(static_cast<char>(0xA0 | (rng() & 0x0F)));  // never a record tag
    }
    plan.push_back({false, corpus.size(), encodings[i].size()});
    corpus += encodings[i];
  }
  std::string trailing = encode_record(rd_tagged(77)).bytes;
  std::size_t cut = trailing.size() / 3;
  plan.push_back({true, corpus.size(), cut});
  corpus += trailing.substr(0, cut);

  auto items = scan_stream(corpus);
  EXPECT(items.size() == plan.size(), "expected " + std::to_string(plan.size()) +
                                          " items, got " + std::to_string(items.size()));
  std::size_t checked = std::min(items.size(), plan.size());
  int gaps = 0, records = 0;
  for (std::size_t i = 0; i < checked; ++i) {
    const Expect& want = plan[i];
    if (want.is_gap) {
      const auto* region = std::get_if<CorruptRegion>(&items[i]);
      if (!region) {
        outcome.fail("item " + std::to_string(i) + ": expected a corrupt region");
        continue;
      }
      ++gaps;
      EXPECT(region->offset == want.offset, "gap offset off at item " + std::to_string(i));
      EXPECT(region->length == want.length, "gap length off at item " + std::to_string(i));
    } else {
      const auto* rec = std::get_if<LocatedRecord>(&items[i]);
      if (!rec) {
        outcome.fail("item " + std::to_string(i) + ": expected a record");
        continue;
      }
      ++records;
      EXPECT(rec->offset == want.offset, "record offset off at item " + std::to_string(i));
      EXPECT(rec->length == want.length, "record length off at item " + std::to_string(i));
    }
  }
  outcome.detail = std::to_string(records) + " records recovered, " + std::to_string(gaps) +
                   " gaps reported at exact offsets/lengths";
  return outcome;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {1, "golden conformance", criterion_golden},
      {2, "round-trip property", criterion_round_trip},
      {3, "ring-buffer oracle", criterion_ring_oracle},
      {4, "checksum sensitivity", criterion_checksum_sensitivity},
      {5, "schedule reproduction", criterion_schedule},
      {6, "end-to-end one-way pipeline", criterion_end_to_end},
      {7, "crash safety", criterion_crash_safety},
      {8, "forensic scan", criterion_forensic_scan},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    Outcome outcome = c.run();
    std::printf("[%s] %d. %s: %s\n", outcome.pass ? "PASS" : "FAIL", c.id, c.name,
                outcome.detail.c_str());
    if (!outcome.pass) ++failed;
  }
  if (failed > 0) std::printf("%d of 8 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
