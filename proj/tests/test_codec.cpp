#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <string>

#include "ebb/codec.hpp"
#include "test_support.hpp"

using namespace ebb;

namespace {

// Reference FNV-1a 64 written from its definition, independent of the
// library path it checks.
std::uint64_t reference_fnv1a64(std::string_view data) {
  std::uint64_t hash = 14695981039346656037ull;  // offset basis
  for (unsigned char c : data) {
    hash = (hash ^ c) * 1099511628211ull;  // prime
  }
  return hash;
}

Record table4_md() {
  return build_record(RecordType::MD, {2022, 4, 20}, {16, 40, 20, 0},
                      {{"botN", TextValue{"NAO"}},
                       {"botV", TextValue{"4"}},
                       {"botM", TextValue{"Aldebaran"}},
                       {"opeR", TextValue{"Bristol Robotics Lab"}},
                       {"resP", TextValue{"A Winfield +44 117 328 6913"}},
                       {"ebbN", TextValue{"PyEBB v1.2"}}});
}

Record table6_dd() {
  return build_record(RecordType::DD, {2022, 4, 20}, {16, 40, 20, 0},
                      {{"ebbN", FixedNumValue{"0000000400"}},
                       {"ebbX", FixedNumValue{"0000000001545060"}},
                       {"ebD1", EbbDate{2022, 3, 1}},
                       {"ebT1", EbbTime{8, 0, 30, 0}},
                       {"ebDM", EbbDate{2022, 5, 1}},
                       {"ebTM", EbbTime{18, 59, 30, 100}}});
}

Record table8_rd() {
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

std::string golden(const std::string& name) {
  return ebbtest::load_file(ebbtest::repo_root() + "/conformance/" + name);
}

}  // namespace

TEST_CASE("checksum constants and rendering") {
  // Empty input must yield the FNV-1a 64 offset basis.
  auto empty = compute_checksum(std::string_view{});
  CHECK(empty.hash64 == 0xCBF29CE484222325ull);
  CHECK(empty.rendered() == "84222325");
  CHECK(empty.rendered().size() == 8);
}

TEST_CASE("checksum agrees with an independent reference implementation") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    std::string data = ebbtest::random_text(rng, 300);
    CHECK(fnv1a64(std::span<const std::uint8_t>(
              reinterpret_cast<const std::uint8_t*>(data.data()), data.size())) ==
          reference_fnv1a64(data));
  }
  // Frozen value over the MD golden prefix (derived once with the reference
  // implementation).
  std::string md = golden("md_table4.ebb");
  auto prefix = std::string_view(md).substr(0, md.size() - 8);
  CHECK(compute_checksum(prefix).rendered() == "F02B47C9");
}

TEST_CASE("golden encodings match byte for byte") {
  SECTION("MD of the reference metadata example") {
    EncodeResult enc = encode_record(table4_md());
    REQUIRE(enc.ok());
    CHECK(enc.bytes == golden("md_table4.ebb"));
    CHECK(enc.bytes.size() == 180);
    CHECK(enc.rec_size == RecSize{10, 180});
    CHECK(enc.checksum == "F02B47C9");
  }
  SECTION("DD of the reference bookkeeping example") {
    EncodeResult enc = encode_record(table6_dd());
    REQUIRE(enc.ok());
    CHECK(enc.bytes == golden("dd_table6.ebb"));
    CHECK(enc.bytes.size() == 174);
    CHECK(enc.checksum == "8946124C");
  }
  SECTION("RD of the reference robot-data example") {
    EncodeResult enc = encode_record(table8_rd());
    REQUIRE(enc.ok());
    CHECK(enc.bytes == golden("rd_table8.ebb"));
    CHECK(enc.bytes.size() == 266);
    CHECK(enc.rec_size == RecSize{18, 266});
    CHECK(enc.checksum == "4F8354FE");
  }
}

TEST_CASE("parsing the goldens reproduces the tables' values") {
  SECTION("MD fields") {
    auto res = parse_record(golden("md_table4.ebb"));
    REQUIRE(res.ok());
    const Record& r = res.value().record;
    CHECK(res.value().consumed == 180);
    CHECK(r.type == RecordType::MD);
    CHECK(r.date == EbbDate{2022, 4, 20});
    CHECK(r.time == EbbTime{16, 40, 20, 0});
    CHECK(std::get<TextValue>(r.find("botN")->data).text == "NAO");
    CHECK(std::get<TextValue>(r.find("botV")->data).text == "4");
    CHECK(std::get<TextValue>(r.find("botM")->data).text == "Aldebaran");
    CHECK(std::get<TextValue>(r.find("opeR")->data).text == "Bristol Robotics Lab");
    CHECK(std::get<TextValue>(r.find("resP")->data).text == "A Winfield +44 117 328 6913");
    CHECK(std::get<TextValue>(r.find("ebbN")->data).text == "PyEBB v1.2");
    CHECK(r.checksum == "F02B47C9");
    CHECK(validate_record(r).empty());
  }
  SECTION("DD fields") {
    auto res = parse_record(golden("dd_table6.ebb"));
    REQUIRE(res.ok());
    const Record& r = res.value().record;
    CHECK(std::get<FixedNumValue>(r.find("ebbN")->data).text == "0000000400");
    CHECK(std::get<FixedNumValue>(r.find("ebbX")->data).text == "0000000001545060");
    CHECK(std::get<EbbDate>(r.find("ebD1")->data) == EbbDate{2022, 3, 1});
    CHECK(std::get<EbbTime>(r.find("ebTM")->data) == EbbTime{18, 59, 30, 100});
  }
  SECTION("RD fields") {
    auto res = parse_record(golden("rd_table8.ebb"));
    REQUIRE(res.ok());
    const Record& r = res.value().record;
    auto decc = std::get<DecisionValue>(r.find("decC")->data);
    CHECK(decc.code == 20);
    CHECK(decc.reason == "obstacle detected");
    auto wifi = std::get<WifiValue>(r.find("wifi")->data);
    CHECK(wifi.status == 1);
    CHECK(wifi.strength == 99);
    CHECK(std::get<FixedNumValue>(r.find("batL")->data).text == "255");
    int irse = 0;
    for (const Field& f : r.fields)
      if (f.label == "irSe") irse++;
    CHECK(irse == 8);
    CHECK(r == table8_rd());
  }
}

TEST_CASE("notable encodings") {
  SECTION("empty decision reason still carries its NUL") {
    Record r = build_record(RecordType::RD, {2022, 4, 20}, {16, 40, 20, 0},
                            {{"botT", EbbTime{16, 40, 20, 0}}, {"decC", DecisionValue{20, ""}}});
    EncodeResult enc = encode_record(r);
    REQUIRE(enc.ok());
    CHECK(enc.bytes.find(std::string("decC 0020:\0", 11)) != std::string::npos);
  }
  SECTION("blob payload renders as uppercase hex") {
    Record r = build_record(
        RecordType::RD, {2022, 4, 20}, {16, 40, 20, 0},
        {{"botT", EbbTime{16, 40, 20, 0}},
         {"camF", BlobValue{1, {0xDE, 0xAD, 0xBE, 0xEF}}}});
    EncodeResult enc = encode_record(r);
    REQUIRE(enc.ok());
    CHECK(enc.bytes.find("camF 01:00000004:DEADBEEF") != std::string::npos);
  }
  SECTION("blob hex is accepted in either case on input") {
    Record r = build_record(
        RecordType::RD, {2022, 4, 20}, {16, 40, 20, 0},
        {{"botT", EbbTime{16, 40, 20, 0}},
         {"camF", BlobValue{1, {0xDE, 0xAD, 0xBE, 0xEF}}}});
    std::string enc = encode_record(r).bytes;
    auto pos = enc.find("DEADBEEF");
    REQUIRE(pos != std::string::npos);
    enc.replace(pos, 8, "deadbeef");
    ebbtest::rechecksum(enc);
    auto res = parse_record(enc);
    REQUIRE(res.ok());
    CHECK(std::get<BlobValue>(res.value().record.find("camF")->data).payload ==
          std::vector<std::uint8_t>{0xDE, 0xAD, 0xBE, 0xEF});
  }
}

TEST_CASE("round trip preserves records exactly") {
  std::mt19937_64 rng(20220421);
  for (int i = 0; i < 500; ++i) {
    Record r = ebbtest::random_record(rng, 4096);
    EncodeResult enc = encode_record(r);
    CAPTURE(i);
    REQUIRE(enc.ok());
    auto back = parse_record(enc.bytes);
    REQUIRE(back.ok());
    CHECK(back.value().record == r);
    // Length honesty: consumed == encoded length == embedded char count.
    CHECK(back.value().consumed == enc.bytes.size());
    CHECK(back.value().consumed == back.value().record.rec_size.char_count);
  }
}

TEST_CASE("parse failure taxonomy") {
  std::string md = golden("md_table4.ebb");

  SECTION("bad tag") {
    std::string bytes = md;
    bytes[0] = 'X';
    auto res = parse_record(bytes);
    REQUIRE_FALSE(res.ok());
    CHECK(res.error().kind == ParseErrorKind::BadTag);
  }
  SECTION("truncated buffer") {
    auto res = parse_record(std::string_view(md).substr(0, md.size() - 10));
    REQUIRE_FALSE(res.ok());
    CHECK(res.error().kind == ParseErrorKind::TruncatedRecord);
  }
  SECTION("flipped payload byte breaks the checksum") {
    std::string bytes = golden("rd_table8.ebb");
    // Flip inside free text, where any byte is lexically legal; only the
    // checksum can notice.
    auto pos = bytes.find("obstacle");
    REQUIRE(pos != std::string::npos);
    bytes[pos] ^= 0x01;
    auto res = parse_record(bytes);
    REQUIRE_FALSE(res.ok());
    CHECK(res.error().kind == ParseErrorKind::ChecksumMismatch);
    CHECK(res.error().expected.size() == 8);
    CHECK(res.error().actual.size() == 8);
    CHECK(res.error().expected != res.error().actual);
  }
  SECTION("field count disagreement") {
    std::string bytes = md;
    // recS field count digits live at bytes 8..10 ("010"); claim 11 fields.
    bytes[9] = '1';
    bytes[10] = '1';
    ebbtest::rechecksum(bytes);
    auto res = parse_record(bytes);
    REQUIRE_FALSE(res.ok());
    CHECK(res.error().kind == ParseErrorKind::CountMismatch);
  }
  SECTION("unknown label inside an otherwise sound frame") {
    std::string bytes = md;
    auto pos = bytes.find("botV");
    bytes.replace(pos, 4, "botQ");
    ebbtest::rechecksum(bytes);
    auto res = parse_record(bytes);
    REQUIRE_FALSE(res.ok());
    CHECK(res.error().kind == ParseErrorKind::FieldFormatError);
    CHECK(res.error().label == "botQ");
    CHECK(res.error().offset == pos);
  }
}

TEST_CASE("every single-bit flip in a small record is detected") {
  Record r = build_record(RecordType::RD, {2022, 4, 20}, {16, 40, 20, 0},
                          {{"botT", EbbTime{16, 40, 20, 0}},
                           {"batL", FixedNumValue{"255"}},
                           {"irSe", FixedNumValue{"01:005"}},
                           {"wifi", WifiValue{1, 99}}});
  std::string bytes = encode_record(r).bytes;
  REQUIRE(bytes.size() <= 256);
  std::size_t undetected = 0;
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    for (int bit = 0; bit < 8; ++bit) {
      std::string mutated = bytes;
      mutated[i] = static_cast<char>(mutated[i] ^ (1 << bit));
      auto res = parse_record(mutated);
      if (res.ok() && res.value().record == r) ++undetected;
      if (res.ok() && !(res.value().record == r)) ++undetected;  // silent corruption
    }
  }
  CHECK(undetected == 0);
}

TEST_CASE("scan_stream recovers records and reports damage") {
  std::string a = golden("md_table4.ebb");
  std::string b = golden("dd_table6.ebb");
  std::string c = golden("rd_table8.ebb");

  SECTION("clean concatenation") {
    std::string stream = a + b + c;
    auto items = scan_stream(stream);
    REQUIRE(items.size() == 3);
    CHECK(std::get<LocatedRecord>(items[0]).offset == 0);
    CHECK(std::get<LocatedRecord>(items[1]).offset == a.size());
    CHECK(std::get<LocatedRecord>(items[2]).offset == a.size() + b.size());
  }
  SECTION("newlines between records are not damage") {
    std::string stream = a + "\n" + b + "\n\n" + c + "\n";
    auto items = scan_stream(stream);
    REQUIRE(items.size() == 3);
    for (const auto& item : items) CHECK(std::holds_alternative<LocatedRecord>(item));
  }
  SECTION("injected garbage becomes one corrupt region of exact size") {
    std::string garbage(16, '\xAA');
    std::string stream = a + garbage + b;
    auto items = scan_stream(stream);
    REQUIRE(items.size() == 3);
    auto& region = std::get<CorruptRegion>(items[1]);
    CHECK(region.offset == a.size());
    CHECK(region.length == 16);
    CHECK(std::get<LocatedRecord>(items[2]).offset == a.size() + 16);
  }
  SECTION("truncated final record") {
    std::string stream = a + b + c.substr(0, c.size() / 2);
    auto items = scan_stream(stream);
    REQUIRE(items.size() == 3);
    CHECK(std::holds_alternative<LocatedRecord>(items[0]));
    CHECK(std::holds_alternative<LocatedRecord>(items[1]));
    auto& region = std::get<CorruptRegion>(items[2]);
    CHECK(region.offset == a.size() + b.size());
    CHECK(region.length == c.size() / 2);
  }
}

TEST_CASE("oversize guards") {
  // 1000 fields blows the recS field budget.
  std::vector<Field> many;
  many.push_back({"botT", EbbTime{16, 40, 20, 0}});
  for (int i = 0; i < 1000; ++i) many.push_back({"irSe", FixedNumValue{"01:005"}});
  CHECK_THROWS_AS(build_record(RecordType::RD, {2022, 4, 20}, {16, 40, 20, 0}, std::move(many)),
                  BuildError);
}
