#include <gtest/gtest.h>

#include <filesystem>

#include "pcmtk/io.hpp"
#include "pcmtk/random.hpp"

using namespace pcmtk;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const PcmError& e) {
    return e.code();
  }
  ADD_FAILURE() << "no PcmError thrown";
  return ErrorCode::InvalidArgument;
}

std::filesystem::path scratch_dir() {
  auto dir = std::filesystem::temp_directory_path() / ("pcmtk_io_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()));
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST(JsonMatrix, ParsesDocument) {
  const MatrixDocument d = parse_matrix_document(R"({"n": 3, "upper": [2, 4, 2], "name": "c"})");
  EXPECT_EQ(d.matrix.order(), 3u);
  EXPECT_EQ(d.matrix.at(0, 2), 4.0);
  EXPECT_EQ(d.matrix.at(2, 0), 0.25);
  EXPECT_EQ(d.name, "c");
}

TEST(JsonMatrix, RejectsMalformedInput) {
  EXPECT_EQ(code_of([] { parse_matrix_document("{"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_matrix_document(R"({"upper": [1]})"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_matrix_document(R"({"n": 3, "upper": [1, "x", 1]})"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_matrix_document(R"({"n": 3, "upper": [1, 2]})"); }), ErrorCode::LengthMismatch);
  EXPECT_EQ(code_of([] { parse_matrix_document(R"({"n": 3, "upper": [1, -2, 1]})"); }), ErrorCode::NonPositiveEntry);
}

TEST(JsonMatrix, RoundTripIsBitExact) {
  Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    const Pcm a = random_pcm(3 + static_cast<std::size_t>(t) % 5, rng);
    std::vector<double> upper(a.upper().begin(), a.upper().end());
    for (double& x : upper) x = std::exp(rng.uniform(-7, 7));
    const Pcm b(a.order(), upper);
    const Pcm back = parse_matrix_document(matrix_to_json(b).dump()).matrix;
    EXPECT_EQ(back, b);
  }
}

TEST(CsvMatrix, ParsesAndChecksReciprocity) {
  const Pcm a = parse_csv_matrix("1,2,4\n0.5,1,2\n0.25,0.5,1\n");
  EXPECT_EQ(a, Pcm(3, {2, 4, 2}));
  EXPECT_EQ(code_of([] { parse_csv_matrix("1,2\n0.4,1\n"); }), ErrorCode::ReciprocityViolation);
  EXPECT_EQ(code_of([] { parse_csv_matrix("1,2,3\n0.5,1,2\n"); }), ErrorCode::NonSquare);
  EXPECT_EQ(code_of([] { parse_csv_matrix("1,abc\n1,1\n"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_csv_matrix("1,2x\n0.5,1\n"); }), ErrorCode::ParseError);
}

TEST(Files, AtomicWriteAndReadBack) {
  const auto dir = scratch_dir();
  const auto json_path = dir / "m.json";
  write_file_atomic(json_path, matrix_to_json(Pcm(3, {2, 1, 2}), "triad").dump(2));
  EXPECT_FALSE(std::filesystem::exists(dir / "m.json.tmp"));
  const MatrixDocument d = read_matrix_file(json_path);
  EXPECT_EQ(d.matrix, Pcm(3, {2, 1, 2}));
  EXPECT_EQ(d.name, "triad");

  const auto csv_path = dir / "m.csv";
  write_file_atomic(csv_path, "1,3\n0.3333333333333333,1\n");
  EXPECT_EQ(read_matrix_file(csv_path).matrix.at(0, 1), 3.0);
  EXPECT_EQ(code_of([&] { read_matrix_file(dir / "missing.json"); }), ErrorCode::ParseError);
  std::filesystem::remove_all(dir);
}

TEST(WitnessJson, RoundTrip) {
  const Witness w{"order.geq", "f(A^k) >= f(A)", {{"A", Pcm(3, {2, 1, 2})}, {"A^k", Pcm(3, {4, 1, 4})}}, {0.1, 0.3},
                  {2.0, 1e-9}};
  EXPECT_EQ(witness_from_json(Json::parse(witness_to_json(w).dump())), w);
  EXPECT_EQ(code_of([] { witness_from_json(Json::parse(R"({"check": "x"})")); }), ErrorCode::ParseError);
}
