#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "zigzag/chunk_io.hpp"
#include "zigzag/constructions.hpp"
#include "zigzag/spec_io.hpp"

using namespace zigzag;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("zigzag-io-test-" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

} // namespace

TEST_CASE("spec text roundtrip is byte-identical") {
    const std::vector<CodeSpec> specs = {
        build_optimal_r2(2), build_optimal_r2(3),
        build_duplication(build_optimal_r2(2), 2, 3),
        build_weight3(3, 9), build_optimal_general(2, 3, 7, 3),
        build_from_vectors({RVector(2, 2), RVector::unit(2, 2, 1)}, 2, 2)};
    for (const CodeSpec& spec : specs) {
        const std::string text = spec_to_text(spec);
        const CodeSpec back = spec_from_text(text);
        CHECK(spec_to_text(back) == text);
        CHECK(back.k() == spec.k());
        CHECK(back.r == spec.r);
        CHECK(back.field.q() == spec.field.q());
        CHECK(back.coefficients_verified == spec.coefficients_verified);
        for (int j = 0; j < spec.k(); ++j) {
            CHECK(back.columns[j].vector == spec.columns[j].vector);
            CHECK(back.columns[j].coeff == spec.columns[j].coeff);
            CHECK(back.columns[j].rebuild_rows == spec.columns[j].rebuild_rows);
        }
    }
}

TEST_CASE("spec file save/load roundtrip") {
    TempDir tmp;
    const fs::path file = tmp.path / "code.spec";
    const CodeSpec spec = build_optimal_general(2, 3, 7, 3);
    save_spec(spec, file.string());
    const CodeSpec back = load_spec(file.string());
    CHECK(spec_to_text(back) == spec_to_text(spec));
}

TEST_CASE("malformed spec text is an I/O error") {
    const CodeSpec spec = build_optimal_r2(2);
    const std::string text = spec_to_text(spec);
    CHECK_THROWS_AS(spec_from_text(""), IoError);
    CHECK_THROWS_AS(spec_from_text("format_version 2\n"), IoError);
    CHECK_THROWS_AS(spec_from_text(text.substr(0, text.size() / 2)), IoError);
    // corrupt a coefficient into 0: validation must reject it
    std::string zeroed = text;
    const auto pos = zeroed.rfind(" 2");
    REQUIRE(pos != std::string::npos);
    zeroed[pos + 1] = '0';
    CHECK_THROWS_AS(spec_from_text(zeroed), IoError);
}

TEST_CASE("loading a missing spec file is an I/O error") {
    CHECK_THROWS_AS(load_spec("/nonexistent/dir/code.spec"), IoError);
}

TEST_CASE("chunk header and body roundtrip") {
    TempDir tmp;
    const fs::path file = tmp.path / "chunk.zzac";
    ChunkHeader hdr;
    hdr.q = 9;
    hdr.column_index = 3;
    hdr.column_type = 1;
    hdr.p = 4;
    hdr.stripe_count = 2;
    const std::vector<std::uint8_t> body = {0, 1, 2, 8, 7, 6, 5, 3};
    write_chunk(file.string(), hdr, body);
    const auto [back, data] = read_chunk(file.string());
    CHECK(back.q == hdr.q);
    CHECK(back.column_index == hdr.column_index);
    CHECK(back.column_type == hdr.column_type);
    CHECK(back.p == hdr.p);
    CHECK(back.stripe_count == hdr.stripe_count);
    CHECK(data == body);
}

TEST_CASE("write_chunk validates its arguments") {
    TempDir tmp;
    const fs::path file = tmp.path / "chunk.zzac";
    ChunkHeader hdr;
    hdr.q = 3;
    hdr.p = 4;
    hdr.stripe_count = 1;
    CHECK_THROWS_AS(write_chunk(file.string(), hdr, {0, 1, 2}), IoError);      // short body
    CHECK_THROWS_AS(write_chunk(file.string(), hdr, {0, 1, 2, 3}), IoError);   // 3 >= q
    ChunkHeader big = hdr;
    big.q = 300;
    CHECK_THROWS_AS(write_chunk(file.string(), big, {0, 1, 2, 0}), IoError);
    CHECK_NOTHROW(write_chunk(file.string(), hdr, {0, 1, 2, 0}));
}

TEST_CASE("corrupted chunks are rejected") {
    TempDir tmp;
    const fs::path file = tmp.path / "chunk.zzac";
    ChunkHeader hdr;
    hdr.q = 3;
    hdr.p = 2;
    hdr.stripe_count = 1;
    write_chunk(file.string(), hdr, {1, 2});

    SUBCASE("bad magic") {
        std::fstream f(file, std::ios::in | std::ios::out | std::ios::binary);
        f.seekp(0);
        f.write("XXXX", 4);
        f.close();
        CHECK_THROWS_AS(read_chunk(file.string()), IoError);
    }
    SUBCASE("truncated body") {
        fs::resize_file(file, fs::file_size(file) - 1);
        CHECK_THROWS_AS(read_chunk(file.string()), IoError);
    }
    SUBCASE("out-of-range element") {
        std::fstream f(file, std::ios::in | std::ios::out | std::ios::binary);
        f.seekp(-1, std::ios::end);
        const char big = 7;
        f.write(&big, 1);
        f.close();
        CHECK_THROWS_AS(read_chunk(file.string()), IoError);
    }
    SUBCASE("missing file") {
        CHECK_THROWS_AS(read_chunk((tmp.path / "nope.zzac").string()), IoError);
    }
}
