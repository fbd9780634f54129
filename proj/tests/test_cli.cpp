#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "fixtures.hpp"
#include "semiband/cli.hpp"
#include "semiband/constructions.hpp"
#include "semiband/isomorphism.hpp"
#include "semiband/transformations.hpp"

using namespace semiband;
namespace fs = std::filesystem;

namespace {
  struct Run {
    int         code;
    std::string out, err;
  };

  Run sbf(std::vector<std::string> args) {
    args.insert(args.begin(), "sbf");
    std::ostringstream out, err;
    int const code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
  }

  struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / fs::path("sbf_cli_" + std::to_string(::getpid()))) {
      fs::remove_all(path);
      fs::create_directories(path);
    }
    ~TempDir() {
      fs::remove_all(path);
    }
    std::string file(std::string const& name) const {
      return (path / name).string();
    }
  };

  std::string write(TempDir const& d, std::string const& name, Semigroup const& S) {
    auto const p = d.file(name);
    write_sgp_file(p, S);
    return p;
  }

  Semigroup build_R_of_full_tf_2() {
    return build_R(full_tf_monoid(2).result).result;
  }
}  // namespace

TEST_CASE("analyze", "[cli]") {
  TempDir d;
  auto const r = sbf({"analyze", write(d, "sl.sgp", fixtures::semilattice2())});
  CHECK(r.code == 0);
  CHECK(r.out.find("order") != std::string::npos);
  CHECK(r.out.find("Semilattice") != std::string::npos);

  std::ofstream(d.file("c3.tfm")) << "1 2 0\n";
  CHECK(sbf({"analyze", d.file("c3.tfm")}).code == 0);
}

TEST_CASE("construct writes a table and a sidecar", "[cli]") {
  TempDir d;
  auto const src = write(d, "l2.sgp", fixtures::left_zero2());
  auto const r   = sbf({"construct", "t", src, "-o", d.file("t.sgp")});
  REQUIRE(r.code == 0);
  auto const T = read_sgp_file(d.file("t.sgp"));
  CHECK(T.size() == 8);
  std::ifstream side(d.file("t.json"));
  REQUIRE(side);
  auto const j = nlohmann::json::parse(side);
  CHECK(j["order"] == 8);
  CHECK(j["elements"].size() == 8);

  REQUIRE(sbf({"construct", "higgins", "--degree", "2", "-o", d.file("h.sgp")}).code == 0);
  auto const H = read_sgp_file(d.file("h.sgp"));
  CHECK(H.size() == 12);
  CHECK(isomorphic(H, build_R_of_full_tf_2()));
  CHECK(sbf({"construct", "r", write(d, "n.sgp", fixtures::null2()), "-o", d.file("x.sgp")}).code == 2);
}

TEST_CASE("iso exit codes", "[cli]") {
  TempDir d;
  auto const a = write(d, "a.sgp", fixtures::left_zero2());
  auto const b = write(d, "b.sgp", fixtures::right_zero2());
  CHECK(sbf({"iso", a, a}).code == 0);
  CHECK(sbf({"iso", a, b}).code == 1);
}

TEST_CASE("usage and input errors exit with 2", "[cli]") {
  CHECK(sbf({}).code == 2);
  CHECK(sbf({"analyze"}).code == 2);
  CHECK(sbf({"analyze", "/nonexistent.sgp"}).code == 2);
  CHECK(sbf({"verify", "--max-order", "9"}).code == 2);
  CHECK(sbf({"construct", "q", "-o", "x"}).code == 2);
  TempDir d;
  CHECK(sbf({"construct", "t", write(d, "n.sgp", fixtures::null2()), "-o", d.file("o.sgp")}).code == 2);
}

TEST_CASE("enumerate and bounds", "[cli]") {
  TempDir d;
  REQUIRE(sbf({"enumerate", "2", "-o", d.file("c2")}).code == 0);
  CHECK(fs::exists(d.file("c2") + "/manifest.json"));
  auto const b = sbf({"bounds", d.file("c2"), "--json"});
  CHECK(b.code == 2);  // the null semigroup of order 2 is not regular
  auto const r = sbf({"bounds", d.file("c2"), "--json", "--regular-only"});
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out).is_array());
}

TEST_CASE("verify", "[cli]") {
  auto const r = sbf({"verify", "--max-order", "3", "--no-timing"});
  CHECK(r.code == 0);
  auto const j1 = sbf({"verify", "--max-order", "2", "--no-timing", "--json", "--jobs", "1"});
  auto const j4 = sbf({"verify", "--max-order", "2", "--no-timing", "--json", "--jobs", "4"});
  CHECK(j1.out == j4.out);
  CHECK(sbf({"verify", "--max-order", "2", "--claims", "Green_Formulas,RS_Semiband2"}).code == 0);
  CHECK(sbf({"verify", "--claims", "Bogus"}).code == 2);
}
