#include "support.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "slicefn/cli.hpp"
#include "slicefn/errors.hpp"
#include "slicefn/gallery.hpp"
#include "slicefn/io.hpp"

using namespace slicefn;
using namespace testing_support;

namespace {

struct CmdResult {
  int code;
  std::string out, err;
};

CmdResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_spec(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("slicefn_test_" + name + ".json");
  std::ofstream(path) << text;
  return path.string();
}

Quaternion value_of(const std::string& out) { return parse_quaternion(Json::parse(out).at("value")); }

const std::string kSquare = R"({"stem":{"type":"polynomial","coeffs":[[0,0,0,0],[0,0,0,0],[1,0,0,0]]}})";

}  // namespace

TEST(Cli, EvalSquare) {
  const std::string p = write_spec("square", kSquare);
  const CmdResult r = run({"eval", "--fn", p, "--point", "0,1,0,0"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_QNEAR(value_of(r.out), Quaternion(-1), 1e-15);
}

TEST(Cli, GalleryAndSliceConstant) {
  const CmdResult g = run({"gallery", "--name", "slice_constant", "--J", "0,1,0"});
  ASSERT_EQ(g.code, kExitOk) << g.err;
  const std::string p = write_spec("sc", g.out);
  CmdResult r = run({"eval", "--fn", p, "--point", "0,2,0,0"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_QNEAR(value_of(r.out), Quaternion(1, 0, 0, -1), 1e-15);
  r = run({"eval", "--fn", p, "--point", "0,0,-3,0"});
  EXPECT_QNEAR(value_of(r.out), Quaternion(), 1e-15);
  r = run({"eval", "--fn", p, "--point", "1,0,0,0"});
  EXPECT_EQ(r.code, kExitDomain);
  EXPECT_NE(r.err.find("\"error\""), std::string::npos);
}

TEST(Cli, ZerosOfBinomial) {
  const CmdResult g = run({"gallery", "--name", "binomial_zero"});
  ASSERT_EQ(g.code, kExitOk);
  const std::string p = write_spec("bz", g.out);
  const CmdResult r = run({"zeros", "--fn", p});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json z = Json::parse(r.out);
  ASSERT_EQ(z.size(), 1u);
  EXPECT_EQ(z[0].at("kind"), "SIsolated");
  EXPECT_NEAR(z[0].at("sphere").at("alpha").get<double>(), 0.0, 1e-9);
  EXPECT_NEAR(z[0].at("sphere").at("beta").get<double>(), 1.0, 1e-9);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"eval", "--fn", write_spec("bad", "{not json"), "--point", "1,0,0,0"}).code, kExitParse);
  EXPECT_EQ(run({"eval", "--fn", write_spec("badco", R"({"stem":{"type":"polynomial","coeffs":[[1,2]]}})"),
                 "--point", "1,0,0,0"})
                .code,
            kExitParse);
  EXPECT_EQ(run({"eval", "--fn", write_spec("baddom", R"({"domain":{"regions":[{"type":"disk","center":[0,0],"radius":-1}]},"stem":{"type":"constant","a":[1,0,0,0],"b":[0,0,0,0]}})"),
                 "--point", "1,0,0,0"})
                .code,
            kExitParse);
  EXPECT_EQ(run({"nosuch"}).code, kExitParse);
  EXPECT_EQ(run({"eval", "--point", "1,0,0,0"}).code, kExitParse);
  const std::string zero = write_spec("zero", R"({"stem":{"type":"polynomial","coeffs":[[0,0,0,0]]}})");
  EXPECT_EQ(run({"zeros", "--fn", zero}).code, kExitDomain);
  EXPECT_EQ(run({"reciprocal", "--fn", zero}).code, kExitDomain);
  EXPECT_EQ(run({"gallery", "--name", "max_modulus_cex", "--c", "0.5", "--r", "1"}).code, kExitDomain);
}

TEST(Cli, Reciprocal) {
  const std::string p = write_spec("square2", kSquare);
  const CmdResult r = run({"reciprocal", "--fn", p, "--point", "1,1,0,0"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  // (1+i)^{-2} = -i/2.
  EXPECT_QNEAR(value_of(r.out), Quaternion(0, -0.5, 0, 0), 1e-14);
  const Json j = Json::parse(r.out);
  EXPECT_TRUE(j.contains("numerator"));
  EXPECT_TRUE(j.contains("normal"));
}

TEST(Cli, ProductAndNormal) {
  const std::string x = write_spec("x", R"({"stem":{"type":"polynomial","coeffs":[[0,0,0,0],[1,0,0,0]]}})");
  const std::string a = write_spec("a", R"({"stem":{"type":"polynomial","coeffs":[[0,0,1,0]]}})");
  const CmdResult r = run({"product", "--fn", x, "--fn", a});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const SliceFunction f = parse_function_spec(r.out);
  Rng rng(1);
  for (int n = 0; n < 20; ++n) {
    const Quaternion q = random_point_off_axis(rng);
    EXPECT_QNEAR(f(q), table_mul(q, J_), 1e-14);
  }
  const CmdResult nrm = run({"normal", "--fn", x});
  ASSERT_EQ(nrm.code, kExitOk);
  const SliceFunction g = parse_function_spec(nrm.out);
  EXPECT_QNEAR(g(I_), Quaternion(-1), 1e-14);
}

TEST(Cli, RoundTrip) {
  Rng rng(2);
  const CircularDomain D({Disk{Complex(0, 1), 2}, Rect{-1, 1, 0, kInfinity}}, false);
  const SliceFunction f = poly(random_coeffs(rng, 5), D);
  const SliceFunction g = parse_function_spec(emit_function_spec(f).dump());
  EXPECT_EQ(emit_function_spec(g), emit_function_spec(f));
  for (int n = 0; n < 50; ++n) {
    const Quaternion q = on_slice(uniform(rng, -0.9, 0.9), uniform(rng, 0.0, 2.5), random_unit(rng));
    if (!f.domain().contains(q)) continue;
    EXPECT_EQ(distance(f(q), g(q)), 0.0);
  }
  for (const SliceFunction& h : {slice_constant_example(ImaginaryUnit::j()), max_modulus_counterexample(ImaginaryUnit::k(), 3, 2)}) {
    const SliceFunction back = parse_function_spec(emit_function_spec(h));
    EXPECT_QNEAR(back(Quaternion(0.3, 0.5, 0.2, 0.1)), h(Quaternion(0.3, 0.5, 0.2, 0.1)), 0.0);
  }
}

TEST(Cli, SampleGrid) {
  const std::string p = write_spec("grid", R"({"domain":{"regions":[{"type":"rect","alpha":[0,1],"beta":[0.5,1.5]}]},"stem":{"type":"polynomial","coeffs":[[0,0,0,0]]}})");
  CmdResult r = run({"sample-grid", "--fn", p, "--I", "1,0,0", "--res", "3,2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "alpha,beta,f_w,f_x,f_y,f_z,abs_f");
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    EXPECT_EQ(line.substr(line.rfind(',') + 1), "0");
  }
  EXPECT_EQ(rows, 6);
  r = run({"sample-grid", "--fn", write_spec("sq3", kSquare), "--I", "1,0,0", "--res", "4"});
  EXPECT_EQ(r.code, kExitDomain);
}

TEST(Cli, GridVanishesOnKernelSemislice) {
  const SliceFunction f(StemFunction::constant(CircularDomain::disk(Complex(0, 2), 1, true), 1, -J_));
  const std::string csv = export_grid(f, -ImaginaryUnit::j(), 8, 8);
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  int finite = 0;
  while (std::getline(lines, line)) {
    const std::string last = line.substr(line.rfind(',') + 1);
    if (last == "nan") continue;
    ++finite;
    EXPECT_LE(std::stod(last), 1e-15);
  }
  EXPECT_GT(finite, 20);
}

TEST(Cli, RepresentAndMass) {
  const CmdResult g = run({"gallery", "--name", "slice_constant", "--J", "0,1,0"});
  const std::string p = write_spec("sc2", g.out);
  const CmdResult r = run({"represent", "--fn", p, "--sphere", "0.5,1", "--J", "0,1,0", "--K", "0,-1,0", "--I", "1,0,0"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_LE(Json::parse(r.out).at("error").get<double>(), 1e-14);
  const std::string bounded = write_spec("scb", R"({"domain":{"regions":[{"type":"rect","alpha":[0,1],"beta":[1,2]}],"exclude_real":true},"stem":{"type":"constant","a":[1,0,0,0],"b":[0,0,-1,0]}})");
  CmdResult m = run({"mass", "--fn", bounded, "--I", "0,-1,0"});
  ASSERT_EQ(m.code, kExitOk) << m.err;
  EXPECT_LE(Json::parse(m.out).at("mass").get<double>(), 1e-15);
  m = run({"mass", "--fn", bounded, "--I", "1,0,0"});
  EXPECT_NEAR(Json::parse(m.out).at("mass").get<double>(), std::sqrt(2.0), 1e-12);
}

TEST(Cli, ProbeDeterministic) {
  const std::string p = write_spec("sq4", kSquare);
  const std::vector<std::string> args{"probe-open", "--fn", p, "--point", "1,1,0,0", "--r", "0.1", "--n", "20000", "--seed", "7"};
  const CmdResult a = run(args), b = run(args);
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_TRUE(Json::parse(a.out).at("open").get<bool>());
}

TEST(Cli, OutFile) {
  const auto path = (std::filesystem::temp_directory_path() / "slicefn_test_out.json").string();
  const CmdResult r = run({"gallery", "--name", "monomial", "--n", "2", "--out", path});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  const SliceFunction f = parse_function_spec(std::string(std::istreambuf_iterator<char>(in), {}));
  EXPECT_QNEAR(f(I_), Quaternion(-1), 1e-15);
}
