#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string cli_path() {
  if (const char* env = std::getenv("TORALF_CLI")) return env;
  return "./tools/toralf";
}

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "toralf_cli_test";
  fs::create_directories(dir);
  return dir;
}

RunResult run(const std::string& args) {
  const fs::path out_file = scratch_dir() / "out.txt";
  const std::string cmd = cli_path() + " " + args + " > " + out_file.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out_file);
  std::ostringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  return r;
}

fs::path write_file(const std::string& name, const std::string& text) {
  const fs::path p = scratch_dir() / name;
  std::ofstream(p) << text;
  return p;
}

}  // namespace

TEST_CASE("profile validate: exit codes") {
  const fs::path good = write_file(
      "good.json", R"({"A":1.0,"turns":[{"z":-1.0,"a":0.5},{"z":1.0,"a":0.5}]})");
  CHECK(run("profile validate " + good.string()).exit_code == 0);

  const fs::path bad = write_file(
      "bad.json", R"({"A":1.0,"turns":[{"z":0.0,"a":0.6},{"z":1.0,"a":0.6}]})");
  const RunResult r = run("profile validate " + bad.string());
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("CoefficientsDontSumToOne") != std::string::npos);

  CHECK(run("profile validate " + (scratch_dir() / "missing.json").string()).exit_code == 2);
  CHECK(run("wat").exit_code == 2);
}

TEST_CASE("plot reproduces the profile values") {
  const RunResult r = run("profile plot --preset schwarzschild --m 1 --zmin 0 --zmax 3 --grid 4");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("z,f\n", 0) == 0);
  CHECK(r.out.find("\n3,4\n") != std::string::npos);  // f(3) = 4
  CHECK(r.out.find("\n0,2\n") != std::string::npos);  // f(0) = 2
}

TEST_CASE("determinism: identical argv gives identical bytes") {
  const std::string cmd =
      "metric check-ricci --preset chen-teo --p 0.4 --samples 8 --tol 1e-4 --seed 42";
  const RunResult a = run(cmd);
  const RunResult b = run(cmd);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);

  const std::string scan =
      "scan --p 0.2 0.8 3 --q 0.2 0.8 3 --a 1.2 3.0 3 --b 1.2 3.0 3";
  const RunResult s1 = run(scan + " --jobs 1");
  const RunResult s4 = run(scan + " --jobs 4");
  CHECK(s1.exit_code == 0);
  CHECK(s1.out == s4.out);  // row order independent of scheduling
}

TEST_CASE("classify: exit code reflects regularity") {
  // The smooth instanton point (full precision) is regular.
  const RunResult good =
      run(R"(classify --params {\"p\":0.4,\"q\":0.6,\"a\":1.6666666666666667,\"b\":2.5})");
  CHECK(good.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(good.out);
  CHECK(j.at("regular").get<bool>());
  CHECK(std::abs(j.at("nut_charge").get<double>()) < 1e-12);
  for (const auto& a : j.at("alphas")) CHECK(std::abs(a.get<double>() - 1.0) < 1e-9);

  // Four-digit inputs land off the regular locus: tiny but nonzero charge.
  const RunResult rounded =
      run(R"(classify --params {\"p\":0.4,\"q\":0.6,\"a\":1.6667,\"b\":2.5})");
  CHECK(rounded.exit_code == 1);
  const nlohmann::json jr = nlohmann::json::parse(rounded.out);
  CHECK(!jr.at("regular").get<bool>());
  CHECK(std::abs(jr.at("nut_charge").get<double>()) < 1e-3);

  // Exact rationals pin the S^3 case.
  const RunResult exact = run("classify --exact 1/2 1/2 2/1 1/1");
  CHECK(exact.exit_code == 0);
  const nlohmann::json je = nlohmann::json::parse(exact.out);
  CHECK(je.at("n").get<long long>() == -1);
  CHECK(je.at("topology").at("kind").get<std::string>() == "sphere3");

  CHECK(run("classify").exit_code == 2);
}

TEST_CASE("json outputs parse and fix the documented schemas") {
  const fs::path prof = write_file(
      "ct.json", R"({"A":1.0,"turns":[{"z":-1.0,"a":0.5},{"z":1.0,"a":0.5}]})");

  const RunResult ps = run("potential sample --profile " + prof.string() + " --rho 1 --z 0.5");
  CHECK(ps.exit_code == 0);
  CHECK(nlohmann::json::parse(ps.out).contains("U_rhoz"));

  const RunResult axis = run("potential sample --profile " + prof.string() + " --rho 0 --z 2");
  CHECK(axis.exit_code == 0);
  CHECK(nlohmann::json::parse(axis.out).at("rho_U_rho").get<double>() == doctest::Approx(6.0));

  const RunResult ms = run("metric sample --profile " + prof.string() + " --rho 1 --z 0.5");
  CHECK(nlohmann::json::parse(ms.out).contains("e2nu"));

  const RunResult ma = run("metric axis --preset taub-bolt --n 1");
  CHECK(nlohmann::json::parse(ma.out).at("af_defect").get<double>() == doctest::Approx(4.0));

  const RunResult poly = run("kahler polytope --preset chen-teo --p 0.5 --fig2-basis");
  const nlohmann::json jp = nlohmann::json::parse(poly.out);
  CHECK(jp.at("fig2_basis").get<bool>());
  CHECK(jp.at("vertices").size() == 5);

  const RunResult grid = run("kahler moments-grid --preset schwarzschild --m 1 --rho0 0.5 "
                             "--rho1 2 --nrho 3 --z0 -1 --z1 1 --nz 3");
  CHECK(grid.exit_code == 0);
  CHECK(grid.out.rfind("rho,z,x1,mu,volume_density\n", 0) == 0);

  const RunResult fam = run("family af-q-tau --q 0.3 --tau 0.2");
  CHECK(nlohmann::json::parse(fam.out).at("profile").contains("turns"));
  const RunResult fam2 = run("family eh --A 0.75");
  CHECK(nlohmann::json::parse(fam2.out).at("smooth").get<bool>());
  const RunResult fam3 = run("family pc33 --p 0.75 --l2 1");
  CHECK(nlohmann::json::parse(fam3.out).at("report").at("regular").get<bool>());
  CHECK(run("family pc33 --p 0.2 --l2 1").exit_code == 2);
}

TEST_CASE("output file option") {
  const fs::path out = scratch_dir() / "plot.csv";
  CHECK(run("profile plot --preset taub-nut --n 1 --zmin 0 --zmax 1 --grid 2 --output " +
            out.string())
            .exit_code == 0);
  std::ifstream in(out);
  std::ostringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == "z,f\n0,2\n1,3\n");
}

TEST_CASE("classify --scan emits the report grid") {
  const RunResult r = run("classify --scan 0.2 0.8 2 0.2 0.8 2 1.5 2.5 2 1.5 2.5 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("p,q,a,b,nut_charge,regular,", 0) == 0);
  // 2^4 grid rows plus header.
  int lines = 0;
  for (char c : r.out) lines += (c == '\n');
  CHECK(lines == 17);
}

TEST_CASE("scalar-check and check-ricci exit codes") {
  CHECK(run("metric check-ricci --preset schwarzschild --m 1 --samples 50 --tol 1e-5")
            .exit_code == 0);
  CHECK(run("kahler scalar-check --preset schwarzschild --m 1 --samples 3 --tol 1e-4 --seed 3")
            .exit_code == 0);
  // An absurd tolerance makes the check fail: exit 1, not 2.
  CHECK(run("metric check-ricci --preset schwarzschild --m 1 --samples 3 --tol 1e-30 --seed 3")
            .exit_code == 1);
}
