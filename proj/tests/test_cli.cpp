#include "kleshchev/cli.hpp"
#include "kleshchev/json_io.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace kleshchev;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string &s, char skip = '#') {
  std::istringstream in(s);
  std::size_t n = 0;
  for (std::string line; std::getline(in, line);)
    if (!line.empty() && line[0] != skip)
      ++n;
  return n;
}

} // namespace

TEST_CASE("enumerate") {
  const auto r = run({"enumerate", "--p", "3", "--ell", "2", "--n", "3"});
  CHECK(r.code == 0);
  CHECK(count_lines(r.out) == 19);
  const auto zero = run({"enumerate", "--p", "3", "--ell", "2", "--n", "0"});
  CHECK(count_lines(zero.out) == 1);
  CHECK(zero.out.find("((),(),())") != std::string::npos);

  const auto j = run({"enumerate", "--p", "4", "--k", "2", "--ell", "1",
                      "--n", "2", "--format", "json"});
  CHECK(j.code == 0);
  const json doc = json::parse(j.out);
  CHECK(doc.is_array());
  CHECK(doc.size() ==
        static_cast<std::size_t>(count_irr_pn(ParamEnv(4, 2, 1), 2)));
  for (const auto &x : doc)
    CHECK(to_json(multipartition_from_json(x, 4)) == x);

  const auto lat = run({"enumerate", "--p", "3", "--ell", "2", "--n", "2",
                        "--format", "json", "--lattice"});
  CHECK(json::parse(lat.out).at("levels").size() == 3);
}

TEST_CASE("hmap") {
  const auto r = run({"hmap", "--p", "3", "--ell", "2", "--n", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("((),(),(1,1,1))  ->  ((1,1),(),(1))") != std::string::npos);
  CHECK(r.out.find("((1),(1),(1))  ->  ((1),(1),(1))") != std::string::npos);
  const auto j = run({"hmap", "--p", "3", "--ell", "2", "--n", "3", "--format",
                      "json"});
  CHECK(json::parse(j.out).at("orbits").size() == 7);
}

TEST_CASE("count") {
  const auto r =
      run({"count", "--p", "3", "--ell", "2", "--n", "3", "--check"});
  CHECK(r.code == 0);
  CHECK(r.out.find("irr_ppn = 9") != std::string::npos);
  CHECK(r.out.find("PASS") != std::string::npos);
  const auto j = run({"count", "--p", "3", "--ell", "2", "--n", "3",
                      "--format", "json"});
  const json doc = json::parse(j.out);
  CHECK(doc.at("n_tilde").at("1") == 1);
  CHECK(doc.at("n_exact").at("1") == 1);
  CHECK(doc.at("irr_ppn") == 9);
}

TEST_CASE("eta and fock") {
  const auto r = run({"eta", "--p", "3", "--ell", "2", "--m", "1", "--n", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "((1))  ->  ((1),(1),(1))\n");
  CHECK(run({"eta", "--p", "3", "--ell", "2", "--m", "2", "--n", "3"}).code ==
        1);

  const auto f = run({"fock", "--p", "3", "--ell", "2", "--state",
                      "[[],[],[]]", "--word", "F2 F0", "--format", "json"});
  CHECK(f.code == 0);
  CHECK(fock_from_json(json::parse(f.out), 3) ==
        FockVector(Multipartition(
            std::vector<Partition>{Partition{1}, Partition{1}, Partition{}})));
  CHECK(run({"fock", "--p", "4", "--k", "2", "--ell", "1", "--state",
             "[[],[],[],[]]", "--word", "F0"})
            .code == 1);
  CHECK(run({"fock", "--p", "3", "--ell", "2", "--state", "[[1", "--word",
             "F0"})
            .code == 1);
}

TEST_CASE("verify") {
  const auto r = run({"verify", "--max-n", "3", "--seed", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  const auto j = run({"verify", "--max-n", "2", "--format", "json"});
  CHECK(json::parse(j.out).at("failed") == 0);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 1);
  CHECK(run({"bogus"}).code == 1);
  CHECK(run({"enumerate", "--p", "3", "--n", "3"}).code == 1);
  CHECK(run({"enumerate", "--p", "3", "--k", "2", "--ell", "1", "--n", "1"})
            .code == 1);
  CHECK(run({"enumerate", "--p", "3", "--ell", "2", "--n", "1", "--format",
             "xml"})
            .code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("output is deterministic and can go to a file") {
  const std::vector<std::string> args = {"verify", "--max-n", "3", "--seed",
                                         "99"};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> hm = {"hmap", "--p", "4", "--k", "2",
                                       "--ell", "2", "--n", "3", "--format",
                                       "json"};
  const auto first = run(hm);
  CHECK(first.out == run(hm).out);

  const std::string path = "cli_out_test.json";
  auto with_out = hm;
  with_out.insert(with_out.end(), {"--out", path});
  const auto r = run(with_out);
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == first.out);
  std::remove(path.c_str());
}
