#include <doctest.h>

#include <fstream>
#include <string>

#include "cli_runner.hpp"
#include "ramsey/constructions.hpp"
#include "ramsey/detectors.hpp"
#include "ramsey/graph_io.hpp"
#include "ramsey/report_json.hpp"

using namespace ramsey;
using cli::quoted;
using cli::run;

namespace {

std::string first_line(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::string line;
  std::getline(in, line);
  return line;
}

void write_file(const std::filesystem::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST_CASE("construct writes canonical files") {
  const auto dir = cli::scratch("cli_construct");
  const auto g1 = run("construct g1 --n 4 -o " + quoted(dir / "g1.cg"));
  CHECK(g1.exit_code == 0);
  CHECK(first_line(dir / "g1.cg") == "cg 24");
  const auto summary = g1.json();
  CHECK(summary["order"] == 24);
  CHECK(summary["red_edges"] == 84);
  CHECK(summary["blue_edges"] == 192);

  const auto lb = run("construct lower-bound --n 4 -o " + quoted(dir / "lb.cg"));
  CHECK(lb.exit_code == 0);
  CHECK(first_line(dir / "lb.cg") == "cg 24 star 17");
  CHECK(lb.json()["star_degree"] == 17);

  // Without -o the coloring itself goes to stdout.
  const auto text = run("construct matching-critical --m 2 --r 4");
  CHECK(text.exit_code == 0);
  CHECK(text.out == serialize(build_matching_critical(2, 4)));
  CHECK(run("construct fan-k3-critical --n 2").out == serialize(build_fan_k3_critical(2)));
}

TEST_CASE("construct g2 from a seed or a spec file") {
  const auto dir = cli::scratch("cli_g2");
  const auto a = run("construct g2 --n 4 --seed 7");
  CHECK(a.exit_code == 0);
  CHECK(a.out == run("construct g2 --n 4 --seed 7").out);
  CHECK(a.out != run("construct g2 --n 4 --seed 8").out);
  CHECK(a.out == serialize(build_g2(sample_g2_spec(4, 7))));

  write_file(dir / "good.json", to_json(sample_g2_spec(4, 3)).dump());
  const auto good = run("construct g2 --n 4 --spec " + quoted(dir / "good.json"));
  CHECK(good.exit_code == 0);
  CHECK(good.out == serialize(build_g2(sample_g2_spec(4, 3))));

  write_file(dir / "bad.json", R"({"n": 4, "I1": [[0, 8]], "I2": [[8, 16]], "I3": [[16, 0]]})");
  CHECK(run("construct g2 --n 4 --spec " + quoted(dir / "bad.json")).exit_code == 2);
  write_file(dir / "junk.json", "{not json");
  CHECK(run("construct g2 --n 4 --spec " + quoted(dir / "junk.json")).exit_code == 2);
  CHECK(run("construct g2 --n 4 --spec " + quoted(dir / "missing.json")).exit_code == 2);
}

TEST_CASE("construct rejects invalid parameters") {
  CHECK(run("construct g1 --n 1").exit_code == 2);
  CHECK(run("construct g1").exit_code == 2);
  CHECK(run("construct petersen --n 3").exit_code == 2);
  CHECK(run("construct matching-critical --m 0 --r 4").exit_code == 2);
  CHECK(run("construct lower-bound --n 1").exit_code == 2);
}

TEST_CASE("check reports freeness or a witness") {
  const auto dir = cli::scratch("cli_check");
  run("construct g1 --n 4 -o " + quoted(dir / "g1.cg"));
  const auto ok = run("check " + quoted(dir / "g1.cg") + " --red fan:4 --blue clique:4");
  CHECK(ok.exit_code == 0);
  CHECK(ok.json() == nlohmann::json::parse(R"({"free": true})"));

  write_file(dir / "k4.cg", serialize(ColoredGraph(4, Color::Blue)));
  const auto hit = run("check " + quoted(dir / "k4.cg") + " --red fan:1 --blue clique:4");
  CHECK(hit.exit_code == 1);
  const auto j = hit.json();
  CHECK(j["free"] == false);
  CHECK(j["witness"]["kind"] == "Clique");
  CHECK(j["witness"]["color"] == "Blue");
  CHECK(j["witness"]["vertices"] == std::vector<int>{0, 1, 2, 3});

  // A coloring with a red F_4 is caught on the red side.
  const auto lb_plus = dir / "lb_plus.cg";
  auto more = build_lower_bound(4).graph;
  more.set_star_edge(17, Color::Red);
  write_file(lb_plus, serialize(more));
  const auto fan = run("check " + quoted(lb_plus) + " --red fan:4 --blue clique:4");
  CHECK(fan.exit_code == 1);
  CHECK(fan.json()["witness"]["kind"] == "Fan");
}

TEST_CASE("check rejects malformed input") {
  const auto dir = cli::scratch("cli_bad");
  const std::string full = serialize(build_g1(2));
  write_file(dir / "truncated.cg", full.substr(0, full.size() / 2));
  CHECK(run("check " + quoted(dir / "truncated.cg") + " --red fan:2 --blue clique:4").exit_code == 2);
  write_file(dir / "g.cg", full);
  CHECK(run("check " + quoted(dir / "g.cg") + " --red fan:0 --blue clique:4").exit_code == 2);
  CHECK(run("check " + quoted(dir / "g.cg") + " --red wheel:3 --blue clique:4").exit_code == 2);
  CHECK(run("check " + quoted(dir / "g.cg") + " --red fan:2").exit_code == 2);
  CHECK(run("check " + quoted(dir / "none.cg") + " --red fan:2 --blue clique:4").exit_code == 2);
}

TEST_CASE("search reports status as JSON") {
  const auto r = run("search --order 6 --red matching:2 --blue clique:4");
  CHECK(r.exit_code == 0);
  const auto j = r.json();
  CHECK(j["status"] == "Exhausted");
  CHECK(j["witness"].is_null());

  const auto found = run("search --order 5 --red matching:2 --blue clique:4 --threads 2");
  CHECK(found.exit_code == 0);
  const auto f = found.json();
  CHECK(f["status"] == "WitnessFound");
  const auto any = parse_graph(f["witness"].get<std::string>());
  CHECK(is_free(std::get<ColoredGraph>(any), {Target::matching(2), Target::clique(4)}).free);

  CHECK(run("search --order 6 --red matching:2 --blue clique:4 --no-symmetry").json()["stats"]["symmetry"] == "none");
  CHECK(run("search --order 6 --red matching:2 --blue clique:4 --symmetry v0-maxdeg").json()["stats"]["symmetry"] ==
        "v0-maxdeg");
  CHECK(run("search --order 6 --red matching:2 --blue clique:4 --symmetry sideways").exit_code == 2);
  CHECK(run("search --order 0 --red matching:2 --blue clique:4").exit_code == 2);
  CHECK(run("search --red matching:2 --blue clique:4").exit_code == 2);
}

TEST_CASE("budget abort exits 3 and checkpoints resume") {
  const auto dir = cli::scratch("cli_budget");
  const auto ckpt = quoted(dir / "run.ckpt");
  const auto aborted =
      run("search --order 8 --red matching:3 --blue clique:4 --budget-nodes 500 --checkpoint " + ckpt);
  CHECK(aborted.exit_code == 3);
  CHECK(aborted.json()["status"] == "Aborted");
  REQUIRE(std::filesystem::exists(dir / "run.ckpt"));
  const auto resumed = run("search --order 8 --red matching:3 --blue clique:4 --resume " + ckpt);
  CHECK(resumed.exit_code == 0);
  CHECK(resumed.json()["status"] == "Exhausted");
  CHECK(run("search --order 7 --red matching:3 --blue clique:4 --resume " + ckpt).exit_code == 2);

  const auto timed = run("search --order 10 --red matching:4 --blue clique:4", "RAMSEY_BUDGET_SECS=0");
  CHECK(timed.exit_code == 3);
  CHECK(run("search --order 6 --red matching:2 --blue clique:4 --budget-secs 0").exit_code == 3);
}

TEST_CASE("extend reports the maximum star degree") {
  const auto dir = cli::scratch("cli_extend");
  run("construct g1 --n 4 -o " + quoted(dir / "g1.cg"));
  const auto g1 = quoted(dir / "g1.cg");
  const auto m = run("extend " + g1 + " --red fan:4 --blue clique:4 --max");
  CHECK(m.exit_code == 0);
  const auto j = m.json();
  CHECK(j["max_k"] == 17);
  CHECK(j["status"] == "Exhausted");
  CHECK(std::get<StarColoredGraph>(parse_graph(j["witness"].get<std::string>())) == build_lower_bound(4).graph);

  CHECK(run("extend " + g1 + " --red fan:4 --blue clique:4 --k 18").json()["status"] == "Exhausted");
  CHECK(run("extend " + g1 + " --red fan:4 --blue clique:4 --k 17").json()["status"] == "WitnessFound");
  CHECK(run("extend " + g1 + " --red fan:4 --blue clique:4 --max --budget-nodes 100").exit_code == 3);
  CHECK(run("extend " + g1 + " --red fan:4 --blue clique:4").exit_code == 2);
  CHECK(run("extend " + g1 + " --red fan:3 --blue clique:4 --max").exit_code == 2);
}

TEST_CASE("verify-ramsey exit codes follow the verdict") {
  const auto ok = run("verify-ramsey --red matching:2 --blue clique:4 --claimed 6");
  CHECK(ok.exit_code == 0);
  CHECK(ok.json()["verdict"] == "verified");
  const auto wrong = run("verify-ramsey --red matching:2 --blue clique:4 --claimed 7");
  CHECK(wrong.exit_code == 1);
  CHECK(wrong.json()["verdict"] == "refuted");
  const auto open = run("verify-ramsey --red matching:3 --blue clique:4 --claimed 8 --budget-nodes 10");
  CHECK(open.exit_code == 3);
  CHECK(open.json()["verdict"] == "inconclusive");
}

TEST_CASE("verify-lemmas over a file") {
  const auto dir = cli::scratch("cli_lemmas");
  run("construct g1 --n 4 -o " + quoted(dir / "g1.cg"));
  const auto r = run("verify-lemmas " + quoted(dir / "g1.cg") + " --n 4");
  CHECK(r.exit_code == 0);
  const auto j = r.json();
  REQUIRE(j.is_array());
  CHECK(j.size() == 6);
  for (const auto& rep : j) {
    CHECK(rep["applicable"] == true);
    CHECK(rep["holds"] == true);
  }
  run("construct lower-bound --n 4 -o " + quoted(dir / "lb.cg"));
  const auto star = run("verify-lemmas " + quoted(dir / "lb.cg") + " --n 4");
  CHECK(star.exit_code == 0);
  CHECK(star.json()[0]["lemma"] == "star_cases");
  CHECK(run("verify-lemmas " + quoted(dir / "g1.cg") + " --n 3").exit_code == 2);
}

TEST_CASE("scan-uniqueness under a budget") {
  const auto dir = cli::scratch("cli_scan");
  const auto r = run("scan-uniqueness --n 2 --budget-nodes 200000 --max-dumps 2 --dump-dir " + quoted(dir / "dumps"));
  CHECK(r.exit_code == 3);
  const auto j = r.json();
  CHECK(j["status"] == "Aborted");
  CHECK(j["dumped"].size() == 2);
  CHECK(run("scan-uniqueness --n 1").exit_code == 2);
}

TEST_CASE("usage errors exit 2 and help exits 0") {
  CHECK(run("").exit_code == 2);
  CHECK(run("frobnicate").exit_code == 2);
  CHECK(run("--help").exit_code == 0);
  CHECK(run("search --help").exit_code == 0);
  CHECK(run("search --order 6 --red matching:2 --blue clique:4 --threads 0").exit_code == 2);
}
