#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "hetealloc/errors.hpp"
#include "hetealloc/pipeline.hpp"
#include "hetealloc/snapshot_io.hpp"

using namespace hetealloc;
using namespace hetealloc::test;
namespace fs = std::filesystem;

namespace {

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("hetealloc_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
             "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }
  fs::path write(const std::string& name, const std::string& content) const {
    std::ofstream(path_ / name) << content;
    return path_ / name;
  }

 private:
  fs::path path_;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path links_file() { return data_dir() + "/decade_links.tsv"; }
fs::path mesh_file() { return data_dir() + "/decade_mesh.tsv"; }

RunConfig decade_config(Method m, const fs::path& out) {
  RunConfig c;
  c.method = m;
  c.links_path = links_file();
  c.mesh_path = mesh_file();
  c.out_dir = out;
  return c;
}

}  // namespace

TEST(ParseLinks, CommentsBlankAndErrors) {
  std::istringstream ok("# header\n\n1950\tA1\tP1\r\n1951\tA2\tP2\n");
  const auto recs = parse_links(ok, "l.tsv");
  ASSERT_EQ(recs.size(), 2u);
  EXPECT_EQ(recs[0].paper, "P1");
  EXPECT_EQ(recs[1].line, 4u);
  std::istringstream bad_year("1950\tA1\tP1\nx\tA1\tP1\n");
  try {
    parse_links(bad_year, "l.tsv");
    FAIL();
  } catch (const DataError& e) {
    EXPECT_EQ(e.file(), "l.tsv");
    EXPECT_EQ(e.line(), 2u);
  }
  std::istringstream short_line("1950\tA1\n");
  EXPECT_THROW(parse_links(short_line, "l"), DataError);
  std::istringstream empty_field("1950\t\tP1\n");
  EXPECT_THROW(parse_links(empty_field, "l"), DataError);
  std::istringstream mesh_bad("P1\n");
  EXPECT_THROW(parse_paper_mesh(mesh_bad, "m"), DataError);
}

TEST(Ingest, DecadeManifest) {
  const auto m = cmd_ingest(links_file(), mesh_file(), std::nullopt);
  EXPECT_EQ(m["authors"], 4);
  EXPECT_EQ(m["papers"], 60);  // six new papers every year
  EXPECT_EQ(m["categories"], 3);
  EXPECT_EQ(m["links_per_year"]["1"], 6);
  EXPECT_EQ(m["links_per_year"]["6"], 12);
}

TEST(Ingest, EmptyLinks) {
  TempDir d;
  const auto m = cmd_ingest(d.write("l.tsv", ""), d.write("m.tsv", ""), std::nullopt);
  EXPECT_EQ(m["authors"], 0);
  EXPECT_EQ(m["papers"], 0);
  EXPECT_EQ(m["categories"], 0);
  EXPECT_TRUE(m["links_per_year"].empty());
}

TEST(Ingest, UnknownPaperNamed) {
  TempDir d;
  const auto l = d.write("l.tsv", "1\tA1\tP1\n");
  const auto m = d.write("m.tsv", "P1\tM1\nP7\tM1\n");
  try {
    cmd_ingest(l, m, std::nullopt);
    FAIL();
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("'P7'"), std::string::npos);
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(Ingest, TaxonomyCoverage) {
  TempDir d;
  const auto l = d.write("l.tsv", "1\tA1\tP1\n1\tA1\tP2\n1\tA2\tP3\n");
  const auto m = d.write("m.tsv", "P1\tD000001\nP2\tD000002\nP2\tD000003\nP3\tD000009\n");
  const auto t = d.write("t.tsv",
                         "D000001\tC05.116\nD000001\tC10.228\nD000002\tB01.050.150\n"
                         "D000003\tB01.300\nbroken line\n");
  const auto man = cmd_ingest(l, m, t);
  EXPECT_EQ(man["categories"], 3);  // C05, C10, B01
  EXPECT_EQ(man["taxonomy"]["mesh_ids"], 4);
  EXPECT_EQ(man["taxonomy"]["mapped"], 3);
  EXPECT_EQ(man["taxonomy"]["unmapped_mesh_ids"], nlohmann::json::array({"D000009"}));
  EXPECT_EQ(man["taxonomy"]["papers_with_unmapped_mesh"], nlohmann::json::array({"P3"}));
  EXPECT_EQ(man["papers_without_categories"], nlohmann::json::array({"P3@1"}));
  EXPECT_EQ(man["taxonomy"]["issues"].size(), 1u);

  const Dataset ds = load_dataset(l, m, t);
  std::set<std::string> p2;
  for (const auto& ml : ds.years.at(1).mesh_links) {
    if (ml.paper == "P2") p2.insert(ml.category);
  }
  EXPECT_EQ(p2, (std::set<std::string>{"B01"}));  // two ids, one category
}

TEST(Config, UsageErrors) {
  RunConfig c;
  c.method = Method::Dha;
  c.aggregation = Aggregation::Sum;
  EXPECT_THROW(validate(c), UsageError);
  c = RunConfig{};
  c.method = Method::Bl;
  c.weighted = true;
  EXPECT_THROW(validate(c), UsageError);
  c = RunConfig{};
  c.threads = 0;
  EXPECT_THROW(validate(c), UsageError);
  c = RunConfig{};
  c.years = YearRange{5, 4};
  EXPECT_THROW(validate(c), UsageError);
  EXPECT_THROW(parse_method("lda"), UsageError);
  EXPECT_THROW(parse_year_range("1950-1960"), UsageError);
  EXPECT_THROW(parse_year_range("a:3"), UsageError);
  EXPECT_EQ(parse_year_range("1948:1957").to, 1957);
}

TEST(Config, Labels) {
  RunConfig c;
  c.method = Method::Ha3;
  c.aggregation = Aggregation::Average;
  c.weighted = true;
  EXPECT_EQ(run_label(c), "ha3-average-weighted");
  c.method = Method::Dha;
  c.aggregation.reset();
  c.weighted = false;
  EXPECT_EQ(run_label(c), "dha");
}

TEST(Run, UsageErrorBeforeComputation) {
  TempDir d;
  RunConfig c = decade_config(Method::Bl, d.path() / "out");
  c.weighted = true;
  EXPECT_THROW(cmd_run(c), UsageError);
  EXPECT_FALSE(fs::exists(d.path() / "out"));
}

TEST(Run, BlSnapshotsMatchReference) {
  TempDir d;
  const auto path = cmd_run(decade_config(Method::Bl, d.path()));
  EXPECT_EQ(path.filename(), "bl.ndjson");
  std::ifstream in(path);
  const ExpertiseStore s = read_snapshots(in);
  ASSERT_EQ(s.snapshots().size(), 10u);
  for (int y = 0; y < 10; ++y) EXPECT_EQ(to_matrix(s.snapshots()[y]), decade_bl()[y]);
}

TEST(Run, DhaYearOneAndDeterminism) {
  TempDir d;
  RunConfig c = decade_config(Method::Dha, d.path() / "one");
  c.threads = 1;
  const auto one = cmd_run(c);
  c.threads = 8;
  c.out_dir = d.path() / "many";
  const auto many = cmd_run(c);
  EXPECT_EQ(slurp(one), slurp(many));
  std::ifstream in(one);
  EXPECT_EQ(to_matrix(read_snapshots(in).snapshots()[0]), decade_dha()[0]);
  for (const auto& e : fs::directory_iterator(d.path() / "one")) {
    EXPECT_EQ(e.path().extension(), ".ndjson");  // no temporary left behind
  }
}

TEST(Run, YearRangeKeepsHistory) {
  const Dataset ds = decade_dataset();
  const auto full = run_method(ds, Method::Bl, {1, 10}, false, Aggregation::Sum, 1);
  const auto tail = run_method(ds, Method::Bl, {6, 10}, false, Aggregation::Sum, 1);
  ASSERT_EQ(tail.snapshots().size(), 5u);
  EXPECT_EQ(tail.snapshots()[0], full.snapshots()[5]);
}

TEST(Run, Ha3AverageOnNetworkTwo) {
  TempDir d;
  const auto l = d.write("l.tsv",
                         "1\tA1\tP1\n1\tA1\tP2\n1\tA2\tP2\n1\tA2\tP3\n1\tA2\tP4\n1\tA2\tP5\n"
                         "1\tA3\tP6\n1\tA3\tP7\n");
  const auto m = d.write("m.tsv", "P1\tM1\nP2\tM1\nP3\tM1\nP4\tM1\nP5\tM1\nP6\tM1\nP7\tM2\n");
  RunConfig c;
  c.method = Method::Ha3;
  c.aggregation = Aggregation::Average;
  c.links_path = l;
  c.mesh_path = m;
  c.out_dir = d.path();
  std::ifstream in(cmd_run(c));
  const auto s = read_snapshots(in);
  const auto& p = s.latest().profiles;
  EXPECT_NEAR(p.at("A1").at("M1"), 0.816, 1e-3);
  EXPECT_NEAR(p.at("A2").at("M1"), 0.973, 1e-3);
  EXPECT_NEAR(p.at("A3").at("M1"), 0.707, 1e-3);
  EXPECT_NEAR(p.at("A3").at("M2"), 0.707, 1e-3);
}

TEST(Run, DataErrorLeavesNoOutput) {
  TempDir d;
  RunConfig c;
  c.method = Method::Bl;
  c.links_path = d.write("l.tsv", "1\tA1\tP1\n");
  c.mesh_path = d.write("m.tsv", "P1\tM1\nP2\tM1\n");
  c.out_dir = d.path() / "out";
  EXPECT_THROW(cmd_run(c), DataError);
  EXPECT_FALSE(fs::exists(d.path() / "out" / "bl.ndjson"));
}

TEST(Compare, DecadeTenRows) {
  TempDir d;
  const auto bl = cmd_run(decade_config(Method::Bl, d.path()));
  const auto dha = cmd_run(decade_config(Method::Dha, d.path()));
  CompareConfig c{dha, bl, "dha", "bl", links_file(), 10, d.path() / "cmp"};
  const auto r = cmd_compare(c);
  ASSERT_EQ(r.summary.size(), 10u);
  EXPECT_EQ(r.histogram_paths.size(), 20u);
  const auto text = slurp(r.summary_path);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 21);
  // Year 10: DHA separates A2/A3 while BL gives them flat profiles.
  EXPECT_GE(r.summary[9].methods[0].max_min_ratio.mean, r.summary[9].methods[1].max_min_ratio.mean);
  // Every author has more than ten papers from year 6 on.
  EXPECT_EQ(r.summary[9].methods[0].productive_normalized_max.n, 4u);
  EXPECT_EQ(r.summary[0].methods[0].productive_normalized_max.n, 0u);
}

TEST(Compare, IdenticalSnapshots) {
  TempDir d;
  const auto bl = cmd_run(decade_config(Method::Bl, d.path()));
  const auto r = cmd_compare({bl, bl, "x", "y", links_file(), 10, d.path()});
  for (const auto& row : r.summary) {
    EXPECT_EQ(row.methods[0].max_min_ratio.mean, row.methods[1].max_min_ratio.mean);
    EXPECT_EQ(row.methods[0].normalized_max.std, row.methods[1].normalized_max.std);
  }
}

TEST(Compare, YearMismatch) {
  TempDir d;
  RunConfig c = decade_config(Method::Bl, d.path() / "a");
  c.years = YearRange{1, 5};
  const auto early = cmd_run(c);
  c.years = YearRange{6, 10};
  c.out_dir = d.path() / "b";
  const auto late = cmd_run(c);
  EXPECT_THROW(cmd_compare({early, late, "a", "b", links_file(), 10, d.path()}), DataError);
}

namespace {

int run_cli(const std::string& args) {
  const std::string cmd = std::string(HETEALLOC_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

}  // namespace

TEST(Cli, ExitCodes) {
  TempDir d;
  const std::string in = "--links " + links_file().string() + " --mesh " + mesh_file().string();
  EXPECT_EQ(run_cli("ingest " + in), 0);
  EXPECT_EQ(run_cli("run " + in + " --method dha --years 1:3 --threads 2 --out " +
                    d.path().string()),
            0);
  EXPECT_TRUE(fs::exists(d.path() / "dha.ndjson"));
  EXPECT_EQ(run_cli("run " + in + " --method bl --weighted --out " + d.path().string()), 1);
  EXPECT_EQ(run_cli("run " + in + " --method dha --agg sum --out " + d.path().string()), 1);
  EXPECT_EQ(run_cli("run " + in + " --method nope --out " + d.path().string()), 1);
  EXPECT_EQ(run_cli("frobnicate"), 1);
  EXPECT_EQ(run_cli(""), 1);
  const auto bad = d.write("bad.tsv", "1\tA1\n");
  EXPECT_EQ(run_cli("ingest --links " + bad.string() + " --mesh " + mesh_file().string()), 2);
  EXPECT_EQ(run_cli("ingest --links /nonexistent --mesh " + mesh_file().string()), 2);
  const auto run_bl = "run " + in + " --method bl --years 1:3 --out " + d.path().string();
  EXPECT_EQ(run_cli(run_bl), 0);
  EXPECT_EQ(run_cli("compare " + (d.path() / "dha.ndjson").string() + " " +
                    (d.path() / "bl.ndjson").string() + " --links " + links_file().string() +
                    " --out " + (d.path() / "cmp").string()),
            0);
  EXPECT_TRUE(fs::exists(d.path() / "cmp" / "summary.tsv"));
  EXPECT_TRUE(fs::exists(d.path() / "cmp" / "histogram_dha_3.tsv"));
}
