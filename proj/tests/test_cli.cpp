// End-to-end tests of the command-line tool, run as a subprocess.
// RADMOM_CLI_PATH is injected by the build.

#include <gtest/gtest.h>
#include <sys/stat.h>
#include <sys/wait.h>

#include <cstdio>
#include <string>

#include "radmom/pgm.hpp"
#include "radmom/projections.hpp"
#include "test_support.hpp"

using namespace radmom;
using testsupport::TempDir;

namespace {

struct CmdResult {
  int exit_code = -1;
  std::string output;
};

CmdResult run_cli(const std::string& args, bool merge_stderr = true) {
  const std::string cmd = std::string(RADMOM_CLI_PATH) + " " + args +
                          (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  CmdResult result;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0)
    result.output.append(buf, n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string corpus_pgm(const TempDir& dir) {
  const std::string path = dir.file("corpus.pgm");
  save_pgm(testsupport::corpus_2x2(), path, /*binary=*/false);
  return path;
}

constexpr const char* kCorpusMomentLines =
    "M00=10\nM10=6\nM01=7\nM20=6\nM11=4\nM02=7\nM30=6\nM21=4\nM12=4\nM03=7\n";

int count_lines(const std::string& text, const std::string& needle) {
  int count = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + 1))
    ++count;
  return count;
}

}  // namespace

TEST(CliMoments, PrintsTenMoments) {
  TempDir dir;
  const CmdResult r = run_cli("moments " + corpus_pgm(dir));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.output, kCorpusMomentLines);
}

TEST(CliMoments, BackendsProduceIdenticalOutput) {
  TempDir dir;
  const std::string input = corpus_pgm(dir);
  const CmdResult naive = run_cli("moments " + input + " --backend naive");
  const CmdResult baseline = run_cli("moments " + input + " --backend baseline");
  const CmdResult drt = run_cli("moments " + input + " --backend drt");
  EXPECT_EQ(naive.exit_code, 0);
  EXPECT_EQ(naive.output, kCorpusMomentLines);
  EXPECT_EQ(baseline.output, naive.output);
  EXPECT_EQ(drt.output, naive.output);
}

TEST(CliMoments, CountsFlag) {
  TempDir dir;
  const std::string input = corpus_pgm(dir);
  const CmdResult drt = run_cli("moments " + input + " --counts");
  EXPECT_EQ(drt.exit_code, 0);
  EXPECT_EQ(drt.output, std::string(kCorpusMomentLines) +
                            "mult_count=21\nassembly_mult_count=5\n");
  const CmdResult naive =
      run_cli("moments " + input + " --counts --backend naive");
  EXPECT_EQ(naive.output, std::string(kCorpusMomentLines) +
                              "mult_count=80\nassembly_mult_count=0\n");
}

TEST(CliMoments, MissingFileExitsTwo) {
  const CmdResult r = run_cli("moments /no/such/file.pgm");
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.output.find("error:"), std::string::npos);
}

TEST(CliMoments, UnknownBackendExitsOne) {
  TempDir dir;
  const CmdResult r = run_cli("moments " + corpus_pgm(dir) + " --backend fast");
  EXPECT_EQ(r.exit_code, 1);
}

TEST(CliGeneral, NoSubcommandExitsOne) {
  EXPECT_EQ(run_cli("").exit_code, 1);
}

TEST(CliGeneral, HelpExitsZero) {
  const CmdResult r = run_cli("--help");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.output.find("moments"), std::string::npos);
  EXPECT_NE(r.output.find("bench"), std::string::npos);
}

TEST(CliVerify, TrialsAgree) {
  const CmdResult r = run_cli("verify --trials 5 --max-size 8 --seed 3");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(count_lines(r.output, "trial "), 5);
  EXPECT_EQ(count_lines(r.output, " ok\n"), 5);
  EXPECT_NE(r.output.find("5/5 agree\n"), std::string::npos);
}

TEST(CliVerify, SinglePixelTrial) {
  const CmdResult r = run_cli("verify --trials 1 --max-size 1");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.output.find("trial 0: 1x1"), std::string::npos);
  EXPECT_NE(r.output.find("1/1 agree\n"), std::string::npos);
}

TEST(CliProject, WritesFourCsvFiles) {
  TempDir dir;
  const CmdResult r = run_cli("project " + corpus_pgm(dir) + " --outdir " +
                              dir.file("out") + " --format csv");
  // outdir must exist beforehand; create it and rerun.
  EXPECT_EQ(r.exit_code, 2);
  ASSERT_EQ(::mkdir(dir.file("out").c_str(), 0755), 0);
  const CmdResult ok = run_cli("project " + corpus_pgm(dir) + " --outdir " +
                               dir.file("out") + " --format csv");
  EXPECT_EQ(ok.exit_code, 0);
  EXPECT_EQ(count_lines(ok.output, "\n"), 4);
  EXPECT_EQ(testsupport::read_file(dir.file("out/V.csv")),
            "index,value\n0,4\n1,6\n");
  EXPECT_EQ(testsupport::read_file(dir.file("out/H.csv")),
            "index,value\n0,3\n1,7\n");
  EXPECT_EQ(testsupport::read_file(dir.file("out/D.csv")),
            "index,value\n0,1\n1,5\n2,4\n");
  EXPECT_EQ(testsupport::read_file(dir.file("out/A.csv")),
            "index,value\n0,2\n1,5\n2,3\n");
}

TEST(CliProject, WritesDensityPlots) {
  TempDir dir;
  const CmdResult r = run_cli("project " + corpus_pgm(dir) + " --outdir " +
                              dir.path.string() + " --format pgm-density" +
                              " --plot-height 8");
  EXPECT_EQ(r.exit_code, 0);
  for (const char* name : {"V.pgm", "H.pgm", "D.pgm", "A.pgm"}) {
    const GrayImage plot = load_pgm(dir.file(name));
    EXPECT_EQ(plot.height(), 8) << name;
  }
  EXPECT_EQ(load_pgm(dir.file("V.pgm")).width(), 2);
  EXPECT_EQ(load_pgm(dir.file("D.pgm")).width(), 3);
}

TEST(CliRender, CsvOfVerticalProjection) {
  TempDir dir;
  const std::string out = dir.file("v.csv");
  const CmdResult r = run_cli("render " + corpus_pgm(dir) +
                              " --array v --format csv --out " + out);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.output, out + "\n");
  EXPECT_EQ(testsupport::read_file(out), "index,value\n0,4\n1,6\n");
}

TEST(CliRender, ZeroImageRendersBlack) {
  TempDir dir;
  const std::string input = dir.file("zero.pgm");
  save_pgm(constant_image(3, 2, 0), input, /*binary=*/true);
  const std::string out = dir.file("d.pgm");
  const CmdResult r = run_cli("render " + input +
                              " --array d --out " + out + " --plot-height 4");
  EXPECT_EQ(r.exit_code, 0);
  const GrayImage plot = load_pgm(out);
  EXPECT_EQ(plot.width(), 4);  // diagonal projection of a 3x2 image
  EXPECT_EQ(plot.height(), 4);
  for (auto p : plot.pixels()) EXPECT_EQ(p, 0);
}

TEST(CliRender, MissingArrayExitsOne) {
  TempDir dir;
  const CmdResult r =
      run_cli("render " + corpus_pgm(dir) + " --out " + dir.file("x.pgm"));
  EXPECT_EQ(r.exit_code, 1);
}

TEST(CliBench, TinyLadderCsv) {
  const CmdResult r =
      run_cli("bench --ladder 2 3x2 --k 2 --no-pin", /*merge_stderr=*/false);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(count_lines(r.output, "\n"), 7);  // header + 3 backends * 2 sizes
  EXPECT_EQ(r.output.rfind("backend,width,height,repetitions,best_time_us,checksum\n", 0), 0u);
  EXPECT_NE(r.output.find("\nnaive,2,2,2,"), std::string::npos);
  EXPECT_NE(r.output.find("\ndrt,3,2,2,"), std::string::npos);
}

TEST(CliBench, PlotDataToFile) {
  TempDir dir;
  const std::string out = dir.file("bench.plot");
  const CmdResult r = run_cli("bench --ladder 2 --k 1 --no-pin --format plotdata --out " + out,
                              /*merge_stderr=*/false);
  EXPECT_EQ(r.exit_code, 0);
  const std::string content = testsupport::read_file(out);
  EXPECT_EQ(content.rfind("sqrt_pixels,log10_time_us,backend\n", 0), 0u);
  EXPECT_EQ(count_lines(content, "\n"), 4);
  EXPECT_NE(content.find("2.0,"), std::string::npos);
}

TEST(CliBench, BadLadderEntryExitsOne) {
  EXPECT_EQ(run_cli("bench --ladder twenty").exit_code, 1);
}
