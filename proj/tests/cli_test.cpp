#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <json.hpp>
#include <regex>
#include <string>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

std::string quote(const std::string& arg) {
  std::string q = "'";
  for (char c : arg) {
    if (c == '\'') q += "'\\''";
    else q += c;
  }
  return q + "'";
}

Run partlog(const std::vector<std::string>& args, const std::string& stdin_text = {}) {
  std::string cmd;
  if (!stdin_text.empty()) cmd = "printf '%s' " + quote(stdin_text) + " | ";
  cmd += PARTLOG_CLI_PATH;
  for (const auto& a : args) cmd += ' ' + quote(a);
  cmd += " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST(Cli, CheckExcludedMiddle) {
  const auto r = partlog({"check", "s \\/ ~s"});
  EXPECT_EQ(r.status, 1) << r.out;
  EXPECT_TRUE(contains(r.out, "classical: tautology")) << r.out;
  EXPECT_TRUE(contains(r.out, "counterexample at n=3")) << r.out;
  EXPECT_TRUE(contains(r.out, "s = {{a,b},{c}}")) << r.out;
}

TEST(Cli, CheckModusPonens) {
  const auto r = partlog({"check", "(s /\\ (s -> p)) -> p"});
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_TRUE(contains(r.out, "no counterexample up to n=4")) << r.out;
  EXPECT_EQ(partlog({"--max-size", "5", "check", "(s /\\ (s -> p)) -> p"}).status, 0);
}

TEST(Cli, CheckSyntaxError) {
  const auto r = partlog({"check", "s \\/"});
  EXPECT_EQ(r.status, 2);
  EXPECT_TRUE(contains(r.out, "position 4")) << r.out;
}

TEST(Cli, CheckJson) {
  auto r = partlog({"--format", "json", "check", "s \\/ ~s"});
  EXPECT_EQ(r.status, 1);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["formula"], "s \\/ ~s");
  EXPECT_EQ(j["classical"], true);
  EXPECT_EQ(j["partition"]["status"], "counterexample");
  EXPECT_EQ(j["partition"]["n"], 3);
  EXPECT_EQ(j["partition"]["assignment"]["s"], "{{a,b},{c}}");
  EXPECT_EQ(j["partition"]["bound"], 4);

  r = partlog({"check", "--format", "json", "s -> s"});
  EXPECT_EQ(r.status, 0);
  j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["partition"]["status"], "no_counterexample");
  EXPECT_FALSE(j["partition"].contains("n"));
  EXPECT_FALSE(j["partition"].contains("assignment"));
}

TEST(Cli, CheckStdin) {
  const auto r = partlog({"check", "-"}, "s \\/ ~s\n");
  EXPECT_EQ(r.status, 1) << r.out;
  EXPECT_TRUE(contains(r.out, "n=3"));
}

TEST(Cli, CheckBudgetAndFlags) {
  EXPECT_EQ(partlog({"--budget", "10", "check", "(a /\\ (a -> b)) -> b"}).status, 2);
  EXPECT_EQ(partlog({"--max-size", "1", "check", "s"}).status, 2);
  EXPECT_EQ(partlog({"--jobs", "0", "check", "s"}).status, 2);
  EXPECT_EQ(partlog({"--format", "xml", "check", "s"}).status, 2);
  EXPECT_EQ(partlog({"--format", "dot", "check", "s"}).status, 2);
  EXPECT_EQ(partlog({}).status, 2);
  EXPECT_EQ(partlog({"frobnicate"}).status, 2);
  const auto a = partlog({"--jobs", "1", "check", "(s -> p) -> s"});
  const auto b = partlog({"--jobs", "4", "check", "(s -> p) -> s"});
  EXPECT_EQ(a.status, 1);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, EvalExample) {
  const auto r = partlog({"eval", "s -> p", "s={{a},{b,c,d}}", "p={{a,b},{c,d}}"});
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_EQ(r.out, "{{a,b},{c},{d}}\n");
}

TEST(Cli, EvalFigure3Join) {
  const auto r = partlog({"eval", "s \\/ p", "p={{a,b},{c}}", "s={{a},{b,c}}"});
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_EQ(r.out, "{{a},{b},{c}}\n");
}

TEST(Cli, EvalConstants) {
  EXPECT_EQ(partlog({"eval", "0 -> 0", "--size", "2"}).out, "{{a},{b}}\n");
  EXPECT_EQ(partlog({"eval", "0", "--universe", "x,y,z"}).out, "{{x,y,z}}\n");
  EXPECT_EQ(partlog({"eval", "0 -> 0"}).status, 2);
}

TEST(Cli, EvalPreservesLabels) {
  const auto r = partlog({"eval", "~s \\/ s", "s={{x},{y,z}}"});
  EXPECT_EQ(r.out, "{{x},{y,z}}\n");
}

TEST(Cli, EvalErrors) {
  EXPECT_EQ(partlog({"eval", "s /\\ p", "s={{a},{b}}"}).status, 2);
  EXPECT_EQ(partlog({"eval", "s /\\ p", "s={{a},{b}}", "p={{a},{c}}"}).status, 2);
  EXPECT_EQ(partlog({"eval", "s", "s={{a},{a}}"}).status, 2);
  EXPECT_EQ(partlog({"eval", "s", "s"}).status, 2);
}

TEST(Cli, EvalStdinAndRgs) {
  const auto r = partlog({"eval", "-", "s=rgs:0,1,1,1", "p=rgs:0,0,1,1"}, "s -> p");
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_EQ(r.out, "{{a,b},{c},{d}}\n");
}

TEST(Cli, Enumerate) {
  auto r = partlog({"enumerate", "3"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out,
            "{{a,b,c}}\n{{a,b},{c}}\n{{a,c},{b}}\n{{a},{b,c}}\n{{a},{b},{c}}\ncount: 5\n");
  r = partlog({"--format", "json", "enumerate", "4"});
  EXPECT_EQ(nlohmann::json::parse(r.out)["count"], 15);
  EXPECT_EQ(partlog({"enumerate", "11"}).status, 2);
}

TEST(Cli, EnumerateDot) {
  const auto r = partlog({"enumerate", "3", "--format", "dot"});
  EXPECT_EQ(r.status, 0);
  const std::regex node(R"(p\d+ \[label=)"), edge(R"(p\d+ -> p\d+;)");
  const auto count = [&](const std::regex& re) {
    return std::distance(std::sregex_iterator(r.out.begin(), r.out.end(), re),
                         std::sregex_iterator());
  };
  EXPECT_EQ(count(node), 5);
  EXPECT_EQ(count(edge), 6);
  EXPECT_TRUE(contains(r.out, "digraph"));
}

TEST(Cli, Table) {
  auto r = partlog({"table", "join", "2"});
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(contains(r.out, "0 | 0 1\n1 | 1 1\n")) << r.out;
  r = partlog({"--format", "json", "table", "graph:TFTT", "3"});
  EXPECT_EQ(r.status, 0);
  const auto via_graph = nlohmann::json::parse(r.out)["table"];
  r = partlog({"--format", "json", "table", "implies", "3"});
  EXPECT_EQ(nlohmann::json::parse(r.out)["table"], via_graph);
  EXPECT_EQ(partlog({"table", "xor", "3"}).status, 2);
  EXPECT_EQ(partlog({"table", "join", "6"}).status, 2);
}

TEST(Cli, Core) {
  const auto r = partlog({"core", "{{a,b},{c,d}}"});
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(contains(r.out, "members: 4")) << r.out;
  EXPECT_TRUE(contains(r.out, "{B0,B1} -> {{a},{b},{c},{d}}")) << r.out;
  const auto j = nlohmann::json::parse(partlog({"--format", "json", "core", "{{x},{y,z}}"}).out);
  EXPECT_EQ(j["members"].size(), 2u);
  EXPECT_EQ(j["members"][0]["partition"], "{{x},{y,z}}");
}

TEST(Cli, Suites) {
  auto r = partlog({"suite", "figure3"});
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_TRUE(contains(r.out, "PASS pi \\/ (sigma /\\ tau) = pi"));
  r = partlog({"suite", "implication-equivalence"});
  EXPECT_EQ(r.status, 0) << r.out;
  r = partlog({"--format", "json", "suite", "common-dits"});
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_EQ(nlohmann::json::parse(r.out)["passed"], true);
  EXPECT_EQ(partlog({"suite", "nope"}).status, 2);
}
