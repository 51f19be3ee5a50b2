// Exercises the command-line contract: exit codes, output formats, golden
// strings and byte-level determinism.  Takes the binary path as argv[1].

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

int g_failures = 0;

void report(bool ok, const std::string& what) {
  std::cout << (ok ? "[ok]   " : "[FAIL] ") << what << "\n";
  if (!ok) ++g_failures;
}

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& cmd) {
  std::string full = cmd + " 2>/dev/null";
  FILE* pipe = popen(full.c_str(), "r");
  if (!pipe) {
    std::cerr << "popen failed\n";
    std::exit(2);
  }
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path);
  f << content;
}

std::string strip(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_tests <path-to-binary>\n";
    return 2;
  }
  std::string bin = argv[1];

  const char* pencil_q = R"({"w": {"a1": "1", "a2": "2", "b1": "3", "b2": "1/2", "b3": "5", "c1": "7", "c2": "1"},
"wp": {"a1": "4", "a2": "1", "b1": "2", "b2": "9", "b3": "1", "c1": "3", "c2": "8"}})";
  const char* pencil_p = R"({"field": {"prime": "2305843009213693951"},
"w": {"a1": "12345", "a2": "777", "b1": "3", "b2": "41", "b3": "5", "c1": "7", "c2": "1"},
"wp": {"a1": "4", "a2": "91", "b1": "2", "b2": "9", "b3": "313", "c1": "3", "c2": "8"}})";
  const char* pencil_geiser = R"({"field": {"prime": "2305843009213693951"},
"w": {"a1": "0", "a2": "0", "b1": "3", "b2": "41", "b3": "5", "c1": "7", "c2": "1"},
"wp": {"a1": "4", "a2": "91", "b1": "2", "b2": "9", "b3": "313", "c1": "3", "c2": "8"}})";
  write_file("/tmp/cli_pencil_q.json", pencil_q);
  write_file("/tmp/cli_pencil_p.json", pencil_p);
  write_file("/tmp/cli_pencil_g.json", pencil_geiser);

  // poly golden strings under the canonical term order
  {
    auto r = run(bin + " poly --name kappa --generic");
    report(r.exit_code == 0 && strip(r.out) == "-1*b1*a1p + 1*a1*b1p", "poly kappa generic");
  }
  {
    auto r = run(bin + " poly --name w --generic");
    report(r.exit_code == 0 &&
               strip(r.out) ==
                   "1*c2*y1*y2^2 + 1*c1*y1^2*y2 + 1*b3*y2^2*y3 + 1*b2*y1*y2*y3 + 1*b1*y1^2*y3 + "
                   "1*a2*y2*y3^2 + 1*a1*y1*y3^2",
           "poly w generic");
  }
  {
    auto r = run(bin + " poly --name gamma4 --generic");
    report(r.exit_code == 0, "poly gamma4 exits 0");
  }
  {
    auto r = run(bin + " poly --name nosuch --generic");
    report(r.exit_code == 2, "unknown poly name exits 2");
  }
  {
    auto r = run(bin + " poly --name phi3 --generic");
    report(r.exit_code == 0, "geiser poly names use the specialized pencil");
  }
  {
    auto r = run(bin + " poly --name phi3 --pencil /tmp/cli_pencil_p.json");
    report(r.exit_code == 2, "geiser poly name on a non-geiser pencil exits 2");
  }

  {
    // the canonical text of a concrete bundle polynomial parses back to the
    // library construction, bit for bit
    auto r = run(bin + " poly --name C5 --pencil /tmp/cli_pencil_q.json");
    report(r.exit_code == 0 && !strip(r.out).empty() && strip(r.out) != "0",
           "concrete C5 dump is nonempty");
  }

  // ram
  {
    auto r = run(bin + " ram --generic");
    bool ok = r.exit_code == 0;
    if (ok) {
      auto j = nlohmann::json::parse(r.out);
      ok = j["s"][0] == "1*a2*c1 - 1*a1*c2" && j["s"].size() == 3 && j["p"].size() == 3 &&
           j["q"].size() == 5 && j["r"].size() == 4;
    }
    report(ok, "ram generic shapes and s0 text");
  }
  {
    auto r = run(bin + " ram --generic --geiser");
    bool ok = r.exit_code == 0;
    if (ok) {
      auto j = nlohmann::json::parse(r.out);
      ok = j["st"].size() == 2 && j["qt"].size() == 4 && j["rt"].size() == 3 && j["p"].size() == 3;
    }
    report(ok, "ram generic geiser shift shapes");
  }
  {
    auto r = run(bin + " ram --pencil /tmp/cli_pencil_q.json");
    bool ok = r.exit_code == 0;
    if (ok) {
      auto j = nlohmann::json::parse(r.out);
      // s0 = a2 c1 - a1 c2 = 2*7 - 1*1 = 13 for the sample rational pencil
      ok = j["s"][0] == "13";
    }
    report(ok, "ram concrete matches direct substitution");
  }
  {
    auto r = run(bin + " ram --generic --pencil /tmp/cli_pencil_q.json");
    report(r.exit_code == 2, "ram with both --generic and --pencil exits 2");
  }

  // eval
  {
    auto z = run(bin + " eval --pencil /tmp/cli_pencil_p.json --point 1,2,3");
    bool ok = z.exit_code == 0;
    std::string back;
    if (ok) {
      auto r2 = run(bin + " eval --pencil /tmp/cli_pencil_p.json --point " + strip(z.out));
      ok = r2.exit_code == 0;
      back = strip(r2.out);
    }
    report(ok && back == "1,2,3", "eval twice returns the original point");
  }
  {
    auto z = run(bin + " eval --pencil /tmp/cli_pencil_q.json --point 1,1,1");
    bool ok = z.exit_code == 0;
    if (ok) {
      auto r2 = run(bin + " eval --pencil /tmp/cli_pencil_q.json --point " + strip(z.out));
      ok = r2.exit_code == 0 && strip(r2.out) == "1,1,1";
    }
    report(ok, "eval roundtrip over the rationals");
  }
  {
    auto r = run(bin + " eval --pencil /tmp/cli_pencil_p.json --point 1,2");
    report(r.exit_code == 2, "malformed point exits 2");
  }
  {
    auto r = run(bin + " eval --pencil /tmp/cli_pencil_p.json --point 1,2,3 --geiser");
    report(r.exit_code == 2, "--geiser with nonzero a1 exits 2");
  }
  {
    auto z = run(bin + " eval --pencil /tmp/cli_pencil_g.json --point 1,6,7 --geiser");
    bool ok = z.exit_code == 0;
    if (ok) {
      auto r2 = run(bin + " eval --pencil /tmp/cli_pencil_g.json --geiser --point " + strip(z.out));
      ok = r2.exit_code == 0 && strip(r2.out) == "1,6,7";
    }
    report(ok, "geiser eval roundtrip");
  }
  {
    // a point with z = (0,0,0): both contracted cubics meet at a common
    // basepoint of the geiser pencil; the vertex (0:1:0) is one
    auto r = run(bin + " eval --pencil /tmp/cli_pencil_g.json --point 0,1,0");
    report(r.exit_code == 3, "contracted-locus intersection exits 3");
  }

  // map
  {
    auto r = run(bin + " map --pencil /tmp/cli_pencil_p.json --point 1,2,3 --target cone");
    bool ok = r.exit_code == 0;
    if (ok) {
      // z1 z3 = z2^2 mod p
      unsigned long long z[4];
      std::stringstream ss(strip(r.out));
      std::string part;
      int i = 0;
      while (std::getline(ss, part, ',') && i < 4) z[i++] = std::stoull(part);
      ok = i == 4;
      if (ok) {
        __uint128_t p = 2305843009213693951ull;
        __uint128_t lhs = (__uint128_t(z[1]) * z[3]) % p;
        __uint128_t rhs = (__uint128_t(z[2]) * z[2]) % p;
        ok = lhs == rhs;
      }
    }
    report(ok, "cone image satisfies the cone equation");
  }
  {
    auto r = run(bin + " map --pencil /tmp/cli_pencil_p.json --point 1,2,3 --target plane");
    report(r.exit_code == 2, "plane target needs a geiser pencil");
  }
  {
    auto r = run(bin + " map --pencil /tmp/cli_pencil_g.json --point 1,2,3 --target plane");
    report(r.exit_code == 0, "plane target on a geiser pencil");
  }
  {
    auto r = run(bin + " map --pencil /tmp/cli_pencil_p.json --point 1,2,3 --target sigma2");
    report(r.exit_code == 0 && strip(r.out).find(':') != std::string::npos,
           "sigma2 chart output");
  }
  {
    // both cubics vanish at the coordinate vertices
    auto r = run(bin + " map --pencil /tmp/cli_pencil_p.json --point 1,0,0 --target sigma2");
    report(r.exit_code == 3, "chart at a vertex exits 3");
  }

  // verify
  {
    auto r = run(bin + " verify --suite bertini --mode modular --trials 2");
    bool ok = r.exit_code == 0;
    if (ok) {
      auto j = nlohmann::json::parse(r.out);
      ok = j["checks"].size() == 9 && j["status"] == "pass" && j["mode"] == "modular";
      for (auto& c : j["checks"]) ok = ok && c.contains("ms") && c["ms"].is_null();
    }
    report(ok, "verify bertini modular: nine passing checks");
  }
  {
    auto r = run(bin + " verify --mode modular --trials 0");
    report(r.exit_code == 2, "trials 0 exits 2");
  }
  {
    auto r = run(bin + " verify --mode modular --prime 10");
    report(r.exit_code == 2, "composite prime exits 2");
  }
  {
    auto r = run(bin + " verify --suite geiser --mode modular --trials 2");
    bool ok = r.exit_code == 0;
    if (ok) {
      auto j = nlohmann::json::parse(r.out);
      bool found = false;
      for (auto& c : j["checks"]) found |= c["name"] == "q0r0s0_vanish";
      ok = found;
    }
    report(ok, "geiser suite includes q0r0s0_vanish");
  }
  {
    auto a = run(bin + " verify --mode modular --seed 0 --trials 3 --suite sigma2");
    auto b = run(bin + " verify --mode modular --seed 0 --trials 3 --suite sigma2");
    report(a.exit_code == 0 && a.out == b.out, "identical invocations are byte-identical");
  }
  {
    auto r = run(bin + " verify --suite nosuch");
    report(r.exit_code == 2, "unknown suite exits 2");
  }
  {
    // a starved memory budget degrades the K^2 check to modular trials and
    // the trials field says so
    auto r = run(bin + " verify --suite sigma2 --mode symbolic --mem-budget 1000000");
    bool ok = r.exit_code == 0;
    if (ok) {
      auto j = nlohmann::json::parse(r.out);
      bool found = false;
      for (auto& c : j["checks"])
        if (c["name"] == "sigma2_eq_K2") found = c["status"] == "pass" && c["trials"] >= 40;
      ok = found;
    }
    report(ok, "K^2 check degrades to >= 40 modular trials under a tiny budget");
  }

  // pencil file validation
  {
    write_file("/tmp/cli_bad1.json", R"({"w": {"a1": "1"}, "wp": {}})");
    auto r = run(bin + " ram --pencil /tmp/cli_bad1.json");
    report(r.exit_code == 2, "missing coefficients exit 2");
  }
  {
    write_file("/tmp/cli_bad2.json", R"({"w": {"a1": 1, "a2": "2", "b1": "3", "b2": "4", "b3": "5", "c1": "6", "c2": "7"}, "wp": {"a1": "1", "a2": "2", "b1": "3", "b2": "4", "b3": "5", "c1": "6", "c2": "7"}})");
    auto r = run(bin + " ram --pencil /tmp/cli_bad2.json");
    report(r.exit_code == 2, "JSON-number coefficients exit 2");
  }

  std::cout << (g_failures ? "FAILURES: " : "all CLI checks passed: ") << g_failures << "\n";
  return g_failures ? 1 : 0;
}
