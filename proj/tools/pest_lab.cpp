// Copyright 2026 The pest-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// pest-lab: command-line front end over the C API.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "pestlab/pestlab.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

// Carries a status out of the command bodies.
struct Failure : std::runtime_error {
  int exit_code;
  Failure(int code, const std::string& msg) : std::runtime_error(msg), exit_code(code) {}
};

void check(pest_status st) {
  if (st == PEST_OK) return;
  const int code = (st == PEST_E_INTERNAL || st == PEST_E_VERIFICATION_FAILED) ? kExitInternal : kExitUsage;
  throw Failure(code, std::string(pest_status_name(st)) + ": " + pest_last_error());
}

struct StringDeleter {
  void operator()(char* s) const { pest_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct SetDeleter {
  void operator()(pest_conn_set* s) const { pest_conn_set_destroy(s); }
};
struct FnDeleter {
  void operator()(pest_boolfn* f) const { pest_boolfn_destroy(f); }
};
struct FieldDeleter {
  void operator()(pest_field* f) const { pest_field_destroy(f); }
};
using SetHandle = std::unique_ptr<pest_conn_set, SetDeleter>;
using FnHandle = std::unique_ptr<pest_boolfn, FnDeleter>;
using FieldHandle = std::unique_ptr<pest_field, FieldDeleter>;

Json take_json(char* raw) {
  OwnedString owned(raw);
  return Json::parse(owned.get());
}

struct Options {
  bool json = false;
  int m = 0;
  std::string modulus;
  double tolerance = 1e-9;
  bool require_edges = false;
  bool unsafe_small_k = false;

  std::string support;
  std::string truth_table;
  std::optional<unsigned> gold;
  std::string inner_product;
  std::string pair;
  std::string edge;
  std::string time;
  bool sweep = false;
  int k = 0;
  unsigned e = 1;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure(kExitUsage, "cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void warn(const std::string& msg) { std::cerr << "warning: " << msg << "\n"; }

// Support files are line-oriented; JSON documents written by this tool are
// accepted too, using their support list.
SetHandle load_support(const Options& opt) {
  if (opt.support.empty()) throw Failure(kExitUsage, "--support <file> is required");
  std::string text = read_file(opt.support);
  int m = opt.m;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    Json doc;
    try {
      doc = Json::parse(text);
    } catch (const Json::exception& e) {
      throw Failure(kExitUsage, opt.support + ": " + e.what());
    }
    const char* key = doc.contains("lifted_support") ? "lifted_support" : "support";
    if (!doc.contains(key) || !doc[key].is_array()) throw Failure(kExitUsage, opt.support + ": no support list");
    text.clear();
    for (const auto& el : doc[key]) text += el.get<std::string>() + "\n";
    if (m == 0 && doc.contains("m")) m = doc["m"].get<int>();
  }
  pest_conn_set* raw = nullptr;
  char* warnings = nullptr;
  check(pest_conn_set_parse(text.c_str(), m, &raw, &warnings));
  SetHandle set(raw);
  if (warnings != nullptr) {
    OwnedString w(warnings);
    std::istringstream lines(w.get());
    for (std::string line; std::getline(lines, line);) warn(opt.support + ": " + line);
  }
  if (pest_conn_set_size(set.get()) == 0) {
    throw Failure(kExitUsage, "EmptySupport: " + opt.support + " has no elements");
  }
  if (!pest_conn_set_is_connected(set.get())) warn("S does not generate the group; the graph is disconnected");
  return set;
}

uint32_t parse_element(const std::string& token, int m) {
  uint32_t x = 0;
  check(pest_parse_element(token.c_str(), m, &x));
  return x;
}

pest_pair parse_pair(const std::string& text, int m) {
  if (text.empty()) throw Failure(kExitUsage, "--pair a,b,c,d is required");
  pest_pair p{};
  check(pest_parse_pair(text.c_str(), m, &p));
  return p;
}

std::string binary(uint32_t x, int m) {
  std::string s(m, '0');
  for (int i = 0; i < m; ++i) {
    if ((x >> (m - 1 - i)) & 1u) s[i] = '1';
  }
  return s;
}

uint32_t parse_modulus(const std::string& text) {
  if (text.empty()) return 0;
  try {
    std::size_t pos = 0;
    const auto v = std::stoul(text, &pos, 16);
    if (pos != text.size() || v > 0xffffffffUL) throw std::invalid_argument("");
    return static_cast<uint32_t>(v);
  } catch (const std::logic_error&) {
    throw Failure(kExitUsage, "--modulus expects a hex polynomial such as 0x13");
  }
}

FieldHandle make_field(int m, const Options& opt) {
  pest_field* raw = nullptr;
  check(pest_field_create(m, parse_modulus(opt.modulus), &raw));
  return FieldHandle(raw);
}

void print(const Json& doc) { std::cout << doc.dump(2) << "\n"; }

std::string null_or(const Json& v) { return v.is_null() ? "-" : (v.is_string() ? v.get<std::string>() : v.dump()); }

// "p/q" coefficient of pi rendered as a time.
std::string pi_time(const Json& v) {
  if (v.is_null()) return "-";
  auto s = v.get<std::string>();
  const auto slash = s.find('/');
  const auto num = s.substr(0, slash);
  const auto den = s.substr(slash + 1);
  const std::string head = num == "1" ? "pi" : num + "pi";
  return den == "1" ? head : head + "/" + den;
}

void print_certificate(const Json& c) {
  const auto& p = c["pair"];
  std::cout << "pair      " << p["a"].get<std::string>() << "," << p["b"].get<std::string>() << " -> "
            << p["c"].get<std::string>() << "," << p["d"].get<std::string>() << "\n";
  std::cout << "status    " << c["status"].get<std::string>() << "\n";
  if (!c["reason"].is_null()) std::cout << "reason    " << c["reason"].get<std::string>() << "\n";
  if (c["status"] == "positive") {
    std::cout << "rho       " << c["rho"] << "\n";
    std::cout << "M         " << c["M"] << "\n";
    std::cout << "t_min     " << pi_time(c["t_min_pi"]) << "\n";
  }
  std::cout << "x0        " << null_or(c["x0"]) << "\n";
}

void print_report(const Json& r) {
  std::printf("t=%-10s fidelity=%.12f amplitude=%+.12f%+.12fi%s\n", pi_time(r["t_pi"]).c_str(),
              r["fidelity"].get<double>(), r["amplitude"]["re"].get<double>(), r["amplitude"]["im"].get<double>(),
              r["hit"].get<bool>() ? "  HIT" : "");
}

int cmd_spectrum(const Options& opt) {
  auto set = load_support(opt);
  char* raw = nullptr;
  check(pest_spectrum_json(set.get(), &raw));
  const Json doc = take_json(raw);
  if (opt.json) {
    print(doc);
  } else {
    std::cout << "x" << std::string(doc["m"].get<int>(), ' ') << "lambda\n";
    for (const auto& e : doc["spectrum"]) {
      std::cout << e["x"].get<std::string>() << "  " << e["lambda"] << "\n";
    }
  }
  return kExitOk;
}

FnHandle inner_product_function(const std::string& params, int k) {
  const auto comma = params.find(',');
  const std::string mask_text = params.substr(0, comma);
  int affine = 0;
  if (comma != std::string::npos) {
    const auto rest = params.substr(comma + 1);
    if (rest != "0" && rest != "1") throw Failure(kExitUsage, "--inner-product expects mask[,0|1]");
    affine = rest == "1";
  }
  const uint32_t mask = parse_element(mask_text, 2 * k);
  pest_boolfn* raw = nullptr;
  check(pest_boolfn_inner_product(k, mask, affine, &raw));
  return FnHandle(raw);
}

int cmd_wht(const Options& opt) {
  const int sources = !opt.truth_table.empty() + !opt.support.empty() + opt.gold.has_value() + !opt.inner_product.empty();
  if (sources != 1) throw Failure(kExitUsage, "wht needs exactly one of --truth-table, --support, --gold, --inner-product");
  FnHandle f;
  pest_boolfn* raw = nullptr;
  if (!opt.truth_table.empty()) {
    check(pest_boolfn_parse_truth_table(read_file(opt.truth_table).c_str(), opt.m, &raw));
    f.reset(raw);
  } else if (!opt.support.empty()) {
    auto set = load_support(opt);
    check(pest_boolfn_from_conn_set(set.get(), &raw));
    f.reset(raw);
  } else if (opt.gold) {
    if (opt.m == 0) throw Failure(kExitUsage, "--gold needs --m");
    auto field = make_field(opt.m, opt);
    check(pest_boolfn_gold(field.get(), *opt.gold, &raw));
    f.reset(raw);
  } else {
    if (opt.m == 0 || opt.m % 2 != 0) throw Failure(kExitUsage, "--inner-product needs an even --m");
    f = inner_product_function(opt.inner_product, opt.m / 2);
  }
  char* js = nullptr;
  check(pest_boolfn_wht_json(f.get(), &js));
  const Json doc = take_json(js);
  if (opt.json) {
    print(doc);
  } else {
    std::cout << "# class " << doc["class"].get<std::string>() << ", amplitude " << doc["amplitude"] << "\n";
    for (const auto& e : doc["spectrum"]) std::cout << e["a"].get<std::string>() << "  " << e["value"] << "\n";
  }
  return kExitOk;
}

int cmd_basis(const Options& opt) {
  if (opt.m == 0) throw Failure(kExitUsage, "basis needs --m");
  auto field = make_field(opt.m, opt);
  char* js = nullptr;
  check(pest_field_basis_json(field.get(), &js));
  const Json doc = take_json(js);
  if (opt.json) {
    print(doc);
    return kExitOk;
  }
  std::cout << "modulus " << doc["modulus"].get<std::string>() << (doc["primitive"].get<bool>() ? " (primitive)" : "")
            << "\n";
  int i = 1;
  for (const auto& e : doc["basis"]) {
    std::cout << "alpha_" << i++ << "  " << e["hex"].get<std::string>();
    if (!e["power"].is_null()) std::cout << "  g^" << e["power"];
    std::cout << "  coords " << e["coords"].get<std::string>() << "\n";
  }
  return kExitOk;
}

void edge_flags(const Json& cert, const Options& opt) {
  const bool ab = cert["ab_is_edge"].get<bool>();
  const bool cd = cert["cd_is_edge"].get<bool>();
  if (opt.require_edges && !(ab && cd)) {
    throw Failure(kExitUsage, std::string("--require-edges: ") + (ab ? "{c,d}" : "{a,b}") + " is not an edge");
  }
  if (!ab) warn("{a,b} is not an edge of the graph");
  if (!cd) warn("{c,d} is not an edge of the graph");
}

int cmd_check(const Options& opt) {
  auto set = load_support(opt);
  const int m = pest_conn_set_dimension(set.get());
  const auto pair = parse_pair(opt.pair, m);
  int positive = 0;
  char* js = nullptr;
  check(pest_check(set.get(), pair, &positive, &js));
  const Json doc = take_json(js);
  edge_flags(doc, opt);
  if (opt.json) {
    print(doc);
  } else {
    print_certificate(doc);
  }
  return positive ? kExitOk : kExitNegative;
}

int cmd_search(const Options& opt) {
  auto set = load_support(opt);
  const int m = pest_conn_set_dimension(set.get());
  const auto comma = opt.edge.find(',');
  if (comma == std::string::npos || opt.edge.find(',', comma + 1) != std::string::npos) {
    throw Failure(kExitUsage, "--edge expects a,b");
  }
  const uint32_t a = parse_element(opt.edge.substr(0, comma), m);
  const uint32_t b = parse_element(opt.edge.substr(comma + 1), m);
  if (opt.require_edges) {
    std::vector<uint32_t> members(pest_conn_set_size(set.get()));
    check(pest_conn_set_members(set.get(), members.data(), members.size()));
    if (std::find(members.begin(), members.end(), a ^ b) == members.end()) {
      throw Failure(kExitUsage, "--require-edges: {a,b} is not an edge");
    }
  }
  std::size_t count = 0;
  char* js = nullptr;
  check(pest_search(set.get(), a, b, &count, &js));
  const Json doc = take_json(js);
  if (opt.json) {
    print(doc);
  } else {
    std::cout << count << " partner(s) for edge " << binary(a, m) << "," << binary(b, m) << "\n";
    for (const auto& p : doc["partners"]) {
      std::cout << p["c"].get<std::string>() << "," << p["d"].get<std::string>() << "  t_min "
                << pi_time(p["certificate"]["t_min_pi"]) << "\n";
    }
  }
  return count > 0 ? kExitOk : kExitNegative;
}

int cmd_verify(const Options& opt) {
  if (opt.time.empty() == !opt.sweep) throw Failure(kExitUsage, "verify needs exactly one of --time or --sweep");
  auto set = load_support(opt);
  const int m = pest_conn_set_dimension(set.get());
  const auto pair = parse_pair(opt.pair, m);
  int hit = 0;
  char* js = nullptr;
  if (opt.sweep) {
    check(pest_verify_sweep(set.get(), pair, opt.tolerance, &hit, &js));
  } else {
    int64_t num = 0;
    int64_t den = 1;
    check(pest_parse_pi_coefficient(opt.time.c_str(), &num, &den));
    check(pest_verify_at(set.get(), pair, num, den, opt.tolerance, &hit, &js));
  }
  const Json doc = take_json(js);
  if (opt.json) {
    print(doc);
  } else if (opt.sweep) {
    std::cout << "ell_max " << doc["ell_max"] << (doc["premise_holds"].get<bool>() ? "" : " (premise fails)") << "\n";
    std::cout << "best: ";
    print_report(doc["best"]);
    for (const auto& r : doc["hits"]) {
      std::cout << "hit:  ";
      print_report(r);
    }
    for (const auto& r : doc["grid_hits"]) {
      std::cout << "grid: ";
      print_report(r);
    }
  } else {
    print_report(doc);
  }
  return hit ? kExitOk : kExitNegative;
}

void print_lift(const Json& doc, const Options& opt) {
  if (opt.json) {
    print(doc);
    return;
  }
  std::cout << "# " << doc["lift_kind"].get<std::string>() << " of a function on m = " << doc["base_m"]
            << ", lifted to m = " << doc["m"] << ", PEST at " << pi_time(doc["t_pi"]) << "\n";
  const auto& p = doc["pair"];
  std::cout << "# pair " << p["a"].get<std::string>() << "," << p["b"].get<std::string>() << " -> "
            << p["c"].get<std::string>() << "," << p["d"].get<std::string>() << "\n";
  for (const auto& x : doc["lifted_support"]) std::cout << x.get<std::string>() << "\n";
}

int cmd_lift_bent(const Options& opt) {
  if (opt.k <= 0) throw Failure(kExitUsage, "lift-bent needs --k");
  if (opt.truth_table.empty() == opt.inner_product.empty()) {
    throw Failure(kExitUsage, "lift-bent needs exactly one of --truth-table or --inner-product");
  }
  FnHandle f;
  if (!opt.truth_table.empty()) {
    pest_boolfn* raw = nullptr;
    check(pest_boolfn_parse_truth_table(read_file(opt.truth_table).c_str(), 2 * opt.k, &raw));
    f.reset(raw);
  } else {
    f = inner_product_function(opt.inner_product, opt.k);
  }
  char* js = nullptr;
  check(pest_lift_bent(f.get(), opt.unsafe_small_k, &js));
  print_lift(take_json(js), opt);
  return kExitOk;
}

int cmd_lift_semibent(const Options& opt) {
  if (opt.m == 0) throw Failure(kExitUsage, "lift-semibent needs --m");
  auto field = make_field(opt.m, opt);
  char* js = nullptr;
  check(pest_lift_semibent(field.get(), opt.e, opt.unsafe_small_k, &js));
  print_lift(take_json(js), opt);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Perfect edge state transfer on cubelike graphs"};
  app.set_version_flag("--version", std::string(pest_version()));
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_flag("--json", opt.json, "Emit JSON instead of a table");
  app.add_option("--m", opt.m, "Dimension m of F_2^m")->check(CLI::Range(1, 24));
  app.add_option("--modulus", opt.modulus, "Irreducible modulus as hex, e.g. 0xb");
  app.add_option("--tolerance", opt.tolerance, "Fidelity tolerance")->check(CLI::PositiveNumber);
  app.add_flag("--require-edges", opt.require_edges, "Reject pairs that are not edges");
  app.add_flag("--unsafe-small-k", opt.unsafe_small_k, "Allow lifts below the guaranteed dimension");

  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues of Cay(F_2^m, S)");
  spectrum->add_option("--support", opt.support, "Connection set file")->required();

  auto* wht = app.add_subcommand("wht", "Walsh-Hadamard spectrum of a Boolean function");
  wht->add_option("--truth-table", opt.truth_table, "File with one line of 2^m bits");
  wht->add_option("--support", opt.support, "Support file");
  wht->add_option("--gold", opt.gold, "Gold function Tr(x^(2^e+1)) with this e");
  wht->add_option("--inner-product", opt.inner_product, "Inner-product bent function: mask[,affine]");

  auto* basis = app.add_subcommand("basis", "Trace-orthogonal basis of F_{2^m}");

  auto* chk = app.add_subcommand("check", "Decide PEST for one edge-state pair");
  chk->add_option("--support", opt.support, "Connection set file")->required();
  chk->add_option("--pair", opt.pair, "a,b,c,d")->required();

  auto* search = app.add_subcommand("search", "List every PEST partner of an edge");
  search->add_option("--support", opt.support, "Connection set file")->required();
  search->add_option("--edge", opt.edge, "a,b")->required();

  auto* verify = app.add_subcommand("verify", "Numerical fidelity check");
  verify->add_option("--support", opt.support, "Connection set file")->required();
  verify->add_option("--pair", opt.pair, "a,b,c,d")->required();
  verify->add_option("--time", opt.time, "Time as a multiple of pi, e.g. 1/2pi");
  verify->add_flag("--sweep", opt.sweep, "Scan all candidate times");

  auto* lift_bent = app.add_subcommand("lift-bent", "PEST instance from a bent function");
  lift_bent->add_option("--k", opt.k, "Half dimension of the bent function")->required();
  lift_bent->add_option("--truth-table", opt.truth_table, "File with one line of 4^k bits");
  lift_bent->add_option("--inner-product", opt.inner_product, "Inner-product bent function: mask[,affine]");

  auto* lift_semi = app.add_subcommand("lift-semibent", "PEST instance from a Gold semi-bent function");
  lift_semi->add_option("--e", opt.e, "Gold exponent e, gcd(e, m) = 1");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (spectrum->parsed()) return cmd_spectrum(opt);
    if (wht->parsed()) return cmd_wht(opt);
    if (basis->parsed()) return cmd_basis(opt);
    if (chk->parsed()) return cmd_check(opt);
    if (search->parsed()) return cmd_search(opt);
    if (verify->parsed()) return cmd_verify(opt);
    if (lift_bent->parsed()) return cmd_lift_bent(opt);
    if (lift_semi->parsed()) return cmd_lift_semibent(opt);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.what() << "\n";
    return f.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
