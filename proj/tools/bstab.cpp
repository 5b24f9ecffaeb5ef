/*
 * Copyright 2026 The bstab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// bstab: command-line front end over the C API.
//
// stdout carries JSON only; diagnostics go to stderr.
// Exit codes: 0 ok, 2 usage or parse error, 3 domain error, 4 internal error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "bstab/bstab.h"
#include "json.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;
constexpr int kExitInternal = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Inline JSON when the argument looks like JSON, otherwise a file name.
json inline_or_file(const std::string& arg, const char* what) {
  std::size_t i = arg.find_first_not_of(" \t\r\n");
  const bool inline_json = i != std::string::npos && (arg[i] == '{' || arg[i] == '[' || arg[i] == '"');
  const std::string text = inline_json ? arg : slurp(arg);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("malformed ") + what + ": " + e.what());
  }
}

int exit_for(bstab_status s) {
  switch (s) {
    case BSTAB_OK:
      return kExitOk;
    case BSTAB_ERR_ARGUMENT:
    case BSTAB_ERR_PARSE:
      return kExitParse;
    case BSTAB_ERR_DOMAIN:
      return kExitDomain;
    default:
      return kExitInternal;
  }
}

struct Options {
  std::string lattice, point, klass, itable, ihat, region, base, svg, omega, points, twist = "reject";
  std::string budget = "1";
  int grid = 200;
  long wall = -1;
  long max_parts = -1;
  unsigned long long seed = 0;
  bool provenance = false;
  bool all_pairs = false;
};

class Session {
 public:
  explicit Session(const std::string& lattice_path) {
    const std::string text = slurp(lattice_path);
    bstab_status s = bstab_context_new(text.c_str(), &ctx_);
    if (s != BSTAB_OK) report_and_throw(s);
  }
  ~Session() { bstab_context_free(ctx_); }
  Session(const Session&) = delete;
  Session& operator=(const Session&) = delete;

  std::string run(const std::string& command, const json& request) {
    char* out = nullptr;
    const std::string req = request.dump();
    bstab_status s = bstab_run(ctx_, command.c_str(), req.c_str(), &out);
    if (s != BSTAB_OK) report_and_throw(s);
    std::string result(out);
    bstab_string_free(out);
    return result;
  }

  std::string svg(const json& request, int grid) {
    char* out = nullptr;
    const std::string req = request.dump();
    bstab_status s = bstab_walls_svg(ctx_, req.c_str(), grid, &out);
    if (s != BSTAB_OK) report_and_throw(s);
    std::string result(out);
    bstab_string_free(out);
    return result;
  }

  struct Failure {
    bstab_status status;
  };

 private:
  [[noreturn]] static void report_and_throw(bstab_status s) {
    std::cerr << "bstab: " << bstab_last_error() << "\n";
    throw Failure{s};
  }
  bstab_context* ctx_ = nullptr;
};

json slice_request(const Options& o) {
  json req{{"region", o.region}, {"class", inline_or_file(o.klass, "class")}};
  if (!o.base.empty()) req["base"] = inline_or_file(o.base, "base");
  if (o.all_pairs) req["all_pairs"] = true;
  return req;
}

void add_common(json& req, const Options& o) {
  if (!o.itable.empty()) req["itable"] = inline_or_file(o.itable, "I-table");
  if (o.max_parts >= 0) req["max_parts"] = o.max_parts;
  if (o.provenance) req["provenance"] = true;
}

// "b,t;b,t" -> [[b,t],[b,t]]
json parse_points(const std::string& text) {
  json out = json::array();
  std::stringstream ss(text);
  std::string pt;
  while (std::getline(ss, pt, ';')) {
    const auto comma = pt.find(',');
    if (comma == std::string::npos) throw UsageError("--points expects b,t;b,t");
    out.push_back(json::array({pt.substr(0, comma), pt.substr(comma + 1)}));
  }
  if (out.size() != 2) throw UsageError("--points expects exactly two points");
  return out;
}

json omega_of(const Options& o) {
  if (!o.omega.empty()) return inline_or_file(o.omega, "omega");
  if (!o.point.empty()) return inline_or_file(o.point, "point").at("omega");
  throw UsageError("--omega or --point is required");
}

int dispatch(const std::string& command, const Options& o) {
  Session session(o.lattice);
  json req = json::object();
  if (command == "charge") {
    req = {{"point", inline_or_file(o.point, "point")}, {"class", inline_or_file(o.klass, "class")}};
  } else if (command == "enumerate") {
    req = {{"point", inline_or_file(o.point, "point")}, {"budget", o.budget}};
  } else if (command == "walls") {
    req = slice_request(o);
    if (!o.svg.empty()) {
      std::ofstream f(o.svg);
      if (!f) throw UsageError("cannot write " + o.svg);
      f << session.svg(req, o.grid);
    }
  } else if (command == "chamber") {
    req = slice_request(o);
    if (!o.points.empty()) req["points"] = parse_points(o.points);
    req["seed"] = o.seed;
    add_common(req, o);
  } else if (command == "cross") {
    req = slice_request(o);
    if (o.wall >= 0) req["wall"] = o.wall;
    add_common(req, o);
  } else if (command == "jalpha") {
    req = {{"point", inline_or_file(o.point, "point")}, {"class", inline_or_file(o.klass, "class")}};
    add_common(req, o);
  } else if (command == "jhat") {
    req = {{"omega", omega_of(o)}, {"class", inline_or_file(o.klass, "class")}};
    add_common(req, o);
  } else if (command == "largevolume") {
    req = {{"omega", omega_of(o)}, {"class", inline_or_file(o.klass, "class")}, {"twist", o.twist}};
    if (!o.ihat.empty()) req["ihat"] = inline_or_file(o.ihat, "I-hat table");
    add_common(req, o);
  }
  std::cout << session.run(command, req) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact numerical Bridgeland stability data on K3 and abelian surfaces"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(bstab_version()));
  Options o;

  auto lattice = [&](CLI::App* c) { c->add_option("--lattice", o.lattice, "lattice JSON file")->required(); };
  auto point = [&](CLI::App* c, bool required) {
    auto* opt = c->add_option("--point", o.point, "stability point {\"beta\",\"omega\"}, inline or file");
    if (required) opt->required();
  };
  auto klass = [&](CLI::App* c) { c->add_option("--class", o.klass, "Mukai vector {\"r\",\"l\",\"s\"}")->required(); };
  auto itable = [&](CLI::App* c) { c->add_option("--itable", o.itable, "I-table JSON file (formal symbols if absent)"); };
  auto prov = [&](CLI::App* c) { c->add_flag("--provenance", o.provenance, "include per-decomposition weights"); };
  auto parts = [&](CLI::App* c) { c->add_option("--max-parts", o.max_parts, "largest decomposition length kept"); };
  auto slice = [&](CLI::App* c) {
    c->add_option("--region", o.region, "b0,b1,t0,t1")->required();
    c->add_option("--base", o.base, "slice directions {\"B0\",\"W0\"}; both default to e1");
    c->add_flag("--all-pairs", o.all_pairs, "also include walls between two destabilizers");
  };

  auto* charge = app.add_subcommand("charge", "central charge and heart phase of a class");
  lattice(charge), point(charge, true), klass(charge);

  auto* enumerate = app.add_subcommand("enumerate", "classes with |Z|^2 <= budget");
  lattice(enumerate), point(enumerate, true);
  enumerate->add_option("--budget", o.budget, "bound on |Z|^2 as p/q")->required();

  auto* walls = app.add_subcommand("walls", "walls for a class in a slice rectangle");
  lattice(walls), klass(walls), slice(walls);
  walls->add_option("--svg", o.svg, "write a wall diagram");
  walls->add_option("--grid", o.grid, "sign-sampling grid resolution")->check(CLI::Range(1, 4096));

  auto* chamber = app.add_subcommand("chamber", "constancy of J inside one chamber");
  lattice(chamber), klass(chamber), slice(chamber), itable(chamber), prov(chamber);
  chamber->add_option("--points", o.points, "two points b,t;b,t (sampled from --seed if absent)");
  chamber->add_option("--seed", o.seed, "seed for sampled points");

  auto* cross = app.add_subcommand("cross", "invariance of epsilon-bar and J across walls");
  lattice(cross), klass(cross), slice(cross), itable(cross), prov(cross), parts(cross);
  cross->add_option("--wall", o.wall, "index into the walls output (all walls if absent)");

  auto* jalpha = app.add_subcommand("jalpha", "the invariant J at a stability point");
  lattice(jalpha), point(jalpha, true), klass(jalpha), itable(jalpha), prov(jalpha), parts(jalpha);

  auto* jhat = app.add_subcommand("jhat", "the Gieseker-side invariant at a polarization");
  lattice(jhat), point(jhat, false), klass(jhat), itable(jhat), prov(jhat);
  jhat->add_option("--omega", o.omega, "polarization divisor");

  auto* large = app.add_subcommand("largevolume", "large-volume threshold and J versus Jhat");
  lattice(large), point(large, false), klass(large), itable(large), prov(large);
  large->add_option("--omega", o.omega, "polarization divisor");
  large->add_option("--ihat", o.ihat, "I-hat table (defaults to --itable)");
  large->add_option("--twist", o.twist, "reject or omega")->check(CLI::IsMember({"reject", "omega"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    return dispatch(app.get_subcommands().front()->get_name(), o);
  } catch (const Session::Failure& f) {
    return exit_for(f.status);
  } catch (const UsageError& e) {
    std::cerr << "bstab: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "bstab: " << e.what() << "\n";
    return kExitInternal;
  }
}
