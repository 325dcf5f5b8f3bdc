// Copyright 2026 The hamdec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// hamdec: command-line front end.
//
// Exit codes:
//   0  success (admissible / constructed / verified / Found / clean sweep)
//   1  not admissible, or certificate rejected
//   2  usage or input error (bad flags, malformed file, size mismatch)
//   3  admissible but no supported construction
//   4  search Exhausted, or a sweep with failures
//   5  search stopped by --node-limit

#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "hamdec/hamdec.hpp"

namespace {

using hamdec::Error;
using hamdec::ErrorKind;

constexpr int kOk = 0;
constexpr int kRejected = 1;
constexpr int kUsage = 2;
constexpr int kUnsupported = 3;
constexpr int kExhausted = 4;
constexpr int kAborted = 5;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view text) {
  text = trim(text);
  std::int64_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end) {
    throw Error(ErrorKind::ParseError, "not an integer: '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  for (;;) {
    const auto pos = s.find(sep);
    out.push_back(s.substr(0, pos));
    if (pos == std::string_view::npos) return out;
    s.remove_prefix(pos + 1);
  }
}

// Accepts "1,2,4", with optional braces.
std::vector<std::int64_t> parse_set(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '{' && text.back() == '}') {
    text = text.substr(1, text.size() - 2);
  }
  std::vector<std::int64_t> out;
  for (auto item : split(text, ',')) out.push_back(parse_int(item));
  return out;
}

// Accepts "3,3,4", "3x8", "3×8" and mixes such as "1,3x7".
std::vector<int> parse_lengths(std::string_view text) {
  std::vector<int> out;
  for (auto item : split(trim(text), ',')) {
    std::string_view value = item;
    std::int64_t repeat = 1;
    static constexpr std::string_view kTimes = "×";
    auto pos = item.find(kTimes);
    std::size_t width = kTimes.size();
    if (pos == std::string_view::npos) {
      pos = item.find_first_of("xX*");
      width = 1;
    }
    if (pos != std::string_view::npos) {
      value = item.substr(0, pos);
      repeat = parse_int(item.substr(pos + width));
      if (repeat < 0 || repeat > hamdec::kMaxSearchModulus) {
        throw Error(ErrorKind::ParseError, "bad repeat count in '" + std::string(item) + "'");
      }
    }
    const std::int64_t v = parse_int(value);
    if (v < 0 || v > hamdec::kMaxSearchModulus) {
      throw Error(ErrorKind::InvalidLength, "length out of range: " + std::to_string(v));
    }
    out.insert(out.end(), static_cast<std::size_t>(repeat), static_cast<int>(v));
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
  out << text;
}

std::string vertex_list(std::span<const hamdec::Vertex> vs) {
  return "[" + hamdec::detail::join(vs, ",") + "]";
}

std::string int_list(std::span<const int> vs) {
  std::string out = "[";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(vs[i]);
  }
  return out + "]";
}

unsigned resolve_jobs(unsigned flag) {
  if (flag != 0) return flag;
  if (const char* env = std::getenv("HAMDEC_JOBS")) {
    try {
      const std::int64_t v = parse_int(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const Error&) {
    }
    std::cerr << "warning: ignoring HAMDEC_JOBS='" << env << "'\n";
  }
  return 1;
}

int fail(const Error& e, int code) {
  std::cerr << "error: " << e.what() << '\n';
  return code;
}

int cmd_check(const std::string& set_text) {
  hamdec::AdmissibilityReport r;
  hamdec::ConnectionSet s;
  try {
    s = hamdec::ConnectionSet(parse_set(set_text));
    r = hamdec::analyze(s);
  } catch (const Error& e) {
    return fail(e, kUsage);
  }
  std::cout << "set: " << s.to_string() << '\n'
            << "gcd: " << r.gcd << '\n'
            << "components: " << r.component_count << '\n'
            << "parity: " << (r.parity_ok ? "ok" : "fail") << '\n'
            << "admissible: " << (r.admissible ? "yes" : "no") << '\n'
            << "reason: " << r.reason() << '\n';
  return r.admissible ? kOk : kRejected;
}

int cmd_construct(const std::string& set_text, const std::string& out_path) {
  hamdec::ConnectionSet s;
  try {
    s = hamdec::ConnectionSet(parse_set(set_text));
    if (s.empty()) throw Error(ErrorKind::EmptyConnectionSet, "empty connection set");
  } catch (const Error& e) {
    return fail(e, kUsage);
  }
  try {
    const auto built = hamdec::construct(s);
    const auto& c = built.certificate;
    std::cout << "family: " << built.family << '\n'
              << "period: " << c.period() << '\n'
              << "starter: " << vertex_list(c.starter()) << '\n'
              << "offsets: " << vertex_list(c.offsets()) << '\n';
    if (!out_path.empty()) {
      write_output(out_path, hamdec::emit_certificate(c, built.provenance));
    }
    return kOk;
  } catch (const Error& e) {
    switch (e.kind()) {
      case ErrorKind::NotAdmissible: return fail(e, kRejected);
      case ErrorKind::Unsupported:
      case ErrorKind::ResourceLimit:
      case ErrorKind::ConstructionFailed: return fail(e, kUnsupported);
      default: return fail(e, kUsage);
    }
  }
}

int cmd_verify(const std::string& cert_path, int periods) {
  try {
    const auto c = hamdec::parse_certificate(read_file(cert_path));
    const auto exact = hamdec::verify_certificate(c);
    const auto window = hamdec::window_oracle(c, periods);
    std::cout << "verifier: " << (exact.accepted ? "accept" : "reject") << '\n';
    for (auto f : exact.failures) std::cout << "  " << hamdec::to_string(f) << '\n';
    std::cout << "window(" << periods << "): " << (window.accepted ? "accept" : "reject")
              << '\n';
    for (auto f : window.failures) std::cout << "  " << hamdec::to_string(f) << '\n';
    return exact.accepted && window.accepted ? kOk : kRejected;
  } catch (const Error& e) {
    return fail(e, kUsage);
  }
}

struct BurattiArgs {
  int k = 0;
  std::string lengths;
  int sweep_prime = 0;
  std::size_t sample = 0;
  std::uint64_t seed = 1;
  unsigned jobs = 0;
  std::uint64_t node_limit = 0;
};

int cmd_buratti(const BurattiArgs& a) {
  const unsigned jobs = resolve_jobs(a.jobs);
  if (a.sweep_prime != 0) {
    hamdec::SweepReport report;
    try {
      hamdec::SweepOptions opts;
      opts.jobs = jobs;
      opts.sample = a.sample;
      opts.seed = a.seed;
      opts.node_limit = a.node_limit;
      report = hamdec::sweep(a.sweep_prime, opts);
    } catch (const Error& e) {
      return fail(e, kUsage);
    }
    std::uint64_t nodes = 0;
    for (const auto& r : report.records) {
      const auto& o = r.outcome;
      nodes += o.nodes_expanded;
      std::cout << r.multiset.to_string() << '\t' << hamdec::to_string(o.status) << '\t'
                << (o.path.empty() ? "-" : int_list(o.path)) << '\t' << o.nodes_expanded
                << '\n';
    }
    const auto aborted = report.count(hamdec::SearchStatus::Aborted);
    std::cout << "# summary p=" << report.modulus << " multisets=" << report.records.size()
              << (report.sampled ? " (sampled)" : "")
              << " found=" << report.count(hamdec::SearchStatus::Found)
              << " failures=" << report.failures() << " aborted=" << aborted
              << " nodes=" << nodes << '\n';
    if (report.failures() != 0) return kExhausted;
    return aborted != 0 ? kAborted : kOk;
  }

  std::optional<hamdec::LengthMultiset> multiset;
  try {
    if (a.k == 0 || a.lengths.empty()) {
      throw Error(ErrorKind::InvalidArgument, "need --k with --lengths, or --sweep-prime");
    }
    multiset.emplace(a.k, parse_lengths(a.lengths));
  } catch (const Error& e) {
    return fail(e, kUsage);
  }
  hamdec::SearchOptions opts;
  opts.jobs = jobs;
  opts.node_limit = a.node_limit;
  const auto o = hamdec::find_path(*multiset, opts);
  std::cout << "multiset: " << multiset->to_string() << '\n'
            << "status: " << hamdec::to_string(o.status) << '\n';
  if (o.status == hamdec::SearchStatus::Found) std::cout << "path: " << int_list(o.path) << '\n';
  std::cout << "nodes: " << o.nodes_expanded << '\n';
  switch (o.status) {
    case hamdec::SearchStatus::Found: return kOk;
    case hamdec::SearchStatus::Exhausted: return kExhausted;
    case hamdec::SearchStatus::Aborted: return kAborted;
  }
  return kAborted;
}

int cmd_figure(const std::string& cert_path, const std::string& range,
               const std::string& format, const std::string& out_path) {
  try {
    const auto c = hamdec::parse_certificate(read_file(cert_path));
    const auto dots = range.find("..");
    if (dots == std::string::npos) {
      throw Error(ErrorKind::ParseError, "range must look like a..b");
    }
    const auto lo = parse_int(std::string_view(range).substr(0, dots));
    const auto hi = parse_int(std::string_view(range).substr(dots + 2));
    const auto fmt = format == "svg" ? hamdec::FigureFormat::Svg : hamdec::FigureFormat::Dot;
    write_output(out_path, hamdec::render_figure(c, lo, hi, fmt));
    return kOk;
  } catch (const Error& e) {
    return fail(e, kUsage);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hamilton decompositions of infinite circulant graphs"};
  app.require_subcommand(1);

  std::string set_text;
  auto* check = app.add_subcommand("check", "test the necessary conditions on S+");
  check->add_option("--set", set_text, "comma-separated generators, e.g. 1,2,4")->required();

  std::string out_path;
  auto* construct = app.add_subcommand("construct", "build and self-verify a certificate");
  construct->add_option("--set", set_text, "comma-separated generators")->required();
  construct->add_option("--out", out_path, "write the certificate JSON here");

  std::string cert_path;
  int periods = 5;
  auto* verify = app.add_subcommand("verify", "exact check plus window oracle");
  verify->add_option("--cert", cert_path, "certificate JSON")->required();
  verify->add_option("--window-periods", periods, "window half-width in periods")
      ->check(CLI::Range(3, 1000));

  BurattiArgs ba;
  auto* buratti = app.add_subcommand("buratti", "length-constrained Hamilton paths in K_k");
  auto* k_opt = buratti->add_option("--k", ba.k, "order of the complete graph");
  auto* len_opt = buratti->add_option("--lengths", ba.lengths, "e.g. 3,3,4 or 3x8");
  auto* sweep_opt =
      buratti->add_option("--sweep-prime", ba.sweep_prime, "sweep all multisets for prime p");
  buratti->add_option("--sample", ba.sample, "sweep only N random multisets")->needs(sweep_opt);
  buratti->add_option("--seed", ba.seed, "sampling seed")->needs(sweep_opt);
  buratti->add_option("--jobs", ba.jobs, "worker threads (default: $HAMDEC_JOBS or 1)");
  buratti->add_option("--node-limit", ba.node_limit, "abort each search after N nodes");
  k_opt->needs(len_opt);
  len_opt->needs(k_opt);
  sweep_opt->excludes(k_opt)->excludes(len_opt);

  std::string range;
  std::string format = "svg";
  auto* figure = app.add_subcommand("figure", "arc diagram of the decomposition");
  figure->add_option("--cert", cert_path, "certificate JSON")->required();
  figure->add_option("--range", range, "vertex range a..b")->required();
  figure->add_option("--format", format, "dot or svg")
      ->check(CLI::IsMember({"dot", "svg"}));
  figure->add_option("--out", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (check->parsed()) return cmd_check(set_text);
  if (construct->parsed()) return cmd_construct(set_text, out_path);
  if (verify->parsed()) return cmd_verify(cert_path, periods);
  if (buratti->parsed()) return cmd_buratti(ba);
  if (figure->parsed()) return cmd_figure(cert_path, range, format, out_path);
  return kUsage;
}
